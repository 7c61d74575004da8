//! Pattern censuses and collapse tables for both classes.

use wilf_collapse::census::{census, collapse_stats, Budget, ClassTag};

fn main() -> wilf_collapse::Result<()> {
    let budget = Budget::seconds(120.0);

    let x = census(ClassTag::X, 5, 10, &budget)?;
    println!(
        "X, size 5: {} patterns, {} keys, {} vector groups, keys refine vectors: {}",
        x.vectors.len(),
        x.key_groups.as_ref().map_or(0, Vec::len),
        x.groups.len(),
        x.refinement_holds
    );

    let s = census(ClassTag::Sio, 6, 11, &budget)?;
    println!(
        "SIO, size 6: {} patterns, {} rewrite classes, {} vector groups, rewrites refine vectors: {}",
        s.vectors.len(),
        s.rewrite_groups.as_ref().map_or(0, Vec::len),
        s.groups.len(),
        s.refinement_holds
    );

    for (class, max_n) in [(ClassTag::X, 10), (ClassTag::Sio, 11)] {
        println!("\n{class}\n  n      c_n  w_thy  w_emp  w_thy/c_n");
        for r in collapse_stats(class, max_n, max_n, &budget)?.rows {
            println!(
                "{:>3} {:>8} {:>6} {:>6}  {:.4}",
                r.n, r.class_count, r.w_thy, r.w_emp, r.thy_ratio
            );
        }
    }
    Ok(())
}
