//! Which of w4 w3 and w4 m3 is Wilf-equivalent to w3 m4 in SIO?

use wilf_collapse::census::{discrepancy_experiment, Budget};

fn main() -> wilf_collapse::Result<()> {
    let r = discrepancy_experiment(12, &Budget::unlimited())?;
    println!("{:<6} {:?}", r.base, r.base_vector.counts);
    for c in &r.candidates {
        println!("{:<6} {:?}", c.word, c.vector.counts);
        println!(
            "       type ({}, {}); first difference: {:?}",
            c.start, c.finish, c.first_difference
        );
        println!("       {}", c.lemma_verdict);
    }
    println!("\n{}", r.outcome);
    Ok(())
}
