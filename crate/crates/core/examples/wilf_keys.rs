//! Wilf keys group X patterns that are provably Wilf-equivalent; 1243 and
//! 1342 show the keys do not find every equivalence.

use std::collections::BTreeMap;

use wilf_collapse::census::{avoidance_vector, Budget, ClassTag};
use wilf_collapse::xclass::enumerate_words;
use wilf_collapse::XWord;

fn main() -> wilf_collapse::Result<()> {
    let mut by_key: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for w in enumerate_words(4) {
        by_key
            .entry(w.wilf_key().to_string())
            .or_default()
            .push(format!("{}", w.decode()));
    }
    for (key, perms) in &by_key {
        println!("{key:<14} {}", perms.join(" "));
    }

    let a: XWord = "(2,0)(-2)".parse()?;
    let b: XWord = "(1,0)(0,-1)(2)".parse()?;
    println!(
        "\n{} key {}, {} key {}",
        a.decode(),
        a.wilf_key(),
        b.decode(),
        b.wilf_key()
    );
    let budget = Budget::unlimited();
    let va = avoidance_vector(ClassTag::X, &a.to_string(), 10, &budget)?;
    let vb = avoidance_vector(ClassTag::X, &b.to_string(), 10, &budget)?;
    println!(
        "{:?}\n{:?}\nequal: {}",
        va.counts,
        vb.counts,
        va.counts == vb.counts
    );
    Ok(())
}
