//! Greedy containment in the X-class, checked against the oracle.

use wilf_collapse::perm::contains_bruteforce;
use wilf_collapse::xclass::{ab_prefix, greedy_contains, monotone_contained};
use wilf_collapse::XWord;

fn main() -> wilf_collapse::Result<()> {
    let text: XWord = "(1,1)(-2,0)(3,1)(-4)".parse()?;
    if let Some((prefix, rest)) = ab_prefix(text.letters(), (2, 1)) {
        println!(
            "(2,1)-prefix of {text}: {} letters, remainder {:?}",
            prefix.len(),
            rest
        );
    }

    let w: XWord = "(2,0)(-3)".parse()?;
    for m in [3, 4, -2] {
        println!(
            "{m:+} in {w} ({}): {}",
            w.decode(),
            monotone_contained(m, w.letters())
        );
    }

    for (p, t) in [
        ("(1,0)(-2)", "(1,1)(-2,0)(3,1)(-4)"),
        ("(1,0)(-2)", "(-3)"),
        ("(2,0)(-2)", "(1,1)(-2,0)(3,1)(-4)"),
    ] {
        let (p, t): (XWord, XWord) = (p.parse()?, t.parse()?);
        let greedy = greedy_contains(&p, &t);
        let oracle = contains_bruteforce(&t.decode(), &p.decode());
        println!(
            "{} in {}: greedy {greedy}, oracle {oracle}",
            p.decode(),
            t.decode()
        );
    }
    Ok(())
}
