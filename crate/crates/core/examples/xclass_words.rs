//! Encoding X-class permutations as words and back.

use wilf_collapse::xclass::{enumerate_words, is_member};
use wilf_collapse::{Permutation, XWord};

fn main() -> wilf_collapse::Result<()> {
    for text in ["132", "312", "1243", "25431"] {
        let p: Permutation = text.parse()?;
        let w = XWord::encode(&p)?;
        println!(
            "{:>6} -> {:<16} -> {}",
            p.to_string(),
            w.to_string(),
            w.decode()
        );
    }

    let big: XWord = "(-3,-2)(2,0)(-1,-1)(4,3)(-3,-2)(3)".parse()?;
    println!("\n{big}\n  size {}: {}", big.size(), big.decode());

    let bad: Permutation = "2143".parse()?;
    println!(
        "\n2143 in X: {}; encode: {}",
        is_member(&bad),
        XWord::encode(&bad).unwrap_err()
    );

    println!("\n|X_n|:");
    for n in 1..=10 {
        println!("  {n:>2} {}", enumerate_words(n).len());
    }
    Ok(())
}
