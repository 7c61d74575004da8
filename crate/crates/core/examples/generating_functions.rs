//! Truncated series: rational expansions, the containment product formula
//! and the count of Wilf keys.

use wilf_collapse::series::{expand_rational, partition_key_series};
use wilf_collapse::xclass::{
    enumerate_words, f_series, greedy_contains, inv_gf, m_series, MVariant,
};
use wilf_collapse::XWord;

fn main() -> wilf_collapse::Result<()> {
    println!(
        "(1-2x)/(1-4x+2x^2): {}",
        expand_rational(&[1, -2], &[1, -4, 2], 8)?
    );
    println!("F_(1,0):            {}", f_series((1, 0), 8));
    println!("M_2 all words:      {}", m_series(2, 8, MVariant::AllWords));
    println!(
        "M_2 restricted:     {}",
        m_series(2, 8, MVariant::StartSignRestricted)
    );

    let w: XWord = "(1,0)(-2)".parse()?;
    let gf = inv_gf(&w, 8, MVariant::StartSignRestricted)?;
    let direct: Vec<usize> = (1..=8)
        .map(|n| {
            enumerate_words(n)
                .iter()
                .filter(|t| greedy_contains(&w, t))
                .count()
        })
        .collect();
    println!("\ncontaining 132, series: {gf}");
    println!("containing 132, direct: {direct:?}");

    println!("\nkey series: {}", partition_key_series(10));
    Ok(())
}
