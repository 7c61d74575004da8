//! SIO words: letters, types, packing containment.

use wilf_collapse::sio::{enumerate_sio, pack_into_letter, sio_contains, sio_symmetry};
use wilf_collapse::{Permutation, SioLetter, SioWord, Symmetry};

fn main() -> wilf_collapse::Result<()> {
    for l in ["a", "b", "w3", "m3", "w4", "m4", "w5", "m5"] {
        let l: SioLetter = l.parse()?;
        println!(
            "{:<3} {:<6} start {:<9} finish {}",
            l.to_string(),
            l.to_perm().to_string(),
            l.start().to_string(),
            l.finish()
        );
    }

    let w: SioWord = "w3 a m4 b".parse()?;
    println!("\n{w} = {}", w.to_perm());
    for k in [14, 15, 16] {
        println!("  fits in m{k}: {}", pack_into_letter(&w, SioLetter::M(k)));
    }

    let p: Permutation = "231645".parse()?;
    let v = SioWord::from_perm(&p)?;
    println!(
        "\n{p} -> {v}; contains m3: {}",
        sio_contains(&"m3".parse()?, &v)
    );
    println!(
        "rci(w3 m4) = {}",
        sio_symmetry(&"w3 m4".parse()?, Symmetry::REVERSE_COMPLEMENT_INVERSE)?
    );
    println!(
        "1432: {}",
        SioWord::from_perm(&"1432".parse()?).unwrap_err()
    );

    let counts: Vec<usize> = (0..=12).map(|n| enumerate_sio(n).len()).collect();
    println!("\n|SIO_n| = {counts:?}");
    Ok(())
}
