//! The symmetry-lemma bijection and its lift through a context.

use wilf_collapse::census::verify::{lemma_check_one, small_contexts, substitution_check};
use wilf_collapse::sio::{LemmaBijection, SioBijection, SubstitutionBijection};
use wilf_collapse::{SioWord, Symmetry};

fn main() -> wilf_collapse::Result<()> {
    let rci = Symmetry::REVERSE_COMPLEMENT_INVERSE;
    let phi = LemmaBijection::new(&"m3".parse()?, rci)?;
    for w in ["w7 a m5", "a b w3 b", "m4 m6"] {
        let w: SioWord = w.parse()?;
        println!("Φ({w}) = {}", phi.apply(&w));
    }

    let x: SioWord = "w3 m4".parse()?;
    let phi = LemmaBijection::new(&x, rci)?;
    println!("\nX = {x}, σ(X) = {}", phi.image_pattern());
    let check = lemma_check_one(&x, rci, 10);
    println!(
        "bijection checks on sizes ≤ 10: {} cases, {} failures",
        check.checked, check.failures
    );

    let psi = SubstitutionBijection::new("a".parse()?, "b".parse()?, phi.clone());
    let w: SioWord = "w4 w3 m4 m5".parse()?;
    println!(
        "\nΨ({w}) = {} for {} ~ {}",
        psi.apply(&w),
        psi.wrap(&x),
        psi.wrap(&phi.image_pattern())
    );
    let check = substitution_check(&[phi], &small_contexts(), 9);
    println!(
        "all contexts of size ≤ 2, sizes ≤ 9: {} cases, {} failures",
        check.checked, check.failures
    );
    Ok(())
}
