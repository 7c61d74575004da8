//! Permutations, the eight symmetries, sums and the containment oracle.

use wilf_collapse::perm::{contains_bruteforce, SumMode};
use wilf_collapse::{Permutation, Symmetry};

fn main() -> wilf_collapse::Result<()> {
    let p: Permutation = "3714526".parse()?;
    let pattern: Permutation = "321".parse()?;
    println!(
        "{p} contains {pattern}: {}",
        contains_bruteforce(&p, &pattern)
    );

    let q: Permutation = "312".parse()?;
    for s in Symmetry::ALL {
        println!("{:>3}({q}) = {}", s.name(), q.apply_symmetry(s));
    }

    let one = Permutation::identity(1);
    let down: Permutation = "21".parse()?;
    let sum = one.compose(&down, SumMode::Sum);
    let skew = Permutation::identity(3).compose(&one, SumMode::Skew);
    println!("1 ⊕ 21 = {sum}, 123 ⊖ 1 = {skew}");

    let w: Permutation = "2413".parse()?;
    let parts: Vec<String> = "1324"
        .parse::<Permutation>()?
        .sum_decompose()
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("1324 = {}", parts.join(" ⊕ "));
    let g = w.inversion_graph();
    println!(
        "inversion graph of {w}: edges {:?}, path order {:?}",
        g.edges,
        g.path_order()
    );
    Ok(())
}
