//! The golden mean shift: exact language counts from the de Bruijn
//! automaton, and the margin-filtered approximation converging to them.

use symdyn::subshift::DeBruijnAutomaton;
use symdyn::{Alphabet, GroupCtx, Pattern, Sft, Symbol};

fn main() -> symdyn::Result<()> {
    let z = GroupCtx::zd(1)?;
    let bits = Alphabet::numeric(2)?;
    let golden = Sft::from_patterns(&z, &bits, vec![Pattern::from_run(&z, 0, &[Symbol(1), Symbol(1)])?])?;

    let aut = DeBruijnAutomaton::build(&golden)?;
    let counts: Vec<u128> = (1..=10).map(|n| aut.count(n)).collect();
    println!("words of length 1..10: {counts:?}");

    let r = aut.trimming_bound();
    for n in 0..=3 {
        let exact = golden.language_exact_1d(n)?;
        let naive = golden.language_upper(n, 0)?;
        let upper = golden.language_upper(n, r)?;
        println!(
            "B_{n}: exact {:>3}, margin 0 {:>3}, margin {r} {:>3}",
            exact.patterns.len(),
            naive.patterns.len(),
            upper.patterns.len()
        );
    }

    // Forbidding 11 and 101: 1?1 is only excluded once the window sees the middle.
    let sparse = Sft::from_patterns(
        &z,
        &bits,
        vec![
            Pattern::from_run(&z, 0, &[Symbol(1), Symbol(1)])?,
            Pattern::from_run(&z, 0, &[Symbol(1), Symbol(0), Symbol(1)])?,
        ],
    )?;
    let sub = sparse.subset_semidecide(&golden, 1)?;
    println!("no-11-no-101 inside golden mean: {}", sub.verdict());
    let sup = golden.subset_semidecide(&sparse, 1)?;
    println!("golden mean inside no-11-no-101: {}", sup.verdict());
    Ok(())
}
