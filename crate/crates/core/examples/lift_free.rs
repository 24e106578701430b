//! Lifting an SFT on Z^2 to the free group on the same generators.

use symdyn::morphism::lift_to_free;
use symdyn::{Alphabet, GroupCtx, Pattern, Sft, Symbol};

fn main() -> symdyn::Result<()> {
    let z2 = GroupCtx::zd(2)?;
    let bits = Alphabet::numeric(2)?;
    let a = z2.canonicalize(&z2.parse_word("a")?)?;
    let no_horizontal_11: Pattern = [(z2.identity(), Symbol(1)), (a, Symbol(1))].into_iter().collect();
    let x = Sft::from_patterns(&z2, &bits, vec![no_horizontal_11])?;

    let lift = lift_to_free(&x)?;
    for fuel in 0..=4 {
        let kernel = lift.kernel_words(fuel);
        let stage = lift.stage(fuel);
        let shown: Vec<String> = kernel.iter().take(4).map(|w| w.to_string()).collect();
        println!("stage {fuel}: {} presentations, kernel words {:?}{}", stage.len(), shown, if kernel.len() > 4 { " ..." } else { "" });
    }

    // On the free group the lifted SFT is decidable again.
    let stage = lift.stage_sft(4)?;
    let f = lift.free_group();
    let p: Pattern = [("", 1u16), ("b", 0), ("ab", 1), ("ba", 0)]
        .into_iter()
        .map(|(w, s)| (f.canonicalize(&f.parse_word(w).unwrap()).unwrap(), Symbol(s)))
        .collect();
    println!("{p} at margin 0 in the stage-4 lift: {}", stage.locally_admissible(&p, 0)?.verdict());
    Ok(())
}
