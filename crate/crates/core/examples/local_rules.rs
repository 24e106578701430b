//! A sliding block code, its pattern map and the pullback of an SFT.

use symdyn::morphism::{build_yp, forbid_additionally};
use symdyn::{Alphabet, GroupCtx, LocalRule, Pattern, Sft, Symbol};

fn main() -> symdyn::Result<()> {
    let z = GroupCtx::zd(1)?;
    let bits = Alphabet::numeric(2)?;
    let xor = LocalRule::from_fn(
        &z,
        &bits,
        &bits,
        vec![z.identity(), z.from_integer(1).unwrap()],
        |k| Symbol(k[0].0 ^ k[1].0),
    )?;

    let q = Pattern::from_run(&z, 0, &[0, 1, 1, 0, 1].map(Symbol))?;
    let (_, image) = xor.apply(&q).to_run(&z)?;
    let image: String = image.iter().map(|s| s.unwrap().0.to_string()).collect();
    println!("xor image of 01101 is {image}");

    let golden = Sft::from_patterns(&z, &bits, vec![Pattern::from_run(&z, 0, &[Symbol(1), Symbol(1)])?])?;
    let pulled = xor.pullback(&golden)?;
    println!("preimage of the golden mean forbids {} patterns:", pulled.forbidden().len());
    for f in pulled.forbidden() {
        println!("  {f}");
    }

    // Y_p for Y the full shift and p = 00.
    let p = Pattern::from_run(&z, 0, &[Symbol(0), Symbol(0)])?;
    let xp = forbid_additionally(&golden, &p)?;
    let yp = build_yp(&Sft::full_shift(&z, &bits), &xor, &golden, &p)?;
    println!("X_p forbids {}, Y_p forbids {}", xp.forbidden().len(), yp.forbidden().len());
    for n in 0..=2 {
        println!("  |L_B{n}(Y_p)| = {}", yp.language_exact_1d(n)?.patterns.len());
    }
    Ok(())
}
