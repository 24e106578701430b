//! Balls in Z^2, the free group of rank two and a one-relator group.

use symdyn::group::EqualityProof;
use symdyn::{FuelVerdict, GroupCtx};

fn main() -> symdyn::Result<()> {
    let z2 = GroupCtx::zd(2)?;
    let f2 = GroupCtx::free(2)?;
    println!(" n  |B_n| Z^2  |B_n| F_2");
    for n in 0..=5 {
        println!("{n:>2}  {:>9}  {:>9}", z2.ball(n)?.len(), f2.ball(n)?.len());
    }

    // Canonical forms are exact in decidable contexts.
    let u = z2.parse_word("abAab")?;
    println!("\nabAab in Z^2 is {}", z2.canonicalize(&u)?);
    let w = f2.parse_word("abBAab")?;
    println!("abBAab in F_2 is {}", f2.canonicalize(&w)?);

    // In <a, b | bab^-1 a^-2> only equality is semi-decidable.
    let bs = GroupCtx::presented(&['a', 'b'], &["baBAA"])?;
    let (x, y) = (bs.parse_word("ba")?, bs.parse_word("aab")?);
    for fuel in 0..=2 {
        match bs.equals_semi(&x, &y, fuel) {
            FuelVerdict::CertifiedYes(EqualityProof::Rewriting(steps)) => {
                println!("fuel {fuel}: ba = aab, {} relator application(s)", steps.len())
            }
            other => println!("fuel {fuel}: {}", other.verdict()),
        }
    }
    for fuel in [0, 2, 4] {
        let classes = bs.ball_approx(3, fuel);
        println!("W_3 splits into at most {} classes at fuel {fuel}", classes.len());
    }
    Ok(())
}
