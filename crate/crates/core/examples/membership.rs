//! Certified non-membership and the proper-containment detector.

use symdyn::decision::{nonmembership_semidecide, proper_containment_detect, CertifiedLanguage};
use symdyn::{Alphabet, Certificate, FuelVerdict, GroupCtx, LocalRule, Pattern, Sft, Symbol};

/// A run starting at 0; `.` leaves the cell out of the support.
fn run(z: &GroupCtx, s: &str) -> Pattern {
    s.bytes()
        .enumerate()
        .filter(|&(_, b)| b != b'.')
        .map(|(i, b)| (z.from_integer(i as i64).unwrap(), Symbol((b - b'0') as u16)))
        .collect()
}

fn main() -> symdyn::Result<()> {
    let z = GroupCtx::zd(1)?;
    let bits = Alphabet::numeric(2)?;
    let x = Sft::from_patterns(&z, &bits, vec![run(&z, "11"), run(&z, "101")])?;

    for q in ["11", "1.1", "1..1"] {
        match nonmembership_semidecide(&x, &run(&z, q), 6)? {
            FuelVerdict::CertifiedYes(r) => {
                let cert = Certificate::non_membership(&x, &run(&z, q), &r);
                println!("{q}: excluded at margin {} ({} tree nodes), {}", r.margin, r.nodes.len(), cert.verify()?);
            }
            FuelVerdict::Unknown(w) => println!("{q}: survives margin 6, e.g. {w}"),
            FuelVerdict::CertifiedNo(()) => unreachable!(),
        }
    }

    let full = Sft::full_shift(&z, &bits);
    let lang = CertifiedLanguage::exact_1d(&full, 1)?;
    let id = LocalRule::identity(&z, &bits)?;
    let zero = LocalRule::from_fn(&z, &bits, &bits, vec![z.identity()], |_| Symbol(0))?;
    for (name, rule) in [("identity", &id), ("constant 0", &zero)] {
        for p in ["1", "11", "010"] {
            let out = proper_containment_detect(&full, rule, &full, &lang, &run(&z, p), 12, false)?;
            match out {
                FuelVerdict::CertifiedYes(c) => println!(
                    "{name}, p = {p}: in the image language; {} dies at margin {}",
                    c.witness, c.round
                ),
                other => println!("{name}, p = {p}: {}", other.verdict()),
            }
        }
    }
    Ok(())
}
