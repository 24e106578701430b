//! Emitting, verifying and tampering with certificates.

use symdyn::decision::nonmembership_semidecide;
use symdyn::{Alphabet, Certificate, FuelVerdict, GroupCtx, Pattern, Sft, Symbol};

fn main() -> symdyn::Result<()> {
    let z = GroupCtx::zd(1)?;
    let bits = Alphabet::numeric(2)?;
    let x = Sft::from_patterns(&z, &bits, vec![Pattern::from_run(&z, 0, &[Symbol(0), Symbol(1)])?, Pattern::from_run(&z, 0, &[Symbol(1), Symbol(0)])?])?;
    let q = Pattern::from_run(&z, 0, &[Symbol(0), Symbol(1)])?;
    let FuelVerdict::CertifiedYes(r) = nonmembership_semidecide(&x, &q, 2)? else {
        unreachable!("01 is forbidden outright")
    };
    let cert = Certificate::non_membership(&x, &q, &r);
    let text = cert.to_json();
    println!("{text}");
    println!("verify: {}", Certificate::from_json(&text)?.verify()?);

    let start = text.find("\"replay\"").unwrap();
    let (mut ok, mut total) = (0, 0);
    for i in start..text.len() {
        let mut bytes = text.clone().into_bytes();
        bytes[i] ^= 0x01;
        let Ok(mutated) = String::from_utf8(bytes) else { continue };
        total += 1;
        if Certificate::from_json(&mutated).and_then(|c| c.verify()).is_err() {
            ok += 1;
        }
    }
    println!("{ok}/{total} single-byte mutations of the replay block rejected");

    let g = GroupCtx::presented(&['a', 'b'], &["abAB"])?;
    let (u, v) = (g.parse_word("aab")?, g.parse_word("baa")?);
    if let FuelVerdict::CertifiedYes(proof) = g.equals_semi(&u, &v, 3) {
        let c = Certificate::word_equality(&g, &u, &v, &proof)?;
        println!("word equality: {}", c.verify()?);
    }
    Ok(())
}
