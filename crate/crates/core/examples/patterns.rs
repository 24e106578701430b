use symdyn::pattern::{consistency_check, extensions, occurrences, realize};
use symdyn::{Alphabet, FuelVerdict, GroupCtx, PatternPresentation, Symbol};

fn main() -> symdyn::Result<()> {
    let z2 = GroupCtx::zd(2)?;
    let bits = Alphabet::numeric(2)?;

    // ab and ba name the same cell of Z^2.
    let mut clash = PatternPresentation::new();
    clash.insert(z2.parse_word("ab")?, Symbol(0));
    clash.insert(z2.parse_word("ba")?, Symbol(1));
    if let FuelVerdict::CertifiedNo(inc) = consistency_check(&z2, &clash, 0) {
        println!("inconsistent: {} = {}", inc.u, inc.v);
    }

    let mut corner = PatternPresentation::new();
    corner.insert(z2.parse_word("")?, Symbol(1));
    corner.insert(z2.parse_word("a")?, Symbol(0));
    corner.insert(z2.parse_word("ab")?, Symbol(1));
    corner.insert(z2.parse_word("ba")?, Symbol(1));
    let p = realize(&z2, &corner)?;
    println!("realized on {} cells: {p}", p.len());

    let shifted = p.translate(&z2, &z2.canonicalize(&z2.parse_word("bb")?)?);
    println!("translated by b^2: {shifted}");

    let square: Vec<_> = ["", "a", "b", "ab"]
        .iter()
        .map(|w| z2.canonicalize(&z2.parse_word(w).unwrap()))
        .collect::<symdyn::Result<_>>()?;
    let n = extensions(&p.restrict(&square[..2])?, &square, &bits)?.count();
    println!("{n} extensions of the bottom edge to the unit square");

    let big = extensions(&symdyn::Pattern::new(), &z2.ball(1)?, &bits)?
        .find(|q| q.symbols().filter(|s| *s == Symbol(1)).count() == 3)
        .expect("some pattern has three ones");
    let unit = p.restrict(&square[..1])?;
    println!("{big} contains a lone 1 at {} translations", occurrences(&z2, &unit, &big).count());
    Ok(())
}
