//! Patterns over group elements and pattern presentations over words.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{EqualityProof, GroupCtx, GroupElement, Word};
use crate::verdict::FuelVerdict;

/// Index of a symbol in its alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub u16);

/// A nonempty list of distinct symbol names; declaration order is the
/// symbol order used by every enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be nonempty".into()));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidAlphabet("symbols must be distinct".into()));
        }
        Ok(Alphabet { names })
    }

    /// `{"0", "1", ..., "k-1"}`.
    pub fn numeric(k: usize) -> Result<Self> {
        Alphabet::new((0..k).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.names.len() as u16).map(Symbol)
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.0 as usize]
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Symbol(i as u16))
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        (s.0 as usize) < self.names.len()
    }

    /// Splits a concatenation of symbol names into exactly `count` symbols.
    /// Fails unless the split is unique.
    pub fn split_word(&self, text: &str, count: usize) -> Result<Vec<Symbol>> {
        fn go(
            alpha: &Alphabet,
            rest: &str,
            left: usize,
            acc: &mut Vec<Symbol>,
            found: &mut Vec<Vec<Symbol>>,
        ) {
            if found.len() > 1 {
                return;
            }
            if left == 0 {
                if rest.is_empty() {
                    found.push(acc.clone());
                }
                return;
            }
            for s in alpha.symbols() {
                if let Some(tail) = rest.strip_prefix(alpha.name(s)) {
                    acc.push(s);
                    go(alpha, tail, left - 1, acc, found);
                    acc.pop();
                }
            }
        }
        let mut found = Vec::new();
        go(self, text, count, &mut Vec::new(), &mut found);
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            0 => Err(Error::UnknownSymbol(text.to_string())),
            _ => Err(Error::InvalidAlphabet(format!(
                "{text:?} splits into {count} symbols in more than one way"
            ))),
        }
    }
}

/// A finite pattern: a symbol on each element of a finite support.
///
/// Supports are kept in canonical element order, so equality and hashing are
/// structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    cells: BTreeMap<GroupElement, Symbol>,
}

impl Pattern {
    pub fn new() -> Self {
        Pattern::default()
    }

    pub fn insert(&mut self, g: GroupElement, s: Symbol) -> Option<Symbol> {
        self.cells.insert(g, s)
    }

    pub fn get(&self, g: &GroupElement) -> Option<Symbol> {
        self.cells.get(g).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.cells.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, Symbol)> {
        self.cells.iter().map(|(g, s)| (g, *s))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.cells.values().copied()
    }

    pub fn contains_cell(&self, g: &GroupElement) -> bool {
        self.cells.contains_key(g)
    }

    /// Largest word length of a support element, i.e. the least `m` with the
    /// support inside `B_m`.
    pub fn radius(&self) -> usize {
        self.cells.keys().map(GroupElement::length).max().unwrap_or(0)
    }

    /// `gq`: support `gE`, `(gq)(h) = q(g^-1 h)`.
    pub fn translate(&self, ctx: &GroupCtx, g: &GroupElement) -> Pattern {
        Pattern {
            cells: self.cells.iter().map(|(h, s)| (ctx.mul(g, h), *s)).collect(),
        }
    }

    pub fn restrict<'a>(&self, to: impl IntoIterator<Item = &'a GroupElement>) -> Result<Pattern> {
        let mut cells = BTreeMap::new();
        for g in to {
            let s = self.get(g).ok_or(Error::NotASubset)?;
            cells.insert(g.clone(), s);
        }
        Ok(Pattern { cells })
    }

    /// True when every cell of `other` is a cell of `self` with the same
    /// symbol.
    pub fn extends(&self, other: &Pattern) -> bool {
        other.iter().all(|(g, s)| self.get(g) == Some(s))
    }

    /// The presentation by canonical words.
    pub fn presentation(&self) -> PatternPresentation {
        PatternPresentation {
            cells: self.cells.iter().map(|(g, s)| (g.canonical_word(), *s)).collect(),
        }
    }

    /// Builds a pattern on a one-dimensional context from a run of symbols
    /// starting at integer position `start`.
    pub fn from_run(ctx: &GroupCtx, start: i64, symbols: &[Symbol]) -> Result<Pattern> {
        let mut p = Pattern::new();
        for (i, &s) in symbols.iter().enumerate() {
            let g = ctx
                .from_integer(start + i as i64)
                .ok_or(Error::NotOneDimensional { op: "from_run" })?;
            p.insert(g, s);
        }
        Ok(p)
    }

    /// The symbols of a one-dimensional pattern in position order, with
    /// `None` in the gaps, plus the position of the first cell.
    pub fn to_run(&self, ctx: &GroupCtx) -> Result<(i64, Vec<Option<Symbol>>)> {
        let mut pos = Vec::with_capacity(self.len());
        for (g, s) in self.iter() {
            let x = ctx
                .as_integer(g)
                .ok_or(Error::NotOneDimensional { op: "to_run" })?;
            pos.push((x, s));
        }
        pos.sort();
        let Some(&(lo, _)) = pos.first() else {
            return Ok((0, Vec::new()));
        };
        let hi = pos.last().unwrap().0;
        let mut run = vec![None; (hi - lo + 1) as usize];
        for (x, s) in pos {
            run[(x - lo) as usize] = Some(s);
        }
        Ok((lo, run))
    }
}

impl FromIterator<(GroupElement, Symbol)> for Pattern {
    fn from_iter<I: IntoIterator<Item = (GroupElement, Symbol)>>(iter: I) -> Self {
        Pattern {
            cells: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(g, s)| format!("{g}:{}", s.0)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A symbol assignment on a finite set of words.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternPresentation {
    cells: BTreeMap<Word, Symbol>,
}

impl PatternPresentation {
    pub fn new() -> Self {
        PatternPresentation::default()
    }

    pub fn insert(&mut self, w: Word, s: Symbol) -> Option<Symbol> {
        self.cells.insert(w, s)
    }

    pub fn get(&self, w: &Word) -> Option<Symbol> {
        self.cells.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, Symbol)> {
        self.cells.iter().map(|(w, s)| (w, *s))
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.cells.keys()
    }
}

impl FromIterator<(Word, Symbol)> for PatternPresentation {
    fn from_iter<I: IntoIterator<Item = (Word, Symbol)>>(iter: I) -> Self {
        PatternPresentation {
            cells: iter.into_iter().collect(),
        }
    }
}

/// Two support words certified to name the same element while carrying
/// different symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inconsistency {
    pub u: Word,
    pub v: Word,
    pub proof: EqualityProof,
}

/// `CertifiedYes` when consistency is established, `CertifiedNo` with a
/// witness pair when a violation is certified, `Unknown` when a presented
/// context ran out of fuel without finding one.
pub fn consistency_check(
    ctx: &GroupCtx,
    p: &PatternPresentation,
    fuel: usize,
) -> FuelVerdict<(), Inconsistency> {
    if ctx.is_decidable() {
        let mut seen: HashMap<GroupElement, (&Word, Symbol)> = HashMap::new();
        for (w, s) in p.iter() {
            let Ok(g) = ctx.canonicalize(w) else {
                continue;
            };
            match seen.get(&g) {
                Some(&(u, t)) if t != s => {
                    return FuelVerdict::CertifiedNo(Inconsistency {
                        u: u.clone(),
                        v: w.clone(),
                        proof: EqualityProof::Canonical,
                    })
                }
                Some(_) => {}
                None => {
                    seen.insert(g, (w, s));
                }
            }
        }
        return FuelVerdict::CertifiedYes(());
    }
    let cells: Vec<(&Word, Symbol)> = p.iter().collect();
    for (i, &(u, s)) in cells.iter().enumerate() {
        for &(v, t) in &cells[i + 1..] {
            if s == t {
                continue;
            }
            if let FuelVerdict::CertifiedYes(proof) = ctx.equals_semi(u, v, fuel) {
                return FuelVerdict::CertifiedNo(Inconsistency {
                    u: u.clone(),
                    v: v.clone(),
                    proof,
                });
            }
        }
    }
    // Constant presentations cannot be inconsistent.
    if p.iter().map(|(_, s)| s).collect::<BTreeSet<_>>().len() <= 1 {
        FuelVerdict::CertifiedYes(())
    } else {
        FuelVerdict::Unknown(())
    }
}

/// The pattern presented by `p`. Requires a decidable context and a
/// consistent presentation.
pub fn realize(ctx: &GroupCtx, p: &PatternPresentation) -> Result<Pattern> {
    ctx.require_decidable("realize")?;
    let mut out = Pattern::new();
    let mut origin: HashMap<GroupElement, &Word> = HashMap::new();
    for (w, s) in p.iter() {
        let g = ctx.canonicalize(w)?;
        if let Some(prev) = out.insert(g.clone(), s) {
            if prev != s {
                return Err(Error::Inconsistent {
                    u: origin[&g].to_string(),
                    v: w.to_string(),
                });
            }
        }
        origin.entry(g).or_insert(w);
    }
    Ok(out)
}

/// Lexicographic stream of all patterns on `target` that restrict to `base`:
/// cells in canonical order, symbols in alphabet order, last cell fastest.
pub struct Extensions {
    base: Pattern,
    free: Vec<GroupElement>,
    digits: Option<Vec<u16>>,
    radix: u16,
}

impl Iterator for Extensions {
    type Item = Pattern;

    fn next(&mut self) -> Option<Pattern> {
        let digits = self.digits.as_mut()?;
        let mut out = self.base.clone();
        for (g, d) in self.free.iter().zip(digits.iter()) {
            out.insert(g.clone(), Symbol(*d));
        }
        // advance the odometer
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < self.radix {
                break;
            }
            digits[i] = 0;
        }
        Some(out)
    }
}

pub fn extensions(base: &Pattern, target: &[GroupElement], alphabet: &Alphabet) -> Result<Extensions> {
    let target: BTreeSet<&GroupElement> = target.iter().collect();
    if base.support().any(|g| !target.contains(g)) {
        return Err(Error::NotASubset);
    }
    let free: Vec<GroupElement> = target
        .into_iter()
        .filter(|g| !base.contains_cell(g))
        .cloned()
        .collect();
    Ok(Extensions {
        base: base.clone(),
        digits: Some(vec![0; free.len()]),
        free,
        radix: alphabet.len() as u16,
    })
}

/// Does `p` appear in `q` at some translation?
pub fn occurs_in(ctx: &GroupCtx, p: &Pattern, q: &Pattern) -> bool {
    occurrences(ctx, p, q).next().is_some()
}

/// Translations `g` with `gp` a sub-pattern of `q`, found by anchoring the
/// first cell of `p` on each cell of `q`.
pub fn occurrences<'a>(
    ctx: &'a GroupCtx,
    p: &'a Pattern,
    q: &'a Pattern,
) -> Box<dyn Iterator<Item = GroupElement> + 'a> {
    let Some((anchor, _)) = p.iter().next() else {
        return Box::new(std::iter::once(ctx.identity()));
    };
    let anchor_inv = ctx.inv(anchor);
    Box::new(q.support().filter_map(move |c| {
        let g = ctx.mul(c, &anchor_inv);
        p.iter()
            .all(|(h, s)| q.get(&ctx.mul(&g, h)) == Some(s))
            .then_some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> GroupCtx {
        GroupCtx::zd(1).unwrap()
    }

    fn pres(ctx: &GroupCtx, cells: &[(&str, u16)]) -> PatternPresentation {
        cells
            .iter()
            .map(|(w, s)| (ctx.parse_word(w).unwrap(), Symbol(*s)))
            .collect()
    }

    fn run(s: &str) -> Pattern {
        let syms: Vec<Symbol> = s.bytes().map(|b| Symbol((b - b'0') as u16)).collect();
        Pattern::from_run(&z(), 0, &syms).unwrap()
    }

    #[test]
    fn consistency_examples() {
        let g = z();
        assert!(consistency_check(&g, &pres(&g, &[("a", 0), ("aaA", 1)]), 0).is_no());
        assert!(consistency_check(&g, &pres(&g, &[("a", 1), ("aaA", 1)]), 0).is_yes());
        let p = GroupCtx::presented(&['a', 'b'], &["abAB"]).unwrap();
        let v = consistency_check(&p, &pres(&p, &[("ab", 0), ("ba", 1)]), 1);
        let FuelVerdict::CertifiedNo(inc) = v else { panic!("expected violation") };
        assert!(p.check_equality(&inc.u, &inc.v, &inc.proof));
        assert!(consistency_check(&p, &pres(&p, &[("ab", 0), ("ba", 1)]), 0).is_unknown());
        assert!(consistency_check(&p, &pres(&p, &[("ab", 0), ("ba", 0)]), 0).is_yes());
    }

    #[test]
    fn consistency_monotone_in_fuel() {
        let p = GroupCtx::presented(&['a', 'b'], &["abAB"]).unwrap();
        let pr = pres(&p, &[("aab", 0), ("baa", 1)]);
        assert!(consistency_check(&p, &pr, 1).is_unknown());
        for fuel in 2..4 {
            assert!(consistency_check(&p, &pr, fuel).is_no());
        }
    }

    #[test]
    fn realize_examples() {
        let g = z();
        assert_eq!(realize(&g, &pres(&g, &[("", 1), ("a", 1)])).unwrap(), run("11"));
        let merged = realize(&g, &pres(&g, &[("a", 0), ("aaA", 0)])).unwrap();
        assert_eq!(merged.len(), 1);
        assert_eq!(merged.get(&GroupElement::Lattice(vec![1])), Some(Symbol(0)));
        assert!(realize(&g, &pres(&g, &[("a", 0), ("aaA", 1)])).is_err());
        let f = GroupCtx::free(2).unwrap();
        assert_eq!(realize(&f, &pres(&f, &[("", 0), ("ab", 1)])).unwrap().len(), 2);
    }

    #[test]
    fn translate_examples() {
        let g = z();
        let q = run("01");
        let two = GroupElement::Lattice(vec![2]);
        let t = q.translate(&g, &two);
        assert_eq!(t, Pattern::from_run(&g, 2, &[Symbol(0), Symbol(1)]).unwrap());
        assert_eq!(q.translate(&g, &g.identity()), q);
    }

    #[test]
    fn restrict_examples() {
        let q = run("010");
        let first_two: Vec<GroupElement> = vec![GroupElement::Lattice(vec![0]), GroupElement::Lattice(vec![1])];
        assert_eq!(q.restrict(&first_two).unwrap(), run("01"));
        let all: Vec<GroupElement> = q.support().cloned().collect();
        assert_eq!(q.restrict(&all).unwrap(), q);
        assert!(q.restrict(std::iter::empty()).unwrap().is_empty());
        assert!(q.restrict(&[GroupElement::Lattice(vec![7])]).is_err());
    }

    #[test]
    fn extension_examples() {
        let bin = Alphabet::numeric(2).unwrap();
        let q = run("1");
        let target = vec![GroupElement::Lattice(vec![0]), GroupElement::Lattice(vec![1])];
        let ext: Vec<Pattern> = extensions(&q, &target, &bin).unwrap().collect();
        assert_eq!(ext, vec![run("10"), run("11")]);
        assert_eq!(extensions(&q, &target[..1], &bin).unwrap().collect::<Vec<_>>(), vec![q.clone()]);
        let three = z().ball(1).unwrap();
        assert_eq!(extensions(&Pattern::new(), &three, &bin).unwrap().count(), 8);
        assert!(extensions(&run("11"), &target[..1], &bin).is_err());
    }

    #[test]
    fn occurrence_examples() {
        let g = z();
        assert!(occurs_in(&g, &run("11"), &run("0110")));
        assert!(!occurs_in(&g, &run("11"), &run("0101")));
        assert!(occurs_in(&g, &run("0101"), &run("0101")));
        assert!(occurs_in(&g, &Pattern::new(), &run("0")));
    }

    #[test]
    fn split_word_requires_unique_parse() {
        let a = Alphabet::new(["x", "xy", "y"]).unwrap();
        assert_eq!(a.split_word("xyy", 2).unwrap(), vec![Symbol(1), Symbol(2)]);
        assert!(a.split_word("xy", 2).is_ok());
        assert!(a.split_word("xy", 1).is_ok());
        assert!(a.split_word("z", 1).is_err());
        let b = Alphabet::new(["a", "aa"]).unwrap();
        assert!(b.split_word("aaa", 2).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["0", "0"]).is_err());
    }
}
