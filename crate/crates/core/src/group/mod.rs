//! Finitely generated groups: word arithmetic, word-problem oracles,
//! canonical forms and enumeration of word sets and balls.
//!
//! Three kinds of context are supported. `Z^d` and free groups have a
//! decidable word problem and canonical forms (integer vectors and freely
//! reduced words). Finitely presented groups only get a semi-decision for
//! equality by bounded relator rewriting, and never certify inequality.

pub mod rewriting;
mod word;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub use rewriting::RewriteStep;
pub use word::{Generator, Word};

use crate::error::{Error, Result};
use crate::verdict::FuelVerdict;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Zd(usize),
    Free(usize),
    Presented { relators: Vec<Word> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordProblem {
    Decidable,
    SemiDecidable,
}

/// An immutable group context.
#[derive(Debug, Clone)]
pub struct GroupCtx {
    kind: GroupKind,
    names: Vec<char>,
    variants: Vec<Word>,
}

impl PartialEq for GroupCtx {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.names == other.names
    }
}

impl Eq for GroupCtx {}

/// Canonical representative of a group element in a decidable context.
///
/// Elements order by word length first (so that balls are enumerated layer
/// by layer), then by the coordinate vector or shortlex word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Lattice(Vec<i64>),
    Reduced(Word),
}

impl GroupElement {
    /// Word length with respect to the standard generators.
    pub fn length(&self) -> usize {
        match self {
            GroupElement::Lattice(v) => v.iter().map(|x| x.unsigned_abs() as usize).sum(),
            GroupElement::Reduced(w) => w.len(),
        }
    }

    /// The canonical word: `a^x1 b^x2 ...` for lattices, the reduced word for
    /// free groups.
    pub fn canonical_word(&self) -> Word {
        match self {
            GroupElement::Lattice(v) => {
                let mut w = Word::empty();
                for (i, &x) in v.iter().enumerate() {
                    let g = Generator::new((b'a' + i as u8) as char);
                    let g = if x < 0 { g.inverse() } else { g };
                    for _ in 0..x.unsigned_abs() {
                        w.push(g);
                    }
                }
                w
            }
            GroupElement::Reduced(w) => w.clone(),
        }
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        use GroupElement::*;
        self.length().cmp(&other.length()).then_with(|| match (self, other) {
            (Lattice(a), Lattice(b)) => a.cmp(b),
            (Reduced(a), Reduced(b)) => a.cmp(b),
            (Lattice(_), Reduced(_)) => Ordering::Less,
            (Reduced(_), Lattice(_)) => Ordering::Greater,
        })
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Lattice(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            GroupElement::Reduced(w) if w.is_empty() => f.write_str("1"),
            GroupElement::Reduced(w) => write!(f, "{w}"),
        }
    }
}

/// Evidence that two words name the same element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityProof {
    /// Both words canonicalize to the same form (decidable contexts).
    Canonical,
    /// A relator-rewriting derivation of `u v^-1 = 1`.
    Rewriting(Vec<RewriteStep>),
}

fn letter_names(k: usize) -> Result<Vec<char>> {
    if k > 26 {
        return Err(Error::InvalidGroup(format!("at most 26 generators, got {k}")));
    }
    Ok((0..k).map(|i| (b'a' + i as u8) as char).collect())
}

impl GroupCtx {
    pub fn zd(d: usize) -> Result<Self> {
        Ok(GroupCtx {
            kind: GroupKind::Zd(d),
            names: letter_names(d)?,
            variants: Vec::new(),
        })
    }

    pub fn free(rank: usize) -> Result<Self> {
        Ok(GroupCtx {
            kind: GroupKind::Free(rank),
            names: letter_names(rank)?,
            variants: Vec::new(),
        })
    }

    /// The free group on the given generator names.
    pub fn free_on(names: &[char]) -> Result<Self> {
        let mut ctx = GroupCtx::presented(names, &[])?;
        ctx.kind = GroupKind::Free(names.len());
        Ok(ctx)
    }

    /// `<generators | relators>`; generator names must be distinct lowercase
    /// ASCII letters and relators words over them.
    pub fn presented(generators: &[char], relators: &[&str]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &c in generators {
            if !c.is_ascii_lowercase() || !seen.insert(c) {
                return Err(Error::InvalidGroup(format!(
                    "generator names must be distinct lowercase letters, got {c:?}"
                )));
            }
        }
        let mut ctx = GroupCtx {
            kind: GroupKind::Presented { relators: Vec::new() },
            names: generators.to_vec(),
            variants: Vec::new(),
        };
        let rels = relators
            .iter()
            .map(|r| ctx.parse_word(r))
            .collect::<Result<Vec<_>>>()?;
        ctx.variants = rewriting::relator_variants(&rels);
        ctx.kind = GroupKind::Presented { relators: rels };
        Ok(ctx)
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn generator_names(&self) -> &[char] {
        &self.names
    }

    /// The symmetric generating set, ordered `a, A, b, B, ...`.
    pub fn generating_set(&self) -> Vec<Generator> {
        self.names
            .iter()
            .flat_map(|&c| [Generator::new(c), Generator::new(c).inverse()])
            .collect()
    }

    pub fn word_problem(&self) -> WordProblem {
        match self.kind {
            GroupKind::Presented { .. } => WordProblem::SemiDecidable,
            _ => WordProblem::Decidable,
        }
    }

    pub fn is_decidable(&self) -> bool {
        self.word_problem() == WordProblem::Decidable
    }

    /// True for `Z` and the rank-one free group, both of which are the
    /// integers on the generator `a`.
    pub fn is_one_dimensional(&self) -> bool {
        matches!(self.kind, GroupKind::Zd(1) | GroupKind::Free(1))
    }

    pub(crate) fn require_decidable(&self, op: &'static str) -> Result<()> {
        if self.is_decidable() {
            Ok(())
        } else {
            Err(Error::UndecidableContext(op))
        }
    }

    /// Parses a word and checks that every letter names a generator.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let w: Word = s.parse()?;
        self.check_word(&w)?;
        Ok(w)
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        for g in w.letters() {
            if !self.names.contains(&g.name) {
                return Err(Error::InvalidWord {
                    word: w.to_string(),
                    reason: format!("{:?} is not a generator of this group", g.name),
                });
            }
        }
        Ok(())
    }

    pub fn identity(&self) -> GroupElement {
        match self.kind {
            GroupKind::Zd(d) => GroupElement::Lattice(vec![0; d]),
            _ => GroupElement::Reduced(Word::empty()),
        }
    }

    /// `w -> canonical form of w̄`. Rejects presented contexts.
    pub fn canonicalize(&self, w: &Word) -> Result<GroupElement> {
        self.require_decidable("canonicalize")?;
        self.check_word(w)?;
        Ok(self.canonicalize_unchecked(w))
    }

    fn canonicalize_unchecked(&self, w: &Word) -> GroupElement {
        match self.kind {
            GroupKind::Zd(d) => {
                let mut v = vec![0i64; d];
                for g in w.letters() {
                    let i = (g.name as u8 - b'a') as usize;
                    v[i] += if g.is_inverse { -1 } else { 1 };
                }
                GroupElement::Lattice(v)
            }
            _ => GroupElement::Reduced(w.freely_reduced()),
        }
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (g, h) {
            (GroupElement::Lattice(a), GroupElement::Lattice(b)) => {
                GroupElement::Lattice(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => GroupElement::Reduced(g.canonical_word().concat(&h.canonical_word()).freely_reduced()),
        }
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        match g {
            GroupElement::Lattice(v) => GroupElement::Lattice(v.iter().map(|x| -x).collect()),
            GroupElement::Reduced(w) => GroupElement::Reduced(w.inverse()),
        }
    }

    /// The element named by a single generator letter.
    pub fn generator_element(&self, g: Generator) -> GroupElement {
        self.canonicalize_unchecked(&Word::from_letters(vec![g]))
    }

    /// Integer coordinate of an element of a one-dimensional context.
    pub fn as_integer(&self, g: &GroupElement) -> Option<i64> {
        if !self.is_one_dimensional() {
            return None;
        }
        match g {
            GroupElement::Lattice(v) => v.first().copied(),
            GroupElement::Reduced(w) => Some(
                w.letters()
                    .iter()
                    .map(|l| if l.is_inverse { -1 } else { 1 })
                    .sum(),
            ),
        }
    }

    pub fn from_integer(&self, x: i64) -> Option<GroupElement> {
        match self.kind {
            GroupKind::Zd(1) => Some(GroupElement::Lattice(vec![x])),
            GroupKind::Free(1) => {
                let g = Generator::new(self.names[0]);
                let g = if x < 0 { g.inverse() } else { g };
                Some(GroupElement::Reduced(Word::from_letters(vec![
                    g;
                    x.unsigned_abs() as usize
                ])))
            }
            _ => None,
        }
    }

    /// Semi-decision for `u̅ = v̅`. Decidable contexts always answer yes or
    /// no; presented contexts answer yes (with a replayable derivation) or
    /// unknown.
    pub fn equals_semi(&self, u: &Word, v: &Word, fuel: usize) -> FuelVerdict<EqualityProof> {
        if self.is_decidable() {
            return if self.canonicalize_unchecked(u) == self.canonicalize_unchecked(v) {
                FuelVerdict::CertifiedYes(EqualityProof::Canonical)
            } else {
                FuelVerdict::CertifiedNo(())
            };
        }
        let w = u.concat(&v.inverse());
        match rewriting::prove_trivial(&w, &self.variants, fuel) {
            Some(steps) => FuelVerdict::CertifiedYes(EqualityProof::Rewriting(steps)),
            None => FuelVerdict::Unknown(()),
        }
    }

    /// Re-checks an equality proof without search.
    pub fn check_equality(&self, u: &Word, v: &Word, proof: &EqualityProof) -> bool {
        if self.check_word(u).is_err() || self.check_word(v).is_err() {
            return false;
        }
        match proof {
            EqualityProof::Canonical => {
                self.is_decidable() && self.canonicalize_unchecked(u) == self.canonicalize_unchecked(v)
            }
            EqualityProof::Rewriting(steps) => {
                !self.is_decidable()
                    && rewriting::replay(&u.concat(&v.inverse()), &self.variants, steps)
            }
        }
    }

    /// All words of length at most `n`, in shortlex order. Includes the empty
    /// word.
    pub fn words_upto(&self, n: usize) -> Vec<Word> {
        let gens = self.generating_set();
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(layer.len() * gens.len());
            for w in &layer {
                for &g in &gens {
                    let mut x = w.clone();
                    x.push(g);
                    next.push(x);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.sort();
        out
    }

    /// `B_n`, sorted in canonical order (identity first).
    pub fn ball(&self, n: usize) -> Result<Vec<GroupElement>> {
        self.require_decidable("ball")?;
        let gens: Vec<GroupElement> = self
            .generating_set()
            .into_iter()
            .map(|g| self.generator_element(g))
            .collect();
        let mut all: BTreeSet<GroupElement> = BTreeSet::new();
        all.insert(self.identity());
        let mut layer = vec![self.identity()];
        for _ in 0..n {
            let mut next = Vec::new();
            for g in &layer {
                for s in &gens {
                    let h = self.mul(g, s);
                    if all.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
            layer = next;
        }
        Ok(all.into_iter().collect())
    }

    /// Partition of `W_n` into classes certified equal within `fuel`
    /// (transitively closed). Increasing fuel only merges classes.
    pub fn ball_approx(&self, n: usize, fuel: usize) -> Vec<Vec<Word>> {
        let words = self.words_upto(n);
        let mut uf = UnionFind::new(words.len());
        let mut memo: HashMap<Word, bool> = HashMap::new();
        for i in 0..words.len() {
            for j in (i + 1)..words.len() {
                if uf.find(i) == uf.find(j) {
                    continue;
                }
                let key = rewriting::canonical_rotation(&rewriting::cyclically_reduced(
                    &words[i].concat(&words[j].inverse()),
                ));
                let equal = *memo
                    .entry(key)
                    .or_insert_with(|| self.equals_semi(&words[i], &words[j], fuel).is_yes());
                if equal {
                    uf.union(i, j);
                }
            }
        }
        let mut classes: HashMap<usize, Vec<Word>> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            classes.entry(uf.find(i)).or_default().push(w.clone());
        }
        let mut out: Vec<Vec<Word>> = classes.into_values().collect();
        out.sort();
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Display for GroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Zd(d) => write!(f, "Z^{d}"),
            GroupKind::Free(r) => write!(f, "F_{r}"),
            GroupKind::Presented { relators } => {
                let gens: String = self.names.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
                let rels: Vec<String> = relators.iter().map(|r| r.to_string()).collect();
                write!(f, "<{gens} | {}>", rels.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> GroupCtx {
        GroupCtx::zd(2).unwrap()
    }

    fn f2() -> GroupCtx {
        GroupCtx::free(2).unwrap()
    }

    fn pz2() -> GroupCtx {
        GroupCtx::presented(&['a', 'b'], &["abAB"]).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(z2().canonicalize(&w("abA")).unwrap(), GroupElement::Lattice(vec![0, 1]));
        assert_eq!(z2().canonicalize(&w("abA")).unwrap().canonical_word(), w("b"));
        assert_eq!(f2().canonicalize(&w("abBA")).unwrap(), f2().identity());
        assert_eq!(z2().canonicalize(&w("")).unwrap(), GroupElement::Lattice(vec![0, 0]));
        assert!(matches!(
            pz2().canonicalize(&w("ab")),
            Err(Error::UndecidableContext(_))
        ));
        assert!(z2().canonicalize(&w("c")).is_err());
    }

    #[test]
    fn equals_semi_examples() {
        assert!(pz2().equals_semi(&w("ab"), &w("ba"), 1).is_yes());
        assert!(f2().equals_semi(&w("ab"), &w("ba"), 0).is_no());
        for fuel in 0..4 {
            assert!(pz2().equals_semi(&w("a"), &w("b"), fuel).is_unknown());
        }
    }

    #[test]
    fn equality_proofs_replay() {
        let g = pz2();
        let FuelVerdict::CertifiedYes(proof) = g.equals_semi(&w("ab"), &w("ba"), 1) else {
            panic!("expected a proof");
        };
        assert!(g.check_equality(&w("ab"), &w("ba"), &proof));
        assert!(!g.check_equality(&w("ab"), &w("bb"), &proof));
        assert!(!z2().check_equality(&w("ab"), &w("ba"), &proof));
    }

    #[test]
    fn words_upto_counts() {
        let z = GroupCtx::zd(1).unwrap();
        let ws: Vec<String> = z.words_upto(1).iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, vec!["", "a", "A"]);
        assert_eq!(z2().words_upto(0), vec![Word::empty()]);
        assert_eq!(f2().words_upto(2).len(), 21);
    }

    #[test]
    fn ball_examples() {
        assert_eq!(z2().ball(1).unwrap().len(), 5);
        assert_eq!(z2().ball(2).unwrap().len(), 13);
        assert_eq!(f2().ball(2).unwrap().len(), 17);
        assert_eq!(f2().ball(0).unwrap(), vec![f2().identity()]);
        assert!(pz2().ball(1).is_err());
    }

    #[test]
    fn ball_approx_examples() {
        let g = pz2();
        let same_class = |classes: &[Vec<Word>], a: &str, b: &str| {
            classes.iter().any(|c| c.contains(&w(a)) && c.contains(&w(b)))
        };
        let c0 = g.ball_approx(2, 0);
        assert!(!same_class(&c0, "ab", "ba"));
        assert!(same_class(&c0, "aA", ""));
        let c1 = g.ball_approx(2, 1);
        assert!(same_class(&c1, "ab", "ba"));
        assert_eq!(g.ball_approx(0, 5), vec![vec![Word::empty()]]);
        assert_eq!(z2().ball_approx(0, 0), vec![vec![Word::empty()]]);
    }

    #[test]
    fn multiplication_and_inverse() {
        let g = z2();
        let x = GroupElement::Lattice(vec![1, 0]);
        let y = GroupElement::Lattice(vec![0, 1]);
        assert_eq!(g.mul(&x, &y), GroupElement::Lattice(vec![1, 1]));
        let f = f2();
        let h = f.canonicalize(&w("abA")).unwrap();
        assert_eq!(f.mul(&h, &f.inv(&h)), f.identity());
        let z = GroupCtx::zd(1).unwrap();
        assert_eq!(z.inv(&GroupElement::Lattice(vec![3])), GroupElement::Lattice(vec![-3]));
    }

    #[test]
    fn ball_order_is_layered() {
        let z = GroupCtx::zd(1).unwrap();
        let b: Vec<i64> = z.ball(2).unwrap().iter().map(|g| z.as_integer(g).unwrap()).collect();
        assert_eq!(b, vec![0, -1, 1, -2, 2]);
    }
}
