//! Sliding block codes given by a memory set and a local table, their action
//! on finite patterns, and the SFT constructions built from them: preimages
//! of SFTs, `X_p`, `Y_p`, and the lift of an SFT to the free group on the
//! same generators.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{GroupCtx, GroupElement, Word};
use crate::pattern::{self, Alphabet, Pattern, PatternPresentation, Symbol};
use crate::subshift::{check_symbols, Sft};

/// A local rule `ℓ: B^T -> A` defining `φ(x)(g) = ℓ((g⁻¹x)|_T)`.
///
/// The table is indexed by the memory pattern read as a base-`|B|` number,
/// first memory cell most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRule {
    ctx: GroupCtx,
    domain: Alphabet,
    codomain: Alphabet,
    memory: Vec<GroupElement>,
    table: Vec<Symbol>,
}

impl LocalRule {
    pub fn new(
        ctx: &GroupCtx,
        domain: &Alphabet,
        codomain: &Alphabet,
        memory: Vec<GroupElement>,
        table: Vec<Symbol>,
    ) -> Result<Self> {
        ctx.require_decidable("LocalRule::new")?;
        if memory.is_empty() {
            return Err(Error::InvalidRule("memory set must be nonempty".into()));
        }
        let distinct: BTreeSet<&GroupElement> = memory.iter().collect();
        if distinct.len() != memory.len() {
            return Err(Error::InvalidRule("memory elements must be distinct".into()));
        }
        let expected = domain
            .len()
            .checked_pow(memory.len() as u32)
            .ok_or_else(|| Error::InvalidRule("table too large".into()))?;
        if table.len() != expected {
            return Err(Error::InvalidRule(format!(
                "table has {} entries, expected {expected}",
                table.len()
            )));
        }
        check_symbols(codomain, table.iter().copied())?;
        Ok(LocalRule {
            ctx: ctx.clone(),
            domain: domain.clone(),
            codomain: codomain.clone(),
            memory,
            table,
        })
    }

    /// Tabulates `f` over every memory pattern.
    pub fn from_fn(
        ctx: &GroupCtx,
        domain: &Alphabet,
        codomain: &Alphabet,
        memory: Vec<GroupElement>,
        f: impl Fn(&[Symbol]) -> Symbol,
    ) -> Result<Self> {
        let k = domain.len();
        let n = k
            .checked_pow(memory.len() as u32)
            .ok_or_else(|| Error::InvalidRule("table too large".into()))?;
        let table = (0..n)
            .map(|mut i| {
                let mut key = vec![Symbol(0); memory.len()];
                for slot in key.iter_mut().rev() {
                    *slot = Symbol((i % k) as u16);
                    i /= k;
                }
                f(&key)
            })
            .collect();
        LocalRule::new(ctx, domain, codomain, memory, table)
    }

    pub fn identity(ctx: &GroupCtx, alphabet: &Alphabet) -> Result<Self> {
        LocalRule::from_fn(ctx, alphabet, alphabet, vec![ctx.identity()], |k| k[0])
    }

    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn memory(&self) -> &[GroupElement] {
        &self.memory
    }

    pub fn table(&self) -> &[Symbol] {
        &self.table
    }

    pub fn lookup(&self, key: &[Symbol]) -> Symbol {
        let k = self.domain.len();
        let idx = key.iter().fold(0usize, |acc, s| acc * k + s.0 as usize);
        self.table[idx]
    }

    /// `Φ(q)`: support `{g : gT ⊆ E}` and `Φ(q)(g) = ℓ((g⁻¹q)|_T)`.
    pub fn apply(&self, q: &Pattern) -> Pattern {
        let anchor_inv = self.ctx.inv(&self.memory[0]);
        let mut out = Pattern::new();
        let mut key = Vec::with_capacity(self.memory.len());
        for e in q.support() {
            let g = self.ctx.mul(e, &anchor_inv);
            key.clear();
            for t in &self.memory {
                match q.get(&self.ctx.mul(&g, t)) {
                    Some(s) => key.push(s),
                    None => break,
                }
            }
            if key.len() == self.memory.len() {
                let s = self.lookup(&key);
                out.insert(g, s);
            }
        }
        out
    }

    /// The SFT `φ⁻¹(X)` over the domain alphabet: for each forbidden `f` of
    /// `X` with support `F`, every pattern on `F·T` whose image contains `f`.
    pub fn pullback(&self, x: &Sft) -> Result<Sft> {
        if x.ctx() != &self.ctx {
            return Err(Error::GroupMismatch("rule and SFT live on different groups".into()));
        }
        if x.alphabet() != &self.codomain {
            return Err(Error::AlphabetMismatch("SFT alphabet differs from the rule codomain".into()));
        }
        let mut forbidden = Vec::new();
        for f in x.forbidden() {
            let support: BTreeSet<GroupElement> = f
                .support()
                .flat_map(|a| self.memory.iter().map(move |t| (a, t)))
                .map(|(a, t)| self.ctx.mul(a, t))
                .collect();
            let support: Vec<GroupElement> = support.into_iter().collect();
            for q in pattern::extensions(&Pattern::new(), &support, &self.domain)? {
                if self.apply(&q).extends(f) {
                    forbidden.push(q);
                }
            }
        }
        Sft::from_patterns(&self.ctx, &self.domain, forbidden)
    }
}

/// `X_p`: the sub-SFT of `X` additionally forbidding `p`.
pub fn forbid_additionally(x: &Sft, p: &Pattern) -> Result<Sft> {
    check_symbols(x.alphabet(), p.symbols())?;
    let mut forbidden = x.forbidden().to_vec();
    forbidden.push(p.clone());
    Sft::from_patterns(x.ctx(), x.alphabet(), forbidden)
}

/// `Y_p = Y ∩ φ⁻¹(X_p)`.
pub fn build_yp(y: &Sft, rule: &LocalRule, x: &Sft, p: &Pattern) -> Result<Sft> {
    if y.alphabet() != rule.domain() {
        return Err(Error::AlphabetMismatch("Y alphabet differs from the rule domain".into()));
    }
    if y.ctx() != rule.ctx() {
        return Err(Error::GroupMismatch("Y and the rule live on different groups".into()));
    }
    let pulled = rule.pullback(&forbid_additionally(x, p)?)?;
    let mut forbidden = y.forbidden().to_vec();
    forbidden.extend(pulled.forbidden().iter().cloned());
    Sft::from_patterns(y.ctx(), y.alphabet(), forbidden)
}

/// Fuel-indexed enumerator of forbidden presentations over the free group
/// `F(S)` on the generators of `Z`'s group, defining the lift
/// `Ẑ = {z ∘ π : z ∈ Z}`.
///
/// Stage `f` consists of `Z`'s forbidden presentations with freely reduced
/// supports, plus, for every nonempty reduced word `w` of length at most `f`
/// certified trivial in `G` within fuel `f`, every pattern `{1 ↦ a, w ↦ b}`
/// with `a ≠ b`. Forbidding these (and their translates) makes every
/// configuration constant on the fibres of `π`. Stages grow monotonically.
pub struct LiftEnumerator {
    group: GroupCtx,
    free: GroupCtx,
    alphabet: Alphabet,
    base: Vec<PatternPresentation>,
    next_stage: usize,
}

pub fn lift_to_free(z: &Sft) -> Result<LiftEnumerator> {
    let free = GroupCtx::free_on(z.ctx().generator_names())?;
    let mut base = Vec::new();
    for p in z.presentations() {
        let reduced: PatternPresentation = p.iter().map(|(w, s)| (w.freely_reduced(), s)).collect();
        if !base.contains(&reduced) {
            base.push(reduced);
        }
    }
    Ok(LiftEnumerator {
        group: z.ctx().clone(),
        free,
        alphabet: z.alphabet().clone(),
        base,
        next_stage: 0,
    })
}

impl LiftEnumerator {
    pub fn free_group(&self) -> &GroupCtx {
        &self.free
    }

    /// Nonempty reduced words of length at most `fuel` certified trivial in
    /// `G` within `fuel`.
    pub fn kernel_words(&self, fuel: usize) -> Vec<Word> {
        self.free
            .words_upto(fuel)
            .into_iter()
            .filter(|w| !w.is_empty() && w.is_freely_reduced())
            .filter(|w| self.group.equals_semi(w, &Word::empty(), fuel).is_yes())
            .collect()
    }

    pub fn stage(&self, fuel: usize) -> Vec<PatternPresentation> {
        let mut out = self.base.clone();
        for w in self.kernel_words(fuel) {
            for a in self.alphabet.symbols() {
                for b in self.alphabet.symbols() {
                    if a != b {
                        out.push([(Word::empty(), a), (w.clone(), b)].into_iter().collect());
                    }
                }
            }
        }
        out
    }

    /// Stage `fuel` as an SFT over the free group.
    pub fn stage_sft(&self, fuel: usize) -> Result<Sft> {
        Sft::build(&self.free, &self.alphabet, self.stage(fuel), 0)
    }
}

impl Iterator for LiftEnumerator {
    type Item = Vec<PatternPresentation>;

    fn next(&mut self) -> Option<Self::Item> {
        let stage = self.stage(self.next_stage);
        self.next_stage += 1;
        Some(stage)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subshift::DeBruijnAutomaton;

    fn z() -> GroupCtx {
        GroupCtx::zd(1).unwrap()
    }

    fn bin() -> Alphabet {
        Alphabet::numeric(2).unwrap()
    }

    fn run(s: &str) -> Pattern {
        let syms: Vec<Symbol> = s.bytes().map(|b| Symbol((b - b'0') as u16)).collect();
        Pattern::from_run(&z(), 0, &syms).unwrap()
    }

    fn at(x: i64) -> GroupElement {
        GroupElement::Lattice(vec![x])
    }

    fn sft(words: &[&str]) -> Sft {
        Sft::from_patterns(&z(), &bin(), words.iter().map(|w| run(w)).collect()).unwrap()
    }

    fn xor() -> LocalRule {
        LocalRule::from_fn(&z(), &bin(), &bin(), vec![at(0), at(1)], |k| Symbol(k[0].0 ^ k[1].0)).unwrap()
    }

    fn constant_zero() -> LocalRule {
        LocalRule::from_fn(&z(), &bin(), &bin(), vec![at(0)], |_| Symbol(0)).unwrap()
    }

    fn same_language(a: &Sft, b: &Sft, upto: usize) -> bool {
        let (x, y) = (DeBruijnAutomaton::build(a).unwrap(), DeBruijnAutomaton::build(b).unwrap());
        (1..=upto).all(|l| x.words(l) == y.words(l))
    }

    #[test]
    fn phi_examples() {
        assert_eq!(xor().apply(&run("110")), run("01"));
        let id = LocalRule::identity(&z(), &bin()).unwrap();
        assert_eq!(id.apply(&run("0110")), run("0110"));
        assert!(xor().apply(&run("1")).is_empty());
        assert!(xor().apply(&Pattern::new()).is_empty());
    }

    #[test]
    fn pullback_examples() {
        let golden = sft(&["11"]);
        let pulled = xor().pullback(&golden).unwrap();
        let got: BTreeSet<Pattern> = pulled.forbidden().iter().cloned().collect();
        let want: BTreeSet<Pattern> = [run("010"), run("101")].into_iter().collect();
        assert_eq!(got, want);

        let id = LocalRule::identity(&z(), &bin()).unwrap();
        assert_eq!(id.pullback(&golden).unwrap().forbidden(), golden.forbidden());
        assert!(xor().pullback(&sft(&[])).unwrap().forbidden().is_empty());
    }

    #[test]
    fn forbid_examples() {
        let full = sft(&[]);
        assert_eq!(forbid_additionally(&full, &run("11")).unwrap(), sft(&["11"]));
        let two = forbid_additionally(&sft(&["11"]), &run("00")).unwrap();
        let aut = DeBruijnAutomaton::build(&two).unwrap();
        assert_eq!(aut.words(3).len(), 2);
        let again = forbid_additionally(&sft(&["11"]), &run("11")).unwrap();
        assert!(same_language(&again, &sft(&["11"]), 8));
    }

    #[test]
    fn build_yp_examples() {
        let full = sft(&[]);
        let id = LocalRule::identity(&z(), &bin()).unwrap();
        let yp = build_yp(&full, &id, &full, &run("11")).unwrap();
        assert!(same_language(&yp, &sft(&["11"]), 8));

        let yp = build_yp(&sft(&["11"]), &id, &full, &run("00")).unwrap();
        let aut = DeBruijnAutomaton::build(&yp).unwrap();
        for l in 1..8 {
            assert_eq!(aut.count(l), 2);
        }

        let yp = build_yp(&full, &constant_zero(), &full, &run("1")).unwrap();
        assert!(same_language(&yp, &full, 8));

        let ternary = Sft::full_shift(&z(), &Alphabet::numeric(3).unwrap());
        assert!(build_yp(&ternary, &id, &full, &run("1")).is_err());
    }

    #[test]
    fn rule_validation() {
        let z = z();
        assert!(LocalRule::new(&z, &bin(), &bin(), vec![], vec![Symbol(0)]).is_err());
        assert!(LocalRule::new(&z, &bin(), &bin(), vec![at(0)], vec![Symbol(0)]).is_err());
        assert!(LocalRule::new(&z, &bin(), &bin(), vec![at(0), at(0)], vec![Symbol(0); 4]).is_err());
        assert!(LocalRule::new(&z, &bin(), &bin(), vec![at(0)], vec![Symbol(0), Symbol(2)]).is_err());
    }

    #[test]
    fn lift_of_full_shift_over_z2_forbids_fibre_disagreement() {
        let z2 = GroupCtx::zd(2).unwrap();
        let full = Sft::full_shift(&z2, &bin());
        let lift = lift_to_free(&full).unwrap();
        assert!(lift.stage(3).is_empty());
        let kernel = lift.kernel_words(4);
        assert!(kernel.contains(&"abAB".parse().unwrap()));
        assert!(kernel.iter().all(|w| w.len() == 4));
        assert_eq!(lift.stage(4).len(), kernel.len() * 2);
    }

    #[test]
    fn lift_stages_are_monotone() {
        let g = GroupCtx::presented(&['a', 'b'], &["abAB"]).unwrap();
        let z = Sft::build(&g, &bin(), Vec::new(), 0).unwrap();
        let mut lift = lift_to_free(&z).unwrap();
        let stages: Vec<Vec<PatternPresentation>> = (&mut lift).take(5).collect();
        assert!(stages[0].is_empty());
        for w in stages.windows(2) {
            assert!(w[0].iter().all(|p| w[1].contains(p)));
        }
        assert!(!stages[4].is_empty());
    }

    #[test]
    fn lift_reinterprets_forbidden_patterns() {
        let golden = sft(&["11"]);
        let lift = lift_to_free(&golden).unwrap();
        let st = lift.stage(0);
        assert_eq!(st.len(), 1);
        let words: Vec<String> = st[0].support().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["", "a"]);
    }
}
