//! Budgeted decision procedures: non-membership, the proper-containment
//! detector, greedy point extraction and the zero-distance witness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupCtx, GroupElement};
use crate::morphism::{build_yp, LocalRule};
use crate::pattern::{Alphabet, Pattern, Symbol};
use crate::subshift::{DeBruijnAutomaton, Refutation, Sft};
use crate::verdict::FuelVerdict;

/// Sweeps margins `0..=max_margin` and returns the first refutation of `q`,
/// or the surviving extension at `max_margin`.
pub fn nonmembership_semidecide(z: &Sft, q: &Pattern, max_margin: usize) -> Result<FuelVerdict<Refutation, (), Pattern>> {
    let mut last = None;
    for r in 0..=max_margin {
        match z.locally_admissible(q, r)? {
            FuelVerdict::CertifiedNo(refutation) => return Ok(FuelVerdict::CertifiedYes(refutation)),
            FuelVerdict::Unknown(w) => last = Some(w),
            FuelVerdict::CertifiedYes(()) => unreachable!("local admissibility never certifies membership"),
        }
    }
    Ok(FuelVerdict::Unknown(last.expect("at least one margin is tried")))
}

/// Where a language list came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Read off the trimmed de Bruijn automaton (one dimension only).
    ExactAutomaton,
    /// Supplied by the caller and marked as certified.
    UserCertified,
    /// Supplied without certification; only usable with the override.
    Uncertified,
    /// An uncertified list that was used anyway. Results built on it carry
    /// no guarantee.
    UnsoundOverride,
}

/// A claimed `L_{B_k}(Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedLanguage {
    pub k: usize,
    pub patterns: Vec<Pattern>,
    pub provenance: Provenance,
}

impl CertifiedLanguage {
    pub fn exact_1d(y: &Sft, k: usize) -> Result<Self> {
        Ok(CertifiedLanguage {
            k,
            patterns: y.language_exact_1d(k)?.patterns.into_iter().collect(),
            provenance: Provenance::ExactAutomaton,
        })
    }

    pub fn user(k: usize, patterns: Vec<Pattern>, certified: bool) -> Self {
        CertifiedLanguage {
            k,
            patterns,
            provenance: if certified {
                Provenance::UserCertified
            } else {
                Provenance::Uncertified
            },
        }
    }
}

/// A successful detector run: `witness` lies in `L_{B_k}(Y)` but not in
/// `L(Y_p)`, so `L_{B_k}(Y_p)` is a proper subset and `p ∈ L(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    /// Index of the witness in the language list.
    pub instance: usize,
    pub witness: Pattern,
    pub refutation: Refutation,
    pub round: usize,
    pub yp: Sft,
    pub provenance: Provenance,
}

/// Semi-decides `p ∈ L(X)` for `X = φ(Y)`: dovetails `q_i ∉ L(Y_p)` over
/// every `q_i` of the claimed `L_{B_k}(Y)`, one margin per round, up to
/// `budget`. The first refuted instance in (round, index) order is
/// reported. `Unknown` says nothing about `p ∉ L(X)`.
pub fn proper_containment_detect(
    y: &Sft,
    rule: &LocalRule,
    x: &Sft,
    language: &CertifiedLanguage,
    p: &Pattern,
    budget: usize,
    unsound_override: bool,
) -> Result<FuelVerdict<Containment, (), ()>> {
    let provenance = match language.provenance {
        Provenance::Uncertified if !unsound_override => return Err(Error::UncertifiedLanguage),
        Provenance::Uncertified | Provenance::UnsoundOverride => Provenance::UnsoundOverride,
        other => other,
    };
    let yp = build_yp(y, rule, x, p)?;
    for round in 0..=budget {
        for (instance, q) in language.patterns.iter().enumerate() {
            if let FuelVerdict::CertifiedNo(refutation) = yp.locally_admissible(q, round)? {
                return Ok(FuelVerdict::CertifiedYes(Containment {
                    instance,
                    witness: q.clone(),
                    refutation,
                    round,
                    yp,
                    provenance,
                }));
            }
        }
    }
    Ok(FuelVerdict::Unknown(()))
}

/// Answers membership of finite patterns in some language `L(X)`.
pub trait LanguageOracle {
    fn contains(&self, q: &Pattern) -> bool;
}

/// Exact oracle for one-dimensional SFTs.
pub struct AutomatonOracle {
    ctx: GroupCtx,
    automaton: DeBruijnAutomaton,
}

impl AutomatonOracle {
    pub fn new(x: &Sft) -> Result<Self> {
        Ok(AutomatonOracle {
            ctx: x.ctx().clone(),
            automaton: DeBruijnAutomaton::build(x)?,
        })
    }

    pub fn automaton(&self) -> &DeBruijnAutomaton {
        &self.automaton
    }
}

impl LanguageOracle for AutomatonOracle {
    fn contains(&self, q: &Pattern) -> bool {
        match q.to_run(&self.ctx) {
            Ok((_, run)) => self.automaton.admits(&run),
            Err(_) => false,
        }
    }
}

/// A pattern is accepted iff some listed pattern extends it.
pub struct ListOracle {
    pub patterns: Vec<Pattern>,
}

impl LanguageOracle for ListOracle {
    fn contains(&self, q: &Pattern) -> bool {
        self.patterns.iter().any(|p| p.extends(q))
    }
}

impl<F: Fn(&Pattern) -> bool> LanguageOracle for F {
    fn contains(&self, q: &Pattern) -> bool {
        self(q)
    }
}

/// The greedy pattern on `B_n`: cells in ball order, each given the least
/// symbol keeping the partial pattern in the oracle's language. Because the
/// ball order is layered, the result on `B_n` restricts to the result on
/// every smaller ball.
pub fn greedy_point_extract(oracle: &dyn LanguageOracle, ctx: &GroupCtx, alphabet: &Alphabet, n: usize) -> Result<Pattern> {
    let cells = ctx.ball(n)?;
    let mut partial = Pattern::new();
    if !oracle.contains(&partial) {
        return Err(Error::EmptySubshift);
    }
    for g in cells {
        let choice = alphabet.symbols().find(|&s| {
            let mut next = partial.clone();
            next.insert(g.clone(), s);
            oracle.contains(&next)
        });
        match choice {
            Some(s) => {
                partial.insert(g, s);
            }
            None => return Err(Error::OracleViolation { cells: partial.len() }),
        }
    }
    Ok(partial)
}

/// A zero-distance witness prefix: the greedy pattern of a one-dimensional
/// SFT on `B_n`, extracted with the exact automaton oracle.
pub fn medvedev_zero_witness(x: &Sft, n: usize) -> Result<Pattern> {
    let oracle = AutomatonOracle::new(x)?;
    if oracle.automaton().is_empty() {
        return Err(Error::EmptySubshift);
    }
    greedy_point_extract(&oracle, x.ctx(), x.alphabet(), n)
}

/// Checks that `prefix` is exactly the greedy choice sequence on `B_n`
/// against the automaton of `x`, evaluating only the rejected smaller
/// symbols and the accepted one at each cell.
pub fn check_greedy_prefix(x: &Sft, n: usize, prefix: &Pattern) -> Result<bool> {
    let oracle = AutomatonOracle::new(x)?;
    let cells: Vec<GroupElement> = x.ctx().ball(n)?;
    if prefix.len() != cells.len() {
        return Ok(false);
    }
    let mut partial = Pattern::new();
    for g in cells {
        let Some(chosen) = prefix.get(&g) else {
            return Ok(false);
        };
        for s in x.alphabet().symbols().take_while(|&s| s < chosen) {
            let mut next = partial.clone();
            next.insert(g.clone(), s);
            if oracle.contains(&next) {
                return Ok(false);
            }
        }
        partial.insert(g, chosen);
        if !oracle.contains(&partial) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `true` iff every symbol of `p` is `Symbol(0)`.
pub fn is_all_zero(p: &Pattern) -> bool {
    p.symbols().all(|s| s == Symbol(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Symbol;

    fn z() -> GroupCtx {
        GroupCtx::zd(1).unwrap()
    }

    fn run(s: &str) -> Pattern {
        let syms: Vec<Symbol> = s.bytes().map(|b| Symbol((b - b'0') as u16)).collect();
        Pattern::from_run(&z(), 0, &syms).unwrap()
    }

    fn sft(words: &[&str]) -> Sft {
        Sft::from_patterns(&z(), &Alphabet::numeric(2).unwrap(), words.iter().map(|w| run(w)).collect()).unwrap()
    }

    #[test]
    fn golden_mean_nonmembership() {
        let golden = sft(&["11"]);
        let yes = nonmembership_semidecide(&golden, &run("11"), 3).unwrap();
        match yes {
            FuelVerdict::CertifiedYes(r) => {
                assert_eq!(r.margin, 0);
                assert!(golden.check_refutation(&run("11"), &r));
            }
            other => panic!("{other:?}"),
        }
        assert!(nonmembership_semidecide(&golden, &run("00"), 3).unwrap().is_unknown());
    }

    #[test]
    fn needs_margin() {
        // Forbidding 11 and 101 leaves 1?1 refutable only at margin 1.
        let x = sft(&["11", "101"]);
        let q: Pattern = [(GroupElement::Lattice(vec![-1]), Symbol(1)), (GroupElement::Lattice(vec![1]), Symbol(1))]
            .into_iter()
            .collect();
        let FuelVerdict::CertifiedYes(r) = nonmembership_semidecide(&x, &q, 3).unwrap() else {
            panic!()
        };
        assert!(x.check_refutation(&q, &r));
    }

    fn bin() -> Alphabet {
        Alphabet::numeric(2).unwrap()
    }

    #[test]
    fn detector_identity_rule() {
        let full = sft(&[]);
        let id = LocalRule::identity(&z(), &bin()).unwrap();
        let lang = CertifiedLanguage::exact_1d(&full, 1).unwrap();
        for p in ["11", "0"] {
            let out = proper_containment_detect(&full, &id, &full, &lang, &run(p), 4, false).unwrap();
            let FuelVerdict::CertifiedYes(c) = out else { panic!("{out:?}") };
            assert_eq!(c.round, 0);
            assert!(c.yp.check_refutation(&c.witness, &c.refutation));
            assert_eq!(c.provenance, Provenance::ExactAutomaton);
        }
    }

    #[test]
    fn detector_constant_rule_is_unknown() {
        let full = sft(&[]);
        let zero = LocalRule::from_fn(&z(), &bin(), &bin(), vec![z().identity()], |_| Symbol(0)).unwrap();
        let lang = CertifiedLanguage::exact_1d(&full, 1).unwrap();
        let out = proper_containment_detect(&full, &zero, &full, &lang, &run("1"), 6, false).unwrap();
        assert!(out.is_unknown());
    }

    #[test]
    fn uncertified_lists_need_override() {
        let full = sft(&[]);
        let id = LocalRule::identity(&z(), &bin()).unwrap();
        let exact = CertifiedLanguage::exact_1d(&full, 1).unwrap();
        let lang = CertifiedLanguage::user(1, exact.patterns, false);
        assert!(matches!(
            proper_containment_detect(&full, &id, &full, &lang, &run("0"), 2, false),
            Err(Error::UncertifiedLanguage)
        ));
        let FuelVerdict::CertifiedYes(c) =
            proper_containment_detect(&full, &id, &full, &lang, &run("0"), 2, true).unwrap()
        else {
            panic!()
        };
        assert_eq!(c.provenance, Provenance::UnsoundOverride);
    }

    #[test]
    fn greedy_examples() {
        let alternating = sft(&["00", "11"]);
        let p = medvedev_zero_witness(&alternating, 2).unwrap();
        let (start, syms) = p.to_run(&z()).unwrap();
        assert_eq!(start, -2);
        // Origin gets 0, so the alternation is fixed: x_i = i mod 2.
        let expect: Vec<Option<Symbol>> = (-2i64..=2).map(|i| Some(Symbol(i.rem_euclid(2) as u16))).collect();
        assert_eq!(syms, expect);
        assert!(check_greedy_prefix(&alternating, 2, &p).unwrap());

        let golden = sft(&["11"]);
        let p = medvedev_zero_witness(&golden, 4).unwrap();
        assert_eq!(p.len(), 9);
        assert!(is_all_zero(&p));
    }

    #[test]
    fn empty_subshift() {
        let empty = sft(&["0", "1"]);
        assert!(matches!(medvedev_zero_witness(&empty, 2), Err(Error::EmptySubshift)));
    }

    #[test]
    fn oracle_violation() {
        // Accepts patterns of at most one cell.
        let oracle = |q: &Pattern| q.len() <= 1;
        let err = greedy_point_extract(&oracle, &z(), &Alphabet::numeric(2).unwrap(), 1).unwrap_err();
        assert!(matches!(err, Error::OracleViolation { cells: 1 }));
    }

    #[test]
    fn tampered_prefix_rejected() {
        let golden = sft(&["11"]);
        let mut p = medvedev_zero_witness(&golden, 2).unwrap();
        p.insert(GroupElement::Lattice(vec![1]), Symbol(1));
        assert!(!check_greedy_prefix(&golden, 2, &p).unwrap());
    }
}
