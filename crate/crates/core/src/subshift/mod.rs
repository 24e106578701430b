//! Subshifts of finite type: construction, local admissibility, language
//! approximations, exact one-dimensional languages, the subshift metric and
//! the subset semi-decision.

mod automaton;
mod metric;

use std::collections::BTreeSet;

pub use automaton::DeBruijnAutomaton;
pub use metric::{metric_d, Dyadic, MetricKind, MetricReport};

use crate::error::{Error, Result};
use crate::group::{GroupCtx, GroupElement};
use crate::pattern::{self, Alphabet, Pattern, PatternPresentation};
use crate::search::{RefutationNode, SearchOutcome, SearchProblem};
use crate::verdict::FuelVerdict;

/// An SFT `X_F` given by finitely many forbidden patterns.
///
/// Over decidable groups the forbidden patterns are stored realized. Over
/// presented groups only the presentations are kept (and only when their
/// consistency is certified), which is enough for lifting to the free group
/// but not for the window-based procedures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sft {
    ctx: GroupCtx,
    alphabet: Alphabet,
    forbidden: Vec<Pattern>,
    presentations: Vec<PatternPresentation>,
}

/// A complete refutation of every extension of a pattern to its margin-`r`
/// window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub margin: usize,
    pub window: Vec<GroupElement>,
    pub nodes: Vec<RefutationNode>,
}

/// An approximation of `L_{B_n}(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangApprox {
    pub n: usize,
    /// Margin used for the local-admissibility filter; `None` for exact
    /// languages.
    pub margin: Option<usize>,
    pub patterns: BTreeSet<Pattern>,
    pub exact: bool,
}

impl Sft {
    /// Builds an SFT from forbidden presentations, checking each for
    /// consistency within `fuel`.
    pub fn build(
        ctx: &GroupCtx,
        alphabet: &Alphabet,
        presentations: Vec<PatternPresentation>,
        fuel: usize,
    ) -> Result<Sft> {
        for p in &presentations {
            check_symbols(alphabet, p.iter().map(|(_, s)| s))?;
            for w in p.support() {
                ctx.parse_word(&w.to_string())?;
            }
            match pattern::consistency_check(ctx, p, fuel) {
                FuelVerdict::CertifiedYes(()) => {}
                FuelVerdict::CertifiedNo(inc) => {
                    return Err(Error::Inconsistent {
                        u: inc.u.to_string(),
                        v: inc.v.to_string(),
                    })
                }
                FuelVerdict::Unknown(()) => return Err(Error::ConsistencyUnknown),
            }
        }
        let forbidden = if ctx.is_decidable() {
            let mut realized = Vec::with_capacity(presentations.len());
            for p in &presentations {
                let q = pattern::realize(ctx, p)?;
                if !realized.contains(&q) {
                    realized.push(q);
                }
            }
            realized
        } else {
            Vec::new()
        };
        Ok(Sft {
            ctx: ctx.clone(),
            alphabet: alphabet.clone(),
            forbidden,
            presentations,
        })
    }

    /// Builds an SFT directly from realized forbidden patterns (decidable
    /// contexts only). Duplicates are dropped, order is otherwise kept.
    pub fn from_patterns(ctx: &GroupCtx, alphabet: &Alphabet, forbidden: Vec<Pattern>) -> Result<Sft> {
        ctx.require_decidable("Sft::from_patterns")?;
        let mut out: Vec<Pattern> = Vec::with_capacity(forbidden.len());
        for f in forbidden {
            check_symbols(alphabet, f.symbols())?;
            if !out.contains(&f) {
                out.push(f);
            }
        }
        let presentations = out.iter().map(Pattern::presentation).collect();
        Ok(Sft {
            ctx: ctx.clone(),
            alphabet: alphabet.clone(),
            forbidden: out,
            presentations,
        })
    }

    pub fn full_shift(ctx: &GroupCtx, alphabet: &Alphabet) -> Sft {
        Sft {
            ctx: ctx.clone(),
            alphabet: alphabet.clone(),
            forbidden: Vec::new(),
            presentations: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn forbidden(&self) -> &[Pattern] {
        &self.forbidden
    }

    pub fn presentations(&self) -> &[PatternPresentation] {
        &self.presentations
    }

    /// Least `m` such that every forbidden support lies in `B_m`.
    pub fn range(&self) -> usize {
        if self.ctx.is_decidable() {
            self.forbidden.iter().map(Pattern::radius).max().unwrap_or(0)
        } else {
            self.presentations
                .iter()
                .flat_map(|p| p.support().map(|w| w.len()))
                .max()
                .unwrap_or(0)
        }
    }

    pub(crate) fn same_space(&self, other: &Sft) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.ctx, other.ctx)));
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "{:?} vs {:?}",
                self.alphabet.names(),
                other.alphabet.names()
            )));
        }
        Ok(())
    }

    /// `support(q) · B_r`, or `B_r` for the empty pattern.
    pub fn window(&self, q: &Pattern, r: usize) -> Result<Vec<GroupElement>> {
        self.ctx.require_decidable("window")?;
        let ball = self.ctx.ball(r)?;
        if q.is_empty() {
            return Ok(ball);
        }
        let cells: BTreeSet<GroupElement> = q
            .support()
            .flat_map(|s| ball.iter().map(move |b| (s, b)))
            .map(|(s, b)| self.ctx.mul(s, b))
            .collect();
        Ok(cells.into_iter().collect())
    }

    /// Can `q` be extended to its margin-`r` window without fully containing
    /// a translated forbidden pattern? `CertifiedNo` (with a replayable
    /// refutation) certifies `q` is outside the language; `Unknown` carries
    /// the least surviving extension.
    pub fn locally_admissible(&self, q: &Pattern, r: usize) -> Result<FuelVerdict<(), Refutation, Pattern>> {
        self.ctx.require_decidable("locally_admissible")?;
        check_symbols(&self.alphabet, q.symbols())?;
        let window = self.window(q, r)?;
        let problem = SearchProblem::new(&self.ctx, &self.alphabet, window.clone(), q, &self.forbidden);
        Ok(match problem.first_survivor() {
            SearchOutcome::Survivor(w) => FuelVerdict::Unknown(w),
            SearchOutcome::Refuted(nodes) => FuelVerdict::CertifiedNo(Refutation {
                margin: r,
                window,
                nodes,
            }),
        })
    }

    /// Checks a refutation of `q` against this SFT without searching.
    pub fn check_refutation(&self, q: &Pattern, refutation: &Refutation) -> bool {
        let Ok(window) = self.window(q, refutation.margin) else {
            return false;
        };
        window == refutation.window
            && crate::search::replay_refutation(
                &self.ctx,
                &self.alphabet,
                &window,
                q,
                &self.forbidden,
                &refutation.nodes,
            )
    }

    /// Patterns on `B_n` that are locally admissible at margin `r`.
    pub fn language_upper(&self, n: usize, r: usize) -> Result<LangApprox> {
        self.ctx.require_decidable("language_upper")?;
        let ball = self.ctx.ball(n)?;
        let candidates =
            SearchProblem::new(&self.ctx, &self.alphabet, ball, &Pattern::new(), &self.forbidden).all_survivors();
        let mut patterns = BTreeSet::new();
        for q in candidates {
            if !self.locally_admissible(&q, r)?.is_no() {
                patterns.insert(q);
            }
        }
        Ok(LangApprox {
            n,
            margin: Some(r),
            patterns,
            exact: false,
        })
    }

    /// Exact `L_{B_n}(X)` for one-dimensional SFTs, read off the trimmed de
    /// Bruijn automaton.
    pub fn language_exact_1d(&self, n: usize) -> Result<LangApprox> {
        let aut = DeBruijnAutomaton::build(self)?;
        let patterns = aut
            .words(2 * n + 1)
            .into_iter()
            .map(|w| Pattern::from_run(&self.ctx, -(n as i64), &w))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(LangApprox {
            n,
            margin: None,
            patterns,
            exact: true,
        })
    }

    /// Semi-decides `self ⊆ x`. `CertifiedYes` when no locally admissible
    /// pattern of `self` on `B_m` (m = range of `x`) contains a forbidden
    /// pattern of `x`; `CertifiedNo` with a witness from the exact language
    /// in one dimension; `Unknown` otherwise.
    pub fn subset_semidecide(&self, x: &Sft, r: usize) -> Result<FuelVerdict<(), Pattern>> {
        self.same_space(x)?;
        self.ctx.require_decidable("subset_semidecide")?;
        let m = x.range();
        let contains_forbidden = |q: &Pattern| x.forbidden.iter().any(|f| pattern::occurs_in(&self.ctx, f, q));
        let upper = self.language_upper(m, r)?;
        if !upper.patterns.iter().any(contains_forbidden) {
            return Ok(FuelVerdict::CertifiedYes(()));
        }
        if self.ctx.is_one_dimensional() {
            let exact = self.language_exact_1d(m)?;
            if let Some(w) = exact.patterns.iter().find(|q| contains_forbidden(q)) {
                return Ok(FuelVerdict::CertifiedNo(w.clone()));
            }
        }
        Ok(FuelVerdict::Unknown(()))
    }
}

pub(crate) fn check_symbols(alphabet: &Alphabet, symbols: impl IntoIterator<Item = crate::pattern::Symbol>) -> Result<()> {
    for s in symbols {
        if !alphabet.contains(s) {
            return Err(Error::UnknownSymbol(format!("#{}", s.0)));
        }
    }
    Ok(())
}
