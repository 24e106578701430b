use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::Sft;

/// A distance of the form `0` or `2^-e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dyadic {
    Zero,
    /// `2^-e`
    PowNeg(u32),
}

impl Dyadic {
    pub fn to_f64(self) -> f64 {
        match self {
            Dyadic::Zero => 0.0,
            Dyadic::PowNeg(e) => 0.5f64.powi(e as i32),
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Dyadic::*;
        match (self, other) {
            (Zero, Zero) => std::cmp::Ordering::Equal,
            (Zero, PowNeg(_)) => std::cmp::Ordering::Less,
            (PowNeg(_), Zero) => std::cmp::Ordering::Greater,
            (PowNeg(a), PowNeg(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dyadic::Zero => f.write_str("0"),
            Dyadic::PowNeg(0) => f.write_str("1"),
            Dyadic::PowNeg(e) => write!(f, "1/{}", 1u128 << e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MetricKind {
    /// Exact languages disagree at radius `agreement + 1` (or already at 0).
    Exact,
    /// Exact languages agree on every `B_n`, `n <= nmax`. Not a proof that
    /// the subshifts are equal.
    EqualUpTo(usize),
    /// Only bounds are certified; `estimate` compares margin-`r` upper
    /// approximations and is not certified.
    Bounds {
        lower: Dyadic,
        upper: Dyadic,
        estimate: Dyadic,
        margin: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricReport {
    pub distance: Dyadic,
    /// Largest radius with agreeing languages, if any.
    pub agreement: Option<usize>,
    pub kind: MetricKind,
}

fn from_first_disagreement(first: Option<usize>) -> (Dyadic, Option<usize>) {
    match first {
        None => (Dyadic::Zero, None),
        Some(0) => (Dyadic::PowNeg(0), None),
        Some(n) => (Dyadic::PowNeg(n as u32 - 1), Some(n - 1)),
    }
}

/// `D(X, Y) = 2^-n*` with `n*` the largest radius `<= nmax` at which the
/// `B_n`-languages agree, capped at 1. Exact on one-dimensional contexts;
/// elsewhere only trivial bounds are certified and an estimate from
/// margin-`margin` upper approximations is attached.
pub fn metric_d(x: &Sft, y: &Sft, nmax: usize, margin: usize) -> Result<MetricReport> {
    x.same_space(y)?;
    if x.forbidden() == y.forbidden() && x.presentations() == y.presentations() {
        return Ok(MetricReport {
            distance: Dyadic::Zero,
            agreement: Some(nmax),
            kind: MetricKind::EqualUpTo(nmax),
        });
    }
    if x.ctx().is_one_dimensional() {
        let ax = super::DeBruijnAutomaton::build(x)?;
        let ay = super::DeBruijnAutomaton::build(y)?;
        let first = (0..=nmax).find(|&n| ax.words(2 * n + 1) != ay.words(2 * n + 1));
        let (distance, agreement) = from_first_disagreement(first);
        let kind = match first {
            None => MetricKind::EqualUpTo(nmax),
            Some(_) => MetricKind::Exact,
        };
        return Ok(MetricReport {
            distance,
            agreement: if first.is_none() { Some(nmax) } else { agreement },
            kind,
        });
    }
    let mut first = None;
    for n in 0..=nmax {
        if x.language_upper(n, margin)?.patterns != y.language_upper(n, margin)?.patterns {
            first = Some(n);
            break;
        }
    }
    let (estimate, _) = from_first_disagreement(first);
    Ok(MetricReport {
        distance: estimate,
        agreement: None,
        kind: MetricKind::Bounds {
            lower: Dyadic::Zero,
            upper: Dyadic::PowNeg(0),
            estimate,
            margin,
        },
    })
}
