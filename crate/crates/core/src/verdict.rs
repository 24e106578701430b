//! Three-valued outcomes of budgeted semi-decisions.

use serde::{Deserialize, Serialize};
use std::fmt;

/// The bare outcome of a semi-decision, without payloads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    CertifiedYes,
    CertifiedNo,
    Unknown,
}

impl Verdict {
    /// Process exit code used by the command line front end.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::CertifiedYes => 0,
            Verdict::CertifiedNo => 1,
            Verdict::Unknown => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::CertifiedYes => "CertifiedYes",
            Verdict::CertifiedNo => "CertifiedNo",
            Verdict::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

/// Result of a fuel- or margin-bounded search. Each arm carries the evidence
/// appropriate to it: a certificate for a positive answer, a refutation or
/// witness for a negative one, and whatever partial progress exists when the
/// budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuelVerdict<Y = (), N = (), U = ()> {
    CertifiedYes(Y),
    CertifiedNo(N),
    Unknown(U),
}

impl<Y, N, U> FuelVerdict<Y, N, U> {
    pub fn verdict(&self) -> Verdict {
        match self {
            FuelVerdict::CertifiedYes(_) => Verdict::CertifiedYes,
            FuelVerdict::CertifiedNo(_) => Verdict::CertifiedNo,
            FuelVerdict::Unknown(_) => Verdict::Unknown,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, FuelVerdict::CertifiedYes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, FuelVerdict::CertifiedNo(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, FuelVerdict::Unknown(_))
    }
}
