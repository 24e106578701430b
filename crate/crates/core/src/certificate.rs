//! Replayable certificates.
//!
//! A certificate is a JSON object `{"body": ..., "digest": ...}` where the
//! digest is the SHA-256 of the compact serialization of the body. Every body
//! carries its inputs plus a `replay` block; verification checks the digest
//! and then replays the evidence without any search.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::decision::{self, CertifiedLanguage, Containment, Provenance};
use crate::document::{GroupDoc, PatternDoc, RuleDoc, SftDoc};
use crate::error::{Error, Result};
use crate::group::{EqualityProof, GroupCtx, GroupElement, RewriteStep, Word};
use crate::morphism::{build_yp, LocalRule};
use crate::pattern::{Alphabet, Pattern};
use crate::search::RefutationNode;
use crate::subshift::{Refutation, Sft};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum NodeDoc {
    Split,
    Dead { forbidden: usize, translation: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RefutationDoc {
    pub margin: usize,
    pub window: Vec<String>,
    pub nodes: Vec<NodeDoc>,
}

impl RefutationDoc {
    pub fn from_refutation(r: &Refutation) -> Self {
        RefutationDoc {
            margin: r.margin,
            window: r.window.iter().map(|g| g.canonical_word().to_string()).collect(),
            nodes: r
                .nodes
                .iter()
                .map(|n| match n {
                    RefutationNode::Split => NodeDoc::Split,
                    RefutationNode::Dead { forbidden, translation } => NodeDoc::Dead {
                        forbidden: *forbidden,
                        translation: translation.canonical_word().to_string(),
                    },
                })
                .collect(),
        }
    }

    pub fn to_refutation(&self, ctx: &GroupCtx) -> Result<Refutation> {
        let element = |s: &str| ctx.canonicalize(&ctx.parse_word(s)?);
        Ok(Refutation {
            margin: self.margin,
            window: self.window.iter().map(|s| element(s)).collect::<Result<_>>()?,
            nodes: self
                .nodes
                .iter()
                .map(|n| {
                    Ok(match n {
                        NodeDoc::Split => RefutationNode::Split,
                        NodeDoc::Dead { forbidden, translation } => RefutationNode::Dead {
                            forbidden: *forbidden,
                            translation: element(translation)?,
                        },
                    })
                })
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum EqualityReplay {
    /// Both words canonicalize to this word.
    Canonical(String),
    Rewriting(Vec<RewriteStep>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContainmentReplay {
    pub instance: usize,
    pub round: usize,
    pub witness: PatternDoc,
    pub refutation: RefutationDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrefixReplay {
    pub cells: Vec<String>,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CertificateBody {
    /// `u = v` in the group.
    WordEquality {
        group: GroupDoc,
        u: String,
        v: String,
        replay: EqualityReplay,
    },
    /// `pattern ∉ L(sft)`.
    NonMembership {
        sft: SftDoc,
        pattern: PatternDoc,
        replay: RefutationDoc,
    },
    /// `p ∈ L(X)` with `X = φ(Y)`: the witness is in the claimed
    /// `L_{B_k}(Y)` but not in `L(Y_p)`.
    ProperContainment {
        y: SftDoc,
        rule: RuleDoc,
        x: SftDoc,
        p: PatternDoc,
        k: usize,
        provenance: Provenance,
        language: Vec<PatternDoc>,
        replay: ContainmentReplay,
    },
    /// The greedy prefix of a one-dimensional SFT on `B_n`.
    PointPrefix {
        sft: SftDoc,
        n: usize,
        replay: PrefixReplay,
    },
}

impl CertificateBody {
    pub fn kind(&self) -> &'static str {
        match self {
            CertificateBody::WordEquality { .. } => "word_equality",
            CertificateBody::NonMembership { .. } => "non_membership",
            CertificateBody::ProperContainment { .. } => "proper_containment",
            CertificateBody::PointPrefix { .. } => "point_prefix",
        }
    }

    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("certificate bodies always serialize");
        hex::encode(Sha256::digest(bytes))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub body: CertificateBody,
    pub digest: String,
}

impl Certificate {
    pub fn seal(body: CertificateBody) -> Self {
        let digest = body.digest();
        Certificate { body, digest }
    }

    pub fn word_equality(ctx: &GroupCtx, u: &Word, v: &Word, proof: &EqualityProof) -> Result<Self> {
        let replay = match proof {
            EqualityProof::Canonical => EqualityReplay::Canonical(ctx.canonicalize(u)?.canonical_word().to_string()),
            EqualityProof::Rewriting(steps) => EqualityReplay::Rewriting(steps.clone()),
        };
        Ok(Self::seal(CertificateBody::WordEquality {
            group: GroupDoc::from_ctx(ctx),
            u: u.to_string(),
            v: v.to_string(),
            replay,
        }))
    }

    pub fn non_membership(z: &Sft, q: &Pattern, refutation: &Refutation) -> Self {
        Self::seal(CertificateBody::NonMembership {
            sft: SftDoc::from_sft(z),
            pattern: PatternDoc::from_pattern(q, z.alphabet()),
            replay: RefutationDoc::from_refutation(refutation),
        })
    }

    pub fn proper_containment(
        y: &Sft,
        rule: &LocalRule,
        x: &Sft,
        language: &CertifiedLanguage,
        p: &Pattern,
        found: &Containment,
    ) -> Self {
        Self::seal(CertificateBody::ProperContainment {
            y: SftDoc::from_sft(y),
            rule: RuleDoc::from_rule(rule, false),
            x: SftDoc::from_sft(x),
            p: PatternDoc::from_pattern(p, x.alphabet()),
            k: language.k,
            provenance: found.provenance,
            language: language
                .patterns
                .iter()
                .map(|q| PatternDoc::from_pattern(q, y.alphabet()))
                .collect(),
            replay: ContainmentReplay {
                instance: found.instance,
                round: found.round,
                witness: PatternDoc::from_pattern(&found.witness, y.alphabet()),
                refutation: RefutationDoc::from_refutation(&found.refutation),
            },
        })
    }

    pub fn point_prefix(x: &Sft, n: usize, prefix: &Pattern) -> Self {
        let (cells, values) = prefix
            .iter()
            .map(|(g, s)| (g.canonical_word().to_string(), x.alphabet().name(s).to_string()))
            .unzip();
        Self::seal(CertificateBody::PointPrefix {
            sft: SftDoc::from_sft(x),
            n,
            replay: PrefixReplay { cells, values },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    /// Parses a certificate file. Only the exact encoding produced by
    /// [`Certificate::to_json`] (optionally followed by newlines) is
    /// accepted, so every byte of the file is covered by verification.
    pub fn from_json(text: &str) -> Result<Self> {
        let cert: Certificate =
            serde_json::from_str(text).map_err(|e| Error::CertificateRejected(format!("unreadable: {e}")))?;
        if cert.to_json() != text.trim_end_matches('\n') {
            return Err(reject("not in canonical encoding"));
        }
        Ok(cert)
    }

    /// Checks the digest and replays the evidence. Returns a one-line
    /// statement of what was verified.
    pub fn verify(&self) -> Result<String> {
        if self.body.digest() != self.digest {
            return Err(reject("digest does not match the body"));
        }
        verify_body(&self.body).map_err(|e| match e {
            Error::CertificateRejected(_) => e,
            other => Error::CertificateRejected(other.to_string()),
        })
    }
}

fn reject(msg: &str) -> Error {
    Error::CertificateRejected(msg.to_string())
}

fn verify_body(body: &CertificateBody) -> Result<String> {
    match body {
        CertificateBody::WordEquality { group, u, v, replay } => {
            let ctx = group.to_ctx()?;
            let (uw, vw) = (ctx.parse_word(u)?, ctx.parse_word(v)?);
            let ok = match replay {
                EqualityReplay::Canonical(form) => {
                    ctx.is_decidable() && {
                        let target = ctx.canonicalize(&ctx.parse_word(form)?)?;
                        target.canonical_word().to_string() == *form
                            && ctx.canonicalize(&uw)? == target
                            && ctx.canonicalize(&vw)? == target
                    }
                }
                EqualityReplay::Rewriting(steps) => {
                    ctx.check_equality(&uw, &vw, &EqualityProof::Rewriting(steps.clone()))
                }
            };
            if !ok {
                return Err(reject("equality derivation does not replay"));
            }
            Ok(format!("{u} = {v}"))
        }
        CertificateBody::NonMembership { sft, pattern, replay } => {
            let z = sft.to_sft(0)?;
            let q = pattern.to_pattern(z.ctx(), z.alphabet())?;
            let refutation = replay.to_refutation(z.ctx())?;
            if !z.check_refutation(&q, &refutation) {
                return Err(reject("refutation tree does not replay"));
            }
            Ok(format!("pattern is outside the language (margin {})", replay.margin))
        }
        CertificateBody::ProperContainment {
            y,
            rule,
            x,
            p,
            k,
            provenance,
            language,
            replay,
        } => {
            let y = y.to_sft(0)?;
            let rule = rule.to_rule(Some(y.ctx()))?;
            let x = x.to_sft(0)?;
            let p = p.to_pattern(x.ctx(), x.alphabet())?;
            let list = language
                .iter()
                .map(|q| q.to_pattern(y.ctx(), y.alphabet()))
                .collect::<Result<Vec<_>>>()?;
            match provenance {
                Provenance::ExactAutomaton => {
                    let exact = CertifiedLanguage::exact_1d(&y, *k)?;
                    if exact.patterns != list {
                        return Err(reject("language list differs from the exact language"));
                    }
                }
                Provenance::UserCertified | Provenance::UnsoundOverride => {}
                Provenance::Uncertified => return Err(reject("uncertified language list")),
            }
            let witness = replay.witness.to_pattern(y.ctx(), y.alphabet())?;
            if list.get(replay.instance) != Some(&witness) {
                return Err(reject("witness is not the named language instance"));
            }
            let refutation = replay.refutation.to_refutation(y.ctx())?;
            if refutation.margin != replay.round {
                return Err(reject("refutation margin differs from the round"));
            }
            let yp = build_yp(&y, &rule, &x, &p)?;
            if !yp.check_refutation(&witness, &refutation) {
                return Err(reject("refutation tree does not replay against Y_p"));
            }
            let caveat = match provenance {
                Provenance::UnsoundOverride => " (language list uncertified: UNSOUND)",
                Provenance::UserCertified => " (language list certified by its supplier)",
                _ => "",
            };
            Ok(format!(
                "p is in the language of X: instance {} is refuted in Y_p at margin {}{caveat}",
                replay.instance, replay.round
            ))
        }
        CertificateBody::PointPrefix { sft, n, replay } => {
            let x = sft.to_sft(0)?;
            if replay.cells.len() != replay.values.len() {
                return Err(reject("cells and values differ in length"));
            }
            let ball: Vec<GroupElement> = x.ctx().ball(*n)?;
            let mut prefix = Pattern::new();
            for ((c, v), g) in replay.cells.iter().zip(&replay.values).zip(&ball) {
                if *c != g.canonical_word().to_string() {
                    return Err(reject("cells are not the ball in canonical order"));
                }
                prefix.insert(g.clone(), x.alphabet().symbol(v)?);
            }
            if !decision::check_greedy_prefix(&x, *n, &prefix)? {
                return Err(reject("prefix is not the greedy choice sequence"));
            }
            Ok(format!("greedy prefix on B_{n} verified"))
        }
    }
}

/// Alphabet of a certificate's main object, for rendering.
pub fn body_alphabet(body: &CertificateBody) -> Option<Result<Alphabet>> {
    let names = match body {
        CertificateBody::NonMembership { sft, .. } | CertificateBody::PointPrefix { sft, .. } => &sft.alphabet,
        CertificateBody::ProperContainment { y, .. } => &y.alphabet,
        CertificateBody::WordEquality { .. } => return None,
    };
    Some(Alphabet::new(names.iter().cloned()))
}
