//! JSON documents: groups, pattern presentations, SFTs, local rules, Wang
//! tile sets and language lists.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupCtx, GroupElement, GroupKind};
use crate::morphism::LocalRule;
use crate::pattern::{self, Alphabet, Pattern, PatternPresentation, Symbol};
use crate::subshift::Sft;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", try_from = "RawGroupDoc")]
pub enum GroupDoc {
    Zd {
        d: usize,
    },
    Free {
        rank: usize,
    },
    Presented {
        generators: Vec<String>,
        relators: Vec<String>,
    },
}

// Read through a flat struct: internally tagged enums buffer their input
// and lose error locations.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroupDoc {
    #[serde(rename = "type")]
    kind: String,
    d: Option<usize>,
    rank: Option<usize>,
    generators: Option<Vec<String>>,
    relators: Option<Vec<String>>,
}

impl TryFrom<RawGroupDoc> for GroupDoc {
    type Error = String;

    fn try_from(raw: RawGroupDoc) -> std::result::Result<Self, String> {
        let fields = (raw.d, raw.rank, raw.generators, raw.relators);
        match (raw.kind.as_str(), fields) {
            ("zd", (Some(d), None, None, None)) => Ok(GroupDoc::Zd { d }),
            ("free", (None, Some(rank), None, None)) => Ok(GroupDoc::Free { rank }),
            ("presented", (None, None, Some(generators), relators)) => Ok(GroupDoc::Presented {
                generators,
                relators: relators.unwrap_or_default(),
            }),
            ("zd", _) => Err("a zd group takes exactly the field `d`".into()),
            ("free", _) => Err("a free group takes exactly the field `rank`".into()),
            ("presented", _) => Err("a presented group takes `generators` and `relators`".into()),
            (other, _) => Err(format!("unknown group type {other:?}; expected zd, free or presented")),
        }
    }
}

impl GroupDoc {
    pub fn to_ctx(&self) -> Result<GroupCtx> {
        match self {
            GroupDoc::Zd { d } => GroupCtx::zd(*d),
            GroupDoc::Free { rank } => GroupCtx::free(*rank),
            GroupDoc::Presented { generators, relators } => {
                let gens = generators
                    .iter()
                    .map(|g| {
                        let mut cs = g.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c), None) => Ok(c),
                            _ => Err(Error::InvalidGroup(format!(
                                "generator names are single letters, got {g:?}"
                            ))),
                        }
                    })
                    .collect::<Result<Vec<char>>>()?;
                if relators.is_empty() {
                    return GroupCtx::free_on(&gens);
                }
                let rels: Vec<&str> = relators.iter().map(String::as_str).collect();
                GroupCtx::presented(&gens, &rels)
            }
        }
    }

    pub fn from_ctx(ctx: &GroupCtx) -> GroupDoc {
        match ctx.kind() {
            GroupKind::Zd(d) => GroupDoc::Zd { d: *d },
            GroupKind::Free(r) if ctx.generator_names().iter().enumerate().all(|(i, &c)| c as usize == 'a' as usize + i) => {
                GroupDoc::Free { rank: *r }
            }
            GroupKind::Free(_) => GroupDoc::Presented {
                generators: ctx.generator_names().iter().map(|c| c.to_string()).collect(),
                relators: Vec::new(),
            },
            GroupKind::Presented { relators } => GroupDoc::Presented {
                generators: ctx.generator_names().iter().map(|c| c.to_string()).collect(),
                relators: relators.iter().map(|r| r.to_string()).collect(),
            },
        }
    }
}

/// A pattern presentation as parallel arrays of words and symbol names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternDoc {
    pub support: Vec<String>,
    pub values: Vec<String>,
}

impl PatternDoc {
    pub fn to_presentation(&self, ctx: &GroupCtx, alphabet: &Alphabet) -> Result<PatternPresentation> {
        if self.support.len() != self.values.len() {
            return Err(Error::Document(format!(
                "pattern has {} support words but {} values",
                self.support.len(),
                self.values.len()
            )));
        }
        let mut out = PatternPresentation::new();
        for (w, v) in self.support.iter().zip(&self.values) {
            let word = ctx.parse_word(w)?;
            let s = alphabet.symbol(v)?;
            if out.insert(word, s).is_some() {
                return Err(Error::Document(format!("support word {w:?} listed twice")));
            }
        }
        Ok(out)
    }

    pub fn to_pattern(&self, ctx: &GroupCtx, alphabet: &Alphabet) -> Result<Pattern> {
        pattern::realize(ctx, &self.to_presentation(ctx, alphabet)?)
    }

    pub fn from_presentation(p: &PatternPresentation, alphabet: &Alphabet) -> PatternDoc {
        let (support, values) = p
            .iter()
            .map(|(w, s)| (w.to_string(), alphabet.name(s).to_string()))
            .unzip();
        PatternDoc { support, values }
    }

    /// Canonical-word presentation of a realized pattern, in canonical cell
    /// order.
    pub fn from_pattern(p: &Pattern, alphabet: &Alphabet) -> PatternDoc {
        let (support, values) = p
            .iter()
            .map(|(g, s)| (g.canonical_word().to_string(), alphabet.name(s).to_string()))
            .unzip();
        PatternDoc { support, values }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SftDoc {
    pub group: GroupDoc,
    pub alphabet: Vec<String>,
    pub forbidden: Vec<PatternDoc>,
}

impl SftDoc {
    pub fn to_sft(&self, fuel: usize) -> Result<Sft> {
        let ctx = self.group.to_ctx()?;
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let pres = self
            .forbidden
            .iter()
            .map(|p| p.to_presentation(&ctx, &alphabet))
            .collect::<Result<Vec<_>>>()?;
        Sft::build(&ctx, &alphabet, pres, fuel)
    }

    pub fn from_sft(x: &Sft) -> SftDoc {
        SftDoc {
            group: GroupDoc::from_ctx(x.ctx()),
            alphabet: x.alphabet().names().to_vec(),
            forbidden: x
                .presentations()
                .iter()
                .map(|p| PatternDoc::from_presentation(p, x.alphabet()))
                .collect(),
        }
    }
}

/// A local rule. Table keys concatenate domain symbols in memory order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDoc>,
    pub memory: Vec<String>,
    pub domain_alphabet: Vec<String>,
    pub codomain_alphabet: Vec<String>,
    pub table: BTreeMap<String, String>,
}

impl RuleDoc {
    /// Builds the rule on `ctx`, or on the document's own group when it
    /// names one (which must then agree with `ctx` if both are given).
    pub fn to_rule(&self, ctx: Option<&GroupCtx>) -> Result<LocalRule> {
        let own = self.group.as_ref().map(GroupDoc::to_ctx).transpose()?;
        let ctx = match (own, ctx) {
            (Some(a), Some(b)) if &a != b => {
                return Err(Error::GroupMismatch("rule document names a different group".into()))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b.clone(),
            (None, None) => return Err(Error::Document("rule document needs a group".into())),
        };
        let domain = Alphabet::new(self.domain_alphabet.iter().cloned())?;
        let codomain = Alphabet::new(self.codomain_alphabet.iter().cloned())?;
        let memory = self
            .memory
            .iter()
            .map(|w| ctx.canonicalize(&ctx.parse_word(w)?))
            .collect::<Result<Vec<GroupElement>>>()?;
        let k = domain.len();
        let size = k
            .checked_pow(memory.len() as u32)
            .ok_or_else(|| Error::InvalidRule("table too large".into()))?;
        let mut table: Vec<Option<Symbol>> = vec![None; size];
        for (key, value) in &self.table {
            let syms = domain.split_word(key, memory.len())?;
            let idx = syms.iter().fold(0usize, |acc, s| acc * k + s.0 as usize);
            table[idx] = Some(codomain.symbol(value)?);
        }
        let table = table
            .into_iter()
            .collect::<Option<Vec<Symbol>>>()
            .ok_or_else(|| Error::InvalidRule("table is not total".into()))?;
        LocalRule::new(&ctx, &domain, &codomain, memory, table)
    }

    pub fn from_rule(rule: &LocalRule, with_group: bool) -> RuleDoc {
        let k = rule.domain().len();
        let m = rule.memory().len();
        let mut table = BTreeMap::new();
        for (i, &value) in rule.table().iter().enumerate() {
            let mut key = vec![Symbol(0); m];
            let mut rest = i;
            for slot in key.iter_mut().rev() {
                *slot = Symbol((rest % k) as u16);
                rest /= k;
            }
            let key: String = key.iter().map(|&s| rule.domain().name(s)).collect();
            table.insert(key, rule.codomain().name(value).to_string());
        }
        RuleDoc {
            group: with_group.then(|| GroupDoc::from_ctx(rule.ctx())),
            memory: rule.memory().iter().map(|g| g.canonical_word().to_string()).collect(),
            domain_alphabet: rule.domain().names().to_vec(),
            codomain_alphabet: rule.codomain().names().to_vec(),
            table,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WangTile {
    pub n: serde_json::Value,
    pub e: serde_json::Value,
    pub s: serde_json::Value,
    pub w: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WangDoc {
    pub tiles: Vec<WangTile>,
}

impl WangDoc {
    /// The Z^2 SFT whose alphabet is the tile indices and whose forbidden
    /// patterns are the horizontally (`a`) and vertically (`b`) adjacent
    /// pairs with mismatched edge colours.
    pub fn compile(&self) -> Result<Sft> {
        let ctx = GroupCtx::zd(2)?;
        let alphabet = Alphabet::numeric(self.tiles.len())?;
        let origin = ctx.identity();
        let east = GroupElement::Lattice(vec![1, 0]);
        let north = GroupElement::Lattice(vec![0, 1]);
        let mut forbidden = Vec::new();
        for (i, t) in self.tiles.iter().enumerate() {
            for (j, u) in self.tiles.iter().enumerate() {
                let pair = |dir: &GroupElement| -> Pattern {
                    [(origin.clone(), Symbol(i as u16)), (dir.clone(), Symbol(j as u16))]
                        .into_iter()
                        .collect()
                };
                if t.e != u.w {
                    forbidden.push(pair(&east));
                }
                if t.n != u.s {
                    forbidden.push(pair(&north));
                }
            }
        }
        Sft::from_patterns(&ctx, &alphabet, forbidden)
    }
}

/// A finite list of patterns offered as a language slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanguageDoc {
    #[serde(default)]
    pub certified: bool,
    pub patterns: Vec<PatternDoc>,
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Symbol;

    #[test]
    fn group_documents() {
        let docs = [
            r#"{"type":"zd","d":2}"#,
            r#"{"type":"free","rank":2}"#,
            r#"{"type":"presented","generators":["a","b"],"relators":["abAB"]}"#,
        ];
        for d in docs {
            let g: GroupDoc = serde_json::from_str(d).unwrap();
            let ctx = g.to_ctx().unwrap();
            assert_eq!(GroupDoc::from_ctx(&ctx), g);
            assert_eq!(serde_json::to_string(&g).unwrap(), d);
        }
        assert!(serde_json::from_str::<GroupDoc>(r#"{"type":"zd","d":2,"x":1}"#).is_err());
        let err = serde_json::from_str::<GroupDoc>(r#"{"type":"nope"}"#).unwrap_err();
        assert!(err.to_string().contains("unknown group type"));
        let err = serde_json::from_str::<GroupDoc>("{\"type\":\"zd\",\n\"d\":\"two\"}").unwrap_err();
        assert_eq!(err.line(), 2);
    }

    #[test]
    fn golden_mean_document() {
        let doc: SftDoc = serde_json::from_str(
            r#"{"group":{"type":"zd","d":1},"alphabet":["0","1"],"forbidden":[{"support":["","a"],"values":["1","1"]}]}"#,
        )
        .unwrap();
        let x = doc.to_sft(0).unwrap();
        assert_eq!(x.range(), 1);
        assert_eq!(SftDoc::from_sft(&x), doc);
    }

    #[test]
    fn pattern_document_errors() {
        let ctx = GroupCtx::zd(1).unwrap();
        let a = Alphabet::numeric(2).unwrap();
        let bad = PatternDoc {
            support: vec!["".into()],
            values: vec![],
        };
        assert!(bad.to_presentation(&ctx, &a).is_err());
        let unknown = PatternDoc {
            support: vec!["b".into()],
            values: vec!["0".into()],
        };
        assert!(unknown.to_presentation(&ctx, &a).is_err());
        let sym = PatternDoc {
            support: vec!["".into()],
            values: vec!["2".into()],
        };
        assert!(sym.to_presentation(&ctx, &a).is_err());
    }

    #[test]
    fn rule_document_round_trip() {
        let doc: RuleDoc = serde_json::from_str(
            r#"{"memory":["","a"],"domain_alphabet":["0","1"],"codomain_alphabet":["0","1"],"table":{"00":"0","01":"1","10":"1","11":"0"}}"#,
        )
        .unwrap();
        let ctx = GroupCtx::zd(1).unwrap();
        let rule = doc.to_rule(Some(&ctx)).unwrap();
        assert_eq!(rule.lookup(&[Symbol(1), Symbol(0)]), Symbol(1));
        assert_eq!(RuleDoc::from_rule(&rule, false), doc);
        assert!(doc.to_rule(None).is_err());
        let mut partial = doc.clone();
        partial.table.remove("11");
        assert!(partial.to_rule(Some(&ctx)).is_err());
    }

    #[test]
    fn wang_tiles_compile() {
        // Two tiles that only match themselves horizontally and anything
        // vertically.
        let doc: WangDoc = serde_json::from_str(
            r#"{"tiles":[{"n":0,"e":"r","s":0,"w":"r"},{"n":0,"e":"g","s":0,"w":"g"}]}"#,
        )
        .unwrap();
        let x = doc.compile().unwrap();
        assert_eq!(x.forbidden().len(), 2);
        let l = x.language_upper(1, 1).unwrap();
        // Each horizontal row of B_1 is constant; the two cells off the row are free.
        assert_eq!(l.patterns.len(), 2 * 2 * 2);
    }
}
