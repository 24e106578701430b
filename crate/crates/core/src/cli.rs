//! Command-line front end. Every verb loads JSON documents into a
//! [`Workspace`], runs one engine operation and emits a [`Report`]; the
//! process exit code is the report's verdict code (0 yes, 1 no, 2 unknown)
//! or 3 on any error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::Certificate;
use crate::decision::{self, CertifiedLanguage};
use crate::document::{read_json, GroupDoc, LanguageDoc, PatternDoc, RuleDoc, SftDoc, WangDoc};
use crate::error::{Error, Result};
use crate::group::{GroupCtx, GroupKind};
use crate::morphism::{self, LocalRule};
use crate::pattern::{self, Alphabet, Pattern};
use crate::subshift::{metric_d, DeBruijnAutomaton, Sft};
use crate::verdict::{FuelVerdict, Verdict};

pub const EXIT_ERROR: i32 = 3;

/// A named object held by a workspace.
#[derive(Debug, Clone)]
pub enum Object {
    Sft(Sft),
    Rule(LocalRule),
    Pattern(Pattern),
    Certificate(Box<Certificate>),
}

/// Named objects over one shared group.
#[derive(Debug, Default)]
pub struct Workspace {
    group: Option<GroupCtx>,
    objects: BTreeMap<String, Object>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_group(ctx: GroupCtx) -> Self {
        Workspace {
            group: Some(ctx),
            objects: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> Option<&GroupCtx> {
        self.group.as_ref()
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    pub fn insert(&mut self, name: &str, object: Object) -> Result<()> {
        if self.objects.contains_key(name) {
            return Err(Error::NameCollision(name.to_string()));
        }
        let ctx = match &object {
            Object::Sft(x) => Some(x.ctx()),
            Object::Rule(r) => Some(r.ctx()),
            Object::Pattern(_) | Object::Certificate(_) => None,
        };
        if let Some(ctx) = ctx {
            match &self.group {
                Some(g) if g != ctx => {
                    return Err(Error::GroupMismatch(format!("{name:?} lives on a different group")))
                }
                Some(_) => {}
                None => self.group = Some(ctx.clone()),
            }
        }
        self.objects.insert(name.to_string(), object);
        Ok(())
    }

    pub fn sft(&self, name: &str) -> Result<&Sft> {
        match self.objects.get(name) {
            Some(Object::Sft(x)) => Ok(x),
            _ => Err(Error::Document(format!("no SFT named {name:?}"))),
        }
    }

    pub fn rule(&self, name: &str) -> Result<&LocalRule> {
        match self.objects.get(name) {
            Some(Object::Rule(r)) => Ok(r),
            _ => Err(Error::Document(format!("no rule named {name:?}"))),
        }
    }

    pub fn pattern(&self, name: &str) -> Result<&Pattern> {
        match self.objects.get(name) {
            Some(Object::Pattern(p)) => Ok(p),
            _ => Err(Error::Document(format!("no pattern named {name:?}"))),
        }
    }

    fn load_sft(&mut self, name: &str, path: &Path, fuel: usize) -> Result<()> {
        let doc: SftDoc = read_json(path)?;
        self.insert(name, Object::Sft(doc.to_sft(fuel)?))
    }

    fn load_rule(&mut self, name: &str, path: &Path) -> Result<()> {
        let doc: RuleDoc = read_json(path)?;
        let rule = doc.to_rule(self.group.as_ref())?;
        self.insert(name, Object::Rule(rule))
    }

    fn load_pattern(&mut self, name: &str, path: &Path, alphabet: &Alphabet) -> Result<()> {
        let ctx = self
            .group
            .clone()
            .ok_or_else(|| Error::Document("a pattern needs a group loaded first".into()))?;
        let doc: PatternDoc = read_json(path)?;
        self.insert(name, Object::Pattern(doc.to_pattern(&ctx, alphabet)?))
    }
}

/// The outcome of one verb, printable as text or JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub verb: String,
    pub verdict: Option<Verdict>,
    pub summary: String,
    pub data: serde_json::Value,
}

impl Report {
    fn new(verb: &str, verdict: Option<Verdict>, summary: impl Into<String>, data: serde_json::Value) -> Self {
        Report {
            verb: verb.to_string(),
            verdict,
            summary: summary.into(),
            data,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.map_or(0, Verdict::exit_code)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "symdyn", version, about = "Subshifts of finite type on finitely generated groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Relator applications allowed per equality question
    #[arg(long, global = true, default_value_t = 4)]
    pub fuel: usize,
    /// Window margin (or margin budget for sweeping verbs)
    #[arg(long, global = true, default_value_t = 0)]
    pub margin: usize,
    /// Ball radius
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Write the JSON report here
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write a certificate here when one is produced
    #[arg(long, global = true)]
    pub cert: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Accept an uncertified language list; results are flagged unsound
    #[arg(long, global = true)]
    pub unsound_override: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kind, generators and ball sizes of a group
    GroupInfo {
        #[arg(long)]
        group: PathBuf,
    },
    /// Is a pattern presentation consistent?
    CheckConsistency {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Language on B_n: exact in one dimension, margin-filtered otherwise
    Language {
        #[arg(long)]
        sft: PathBuf,
        /// Use the margin-filtered upper approximation even in one dimension
        #[arg(long)]
        upper: bool,
    },
    /// Local admissibility of a pattern at the given margin
    Admissible {
        #[arg(long)]
        sft: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// Try every margin up to --margin instead of only --margin
        #[arg(long)]
        sweep: bool,
    },
    /// Distance between two SFTs on the same group
    Dist {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Image of a pattern under a local rule
    ApplyRule {
        #[arg(long)]
        rule: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// Group, when the rule document does not name one
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Preimage SFT of X under a local rule
    Pullback {
        #[arg(long)]
        rule: PathBuf,
        #[arg(long)]
        sft: PathBuf,
    },
    /// X with one more forbidden pattern
    Forbid {
        #[arg(long)]
        sft: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Y ∩ φ⁻¹(X_p)
    BuildYp {
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        rule: PathBuf,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Stage --fuel of the lift of an SFT to the free group
    LiftFree {
        #[arg(long)]
        sft: PathBuf,
    },
    /// Semi-decide p ∈ L(X) for X = φ(Y), with --margin as the round budget
    DetectMembership {
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        rule: PathBuf,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Language list for L_{B_k}(Y); computed exactly in one dimension when absent
        #[arg(long)]
        language: Option<PathBuf>,
    },
    /// Greedy prefix of a computable point on B_n
    ExtractPoint {
        #[arg(long)]
        sft: PathBuf,
    },
    /// Check a certificate without searching
    VerifyCert { file: PathBuf },
    /// Plain-text grid of a Z^2 pattern, or of a Wang-tile SFT's greedy patch
    Render {
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        sft: Option<PathBuf>,
        #[arg(long)]
        wang: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the verb and writes the
/// report to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_ERROR,
            };
        }
    };
    match execute(&cli) {
        Ok(report) => match emit(&cli.global, &report, out) {
            Ok(()) => report.exit_code(),
            Err(e) => {
                let _ = writeln!(out, "error: {e}");
                EXIT_ERROR
            }
        },
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit(global: &Global, report: &Report, out: &mut dyn Write) -> Result<()> {
    match global.format {
        Format::Text => {
            let verdict = report.verdict.map(|v| format!("{v}: ")).unwrap_or_default();
            writeln!(out, "{verdict}{}", report.summary)?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(report)?)?,
    }
    if let Some(path) = &global.out {
        std::fs::write(path, serde_json::to_string_pretty(report)?)?;
    }
    Ok(())
}

fn write_cert(global: &Global, cert: &Certificate) -> Result<()> {
    if let Some(path) = &global.cert {
        std::fs::write(path, cert.to_json())?;
    }
    Ok(())
}

fn pattern_json(p: &Pattern, alphabet: &Alphabet) -> serde_json::Value {
    serde_json::to_value(PatternDoc::from_pattern(p, alphabet)).expect("pattern documents serialize")
}

fn show(p: &Pattern, alphabet: &Alphabet) -> String {
    let cells: Vec<String> = p
        .iter()
        .map(|(g, s)| {
            let w = g.canonical_word().to_string();
            format!("{}:{}", if w.is_empty() { "ε" } else { &w }, alphabet.name(s))
        })
        .collect();
    format!("{{{}}}", cells.join(", "))
}

fn sft_json(x: &Sft) -> serde_json::Value {
    serde_json::to_value(SftDoc::from_sft(x)).expect("SFT documents serialize")
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    let mut ws = Workspace::new();
    match &cli.command {
        Command::GroupInfo { group } => {
            let doc: GroupDoc = read_json(group)?;
            let ctx = doc.to_ctx()?;
            let kind = match ctx.kind() {
                GroupKind::Zd(d) => format!("Z^{d}"),
                GroupKind::Free(r) => format!("free group of rank {r}"),
                GroupKind::Presented { relators } => format!("finitely presented, {} relators", relators.len()),
            };
            let gens: String = ctx.generator_names().iter().collect();
            let mut lines = vec![format!("{kind} on generators {gens}")];
            let mut rows = Vec::new();
            for n in 0..=g.n {
                let words = ctx.words_upto(n).len();
                let size = if ctx.is_decidable() {
                    ctx.ball(n)?.len()
                } else {
                    ctx.ball_approx(n, g.fuel).len()
                };
                let label = if ctx.is_decidable() { "|B_n|" } else { "classes (upper bound on |B_n|)" };
                lines.push(format!("n={n}: |W_n|={words}, {label}={size}"));
                rows.push(json!({"n": n, "words": words, "ball": size}));
            }
            Ok(Report::new(
                "group-info",
                None,
                lines.join("\n"),
                json!({"group": doc, "decidable": ctx.is_decidable(), "fuel": g.fuel, "rows": rows}),
            ))
        }
        Command::CheckConsistency { group, pattern } => {
            let ctx = read_json::<GroupDoc>(group)?.to_ctx()?;
            let doc: PatternDoc = read_json(pattern)?;
            let mut names = doc.values.clone();
            names.sort();
            names.dedup();
            let alphabet = Alphabet::new(names)?;
            let pres = doc.to_presentation(&ctx, &alphabet)?;
            let v = pattern::consistency_check(&ctx, &pres, g.fuel);
            let summary = match &v {
                FuelVerdict::CertifiedYes(_) => "consistent".to_string(),
                FuelVerdict::CertifiedNo(inc) => format!("inconsistent: {} and {} are equal", inc.u, inc.v),
                FuelVerdict::Unknown(_) => format!("consistency undetermined within fuel {}", g.fuel),
            };
            let data = match &v {
                FuelVerdict::CertifiedNo(inc) => {
                    write_cert(g, &Certificate::word_equality(&ctx, &inc.u, &inc.v, &inc.proof)?)?;
                    json!({"u": inc.u.to_string(), "v": inc.v.to_string()})
                }
                _ => json!({}),
            };
            Ok(Report::new("check-consistency", Some(v.verdict()), summary, data))
        }
        Command::Language { sft, upper } => {
            ws.load_sft("sft", sft, g.fuel)?;
            let x = ws.sft("sft")?;
            let lang = if x.ctx().is_one_dimensional() && !upper {
                x.language_exact_1d(g.n)?
            } else {
                x.language_upper(g.n, g.margin)?
            };
            let how = if lang.exact {
                "exact".to_string()
            } else {
                format!("margin-{} upper approximation", g.margin)
            };
            let mut lines = vec![format!("{} patterns on B_{} ({how})", lang.patterns.len(), g.n)];
            lines.extend(lang.patterns.iter().map(|p| show(p, x.alphabet())));
            Ok(Report::new(
                "language",
                None,
                lines.join("\n"),
                json!({
                    "n": g.n,
                    "exact": lang.exact,
                    "margin": lang.margin,
                    "patterns": lang.patterns.iter().map(|p| pattern_json(p, x.alphabet())).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Admissible { sft, pattern, sweep } => {
            ws.load_sft("sft", sft, g.fuel)?;
            let alphabet = ws.sft("sft")?.alphabet().clone();
            ws.load_pattern("pattern", pattern, &alphabet)?;
            let (x, q) = (ws.sft("sft")?, ws.pattern("pattern")?);
            let outcome = if *sweep {
                match decision::nonmembership_semidecide(x, q, g.margin)? {
                    FuelVerdict::CertifiedYes(r) => FuelVerdict::CertifiedNo(r),
                    FuelVerdict::Unknown(w) => FuelVerdict::Unknown(w),
                    FuelVerdict::CertifiedNo(()) => unreachable!(),
                }
            } else {
                x.locally_admissible(q, g.margin)?
            };
            match outcome {
                FuelVerdict::CertifiedNo(r) => {
                    let cert = Certificate::non_membership(x, q, &r);
                    write_cert(g, &cert)?;
                    Ok(Report::new(
                        "admissible",
                        Some(Verdict::CertifiedNo),
                        format!("no extension to the margin-{} window survives; pattern is not in the language", r.margin),
                        json!({"margin": r.margin, "window": r.window.len(), "nodes": r.nodes.len()}),
                    ))
                }
                FuelVerdict::Unknown(w) => Ok(Report::new(
                    "admissible",
                    Some(Verdict::Unknown),
                    format!("locally admissible at margin {}; surviving extension {}", g.margin, show(&w, x.alphabet())),
                    json!({"margin": g.margin, "witness": pattern_json(&w, x.alphabet())}),
                )),
                FuelVerdict::CertifiedYes(()) => unreachable!(),
            }
        }
        Command::Dist { a, b } => {
            ws.load_sft("a", a, g.fuel)?;
            ws.load_sft("b", b, g.fuel)?;
            let report = metric_d(ws.sft("a")?, ws.sft("b")?, g.n, g.margin)?;
            Ok(Report::new(
                "dist",
                None,
                format!("{}", report.distance),
                serde_json::to_value(&report)?,
            ))
        }
        Command::ApplyRule { rule, pattern, group } => {
            if let Some(path) = group {
                ws = Workspace::with_group(read_json::<GroupDoc>(path)?.to_ctx()?);
            }
            ws.load_rule("rule", rule)?;
            let r = ws.rule("rule")?.clone();
            ws.load_pattern("pattern", pattern, r.domain())?;
            let image = r.apply(ws.pattern("pattern")?);
            Ok(Report::new(
                "apply-rule",
                None,
                show(&image, r.codomain()),
                json!({"image": pattern_json(&image, r.codomain())}),
            ))
        }
        Command::Pullback { rule, sft } => {
            ws.load_sft("sft", sft, g.fuel)?;
            ws.load_rule("rule", rule)?;
            let pulled = ws.rule("rule")?.pullback(ws.sft("sft")?)?;
            Ok(sft_report("pullback", &pulled))
        }
        Command::Forbid { sft, pattern } => {
            ws.load_sft("sft", sft, g.fuel)?;
            let alphabet = ws.sft("sft")?.alphabet().clone();
            ws.load_pattern("pattern", pattern, &alphabet)?;
            let xp = morphism::forbid_additionally(ws.sft("sft")?, ws.pattern("pattern")?)?;
            Ok(sft_report("forbid", &xp))
        }
        Command::BuildYp { y, rule, x, pattern } => {
            ws.load_sft("y", y, g.fuel)?;
            ws.load_rule("rule", rule)?;
            ws.load_sft("x", x, g.fuel)?;
            let alphabet = ws.sft("x")?.alphabet().clone();
            ws.load_pattern("pattern", pattern, &alphabet)?;
            let yp = morphism::build_yp(ws.sft("y")?, ws.rule("rule")?, ws.sft("x")?, ws.pattern("pattern")?)?;
            Ok(sft_report("build-yp", &yp))
        }
        Command::LiftFree { sft } => {
            ws.load_sft("sft", sft, g.fuel)?;
            let lift = morphism::lift_to_free(ws.sft("sft")?)?;
            let stage = lift.stage_sft(g.fuel)?;
            let kernel = lift.kernel_words(g.fuel);
            let mut report = sft_report("lift-free", &stage);
            report.summary = format!(
                "stage {}: {} forbidden patterns, {} kernel words\n{}",
                g.fuel,
                stage.presentations().len(),
                kernel.len(),
                report.summary
            );
            Ok(report)
        }
        Command::DetectMembership { y, rule, x, pattern, k, language } => {
            ws.load_sft("y", y, g.fuel)?;
            ws.load_rule("rule", rule)?;
            ws.load_sft("x", x, g.fuel)?;
            let alphabet = ws.sft("x")?.alphabet().clone();
            ws.load_pattern("pattern", pattern, &alphabet)?;
            let (ys, r, xs, p) = (ws.sft("y")?, ws.rule("rule")?, ws.sft("x")?, ws.pattern("pattern")?);
            let lang = match language {
                None => CertifiedLanguage::exact_1d(ys, *k)?,
                Some(path) => {
                    let doc: LanguageDoc = read_json(path)?;
                    let patterns = doc
                        .patterns
                        .iter()
                        .map(|q| q.to_pattern(ys.ctx(), ys.alphabet()))
                        .collect::<Result<Vec<_>>>()?;
                    CertifiedLanguage::user(*k, patterns, doc.certified)
                }
            };
            match decision::proper_containment_detect(ys, r, xs, &lang, p, g.margin, g.unsound_override)? {
                FuelVerdict::CertifiedYes(found) => {
                    let cert = Certificate::proper_containment(ys, r, xs, &lang, p, &found);
                    write_cert(g, &cert)?;
                    let flag = if found.provenance == decision::Provenance::UnsoundOverride {
                        " [UNSOUND: uncertified language list]"
                    } else {
                        ""
                    };
                    Ok(Report::new(
                        "detect-membership",
                        Some(Verdict::CertifiedYes),
                        format!(
                            "p is in L(X): language instance {} {} dies in Y_p at margin {}{flag}",
                            found.instance,
                            show(&found.witness, ys.alphabet()),
                            found.round
                        ),
                        json!({
                            "instance": found.instance,
                            "margin": found.round,
                            "witness": pattern_json(&found.witness, ys.alphabet()),
                            "provenance": found.provenance,
                        }),
                    ))
                }
                _ => Ok(Report::new(
                    "detect-membership",
                    Some(Verdict::Unknown),
                    format!("every language instance survives up to margin {}", g.margin),
                    json!({"budget": g.margin, "instances": lang.patterns.len()}),
                )),
            }
        }
        Command::ExtractPoint { sft } => {
            ws.load_sft("sft", sft, g.fuel)?;
            let x = ws.sft("sft")?;
            let prefix = decision::medvedev_zero_witness(x, g.n)?;
            write_cert(g, &Certificate::point_prefix(x, g.n, &prefix))?;
            let (start, run) = prefix.to_run(x.ctx())?;
            let text: Vec<&str> = run.iter().map(|s| x.alphabet().name(s.expect("balls are intervals"))).collect();
            Ok(Report::new(
                "extract-point",
                None,
                format!("positions {start}..={}: {}", start + run.len() as i64 - 1, text.join(" ")),
                json!({"n": g.n, "prefix": pattern_json(&prefix, x.alphabet())}),
            ))
        }
        Command::VerifyCert { file } => {
            let text = std::fs::read_to_string(file)?;
            let cert = Certificate::from_json(&text)?;
            ws.insert("cert", Object::Certificate(Box::new(cert.clone())))?;
            let claim = cert.verify()?;
            Ok(Report::new(
                "verify-cert",
                None,
                format!("certificate ({}) verified: {claim}", cert.body.kind()),
                json!({"kind": cert.body.kind(), "digest": cert.digest}),
            ))
        }
        Command::Render { pattern, sft, wang } => {
            let x = match (sft, wang) {
                (Some(path), None) => read_json::<SftDoc>(path)?.to_sft(g.fuel)?,
                (None, Some(path)) => read_json::<WangDoc>(path)?.compile()?,
                _ => return Err(Error::Document("render needs exactly one of --sft or --wang".into())),
            };
            ws.insert("sft", Object::Sft(x.clone()))?;
            let patch = match pattern {
                Some(path) => {
                    ws.load_pattern("pattern", path, x.alphabet())?;
                    ws.pattern("pattern")?.clone()
                }
                None => greedy_patch(&x, g.n)?,
            };
            let grid = render_grid(&patch, x.alphabet())?;
            Ok(Report::new(
                "render",
                None,
                grid.clone(),
                json!({"grid": grid, "pattern": pattern_json(&patch, x.alphabet())}),
            ))
        }
    }
}

fn sft_report(verb: &str, x: &Sft) -> Report {
    let doc = SftDoc::from_sft(x);
    let text = serde_json::to_string(&doc).expect("SFT documents serialize");
    Report::new(verb, None, text, sft_json(x))
}

/// A margin-filtered greedy patch on `B_n`: cells in ball order, each given
/// the least symbol that keeps the partial patch locally admissible at
/// margin 1. Not a certified language member.
fn greedy_patch(x: &Sft, n: usize) -> Result<Pattern> {
    let oracle = |q: &Pattern| x.locally_admissible(q, 1).map(|v| !v.is_no()).unwrap_or(false);
    decision::greedy_point_extract(&oracle, x.ctx(), x.alphabet(), n)
}

/// Renders a Z^2 pattern as rows of symbol names, north at the top, with
/// `.` for uncovered cells.
pub fn render_grid(p: &Pattern, alphabet: &Alphabet) -> Result<String> {
    let mut cells = BTreeMap::new();
    for (g, s) in p.iter() {
        match g {
            crate::group::GroupElement::Lattice(v) if v.len() == 2 => {
                cells.insert((v[1], v[0]), alphabet.name(s).to_string());
            }
            _ => return Err(Error::Document("render expects a Z^2 pattern".into())),
        }
    }
    if cells.is_empty() {
        return Ok(String::new());
    }
    let width = alphabet.names().iter().map(|n| n.chars().count()).max().unwrap_or(1);
    let (ys, xs): (Vec<i64>, Vec<i64>) = cells.keys().copied().unzip();
    let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let mut rows = Vec::new();
    for y in (y0..=y1).rev() {
        let row: Vec<String> = (x0..=x1)
            .map(|x| format!("{:>width$}", cells.get(&(y, x)).map_or(".", String::as_str)))
            .collect();
        rows.push(row.join(" "));
    }
    Ok(rows.join("\n"))
}

/// Size of the de Bruijn automaton of a one-dimensional SFT, for reports.
pub fn automaton_summary(x: &Sft) -> Result<String> {
    let a = DeBruijnAutomaton::build(x)?;
    Ok(format!(
        "block length {}, {} allowed blocks, {} on bi-infinite paths",
        a.block_length(),
        a.trimming_bound(),
        a.live_vertices()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Symbol;

    #[test]
    fn workspace_rejects_collisions_and_mixed_groups() {
        let z = GroupCtx::zd(1).unwrap();
        let z2 = GroupCtx::zd(2).unwrap();
        let a = Alphabet::numeric(2).unwrap();
        let mut ws = Workspace::new();
        ws.insert("x", Object::Sft(Sft::full_shift(&z, &a))).unwrap();
        assert!(matches!(
            ws.insert("x", Object::Sft(Sft::full_shift(&z, &a))),
            Err(Error::NameCollision(_))
        ));
        assert!(matches!(
            ws.insert("y", Object::Sft(Sft::full_shift(&z2, &a))),
            Err(Error::GroupMismatch(_))
        ));
        assert_eq!(ws.group(), Some(&z));
    }

    #[test]
    fn grid_rendering() {
        let a = Alphabet::numeric(2).unwrap();
        let p: Pattern = [
            (crate::group::GroupElement::Lattice(vec![0, 0]), Symbol(1)),
            (crate::group::GroupElement::Lattice(vec![1, 1]), Symbol(0)),
        ]
        .into_iter()
        .collect();
        assert_eq!(render_grid(&p, &a).unwrap(), ". 0\n1 .");
    }

    #[test]
    fn report_round_trip() {
        let r = Report::new("dist", Some(Verdict::Unknown), "x", json!({"a": [1, 2]}));
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.exit_code(), 2);
    }

    #[test]
    fn help_exits_zero_and_bad_args_exit_three() {
        let mut out = Vec::new();
        assert_eq!(run(["symdyn", "--help"], &mut out), 0);
        assert_eq!(run(["symdyn", "no-such-verb"], &mut out), EXIT_ERROR);
    }
}
