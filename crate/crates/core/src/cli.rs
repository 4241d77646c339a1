//! The command-line surface. [`run_command`] never exits the process; the
//! binary prints [`Report::render`] and exits with [`Report::exit_code`].

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::{is_bijection, is_ideal, validate_algebra};
use crate::groupoid::{
    self, check_covering, check_morphism, validate_action, validate_groupoid, GpdAction, GpdMorphism,
};
use crate::internal::{self, validate_internal, validate_internal_action, InternalAction, InternalMorphism};
use crate::io::{self, DocError, Document, Structure};
use crate::report::{ValidationReport, Violation};
use crate::xmod::{self, check_xmod_morphism, validate_xmod};
use crate::Error;

#[derive(Parser, Debug)]
#[command(
    name = "opgroupoid",
    version,
    about = "Check and construct groups with operations, internal groupoids, covers and crossed modules"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    report: Format,
    /// Where to write a constructed structure (constructions only).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized batteries.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a document of any kind.
    Check { file: PathBuf },
    /// Build the cover with the given characteristic group.
    Cover {
        file: PathBuf,
        #[arg(long)]
        object: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
    /// Internal groupoid to crossed module.
    ToXmod { file: PathBuf },
    /// Crossed module to internal groupoid.
    ToInternal { file: PathBuf },
    /// Lift a morphism through a cover.
    Lift { cover: PathBuf, morphism: PathBuf },
    /// Check the action/cover equivalence over a battery.
    Equiv {
        file: PathBuf,
        #[arg(long)]
        battery: Option<PathBuf>,
    },
    /// Crossed-module morphism of an internal cover.
    Corr { file: PathBuf },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub failures: usize,
    pub counterexamples: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub exit_code: i32,
    pub checks: Vec<CheckResult>,
    pub info: Map<String, Value>,
    pub error: Option<ErrorInfo>,
    pub output: Option<String>,
    pub elapsed_ms: f64,
    #[serde(skip)]
    pub format: Format,
    /// Help or version text, printed verbatim.
    #[serde(skip)]
    pub message: Option<String>,
}

impl Report {
    fn new(command: Vec<String>) -> Self {
        Report {
            command,
            status: Status::Pass,
            exit_code: 0,
            checks: Vec::new(),
            info: Map::new(),
            error: None,
            output: None,
            elapsed_ms: 0.0,
            format: Format::Text,
            message: None,
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    fn add(&mut self, name: &str, r: &ValidationReport) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: if r.is_ok() { Status::Pass } else { Status::Fail },
            failures: r.total_failures(),
            counterexamples: r.violations().to_vec(),
        });
    }

    fn info(&mut self, key: &str, v: impl Serialize) {
        self.info.insert(key.to_string(), json!(v));
    }

    fn finish(&mut self, started: Instant) {
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;
        (self.status, self.exit_code) = match &self.error {
            Some(e) if is_input_error(&e.kind) => (Status::Error, 2),
            Some(_) => (Status::Fail, 1),
            None if self.passed() => (Status::Pass, 0),
            None => (Status::Fail, 1),
        };
    }

    pub fn render(&self) -> String {
        if let Some(m) = &self.message {
            return m.clone();
        }
        match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut s = format!("command: {}\n", self.command.join(" "));
        for c in &self.checks {
            match c.status {
                Status::Pass => s += &format!("PASS {}\n", c.name),
                _ => {
                    s += &format!("FAIL {} ({} failures)\n", c.name, c.failures);
                    for v in &c.counterexamples {
                        s += &format!("  {v}\n");
                    }
                }
            }
        }
        for (k, v) in &self.info {
            s += &format!("{k}: {v}\n");
        }
        if let Some(o) = &self.output {
            s += &format!("wrote {o}\n");
        }
        if let Some(e) = &self.error {
            s += &format!("error: {}: {}\n", e.kind, e.message);
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        };
        s += &format!(
            "status: {status} (exit {}, {:.1} ms)\n",
            self.exit_code, self.elapsed_ms
        );
        s
    }
}

const INPUT_ERRORS: &[&str] = &[
    "UsageError",
    "IoError",
    "ParseError",
    "SchemaError",
    "MalformedTable",
    "SignatureMismatch",
    "UnknownOperationName",
    "TooManyVariables",
    "IdentitySyntax",
    "UnknownObject",
    "SearchBudgetExceeded",
];

fn is_input_error(kind: &str) -> bool {
    INPUT_ERRORS.contains(&kind)
}

/// Why a command stopped early.
enum Stop {
    Input(&'static str, String),
    Core(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Core(e)
    }
}

type Run<T> = std::result::Result<T, Stop>;

fn usage(msg: impl Into<String>) -> Stop {
    Stop::Input("UsageError", msg.into())
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run_command<I, S>(argv: I) -> Report
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let started = Instant::now();
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let mut rep = Report::new(argv.iter().skip(1).cloned().collect());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                rep.message = Some(e.to_string());
            } else {
                rep.error = Some(ErrorInfo {
                    kind: "UsageError".into(),
                    message: e.to_string(),
                });
            }
            rep.finish(started);
            return rep;
        }
    };
    rep.format = cli.report;
    if let Err(stop) = dispatch(&cli, &mut rep) {
        rep.error = Some(match stop {
            Stop::Input(kind, message) => ErrorInfo {
                kind: kind.into(),
                message,
            },
            Stop::Core(e) => {
                if let Some(r) = e.report() {
                    rep.add(&command_name(&cli.command), r);
                }
                ErrorInfo {
                    kind: e.kind().into(),
                    message: e.to_string(),
                }
            }
        });
    }
    rep.finish(started);
    rep
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Check { .. } => "check",
        Command::Cover { .. } => "cover",
        Command::ToXmod { .. } => "to-xmod",
        Command::ToInternal { .. } => "to-internal",
        Command::Lift { .. } => "lift",
        Command::Equiv { .. } => "equiv",
        Command::Corr { .. } => "corr",
    }
    .to_string()
}

fn dispatch(cli: &Cli, rep: &mut Report) -> Run<()> {
    let constructs = !matches!(cli.command, Command::Check { .. } | Command::Equiv { .. });
    if cli.out.is_some() && !constructs {
        return Err(usage("--out is only accepted by commands that construct a structure"));
    }
    let built = match &cli.command {
        Command::Check { file } => {
            let doc = load(file)?;
            rep.info("kind", doc.structure.kind());
            check_structure(&doc.structure, rep);
            None
        }
        Command::Cover { file, object, subgroup } => Some(cover(&load(file)?, *object, subgroup, rep)?),
        Command::ToXmod { file } => {
            let doc = load(file)?;
            let Structure::Internal(g) = &doc.structure else {
                return Err(usage("to-xmod expects an internal document"));
            };
            let x = xmod::internal_to_xmod(g)?;
            rep.info("A", x.a().size());
            rep.info("B", x.b().size());
            Some(derived(&doc, Structure::XMod(x), "crossed module"))
        }
        Command::ToInternal { file } => {
            let doc = load(file)?;
            let Structure::XMod(x) = &doc.structure else {
                return Err(usage("to-internal expects an xmod document"));
            };
            let g = xmod::xmod_to_internal(x)?;
            rep.info("objects", g.gpd.n_objects());
            rep.info("arrows", g.gpd.n_arrows());
            Some(derived(&doc, Structure::Internal(g), "internal groupoid"))
        }
        Command::Lift { cover, morphism } => Some(lift(&load(cover)?, &load(morphism)?, rep)?),
        Command::Equiv { file, battery } => {
            equiv(&load(file)?, battery.as_deref(), cli.seed, rep)?;
            None
        }
        Command::Corr { file } => Some(corr(&load(file)?, rep)?),
    };
    if let Some(doc) = built {
        // every construction is validated before it can be written
        check_structure(&doc.structure, rep);
        if let Some(out) = &cli.out {
            if rep.passed() {
                std::fs::write(out, io::serialize(&doc))
                    .map_err(|e| Stop::Input("IoError", format!("{}: {e}", out.display())))?;
                rep.output = Some(out.display().to_string());
            }
        }
    }
    Ok(())
}

fn load(path: &Path) -> Run<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Stop::Input("IoError", format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| {
        let kind = match e {
            DocError::Parse { .. } => "ParseError",
            DocError::Schema { .. } => "SchemaError",
        };
        Stop::Input(kind, format!("{}: {e}", path.display()))
    })
}

fn derived(from: &Document, s: Structure, what: &str) -> Document {
    let mut d = Document::new(s);
    if let Some(n) = &from.name {
        d = d.named(&format!("{what} of {n}"));
    }
    d
}

/// A validator that may refuse an invalid component; the refusal's
/// counterexamples become failures of the same check.
fn flatten(r: crate::Result<ValidationReport>) -> Run<ValidationReport> {
    match r {
        Ok(r) => Ok(r),
        Err(Error::ComponentInvalid { report, .. }) => Ok(report),
        Err(e) => Err(Stop::Core(e)),
    }
}

/// Runs every validator that applies to `s`, one check entry each.
fn check_structure(s: &Structure, rep: &mut Report) {
    if let Err(stop) = try_check_structure(s, rep) {
        let (kind, message) = match stop {
            Stop::Input(k, m) => (k.to_string(), m),
            Stop::Core(e) => (e.kind().to_string(), e.to_string()),
        };
        rep.error.get_or_insert(ErrorInfo { kind, message });
    }
}

fn try_check_structure(s: &Structure, rep: &mut Report) -> Run<()> {
    match s {
        Structure::Algebra(a) => {
            rep.add("algebra", &validate_algebra(a));
            rep.info("size", a.size());
            rep.info("abelian", a.is_abelian());
        }
        Structure::Groupoid(g) => {
            rep.add("groupoid", &validate_groupoid(g));
            rep.info("objects", g.n_objects());
            rep.info("arrows", g.n_arrows());
            rep.info("transitive", g.is_transitive());
        }
        Structure::Internal(g) => {
            let r = flatten(validate_internal(g))?;
            rep.add("internal", &r);
            rep.info("objects", g.gpd.n_objects());
            rep.info("arrows", g.gpd.n_arrows());
            if r.is_ok() {
                rep.info("ker_d0", g.kernel_d0());
                rep.info("ker_d0_ideal", is_ideal(&internal::ker_d0_component(g)));
            }
        }
        Structure::XMod(x) => rep.add("xmod", &flatten(validate_xmod(x))?),
        Structure::Action(a) => {
            let mut r = validate_groupoid(&a.groupoid).scoped("groupoid");
            r.merge(validate_action(a));
            rep.add("action", &r);
        }
        Structure::InternalAction(a) => rep.add("action", &flatten(validate_internal_action(a))?),
        Structure::Morphism {
            map,
            basepoint,
            covering,
        } => {
            let mut r = validate_groupoid(&map.source).scoped("source");
            r.merge(validate_groupoid(&map.target).scoped("target"));
            r.merge(check_morphism(map));
            rep.add("morphism", &r);
            if r.is_ok() {
                covering_checks(map, *basepoint, *covering, rep)?;
            }
        }
        Structure::InternalMorphism {
            map,
            basepoint,
            covering,
        } => {
            let mut r = flatten(validate_internal(&map.source))?.scoped("source");
            r.merge(flatten(validate_internal(&map.target))?.scoped("target"));
            r.merge(internal::check_internal_morphism(map)?);
            rep.add("morphism", &r);
            if r.is_ok() {
                covering_checks(&map.underlying()?, *basepoint, *covering, rep)?;
            }
        }
        Structure::XModMorphism { map, cover } => {
            let r = flatten(check_xmod_morphism(map))?;
            rep.add("xmod_morphism", &r);
            if r.is_ok() {
                let is_cover = is_bijection(&map.f1, map.target.a().size());
                rep.info("cover", is_cover);
                if let Some(claim) = cover {
                    let mut c = ValidationReport::new();
                    if claim != &is_cover {
                        c.fail(
                            "xmod_morphism.cover",
                            &[],
                            &[],
                            format!("claimed {claim}, f1 bijective is {is_cover}"),
                        );
                    }
                    rep.add("cover", &c);
                }
            }
        }
    }
    Ok(())
}

/// Covering status, the characteristic group at the basepoint and the
/// check of a covering claim, for a valid morphism.
fn covering_checks(p: &GpdMorphism, basepoint: Option<usize>, claim: Option<bool>, rep: &mut Report) -> Run<()> {
    let cov = check_covering(p)?;
    let is_cov = cov.is_ok();
    rep.info("covering", is_cov);
    if is_cov {
        let x = basepoint.unwrap_or(0);
        if x < p.source.n_objects() {
            rep.info("basepoint", x);
            rep.info("characteristic_group", groupoid::characteristic_group(p, x)?);
        }
        if p.source.is_transitive() && p.target.is_transitive() {
            rep.info("universal", groupoid::is_universal_cover(p)?);
        }
    }
    match claim {
        Some(true) => rep.add("covering", &cov),
        Some(false) => {
            let mut c = ValidationReport::new();
            if is_cov {
                c.fail(
                    "morphism.covering",
                    &[],
                    &[],
                    "claimed not to be a covering, but every star maps bijectively",
                );
            }
            rep.add("covering", &c);
        }
        None => {}
    }
    Ok(())
}

fn cover(doc: &Document, object: Option<usize>, c: &[usize], rep: &mut Report) -> Run<Document> {
    let mut c = c.to_vec();
    c.sort_unstable();
    c.dedup();
    let (structure, base, n_cosets) = match &doc.structure {
        Structure::Groupoid(g) => {
            let cc = groupoid::coset_cover(g, object.unwrap_or(0), &c)?;
            let n = cc.cosets.len();
            let s = Structure::Morphism {
                map: cc.projection,
                basepoint: Some(cc.base),
                covering: Some(true),
            };
            (s, cc.base, n)
        }
        Structure::Internal(g) => {
            if object.is_some_and(|x| x != g.base()) {
                return Err(usage(format!(
                    "internal covers are lifted at the zero object {}",
                    g.base()
                )));
            }
            let ic = internal::lift_internal_structure(g, &c)?;
            let n = ic.cosets.cosets.len();
            let s = Structure::InternalMorphism {
                map: ic.projection,
                basepoint: Some(ic.base),
                covering: Some(true),
            };
            (s, ic.base, n)
        }
        _ => return Err(usage("cover expects a groupoid or internal document")),
    };
    rep.info("subgroup", &c);
    rep.info("cosets", n_cosets);
    rep.info("base_object", base);
    let name = doc.name.as_deref().unwrap_or("G");
    let sub: Vec<String> = c.iter().map(usize::to_string).collect();
    Ok(Document::new(structure).named(&format!("{name} covered at {{{}}}", sub.join(","))))
}

fn lift(cover: &Document, map: &Document, rep: &mut Report) -> Run<Document> {
    match (&cover.structure, &map.structure) {
        (
            Structure::Morphism {
                map: p, basepoint: xb, ..
            },
            Structure::Morphism {
                map: f, basepoint: zb, ..
            },
        ) => {
            let (x, z) = (xb.unwrap_or(0), zb.unwrap_or(0));
            let l = groupoid::lift_morphism(p, f, z, x)?;
            rep.info("commutes", l.then(p)? == *f);
            Ok(Document::new(Structure::Morphism {
                map: l,
                basepoint: Some(z),
                covering: None,
            }))
        }
        (
            Structure::InternalMorphism {
                map: p, basepoint: xb, ..
            },
            Structure::InternalMorphism {
                map: f, basepoint: zb, ..
            },
        ) => {
            let (x, z) = (xb.unwrap_or(0), zb.unwrap_or(0));
            let l = groupoid::lift_morphism(&p.underlying()?, &f.underlying()?, z, x)?;
            rep.info("commutes", l.then(&p.underlying()?)? == f.underlying()?);
            let m = InternalMorphism::new(f.source.clone(), p.source.clone(), l.arrow_map, l.object_map)?;
            Ok(Document::new(Structure::InternalMorphism {
                map: m,
                basepoint: Some(z),
                covering: None,
            }))
        }
        _ => Err(usage("lift expects two morphism documents of the same flavour")),
    }
}

fn corr(doc: &Document, rep: &mut Report) -> Run<Document> {
    let Structure::InternalMorphism { map: p, .. } = &doc.structure else {
        return Err(usage("corr expects a morphism of internal groupoids"));
    };
    let m = xmod::cover_correspondence(p)?;
    let internal_cover = internal::is_internal_covering(p)?;
    let xmod_cover = is_bijection(&m.f1, m.target.a().size());
    rep.info("internal_covering", internal_cover);
    rep.info("xmod_cover", xmod_cover);
    let mut r = ValidationReport::new();
    if internal_cover != xmod_cover {
        r.fail(
            "corr.agreement",
            &[],
            &[],
            format!("covering is {internal_cover} but f1 bijective is {xmod_cover}"),
        );
    }
    rep.add("correspondence", &r);
    Ok(derived(
        doc,
        Structure::XModMorphism {
            map: m,
            cover: Some(xmod_cover),
        },
        "crossed-module morphism",
    ))
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn read_battery(dir: &Path) -> Run<Vec<Structure>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Stop::Input("IoError", format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load(p).map(|d| d.structure)).collect()
}

fn equiv(doc: &Document, battery: Option<&Path>, seed: Option<u64>, rep: &mut Report) -> Run<()> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let battery = battery.map(read_battery).transpose()?;
    match &doc.structure {
        Structure::Groupoid(g) => {
            let (mut actions, mut covers) = (Vec::new(), Vec::new());
            match battery {
                Some(items) => {
                    for s in items {
                        match s {
                            Structure::Action(a) => actions.push(a),
                            Structure::Morphism { map, .. } => covers.push(map),
                            other => return Err(usage(format!("battery holds a {} document", other.kind()))),
                        }
                    }
                }
                None => {
                    let r = validate_groupoid(g);
                    if !r.is_ok() {
                        return Err(Error::component("groupoid", r).into());
                    }
                    actions.push(GpdAction::canonical(g));
                    covers.push(GpdMorphism::identity(g));
                    if g.is_transitive() && g.n_objects() > 0 {
                        for c in groupoid::subgroups(g, 0)? {
                            let cc = groupoid::coset_cover(g, 0, &c)?;
                            if let Some(rng) = rng.as_mut() {
                                let n = cc.groupoid.n_arrows();
                                let (po, pa) = (random_perm(rng, cc.action.set_size), random_perm(rng, n));
                                covers.push(cc.projection.relabel_source(&po, &pa)?);
                                actions.push(cc.action.relabel_set(&random_perm(rng, cc.action.set_size))?);
                            }
                            actions.push(cc.action);
                            covers.push(cc.projection);
                        }
                    }
                }
            }
            rep.info("actions", actions.len());
            rep.info("covers", covers.len());
            let mut pg = ValidationReport::new();
            for (i, a) in actions.iter().enumerate() {
                if a.groupoid == *g {
                    let back = groupoid::action_to_covering(a).and_then(|p| groupoid::covering_to_action(&p));
                    if back.as_ref().ok() != Some(a) {
                        pg.fail("equiv.phi_gamma", &[], &[i], "Φ(Γ(act)) differs from act");
                    }
                }
            }
            rep.add("phi_gamma", &pg);
            rep.add(
                "equivalence",
                &internal::check_act_cov_equivalence_plain(g, &actions, &covers),
            );
        }
        Structure::Internal(g) => {
            let (mut actions, mut covers) = (Vec::new(), Vec::new());
            match battery {
                Some(items) => {
                    for s in items {
                        match s {
                            Structure::InternalAction(a) => actions.push(a),
                            Structure::InternalMorphism { map, .. } => covers.push(map),
                            other => return Err(usage(format!("battery holds a {} document", other.kind()))),
                        }
                    }
                }
                None => {
                    internal::require_internal(g, "internal")?;
                    actions.push(InternalAction::canonical(g));
                    covers.push(InternalMorphism::identity(g));
                    if g.gpd.is_transitive() {
                        for c in internal::lift_candidates(g)? {
                            let ic = internal::lift_internal_structure(g, &c)?;
                            let act =
                                InternalAction::new(g.clone(), ic.cosets.action.clone(), ic.cover.object_alg.clone())?;
                            if let Some(rng) = rng.as_mut() {
                                let (no, na) = (ic.cover.gpd.n_objects(), ic.cover.gpd.n_arrows());
                                let (po, pa) = (random_perm(rng, no), random_perm(rng, na));
                                covers.push(ic.projection.relabel_source(&po, &pa)?);
                                actions.push(act.relabel_set(&random_perm(rng, no))?);
                            }
                            actions.push(act);
                            covers.push(ic.projection);
                        }
                    }
                }
            }
            rep.info("actions", actions.len());
            rep.info("covers", covers.len());
            let mut pg = ValidationReport::new();
            for (i, a) in actions.iter().enumerate() {
                if a.internal == *g {
                    let back = internal::action_to_covering(a).and_then(|p| internal::covering_to_action(&p));
                    if back.as_ref().ok() != Some(a) {
                        pg.fail("equiv.phi_gamma", &[], &[i], "Φ(Γ(act)) differs from act");
                    }
                }
            }
            rep.add("phi_gamma", &pg);
            rep.add(
                "equivalence",
                &internal::check_act_cov_equivalence(g, &actions, &covers),
            );
        }
        _ => return Err(usage("equiv expects a groupoid or internal document")),
    }
    Ok(())
}
