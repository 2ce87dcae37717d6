//! `relsyl`: command-line front end.
//!
//! Exit status: 0 for an affirmative verdict, 1 for a negative one, 2 for errors. For `valid`
//! and `entails`, "no countermodel up to the bound" is affirmative even though it is not a proof.

mod config;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use config::Config;
use relsyl::bml::translate;
use relsyl::copying::{build_copies, choose, verify_contract, ChoicePolicy, PreFrame};
use relsyl::fuzz::{find_falsifier, soundness_campaign};
use relsyl::proofs::corpus::{corpus, corpus_entry};
use relsyl::proofs::{check_proof, parse_proof, print_proof, AxiomName, Verdict};
use relsyl::semantics::{eval_formula, Model};
use relsyl::solver::{
    detect_fragment, entails_with, is_sat_with, is_valid_with, minimize_model, SatVerdict, SolverConfig,
    ValidityVerdict,
};
use relsyl::syntax::{english_to_formula, parse_formula, Formula, Lexicon, Reading};

#[derive(Parser)]
#[command(
    name = "relsyl",
    version,
    about = "Syllogistic logic with relational terms: parse, evaluate, decide, check proofs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest domain size searched by the solver.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Require an explicit --seed for randomized commands (also enabled by the CI environment variable).
    #[arg(long, global = true)]
    ci: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Formulas are given inline, or as `@PATH` to read them from a file.
#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical form.
    Parse { formula: String },
    /// Evaluate a formula in a model file.
    Eval {
        formula: String,
        #[arg(long)]
        model: PathBuf,
    },
    /// Search for a model of smallest size.
    Sat { formula: String },
    /// Search for a countermodel.
    Valid { formula: String },
    /// Whether the premises entail the conclusion, up to the bound.
    Entails {
        conclusion: String,
        #[arg(long = "premise", short = 'p')]
        premises: Vec<String>,
    },
    /// Check a proof file.
    CheckProof { file: PathBuf },
    /// Translate a formula into boolean modal logic.
    Translate { formula: String },
    /// Shrink a model of a formula without AE/EA atoms.
    Minimize {
        formula: String,
        #[arg(long)]
        model: PathBuf,
    },
    /// Build the copied frame of a pre-frame file and verify its contract.
    CopyBuild {
        preframe: PathBuf,
        /// Choose indices and orientations from the seeded stream instead of deterministically.
        #[arg(long)]
        random: bool,
    },
    /// Random testing: soundness of the axiom schemes, or falsifying a given formula.
    Fuzz {
        /// Search for a countermodel of this formula instead of running the scheme campaign.
        #[arg(long)]
        formula: Option<String>,
        /// Restrict the campaign to these schemes.
        #[arg(long = "scheme")]
        schemes: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        instances: u64,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
    /// The built-in proof corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Translate a controlled-English sentence.
    FromEnglish {
        sentence: String,
        #[arg(long)]
        lexicon: PathBuf,
        /// Scope reading; both readings are printed when omitted.
        #[arg(long)]
        reading: Option<String>,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Names and statements.
    List,
    /// Print one proof in the proof file format.
    Show { name: String },
    /// Check every proof, or the named ones.
    Run { names: Vec<String> },
}

struct Outcome {
    affirmative: bool,
    text: String,
    json: Value,
}

impl Outcome {
    fn new(affirmative: bool, text: impl Into<String>, json: Value) -> Self {
        Outcome { affirmative, text: text.into(), json }
    }
}

struct Ctx {
    cfg: Config,
    bound: usize,
    seed: Option<u64>,
    require_seed: bool,
}

impl Ctx {
    fn solver(&self) -> SolverConfig {
        SolverConfig {
            threshold_constant: f64::from(self.cfg.threshold_constant),
            max_conflicts: self.cfg.max_conflicts,
            max_clauses: self.cfg.max_clauses,
            deadline: self.cfg.time_limit_secs.map(|t| Instant::now() + Duration::from_secs_f64(t)),
            ..SolverConfig::default()
        }
    }

    fn seed(&self) -> Result<u64> {
        match (self.seed, self.require_seed) {
            (Some(s), _) => Ok(s),
            (None, true) => bail!("this command is randomized: pass --seed explicitly in CI mode"),
            (None, false) => Ok(self.cfg.random_seed.unwrap_or(0)),
        }
    }
}

fn formula_arg(arg: &str) -> Result<Formula> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    parse_formula(&text).map_err(|e| anyhow!("parse error: {e}"))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_model(path: &Path) -> Result<Model> {
    Model::from_json(&read(path)?).with_context(|| format!("loading model {}", path.display()))
}

fn model_json(m: &Model) -> Value {
    serde_json::to_value(m.to_file()).expect("model serializes")
}

/// `W = {w0, w1}`, then one line per variable.
fn model_text(m: &Model) -> String {
    let f = m.to_file();
    let mut out = format!("  W = {{{}}}", f.domain.join(", "));
    for (var, pts) in &f.set {
        write!(out, "\n  {var} = {{{}}}", pts.join(", ")).unwrap();
    }
    for (var, pairs) in &f.rel {
        let pairs: Vec<String> = pairs.iter().map(|[x, y]| format!("({x},{y})")).collect();
        write!(out, "\n  {var} = {{{}}}", pairs.join(", ")).unwrap();
    }
    out
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializes")
}

fn sat_outcome(v: SatVerdict, bound: usize) -> Outcome {
    match v {
        SatVerdict::Sat(m) => Outcome::new(
            true,
            format!("Sat: model with {} point(s)\n{}", m.size(), model_text(&m)),
            json!({"verdict": "Sat", "model": model_json(&m)}),
        ),
        SatVerdict::UnsatUpTo(k) => Outcome::new(
            false,
            format!("UnsatUpTo({k}): no model with at most {k} points"),
            json!({"verdict": "UnsatUpTo", "bound": k}),
        ),
        SatVerdict::Unsat => Outcome::new(
            false,
            format!("Unsat: no model (bound {bound} reaches the completeness threshold)"),
            json!({"verdict": "Unsat"}),
        ),
    }
}

fn validity_outcome(v: ValidityVerdict) -> Outcome {
    match v {
        ValidityVerdict::Valid => Outcome::new(true, "Valid", json!({"verdict": "Valid"})),
        ValidityVerdict::NoCountermodelUpTo(k) => Outcome::new(
            true,
            format!("NoCountermodelUpTo({k}) (not a proof of validity)"),
            json!({"verdict": "NoCountermodelUpTo", "bound": k}),
        ),
        ValidityVerdict::CountermodelFound(m) => Outcome::new(
            false,
            format!("CountermodelFound: {} point(s)\n{}", m.size(), model_text(&m)),
            json!({"verdict": "CountermodelFound", "model": model_json(&m)}),
        ),
    }
}

fn proof_outcome(name: &str, v: &Verdict) -> (String, Value) {
    let text = match v {
        Verdict::Ok => format!("{name}: ok"),
        Verdict::Rejected { line, reason } => format!("{name}: rejected at line {line}: {reason}"),
    };
    let mut json = serde_json::to_value(v).expect("verdict serializes");
    json["name"] = json!(name);
    (text, json)
}

fn run(cmd: Command, ctx: &Ctx) -> Result<Outcome> {
    Ok(match cmd {
        Command::Parse { formula } => {
            let f = formula_arg(&formula)?;
            let fragment = detect_fragment(&f);
            Outcome::new(
                true,
                format!("{f}\nsize: {}, atoms: {}, fragment: {fragment:?}", f.size(), f.atoms().len()),
                json!({"formula": f.to_string(), "size": f.size(), "atoms": f.atoms().len(), "fragment": fragment}),
            )
        }
        Command::Eval { formula, model } => {
            let f = formula_arg(&formula)?;
            let value = eval_formula(&load_model(&model)?, &f);
            Outcome::new(value, value.to_string(), json!({"formula": f.to_string(), "value": value}))
        }
        Command::Sat { formula } => {
            sat_outcome(is_sat_with(&formula_arg(&formula)?, ctx.bound, &ctx.solver())?, ctx.bound)
        }
        Command::Valid { formula } => {
            validity_outcome(is_valid_with(&formula_arg(&formula)?, ctx.bound, &ctx.solver())?)
        }
        Command::Entails { conclusion, premises } => {
            let gamma = premises.iter().map(|p| formula_arg(p)).collect::<Result<Vec<_>>>()?;
            validity_outcome(entails_with(&gamma, &formula_arg(&conclusion)?, ctx.bound, &ctx.solver())?)
        }
        Command::CheckProof { file } => {
            let proof = parse_proof(&read(&file)?).map_err(|e| anyhow!("{}: {e}", file.display()))?;
            let verdict = check_proof(&proof);
            let (text, json) = proof_outcome(&file.display().to_string(), &verdict);
            Outcome::new(verdict.is_ok(), text, json)
        }
        Command::Translate { formula } => {
            let f = formula_arg(&formula)?;
            let t = translate(&f);
            Outcome::new(true, t.to_string(), json!({"formula": f.to_string(), "bml": t.to_string(), "size": t.size()}))
        }
        Command::Minimize { formula, model } => {
            let f = formula_arg(&formula)?;
            let m = load_model(&model)?;
            let small = minimize_model(&m, &f)?;
            Outcome::new(
                true,
                format!("{} -> {} point(s)\n{}", m.size(), small.size(), model_text(&small)),
                json!({"original_size": m.size(), "model": model_json(&small)}),
            )
        }
        Command::CopyBuild { preframe, random } => {
            let pre =
                PreFrame::from_json(&read(&preframe)?).with_context(|| format!("loading {}", preframe.display()))?;
            let policy = if random { ChoicePolicy::Seeded(ctx.seed()?) } else { ChoicePolicy::Deterministic };
            let frame = build_copies(&pre, &choose(&pre, policy)?)?;
            let report = verify_contract(&frame, &pre);
            let mut text = frame.to_json(&pre);
            for c in &report.checks {
                write!(text, "\n{}: {}", c.property, if c.holds { "holds" } else { "FAILS" })?;
                if let Some(ce) = &c.counterexample {
                    write!(text, " ({ce})")?;
                }
            }
            Outcome::new(
                report.all_hold(),
                text,
                json!({"frame": serde_json::to_value(frame.to_file(&pre))?, "contract": report}),
            )
        }
        Command::Fuzz { formula: Some(formula), instances, max_points, .. } => {
            let f = formula_arg(&formula)?;
            let seed = ctx.seed()?;
            match find_falsifier(&f, instances, max_points, seed, Default::default()) {
                Some(m) => Outcome::new(
                    false,
                    format!("falsified in a model with {} point(s)\n{}", m.size(), model_text(&m)),
                    json!({"falsified": true, "seed": seed, "model": model_json(&m)}),
                ),
                None => Outcome::new(
                    true,
                    format!("no falsifier in {instances} random models with at most {max_points} points"),
                    json!({"falsified": false, "seed": seed, "trials": instances}),
                ),
            }
        }
        Command::Fuzz { formula: None, schemes, instances, max_points } => {
            let seed = ctx.seed()?;
            let schemes: Vec<AxiomName> = if schemes.is_empty() {
                AxiomName::all().collect()
            } else {
                schemes
                    .iter()
                    .map(|s| s.parse().map_err(|_| anyhow!("unknown axiom scheme `{s}`")))
                    .collect::<Result<_>>()?
            };
            let report = soundness_campaign(&schemes, instances, max_points, seed, Default::default());
            let mut text = String::new();
            for s in &report.schemes {
                writeln!(text, "{:<6} {} instances, {} falsified", s.scheme, s.instances, s.falsified)?;
            }
            write!(text, "total falsifications: {}", report.falsifications())?;
            Outcome::new(report.falsifications() == 0, text, serde_json::to_value(&report)?)
        }
        Command::Corpus { action: CorpusAction::List } => {
            let entries = corpus();
            let text = entries.iter().map(|e| format!("{:<22} {}", e.name, e.statement)).collect::<Vec<_>>().join("\n");
            let json = entries
                .iter()
                .map(|e| json!({"name": e.name, "description": e.description, "statement": e.statement, "lines": e.proof.lines.len()}))
                .collect();
            Outcome::new(true, text, Value::Array(json))
        }
        Command::Corpus { action: CorpusAction::Show { name } } => {
            let e = corpus_entry(&name).ok_or_else(|| anyhow!("no corpus entry `{name}`"))?;
            let text = format!("# {}\n{}", e.description, print_proof(&e.proof));
            Outcome::new(true, text.trim_end().to_string(), json!({"name": e.name, "proof": print_proof(&e.proof)}))
        }
        Command::Corpus { action: CorpusAction::Run { names } } => {
            let entries = if names.is_empty() {
                corpus()
            } else {
                names
                    .iter()
                    .map(|n| corpus_entry(n).ok_or_else(|| anyhow!("no corpus entry `{n}`")))
                    .collect::<Result<_>>()?
            };
            let (texts, jsons): (Vec<String>, Vec<Value>) =
                entries.iter().map(|e| proof_outcome(e.name, &check_proof(&e.proof))).unzip();
            let all_ok = jsons.iter().all(|j| j["verdict"] == "Ok");
            Outcome::new(all_ok, texts.join("\n"), Value::Array(jsons))
        }
        Command::FromEnglish { sentence, lexicon, reading } => {
            let lex = Lexicon::from_json(&read(&lexicon)?).with_context(|| format!("loading {}", lexicon.display()))?;
            let readings = match reading {
                Some(r) => vec![(r.to_ascii_lowercase(), r.parse::<Reading>()?)],
                None => vec![("sws".to_string(), Reading::Sws), ("ows".to_string(), Reading::Ows)],
            };
            let mut text = Vec::new();
            let mut json = serde_json::Map::new();
            for (label, r) in readings {
                let f = english_to_formula(&sentence, r, &lex)?;
                text.push(format!("{label}: {f}"));
                json.insert(label, json!(f.to_string()));
            }
            Outcome::new(true, text.join("\n"), Value::Object(json))
        }
    })
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = (|| {
        let cfg = match &cli.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let ctx = Ctx {
            bound: cli.bound.unwrap_or(cfg.default_bound),
            seed: cli.seed,
            require_seed: cli.ci || std::env::var_os("CI").is_some_and(|v| !v.is_empty()),
            cfg,
        };
        run(cli.command, &ctx)
    })();
    match result {
        Ok(out) => {
            match format {
                Format::Text => emit(&format!("{}\nresult: {}", out.text, out.json)),
                Format::Json => emit(&pretty(&out.json)),
            }
            if out.affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if format == Format::Json {
                emit(&pretty(&json!({"error": format!("{e:#}")})));
            }
            ExitCode::from(2)
        }
    }
}
