use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use regsem::green::{GreenData, Partition, Side};
use regsem::representatives::RepChoice;
use regsem::rewrite::{RewriteError, RewriteSystem, Strategy, SystemOptions};
use regsem::semigroup::{Semigroup, DEFAULT_MAX_ORDER};
use regsem::sreg::{self, EnumCaps, SRegError, DEFAULT_ELEMENT_CAP};
use regsem::verify::{self, VerifyConfig};

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "regsem", version, about = "Green's relations and normal forms for the regular cover of a finite semigroup")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Largest semigroup order accepted on input.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER, global = true)]
    max_order: usize,

    /// Representative overrides, one `R|L <member> <rep>` per line.
    #[arg(long, global = true)]
    reps: Option<PathBuf>,

    /// Proceed on ambiguous input or invalid representatives; results are
    /// marked non-authoritative.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Green's classes, class orders, unambiguity and representatives.
    Analyze { file: PathBuf },
    /// Normal form of a word such as "a b' 0".
    Reduce {
        file: PathBuf,
        #[arg(short, long)]
        word: String,
        /// Print every step.
        #[arg(long)]
        trace: bool,
        /// leftmost, rightmost or random:<seed>.
        #[arg(long, default_value = "leftmost")]
        strategy: Strategy,
    },
    /// Normal form of the product of two words.
    Multiply {
        file: PathBuf,
        #[arg(short)]
        a: String,
        #[arg(short)]
        b: String,
    },
    /// Enumerate the regular cover as a Cayley table.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        max_elements: usize,
    },
    /// Run the verification suite.
    Verify {
        file: PathBuf,
        /// Longest word in the exhaustive sweeps.
        #[arg(long, default_value_t = 5)]
        maxlen: usize,
        /// `all` or a list such as `3.1,3.9`.
        #[arg(long, default_value = "all")]
        lemmas: String,
        /// Random strategies per word.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        /// Random words for the strategy comparison.
        #[arg(long, default_value_t = 1000)]
        words: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<RewriteError> for Failure {
    fn from(e: RewriteError) -> Self {
        let code = match e {
            RewriteError::StepCap { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SRegError> for Failure {
    fn from(e: SRegError) -> Self {
        match e {
            SRegError::Rewrite(r) => r.into(),
            SRegError::ElementCap { .. } | SRegError::StepBudget { .. } => Failure {
                code: EXIT_CAP,
                message: e.to_string(),
            },
            other => Failure::input(other.to_string()),
        }
    }
}

/// A report plus the exit code it implies.
struct Outcome {
    report: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.report).expect("json")),
                Format::Human => human(&cli.command, &out.report),
            };
            (text, out.code)
        }
        Err(f) => match cli.format {
            Format::Json => (format!("{}\n", json!({ "error": f.message, "exit_code": f.code })), f.code),
            Format::Human => {
                eprintln!("error: {}", f.message);
                (String::new(), f.code)
            }
        },
    };
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(code)
}

fn load(path: &Path, max_order: usize) -> Result<Semigroup, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Semigroup::parse_with_limit(&text, max_order).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn step_cap_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("REGSEM_CAP_STEPS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::input(format!("REGSEM_CAP_STEPS must be a positive integer, got `{v}`"))),
        },
        Err(_) => Ok(None),
    }
}

fn reps_for(cli: &Cli, sg: &Semigroup, g: &GreenData) -> Result<Option<RepChoice>, Failure> {
    let Some(path) = &cli.reps else { return Ok(None) };
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let base = RepChoice::choose(sg, g).map_err(|e| Failure::input(e.to_string()))?;
    base.with_overrides(sg, g, &text)
        .map(Some)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn system(cli: &Cli, file: &Path) -> Result<RewriteSystem, Failure> {
    let sg = load(file, cli.max_order)?;
    let g = GreenData::compute(&sg);
    let reps = reps_for(cli, &sg, &g)?;
    let options = SystemOptions {
        allow_ambiguous: cli.force,
        allow_invalid_reps: cli.force,
        step_cap: step_cap_from_env()?,
    };
    let names: Vec<String> = sg.names().to_vec();
    RewriteSystem::with_options(sg, reps, options).map_err(|e| match e {
        RewriteError::Ambiguous(v) => Failure::input(format!(
            "semigroup is not unambiguous, witness ({}, {}, {}) [{}]; use --force for non-authoritative results",
            names[v.upper_left.index()],
            names[v.lower.index()],
            names[v.upper_right.index()],
            side_name(v.side)
        )),
        RewriteError::InvalidReps(vs) => Failure::input(format!(
            "invalid representatives ({} violations); use --force for non-authoritative results",
            vs.len()
        )),
        other => other.into(),
    })
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::L => "L",
        Side::R => "R",
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Analyze { file } => analyze(cli, file),
        Command::Reduce {
            file,
            word,
            trace,
            strategy,
        } => {
            let sys = system(cli, file)?;
            let w = sys.parse_word(word).map_err(|e| Failure::input(e.to_string()))?;
            let r = sys.reduce_with(&w, *strategy)?;
            let mut m = Map::new();
            m.insert("input".into(), json!(sys.display_word(&w).to_string()));
            m.insert("normal_form".into(), json!(sys.display_word(&r.normal_form).to_string()));
            m.insert("steps".into(), json!(r.steps));
            m.insert("strategy".into(), json!(strategy.to_string()));
            m.insert("authoritative".into(), json!(sys.is_authoritative()));
            if *trace {
                let steps: Vec<Value> = r
                    .trace
                    .iter()
                    .map(|s| {
                        json!({
                            "rule": s.redex.rule.label(),
                            "position": s.redex.position,
                            "result": sys.display_word(&s.result).to_string(),
                        })
                    })
                    .collect();
                m.insert("trace".into(), Value::Array(steps));
            }
            Ok(Outcome {
                report: Value::Object(m),
                code: 0,
            })
        }
        Command::Multiply { file, a, b } => {
            let sys = system(cli, file)?;
            let wa = sys.parse_word(a).map_err(|e| Failure::input(e.to_string()))?;
            let wb = sys.parse_word(b).map_err(|e| Failure::input(e.to_string()))?;
            let na = sys.normal_form(&wa)?;
            let nb = sys.normal_form(&wb)?;
            let p = sreg::multiply(&sys, &na, &nb)?;
            Ok(Outcome {
                report: json!({
                    "a": sys.display_word(&na).to_string(),
                    "b": sys.display_word(&nb).to_string(),
                    "product": sys.display_word(&p).to_string(),
                    "authoritative": sys.is_authoritative(),
                }),
                code: 0,
            })
        }
        Command::Enumerate { file, max_elements } => enumerate(cli, file, *max_elements),
        Command::Verify {
            file,
            maxlen,
            lemmas,
            seeds,
            words,
        } => {
            let sys = system(cli, file)?;
            let lemmas = verify::parse_lemma_ids(lemmas).map_err(Failure::input)?;
            let cfg = VerifyConfig {
                maxlen: *maxlen,
                lemmas,
                seeds: *seeds,
                random_words: *words,
                ..VerifyConfig::default()
            };
            let report = verify::verify_all(&sys, &cfg);
            let code = if report.passed { 0 } else { EXIT_FAILED };
            Ok(Outcome {
                report: serde_json::to_value(&report).expect("report serializes"),
                code,
            })
        }
    }
}

fn class_list(sg: &Semigroup, p: &Partition) -> Vec<String> {
    p.classes().iter().map(|c| braces(sg, c)).collect()
}

fn braces(sg: &Semigroup, members: &[regsem::Element]) -> String {
    let names: Vec<&str> = members.iter().map(|&e| sg.name(e)).collect();
    format!("{{{}}}", names.join(", "))
}

fn analyze(cli: &Cli, file: &Path) -> Result<Outcome, Failure> {
    let sg = load(file, cli.max_order)?;
    let g = GreenData::compute(&sg);
    let mut m = Map::new();
    m.insert("order".into(), json!(sg.order()));
    m.insert("zero".into(), json!(sg.zero().map(|z| sg.name(z))));
    m.insert("identity".into(), json!(sg.identity().map(|e| sg.name(e))));
    let mut classes = Map::new();
    for (k, p) in [("L", &g.l), ("R", &g.r), ("H", &g.h), ("D", &g.d), ("J", &g.j)] {
        classes.insert(k.into(), json!(class_list(&sg, p)));
    }
    m.insert("classes".into(), Value::Object(classes));
    let mut covers = Map::new();
    for side in [Side::L, Side::R] {
        let p = g.partition(side);
        let list: Vec<String> = g
            .class_covers(side)
            .into_iter()
            .map(|(lo, hi)| format!("{} < {}", braces(&sg, p.members(lo)), braces(&sg, p.members(hi))))
            .collect();
        covers.insert(side_name(side).into(), json!(list));
    }
    m.insert("class_order".into(), Value::Object(covers));
    let unamb = g.is_unambiguous();
    m.insert("unambiguous".into(), json!(unamb.verdict));
    if let Some(v) = unamb.violation {
        m.insert(
            "witness".into(),
            json!(format!(
                "({}, {}, {}) [{}]",
                sg.name(v.upper_left),
                sg.name(v.lower),
                sg.name(v.upper_right),
                side_name(v.side)
            )),
        );
    }
    let reps = match reps_for(cli, &sg, &g)? {
        Some(r) => Ok(r),
        None => RepChoice::choose(&sg, &g),
    };
    match reps {
        Ok(rc) => {
            let mut r = Map::new();
            for (side, tag) in [(Side::R, "R"), (Side::L, "L")] {
                let p = g.partition(side);
                let list: Vec<String> = g
                    .nonzero_classes(side)
                    .into_iter()
                    .map(|c| {
                        let members = p.members(c);
                        format!("{} -> {}", braces(&sg, members), sg.name(rc.rep(side, members[0])))
                    })
                    .collect();
                r.insert(tag.into(), json!(list));
            }
            m.insert("representatives".into(), Value::Object(r));
            let violations: Vec<String> = rc.validate(&sg, &g).iter().map(|v| v.describe(&sg)).collect();
            m.insert("representatives_valid".into(), json!(violations.is_empty()));
            if !violations.is_empty() {
                m.insert("representative_violations".into(), json!(violations));
            }
        }
        Err(e) => {
            m.insert("representatives".into(), Value::Null);
            m.insert("representatives_error".into(), json!(e.to_string()));
        }
    }
    Ok(Outcome {
        report: Value::Object(m),
        code: 0,
    })
}

fn enumerate(cli: &Cli, file: &Path, max_elements: usize) -> Result<Outcome, Failure> {
    let sys = system(cli, file)?;
    let caps = EnumCaps {
        elements: max_elements,
        ..EnumCaps::default()
    };
    let table = sreg::enumerate_elements(&sys, caps)?;
    let axioms = sreg::check_axioms(&table);
    let embedding = sreg::check_embedding(&sys)?;
    let fact = sreg::fact_2_5_check(&sys)?;
    let j = sreg::compare_j_structure(sys.semigroup(), sys.green(), &table).map_err(|e| Failure::input(e.to_string()))?;
    let passed = axioms.is_empty() && embedding.is_empty() && fact.is_empty();
    let verdict = |ok: bool| if ok { "pass" } else { "fail" };
    let mut m = Map::new();
    m.insert("elements".into(), json!(table.len()));
    m.insert("authoritative".into(), json!(table.authoritative));
    m.insert("axioms".into(), json!(verdict(axioms.is_empty())));
    if !axioms.is_empty() {
        m.insert("axiom_violations".into(), serde_json::to_value(&axioms).expect("json"));
    }
    m.insert("embedding".into(), json!(verdict(embedding.is_empty())));
    if !embedding.is_empty() {
        m.insert("embedding_violations".into(), serde_json::to_value(&embedding).expect("json"));
    }
    m.insert("fact_2_5".into(), json!(verdict(fact.is_empty())));
    if !fact.is_empty() {
        m.insert("fact_2_5_violations".into(), serde_json::to_value(&fact).expect("json"));
    }
    m.insert("j_structure".into(), serde_json::to_value(&j).expect("json"));
    m.insert("table".into(), json!(table.export()));
    Ok(Outcome {
        report: Value::Object(m),
        code: if passed { 0 } else { EXIT_FAILED },
    })
}

// ---------------------------------------------------------------- human output

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        // short tuples such as class-map pairs
        Value::Array(items) if !items.is_empty() && items.iter().all(|i| matches!(i, Value::Number(_) | Value::String(_))) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("({})", parts.join(", ")))
        }
        _ => None,
    }
}

/// `key: value` lines, nested objects indented, lists of scalars on one line.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                if let Some(s) = scalar(val) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                    continue;
                }
                match val {
                    Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
                        let parts: Vec<String> = items.iter().filter_map(scalar).collect();
                        let joined = if parts.is_empty() { "none".to_owned() } else { parts.join("; ") };
                        out.push_str(&format!("{pad}{k}: {joined}\n"));
                    }
                    Value::Array(items) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render(item, indent + 4, out);
                        }
                    }
                    _ => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{s}\n")),
                    None => render(item, indent, out),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn human(cmd: &Command, report: &Value) -> String {
    let mut out = String::new();
    match cmd {
        Command::Reduce { .. } => {
            if let Some(Value::Array(steps)) = report.get("trace") {
                for s in steps {
                    out.push_str(&format!("{} @{}: {}\n", s["rule"].as_str().unwrap_or(""), s["position"], s["result"].as_str().unwrap_or("")));
                }
            }
            if report["authoritative"] == json!(false) {
                out.push_str("# authoritative: false\n");
            }
            out.push_str(report["normal_form"].as_str().unwrap_or(""));
            out.push('\n');
        }
        Command::Multiply { .. } => {
            if report["authoritative"] == json!(false) {
                out.push_str("# authoritative: false\n");
            }
            out.push_str(report["product"].as_str().unwrap_or(""));
            out.push('\n');
        }
        Command::Enumerate { .. } => {
            // Everything but the table goes out as comments so the whole output
            // loads as a Cayley table.
            let mut head = report.clone();
            let table = head.as_object_mut().and_then(|m| m.remove("table"));
            out.push_str(&format!("# |S_reg| = {}\n", report["elements"]));
            let mut body = String::new();
            render(&head, 0, &mut body);
            for line in body.lines() {
                out.push_str(&format!("# {line}\n"));
            }
            if let Some(Value::String(t)) = table {
                out.push_str(&t);
            }
        }
        _ => render(report, 0, &mut out),
    }
    out
}
