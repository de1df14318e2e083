//! Command line front end: reads generators from a JSON document or a named
//! fixture, computes the Zariski closure and reports it.

pub mod document;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use document::{
    input_document, output_document, parse_field, parse_generators, parse_matrix, ElementDocument, FailureDocument,
    InputDocument, MembershipDocument, OutputDocument, ParseError,
};
use zariski_core::{fixtures, member, zariski_closure, ClosureConfig, Error, Field, QQ};

pub use zariski_core::fixtures::NAMES as FIXTURES;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "zariski", version, about = "Zariski closures of finitely generated matrix groups")]
pub struct Cli {
    #[command(flatten)]
    pub source: Source,
    /// Print JSON instead of a table.
    #[arg(long, env = "ZARISKI_JSON")]
    pub json: bool,
    #[arg(long, default_value_t = 64, env = "ZARISKI_MAX_FIELD_DEGREE")]
    pub max_field_degree: usize,
    #[arg(long, default_value_t = 20, env = "ZARISKI_MAX_BFS_LENGTH")]
    pub max_bfs_length: usize,
    /// Wall clock budget in seconds; unlimited when absent.
    #[arg(long, env = "ZARISKI_TIME_BUDGET")]
    pub time_budget: Option<f64>,
    /// Seed for the Cartan subalgebra search.
    #[arg(long, default_value_t = 0, env = "ZARISKI_SEED")]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Input document with the generators.
    #[arg(long, env = "ZARISKI_INPUT")]
    pub input: Option<PathBuf>,
    /// Built-in generator set: g2, a3 or b2.
    #[arg(long, env = "ZARISKI_FIXTURE")]
    pub fixture: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a matrix lies in the closure.
    Member {
        /// Document of the form {"matrix": [[...]]} over the input field.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Print the input document of the selected generators.
    Export,
}

/// What to print and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn parse_error(e: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

impl Cli {
    pub fn config(&self) -> Result<ClosureConfig, ParseError> {
        let time_budget = match self.time_budget {
            Some(s) if !(s.is_finite() && s >= 0.0) => return Err(ParseError(format!("invalid time budget {s}"))),
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(ClosureConfig {
            max_field_degree: self.max_field_degree,
            max_bfs_length: self.max_bfs_length,
            time_budget,
            seed: self.seed,
            ..ClosureConfig::default()
        })
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| ParseError(format!("{}: {e}", path.display())))
}

fn load_input(source: &Source) -> Result<InputDocument, ParseError> {
    match (&source.input, &source.fixture) {
        (Some(p), _) => read_json(p),
        (None, Some(name)) => fixtures::by_name(name)
            .map(|g| input_document(&g))
            .ok_or_else(|| ParseError(format!("unknown fixture {name:?}; known: {}", FIXTURES.join(", ")))),
        (None, None) => Err(ParseError("one of --input or --fixture is required".into())),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_exhaustion() => EXIT_BUDGET,
        Error::Singular | Error::DimensionMismatch(_) => EXIT_PARSE,
        _ => EXIT_INVARIANT,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let doc = match load_input(&cli.source) {
        Ok(d) => d,
        Err(e) => return Outcome::parse_error(e),
    };
    if let Some(Command::Export) = cli.command {
        return Outcome { code: EXIT_OK, stdout: pretty(&doc), stderr: String::new() };
    }
    let config = match cli.config() {
        Ok(c) => c,
        Err(e) => return Outcome::parse_error(e),
    };
    match &doc.field {
        None => execute(cli, &QQ, &doc, &config),
        Some(coeffs) => match parse_field(coeffs) {
            Ok(k) => execute(cli, &k, &doc, &config),
            Err(e) => Outcome::parse_error(e),
        },
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

fn execute<F: Field>(cli: &Cli, field: &F, doc: &InputDocument, config: &ClosureConfig) -> Outcome {
    let gens = match parse_generators(field, &doc.generators) {
        Ok(g) => g,
        Err(e) => return Outcome::parse_error(e),
    };
    let element = match &cli.command {
        Some(Command::Member { matrix }) => {
            let m = read_json::<ElementDocument>(matrix).and_then(|d| parse_matrix(field, &d.matrix));
            match m {
                Ok(m) if m.rows() != gens[0].rows() => {
                    return Outcome::parse_error(format!("element is {0}x{0}, generators are {1}x{1}", m.rows(), gens[0].rows()))
                }
                Ok(m) if !m.is_invertible() => return Outcome::parse_error("element is singular"),
                Ok(m) => Some(m),
                Err(e) => return Outcome::parse_error(e),
            }
        }
        _ => None,
    };
    let mut out = Outcome::default();
    let (group, trace) = match zariski_closure(field, gens[0].rows(), &gens, config) {
        Ok(r) => r,
        Err(f) => {
            out.code = exit_code(&f.error);
            let fail = FailureDocument { error: f.error.to_string(), trace: (&f.trace).into() };
            out.stderr = format!("error: {}\n", f.error);
            out.stdout = if cli.json { pretty(&fail) } else { trace_table(&fail.trace) };
            return out;
        }
    };
    if !group.certified {
        out.stderr.push_str(
            "warning: a multiplicative relation lattice could not be certified complete; \
             the Lie algebra may be too large\n",
        );
    }
    let result = output_document(doc.field.clone(), &group, &trace);
    match element {
        None => {
            out.stdout = if cli.json { pretty(&result) } else { table(&result) };
        }
        Some(g) => match member(&group, &g, config) {
            Ok(v) => {
                let m = MembershipDocument { member: v.member, component_index: v.component_index };
                out.stdout = if cli.json {
                    pretty(&m)
                } else {
                    match m.component_index {
                        Some(i) => format!("member: yes (component {i} of {})\n", result.component_count),
                        None => "member: no\n".to_string(),
                    }
                };
            }
            Err(e) => {
                out.code = exit_code(&e);
                out.stderr.push_str(&format!("error: {e}\n"));
            }
        },
    }
    out
}

fn table(doc: &OutputDocument) -> String {
    let mut s = String::new();
    let field = match &doc.field {
        None => "Q".to_string(),
        Some(c) => format!("Q[x]/({})", poly_string(c)),
    };
    let _ = writeln!(s, "{:<20}{}", "field", field);
    let _ = writeln!(s, "{:<20}{}", "n", doc.n);
    let _ = writeln!(s, "{:<20}{}", "lie dimension", doc.lie_dim);
    let _ = writeln!(s, "{:<20}{}", "components", doc.component_count);
    let _ = writeln!(s, "{:<20}{}", "certified", if doc.certified { "yes" } else { "no" });
    s.push_str(&trace_table(&doc.trace));
    s
}

fn trace_table(t: &document::TraceDocument) -> String {
    let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    let _ = writeln!(s, "{:<20}{}", "rounds", t.rounds);
    let _ = writeln!(s, "{:<20}{}", "dim history", list(&t.dim_history));
    let _ = writeln!(s, "{:<20}{}", "bfs lengths", list(&t.bfs_lengths));
    let _ = writeln!(s, "{:<20}{} ({:.3}s, max degree {})", "relation calls", t.multrel_calls, t.multrel_seconds, t.multrel_max_degree);
    let _ = writeln!(s, "{:<20}{} ({:.3}s)", "membership calls", t.membership_calls, t.membership_seconds);
    let _ = writeln!(s, "{:<20}{}", "torus max degree", t.torus_max_degree);
    let _ = writeln!(s, "{:<20}{:.3}s", "total time", t.total_seconds);
    s
}

fn poly_string(c: &[i64]) -> String {
    let mut terms = Vec::new();
    for (i, &a) in c.iter().enumerate().rev() {
        if a == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let coef = if i > 0 && a == 1 { String::new() } else if i > 0 && a == -1 { "-".into() } else { a.to_string() };
        terms.push(format!("{coef}{mono}"));
    }
    terms.join(" + ").replace("+ -", "- ")
}
