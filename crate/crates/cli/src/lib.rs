//! The `refmon` command line: parsers, builders and checkers behind one binary, and a
//! batch runner for manifests of expected verdicts.
//!
//! Exit codes: 0 when every verdict Holds, 1 on any Fails (or any suite mismatch), 2 when
//! some verdict is Unknown and none Fails, 3 on usage, parse or input errors.

pub mod check;
pub mod convert;
pub mod error;
pub mod output;
pub mod query;
pub mod subject;
pub mod suite;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use refmon_core::SearchBound;
use refmon_primitive::presentation_of;
use refmon_wild::OIdealId;

pub use error::CliError;
pub use output::{exit_code, render_json, render_text, Answer, Body, Outcome};
pub use subject::{resolve, Subject};

use crate::convert::{graph_presentation, read_file, tilde_file, Parsed};
use crate::query::WildOp;

pub const ERROR_EXIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "refmon",
    version,
    about = "Workbench for finitely presented commutative monoids"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BoundArgs {
    /// Largest total degree of enumerated words and quantified elements.
    #[arg(long, default_value_t = SearchBound::DEFAULT.max_degree)]
    pub max_degree: u64,
    /// Largest multiplier or coefficient tried.
    #[arg(long = "max-coeff", default_value_t = SearchBound::DEFAULT.max_coefficient)]
    pub max_coeff: u64,
    /// Largest number of words collected for one congruence class.
    #[arg(long, default_value_t = SearchBound::DEFAULT.max_class_size)]
    pub max_class_size: usize,
}

impl BoundArgs {
    pub fn bound(&self) -> Result<SearchBound, CliError> {
        if self.max_coeff == 0 || self.max_class_size == 0 {
            return Err(CliError::Usage(
                "--max-coeff and --max-class-size must be positive".to_string(),
            ));
        }
        Ok(SearchBound::new(
            self.max_degree,
            self.max_class_size,
            self.max_coeff,
        ))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a presentation, graph or poset file and print it in canonical form.
    Parse { file: String },
    /// Decide u = v.
    Eq {
        monoid: String,
        u: String,
        v: String,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Decide u <= v in the algebraic order.
    Leq {
        monoid: String,
        u: String,
        v: String,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Find a refinement of a + b = c + d.
    Refine {
        monoid: String,
        a: String,
        b: String,
        c: String,
        d: String,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Check properties; ids are comma-separated, `all`, WILD, TAME_EVIDENCE or FURTHER_TAME.
    Check {
        monoid: String,
        #[arg(long, default_value = "all")]
        prop: String,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Emit the presentation of the graph monoid of a graph file.
    GraphMonoid {
        file: String,
        /// Use the triple presentation with the complete set of killed members and
        /// subsets of at most K members.
        #[arg(long, value_name = "K")]
        zcap: Option<usize>,
        /// Present the row-finite graph built from the emitters instead.
        #[arg(long)]
        tilde: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the graph file of the row-finite graph built from the emitters.
    Tilde {
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the presentation of the primitive monoid of a poset file.
    Poset {
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact arithmetic in M and Mbar; barred generators select Mbar.
    Wild {
        #[command(subcommand)]
        op: WildCommand,
    },
    /// Run a manifest of cases with expected verdicts.
    Suite {
        manifest: String,
        /// Write the JSON report here and the text summary beside it.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WildCommand {
    Eq {
        a: String,
        b: String,
    },
    Leq {
        a: String,
        b: String,
    },
    Add {
        #[arg(required = true)]
        terms: Vec<String>,
    },
    Normal {
        term: String,
    },
    Refine {
        a: String,
        b: String,
        c: String,
        d: String,
    },
    /// Membership in J1, J2, J2bar or Zz0bar.
    Member {
        term: String,
        ideal: OIdealId,
    },
    /// Congruence modulo J1, J2, J2bar or Zz0bar.
    Cong {
        a: String,
        b: String,
        ideal: OIdealId,
    },
    /// The quotient map from M to Mbar.
    Q {
        term: String,
    },
}

impl WildCommand {
    fn op(&self) -> WildOp {
        match self {
            WildCommand::Eq { a, b } => WildOp::Eq(a.clone(), b.clone()),
            WildCommand::Leq { a, b } => WildOp::Leq(a.clone(), b.clone()),
            WildCommand::Add { terms } => WildOp::Add(terms.clone()),
            WildCommand::Normal { term } => WildOp::Normal(term.clone()),
            WildCommand::Refine { a, b, c, d } => {
                WildOp::Refine([a.clone(), b.clone(), c.clone(), d.clone()])
            }
            WildCommand::Member { term, ideal } => WildOp::Member(term.clone(), *ideal),
            WildCommand::Cong { a, b, ideal } => WildOp::Cong(a.clone(), b.clone(), *ideal),
            WildCommand::Q { term } => WildOp::Q(term.clone()),
        }
    }
}

fn emit(out: &Option<PathBuf>, outcome: Outcome) -> Result<Outcome, CliError> {
    if let (Some(path), Body::Document(d)) = (out, &outcome.body) {
        fs::write(path, &d.text).map_err(|e| CliError::File {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok(outcome)
}

fn graph_file(path: &str) -> Result<refmon_graph::GraphFile, CliError> {
    match read_file(path)? {
        Parsed::Graph(g) => Ok(g),
        other => Err(CliError::File {
            path: path.to_string(),
            message: format!("expected a graph file, found a {} file", other.kind()),
        }),
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Parse { file } => {
            let parsed = read_file(file)?;
            Ok(Outcome::document(
                parsed.kind(),
                parsed.name(),
                parsed.to_text(),
            ))
        }
        Command::Eq {
            monoid,
            u,
            v,
            bound,
        } => Ok(Outcome::answer(query::eq(
            &resolve(monoid)?,
            u,
            v,
            &bound.bound()?,
        )?)),
        Command::Leq {
            monoid,
            u,
            v,
            bound,
        } => Ok(Outcome::answer(query::leq(
            &resolve(monoid)?,
            u,
            v,
            &bound.bound()?,
        )?)),
        Command::Refine {
            monoid,
            a,
            b,
            c,
            d,
            bound,
        } => {
            let s = resolve(monoid)?;
            Ok(Outcome::answer(query::refine(
                &s,
                [a, b, c, d],
                &bound.bound()?,
            )?))
        }
        Command::Check {
            monoid,
            prop,
            bound,
        } => {
            let checks = check::parse_checks(prop)?;
            Ok(check::check(&resolve(monoid)?, &checks, &bound.bound()?))
        }
        Command::GraphMonoid {
            file,
            zcap,
            tilde,
            out,
        } => {
            let p = graph_presentation(&graph_file(file)?, *zcap, *tilde)?;
            emit(out, Outcome::document("monoid", &p.name, p.to_text()))
        }
        Command::Tilde { file, out } => {
            let t = tilde_file(&graph_file(file)?)?;
            let name = t.graph().name.clone();
            emit(
                out,
                Outcome::document("graph", &name, refmon_graph::graph_to_text(&t)),
            )
        }
        Command::Poset { file, out } => match read_file(file)? {
            Parsed::Poset(p) => {
                let pres = presentation_of(&p);
                emit(out, Outcome::document("monoid", &pres.name, pres.to_text()))
            }
            other => Err(CliError::File {
                path: file.clone(),
                message: format!("expected a poset file, found a {} file", other.kind()),
            }),
        },
        Command::Wild { op } => Ok(Outcome::answer(query::wild(&op.op())?)),
        Command::Suite { manifest, report } => {
            let text = fs::read_to_string(manifest).map_err(|e| CliError::File {
                path: manifest.clone(),
                message: e.to_string(),
            })?;
            let m = suite::parse_manifest(manifest, &text)?;
            let outcome = suite::run_suite(&m, run_args);
            if let (Some(path), Body::Suite(r)) = (report, &outcome.body) {
                suite::write_report(r, path)?;
            }
            Ok(outcome)
        }
    }
}

/// Runs the arguments that follow `refmon`.
pub fn run_args(args: &[String]) -> Result<Outcome, CliError> {
    let argv = std::iter::once("refmon".to_string()).chain(args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    run(&cli.command)
}

/// What the binary prints and its exit code.
#[derive(Debug, Clone)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Execution {
                        code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Execution {
                    code: ERROR_EXIT,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let written = match &cli.command {
        Command::GraphMonoid { out, .. }
        | Command::Tilde { out, .. }
        | Command::Poset { out, .. } => out.is_some(),
        _ => false,
    };
    match run(&cli.command) {
        Ok(o) => {
            let stdout = match (written, cli.format) {
                (true, _) => String::new(),
                (false, Format::Text) => render_text(&o),
                (false, Format::Json) => render_json(&o),
            };
            Execution {
                code: exit_code(o.verdict),
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Execution {
            code: ERROR_EXIT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
