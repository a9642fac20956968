//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation or
//! evaluation error, 3 inconsistent knowledge (an `inconsistent`
//! proposition for `eval`/`run`, a potential conflict for `check`).

pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dsl::{parse_atom, parse_kb, parse_scenario_spanned, ScenarioStep};
use crate::engine::{evaluate, justify, BeliefTable, RevisionDelta, Session};
use crate::knowledge::{build_kb, validate, Atom, DiagnosticKind, KnowledgeBase};
use crate::ordering::{more_probable_than, Comparator, OrderingError};
use report::{tsv, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qbelief", about = "Qualitative belief evaluation and revision", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum, Default)]
enum ComparatorArg {
    #[default]
    Qualitative,
    Likelihood,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a knowledge base under its declared facts.
    Eval {
        kb: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a scenario against a knowledge base.
    Run {
        kb: PathBuf,
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write a full JSON trace of the run to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Lint a knowledge base.
    Check {
        kb: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print whether p is more, less or equally probable than q.
    Compare {
        kb: PathBuf,
        p: String,
        q: String,
        #[arg(long, value_enum, default_value_t)]
        comparator: ComparatorArg,
    },
    /// Print the justification tree for one proposition.
    Trace { kb: PathBuf, p: String },
}

/// An error already rendered for the error stream, with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Eval { kb, format } => cmd_eval(&kb, format, out, err),
        Command::Run { kb, scenario, format, trace } => {
            cmd_run(&kb, &scenario, format, trace.as_deref(), out, err)
        }
        Command::Check { kb, format } => cmd_check(&kb, format, out, err),
        Command::Compare { kb, p, q, comparator } => cmd_compare(&kb, &p, &q, comparator, out),
        Command::Trace { kb, p } => cmd_trace(&kb, &p, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure::new(EXIT_USAGE, format!("error: cannot write output: {e}"))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: cannot read: {e}", path.display())))
}

fn load_kb(path: &Path) -> Result<KnowledgeBase, Failure> {
    let text = read(path)?;
    let decls = parse_kb(&text)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}:{}: {}", path.display(), e.span, e.kind)))?;
    build_kb(&decls).map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))
}

/// Loads and refuses knowledge bases with error diagnostics.
fn load_valid_kb(path: &Path) -> Result<KnowledgeBase, Failure> {
    let kb = load_kb(path)?;
    let errors: Vec<String> = validate(&kb)
        .into_iter()
        .filter(|d| d.is_error())
        .map(|d| format!("{}: {d}", path.display()))
        .collect();
    if errors.is_empty() {
        Ok(kb)
    } else {
        Err(Failure::new(EXIT_INVALID, errors.join("\n")))
    }
}

fn parse_atom_arg(text: &str) -> Result<Atom, Failure> {
    parse_atom(text).map_err(|e| Failure::new(EXIT_USAGE, format!("invalid atom `{text}`: {}", e.kind)))
}

/// Reports inconsistent propositions on the error stream.
fn inconsistency_exit(path: &Path, table: &BeliefTable, err: &mut dyn Write) -> i32 {
    let mut code = EXIT_OK;
    for s in table.inconsistent() {
        let summary = s.conflict.as_ref().map(|c| c.summary.as_str()).unwrap_or("");
        let _ = writeln!(err, "{}: `{}` is inconsistent: {summary}", path.display(), s.proposition);
        code = EXIT_INCONSISTENT;
    }
    code
}

fn cmd_eval(path: &Path, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let kb = load_valid_kb(path)?;
    let table = evaluate(&kb, &kb.facts, &[])
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    let text = match format {
        Format::Table => tsv(table.iter()),
        Format::Json => Report::of_table(&table).to_json_pretty(),
    };
    out.write_all(text.as_bytes()).map_err(io_fail)?;
    Ok(inconsistency_exit(path, &table, err))
}

fn cmd_run(
    kb_path: &Path,
    sc_path: &Path,
    format: Format,
    trace: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let kb = load_valid_kb(kb_path)?;
    let text = read(sc_path)?;
    let steps = parse_scenario_spanned(&text)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}:{}: {}", sc_path.display(), e.span, e.kind)))?;
    let mut session =
        Session::new(&kb).map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", kb_path.display())))?;

    let mut deltas: Vec<RevisionDelta> = Vec::new();
    for (n, (step, span)) in steps.iter().enumerate() {
        let delta = session.step(step).map_err(|e| {
            Failure::new(EXIT_INVALID, format!("{}:{span}: step {}: {e}", sc_path.display(), n + 1))
        })?;
        deltas.push(delta);
        let table = session.table();
        let fragment: Vec<_> = match step {
            ScenarioStep::Query(atom) => table.get(atom).into_iter().collect(),
            ScenarioStep::Snapshot => table.iter().collect(),
            _ => continue,
        };
        let text = match format {
            Format::Table => {
                let heading = match step {
                    ScenarioStep::Query(atom) => format!("# step {}: query {atom}\n", n + 1),
                    _ => format!("# step {}: snapshot\n", n + 1),
                };
                heading + &tsv(fragment)
            }
            Format::Json => {
                Report { facts: session.facts(), beliefs: fragment, deltas: &deltas, diagnostics: &[] }
                    .to_json_line()
            }
        };
        out.write_all(text.as_bytes()).map_err(io_fail)?;
    }

    if let Some(trace_path) = trace {
        let diagnostics = validate(&kb);
        let report = Report {
            facts: session.facts(),
            beliefs: session.table().iter().collect(),
            deltas: &deltas,
            diagnostics: &diagnostics,
        };
        std::fs::write(trace_path, report.to_json_pretty()).map_err(|e| {
            Failure::new(EXIT_USAGE, format!("{}: cannot write trace: {e}", trace_path.display()))
        })?;
    }
    Ok(inconsistency_exit(sc_path, session.table(), err))
}

fn cmd_check(path: &Path, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let kb = load_kb(path)?;
    let diagnostics = validate(&kb);
    let text = match format {
        Format::Table => diagnostics.iter().map(|d| format!("{d}\n")).collect::<String>(),
        Format::Json => {
            Report { facts: &kb.facts, beliefs: Vec::new(), deltas: &[], diagnostics: &diagnostics }
                .to_json_pretty()
        }
    };
    out.write_all(text.as_bytes()).map_err(io_fail)?;

    let errors = diagnostics.iter().filter(|d| d.is_error()).count();
    let conflicts = diagnostics.iter().filter(|d| d.kind == DiagnosticKind::PotentialConflict).count();
    if errors > 0 {
        let _ = writeln!(err, "{}: {errors} error(s)", path.display());
        Ok(EXIT_INVALID)
    } else if conflicts > 0 {
        let _ = writeln!(err, "{}: {conflicts} potential conflict(s)", path.display());
        Ok(EXIT_INCONSISTENT)
    } else {
        Ok(EXIT_OK)
    }
}

fn cmd_compare(
    path: &Path,
    p: &str,
    q: &str,
    comparator: ComparatorArg,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let kb = load_valid_kb(path)?;
    let p = parse_atom_arg(p)?;
    let q = parse_atom_arg(q)?;
    let table = evaluate(&kb, &kb.facts, &[])
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    let comparator = match comparator {
        ComparatorArg::Qualitative => Comparator::Qualitative,
        ComparatorArg::Likelihood => Comparator::Likelihood,
    };
    match more_probable_than(&table, &p, &q, comparator) {
        Ok(r) => {
            writeln!(out, "{r}").map_err(io_fail)?;
            Ok(EXIT_OK)
        }
        Err(e @ OrderingError::InconsistentOperand(_)) => {
            Err(Failure::new(EXIT_INCONSISTENT, format!("{}: {e}", path.display())))
        }
        Err(e) => Err(Failure::new(EXIT_INVALID, format!("{}: {e}", path.display()))),
    }
}

fn cmd_trace(path: &Path, p: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let kb = load_valid_kb(path)?;
    let p = parse_atom_arg(p)?;
    let table = evaluate(&kb, &kb.facts, &[])
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    let tree =
        justify(&table, &p).map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    write!(out, "{tree}").map_err(io_fail)?;
    Ok(EXIT_OK)
}
