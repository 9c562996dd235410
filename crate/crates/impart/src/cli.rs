//! Command-line front end.
//!
//! Exit status: 0 when the computation finished (the verdict is in the
//! report), 2 for usage errors, 3 for unreadable or invalid input, 4 when a
//! size ceiling is exceeded, 1 if a witness fails re-validation.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use impart_core::imgp::p_of_g_k;
use impart_core::reductions::{identity_sides, mss_to_ikpsp, tmd4_to_large, ReductionOutput};
use impart_core::solvers::{ikpsp_decide, large_fpt, large_ikpsp_oracle, verify_answer, Answer};
use impart_core::{Graph, ParameterId, ProblemInstance};
use thiserror::Error;

use crate::format::{Format, FormatError};
use crate::gen::{generate, GenError, GenKind};
use crate::report::{IdentityReport, InstanceReport, ReductionReport, RunReport, TraceReport};

#[derive(Debug, Parser)]
#[command(
    name = "impart",
    version,
    about = "Induced k-partite subgraph parameters"
)]
struct Cli {
    /// Graph encoding for input and output
    #[arg(long, global = true, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock milliseconds in the report
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_param(s: &str) -> Result<ParameterId, String> {
    s.parse().map_err(|_| {
        let tags: Vec<_> = ParameterId::ALL.iter().map(|p| p.tag()).collect();
        format!(
            "unknown parameter `{s}` (expected one of: {})",
            tags.join(", ")
        )
    })
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file; standard input when absent or `-`
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Bounds {
    #[arg(long, value_parser = parse_param)]
    param: ParameterId,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one parameter
    Param {
        #[arg(value_parser = parse_param)]
        tag: ParameterId,
        #[command(flatten)]
        input: Input,
    },
    /// p(G, k): the largest parameter value over induced k-partite subgraphs
    Pk {
        #[arg(long, value_parser = parse_param)]
        param: ParameterId,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Decide p(G, k) <= ell
    Ikpsp {
        #[arg(long, value_parser = parse_param)]
        param: ParameterId,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Delete at most m vertices to reach a k-partite graph with parameter
    /// at most ell, by exhaustive search
    LargeOracle {
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        input: Input,
    },
    /// The same question by bounded search (independence_number, treewidth,
    /// pathwidth, order, size)
    LargeFpt {
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        input: Input,
    },
    /// Build a reduced instance
    Reduce {
        #[command(subcommand)]
        which: Reduction,
    },
    /// Compare p(K_k·G, k) with f_k(α(G))
    #[command(name = "verify-identity", alias = "verify-thm1")]
    VerifyIdentity {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_param)]
        param: ParameterId,
        #[command(flatten)]
        input: Input,
    },
    /// Generate a graph
    Gen {
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Debug, Subcommand)]
enum Reduction {
    /// Stable-set bound m to the instance (K_k·G, param, k, f_k(m))
    Lex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_param)]
        param: ParameterId,
        /// Also decide the produced instance
        #[arg(long)]
        solve: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Maximum-degree-4 graph to (G, param, 3, ell, 0)
    Tmd4 {
        #[arg(long, value_parser = parse_param)]
        param: ParameterId,
        #[arg(long)]
        solve: bool,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Ceiling(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Ceiling(_) => 4,
        }
    }
}

impl From<impart_core::Error> for CliError {
    fn from(e: impart_core::Error) -> Self {
        use impart_core::Error as E;
        match e {
            E::CeilingExceeded { .. } => CliError::Ceiling(e.to_string()),
            E::InvalidArgument(_) | E::UnsupportedParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        match e {
            GenError::Graph(inner) => inner.into(),
            GenError::Probability(_) => CliError::Usage(e.to_string()),
        }
    }
}

struct Session<'a> {
    format: Format,
    stdin: &'a mut dyn Read,
}

impl Session<'_> {
    fn read_graph(&mut self, input: &Input) -> Result<Graph, CliError> {
        let text = match input.file.as_deref() {
            Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
            _ => {
                let mut buf = String::new();
                self.stdin
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
                buf
            }
        };
        Ok(self.format.parse(&text)?)
    }
}

fn instance_report(
    graph: &Graph,
    param: ParameterId,
    k: Option<usize>,
    ell: Option<usize>,
    m: Option<usize>,
) -> InstanceReport {
    InstanceReport {
        param: Some(param.tag().to_string()),
        k,
        ell,
        m,
        ..InstanceReport::of(graph)
    }
}

/// Copies an answer into the report, re-checking any witness first.
fn record_answer(
    report: &mut RunReport,
    instance: &ProblemInstance,
    answer: &Answer,
) -> Result<(), CliError> {
    if answer.verdict && instance.m.is_some() && !verify_answer(instance, answer) {
        return Err(CliError::Internal(
            "solver returned a witness that failed re-validation".to_string(),
        ));
    }
    report.verdict = Some(answer.verdict);
    report.value = answer.value;
    report.witness = answer.witness.clone().map(|w| w.into_vec());
    report.trace = Some(TraceReport::from(&answer.trace));
    Ok(())
}

fn record_reduction(
    report: &mut RunReport,
    out: &ReductionOutput,
    format: Format,
    solve: bool,
) -> Result<(), CliError> {
    let i = &out.instance;
    report.instance = Some(instance_report(
        &i.graph,
        i.param,
        Some(i.k),
        Some(i.ell),
        i.m,
    ));
    report.reduction = Some(ReductionReport::from(out));
    report.graph = Some(format.emit(&out.produced));
    if solve {
        let answer = match i.m {
            Some(m) => large_ikpsp_oracle(&i.graph, i.param, i.k, i.ell, m)?,
            None => ikpsp_decide(&i.graph, i.param, i.k, i.ell)?,
        };
        record_answer(report, i, &answer)?;
    }
    Ok(())
}

/// Runs the command, returning `Ok(None)` when the output is a bare graph
/// rather than a report.
fn execute(
    cli: &Cli,
    session: &mut Session,
    report: &mut RunReport,
) -> Result<Option<String>, CliError> {
    match &cli.command {
        Command::Param { tag, input } => {
            let g = session.read_graph(input)?;
            report.instance = Some(instance_report(&g, *tag, None, None, None));
            report.value = Some(tag.evaluate(&g)?);
        }
        Command::Pk { param, k, input } => {
            let g = session.read_graph(input)?;
            report.instance = Some(instance_report(&g, *param, Some(*k), None, None));
            let (value, subset) = p_of_g_k(&g, *param, *k)?;
            report.value = Some(value);
            report.subset = Some(subset.into_vec());
        }
        Command::Ikpsp {
            param,
            k,
            ell,
            input,
        } => {
            let g = session.read_graph(input)?;
            report.instance = Some(instance_report(&g, *param, Some(*k), Some(*ell), None));
            let answer = ikpsp_decide(&g, *param, *k, *ell)?;
            let instance = ProblemInstance::ikpsp(g, *param, *k, *ell)?;
            record_answer(report, &instance, &answer)?;
        }
        Command::LargeOracle { bounds: b, input } | Command::LargeFpt { bounds: b, input } => {
            let g = session.read_graph(input)?;
            report.instance = Some(instance_report(
                &g,
                b.param,
                Some(b.k),
                Some(b.ell),
                Some(b.m),
            ));
            let answer = if matches!(cli.command, Command::LargeOracle { .. }) {
                large_ikpsp_oracle(&g, b.param, b.k, b.ell, b.m)?
            } else {
                large_fpt(&g, b.param, b.k, b.ell, b.m)?
            };
            let instance = ProblemInstance::large(g, b.param, b.k, b.ell, b.m)?;
            record_answer(report, &instance, &answer)?;
        }
        Command::Reduce { which } => match which {
            Reduction::Lex {
                k,
                m,
                param,
                solve,
                input,
            } => {
                let g = session.read_graph(input)?;
                let out = mss_to_ikpsp(&g, *m, *k, *param)?;
                record_reduction(report, &out, cli.format, *solve)?;
            }
            Reduction::Tmd4 {
                param,
                solve,
                input,
            } => {
                let g = session.read_graph(input)?;
                let out = tmd4_to_large(&g, *param)?;
                record_reduction(report, &out, cli.format, *solve)?;
            }
        },
        Command::VerifyIdentity { k, param, input } => {
            let g = session.read_graph(input)?;
            report.instance = Some(instance_report(&g, *param, Some(*k), None, None));
            let (lhs, rhs) = identity_sides(&g, *k, *param)?;
            report.verdict = Some(lhs == rhs);
            report.identity = Some(IdentityReport {
                lhs,
                rhs,
                holds: lhs == rhs,
            });
        }
        Command::Gen { seed, kind } => {
            let g = generate(kind, *seed)?;
            let text = cli.format.emit(&g);
            if !cli.json {
                return Ok(Some(text));
            }
            report.instance = Some(InstanceReport::of(&g));
            report.graph = Some(text);
        }
    }
    Ok(None)
}

/// Parses `args` (program name first), runs the command and writes the
/// result. Returns the process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if benign { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if benign { 0 } else { 2 };
        }
    };
    let command = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy())
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = RunReport::new(command);
    let mut session = Session {
        format: cli.format,
        stdin,
    };
    let start = Instant::now();
    let outcome = execute(&cli, &mut session, &mut report);
    if cli.timing {
        report.wall_ms = Some(start.elapsed().as_millis() as u64);
    }
    let written = match outcome {
        Ok(Some(bare)) => stdout.write_all(bare.as_bytes()),
        Ok(None) if cli.json => stdout.write_all(report.to_json().as_bytes()),
        Ok(None) => write!(stdout, "{report}"),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.code();
        }
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: writing output: {e}");
            1
        }
    }
}
