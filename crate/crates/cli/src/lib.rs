//! The `supertab` command line.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the exit code with captured stdout and stderr, so the binary is a thin
//! wrapper and tests can drive every verb in-process.
//!
//! Exit codes: 0 success, 1 a verification report came back not ok, 2 bad
//! arguments, 3 the enumeration node cap was hit.

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use supertab::branching::{branch, chains, dimension};
use supertab::lr::verify_branch_multiplicities;
use supertab::tableaux::{render, TableauSearch};
use supertab::verify::{
    kostka_table_with_limit, verify_borel_independence, verify_howe_dimension,
};
use supertab::{BorelSequence, Content, Error, Format, Letter, Partition, Tableau};

pub const MAX_NODES_VAR: &str = "SUPERTAB_MAX_NODES";
pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub max_nodes: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_nodes: DEFAULT_MAX_NODES }
    }
}

#[derive(Parser, Debug)]
#[command(name = "supertab", version, about = "Branching rules and b-semistandard tableaux for gl(m|n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the b-semistandard tableaux of shape λ
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Content filter, unbarred:barred counts, e.g. 2,2:2
        #[arg(long)]
        content: Option<String>,
        /// Print at most this many tableaux
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// One-step branching to gl(m̂|n̂)
    Branch {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Gelfand-Tsetlin chains
    Chains {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Dimension of L(b, λ^b)
    Dim {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Super Kostka number for one content, or the whole table
    Kostka {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        content: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check that Kostka tables agree across every Borel of gl(m|n)
    VerifyIndependence {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check branching multiplicities against Littlewood-Richardson sums
    VerifyBranching {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check the degree-d Howe duality dimension count
    VerifyHowe {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// Defaults to the standard Borel
        #[arg(long)]
        borel: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Render a tableau given as rows, e.g. 1,1,1/2,2/1b
    Render {
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Word over {d, e}; defaults to the standard Borel d^m e^n
    #[arg(long)]
    borel: Option<String>,
    /// Comma-separated parts; empty for the empty partition
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

struct Shape {
    b: BorelSequence,
    lambda: Partition,
}

type Step<T> = std::result::Result<T, Outcome>;

fn parse_format(s: &str) -> Step<Format> {
    s.parse().map_err(|e: String| Outcome::usage(format!("--format: {e}")))
}

fn parse_borel(s: Option<&str>, m: usize, n: usize) -> Step<BorelSequence> {
    let Some(s) = s else {
        return Ok(BorelSequence::standard(m, n));
    };
    let b: BorelSequence = s
        .parse()
        .map_err(|_| Outcome::usage(format!("--borel: {s:?} may only contain 'd' and 'e'")))?;
    if (b.m(), b.n()) != (m, n) {
        return Err(Outcome::usage(format!(
            "--borel: {s:?} has {} 'd' and {} 'e', expected {m} and {n}",
            b.m(),
            b.n()
        )));
    }
    Ok(b)
}

fn parse_lambda(s: &str) -> Step<Partition> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Outcome::usage(format!("--lambda: {e}")))?
    };
    Partition::new(parts).map_err(|e| Outcome::usage(format!("--lambda: {e}")))
}

fn parse_content(s: &str, m: usize, n: usize) -> Step<Content> {
    let c: Content = s.parse().map_err(|e: String| Outcome::usage(format!("--content: {e}")))?;
    if c.unbarred.len() != m || c.barred.len() != n {
        return Err(Outcome::usage(format!(
            "--content: {s:?} has {} unbarred and {} barred counts, expected {m} and {n}",
            c.unbarred.len(),
            c.barred.len()
        )));
    }
    Ok(c)
}

fn parse_tableau(s: &str, m: Option<usize>, n: Option<usize>) -> Step<Tableau> {
    let bad = |e: String| Outcome::usage(format!("--tableau: {e}"));
    let rows = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split('/')
            .map(|row| {
                row.split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| x.trim().parse::<Letter>().map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(bad)?
    };
    let t = Tableau::new(rows).map_err(|e| bad(e.to_string()))?;
    if let (Some(m), Some(n)) = (m, n) {
        t.content(m, n).map_err(|e| bad(e.to_string()))?;
    }
    Ok(t)
}

fn resolve(shape: &ShapeArgs) -> Step<Shape> {
    let b = parse_borel(shape.borel.as_deref(), shape.m, shape.n)?;
    let lambda = parse_lambda(&shape.lambda)?;
    if !lambda.is_hook(shape.m, shape.n) {
        return Err(Outcome::usage(format!(
            "--lambda: {lambda} is not a ({}|{})-hook partition",
            shape.m, shape.n
        )));
    }
    Ok(Shape { b, lambda })
}

fn library_error(e: Error) -> Outcome {
    match e {
        Error::NodeLimit(cap) => Outcome {
            code: 3,
            stdout: String::new(),
            stderr: format!("error: search exceeded {cap} nodes (raise {MAX_NODES_VAR})\n"),
        },
        other => Outcome::usage(other.to_string()),
    }
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn report(ok: bool, stdout: String) -> Outcome {
    Outcome { code: if ok { 0 } else { 1 }, stdout, stderr: String::new() }
}

fn truncation_note(shown: usize, total: usize, what: &str) -> String {
    if shown < total {
        format!("showing {shown} of {total} {what}\n")
    } else {
        String::new()
    }
}

/// Reads [`MAX_NODES_VAR`] from the environment and runs `argv`.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match std::env::var(MAX_NODES_VAR) {
        Err(_) => Config::default(),
        Ok(v) => match v.trim().parse() {
            Ok(max_nodes) => Config { max_nodes },
            Err(_) => return Outcome::usage(format!("{MAX_NODES_VAR}: {v:?} is not a count")),
        },
    };
    run_with_config(argv, config)
}

pub fn run_with_config<I, T>(argv: I, config: Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let rendered = e.to_string();
                    let line = rendered.lines().next().unwrap_or("invalid arguments");
                    Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("{line}\n"),
                    }
                }
            };
        }
    };
    match execute(cli.command, config) {
        Ok(outcome) | Err(outcome) => outcome,
    }
}

fn execute(command: Command, config: Config) -> Step<Outcome> {
    let cap = Some(config.max_nodes);
    match command {
        Command::Enumerate { shape, content, limit, format } => {
            let format = parse_format(&format)?;
            let Shape { b, lambda } = resolve(&shape)?;
            let content = content.map(|c| parse_content(&c, shape.m, shape.n)).transpose()?;
            let all = TableauSearch::new(&b, &lambda)
                .content(content.as_ref())
                .max_nodes(cap)
                .collect()
                .map_err(library_error)?;
            let shown = &all[..limit.unwrap_or(all.len()).min(all.len())];
            let stdout = match format {
                Format::Json => json(&shown),
                Format::Latex => shown.iter().map(|t| render(t, Format::Latex) + "\n").collect(),
                Format::Text => shown
                    .iter()
                    .map(|t| render(t, Format::Text) + "\n")
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            let mut out = Outcome::ok(stdout);
            out.stderr = truncation_note(shown.len(), all.len(), "tableaux");
            Ok(out)
        }
        Command::Branch { shape, format } => {
            let format = parse_format(&format)?;
            let Shape { b, lambda } = resolve(&shape)?;
            let sigmas = branch(&b, &lambda).map_err(library_error)?;
            Ok(Outcome::ok(match format {
                Format::Json => json(&sigmas),
                _ => sigmas.iter().map(|s| format!("{s}\n")).collect(),
            }))
        }
        Command::Chains { shape, limit, format } => {
            let format = parse_format(&format)?;
            let Shape { b, lambda } = resolve(&shape)?;
            let count = dimension(&b, &lambda).map_err(library_error)?;
            if count > BigUint::from(config.max_nodes) {
                return Err(library_error(Error::NodeLimit(config.max_nodes)));
            }
            let all = chains(&b, &lambda).map_err(library_error)?;
            let shown = &all[..limit.unwrap_or(all.len()).min(all.len())];
            let mut out = Outcome::ok(match format {
                Format::Json => json(&shown),
                _ => shown.iter().map(|c| format!("{c}\n")).collect(),
            });
            out.stderr = truncation_note(shown.len(), all.len(), "chains");
            Ok(out)
        }
        Command::Dim { shape, format } => {
            let format = parse_format(&format)?;
            let Shape { b, lambda } = resolve(&shape)?;
            let d = dimension(&b, &lambda).map_err(library_error)?;
            Ok(Outcome::ok(match format {
                Format::Json => json(&serde_json::json!({ "dimension": d.to_string() })),
                _ => format!("{d}\n"),
            }))
        }
        Command::Kostka { shape, content, format } => {
            let format = parse_format(&format)?;
            let Shape { b, lambda } = resolve(&shape)?;
            match content {
                Some(c) => {
                    let c = parse_content(&c, shape.m, shape.n)?;
                    let count = TableauSearch::new(&b, &lambda)
                        .content(Some(&c))
                        .max_nodes(cap)
                        .count()
                        .map_err(library_error)?;
                    Ok(Outcome::ok(match format {
                        Format::Json => json(&serde_json::json!({ "count": count })),
                        _ => format!("{count}\n"),
                    }))
                }
                None => {
                    let table = kostka_table_with_limit(&b, &lambda, cap).map_err(library_error)?;
                    Ok(Outcome::ok(match format {
                        Format::Json => json(&serde_json::json!({ "table": table, "total": table.total() })),
                        _ => {
                            let mut s = String::new();
                            for (c, count) in &table.entries {
                                writeln!(s, "{} {count}", c.code()).unwrap();
                            }
                            s
                        }
                    }))
                }
            }
        }
        Command::VerifyIndependence { m, n, lambda, format } => {
            let format = parse_format(&format)?;
            let lambda = parse_lambda(&lambda)?;
            if !lambda.is_hook(m, n) {
                return Err(Outcome::usage(format!("--lambda: {lambda} is not a ({m}|{n})-hook partition")));
            }
            let r = verify_borel_independence(m, n, &lambda).map_err(library_error)?;
            let stdout = match format {
                Format::Json => json(&r),
                _ => match &r.difference {
                    None => format!(
                        "ok: {} contents, {} tableaux, identical across {} Borels\n",
                        r.table.entries.len(),
                        r.table.total(),
                        r.borels.len()
                    ),
                    Some(d) => format!(
                        "FAIL: content {} has {} tableaux for {} but {} for {}\n",
                        d.content.code(),
                        d.count,
                        d.borel,
                        d.other_count,
                        d.other
                    ),
                },
            };
            Ok(report(r.ok, stdout))
        }
        Command::VerifyBranching { shape, format } => {
            let format = parse_format(&format)?;
            let Shape { b, lambda } = resolve(&shape)?;
            let r = verify_branch_multiplicities(&b, &lambda).map_err(library_error)?;
            let stdout = match format {
                Format::Json => json(&r),
                _ if r.ok => format!("ok: {} summands, each with multiplicity 1\n", r.terms.len()),
                _ => r
                    .mismatches
                    .iter()
                    .map(|x| format!("FAIL: sigma={} expected {} got {}\n", x.sigma, x.expected, x.got))
                    .collect(),
            };
            Ok(report(r.ok, stdout))
        }
        Command::VerifyHowe { m, n, k, d, borel, format } => {
            let format = parse_format(&format)?;
            let b = parse_borel(borel.as_deref(), m, n)?;
            let r = verify_howe_dimension(m, n, k, d, &b).map_err(library_error)?;
            let stdout = match format {
                Format::Json => json(&r),
                _ => format!("{}: lhs={} rhs={}\n", if r.ok { "ok" } else { "FAIL" }, r.lhs, r.rhs),
            };
            Ok(report(r.ok, stdout))
        }
        Command::Render { tableau, m, n, format } => {
            let format = parse_format(&format)?;
            let t = parse_tableau(&tableau, m, n)?;
            let mut s = render(&t, format);
            if !s.is_empty() {
                s.push('\n');
            }
            Ok(Outcome::ok(s))
        }
    }
}
