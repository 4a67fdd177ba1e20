//! The `vstring` command line, callable in-process through [`run`].

mod record;
mod suites;

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use vstring::enumerate::{orbit_representatives, orbit_representatives_up_to};
use vstring::invariants::{distinguish, InvariantBundle};
use vstring::ops::{cable, compose, covering, gen_alpha_n, gen_gamma_pq, r_dot, uncover_preimage};
use vstring::search::{covering_graph, equivalent_bounded, reduce_bounded, Equivalence, SearchBudget};
use vstring::{MoveTrace, Nanoword};

pub use record::TabulationRecord;
pub use suites::{run_suite, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

/// Environment variable holding the default search budget, e.g. `states=50000,inc=1`.
pub const BUDGET_ENV: &str = "VSTRING_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "vstring", version, about = "Invariants, operations and homotopy search for virtual strings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// n-values, u-polynomial, based matrix and its primitive reduct
    Compute {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// The r-covering (r = 0 keeps the letters with n = 0)
    Cover {
        word: String,
        #[arg(short)]
        r: u32,
    },
    Compose { first: String, second: String },
    Cable {
        word: String,
        #[arg(short)]
        n: usize,
    },
    /// r·α: every letter replaced by r parallel copies
    Rdot {
        word: String,
        #[arg(short)]
        r: usize,
    },
    #[command(subcommand)]
    Gen(Generator),
    /// A word with vanishing u-polynomial whose r-covering is the input
    Preimage {
        word: String,
        #[arg(short)]
        r: u32,
    },
    /// Lowest-rank word found by bounded search, with its move trace
    Reduce {
        word: String,
        #[arg(long)]
        budget: Option<String>,
    },
    /// Homotopic (with trace), distinct (with evidence) or unknown
    Equiv {
        first: String,
        second: String,
        #[arg(long)]
        budget: Option<String>,
    },
    /// Run a property suite: u-cable, cover-cable-commute, composite-bm, rho-bounds, move-invariance
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random words of rank max-rank + 1 added to the exhaustive set
        #[arg(long, default_value_t = 32)]
        samples: usize,
    },
    /// JSON lines, one record per shift-orbit of rank at most K
    Tabulate {
        #[arg(long)]
        max_rank: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute every record of a tabulation file
    Recheck { path: PathBuf },
    /// Covering graph over all words of rank at most K, as DOT
    Graph {
        #[arg(long)]
        max_rank: usize,
        #[arg(short)]
        r: u32,
        #[arg(long)]
        dot: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum Generator {
    /// Γ_{p,q}
    Gamma { p: usize, q: usize },
    /// α_n
    Alphan { n: usize },
}

/// Runs one command line (`args[0]` is the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn word(text: &str) -> anyhow::Result<Nanoword> {
    text.parse().with_context(|| format!("cannot parse `{text}`"))
}

fn budget(flag: Option<String>) -> anyhow::Result<SearchBudget> {
    let text = match flag {
        Some(text) => text,
        None => match std::env::var(BUDGET_ENV) {
            Ok(text) => text,
            Err(_) => return Ok(SearchBudget::default()),
        },
    };
    text.parse().with_context(|| format!("bad budget `{text}`"))
}

fn print_word(out: &mut dyn Write, w: &Nanoword) -> anyhow::Result<i32> {
    writeln!(out, "{}", w.canonical_relabel())?;
    Ok(EXIT_OK)
}

fn print_trace(out: &mut dyn Write, trace: &MoveTrace) -> anyhow::Result<()> {
    let words = trace.replay()?;
    writeln!(
        out,
        "trace: {} steps, {} homotopy moves",
        trace.len(),
        trace.homotopy_steps()
    )?;
    writeln!(out, "  start  {}", words[0])?;
    for (step, w) in trace.steps.iter().zip(&words[1..]) {
        writeln!(out, "  {step}  {w}")?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Compute { word: text, json } => {
            let bundle = InvariantBundle::of(&word(&text)?);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&bundle)?)?;
            } else {
                writeln!(out, "word: {}", bundle.word)?;
                writeln!(out, "rank: {}", bundle.rank)?;
                let n: Vec<String> = bundle.n_values.iter().map(|(l, v)| format!("{l}={v}")).collect();
                writeln!(out, "n: {}", n.join(" "))?;
                writeln!(out, "u: {}", bundle.u_polynomial)?;
                writeln!(out, "based matrix ({}):", bundle.based_matrix.order.join(" "))?;
                for row in &bundle.based_matrix.rows {
                    writeln!(out, "  {row:?}")?;
                }
                writeln!(out, "rho: {}", bundle.rho)?;
                writeln!(out, "primitive ({}):", bundle.primitive.order.join(" "))?;
                for row in &bundle.primitive.rows {
                    writeln!(out, "  {row:?}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Cover { word: text, r } => print_word(out, &covering(&word(&text)?, r)),
        Command::Compose { first, second } => print_word(out, &compose(&word(&first)?, &word(&second)?)),
        Command::Cable { word: text, n } => print_word(out, &cable(&word(&text)?, n)?),
        Command::Rdot { word: text, r } => print_word(out, &r_dot(&word(&text)?, r)?),
        Command::Gen(Generator::Gamma { p, q }) => print_word(out, &gen_gamma_pq(p, q)?),
        Command::Gen(Generator::Alphan { n }) => print_word(out, &gen_alpha_n(n)?),
        Command::Preimage { word: text, r } => print_word(out, &uncover_preimage(&word(&text)?, r)?),
        Command::Reduce { word: text, budget: flag } => {
            let alpha = word(&text)?;
            let budget = budget(flag)?;
            let (best, trace) = reduce_bounded(&alpha, budget);
            writeln!(out, "{}", best.canonical_relabel())?;
            writeln!(out, "rank: {} -> {} (budget {budget})", alpha.rank(), best.rank())?;
            print_trace(out, &trace)?;
            Ok(EXIT_OK)
        }
        Command::Equiv { first, second, budget: flag } => {
            let (alpha, beta) = (word(&first)?, word(&second)?);
            let budget = budget(flag)?;
            let result = equivalent_bounded(&alpha, &beta, budget);
            writeln!(out, "{}", result.label())?;
            match &result {
                Equivalence::Homotopic(trace) => print_trace(out, trace)?,
                Equivalence::Distinct(report) => {
                    for e in &report.evidence {
                        let mark = if e.differs { "differs" } else { "agrees" };
                        writeln!(out, "  {} {mark}: {} vs {}", e.invariant, e.alpha, e.beta)?;
                    }
                }
                Equivalence::Unknown => {
                    let report = distinguish(&alpha, &beta, 2);
                    writeln!(out, "  no trace within budget {budget}; invariants agree ({} compared)", report.evidence.len())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_rank, seed, samples } => {
            let report = run_suite(suite, max_rank, seed, samples);
            for failure in report.failures.iter().take(20) {
                writeln!(out, "FAIL {failure}")?;
            }
            writeln!(
                out,
                "{suite}: {} passed, {} failed over {} words (max rank {max_rank}, seed {seed}, {samples} samples)",
                report.passed,
                report.failures.len(),
                report.words
            )?;
            Ok(if report.failures.is_empty() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Tabulate { max_rank, out: path } => {
            let file = File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
            let mut sink = BufWriter::new(file);
            let mut total = 0;
            for rank in 0..=max_rank {
                let words: Vec<Nanoword> = orbit_representatives(rank).into_iter().collect();
                let lines: Vec<String> = words.par_iter().map(|w| TabulationRecord::of(w).to_line()).collect();
                for line in &lines {
                    writeln!(sink, "{line}")?;
                }
                total += lines.len();
            }
            sink.flush()?;
            writeln!(out, "wrote {total} records to {}", path.display())?;
            Ok(EXIT_OK)
        }
        Command::Recheck { path } => {
            let file = File::open(&path).with_context(|| format!("cannot open {}", path.display()))?;
            let lines: Vec<String> = BufReader::new(file).lines().collect::<Result<_, _>>()?;
            let mismatches: Vec<String> = lines
                .par_iter()
                .enumerate()
                .filter_map(|(i, line)| {
                    let problem = match TabulationRecord::from_line(line) {
                        Err(e) => Some(format!("{e:#}")),
                        Ok(rec) => match rec.recheck() {
                            Err(e) => Some(format!("{e:#}")),
                            Ok(Some(fresh)) => Some(format!("recomputes to {}", fresh.to_line())),
                            Ok(None) if rec.to_line() != *line => Some("not in canonical serialization".into()),
                            Ok(None) => None,
                        },
                    };
                    problem.map(|p| format!("line {}: {p}", i + 1))
                })
                .collect();
            for m in &mismatches {
                writeln!(out, "FAIL {m}")?;
            }
            writeln!(out, "{} records, {} mismatches", lines.len(), mismatches.len())?;
            Ok(if mismatches.is_empty() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Graph { max_rank, r, dot } => {
            let graph = covering_graph(orbit_representatives_up_to(max_rank), r);
            std::fs::write(&dot, graph.to_dot()).with_context(|| format!("cannot write {}", dot.display()))?;
            let shape = graph.check_shape();
            writeln!(
                out,
                "{} nodes, {} components, shape {}",
                graph.nodes.len(),
                graph.components(),
                match &shape {
                    Ok(()) => "ok".to_string(),
                    Err(w) => format!("broken at {w}"),
                }
            )?;
            Ok(if shape.is_ok() { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}
