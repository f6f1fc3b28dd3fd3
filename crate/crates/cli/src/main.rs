//! `gconj`: invariant tables, conjecture checks, hunts and Lean export.
//!
//! Exit status is 0 when every checked statement holds, 1 when a counterexample
//! was found and 2 on usage, parse or I/O errors.

mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gconj_core::dsl::{builtin_conjecture, parse_conjecture, parse_conjecture_file, Conjecture, ErrorKind};
use gconj_core::engine::{check_dataset, hunt, mine_sharp, ConjectureReport};
use gconj_core::graph::{enumerate_connected, write_graph6, EnumBudget, FamilyFilter};
use gconj_core::invariants::Invariant;
use gconj_core::lean::{emit_builtin_four, emit_lean, LeanOptions};
use gconj_core::with_workers;

use input::{load_dataset, DatasetArgs};

#[derive(Parser)]
#[command(name = "gconj", version, about = "Exact graph invariants and conjecture checking")]
struct Cli {
    /// Worker threads; output never depends on this.
    #[arg(long, global = true, env = "GCONJ_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// CSV table of every invariant, sorted by order then canonical form.
    Invariants {
        #[command(flatten)]
        data: DatasetArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// Check one conjecture over a dataset and write a JSON report.
    Check {
        #[command(flatten)]
        data: DatasetArgs,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        report: Option<String>,
        #[arg(long)]
        stop_first: bool,
    },
    /// Exhaustive check over connected graphs with 2 <= n <= max-n.
    Hunt {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "all")]
        family: FamilyFilter,
        #[arg(long)]
        report: Option<String>,
        #[arg(long)]
        stop_first: bool,
    },
    /// CSV of the graphs attaining equality, with the common value.
    Sharp {
        #[command(flatten)]
        data: DatasetArgs,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// graph6 lines of the connected graphs of each order.
    Enumerate {
        #[arg(long, conflicts_with_all = ["min_n", "max_n"])]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value = "all")]
        family: FamilyFilter,
        #[arg(long)]
        out: Option<String>,
    },
    /// Lean 4 statements; without a source, the four listed conjectures.
    Lean {
        /// `1`..`4` for one builtin, `all` for the four listed statements.
        #[arg(long, conflicts_with = "conjecture")]
        builtin: Option<String>,
        #[arg(long)]
        conjecture: Option<String>,
        /// Emit `order G ≥ 2` in conjecture_one instead of `≥ 1`.
        #[arg(long)]
        nontrivial_order: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// CSV of (x, y) invariant pairs with an exact equality flag.
    PlotData {
        #[command(flatten)]
        data: DatasetArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct SourceArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4), conflicts_with = "conjecture")]
    builtin: Option<u8>,
    /// Inline statement (anything containing `::`) or a file of statements.
    #[arg(long)]
    conjecture: Option<String>,
    /// Selects one statement by name from a file holding several.
    #[arg(long)]
    name: Option<String>,
}

/// Error carrying the message printed before exiting with status 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> CliError {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_source(spec: &str) -> CliResult<String> {
    if spec.contains("::") {
        return Ok(spec.to_string());
    }
    std::fs::read_to_string(spec).map_err(|e| CliError(format!("{spec}: {e}")))
}

fn conjectures_from(spec: &str) -> CliResult<Vec<Conjecture>> {
    let text = read_source(spec)?;
    let origin = if spec.contains("::") { "conjecture" } else { spec };
    parse_conjecture_file(&text).map_err(|e| CliError(format!("{origin}: {e}")))
}

fn resolve(src: &SourceArgs) -> CliResult<Conjecture> {
    if let Some(id) = src.builtin {
        return Ok(builtin_conjecture(id as usize).expect("range checked by clap"));
    }
    let Some(spec) = &src.conjecture else {
        return Err(CliError("one of --builtin or --conjecture is required".into()));
    };
    let all = conjectures_from(spec)?;
    match &src.name {
        Some(name) => all
            .into_iter()
            .find(|c| &c.name == name)
            .ok_or_else(|| CliError(format!("no conjecture named `{name}` in {spec}"))),
        None if all.len() == 1 => Ok(all.into_iter().next().unwrap()),
        None if all.is_empty() => Err(CliError(format!("{spec}: no conjectures"))),
        None => Err(CliError(format!("{spec} holds {} conjectures; pick one with --name", all.len()))),
    }
}

fn finish_report(report: &ConjectureReport, path: Option<&str>) -> CliResult<ExitCode> {
    output::write(path, report.to_json().as_bytes())?;
    eprintln!(
        "{}: scanned {}, fails {}, touches {}, undefined {}, hypothesis not met {}",
        report.conjecture,
        report.scanned,
        report.totals.fails,
        report.touch_number,
        report.totals.undefined,
        report.totals.hypothesis_not_met
    );
    Ok(if report.verified() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn lean(builtin: Option<&str>, conjecture: Option<&str>, nontrivial_order: bool) -> CliResult<String> {
    let opts = LeanOptions { nontrivial_order };
    match (builtin, conjecture) {
        (None | Some("all"), None) => Ok(emit_builtin_four(opts)),
        (Some(id), None) => {
            let c = id
                .parse()
                .ok()
                .and_then(builtin_conjecture)
                .ok_or_else(|| CliError(format!("--builtin expects 1..4 or all, got `{id}`")))?;
            Ok(emit_lean(&c, &c.name))
        }
        (_, Some(spec)) => {
            let text = read_source(spec)?;
            let parsed = if spec.contains("::") {
                parse_conjecture(&text).map(|c| vec![c])
            } else {
                parse_conjecture_file(&text)
            };
            let cs = parsed.map_err(|e| match e.kind {
                ErrorKind::UnknownIdentifier(id) => CliError(format!("no Lean identifier for `{id}`")),
                _ => CliError(e.to_string()),
            })?;
            Ok(cs.iter().map(|c| emit_lean(c, &c.name)).collect::<Vec<_>>().join("\n"))
        }
    }
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Invariants { data, out } => {
            let ds = load_dataset(&data)?;
            output::write(out.as_deref(), &output::invariant_table(&ds.graphs)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { data, source, report, stop_first } => {
            let c = resolve(&source)?;
            let ds = load_dataset(&data)?;
            finish_report(&check_dataset(&c, &ds.graphs, &ds.descriptor, stop_first), report.as_deref())
        }
        Command::Hunt { source, max_n, family, report, stop_first } => {
            let c = resolve(&source)?;
            let r = hunt(&c, max_n, &family, stop_first, &EnumBudget::default())?;
            finish_report(&r, report.as_deref())
        }
        Command::Sharp { data, source, out } => {
            let c = resolve(&source)?;
            let ds = load_dataset(&data)?;
            output::write(out.as_deref(), &output::sharp_table(&mine_sharp(&c, &ds.graphs))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, min_n, max_n, family, out } => {
            let (lo, hi) = match (n, max_n) {
                (Some(n), _) => (n, n),
                (None, Some(hi)) => (min_n, hi),
                (None, None) => return Err(CliError("enumerate needs --n or --max-n".into())),
            };
            let mut text = String::new();
            for k in lo..=hi {
                for g in enumerate_connected(k, &family, &EnumBudget::default())? {
                    text.push_str(&write_graph6(&g));
                    text.push('\n');
                }
            }
            output::write(out.as_deref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lean { builtin, conjecture, nontrivial_order, out } => {
            let text = lean(builtin.as_deref(), conjecture.as_deref(), nontrivial_order)?;
            output::write(out.as_deref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::PlotData { data, x, y, out } => {
            let x: Invariant = x.parse()?;
            let y: Invariant = y.parse()?;
            let ds = load_dataset(&data)?;
            output::write(out.as_deref(), &output::plot_table(&ds.graphs, x, y)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = match cli.workers {
        Some(0) => {
            eprintln!("gconj: error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    match with_workers(workers, || run(cli.command)) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("gconj: error: {msg}");
            ExitCode::from(2)
        }
    }
}
