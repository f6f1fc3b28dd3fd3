use clap::{Args, ValueEnum};
use gconj_core::graph::{
    enumerate_connected, parse_edge_list, parse_graph6, random_regular, EnumBudget, Family, FamilyFilter,
};
use gconj_core::Graph;

use crate::{CliError, CliResult};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    /// One graph per line.
    Graph6,
    /// One graph per file, `u v` pairs per line.
    Edgelist,
}

/// Exactly one source: files (`--in`), an enumeration (`--n` or `--max-n`) or
/// random regular graphs (`--random`).
#[derive(Args, Debug)]
pub struct DatasetArgs {
    #[arg(long = "in", value_name = "PATH")]
    pub inputs: Vec<String>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: Format,
    /// Family filter; restricts file input too.
    #[arg(long)]
    pub family: Option<FamilyFilter>,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub min_n: usize,
    /// Exact order, for enumeration or random generation.
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<usize>,
    /// Number of random graphs from the family (cubic or regular(R)) on `--n` vertices.
    #[arg(long, value_name = "COUNT")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub struct Dataset {
    pub graphs: Vec<Graph>,
    pub descriptor: String,
}

fn read_graph6(path: &str, text: &str) -> CliResult<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| CliError(format!("{path}:{}: {e}", i + 1))))
        .collect()
}

pub fn load_dataset(args: &DatasetArgs) -> CliResult<Dataset> {
    let sources = [!args.inputs.is_empty(), args.max_n.is_some() || (args.n.is_some() && args.random.is_none()), args.random.is_some()];
    match sources.iter().filter(|&&s| s).count() {
        1 => {}
        0 => return Err(CliError("no input: give --in, --n/--max-n or --random".into())),
        _ => return Err(CliError("give exactly one input source: --in, --n/--max-n or --random".into())),
    }
    let filter = args.family.unwrap_or(FamilyFilter::ALL);
    if !args.inputs.is_empty() {
        let mut graphs = Vec::new();
        for path in &args.inputs {
            let text = std::fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))?;
            match args.format {
                Format::Graph6 => graphs.extend(read_graph6(path, &text)?),
                Format::Edgelist => {
                    graphs.push(parse_edge_list(&text).map_err(|e| CliError(format!("{path}: {e}")))?)
                }
            }
        }
        graphs.retain(|g| filter.accepts(g));
        let format = match args.format {
            Format::Graph6 => "graph6",
            Format::Edgelist => "edge list",
        };
        let descriptor = format!("{format} input {} filtered to {filter}", args.inputs.join(", "));
        return Ok(Dataset { graphs, descriptor });
    }
    if let Some(count) = args.random {
        let n = args.n.ok_or_else(|| CliError("--random needs --n".into()))?;
        let r = match filter.family {
            Family::Cubic => 3,
            Family::Regular(r) => r,
            _ => return Err(CliError("--random needs --family cubic or regular(R)".into())),
        };
        let mut graphs = random_regular(r, n, count, args.seed)?;
        graphs.retain(|g| filter.accepts(g));
        let descriptor = format!("{count} random {r}-regular graphs on {n} vertices, seed {}", args.seed);
        return Ok(Dataset { graphs, descriptor });
    }
    let (lo, hi) = match args.n {
        Some(n) => (n, n),
        None => (args.min_n, args.max_n.expect("checked above")),
    };
    let mut graphs = Vec::new();
    for k in lo.max(1)..=hi {
        graphs.extend(enumerate_connected(k, &filter, &EnumBudget::default())?);
    }
    Ok(Dataset { graphs, descriptor: format!("connected {filter} graphs, {lo} <= n <= {hi}") })
}
