//! `clcc`: build and study cube complexes with coupled links from JSON.
//!
//! Documents go to stdout as canonical JSON so commands compose in pipes;
//! short human summaries go to stderr. Exit codes: 0 success, 1 domain
//! error or failed check, 2 usage error or unreadable input.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "clcc", version, about = "Cube complexes with coupled links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a coloured complex or pair from a built-in family.
    Generate(GenerateArgs),
    /// Build the CLCC of a pair.
    Build(BuildArgs),
    /// Check a property of a complex or pair; exits 1 when it fails.
    Check(CheckArgs),
    /// Link of a cube.
    Link(LinkArgs),
    /// Connectedness of the CLCC of a pair.
    Connect(ConnectArgs),
    /// Euler characteristic, dimension and vertex-link types.
    Invariants(InvariantsArgs),
    /// Z₂ Betti numbers.
    Homology(HomologyArgs),
    /// The cycle of the CLCC defined by two smartly paired chains.
    Cycle(CycleArgs),
    /// Hyperplanes, directions and crossings.
    Hyperplanes(InputArgs),
    /// Sageev's cube complex of a pocset.
    Sageev(OutputArgs),
    /// Rebuild a cube complex from its half-spaces and compare.
    Duality(InputArgs),
    /// Hyperbolicity certificate for a pair, or the Moussong criterion.
    Certify(CertifyArgs),
    /// Re-export a document in canonical form.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(default_value = "-")]
    pub input: String,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Surface,
    Salvetti,
    Racg,
    Barycentric,
    Cycle,
    Crosspolytope,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    pub family: Family,
    /// Half-length of the first cycle (surface).
    #[arg(long, default_value_t = 2)]
    pub ka: usize,
    /// Half-length of the second cycle (surface).
    #[arg(long, default_value_t = 3)]
    pub kb: usize,
    /// Half-length of the cycle (cycle).
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Two colours alternating along the cycle (cycle).
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub colours: Vec<usize>,
    /// Number of colours (cycle, crosspolytope).
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Vertex prefix (cycle, crosspolytope).
    #[arg(long, default_value = "v")]
    pub prefix: String,
    /// Defining complex: a named fixture or a JSON file (salvetti, racg).
    #[arg(long)]
    pub graph: Option<String>,
    /// First complex of dimension ≤ 2: fixture name or JSON file (barycentric).
    #[arg(long)]
    pub g: Option<String>,
    /// Second complex of dimension ≤ 2 (barycentric).
    #[arg(long)]
    pub l: Option<String>,
    /// Colours of vertex, edge and face barycentres of the first complex.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    pub g_colours: Vec<usize>,
    /// Colours of vertex, edge and face barycentres of the second complex.
    #[arg(long, value_delimiter = ',', default_value = "2,1,3")]
    pub l_colours: Vec<usize>,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    /// Pair file, or `-` for stdin.
    #[arg(default_value = "-")]
    pub pair: String,
    /// Also accepted as `--pair FILE`.
    #[arg(long = "pair", conflicts_with = "pair")]
    pub pair_flag: Option<String>,
    #[arg(long)]
    pub out: Option<String>,
    /// Write the generic `{"vertices", "cubes"}` form instead of cube keys.
    #[arg(long)]
    pub cells: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "property")]
pub struct CheckKind {
    #[arg(long)]
    pub flag: bool,
    #[arg(long = "5large")]
    pub five_large: bool,
    #[arg(long)]
    pub obes: bool,
    #[arg(long)]
    pub pairwise: bool,
    #[arg(long)]
    pub smart: bool,
    #[arg(long)]
    pub double_smart: bool,
    #[arg(long)]
    pub npc: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub kind: CheckKind,
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct LinkArgs {
    #[arg(default_value = "-")]
    pub input: String,
    /// Vertex ids of the `A`-simplex (pair input).
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<String>,
    /// Vertex ids of the `B`-simplex (pair input).
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<String>,
    /// Cell id (any cube complex input).
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub cell: Option<String>,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Bfs,
    Criterion,
}

#[derive(Args, Debug)]
pub struct ConnectArgs {
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Engine::Bfs)]
    pub engine: Engine,
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long)]
    pub chi: bool,
    #[arg(long)]
    pub dim: bool,
    #[arg(long)]
    pub links: bool,
}

#[derive(Args, Debug)]
pub struct HomologyArgs {
    #[arg(default_value = "-")]
    pub input: String,
    /// Report reduced Betti numbers as `betti`.
    #[arg(long)]
    pub reduced: bool,
}

#[derive(Args, Debug)]
pub struct CycleArgs {
    /// Pair file, or `-` for stdin.
    #[arg(default_value = "-")]
    pub pair: String,
    /// Chain on the first complex; its fundamental chain when absent.
    #[arg(long)]
    pub omega_a: Option<String>,
    /// Chain on the second complex; its fundamental chain when absent.
    #[arg(long)]
    pub omega_b: Option<String>,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(default_value = "-")]
    pub input: String,
    /// Treat the input as a flag complex and apply the Moussong criterion.
    #[arg(long)]
    pub moussong: bool,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[arg(default_value = "-")]
    pub input: String,
    /// Convert cube keys or a pair to the generic `{"vertices", "cubes"}` form.
    #[arg(long)]
    pub cells: bool,
    #[arg(long)]
    pub out: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(commands::run(cli.command))
}
