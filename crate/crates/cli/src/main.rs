mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "jumploci", version, about = "Exact analysis of complex line arrangements: multinets, pencils, jump loci")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Worker threads for parallel searches (defaults to the number of cores).
    #[arg(long, env = "JUMPLOCI_WORKERS", global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// A built-in arrangement (see `jumploci builtins`).
    #[arg(long)]
    builtin: Option<String>,
    /// An arrangement file (JSON).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct EnumArgs {
    /// Largest number of classes to search.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(3..))]
    max_k: u32,
    /// Largest line multiplicity to search.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    max_mult: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiple points of the arrangement and their census.
    Lattice {
        #[command(flatten)]
        source: Source,
    },
    /// Enumerate multinets.
    Multinets {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        search: EnumArgs,
    },
    /// Special fibers of a pencil, its class, and the translated components.
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Generators as `g1;g2`.
        #[arg(long, group = "pencil_source")]
        pencil: Option<String>,
        /// A built-in pencil.
        #[arg(long, group = "pencil_source")]
        pencil_builtin: Option<String>,
        /// Use the pencil of the N-th enumerated multinet (0-based).
        #[arg(long, group = "pencil_source")]
        from_multinet: Option<usize>,
        #[command(flatten)]
        search: EnumArgs,
        /// Extra fiber parameters to examine, as `a:b`.
        #[arg(long = "lambda")]
        lambdas: Vec<String>,
    },
    /// Torsion in the second cohomology of the integer Aomoto complex.
    Aomoto {
        #[command(flatten)]
        source: Source,
        /// Integer weights on the affine lines, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        omega: Vec<i64>,
    },
    /// Draw the real picture of the affine chart as SVG.
    Render {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: PathBuf,
        /// Class index per line, comma separated, for coloring.
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<usize>>,
        /// Half-width of the square viewing window.
        #[arg(long, default_value_t = 2.0)]
        half: f64,
    },
    /// List the built-in arrangements and pencils.
    Builtins,
    /// Check the double-star polynomial identities.
    Identities,
    /// Write an arrangement in canonical file form.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let outcome = match cli.command {
        Command::Lattice { source } => commands::lattice(&source),
        Command::Multinets { source, search } => commands::multinets(&source, &search),
        Command::Analyze { source, pencil, pencil_builtin, from_multinet, search, lambdas } => {
            let choice = commands::PencilChoice::from_flags(pencil, pencil_builtin, from_multinet);
            commands::analyze(&source, choice, &search, &lambdas)
        }
        Command::Aomoto { source, omega } => commands::aomoto(&source, &omega),
        Command::Render { source, output, classes, half } => commands::render(&source, &output, classes, half),
        Command::Builtins => commands::builtins(),
        Command::Identities => commands::identities(),
        Command::Export { source, output } => commands::export(&source, output.as_deref()),
    };
    output::emit(cli.format, outcome)
}
