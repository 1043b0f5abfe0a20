//! Command surface for the structure-file checkers.
//!
//! Exit codes: 0 when every checked property passes (or the check is not
//! applicable), 1 when a checked property fails (the report carries at
//! least one witness), 2 when the input is invalid (malformed file,
//! broken schema, failed structural validation, unknown identifiers).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use orext_core::algebra::GenerationMode;
use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "orext",
    version,
    about = "Checkers for abelian groups with operators, their skew polynomial \
             extensions, and finite rings and modules"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Worker-pool width for the parallel scanners; reports are
    /// byte-identical regardless of this setting.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include wall-clock time in the report (the one field that is not
    /// reproducible; off by default so reports stay byte-stable).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Generated stable subgroup of the set itself.
    Full,
    /// Generated stable subgroup of the set's operator images.
    Bracket,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a structure file and run full validation.
    Validate { file: PathBuf },
    /// Stable subgroup generated by a set of elements.
    Closure {
        file: PathBuf,
        /// Element names (repeat the flag or pass several values).
        #[arg(long, num_args = 1.., required = true)]
        set: Vec<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
    },
    /// s-unitality and weak s-unitality of the action.
    Sunital { file: PathBuf },
    /// Composition, one-shift, and (when companion maps are present)
    /// Leibniz and mixed identities for the pi maps.
    Identities {
        file: PathBuf,
        #[arg(long)]
        max_index: u32,
    },
    /// Associativity of the polynomial action across a triple file.
    Assoc {
        triple_file: PathBuf,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Strictly ascending chain of stable subgroups of the polynomial
    /// group, or not_applicable when the action is weakly s-unital.
    Chain {
        file: PathBuf,
        #[arg(long)]
        length: u32,
    },
    /// Degree-slice orbit lemma, both parts, over all exponent tuples up
    /// to the bound.
    Horrible {
        file: PathBuf,
        #[arg(long)]
        max_index: u32,
    },
    /// Ring property report: associativity, distributivity, and the
    /// unitality ladder.
    RingReport { file: PathBuf },
    /// Module property report over an explicit ring file.
    ModuleReport {
        ring_file: PathBuf,
        module_file: PathBuf,
    },
    /// Right-ideal chain built from the file's chain seeds.
    IdealChain {
        file: PathBuf,
        #[arg(long)]
        depth: u32,
    },
    /// Catalog of worked structures.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    /// List the families and the default catalog.
    List,
    /// Build a catalog item and write it as a structure file.
    Emit {
        id: String,
        params: Vec<u32>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(command: &Command) -> orext_core::Result<Report> {
    match command {
        Command::Validate { file } => commands::validate(file),
        Command::Closure { file, set, mode } => {
            let mode = match mode {
                ModeArg::Full => GenerationMode::Full,
                ModeArg::Bracket => GenerationMode::Bracket,
            };
            commands::closure(file, set, mode)
        }
        Command::Sunital { file } => commands::sunital(file),
        Command::Identities { file, max_index } => commands::identities(file, *max_index),
        Command::Assoc { triple_file, max_degree, budget, seed } => {
            commands::assoc(triple_file, *max_degree, *budget, *seed)
        }
        Command::Chain { file, length } => commands::chain(file, *length),
        Command::Horrible { file, max_index } => commands::horrible(file, *max_index),
        Command::RingReport { file } => commands::ring_report(file),
        Command::ModuleReport { ring_file, module_file } => {
            commands::module_report(ring_file, module_file)
        }
        Command::IdealChain { file, depth } => commands::ideal_chain(file, *depth),
        Command::Gallery { action } => match action {
            GalleryAction::List => commands::gallery_list(),
            GalleryAction::Emit { id, params, out } => commands::gallery_emit(id, params, out),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        // The global pool can only be sized once per process; a failure
        // here means it was already built, which is fine.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let started = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            if cli.timing {
                report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
            }
            let format = match cli.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            };
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
