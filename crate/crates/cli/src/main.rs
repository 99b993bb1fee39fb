mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "partial-hopf",
    version,
    about = "Partial actions and coactions of Hopf algebras on their base field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,

    /// Worker threads for parallel sweeps.
    #[arg(long, env = "PARTIAL_HOPF_JOBS", global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

/// `taft 4`, `nichols 3`, `groupalg 6`, `dualgroupalg 4` or `file path.json`.
#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    /// taft | nichols | groupalg | dualgroupalg | file
    pub kind: String,
    /// Order for built-ins, path for `file`.
    pub arg: Option<String>,
    /// Order for built-ins (alternative to the positional form).
    #[arg(long)]
    pub n: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf algebra axioms and declared metadata.
    Validate(AlgebraArgs),
    /// List and verify the partial action families of a built-in algebra.
    Actions {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Also compare with the embedded worked examples.
        #[arg(long)]
        paper_examples: bool,
    },
    /// List and verify the partial coaction families of a built-in algebra.
    Coactions {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        paper_examples: bool,
    },
    /// Derive all partial actions on the base field by constraint propagation.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Maximum number of search branches.
        #[arg(long, default_value_t = partial_hopf::classify::DEFAULT_BRANCH_LIMIT)]
        branch_limit: usize,
        /// Disable the group-like shortcut facts.
        #[arg(long)]
        no_shortcuts: bool,
    },
    /// Sweep the q-binomial identities.
    Identities {
        /// Largest root-of-unity order to sample.
        #[arg(long, default_value_t = 8)]
        n: u32,
        /// Cap on every index range.
        #[arg(long)]
        max: Option<i64>,
    },
    /// Check the self-duality of a Taft or Nichols algebra and transport its
    /// actions to coactions.
    Duality(AlgebraArgs),
    /// Write the structure constants as JSON.
    Export {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Output file (stdout when absent).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Read structure constants from JSON and validate them.
    Import { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Validate(a) => commands::validate(a),
        Command::Actions {
            algebra,
            paper_examples,
        } => commands::actions(algebra, *paper_examples),
        Command::Coactions {
            algebra,
            paper_examples,
        } => commands::coactions(algebra, *paper_examples),
        Command::Classify {
            algebra,
            branch_limit,
            no_shortcuts,
        } => commands::classify(algebra, *branch_limit, !*no_shortcuts),
        Command::Identities { n, max } => commands::identities(*n, *max),
        Command::Duality(a) => commands::duality(a),
        Command::Export { algebra, out } => commands::export(algebra, out.as_deref()),
        Command::Import { path } => commands::import(path),
    };
    match result {
        Ok(report) => {
            match cli.output {
                Output::Text => print!("{}", report.text),
                Output::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("json")),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
