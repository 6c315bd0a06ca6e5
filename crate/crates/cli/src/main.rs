//! `clutter`: blockers, up-families, f/h-vectors, bound tables and
//! enumeration of self-dual clutters from the command line.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "clutter", version, about = "Exact computations on clutters and set families")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Family file (`-` reads stdin).
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Blocker of the clutter in FILE.
    Blocker(Input),
    /// Up-family generated by FILE: f-vector, or members with --list.
    Upset {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        list: bool,
    },
    /// F* for the family in FILE.
    Star(Input),
    /// Long f-vector of FILE (of its up-family with --upset).
    Fvector {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        upset: bool,
    },
    /// Long h-vector of FILE (of its up-family with --upset).
    Hvector {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        upset: bool,
    },
    /// Whether the clutter in FILE is self-dual.
    Check(Input),
    /// Bound table for self-dual up-families (star-self-dual complexes with --complex).
    Bounds {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        complex: bool,
    },
    /// Checks the f-vector of a self-dual clutter's up-family against its bounds.
    VerifyTheorem3(Input),
    /// Checks the f-vector of a star-self-dual complex against its bounds.
    VerifyLemma2(Input),
    /// Appendix identities for the family in FILE, or for random families.
    Identities {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        #[arg(long, requires = "t")]
        random: bool,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long, default_value_t = 1000)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All self-dual clutters on E_t.
    Enumerate {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        verify: bool,
        /// Write the clutters here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = commands::run(&cli.command, cli.json, &mut out);
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
