//! `oadlc` command-line front end.
//!
//! Commands read a TOML configuration, print their primary output on stdout
//! and, given an output directory, also write it (and any pattern files)
//! there. Output depends only on the configuration and flags.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod records;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub use commands::Outcome;
pub use config::Config;
pub use error::CliError;

use config::SweepParameter;

#[derive(Debug, Parser)]
#[command(name = "oadlc", version, about = "Stiffness analysis, minimum-mass design and cut patterns for double-layered corrugated mechanisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// TOML configuration file.
    #[arg(long)]
    pub config: PathBuf,
    /// Output directory (overrides `output.dir`).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stiffness, mass and folded size of the configured assembly.
    Analyze(Common),
    /// Minimum-mass design under the configured constraints.
    Optimize {
        #[command(flatten)]
        common: Common,
        /// Also write the assembly kit patterns.
        #[arg(long)]
        emit_pattern: bool,
        /// Enumerate the model grid instead of the continuous search.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Stiffness and mass while one layer parameter varies.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Parameter to vary: W, n or alpha (overrides `sweep.vary`).
        #[arg(long)]
        vary: Option<SweepParameter>,
        /// Comma-separated values (overrides `sweep.values`).
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<f64>>,
    },
    /// Cut patterns for the configured layers.
    Pattern(Common),
    /// Per-constraint slack of the configured design.
    Validate(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Analyze(c) | Command::Pattern(c) | Command::Validate(c) => c,
            Command::Optimize { common, .. } | Command::Sweep { common, .. } => common,
        }
    }
}

/// Runs a command without touching the file system beyond reading the
/// configuration.
pub fn execute(command: &Command) -> Result<(Config, Outcome), CliError> {
    let config = Config::load(&command.common().config)?;
    let outcome = match command {
        Command::Analyze(_) => commands::cmd_analyze(&config)?,
        Command::Optimize {
            exhaustive,
            emit_pattern,
            ..
        } => commands::cmd_optimize(&config, *exhaustive, *emit_pattern)?,
        Command::Sweep { vary, values, .. } => {
            let from_file = config.sweep.as_ref();
            let vary = vary
                .or(from_file.map(|s| s.vary))
                .ok_or_else(|| CliError::Config("no sweep parameter: pass --vary or add [sweep]".into()))?;
            let values = values
                .clone()
                .or(from_file.map(|s| s.values.clone()))
                .ok_or_else(|| CliError::Config("no sweep values: pass --values or add [sweep]".into()))?;
            commands::cmd_sweep(&config, vary, &values)?
        }
        Command::Pattern(_) => commands::cmd_pattern(&config)?,
        Command::Validate(_) => commands::cmd_validate(&config)?,
    };
    Ok((config, outcome))
}

fn output_dir(command: &Command, config: &Config) -> Option<PathBuf> {
    command
        .common()
        .out
        .clone()
        .or_else(|| config.output.dir.as_ref().map(PathBuf::from))
}

fn write_files(dir: &Path, files: &[(String, String)]) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    for (name, contents) in files {
        let path = dir.join(name);
        std::fs::write(&path, contents).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Executes `cli`, writes outputs and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(&cli.command).and_then(|(config, outcome)| {
        let dir = output_dir(&cli.command, &config);
        let needs_dir = matches!(cli.command, Command::Pattern(_) | Command::Optimize { emit_pattern: true, .. });
        match dir {
            Some(dir) => write_files(&dir, &outcome.files)?,
            None if needs_dir => {
                return Err(CliError::Config("pattern files need an output directory: pass --out".into()));
            }
            None => {}
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
