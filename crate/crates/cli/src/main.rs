//! `springer`: Betti numbers of type-A Springer fibers from the command line.

mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use springer_core::poincare::Method;
use springer_core::tableau::{Partition, DEFAULT_CAP};

#[derive(Parser, Debug)]
#[command(
    name = "springer",
    version,
    about = "Betti numbers of type-A Springer fibers"
)]
pub struct Cli {
    /// Jordan type as a partition, e.g. `2,2,1`.
    #[arg(long, global = true)]
    pub shape: Option<Partition>,

    /// enumeration, product-sum, recursion or all.
    #[arg(long, global = true, default_value = "all")]
    pub method: Method,

    /// Output format; each command has its own default and accepted set.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest number of tableaux any enumeration may visit.
    #[arg(
        long,
        global = true,
        env = "SPRINGER_CAP",
        default_value_t = DEFAULT_CAP,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub cap: u64,

    /// Output file (a directory for `table`); stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti numbers and Poincaré polynomial of one shape.
    Betti,
    /// Poincaré polynomial of a shape, or of one standardization class with --tableau.
    Poincare {
        /// Standard tableau whose class polynomial is wanted.
        #[arg(long)]
        tableau: Option<String>,
    },
    /// List the row-standard tableaux of a shape with their inversion counts.
    Tableaux {
        #[arg(long)]
        standard_only: bool,
        #[arg(long)]
        max_inversions: Option<usize>,
    },
    /// The move graph of a shape.
    Graph,
    /// Standardization and code of a row-standard tableau.
    Encode {
        #[arg(long)]
        tableau: String,
    },
    /// Rebuild a row-standard tableau from a standard tableau and a code.
    Decode {
        #[arg(long)]
        tableau: String,
        /// Comma-separated exponents, e.g. `0,0,0,1,0`.
        #[arg(long)]
        kappa: String,
    },
    /// Betti tables for every shape of size at most --n-max.
    Table {
        #[arg(long)]
        n_max: usize,
    },
    /// Relabeling T -> S of the standard tableaux of a shape under an interval chain.
    Relabel {
        /// `i-j;...` pairs, or `spaltenstein` / `dual`.
        #[arg(long)]
        rho: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Betti => "betti",
            Command::Poincare { .. } => "poincare",
            Command::Tableaux { .. } => "tableaux",
            Command::Graph => "graph",
            Command::Encode { .. } => "encode",
            Command::Decode { .. } => "decode",
            Command::Table { .. } => "table",
            Command::Relabel { .. } => "relabel",
        }
    }

    /// Accepted formats; the first is the default.
    fn formats(&self) -> &'static [Format] {
        use Format::*;
        match self {
            Command::Betti | Command::Tableaux { .. } | Command::Relabel { .. } => {
                &[Text, Json, Csv]
            }
            Command::Poincare { .. } | Command::Encode { .. } | Command::Decode { .. } => {
                &[Text, Json]
            }
            Command::Graph => &[Dot, Text, Json],
            Command::Table { .. } => &[Csv, Json],
        }
    }

    fn needs_shape(&self) -> bool {
        matches!(
            self,
            Command::Betti | Command::Tableaux { .. } | Command::Graph | Command::Relabel { .. }
        )
    }
}

/// Invalid flag combinations; reported with the same exit status as parse errors.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub struct RunConfig {
    pub shape: Option<Partition>,
    pub method: Method,
    pub format: Format,
    pub cap: u64,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, UsageError> {
        let accepted = cli.command.formats();
        let format = cli.format.unwrap_or(accepted[0]);
        if !accepted.contains(&format) {
            let names: Vec<&str> = accepted.iter().map(|f| f.name()).collect();
            return Err(UsageError(format!(
                "{} does not support --format {}; use one of {}",
                cli.command.name(),
                format.name(),
                names.join(", ")
            )));
        }
        if cli.command.needs_shape() && cli.shape.is_none() {
            return Err(UsageError(format!(
                "{} requires --shape",
                cli.command.name()
            )));
        }
        Ok(Self {
            shape: cli.shape.clone(),
            method: cli.method,
            format,
            cap: cli.cap,
            out: cli.out.clone(),
        })
    }

    pub fn shape(&self) -> &Partition {
        self.shape.as_ref().expect("checked in from_cli")
    }

    /// Buffered writer on `--out` or stdout.
    pub fn writer(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use springer_core::Error as E;
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(E::CapExceeded { .. }) => 3,
        Some(E::MethodDisagreement { .. }) => 4,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::from_cli(&cli)
        .map_err(anyhow::Error::from)
        .and_then(|config| commands::run(&cli.command, &config));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use springer_core::Error as E;

    #[test]
    fn exit_codes() {
        let code = |e: anyhow::Error| exit_code(&e);
        assert_eq!(code(UsageError("x".into()).into()), 2);
        assert_eq!(code(E::InvalidTableau("x".into()).into()), 2);
        assert_eq!(
            code(
                E::CapExceeded {
                    count: BigUint::from(7u32),
                    cap: 1
                }
                .into()
            ),
            3
        );
        assert_eq!(
            code(
                E::MethodDisagreement {
                    shape: "1".into(),
                    detail: String::new()
                }
                .into()
            ),
            4
        );
        assert_eq!(code(io::Error::other("disk").into()), 1);
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
