use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use luminous_cli::commands::{self, Field, Limits};
use luminous_cli::server;
use luminous_cli::wire::SolveRequest;
use luminous_core::solver::DEFAULT_ENUMERATION_CAP;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
/// The matrix is singular or the board has no solution.
const EXIT_SIGNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "luminous", version, about = "Lights Out solver and determinant checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, clap::Args)]
struct Grid {
    #[arg(long, short = 'm')]
    rows: usize,
    #[arg(long, short = 'n')]
    cols: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the game matrix A(m,n).
    Matrix {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "int")]
        field: Field,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Determinant of A(m,n): eigenvalue product and exact value. Exits 3 if zero.
    Det {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Closed-form singularity verdict. Exits 3 if singular.
    Singular {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Solve a board given as a row-major '0'/'1' string. Exits 3 if unsolvable.
    Solve {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        config: String,
        /// List every solution.
        #[arg(long)]
        all: bool,
        /// Largest nullity searched exhaustively for the minimal solution.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Closed-form verdict, GF(2) nullity and determinant parity for every grid up to a size.
    Sweep {
        #[arg(long, default_value_t = 16)]
        max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generate a solvable board from a seed.
    Board {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Serve the JSON API and web UI.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Directory holding the built web UI.
        #[arg(long)]
        ui_dir: Option<PathBuf>,
    },
}

fn emit<T: Serialize>(value: &T, format: Format, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("wire types serialize")),
        Format::Text => print!("{}", text(value)),
    }
}

fn signal(flag: bool) -> u8 {
    if flag {
        EXIT_SIGNAL
    } else {
        0
    }
}

fn run(cli: Cli, limits: Limits) -> Result<u8, commands::AppError> {
    match cli.command {
        Command::Matrix { grid, field, format } => {
            let dump = commands::matrix(&limits, grid.rows, grid.cols, field)?;
            emit(&dump.json, format, |_| dump.text.clone());
            Ok(0)
        }
        Command::Det { grid, format } => {
            let d = commands::det(&limits, grid.rows, grid.cols)?;
            emit(&d, format, |d| {
                let float = d.float.map_or("out of range".into(), |f| format!("{f:e}"));
                let exact = d.bareiss.clone().unwrap_or_else(|| "not computed".into());
                format!("det A({},{}): exact {exact}, eigenvalue product {float}, zero eigenvalue: {}\n", d.m, d.n, d.exact_zero)
            });
            Ok(signal(d.exact_zero))
        }
        Command::Singular { grid, format } => {
            let c = commands::criterion(grid.rows, grid.cols)?;
            emit(&c, format, |c| {
                if c.singular {
                    format!("A({},{}) is singular ({})\n", c.m, c.n, c.conditions.join(", "))
                } else {
                    format!("A({},{}) is nonsingular\n", c.m, c.n)
                }
            });
            Ok(signal(c.singular))
        }
        Command::Solve {
            grid,
            config,
            all,
            cap,
            format,
        } => {
            let req = SolveRequest {
                rows: grid.rows,
                cols: grid.cols,
                config,
                all,
                cap: Some(cap),
            };
            let r = commands::solve(&limits, &req)?;
            emit(&r, format, |r| match &r.minimal {
                Some(x) => {
                    let buttons: Vec<String> = x.buttons.iter().map(ToString::to_string).collect();
                    let tag = if r.certified { "minimal" } else { "reduced (not certified minimal)" };
                    format!(
                        "solvable, {} solution(s); {tag} press set: {}\n",
                        r.solution_count,
                        buttons.join(" ")
                    )
                }
                None => "unsolvable\n".into(),
            });
            Ok(signal(!r.solvable))
        }
        Command::Sweep { max, format } => {
            let s = commands::sweep(&limits, max)?;
            emit(&s, format, commands::sweep_text);
            Ok(0)
        }
        Command::Board { grid, seed, format } => {
            let b = commands::board(&limits, grid.rows, grid.cols, seed)?;
            emit(&b, format, |b| {
                let mut out = String::new();
                for row in b.config.as_bytes().chunks(b.cols) {
                    out.push_str(&String::from_utf8_lossy(row));
                    out.push('\n');
                }
                out
            });
            Ok(0)
        }
        Command::Serve { port, ui_dir } => {
            let rt = tokio::runtime::Runtime::new().map_err(|e| commands::AppError::Usage(e.to_string()))?;
            match rt.block_on(server::serve(limits, port, ui_dir)) {
                Ok(()) => Ok(0),
                Err(e) => {
                    eprintln!("error: cannot serve on port {port}: {e}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Limits::from_env().and_then(|limits| run(cli, limits));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
