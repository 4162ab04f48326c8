use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use peterson_schubert::cli::{self, CliError, CliResult, Format, Method, TableQuery};

/// Structure constants of the Peterson variety in the Peterson Schubert basis.
#[derive(Debug, Parser)]
#[command(name = "peterson", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand w_J * w_K in the basis {w_L}.
    Expand {
        #[arg(short = 'n', long = "rank")]
        n: usize,
        /// Ascending comma list, "-" for the empty set.
        #[arg(short = 'J', allow_hyphen_values = true)]
        j: String,
        #[arg(short = 'K', allow_hyphen_values = true)]
        k: String,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Answer from a JSON table written by `table`.
        #[arg(long)]
        cached: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw every left-right diagram of (J, K, L).
    Diagrams {
        #[arg(short = 'n', long = "rank")]
        n: usize,
        #[arg(short = 'J', allow_hyphen_values = true)]
        j: String,
        #[arg(short = 'K', allow_hyphen_values = true)]
        k: String,
        #[arg(short = 'L', allow_hyphen_values = true)]
        l: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check all engines and lemmas for every rank up to --n-max.
    Verify {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the table of nonzero structure constants for rank n.
    Table {
        #[arg(short = 'n', long = "rank")]
        n: usize,
        #[arg(short = 'J', long = "J", allow_hyphen_values = true)]
        j: Option<String>,
        #[arg(short = 'K', long = "K", allow_hyphen_values = true)]
        k: Option<String>,
        /// Keep only pairs with |J| + |K| equal to this.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value = "rewrite")]
        method: Method,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Show w_J, v_J, h_J and the component data of J.
    Group {
        #[arg(short = 'n', long = "rank")]
        n: usize,
        #[arg(short = 'J', allow_hyphen_values = true)]
        j: String,
    },
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        Some(threads) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(f)),
        None => Ok(f()),
    }
}

fn run(command: Command) -> CliResult<(Option<String>, bool)> {
    match command {
        Command::Expand {
            n,
            j,
            k,
            method,
            format,
            cached,
            out,
        } => {
            let text = cli::cmd_expand(n, &j, &k, method, format, cached.as_deref())?;
            Ok((cli::write_output(text, out.as_deref())?, true))
        }
        Command::Diagrams { n, j, k, l, out } => {
            let text = cli::cmd_diagrams(n, &j, &k, &l)?;
            Ok((cli::write_output(text, out.as_deref())?, true))
        }
        Command::Verify { n_max, jobs, out } => {
            let (text, passed) = cli::cmd_verify(n_max, jobs)?;
            Ok((cli::write_output(text, out.as_deref())?, passed))
        }
        Command::Table {
            n,
            j,
            k,
            degree,
            method,
            format,
            out,
            jobs,
        } => {
            let query = TableQuery { j, k, degree };
            let text = with_jobs(jobs, || cli::cmd_table(n, &query, method, format))??;
            Ok((cli::write_output(text, out.as_deref())?, true))
        }
        Command::Group { n, j } => Ok((Some(cli::cmd_group(n, &j)?), true)),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args.command) {
        Ok((text, passed)) => {
            if let Some(text) = text {
                print!("{text}");
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
