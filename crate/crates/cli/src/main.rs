//! `fishburn`: tables, congruence scans, identity checks and b-file
//! cross-checks. Exit status 0 means every checked claim held, 1 means a
//! claim failed, 2 means the input was rejected.

mod bfile;
mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{VerifyWindow, IDENTITIES};
use render::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] fishburn::Error),
    #[error(transparent)]
    Bfile(#[from] bfile::BfileError),
}

#[derive(Parser, Debug)]
#[command(
    name = "fishburn",
    version,
    about = "Fishburn-type numbers of torus knots and checks of the identities behind them"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Allow t >= 4 workloads.
    #[arg(long, global = true)]
    deep: bool,
    /// Report wall-clock time; off by default to keep output reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients xi_t(0..count).
    Xi {
        #[arg(long)]
        t: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Check xi_t(p^r m - j) = 0 mod p^r.
    Congruence {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        m_max: u64,
        /// Experiment: residues for these j instead of the proven range.
        #[arg(long, value_delimiter = ',')]
        scan_j: Vec<u64>,
    },
    /// Check an identity on a truncation window.
    Verify {
        #[arg(long, value_parser = IDENTITIES)]
        identity: String,
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// q-order; defaults to 50 for t <= 2, 25 for t = 3, 12 beyond.
        #[arg(long)]
        order: Option<i64>,
        /// x-window for two-variable identities; defaults to order / 3 + 1.
        #[arg(long)]
        x_bound: Option<usize>,
        /// Largest root-of-unity order; defaults to 8, or 3 for t >= 4.
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Compare xi_1 with an OEIS b-file.
    BfileCheck {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 40)]
        count: usize,
    },
    /// Divisibility of the s-dissection pieces of the N-th partial sum.
    Divisibility {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        n: u64,
    },
}

impl Command {
    fn t(&self) -> Option<u32> {
        match self {
            Command::Xi { t, .. }
            | Command::Congruence { t, .. }
            | Command::Verify { t, .. }
            | Command::Divisibility { t, .. } => Some(*t),
            Command::BfileCheck { .. } => None,
        }
    }
}

fn execute(cli: &Cli) -> Result<render::Report, CliError> {
    if let Some(t) = cli.command.t() {
        if t >= 4 && !cli.deep {
            return Err(CliError::Usage(format!("t = {t} workloads need --deep")));
        }
    }
    match &cli.command {
        Command::Xi { t, count } => commands::xi(*t, *count as usize),
        Command::Congruence {
            t,
            p,
            r,
            m_max,
            scan_j,
        } => commands::congruence(*t, *p, *r, *m_max, scan_j),
        Command::Verify {
            identity,
            t,
            order,
            x_bound,
            n_max,
        } => {
            let order = order.unwrap_or(match t {
                0..=2 => 50,
                3 => 25,
                _ => 12,
            });
            if order < 1 {
                return Err(CliError::Usage(format!("--order {order} must be positive")));
            }
            let window = VerifyWindow {
                order,
                x_bound: x_bound.unwrap_or(order as usize / 3 + 1),
                n_max: n_max.unwrap_or(if *t >= 4 { 3 } else { 8 }),
            };
            commands::verify(identity, *t, window)
        }
        Command::BfileCheck { path, count } => commands::bfile_check(path, *count),
        Command::Divisibility { t, s, n } => commands::divisibility(*t, *s, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .expect("thread pool is configured once");
    }
    let start = Instant::now();
    let mut report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.timing {
        report.runtime_ms = Some(start.elapsed().as_millis());
    }
    let mut out = std::io::stdout().lock();
    if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
