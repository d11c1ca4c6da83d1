use std::io::{self, IsTerminal, Write};
use std::net::{IpAddr, Ipv4Addr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand};
use sglab_core::script::{evaluate, parse, Repl};
use sglab_service::{ServiceConfig, DEFAULT_PORT};

const EXIT_PARSE: u8 = 1;
const EXIT_RUNTIME: u8 = 2;

/// Stern-Gerlach laboratory: run experiment scripts, explore in a REPL, or
/// serve sessions over HTTP.
#[derive(Debug, Parser)]
#[command(name = "sg", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Run a .sgx script and print the stack after every command.
    Run {
        file: PathBuf,
        /// Print intensities with N decimals instead of full precision.
        #[arg(long, value_name = "N")]
        round: Option<usize>,
        /// Print the run report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Interactive session with undo.
    Repl {
        #[arg(long, value_name = "N")]
        round: Option<usize>,
    },
    /// Start the HTTP session service.
    Serve {
        #[arg(long, env = "SG_PORT", default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value_t = IpAddr::V4(Ipv4Addr::LOCALHOST))]
        bind: IpAddr,
        /// Idle time in seconds after which a session is discarded.
        #[arg(long, value_name = "SECS", default_value_t = 24 * 60 * 60)]
        ttl: u64,
        /// Save sessions here on shutdown and restore them on start.
        #[arg(long, value_name = "PATH")]
        snapshot: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run { file, round, json } => run(&file, round, json),
        Cmd::Repl { round } => repl(round),
        Cmd::Serve {
            port,
            bind,
            ttl,
            snapshot,
        } => {
            let config = ServiceConfig {
                bind: SocketAddr::new(bind, port),
                ttl: Duration::from_secs(ttl),
                snapshot_path: snapshot,
            };
            match serve(config) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("sg: {e:#}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}

fn run(file: &PathBuf, round: Option<usize>, json: bool) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("sg: {}: {e}", file.display());
            return ExitCode::from(EXIT_RUNTIME);
        }
    };
    let script = match parse(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: parse error: {e}", file.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    match evaluate(&script) {
        Ok(report) => {
            let out = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.transcript(round)
            };
            let _ = io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}: runtime error: {e}", file.display());
            ExitCode::from(EXIT_RUNTIME)
        }
    }
}

fn repl(round: Option<usize>) -> ExitCode {
    let stdin = io::stdin();
    let prompt = stdin.is_terminal().then_some("sg> ");
    let mut repl = Repl::new().with_round(round);
    match repl.run(stdin.lock(), io::stdout().lock(), prompt) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sg: {e}");
            ExitCode::FAILURE
        }
    }
}

fn serve(config: ServiceConfig) -> anyhow::Result<()> {
    tracing_subscriber::fmt()
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()),
        )
        .with_writer(io::stderr)
        .init();
    let runtime = tokio::runtime::Runtime::new().context("starting runtime")?;
    let bind = config.bind;
    runtime
        .block_on(sglab_service::serve(
            config,
            sglab_service::shutdown_signal(),
        ))
        .with_context(|| format!("serving on {bind}"))
}
