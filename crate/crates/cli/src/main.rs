//! `qnet`: secret-key capacity bounds for quantum networks from the command line.

mod dot;
mod kraus_input;

use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qnet_core::network::{parse_network, QuantumNetwork};
use qnet_core::quantum::is_weyl_covariant;
use qnet_core::report::{self, text_number};
use qnet_core::solver::{
    bound, finite_size_penalty, per_sender_bounds, FiniteSizeParams, Method, SenderBound,
    SolverOptions,
};
use qnet_core::Error;
use serde_json::Value;

const MAX_FREE_NODES_ENV: &str = "QNET_MAX_FREE_NODES";

#[derive(Parser)]
#[command(
    name = "qnet",
    version,
    about = "Cut-based secret-key capacity bounds for quantum networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Network JSON file (`-` for stdin)
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = MethodArg::Auto, global = true)]
    method: MethodArg,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for exhaustive cut enumeration
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,

    /// Numerical tolerance, must be positive
    #[arg(long, default_value_t = 1e-9, global = true)]
    tolerance: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum multi-edge REE flow over all sender/receiver cuts
    Bound {
        /// Also report one bound per sender
        #[arg(long)]
        per_sender: bool,
    },
    /// Per-edge weight table
    Weights,
    /// One bound per sender, other senders treated as free nodes
    PerSender,
    /// Weyl-covariance check of a qubit channel
    CheckCovariance {
        /// Channel JSON; read from --input when absent
        #[arg(long)]
        channel: Option<String>,
    },
    /// Continuity penalty δ(ε, d) and its per-use form
    FiniteSize {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        log2_dim: Option<f64>,
        #[arg(long)]
        alpha_n: Option<f64>,
        #[arg(long)]
        n: u64,
    },
    /// Graphviz DOT rendering of the network
    ExportDot {
        /// Dash the edges of the minimum cut
        #[arg(long)]
        with_bound: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Maxflow,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Brute => Method::BruteForce,
            MethodArg::Maxflow => Method::MaxFlow,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("cannot read {}: {e}", path.display()),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    let path = path.ok_or_else(|| usage("--input is required for this command"))?;
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| io_failure(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    }
    Ok(text)
}

fn load_network(path: Option<&Path>) -> Result<QuantumNetwork, Failure> {
    let net = parse_network(read_input(path)?.as_bytes())?;
    for w in net.warnings() {
        eprintln!("{w}");
    }
    Ok(net)
}

fn solver_options(cli: &Cli) -> Result<SolverOptions, Failure> {
    let mut opts = SolverOptions {
        jobs: cli.jobs.max(1),
        tolerance: cli.tolerance,
        ..SolverOptions::default()
    };
    if let Ok(raw) = std::env::var(MAX_FREE_NODES_ENV) {
        opts.max_free_nodes = raw.trim().parse().map_err(|_| {
            usage(format!(
                "{MAX_FREE_NODES_ENV} must be a non-negative integer, got {raw:?}"
            ))
        })?;
    }
    Ok(opts)
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON value serialises")
    );
}

fn per_sender_text(net: &QuantumNetwork, bounds: &[SenderBound]) -> String {
    bounds
        .iter()
        .map(|b| {
            format!(
                "sender {}: {} bits/use  A = {{{}}}\n",
                b.sender,
                text_number(b.report.bound),
                b.report.witness.cut.side_a(net).join(", ")
            )
        })
        .collect()
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        return Err(usage(format!(
            "--tolerance must be positive, got {}",
            cli.tolerance
        )));
    }
    let input = cli.input.as_deref();
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Bound { per_sender } => {
            let net = load_network(input)?;
            let opts = solver_options(cli)?;
            let report = bound(&net, cli.method.into(), &opts)?;
            let senders = if *per_sender {
                Some(per_sender_bounds(&net, cli.method.into(), &opts)?)
            } else {
                None
            };
            if json {
                let mut value = report::bound_report_json(&net, &report);
                if let Some(s) = &senders {
                    value["per_sender"] = report::per_sender_json(&net, s);
                }
                print_json(&value);
            } else {
                print!("{}", report::bound_report_text(&net, &report));
                if let Some(s) = &senders {
                    print!("per sender:\n{}", per_sender_text(&net, s));
                }
            }
        }
        Command::Weights => {
            let net = load_network(input)?;
            if json {
                print_json(&report::weights_json(&net));
            } else {
                print!("{}", report::weights_text(&net));
            }
        }
        Command::PerSender => {
            let net = load_network(input)?;
            let bounds = per_sender_bounds(&net, cli.method.into(), &solver_options(cli)?)?;
            if json {
                print_json(&report::per_sender_json(&net, &bounds));
            } else {
                print!("{}", per_sender_text(&net, &bounds));
            }
        }
        Command::CheckCovariance { channel } => {
            let text = match channel {
                Some(t) => t.clone(),
                None => read_input(input)?,
            };
            let ch = kraus_input::parse_channel(&text)?;
            let result = is_weyl_covariant(&ch, cli.tolerance)?;
            if json {
                print_json(&report::covariance_json(&result, cli.tolerance));
            } else {
                println!("weyl-covariant: {}", result.covariant);
                for (name, r) in ["I", "X", "Y", "Z"].iter().zip(result.residuals) {
                    println!("residual {name}: {r:.3e}");
                }
            }
        }
        Command::FiniteSize {
            epsilon,
            log2_dim,
            alpha_n,
            n,
        } => {
            let log2_dim = match (log2_dim, alpha_n) {
                (Some(d), _) => *d,
                (None, Some(a)) => a * *n as f64,
                (None, None) => return Err(usage("finite-size needs --log2-dim or --alpha-n")),
            };
            let penalty = finite_size_penalty(&FiniteSizeParams {
                epsilon: *epsilon,
                log2_dim,
                n: *n,
                alpha_n: *alpha_n,
            })?;
            if json {
                print_json(&report::finite_size_json(&penalty));
            } else {
                println!("delta: {}", text_number(penalty.delta));
                println!("per_use: {}", text_number(penalty.per_use));
            }
        }
        Command::ExportDot { with_bound } => {
            let net = load_network(input)?;
            let witness = if *with_bound {
                Some(bound(&net, cli.method.into(), &solver_options(cli)?)?)
            } else {
                None
            };
            print!("{}", dot::to_dot(&net, witness.as_ref()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qnet: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
