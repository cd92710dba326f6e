use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dp1_lct::cli::{run, RunRequest, Subcommand as Cmd};

/// Exact log canonical thresholds on degree-1 del Pezzo surfaces with ADE
/// singularities: threshold tables, LP certifications, pullback
/// coefficients, curve-germ thresholds and the local-inequality checker.
#[derive(Parser)]
#[command(name = "dp1-lct", version, about)]
struct CliArgs {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Threshold table row for a singularity configuration.
    Table {
        /// Configuration such as "A7+A1" or "D8".
        #[arg(long)]
        config: String,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// Certify the lower bound of a table row (or of every admissible row).
    Certify {
        #[arg(long, conflicts_with = "all")]
        config: Option<String>,
        /// Sweep every admissible configuration.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// Threshold of a divisor at an ADE point (JSON payload).
    Lct {
        /// Payload file, "-" for stdin.
        #[arg(long, default_value = "-")]
        file: String,
    },
    /// Pullback coefficients of a curve class on a resolution graph.
    Pullback {
        /// Dynkin type such as "A7".
        #[arg(long = "type")]
        graph: String,
        /// Comma-separated incidences with E1..Em, e.g. "0,0,0,1,0,0,0".
        #[arg(long)]
        incidence: String,
    },
    /// Exact LP over a JSON system: maximize, minimize, implied, eliminate.
    Polytope {
        #[arg(value_parser = ["maximize", "minimize", "implied", "eliminate"])]
        action: String,
        /// System file, "-" for stdin.
        #[arg(long, default_value = "-")]
        system: String,
        /// Objective: a variable name or comma-separated rationals.
        #[arg(long)]
        objective: Option<String>,
        /// Variable to eliminate.
        #[arg(long)]
        variable: Option<String>,
        /// Inequality to test, as JSON {"coeffs": [...], "relation": "ge", "rhs": "..."}.
        #[arg(long)]
        ineq: Option<String>,
    },
    /// Check an instance of the local inequality (JSON payload or file).
    TheoremI {
        /// Payload file, "-" for stdin.
        #[arg(long, default_value = "-")]
        file: String,
        /// Run the seeded derived-inequality sampling suite instead.
        #[arg(long, conflicts_with = "file")]
        suite_samples: Option<usize>,
    },
    /// Evaluate a blow-up program: (coefficient, discrepancy) table and lct.
    Germ {
        /// Payload file, "-" for stdin.
        #[arg(long, conflicts_with = "preset")]
        file: Option<String>,
        /// Built-in germ: node, cusp or tacnode.
        #[arg(long)]
        preset: Option<String>,
    },
}

#[derive(Args)]
struct FlagArgs {
    /// The branch curve of the double cover is irreducible.
    #[arg(long, conflicts_with = "r_reducible")]
    r_irreducible: bool,
    /// The branch curve of the double cover is reducible (default).
    #[arg(long)]
    r_reducible: bool,
    /// Cusp stratum of the anticanonical pencil: none, smooth, a1, a2.
    #[arg(long, default_value = "none", value_parser = ["none", "smooth", "a1", "a2"])]
    cusp: String,
}

impl FlagArgs {
    fn json(&self) -> Value {
        json!({ "r_irreducible": self.r_irreducible, "cusp": self.cusp })
    }
}

fn read_source(spec: &str) -> Result<String, String> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(PathBuf::from(spec))
            .map_err(|e| format!("cannot read {spec}: {e}"))
    }
}

fn parse_json(text: &str) -> Result<Value, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))
}

fn build_request(command: &Command) -> Result<RunRequest, String> {
    let (subcommand, payload) = match command {
        Command::Table { config, flags } => {
            let mut p = flags.json();
            p["config"] = json!(config);
            (Cmd::Table, p)
        }
        Command::Certify { config, all, flags } => {
            let mut p = flags.json();
            p["all"] = json!(all);
            if let Some(c) = config {
                p["config"] = json!(c);
            }
            (Cmd::Certify, p)
        }
        Command::Lct { file } => (Cmd::Lct, parse_json(&read_source(file)?)?),
        Command::Pullback { graph, incidence } => {
            let incidence: Result<Vec<u32>, _> =
                incidence.split(',').map(|s| s.trim().parse()).collect();
            let incidence = incidence.map_err(|e| format!("bad incidence list: {e}"))?;
            (
                Cmd::Pullback,
                json!({ "type": graph, "incidence": incidence }),
            )
        }
        Command::Polytope {
            action,
            system,
            objective,
            variable,
            ineq,
        } => {
            let sys = parse_json(&read_source(system)?)?;
            let mut p = json!({ "action": action, "system": sys });
            match action.as_str() {
                "maximize" | "minimize" => {
                    let objective = objective
                        .as_ref()
                        .ok_or("maximize/minimize needs --objective")?;
                    p["objective"] = objective_json(objective);
                }
                "eliminate" => {
                    let var = variable.as_ref().ok_or("eliminate needs --variable")?;
                    p["variable"] = json!(var);
                }
                "implied" => {
                    let ineq = ineq.as_ref().ok_or("implied needs --ineq")?;
                    p["ineq"] = parse_json(ineq)?;
                }
                _ => unreachable!("clap validates the action"),
            }
            (Cmd::Polytope, p)
        }
        Command::TheoremI {
            file,
            suite_samples,
        } => {
            let p = match suite_samples {
                Some(n) => json!({ "suite_samples": n }),
                None => parse_json(&read_source(file)?)?,
            };
            (Cmd::TheoremI, p)
        }
        Command::Germ { file, preset } => {
            let p = match (file, preset) {
                (_, Some(preset)) => json!({ "preset": preset }),
                (Some(file), None) => parse_json(&read_source(file)?)?,
                (None, None) => parse_json(&read_source("-")?)?,
            };
            (Cmd::Germ, p)
        }
    };
    Ok(RunRequest {
        subcommand,
        payload,
    })
}

fn objective_json(spec: &str) -> Value {
    if spec.contains(',') || spec.parse::<dp1_lct::Rat>().is_ok() {
        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
        json!(parts)
    } else {
        json!(spec)
    }
}

fn main() -> ExitCode {
    let args = CliArgs::parse();
    let req = match build_request(&args.command) {
        Ok(req) => req,
        Err(msg) => {
            eprintln!("{}", json!({ "error": msg }));
            return ExitCode::from(1);
        }
    };
    let (code, doc) = run(&req);
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    ExitCode::from(code as u8)
}
