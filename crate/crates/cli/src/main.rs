use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mirrorcert::report::{self, Command, Report, RunConfig};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(
    name = "mirrorcert",
    version,
    about = "Exact verification of the reflection structure, mirror certificates and modular chart"
)]
struct Cli {
    /// Shorthand for --format json
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// List the available verifications and exit
    #[arg(long)]
    list: bool,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build L and check its invariants
    Lattice {
        /// Include roots, basis and Gram matrix
        #[arg(long)]
        full: bool,
    },
    /// Braid and commutation relations
    Relations,
    /// Deflation relation on a 12-gon
    Deflate {
        /// "ccs" or an index into the 12-gon enumeration
        #[arg(long, default_value = "ccs")]
        gon: String,
    },
    /// Root types and minimum heights
    Table1,
    /// Inner products along the braid path
    Table2,
    /// Mirror avoidance and perturbation certificates
    Certify {
        /// incident, orthogonal, point-point or all
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, default_value = "1/100")]
        eps: String,
    },
    /// Modular chart, Aut(F) membership and extension
    Modular {
        #[arg(long, default_value_t = 200)]
        check_membership: usize,
        #[arg(long, default_value_t = 50)]
        check_extension: usize,
    },
    /// Truncated E_m series on F
    Autoform {
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value = "3")]
        bound: String,
        #[arg(long, default_value = "0+2i", allow_hyphen_values = true)]
        tau: String,
    },
    /// The incidence plane and its collineations
    Plane {
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
}

fn config_of(cmd: Cmd, seed: u64) -> RunConfig {
    let mut q = 3;
    let command = match cmd {
        Cmd::Lattice { full } => Command::Lattice { full },
        Cmd::Relations => Command::Relations,
        Cmd::Deflate { gon } => Command::Deflate { gon },
        Cmd::Table1 => Command::Table1,
        Cmd::Table2 => Command::Table2,
        Cmd::Certify { pair, eps } => Command::Certify { pair, eps },
        Cmd::Modular { check_membership, check_extension } => {
            Command::Modular { membership: check_membership, extension: check_extension }
        }
        Cmd::Autoform { m, bound, tau } => Command::Autoform { m, bound, tau },
        Cmd::Plane { q: qq } => {
            q = qq;
            Command::Plane
        }
    };
    RunConfig { command, q, seed }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn render_text(r: &Report) -> String {
    let mut s = format!("{}: {}\n", r.command, if r.passed { "PASS" } else { "FAIL" });
    let v = report::canonicalize(r.result.clone());
    if let Value::Object(o) = &v {
        for (k, x) in o {
            match x {
                Value::Array(a) => s += &format!("  {k}: [{} entries]\n", a.len()),
                Value::Object(inner) => {
                    let flags: Vec<String> = inner
                        .iter()
                        .filter(|(_, y)| !y.is_array() && !y.is_object())
                        .map(|(a, y)| format!("{a}={y}"))
                        .collect();
                    s += &format!("  {k}: {}\n", if flags.is_empty() { "{…}".into() } else { flags.join(", ") });
                }
                _ => s += &format!("  {k}: {x}\n"),
            }
        }
    }
    s
}

fn render_csv(r: &Report) -> Result<String, Box<dyn std::error::Error>> {
    let v = serde_json::from_str::<Value>(&r.to_json())?;
    let mut rows = Vec::new();
    flatten("", &v, &mut rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["path", "value"])?;
    for (p, x) in rows {
        w.write_record([p, x])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("MIRRORCERT_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: MIRRORCERT_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    if cli.list {
        for (name, what) in Command::NAMES {
            println!("{name:<10} {what}");
        }
        return ExitCode::SUCCESS;
    }
    let Some(cmd) = cli.command else {
        eprintln!("error: no command given (see --help or --list)");
        return ExitCode::from(2);
    };
    let config = config_of(cmd, cli.seed);
    let rep = match report::run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let format = if cli.json { Format::Json } else { cli.format };
    let body = match format {
        Format::Json => rep.to_json(),
        Format::Text => render_text(&rep),
        Format::Csv => match render_csv(&rep) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    match written {
        // a closed pipe (e.g. `| head`) is not an error
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        _ => {}
    }
    if rep.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
