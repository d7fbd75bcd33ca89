//! `monalg`: derivation weight data of finite monomial algebras.
//!
//! Exit codes: 0 success or match, 1 semantic mismatch (failed round trip,
//! non-isomorphic pair), 2 usage, parse or validation errors.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monalg::parse::{parse_source, parse_weights, render_ideal, render_weights};
use monalg::reconstruct::{iso_check, reconstruct_ideal, weight_data_of};
use monalg::report::analyze;
use monalg::sample::random_ideal;
use monalg::staircase::render_staircase;
use monalg::MonomialIdeal;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "monalg",
    version,
    about = "Derivations and automorphism weight data of finite monomial algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: staircase basis, weight decomposition, automorphism data.
    Analyze {
        /// Generators, e.g. "y^3, x*y, x^3"
        ideal: String,
        /// Line-oriented machine format
        #[arg(long)]
        machine: bool,
    },
    /// Text staircase diagram (one or two variables).
    Staircase { ideal: String },
    /// Rebuild the ideal from its derivation weight data and compare.
    Roundtrip(RoundtripArgs),
    /// Decide whether two monomial algebras are isomorphic.
    Isocheck { a: String, b: String },
    /// Print the weight data of an ideal in the weights file format.
    Weights { ideal: String },
    /// Reconstruct an ideal from a weights file ("a1 .. an dim" per line).
    Reconstruct {
        #[arg(long)]
        weights: PathBuf,
    },
}

#[derive(Args)]
struct RoundtripArgs {
    /// Ideal to check; omit when using --random
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    ideal: Option<String>,
    /// Check this many seeded random ideals instead
    #[arg(long, value_name = "COUNT", requires = "n")]
    random: Option<usize>,
    /// Number of variables for random ideals
    #[arg(long, value_name = "K")]
    n: Option<usize>,
    /// Largest pure-power exponent for random ideals
    #[arg(long, value_name = "E", default_value_t = 6)]
    max_exp: i64,
    #[arg(long, value_name = "S", default_value_t = 0)]
    seed: u64,
}

/// A failed command: exit code plus message for the error stream.
struct Failure(u8, String);

impl From<monalg::Error> for Failure {
    fn from(e: monalg::Error) -> Self {
        Failure(2, format!("error: {e}"))
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { ideal, machine } => cmd_analyze(&ideal, machine),
        Command::Staircase { ideal } => cmd_staircase(&ideal),
        Command::Roundtrip(args) => cmd_roundtrip(&args),
        Command::Isocheck { a, b } => cmd_isocheck(&a, &b),
        Command::Weights { ideal } => cmd_weights(&ideal),
        Command::Reconstruct { weights } => cmd_reconstruct(&weights),
    };
    let (code, out, err) = match result {
        Ok(out) => (0, out, String::new()),
        Err(Failure(1, msg)) => (1, msg, String::new()),
        Err(Failure(code, msg)) => (code, String::new(), msg),
    };
    let _ = io::stdout().write_all(out.as_bytes());
    if !err.is_empty() {
        eprintln!("{err}");
    }
    ExitCode::from(code)
}

fn parse_valid(text: &str) -> Result<(MonomialIdeal, Vec<String>), Failure> {
    let source = parse_source(text)?;
    let ideal = source.ideal()?;
    Ok((ideal, source.variables))
}

fn cmd_analyze(text: &str, machine: bool) -> CmdResult {
    let report = analyze(&parse_source(text)?)?;
    Ok(if machine {
        report.render_machine()
    } else {
        report.render_text()
    })
}

fn cmd_staircase(text: &str) -> CmdResult {
    let (ideal, names) = parse_valid(text)?;
    let mut out = format!(
        "staircase of ({}) in variables {}\n",
        monalg::parse::render_with(&ideal, &names),
        names.join(" ")
    );
    out.push_str(&render_staircase(&ideal)?);
    Ok(out)
}

/// Weight data → reconstruction, compared with the input.
fn round_trip(ideal: &MonomialIdeal) -> Result<(), String> {
    let data = weight_data_of(ideal).map_err(|e| e.to_string())?;
    match reconstruct_ideal(&data) {
        Ok(back) if &back == ideal => Ok(()),
        Ok(back) => Err(render_ideal(&back)),
        Err(e) => Err(format!("reconstruction failed: {e}")),
    }
}

fn cmd_roundtrip(args: &RoundtripArgs) -> CmdResult {
    if let Some(text) = &args.ideal {
        let (ideal, names) = parse_valid(text)?;
        return match round_trip(&ideal) {
            Ok(()) => Ok("OK\n".into()),
            Err(back) => Err(Failure(
                1,
                format!(
                    "MISMATCH\n  input:         {}\n  reconstructed: {back}\n",
                    monalg::parse::render_with(&ideal, &names)
                ),
            )),
        };
    }
    let count = args.random.unwrap_or(0);
    let n = args.n.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut out = format!("seed {} n {} max-exp {}\n", args.seed, n, args.max_exp);
    let mut failures = 0;
    for k in 1..=count {
        let ideal = random_ideal(&mut rng, n, args.max_exp)?;
        match round_trip(&ideal) {
            Ok(()) => out.push_str(&format!("OK {k} ({})\n", render_ideal(&ideal))),
            Err(back) => {
                failures += 1;
                out.push_str(&format!(
                    "MISMATCH {k} ({}) -> {back}\n",
                    render_ideal(&ideal)
                ));
            }
        }
    }
    out.push_str(&format!("{}/{count} OK\n", count - failures));
    if failures == 0 {
        Ok(out)
    } else {
        Err(Failure(1, out))
    }
}

fn cmd_isocheck(a: &str, b: &str) -> CmdResult {
    let (ia, names_a) = parse_valid(a)?;
    let (ib, names_b) = parse_valid(b)?;
    match iso_check(&ia, &ib) {
        Some(sigma) => {
            let mapping: Vec<String> = names_a
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{v} -> {}", names_b[sigma.apply(i)]))
                .collect();
            Ok(format!("isomorphic via {sigma} ({})\n", mapping.join(", ")))
        }
        None => Err(Failure(1, "not isomorphic\n".into())),
    }
}

fn cmd_weights(text: &str) -> CmdResult {
    let (ideal, names) = parse_valid(text)?;
    let data = weight_data_of(&ideal)?;
    let mut out = format!(
        "# weight data of ({}), coordinates {}\n",
        monalg::parse::render_with(&ideal, &names),
        names.join(" ")
    );
    out.push_str(&render_weights(&data));
    Ok(out)
}

fn cmd_reconstruct(path: &PathBuf) -> CmdResult {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(2, format!("error: cannot read {}: {e}", path.display())))?;
    let data = parse_weights(&text)?;
    let ideal = reconstruct_ideal(&data)?;
    Ok(format!("{}\n", render_ideal(&ideal)))
}
