use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lee_cyclic::codespec::{CodeSpec, EnumOptions};
use lee_cyclic::formulas::{hamming_distance, lee_bounds_sandwich, lee_distance};
use lee_cyclic::gf2m::{find_tob, FieldCtx};
use lee_cyclic::oracle::{build_span, min_weights_with_budget, MAX_ENUM_K};
use lee_cyclic::sweep::{evaluate, run_sweep, SweepConfig, Verdict};
use lee_cyclic::Error;

/// Cyclic codes of length 2^sigma over GF(2^m)+uGF(2^m)+u^2GF(2^m):
/// closed-form Lee distances checked against exhaustive search.
#[derive(Parser)]
#[command(name = "lee-cyclic", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the trace-orthogonal basis of GF(2^m) and its Gram matrix.
    Tob {
        #[arg(long)]
        m: u32,
    },
    /// Print the generators and structural parameters of a code.
    Construct {
        /// Spec as inline JSON, a file path, or "-" for stdin.
        spec: String,
    },
    /// Check a spec's parameter constraints.
    Validate { spec: String },
    /// Lee distance by closed form, by exhaustive search, or both.
    Distance {
        spec: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Largest dimension enumerated exhaustively.
        #[arg(long, default_value_t = MAX_ENUM_K)]
        budget: u32,
    },
    /// Evaluate every enumerated spec and compare formula with oracle.
    Sweep {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        m: u32,
        /// Comma-separated families, e.g. "1,2,3"; all eight by default.
        #[arg(long = "type", value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8")]
        types: Vec<u8>,
        #[arg(long, default_value_t = MAX_ENUM_K)]
        budget: u32,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
        /// Write rows here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Seed for sampling unit-polynomial coefficients.
        #[arg(long, default_value_t = EnumOptions::default().seed)]
        seed: u64,
        /// Coefficient combinations per exponent tuple before sampling kicks in.
        #[arg(long, default_value_t = EnumOptions::default().max_unit_combos)]
        max_unit_combos: u64,
        /// Fill the `ms` column (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Print the binary span of a code's Gray image.
    SpanDump { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

fn read_spec(arg: &str) -> Result<CodeSpec, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Usage(format!("reading {arg}: {e}")))?
    };
    CodeSpec::from_json(&text)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes")
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Tob { m } => {
            let tob = find_tob(FieldCtx::new(m)?)?;
            println!("{tob}");
            for row in tob.gram() {
                let cells: Vec<String> = row.iter().map(u8::to_string).collect();
                println!("{}", cells.join(" "));
            }
        }
        Cmd::Construct { spec } => {
            let spec = read_spec(&spec)?;
            let params = spec.validated()?;
            let gens: Vec<_> = spec
                .generators()?
                .iter()
                .map(|g| json!({ "power_basis": g.to_string(), "coeffs": g.to_json_triples() }))
                .collect();
            println!(
                "{}",
                pretty(&json!({ "spec": spec.to_json_value(), "params": params, "generators": gens }))
            );
        }
        Cmd::Validate { spec } => {
            let spec = read_spec(&spec)?;
            match spec.validate() {
                Ok(params) => println!("{}", pretty(&json!({ "valid": true, "params": params }))),
                Err(v) => {
                    let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
                    println!("{}", pretty(&json!({ "valid": false, "violations": msgs })));
                    return Ok(ExitCode::from(2));
                }
            }
        }
        Cmd::Distance { spec, mode, budget } => {
            let spec = read_spec(&spec)?;
            match mode {
                Mode::Formula => {
                    let out = json!({
                        "lee": lee_distance(&spec)?,
                        "hamming": hamming_distance(&spec)?,
                        "sandwich": lee_bounds_sandwich(&spec)?,
                    });
                    println!("{}", pretty(&out));
                }
                Mode::Oracle => {
                    let tob = find_tob(spec.ctx)?;
                    let report = min_weights_with_budget(&build_span(&spec, &tob)?, budget)?;
                    println!("{}", pretty(&report.to_json_value()));
                }
                Mode::Both => {
                    let tob = find_tob(spec.ctx)?;
                    let row = evaluate(&spec, &tob, budget)?;
                    println!("{}", pretty(&row.to_json_value(false)));
                    if let Some(e) = &row.oracle_error {
                        eprintln!("oracle skipped: {e}");
                    }
                    eprintln!("verdict: {}", row.verdict);
                    if row.verdict == Verdict::Mismatch {
                        return Ok(ExitCode::FAILURE);
                    }
                }
            }
        }
        Cmd::Sweep {
            sigma,
            m,
            types,
            budget,
            out,
            output,
            seed,
            max_unit_combos,
            timing,
        } => {
            let mut cfg = SweepConfig::new(sigma, m, &types);
            cfg.budget = budget;
            cfg.enumeration = EnumOptions {
                max_unit_combos,
                seed,
            };
            let sweep = run_sweep(&cfg)?;
            let text = match out {
                OutFormat::Csv => sweep.to_csv(timing)?,
                OutFormat::Json => sweep.to_json(timing) + "\n",
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Usage(format!("writing {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            let summary = sweep.summary();
            eprintln!("rows: {}", summary.rows);
            for (verdict, count) in &summary.verdicts {
                eprintln!("  {verdict}: {count}");
            }
            eprintln!("  parameter mismatches: {}", summary.params_mismatches);
            eprintln!("  hamming mismatches: {}", summary.hamming_mismatches);
            eprintln!("  sandwich violations: {}", summary.sandwich_violations);
            if summary.count(Verdict::Mismatch) > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::SpanDump { spec } => {
            let spec = read_spec(&spec)?;
            let tob = find_tob(spec.ctx)?;
            print!("{}", build_span(&spec, &tob)?.serialize());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
