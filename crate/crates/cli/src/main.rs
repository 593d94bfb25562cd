use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use autkum_core::curvelattice::{classify_fiber, gram_rank, kummer_config};
use autkum_core::ellcurve::{find_supersingular_lambda, non_isogeny_certificate};
use autkum_core::exactfield::{check_odd_prime, parse_laurent_list};
use autkum_core::fgcert::{escape_witness, parse_generator_perms, schreier_generators};
use autkum_core::lineaction::conjugate_generator;
use autkum_core::verifier::{emit_report, run_pipeline, OutputFormat, PipelineParams};

#[derive(Parser)]
#[command(name = "autkum", version, about = "Exact checks for a Kummer surface with non-finitely generated automorphism group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and emit a report.
    Verify {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 50)]
        depth: u64,
        #[arg(long, default_value_t = 20)]
        nmax: u64,
        #[arg(long, default_value_t = PipelineParams::default().seed)]
        seed: u64,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the 24-curve intersection matrix as CSV.
    Gram {
        /// Print only the rank.
        #[arg(long)]
        rank: bool,
    },
    /// Classify a divisor on the 24-curve configuration as a fiber.
    Fiber {
        #[arg(long)]
        divisor: String,
    },
    /// Print f1^n f2 f1^-n as an affine map.
    Conjugate {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Least N with t^N outside the span of the given Laurent polynomials.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Supersingular Legendre parameter and the non-isogeny certificate.
    Supersingular {
        #[arg(long)]
        p: u64,
    },
    /// Schreier generators of a point stabiliser.
    Schreier {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { p, depth, nmax, seed, format, out } => {
            let params = PipelineParams { p, depth, nmax, seed, format };
            let report = run_pipeline(&params)?;
            let text = emit_report(&report, format);
            match out {
                Some(path) => std::fs::write(&path, &text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Gram { rank } => {
            let cfg = kummer_config();
            if rank {
                println!("{}", gram_rank(&cfg));
            } else {
                print!("{}", cfg.gram_csv());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fiber { divisor } => {
            let cfg = kummer_config();
            let d = cfg.parse_divisor(&divisor)?;
            match classify_fiber(&cfg, &d) {
                Ok(kind) => {
                    println!("{kind}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!("{e}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Conjugate { n, p } => {
            check_odd_prime(p)?;
            println!("{}", conjugate_generator(n, p));
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { gens, p } => {
            let set = parse_laurent_list(&gens, p)?;
            println!("{}", escape_witness(&set, p)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Supersingular { p } => {
            let lambda = find_supersingular_lambda(p)?;
            let cert = non_isogeny_certificate(p)?;
            println!("lambda0 = {lambda}");
            println!("modulus = {}", lambda.field().modulus().to_string_in("a"));
            println!("{}", cert.to_json());
            Ok(if cert.is_valid() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Schreier { gens, base } => {
            let perms = parse_generator_perms(&gens, base + 1)?;
            let words = schreier_generators(&perms, base)?;
            for w in words {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
