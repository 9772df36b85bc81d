use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use spinharm_core::homogeneous::{load_model, ModelAnalysis};
use spinharm_core::numeric::{self, ScanRow};
use spinharm_core::scalar::{format_rational, parse_rational, Rational};
use spinharm_core::verify::{run_all, VerifyOptions};
use spinharm_core::{build_report, Error, ReportOptions, Scalar, Substitution};

#[derive(Parser)]
#[command(name = "spinharm", version, about = "Harmonicity of spinorial G-structures on homogeneous models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a model: S, eta, torsion class, canonical parameters, harmonicity.
    Report {
        /// Built-in model name (cp3, spin4, aw11) or path to a model file.
        model: String,
        /// Also evaluate class flags and harmonicity at this t.
        #[arg(long, value_parser = rational)]
        at: Option<Rational>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// List roots with t <= 0 as well.
        #[arg(long)]
        include_negative_roots: bool,
    },
    /// Run the acceptance checks.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Factor of the spin lift (mutation testing).
        #[arg(long, value_parser = rational, hide = true)]
        lift_factor: Option<Rational>,
        /// Substitution forced onto the spin4 model (mutation testing).
        #[arg(long, hide = true)]
        spin4_substitution: Option<Substitution>,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        /// Random instances per identity.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Tabulate the numeric harmonicity residual over a range of t.
    Scan {
        model: String,
        #[arg(long, value_parser = rational, default_value = "1/10")]
        from: Rational,
        #[arg(long, value_parser = rational, default_value = "4")]
        to: Rational,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a model in the model-file format.
    Dump { model: String },
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

enum Outcome {
    Ok,
    ChecksFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Report { model, at, format, include_negative_roots } => {
            let report = build_report(load_model(&model)?, &ReportOptions { at, include_negative_roots })?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => print!("{}", report.to_json()),
            }
            Ok(Outcome::Ok)
        }
        Command::Verify { format, lift_factor, spin4_substitution, seed, samples } => {
            let mut opts = VerifyOptions { spin4_substitution, seed, samples, ..VerifyOptions::default() };
            if let Some(f) = lift_factor {
                opts.lift_factor = Scalar::from_rational(f);
            }
            let outcomes = run_all(&opts);
            let passed = outcomes.iter().all(|o| o.passed);
            match format {
                Format::Text => {
                    for o in &outcomes {
                        println!("{o}");
                        for c in &o.checks {
                            let tag = if c.passed { "ok  " } else { "FAIL" };
                            println!("    [{tag}] {}: {}", c.name, c.detail);
                        }
                    }
                    let failing: Vec<String> = outcomes
                        .iter()
                        .flat_map(|o| o.failed_checks().map(move |c| format!("{}: {}", o.id, c.name)))
                        .collect();
                    if failing.is_empty() {
                        println!("all checks passed");
                    } else {
                        println!("failing checks:");
                        for f in failing {
                            println!("    {f}");
                        }
                    }
                }
                Format::Structured => {
                    let value = json!({ "criteria": outcomes, "passed": passed });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            Ok(if passed { Outcome::Ok } else { Outcome::ChecksFailed })
        }
        Command::Scan { model, from, to, steps, format } => {
            let model = load_model(&model)?;
            let rows = numeric::scan(&model, &from, &to, steps)?;
            let analysis = ModelAnalysis::new(model.clone())?;
            let zero_set = analysis.harmonicity()?.zero_set;
            let in_range: Vec<&Rational> = zero_set.roots.iter().map(|r| &r.value).filter(|r| **r >= from && **r <= to).collect();
            let bracketed: Vec<bool> = in_range.iter().map(|r| numeric::brackets(&rows, r)).collect();
            match format {
                Format::Text => print_scan_text(&model.name, &rows, &zero_set.describe(), &in_range, &bracketed),
                Format::Structured => {
                    let table: Vec<_> = rows
                        .iter()
                        .map(|r| json!({ "pole": r.residual.is_none(), "residual": r.residual, "t": format_rational(&r.t) }))
                        .collect();
                    let roots: Vec<_> = in_range
                        .iter()
                        .zip(&bracketed)
                        .map(|(r, b)| json!({ "bracketed": b, "t": format_rational(r) }))
                        .collect();
                    let value = json!({
                        "exact": zero_set.verdict.as_str(),
                        "model": model.name,
                        "roots": roots,
                        "rows": table,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Dump { model } => {
            print!("{}", load_model(&model)?.to_json());
            Ok(Outcome::Ok)
        }
    }
}

fn print_scan_text(name: &str, rows: &[ScanRow], exact: &str, roots: &[&Rational], bracketed: &[bool]) {
    println!("# {name}: exact verdict {exact}");
    println!("{:>12}  {:>14}", "t", "residual");
    for r in rows {
        let t = format!("{:.6}", spinharm_core::scalar::to_f64(&r.t));
        match r.residual {
            Some(x) => println!("{t:>12}  {x:>14.6e}"),
            None => println!("{t:>12}  {:>14}", "pole"),
        }
    }
    for (r, b) in roots.iter().zip(bracketed) {
        println!("# root t = {}: {}", format_rational(r), if *b { "bracketed" } else { "NOT bracketed" });
    }
}
