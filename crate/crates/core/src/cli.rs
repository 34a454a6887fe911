//! Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{
    adjoint_eigencoefficient, find_resonance, kernel_test, parse_polynomial, poisson_bracket,
    FrequencyVector,
};
use crate::check::{run_checks, CheckConfig};
use crate::counting::{count_closed, enumerate_signatures, CountSpec};
use crate::spectrum::{
    builtin_cloh, enumerate_levels, parse_model, term_energy, validate_model, write_levels_csv,
    FockState, MoleculeModel, Severity,
};

#[derive(Debug, Parser)]
#[command(
    name = "vibnorm",
    version,
    about = "Normal forms of non-resonant vibrational Hamiltonians: counting, algebra checks and term energies"
)]
struct Cli {
    /// Emit JSON instead of plain text / CSV.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of independent monomials up to order N.
    Count(OrderArgs),
    /// List the monomial signatures (powers of s1..sn) up to order N.
    List(OrderArgs),
    /// Poisson bracket of two polynomials, e.g. `bracket --modes 2 s1 "z1*zs2"`.
    Bracket {
        #[arg(long)]
        modes: usize,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Test whether a monomial lies in the kernel of ad_H0.
    Kernel {
        /// Comma-separated frequencies in cm-1 (read exactly).
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        omega: Vec<String>,
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        monomial: String,
    },
    /// Search for a low-order integer relation among the frequencies.
    Resonance {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        omega: Vec<String>,
        #[arg(long, default_value_t = 3)]
        bound: u32,
        #[arg(long, default_value_t = 0.5)]
        tol: f64,
    },
    /// Term energy of one state.
    Energy {
        #[command(flatten)]
        model: ModelArgs,
        /// Comma-separated quantum numbers, e.g. 1,0,0.
        #[arg(long, value_delimiter = ',', required = true)]
        state: Vec<u32>,
    },
    /// All levels below a cutoff, as CSV.
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_negative_numbers = true)]
        cutoff: f64,
        /// Maximum quanta per mode, comma separated.
        #[arg(long = "box", value_delimiter = ',')]
        bounds: Option<Vec<u32>>,
    },
    /// Run the seeded property suite.
    Check {
        #[arg(long)]
        modes: usize,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct OrderArgs {
    #[arg(long)]
    modes: usize,
    #[arg(long)]
    order: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Builtin {
    Cloh,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
struct ModelSource {
    /// Use a built-in model.
    #[arg(long)]
    builtin: Option<Builtin>,
    /// Read a model file.
    #[arg(long)]
    model: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[command(flatten)]
    source: ModelSource,
    /// Override the quantum-number offset (0 or 0.5).
    #[arg(long)]
    delta: Option<f64>,
}

/// Domain failure: message for standard error, exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure(err.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Count(args) => {
            let spec = CountSpec::new(args.modes, args.order)?;
            let count = count_closed(&spec)?;
            if cli.json {
                #[derive(Serialize)]
                struct Report {
                    modes: usize,
                    order: u32,
                    q0: u32,
                    count: String,
                }
                emit_json(
                    out,
                    &Report {
                        modes: spec.n(),
                        order: spec.order(),
                        q0: spec.q0(),
                        count: count.to_string(),
                    },
                )
            } else {
                writeln!(out, "{count}")?;
                Ok(0)
            }
        }
        Command::List(args) => {
            let spec = CountSpec::new(args.modes, args.order)?;
            let signatures = enumerate_signatures(&spec)?;
            if cli.json {
                return emit_json(
                    out,
                    &json!({
                        "modes": spec.n(),
                        "order": spec.order(),
                        "count": signatures.len(),
                        "signatures": signatures,
                    }),
                );
            }
            let header: Vec<String> = (1..=spec.n()).map(|k| format!("r{k}")).collect();
            writeln!(out, "{},degree", header.join(","))?;
            for sig in &signatures {
                let powers: Vec<String> = sig.powers().iter().map(u32::to_string).collect();
                writeln!(out, "{},{}", powers.join(","), sig.degree())?;
            }
            Ok(0)
        }
        Command::Bracket { modes, left, right } => {
            let p = parse_polynomial(left, *modes)?;
            let q = parse_polynomial(right, *modes)?;
            let result = poisson_bracket(&p, &q)?;
            if cli.json {
                emit_json(out, &json!({ "result": result.to_string() }))
            } else {
                writeln!(out, "{result}")?;
                Ok(0)
            }
        }
        Command::Kernel {
            omega,
            tol,
            monomial,
        } => {
            let freqs = FrequencyVector::parse(omega)?;
            let p = parse_polynomial(monomial, freqs.n())?;
            let mut terms = p.terms();
            let (Some((mono, _)), None) = (terms.next(), terms.next()) else {
                return Err(Failure(format!("`{monomial}` is not a single monomial")));
            };
            let in_kernel = kernel_test(mono, &freqs, *tol)?;
            if cli.json {
                emit_json(
                    out,
                    &json!({
                        "monomial": mono.to_string(),
                        "weights": adjoint_eigencoefficient(mono),
                        "in_kernel": in_kernel,
                    }),
                )
            } else {
                writeln!(out, "{in_kernel}")?;
                Ok(0)
            }
        }
        Command::Resonance { omega, bound, tol } => {
            let freqs = FrequencyVector::parse(omega)?;
            let hit = find_resonance(&freqs, *bound, *tol)?;
            if cli.json {
                return emit_json(
                    out,
                    &json!({
                        "bound": bound,
                        "tol": tol,
                        "lambda": hit.as_ref().map(|h| &h.lambda),
                        "defect": hit.as_ref().map(|h| h.defect),
                    }),
                );
            }
            match hit {
                Some(h) => {
                    let lambda: Vec<String> = h.lambda.iter().map(i64::to_string).collect();
                    writeln!(out, "{}", lambda.join(","))?;
                }
                None => writeln!(out, "none")?,
            }
            Ok(0)
        }
        Command::Energy { model, state } => {
            let model = load_model(model, err)?;
            let state = FockState(state.clone());
            let energy = term_energy(&model, &state)?;
            if cli.json {
                emit_json(out, &json!({ "state": state, "energy_cm1": energy }))
            } else {
                writeln!(out, "{energy:.4}")?;
                Ok(0)
            }
        }
        Command::Spectrum {
            model,
            cutoff,
            bounds,
        } => {
            let model = load_model(model, err)?;
            let levels = enumerate_levels(&model, *cutoff, bounds.as_deref())?;
            let max = levels.last().map_or(0.0, |l| l.energy);
            writeln!(
                err,
                "{}: {} levels up to {cutoff} cm-1, max energy {max:.4} cm-1",
                model.name,
                levels.len()
            )?;
            if cli.json {
                emit_json(
                    out,
                    &json!({
                        "model": model.name,
                        "delta": model.delta,
                        "cutoff": cutoff,
                        "count": levels.len(),
                        "levels": levels,
                    }),
                )
            } else {
                out.write_all(write_levels_csv(&levels, model.n).as_bytes())?;
                Ok(0)
            }
        }
        Command::Check { modes, order, seed } => {
            let results = run_checks(&CheckConfig::new(*modes, *order, *seed))?;
            let failed = results.iter().filter(|r| !r.passed).count();
            if cli.json {
                emit_json(out, &results)?;
            } else {
                for r in &results {
                    writeln!(out, "{r}")?;
                }
                if failed == 0 {
                    writeln!(out, "all {} properties passed", results.len())?;
                } else {
                    writeln!(out, "{failed} of {} properties failed", results.len())?;
                }
            }
            Ok(i32::from(failed > 0))
        }
    }
}

fn load_model(args: &ModelArgs, err: &mut dyn Write) -> Result<MoleculeModel, Failure> {
    let mut model = match (&args.source.builtin, &args.source.model) {
        (Some(Builtin::Cloh), _) => builtin_cloh(),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            parse_model(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(Failure("no model given".into())),
    };
    if let Some(delta) = args.delta {
        model.delta = delta;
    }
    let findings = validate_model(&model);
    for f in &findings {
        writeln!(err, "{f}")?;
    }
    if findings.iter().any(|f| f.severity == Severity::Error) {
        return Err(Failure(format!("model `{}` failed validation", model.name)));
    }
    Ok(model)
}
