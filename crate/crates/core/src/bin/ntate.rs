//! Command-line surface over the kernel: verification suites, the boundary
//! operator, the generating series, polylog values, Planck radiance tables,
//! and the Gaussian pairing. Identical argv produces byte-identical output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ntate::checks::{run_all, CheckConfig};
use ntate::formal::{bernoulli, exp_bt};
use ntate::laurent::Var;
use ntate::parse::parse_laurent;
use ntate::polylog::{gamma_convolve, li_s, ConvolveWith};
use ntate::quad::QuadratureSpec;
use ntate::radiation::{
    pairing_eval, planck_spectral, stefan_boltzmann, GaussianSpec, PhysConstants, UnitsMode,
};
use ntate::rational::format_rational;
use ntate::tate::boundary;
use ntate::KernelError;

#[derive(Parser)]
#[command(name = "ntate", version, about = "Exact Tate-ring kernel and verification suites")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Quadrature tolerance for the numeric suites.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Path to a JSON constants file {"h": ..., "k_B": ..., "c_light": ...}.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite; exit 0 iff all pass.
    Check(CheckArgs),
    /// Apply the boundary operator to a Laurent expression in c.
    Boundary(BoundaryArgs),
    /// Print the generating series exp(bT) or a Bernoulli table.
    Series(SeriesArgs),
    /// Evaluate li_s(x) or the divided moment (γ^s_+ * d li_1)(x).
    Polylog(PolylogArgs),
    /// Planck spectral table and the Stefan-Boltzmann comparison.
    Planck(PlanckArgs),
    /// Pair a Gaussian test function against a Laurent one-form.
    Pair(PairArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Exponent window for the exactness suite.
    #[arg(long, default_value_t = 64)]
    window: u32,
    /// Truncation order for the series suites.
    #[arg(long, default_value_t = 64)]
    order: usize,
}

#[derive(Args)]
struct BoundaryArgs {
    /// Laurent expression in c, e.g. "3*c^-2 + c".
    #[arg(long)]
    expr: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// Coefficients of exp(bT) as Laurent polynomials in c.
    ExpBt,
    /// Bernoulli numbers B^-_n as exact rationals.
    Bernoulli,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum, default_value = "exp-bt")]
    kind: SeriesKind,
    #[arg(long, default_value_t = 16)]
    order: usize,
}

#[derive(Args)]
struct PolylogArgs {
    /// Order s of the polylogarithm.
    #[arg(long, default_value_t = 2.0)]
    s: f64,
    /// Evaluation point x <= 0 (li_s(x) = Li_s(e^x)).
    #[arg(long, default_value_t = 0.0)]
    x: f64,
    /// Compute the divided moment (γ^s_+ * d li_1)(x) by quadrature
    /// instead of the direct series.
    #[arg(long)]
    moment: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitsArg {
    Si,
    Natural,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct PlanckArgs {
    /// Temperature in Kelvin.
    #[arg(long)]
    temp: f64,
    #[arg(long, value_enum, default_value = "si")]
    units: UnitsArg,
    #[arg(long, value_enum, default_value = "csv")]
    out: OutFormat,
    /// Number of frequency samples across the thermal band.
    #[arg(long, default_value_t = 16)]
    grid: usize,
}

#[derive(Args)]
struct PairArgs {
    /// Laurent expression in c for the one-form p(c) dc.
    #[arg(long)]
    expr: String,
    /// Gaussian center μ.
    #[arg(long, default_value_t = 0.0)]
    center: f64,
    /// Gaussian width w in A·exp(-((ε-μ)/w)²).
    #[arg(long, default_value_t = 1.0)]
    width: f64,
    /// Gaussian amplitude A.
    #[arg(long, default_value_t = 1.0)]
    amplitude: f64,
}

fn load_constants(cli: &Cli) -> Result<PhysConstants, KernelError> {
    match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            PhysConstants::from_json(&text)
        }
        None => Ok(PhysConstants::codata()),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, KernelError> {
    match &cli.command {
        Command::Check(args) => {
            let cfg = CheckConfig {
                window: args.window,
                order: args.order,
                seed: cli.seed,
                tol: cli.tol,
            };
            let consts = load_constants(cli)?;
            let outcomes = run_all(&cfg, &consts)?;
            let failures: Vec<_> = outcomes.iter().filter(|o| !o.pass).cloned().collect();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            } else {
                for o in &outcomes {
                    let status = if o.pass { "pass" } else { "FAIL" };
                    println!("{status}  {:<16} {}", o.name, o.detail);
                }
            }
            if failures.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                if !cli.json {
                    // failure report is always machine-readable
                    println!("{}", serde_json::to_string_pretty(&failures)?);
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Boundary(args) => {
            let p = parse_laurent(&args.expr)?;
            if p.var() != Var::C {
                return Err(KernelError::VariableMismatch(p.var(), Var::C));
            }
            let image = boundary(&p);
            if cli.json {
                println!("{}", serde_json::to_string(&image)?);
            } else {
                println!("{image}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Series(args) => match args.kind {
            SeriesKind::ExpBt => {
                let e = exp_bt(args.order)?;
                if cli.json {
                    let rows: Vec<_> = (0..=args.order).map(|k| e.coeff(k).clone()).collect();
                    println!("{}", serde_json::to_string(&rows)?);
                } else {
                    for k in 0..=args.order {
                        println!("T^{k}: {}", e.coeff(k));
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            SeriesKind::Bernoulli => {
                let rows: Vec<String> = (0..=args.order)
                    .map(|n| format_rational(&bernoulli(n)))
                    .collect();
                if cli.json {
                    println!("{}", serde_json::to_string(&rows)?);
                } else {
                    for (n, b) in rows.iter().enumerate() {
                        println!("B_{n} = {b}");
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Polylog(args) => {
            if args.moment {
                let s = args.s.round();
                if s <= 0.0 || s != args.s {
                    return Err(KernelError::Domain(
                        "--moment requires a positive integer s".into(),
                    ));
                }
                let spec = QuadratureSpec::with_tol(cli.tol);
                let r = gamma_convolve(s as u32, ConvolveWith::DLi1, args.x, &spec)?;
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "s": args.s,
                            "x": args.x,
                            "value": r.value,
                            "certificate": r.certificate,
                        })
                    );
                } else {
                    println!("(γ^{}_+ * d li_1)({}) = {}", s as u32, args.x, r.value);
                    println!(
                        "certificate: error_estimate {} tail_bound {} subdivisions {}",
                        r.certificate.error_estimate,
                        r.certificate.tail_bound,
                        r.certificate.subdivisions
                    );
                }
            } else {
                let v = li_s(args.s, args.x)?;
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({"s": args.s, "x": args.x, "value": v})
                    );
                } else {
                    println!("li_{}({}) = {v}", args.s, args.x);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Planck(args) => {
            let units = match args.units {
                UnitsArg::Si => UnitsMode::Si,
                UnitsArg::Natural => UnitsMode::Natural,
            };
            let consts = load_constants(cli)?.with_units(units);
            let spec = QuadratureSpec::with_tol(cli.tol);
            let result = stefan_boltzmann(args.temp, &consts, &spec)?;
            // grid across the thermal band: x = hν/(k_B T) from 0.5 to 15
            let mut rows = Vec::with_capacity(args.grid);
            for i in 0..args.grid {
                let x = 0.5 + (15.0 - 0.5) * i as f64 / (args.grid.max(2) - 1) as f64;
                let nu = x * consts.kappa() * args.temp;
                rows.push((nu, planck_spectral(nu, args.temp, &consts)?));
            }
            match args.out {
                OutFormat::Csv => {
                    println!("nu_hz,spectral_radiance");
                    for (nu, val) in &rows {
                        println!("{nu},{val}");
                    }
                    println!("integral,closed_form,relative_error");
                    println!(
                        "{},{},{}",
                        result.quadrature_value, result.closed_form, result.relative_error
                    );
                }
                OutFormat::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "grid": rows
                                .iter()
                                .map(|(nu, v)| serde_json::json!({"nu_hz": nu, "value": v}))
                                .collect::<Vec<_>>(),
                            "result": result,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pair(args) => {
            let p = parse_laurent(&args.expr)?;
            let phi = [GaussianSpec {
                center: args.center,
                width: args.width,
                amplitude: args.amplitude,
            }];
            let spec = QuadratureSpec::with_tol(cli.tol);
            let r = pairing_eval(&phi, &p, &spec)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({"value": r.value, "certificate": r.certificate})
                );
            } else {
                println!("{}", r.value);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // malformed input is a usage error
                KernelError::Parse(..)
                | KernelError::VariableMismatch(..)
                | KernelError::Domain(_)
                | KernelError::Precondition(_)
                | KernelError::Io(_)
                | KernelError::Json(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
