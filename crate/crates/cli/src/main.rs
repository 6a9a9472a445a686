//! `distalg`: command-line front end for the distribution kernel.
//!
//! Exit codes: 0 on success, 1 on mathematical or domain errors (and on a
//! failed eigenvalue check), 2 on malformed input or usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use distalg::scalar::display_value;
use distalg::schrodinger::{self, EnergyValue, Side};
use distalg::{
    format_dist, parse_distribution, parse_test_function, Distribution64, Error, OperatorExpr64, Scalar64,
    WaveFunction64,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "distalg", version, about = "Star-product algebra of piecewise-smooth distributions")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for zero tests and eigenvalue checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Half-width of the integration window for inner products.
    #[arg(long, global = true, default_value_t = 40.0)]
    window: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Star product F ** G.
    Star { f: String, g: String },
    /// Strict product F * G (disjoint singular supports only).
    Product { f: String, g: String },
    /// Distributional derivative.
    Derive {
        f: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Pair a distribution with a test function.
    Pair {
        f: String,
        /// Test function, e.g. `bump(0,1)`.
        #[arg(long = "test")]
        test: String,
    },
    /// Check H psi = E psi.
    CheckEigen {
        #[arg(long)]
        op: String,
        #[arg(long)]
        psi: String,
        #[arg(long, allow_negative_numbers = true)]
        energy: f64,
    },
    /// Commutator [H_D, P] psi.
    Commutator {
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long)]
        psi: String,
    },
    /// <H phi, psi> - <phi, H psi>.
    SymmetryDefect {
        #[arg(long)]
        op: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
    },
    /// Normalize and print a distribution.
    Normalize { f: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    #[value(alias = "+")]
    Plus,
    #[value(alias = "-")]
    Minus,
}

enum Outcome {
    Ok(String),
    /// Printed, but the command reports failure.
    Fail(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(out)) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_syntax() { 2 } else { 1 })
        }
    }
}

fn parse(text: &str) -> Result<Distribution64, Error> {
    parse_distribution(text)
}

fn wave(text: &str) -> Result<WaveFunction64, Error> {
    WaveFunction64::new(parse(text)?)
}

fn dist_output(cli: &Cli, d: &Distribution64) -> Outcome {
    if cli.json {
        let mut v = d.to_json_value();
        v["text"] = Value::String(format_dist(d));
        Outcome::Ok(v.to_string())
    } else {
        Outcome::Ok(format_dist(d))
    }
}

fn value_output(cli: &Cli, z: Scalar64) -> Outcome {
    if cli.json {
        Outcome::Ok(json!({ "re": z.re, "im": z.im }).to_string())
    } else {
        Outcome::Ok(display_value(z))
    }
}

fn residual_text(r: f64) -> String {
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r:.3e}")
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Star { f, g } => Ok(dist_output(cli, &parse(f)?.star(&parse(g)?)?)),
        Command::Product { f, g } => {
            let p = parse(f)?.hormander(&parse(g)?).map_err(|e| Error::Context {
                expr: format!("({f})*({g})"),
                source: Box::new(e),
            })?;
            Ok(dist_output(cli, &p))
        }
        Command::Derive { f, order } => Ok(dist_output(cli, &parse(f)?.derivative_n(*order)?)),
        Command::Normalize { f } => Ok(dist_output(cli, &parse(f)?)),
        Command::Pair { f, test } => {
            let t = parse_test_function(test)?;
            Ok(value_output(cli, parse(f)?.pair(&t)?))
        }
        Command::CheckEigen { op, psi, energy } => {
            let op = OperatorExpr64::from_name(op)?;
            let residual = schrodinger::eigen_residual(&op, &wave(psi)?, EnergyValue::new(*energy)?)?;
            let r = residual.max_abs();
            let pass = r <= cli.tol;
            let verdict = if pass { "PASS" } else { "FAIL" };
            let text = if cli.json {
                json!({ "pass": pass, "residual": r, "residual_text": format_dist(&residual) }).to_string()
            } else {
                format!("{verdict} residual {}", residual_text(r))
            };
            Ok(if pass { Outcome::Ok(text) } else { Outcome::Fail(text) })
        }
        Command::Commutator { sign, psi } => {
            let side = match sign {
                SignArg::Plus => Side::Plus,
                SignArg::Minus => Side::Minus,
            };
            Ok(dist_output(cli, &schrodinger::commutator_hd_p(side, &wave(psi)?)?))
        }
        Command::SymmetryDefect { op, phi, psi } => {
            let op = OperatorExpr64::from_name(op)?;
            let d = schrodinger::symmetry_defect(&op, &wave(phi)?, &wave(psi)?, cli.window, 1e-10)?;
            Ok(value_output(cli, distalg::scalar::chop(d, cli.tol)))
        }
    }
}
