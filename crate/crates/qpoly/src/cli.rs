//! Command-line front end. [`run`] does the work and returns the exit code,
//! the JSON document for standard output and diagnostics for standard
//! error, so it can be driven without spawning a process.

use clap::{Parser, Subcommand, ValueEnum};
use qpoly_core::{
    annihilator_hz, classify, dims, interpolate_hz, lagrange_basis, newton_interpolate_hz,
    sudbery_basis_with, sym_annihilator, symmetrized_regular_basis, DimKind, Error, LagrangeChoice,
    PointSet, Quaternion, SudberyIndexing, Tolerance,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::format::{self, number, FormatError, Poly};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when valid input has no solution (e.g. not unisolvent).
pub const EXIT_MATH: i32 = 2;
/// Exit status for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 3;

/// Number of random probes used by the seeded diagnostics.
const PROBES: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "qpoly", version, about = "Quaternionic polynomial interpolation")]
pub struct Cli {
    /// Relative tolerance for similarity, pivoting and classification.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_EPS)]
    pub tol: f64,
    /// Seed for randomized diagnostics (probe points, shuffles).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left interpolation from polynomials of degree ≤ n in H[z].
    InterpHz {
        /// Nodes: a JSON list of [t,x,y,z], inline or as a file path.
        #[arg(long)]
        points: String,
        /// Values at the nodes, inline JSON or a file path.
        #[arg(long)]
        values: String,
    },
    /// Order-independent interpolation from symmetrized products.
    InterpSym {
        #[arg(long)]
        points: String,
        #[arg(long)]
        values: String,
        /// 1: normalized symmetrized annihilator; 2: symmetrized factor products.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        choice: u8,
    },
    /// Polynomial vanishing at every node.
    Annihilator {
        #[arg(long)]
        points: String,
        #[arg(long, value_enum, default_value_t = Form::Hz)]
        form: Form,
    },
    /// Basis of the regular homogeneous polynomials of degree n.
    Basis {
        #[arg(long, value_enum)]
        kind: BasisKind,
        #[arg(long)]
        n: usize,
        /// Use the commonly printed (non-regular) index convention.
        #[arg(long)]
        as_printed: bool,
    },
    /// Whether a polynomial is regular and harmonic.
    Check {
        /// A txyz or formal polynomial, inline JSON or a file path.
        #[arg(long)]
        poly: String,
    },
    /// Dimension of a space of polynomials.
    Dims {
        #[arg(long, value_enum)]
        kind: DimArg,
        #[arg(long)]
        n: u64,
    },
    /// Evaluate a polynomial at a quaternion.
    Eval {
        #[arg(long)]
        poly: String,
        /// The point, as [t,x,y,z] or a real number.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Evaluation side for formal polynomials.
        #[arg(long, value_enum)]
        side: Option<Side>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Hz,
    Sym,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    Sudbery,
    Symmetrized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DimArg {
    Hom,
    Pol,
    Reg,
    Harm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

/// Everything one invocation produces.
#[derive(Clone, Debug, PartialEq)]
pub struct Response {
    pub code: i32,
    /// Printed on standard output; `None` only for `--help`/`--version`.
    pub body: Option<Value>,
    /// Printed on standard error, one line each.
    pub diagnostics: Vec<String>,
}

#[derive(Debug)]
enum Failure {
    Math(Error),
    Input { reason: &'static str, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            Failure::Math(e)
        } else {
            Failure::Input { reason: e.reason(), message: e.to_string() }
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let reason = match e {
            FormatError::Io { .. } => "unreadable-input",
            _ => "parse-error",
        };
        Failure::Input { reason, message: e.to_string() }
    }
}

fn input(reason: &'static str, message: impl Into<String>) -> Failure {
    Failure::Input { reason, message: message.into() }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Response
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{text}");
                return Response { code: EXIT_OK, body: None, diagnostics: Vec::new() };
            }
            Response {
                code: EXIT_INPUT,
                body: Some(error_body("invalid-arguments", text.trim_end())),
                diagnostics: vec![text.trim_end().to_owned()],
            }
        }
    }
}

pub fn run(cli: &Cli) -> Response {
    let mut diagnostics = Vec::new();
    let result = Tolerance::new(cli.tol)
        .ok_or_else(|| input("invalid-tolerance", format!("tolerance must be positive and finite, got {}", cli.tol)))
        .and_then(|tol| dispatch(cli, tol, &mut diagnostics));
    match result {
        Ok(mut body) => {
            body.as_object_mut().expect("command output is an object").insert("status".into(), json!("ok"));
            Response { code: EXIT_OK, body: Some(body), diagnostics }
        }
        Err(Failure::Math(e)) => {
            diagnostics.push(format!("error: {e}"));
            Response { code: EXIT_MATH, body: Some(error_body(e.reason(), &e.to_string())), diagnostics }
        }
        Err(Failure::Input { reason, message }) => {
            diagnostics.push(format!("error: {message}"));
            Response { code: EXIT_INPUT, body: Some(error_body(reason, &message)), diagnostics }
        }
    }
}

fn error_body(reason: &str, message: &str) -> Value {
    json!({ "status": "error", "reason": reason, "message": message })
}

fn dispatch(cli: &Cli, tol: Tolerance, diag: &mut Vec<String>) -> Result<Value, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match &cli.command {
        Command::InterpHz { points, values } => {
            let (pts, vals) = load_data(points, values, tol)?;
            let poly = interpolate_hz(&pts, &vals)?;
            let newton = match newton_interpolate_hz(&pts, &vals) {
                Ok((n, diffs)) => {
                    let gap = probes(&mut rng)
                        .map(|x| poly.eval_left(x).dist(n.eval_left(x)) / poly.eval_left(x).norm().max(1.0))
                        .fold(0.0, f64::max);
                    diag.push(format!("newton form agrees with direct solve to {gap:e} at {PROBES} probes"));
                    json!({ "max_relative_diff": number(gap), "divided_differences": format::quats_to_value(&diffs) })
                }
                Err(e) => {
                    diag.push(format!("newton form unavailable: {e}"));
                    Value::Null
                }
            };
            Ok(json!({ "poly": format::formal_to_value(&poly), "diagnostics": { "newton": newton } }))
        }
        Command::InterpSym { points, values, choice } => {
            let (pts, vals) = load_data(points, values, tol)?;
            let choice = LagrangeChoice::from_number(*choice).expect("clap restricts choice to 1 or 2");
            let basis = lagrange_basis(&pts, choice)?;
            let poly = basis.interpolate(&vals)?;

            let mut order: Vec<usize> = (0..pts.len()).collect();
            order.shuffle(&mut rng);
            let shuffled = PointSet::new(order.iter().map(|&i| pts.points()[i]).collect(), tol)?;
            let other = lagrange_basis(&shuffled, choice)?;
            let perm = order
                .iter()
                .enumerate()
                .map(|(pos, &i)| other.polys()[pos].max_diff(&basis.polys()[i]))
                .fold(0.0, f64::max);
            let (delta, unity) = (basis.delta_defect(), basis.unity_defect());
            diag.push(format!("delta defect {delta:e}, permutation defect {perm:e}, unity defect {unity:e}"));
            Ok(json!({
                "poly": format::txyz_to_value(&poly),
                "basis": format::basis_to_value(&basis),
                "diagnostics": {
                    "delta_defect": number(delta),
                    "permutation_defect": number(perm),
                    "unity_defect": number(unity),
                },
            }))
        }
        Command::Annihilator { points, form } => {
            let pts = load_points(points, tol)?;
            let (poly, residual) = match form {
                Form::Hz => {
                    let p = annihilator_hz(&pts)?;
                    let r = pts.points().iter().map(|&x| p.eval_left(x).norm()).fold(0.0, f64::max);
                    (Poly::Formal(p), r)
                }
                Form::Sym => {
                    let p = sym_annihilator(pts.points())?;
                    let r = pts.points().iter().map(|&x| p.eval(x).norm()).fold(0.0, f64::max);
                    (Poly::Txyz(p), r)
                }
            };
            diag.push(format!("largest value at a node {residual:e}"));
            Ok(json!({ "poly": poly.to_value(), "diagnostics": { "max_node_value": number(residual) } }))
        }
        Command::Basis { kind, n, as_printed } => {
            let (name, polys, indexing) = match kind {
                BasisKind::Sudbery => {
                    let indexing = if *as_printed { SudberyIndexing::AsPrinted } else { SudberyIndexing::Corrected };
                    let label = if *as_printed { "as-printed" } else { "corrected" };
                    ("sudbery", sudbery_basis_with(*n, indexing)?, Some(label))
                }
                BasisKind::Symmetrized => {
                    if *as_printed {
                        return Err(input("invalid-arguments", "--as-printed applies to --kind sudbery only"));
                    }
                    ("symmetrized", symmetrized_regular_basis(*n)?, None)
                }
            };
            let mut body = json!({
                "kind": name,
                "n": n,
                "polys": polys.iter().map(format::txyz_to_value).collect::<Vec<_>>(),
            });
            if let Some(label) = indexing {
                body["indexing"] = json!(label);
            }
            Ok(body)
        }
        Command::Check { poly } => {
            let p = Poly::from_value(&format::load(poly)?)?.into_txyz();
            let c = classify(&p, tol)?;
            Ok(json!({ "regular": c.regular, "harmonic": c.harmonic }))
        }
        Command::Dims { kind, n } => {
            let (name, kind) = match kind {
                DimArg::Hom => ("hom", DimKind::Hom),
                DimArg::Pol => ("pol", DimKind::Pol),
                DimArg::Reg => ("reg", DimKind::Reg),
                DimArg::Harm => ("harm", DimKind::Harm),
            };
            if *n > 1_000_000 {
                return Err(input("invalid-arguments", "--n is limited to 1000000"));
            }
            Ok(json!({ "kind": name, "n": n, "dim": dims(kind, *n) }))
        }
        Command::Eval { poly, at, side } => {
            let p = Poly::from_value(&format::load(poly)?)?;
            let a = format::quat_from_value(&format::load(at)?)?;
            let value = match (&p, side) {
                (Poly::Formal(f), None | Some(Side::Left)) => f.eval_left(a),
                (Poly::Formal(f), Some(Side::Right)) => f.eval_right(a),
                (Poly::Txyz(t), None) => t.eval(a),
                (Poly::Txyz(_), Some(_)) => {
                    return Err(input("invalid-arguments", "--side applies to formal polynomials only"))
                }
            };
            Ok(json!({ "value": format::quat_to_value(value) }))
        }
    }
}

fn load_points(arg: &str, tol: Tolerance) -> Result<PointSet, Failure> {
    let nodes = format::quats_from_value(&format::load(arg)?)?;
    Ok(PointSet::new(nodes, tol)?)
}

fn load_data(points: &str, values: &str, tol: Tolerance) -> Result<(PointSet, Vec<Quaternion>), Failure> {
    let pts = load_points(points, tol)?;
    let vals = format::quats_from_value(&format::load(values)?)?;
    if vals.len() != pts.len() {
        return Err(input(
            "dimension-mismatch",
            format!("{} values for {} points", vals.len(), pts.len()),
        ));
    }
    Ok((pts, vals))
}

fn probes(rng: &mut ChaCha8Rng) -> impl Iterator<Item = Quaternion> + '_ {
    (0..PROBES).map(move |_| {
        Quaternion::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
    })
}
