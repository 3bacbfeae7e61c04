//! `winf`: JSON in, JSON out, over the winf-core library.
//!
//! Exit status is 0 on success, 1 on a mathematical failure and 2 on
//! malformed input.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use winf_core::exact::{Polynomial, Scalar, DEFAULT_MARGIN};
use winf_core::involution::{apply_sigma, component_basis, validate_symmetry};
use winf_core::matrix::{
    cocycle_c, membership_on_window, phi_hat, phi_map, t_conjugate, AlgebraTag, BandedMatrix, Direction, TVariant,
    WindowedMatrix,
};
use winf_core::verify::{verify, Battery};
use winf_core::weight::{char_poly_search, delta_series, exponent_decompose, f_quasi, quasifinite_check, realize, Weight};
use winf_core::{DiffOp, Error, SignChoice, SymmetricP};

#[derive(Parser)]
#[command(name = "winf", version, about = "Exact computations with differential operators on the circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// JSON input file, or `-` for stdin
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Seed for the randomized batteries
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Series truncation order
    #[arg(long, global = true, default_value_t = 24)]
    order: usize,

    /// Window half-width for matrix checks
    #[arg(long, global = true, default_value_t = 6)]
    window: i64,

    /// Degree bound for annihilator searches
    #[arg(long, global = true, default_value_t = 8)]
    dmax: usize,

    /// Number of singular-vector conditions checked by `charpoly`
    #[arg(long = "k-bound", global = true, default_value_t = 6)]
    k_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check p(x) = ε p(−x + c); input `{p}`
    ValidateP,
    /// Apply σ±; input `{p, c?, sign, x}`
    Sigma,
    /// Bracket in the central extension; input `{a, b}`
    Bracket,
    /// Basis of a graded piece of the anti-fixed subalgebra; input `{p, c?, sign, k, degmax}`
    Basis,
    /// Image under φ_s for p = x; input `{x, s, m, sign}`
    Phi,
    /// Image under the central lift of φ_s; input `{x, s, m, sign}`
    PhiHat,
    /// The cocycle C(A, B); input `{a, b}` (banded matrices)
    Cocycle,
    /// Membership of a banded matrix on the window; input `{matrix, tag, conjugate?}`
    Membership,
    /// Label series Δ of a weight
    Delta,
    /// Quasifiniteness test of a weight
    Quasifinite,
    /// Exponents and multiplicities of a closed-form weight
    Exponents,
    /// Tensor realization of a weight for p = x
    Realize,
    /// Characteristic polynomial of a weight
    Charpoly,
    /// Run the randomized batteries
    Verify {
        /// Comma-separated battery names, `all`, or empty for none
        #[arg(long, default_value = "all")]
        scope: String,
    },
}

enum Failure {
    Input(String),
    Math(String),
    /// A report that is printed as usual but signals failure.
    Report(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Math(e.to_string())
        }
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn parse<T: DeserializeOwned>(text: &str) -> std::result::Result<T, Failure> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Failure::Input(format!("at `{}`: {}", path, e.into_inner()))
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output serializes")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PInput {
    p: Polynomial,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaInput {
    p: Polynomial,
    #[serde(default)]
    c: Option<Scalar>,
    sign: SignChoice,
    x: DiffOp,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairInput<T> {
    a: T,
    b: T,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisInput {
    p: Polynomial,
    #[serde(default)]
    c: Option<Scalar>,
    sign: SignChoice,
    k: i64,
    degmax: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PhiInput {
    x: DiffOp,
    s: Scalar,
    m: usize,
    sign: SignChoice,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum VariantName {
    Half,
    Integer,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum DirectionName {
    Forward,
    Inverse,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Conjugation {
    variant: VariantName,
    direction: DirectionName,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MembershipInput {
    matrix: BandedMatrix,
    tag: AlgebraTag,
    #[serde(default)]
    conjugate: Option<Conjugation>,
}

fn symmetric(p: &Polynomial, c: Option<&Scalar>) -> std::result::Result<SymmetricP, Failure> {
    let sp = validate_symmetry(p)?.ok_or_else(|| Failure::Math(format!("p = {} is not symmetric", p)))?;
    match (sp.free_c(), c) {
        (true, None) => Err(Failure::Input("constant p needs an explicit `c`".into())),
        _ => Ok(sp.resolve(c)?),
    }
}

fn run(cli: &Cli, input: &dyn Fn() -> std::result::Result<String, Failure>) -> Outcome {
    match &cli.command {
        Command::ValidateP => {
            let i: PInput = parse(&input()?)?;
            let sp = validate_symmetry(&i.p)?.ok_or_else(|| Failure::Math(format!("p = {} is not symmetric", i.p)))?;
            Ok(json!({ "epsilon": sp.epsilon(), "c": sp.c_opt() }))
        }
        Command::Sigma => {
            let i: SigmaInput = parse(&input()?)?;
            let sp = symmetric(&i.p, i.c.as_ref())?;
            Ok(to_value(&apply_sigma(&i.x, i.sign, &sp)?))
        }
        Command::Bracket => {
            let i: PairInput<DiffOp> = parse(&input()?)?;
            Ok(to_value(&i.a.bracket_hat(&i.b)))
        }
        Command::Basis => {
            let i: BasisInput = parse(&input()?)?;
            let sp = symmetric(&i.p, i.c.as_ref())?;
            Ok(to_value(&component_basis(i.k, i.degmax, i.sign, &sp)?))
        }
        Command::Phi => {
            let i: PhiInput = parse(&input()?)?;
            Ok(to_value(&phi_map(&i.x, &i.s, i.m, i.sign)?))
        }
        Command::PhiHat => {
            let i: PhiInput = parse(&input()?)?;
            Ok(to_value(&phi_hat(&i.x, &i.s, i.m, i.sign, cli.order)?))
        }
        Command::Cocycle => {
            let i: PairInput<BandedMatrix> = parse(&input()?)?;
            Ok(json!({ "c": cocycle_c(&i.a, &i.b)?.coeffs() }))
        }
        Command::Membership => {
            let i: MembershipInput = parse(&input()?)?;
            let mut win = WindowedMatrix::from_banded(&i.matrix, cli.window);
            if let Some(c) = &i.conjugate {
                let variant = match c.variant {
                    VariantName::Half => TVariant::Half,
                    VariantName::Integer => TVariant::Integer,
                };
                let direction = match c.direction {
                    DirectionName::Forward => Direction::Forward,
                    DirectionName::Inverse => Direction::Inverse,
                };
                win = t_conjugate(&win, variant, direction);
            }
            let m = membership_on_window(&win, i.tag);
            let violation = m.violation.map(|v| json!({ "at": v.at, "mirror": v.mirror, "rule": v.rule }));
            Ok(json!({ "member": m.member, "violation": violation }))
        }
        Command::Delta => {
            let w: Weight = parse(&input()?)?;
            Ok(to_value(&delta_series(&w, cli.order)?))
        }
        Command::Quasifinite => {
            let w: Weight = parse(&input()?)?;
            Ok(to_value(&quasifinite_check(&w, cli.dmax, DEFAULT_MARGIN)?))
        }
        Command::Exponents => {
            let w: Weight = parse(&input()?)?;
            Ok(to_value(&exponent_decompose(&f_quasi(&w)?)?))
        }
        Command::Realize => {
            let w: Weight = parse(&input()?)?;
            Ok(to_value(&realize(&w, cli.order)?))
        }
        Command::Charpoly => {
            let w: Weight = parse(&input()?)?;
            Ok(to_value(&char_poly_search(&w, cli.k_bound, cli.dmax, cli.order, DEFAULT_MARGIN)?))
        }
        Command::Verify { scope } => {
            let batteries = parse_scope(scope)?;
            let report = verify(cli.seed, &batteries);
            if report.passed() {
                Ok(to_value(&report))
            } else {
                Err(Failure::Report(to_value(&report)))
            }
        }
    }
}

fn parse_scope(scope: &str) -> std::result::Result<Vec<Battery>, Failure> {
    match scope.trim() {
        "all" => Ok(Battery::ALL.to_vec()),
        "" => Ok(Vec::new()),
        list => list
            .split(',')
            .map(|name| {
                Battery::parse(name.trim()).ok_or_else(|| Failure::Input(format!("unknown battery `{}`", name.trim())))
            })
            .collect(),
    }
}

fn read_input(path: &str) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Input(format!("cannot read {}: {}", path, e)))?;
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli, &|| read_input(&cli.input)) {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("output serializes"));
            ExitCode::SUCCESS
        }
        Err(Failure::Report(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("output serializes"));
            ExitCode::from(1)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("invalid input: {}", msg);
            ExitCode::from(2)
        }
    }
}
