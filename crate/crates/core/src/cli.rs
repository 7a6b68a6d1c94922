//! Command-line front end. `run` never panics and never touches the real
//! stdout/stderr, so the binary and the tests share one code path.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::minorbit::min_orbit_report;
use crate::orbits::{
    closure_leq_rank, dominance_leq, hasse_diagram, orbit_dim_partition, Partition,
};
use crate::rational::{format_rational, GaussianRational};
use crate::rootsys::{CartanType, Family, Root, RootSystem};
use crate::sln::{
    centralizer_dim, invariants_phi, jordan_chevalley, killing, orbit_dim, same_orbit, MatrixJson,
    SlnElement,
};
use crate::ssorbits::{
    compactification_dims, in_fundamental_domain, is_regular_semisimple, pi_of_h, ss_orbit_dim,
    TorusElement,
};
use crate::topology::{exponents, latex_factored};
use crate::triples::{jacobson_morozov_sln, kostant_principal, verify_matrix_triple, MatrixTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest rank the CLI accepts; root systems grow quadratically.
pub const MAX_RANK: usize = 32;
/// Largest `n` for `poset`; there are p(20) = 627 orbits.
pub const MAX_POSET_N: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "orbitkit",
    version,
    about = "Exact computations with adjoint orbits"
)]
struct Cli {
    /// Write the result to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Cartan family, one of A..G.
    #[arg(long = "type", value_name = "FAMILY")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Args)]
struct FormatArgs {
    /// Emit JSON (the default).
    #[arg(long, conflicts_with_all = ["dot", "latex"])]
    json: bool,
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    latex: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All roots and the Cartan matrix.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        json: bool,
    },
    /// The maximal root θ.
    Maxroot {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Root data of the parabolic attached to a subset of simple roots.
    Parabolic {
        #[command(flatten)]
        ty: TypeArgs,
        /// 1-based simple root indices, e.g. "1,3". Empty for the Borel.
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// A reduced word for the longest Weyl group element.
    W0 {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Killing form of two sl(n) matrices.
    Killing {
        #[arg(long, value_name = "PATH", num_args = 1, required = true)]
        matrix: Vec<PathBuf>,
    },
    /// Jordan–Chevalley decomposition.
    Jordan {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
    },
    /// Adjoint quotient: characteristic polynomial coefficients c2..cn.
    Phi {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
    },
    /// Orbit dimension of a matrix or of a nilpotent orbit given by a partition.
    OrbitDim {
        #[arg(
            long,
            value_name = "PATH",
            conflicts_with = "partition",
            required_unless_present = "partition"
        )]
        matrix: Option<PathBuf>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Whether two matrices are conjugate.
    SameOrbit {
        #[arg(long, value_name = "PATH", num_args = 1, required = true)]
        matrix: Vec<PathBuf>,
    },
    /// Kostant's principal sl2-triple.
    Triple {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// A Jacobson–Morozov triple through a nilpotent matrix.
    Jm {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
    },
    /// Hasse diagram of nilpotent orbits in sl(n).
    Poset {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Closure order between two nilpotent orbits.
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
    },
    /// Semisimple orbit data at h, given over the simple coroots.
    Ssorbit {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated coordinates such as "1,1/2+3 i,-i".
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Poincaré polynomial from the principal sl2 decomposition.
    Poincare {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Minimal nilpotent orbit data.
    Minorbit {
        #[command(flatten)]
        ty: TypeArgs,
    },
}

/// What a finished invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String, String),
    Domain(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let hint = hint_for(&e).to_string();
        match e {
            Error::InvalidRank { .. }
            | Error::UnknownFamily(_)
            | Error::IndexOutOfRange { .. }
            | Error::InvalidPartition(_)
            | Error::Parse(_) => Failure::Usage(e.to_string(), hint),
            _ => Failure::Domain(e.to_string(), hint),
        }
    }
}

fn hint_for(e: &Error) -> &'static str {
    match e {
        Error::InvalidRank { .. } => "ranks: A>=1, B>=2, C>=2, D>=3, E6-E8, F4, G2",
        Error::UnknownFamily(_) => "use one of A, B, C, D, E, F, G",
        Error::IndexOutOfRange { .. } => "simple root indices are 1-based",
        Error::DimensionMismatch { .. } => "all inputs must have the same size",
        Error::NotSquare { .. } | Error::NotTraceless(_) => {
            "matrices must be square with trace zero"
        }
        Error::NotNilpotent => "the input must be a nilpotent matrix",
        Error::IrrationalSpectrum => "only matrices with rational eigenvalues are supported",
        Error::NotInFundamentalDomain { .. } => "pick h with Re a(h) >= 0 on simple roots",
        Error::NonRealTorusElement => "the input must be real",
        Error::InvalidPartition(_) => "partitions are comma-separated positive parts, e.g. 3,1,1",
        Error::NoMinimalOrbit(_) => "needs n >= 2",
        Error::Singular => "the system has no unique solution",
        Error::Parse(_) => "check the value format, see --help",
        Error::Internal(_) => "this is a bug",
    }
}

fn error_line(error: &str, hint: &str) -> String {
    let mut s = json!({ "error": error, "hint": hint }).to_string();
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let rendered = e.render().to_string();
                    let first = rendered
                        .lines()
                        .next()
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ")
                        .to_string();
                    Outcome {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: error_line(&first, "run with --help for usage"),
                    }
                }
            };
        }
    };
    let result = execute(&cli.command).and_then(|text| match &cli.out {
        Some(path) => fs::write(path, &text).map(|_| String::new()).map_err(|e| {
            Failure::Usage(
                format!("cannot write {}: {e}", path.display()),
                "check the --out path".into(),
            )
        }),
        None => Ok(text),
    });
    match result {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(e, h)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: error_line(&e, &h),
        },
        Err(Failure::Domain(e, h)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: error_line(&e, &h),
        },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn root_system(ty: &TypeArgs) -> Result<RootSystem, Failure> {
    let family: Family = ty.family.parse()?;
    if ty.rank > MAX_RANK {
        return Err(Failure::Usage(
            format!("rank {} exceeds the supported maximum {MAX_RANK}", ty.rank),
            "use a smaller --rank".into(),
        ));
    }
    Ok(RootSystem::build(CartanType::new(family, ty.rank)?)?)
}

fn read_matrix(path: &Path) -> Result<SlnElement, Failure> {
    let text = fs::read_to_string(path).map_err(|e| {
        Failure::Usage(
            format!("cannot read {}: {e}", path.display()),
            "--matrix takes a path to a JSON file".into(),
        )
    })?;
    let m: MatrixJson = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(m.to_element()?)
}

fn two_matrices(paths: &[PathBuf]) -> Result<(SlnElement, SlnElement), Failure> {
    if paths.len() != 2 {
        return Err(Failure::Usage(
            format!("expected exactly two --matrix flags, got {}", paths.len()),
            "pass --matrix A.json --matrix B.json".into(),
        ));
    }
    Ok((read_matrix(&paths[0])?, read_matrix(&paths[1])?))
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn one_based(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

fn matrix_value(x: &SlnElement) -> Value {
    serde_json::to_value(MatrixJson::from_element(x)).expect("matrix json serializes")
}

fn triple_value(t: &MatrixTriple) -> Value {
    json!({ "x": matrix_value(&t.x), "h": matrix_value(&t.h), "y": matrix_value(&t.y) })
}

fn roots_value(roots: &[Root]) -> Value {
    json!(roots.iter().map(Root::coeffs).collect::<Vec<_>>())
}

fn rationals(v: &[crate::rational::Rational]) -> Value {
    json!(v.iter().map(format_rational).collect::<Vec<_>>())
}

fn execute(cmd: &Command) -> Result<String, Failure> {
    match cmd {
        Command::Roots { ty, .. } => Ok(pretty(&root_system(ty)?.to_json())),
        Command::Maxroot { ty } => {
            let rs = root_system(ty)?;
            let theta = rs.maximal_root();
            Ok(pretty(&json!({
                "type": rs.ctype().to_string(),
                "theta": theta.coeffs(),
                "height": theta.height(),
            })))
        }
        Command::Parabolic { ty, subset } => {
            let rs = root_system(ty)?;
            let mut s = BTreeSet::new();
            for tok in subset.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let i: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad simple root index {tok:?}")))?;
                if i == 0 || i > rs.rank() {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        rank: rs.rank(),
                    }
                    .into());
                }
                s.insert(i - 1);
            }
            let p = rs.parabolic_data(&s)?;
            Ok(pretty(&json!({
                "type": rs.ctype().to_string(),
                "subset": one_based(&p.subset),
                "dual_subset": one_based(&rs.dual_subset(&s)?),
                "levi_positive_roots": roots_value(&p.delta_s_plus),
                "dim_p": p.dim_p,
                "dim_l": p.dim_l,
                "dim_u": p.dim_u,
            })))
        }
        Command::W0 { ty } => {
            let rs = root_system(ty)?;
            let w = rs.longest_element();
            Ok(pretty(&json!({
                "type": rs.ctype().to_string(),
                "word": w.letters().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "length": w.len(),
            })))
        }
        Command::Killing { matrix } => {
            let (x, y) = two_matrices(matrix)?;
            Ok(pretty(
                &json!({ "killing": format_rational(&killing(&x, &y)?) }),
            ))
        }
        Command::Jordan { matrix } => {
            let x = read_matrix(matrix)?;
            let jc = jordan_chevalley(&x)?;
            Ok(pretty(&json!({
                "semisimple": matrix_value(&jc.semisimple),
                "nilpotent": matrix_value(&jc.nilpotent),
            })))
        }
        Command::Phi { matrix } => {
            let x = read_matrix(matrix)?;
            let phi = invariants_phi(&x);
            Ok(pretty(&json!({
                "n": x.n(),
                "phi": rationals(&phi.0),
                "nilpotent": phi.is_zero(),
            })))
        }
        Command::OrbitDim { matrix, partition } => match (matrix, partition) {
            (Some(path), _) => {
                let x = read_matrix(path)?;
                Ok(pretty(&json!({
                    "n": x.n(),
                    "orbit_dim": orbit_dim(&x),
                    "centralizer_dim": centralizer_dim(&x),
                })))
            }
            (None, Some(p)) => {
                let lambda = parse_partition(p)?;
                let n = lambda.n();
                let d = orbit_dim_partition(&lambda);
                Ok(pretty(&json!({
                    "n": n,
                    "partition": lambda.parts(),
                    "orbit_dim": d,
                    "centralizer_dim": n * n - 1 - d,
                })))
            }
            (None, None) => Err(Failure::Usage(
                "one of --matrix or --partition is required".into(),
                "run with --help for usage".into(),
            )),
        },
        Command::SameOrbit { matrix } => {
            let (x, y) = two_matrices(matrix)?;
            Ok(pretty(&json!({ "same_orbit": same_orbit(&x, &y)? })))
        }
        Command::Triple { ty } => {
            let rs = root_system(ty)?;
            let t = kostant_principal(&rs)?;
            Ok(pretty(&json!({
                "type": rs.ctype().to_string(),
                "h_coroot_coords": rationals(&t.h.0),
                "c": rationals(&t.c),
                "verified": true,
            })))
        }
        Command::Jm { matrix } => {
            let x = read_matrix(matrix)?;
            let t = jacobson_morozov_sln(&x)?;
            if !verify_matrix_triple(&t)? {
                return Err(
                    Error::Internal("constructed triple fails the relations".into()).into(),
                );
            }
            Ok(pretty(&triple_value(&t)))
        }
        Command::Poset { n, format } => {
            if *n == 0 || *n > MAX_POSET_N {
                return Err(Failure::Usage(
                    format!("--n must be between 1 and {MAX_POSET_N}"),
                    "try --n 4".into(),
                ));
            }
            if format.latex {
                return Err(Failure::Usage(
                    "poset has no LaTeX output".into(),
                    "use --json or --dot".into(),
                ));
            }
            let poset = hasse_diagram(*n);
            if format.dot {
                Ok(poset.to_dot())
            } else {
                Ok(pretty(&poset.to_json()))
            }
        }
        Command::Closure { n, lower, upper } => {
            let lo = parse_partition(lower)?;
            let up = parse_partition(upper)?;
            if lo.n() != *n || up.n() != *n {
                return Err(Failure::Usage(
                    format!("partitions must sum to {n} (got {} and {})", lo.n(), up.n()),
                    "both --lower and --upper are partitions of --n".into(),
                ));
            }
            Ok(pretty(&json!({
                "dominance": dominance_leq(&lo, &up)?,
                "rank_oracle": closure_leq_rank(&lo, &up)?,
            })))
        }
        Command::Ssorbit { ty, h } => {
            let rs = root_system(ty)?;
            let coords = h
                .split(',')
                .map(|z| {
                    z.trim()
                        .parse::<GaussianRational>()
                        .map_err(|_| Error::Parse(format!("bad coordinate {z:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != rs.rank() {
                return Err(Failure::Usage(
                    format!(
                        "--h has {} coordinates, rank is {}",
                        coords.len(),
                        rs.rank()
                    ),
                    "give one coordinate per simple coroot".into(),
                ));
            }
            let h = TorusElement::new(coords);
            if !in_fundamental_domain(&rs, &h)? {
                return Ok(pretty(&json!({
                    "in_D": false,
                    "Pi_h": null,
                    "orbit_dim": null,
                    "regular": null,
                    "dims": null,
                })));
            }
            let dims = compactification_dims(&rs, &h)?;
            Ok(pretty(&json!({
                "in_D": true,
                "Pi_h": one_based(&pi_of_h(&rs, &h)?),
                "orbit_dim": ss_orbit_dim(&rs, &h)?,
                "regular": is_regular_semisimple(&rs, &h)?,
                "dims": [dims.orbit, dims.gp, dims.gp_star],
            })))
        }
        Command::Poincare { ty, format } => {
            let rs = root_system(ty)?;
            if format.dot {
                return Err(Failure::Usage(
                    "poincare has no DOT output".into(),
                    "use --json or --latex".into(),
                ));
            }
            let e = exponents(&rs)?;
            if format.latex {
                Ok(format!("{}\n", latex_factored(&e.dims)))
            } else {
                Ok(pretty(&json!({ "dims": e.dims, "poly": e.poly })))
            }
        }
        Command::Minorbit { ty } => {
            let rs = root_system(ty)?;
            let r = min_orbit_report(&rs)?;
            Ok(pretty(&json!({
                "type": rs.ctype().to_string(),
                "theta": r.theta.coeffs(),
                "pi_theta": one_based(&r.pi_theta),
                "dim_P_Omin": r.dim_p_omin,
                "dim_Omin": r.dim_omin,
            })))
        }
    }
}
