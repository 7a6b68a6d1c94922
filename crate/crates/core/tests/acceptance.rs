//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Set `ORBITKIT_BLESS=1` to rewrite the golden CLI outputs.

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use orbitkit::cli::{run, Outcome};
use orbitkit::linalg::QMatrix;
use orbitkit::minorbit::{min_orbit_report, type_a_flag_check};
use orbitkit::orbits::{
    closure_leq_rank, dominance_leq, hasse_diagram, jordan_matrix, minimal_orbit,
    orbit_dim_partition, partitions, regular_orbit, Partition,
};
use orbitkit::rational::{frac, int, GaussianRational, Rational};
use orbitkit::rootsys::{CartanType, Family, RootSystem};
use orbitkit::sln::{
    ad_matrix, bracket, centralizer_dim, invariants_phi, is_nilpotent, is_semisimple,
    jordan_chevalley, kks_matrix, orbit_dim, same_kernel, SlnElement,
};
use orbitkit::ssorbits::verify_dual_parabolic;
use orbitkit::ssorbits::{compactification_dims, in_fundamental_domain, TorusElement};
use orbitkit::topology::{
    dims_from_heights, exponents, height_distribution, peel_strings, principal_ad_spectrum,
};
use orbitkit::triples::{kostant_principal, principal_triple_sln, verify_matrix_triple};

type Check = std::result::Result<String, String>;
type Criterion = (
    &'static str,
    &'static str,
    Box<dyn FnOnce(&mut StdRng) -> Check>,
);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(
    r: std::result::Result<T, E>,
    what: &str,
) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn listed_types() -> Vec<CartanType> {
    use Family::*;
    let mut v = Vec::new();
    let mut push = |f, ranks: std::ops::RangeInclusive<usize>| {
        for r in ranks {
            v.push(CartanType::new(f, r).unwrap());
        }
    };
    push(A, 1..=7);
    push(B, 2..=4);
    push(C, 2..=4);
    push(D, 3..=5);
    push(E, 6..=8);
    push(F, 4..=4);
    push(G, 2..=2);
    v
}

fn root_count(ct: CartanType) -> usize {
    let n = ct.rank();
    match ct.family() {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::E => [72, 126, 240][n - 6],
        Family::F => 48,
        Family::G => 12,
    }
}

fn build(ct: CartanType) -> std::result::Result<RootSystem, String> {
    ok(RootSystem::build(ct), &ct.to_string())
}

fn ac01_root_systems() -> Check {
    let types = listed_types();
    for &ct in &types {
        let rs = build(ct)?;
        let set: HashSet<&[i64]> = rs.roots().iter().map(|r| r.coeffs()).collect();
        ensure!(set.len() == rs.roots().len(), "{ct}: duplicate roots");
        for root in rs.roots() {
            ensure!(rs.contains(root.neg().coeffs()), "{ct}: -{root} missing");
            for i in 0..rs.rank() {
                let s = rs.reflect_root(i, root);
                ensure!(rs.contains(s.coeffs()), "{ct}: s_{i}({root}) = {s} missing");
            }
        }
        ensure!(
            rs.positive_roots().len() * 2 == rs.roots().len(),
            "{ct}: |Δ| != 2|Δ₊|"
        );
        ensure!(
            rs.roots().len() == root_count(ct),
            "{ct}: |Δ| = {}, expected {}",
            rs.roots().len(),
            root_count(ct)
        );
        ensure!(
            rs.dim() == rs.rank() + rs.roots().len(),
            "{ct}: dim bookkeeping"
        );
    }
    let e8 = build(CartanType::new(Family::E, 8).unwrap())?;
    ensure!(
        e8.roots().len() == 240 && e8.dim() == 248,
        "E8: {} roots",
        e8.roots().len()
    );
    Ok(format!("{} types, E8 |Δ| = 240, dim 248", types.len()))
}

fn ac02_kostant() -> Check {
    let two = int(2);
    let types = listed_types();
    for &ct in &types {
        let rs = build(ct)?;
        let t = ok(kostant_principal(&rs), &ct.to_string())?;
        let values = ok(rs.simple_values(&t.h.0), "simple values")?;
        ensure!(values.iter().all(|v| *v == two), "{ct}: α(h) != 2");
        // The Cartan system for c is solved with no residual.
        let back = ok(rs.coroot_coords_from_values(&values), "solve")?;
        ensure!(back == t.c, "{ct}: coefficient solve is not exact");
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                if i != j {
                    let mut d = vec![0i64; rs.rank()];
                    d[i] = 1;
                    d[j] = -1;
                    ensure!(!rs.contains(&d), "{ct}: α{i} - α{j} is a root");
                }
            }
        }
    }
    for n in 2..=8 {
        let t = principal_triple_sln(n);
        ensure!(
            ok(verify_matrix_triple(&t), "verify")?,
            "principal triple of sl{n} fails"
        );
    }
    Ok(format!(
        "{} types; sl2..sl8 matrix triples exact",
        types.len()
    ))
}

fn rand_rational(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

fn make_traceless(m: QMatrix) -> SlnElement {
    let n = m.rows();
    let shift = m.trace() / int(n as i64);
    SlnElement::new(m.sub(&QMatrix::identity(n).scale(&shift))).unwrap()
}

fn random_traceless(rng: &mut StdRng, n: usize) -> SlnElement {
    make_traceless(QMatrix::from_fn(n, n, |_, _| rand_rational(rng)))
}

fn random_invertible(rng: &mut StdRng, n: usize) -> QMatrix {
    let l = QMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Greater => int(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Less => Rational::zero(),
    });
    let u = QMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(rng.gen_range(1..=2)),
        std::cmp::Ordering::Less => rand_rational(rng),
        std::cmp::Ordering::Greater => Rational::zero(),
    });
    l.mul(&u)
}

fn random_partition(rng: &mut StdRng, n: usize) -> Partition {
    let all = partitions(n);
    all[rng.gen_range(0..all.len())].clone()
}

/// A random conjugate of a block matrix whose blocks are Jordan blocks
/// with eigenvalues drawn from a small set, so eigenvalues repeat and the
/// nilpotent part is usually nonzero.
fn random_structured(rng: &mut StdRng, n: usize) -> SlnElement {
    let lambda = random_partition(rng, n);
    let j = jordan_matrix(&lambda).into_matrix();
    let mut eig = Vec::with_capacity(n);
    for &p in lambda.parts() {
        let e = int(rng.gen_range(-2..=2));
        eig.extend(std::iter::repeat_n(e, p));
    }
    let m = j.add(&QMatrix::diagonal(&eig));
    let g = random_invertible(rng, n);
    let x = make_traceless(m);
    x.conjugate(&g).unwrap()
}

fn ac03_jordan_chevalley(rng: &mut StdRng) -> Check {
    let mut nontrivial = 0;
    for n in 2..=5 {
        for k in 0..200 {
            let x = if k % 2 == 0 {
                random_traceless(rng, n)
            } else {
                random_structured(rng, n)
            };
            let jc = ok(jordan_chevalley(&x), "jordan_chevalley")?;
            ensure!(
                ok(jc.semisimple.add(&jc.nilpotent), "add")? == x,
                "x != x_s + x_n\n{}",
                x.matrix()
            );
            ensure!(
                is_semisimple(&jc.semisimple),
                "x_s not semisimple\n{}",
                x.matrix()
            );
            ensure!(
                is_nilpotent(&jc.nilpotent),
                "x_n not nilpotent\n{}",
                x.matrix()
            );
            ensure!(
                ok(bracket(&jc.semisimple, &jc.nilpotent), "bracket")?.is_zero(),
                "[x_s, x_n] != 0\n{}",
                x.matrix()
            );
            let again = ok(jordan_chevalley(&jc.semisimple), "jordan_chevalley")?;
            ensure!(
                again.semisimple == jc.semisimple && again.nilpotent.is_zero(),
                "JC(x_s) != (x_s, 0)"
            );
            if !jc.nilpotent.is_zero() {
                nontrivial += 1;
            }
        }
    }
    Ok(format!(
        "800 matrices (n = 2..5, 200 each), {nontrivial} with x_n != 0; exact"
    ))
}

fn ac04_nilpotent_cone(rng: &mut StdRng) -> Check {
    for n in 2..=5 {
        for _ in 0..100 {
            let lambda = random_partition(rng, n);
            let g = random_invertible(rng, n);
            let x = ok(jordan_matrix(&lambda).conjugate(&g), "conjugate")?;
            ensure!(
                invariants_phi(&x).is_zero(),
                "Φ != 0 on a conjugate of J{lambda}"
            );
        }
        let mut found = 0;
        while found < 100 {
            let x = random_traceless(rng, n);
            // Oracle independent of Φ: x^n = 0.
            if x.matrix().pow(n as u32).is_zero() {
                continue;
            }
            ensure!(
                !invariants_phi(&x).is_zero(),
                "Φ = 0 on non-nilpotent\n{}",
                x.matrix()
            );
            found += 1;
        }
    }
    Ok("n = 2..5: 100 nilpotent with Φ = 0, 100 non-nilpotent with Φ != 0; zero tolerance".into())
}

fn ac05_dominance_closure() -> Check {
    let mut pairs = 0;
    for n in 1..=8 {
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                let d = ok(dominance_leq(a, b), "dominance")?;
                let r = ok(closure_leq_rank(a, b), "rank oracle")?;
                ensure!(d == r, "n={n}: {a} vs {b}: dominance {d}, rank {r}");
                pairs += 1;
            }
        }
        if n == 8 {
            ensure!(ps.len() == 22, "p(8) = {}", ps.len());
        }
    }
    Ok(format!(
        "{pairs} ordered pairs for n <= 8 (484 at n = 8) agree"
    ))
}

fn ac06_dimensions() -> Check {
    for n in 1..=6 {
        for lambda in partitions(n) {
            let d = orbit_dim_partition(&lambda);
            let c = centralizer_dim(&jordan_matrix(&lambda));
            ensure!(d == n * n - 1 - c, "{lambda}: {d} != {} - {c}", n * n - 1);
        }
        let reg = ok(regular_orbit(n), "regular")?;
        ensure!(orbit_dim_partition(&reg) == n * n - n, "regular sl{n}");
        if n >= 2 {
            let min = ok(minimal_orbit(n), "minimal")?;
            ensure!(orbit_dim_partition(&min) == 2 * n - 2, "minimal sl{n}");
        }
    }
    Ok("all partitions n <= 6; regular n²-n, minimal 2n-2".into())
}

fn ac07_poset() -> Check {
    for n in 1..=8 {
        let p = hasse_diagram(n);
        let top = Partition::new(vec![n]).unwrap();
        let bottom = Partition::new(vec![1; n]).unwrap();
        let max: Vec<_> = p
            .maximal_nodes()
            .iter()
            .map(|&i| p.nodes[i].clone())
            .collect();
        let min: Vec<_> = p
            .minimal_nodes()
            .iter()
            .map(|&i| p.nodes[i].clone())
            .collect();
        ensure!(max == vec![top], "n={n}: maximal nodes {max:?}");
        ensure!(min == vec![bottom.clone()], "n={n}: minimal nodes {min:?}");
        if n >= 2 {
            let m = p.index_of(&ok(minimal_orbit(n), "minimal")?).unwrap();
            let below = p.lower_covers(m);
            ensure!(
                below == vec![p.index_of(&bottom).unwrap()],
                "n={n}: (2,1..) covers {below:?}"
            );
        }
        for &(lo, hi) in &p.covers {
            let (dl, dh) = (
                orbit_dim_partition(&p.nodes[lo]),
                orbit_dim_partition(&p.nodes[hi]),
            );
            ensure!(
                dl < dh,
                "n={n}: cover {} < {} has dims {dl} >= {dh}",
                p.nodes[lo],
                p.nodes[hi]
            );
        }
    }
    Ok("n <= 8: unique max/min, (2,1^(n-2)) covers only (1^n), dims strictly increase".into())
}

fn all_subsets(r: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0u32..(1 << r)).map(move |mask| (0..r).filter(|i| mask & (1 << i) != 0).collect())
}

fn ac08_dual_parabolic() -> Check {
    let mut checked = 0;
    for ct in CartanType::all_up_to_rank(4) {
        let rs = build(ct)?;
        for s in all_subsets(rs.rank()) {
            let rep = ok(verify_dual_parabolic(&rs, &s), "dual parabolic")?;
            ensure!(rep.lemma_holds, "{ct} {s:?}: w0·Δ⁻(S*) != Δ⁺(S)");
            ensure!(
                rep.intersection_is_levi,
                "{ct} {s:?}: intersection is not Δ_S"
            );
            ensure!(rep.positive_counts_match, "{ct} {s:?}: |Δ⁺(S)| != |Δ⁺(S*)|");
            checked += 1;
        }
    }
    Ok(format!("{checked} subsets over all types of rank <= 4"))
}

fn random_dominant(rng: &mut StdRng, rs: &RootSystem) -> TorusElement {
    let values: Vec<GaussianRational> = (0..rs.rank())
        .map(|_| match rng.gen_range(0..4) {
            0 => GaussianRational::zero(),
            1 => GaussianRational::new(
                Rational::zero(),
                frac(rng.gen_range(1..=4), rng.gen_range(1..=3)),
            ),
            2 => GaussianRational::new(
                frac(rng.gen_range(1..=4), rng.gen_range(1..=3)),
                Rational::zero(),
            ),
            _ => GaussianRational::new(
                frac(rng.gen_range(1..=4), rng.gen_range(1..=3)),
                frac(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
            ),
        })
        .collect();
    TorusElement::from_simple_values(rs, &values).unwrap()
}

fn ac09_compactification(rng: &mut StdRng) -> Check {
    let mut samples = 0;
    for ct in CartanType::all_up_to_rank(4) {
        let rs = build(ct)?;
        for _ in 0..50 {
            let h = random_dominant(rng, &rs);
            ensure!(
                ok(in_fundamental_domain(&rs, &h), "domain")?,
                "{ct}: sample outside 𝒟"
            );
            let d = ok(compactification_dims(&rs, &h), &ct.to_string())?;
            ensure!(d.orbit == 2 * d.gp && d.gp == d.gp_star, "{ct}: {d:?}");
            samples += 1;
        }
    }
    Ok(format!(
        "{samples} samples of h in 𝒟; orbit = 2·G/P, G/P = G/P*"
    ))
}

fn ac10_exponents() -> Check {
    let mut count = 0;
    for ct in CartanType::all_up_to_rank(8) {
        let rs = build(ct)?;
        let peeled = ok(
            peel_strings(&ok(principal_ad_spectrum(&rs), "spectrum")?),
            "peel",
        )?;
        let heights = dims_from_heights(&height_distribution(&rs));
        ensure!(peeled == heights, "{ct}: {peeled:?} vs {heights:?}");
        ensure!(
            peeled.iter().sum::<usize>() == rs.dim(),
            "{ct}: Σ d_j != dim"
        );
        let e = ok(exponents(&rs), "exponents")?;
        let p1: i64 = e.poly.iter().sum();
        ensure!(p1 == 1i64 << rs.rank(), "{ct}: P(1) = {p1}");
        if ct.family() == Family::A {
            let expect: Vec<usize> = (1..=rs.rank()).map(|k| 2 * k + 1).collect();
            ensure!(peeled == expect, "{ct}: {peeled:?}");
        }
        count += 1;
    }
    let e8 = build(CartanType::new(Family::E, 8).unwrap())?;
    let s: usize = ok(exponents(&e8), "E8")?.dims.iter().sum();
    ensure!(s == 248, "E8 Σ d_j = {s}");
    Ok(format!("{count} types of rank <= 8; E8 Σ d_j = 248"))
}

fn ac11_min_orbit() -> Check {
    for n in 3..=8 {
        let rs = build(CartanType::new(Family::A, n - 1).unwrap())?;
        let rep = ok(min_orbit_report(&rs), "report")?;
        let partition_route = orbit_dim_partition(&ok(minimal_orbit(n), "minimal")?);
        ensure!(
            rep.dim_omin == partition_route && partition_route == 2 * n - 2,
            "n={n}: {} / {partition_route}",
            rep.dim_omin
        );
        let expected: BTreeSet<usize> = (1..=n - 3).collect();
        ensure!(rep.pi_theta == expected, "n={n}: Π(θ) = {:?}", rep.pi_theta);
        ensure!(
            ok(type_a_flag_check(n), "flag")?,
            "n={n}: flag variety dimension"
        );
    }
    Ok("n = 3..8: dim 𝒪_min = 2n-2 both routes, Π(θ) = {α_2..α_(n-2)}".into())
}

fn ac12_kks(rng: &mut StdRng) -> Check {
    for n in 2..=4 {
        for k in 0..20 {
            let x = if k % 2 == 0 {
                random_traceless(rng, n)
            } else {
                random_structured(rng, n)
            };
            let w = kks_matrix(&x);
            ensure!(
                w.rank() == orbit_dim(&x),
                "rank {} != orbit dim {}\n{}",
                w.rank(),
                orbit_dim(&x),
                x.matrix()
            );
            ensure!(
                same_kernel(&w, &ad_matrix(&x)),
                "radical != ker ad_x\n{}",
                x.matrix()
            );
        }
    }
    Ok("20 samples per n = 2,3,4; exact rank".into())
}

struct Case {
    name: String,
    args: Vec<String>,
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn load_cases() -> std::result::Result<Vec<Case>, String> {
    let dir = golden_dir();
    let text = ok(fs::read_to_string(dir.join("cases.txt")), "cases.txt")?;
    let inputs = dir.join("inputs");
    Ok(text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once('|').expect("case lines are `name | args`");
            Case {
                name: name.trim().to_string(),
                args: args
                    .split_whitespace()
                    .map(|a| match a.strip_prefix('@') {
                        Some(f) => inputs.join(f).to_string_lossy().into_owned(),
                        None => a.to_string(),
                    })
                    .collect(),
            }
        })
        .collect())
}

fn invoke(args: &[String]) -> Outcome {
    run(std::iter::once("orbitkit".to_string()).chain(args.iter().cloned()))
}

fn render(o: &Outcome) -> String {
    format!(
        "exit {}\n--- stdout\n{}--- stderr\n{}",
        o.code, o.stdout, o.stderr
    )
}

fn ac13_cli_golden() -> Check {
    let cases = load_cases()?;
    ensure!(cases.len() == 20, "corpus has {} cases", cases.len());
    let bless = std::env::var_os("ORBITKIT_BLESS").is_some();
    let expected_dir = golden_dir().join("expected");
    for case in &cases {
        let first = render(&invoke(&case.args));
        let second = render(&invoke(&case.args));
        ensure!(first == second, "{}: two runs differ", case.name);
        let path = expected_dir.join(format!("{}.txt", case.name));
        if bless {
            ok(fs::write(&path, &first), "bless")?;
        }
        let golden = ok(fs::read_to_string(&path), &case.name)?;
        ensure!(
            first == golden,
            "{}: output differs from golden\n{first}",
            case.name
        );
    }

    // Round trips through files the CLI itself wrote.
    let tmp = ok(tempfile::tempdir(), "tempdir")?;
    let input = golden_dir().join("inputs/mixed.json");
    let out = invoke(&[
        "jordan".into(),
        "--matrix".into(),
        input.to_string_lossy().into(),
    ]);
    ensure!(out.code == 0, "jordan failed: {}", out.stderr);
    let v: Value = ok(serde_json::from_str(&out.stdout), "jordan json")?;
    let xs = tmp.path().join("xs.json");
    ok(fs::write(&xs, v["semisimple"].to_string()), "write")?;
    let again = invoke(&[
        "jordan".into(),
        "--matrix".into(),
        xs.to_string_lossy().into(),
    ]);
    let w: Value = ok(serde_json::from_str(&again.stdout), "jordan json")?;
    ensure!(
        w["semisimple"] == v["semisimple"],
        "jordan(x_s) changed x_s"
    );
    let n = w["nilpotent"]["entries"].as_array().map(|r| {
        r.iter()
            .flat_map(|e| e.as_array().unwrap())
            .all(|e| e == "0")
    });
    ensure!(n == Some(true), "jordan(x_s) has nonzero nilpotent part");

    let jm_out = tmp.path().join("triple.json");
    let nil = golden_dir().join("inputs/nil3_conj.json");
    let out = invoke(&[
        "jm".into(),
        "--matrix".into(),
        nil.to_string_lossy().into(),
        "--out".into(),
        jm_out.to_string_lossy().into(),
    ]);
    ensure!(
        out.code == 0 && out.stdout.is_empty(),
        "jm --out failed: {}",
        out.stderr
    );
    let t: Value = ok(
        serde_json::from_str(&ok(fs::read_to_string(&jm_out), "read")?),
        "jm json",
    )?;
    for member in ["x", "h", "y"] {
        let f = tmp.path().join(format!("{member}.json"));
        ok(fs::write(&f, t[member].to_string()), "write")?;
        let o = invoke(&["phi".into(), "--matrix".into(), f.to_string_lossy().into()]);
        ensure!(
            o.code == 0,
            "triple member {member} not accepted back: {}",
            o.stderr
        );
    }
    Ok(format!(
        "{} golden invocations byte-identical; jordan and jm outputs round-trip",
        cases.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let criteria: Vec<Criterion> = vec![
        (
            "AC01",
            "root-system integrity",
            Box::new(|_| ac01_root_systems()),
        ),
        (
            "AC02",
            "Kostant principal triple",
            Box::new(|_| ac02_kostant()),
        ),
        (
            "AC03",
            "Jordan-Chevalley decomposition",
            Box::new(ac03_jordan_chevalley),
        ),
        (
            "AC04",
            "adjoint quotient zero fiber is the nilpotent cone",
            Box::new(ac04_nilpotent_cone),
        ),
        (
            "AC05",
            "dominance order equals rank-condition closure",
            Box::new(|_| ac05_dominance_closure()),
        ),
        (
            "AC06",
            "orbit dimension oracle",
            Box::new(|_| ac06_dimensions()),
        ),
        (
            "AC07",
            "nilpotent orbit poset structure",
            Box::new(|_| ac07_poset()),
        ),
        (
            "AC08",
            "dual parabolic root identities",
            Box::new(|_| ac08_dual_parabolic()),
        ),
        (
            "AC09",
            "semisimple orbit dimension identity",
            Box::new(ac09_compactification),
        ),
        (
            "AC10",
            "exponent cross-validation",
            Box::new(|_| ac10_exponents()),
        ),
        (
            "AC11",
            "minimal orbit consistency",
            Box::new(|_| ac11_min_orbit()),
        ),
        ("AC12", "KKS form rank and radical", Box::new(ac12_kks)),
        (
            "AC13",
            "CLI determinism and round-trip",
            Box::new(|_| ac13_cli_golden()),
        ),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let t = Instant::now();
        match check(&mut rng) {
            Ok(detail) => println!(
                "PASS {id} {name} [tolerance: exact] {detail} ({:.2?})",
                t.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {name} [tolerance: exact] {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2?}",
        13 - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
