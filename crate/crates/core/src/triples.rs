//! sl₂-triples: verification, Kostant's principal triple, and
//! Jacobson–Morozov completion for nilpotent matrices.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{span_dim, QMatrix};
use crate::rational::Rational;
use crate::rootsys::RootSystem;
use crate::sln::{bracket, is_nilpotent, SlnElement};

/// `(x, h, y)` with `[x, y] = h`, `[h, x] = 2x`, `[h, y] = −2y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTriple {
    pub x: SlnElement,
    pub h: SlnElement,
    pub y: SlnElement,
}

pub fn verify_matrix_triple(t: &MatrixTriple) -> Result<bool> {
    let two = Rational::from_integer(BigInt::from(2));
    let xy = bracket(&t.x, &t.y)?;
    let hx = bracket(&t.h, &t.x)?;
    let hy = bracket(&t.h, &t.y)?;
    Ok(xy == t.h && hx == t.x.scale(&two) && hy == t.y.scale(&-two))
}

/// An element of the Cartan subalgebra over the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorootVector(pub Vec<Rational>);

/// The semisimple element of Kostant's principal triple, `α(h) = 2` for
/// every simple root `α`, with `h = Σ c_α h_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractPrincipalTriple {
    pub h: CorootVector,
    pub c: Vec<Rational>,
}

/// Builds the principal `h` and checks the conditions that make
/// `ξ = Σ e_α`, `η = Σ c_α e_{−α}` a triple: the coefficients solve the
/// Cartan system exactly, and no difference of distinct simple roots is a
/// root (so `[e_α, e_{−β}] = 0` for `α ≠ β`).
pub fn kostant_principal(rs: &RootSystem) -> Result<AbstractPrincipalTriple> {
    let r = rs.rank();
    let two = Rational::from_integer(BigInt::from(2));
    let target = vec![two.clone(); r];
    let c = rs.coroot_coords_from_values(&target)?;
    if rs.simple_values(&c)? != target {
        return Err(Error::Internal(
            "principal h does not solve the Cartan system".into(),
        ));
    }
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let mut diff = vec![0i64; r];
            diff[i] = 1;
            diff[j] = -1;
            if rs.contains(&diff) {
                return Err(Error::Internal(format!(
                    "difference of simple roots {i} and {j} is a root"
                )));
            }
        }
    }
    Ok(AbstractPrincipalTriple {
        h: CorootVector(c.clone()),
        c,
    })
}

/// The principal triple of 𝔰𝔩_n: `x = Σ E_{i,i+1}`,
/// `h = diag(n−1, n−3, …, 1−n)`, `y = Σ i(n−i) E_{i+1,i}`.
pub fn principal_triple_sln(n: usize) -> MatrixTriple {
    assert!(n >= 1);
    let mut x = QMatrix::zeros(n, n);
    let mut h = QMatrix::zeros(n, n);
    let mut y = QMatrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = Rational::from_integer(BigInt::from(n as i64 - 1 - 2 * i as i64));
        if i + 1 < n {
            x[(i, i + 1)] = Rational::one();
            let k = (i + 1) as i64;
            y[(i + 1, i)] = Rational::from_integer(BigInt::from(k * (n as i64 - k)));
        }
    }
    MatrixTriple {
        x: SlnElement::new(x).unwrap(),
        h: SlnElement::new(h).unwrap(),
        y: SlnElement::new(y).unwrap(),
    }
}

/// Jordan chains of a nilpotent matrix, longest first. Each chain is
/// `[e^{k−1}v, …, e·v, v]` for a top vector `v` of height `k`.
pub fn jordan_chains(e: &QMatrix) -> Vec<Vec<Vec<Rational>>> {
    let n = e.rows();
    // kernels[k] = ker e^k
    let mut kernels: Vec<Vec<Vec<Rational>>> = vec![vec![]];
    let mut power = QMatrix::identity(n);
    loop {
        power = power.mul(e);
        let k = power.nullspace();
        let full = k.len() == n;
        kernels.push(k);
        if full {
            break;
        }
    }
    let height = kernels.len() - 1;
    let mut chains: Vec<Vec<Vec<Rational>>> = Vec::new();
    for k in (1..=height).rev() {
        // Already spanned at level k: ker e^{k−1} plus the images of longer chains.
        let mut spanned: Vec<Vec<Rational>> = kernels[k - 1].clone();
        for chain in &chains {
            if chain.len() > k {
                spanned.push(chain[k - 1].clone());
            }
        }
        let mut dim = span_dim(&spanned);
        for cand in &kernels[k] {
            spanned.push(cand.clone());
            let d = span_dim(&spanned);
            if d == dim {
                spanned.pop();
                continue;
            }
            dim = d;
            let mut chain = vec![cand.clone()];
            for _ in 1..k {
                let next = e.mul_vec(chain.last().unwrap());
                chain.push(next);
            }
            chain.reverse();
            chains.push(chain);
        }
    }
    chains.sort_by_key(|c| std::cmp::Reverse(c.len()));
    chains
}

/// Completes a nilpotent `e` to a triple `(e, h, f)`.
///
/// A Jordan chain basis `g` puts `e` in block form `g⁻¹eg = ⊕ J_k`; each
/// block receives the principal triple of 𝔰𝔩_k and the result is conjugated
/// back by `g`.
pub fn jacobson_morozov_sln(e: &SlnElement) -> Result<MatrixTriple> {
    if !is_nilpotent(e) {
        return Err(Error::NotNilpotent);
    }
    let n = e.n();
    if e.is_zero() {
        return Ok(MatrixTriple {
            x: e.clone(),
            h: SlnElement::zero(n),
            y: SlnElement::zero(n),
        });
    }
    let chains = jordan_chains(e.matrix());
    let columns: Vec<Vec<Rational>> = chains.iter().flatten().cloned().collect();
    let g = QMatrix::from_columns(&columns);
    let mut hb = QMatrix::zeros(n, n);
    let mut yb = QMatrix::zeros(n, n);
    let mut offset = 0;
    for chain in &chains {
        let block = principal_triple_sln(chain.len());
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                hb[(offset + i, offset + j)] = block.h.matrix()[(i, j)].clone();
                yb[(offset + i, offset + j)] = block.y.matrix()[(i, j)].clone();
            }
        }
        offset += chain.len();
    }
    let triple = MatrixTriple {
        x: e.clone(),
        h: SlnElement::new(hb)?.conjugate(&g)?,
        y: SlnElement::new(yb)?.conjugate(&g)?,
    };
    if !verify_matrix_triple(&triple)? {
        return Err(Error::Internal(
            "Jacobson–Morozov triple failed verification".into(),
        ));
    }
    Ok(triple)
}

/// `h` has integer eigenvalues and is diagonalizable.
pub fn has_integer_semisimple_spectrum(h: &SlnElement) -> bool {
    match crate::sln::rational_spectrum(h) {
        Ok(spec) => spec.iter().all(|(l, _)| l.is_integer()) && crate::sln::is_semisimple(h),
        Err(_) => false,
    }
}
