//! The Lie algebra 𝔰𝔩_n over the rationals.
//!
//! Elements are traceless `n×n` rational matrices. The fixed basis used for
//! adjoint matrices is `E_ij (i ≠ j)` in row-major order followed by the
//! diagonal differences `E_ii − E_{i+1,i+1}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{span_dim, QMatrix};
use crate::poly::Poly;
use crate::rational::{format_rational, parse_rational, Rational};

/// A traceless square rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlnElement(QMatrix);

impl SlnElement {
    pub fn new(m: QMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let tr = m.trace();
        if !tr.is_zero() {
            return Err(Error::NotTraceless(format_rational(&tr)));
        }
        Ok(Self(m))
    }

    pub fn zero(n: usize) -> Self {
        Self(QMatrix::zeros(n, n))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(QMatrix::from_i64(rows))
    }

    /// Off-diagonal matrix unit `E_ij` (0-based, `i ≠ j`).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        assert_ne!(i, j, "diagonal matrix units are not traceless");
        Self(QMatrix::unit(n, i, j))
    }

    pub fn diagonal(entries: &[Rational]) -> Result<Self> {
        Self::new(QMatrix::diagonal(entries))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> QMatrix {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_dim(self, other)?;
        Ok(Self(self.0.add(&other.0)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_dim(self, other)?;
        Ok(Self(self.0.sub(&other.0)))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self(self.0.scale(k))
    }

    /// `g·x·g⁻¹` for an invertible rational `g`.
    pub fn conjugate(&self, g: &QMatrix) -> Result<Self> {
        let inv = g.inverse()?;
        Self::new(g.mul(&self.0).mul(&inv))
    }
}

/// The standard generators `X = E₁₂`, `H = diag(1, −1)`, `Y = E₂₁` of 𝔰𝔩₂.
pub fn sl2_generators() -> (SlnElement, SlnElement, SlnElement) {
    let x = SlnElement::from_i64(&[&[0, 1], &[0, 0]]).unwrap();
    let h = SlnElement::from_i64(&[&[1, 0], &[0, -1]]).unwrap();
    let y = SlnElement::from_i64(&[&[0, 0], &[1, 0]]).unwrap();
    (x, h, y)
}

fn same_dim(x: &SlnElement, y: &SlnElement) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(())
}

/// `[x, y] = xy − yx`.
pub fn bracket(x: &SlnElement, y: &SlnElement) -> Result<SlnElement> {
    same_dim(x, y)?;
    Ok(SlnElement(x.0.mul(&y.0).sub(&y.0.mul(&x.0))))
}

/// Killing form `⟨x, y⟩ = 2n·trace(xy)`.
pub fn killing(x: &SlnElement, y: &SlnElement) -> Result<Rational> {
    same_dim(x, y)?;
    let n = Rational::from_integer(BigInt::from(2 * x.n()));
    Ok(n * x.0.mul(&y.0).trace())
}

/// The fixed basis of 𝔰𝔩_n.
pub fn basis(n: usize) -> Vec<SlnElement> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(SlnElement::unit(n, i, j));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        let mut m = QMatrix::zeros(n, n);
        m[(i, i)] = Rational::one();
        m[(i + 1, i + 1)] = -Rational::one();
        out.push(SlnElement(m));
    }
    out
}

/// Coordinates of `x` in the fixed basis.
pub fn coords(x: &SlnElement) -> Vec<Rational> {
    let n = x.n();
    let m = &x.0;
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(m[(i, j)].clone());
            }
        }
    }
    // x = Σ a_k (E_kk − E_{k+1,k+1})  ⇒  a_k = x_11 + … + x_kk
    let mut acc = Rational::zero();
    for k in 0..n.saturating_sub(1) {
        acc += &m[(k, k)];
        out.push(acc.clone());
    }
    out
}

pub fn from_coords(n: usize, c: &[Rational]) -> SlnElement {
    basis(n)
        .iter()
        .zip(c)
        .fold(SlnElement::zero(n), |acc, (b, a)| {
            acc.add(&b.scale(a)).unwrap()
        })
}

/// Matrix of `ad_x` in the fixed basis; column `j` holds `[x, b_j]`.
pub fn ad_matrix(x: &SlnElement) -> QMatrix {
    let cols: Vec<Vec<Rational>> = basis(x.n())
        .iter()
        .map(|b| coords(&bracket(x, b).unwrap()))
        .collect();
    QMatrix::from_columns(&cols)
}

/// `dim C_𝔤(x)`, the nullity of `ad_x`.
pub fn centralizer_dim(x: &SlnElement) -> usize {
    ad_matrix(x).nullity()
}

/// `dim 𝒪(x) = dim 𝔤 − dim C_𝔤(x)`.
pub fn orbit_dim(x: &SlnElement) -> usize {
    ad_matrix(x).rank()
}

pub fn is_nilpotent(x: &SlnElement) -> bool {
    x.0.pow(x.n() as u32).is_zero()
}

/// Semisimple iff the minimal polynomial is squarefree.
pub fn is_semisimple(x: &SlnElement) -> bool {
    let m = x.0.minimal_polynomial();
    m.gcd(&m.derivative()).degree() == Some(0)
}

/// Jordan–Chevalley decomposition `x = x_s + x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub semisimple: SlnElement,
    pub nilpotent: SlnElement,
    /// `P` with `x_s = P(x)`; the nilpotent part is `(t − P)(x)`.
    pub semisimple_witness: Poly,
}

/// Jordan–Chevalley decomposition by Newton iteration in `ℚ[t]/(p)`.
///
/// With `p` the characteristic polynomial, `q` its squarefree part and
/// `u·q′ ≡ 1 (mod q)`, iterating `S ← S − q(S)·u(S)` from `S = t` doubles
/// the `q`-adic order of `q(S)` each step, so `⌈log₂ n⌉ + 1` steps reach
/// `q(S) ≡ 0`. Then `x_s = S(x)`.
pub fn jordan_chevalley(x: &SlnElement) -> Result<JordanPair> {
    let n = x.n();
    let p = x.0.charpoly();
    let q = p.squarefree_part();
    let (g, u, _) = q.derivative().ext_gcd(&q);
    if g.degree() != Some(0) {
        return Err(Error::Internal(
            "squarefree part shares a factor with its derivative".into(),
        ));
    }
    let steps = usize::BITS - (n.max(1) - 1).leading_zeros() + 1;
    let mut s = Poly::x().rem(&p);
    for _ in 0..steps {
        let qs = q.compose_mod(&s, &p);
        if qs.is_zero() {
            break;
        }
        let us = u.compose_mod(&s, &p);
        s = s.sub(&qs.mul(&us)).rem(&p);
    }
    if !q.compose_mod(&s, &p).is_zero() {
        return Err(Error::Internal("Newton iteration did not converge".into()));
    }
    let semisimple = SlnElement::new(s.eval_matrix(&x.0))?;
    let nilpotent = x.sub(&semisimple)?;
    Ok(JordanPair {
        semisimple,
        nilpotent,
        semisimple_witness: s,
    })
}

/// Coefficients `c₂, …, c_n` of `det(λI − x) = λⁿ + c₂λⁿ⁻² + ⋯ + c_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector(pub Vec<Rational>);

impl InvariantVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// The adjoint quotient map in type A.
pub fn invariants_phi(x: &SlnElement) -> InvariantVector {
    let n = x.n();
    let p = x.0.charpoly();
    InvariantVector((2..=n).map(|k| p.coeff(n - k)).collect())
}

/// `trace((ad_x)^k)`.
pub fn trace_power(x: &SlnElement, k: u32) -> Rational {
    ad_matrix(x).pow(k).trace()
}

/// Eigenvalues with algebraic multiplicities, when all are rational.
pub fn rational_spectrum(x: &SlnElement) -> Result<Vec<(Rational, usize)>> {
    let roots = x.0.charpoly().rational_roots();
    let total: usize = roots.iter().map(|r| r.1).sum();
    if total != x.n() {
        return Err(Error::IrrationalSpectrum);
    }
    Ok(roots)
}

/// Conjugacy test for matrices with rational spectra.
///
/// Two such matrices are conjugate iff their eigenvalues agree and, for each
/// eigenvalue `λ`, the ranks of `(x − λI)^k` agree for `k = 1..n`.
pub fn same_orbit(x: &SlnElement, y: &SlnElement) -> Result<bool> {
    same_dim(x, y)?;
    let sx = rational_spectrum(x)?;
    let sy = rational_spectrum(y)?;
    if sx != sy {
        return Ok(false);
    }
    let n = x.n();
    let id = QMatrix::identity(n);
    for (lambda, _) in &sx {
        let shift = id.scale(lambda);
        let ax = x.0.sub(&shift);
        let ay = y.0.sub(&shift);
        let (mut px, mut py) = (ax.clone(), ay.clone());
        for _ in 1..=n {
            if px.rank() != py.rank() {
                return Ok(false);
            }
            px = px.mul(&ax);
            py = py.mul(&ay);
        }
    }
    Ok(true)
}

/// The orbit form `ω_x(y, z) = ⟨x, [y, z]⟩`.
pub fn kks_form(x: &SlnElement, y: &SlnElement, z: &SlnElement) -> Result<Rational> {
    same_dim(x, y)?;
    killing(x, &bracket(y, z)?)
}

/// Gram matrix of the orbit form at `x` over the fixed basis.
pub fn kks_matrix(x: &SlnElement) -> QMatrix {
    let b = basis(x.n());
    let d = b.len();
    let mut m = QMatrix::zeros(d, d);
    for i in 0..d {
        for j in (i + 1)..d {
            let v = kks_form(x, &b[i], &b[j]).unwrap();
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    m
}

/// True when the null spaces of two matrices with the same column count
/// coincide.
pub fn same_kernel(a: &QMatrix, b: &QMatrix) -> bool {
    let ka = a.nullspace();
    let kb = b.nullspace();
    if ka.len() != kb.len() {
        return false;
    }
    let mut all = ka.clone();
    all.extend(kb);
    span_dim(&all) == ka.len()
}

/// JSON encoding `{"n": 3, "entries": [["1", "1/2", …], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_element(x: &SlnElement) -> Self {
        Self {
            n: x.n(),
            entries: x
                .matrix()
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<SlnElement> {
        if self.n == 0 {
            return Err(Error::Parse("matrix size n must be positive".into()));
        }
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(Error::Parse(format!(
                "matrix entries do not form a {0}x{0} array",
                self.n
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SlnElement::new(QMatrix::from_rows(rows)?)
    }
}
