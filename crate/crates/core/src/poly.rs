//! Dense univariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::QMatrix;
use crate::rational::Rational;

/// Coefficients are stored lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `t - a`
    pub fn linear_root(a: &Rational) -> Self {
        Self::new(vec![-a.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(Rational::one()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(other)` reduced modulo `modulus`.
    pub fn compose_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(other).add(&Self::constant(c.clone())).rem(modulus)
        })
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &QMatrix) -> QMatrix {
        let n = m.rows();
        let mut acc = QMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&QMatrix::identity(n).scale(c));
        }
        acc
    }

    /// Distinct rational roots with their multiplicities, in increasing order.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let sqf = self.squarefree_part();
        let mut roots = rational_roots_squarefree(&sqf);
        roots.sort();
        roots
            .into_iter()
            .map(|r| {
                let lin = Poly::linear_root(&r);
                let mut mult = 0;
                let mut p = self.clone();
                loop {
                    let (q, rem) = p.div_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    mult += 1;
                    p = q;
                }
                (r, mult)
            })
            .collect()
    }
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[k - 2].rem(&seq[k - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

/// Rational roots of a squarefree polynomial.
///
/// Real roots are isolated by Sturm bisection. Any rational root `p/q` of the
/// primitive integer form has `q` dividing the leading coefficient `a`, so
/// once an isolating interval is narrower than `1/a` it holds at most one
/// candidate of the form `k/a`, which is then tested exactly. Each root found
/// is divided out and the search restarts on the deflated polynomial, so
/// interval endpoints are never roots.
fn rational_roots_squarefree(p: &Poly) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut p = p.clone();
    while let Some(r) = find_rational_root(&p) {
        p = p.div_rem(&Poly::linear_root(&r)).0;
        out.push(r);
    }
    out
}

fn find_rational_root(p: &Poly) -> Option<Rational> {
    let deg = p.degree()?;
    if deg == 0 {
        return None;
    }
    let denom_lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lead = (p.leading().unwrap() * Rational::from_integer(denom_lcm)).to_integer();
    let lead_q = Rational::from_integer(lead.abs());
    let width_limit = lead_q.recip();

    // Cauchy bound plus one, so no root sits on an endpoint.
    let monic = p.monic();
    let bound = monic.coeffs[..deg]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::from_integer(BigInt::from(2));

    let seq = sturm_sequence(p);
    let two = Rational::from_integer(BigInt::from(2));
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let roots_inside = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if roots_inside == 0 {
            continue;
        }
        if roots_inside == 1 && &hi - &lo < width_limit {
            let cand = (&hi * &lead_q).floor() / &lead_q;
            if cand > lo && cand < hi && p.eval(&cand).is_zero() {
                return Some(cand);
            }
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_zero() {
            return Some(mid);
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    None
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn division_identity() {
        let a = p(&[1, -3, 0, 2, 5]);
        let b = p(&[2, 0, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[3, 1, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn rational_roots_found_with_multiplicity() {
        // (t - 1/2)^2 (t + 3)(t^2 + 1)(3t - 7)
        let f = Poly::new(vec![frac(-1, 2), int(1)])
            .mul(&Poly::new(vec![frac(-1, 2), int(1)]))
            .mul(&p(&[3, 1]))
            .mul(&p(&[1, 0, 1]))
            .mul(&p(&[-7, 3]));
        let roots = f.rational_roots();
        assert_eq!(roots, vec![(int(-3), 1), (frac(1, 2), 2), (frac(7, 3), 1)]);
    }

    #[test]
    fn irrational_roots_are_not_reported() {
        assert!(p(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(p(&[0, -2, 0, 1]).rational_roots(), vec![(int(0), 1)]);
    }

    #[test]
    fn roots_on_bisection_points() {
        // 0 and bound-adjacent values are hit as midpoints.
        let f = p(&[0, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        let roots: Vec<_> = f.rational_roots().into_iter().map(|r| r.0).collect();
        assert_eq!(roots, vec![int(-1), int(0), int(1)]);
    }
}
