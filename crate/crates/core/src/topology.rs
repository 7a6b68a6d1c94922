//! Decomposition of 𝔤 under the principal sl₂ and the resulting
//! Poincaré polynomial `∏ (1 + t^{d_j})`.
//!
//! The polynomial is that of the formula itself; strictly it is the Poincaré
//! polynomial of the adjoint group, which has the same rational cohomology
//! as any group with Lie algebra 𝔤.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::ssorbits::{root_value, simple_values, TorusElement};
use crate::triples::kostant_principal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentData {
    /// Number of positive roots of each height.
    pub heights: BTreeMap<i64, usize>,
    /// Dimensions of the irreducible summands, ascending.
    pub dims: Vec<usize>,
    /// Coefficients of `∏ (1 + t^{d_j})`, constant term first.
    pub poly: Vec<i64>,
}

/// Eigenvalues of `ad_h` for Kostant's principal `h`, as value → multiplicity.
pub fn principal_ad_spectrum(rs: &RootSystem) -> Result<BTreeMap<i64, usize>> {
    let k = kostant_principal(rs)?;
    let values = simple_values(rs, &TorusElement::from_real(&k.c))?;
    let mut spectrum = BTreeMap::new();
    *spectrum.entry(0).or_insert(0) += rs.rank();
    for beta in rs.roots() {
        let v = root_value(&values, beta);
        if !v.is_real() || !v.re.is_integer() {
            return Err(Error::Internal(format!("β(h) = {v} is not an integer")));
        }
        let v: i64 =
            v.re.to_integer()
                .try_into()
                .map_err(|_| Error::Internal("eigenvalue out of range".into()))?;
        *spectrum.entry(v).or_insert(0) += 1;
    }
    Ok(spectrum)
}

/// Peels strings `{−μ, −μ+2, …, μ}` off the spectrum, longest first,
/// returning the string lengths `μ + 1`.
pub fn peel_strings(spectrum: &BTreeMap<i64, usize>) -> Result<Vec<usize>> {
    let mut rest = spectrum.clone();
    rest.retain(|_, c| *c > 0);
    let mut dims = Vec::new();
    while let Some((&top, _)) = rest.iter().next_back() {
        if top < 0 {
            return Err(Error::Internal("spectrum is not symmetric".into()));
        }
        let mut v = -top;
        while v <= top {
            match rest.get_mut(&v) {
                Some(c) => {
                    *c -= 1;
                    if *c == 0 {
                        rest.remove(&v);
                    }
                }
                None => {
                    return Err(Error::Internal(format!(
                        "string with top weight {top} is missing weight {v}"
                    )))
                }
            }
            v += 2;
        }
        dims.push(top as usize + 1);
    }
    dims.sort_unstable();
    Ok(dims)
}

/// Positive roots counted by height.
pub fn height_distribution(rs: &RootSystem) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for b in rs.positive_roots() {
        *m.entry(b.height()).or_insert(0) += 1;
    }
    m
}

/// Summand dimensions `2e + 1` where the exponents `e` form the transpose
/// of the height distribution.
pub fn dims_from_heights(heights: &BTreeMap<i64, usize>) -> Vec<usize> {
    let counts: Vec<usize> = heights.values().copied().collect();
    let max = counts.iter().copied().max().unwrap_or(0);
    let mut dims: Vec<usize> = (1..=max)
        .map(|j| 2 * counts.iter().filter(|&&m| m >= j).count() + 1)
        .collect();
    dims.sort_unstable();
    dims
}

/// Expanded `∏ (1 + t^{d})`.
pub fn product_polynomial(dims: &[usize]) -> Vec<i64> {
    let mut poly = vec![1i64];
    for &d in dims {
        let mut next = vec![0i64; poly.len() + d];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + d] += c;
        }
        poly = next;
    }
    poly
}

pub fn exponents(rs: &RootSystem) -> Result<ExponentData> {
    let spectrum = principal_ad_spectrum(rs)?;
    let peeled = peel_strings(&spectrum)?;
    let heights = height_distribution(rs);
    let transposed = dims_from_heights(&heights);
    if peeled != transposed {
        return Err(Error::Internal(format!(
            "string peeling {peeled:?} disagrees with height transpose {transposed:?}"
        )));
    }
    let poly = product_polynomial(&peeled);
    Ok(ExponentData {
        heights,
        dims: peeled,
        poly,
    })
}

pub fn poincare_polynomial(rs: &RootSystem) -> Result<Vec<i64>> {
    Ok(exponents(rs)?.poly)
}

/// `(1+t^{3})(1+t^{5})`
pub fn latex_factored(dims: &[usize]) -> String {
    dims.iter().map(|d| format!("(1+t^{{{d}}})")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let a1 = exponents(&rs("A1")).unwrap();
        assert_eq!(a1.dims, vec![3]);
        assert_eq!(a1.poly, vec![1, 0, 0, 1]);
        let a2 = exponents(&rs("A2")).unwrap();
        assert_eq!(a2.dims, vec![3, 5]);
        assert_eq!(a2.poly, product_polynomial(&[3, 5]));
        assert_eq!(a2.poly, vec![1, 0, 0, 1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn a2_spectrum_peels_into_two_strings() {
        let spec = principal_ad_spectrum(&rs("A2")).unwrap();
        let expected: BTreeMap<i64, usize> = [(-4, 1), (-2, 2), (0, 2), (2, 2), (4, 1)]
            .into_iter()
            .collect();
        assert_eq!(spec, expected);
        assert_eq!(peel_strings(&spec).unwrap(), vec![3, 5]);
    }

    #[test]
    fn peeling_rejects_broken_spectra() {
        let broken: BTreeMap<i64, usize> = [(-2, 1), (2, 1)].into_iter().collect();
        assert!(peel_strings(&broken).is_err());
    }

    #[test]
    fn type_a_dims_and_palindromes() {
        for n in 2..=9 {
            let r = rs(&format!("A{}", n - 1));
            let e = exponents(&r).unwrap();
            let expect: Vec<usize> = (1..n).map(|j| 2 * j + 1).collect();
            assert_eq!(e.dims, expect);
            let rev: Vec<i64> = e.poly.iter().rev().copied().collect();
            assert_eq!(rev, e.poly);
            assert_eq!(e.poly.iter().sum::<i64>(), 1 << r.rank());
        }
    }

    #[test]
    fn summands_fill_the_algebra() {
        for ct in CartanType::all_up_to_rank(8) {
            let r = RootSystem::build(ct).unwrap();
            let e = exponents(&r).unwrap();
            assert_eq!(e.dims.len(), r.rank(), "{ct}");
            assert_eq!(e.dims.iter().sum::<usize>(), r.dim(), "{ct}");
            assert!(e.dims.iter().all(|d| d % 2 == 1));
        }
        let e8 = exponents(&rs("E8")).unwrap();
        assert_eq!(e8.dims, vec![3, 15, 23, 27, 35, 39, 47, 59]);
    }

    #[test]
    fn latex_output() {
        assert_eq!(latex_factored(&[3, 5]), "(1+t^{3})(1+t^{5})");
    }
}
