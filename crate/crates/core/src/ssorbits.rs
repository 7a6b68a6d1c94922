//! Semisimple adjoint orbits through the root system.
//!
//! A semisimple orbit is `𝒪(h)` for `h` in the Cartan subalgebra, given here
//! over the simple coroots with Gaussian-rational coefficients. Stabilizers
//! are represented only by their root sets and dimensions.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{GaussianRational, Rational};
use crate::rootsys::{Root, RootSystem};

/// `h = Σ coords[j]·h_j` over the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    pub coords: Vec<GaussianRational>,
}

impl TorusElement {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![GaussianRational::zero(); rank])
    }

    pub fn from_real(coords: &[Rational]) -> Self {
        Self::new(coords.iter().cloned().map(GaussianRational::real).collect())
    }

    /// The unique `h` with the given values `α_i(h)` on the simple roots.
    pub fn from_simple_values(rs: &RootSystem, values: &[GaussianRational]) -> Result<Self> {
        let re: Vec<Rational> = values.iter().map(|z| z.re.clone()).collect();
        let im: Vec<Rational> = values.iter().map(|z| z.im.clone()).collect();
        let re = rs.coroot_coords_from_values(&re)?;
        let im = rs.coroot_coords_from_values(&im)?;
        Ok(Self::new(
            re.into_iter()
                .zip(im)
                .map(|(a, b)| GaussianRational::new(a, b))
                .collect(),
        ))
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(GaussianRational::is_real)
    }

    fn parts(&self) -> (Vec<Rational>, Vec<Rational>) {
        (
            self.coords.iter().map(|z| z.re.clone()).collect(),
            self.coords.iter().map(|z| z.im.clone()).collect(),
        )
    }
}

/// `α_i(h)` for every simple root.
pub fn simple_values(rs: &RootSystem, h: &TorusElement) -> Result<Vec<GaussianRational>> {
    let (re, im) = h.parts();
    let re = rs.simple_values(&re)?;
    let im = rs.simple_values(&im)?;
    Ok(re
        .into_iter()
        .zip(im)
        .map(|(a, b)| GaussianRational::new(a, b))
        .collect())
}

/// `β(h)` from the simple values.
pub fn root_value(values: &[GaussianRational], beta: &Root) -> GaussianRational {
    beta.coeffs()
        .iter()
        .zip(values)
        .filter(|(c, _)| **c != 0)
        .fold(GaussianRational::zero(), |acc, (&c, v)| {
            acc + v.scale(&Rational::from_integer(c.into()))
        })
}

/// First simple root (0-based) where the fundamental-domain condition fails.
pub fn fundamental_domain_violation(rs: &RootSystem, h: &TorusElement) -> Result<Option<usize>> {
    Ok(simple_values(rs, h)?
        .iter()
        .position(|z| z.re.is_negative() || (z.re.is_zero() && z.im.is_negative())))
}

/// `Re α(h) ≥ 0`, and `Im α(h) ≥ 0` whenever `Re α(h) = 0`, for all simple `α`.
pub fn in_fundamental_domain(rs: &RootSystem, h: &TorusElement) -> Result<bool> {
    Ok(fundamental_domain_violation(rs, h)?.is_none())
}

fn require_domain(rs: &RootSystem, h: &TorusElement) -> Result<()> {
    match fundamental_domain_violation(rs, h)? {
        Some(root) => Err(Error::NotInFundamentalDomain { root }),
        None => Ok(()),
    }
}

/// `Π(h) = {α ∈ Π : α(h) = 0}`.
pub fn pi_of_h(rs: &RootSystem, h: &TorusElement) -> Result<BTreeSet<usize>> {
    Ok(simple_values(rs, h)?
        .iter()
        .enumerate()
        .filter(|(_, z)| z.is_zero())
        .map(|(i, _)| i)
        .collect())
}

/// All roots vanishing on `h`. For `h` in the fundamental domain this must
/// coincide with `Δ_{Π(h)}`, which is checked.
pub fn centralizer_root_set(rs: &RootSystem, h: &TorusElement) -> Result<Vec<Root>> {
    let values = simple_values(rs, h)?;
    let vanishing: Vec<Root> = rs
        .roots()
        .iter()
        .filter(|b| root_value(&values, b).is_zero())
        .cloned()
        .collect();
    if fundamental_domain_violation(rs, h)?.is_none() {
        let from_subset = rs.subset_roots(&pi_of_h(rs, h)?);
        if from_subset != vanishing {
            return Err(Error::Internal(
                "vanishing roots differ from the roots spanned by Π(h)".into(),
            ));
        }
    }
    Ok(vanishing)
}

/// `dim 𝒪(h) = |Δ| − |Δ_{Π(h)}|` for `h` in the fundamental domain.
pub fn ss_orbit_dim(rs: &RootSystem, h: &TorusElement) -> Result<usize> {
    require_domain(rs, h)?;
    let levi = rs.subset_roots(&pi_of_h(rs, h)?);
    Ok(rs.roots().len() - levi.len())
}

pub fn is_regular_semisimple(rs: &RootSystem, h: &TorusElement) -> Result<bool> {
    require_domain(rs, h)?;
    let regular = pi_of_h(rs, h)?.is_empty();
    debug_assert_eq!(regular, ss_orbit_dim(rs, h)? == rs.roots().len());
    Ok(regular)
}

/// Root-level checks for the opposite parabolic `w₀ P_{S^∨} w₀⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualParabolicReport {
    pub subset: BTreeSet<usize>,
    pub dual: BTreeSet<usize>,
    /// `w₀·Δ_{S^∨}^− = Δ_S^+`
    pub lemma_holds: bool,
    /// Roots of `𝔭_S ∩ w₀·𝔭_{S^∨}`.
    pub intersection_roots: Vec<Root>,
    pub intersection_dim: usize,
    pub dim_l: usize,
    /// The intersection root set equals `Δ_S`.
    pub intersection_is_levi: bool,
    /// `|Δ_S^+| = |Δ_{S^∨}^+|`
    pub positive_counts_match: bool,
}

impl DualParabolicReport {
    pub fn passes(&self) -> bool {
        self.lemma_holds
            && self.intersection_is_levi
            && self.positive_counts_match
            && self.intersection_dim == self.dim_l
    }
}

pub fn verify_dual_parabolic(
    rs: &RootSystem,
    subset: &BTreeSet<usize>,
) -> Result<DualParabolicReport> {
    let dual = rs.dual_subset(subset)?;
    let w0 = rs.longest_element();
    let ps = rs.parabolic_data(subset)?;
    let pd = rs.parabolic_data(&dual)?;

    let image: HashSet<Root> = pd
        .delta_s_minus
        .iter()
        .map(|b| w0.apply_root(rs, b))
        .collect();
    let target: HashSet<Root> = ps.delta_s_plus.iter().cloned().collect();
    let lemma_holds = image == target;

    // Roots of 𝔭_S are Δ₊ ∪ Δ_S^−; those of w₀·𝔭_{S^∨} are w₀(Δ₊ ∪ Δ_{S^∨}^−).
    let p_s: HashSet<Root> = rs
        .positive_roots()
        .iter()
        .chain(&ps.delta_s_minus)
        .cloned()
        .collect();
    let p_star: HashSet<Root> = rs
        .positive_roots()
        .iter()
        .chain(&pd.delta_s_minus)
        .map(|b| w0.apply_root(rs, b))
        .collect();
    let intersection_roots: Vec<Root> = rs
        .roots()
        .iter()
        .filter(|b| p_s.contains(*b) && p_star.contains(*b))
        .cloned()
        .collect();
    let intersection_is_levi = intersection_roots == ps.delta_s;

    Ok(DualParabolicReport {
        subset: subset.clone(),
        dual,
        lemma_holds,
        intersection_dim: rs.rank() + intersection_roots.len(),
        intersection_roots,
        dim_l: ps.dim_l,
        intersection_is_levi,
        positive_counts_match: ps.delta_s_plus.len() == pd.delta_s_plus.len(),
    })
}

/// `(dim 𝒪(h), dim G/P_{Π(h)}, dim G/P*_{Π(h)})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompactificationDims {
    pub orbit: usize,
    pub gp: usize,
    pub gp_star: usize,
}

/// Dimensions behind the compactification of a semisimple orbit; checks
/// `dim 𝒪 = 2·dim G/P` and `dim G/P = dim G/P*`.
pub fn compactification_dims(rs: &RootSystem, h: &TorusElement) -> Result<CompactificationDims> {
    let orbit = ss_orbit_dim(rs, h)?;
    let s = pi_of_h(rs, h)?;
    let gp = rs.parabolic_data(&s)?.dim_u;
    let gp_star = rs.parabolic_data(&rs.dual_subset(&s)?)?.dim_u;
    if orbit != 2 * gp || gp != gp_star {
        return Err(Error::Internal(format!(
            "dimension identity fails: orbit {orbit}, G/P {gp}, G/P* {gp_star}"
        )));
    }
    Ok(CompactificationDims { orbit, gp, gp_star })
}

/// The Weyl-group translate of a real `h` in the fundamental domain, with
/// the simple reflections applied to reach it.
pub fn dominant_reduction(rs: &RootSystem, h: &TorusElement) -> Result<(TorusElement, Vec<usize>)> {
    if !h.is_real() {
        return Err(Error::NonRealTorusElement);
    }
    let (mut c, _) = h.parts();
    let mut word = Vec::new();
    loop {
        let values = rs.simple_values(&c)?;
        let Some(i) = values.iter().position(Signed::is_negative) else {
            break;
        };
        // s_i(h) = h − α_i(h)·h_i
        c[i] -= &values[i];
        word.push(i);
        if word.len() > rs.positive_roots().len() {
            return Err(Error::Internal(
                "dominant reduction did not terminate".into(),
            ));
        }
    }
    Ok((TorusElement::from_real(&c), word))
}

pub fn dominant_representative(rs: &RootSystem, h: &TorusElement) -> Result<TorusElement> {
    dominant_reduction(rs, h).map(|(d, _)| d)
}
