//! The minimal nilpotent orbit of a simple Lie algebra, via the highest
//! root θ and the parabolic `P_{Π(θ)}` with `G/P_{Π(θ)} ≅ ℙ(𝒪_min)`.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::{minimal_orbit, orbit_dim_partition};
use crate::rootsys::{CartanType, Family, Root, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinOrbitReport {
    pub theta: Root,
    /// Simple roots orthogonal to θ (0-based).
    pub pi_theta: BTreeSet<usize>,
    /// `dim ℙ(𝒪_min) = dim G/P_{Π(θ)}`
    pub dim_p_omin: usize,
    pub dim_omin: usize,
}

/// `Π(θ) = {α ∈ Π : ⟨α, θ⟩ = 0}`, under the normalized inner product.
pub fn pi_theta(rs: &RootSystem) -> BTreeSet<usize> {
    let theta = rs.maximal_root().to_rational();
    (0..rs.rank())
        .filter(|&i| rs.inner(&rs.simple_root(i).to_rational(), &theta).is_zero())
        .collect()
}

pub fn min_orbit_report(rs: &RootSystem) -> Result<MinOrbitReport> {
    let theta = rs.maximal_root();
    let pi = pi_theta(rs);
    let dim_p_omin = rs.parabolic_data(&pi)?.dim_u;
    Ok(MinOrbitReport {
        theta,
        pi_theta: pi,
        dim_p_omin,
        dim_omin: dim_p_omin + 1,
    })
}

/// Type A check that `ℙ(𝒪_min) ≅ Flag(1, n−1; ℂⁿ)` at the level of
/// dimensions: the root route, `2n − 3`, and the partition route
/// `dim 𝒪_(2,1ⁿ⁻²) − 1` all agree.
pub fn type_a_flag_check(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidRank {
            family: 'A',
            rank: n.saturating_sub(1),
            constraint: "the flag check needs n >= 3",
        });
    }
    let rs = RootSystem::build(CartanType::new(Family::A, n - 1)?)?;
    let report = min_orbit_report(&rs)?;
    let flag_dim = (n - 1) + (n - 1) - 1;
    let partition_route = orbit_dim_partition(&minimal_orbit(n)?) - 1;
    Ok(report.dim_p_omin == flag_dim && flag_dim == partition_route)
}
