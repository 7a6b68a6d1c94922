//! Nilpotent orbits of 𝔰𝔩_n, labelled by partitions of `n`.
//!
//! A partition `λ` labels the orbit of the nilpotent Jordan matrix with
//! blocks `λ₁ ≥ λ₂ ≥ …` placed down the diagonal in that (descending) order.
//! The closure order on orbits is the dominance order on partitions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::Rational;
use crate::sln::SlnElement;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `"3+1+1+1"`
    pub fn label(&self) -> String {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        s.join("+")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid partition '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

fn same_n(a: &Partition, b: &Partition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// `λ ≤ μ` in dominance order: every prefix sum of `λ` is at most the
/// corresponding prefix sum of `μ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_n(lambda, mu)?;
    let (mut sl, mut sm) = (0, 0);
    for i in 0..lambda.0.len().max(mu.0.len()) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conjugate partition, `λ′_i = #{j : λ_j ≥ i}`.
pub fn transpose(lambda: &Partition) -> Partition {
    let first = lambda.part(0);
    Partition(
        (1..=first)
            .map(|i| lambda.0.iter().filter(|&&p| p >= i).count())
            .collect(),
    )
}

fn jordan_qmatrix(lambda: &Partition) -> QMatrix {
    let n = lambda.n();
    let mut m = QMatrix::zeros(n, n);
    let mut offset = 0;
    for &k in &lambda.0 {
        for i in 0..k.saturating_sub(1) {
            m[(offset + i, offset + i + 1)] = Rational::one();
        }
        offset += k;
    }
    m
}

/// Nilpotent Jordan matrix with blocks of sizes `λ` in descending order.
pub fn jordan_matrix(lambda: &Partition) -> SlnElement {
    SlnElement::new(jordan_qmatrix(lambda)).expect("nilpotent matrices are traceless")
}

/// `n² − Σ (λ′_i)²`.
pub fn orbit_dim_partition(lambda: &Partition) -> usize {
    let n = lambda.n();
    let sq: usize = transpose(lambda).0.iter().map(|c| c * c).sum();
    n * n - sq
}

/// Ranks of `J_λ^k` for `k = 1..n−1`, computed from the matrix.
pub fn power_ranks(lambda: &Partition) -> Vec<usize> {
    let j = jordan_qmatrix(lambda);
    let n = lambda.n();
    let mut p = j.clone();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        out.push(p.rank());
        p = p.mul(&j);
    }
    out
}

/// Orbit-closure membership `𝒪_λ ⊆ closure(𝒪_μ)` through the rank conditions
/// `rank(J_λ^k) ≤ rank(J_μ^k)`, `1 ≤ k < n`.
pub fn closure_leq_rank(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_n(lambda, mu)?;
    Ok(power_ranks(lambda)
        .iter()
        .zip(power_ranks(mu))
        .all(|(a, b)| *a <= b))
}

/// The regular nilpotent orbit `(n)`.
pub fn regular_orbit(n: usize) -> Result<Partition> {
    Partition::new(vec![n])
}

/// The minimal nonzero nilpotent orbit `(2, 1, …, 1)`.
pub fn minimal_orbit(n: usize) -> Result<Partition> {
    if n < 2 {
        return Err(Error::NoMinimalOrbit(n));
    }
    let mut parts = vec![2];
    parts.resize(n - 1, 1);
    Partition::new(parts)
}

/// Hasse diagram of the dominance order on partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoset {
    pub n: usize,
    pub nodes: Vec<Partition>,
    /// Covering pairs `(lower, upper)` as node indices.
    pub covers: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct NodeJson<'a> {
    parts: &'a Partition,
    dim: usize,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    n: usize,
    nodes: Vec<NodeJson<'a>>,
    covers: Vec<[usize; 2]>,
}

/// Full dominance relation followed by transitive reduction.
pub fn hasse_diagram(n: usize) -> OrbitPoset {
    let nodes = partitions(n);
    let p = nodes.len();
    let leq: Vec<Vec<bool>> = nodes
        .iter()
        .map(|a| nodes.iter().map(|b| dominance_leq(a, b).unwrap()).collect())
        .collect();
    let mut covers = Vec::new();
    for lo in 0..p {
        for hi in 0..p {
            if lo == hi || !leq[lo][hi] {
                continue;
            }
            let between = (0..p).any(|m| m != lo && m != hi && leq[lo][m] && leq[m][hi]);
            if !between {
                covers.push((lo, hi));
            }
        }
    }
    OrbitPoset { n, nodes, covers }
}

impl OrbitPoset {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.nodes.iter().position(|p| p == lambda)
    }

    /// Nodes covered by `upper`.
    pub fn lower_covers(&self, upper: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|c| c.1 == upper)
            .map(|c| c.0)
            .collect()
    }

    /// Nodes with nothing above them.
    pub fn maximal_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| !self.covers.iter().any(|c| c.0 == i))
            .collect()
    }

    /// Nodes with nothing below them.
    pub fn minimal_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| !self.covers.iter().any(|c| c.1 == i))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes = self
            .nodes
            .iter()
            .map(|p| NodeJson {
                parts: p,
                dim: orbit_dim_partition(p),
            })
            .collect();
        serde_json::to_value(PosetJson {
            n: self.n,
            nodes,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("poset serializes")
    }

    /// Graphviz rendering; edges point from lower to upper orbit.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph nilpotent_orbits_sl{} {{\n", self.n);
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (i, p) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  p{i} [label=\"{} (dim {})\"];\n",
                p.label(),
                orbit_dim_partition(p)
            ));
        }
        for (lo, hi) in &self.covers {
            out.push_str(&format!("  p{lo} -> p{hi};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Memoized rank profiles, for exhaustive closure checks.
pub fn rank_profiles(n: usize) -> HashMap<Partition, Vec<usize>> {
    partitions(n)
        .into_iter()
        .map(|p| {
            let r = power_ranks(&p);
            (p, r)
        })
        .collect()
}
