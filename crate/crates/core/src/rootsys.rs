//! Abstract root systems of the irreducible Cartan types A–G.
//!
//! Roots are integer vectors over the simple roots. The Cartan matrix uses
//! the convention `a[i][j] = ⟨α_i^∨, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)` with
//! Bourbaki numbering, so `D·A` is symmetric for the diagonal symmetrizer
//! `D = diag((α_i, α_i)/2)`.
//!
//! The inner product is normalized so that long roots have squared length
//! 2. Every quantity computed from it (coroot pairings, orthogonality) is
//! invariant under rescaling, so the absolute Killing normalization never
//! enters. Absolute Killing values are only available for matrices, see
//! [`crate::sln::killing`].
//!
//! Simple-root indices are 0-based throughout the library.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// An irreducible Cartan type such as `E8` or `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint = match family {
            Family::A if rank < 1 => Some("type A needs rank >= 1"),
            Family::B | Family::C if rank < 2 => Some("types B and C need rank >= 2"),
            Family::D if rank < 3 => Some("type D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("type E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("type F needs rank 4"),
            Family::G if rank != 2 => Some("type G needs rank 2"),
            _ => None,
        };
        match constraint {
            Some(constraint) => Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                constraint,
            }),
            None => Ok(Self { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        families
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| CartanType::new(f, r).ok()))
            .collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses labels like `"E8"` or `"a3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan type".into()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid Cartan type '{s}'")))?;
        CartanType::new(family, rank)
    }
}

const E6: [[i64; 6]; 6] = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
];

const E7: [[i64; 7]; 7] = [
    [2, 0, -1, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0],
    [0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, -1, 2],
];

const E8: [[i64; 8]; 8] = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
];

const F4: [[i64; 4]; 4] = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]];

const G2: [[i64; 2]; 2] = [[2, -3], [-1, 2]];

fn rows_of<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// Cartan matrix with Bourbaki numbering.
pub fn cartan_matrix(ctype: CartanType) -> Vec<Vec<i64>> {
    let n = ctype.rank;
    let chain = || {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    match ctype.family {
        Family::A => chain(),
        Family::B => {
            let mut a = chain();
            a[n - 1][n - 2] = -2;
            a
        }
        Family::C => {
            let mut a = chain();
            a[n - 2][n - 1] = -2;
            a
        }
        Family::D => {
            let mut a = chain();
            // α_n hangs off α_{n-2} instead of α_{n-1}.
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a
        }
        Family::E => match n {
            6 => rows_of(&E6),
            7 => rows_of(&E7),
            _ => rows_of(&E8),
        },
        Family::F => rows_of(&F4),
        Family::G => rows_of(&G2),
    }
}

/// A root as integer coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    /// Simple-root indices with a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect()
    }

    fn canonical_key(&self) -> (i64, &[i64]) {
        (self.height(), &self.0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A word in the simple reflections. Applying the word to a vector applies
/// the letters in order, first letter first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply_root(&self, rs: &RootSystem, root: &Root) -> Root {
        self.0
            .iter()
            .fold(root.clone(), |r, &i| rs.reflect_root(i, &r))
    }

    pub fn apply(&self, rs: &RootSystem, v: &[Rational]) -> Result<Vec<Rational>> {
        self.0
            .iter()
            .try_fold(v.to_vec(), |acc, &i| rs.reflect(i, &acc))
    }
}

/// Root data of the standard parabolic subalgebra attached to a subset of
/// the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicData {
    pub subset: BTreeSet<usize>,
    pub delta_s: Vec<Root>,
    pub delta_s_plus: Vec<Root>,
    pub delta_s_minus: Vec<Root>,
    pub dim_p: usize,
    pub dim_l: usize,
    pub dim_u: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    positive: Vec<Root>,
}

#[derive(Serialize)]
struct RootSystemJson<'a> {
    #[serde(rename = "type")]
    family: String,
    rank: usize,
    roots: &'a [Root],
    cartan: &'a [Vec<i64>],
}

impl RootSystem {
    /// Builds the full root system as the closure of the simple roots
    /// under the simple reflections.
    pub fn build(ctype: CartanType) -> Result<Self> {
        let ctype = CartanType::new(ctype.family, ctype.rank)?;
        let cartan = cartan_matrix(ctype);
        let symmetrizer = symmetrizer(&cartan)?;
        let r = ctype.rank;
        let gram: Vec<Vec<Rational>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| &symmetrizer[i] * Rational::from_integer(cartan[i][j].into()))
                    .collect()
            })
            .collect();

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let s = Root::simple(r, i).0;
            seen.insert(s.clone());
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..r {
                let w = reflect_int(&cartan, i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().map(Root).collect();
        roots.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
        let positive = roots.iter().filter(|b| b.is_positive()).cloned().collect();

        Ok(Self {
            ctype,
            cartan,
            symmetrizer,
            gram,
            roots,
            positive,
        })
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    /// Gram matrix of the simple roots under the normalized inner product.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// All roots, ordered by height then lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn negative_roots(&self) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|b| !b.is_positive())
            .cloned()
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// `dim 𝔤 = rank + |Δ|`.
    pub fn dim(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.roots
            .binary_search_by(|b| b.canonical_key().cmp(&(v.iter().sum::<i64>(), v)))
            .is_ok()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                left: self.rank(),
                right: v.len(),
            });
        }
        Ok(())
    }

    /// `⟨u, v⟩` for vectors in simple-root coordinates.
    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.gram[i][j].is_zero() {
                    acc += ui * vj * &self.gram[i][j];
                }
            }
        }
        acc
    }

    /// `2⟨α_i, v⟩ / ⟨α_i, α_i⟩`.
    pub fn coroot_pairing(&self, i: usize, v: &[Rational]) -> Result<Rational> {
        self.check_index(i)?;
        self.check_len(v)?;
        let alpha = self.simple_root(i).to_rational();
        let two = Rational::from_integer(2.into());
        Ok(two * self.inner(&alpha, v) / &self.gram[i][i])
    }

    /// Simple reflection `s_i(v) = v − ⟨α_i^∨, v⟩ α_i`.
    pub fn reflect(&self, i: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        let p = self.coroot_pairing(i, v)?;
        let mut out = v.to_vec();
        out[i] -= p;
        Ok(out)
    }

    pub fn reflect_root(&self, i: usize, root: &Root) -> Root {
        Root(reflect_int(&self.cartan, i, &root.0))
    }

    /// `β ≤ γ` iff `γ − β` is a non-negative integer combination of simple roots.
    pub fn weight_leq(&self, beta: &[Rational], gamma: &[Rational]) -> bool {
        beta.len() == gamma.len()
            && beta.iter().zip(gamma).all(|(b, g)| {
                let d = g - b;
                d.is_integer() && !d.is_negative()
            })
    }

    pub fn root_leq(&self, beta: &Root, gamma: &Root) -> bool {
        beta.0.iter().zip(&gamma.0).all(|(b, g)| b <= g)
    }

    /// The highest root θ.
    pub fn maximal_root(&self) -> Root {
        let theta = self
            .positive
            .iter()
            .find(|t| self.roots.iter().all(|b| self.root_leq(b, t)))
            .expect("irreducible root system has a maximal root");
        theta.clone()
    }

    /// Reduced word for the longest Weyl group element.
    ///
    /// Starts from ρ (every coroot pairing 1) and repeatedly applies the
    /// least simple reflection whose pairing is still positive, until every
    /// pairing is negative. Each step lengthens the element by one.
    pub fn longest_element(&self) -> ReducedWord {
        let r = self.rank();
        let mut pairing = vec![1i64; r];
        let mut letters = Vec::with_capacity(self.positive.len());
        while let Some(i) = (0..r).find(|&i| pairing[i] > 0) {
            let p = pairing[i];
            for (k, slot) in pairing.iter_mut().enumerate() {
                *slot -= p * self.cartan[k][i];
            }
            letters.push(i);
        }
        debug_assert_eq!(letters.len(), self.positive.len());
        ReducedWord(letters)
    }

    /// `S^∨ = −w₀·S`.
    pub fn dual_subset(&self, subset: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        for &i in subset {
            self.check_index(i)?;
        }
        let w0 = self.longest_element();
        subset
            .iter()
            .map(|&i| {
                let image = w0.apply_root(self, &self.simple_root(i)).neg();
                let support = image.support();
                match (support.len(), support.iter().next()) {
                    (1, Some(&j)) if image.0[j] == 1 => Ok(j),
                    _ => Err(Error::Internal(format!(
                        "-w0 maps simple root {i} to non-simple {image}"
                    ))),
                }
            })
            .collect()
    }

    /// Roots whose support lies in `subset`.
    pub fn subset_roots(&self, subset: &BTreeSet<usize>) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|b| b.support().is_subset(subset))
            .cloned()
            .collect()
    }

    pub fn parabolic_data(&self, subset: &BTreeSet<usize>) -> Result<ParabolicData> {
        for &i in subset {
            self.check_index(i)?;
        }
        let delta_s = self.subset_roots(subset);
        let (delta_s_plus, delta_s_minus): (Vec<Root>, Vec<Root>) =
            delta_s.iter().cloned().partition(Root::is_positive);
        let dim_l = self.rank() + delta_s.len();
        let dim_u = self.positive.len() - delta_s_plus.len();
        Ok(ParabolicData {
            subset: subset.clone(),
            dim_p: dim_l + dim_u,
            dim_l,
            dim_u,
            delta_s,
            delta_s_plus,
            delta_s_minus,
        })
    }

    /// Values `α_i(h)` for `h = Σ_j c_j h_j` given over the simple coroots.
    pub fn simple_values(&self, coroot_coords: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(coroot_coords)?;
        Ok((0..self.rank())
            .map(|i| {
                coroot_coords
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| self.cartan[*j][i] != 0)
                    .fold(Rational::zero(), |acc, (j, c)| {
                        acc + c * Rational::from_integer(self.cartan[j][i].into())
                    })
            })
            .collect())
    }

    /// Solves for coroot coordinates of `h` with prescribed `α_i(h)`.
    pub fn coroot_coords_from_values(&self, values: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(values)?;
        let r = self.rank();
        let m = crate::linalg::QMatrix::from_fn(r, r, |i, j| {
            Rational::from_integer(self.cartan[j][i].into())
        });
        m.solve(values)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RootSystemJson {
            family: self.ctype.family.letter().to_string(),
            rank: self.rank(),
            roots: &self.roots,
            cartan: &self.cartan,
        })
        .expect("root system serializes")
    }
}

fn reflect_int(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let p: i64 = cartan[i].iter().zip(v).map(|(a, c)| a * c).sum();
    let mut w = v.to_vec();
    w[i] -= p;
    w
}

/// Diagonal `d` with `d_i a_ij = d_j a_ji`, scaled so the largest entry is 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<Rational>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].clone().unwrap();
        for j in 0..n {
            if i == j || cartan[i][j] == 0 {
                continue;
            }
            let dj = &di * Rational::new(cartan[i][j].into(), cartan[j][i].into());
            match &d[j] {
                None => {
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
                Some(existing) if *existing != dj => {
                    return Err(Error::Internal("Cartan matrix is not symmetrizable".into()));
                }
                Some(_) => {}
            }
        }
    }
    let d: Vec<Rational> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Internal("Dynkin diagram is disconnected".into())))
        .collect::<Result<_>>()?;
    let max = d.iter().max().cloned().unwrap();
    Ok(d.into_iter().map(|x| x / &max).collect())
}
