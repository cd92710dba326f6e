//! Resolution graphs of ADE surface singularities.
//!
//! The minimal resolution of a Du Val point has exceptional locus a tree of
//! (-2)-curves arranged in an A, D or E Dynkin diagram. This module builds
//! the exceptional intersection matrices, solves the orthogonality system for
//! pullback coefficients of curve classes, and evaluates intersection numbers
//! on the singular surface from resolution data.
//!
//! Index conventions (fixed, 1-based in the math, 0-based in slices):
//! * kind A: the chain `E1 - E2 - ... - Em`;
//! * kind D: leaves `E1`, `E2` on the fork node `E3`, tail `E4 - ... - Em`;
//! * kind E: chain `E1 - E2 - E3`, leaf `E4` on `E3`, tail `E5 - ... - Em`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{dot, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DynkinKind {
    A,
    D,
    E,
}

impl DynkinKind {
    pub fn letter(self) -> char {
        match self {
            DynkinKind::A => 'A',
            DynkinKind::D => 'D',
            DynkinKind::E => 'E',
        }
    }
}

/// A Dynkin type in the degree-1 del Pezzo range: `A1..A8`, `D4..D8`, `E6..E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    kind: DynkinKind,
    rank: usize,
}

impl DynkinType {
    pub fn new(kind: DynkinKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            DynkinKind::A => (1..=8).contains(&rank),
            DynkinKind::D => (4..=8).contains(&rank),
            DynkinKind::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { kind, rank })
        } else {
            Err(Error::InvalidRank {
                kind: kind.letter(),
                rank,
            })
        }
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(DynkinKind::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(DynkinKind::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(DynkinKind::E, rank)
    }

    pub fn kind(&self) -> DynkinKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the dual graph, 1-based vertex labels.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.rank;
        match self.kind {
            DynkinKind::A => (1..m).map(|i| (i, i + 1)).collect(),
            DynkinKind::D => {
                let mut e = vec![(1, 3), (2, 3)];
                e.extend((3..m).map(|i| (i, i + 1)));
                e
            }
            DynkinKind::E => {
                let mut e = vec![(1, 2), (2, 3), (3, 4), (3, 5)];
                e.extend((5..m).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("cannot parse Dynkin type {s:?}"));
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => DynkinKind::A,
            Some('D') => DynkinKind::D,
            Some('E') => DynkinKind::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinType::new(kind, rank)
    }
}

impl TryFrom<String> for DynkinType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(t: DynkinType) -> String {
        t.to_string()
    }
}

/// The symmetric matrix `(E_i . E_j)`: diagonal -2, adjacency 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    pub graph: DynkinType,
    /// Row-major entries.
    pub entries: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Leading principal minors alternate in sign (negative definiteness).
    pub fn is_negative_definite(&self) -> bool {
        let m = self.rank();
        (1..=m).all(|k| {
            let d = det(&self.entries, k);
            if k % 2 == 1 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
    }
}

fn det(entries: &[Vec<i64>], k: usize) -> Rat {
    // Gaussian elimination on the leading k x k block.
    let mut m: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| Rat::int(entries[i][j])).collect())
        .collect();
    let mut d = Rat::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !m[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d = d * m[c][c].clone();
        let pivot = m[c][c].clone();
        for r in c + 1..k {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for j in c..k {
                let upd = &m[r][j] - &(&f * &m[c][j]);
                m[r][j] = upd;
            }
        }
    }
    d
}

/// Construct the exceptional intersection matrix of the minimal resolution.
pub fn intersection_matrix(t: DynkinType) -> IntersectionMatrix {
    let m = t.rank();
    let mut entries = vec![vec![0i64; m]; m];
    for i in 0..m {
        entries[i][i] = -2;
    }
    for (i, j) in t.edges() {
        entries[i - 1][j - 1] = 1;
        entries[j - 1][i - 1] = 1;
    }
    IntersectionMatrix { graph: t, entries }
}

/// A curve class recorded through its resolution data: degree against the
/// anticanonical class, self-intersection of the strict transform, and the
/// incidences `(strict transform . E_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub name: String,
    pub anticanonical_degree: Rat,
    pub self_intersection_strict: Rat,
    pub exc_intersections: Vec<u32>,
}

impl CurveClass {
    pub fn new(
        name: impl Into<String>,
        anticanonical_degree: Rat,
        self_intersection_strict: Rat,
        exc_intersections: Vec<u32>,
    ) -> Self {
        CurveClass {
            name: name.into(),
            anticanonical_degree,
            self_intersection_strict,
            exc_intersections,
        }
    }
}

/// The rational vector `(n_i)` with `pullback(L) = strict(L) + sum n_i E_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackCoefficients {
    pub graph: DynkinType,
    pub coeffs: Vec<Rat>,
}

impl PullbackCoefficients {
    pub fn scaled(&self, f: &Rat) -> Self {
        PullbackCoefficients {
            graph: self.graph,
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }
}

/// Solve the orthogonality system `M n = -b` for the pullback coefficients of
/// a class meeting the exceptional curves with multiplicities `b`.
///
/// The intersection matrix is invertible, so the solution is unique; it is
/// strictly positive whenever `b` is nonzero.
pub fn pullback_coefficients(t: DynkinType, incidences: &[u32]) -> Result<PullbackCoefficients> {
    let m = t.rank();
    if incidences.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "incidence vector has length {}, graph rank is {m}",
            incidences.len()
        )));
    }
    let mat = intersection_matrix(t);
    let rhs: Vec<Rat> = incidences.iter().map(|&b| Rat::int(-(b as i64))).collect();
    let coeffs = solve(&mat.entries, &rhs)?;
    Ok(PullbackCoefficients { graph: t, coeffs })
}

fn solve(entries: &[Vec<i64>], rhs: &[Rat]) -> Result<Vec<Rat>> {
    let n = rhs.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|j| Rat::int(entries[i][j])).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !m[r][c].is_zero())
            .ok_or_else(|| Error::Internal("singular intersection matrix".into()))?;
        m.swap(p, c);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &pivot;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..=n {
                    let upd = &m[r][j] - &(&f * &m[c][j]);
                    m[r][j] = upd;
                }
            }
        }
    }
    Ok((0..n).map(|i| m[i][n].clone()).collect())
}

/// Intersection number `L1 . L2` on the singular surface, computed as
/// `strict_product + sum_j n1_j (strict(L2) . E_j)`.
///
/// `strict_product` is the product of the two strict transforms on the
/// resolution and is supplied by the caller (-1 for the self-intersection of
/// a (-1)-curve, 0 for disjoint strict transforms).
pub fn intersection_number(
    l1: &CurveClass,
    n1: &PullbackCoefficients,
    l2: &CurveClass,
    strict_product: Rat,
) -> Result<Rat> {
    let m = n1.coeffs.len();
    if l1.exc_intersections.len() != m || l2.exc_intersections.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "curve classes on graphs of ranks {} and {}, coefficients of rank {m}",
            l1.exc_intersections.len(),
            l2.exc_intersections.len()
        )));
    }
    let incidence: Vec<Rat> = l2
        .exc_intersections
        .iter()
        .map(|&b| Rat::int(b as i64))
        .collect();
    Ok(strict_product + dot(&n1.coeffs, &incidence))
}

/// Action of the biregular involution on a chain resolution: the coefficient
/// vector reverses. Rejected for kinds D and E.
pub fn involution_reverse(n: &PullbackCoefficients) -> Result<PullbackCoefficients> {
    if n.graph.kind() != DynkinKind::A {
        return Err(Error::NotChain);
    }
    let mut coeffs = n.coeffs.clone();
    coeffs.reverse();
    Ok(PullbackCoefficients {
        graph: n.graph,
        coeffs,
    })
}

/// The fundamental cycle of the singularity: the minimal nonzero effective
/// integral vector `z` with `M z <= 0` componentwise (Laufer's algorithm).
/// Its entries are the pullback coefficients of the anticanonical curve
/// through the point, and the incidence of that curve's strict transform is
/// `-M z`.
pub fn fundamental_cycle(t: DynkinType) -> Vec<i64> {
    let mat = intersection_matrix(t);
    let m = t.rank();
    let mut z = vec![0i64; m];
    z[0] = 1;
    loop {
        let mut bumped = false;
        for j in 0..m {
            let row_dot: i64 = (0..m).map(|i| mat.entry(j, i) * z[i]).sum();
            if row_dot > 0 {
                z[j] += 1;
                bumped = true;
            }
        }
        if !bumped {
            return z;
        }
    }
}

/// True iff the componentwise sum of the vectors is integral, which is the
/// Cartier condition at a canonical singularity for the corresponding sum of
/// Weil divisors.
pub fn cartier_check(vectors: &[PullbackCoefficients]) -> Result<bool> {
    let Some(first) = vectors.first() else {
        return Ok(true);
    };
    let m = first.coeffs.len();
    if vectors.iter().any(|v| v.coeffs.len() != m) {
        return Err(Error::DimensionMismatch(
            "cartier_check requires vectors of equal length".into(),
        ));
    }
    for j in 0..m {
        let s: Rat = vectors.iter().map(|v| v.coeffs[j].clone()).sum();
        if !s.is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}
