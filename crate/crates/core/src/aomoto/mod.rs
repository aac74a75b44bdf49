//! The integer Aomoto complex `ℤ → ℤⁿ → ℤ^{b₂}` of an affine line
//! arrangement, built on the degree-two Orlik–Solomon basis, and the torsion
//! of its second cohomology.

mod matrix;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arrangement::{Arrangement, IntersectionPoint};
use crate::error::{Error, Result};

pub use matrix::{snf, IntMatrix, SnfResult};

/// Degree-two basis: for each affine multiple point with incident lines
/// `i₁ < … < i_r`, the products `e_{i₁}·e_{i_j}` for `j ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Os2Basis {
    /// Number of affine lines.
    pub n: usize,
    pub labels: Vec<String>,
    /// Affine intersection points, incidence in affine line indices.
    pub points: Vec<Vec<usize>>,
    /// `(point, line)` pairs; the minimal line of the point is implicit.
    pub elements: Vec<(usize, usize)>,
    #[serde(skip)]
    pair_point: HashMap<(usize, usize), usize>,
    #[serde(skip)]
    column: HashMap<(usize, usize), usize>,
}

impl Os2Basis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of `e_{min(p)}·e_line` in the basis.
    pub fn index_of(&self, point: usize, line: usize) -> Option<usize> {
        self.column.get(&(point, line)).copied()
    }

    /// The affine point where lines `i` and `j` meet; `None` when parallel.
    pub fn meeting_point(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_point.get(&(i.min(j), i.max(j))).copied()
    }
}

/// Keeps the lines not at infinity; returns the kept original indices.
pub fn affine_part(a: &Arrangement) -> (Vec<usize>, Vec<IntersectionPoint>) {
    let keep: Vec<usize> = (0..a.len()).filter(|&i| !a.line(i).is_line_at_infinity()).collect();
    let mut new_index = vec![usize::MAX; a.len()];
    for (k, &i) in keep.iter().enumerate() {
        new_index[i] = k;
    }
    let points = a
        .lattice()
        .into_iter()
        .filter(|p| !p.is_at_infinity())
        .map(|p| {
            let incident: Vec<usize> = p.incident.iter().filter_map(|&i| Some(new_index[i]).filter(|&k| k != usize::MAX)).collect();
            IntersectionPoint { coords: p.coords, incident }
        })
        .filter(|p| p.incident.len() >= 2)
        .collect();
    (keep, points)
}

/// The basis of the degree-two Orlik–Solomon group of the affine part of `a`.
/// Lines at infinity are dropped first.
pub fn os2_basis(a: &Arrangement) -> Os2Basis {
    let (keep, pts) = affine_part(a);
    let mut points = Vec::new();
    let mut elements = Vec::new();
    let mut pair_point = HashMap::new();
    let mut column = HashMap::new();
    for (pi, p) in pts.iter().enumerate() {
        let inc = p.incident.clone();
        for (x, &i) in inc.iter().enumerate() {
            for &j in &inc[x + 1..] {
                pair_point.insert((i, j), pi);
            }
        }
        for &j in &inc[1..] {
            column.insert((pi, j), elements.len());
            elements.push((pi, j));
        }
        points.push(inc);
    }
    Os2Basis {
        n: keep.len(),
        labels: keep.iter().map(|&i| a.line(i).label.clone()).collect(),
        points,
        elements,
        pair_point,
        column,
    }
}

/// Coordinates of `e_i·e_j` in the basis: `[m,j] − [m,i]` with `m` the
/// minimal line through `lᵢ ∩ lⱼ`, `[m,m] = 0`; zero for parallel lines.
pub fn reduce_product(i: usize, j: usize, basis: &Os2Basis) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); basis.len()];
    if i == j {
        return v;
    }
    let Some(p) = basis.meeting_point(i, j) else { return v };
    if let Some(c) = basis.index_of(p, j) {
        v[c] += 1;
    }
    if let Some(c) = basis.index_of(p, i) {
        v[c] -= 1;
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AomotoComplex {
    #[serde(serialize_with = "matrix::serialize_ints")]
    pub omega: Vec<BigInt>,
    /// `1 × n`, the weight vector.
    pub d1: IntMatrix,
    /// `n × b₂`; row `j` is `ω·e_j`.
    pub d2: IntMatrix,
    pub basis: Os2Basis,
}

impl AomotoComplex {
    pub fn b2(&self) -> usize {
        self.basis.len()
    }
}

/// Builds the complex for weights `omega` on the affine lines of `a`, in order.
pub fn aomoto_complex(a: &Arrangement, omega: &[i64]) -> Result<AomotoComplex> {
    let basis = os2_basis(a);
    let n = basis.n;
    if omega.len() != n {
        return Err(Error::InvalidInput(format!("weight vector has {} entries for {n} affine lines", omega.len())));
    }
    let omega: Vec<BigInt> = omega.iter().map(|&x| BigInt::from(x)).collect();
    let mut d1 = IntMatrix::zeros(1, n);
    for (j, w) in omega.iter().enumerate() {
        d1[(0, j)] = w.clone();
    }
    let mut d2 = IntMatrix::zeros(n, basis.len());
    for j in 0..n {
        for (i, w) in omega.iter().enumerate() {
            if w.is_zero() || i == j {
                continue;
            }
            for (c, x) in reduce_product(i, j, &basis).into_iter().enumerate() {
                if !x.is_zero() {
                    d2[(j, c)] += w * x;
                }
            }
        }
    }
    Ok(AomotoComplex { omega, d1, d2, basis })
}

/// Cohomology of the complex: `H²` is `coker(d2)`, `H¹ = ker d2 / im d1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AomotoCohomology {
    pub n: usize,
    pub b2: usize,
    pub h1_rank: usize,
    pub h2_free_rank: usize,
    #[serde(serialize_with = "matrix::serialize_ints")]
    pub h2_torsion: Vec<BigInt>,
    pub has_two_torsion: bool,
    pub snf: SnfResult,
}

pub fn h2_torsion(c: &AomotoComplex) -> AomotoCohomology {
    let s = snf(&c.d2);
    let torsion = s.torsion();
    let r1 = c.d1.rank();
    AomotoCohomology {
        n: c.basis.n,
        b2: c.b2(),
        h1_rank: c.basis.n - s.rank - r1,
        h2_free_rank: s.coker_free_rank(),
        has_two_torsion: torsion.iter().any(|d| d.is_even()),
        h2_torsion: torsion,
        snf: s,
    }
}
