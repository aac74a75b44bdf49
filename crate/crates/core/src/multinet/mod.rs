//! Multinets: partitions of an arrangement into weighted classes meeting only
//! at base points with balanced local weights.

mod enumerate;

use num_integer::Integer;
use serde::Serialize;

use crate::arrangement::{Arrangement, IntersectionPoint};
use crate::error::{Error, Result};
use crate::pencil::{solve_combo, Pencil};
use crate::poly::MultiPoly;

pub use enumerate::{enumerate_multinets, enumerate_naive, EnumerationOptions};

/// Result of checking the five multinet conditions on a weighted partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultinetReport {
    pub classes: Vec<Vec<usize>>,
    pub mult: Vec<u32>,
    /// At least three classes.
    pub enough_classes: bool,
    /// (a) every class has the same total weight.
    pub equal_weights: bool,
    /// (b) two lines from different classes meet in the base locus.
    pub cross_points_in_base: bool,
    /// (c) the weight of each class through a base point is the same.
    pub balanced_base_points: bool,
    /// (d) each class is connected through points off the base locus.
    pub classes_connected: bool,
    /// (e) the multiplicities are coprime.
    pub coprime: bool,
    /// Class weights.
    pub weights: Vec<u32>,
    /// Indices into the lattice of the base points.
    pub base_locus: Vec<usize>,
    /// Per base point, the weight of each class through it.
    pub local_weights: Vec<Vec<u32>>,
    pub witnesses: Vec<String>,
}

impl MultinetReport {
    pub fn is_valid(&self) -> bool {
        self.enough_classes
            && self.equal_weights
            && self.cross_points_in_base
            && self.balanced_base_points
            && self.classes_connected
            && self.coprime
    }
}

/// A verified multinet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multinet {
    /// Classes in canonical order (sorted members, classes sorted by smallest member).
    pub classes: Vec<Vec<usize>>,
    pub mult: Vec<u32>,
    pub kappa: u32,
    /// Lattice indices of the base points.
    pub base_locus: Vec<usize>,
    /// `n_x` for each base point, aligned with `base_locus`.
    pub n_x: Vec<u32>,
}

impl Multinet {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self) -> Vec<usize> {
        let mut c = vec![0; self.mult.len()];
        for (k, cl) in self.classes.iter().enumerate() {
            for &i in cl {
                c[i] = k;
            }
        }
        c
    }

    /// True iff every multiplicity is 1.
    pub fn is_reduced(&self) -> bool {
        self.mult.iter().all(|&m| m == 1)
    }

    /// Known restrictions on `k`: `k ∈ {3, 4}` when there is more than one
    /// base point, and `k = 3` once some multiplicity exceeds 1.
    pub fn k_bound_holds(&self) -> bool {
        let k = self.k();
        (self.base_locus.len() <= 1 || k == 3 || k == 4) && (self.is_reduced() || k == 3)
    }
}

pub(crate) fn canonical_classes(mut classes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    classes.retain(|c| !c.is_empty());
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Checks the multinet conditions for a weighted partition of the lines.
pub fn check_multinet(a: &Arrangement, classes: &[Vec<usize>], mult: &[u32]) -> Result<MultinetReport> {
    check_with_lattice(a, &a.lattice(), classes, mult)
}

pub(crate) fn check_with_lattice(
    a: &Arrangement,
    lattice: &[IntersectionPoint],
    classes: &[Vec<usize>],
    mult: &[u32],
) -> Result<MultinetReport> {
    let n = a.len();
    if mult.len() != n {
        return Err(Error::NotAPartition(format!("{} multiplicities for {} lines", mult.len(), n)));
    }
    if let Some(i) = mult.iter().position(|&m| m == 0) {
        return Err(Error::NonPositiveMultiplicity(a.line(i).label.clone()));
    }
    let mut class_of = vec![usize::MAX; n];
    for (k, c) in classes.iter().enumerate() {
        if c.is_empty() {
            return Err(Error::NotAPartition(format!("class {k} is empty")));
        }
        for &i in c {
            if i >= n {
                return Err(Error::NotAPartition(format!("line index {i} out of range")));
            }
            if class_of[i] != usize::MAX {
                return Err(Error::NotAPartition(format!("line `{}` in two classes", a.line(i).label)));
            }
            class_of[i] = k;
        }
    }
    if let Some(i) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::NotAPartition(format!("line `{}` in no class", a.line(i).label)));
    }
    let classes = canonical_classes(classes.to_vec());
    for (k, c) in classes.iter().enumerate() {
        for &i in c {
            class_of[i] = k;
        }
    }
    let k = classes.len();
    let mut witnesses = Vec::new();
    let label = |i: usize| a.line(i).label.as_str();

    let weights: Vec<u32> = classes.iter().map(|c| c.iter().map(|&i| mult[i]).sum()).collect();
    let equal_weights = weights.windows(2).all(|w| w[0] == w[1]);
    if !equal_weights {
        witnesses.push(format!("(a) class weights {weights:?}"));
    }

    let mut in_base = vec![false; lattice.len()];
    let mut base_locus = Vec::new();
    let mut local_weights = Vec::new();
    let mut balanced = true;
    for (pi, p) in lattice.iter().enumerate() {
        let mut w = vec![0u32; k];
        for &i in &p.incident {
            w[class_of[i]] += mult[i];
        }
        if w.iter().filter(|&&v| v > 0).count() < 2 {
            continue;
        }
        in_base[pi] = true;
        base_locus.push(pi);
        if !w.windows(2).all(|x| x[0] == x[1]) {
            balanced = false;
            let names: Vec<&str> = p.incident.iter().map(|&i| label(i)).collect();
            witnesses.push(format!("(c) point on {names:?} has class weights {w:?}"));
        }
        local_weights.push(w);
    }

    // every pair of lines meets in exactly one lattice point
    let mut uf = UnionFind::new(n);
    for (pi, p) in lattice.iter().enumerate() {
        if in_base[pi] {
            continue;
        }
        for w in p.incident.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut connected = true;
    for c in &classes {
        if let Some(&bad) = c.iter().find(|&&i| uf.find(i) != uf.find(c[0])) {
            connected = false;
            witnesses.push(format!("(d) `{}` and `{}` not linked off the base locus", label(c[0]), label(bad)));
        }
    }

    let g = mult.iter().fold(0u32, |g, &m| g.gcd(&m));
    let coprime = g == 1;
    if !coprime {
        witnesses.push(format!("(e) gcd of multiplicities is {g}"));
    }
    if k < 3 {
        witnesses.push(format!("only {k} classes"));
    }

    Ok(MultinetReport {
        classes,
        mult: mult.to_vec(),
        enough_classes: k >= 3,
        equal_weights,
        cross_points_in_base: true,
        balanced_base_points: balanced,
        classes_connected: connected,
        coprime,
        weights,
        base_locus,
        local_weights,
        witnesses,
    })
}

impl MultinetReport {
    pub fn multinet(&self) -> Option<Multinet> {
        if !self.is_valid() {
            return None;
        }
        Some(Multinet {
            classes: self.classes.clone(),
            mult: self.mult.clone(),
            kappa: self.weights[0],
            base_locus: self.base_locus.clone(),
            n_x: self.local_weights.iter().map(|w| w[0]).collect(),
        })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Lines `H` with `m_H > 1` whose multiplicity divides `n_x` at every base point on `H`.
pub fn find_pointed(a: &Arrangement, net: &Multinet) -> Vec<usize> {
    let lattice = a.lattice();
    (0..a.len())
        .filter(|&h| {
            let m = net.mult[h];
            m > 1
                && net
                    .base_locus
                    .iter()
                    .zip(&net.n_x)
                    .filter(|(&p, _)| lattice[p].incident.contains(&h))
                    .all(|(_, &nx)| nx % m == 0)
        })
        .collect()
}

/// Class polynomial `∏_{H ∈ class} f_H^{m_H}`.
pub fn class_polynomial(a: &Arrangement, class: &[usize], mult: &[u32]) -> MultiPoly {
    class
        .iter()
        .fold(MultiPoly::one(), |acc, &i| acc.mul(&a.line(i).polynomial().pow(mult[i])))
}

/// The pencil spanned by the first two class polynomials, with every further
/// class polynomial written as a combination of them.
pub fn multinet_pencil(a: &Arrangement, net: &Multinet) -> Result<Pencil> {
    let polys: Vec<MultiPoly> = net.classes.iter().map(|c| class_polynomial(a, c, &net.mult)).collect();
    if polys.len() < 2 {
        return Err(Error::NotAPencil("fewer than two classes".into()));
    }
    let mut pencil = Pencil::new(polys[0].clone(), polys[1].clone())
        .map_err(|e| Error::NotAPencil(format!("first two class polynomials: {e}")))?;
    for (i, g) in polys.iter().enumerate().skip(2) {
        let combo = solve_combo(&pencil.g1, &pencil.g2, g)
            .ok_or_else(|| Error::NotAPencil(format!("class {} is not a combination of classes 1 and 2", i + 1)))?;
        pencil.combos.push(combo);
    }
    Ok(pencil)
}
