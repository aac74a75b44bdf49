//! Projective line arrangements and their rank-2 intersection lattice.

mod file;
mod render;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::linear::{cross, normalize_covector};
use crate::poly::MultiPoly;

pub use file::{ArrangementFile, LineEntry};
pub use render::{render_svg, Window};

pub type Point = [FieldElement; 3];

/// A line `a·x + b·y + c·z = 0` with its covector normalized so that the
/// first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Line {
    pub label: String,
    pub covector: [FieldElement; 3],
}

impl Line {
    pub fn new(label: impl Into<String>, covector: [FieldElement; 3]) -> Result<Line> {
        let label = label.into();
        let covector = normalize_covector(&covector).ok_or_else(|| Error::ZeroCovector(label.clone()))?;
        Ok(Line { label, covector })
    }

    pub fn polynomial(&self) -> MultiPoly {
        MultiPoly::linear(&self.covector)
    }

    pub fn contains(&self, p: &Point) -> bool {
        let [a, b, c] = &self.covector;
        (&(a * &p[0]) + &(&(b * &p[1]) + &(c * &p[2]))).is_zero()
    }

    pub fn is_line_at_infinity(&self) -> bool {
        self.covector[0].is_zero() && self.covector[1].is_zero()
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self.polynomial())
    }
}

/// A point of the plane lying on at least two lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    pub coords: Point,
    /// Sorted indices of the lines through the point.
    pub incident: Vec<usize>,
}

impl IntersectionPoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    lines: Vec<Line>,
}

impl Arrangement {
    /// Builds an arrangement from at least two pairwise distinct lines.
    pub fn build(name: impl Into<String>, lines: Vec<(String, [FieldElement; 3])>) -> Result<Arrangement> {
        if lines.len() < 2 {
            return Err(Error::InvalidInput("an arrangement needs at least two lines".into()));
        }
        let lines = lines
            .into_iter()
            .map(|(label, c)| Line::new(label, c))
            .collect::<Result<Vec<_>>>()?;
        Arrangement::from_lines(name.into(), lines)
    }

    fn from_lines(name: String, lines: Vec<Line>) -> Result<Arrangement> {
        let mut seen: HashMap<&[FieldElement; 3], &str> = HashMap::new();
        let mut labels: HashMap<&str, ()> = HashMap::new();
        for l in &lines {
            if let Some(prev) = seen.insert(&l.covector, &l.label) {
                return Err(Error::DuplicateLine(prev.to_string(), l.label.clone()));
            }
            if labels.insert(&l.label, ()).is_some() {
                return Err(Error::InvalidInput(format!("label `{}` used twice", l.label)));
            }
        }
        Ok(Arrangement { name, lines })
    }

    /// Parses covector entries written in the field grammar.
    pub fn from_texts(name: &str, lines: &[(&str, [&str; 3])]) -> Result<Arrangement> {
        let parsed = lines
            .iter()
            .map(|(label, cov)| {
                let c = [FieldElement::parse(cov[0])?, FieldElement::parse(cov[1])?, FieldElement::parse(cov[2])?];
                Ok((label.to_string(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::build(name, parsed)
    }

    /// Builds an arrangement from linear forms given as polynomial text.
    pub fn from_forms(name: &str, forms: &[(&str, &str)]) -> Result<Arrangement> {
        let parsed = forms
            .iter()
            .map(|(label, text)| {
                let p = MultiPoly::parse(text)?;
                covector_of(&p).map(|c| (label.to_string(), c)).ok_or_else(|| {
                    Error::InvalidInput(format!("`{text}` is not a homogeneous linear form"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::build(name, parsed)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Arrangement {
        self.name = name.into();
        self
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &Line {
        &self.lines[i]
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.lines.iter().map(|l| l.label.as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.lines
            .iter()
            .position(|l| l.label == label)
            .ok_or_else(|| Error::UnknownLine(label.to_string()))
    }

    /// Fewer than two lines: the lattice is empty and most analyses are vacuous.
    pub fn is_degenerate(&self) -> bool {
        self.lines.len() < 2
    }

    /// Defining polynomial: product of all lines.
    pub fn defining_polynomial(&self) -> MultiPoly {
        self.lines.iter().fold(MultiPoly::one(), |acc, l| acc.mul(&l.polynomial()))
    }

    /// All multiple points, in order of first appearance over pairs `(i, j)`, `i < j`.
    pub fn lattice(&self) -> Vec<IntersectionPoint> {
        let n = self.lines.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let meets: Vec<Point> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let p = cross(&self.lines[i].covector, &self.lines[j].covector);
                normalize_covector(&p).expect("distinct lines meet in a point")
            })
            .collect();
        let mut index: HashMap<Point, usize> = HashMap::new();
        let mut points: Vec<IntersectionPoint> = Vec::new();
        for ((i, j), p) in pairs.into_iter().zip(meets) {
            let k = *index.entry(p.clone()).or_insert_with(|| {
                points.push(IntersectionPoint { coords: p, incident: Vec::new() });
                points.len() - 1
            });
            let inc = &mut points[k].incident;
            for v in [i, j] {
                if let Err(pos) = inc.binary_search(&v) {
                    inc.insert(pos, v);
                }
            }
        }
        points
    }

    /// True iff no point lies on every line.
    pub fn is_essential(&self) -> bool {
        let n = self.lines.len();
        n >= 2 && self.lattice().iter().all(|p| p.multiplicity() < n)
    }

    /// Removes the line with the given label, keeping the order of the rest.
    pub fn delete(&self, label: &str) -> Result<Arrangement> {
        let i = self.index_of(label)?;
        let mut lines = self.lines.clone();
        lines.remove(i);
        Ok(Arrangement { name: format!("{}-{}", self.name, label), lines })
    }

    /// Inserts a line at position `at` (clamped to the end).
    pub fn insert(&self, at: usize, label: &str, covector: [FieldElement; 3]) -> Result<Arrangement> {
        let mut lines = self.lines.clone();
        lines.insert(at.min(lines.len()), Line::new(label, covector)?);
        Arrangement::from_lines(self.name.clone(), lines)
    }

    /// Keeps only the lines at the given indices, in that order.
    pub fn subset(&self, name: &str, idx: &[usize]) -> Result<Arrangement> {
        Arrangement::from_lines(name.to_string(), idx.iter().map(|&i| self.lines[i].clone()).collect())
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Arrangement").field("name", &self.name).field("lines", &self.lines).finish()
    }
}

/// Covector of a homogeneous linear form.
pub fn covector_of(p: &MultiPoly) -> Option<[FieldElement; 3]> {
    if p.is_zero() || p.degree() != 1 || !p.is_homogeneous() {
        return None;
    }
    Some([0, 1, 2].map(|i| {
        let mut e = [0u32; 3];
        e[i] = 1;
        p.coeff(&crate::poly::Monomial(e))
    }))
}

/// Number of points of each multiplicity, ascending by multiplicity.
pub fn census(points: &[IntersectionPoint]) -> Vec<(usize, usize)> {
    let mut m: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for p in points {
        *m.entry(p.multiplicity()).or_default() += 1;
    }
    m.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: i64) -> FieldElement {
        FieldElement::from_i64(v)
    }

    fn triangle() -> Arrangement {
        Arrangement::from_forms("triangle", &[("x", "x"), ("y", "y"), ("z", "z")]).unwrap()
    }

    #[test]
    fn build_normalizes_and_rejects_duplicates() {
        let a = Arrangement::build("a", vec![("p".into(), [fe(2), fe(4), fe(0)]), ("q".into(), [fe(0), fe(0), fe(3)])])
            .unwrap();
        assert_eq!(a.line(0).covector, [fe(1), fe(2), fe(0)]);
        let err = Arrangement::from_forms("d", &[("a", "x"), ("b", "2*x")]).unwrap_err();
        assert_eq!(err, Error::DuplicateLine("a".into(), "b".into()));
        let err = Arrangement::build("z", vec![("a".into(), [fe(0), fe(0), fe(0)]), ("b".into(), [fe(1), fe(0), fe(0)])]);
        assert_eq!(err.unwrap_err(), Error::ZeroCovector("a".into()));
    }

    #[test]
    fn triangle_lattice() {
        let t = triangle();
        let pts = t.lattice();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|p| p.multiplicity() == 2));
        assert!(t.is_essential());
    }

    #[test]
    fn concurrent_lines_are_not_essential() {
        let a = Arrangement::from_forms("pencil", &[("a", "x"), ("b", "y"), ("c", "x+y")]).unwrap();
        assert!(!a.is_essential());
        assert_eq!(census(&a.lattice()), vec![(3, 1)]);
    }

    #[test]
    fn delete_and_reinsert() {
        let t = triangle();
        let d = t.delete("y").unwrap();
        assert_eq!(d.labels(), vec!["x", "z"]);
        let back = d.insert(1, "y", [fe(0), fe(5), fe(0)]).unwrap();
        assert_eq!(back.lines(), t.lines());
        assert_eq!(t.delete("w").unwrap_err(), Error::UnknownLine("w".into()));
        let one = d.delete("x").unwrap();
        assert!(one.is_degenerate());
        assert!(one.lattice().is_empty());
    }
}
