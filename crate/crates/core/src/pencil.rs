use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{Monomial, MultiPoly};

/// Two homogeneous polynomials of equal degree spanning a pencil of curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pencil {
    pub g1: MultiPoly,
    pub g2: MultiPoly,
    /// For each further class polynomial `g_i`, `(α, β)` with `g_i = α·g1 + β·g2`.
    pub combos: Vec<(FieldElement, FieldElement)>,
}

impl Pencil {
    pub fn new(g1: MultiPoly, g2: MultiPoly) -> Result<Pencil> {
        if g1.is_zero() || g2.is_zero() {
            return Err(Error::DegeneratePencil("a generator is zero".into()));
        }
        if !g1.is_homogeneous() || !g2.is_homogeneous() {
            return Err(Error::InvalidInput("pencil generators must be homogeneous".into()));
        }
        if g1.degree() != g2.degree() {
            return Err(Error::InvalidInput(format!(
                "pencil generators have degrees {} and {}",
                g1.degree(),
                g2.degree()
            )));
        }
        if proportional(&g1, &g2) {
            return Err(Error::DegeneratePencil("generators are proportional".into()));
        }
        Ok(Pencil { g1, g2, combos: Vec::new() })
    }

    pub fn parse(g1: &str, g2: &str) -> Result<Pencil> {
        Pencil::new(MultiPoly::parse(g1)?, MultiPoly::parse(g2)?)
    }

    pub fn degree(&self) -> u32 {
        self.g1.degree()
    }

    pub fn swapped(&self) -> Pencil {
        Pencil { g1: self.g2.clone(), g2: self.g1.clone(), combos: Vec::new() }
    }
}

fn monomial_union(ps: &[&MultiPoly]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = ps.iter().flat_map(|p| p.monomials().copied()).collect();
    v.sort();
    v.dedup();
    v
}

/// True iff one polynomial is a scalar multiple of the other (zero counts).
pub fn proportional(a: &MultiPoly, b: &MultiPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return true;
    }
    let ratio = &b.leading_coeff() * &a.leading_coeff().inv().expect("nonzero");
    a.scale(&ratio) == *b
}

/// Solves `g = α·g1 + β·g2` exactly, if a solution exists.
pub fn solve_combo(g1: &MultiPoly, g2: &MultiPoly, g: &MultiPoly) -> Option<(FieldElement, FieldElement)> {
    let monos = monomial_union(&[g1, g2, g]);
    let u = g1.coeff_vector(&monos);
    let v = g2.coeff_vector(&monos);
    let w = g.coeff_vector(&monos);
    // pick a nonsingular 2×2 minor
    for i in 0..monos.len() {
        for j in i + 1..monos.len() {
            let det = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
            if det.is_zero() {
                continue;
            }
            let inv = det.inv().expect("nonzero");
            let alpha = &(&(&w[i] * &v[j]) - &(&w[j] * &v[i])) * &inv;
            let beta = &(&(&u[i] * &w[j]) - &(&u[j] * &w[i])) * &inv;
            let ok = g1.scale(&alpha).add(&g2.scale(&beta)) == *g;
            return ok.then_some((alpha, beta));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combos_and_degeneracy() {
        let g1 = MultiPoly::parse("x^2 (y^2 - z^2)").unwrap();
        let g2 = MultiPoly::parse("y^2 (x^2 - z^2)").unwrap();
        let g3 = MultiPoly::parse("z^2 (x^2 - y^2)").unwrap();
        let (a, b) = solve_combo(&g1, &g2, &g3).unwrap();
        assert_eq!((a, b), (FieldElement::from_i64(-1), FieldElement::one()));
        assert!(solve_combo(&MultiPoly::x(), &MultiPoly::y(), &MultiPoly::z()).is_none());
        let err = Pencil::parse("x^2 - y^2", "3*x^2 - 3*y^2").unwrap_err();
        assert!(matches!(err, Error::DegeneratePencil(_)));
        assert!(matches!(Pencil::parse("x", "y^2"), Err(Error::InvalidInput(_))));
    }
}
