use super::{roots_in_field, MultiPoly};
use crate::field::FieldElement;

/// Result of peeling every linear factor defined over the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactorization {
    /// Linear forms (normalized covectors) and their exponents.
    pub factors: Vec<([FieldElement; 3], u32)>,
    /// What is left once no linear factor divides; constant iff `p` splits.
    pub remainder: MultiPoly,
}

impl LinearFactorization {
    pub fn splits(&self) -> bool {
        self.remainder.is_constant()
    }
}

/// Scales a covector so its first nonzero coordinate is 1.
pub(crate) fn normalize_covector(c: &[FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let pivot = c.iter().find(|v| !v.is_zero())?;
    let inv = pivot.inv().ok()?;
    Some([&c[0] * &inv, &c[1] * &inv, &c[2] * &inv])
}

pub(crate) fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn unit(i: usize) -> [FieldElement; 3] {
    let mut v = [FieldElement::zero(), FieldElement::zero(), FieldElement::zero()];
    v[i] = FieldElement::one();
    v
}

/// Points of `{p = 0}` on the line through `a` and `b` (parametrized as `a + t·b`).
fn points_on_line(p: &MultiPoly, a: &[FieldElement; 3], b: &[FieldElement; 3]) -> Vec<[FieldElement; 3]> {
    let u = p.restrict_to_line(a, b);
    let mut pts: Vec<[FieldElement; 3]> = roots_in_field(&u)
        .into_iter()
        .map(|t| [&a[0] + &(&t * &b[0]), &a[1] + &(&t * &b[1]), &a[2] + &(&t * &b[2])])
        .collect();
    if (u.degree() as u32) < p.degree() {
        pts.push(b.clone());
    }
    pts
}

fn find_linear_factor(p: &MultiPoly) -> Option<[FieldElement; 3]> {
    // the probe lines z = 0, y = 0, x = 0 themselves
    for i in (0..3).rev() {
        if MultiPoly::var(i).divides(p) {
            return Some(unit(i));
        }
    }
    // a factor ℓ meets {z=0} at P; it meets {y=0} at Q ≠ P, or {x=0} at Q ≠ P
    let on_z = points_on_line(p, &unit(1), &unit(0));
    let on_y = points_on_line(p, &unit(2), &unit(0));
    let on_x = points_on_line(p, &unit(2), &unit(1));
    for pz in &on_z {
        for q in on_y.iter().chain(on_x.iter()) {
            let l = cross(pz, q);
            let Some(l) = normalize_covector(&l) else { continue };
            if MultiPoly::linear(&l).divides(p) {
                return Some(l);
            }
        }
    }
    None
}

/// Peels every linear factor of a homogeneous polynomial.
pub fn linear_factors(p: &MultiPoly) -> LinearFactorization {
    assert!(p.is_homogeneous(), "linear_factors expects a homogeneous polynomial");
    let mut rem = p.clone();
    let mut factors = Vec::new();
    while !rem.is_constant() {
        let Some(l) = find_linear_factor(&rem) else { break };
        let (e, rest) = rem.peel(&MultiPoly::linear(&l));
        factors.push((l, e));
        rem = rest;
    }
    LinearFactorization { factors, remainder: rem }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &str) -> MultiPoly {
        MultiPoly::parse(t).unwrap()
    }

    #[test]
    fn splits_products_of_lines() {
        let f = p("(x-y)^2 (x+y)^2");
        let lf = linear_factors(&f);
        assert!(lf.splits());
        assert_eq!(lf.factors.len(), 2);
        assert!(lf.factors.iter().all(|(_, e)| *e == 2));
    }

    #[test]
    fn conic_does_not_split() {
        let lf = linear_factors(&p("x^2+y^2-z^2"));
        assert!(!lf.splits());
        assert!(lf.factors.is_empty());
    }

    #[test]
    fn lines_through_probe_vertices_and_field_coefficients() {
        // y − r·z passes through (1:0:0) = {z=0} ∩ {y=0}
        let f = p("(y - r*z) (x + s*y - 2*z) z");
        let lf = linear_factors(&f);
        assert!(lf.splits(), "{:?}", lf);
        assert_eq!(lf.factors.len(), 3);
    }
}
