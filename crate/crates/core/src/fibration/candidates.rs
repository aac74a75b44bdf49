use num_bigint::BigInt;
use num_rational::BigRational;

use super::Lambda;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::pencil::{proportional, Pencil};
use crate::poly::linear::cross;
use crate::poly::{roots_in_field, MultiPoly, UniPoly};

/// Coefficients of the binary form `g(p·u + q·v)`, padded to degree `d`.
fn binary_form(g: &MultiPoly, p: &[FieldElement; 3], q: &[FieldElement; 3], d: usize) -> Vec<FieldElement> {
    let u = g.restrict_to_line(p, q);
    (0..=d).map(|i| u.coeff(i)).collect()
}

/// Two points spanning the line with covector `c`.
fn span_of(c: &[FieldElement; 3]) -> ([FieldElement; 3], [FieldElement; 3]) {
    let units = [0, 1, 2].map(|i| {
        let mut e = [FieldElement::zero(), FieldElement::zero(), FieldElement::zero()];
        e[i] = FieldElement::one();
        e
    });
    let cands: Vec<[FieldElement; 3]> =
        units.iter().map(|e| cross(c, e)).filter(|v| v.iter().any(|x| !x.is_zero())).collect();
    let p = cands[0].clone();
    let q = cands[1..]
        .iter()
        .find(|v| cross(&p, v).iter().any(|x| !x.is_zero()))
        .expect("a line has two independent points")
        .clone();
    (p, q)
}

/// The unique `λ` whose fiber contains the line, if there is exactly one.
pub fn line_lambda(pencil: &Pencil, cov: &[FieldElement; 3]) -> Option<Lambda> {
    let d = pencil.degree() as usize;
    let (p, q) = span_of(cov);
    let u = binary_form(&pencil.g1, &p, &q, d);
    let v = binary_form(&pencil.g2, &p, &q, d);
    let u_zero = u.iter().all(FieldElement::is_zero);
    let v_zero = v.iter().all(FieldElement::is_zero);
    match (u_zero, v_zero) {
        (true, true) => None,
        (true, false) => Some(Lambda::zero()),
        (false, true) => Some(Lambda::infinity()),
        (false, false) => {
            let i = v.iter().position(|c| !c.is_zero())?;
            let c = &u[i] * &v[i].inv().ok()?;
            u.iter().zip(&v).all(|(a, b)| *a == &c * b).then(|| Lambda::affine(c))
        }
    }
}

fn int3(a: i64, b: i64, c: i64) -> [FieldElement; 3] {
    [FieldElement::from_i64(a), FieldElement::from_i64(b), FieldElement::from_i64(c)]
}

/// Rational probe lines `point + t·direction`, tried in order.
fn probes() -> [([FieldElement; 3], [FieldElement; 3]); 3] {
    [(int3(3, -7, 11), int3(5, 2, -3)), (int3(-4, 9, 2), int3(7, -5, 13)), (int3(13, 1, -6), int3(-2, 17, 5))]
}

fn determinant(mut m: Vec<Vec<FieldElement>>) -> FieldElement {
    let n = m.len();
    let mut det = FieldElement::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return FieldElement::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let inv = m[col][col].inv().expect("nonzero pivot");
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= &t;
            }
        }
    }
    det
}

/// Resultant of `f` and `f'` with `f` taken at formal degree `d`.
fn formal_discriminant(f: &[FieldElement]) -> FieldElement {
    let d = f.len() - 1;
    let df: Vec<FieldElement> = (1..=d).map(|i| &f[i] * &FieldElement::from_i64(i as i64)).collect();
    let n = 2 * d - 1;
    let mut m = vec![vec![FieldElement::zero(); n]; n];
    // rows hold descending coefficients
    for r in 0..d - 1 {
        for (j, c) in f.iter().rev().enumerate() {
            m[r][r + j] = c.clone();
        }
    }
    for r in 0..d {
        for (j, c) in df.iter().rev().enumerate() {
            m[d - 1 + r][r + j] = c.clone();
        }
    }
    determinant(m)
}

/// Interpolating polynomial through `(x_i, y_i)` with distinct rational nodes.
fn interpolate(xs: &[BigRational], ys: &[FieldElement]) -> UniPoly {
    let n = xs.len();
    let mut coef: Vec<FieldElement> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = &xs[i] - &xs[i - j];
            let diff = &coef[i] - &coef[i - 1];
            coef[i] = diff.scale(&(BigRational::from_integer(BigInt::from(1)) / den));
        }
    }
    let mut p = UniPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(vec![FieldElement::from_rational(-xs[i].clone()), FieldElement::one()]);
        p = p.mul(&lin).add(&UniPoly::constant(coef[i].clone()));
    }
    p
}

/// The discriminant, as a polynomial in `λ`, of `g1 − λ·g2` restricted to a
/// probe line; `None` if it vanishes identically on every probe.
pub fn discriminant_in_lambda(pencil: &Pencil) -> Option<UniPoly> {
    let d = pencil.degree() as usize;
    if d < 2 {
        return None;
    }
    for (p, q) in probes() {
        let u = binary_form(&pencil.g1, &p, &q, d);
        let v = binary_form(&pencil.g2, &p, &q, d);
        let nodes: Vec<BigRational> = (0..2 * d as i64).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
        let values: Vec<FieldElement> = nodes
            .iter()
            .map(|l| {
                let f: Vec<FieldElement> = u.iter().zip(&v).map(|(a, b)| a - &b.scale(l)).collect();
                formal_discriminant(&f)
            })
            .collect();
        let disc = interpolate(&nodes, &values);
        if !disc.is_zero() {
            return Some(disc);
        }
    }
    None
}

/// Candidate special parameters: `[0:1]`, `[1:0]`, the parameter of every
/// line of the arrangement, the roots of the probe discriminant lying in the
/// field, and any extras. Sorted with `[0:1]`, `[1:0]` first.
pub fn lambda_candidates(a: &Arrangement, pencil: &Pencil, extra: &[Lambda]) -> Result<Vec<Lambda>> {
    if proportional(&pencil.g1, &pencil.g2) {
        return Err(Error::DegeneratePencil("generators are proportional".into()));
    }
    let mut out = vec![Lambda::zero(), Lambda::infinity()];
    let mut rest: Vec<Lambda> = Vec::new();
    for l in a.lines() {
        rest.extend(line_lambda(pencil, &l.covector));
    }
    if let Some(disc) = discriminant_in_lambda(pencil) {
        rest.extend(roots_in_field(&disc).into_iter().map(Lambda::affine));
    }
    rest.extend(extra.iter().cloned());
    rest.retain(|l| !l.is_zero() && !l.is_infinity());
    rest.sort_by(|x, y| x.affine_value().cmp_real(&y.affine_value()));
    rest.dedup();
    out.extend(rest);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: i64) -> FieldElement {
        FieldElement::from_i64(v)
    }

    #[test]
    fn discriminant_of_quadratics() {
        // t² + 5t + 3: b² − 4c = 13, up to the resultant's sign
        let d = formal_discriminant(&[fe(3), fe(5), fe(1)]);
        assert!(d == fe(13) || d == fe(-13), "{d}");
        let sq = vec![fe(1), fe(2), fe(1)];
        assert!(formal_discriminant(&sq).is_zero());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::new(vec![fe(2), FieldElement::r(), fe(0), FieldElement::s()]);
        let xs: Vec<BigRational> = (0..4).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
        let ys: Vec<FieldElement> = xs.iter().map(|x| p.eval_rational(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn b3_candidates() {
        let a = crate::builtins::arrangement("b3").unwrap();
        let p = crate::builtins::pencil("b3").unwrap();
        let c = lambda_candidates(&a, &p, &[]).unwrap();
        assert_eq!(c[0], Lambda::zero());
        assert_eq!(c[1], Lambda::infinity());
        assert!(c.contains(&Lambda::affine(fe(1))));
    }
}

