use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{FiberAnalysis, FibrationClass, FibrationReport, Lambda};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{linear_factors, MultiPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    /// The whole character group, through the origin.
    FullTorus,
    /// Translated subtori off the identity component, plus the origin.
    OffIdentityPlusOrigin,
    /// Nothing beyond the trivial character.
    OriginOnly,
}

/// What a fibration with `k` removed points and multiplicities `mu`
/// contributes to the degree-one jump locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct V1Shape {
    pub kind: ShapeKind,
    /// Dimension of each positive-dimensional piece.
    pub dimension: usize,
    /// Orders of the cyclic factors of the torsion group.
    pub torsion: Vec<u32>,
    /// Number of translated components (nontrivial torsion characters).
    pub translated: usize,
}

pub fn orbifold_v1_shape(k: usize, mu: &[u32]) -> Result<V1Shape> {
    if k < 2 {
        return Err(Error::InvalidOrbifoldData(format!("need at least 2 removed points, got {k}")));
    }
    if let Some(m) = mu.iter().find(|&&m| m < 2) {
        return Err(Error::InvalidOrbifoldData(format!("multiplicity {m} is not a multiple fiber")));
    }
    let torsion = mu.to_vec();
    let group: usize = mu.iter().map(|&m| m as usize).product();
    Ok(if k >= 3 {
        V1Shape { kind: ShapeKind::FullTorus, dimension: k - 1, torsion, translated: 0 }
    } else if mu.is_empty() {
        V1Shape { kind: ShapeKind::OriginOnly, dimension: 0, torsion, translated: 0 }
    } else {
        V1Shape { kind: ShapeKind::OffIdentityPlusOrigin, dimension: 1, torsion, translated: group - 1 }
    })
}

/// A coset `ρ·T` of a one-dimensional subtorus. Exponents are per line of
/// the arrangement: line `i` gets `ζ^{rho_exponents[i]} · t^{t_exponents[i]}`
/// with `ζ` a primitive `torsion_order`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct V1Component {
    pub labels: Vec<String>,
    pub rho_exponents: Vec<u32>,
    pub t_exponents: Vec<i64>,
    pub torsion_order: u32,
    pub dimension: usize,
    /// Exponents of the torsion character on each multiple fiber's generator.
    pub character: Vec<u32>,
}

impl V1Component {
    /// Values of `ρ` as strings: `1`, `-1` or `ζN^e`.
    pub fn rho_values(&self) -> Vec<String> {
        let n = self.torsion_order;
        self.rho_exponents
            .iter()
            .map(|&e| match (e, n) {
                (0, _) => "1".to_string(),
                (e, n) if 2 * e == n => "-1".to_string(),
                (e, n) => format!("ζ{n}^{e}"),
            })
            .collect()
    }

    /// `ρ` as ±1 values; only meaningful for order at most 2.
    pub fn rho_signs(&self) -> Option<Vec<i64>> {
        (self.torsion_order <= 2).then(|| self.rho_exponents.iter().map(|&e| if e == 0 { 1 } else { -1 }).collect())
    }

    /// Order of `ρ` itself.
    pub fn rho_order(&self) -> u32 {
        let g = self.rho_exponents.iter().fold(self.torsion_order, |g, &e| g.gcd(&e));
        self.torsion_order / g
    }

    /// Restriction to the lines not at infinity, i.e. meridians of the affine chart.
    pub fn affine_view(&self, a: &Arrangement) -> V1Component {
        let keep: Vec<usize> = (0..a.len()).filter(|&i| !a.line(i).is_line_at_infinity()).collect();
        V1Component {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            rho_exponents: keep.iter().map(|&i| self.rho_exponents[i]).collect(),
            t_exponents: keep.iter().map(|&i| self.t_exponents[i]).collect(),
            torsion_order: self.torsion_order,
            dimension: self.dimension,
            character: self.character.clone(),
        }
    }
}

impl fmt::Display for V1Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self
            .t_exponents
            .iter()
            .map(|&d| match d {
                0 => "1".to_string(),
                1 => "t".to_string(),
                d => format!("t^{d}"),
            })
            .collect();
        write!(f, "rho = ({}), T = ({}), order {}", self.rho_values().join(", "), t.join(", "), self.torsion_order)
    }
}

fn fiber_exponents(a: &Arrangement, fiber: Option<&FiberAnalysis>) -> Vec<i64> {
    let mut v = vec![0i64; a.len()];
    if let Some(f) = fiber {
        for &(i, e) in &f.arrangement_part {
            v[i] = e as i64;
        }
    }
    v
}

fn component_for(a: &Arrangement, report: &FibrationReport, character: &[u32]) -> V1Component {
    let zero = report.fiber(&report.removed[0]);
    let inf = report.fiber(&report.removed[1]);
    let e0 = fiber_exponents(a, zero);
    let e_inf = fiber_exponents(a, inf);
    let mut t: Vec<i64> = e0.iter().zip(&e_inf).map(|(p, q)| p - q).collect();
    if t.iter().find(|&&d| d != 0).is_some_and(|&d| d < 0) {
        t.iter_mut().for_each(|d| *d = -*d);
    }

    let mus: Vec<u32> = report.multiple_fibers.iter().map(|f| f.mu).collect();
    let n = mus.iter().zip(character).fold(1u32, |acc, (&m, &c)| acc.lcm(&(m / m.gcd(&c))));
    let n_i = n as i64;
    // generator of the j-th multiple fiber goes to ζ_N^{c_j·N/μ_j}; the
    // relation γ₀·γ₁⋯γ_∞ = 1 fixes the infinity generator
    let gens: Vec<i64> = mus.iter().zip(character).map(|(&m, &c)| c as i64 * (n / m) as i64).collect();
    let total: i64 = gens.iter().sum();
    let mut e = vec![0i64; a.len()];
    for (i, &m) in e_inf.iter().enumerate() {
        e[i] -= m * total;
    }
    for (f, g) in report.multiple_fibers.iter().zip(&gens) {
        for &(i, m) in &f.arrangement_part {
            e[i] += m as i64 * g;
        }
    }
    let best = (0..n_i)
        .map(|j| e.iter().zip(&t).map(|(x, d)| (x + j * d).rem_euclid(n_i) as u32).collect::<Vec<u32>>())
        .min()
        .expect("torsion order is positive");
    V1Component {
        labels: a.labels().into_iter().map(String::from).collect(),
        rho_exponents: best,
        t_exponents: t,
        torsion_order: n,
        dimension: 1,
        character: character.to_vec(),
    }
}

fn require_small(report: &FibrationReport) -> Result<()> {
    if report.class != FibrationClass::Small {
        return Err(Error::NotSmall(format!(
            "k = {} with {} multiple fibers is {}",
            report.k,
            report.multiple_fibers.len(),
            report.class
        )));
    }
    Ok(())
}

/// The translated component of a small fibration with one multiple fiber.
pub fn translated_component(a: &Arrangement, report: &FibrationReport) -> Result<V1Component> {
    require_small(report)?;
    if report.multiple_fibers.len() > 1 {
        return Err(Error::MultipleMultipleFibers(report.multiple_fibers.len()));
    }
    Ok(component_for(a, report, &[1]))
}

/// One component per nontrivial character of `⊕ ℤ/μ_j`, in lexicographic order.
pub fn translated_components(a: &Arrangement, report: &FibrationReport) -> Result<Vec<V1Component>> {
    require_small(report)?;
    let mus: Vec<u32> = report.multiple_fibers.iter().map(|f| f.mu).collect();
    let mut out = Vec::new();
    let mut c = vec![0u32; mus.len()];
    loop {
        let mut i = mus.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            c[i] += 1;
            if c[i] < mus[i] {
                break;
            }
            c[i] = 0;
        }
        out.push(component_for(a, report, &c));
    }
}

/// How one multiple fiber's reduced residual splits into lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberSplitting {
    pub lambda: Lambda,
    pub mu: u32,
    pub reduced: MultiPoly,
    pub linear_factors: Vec<([FieldElement; 3], u32)>,
    pub remainder: MultiPoly,
    pub splits: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointedCheck {
    pub pointed_multinet_explained: bool,
    pub witnesses: Vec<FiberSplitting>,
}

/// Whether every multiple fiber is a product of lines, as it is for a pencil
/// coming from a pointed multinet with its point deleted.
pub fn pointed_vs_fiber(report: &FibrationReport) -> Result<PointedCheck> {
    if report.multiple_fibers.is_empty() {
        return Err(Error::InvalidInput("the pencil has no multiple fiber".into()));
    }
    let witnesses: Vec<FiberSplitting> = report
        .multiple_fibers
        .iter()
        .map(|f| {
            let reduced = f.reduced.clone().unwrap_or_else(|| f.residual.clone());
            let lf = linear_factors(&reduced);
            FiberSplitting {
                lambda: f.lambda.clone(),
                mu: f.mu,
                splits: lf.splits(),
                reduced,
                linear_factors: lf.factors,
                remainder: lf.remainder,
            }
        })
        .collect();
    Ok(PointedCheck { pointed_multinet_explained: witnesses.iter().all(|w| w.splits), witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::fibration::analyze;

    #[test]
    fn shapes() {
        let s = orbifold_v1_shape(3, &[]).unwrap();
        assert_eq!((s.kind, s.dimension), (ShapeKind::FullTorus, 2));
        let s = orbifold_v1_shape(2, &[2]).unwrap();
        assert_eq!((s.kind, s.dimension, s.translated), (ShapeKind::OffIdentityPlusOrigin, 1, 1));
        assert_eq!(orbifold_v1_shape(2, &[]).unwrap().kind, ShapeKind::OriginOnly);
        assert_eq!(orbifold_v1_shape(2, &[2, 3]).unwrap().translated, 5);
        assert!(orbifold_v1_shape(1, &[]).is_err());
        assert!(orbifold_v1_shape(2, &[1]).is_err());
    }

    #[test]
    fn b3_deleted_component() {
        let a = builtins::arrangement("b3_del_z").unwrap();
        let p = builtins::pencil("b3").unwrap();
        let rep = analyze(&a, &p, &[]).unwrap();
        let c = translated_component(&a, &rep).unwrap();
        assert_eq!(c.torsion_order, 2);
        assert_eq!(c.rho_order(), 2);
        assert_eq!(c.t_exponents, vec![2, -2, 0, 0, -1, -1, 1, 1]);
        assert_eq!(translated_components(&a, &rep).unwrap(), vec![c]);
        let chk = pointed_vs_fiber(&rep).unwrap();
        assert!(chk.pointed_multinet_explained);
    }

    #[test]
    fn large_is_not_small() {
        let a = builtins::arrangement("b3").unwrap();
        let p = builtins::pencil("b3").unwrap();
        let rep = analyze(&a, &p, &[]).unwrap();
        assert!(matches!(translated_component(&a, &rep), Err(Error::NotSmall(_))));
        assert!(pointed_vs_fiber(&rep).is_err());
    }
}
