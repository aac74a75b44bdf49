//! Special fibers of a pencil on an arrangement complement: removed fibers,
//! multiple fibers, and the small/large classification.

mod candidates;
mod component;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::pencil::{proportional, Pencil};
use crate::poly::MultiPoly;

pub use candidates::{discriminant_in_lambda, lambda_candidates, line_lambda};
pub use component::{
    orbifold_v1_shape, pointed_vs_fiber, translated_component, translated_components, FiberSplitting, PointedCheck,
    ShapeKind, V1Component, V1Shape,
};

/// A point `[λ₀:λ₁]` of the target line, normalized to `[c:1]` or `[1:0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lambda {
    l0: FieldElement,
    l1: FieldElement,
}

impl Lambda {
    pub fn new(l0: FieldElement, l1: FieldElement) -> Result<Lambda> {
        if l1.is_zero() {
            if l0.is_zero() {
                return Err(Error::InvalidInput("[0:0] is not a point".into()));
            }
            return Ok(Lambda::infinity());
        }
        let c = &l0 * &l1.inv()?;
        Ok(Lambda::affine(c))
    }

    /// `[c:1]`.
    pub fn affine(c: FieldElement) -> Lambda {
        Lambda { l0: c, l1: FieldElement::one() }
    }

    /// `[0:1]`, whose fiber is `g1`.
    pub fn zero() -> Lambda {
        Lambda::affine(FieldElement::zero())
    }

    /// `[1:0]`, whose fiber is `g2`.
    pub fn infinity() -> Lambda {
        Lambda { l0: FieldElement::one(), l1: FieldElement::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.l0.is_zero()
    }

    pub fn is_infinity(&self) -> bool {
        self.l1.is_zero()
    }

    pub fn coords(&self) -> (&FieldElement, &FieldElement) {
        (&self.l0, &self.l1)
    }

    /// `λ₀/λ₁`; `[1:0]` maps to 0 as well, so check [`Lambda::is_infinity`] first.
    pub fn affine_value(&self) -> FieldElement {
        if self.is_infinity() {
            FieldElement::zero()
        } else {
            self.l0.clone()
        }
    }

    /// Parses `a:b` (optionally bracketed) or a single value `a` meaning `[a:1]`.
    pub fn parse(text: &str) -> Result<Lambda> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        match t.split_once(':') {
            Some((a, b)) => Lambda::new(FieldElement::parse(a)?, FieldElement::parse(b)?),
            None => Ok(Lambda::affine(FieldElement::parse(t)?)),
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.l0, self.l1)
    }
}

impl fmt::Debug for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Lambda {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The fiber `λ₁·g1 − λ₀·g2` over `[λ₀:λ₁]`.
pub fn fiber_polynomial(pencil: &Pencil, lambda: &Lambda) -> MultiPoly {
    let (l0, l1) = lambda.coords();
    pencil.g1.scale(l1).sub(&pencil.g2.scale(l0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberAnalysis {
    pub lambda: Lambda,
    pub fiber_poly: MultiPoly,
    /// `(line index, exponent)` for every arrangement line dividing the fiber.
    pub arrangement_part: Vec<(usize, u32)>,
    /// Cofactor once all arrangement lines are peeled; it carries the scalar.
    pub residual: MultiPoly,
    /// Largest `k` with the residual a scalar times a `k`-th power.
    pub mu: u32,
    /// Monic `k`-th root of the residual (up to its scalar), when `mu ≥ 2`.
    pub reduced: Option<MultiPoly>,
}

impl FiberAnalysis {
    /// The fiber lies entirely on arrangement lines.
    pub fn is_removed(&self) -> bool {
        self.residual.is_constant()
    }

    pub fn is_multiple(&self) -> bool {
        !self.is_removed() && self.mu >= 2
    }

    pub fn exponent_of(&self, line: usize) -> u32 {
        self.arrangement_part.iter().find(|(i, _)| *i == line).map_or(0, |(_, e)| *e)
    }

    /// `fiber = ∏ lineᵉ · residual` holds exactly.
    pub fn reconstructs(&self, a: &Arrangement) -> bool {
        let prod = self
            .arrangement_part
            .iter()
            .fold(self.residual.clone(), |acc, &(i, e)| acc.mul(&a.line(i).polynomial().pow(e)));
        prod == self.fiber_poly
    }

    /// `Σ exponents + deg(residual)`; equals the pencil degree.
    pub fn degree_total(&self) -> u32 {
        self.arrangement_part.iter().map(|(_, e)| e).sum::<u32>() + self.residual.degree()
    }
}

pub fn analyze_fiber(a: &Arrangement, pencil: &Pencil, lambda: &Lambda) -> FiberAnalysis {
    let fiber = fiber_polynomial(pencil, lambda);
    let mut residual = fiber.clone();
    let mut part = Vec::new();
    for (i, line) in a.lines().iter().enumerate() {
        let (e, rest) = residual.peel(&line.polynomial());
        if e > 0 {
            part.push((i, e));
            residual = rest;
        }
    }
    let mut mu = 1;
    let mut reduced = None;
    let d = residual.degree();
    for k in (2..=d).rev() {
        if d % k != 0 {
            continue;
        }
        if let Some((_, q)) = residual.perfect_power(k) {
            mu = k;
            reduced = Some(q);
            break;
        }
    }
    FiberAnalysis { lambda: lambda.clone(), fiber_poly: fiber, arrangement_part: part, residual, mu, reduced }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FibrationClass {
    Small,
    Large,
    Neither,
}

impl fmt::Display for FibrationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FibrationClass::Small => "small",
            FibrationClass::Large => "large",
            FibrationClass::Neither => "neither",
        })
    }
}

/// Properties assumed rather than checked by the analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub connected_generic_fiber: &'static str,
    pub surjective: &'static str,
    pub candidate_search: &'static str,
}

impl Default for Hypotheses {
    fn default() -> Self {
        Hypotheses {
            connected_generic_fiber: "unverified",
            surjective: "unverified",
            candidate_search: "sound; complete only if every special fiber contains a line or has a field-valued discriminant root",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationReport {
    pub k: usize,
    pub removed: Vec<Lambda>,
    pub multiple_fibers: Vec<FiberAnalysis>,
    pub class: FibrationClass,
    pub mu_vector: Vec<u32>,
    /// Every candidate fiber that was analyzed, in candidate order.
    pub fibers: Vec<FiberAnalysis>,
    pub hypotheses: Hypotheses,
}

impl FibrationReport {
    pub fn fiber(&self, lambda: &Lambda) -> Option<&FiberAnalysis> {
        self.fibers.iter().find(|f| &f.lambda == lambda)
    }
}

pub fn analyze(a: &Arrangement, pencil: &Pencil, extra: &[Lambda]) -> Result<FibrationReport> {
    if proportional(&pencil.g1, &pencil.g2) {
        return Err(Error::DegeneratePencil("generators are proportional".into()));
    }
    let cands = lambda_candidates(a, pencil, extra)?;
    let fibers: Vec<FiberAnalysis> = cands.par_iter().map(|l| analyze_fiber(a, pencil, l)).collect();
    let removed: Vec<Lambda> = fibers.iter().filter(|f| f.is_removed()).map(|f| f.lambda.clone()).collect();
    let multiple: Vec<FiberAnalysis> = fibers.iter().filter(|f| f.is_multiple()).cloned().collect();
    let k = removed.len();
    let class = match k {
        k if k >= 3 => FibrationClass::Large,
        2 if !multiple.is_empty() => FibrationClass::Small,
        _ => FibrationClass::Neither,
    };
    Ok(FibrationReport {
        k,
        removed,
        mu_vector: multiple.iter().map(|f| f.mu).collect(),
        multiple_fibers: multiple,
        class,
        fibers,
        hypotheses: Hypotheses::default(),
    })
}
