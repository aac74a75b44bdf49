//! Sparse polynomials in `x, y, z` over the tower field.
//!
//! Monomials are ordered graded-lexicographically with `x > y > z`; division
//! and root extraction always work from the leading term in that order.

pub(crate) mod linear;
mod roots;
mod uni;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;

pub use linear::{linear_factors, LinearFactorization};
pub use roots::{nth_root, roots_in_field};
pub use uni::{uni_squarefree, UniPoly};

/// Exponent vector `(e_x, e_y, e_z)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }

    /// `self / o` when `o` divides `self`.
    pub fn checked_div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = [0; 3];
        for i in 0..3 {
            out[i] = self.0[i].checked_sub(o.0[i])?;
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, FieldElement>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(FieldElement::one())
    }

    pub fn constant(c: FieldElement) -> Self {
        MultiPoly::term(Monomial::default(), c)
    }

    pub fn term(m: Monomial, c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// The variable with index 0 (`x`), 1 (`y`) or 2 (`z`).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        MultiPoly::term(Monomial(e), FieldElement::one())
    }

    pub fn x() -> Self {
        MultiPoly::var(0)
    }

    pub fn y() -> Self {
        MultiPoly::var(1)
    }

    pub fn z() -> Self {
        MultiPoly::var(2)
    }

    /// The linear form `a·x + b·y + c·z`.
    pub fn linear(cov: &[FieldElement; 3]) -> Self {
        let mut p = MultiPoly::zero();
        for (i, c) in cov.iter().enumerate() {
            p = p.add(&MultiPoly::var(i).scale(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElement)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> FieldElement {
        self.coeff(&Monomial::default())
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `NotDivisible` when a remainder is left.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (dm, dc) = d.leading().ok_or(Error::DivisionByZeroPoly)?;
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.checked_div(dm).ok_or(Error::NotDivisible)?;
            let c = rc * &dc_inv;
            rem = rem.sub(&d.mul_term(&m, &c));
            quot.add_term(m, &c);
        }
        Ok(quot)
    }

    pub fn divides(&self, p: &MultiPoly) -> bool {
        p.exact_divide(self).is_ok()
    }

    /// Largest `k` with `f^k` dividing `self`.
    pub fn factor_multiplicity(&self, f: &MultiPoly) -> u32 {
        assert!(!self.is_zero(), "factor_multiplicity of the zero polynomial");
        assert!(!f.is_constant(), "factor_multiplicity needs a nonconstant factor");
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_divide(f) {
            cur = q;
            k += 1;
        }
        k
    }

    /// Divides out every power of `f`; returns the exponent and the cofactor.
    pub fn peel(&self, f: &MultiPoly) -> (u32, MultiPoly) {
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_divide(f) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// Returns `q` with `q^k = self`, its leading coefficient the chosen
    /// `k`-th root of `self`'s (the one positive under the standard
    /// embedding when `k` is even).
    pub fn kth_root(&self, k: u32) -> Result<MultiPoly> {
        if k < 2 || self.is_zero() {
            return Err(Error::InvalidInput("kth_root needs k ≥ 2 and a nonzero polynomial".into()));
        }
        let lead = nth_root(&self.leading_coeff(), k).ok_or(Error::NotAPower(k))?;
        self.root_with_lead(k, lead)
    }

    /// Decomposes `self = c·q^k` with `q` monic in the fixed order, when possible.
    pub fn perfect_power(&self, k: u32) -> Option<(FieldElement, MultiPoly)> {
        if k < 1 || self.is_zero() {
            return None;
        }
        let lc = self.leading_coeff();
        let monic = self.scale(&lc.inv().ok()?);
        let q = monic.root_with_lead(k, FieldElement::one()).ok()?;
        Some((lc, q))
    }

    /// Graded coefficient matching from the leading monomial down.
    fn root_with_lead(&self, k: u32, lead: FieldElement) -> Result<MultiPoly> {
        let (lm, _) = self.leading().ok_or(Error::NotAPower(k))?;
        if lm.0.iter().any(|e| e % k != 0) {
            return Err(Error::NotAPower(k));
        }
        let qm = Monomial([lm.0[0] / k, lm.0[1] / k, lm.0[2] / k]);
        let mut q = MultiPoly::term(qm, lead.clone());
        if k == 1 {
            return if &q == self { Ok(q) } else { Err(Error::NotAPower(k)) };
        }
        let lead_pow_mono = qm.pow(k - 1);
        let denom = (&FieldElement::from_i64(k as i64) * &lead.pow(k - 1)).inv()?;
        loop {
            let rem = self.sub(&q.pow(k));
            let Some((rm, rc)) = rem.leading() else {
                return Ok(q);
            };
            let m = rm.checked_div(&lead_pow_mono).ok_or(Error::NotAPower(k))?;
            let smallest = *q.terms.keys().next().expect("q nonzero");
            if m >= smallest {
                return Err(Error::NotAPower(k));
            }
            q.add_term(m, &(rc * &denom));
        }
    }

    /// Homogenizes with powers of `z` to degree `max(deg self, target)`.
    pub fn homogenize(&self, target: Option<u32>) -> MultiPoly {
        let d = self.degree().max(target.unwrap_or(0));
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial([m.0[0], m.0[1], m.0[2] + d - m.degree()]), c.clone()))
                .collect(),
        }
    }

    /// Sets `z = 1`.
    pub fn dehomogenize(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (Monomial([m.0[0], m.0[1], 0]), c.clone())))
    }

    pub fn eval(&self, p: &[FieldElement; 3]) -> FieldElement {
        let mut acc = FieldElement::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                if m.0[i] > 0 {
                    t *= &p[i].pow(m.0[i]);
                }
            }
            acc += &t;
        }
        acc
    }

    /// The univariate polynomial `t ↦ self(point + t·direction)`.
    pub fn restrict_to_line(&self, point: &[FieldElement; 3], direction: &[FieldElement; 3]) -> UniPoly {
        let d = self.degree() as usize;
        let lin: Vec<UniPoly> = (0..3)
            .map(|i| UniPoly::new(vec![point[i].clone(), direction[i].clone()]))
            .collect();
        let powers: Vec<Vec<UniPoly>> = lin
            .iter()
            .map(|l| {
                let mut v = vec![UniPoly::constant(FieldElement::one())];
                for k in 1..=d {
                    let next = v[k - 1].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let t = powers[0][m.0[0] as usize]
                .mul(&powers[1][m.0[1] as usize])
                .mul(&powers[2][m.0[2] as usize])
                .scale(c);
            acc = acc.add(&t);
        }
        acc
    }

    /// Coefficient vector over a fixed list of monomials.
    pub fn coeff_vector(&self, monos: &[Monomial]) -> Vec<FieldElement> {
        monos.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Parses the polynomial text form (field constants, `x`, `y`, `z`).
    pub fn parse(text: &str) -> Result<Self> {
        crate::expr::parse_poly(text)
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let names = ["x", "y", "z"];
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].to_string()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join(" ")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_monomial(m);
            let simple = c.as_rational().is_some();
            let negative = simple && c.signum_real() == Ordering::Less;
            let mag = if negative { -c } else { c.clone() };
            let sign = match (idx, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coeff = if simple { mag.to_string() } else { format!("({mag})") };
            if mono.is_empty() {
                write!(f, "{sign}{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{sign}{mono}")?;
            } else {
                write!(f, "{sign}{coeff} * {mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{self}]")
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}
