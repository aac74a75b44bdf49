//! Exact arithmetic in the real quartic field ℚ(√5)(s), `s² = (10 + 2√5)/16`.
//!
//! Under the standard embedding `r ↦ √5`, `s ↦ sin(2π/5)`, so every constant
//! derived from the angle `2π/5` lives here. Elements are kept in the fixed
//! basis `{1, r, s, r·s}` with reduced rational coordinates, which makes the
//! representation (and the text form) canonical.

mod embed;
mod sqrt5;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use embed::{to_f64, Embedding};
pub(crate) use embed::{ceil_log2, generator_approx};
pub(crate) use sqrt5::Sqrt5;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// An element `a₀ + a₁·r + a₂·s + a₃·r·s` of the tower field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    // value = lo + hi·s with lo, hi in ℚ(√5)
    lo: Sqrt5,
    hi: Sqrt5,
}

/// `s²` as an element of ℚ(√5).
fn s_squared() -> Sqrt5 {
    Sqrt5::new(rat(5, 8), rat(1, 8))
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement { lo: Sqrt5::zero(), hi: Sqrt5::zero() }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElement { lo: Sqrt5::from_rational(q), hi: Sqrt5::zero() }
    }

    /// Builds `c₀ + c₁·r + c₂·s + c₃·r·s`.
    pub fn from_coords(c: [BigRational; 4]) -> Self {
        let [c0, c1, c2, c3] = c;
        FieldElement { lo: Sqrt5::new(c0, c1), hi: Sqrt5::new(c2, c3) }
    }

    /// The generator `r = √5`.
    pub fn r() -> Self {
        FieldElement::from_coords([rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)])
    }

    /// The generator `s = sin(2π/5)`.
    pub fn s() -> Self {
        FieldElement::from_coords([rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)])
    }

    /// Coordinates in the basis `{1, r, s, r·s}`.
    pub fn coords(&self) -> [BigRational; 4] {
        [self.lo.a.clone(), self.lo.b.clone(), self.hi.a.clone(), self.hi.b.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.hi.is_zero() && self.lo.b.is_zero() && self.lo.a.is_one()
    }

    /// Returns the rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.hi.is_zero() && self.lo.b.is_zero() {
            Some(&self.lo.a)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        // (u + v s)^{-1} = (u − v s) / (u² − v² s²)
        let norm = &(&self.lo * &self.lo) - &(&(&self.hi * &self.hi) * &s_squared());
        let ninv = norm.inv().ok_or(Error::DivisionByZero)?;
        Ok(FieldElement { lo: &self.lo * &ninv, hi: &(-&self.hi) * &ninv })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        FieldElement { lo: self.lo.scale(q), hi: self.hi.scale(q) }
    }

    /// Least common denominator of the four coordinates.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coords().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Rational upper bound on `|σ(self)|` valid for every real embedding σ.
    pub fn abs_bound(&self) -> BigRational {
        self.lo.abs_bound() + self.hi.abs_bound()
    }

    /// Height proxy: total bit length of numerators and denominators.
    pub fn bit_size(&self) -> u64 {
        self.coords().iter().map(|c| c.numer().bits() + c.denom().bits()).sum()
    }

    /// Exact sign of this element under a real embedding.
    pub fn sign_under(&self, emb: Embedding) -> Ordering {
        let su = self.lo.sign_under(emb.r_sign);
        let mut sw = self.hi.sign_under(emb.r_sign);
        if emb.s_sign < 0 {
            sw = sw.reverse();
        }
        match (su, sw) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                let d = &(&self.lo * &self.lo) - &(&(&self.hi * &self.hi) * &s_squared());
                match d.sign_under(emb.r_sign) {
                    Ordering::Greater => su,
                    _ => sw,
                }
            }
        }
    }

    /// Exact sign under the standard embedding `r ↦ +√5`, `s ↦ +sin(2π/5)`.
    pub fn signum_real(&self) -> Ordering {
        self.sign_under(Embedding::STANDARD)
    }

    /// Total order by value under the standard embedding.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self - other).signum_real()
    }

    /// Order on the canonical representation (not a numeric order).
    pub fn repr_cmp(&self, other: &Self) -> Ordering {
        (&self.lo, &self.hi).cmp(&(&other.lo, &other.hi))
    }

    /// Canonical text form, parseable back with [`FieldElement::from_str`].
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Parses an expression over rationals and the symbols `r`, `s`.
    pub fn parse(text: &str) -> Result<Self> {
        crate::expr::parse_element(text)
    }
}

/// Exact values of the trigonometric constants at θ = 2π/5.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigConstants {
    pub sin_t: FieldElement,
    pub cos_t: FieldElement,
    pub sin_2t: FieldElement,
    pub cos_2t: FieldElement,
    /// cos θ / cos 2θ
    pub ratio: FieldElement,
}

pub fn trig_constants() -> TrigConstants {
    let r = FieldElement::r();
    let s = FieldElement::s();
    let one = FieldElement::one();
    let sin_t = s.clone();
    let cos_t = (&r - &one).scale(&rat(1, 4));
    let sin_2t = &s * &(&r - &one).scale(&rat(1, 2));
    let cos_2t = -(&(&one + &r).scale(&rat(1, 4)));
    let ratio = cos_t.checked_div(&cos_2t).expect("cos 2θ is nonzero");
    TrigConstants { sin_t, cos_t, sin_2t, cos_2t, ratio }
}

/// Approximation of `a` under the standard embedding with absolute error at
/// most `2^-precision` (precision is raised to at least 64 bits).
pub fn embed_real(a: &FieldElement, precision: u32) -> Rational {
    a.approx(Embedding::STANDARD, precision.max(64))
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const BASIS: [&str; 4] = ["", "r", "s", "r*s"];
        let mut first = true;
        for (c, b) in self.coords().iter().zip(BASIS) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if b.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                b.to_string()
            } else {
                format!("{}*{}", fmt_rational(&mag), b)
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

impl FromStr for FieldElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FieldElement::parse(s)
    }
}

impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        FieldElement::zero()
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_i64(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(q: BigRational) -> Self {
        FieldElement::from_rational(q)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        FieldElement { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        FieldElement { lo: &self.lo - &o.lo, hi: &self.hi - &o.hi }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        // (u1 + v1 s)(u2 + v2 s) = u1u2 + v1v2 s² + (u1v2 + v1u2) s
        if self.hi.is_zero() && o.hi.is_zero() {
            return FieldElement { lo: &self.lo * &o.lo, hi: Sqrt5::zero() };
        }
        let lo = &(&self.lo * &o.lo) + &(&(&self.hi * &o.hi) * &s_squared());
        let hi = &(&self.lo * &o.hi) + &(&self.hi * &o.lo);
        FieldElement { lo, hi }
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero; use [`FieldElement::checked_div`] otherwise.
    fn div(self, o: &FieldElement) -> FieldElement {
        self.checked_div(o).expect("division by zero in field")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { lo: -&self.lo, hi: -&self.hi }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement { (&self).$m(&o) }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement { (&self).$m(o) }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, o: &FieldElement) {
        *self = &*self + o;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, o: &FieldElement) {
        *self = &*self - o;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, o: &FieldElement) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(t: &str) -> FieldElement {
        t.parse().unwrap()
    }

    #[test]
    fn golden_ratio_times_conjugate() {
        let a = fe("(1+r)/2");
        let b = fe("(-1+r)/2");
        assert_eq!(&a * &b, FieldElement::one());
    }

    #[test]
    fn inverse_of_r() {
        assert_eq!(FieldElement::r().inv().unwrap(), fe("r/5"));
    }

    #[test]
    fn s_squared_relation() {
        let s = FieldElement::s();
        assert_eq!(&s * &s, fe("(10+2*r)/16"));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(FieldElement::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn pythagorean_identity() {
        let t = trig_constants();
        assert_eq!(&t.sin_t * &t.sin_t + &t.cos_t * &t.cos_t, FieldElement::one());
        assert_eq!(&t.sin_2t * &t.sin_2t + &t.cos_2t * &t.cos_2t, FieldElement::one());
        // double angle identities hold exactly
        assert_eq!(t.sin_2t, (&t.sin_t * &t.cos_t).scale(&rat(2, 1)));
        assert_eq!(t.cos_2t, (&t.cos_t * &t.cos_t).scale(&rat(2, 1)) - FieldElement::one());
    }

    #[test]
    fn trig_constants_match_floating_point() {
        let t = trig_constants();
        let theta = 2.0 * std::f64::consts::PI / 5.0;
        let close = |a: &FieldElement, v: f64| {
            let x = embed_real(a, 80);
            (crate::field::to_f64(&x) - v).abs() < 1e-12
        };
        assert!(close(&t.sin_t, theta.sin()));
        assert!(close(&t.cos_t, theta.cos()));
        assert!(close(&t.sin_2t, (2.0 * theta).sin()));
        assert!(close(&t.cos_2t, (2.0 * theta).cos()));
        assert!(close(&t.ratio, theta.cos() / (2.0 * theta).cos()));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(fe("(1+r)/2").to_string(), "1/2 + 1/2*r");
        assert_eq!(fe("-s*r/3 + 2").to_string(), "2 - 1/3*r*s");
        assert_eq!(FieldElement::zero().to_string(), "0");
        assert_eq!(fe("-r").to_string(), "-r");
        assert_eq!(fe("s^2"), fe("(10+2*r)/16"));
    }

    #[test]
    fn signs_under_embeddings() {
        let r = FieldElement::r();
        let x = &r - &FieldElement::from_i64(2); // √5 − 2 > 0, −√5 − 2 < 0
        assert_eq!(x.sign_under(Embedding::STANDARD), Ordering::Greater);
        assert_eq!(x.sign_under(Embedding { r_sign: -1, s_sign: 1 }), Ordering::Less);
        let y = FieldElement::s() - FieldElement::from_ratio(95, 100);
        assert_eq!(y.signum_real(), Ordering::Greater);
        let z = FieldElement::s() - FieldElement::from_ratio(96, 100);
        assert_eq!(z.signum_real(), Ordering::Less);
    }
}
