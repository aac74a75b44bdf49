use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Element `a + b·r` of ℚ(√5), with `r² = 5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Sqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Sqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Sqrt5 { a, b }
    }

    pub fn zero() -> Self {
        Sqrt5::new(BigRational::zero(), BigRational::zero())
    }

    pub fn from_rational(a: BigRational) -> Self {
        Sqrt5::new(a, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// a² − 5b², the norm down to ℚ.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Sqrt5::new(&self.a / &n, -&self.b / &n))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Sqrt5::new(&self.a * q, &self.b * q)
    }

    /// Sign of `a + ε·b·√5` as a real number, where `ε = r_sign`.
    pub fn sign_under(&self, r_sign: i8) -> Ordering {
        let b = if r_sign < 0 { -self.b.clone() } else { self.b.clone() };
        let sa = self.a.cmp(&BigRational::zero());
        let sb = b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: compare a² against 5b²
                let lhs = &self.a * &self.a;
                let rhs = BigRational::from_integer(BigInt::from(5)) * &b * &b;
                if lhs > rhs {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn abs_bound(&self) -> BigRational {
        // |a| + (9/4)|b| bounds |a ± b√5|
        self.a.abs() + self.b.abs() * BigRational::new(BigInt::from(9), BigInt::from(4))
    }
}

impl Add for &Sqrt5 {
    type Output = Sqrt5;
    fn add(self, o: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &Sqrt5 {
    type Output = Sqrt5;
    fn sub(self, o: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &Sqrt5 {
    type Output = Sqrt5;
    fn mul(self, o: &Sqrt5) -> Sqrt5 {
        let five = BigRational::from_integer(BigInt::from(5));
        Sqrt5::new(
            &self.a * &o.a + five * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &Sqrt5 {
    type Output = Sqrt5;
    fn neg(self) -> Sqrt5 {
        Sqrt5::new(-self.a.clone(), -self.b.clone())
    }
}
