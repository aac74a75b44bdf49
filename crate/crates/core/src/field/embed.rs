use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FieldElement;

/// One of the four real embeddings of the field: `r ↦ r_sign·√5` and
/// `s ↦ s_sign·√((10 + 2·r_sign·√5)/16)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub r_sign: i8,
    pub s_sign: i8,
}

impl Embedding {
    pub const STANDARD: Embedding = Embedding { r_sign: 1, s_sign: 1 };
    pub const ALL: [Embedding; 4] = [
        Embedding { r_sign: 1, s_sign: 1 },
        Embedding { r_sign: 1, s_sign: -1 },
        Embedding { r_sign: -1, s_sign: 1 },
        Embedding { r_sign: -1, s_sign: -1 },
    ];
}

/// Smallest `k` with `2^k ≥ q` (0 for `q ≤ 1`).
pub(crate) fn ceil_log2(q: &BigRational) -> u32 {
    if *q <= BigRational::one() {
        return 0;
    }
    let c = q.ceil().to_integer();
    let b = c.bits() as u32;
    if (BigInt::one() << (b - 1)) == c {
        b - 1
    } else {
        b
    }
}

/// Approximations of `σ(r)` and `σ(s)`, each within `2^-w`, as integers over `2^w`.
pub(crate) fn generator_approx(emb: Embedding, w: u32) -> (BigInt, BigInt) {
    let scale = BigInt::one() << w;
    // floor(√5·2^w)
    let r_fix = (BigInt::from(5) << (2 * w)).sqrt();
    let r_fix = if emb.r_sign < 0 { -r_fix } else { r_fix };
    // √((10 + 2σ(r))/16) at scale 2^w
    let inner = (BigInt::from(10) * &scale + BigInt::from(2) * &r_fix) << w;
    let s_fix = (inner >> 4u32).sqrt();
    let s_fix = if emb.s_sign < 0 { -s_fix } else { s_fix };
    (r_fix, s_fix)
}

impl FieldElement {
    /// Rational approximation of `σ(self)` with absolute error at most `2^-bits`.
    pub fn approx(&self, emb: Embedding, bits: u32) -> BigRational {
        let [a0, a1, a2, a3] = self.coords();
        if a1.is_zero() && a2.is_zero() && a3.is_zero() {
            return a0;
        }
        let weight = a1.abs() + a2.abs() + a3.abs() * BigRational::from_integer(BigInt::from(4));
        let w = bits + ceil_log2(&(weight + BigRational::one())) + 1;
        let (r_fix, s_fix) = generator_approx(emb, w);
        let den = BigInt::one() << w;
        let r = BigRational::new(r_fix, den.clone());
        let s = BigRational::new(s_fix, den);
        a0 + a1 * &r + a2 * &s + a3 * &r * &s
    }
}

pub fn to_f64(q: &BigRational) -> f64 {
    // scale to keep ~60 significant bits before converting
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    let extra = 62 - shift;
    let scaled = if extra >= 0 {
        (n << extra as u64) / d
    } else {
        n / (d << (-extra) as u64)
    };
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-extra as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_embed() {
        let r = FieldElement::r().approx(Embedding::STANDARD, 64);
        assert!((to_f64(&r) - 5f64.sqrt()).abs() < 1e-15);
        let s = FieldElement::s().approx(Embedding::STANDARD, 64);
        assert!((to_f64(&s) - (0.4 * std::f64::consts::PI).sin()).abs() < 1e-15);
        let s3 = FieldElement::s().approx(Embedding { r_sign: -1, s_sign: 1 }, 64);
        let want = ((10.0 - 2.0 * 5f64.sqrt()) / 16.0).sqrt();
        assert!((to_f64(&s3) - want).abs() < 1e-15);
        assert_eq!(FieldElement::zero().approx(Embedding::STANDARD, 64), BigRational::zero());
    }

    #[test]
    fn high_precision_error_bound() {
        // compare a 64-bit and a 200-bit approximation of a composite element
        let a: FieldElement = "7/3 - 11*r + 5/2*s - 9*r*s".parse().unwrap();
        for emb in Embedding::ALL {
            let lo = a.approx(emb, 64);
            let hi = a.approx(emb, 200);
            let bound = BigRational::new(BigInt::one(), BigInt::one() << 64u32);
            assert!((lo - &hi).abs() <= bound);
            // sign agrees with the exact sign test
            let exact = a.sign_under(emb);
            assert_eq!(hi.cmp(&BigRational::zero()), exact);
        }
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(&BigRational::from_integer(4.into())), 2);
        assert_eq!(ceil_log2(&BigRational::from_integer(5.into())), 3);
        assert_eq!(ceil_log2(&BigRational::one()), 0);
    }
}
