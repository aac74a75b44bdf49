use std::fmt;

use num_rational::BigRational;

use crate::field::FieldElement;

/// Dense univariate polynomial over the field, coefficients in ascending order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        UniPoly::new(vec![FieldElement::zero(), FieldElement::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn lead(&self) -> FieldElement {
        self.coeffs.last().cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![FieldElement::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, q: &BigRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a.scale(q)).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &FieldElement::from_i64(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dl_inv = d.lead().inv().expect("nonzero lead");
        let dd = d.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![FieldElement::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &dl_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i - dd + j] -= &t;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().expect("nonzero lead"))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    pub fn eval(&self, t: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn eval_rational(&self, t: &BigRational) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(), |acc, c| &acc.scale(t) + c)
    }
}

/// True iff `gcd(p, p')` is constant. `p` must be nonzero.
pub fn uni_squarefree(p: &UniPoly) -> bool {
    assert!(!p.is_zero(), "uni_squarefree on the zero polynomial");
    p.gcd(&p.derivative()).degree() == 0
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| FieldElement::from_i64(v)).collect())
    }

    #[test]
    fn squarefree_examples() {
        assert!(uni_squarefree(&up(&[-1, 0, 1])));
        assert!(!uni_squarefree(&up(&[1, -2, 1])));
    }

    #[test]
    fn division_identity() {
        let a = up(&[3, 0, -2, 5, 1]);
        let b = up(&[1, 2, 7]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products() {
        let f = up(&[-1, 1]); // t − 1
        let a = f.mul(&up(&[2, 1]));
        let b = f.mul(&up(&[-3, 0, 1]));
        assert_eq!(a.gcd(&b), f);
    }
}
