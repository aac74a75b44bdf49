//! Roots of univariate polynomials that lie in the field itself.
//!
//! The field is totally real, so a root `α` shows up as a real root of the
//! conjugate polynomial under each of the four embeddings. Real roots are
//! isolated with Sturm sequences evaluated exactly (signs of field elements
//! under an embedding are decidable), the coordinates of `α` are recovered
//! from the four conjugates through the trace form, rounded onto the lattice
//! of admissible denominators and then checked by exact substitution.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::field::{Embedding, FieldElement};

/// Distinct roots of `f` lying in the field, sorted by their standard real value.
pub fn roots_in_field(f: &UniPoly) -> Vec<FieldElement> {
    if f.degree() == 0 {
        return Vec::new();
    }
    let g = f.squarefree_part().monic();
    if g.degree() == 1 {
        return vec![-g.coeff(0)];
    }
    let chain = sturm_chain(&g);

    // Scaling by 2·lcm(denominators) makes every coefficient integral, so
    // 2D·α is an algebraic integer and its coordinates lie in (1/20)ℤ.
    let d = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let two_d = BigInt::from(2) * &d;

    let bound_bits = root_bound_bits(&g);
    let m = BigRational::from_integer(BigInt::one() << bound_bits);
    let d_bits = d.bits() as u32;
    let w = d_bits + bound_bits + 32;

    let mut per_emb: Vec<Vec<BigInt>> = Vec::with_capacity(4);
    for emb in Embedding::ALL {
        let intervals = isolate(&g, &chain, emb, &m);
        if intervals.is_empty() {
            return Vec::new();
        }
        let fixed = FixedPoly::new(&g, emb, w + 64, bound_bits);
        per_emb.push(intervals.iter().map(|iv| fixed.refine(iv, w)).collect());
    }

    let basis = basis_images(w);
    let mut found: Vec<FieldElement> = Vec::new();
    let scale_2w = BigInt::one() << (2 * w);
    let quarter = &scale_2w >> 2u32;
    for x0 in &per_emb[0] {
        for x1 in &per_emb[1] {
            for x2 in &per_emb[2] {
                for x3 in &per_emb[3] {
                    let xs = [x0, x1, x2, x3];
                    // traces t_j = Σ_σ σ(α)·σ(b_j), scaled by 2^{2w}
                    let t: Vec<BigInt> = (0..4)
                        .map(|j| (0..4).map(|e| xs[e] * &basis[e][j]).sum::<BigInt>())
                        .collect();
                    // 20·a = G⁻¹-combination of the traces
                    let twenty_a = [
                        BigInt::from(5) * &t[0],
                        t[1].clone(),
                        BigInt::from(10) * &t[2] - BigInt::from(2) * &t[3],
                        BigInt::from(-2) * &t[2] + BigInt::from(2) * &t[3],
                    ];
                    let mut nums = Vec::with_capacity(4);
                    let mut ok = true;
                    for v in &twenty_a {
                        let scaled = v * &two_d;
                        let n = round_div(&scaled, &scale_2w);
                        let err = (&scaled - &n * &scale_2w).abs();
                        if err >= quarter {
                            ok = false;
                            break;
                        }
                        nums.push(n);
                    }
                    if !ok {
                        continue;
                    }
                    let den = BigInt::from(20) * &two_d;
                    let coords = [
                        BigRational::new(nums[0].clone(), den.clone()),
                        BigRational::new(nums[1].clone(), den.clone()),
                        BigRational::new(nums[2].clone(), den.clone()),
                        BigRational::new(nums[3].clone(), den.clone()),
                    ];
                    let alpha = FieldElement::from_coords(coords);
                    if !found.contains(&alpha) && g.eval(&alpha).is_zero() {
                        found.push(alpha);
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.cmp_real(b));
    found
}

/// The `k`-th root of `c` in the field, if any. For even `k` the root that is
/// positive under the standard embedding is returned.
pub fn nth_root(c: &FieldElement, k: u32) -> Option<FieldElement> {
    if k == 0 {
        return None;
    }
    if k == 1 || c.is_zero() || c.is_one() {
        return Some(c.clone());
    }
    let mut coeffs = vec![FieldElement::zero(); k as usize + 1];
    coeffs[0] = -c;
    coeffs[k as usize] = FieldElement::one();
    let roots = roots_in_field(&UniPoly::new(coeffs));
    roots.into_iter().max_by(|a, b| a.cmp_real(b))
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest integer to a/b for b > 0
    let two_a: BigInt = a * 2 + b;
    two_a.div_floor(&(b * 2))
}

fn to_fixed(x: &BigRational, w: u32) -> BigInt {
    round_div(&(x.numer() << w), x.denom())
}

/// `σ(b_j)` for basis `{1, r, s, rs}` and each embedding, at scale `2^w`.
fn basis_images(w: u32) -> Vec<[BigInt; 4]> {
    Embedding::ALL
        .iter()
        .map(|&emb| {
            let (r, s) = crate::field::generator_approx(emb, w);
            let rs = (&r * &s) >> w;
            [BigInt::one() << w, r, s, rs]
        })
        .collect()
}

/// Sturm sequence over the field; each member is rescaled by a positive
/// rational to keep coefficients small.
fn sturm_chain(g: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![g.clone(), normalize_positive(&g.derivative())];
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize_positive(&r.scale_rational(&-BigRational::one())));
    }
    chain
}

fn normalize_positive(p: &UniPoly) -> UniPoly {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for c in p.coeffs() {
        for q in c.coords() {
            den = den.lcm(q.denom());
            num = num.gcd(q.numer());
        }
    }
    if num.is_zero() {
        return p.clone();
    }
    p.scale_rational(&BigRational::new(den, num.abs()))
}

fn variations(chain: &[UniPoly], emb: Embedding, t: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in chain {
        let s = p.eval_rational(t).sign_under(emb);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// An isolating interval `(lo, hi]` for one real root, or the root itself.
enum Isolated {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

/// Isolating intervals for every real root of `σ(g)` in `(-m, m)`.
fn isolate(g: &UniPoly, chain: &[UniPoly], emb: Embedding, m: &BigRational) -> Vec<Isolated> {
    let lo = -m.clone();
    let hi = m.clone();
    let v_lo = variations(chain, emb, &lo);
    let v_hi = variations(chain, emb, &hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, v_lo, v_hi)];
    while let Some((a, b, va, vb)) = stack.pop() {
        let n = va - vb;
        if n == 0 {
            continue;
        }
        if n == 1 {
            if g.eval_rational(&b).is_zero() {
                out.push(Isolated::Exact(b));
            } else {
                out.push(Isolated::Interval(a, b));
            }
            continue;
        }
        let mid = split_point(g, &a, &b);
        let vm = variations(chain, emb, &mid);
        stack.push((a, mid.clone(), va, vm));
        stack.push((mid, b, vm, vb));
    }
    out
}

/// `σ(g)` with coefficients rounded to integers over `2^w`.
struct FixedPoly {
    coeffs: Vec<BigInt>,
    w: u32,
}

impl FixedPoly {
    fn new(g: &UniPoly, emb: Embedding, w: u32, bound_bits: u32) -> FixedPoly {
        // the extra bits absorb the growth of Horner rounding errors on |x| ≤ 2^bound_bits
        let w = w + (g.degree() as u32 + 1) * (bound_bits + 1);
        let coeffs = g.coeffs().iter().map(|c| to_fixed(&c.approx(emb, w + 2), w)).collect();
        FixedPoly { coeffs, w }
    }

    fn sign_at(&self, x: &BigInt) -> Ordering {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = ((acc * x) >> self.w) + c;
        }
        acc.sign().cmp_zero()
    }

    /// The root in the interval, as an integer over `2^out_w`.
    fn refine(&self, iv: &Isolated, out_w: u32) -> BigInt {
        let (a, b) = match iv {
            Isolated::Exact(x) => return to_fixed(x, out_w),
            Isolated::Interval(a, b) => (a, b),
        };
        let mut lo = to_fixed(a, self.w);
        let mut hi = to_fixed(b, self.w);
        let s_lo = self.sign_at(&lo);
        let target = BigInt::one() << (self.w - out_w);
        while &hi - &lo > target {
            let mid: BigInt = (&lo + &hi) >> 1u32;
            let s = self.sign_at(&mid);
            if s == Ordering::Equal {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        round_div(&(lo + hi), &(BigInt::one() << (self.w - out_w + 1)))
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

/// `k` with every root of the monic `g`, under every embedding, inside `(-2^k, 2^k)`.
fn root_bound_bits(g: &UniPoly) -> u32 {
    // Fujiwara: |x| ≤ 2·max_i |c_{n-i}|^{1/i}
    let n = g.degree();
    let mut best = 0;
    for i in 1..=n {
        let c = g.coeff(n - i);
        if c.is_zero() {
            continue;
        }
        let b = crate::field::ceil_log2(&c.abs_bound());
        best = best.max(b.div_ceil(i as u32));
    }
    best + 2
}

/// A point strictly inside `(a, b)`, preferring the midpoint, that is not a root.
fn split_point(g: &UniPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let d = g.degree() as i64 + 2;
    let candidates = std::iter::once((1, 2)).chain((1..d).map(|j| (j, d)));
    for (j, k) in candidates {
        let t = a + (b - a) * BigRational::new(BigInt::from(j), BigInt::from(k));
        if !g.eval_rational(&t).is_zero() {
            return t;
        }
    }
    unreachable!("a squarefree polynomial of degree d has at most d roots")
}
