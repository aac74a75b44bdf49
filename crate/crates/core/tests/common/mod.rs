#![allow(dead_code)]

use std::collections::BTreeMap;

use jumploci::{check_multinet, Arrangement, FieldElement, IntMatrix, Monomial, MultiPoly, Multinet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub fn rational(rng: &mut StdRng, span: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-span..=span)), BigInt::from(rng.gen_range(1..=span.max(1))))
}

pub fn element(rng: &mut StdRng) -> FieldElement {
    FieldElement::from_coords([rational(rng, 9), rational(rng, 5), rational(rng, 5), rational(rng, 3)])
}

pub fn nonzero_element(rng: &mut StdRng) -> FieldElement {
    loop {
        let e = element(rng);
        if !e.is_zero() {
            return e;
        }
    }
}

/// A random homogeneous polynomial of degree `d` with at most `terms` terms.
pub fn homogeneous(rng: &mut StdRng, d: u32, terms: usize) -> MultiPoly {
    let mut out = Vec::new();
    for _ in 0..terms {
        let a = rng.gen_range(0..=d);
        let b = rng.gen_range(0..=d - a);
        out.push((Monomial([a, b, d - a - b]), nonzero_element(rng)));
    }
    MultiPoly::from_terms(out)
}

/// Covectors with entries in {-1, 0, 1}, one per projective class.
pub fn small_pool() -> Vec<[i64; 3]> {
    let mut pool = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                let v = [a, b, c];
                if let Some(&first) = v.iter().find(|&&x| x != 0) {
                    if first > 0 {
                        pool.push(v);
                    }
                }
            }
        }
    }
    pool
}

pub fn from_integer_covectors(name: &str, covs: &[[i64; 3]]) -> Arrangement {
    let lines = covs
        .iter()
        .enumerate()
        .map(|(i, c)| (format!("h{i}"), c.map(FieldElement::from_i64)))
        .collect();
    Arrangement::build(name, lines).unwrap()
}

/// `size` distinct lines drawn from the small pool.
pub fn random_pool_arrangement(rng: &mut StdRng, name: &str, size: usize) -> Arrangement {
    let mut pool = small_pool();
    let mut chosen = Vec::new();
    while chosen.len() < size {
        let i = rng.gen_range(0..pool.len());
        chosen.push(pool.swap_remove(i));
    }
    from_integer_covectors(name, &chosen)
}

pub fn triangle() -> Arrangement {
    Arrangement::from_forms("triangle", &[("x", "x"), ("y", "y"), ("z", "z")]).unwrap()
}

pub fn a3() -> Arrangement {
    Arrangement::from_forms("a3", &[("x", "x"), ("y", "y"), ("z", "z"), ("x-y", "x-y"), ("x-z", "x-z"), ("y-z", "y-z")])
        .unwrap()
}

fn cross(p: &[FieldElement; 3], q: &[FieldElement; 3]) -> [FieldElement; 3] {
    [&p[1] * &q[2] - &p[2] * &q[1], &p[2] * &q[0] - &p[0] * &q[2], &p[0] * &q[1] - &p[1] * &q[0]]
}

/// Every pairwise intersection, merged by point: sorted incidence lists.
pub fn pairwise_lattice(a: &Arrangement) -> Vec<Vec<usize>> {
    let mut at: Vec<([FieldElement; 3], Vec<usize>)> = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let x = cross(&a.line(i).covector, &a.line(j).covector);
            let piv = x.iter().find(|v| !v.is_zero()).unwrap().inv().unwrap();
            let x = x.map(|v| &v * &piv);
            match at.iter_mut().find(|(pt, _)| *pt == x) {
                Some((_, ls)) => ls.extend([i, j]),
                None => at.push((x, vec![i, j])),
            }
        }
    }
    let mut out: Vec<Vec<usize>> = at
        .into_iter()
        .map(|(_, mut ls)| {
            ls.sort_unstable();
            ls.dedup();
            ls
        })
        .collect();
    out.sort();
    out
}

/// All weighted partitions into 3..=max_k classes, checked one by one.
pub fn exhaustive_multinets(a: &Arrangement, max_k: usize, max_mult: u32) -> Vec<Multinet> {
    let n = a.len();
    let mut found = Vec::new();
    let mut assign = vec![0usize; n];
    fn partitions(d: usize, used: usize, max_k: usize, assign: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], usize)) {
        if d == assign.len() {
            f(assign, used);
            return;
        }
        for c in 0..(used + 1).min(max_k) {
            assign[d] = c;
            partitions(d + 1, used.max(c + 1), max_k, assign, f);
        }
    }
    partitions(0, 0, max_k, &mut assign, &mut |assign, k| {
        if k < 3 {
            return;
        }
        let mut classes = vec![Vec::new(); k];
        for (i, &c) in assign.iter().enumerate() {
            classes[c].push(i);
        }
        let total = (max_mult as usize).pow(n as u32);
        for code in 0..total {
            let mut rest = code;
            let mult: Vec<u32> = (0..n)
                .map(|_| {
                    let m = (rest % max_mult as usize) as u32 + 1;
                    rest /= max_mult as usize;
                    m
                })
                .collect();
            if let Some(net) = check_multinet(a, &classes, &mult).ok().and_then(|r| r.multinet()) {
                found.push(net);
            }
        }
    });
    found.sort_by(|x, y| (&x.classes, &x.mult).cmp(&(&y.classes, &y.mult)));
    found
}

fn minors_gcd(m: &IntMatrix, k: usize) -> BigInt {
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    let mut g = BigInt::zero();
    for rs in combinations(&rows, k) {
        for cs in combinations(&cols, k) {
            g = g.gcd(&m.permuted(&rs, &cs).determinant());
        }
    }
    g
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = combinations(&items[1..], k);
    for mut rest in combinations(&items[1..], k - 1) {
        rest.insert(0, items[0]);
        out.push(rest);
    }
    out
}

/// Invariant factors from determinantal divisors: `s_k = d_k / d_{k-1}`.
pub fn naive_divisors(m: &IntMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=m.rows().min(m.cols()) {
        let d = minors_gcd(m, k).abs();
        if d.is_zero() {
            break;
        }
        out.push(&d / &prev);
        prev = d;
    }
    out
}

pub fn random_int_matrix(rng: &mut StdRng, max_dim: usize, span: i64) -> IntMatrix {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-span..=span)).collect()).collect();
    IntMatrix::from_rows(c, &rows)
}

/// Census from incidence lists.
pub fn census_of(points: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut m: BTreeMap<usize, usize> = BTreeMap::new();
    for p in points {
        *m.entry(p.len()).or_default() += 1;
    }
    m.into_iter().collect()
}
