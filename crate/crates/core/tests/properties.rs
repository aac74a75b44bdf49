mod common;

use jumploci::builtins;
use jumploci::{
    aomoto_complex, analyze, h2_torsion, roots_in_field, snf, translated_component, FieldElement, IntMatrix, Monomial,
    MultiPoly, UniPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn element() -> impl Strategy<Value = FieldElement> {
    [rational(), rational(), rational(), rational()].prop_map(FieldElement::from_coords)
}

fn homogeneous(d: u32) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0..=d), (0..=d), element()), 1..4).prop_map(move |ts| {
        MultiPoly::from_terms(ts.into_iter().map(|(a, b, c)| {
            let a = a.min(d);
            let b = b.min(d - a);
            (Monomial([a, b, d - a - b]), c)
        }))
    })
}

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
            .prop_map(move |rows| IntMatrix::from_rows(c, &rows))
    })
}

fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant().abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_is_a_field(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, FieldElement::zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) * &b.inv().unwrap(), a.clone());
        }
    }

    #[test]
    fn serialization_round_trips(a in element()) {
        prop_assert_eq!(FieldElement::parse(&a.serialize()).unwrap(), a);
    }

    #[test]
    fn signs_are_multiplicative(a in element(), b in element()) {
        let s = (&a * &b).signum_real();
        let prod = a.signum_real() as i32 * b.signum_real() as i32;
        prop_assert_eq!(s as i32, prod);
    }

    #[test]
    fn polynomial_ring(p in homogeneous(2), q in homogeneous(2), r in homogeneous(1)) {
        prop_assert_eq!(p.mul(&q.add(&q)), p.mul(&q).add(&p.mul(&q)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division_round_trips(p in homogeneous(2), q in homogeneous(2)) {
        prop_assume!(!q.is_zero() && !p.is_zero());
        prop_assert_eq!(p.mul(&q).exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn kth_root_round_trips(p in homogeneous(1), k in 2u32..=3) {
        prop_assume!(!p.is_zero());
        let power = p.pow(k);
        let root = power.kth_root(k).unwrap();
        prop_assert_eq!(root.pow(k), power);
    }

    #[test]
    fn roots_of_products_of_linears(rs in proptest::collection::vec(element(), 1..4)) {
        let mut f = UniPoly::new(vec![FieldElement::one()]);
        for r in &rs {
            f = f.mul(&UniPoly::new(vec![-r, FieldElement::one()]));
        }
        let found = roots_in_field(&f);
        for r in &rs {
            prop_assert!(found.contains(r), "missing root {}", r);
        }
        for x in &found {
            prop_assert!(f.eval(x).is_zero());
        }
    }

    #[test]
    fn snf_is_a_certified_diagonalization(m in int_matrix()) {
        let s = snf(&m);
        prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.diagonal.clone());
        prop_assert_eq!(s.rank, m.rank());
        for w in s.divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(s.divisors.iter().all(|d| d.is_positive()));
        prop_assert_eq!(s.divisors.clone(), common::naive_divisors(&m));
    }

    #[test]
    fn aomoto_differential_squares_to_zero(seed in any::<u64>(), weights in proptest::collection::vec(-4i64..=4, 10)) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let a = common::random_pool_arrangement(&mut rng, "pool", 6);
        let n = jumploci::os2_basis(&a).n;
        let c = aomoto_complex(&a, &weights[..n]).unwrap();
        prop_assert!(c.d1.mul(&c.d2).is_zero());
        let h = h2_torsion(&c);
        prop_assert_eq!(h.h2_free_rank + h.snf.rank, h.b2);
    }

    #[test]
    fn aomoto_torsion_ignores_line_order(perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = builtins::arrangement("double_star_affine").unwrap();
        let weights = [1i64, 1, 1, 1, 1, -1, -1, -1, -1, -1];
        let shuffled = a.subset("shuffled", &perm).unwrap();
        let w: Vec<i64> = perm.iter().map(|&i| weights[i]).collect();
        let base = h2_torsion(&aomoto_complex(&a, &weights).unwrap());
        let other = h2_torsion(&aomoto_complex(&shuffled, &w).unwrap());
        prop_assert_eq!(base.h2_torsion, other.h2_torsion);
        prop_assert_eq!(base.h2_free_rank, other.h2_free_rank);
    }
}

#[test]
fn swapping_generators_keeps_the_component() {
    for (arr, pen) in [("b3_del_z", "b3"), ("double_star", "double_star")] {
        let a = builtins::arrangement(arr).unwrap();
        let p = builtins::pencil(pen).unwrap();
        let one = analyze(&a, &p, &[]).unwrap();
        let two = analyze(&a, &p.swapped(), &[]).unwrap();
        assert_eq!(one.class, two.class);
        assert_eq!(one.mu_vector, two.mu_vector);
        let c1 = translated_component(&a, &one).unwrap();
        let c2 = translated_component(&a, &two).unwrap();
        assert_eq!(c1.rho_exponents, c2.rho_exponents, "{arr}");
        assert_eq!(c1.t_exponents, c2.t_exponents, "{arr}");
    }
}

#[test]
fn fibers_account_for_the_whole_degree() {
    for (arr, pen) in [("b3", "b3"), ("b3_del_z", "b3"), ("double_star", "double_star")] {
        let a = builtins::arrangement(arr).unwrap();
        let p = builtins::pencil(pen).unwrap();
        for f in analyze(&a, &p, &[]).unwrap().fibers {
            assert!(f.reconstructs(&a), "{arr} at {}", f.lambda);
            assert_eq!(f.degree_total(), p.degree(), "{arr} at {}", f.lambda);
            assert!(f.mu >= 1);
        }
    }
}

#[test]
fn snf_of_zero_and_identity() {
    let z = IntMatrix::zeros(3, 2);
    assert!(snf(&z).divisors.is_empty());
    let i = IntMatrix::identity(4);
    assert_eq!(snf(&i).divisors, vec![BigInt::one(); 4]);
}
