//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jumploci::builtins;
use jumploci::fibration::FibrationClass;
use jumploci::{
    aomoto_complex, analyze, enumerate_multinets, find_pointed, h2_torsion, multinet_pencil, pointed_vs_fiber, snf,
    translated_component, Arrangement, EnumerationOptions, FieldElement, Lambda, MultiPoly,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn poly(text: &str) -> MultiPoly {
    MultiPoly::parse(text).expect("test polynomial parses")
}

fn group_product(idx: std::ops::Range<usize>) -> MultiPoly {
    idx.fold(MultiPoly::one(), |acc, i| acc.mul(&builtins::star_line(i)))
}

fn red_blue_products() -> Check {
    let c = builtins::star_constant();
    let (h1, h2) = (builtins::h1(), builtins::h2());
    let outer = group_product(5..10);
    let inner = group_product(0..5);
    ensure(outer == h1, "l6..l10 does not multiply to h1")?;
    ensure(inner == h2, "l1..l5 does not multiply to h2")?;
    let bracket1 = poly(
        "2/5 x^5 - 4 x^3 y^2 + 2 x y^4 + (1+r)/2 x^4 + (1+r) x^2 y^2 + (1+r)/2 y^4 - (2+r) x^2 - (2+r) y^2 + (11+5r)/10",
    );
    let bracket2 = poly(
        "2/5 x^5 - 4 x^3 y^2 + 2 x y^4 + (1-r)/2 x^4 + (1-r) x^2 y^2 + (1-r)/2 y^4 - (2-r) x^2 - (2-r) y^2 + (11-5r)/10",
    );
    ensure(outer.scale(&c) == bracket1, "c * (l6..l10) differs from the bracketed h1")?;
    ensure(inner.scale(&c) == bracket2, "c * (l1..l5) differs from the bracketed h2")?;
    Ok(format!("l6..l10 = h1, l1..l5 = h2 exactly; c = {c}"))
}

fn key_identity() -> Check {
    let c = builtins::star_constant();
    let k = &FieldElement::r() * &c.inv().map_err(|e| e.to_string())?;
    let (h1, h2) = (builtins::h1(), builtins::h2());
    ensure(h1.sub(&h2) == poly("(x^2 + y^2 - 1)^2").scale(&k), "affine identity fails")?;
    let hom = h1.homogenize(None).sub(&h2.homogenize(None));
    ensure(hom == poly("z (x^2 + y^2 - z^2)^2").scale(&k), "homogenized identity fails")?;
    Ok("h1 - h2 = (r/c)(x^2+y^2-1)^2 and its homogenization".into())
}

fn double_star_fibration() -> Check {
    let a = builtins::arrangement("double_star").map_err(|e| e.to_string())?;
    let p = builtins::pencil("double_star").map_err(|e| e.to_string())?;
    let rep = analyze(&a, &p, &[]).map_err(|e| e.to_string())?;
    ensure(rep.k == 2, format!("k = {}", rep.k))?;
    ensure(rep.class == FibrationClass::Small, format!("class {}", rep.class))?;
    ensure(rep.multiple_fibers.len() == 1, format!("{} multiple fibers", rep.multiple_fibers.len()))?;
    let f = &rep.multiple_fibers[0];
    ensure(f.lambda == Lambda::affine(FieldElement::one()), format!("multiple fiber at {}", f.lambda))?;
    ensure(f.mu == 2, format!("mu = {}", f.mu))?;
    let comp = translated_component(&a, &rep).map_err(|e| e.to_string())?.affine_view(&a);
    let rho = comp.rho_signs().ok_or("rho has order > 2")?;
    ensure(rho == [1, 1, 1, 1, 1, -1, -1, -1, -1, -1], format!("rho = {rho:?}"))?;
    ensure(comp.t_exponents == [1, 1, 1, 1, 1, -1, -1, -1, -1, -1], format!("T = {:?}", comp.t_exponents))?;
    let pointed = pointed_vs_fiber(&rep).map_err(|e| e.to_string())?;
    ensure(!pointed.pointed_multinet_explained, "residual splits into lines")?;
    Ok(format!("k = 2, mu = 2 at {}, small, {comp}, not from a pointed multinet", f.lambda))
}

fn b3_chain() -> Check {
    let a = builtins::arrangement("b3").map_err(|e| e.to_string())?;
    let nets = enumerate_multinets(&a, EnumerationOptions { max_k: 4, max_mult: 2, parallel: true });
    let net = nets
        .iter()
        .find(|n| n.k() == 3 && n.kappa == 4)
        .ok_or_else(|| format!("no (3,4)-multinet among {} found", nets.len()))?;
    let pencil = multinet_pencil(&a, net).map_err(|e| e.to_string())?;
    let rep = analyze(&a, &pencil, &[]).map_err(|e| e.to_string())?;
    let want = vec![Lambda::zero(), Lambda::infinity(), Lambda::affine(FieldElement::one())];
    ensure(rep.k == 3 && rep.removed == want, format!("removed {:?}", rep.removed))?;
    let z = a.index_of("z").map_err(|e| e.to_string())?;
    let pointed = find_pointed(&a, net);
    ensure(pointed.contains(&z), format!("pointed lines {pointed:?}"))?;

    let del = a.delete("z").map_err(|e| e.to_string())?;
    let rep = analyze(&del, &pencil, &[]).map_err(|e| e.to_string())?;
    ensure(rep.class == FibrationClass::Small && rep.mu_vector == [2], format!("deleted: {} {:?}", rep.class, rep.mu_vector))?;
    ensure(rep.multiple_fibers[0].lambda == Lambda::affine(FieldElement::one()), "deleted: multiple fiber not at [1:1]")?;
    let chk = pointed_vs_fiber(&rep).map_err(|e| e.to_string())?;
    ensure(chk.pointed_multinet_explained, "deleted: residual does not split")?;
    Ok(format!("(3,4)-multinet among {} nets, k = 3, pointed at z, deletion small with mu = 2", nets.len()))
}

fn aomoto_two_torsion() -> Check {
    let a = builtins::arrangement("double_star_affine").map_err(|e| e.to_string())?;
    let cx = aomoto_complex(&a, &[1, 1, 1, 1, 1, -1, -1, -1, -1, -1]).map_err(|e| e.to_string())?;
    let h = h2_torsion(&cx);
    ensure(h.has_two_torsion, format!("torsion {:?}", h.h2_torsion))?;
    let t: Vec<String> = h.h2_torsion.iter().map(|d| format!("Z/{d}")).collect();
    Ok(format!("b2 = {}, H2 torsion {}", h.b2, t.join(" + ")))
}

fn k_bound() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut arrs = vec![builtins::arrangement("b3").map_err(|e| e.to_string())?, common::triangle(), common::a3()];
    for i in 0..5 {
        let size = rng.gen_range(5..=7);
        arrs.push(common::random_pool_arrangement(&mut rng, &format!("random{i}"), size));
    }
    let mut total = 0;
    for a in &arrs {
        let nets = enumerate_multinets(a, EnumerationOptions { max_k: 4, max_mult: 2, parallel: true });
        for n in &nets {
            ensure(n.k_bound_holds(), format!("{}: k = {} with mult {:?}", a.name(), n.k(), n.mult))?;
        }
        total += nets.len();
    }
    Ok(format!("{total} multinets on {} arrangements respect the bound", arrs.len()))
}

fn oracles() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut small: Vec<Arrangement> = vec![common::triangle(), common::a3()];
    for i in 0..4 {
        let size = rng.gen_range(4..=6);
        small.push(common::random_pool_arrangement(&mut rng, &format!("pool{i}"), size));
    }
    for a in &small {
        let fast = enumerate_multinets(a, EnumerationOptions { max_k: 4, max_mult: 2, parallel: true });
        let slow = common::exhaustive_multinets(a, 4, 2);
        ensure(fast == slow, format!("{}: {} vs {} multinets", a.name(), fast.len(), slow.len()))?;
    }
    for _ in 0..50 {
        let m = common::random_int_matrix(&mut rng, 4, 6);
        let got = snf(&m).divisors;
        let want = common::naive_divisors(&m);
        ensure(got == want, format!("snf {got:?} vs {want:?} on\n{m}"))?;
    }
    for name in builtins::ARRANGEMENTS {
        let a = builtins::arrangement(name).map_err(|e| e.to_string())?;
        let mut got: Vec<Vec<usize>> = a.lattice().into_iter().map(|p| p.incident).collect();
        got.sort();
        ensure(got == common::pairwise_lattice(&a), format!("{name}: lattice differs"))?;
    }
    Ok(format!("{} enumerations, 50 SNFs, {} lattices agree", small.len(), builtins::ARRANGEMENTS.len()))
}

fn kernel_properties() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for _ in 0..1000 {
        let (a, b, c) = (common::element(&mut rng), common::element(&mut rng), common::element(&mut rng));
        ensure(&(&a + &b) + &c == &a + &(&b + &c), "addition not associative")?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplication not associative")?;
        ensure(&a * &b == &b * &a && &a + &b == &b + &a, "not commutative")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "not distributive")?;
        if !a.is_zero() {
            ensure((&a * &a.inv().unwrap()).is_one(), "bad inverse")?;
        }
    }
    for _ in 0..40 {
        let p = common::homogeneous(&mut rng, 2, 3);
        let q = common::homogeneous(&mut rng, 1, 2);
        let r = common::homogeneous(&mut rng, 2, 2);
        ensure(p.mul(&q.add(&r)) == p.mul(&q).add(&p.mul(&r)), "polynomial distributivity")?;
        ensure(p.mul(&q).mul(&r) == p.mul(&q.mul(&r)), "polynomial associativity")?;
        if q.is_zero() || p.is_zero() {
            continue;
        }
        ensure(p.mul(&q).exact_divide(&q).ok() == Some(p.clone()), "exact_divide round trip")?;
        for k in [2, 3] {
            let root = p.pow(k).kth_root(k).map_err(|e| format!("kth_root({k}): {e}"))?;
            ensure(root.pow(k) == p.pow(k), format!("kth_root({k}) round trip"))?;
        }
    }
    let mut arrs: Vec<Arrangement> = ["b3", "double_star_affine"].iter().map(|n| builtins::arrangement(n).unwrap()).collect();
    for i in 0..6 {
        arrs.push(common::random_pool_arrangement(&mut rng, &format!("p{i}"), 6));
    }
    for a in &arrs {
        let n = jumploci::os2_basis(a).n;
        let omega: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let cx = aomoto_complex(a, &omega).map_err(|e| e.to_string())?;
        ensure(cx.d1.mul(&cx.d2).is_zero(), format!("{}: d2 after d1 is nonzero", a.name()))?;
    }
    let cases = [("b3", "b3"), ("b3_del_z", "b3"), ("double_star", "double_star")];
    let mut fibers = 0;
    for (arr, pen) in cases {
        let a = builtins::arrangement(arr).unwrap();
        let p = builtins::pencil(pen).unwrap();
        let rep = analyze(&a, &p, &[]).map_err(|e| e.to_string())?;
        for f in &rep.fibers {
            ensure(f.reconstructs(&a), format!("{arr} {}: reconstruction", f.lambda))?;
            ensure(f.degree_total() == p.degree(), format!("{arr} {}: degree bookkeeping", f.lambda))?;
            fibers += 1;
        }
    }
    Ok(format!("field, ring, root, division, complex and {fibers}-fiber bookkeeping checks hold"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "red/blue product identity", limit: Duration::from_secs(1), run: red_blue_products },
        Criterion { id: 2, name: "key identity", limit: Duration::from_secs(1), run: key_identity },
        Criterion { id: 3, name: "double-star fibration", limit: Duration::from_secs(5), run: double_star_fibration },
        Criterion { id: 4, name: "B3 chain", limit: Duration::from_secs(60), run: b3_chain },
        Criterion { id: 5, name: "Aomoto torsion", limit: Duration::from_secs(1), run: aomoto_two_torsion },
        Criterion { id: 6, name: "k bound on enumerated multinets", limit: Duration::from_secs(120), run: k_bound },
        Criterion { id: 7, name: "oracle equivalences", limit: Duration::from_secs(60), run: oracles },
        Criterion { id: 8, name: "kernel property suites", limit: Duration::from_secs(30), run: kernel_properties },
    ];
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let outcome = (c.run)();
        let took = t.elapsed();
        let outcome = match outcome {
            Ok(d) if took > c.limit => Err(format!("{d}; took {took:.2?}, limit {:?}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {} {}: {detail} [{took:.2?}]", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {}: {why} [{took:.2?}]", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
