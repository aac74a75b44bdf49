//! Built-in arrangements and pencils: the B₃ reflection arrangement and the
//! double star (two concentric pentagrams plus the line at infinity).

use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::{trig_constants, FieldElement};
use crate::pencil::Pencil;
use crate::poly::MultiPoly;

pub const ARRANGEMENTS: [&str; 4] = ["b3", "b3_del_z", "double_star", "double_star_affine"];
pub const PENCILS: [&str; 2] = ["b3", "double_star"];

const B3_FORMS: [(&str, &str); 9] = [
    ("x", "x"),
    ("y", "y"),
    ("z", "z"),
    ("x-y", "x - y"),
    ("x+y", "x + y"),
    ("x-z", "x - z"),
    ("x+z", "x + z"),
    ("y-z", "y - z"),
    ("y+z", "y + z"),
];

pub fn arrangement(name: &str) -> Result<Arrangement> {
    match name {
        "b3" => Arrangement::from_forms("b3", &B3_FORMS),
        "b3_del_z" => Ok(arrangement("b3")?.delete("z")?.with_name("b3_del_z")),
        "double_star" => {
            let mut lines = labelled_star_lines();
            lines.push(("z".to_string(), [FieldElement::zero(), FieldElement::zero(), FieldElement::one()]));
            Arrangement::build("double_star", lines)
        }
        "double_star_affine" => Arrangement::build("double_star_affine", labelled_star_lines()),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

pub fn pencil(name: &str) -> Result<Pencil> {
    match name {
        "b3" => Pencil::parse("x^2 (y^2 - z^2)", "y^2 (x^2 - z^2)"),
        "double_star" => Pencil::new(h1().homogenize(None), h2().homogenize(None)),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

fn labelled_star_lines() -> Vec<(String, [FieldElement; 3])> {
    star_line_covectors().into_iter().enumerate().map(|(i, c)| (format!("l{}", i + 1), c)).collect()
}

/// Unnormalized covectors `(a, b, c)` of the ten affine lines `a·x + b·y + c`,
/// in their standard order.
pub fn star_line_covectors() -> Vec<[FieldElement; 3]> {
    let t = trig_constants();
    let one = FieldElement::one();
    let zero = FieldElement::zero();
    let ds = &t.sin_2t - &t.sin_t;
    let dc = &t.cos_2t - &t.cos_t;
    let cm1 = &t.cos_t - &one;
    let two_s2 = &t.sin_2t * &FieldElement::from_i64(2);
    let outer = &t.sin_t * &t.ratio;
    let mut out = Vec::with_capacity(10);
    for off in [outer, t.sin_t.clone()] {
        out.push([ds.clone(), dc.clone(), -&off]);
        out.push([-&t.sin_t, cm1.clone(), off.clone()]);
        out.push([two_s2.clone(), zero.clone(), off.clone()]);
        out.push([t.sin_t.clone(), cm1.clone(), -&off]);
        out.push([-&ds, dc.clone(), off.clone()]);
    }
    out
}

/// Affine linear polynomial of a star line.
pub fn star_line(i: usize) -> MultiPoly {
    let [a, b, c] = &star_line_covectors()[i];
    MultiPoly::x().scale(a).add(&MultiPoly::y().scale(b)).add(&MultiPoly::constant(c.clone()))
}

/// `32(5 + 3√5)/125 · sin(2π/5)`.
pub fn star_constant() -> FieldElement {
    let r = FieldElement::r();
    let base = &(&FieldElement::from_i64(5) + &(&FieldElement::from_i64(3) * &r)) * &FieldElement::from_ratio(32, 125);
    &base * &FieldElement::s()
}

const H1_BODY: &str = "2/5 x^5 - 4 x^3 y^2 + 2 x y^4 + (1+r)/2 x^4 + (1+r) x^2 y^2 + (1+r)/2 y^4 \
                       - (2+r) x^2 - (2+r) y^2 + (11+5r)/10";
const H2_BODY: &str = "2/5 x^5 - 4 x^3 y^2 + 2 x y^4 + (1-r)/2 x^4 + (1-r) x^2 y^2 + (1-r)/2 y^4 \
                       - (2-r) x^2 - (2-r) y^2 + (11-5r)/10";

fn scaled_body(body: &str) -> MultiPoly {
    let p = MultiPoly::parse(body).expect("builtin text parses");
    p.scale(&star_constant().inv().expect("nonzero constant"))
}

/// The affine quintic `h₁`, including the factor `c⁻¹`.
pub fn h1() -> MultiPoly {
    scaled_body(H1_BODY)
}

/// The affine quintic `h₂`, including the factor `c⁻¹`.
pub fn h2() -> MultiPoly {
    scaled_body(H2_BODY)
}

/// Which five star lines multiply to `h₁` and which to `h₂`, determined by
/// exact expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarGroups {
    /// 0-based indices into the ten affine lines.
    pub h1_group: Vec<usize>,
    pub h2_group: Vec<usize>,
    /// `∏ lines(h1_group) = h1_scalar · h₁`.
    pub h1_scalar: FieldElement,
    pub h2_scalar: FieldElement,
}

fn scalar_multiple(p: &MultiPoly, h: &MultiPoly) -> Option<FieldElement> {
    let k = &p.leading_coeff() * &h.leading_coeff().inv().ok()?;
    (h.scale(&k) == *p).then_some(k)
}

pub fn resolve_star_groups() -> Result<StarGroups> {
    let groups: [Vec<usize>; 2] = [(0..5).collect(), (5..10).collect()];
    let prods: Vec<MultiPoly> = groups
        .iter()
        .map(|g| g.iter().fold(MultiPoly::one(), |acc, &i| acc.mul(&star_line(i))))
        .collect();
    let (h1, h2) = (h1(), h2());
    for (a, b) in [(0, 1), (1, 0)] {
        if let (Some(k1), Some(k2)) = (scalar_multiple(&prods[a], &h1), scalar_multiple(&prods[b], &h2)) {
            return Ok(StarGroups {
                h1_group: groups[a].clone(),
                h2_group: groups[b].clone(),
                h1_scalar: k1,
                h2_scalar: k2,
            });
        }
    }
    Err(Error::InvalidInput("neither five-line group multiplies to h1".into()))
}

/// The polynomial identities behind the double-star pencil, each checked exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarIdentities {
    pub groups: StarGroups,
    /// Each group multiplies to its quintic with scalar 1.
    pub products_match: bool,
    /// `c·h₁` and `c·h₂` are the bracketed quintics.
    pub brackets_match: bool,
    /// `h₁ − h₂ = (√5/c)·(x² + y² − 1)²`.
    pub affine_difference: bool,
    /// `h̄₁ − h̄₂ = (√5/c)·z·(x² + y² − z²)²`.
    pub homogeneous_difference: bool,
}

impl StarIdentities {
    pub fn all_hold(&self) -> bool {
        self.products_match && self.brackets_match && self.affine_difference && self.homogeneous_difference
    }
}

pub fn star_identities() -> Result<StarIdentities> {
    let groups = resolve_star_groups()?;
    let c = star_constant();
    let k = &FieldElement::r() * &c.inv()?;
    let (h1, h2) = (h1(), h2());
    let bracket = |body: &str| MultiPoly::parse(body).expect("builtin text parses");
    let conic = MultiPoly::parse("x^2 + y^2 - 1")?.pow(2).scale(&k);
    let hconic = MultiPoly::parse("z (x^2 + y^2 - z^2)^2")?.scale(&k);
    Ok(StarIdentities {
        products_match: groups.h1_scalar.is_one() && groups.h2_scalar.is_one(),
        brackets_match: h1.scale(&c) == bracket(H1_BODY) && h2.scale(&c) == bracket(H2_BODY),
        affine_difference: h1.sub(&h2) == conic,
        homogeneous_difference: h1.homogenize(None).sub(&h2.homogenize(None)) == hconic,
        groups,
    })
}
