//! Exact computations on complex line arrangements defined over ℚ(√5)(sin 2π/5).

pub mod aomoto;
pub mod arrangement;
pub mod builtins;
pub mod error;
pub mod expr;
pub mod fibration;
pub mod field;
pub mod multinet;
pub mod pencil;
pub mod poly;

pub use aomoto::{aomoto_complex, h2_torsion, os2_basis, reduce_product, snf, AomotoCohomology, AomotoComplex, IntMatrix, Os2Basis, SnfResult};
pub use arrangement::{census, render_svg, Arrangement, ArrangementFile, IntersectionPoint, Line, Window};
pub use error::{Error, Result};
pub use fibration::{
    analyze, analyze_fiber, fiber_polynomial, lambda_candidates, orbifold_v1_shape, pointed_vs_fiber,
    translated_component, translated_components, FiberAnalysis, FibrationClass, FibrationReport, Lambda, PointedCheck,
    V1Component, V1Shape,
};
pub use field::{embed_real, trig_constants, Embedding, FieldElement, Rational, TrigConstants};
pub use multinet::{check_multinet, enumerate_multinets, find_pointed, multinet_pencil, EnumerationOptions, Multinet, MultinetReport};
pub use pencil::Pencil;
pub use poly::{linear_factors, nth_root, roots_in_field, uni_squarefree, LinearFactorization, Monomial, MultiPoly, UniPoly};
