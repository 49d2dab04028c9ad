//! Shared test infrastructure: a seeded generator of structurally valid
//! random instances and an independently written dense oracle for the
//! coboundary matrices and solution-space dimensions.

#![allow(dead_code)]

pub mod gen;
pub mod oracle;

use rrb_core::algebra_core::LinearRep;
use rrb_core::exact_linalg::Matrix;
use rrb_core::rrb_structures::{
    adjoint_rrb_rep, dual_rrb_rep, RBRepresentation, RRBRepresentation,
};
use rrb_core::samples;

/// Coefficient package for the two-term complex example: base with zero
/// structure, ℋ = ℚ², W = ℚ, complex map [[1], [0]], all actions zero.
pub fn end_complex_package() -> RRBRepresentation {
    let base = samples::trivial_rrb();
    let g = base.g().clone();
    RRBRepresentation::new(
        base,
        samples::end_complex_map(),
        LinearRep::zero(g.clone(), 2),
        LinearRep::zero(g, 1),
        vec![Matrix::zeros(1, 2)],
    )
    .expect("two-term complex coefficients are valid")
}

/// The named coefficient packages every suite-wide check runs over.
pub fn named_rrb_packages() -> Vec<(String, RRBRepresentation)> {
    let f1 = adjoint_rrb_rep(&samples::affine_rrb());
    vec![
        ("trivial".into(), samples::trivial_coeffs()),
        ("affine adjoint".into(), f1.clone()),
        ("affine coadjoint".into(), dual_rrb_rep(&f1)),
        ("two-term complex".into(), end_complex_package()),
    ]
}

pub fn rb_packages() -> Vec<(String, RBRepresentation)> {
    vec![(
        "affine rb adjoint".into(),
        rrb_core::rrb_structures::adjoint_rb_rep(&samples::affine_rb()),
    )]
}
