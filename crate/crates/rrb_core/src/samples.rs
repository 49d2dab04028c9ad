//! Ready-made small instances. These back the unit tests, the shipped
//! fixture files, and the randomized-instance catalog, so their data is
//! deliberately tiny and fully explicit.

use crate::algebra_core::{LieAlgebra, LinearRep};
use crate::exact_linalg::{rat, Matrix, Rational};
use crate::rrb_structures::{RBAlgebra, RRBAlgebra, RRBRepresentation};

/// Two-dimensional affine Lie algebra: [e1, e2] = e2.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(2, &[(0, 1, vec![rat(0), rat(1)])]).unwrap()
}

/// Three-dimensional Heisenberg algebra: [e1, e2] = e3.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, vec![rat(0), rat(0), rat(1)])]).unwrap()
}

/// Solvable family r3(λ): [e1, e2] = e2, [e1, e3] = λ·e3.
pub fn r3(lambda: Rational) -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, vec![rat(0), rat(1), rat(0)]),
            (0, 2, vec![rat(0), rat(0), lambda]),
        ],
    )
    .unwrap()
}

/// sl2 with basis (h, e, f): [h, e] = 2e, [h, f] = −2f, [e, f] = h.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, vec![rat(0), rat(2), rat(0)]),
            (0, 2, vec![rat(0), rat(0), rat(-2)]),
            (1, 2, vec![rat(1), rat(0), rat(0)]),
        ],
    )
    .unwrap()
}

/// Everything-zero structure: abelian g of dim 2, V = ℚ, ρ = 0, T = 0.
pub fn trivial_rrb() -> RRBAlgebra {
    RRBAlgebra::new(
        LinearRep::zero(LieAlgebra::abelian(2), 1),
        Matrix::zeros(2, 1),
    )
    .unwrap()
}

/// Zero coefficient package over [`trivial_rrb`]: ℋ = W = ℚ, all maps zero.
pub fn trivial_coeffs() -> RRBRepresentation {
    let base = trivial_rrb();
    let g = base.g().clone();
    RRBRepresentation::new(
        base,
        Matrix::zeros(1, 1),
        LinearRep::zero(g.clone(), 1),
        LinearRep::zero(g, 1),
        vec![Matrix::zeros(1, 1)],
    )
    .unwrap()
}

/// Affine relative Rota-Baxter structure: g = aff1, V = ℚ with ρ(e1) = 1,
/// ρ(e2) = 0, and T(u1) = e2.
pub fn affine_rrb() -> RRBAlgebra {
    let rho = LinearRep::new(
        aff1(),
        vec![Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[0]])],
    )
    .unwrap();
    RRBAlgebra::new(rho, Matrix::from_i64(&[&[0], &[1]])).unwrap()
}

/// Affine Rota-Baxter structure: g = aff1 with T(e1) = e2, T(e2) = 0.
pub fn affine_rb() -> RBAlgebra {
    RBAlgebra::new(aff1(), Matrix::from_i64(&[&[0, 0], &[1, 0]])).unwrap()
}

/// Two-term complex map [[1], [0]]: a line W embedded into a plane ℋ.
pub fn end_complex_map() -> Matrix {
    Matrix::from_i64(&[&[1], &[0]])
}
