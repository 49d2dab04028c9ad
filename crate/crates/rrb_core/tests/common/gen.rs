//! Seeded random instances. Every family is valid by construction for a
//! structural reason noted inline, and every instance still goes through the
//! validated constructors, so a generator bug cannot leak invalid data.

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rrb_core::algebra_core::{LieAlgebra, LinearRep};
use rrb_core::exact_linalg::{Matrix, Rational};
use rrb_core::rrb_structures::{RBAlgebra, RRBAlgebra};
use rrb_core::samples;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rat(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-3i64..=3)),
        BigInt::from(rng.gen_range(1i64..=2)),
    )
}

fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rat(rng))
}

/// A catalog Lie algebra of dimension at most 3.
fn catalog_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    match rng.gen_range(0..6) {
        0 => LieAlgebra::abelian(rng.gen_range(1..=3)),
        1 => samples::aff1(),
        2 => samples::heisenberg(),
        3 => samples::r3(rat(rng)),
        4 => samples::sl2(),
        _ => LieAlgebra::abelian(2),
    }
}

/// A random character (one-dimensional representation): it must kill the
/// derived subalgebra, which pins the pattern per catalog family.
fn character(rng: &mut ChaCha8Rng, g: &LieAlgebra) -> Vec<Rational> {
    let dim = g.dim();
    let mut chi: Vec<Rational> = (0..dim).map(|_| rat(rng)).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            let br = g.bracket_basis(i, j);
            for (k, c) in br.iter().enumerate() {
                if !num::Zero::is_zero(c) {
                    chi[k] = Rational::new(BigInt::from(0), BigInt::from(1));
                }
            }
        }
    }
    chi
}

/// Random valid relative Rota-Baxter structure, dimensions at most 3.
pub fn random_rrb(rng: &mut ChaCha8Rng) -> RRBAlgebra {
    match rng.gen_range(0..4) {
        0 => {
            // Abelian bracket and zero action: both sides of the operator
            // identity vanish for every T.
            let (gd, vd) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
            let rho = LinearRep::zero(LieAlgebra::abelian(gd), vd);
            let t = rand_matrix(rng, gd, vd);
            RRBAlgebra::new(rho, t).expect("zero action admits any operator")
        }
        1 => {
            // One-dimensional module: ρ(Tu)v − ρ(Tv)u and [Tu, Tv] are both
            // antisymmetric in two scalars, hence zero, for every T.
            let g = catalog_algebra(rng);
            let chi = character(rng, &g);
            let action = chi
                .into_iter()
                .map(|c| Matrix::from_fn(1, 1, |_, _| c.clone()))
                .collect();
            let dim = g.dim();
            let rho = LinearRep::new(g, action).expect("characters are representations");
            let t = rand_matrix(rng, dim, 1);
            RRBAlgebra::new(rho, t).expect("line modules admit any operator")
        }
        2 => {
            // Abelian bracket, diagonal action, and T supported on a single
            // coordinate of V: the coordinate is a joint eigendirection, so
            // the operator identity collapses term by term.
            let (gd, vd) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let g = LieAlgebra::abelian(gd);
            let action = (0..gd)
                .map(|_| {
                    let diag: Vec<Rational> = (0..vd).map(|_| rat(rng)).collect();
                    Matrix::from_fn(vd, vd, |i, j| {
                        if i == j {
                            diag[i].clone()
                        } else {
                            Rational::new(BigInt::from(0), BigInt::from(1))
                        }
                    })
                })
                .collect();
            let rho = LinearRep::new(g, action).expect("diagonal matrices commute");
            let k = rng.gen_range(0..vd);
            let mut t = Matrix::zeros(gd, vd);
            for i in 0..gd {
                t.set(i, k, rat(rng));
            }
            RRBAlgebra::new(rho, t).expect("coordinate-supported operator is compatible")
        }
        _ => {
            // Zero operator over the adjoint module: both sides vanish.
            let g = catalog_algebra(rng);
            let dim = g.dim();
            let action: Vec<Matrix> = (0..dim)
                .map(|i| Matrix::from_fn(dim, dim, |r, c| g.bracket_basis(i, c)[r].clone()))
                .collect();
            let rho = LinearRep::new(g, action).expect("adjoint action is a representation");
            RRBAlgebra::new(rho, Matrix::zeros(dim, dim)).expect("zero operator is compatible")
        }
    }
}

/// Random valid Rota-Baxter structure, dimension at most 3.
pub fn random_rb(rng: &mut ChaCha8Rng) -> RBAlgebra {
    match rng.gen_range(0..5) {
        0 => {
            // Abelian bracket: the weight-zero identity is 0 = T(0).
            let d = rng.gen_range(1..=3);
            let t = rand_matrix(rng, d, d);
            RBAlgebra::new(LieAlgebra::abelian(d), t).expect("abelian admits any operator")
        }
        1 => {
            // Image inside the ideal span(e2) killed by T: both sides vanish.
            let mut t = Matrix::zeros(2, 2);
            t.set(1, 0, rat(rng));
            RBAlgebra::new(samples::aff1(), t).expect("nilpotent shift is Rota-Baxter")
        }
        2 => {
            // Image inside the center span(e3) killed by T.
            let mut t = Matrix::zeros(3, 3);
            t.set(2, 0, rat(rng));
            t.set(2, 1, rat(rng));
            RBAlgebra::new(samples::heisenberg(), t).expect("central image is Rota-Baxter")
        }
        3 => {
            // Image inside the ideal span(e2) killed by T.
            let mut t = Matrix::zeros(3, 3);
            t.set(1, 0, rat(rng));
            RBAlgebra::new(samples::r3(rat(rng)), t).expect("ideal-valued shift is Rota-Baxter")
        }
        _ => RBAlgebra::new(samples::sl2(), Matrix::zeros(3, 3))
            .expect("zero operator is Rota-Baxter"),
    }
}
