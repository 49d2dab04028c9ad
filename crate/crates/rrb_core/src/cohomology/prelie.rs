//! Pre-Lie algebra cohomology (cochains alternating in all but the last
//! argument) and the comparison map Ξ from the operator subcomplex into the
//! pre-Lie complex of the induced pre-Lie algebra.

use super::combinatorics::{binomial, increasing_tuples};
use super::{
    add_signed, check_budget_degrees, eval_alt_tensor, matrix_from_columns, partial_matrix,
    CochainScheme, CohomologyError,
};
use crate::algebra_core::{basis_vec, PreLieRep};
use crate::exact_linalg::{Matrix, Rational};
use crate::rrb_structures::{induced_prelie_rep, RRBRepresentation};
use num::Zero;
use serde::Serialize;

/// Pre-Lie n-cochains are Hom(∧ⁿ⁻¹A⊗A, W); layout (tuple·|A| + last)·|W| + t.
fn prelie_dim(a_dim: usize, w_dim: usize, n: usize) -> usize {
    if n == 0 {
        0
    } else {
        binomial(a_dim, n - 1) * a_dim * w_dim
    }
}

// (d f)(x₁,…,x_{n+1}) = Σ (−1)^{i+1} θ(x_i) f(…x̂_i…, x_{n+1})
//   + Σ (−1)^{i+1} ϑ(x_{n+1}) f(…x̂_i…, xₙ, x_i)
//   − Σ (−1)^{i+1} f(…x̂_i…, xₙ, x_i ·_A x_{n+1})
//   + Σ_{i<j} (−1)^{i+j} f([x_i,x_j]_C, …x̂_i…x̂_j…, x_{n+1}),
// where [x,y]_C = x·y − y·x and sums run over 1 ≤ i ≤ n.
fn prelie_apply(pr: &PreLieRep, n: usize, coeffs: &[Rational]) -> Vec<Rational> {
    let a_dim = pr.algebra().dim();
    let w = pr.space_dim();
    let out_tuples = increasing_tuples(a_dim, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * a_dim * w];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        for last in 0..a_dim {
            let mut acc = vec![Rational::zero(); w];
            for p in 0..n {
                let rest: Vec<Vec<Rational>> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != p)
                    .map(|(_, &i)| basis_vec(a_dim, i))
                    .collect();
                let f_rest_last = eval_alt_tensor(
                    coeffs,
                    n - 1,
                    a_dim,
                    a_dim,
                    w,
                    &rest,
                    &basis_vec(a_dim, last),
                );
                add_signed(&mut acc, p, &pr.theta(tuple[p]).mul_vec(&f_rest_last));
                let f_rest_p = eval_alt_tensor(
                    coeffs,
                    n - 1,
                    a_dim,
                    a_dim,
                    w,
                    &rest,
                    &basis_vec(a_dim, tuple[p]),
                );
                add_signed(&mut acc, p, &pr.vartheta(last).mul_vec(&f_rest_p));
                let prod = pr.algebra().product_basis(tuple[p], last);
                let f_rest_prod = eval_alt_tensor(coeffs, n - 1, a_dim, a_dim, w, &rest, &prod);
                add_signed(&mut acc, p + 1, &f_rest_prod);
            }
            for p in 0..n {
                for q in p + 1..n {
                    let bracket: Vec<Rational> = {
                        let xy = pr.algebra().product_basis(tuple[p], tuple[q]);
                        let yx = pr.algebra().product_basis(tuple[q], tuple[p]);
                        xy.iter().zip(&yx).map(|(s, t)| s - t).collect()
                    };
                    let mut args = vec![bracket];
                    args.extend(
                        tuple
                            .iter()
                            .enumerate()
                            .filter(|(s, _)| *s != p && *s != q)
                            .map(|(_, &i)| basis_vec(a_dim, i)),
                    );
                    let val = eval_alt_tensor(
                        coeffs,
                        n - 1,
                        a_dim,
                        a_dim,
                        w,
                        &args,
                        &basis_vec(a_dim, last),
                    );
                    add_signed(&mut acc, p + q, &val);
                }
            }
            let base = (ti * a_dim + last) * w;
            out[base..base + w].clone_from_slice(&acc);
        }
    }
    out
}

/// Matrix of the pre-Lie coboundary Cⁿ → Cⁿ⁺¹.
pub fn prelie_coboundary(pr: &PreLieRep, degree: usize) -> Matrix {
    assert!(degree >= 1, "coboundary needs degree >= 1");
    let a_dim = pr.algebra().dim();
    let w = pr.space_dim();
    let cols = prelie_dim(a_dim, w, degree);
    let rows = prelie_dim(a_dim, w, degree + 1);
    let mut columns = Vec::with_capacity(cols);
    for u in 0..cols {
        let mut coeffs = vec![Rational::zero(); cols];
        coeffs[u] = Rational::from_integer(1.into());
        columns.push(prelie_apply(pr, degree, &coeffs));
    }
    matrix_from_columns(rows, columns)
}

/// Matrix of Ξ: Hom(∧ⁿ⁻¹V, ℋ) → Hom(∧ⁿ⁻¹V⊗V, W), Ξ(ω)(v₁,…,vₙ) =
/// μ(vₙ)ω(v₁,…,vₙ₋₁). Empty below degree 2 because 𝔠̃¹ = 0.
pub fn xi_matrix(r: &RRBRepresentation, degree: usize) -> Matrix {
    assert!(degree >= 1, "xi needs degree >= 1");
    let (v, h, w) = (r.base().v_dim(), r.h_dim(), r.w_dim());
    let rows = prelie_dim(v, w, degree);
    let cols = CochainScheme::new(r, degree).theta_dim();
    let mut m = Matrix::zeros(rows, cols);
    if cols == 0 {
        return m;
    }
    let tuples = increasing_tuples(v, degree - 1);
    for (ti, _) in tuples.iter().enumerate() {
        for a in 0..h {
            let col = ti * h + a;
            for l in 0..v {
                for t in 0..w {
                    let row = (ti * v + l) * w + t;
                    m.set(row, col, r.mu_basis(l).get(t, a).clone());
                }
            }
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiReport {
    #[serde(serialize_with = "super::serialize_degree_flags")]
    pub degrees: Vec<(usize, bool)>,
    pub commutes: bool,
}

/// Verifies d∘Ξ(n) = Ξ(n+1)∘∂(n) for 1 ≤ n ≤ max_degree, where d is the
/// pre-Lie coboundary of the induced pre-Lie representation.
pub fn xi_commutes(
    r: &RRBRepresentation,
    max_degree: usize,
    budget: usize,
) -> Result<XiReport, CohomologyError> {
    assert!(max_degree >= 1, "max_degree must be at least 1");
    let (v, w) = (r.base().v_dim(), r.w_dim());
    check_budget_degrees(
        (1..=max_degree + 1).map(|n| {
            let dim = prelie_dim(v, w, n).max(CochainScheme::new(r, n).total_dim());
            (n, dim)
        }),
        budget,
    )?;
    let pr = induced_prelie_rep(r.base(), r)
        .map_err(|e| CohomologyError::Mismatch(format!("induced pre-Lie data invalid: {e}")))?;
    let mut degrees = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let lhs = prelie_coboundary(&pr, n).mul(&xi_matrix(r, n));
        let rhs = xi_matrix(r, n + 1).mul(&partial_matrix(&CochainScheme::new(r, n)));
        degrees.push((n, lhs == rhs));
    }
    let commutes = degrees.iter().all(|&(_, ok)| ok);
    Ok(XiReport { degrees, commutes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::PreLieAlgebra;
    use crate::cohomology::DEFAULT_BUDGET;
    use crate::exact_linalg::rat;
    use crate::rrb_structures::adjoint_rrb_rep;
    use crate::samples;

    #[test]
    fn zero_prelie_rep_gives_zero_coboundary() {
        let trivial = PreLieAlgebra::new(1, vec![vec![vec![rat(0)]]]).unwrap();
        let pr = PreLieRep::new(
            trivial,
            vec![Matrix::zeros(1, 1)],
            vec![Matrix::zeros(1, 1)],
        )
        .unwrap();
        for n in 1..=3 {
            assert!(prelie_coboundary(&pr, n).is_zero());
        }
    }

    #[test]
    fn prelie_coboundary_squares_to_zero_on_induced_data() {
        let a = samples::affine_rrb();
        let r = adjoint_rrb_rep(&a);
        let pr = induced_prelie_rep(&a, &r).unwrap();
        for n in 1..=3 {
            let d = prelie_coboundary(&pr, n);
            let d_next = prelie_coboundary(&pr, n + 1);
            assert!(d_next.mul(&d).is_zero(), "degree {n}");
        }
    }

    #[test]
    fn xi_matrix_zero_when_mu_vanishes() {
        let r = samples::trivial_coeffs();
        for n in 1..=3 {
            assert!(xi_matrix(&r, n).is_zero());
        }
    }

    #[test]
    fn xi_commutes_on_fixtures() {
        let trivial = samples::trivial_coeffs();
        assert!(xi_commutes(&trivial, 3, DEFAULT_BUDGET).unwrap().commutes);

        let a = samples::affine_rrb();
        let r = adjoint_rrb_rep(&a);
        let report = xi_commutes(&r, 3, DEFAULT_BUDGET).unwrap();
        assert!(report.commutes);
        assert_eq!(report.degrees.len(), 3);
    }
}
