//! Cochain complex of a plain Rota-Baxter Lie algebra with representation
//! coefficients, and its embedding into the relative complex of (g, ad, T)
//! with coefficient package [W →(𝒯)→ W; ρ_W, ρ_W, ρ_W].

use super::combinatorics::{binomial, increasing_tuples, sort_with_sign, tuple_rank};
use super::embedding::EmbeddingReport;
use super::{
    add_signed, check_budget_degrees, coboundary_matrix, d_ce_apply, eval_alternating,
    matrix_from_columns, CochainScheme, CohomologyError, CohomologyReport, DegreeReport,
};
use crate::algebra_core::{basis_vec, AlgebraError};
use crate::exact_linalg::{quotient_dim_checked, Matrix, Rational};
use crate::rrb_structures::{rb_to_rrb, RBRepresentation, RRBRepresentation};
use num::Zero;

/// Degree-stamped view of Rota-Baxter coefficient data: degree-n cochains are
/// Hom(∧ⁿg, W) ⊕ Hom(∧ⁿ⁻¹g, W), with the second block absent below degree 2.
#[derive(Debug, Clone, Copy)]
pub struct RBCochainScheme<'a> {
    coeffs: &'a RBRepresentation,
    degree: usize,
}

impl<'a> RBCochainScheme<'a> {
    pub fn new(coeffs: &'a RBRepresentation, degree: usize) -> Self {
        RBCochainScheme { coeffs, degree }
    }

    pub fn coeffs(&self) -> &'a RBRepresentation {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn at_degree(&self, degree: usize) -> Self {
        RBCochainScheme {
            coeffs: self.coeffs,
            degree,
        }
    }

    /// Hom(∧ⁿg, W) block size.
    pub fn f_dim(&self) -> usize {
        if self.degree == 0 {
            return 0;
        }
        binomial(self.coeffs.base().dim(), self.degree) * self.coeffs.w_dim()
    }

    /// Hom(∧ⁿ⁻¹g, W) block size; empty below degree 2.
    pub fn theta_dim(&self) -> usize {
        if self.degree < 2 {
            return 0;
        }
        binomial(self.coeffs.base().dim(), self.degree - 1) * self.coeffs.w_dim()
    }

    pub fn total_dim(&self) -> usize {
        self.f_dim() + self.theta_dim()
    }
}

/// Total coordinate count of the degree-n Rota-Baxter cochain space.
pub fn rb_cochain_dim(scheme: &RBCochainScheme) -> usize {
    scheme.total_dim()
}

// ∂θ(x₁,…,xₙ) = Σᵢ (−1)^{i+1} ρ_W(Tx_i) θ(…x̂ᵢ…)
//   − Σᵢ (−1)^{i+1} 𝒯(ρ_W(x_i) θ(…x̂ᵢ…))
//   + Σ_{i<j} (−1)^{i+j} θ([Tx_i,x_j] − [Tx_j,x_i], …x̂ᵢ…x̂ⱼ…).
fn rb_partial_apply(r: &RBRepresentation, n: usize, theta: &[Rational]) -> Vec<Rational> {
    let g = r.base().dim();
    let w = r.w_dim();
    let lie = r.base().g();
    let out_tuples = increasing_tuples(g, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * w];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let mut acc = vec![Rational::zero(); w];
        for p in 0..n {
            let rest: Vec<Vec<Rational>> = tuple
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, &i)| basis_vec(g, i))
                .collect();
            let val = eval_alternating(theta, n - 1, g, w, &rest);
            let tx = r.base().t().col(tuple[p]);
            add_signed(&mut acc, p, &r.rho_w().act_vec(&tx).mul_vec(&val));
            add_signed(
                &mut acc,
                p + 1,
                &r.curly_t().mul_vec(&r.rho_w().act(tuple[p]).mul_vec(&val)),
            );
        }
        for p in 0..n {
            for q in p + 1..n {
                let txp = r.base().t().col(tuple[p]);
                let txq = r.base().t().col(tuple[q]);
                let first: Vec<Rational> = {
                    let a = lie.bracket(&txp, &basis_vec(g, tuple[q]));
                    let b = lie.bracket(&txq, &basis_vec(g, tuple[p]));
                    a.iter().zip(&b).map(|(x, y)| x - y).collect()
                };
                let mut args = vec![first];
                args.extend(
                    tuple
                        .iter()
                        .enumerate()
                        .filter(|(s, _)| *s != p && *s != q)
                        .map(|(_, &i)| basis_vec(g, i)),
                );
                let val = eval_alternating(theta, n - 1, g, w, &args);
                add_signed(&mut acc, p + q, &val);
            }
        }
        out[ti * w..(ti + 1) * w].clone_from_slice(&acc);
    }
    out
}

// h_T(f)(x₁,…,xₙ) = (−1)ⁿ f(Tx₁,…,Txₙ)
//   − (−1)ⁿ Σᵢ 𝒯(f(Tx₁,…,Tx_{i−1}, x_i, Tx_{i+1},…,Txₙ)).
fn rb_ht_apply(r: &RBRepresentation, n: usize, f: &[Rational]) -> Vec<Rational> {
    let g = r.base().dim();
    let w = r.w_dim();
    let out_tuples = increasing_tuples(g, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * w];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let targs: Vec<Vec<Rational>> = tuple.iter().map(|&i| r.base().t().col(i)).collect();
        let mut acc = vec![Rational::zero(); w];
        add_signed(&mut acc, n, &eval_alternating(f, n, g, w, &targs));
        for p in 0..n {
            let mut args = targs.clone();
            args[p] = basis_vec(g, tuple[p]);
            let val = eval_alternating(f, n, g, w, &args);
            add_signed(&mut acc, n + 1, &r.curly_t().mul_vec(&val));
        }
        out[ti * w..(ti + 1) * w].clone_from_slice(&acc);
    }
    out
}

/// Full Rota-Baxter coboundary D(f, θ) = (d_CE f, ∂θ + h_T f) as the block
/// matrix [[d_CE, 0], [h_T, ∂]] from degree n to degree n+1.
pub fn rb_coboundary_matrix(r: &RBRepresentation, degree: usize) -> Matrix {
    assert!(degree >= 1, "coboundary needs degree >= 1");
    let scheme = RBCochainScheme::new(r, degree);
    let next = scheme.at_degree(degree + 1);
    let (f_in, theta_in) = (scheme.f_dim(), scheme.theta_dim());
    let f_out = next.f_dim();
    let mut columns = Vec::with_capacity(f_in + theta_in);
    for u in 0..f_in {
        let mut f = vec![Rational::zero(); f_in];
        f[u] = Rational::from_integer(1.into());
        let mut col = d_ce_apply(r.rho_w(), degree, &f);
        col.extend(rb_ht_apply(r, degree, &f));
        columns.push(col);
    }
    for u in 0..theta_in {
        let mut theta = vec![Rational::zero(); theta_in];
        theta[u] = Rational::from_integer(1.into());
        let mut col = vec![Rational::zero(); f_out];
        col.extend(rb_partial_apply(r, degree, &theta));
        columns.push(col);
    }
    matrix_from_columns(next.total_dim(), columns)
}

fn rb_coboundary_or_empty(r: &RBRepresentation, n: usize) -> Matrix {
    if n == 0 {
        Matrix::zeros(RBCochainScheme::new(r, 1).total_dim(), 0)
    } else {
        rb_coboundary_matrix(r, n)
    }
}

fn rb_dce_or_empty(r: &RBRepresentation, n: usize) -> Matrix {
    if n == 0 {
        return Matrix::zeros(RBCochainScheme::new(r, 1).f_dim(), 0);
    }
    let scheme = RBCochainScheme::new(r, n);
    let cols = scheme.f_dim();
    let mut columns = Vec::with_capacity(cols);
    for u in 0..cols {
        let mut f = vec![Rational::zero(); cols];
        f[u] = Rational::from_integer(1.into());
        columns.push(d_ce_apply(r.rho_w(), n, &f));
    }
    matrix_from_columns(scheme.at_degree(n + 1).f_dim(), columns)
}

fn rb_partial_or_empty(r: &RBRepresentation, n: usize) -> Matrix {
    if n == 0 {
        return Matrix::zeros(RBCochainScheme::new(r, 1).theta_dim(), 0);
    }
    let scheme = RBCochainScheme::new(r, n);
    let cols = scheme.theta_dim();
    let mut columns = Vec::with_capacity(cols);
    for u in 0..cols {
        let mut theta = vec![Rational::zero(); cols];
        theta[u] = Rational::from_integer(1.into());
        columns.push(rb_partial_apply(r, n, &theta));
    }
    matrix_from_columns(scheme.at_degree(n + 1).theta_dim(), columns)
}

/// Kernel/image/quotient dimensions of the Rota-Baxter complex and its
/// θ-subcomplex (∂) and f-quotient (d_CE) for degrees 1..=max_degree.
pub fn rb_cohomology_dims(
    r: &RBRepresentation,
    max_degree: usize,
    budget: usize,
) -> Result<CohomologyReport, CohomologyError> {
    assert!(max_degree >= 1, "max_degree must be at least 1");
    check_budget_degrees(
        (1..=max_degree + 1).map(|n| (n, RBCochainScheme::new(r, n).total_dim())),
        budget,
    )?;
    let mut degrees = Vec::with_capacity(max_degree);
    let mut prev_full = rb_coboundary_or_empty(r, 0);
    let mut prev_sub = rb_partial_or_empty(r, 0);
    let mut prev_quot = rb_dce_or_empty(r, 0);
    for n in 1..=max_degree {
        let full = rb_coboundary_matrix(r, n);
        let sub = rb_partial_or_empty(r, n);
        let quot = rb_dce_or_empty(r, n);
        let cocycles = full.kernel();
        let coboundaries = prev_full.image();
        let dim_h = quotient_dim_checked(&cocycles, &coboundaries)
            .expect("coboundaries are cocycles (D squares to zero)");
        let dim_h_sub = quotient_dim_checked(&sub.kernel(), &prev_sub.image())
            .expect("sub-coboundaries are sub-cocycles");
        let dim_h_quot = quotient_dim_checked(&quot.kernel(), &prev_quot.image())
            .expect("quotient coboundaries are quotient cocycles");
        degrees.push(DegreeReport {
            n,
            dim_cochains: RBCochainScheme::new(r, n).total_dim(),
            dim_cocycles: cocycles.dim(),
            dim_coboundaries: coboundaries.dim(),
            dim_h,
            dim_h_sub,
            dim_h_quot,
        });
        prev_full = full;
        prev_sub = sub;
        prev_quot = quot;
    }
    Ok(CohomologyReport { degrees })
}

/// Relative coefficient package realizing the Rota-Baxter complex inside the
/// relative one: base (g, ad, T), complex W →(𝒯)→ W, both actions ρ_W, and
/// μ(x) = ρ_W(x). The construction is validated against every axiom.
pub fn rb_embedding_coefficients(r: &RBRepresentation) -> Result<RRBRepresentation, AlgebraError> {
    let base = rb_to_rrb(r.base())?;
    let mu = (0..r.base().dim())
        .map(|k| r.rho_w().act(k).clone())
        .collect();
    RRBRepresentation::new(
        base,
        r.curly_t().clone(),
        r.rho_w().clone(),
        r.rho_w().clone(),
        mu,
    )
}

// Embedding of degree-n cochains: (f, θ) ↦ (f, f˜, θ) where
// f˜(x₁,…,xₙ₋₁, v) = f(x₁,…,xₙ₋₁, v) lands in the middle block through the
// inclusion of alternating n-forms into (n−1)-alternating ⊗ linear maps.
fn rb_embedding_matrix(r: &RBRepresentation, pack: &RRBRepresentation, n: usize) -> Matrix {
    let g = r.base().dim();
    let w = r.w_dim();
    let rb = RBCochainScheme::new(r, n);
    let rrb = CochainScheme::new(pack, n);
    let mut m = Matrix::zeros(rrb.total_dim(), rb.total_dim());
    let one = Rational::from_integer(1.into());
    for i in 0..rb.f_dim() {
        m.set(i, i, one.clone());
    }
    for (ui, u) in increasing_tuples(g, n - 1).iter().enumerate() {
        for l in 0..g {
            if u.contains(&l) {
                continue;
            }
            let mut joined: Vec<usize> = u.clone();
            joined.push(l);
            let sign = sort_with_sign(&mut joined).expect("no repeats");
            for t in 0..w {
                let row = rrb.fh_dim() + (ui * g + l) * w + t;
                let col = tuple_rank(&joined, g) * w + t;
                m.set(row, col, if sign < 0 { -one.clone() } else { one.clone() });
            }
        }
    }
    for j in 0..rb.theta_dim() {
        m.set(rrb.fh_dim() + rrb.fw_dim() + j, rb.f_dim() + j, one.clone());
    }
    m
}

/// Verifies that the cochain embedding intertwines the Rota-Baxter coboundary
/// with the relative one, degree by degree: D_rel(n)·E(n) = E(n+1)·D_RB(n).
pub fn rb_embedding_check(
    r: &RBRepresentation,
    max_degree: usize,
    budget: usize,
) -> Result<EmbeddingReport, CohomologyError> {
    assert!(max_degree >= 1, "max_degree must be at least 1");
    let pack = rb_embedding_coefficients(r)
        .map_err(|e| CohomologyError::Mismatch(format!("embedding coefficients invalid: {e}")))?;
    check_budget_degrees(
        (1..=max_degree + 1).map(|n| {
            let dim = RBCochainScheme::new(r, n)
                .total_dim()
                .max(CochainScheme::new(&pack, n).total_dim());
            (n, dim)
        }),
        budget,
    )?;
    let mut degrees = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let lhs =
            coboundary_matrix(&CochainScheme::new(&pack, n)).mul(&rb_embedding_matrix(r, &pack, n));
        let rhs = rb_embedding_matrix(r, &pack, n + 1).mul(&rb_coboundary_matrix(r, n));
        degrees.push((n, lhs == rhs));
    }
    let commutes = degrees.iter().all(|&(_, ok)| ok);
    Ok(EmbeddingReport { degrees, commutes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::{LieAlgebra, LinearRep};
    use crate::cohomology::DEFAULT_BUDGET;
    use crate::rrb_structures::{adjoint_rb_rep, rb_derivation_space, RBAlgebra};
    use crate::samples;

    fn affine_rb_adjoint() -> RBRepresentation {
        adjoint_rb_rep(&samples::affine_rb())
    }

    #[test]
    fn cochain_dims() {
        let r = affine_rb_adjoint();
        let dims: Vec<usize> = (0..=4)
            .map(|n| rb_cochain_dim(&RBCochainScheme::new(&r, n)))
            .collect();
        // Hom(∧ⁿg, g) ⊕ Hom(∧ⁿ⁻¹g, g) over dim-2 g: 0, 4, 2+4, 0+2, 0.
        assert_eq!(dims, vec![0, 4, 6, 2, 0]);
    }

    #[test]
    fn zero_structure_means_zero_coboundary_and_full_cohomology() {
        let g = LieAlgebra::abelian(2);
        let a = RBAlgebra::new(g.clone(), Matrix::zeros(2, 2)).unwrap();
        let rep = LinearRep::new(g, vec![Matrix::zeros(1, 1); 2]).unwrap();
        let r = RBRepresentation::new(a, Matrix::zeros(1, 1), rep).unwrap();
        for n in 1..=3 {
            assert!(rb_coboundary_matrix(&r, n).is_zero());
        }
        let report = rb_cohomology_dims(&r, 3, DEFAULT_BUDGET).unwrap();
        let h: Vec<usize> = report.degrees.iter().map(|d| d.dim_h).collect();
        assert_eq!(h, vec![2, 3, 1]);
    }

    #[test]
    fn degree_one_matrix_with_zero_representation_probes_only_t() {
        // ρ_W = 0 and 𝒯 = 0 kill every action term: d_CE f(e1,e2) = −f([e1,e2])
        // and h_T(f)(x) = −f(Tx), with T(e1) = e2, T(e2) = 0.
        let a = samples::affine_rb();
        let rep = LinearRep::new(a.g().clone(), vec![Matrix::zeros(1, 1); 2]).unwrap();
        let r = RBRepresentation::new(a, Matrix::zeros(1, 1), rep).unwrap();
        let d1 = rb_coboundary_matrix(&r, 1);
        let expected = Matrix::from_i64(&[&[0, -1], &[0, -1], &[0, 0]]);
        assert_eq!(d1, expected);
    }

    #[test]
    fn coboundary_squares_to_zero_on_affine_adjoint() {
        let r = affine_rb_adjoint();
        for n in 1..=3 {
            let d_n = rb_coboundary_matrix(&r, n);
            let d_next = rb_coboundary_matrix(&r, n + 1);
            assert!(d_next.mul(&d_n).is_zero(), "D² != 0 at degree {n}");
        }
    }

    #[test]
    fn h1_is_the_operator_commuting_derivation_space() {
        let a = samples::affine_rb();
        let r = adjoint_rb_rep(&a);
        let report = rb_cohomology_dims(&r, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.degrees[0].dim_coboundaries, 0);
        assert_eq!(report.degrees[0].dim_h, rb_derivation_space(&a).dim());
        assert_eq!(report.degrees[0].dim_h, 1);
    }

    #[test]
    fn embedding_commutes_on_fixtures() {
        let r = affine_rb_adjoint();
        let report = rb_embedding_check(&r, 3, DEFAULT_BUDGET).unwrap();
        assert!(report.commutes);
        assert_eq!(report.degrees.len(), 3);

        let g = LieAlgebra::abelian(2);
        let a = RBAlgebra::new(g.clone(), Matrix::zeros(2, 2)).unwrap();
        let rep = LinearRep::new(g, vec![Matrix::zeros(1, 1); 2]).unwrap();
        let r = RBRepresentation::new(a, Matrix::zeros(1, 1), rep).unwrap();
        assert!(rb_embedding_check(&r, 2, DEFAULT_BUDGET).unwrap().commutes);
    }

    #[test]
    fn budget_is_enforced() {
        let r = affine_rb_adjoint();
        let err = rb_cohomology_dims(&r, 3, 3).unwrap_err();
        assert_eq!(
            err,
            CohomologyError::BudgetExceeded {
                degree: 1,
                required: 4,
                budget: 3
            }
        );
    }
}
