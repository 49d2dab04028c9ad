//! Cochain complexes of relative Rota-Baxter Lie algebras as explicit
//! rational matrices: the coboundary blocks δ, ∂, h_T, the assembled
//! operator D(f, θ) = (δf, ∂θ + h_T f), cohomology dimensions, membership
//! predicates, the long exact sequence, the adjoint-coefficient complex, the
//! pre-Lie comparison map, and the plain Rota-Baxter variants.
//!
//! Basis conventions (shared by every block): exterior powers ∧ᵏ are indexed
//! by strictly increasing tuples in lexicographic order; flattened layouts
//! run tuple index slowest and target coordinate fastest, with a middle
//! tensor index where present. Degree n ≥ 2 cochains have three blocks
//! (f_ℋ, f_W, θ) of sizes C(|g|,n)·|ℋ|, C(|g|,n−1)·|V|·|W|, C(|V|,n−1)·|ℋ|;
//! degree 1 drops the θ block; degree 0 is zero.

pub mod combinatorics;

mod adjoint;
mod embedding;
mod les;
mod prelie;
mod rb;

pub use adjoint::adjoint_complex_matrix;
pub use embedding::{rrb_semidirect_embedding_check, EmbeddingReport};
pub use les::{les_report, LesNode, LesReport};
pub use prelie::{prelie_coboundary, xi_commutes, xi_matrix, XiReport};
pub use rb::{
    rb_coboundary_matrix, rb_cochain_dim, rb_cohomology_dims, rb_embedding_check,
    rb_embedding_coefficients, RBCochainScheme,
};

use crate::algebra_core::{basis_vec, LinearRep};
use crate::exact_linalg::{quotient_dim_checked, rationals_to_strings, Matrix, Rational};
use crate::rrb_structures::RRBRepresentation;
use combinatorics::{binomial, increasing_tuples, sort_with_sign, tuple_rank};
use num::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Default cap on the total cochain dimension at any degree touched by a
/// computation. Binomial growth is the real cost; refuse loudly and early.
pub const DEFAULT_BUDGET: usize = 20000;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("budget exceeded: degree {degree} needs {required} coordinates, budget is {budget}")]
    BudgetExceeded {
        degree: usize,
        required: usize,
        budget: usize,
    },
    #[error("cochain mismatch: {0}")]
    Mismatch(String),
}

/// Degree-stamped view of a coefficient package, carrying the block layout.
#[derive(Debug, Clone, Copy)]
pub struct CochainScheme<'a> {
    coeffs: &'a RRBRepresentation,
    degree: usize,
}

impl<'a> CochainScheme<'a> {
    pub fn new(coeffs: &'a RRBRepresentation, degree: usize) -> Self {
        CochainScheme { coeffs, degree }
    }

    pub fn coeffs(&self) -> &'a RRBRepresentation {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn at_degree(&self, degree: usize) -> Self {
        CochainScheme {
            coeffs: self.coeffs,
            degree,
        }
    }

    /// Hom(∧ⁿg, ℋ) block size.
    pub fn fh_dim(&self) -> usize {
        if self.degree == 0 {
            return 0;
        }
        binomial(self.coeffs.base().g_dim(), self.degree) * self.coeffs.h_dim()
    }

    /// Hom(∧ⁿ⁻¹g⊗V, W) block size.
    pub fn fw_dim(&self) -> usize {
        if self.degree == 0 {
            return 0;
        }
        binomial(self.coeffs.base().g_dim(), self.degree - 1)
            * self.coeffs.base().v_dim()
            * self.coeffs.w_dim()
    }

    /// Hom(∧ⁿ⁻¹V, ℋ) block size; empty below degree 2.
    pub fn theta_dim(&self) -> usize {
        if self.degree < 2 {
            return 0;
        }
        binomial(self.coeffs.base().v_dim(), self.degree - 1) * self.coeffs.h_dim()
    }

    pub fn fbar_dim(&self) -> usize {
        self.fh_dim() + self.fw_dim()
    }

    pub fn layout(&self) -> (usize, usize, usize) {
        (self.fh_dim(), self.fw_dim(), self.theta_dim())
    }

    pub fn total_dim(&self) -> usize {
        self.fh_dim() + self.fw_dim() + self.theta_dim()
    }
}

/// Total coordinate count of the degree-n cochain space.
pub fn cochain_dim(scheme: &CochainScheme) -> usize {
    scheme.total_dim()
}

/// A cochain as its degree plus flat coordinates (blocks f_ℋ, f_W, θ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl Cochain {
    pub fn zero(scheme: &CochainScheme) -> Self {
        Cochain {
            degree: scheme.degree(),
            coords: vec![Rational::zero(); scheme.total_dim()],
        }
    }
}

impl Serialize for Cochain {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("coords", &rationals_to_strings(&self.coords))?;
        map.serialize_entry("degree", &self.degree)?;
        map.end()
    }
}

pub(crate) fn check_budget_degrees(
    dims: impl Iterator<Item = (usize, usize)>,
    budget: usize,
) -> Result<(), CohomologyError> {
    for (degree, required) in dims {
        if required > budget {
            return Err(CohomologyError::BudgetExceeded {
                degree,
                required,
                budget,
            });
        }
    }
    Ok(())
}

/// acc += sign · v, with sign interpreted as parity of `pow`.
pub(crate) fn add_signed(acc: &mut [Rational], pow: usize, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if pow % 2 == 0 {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += b;
        }
    } else {
        for (a, b) in acc.iter_mut().zip(v) {
            *a -= b;
        }
    }
}

/// Evaluates the multilinear alternating map with the given flat coefficients
/// (tuple slowest, target fastest) on arbitrary coordinate-vector arguments.
pub(crate) fn eval_alternating(
    coeffs: &[Rational],
    arity: usize,
    arg_dim: usize,
    target_dim: usize,
    args: &[Vec<Rational>],
) -> Vec<Rational> {
    debug_assert_eq!(args.len(), arity);
    debug_assert_eq!(coeffs.len(), binomial(arg_dim, arity) * target_dim);
    let mut out = vec![Rational::zero(); target_dim];
    if arity == 0 {
        out.clone_from_slice(coeffs);
        return out;
    }
    if arity > arg_dim {
        return out;
    }
    let mut idx = vec![0usize; arity];
    'outer: loop {
        let mut coef = Rational::from_integer(1.into());
        let mut zero = false;
        for (p, &i) in idx.iter().enumerate() {
            if args[p][i].is_zero() {
                zero = true;
                break;
            }
            coef *= &args[p][i];
        }
        if !zero {
            let mut sorted = idx.clone();
            if let Some(sign) = sort_with_sign(&mut sorted) {
                let base = tuple_rank(&sorted, arg_dim) * target_dim;
                if sign < 0 {
                    coef = -coef;
                }
                for t in 0..target_dim {
                    if !coeffs[base + t].is_zero() {
                        out[t] += &coef * &coeffs[base + t];
                    }
                }
            }
        }
        for p in (0..arity).rev() {
            idx[p] += 1;
            if idx[p] < arg_dim {
                continue 'outer;
            }
            idx[p] = 0;
        }
        break;
    }
    out
}

/// Same, for maps alternating in `arity` arguments and linear in one extra
/// tensor argument (layout (tuple·tensor_dim + tensor_idx)·target + t).
pub(crate) fn eval_alt_tensor(
    coeffs: &[Rational],
    arity: usize,
    arg_dim: usize,
    tensor_dim: usize,
    target_dim: usize,
    alt_args: &[Vec<Rational>],
    tensor_arg: &[Rational],
) -> Vec<Rational> {
    debug_assert_eq!(
        coeffs.len(),
        binomial(arg_dim, arity) * tensor_dim * target_dim
    );
    let mut out = vec![Rational::zero(); target_dim];
    for (l, c) in tensor_arg.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let stride = tensor_dim * target_dim;
        let slice: Vec<Rational> = (0..binomial(arg_dim, arity))
            .flat_map(|tp| {
                coeffs[tp * stride + l * target_dim..tp * stride + (l + 1) * target_dim]
                    .iter()
                    .cloned()
            })
            .collect();
        let part = eval_alternating(&slice, arity, arg_dim, target_dim, alt_args);
        for (o, p) in out.iter_mut().zip(&part) {
            *o += c * p;
        }
    }
    out
}

pub(crate) fn matrix_from_columns(rows: usize, columns: Vec<Vec<Rational>>) -> Matrix {
    let cols = columns.len();
    let mut m = Matrix::zeros(rows, cols);
    for (j, col) in columns.iter().enumerate() {
        debug_assert_eq!(col.len(), rows);
        for (i, val) in col.iter().enumerate() {
            if !val.is_zero() {
                m.set(i, j, val.clone());
            }
        }
    }
    m
}

/// Chevalley-Eilenberg coboundary of an n-cochain in Hom(∧ⁿg, M) for the
/// representation `rep` on M, returned as the flat (n+1)-cochain.
pub(crate) fn d_ce_apply(rep: &LinearRep, n: usize, coeffs: &[Rational]) -> Vec<Rational> {
    let g = rep.algebra().dim();
    let m = rep.space_dim();
    let out_tuples = increasing_tuples(g, n + 1);
    let mut out = vec![Rational::zero(); out_tuples.len() * m];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let mut acc = vec![Rational::zero(); m];
        for p in 0..n + 1 {
            let rest: Vec<Vec<Rational>> = tuple
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, &i)| basis_vec(g, i))
                .collect();
            let val = eval_alternating(coeffs, n, g, m, &rest);
            add_signed(&mut acc, p, &rep.act(tuple[p]).mul_vec(&val));
        }
        for p in 0..n + 1 {
            for q in p + 1..n + 1 {
                let mut args = vec![rep.algebra().bracket_basis(tuple[p], tuple[q])];
                args.extend(
                    tuple
                        .iter()
                        .enumerate()
                        .filter(|(r, _)| *r != p && *r != q)
                        .map(|(_, &i)| basis_vec(g, i)),
                );
                let val = eval_alternating(coeffs, n, g, m, &args);
                add_signed(&mut acc, p + q, &val);
            }
        }
        out[ti * m..(ti + 1) * m].clone_from_slice(&acc);
    }
    out
}

/// δ(f_ℋ, f_W) of a degree-n pair, returned as the two output blocks:
/// (δf)_ℋ = d_CE f_ℋ for (ℋ, ρ_ℋ), and (δf)_W from the displayed sum with the
/// bracket, μ(v)f_ℋ, and ρ_W/ρ action terms.
pub(crate) fn delta_apply(
    r: &RRBRepresentation,
    n: usize,
    fh: &[Rational],
    fw: &[Rational],
) -> (Vec<Rational>, Vec<Rational>) {
    let (g, v) = (r.base().g_dim(), r.base().v_dim());
    let (h, w) = (r.h_dim(), r.w_dim());
    let lie = r.base().g();

    let out_fh = d_ce_apply(r.rho_h(), n, fh);

    let out_tuples = increasing_tuples(g, n);
    let mut out_fw = vec![Rational::zero(); out_tuples.len() * v * w];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let fh_here = eval_alternating(
            fh,
            n,
            g,
            h,
            &tuple.iter().map(|&i| basis_vec(g, i)).collect::<Vec<_>>(),
        );
        for k in 0..v {
            let mut acc = vec![Rational::zero(); w];
            for p in 0..n {
                for q in p + 1..n {
                    let mut args = vec![lie.bracket_basis(tuple[p], tuple[q])];
                    args.extend(
                        tuple
                            .iter()
                            .enumerate()
                            .filter(|(s, _)| *s != p && *s != q)
                            .map(|(_, &i)| basis_vec(g, i)),
                    );
                    let val = eval_alt_tensor(fw, n - 1, g, v, w, &args, &basis_vec(v, k));
                    add_signed(&mut acc, p + q, &val);
                }
            }
            // −(−1)^{n−1} μ(v) f_ℋ(x₁,…,xₙ) = (−1)ⁿ μ(v) f_ℋ(…).
            add_signed(&mut acc, n, &r.mu_basis(k).mul_vec(&fh_here));
            for p in 0..n {
                let rest: Vec<Vec<Rational>> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != p)
                    .map(|(_, &i)| basis_vec(g, i))
                    .collect();
                let val = eval_alt_tensor(fw, n - 1, g, v, w, &rest, &basis_vec(v, k));
                add_signed(&mut acc, p, &r.rho_w().act(tuple[p]).mul_vec(&val));
                let moved = r.base().rho().act(tuple[p]).col(k);
                let val2 = eval_alt_tensor(fw, n - 1, g, v, w, &rest, &moved);
                add_signed(&mut acc, p + 1, &val2);
            }
            let base = (ti * v + k) * w;
            out_fw[base..base + w].clone_from_slice(&acc);
        }
    }
    (out_fh, out_fw)
}

/// ∂θ of a degree-n θ-block (θ is (n−1)-ary), returned as the degree-(n+1)
/// θ-block: the ρ_ℋ(Tv_i), 𝒯μ(v_i), and ρ(Tv_i)v_j terms.
pub(crate) fn partial_apply(r: &RRBRepresentation, n: usize, theta: &[Rational]) -> Vec<Rational> {
    let v = r.base().v_dim();
    let h = r.h_dim();
    let out_tuples = increasing_tuples(v, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * h];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let mut acc = vec![Rational::zero(); h];
        for p in 0..n {
            let rest: Vec<Vec<Rational>> = tuple
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, &i)| basis_vec(v, i))
                .collect();
            let val = eval_alternating(theta, n - 1, v, h, &rest);
            let tv = r.base().t_basis(tuple[p]);
            add_signed(&mut acc, p, &r.rho_h().act_vec(&tv).mul_vec(&val));
            add_signed(
                &mut acc,
                p + 1,
                &r.curly_t().mul_vec(&r.mu_basis(tuple[p]).mul_vec(&val)),
            );
        }
        for p in 0..n {
            for q in p + 1..n {
                let tvp = r.base().t_basis(tuple[p]);
                let tvq = r.base().t_basis(tuple[q]);
                let first: Vec<Rational> = {
                    let a = r.base().rho().act_vec(&tvp).col(tuple[q]);
                    let b = r.base().rho().act_vec(&tvq).col(tuple[p]);
                    a.iter().zip(&b).map(|(x, y)| x - y).collect()
                };
                let mut args = vec![first];
                args.extend(
                    tuple
                        .iter()
                        .enumerate()
                        .filter(|(s, _)| *s != p && *s != q)
                        .map(|(_, &i)| basis_vec(v, i)),
                );
                let val = eval_alternating(theta, n - 1, v, h, &args);
                add_signed(&mut acc, p + q, &val);
            }
        }
        out[ti * h..(ti + 1) * h].clone_from_slice(&acc);
    }
    out
}

/// h_T(f_ℋ, f_W) of a degree-n pair, returned as the degree-(n+1) θ-block:
/// (−1)ⁿ f_ℋ(Tv₁,…,Tvₙ) + Σᵢ (−1)^{i+1} 𝒯 f_W(Tv₁,…,T̂vᵢ,…,Tvₙ, vᵢ).
pub(crate) fn ht_apply(
    r: &RRBRepresentation,
    n: usize,
    fh: &[Rational],
    fw: &[Rational],
) -> Vec<Rational> {
    let (g, v) = (r.base().g_dim(), r.base().v_dim());
    let (h, w) = (r.h_dim(), r.w_dim());
    let out_tuples = increasing_tuples(v, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * h];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let targs: Vec<Vec<Rational>> = tuple.iter().map(|&i| r.base().t_basis(i)).collect();
        let mut acc = vec![Rational::zero(); h];
        add_signed(&mut acc, n, &eval_alternating(fh, n, g, h, &targs));
        for p in 0..n {
            let rest: Vec<Vec<Rational>> = targs
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, a)| a.clone())
                .collect();
            let val: Vec<Rational> =
                eval_alt_tensor(fw, n - 1, g, v, w, &rest, &basis_vec(v, tuple[p]));
            add_signed(&mut acc, p, &r.curly_t().mul_vec(&val));
        }
        out[ti * h..(ti + 1) * h].clone_from_slice(&acc);
    }
    out
}

/// Matrix of δ: 𝔠̄ⁿ → 𝔠̄ⁿ⁺¹ in the fixed layout.
pub fn delta_matrix(scheme: &CochainScheme) -> Matrix {
    let n = scheme.degree();
    assert!(n >= 1, "delta needs degree >= 1");
    let r = scheme.coeffs();
    let next = scheme.at_degree(n + 1);
    let (fh_in, fw_in) = (scheme.fh_dim(), scheme.fw_dim());
    let rows = next.fbar_dim();
    let mut columns = Vec::with_capacity(fh_in + fw_in);
    for u in 0..fh_in + fw_in {
        let mut fh = vec![Rational::zero(); fh_in];
        let mut fw = vec![Rational::zero(); fw_in];
        if u < fh_in {
            fh[u] = Rational::from_integer(1.into());
        } else {
            fw[u - fh_in] = Rational::from_integer(1.into());
        }
        let (ofh, ofw) = delta_apply(r, n, &fh, &fw);
        let mut col = ofh;
        col.extend(ofw);
        columns.push(col);
    }
    matrix_from_columns(rows, columns)
}

/// Matrix of ∂: 𝔠̃ⁿ → 𝔠̃ⁿ⁺¹ (the zero-width map out of degree 1).
pub fn partial_matrix(scheme: &CochainScheme) -> Matrix {
    let n = scheme.degree();
    assert!(n >= 1, "partial needs degree >= 1");
    let r = scheme.coeffs();
    let rows = scheme.at_degree(n + 1).theta_dim();
    let cols = scheme.theta_dim();
    let mut columns = Vec::with_capacity(cols);
    for u in 0..cols {
        let mut theta = vec![Rational::zero(); cols];
        theta[u] = Rational::from_integer(1.into());
        columns.push(partial_apply(r, n, &theta));
    }
    matrix_from_columns(rows, columns)
}

/// Matrix of h_T: 𝔠̄ⁿ → 𝔠̃ⁿ⁺¹.
pub fn ht_matrix(scheme: &CochainScheme) -> Matrix {
    let n = scheme.degree();
    assert!(n >= 1, "h_T needs degree >= 1");
    let r = scheme.coeffs();
    let (fh_in, fw_in) = (scheme.fh_dim(), scheme.fw_dim());
    let rows = scheme.at_degree(n + 1).theta_dim();
    let mut columns = Vec::with_capacity(fh_in + fw_in);
    for u in 0..fh_in + fw_in {
        let mut fh = vec![Rational::zero(); fh_in];
        let mut fw = vec![Rational::zero(); fw_in];
        if u < fh_in {
            fh[u] = Rational::from_integer(1.into());
        } else {
            fw[u - fh_in] = Rational::from_integer(1.into());
        }
        columns.push(ht_apply(r, n, &fh, &fw));
    }
    matrix_from_columns(rows, columns)
}

/// Full coboundary D(f, θ) = (δf, ∂θ + h_T f) as the block matrix
/// [[δ, 0], [h_T, ∂]] from degree n to degree n+1.
pub fn coboundary_matrix(scheme: &CochainScheme) -> Matrix {
    let n = scheme.degree();
    assert!(n >= 1, "coboundary needs degree >= 1");
    let next = scheme.at_degree(n + 1);
    let mut d = Matrix::zeros(next.total_dim(), scheme.total_dim());
    d.set_block(0, 0, &delta_matrix(scheme));
    d.set_block(next.fbar_dim(), 0, &ht_matrix(scheme));
    d.set_block(next.fbar_dim(), scheme.fbar_dim(), &partial_matrix(scheme));
    d
}

/// D at any degree, with the degree-0 edge case (𝔠⁰ = 0) as a 0-column map.
pub(crate) fn coboundary_or_empty(r: &RRBRepresentation, n: usize) -> Matrix {
    if n == 0 {
        Matrix::zeros(CochainScheme::new(r, 1).total_dim(), 0)
    } else {
        coboundary_matrix(&CochainScheme::new(r, n))
    }
}

pub(crate) fn partial_or_empty(r: &RRBRepresentation, n: usize) -> Matrix {
    if n == 0 {
        Matrix::zeros(CochainScheme::new(r, 1).theta_dim(), 0)
    } else {
        partial_matrix(&CochainScheme::new(r, n))
    }
}

pub(crate) fn delta_or_empty(r: &RRBRepresentation, n: usize) -> Matrix {
    if n == 0 {
        Matrix::zeros(CochainScheme::new(r, 1).fbar_dim(), 0)
    } else {
        delta_matrix(&CochainScheme::new(r, n))
    }
}

/// Per-degree dimension data. `dim_H_sub` and `dim_H_quot` are the
/// cohomologies of the θ-subcomplex (𝔠̃, ∂) and the quotient complex (𝔠̄, δ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub n: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
    #[serde(rename = "dim_H_sub")]
    pub dim_h_sub: usize,
    #[serde(rename = "dim_H_quot")]
    pub dim_h_quot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub degrees: Vec<DegreeReport>,
}

/// Kernel/image/quotient dimensions of the full complex and its sub/quotient
/// pieces for degrees 1..=max_degree.
pub fn cohomology_dims(
    r: &RRBRepresentation,
    max_degree: usize,
    budget: usize,
) -> Result<CohomologyReport, CohomologyError> {
    assert!(max_degree >= 1, "max_degree must be at least 1");
    check_budget_degrees(
        (1..=max_degree + 1).map(|n| (n, CochainScheme::new(r, n).total_dim())),
        budget,
    )?;
    let mut degrees = Vec::with_capacity(max_degree);
    let mut prev_full = coboundary_or_empty(r, 0);
    let mut prev_sub = partial_or_empty(r, 0);
    let mut prev_quot = delta_or_empty(r, 0);
    for n in 1..=max_degree {
        let scheme = CochainScheme::new(r, n);
        let full = coboundary_matrix(&scheme);
        let sub = partial_matrix(&scheme);
        let quot = delta_matrix(&scheme);
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
            dim_cochains: scheme.total_dim(),
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

fn expect_len(r: &RRBRepresentation, c: &Cochain) -> Result<(), CohomologyError> {
    let want = CochainScheme::new(r, c.degree).total_dim();
    if c.coords.len() != want {
        return Err(CohomologyError::Mismatch(format!(
            "degree {} cochain needs {} coordinates, got {}",
            c.degree,
            want,
            c.coords.len()
        )));
    }
    Ok(())
}

/// D(c) = 0?
pub fn is_cocycle(r: &RRBRepresentation, c: &Cochain) -> Result<bool, CohomologyError> {
    expect_len(r, c)?;
    if c.degree == 0 {
        return Ok(true);
    }
    let d = coboundary_matrix(&CochainScheme::new(r, c.degree));
    Ok(d.mul_vec(&c.coords).iter().all(Rational::is_zero))
}

/// Some(preimage b with D(b) = c) when c is a coboundary, else None.
pub fn is_coboundary(
    r: &RRBRepresentation,
    c: &Cochain,
) -> Result<Option<Cochain>, CohomologyError> {
    expect_len(r, c)?;
    if c.degree == 0 {
        return Ok(Some(Cochain {
            degree: 0,
            coords: vec![],
        }));
    }
    if c.degree == 1 {
        // 𝔠⁰ = 0: there are no 1-coboundaries except zero.
        return Ok(if c.coords.iter().all(Rational::is_zero) {
            Some(Cochain {
                degree: 0,
                coords: vec![],
            })
        } else {
            None
        });
    }
    let d = coboundary_matrix(&CochainScheme::new(r, c.degree - 1));
    Ok(d.solve(&c.coords).map(|coords| Cochain {
        degree: c.degree - 1,
        coords,
    }))
}

/// Some(b with c1 − c2 = D(b)) when the classes agree, else None.
pub fn cohomologous(
    r: &RRBRepresentation,
    c1: &Cochain,
    c2: &Cochain,
) -> Result<Option<Cochain>, CohomologyError> {
    if c1.degree != c2.degree {
        return Err(CohomologyError::Mismatch(format!(
            "degrees differ: {} vs {}",
            c1.degree, c2.degree
        )));
    }
    expect_len(r, c1)?;
    expect_len(r, c2)?;
    let diff = Cochain {
        degree: c1.degree,
        coords: c1
            .coords
            .iter()
            .zip(&c2.coords)
            .map(|(a, b)| a - b)
            .collect(),
    };
    is_coboundary(r, &diff)
}

pub(crate) fn serialize_degree_flags<S: Serializer>(
    flags: &[(usize, bool)],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        commutes: bool,
    }
    let mut seq = serializer.serialize_seq(Some(flags.len()))?;
    for &(n, commutes) in flags {
        seq.serialize_element(&Row { n, commutes })?;
    }
    seq.end()
}
