//! Coboundary of the adjoint-coefficient complex, transcribed from its own
//! displayed formulas (bracket-valued, with the ρ(f_g(…))v correction term)
//! rather than by specializing the general operator. The two assemblies are
//! compared entry-for-entry in tests; keeping the code paths separate is the
//! point.

use super::combinatorics::{binomial, increasing_tuples};
use super::{add_signed, eval_alt_tensor, eval_alternating, matrix_from_columns};
use crate::algebra_core::basis_vec;
use crate::exact_linalg::{Matrix, Rational};
use crate::rrb_structures::RRBAlgebra;
use num::Zero;

struct AdjointLayout {
    g: usize,
    v: usize,
}

impl AdjointLayout {
    fn fg_dim(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            binomial(self.g, n) * self.g
        }
    }

    fn fv_dim(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            binomial(self.g, n - 1) * self.v * self.v
        }
    }

    fn theta_dim(&self, n: usize) -> usize {
        if n < 2 {
            0
        } else {
            binomial(self.v, n - 1) * self.g
        }
    }

    fn total(&self, n: usize) -> usize {
        self.fg_dim(n) + self.fv_dim(n) + self.theta_dim(n)
    }
}

fn delta_apply_adjoint(
    a: &RRBAlgebra,
    n: usize,
    fg: &[Rational],
    fv: &[Rational],
) -> (Vec<Rational>, Vec<Rational>) {
    let lay = AdjointLayout {
        g: a.g_dim(),
        v: a.v_dim(),
    };
    let (g, v) = (lay.g, lay.v);
    let lie = a.g();

    // (δf)_g(x₁,…,x_{n+1}) = Σ (−1)^{i+1}[x_i, f_g(…x̂_i…)] + Σ (−1)^{i+j} f_g([x_i,x_j],…).
    let out_tuples = increasing_tuples(g, n + 1);
    let mut out_fg = vec![Rational::zero(); out_tuples.len() * g];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let mut acc = vec![Rational::zero(); g];
        for p in 0..n + 1 {
            let rest: Vec<Vec<Rational>> = tuple
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, &i)| basis_vec(g, i))
                .collect();
            let val = eval_alternating(fg, n, g, g, &rest);
            add_signed(&mut acc, p, &lie.bracket(&basis_vec(g, tuple[p]), &val));
        }
        for p in 0..n + 1 {
            for q in p + 1..n + 1 {
                let mut args = vec![lie.bracket_basis(tuple[p], tuple[q])];
                args.extend(
                    tuple
                        .iter()
                        .enumerate()
                        .filter(|(s, _)| *s != p && *s != q)
                        .map(|(_, &i)| basis_vec(g, i)),
                );
                add_signed(&mut acc, p + q, &eval_alternating(fg, n, g, g, &args));
            }
        }
        out_fg[ti * g..(ti + 1) * g].clone_from_slice(&acc);
    }

    // (δf)_V(x₁,…,xₙ,v) = Σ_{i<j}(−1)^{i+j} f_V([x_i,x_j],…,v)
    //   + (−1)^{n−1} ρ(f_g(x₁,…,xₙ))v
    //   + Σ (−1)^{i+1}(ρ(x_i) f_V(…x̂_i…,v) − f_V(…x̂_i…, ρ(x_i)v)).
    let out_tuples = increasing_tuples(g, n);
    let mut out_fv = vec![Rational::zero(); out_tuples.len() * v * v];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let fg_here = eval_alternating(
            fg,
            n,
            g,
            g,
            &tuple.iter().map(|&i| basis_vec(g, i)).collect::<Vec<_>>(),
        );
        let rho_fg = a.rho().act_vec(&fg_here);
        for k in 0..v {
            let mut acc = vec![Rational::zero(); v];
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
                    let val = eval_alt_tensor(fv, n - 1, g, v, v, &args, &basis_vec(v, k));
                    add_signed(&mut acc, p + q, &val);
                }
            }
            add_signed(&mut acc, n - 1, &rho_fg.col(k));
            for p in 0..n {
                let rest: Vec<Vec<Rational>> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != p)
                    .map(|(_, &i)| basis_vec(g, i))
                    .collect();
                let val = eval_alt_tensor(fv, n - 1, g, v, v, &rest, &basis_vec(v, k));
                add_signed(&mut acc, p, &a.rho().act(tuple[p]).mul_vec(&val));
                let moved = a.rho().act(tuple[p]).col(k);
                let val2 = eval_alt_tensor(fv, n - 1, g, v, v, &rest, &moved);
                add_signed(&mut acc, p + 1, &val2);
            }
            let base = (ti * v + k) * v;
            out_fv[base..base + v].clone_from_slice(&acc);
        }
    }
    (out_fg, out_fv)
}

// ∂θ(v₁,…,vₙ) = Σ (−1)^{i+1}[T(v_i), θ(…v̂_i…)] + Σ (−1)^{i+1} T(ρ(θ(…v̂_i…))v_i)
//   + Σ_{i<j}(−1)^{i+j} θ(ρ(Tv_i)v_j − ρ(Tv_j)v_i, …).
fn partial_apply_adjoint(a: &RRBAlgebra, n: usize, theta: &[Rational]) -> Vec<Rational> {
    let (g, v) = (a.g_dim(), a.v_dim());
    let lie = a.g();
    let out_tuples = increasing_tuples(v, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * g];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let mut acc = vec![Rational::zero(); g];
        for p in 0..n {
            let rest: Vec<Vec<Rational>> = tuple
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, &i)| basis_vec(v, i))
                .collect();
            let val = eval_alternating(theta, n - 1, v, g, &rest);
            add_signed(&mut acc, p, &lie.bracket(&a.t_basis(tuple[p]), &val));
            let rho_theta_v = a.rho().act_vec(&val).col(tuple[p]);
            add_signed(&mut acc, p, &a.t_apply(&rho_theta_v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let first: Vec<Rational> = {
                    let x = a.rho().act_vec(&a.t_basis(tuple[p])).col(tuple[q]);
                    let y = a.rho().act_vec(&a.t_basis(tuple[q])).col(tuple[p]);
                    x.iter().zip(&y).map(|(s, t)| s - t).collect()
                };
                let mut args = vec![first];
                args.extend(
                    tuple
                        .iter()
                        .enumerate()
                        .filter(|(s, _)| *s != p && *s != q)
                        .map(|(_, &i)| basis_vec(v, i)),
                );
                add_signed(
                    &mut acc,
                    p + q,
                    &eval_alternating(theta, n - 1, v, g, &args),
                );
            }
        }
        out[ti * g..(ti + 1) * g].clone_from_slice(&acc);
    }
    out
}

// h_T(f)(v₁,…,vₙ) = (−1)ⁿ f_g(Tv₁,…,Tvₙ) + Σ (−1)^{i+1} T(f_V(Tv₁,…,T̂v_i,…,Tvₙ, v_i)).
fn ht_apply_adjoint(a: &RRBAlgebra, n: usize, fg: &[Rational], fv: &[Rational]) -> Vec<Rational> {
    let (g, v) = (a.g_dim(), a.v_dim());
    let out_tuples = increasing_tuples(v, n);
    let mut out = vec![Rational::zero(); out_tuples.len() * g];
    for (ti, tuple) in out_tuples.iter().enumerate() {
        let targs: Vec<Vec<Rational>> = tuple.iter().map(|&i| a.t_basis(i)).collect();
        let mut acc = vec![Rational::zero(); g];
        add_signed(&mut acc, n, &eval_alternating(fg, n, g, g, &targs));
        for p in 0..n {
            let rest: Vec<Vec<Rational>> = targs
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != p)
                .map(|(_, x)| x.clone())
                .collect();
            let val = eval_alt_tensor(fv, n - 1, g, v, v, &rest, &basis_vec(v, tuple[p]));
            add_signed(&mut acc, p, &a.t_apply(&val));
        }
        out[ti * g..(ti + 1) * g].clone_from_slice(&acc);
    }
    out
}

/// Full adjoint-complex coboundary at the given degree, assembled from the
/// adjoint-specific formulas. Layout matches the general complex with
/// ℋ = g and W = V.
pub fn adjoint_complex_matrix(a: &RRBAlgebra, degree: usize) -> Matrix {
    assert!(degree >= 1, "coboundary needs degree >= 1");
    let lay = AdjointLayout {
        g: a.g_dim(),
        v: a.v_dim(),
    };
    let n = degree;
    let (fg_in, fv_in, th_in) = (lay.fg_dim(n), lay.fv_dim(n), lay.theta_dim(n));
    let rows = lay.total(n + 1);
    let fbar_out = lay.fg_dim(n + 1) + lay.fv_dim(n + 1);
    let mut columns = Vec::with_capacity(lay.total(n));
    for u in 0..fg_in + fv_in {
        let mut fg = vec![Rational::zero(); fg_in];
        let mut fv = vec![Rational::zero(); fv_in];
        if u < fg_in {
            fg[u] = Rational::from_integer(1.into());
        } else {
            fv[u - fg_in] = Rational::from_integer(1.into());
        }
        let (ofg, ofv) = delta_apply_adjoint(a, n, &fg, &fv);
        let mut col = ofg;
        col.extend(ofv);
        col.extend(ht_apply_adjoint(a, n, &fg, &fv));
        debug_assert_eq!(col.len(), rows);
        columns.push(col);
    }
    for u in 0..th_in {
        let mut theta = vec![Rational::zero(); th_in];
        theta[u] = Rational::from_integer(1.into());
        let mut col = vec![Rational::zero(); fbar_out];
        col.extend(partial_apply_adjoint(a, n, &theta));
        debug_assert_eq!(col.len(), rows);
        columns.push(col);
    }
    matrix_from_columns(rows, columns)
}
