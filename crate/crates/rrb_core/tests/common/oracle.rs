//! Independent re-computation of the coboundary matrices and of the
//! derivation-space dimensions, written against the displayed formulas with
//! none of the library's evaluation machinery: cochains become dense tables
//! over all index tuples, every evaluation is a full naive summation, and
//! ranks come from a scratch Gaussian elimination.

#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

use num::{BigInt, Zero};

use rrb_core::algebra_core::LinearRep;
use rrb_core::exact_linalg::{Matrix, Rational};
use rrb_core::rrb_structures::{RBAlgebra, RBRepresentation, RRBAlgebra, RRBRepresentation};

fn q0() -> Rational {
    Rational::zero()
}

fn q1() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(1))
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![q0(); dim];
    v[i] = q1();
    v
}

/// All strictly increasing k-tuples over 0..n in lexicographic order.
pub fn inc_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn binom(n: usize, k: usize) -> usize {
    inc_tuples(n, k).len()
}

/// Position of an increasing tuple in the lexicographic list, by search.
fn rank_in(list: &[Vec<usize>], t: &[usize]) -> usize {
    list.iter()
        .position(|x| x[..] == *t)
        .expect("increasing tuple is listed")
}

/// Bubble-sort permutation sign; None when two entries coincide.
fn sort_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    let len = idx.len();
    for pass in 0..len {
        for j in 0..len.saturating_sub(1 + pass) {
            match idx[j].cmp(&idx[j + 1]) {
                std::cmp::Ordering::Greater => {
                    idx.swap(j, j + 1);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

fn decode(mut flat: usize, arity: usize, dim: usize) -> Vec<usize> {
    let mut idx = vec![0usize; arity];
    for p in (0..arity).rev() {
        idx[p] = flat % dim;
        flat /= dim;
    }
    idx
}

/// Alternating map stored as a total table over every index tuple.
pub struct Dense {
    arity: usize,
    dim: usize,
    target: usize,
    table: Vec<Vec<Rational>>,
}

impl Dense {
    /// Expands library-layout coordinates (increasing tuples in lex order,
    /// target index fastest) into the full table.
    pub fn from_coords(coords: &[Rational], arity: usize, dim: usize, target: usize) -> Dense {
        let list = inc_tuples(dim, arity);
        assert_eq!(coords.len(), list.len() * target);
        let size = dim.checked_pow(arity as u32).expect("small table");
        let mut table = vec![vec![q0(); target]; size];
        for (flat, slot) in table.iter_mut().enumerate() {
            let idx = decode(flat, arity, dim);
            let mut sorted = idx.clone();
            if let Some(sign) = sort_sign(&mut sorted) {
                let r = rank_in(&list, &sorted);
                for t in 0..target {
                    let v = coords[r * target + t].clone();
                    slot[t] = if sign < 0 { -v } else { v };
                }
            }
        }
        Dense {
            arity,
            dim,
            target,
            table,
        }
    }

    /// Full multilinear evaluation: sum over every index tuple of the
    /// product of argument coordinates times the stored value.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity);
        let mut out = vec![q0(); self.target];
        for (flat, entry) in self.table.iter().enumerate() {
            if entry.iter().all(Zero::is_zero) {
                continue;
            }
            let idx = decode(flat, self.arity, self.dim);
            let mut coef = q1();
            for (p, &i) in idx.iter().enumerate() {
                coef *= &args[p][i];
            }
            if !coef.is_zero() {
                for (o, e) in out.iter_mut().zip(entry) {
                    *o += &coef * e;
                }
            }
        }
        out
    }
}

/// Map alternating in `arity` arguments and linear in one extra argument,
/// as a total table over index tuples times the extra index.
pub struct DenseTensor {
    arity: usize,
    dim: usize,
    tdim: usize,
    target: usize,
    table: Vec<Vec<Rational>>,
}

impl DenseTensor {
    /// Library layout: (tuple · tdim + extra) · target + t.
    pub fn from_coords(
        coords: &[Rational],
        arity: usize,
        dim: usize,
        tdim: usize,
        target: usize,
    ) -> DenseTensor {
        let list = inc_tuples(dim, arity);
        assert_eq!(coords.len(), list.len() * tdim * target);
        let size = dim.checked_pow(arity as u32).expect("small table") * tdim;
        let mut table = vec![vec![q0(); target]; size];
        for (flat, slot) in table.iter_mut().enumerate() {
            let l = flat % tdim;
            let idx = decode(flat / tdim, arity, dim);
            let mut sorted = idx.clone();
            if let Some(sign) = sort_sign(&mut sorted) {
                let base = (rank_in(&list, &sorted) * tdim + l) * target;
                for t in 0..target {
                    let v = coords[base + t].clone();
                    slot[t] = if sign < 0 { -v } else { v };
                }
            }
        }
        DenseTensor {
            arity,
            dim,
            tdim,
            target,
            table,
        }
    }

    pub fn eval(&self, args: &[Vec<Rational>], extra: &[Rational]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity);
        assert_eq!(extra.len(), self.tdim);
        let mut out = vec![q0(); self.target];
        for (flat, entry) in self.table.iter().enumerate() {
            if entry.iter().all(Zero::is_zero) {
                continue;
            }
            let l = flat % self.tdim;
            let idx = decode(flat / self.tdim, self.arity, self.dim);
            let mut coef = extra[l].clone();
            for (p, &i) in idx.iter().enumerate() {
                coef *= &args[p][i];
            }
            if !coef.is_zero() {
                for (o, e) in out.iter_mut().zip(entry) {
                    *o += &coef * e;
                }
            }
        }
        out
    }
}

/// ρ(x) for a coordinate vector x, summed from the basis action matrices.
fn act_comb(rep: &LinearRep, x: &[Rational]) -> Matrix {
    let m = rep.space_dim();
    let mut out = Matrix::zeros(m, m);
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&rep.act(i).scale(c));
        }
    }
    out
}

fn add_scaled(acc: &mut [Rational], sign_pow: usize, v: &[Rational]) {
    if sign_pow % 2 == 0 {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += b;
        }
    } else {
        for (a, b) in acc.iter_mut().zip(v) {
            *a -= b;
        }
    }
}

struct RRBDims {
    g: usize,
    v: usize,
    h: usize,
    w: usize,
}

fn rrb_dims(r: &RRBRepresentation) -> RRBDims {
    RRBDims {
        g: r.base().g_dim(),
        v: r.base().v_dim(),
        h: r.h_dim(),
        w: r.w_dim(),
    }
}

fn rrb_block_dims(d: &RRBDims, n: usize) -> (usize, usize, usize) {
    let fh = binom(d.g, n) * d.h;
    let fw = binom(d.g, n - 1) * d.v * d.w;
    let th = if n >= 2 { binom(d.v, n - 1) * d.h } else { 0 };
    (fh, fw, th)
}

/// Coboundary of one cochain, straight from the displayed formulas; the
/// input and output are flat coordinates in the library layout.
fn rrb_oracle_apply(r: &RRBRepresentation, n: usize, coords: &[Rational]) -> Vec<Rational> {
    let d = rrb_dims(r);
    let (fh_in, fw_in, th_in) = rrb_block_dims(&d, n);
    assert_eq!(coords.len(), fh_in + fw_in + th_in);
    let fh = Dense::from_coords(&coords[..fh_in], n, d.g, d.h);
    let fw = DenseTensor::from_coords(&coords[fh_in..fh_in + fw_in], n - 1, d.g, d.v, d.w);
    let th = (n >= 2).then(|| Dense::from_coords(&coords[fh_in + fw_in..], n - 1, d.v, d.h));
    let lie = r.base().g();
    let mut out = Vec::new();

    // (δc)_ℋ(x₁,…,x_{n+1}) = Σ_i (−1)^{i+1} ρ_ℋ(x_i) f_ℋ(…x̂_i…)
    //   + Σ_{i<j} (−1)^{i+j} f_ℋ([x_i,x_j], …x̂_i…x̂_j…).
    for tuple in inc_tuples(d.g, n + 1) {
        let mut acc = vec![q0(); d.h];
        for p in 0..n + 1 {
            let rest: Vec<Vec<Rational>> = (0..n + 1)
                .filter(|&q| q != p)
                .map(|q| unit(d.g, tuple[q]))
                .collect();
            add_scaled(
                &mut acc,
                p,
                &r.rho_h().act(tuple[p]).mul_vec(&fh.eval(&rest)),
            );
        }
        for p in 0..n + 1 {
            for q in p + 1..n + 1 {
                let mut args = vec![lie.bracket_basis(tuple[p], tuple[q])];
                args.extend(
                    (0..n + 1)
                        .filter(|&s| s != p && s != q)
                        .map(|s| unit(d.g, tuple[s])),
                );
                add_scaled(&mut acc, p + q, &fh.eval(&args));
            }
        }
        out.extend(acc);
    }

    // (δc)_W(x₁,…,xₙ; v) = Σ_{i<j} (−1)^{i+j} f_W([x_i,x_j], …; v)
    //   + Σ_i (−1)^{i+1} ρ_W(x_i) f_W(…x̂_i…; v) + Σ_i (−1)^i f_W(…x̂_i…; ρ(x_i)v)
    //   + (−1)ⁿ μ(v) f_ℋ(x₁,…,xₙ).
    for tuple in inc_tuples(d.g, n) {
        let fh_val = fh.eval(&tuple.iter().map(|&i| unit(d.g, i)).collect::<Vec<_>>());
        for k in 0..d.v {
            let mut acc = vec![q0(); d.w];
            for p in 0..n {
                for q in p + 1..n {
                    let mut args = vec![lie.bracket_basis(tuple[p], tuple[q])];
                    args.extend(
                        (0..n)
                            .filter(|&s| s != p && s != q)
                            .map(|s| unit(d.g, tuple[s])),
                    );
                    add_scaled(&mut acc, p + q, &fw.eval(&args, &unit(d.v, k)));
                }
            }
            for p in 0..n {
                let rest: Vec<Vec<Rational>> = (0..n)
                    .filter(|&q| q != p)
                    .map(|q| unit(d.g, tuple[q]))
                    .collect();
                add_scaled(
                    &mut acc,
                    p,
                    &r.rho_w()
                        .act(tuple[p])
                        .mul_vec(&fw.eval(&rest, &unit(d.v, k))),
                );
                let moved = r.base().rho().act(tuple[p]).col(k);
                add_scaled(&mut acc, p + 1, &fw.eval(&rest, &moved));
            }
            add_scaled(&mut acc, n, &r.mu_basis(k).mul_vec(&fh_val));
            out.extend(acc);
        }
    }

    // θ block of the image: ∂θ + h_T(f_ℋ, f_W), evaluated on V-tuples.
    // ∂θ(v₁,…,vₙ) = Σ_i (−1)^{i+1} ρ_ℋ(Tv_i) θ(…v̂_i…)
    //   + Σ_i (−1)^i 𝒯 μ(v_i) θ(…v̂_i…) + Σ_{i<j} (−1)^{i+j} θ([v_i,v_j]_T, …),
    //   [u, v]_T = ρ(Tu)v − ρ(Tv)u.
    // h_T(f)(v₁,…,vₙ) = (−1)ⁿ f_ℋ(Tv₁,…,Tvₙ)
    //   + Σ_i (−1)^{i+1} 𝒯 f_W(Tv₁,…,T̂v_i,…,Tvₙ; v_i).
    for tuple in inc_tuples(d.v, n) {
        let mut acc = vec![q0(); d.h];
        if let Some(th) = &th {
            for p in 0..n {
                let rest: Vec<Vec<Rational>> = (0..n)
                    .filter(|&q| q != p)
                    .map(|q| unit(d.v, tuple[q]))
                    .collect();
                let val = th.eval(&rest);
                let tv = r.base().t_basis(tuple[p]);
                add_scaled(&mut acc, p, &act_comb(r.rho_h(), &tv).mul_vec(&val));
                add_scaled(
                    &mut acc,
                    p + 1,
                    &r.curly_t().mul_vec(&r.mu_basis(tuple[p]).mul_vec(&val)),
                );
            }
            for p in 0..n {
                for q in p + 1..n {
                    let tvp = r.base().t_basis(tuple[p]);
                    let tvq = r.base().t_basis(tuple[q]);
                    let a = act_comb(r.base().rho(), &tvp).col(tuple[q]);
                    let b = act_comb(r.base().rho(), &tvq).col(tuple[p]);
                    let bracket_t: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                    let mut args = vec![bracket_t];
                    args.extend(
                        (0..n)
                            .filter(|&s| s != p && s != q)
                            .map(|s| unit(d.v, tuple[s])),
                    );
                    add_scaled(&mut acc, p + q, &th.eval(&args));
                }
            }
        }
        let targs: Vec<Vec<Rational>> = tuple.iter().map(|&k| r.base().t_basis(k)).collect();
        add_scaled(&mut acc, n, &fh.eval(&targs));
        for p in 0..n {
            let rest: Vec<Vec<Rational>> = (0..n)
                .filter(|&q| q != p)
                .map(|q| targs[q].clone())
                .collect();
            add_scaled(
                &mut acc,
                p,
                &r.curly_t().mul_vec(&fw.eval(&rest, &unit(d.v, tuple[p]))),
            );
        }
        out.extend(acc);
    }

    let (fh_out, fw_out, th_out) = rrb_block_dims(&d, n + 1);
    assert_eq!(out.len(), fh_out + fw_out + th_out);
    out
}

/// Full degree-n coboundary matrix of the relative complex, column by column.
pub fn rrb_coboundary_oracle(r: &RRBRepresentation, n: usize) -> Matrix {
    assert!(n >= 1);
    let d = rrb_dims(r);
    let (fh_in, fw_in, th_in) = rrb_block_dims(&d, n);
    let (fh_out, fw_out, th_out) = rrb_block_dims(&d, n + 1);
    let total_in = fh_in + fw_in + th_in;
    let mut m = Matrix::zeros(fh_out + fw_out + th_out, total_in);
    for u in 0..total_in {
        let mut coords = vec![q0(); total_in];
        coords[u] = q1();
        for (i, val) in rrb_oracle_apply(r, n, &coords).into_iter().enumerate() {
            if !val.is_zero() {
                m.set(i, u, val);
            }
        }
    }
    m
}

fn rb_block_dims(g: usize, w: usize, n: usize) -> (usize, usize) {
    (
        binom(g, n) * w,
        if n >= 2 { binom(g, n - 1) * w } else { 0 },
    )
}

/// Rota-Baxter coboundary of one cochain from the displayed formulas.
fn rb_oracle_apply(r: &RBRepresentation, n: usize, coords: &[Rational]) -> Vec<Rational> {
    let g = r.base().dim();
    let w = r.w_dim();
    let lie = r.base().g();
    let (f_in, th_in) = rb_block_dims(g, w, n);
    assert_eq!(coords.len(), f_in + th_in);
    let f = Dense::from_coords(&coords[..f_in], n, g, w);
    let th = (n >= 2).then(|| Dense::from_coords(&coords[f_in..], n - 1, g, w));
    let tcol = |i: usize| r.base().t().col(i);
    let mut out = Vec::new();

    // Chevalley-Eilenberg: d f(x₁,…,x_{n+1}) = Σ_i (−1)^{i+1} ρ_W(x_i) f(…x̂_i…)
    //   + Σ_{i<j} (−1)^{i+j} f([x_i,x_j], …x̂_i…x̂_j…).
    for tuple in inc_tuples(g, n + 1) {
        let mut acc = vec![q0(); w];
        for p in 0..n + 1 {
            let rest: Vec<Vec<Rational>> = (0..n + 1)
                .filter(|&q| q != p)
                .map(|q| unit(g, tuple[q]))
                .collect();
            add_scaled(
                &mut acc,
                p,
                &r.rho_w().act(tuple[p]).mul_vec(&f.eval(&rest)),
            );
        }
        for p in 0..n + 1 {
            for q in p + 1..n + 1 {
                let mut args = vec![lie.bracket_basis(tuple[p], tuple[q])];
                args.extend(
                    (0..n + 1)
                        .filter(|&s| s != p && s != q)
                        .map(|s| unit(g, tuple[s])),
                );
                add_scaled(&mut acc, p + q, &f.eval(&args));
            }
        }
        out.extend(acc);
    }

    // θ block of the image: ∂θ + h_T(f) on g-tuples of length n.
    // ∂θ(x₁,…,xₙ) = Σ_i (−1)^{i+1} ρ_W(Tx_i) θ(…x̂_i…)
    //   + Σ_i (−1)^i 𝒯 ρ_W(x_i) θ(…x̂_i…)
    //   + Σ_{i<j} (−1)^{i+j} θ([Tx_i,x_j] + [x_i,Tx_j], …x̂_i…x̂_j…).
    // h_T(f)(x₁,…,xₙ) = (−1)ⁿ f(Tx₁,…,Txₙ)
    //   + (−1)^{n+1} Σ_i 𝒯 f(Tx₁,…,x_i,…,Txₙ)  (x_i kept in slot i).
    for tuple in inc_tuples(g, n) {
        let mut acc = vec![q0(); w];
        if let Some(th) = &th {
            for p in 0..n {
                let rest: Vec<Vec<Rational>> = (0..n)
                    .filter(|&q| q != p)
                    .map(|q| unit(g, tuple[q]))
                    .collect();
                let val = th.eval(&rest);
                add_scaled(
                    &mut acc,
                    p,
                    &act_comb(r.rho_w(), &tcol(tuple[p])).mul_vec(&val),
                );
                add_scaled(
                    &mut acc,
                    p + 1,
                    &r.curly_t().mul_vec(&r.rho_w().act(tuple[p]).mul_vec(&val)),
                );
            }
            for p in 0..n {
                for q in p + 1..n {
                    let lhs = lie.bracket(&tcol(tuple[p]), &unit(g, tuple[q]));
                    let rhs = lie.bracket(&unit(g, tuple[p]), &tcol(tuple[q]));
                    let bracket_t: Vec<Rational> =
                        lhs.iter().zip(&rhs).map(|(x, y)| x + y).collect();
                    let mut args = vec![bracket_t];
                    args.extend(
                        (0..n)
                            .filter(|&s| s != p && s != q)
                            .map(|s| unit(g, tuple[s])),
                    );
                    add_scaled(&mut acc, p + q, &th.eval(&args));
                }
            }
        }
        let targs: Vec<Vec<Rational>> = tuple.iter().map(|&i| tcol(i)).collect();
        add_scaled(&mut acc, n, &f.eval(&targs));
        for p in 0..n {
            let mut args = targs.clone();
            args[p] = unit(g, tuple[p]);
            add_scaled(&mut acc, n + 1, &r.curly_t().mul_vec(&f.eval(&args)));
        }
        out.extend(acc);
    }

    let (f_out, th_out) = rb_block_dims(g, w, n + 1);
    assert_eq!(out.len(), f_out + th_out);
    out
}

/// Full degree-n coboundary matrix of the Rota-Baxter complex.
pub fn rb_coboundary_oracle(r: &RBRepresentation, n: usize) -> Matrix {
    assert!(n >= 1);
    let g = r.base().dim();
    let w = r.w_dim();
    let (f_in, th_in) = rb_block_dims(g, w, n);
    let (f_out, th_out) = rb_block_dims(g, w, n + 1);
    let total_in = f_in + th_in;
    let mut m = Matrix::zeros(f_out + th_out, total_in);
    for u in 0..total_in {
        let mut coords = vec![q0(); total_in];
        coords[u] = q1();
        for (i, val) in rb_oracle_apply(r, n, &coords).into_iter().enumerate() {
            if !val.is_zero() {
                m.set(i, u, val);
            }
        }
    }
    m
}

/// Rank by scratch Gaussian elimination over ℚ.
pub fn rank_oracle(m: &Matrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Rational>> = (0..rows).map(|i| m.row(i)).collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let factor = &a[r][col] / &pivot;
                for c in col..cols {
                    let delta = &factor * &a[rank][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn nullity_oracle(m: &Matrix) -> usize {
    m.cols() - rank_oracle(m)
}

/// Dimension of the space of pairs (f_g, f_V) that derive the bracket,
/// intertwine the action, and commute with the operator, by assembling the
/// defining linear system at unit vectors and taking its nullity.
pub fn rrb_derivation_dim_oracle(a: &RRBAlgebra) -> usize {
    let (g, v) = (a.g_dim(), a.v_dim());
    let unknowns = g * g + v * v;
    let residual = |flat: &[Rational]| -> Vec<Rational> {
        let fg = Matrix::from_fn(g, g, |i, j| flat[i * g + j].clone());
        let fv = Matrix::from_fn(v, v, |i, j| flat[g * g + i * v + j].clone());
        let mut out = Vec::new();
        for i in 0..g {
            for j in i + 1..g {
                let lhs = fg.mul_vec(&a.g().bracket_basis(i, j));
                let r1 = a.g().bracket(&fg.col(i), &unit(g, j));
                let r2 = a.g().bracket(&unit(g, i), &fg.col(j));
                for k in 0..g {
                    out.push(&lhs[k] - &(&r1[k] + &r2[k]));
                }
            }
        }
        let comm = a.t().mul(&fv).sub(&fg.mul(a.t()));
        for i in 0..comm.rows() {
            out.extend(comm.row(i));
        }
        for i in 0..g {
            let res = fv
                .mul(a.rho().act(i))
                .sub(&a.rho().act(i).mul(&fv))
                .sub(&act_comb(a.rho(), &fg.col(i)));
            for r in 0..res.rows() {
                out.extend(res.row(r));
            }
        }
        out
    };
    nullity_of_linear_map(unknowns, residual)
}

/// Same for a single map deriving the bracket and commuting with T.
pub fn rb_derivation_dim_oracle(a: &RBAlgebra) -> usize {
    let g = a.dim();
    let residual = |flat: &[Rational]| -> Vec<Rational> {
        let f = Matrix::from_fn(g, g, |i, j| flat[i * g + j].clone());
        let mut out = Vec::new();
        for i in 0..g {
            for j in i + 1..g {
                let lhs = f.mul_vec(&a.g().bracket_basis(i, j));
                let r1 = a.g().bracket(&f.col(i), &unit(g, j));
                let r2 = a.g().bracket(&unit(g, i), &f.col(j));
                for k in 0..g {
                    out.push(&lhs[k] - &(&r1[k] + &r2[k]));
                }
            }
        }
        let comm = f.mul(a.t()).sub(&a.t().mul(&f));
        for i in 0..comm.rows() {
            out.extend(comm.row(i));
        }
        out
    };
    nullity_of_linear_map(g * g, residual)
}

fn nullity_of_linear_map(
    unknowns: usize,
    residual: impl Fn(&[Rational]) -> Vec<Rational>,
) -> usize {
    let probe = residual(&vec![q0(); unknowns]);
    let rows = probe.len();
    let mut system = Matrix::zeros(rows, unknowns);
    for u in 0..unknowns {
        let mut flat = vec![q0(); unknowns];
        flat[u] = q1();
        for (i, val) in residual(&flat).into_iter().enumerate() {
            if !val.is_zero() {
                system.set(i, u, val);
            }
        }
    }
    nullity_oracle(&system)
}
