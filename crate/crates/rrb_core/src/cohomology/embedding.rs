//! Embedding of the general-coefficient complex into the adjoint complex of
//! the semidirect product, by extension by zero: the image cochains vanish
//! whenever any argument lies in an adjoined summand.

use super::combinatorics::{increasing_tuples, tuple_rank};
use super::{check_budget_degrees, coboundary_matrix, CochainScheme, CohomologyError};
use crate::exact_linalg::{Matrix, Rational};
use crate::rrb_structures::{adjoint_rrb_rep, semidirect_rrb, RRBRepresentation};
use serde::Serialize;

/// Degreewise verdicts of a cochain-embedding commutation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    #[serde(serialize_with = "super::serialize_degree_flags")]
    pub degrees: Vec<(usize, bool)>,
    pub commutes: bool,
}

// E(n): (f_ℋ, f_W, θ) on (g, V) extends by zero to the adjoint cochains of
// (g⊕ℋ, V⊕W): arguments keep their indices (the adjoined summands come
// second), targets shift past the original summands.
fn extension_by_zero_matrix(small: &CochainScheme, big: &CochainScheme, n: usize) -> Matrix {
    let r = small.coeffs();
    let (g, v) = (r.base().g_dim(), r.base().v_dim());
    let (h, w) = (r.h_dim(), r.w_dim());
    let (gb, vb) = (g + h, v + w);
    let mut m = Matrix::zeros(big.total_dim(), small.total_dim());
    let one = Rational::from_integer(1.into());
    for s in increasing_tuples(g, n) {
        for a in 0..h {
            let col = tuple_rank(&s, g) * h + a;
            let row = tuple_rank(&s, gb) * gb + g + a;
            m.set(row, col, one.clone());
        }
    }
    for s in increasing_tuples(g, n - 1) {
        for k in 0..v {
            for c in 0..w {
                let col = small.fh_dim() + (tuple_rank(&s, g) * v + k) * w + c;
                let row = big.fh_dim() + (tuple_rank(&s, gb) * vb + k) * vb + v + c;
                m.set(row, col, one.clone());
            }
        }
    }
    if n >= 2 {
        for s in increasing_tuples(v, n - 1) {
            for a in 0..h {
                let col = small.fbar_dim() + tuple_rank(&s, v) * h + a;
                let row = big.fbar_dim() + tuple_rank(&s, vb) * gb + g + a;
                m.set(row, col, one.clone());
            }
        }
    }
    m
}

/// Verifies that extension by zero into the adjoint complex of the semidirect
/// product intertwines the coboundaries: D_⋉(n)·E(n) = E(n+1)·D(n).
pub fn rrb_semidirect_embedding_check(
    r: &RRBRepresentation,
    max_degree: usize,
    budget: usize,
) -> Result<EmbeddingReport, CohomologyError> {
    assert!(max_degree >= 1, "max_degree must be at least 1");
    let s = semidirect_rrb(r.base(), r)
        .map_err(|e| CohomologyError::Mismatch(format!("semidirect product invalid: {e}")))?;
    let pack = adjoint_rrb_rep(&s);
    check_budget_degrees(
        (1..=max_degree + 1).map(|n| {
            let dim = CochainScheme::new(r, n)
                .total_dim()
                .max(CochainScheme::new(&pack, n).total_dim());
            (n, dim)
        }),
        budget,
    )?;
    let mut degrees = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let small_n = CochainScheme::new(r, n);
        let small_next = CochainScheme::new(r, n + 1);
        let big_n = CochainScheme::new(&pack, n);
        let big_next = CochainScheme::new(&pack, n + 1);
        let lhs = coboundary_matrix(&big_n).mul(&extension_by_zero_matrix(&small_n, &big_n, n));
        let rhs = extension_by_zero_matrix(&small_next, &big_next, n + 1)
            .mul(&coboundary_matrix(&small_n));
        degrees.push((n, lhs == rhs));
    }
    let commutes = degrees.iter().all(|&(_, ok)| ok);
    Ok(EmbeddingReport { degrees, commutes })
}
