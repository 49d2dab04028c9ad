//! Exact-arithmetic toolkit for finite-dimensional relative Rota-Baxter Lie
//! algebras: structures and axiom checks, cochain complexes assembled as
//! explicit rational matrices, cohomology dimensions, and the structural
//! correspondences (semidirect products, duals, induced pre-Lie data,
//! abelian extensions from 2-cocycles, skeletal Lie 2-algebras from
//! 3-cocycles), together with the plain Rota-Baxter variants.
//!
//! Everything is computed over the rationals; no floating point anywhere.

// Index loops here usually walk several structures in lockstep or iterate
// triangularly; the iterator forms clippy suggests would obscure them.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod algebra_core;
pub mod cohomology;
pub mod correspondences;
pub mod exact_linalg;
pub mod rrb_structures;
pub mod samples;
