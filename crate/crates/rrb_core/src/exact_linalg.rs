//! Exact rational scalars, dense matrices, and the rank/kernel/quotient
//! computations every other module consumes.
//!
//! Scalars are arbitrary-precision reduced fractions (`num::BigRational`),
//! always kept with a positive denominator. Matrices are dense row-major.
//! Rank and kernel run a Bareiss-style fraction-free forward elimination on
//! denominator-cleared integer rows; the reduced-echelon normalization that
//! canonical `Subspace` bases require is done rationally afterwards.

use num::bigint::BigInt;
use num::{Integer, One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// Arbitrary-precision rational number, canonical (reduced, denominator > 0).
pub type Rational = num::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on d = 0 (test/fixture helper).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form: "p/q" with q > 0 and gcd(p, q) = 1, "p" when q = 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse "p" or "p/q". Rejects zero denominators and malformed input.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid rational numerator '{num_str}'"))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| format!("invalid rational denominator '{den_str}'"))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in rational '{s}'"));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical strings for a coordinate vector.
pub fn rationals_to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subspace containment fails: witness vector {witness:?} lies in the inner subspace but not the outer one")]
    NotContained { witness: Vec<String> },
}

/// Dense rational matrix, row-major. Zero-sized shapes (0 rows or 0 cols) are
/// legal and arise as empty cochain spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Integer-entry convenience constructor for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        *self.get_mut(i, j) = value;
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "add shape"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "sub shape"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation [A | B | ...]. All blocks must share a row count.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack rows");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation. All blocks must share a column count.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols), "vstack cols");
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..cols {
                    out.set(off + i, j, b.get(i, j).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Writes `block` into `self` with its top-left corner at (i0, j0).
    pub fn set_block(&mut self, i0: usize, j0: usize, block: &Matrix) {
        assert!(
            i0 + block.rows <= self.rows && j0 + block.cols <= self.cols,
            "block bounds"
        );
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.get(i, j).clone());
            }
        }
    }

    /// Reduced row echelon form and the pivot columns, via a fraction-free
    /// (Bareiss) forward pass on denominator-cleared integer rows followed by
    /// rational back-substitution. The result is canonical: it depends only on
    /// the row space.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        // Clear denominators row by row; row scaling preserves the row space.
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut l = BigInt::one();
                for j in 0..self.cols {
                    l = l.lcm(self.get(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let x = self.get(i, j);
                        x.numer() * (&l / x.denom())
                    })
                    .collect()
            })
            .collect();

        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in col + 1..self.cols {
                    let t = &a[i][j] * &a[r][col] - &a[i][col] * &a[r][j];
                    let (q, rem) = t.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[r][col].clone();
            pivots.push(col);
            r += 1;
        }

        // Rational back-substitution to reduced echelon form.
        let mut rr: Vec<Vec<Rational>> = a
            .into_iter()
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        for k in (0..pivots.len()).rev() {
            let pc = pivots[k];
            let inv = rr[k][pc].clone();
            for j in 0..self.cols {
                rr[k][j] = &rr[k][j] / &inv;
            }
            for i in 0..k {
                let f = rr[i][pc].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let upd = &rr[i][j] - &(&f * &rr[k][j]);
                    rr[i][j] = upd;
                }
            }
        }
        (Matrix::from_rows(rr).expect("rectangular"), pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Canonical basis of the null space {v : self * v = 0}.
    pub fn kernel(&self) -> Subspace {
        let (rref, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[fc] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref.get(row, fc).clone();
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, &basis)
    }

    /// Canonical basis of the column span.
    pub fn image(&self) -> Subspace {
        let (_, pivots) = self.rref_with_pivots();
        let cols: Vec<Vec<Rational>> = pivots.iter().map(|&j| self.col(j)).collect();
        Subspace::from_spanning(self.rows, &cols)
    }

    /// Any particular solution of self * x = b, or None when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len(), "solve shape");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        for i in 0..self.rows {
            aug.set(i, self.cols, b[i].clone());
        }
        let (rref, pivots) = aug.rref_with_pivots();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = rref.get(row, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", rationals_to_strings(&self.row(i)))?;
        }
        write!(f, "]")
    }
}

/// Serializes as row-major nested arrays of canonical rational strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(&rationals_to_strings(&self.row(i)))?;
        }
        seq.end()
    }
}

/// Linear subspace of ℚ^n held by a canonical reduced-echelon basis, so equal
/// subspaces compare equal componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// Canonicalizes a spanning set (reduced echelon of the stacked rows).
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient_dim),
            "spanning vector length"
        );
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("rectangular");
        let (rref, pivots) = m.rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| rref.row(i)).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Exact membership by reduction against the echelon basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "contains shape");
        let mut rem = v.to_vec();
        for row in &self.basis {
            let pc = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero basis row");
            let f = rem[pc].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.ambient_dim {
                let upd = &rem[j] - &(&f * &row[j]);
                rem[j] = upd;
            }
        }
        rem.iter().all(Zero::is_zero)
    }

    /// Basis of a complement of `inner` inside `self`: the subset of `self`'s
    /// basis whose classes span self/inner. Requires inner ⊆ self.
    pub fn quotient_representatives(
        &self,
        inner: &Subspace,
    ) -> Result<Vec<Vec<Rational>>, LinalgError> {
        quotient_dim_checked(self, inner)?;
        // Greedily keep basis vectors independent modulo inner.
        let mut reps: Vec<Vec<Rational>> = Vec::new();
        let mut span = inner.basis.clone();
        for v in &self.basis {
            let cand = Subspace::from_spanning(self.ambient_dim, &{
                let mut s = span.clone();
                s.push(v.clone());
                s
            });
            if cand.dim() > Subspace::from_spanning(self.ambient_dim, &span).dim() {
                reps.push(v.clone());
                span.push(v.clone());
            }
        }
        Ok(reps)
    }
}

/// dim(outer) − dim(inner), after verifying inner ⊆ outer; the error carries a
/// witness vector from inner that escapes outer.
pub fn quotient_dim_checked(outer: &Subspace, inner: &Subspace) -> Result<usize, LinalgError> {
    assert_eq!(outer.ambient_dim, inner.ambient_dim, "quotient ambient");
    for v in &inner.basis {
        if !outer.contains(v) {
            return Err(LinalgError::NotContained {
                witness: rationals_to_strings(v),
            });
        }
    }
    Ok(outer.dim() - inner.dim())
}
