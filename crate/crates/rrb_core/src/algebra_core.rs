//! Finite-dimensional Lie algebras, linear representations, pre-Lie algebras,
//! and their axiom checks. Everything is stored as rational structure
//! constants or action matrices in a fixed ordered basis; axiom checks
//! iterate over basis tuples, which multilinearity makes sufficient.

use crate::exact_linalg::{format_rational, rationals_to_strings, Matrix, Rational};
use num::Zero;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, thiserror::Error)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("axiom violation: {0}")]
    Invalid(ValidationReport),
    #[error("structures are built over different base algebras")]
    MismatchedBase,
}

/// One violated axiom instance: which axiom, on which basis indices, and the
/// residual (left side minus right side), flattened row-major when the
/// residual is a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl Violation {
    pub fn new(axiom: &str, witness: Vec<usize>, residual: Vec<Rational>) -> Self {
        Violation {
            axiom: axiom.to_string(),
            witness,
            residual,
        }
    }
}

/// Outcome of an axiom check: valid iff no violations were recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records `residual` as a violation unless it is zero.
    pub fn check_zero(&mut self, axiom: &str, witness: &[usize], residual: Vec<Rational>) {
        if !residual.iter().all(Zero::is_zero) {
            self.violations
                .push(Violation::new(axiom, witness.to_vec(), residual));
        }
    }

    /// Records a matrix residual (flattened row-major) unless it is zero.
    pub fn check_zero_matrix(&mut self, axiom: &str, witness: &[usize], residual: &Matrix) {
        if !residual.is_zero() {
            let flat: Vec<Rational> = (0..residual.rows()).flat_map(|i| residual.row(i)).collect();
            self.violations
                .push(Violation::new(axiom, witness.to_vec(), flat));
        }
    }

    pub fn absorb(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn into_result(self) -> Result<(), AlgebraError> {
        if self.valid() {
            Ok(())
        } else {
            Err(AlgebraError::Invalid(self))
        }
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.valid() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(
                f,
                "{} violated at {:?}, residual [{}]",
                v.axiom,
                v.witness,
                v.residual
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct V<'a> {
            axiom: &'a str,
            residual: Vec<String>,
            witness: &'a [usize],
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("valid", &self.valid())?;
        let vs: Vec<V> = self
            .violations
            .iter()
            .map(|v| V {
                axiom: &v.axiom,
                residual: rationals_to_strings(&v.residual),
                witness: &v.witness,
            })
            .collect();
        map.serialize_entry("violations", &vs)?;
        map.end()
    }
}

/// Lie algebra by structure constants c[i][j][k]: [e_i, e_j] = Σ_k c[i][j][k] e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    /// Checked constructor: enforces shape, antisymmetry, and the Jacobi identity.
    pub fn new(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<Self, AlgebraError> {
        Self::check_shape(dim, &c)?;
        let g = LieAlgebra { dim, c };
        g.check_antisymmetry()?;
        check_jacobi(&g).into_result()?;
        Ok(g)
    }

    /// Shape-checked only; for tests that need axiom-violating data.
    pub fn new_unchecked(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Self {
        Self::check_shape(dim, &c).expect("structure constant shape");
        LieAlgebra { dim, c }
    }

    fn check_shape(dim: usize, c: &[Vec<Vec<Rational>>]) -> Result<(), AlgebraError> {
        let ok = c.len() == dim
            && c.iter()
                .all(|ci| ci.len() == dim && ci.iter().all(|cij| cij.len() == dim));
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::Shape(format!(
                "structure constants must be {dim}^3"
            )))
        }
    }

    fn check_antisymmetry(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in i..self.dim {
                for k in 0..self.dim {
                    if self.c[i][j][k] != -&self.c[j][i][k] {
                        return Err(AlgebraError::Shape(format!(
                            "antisymmetry fails at c[{i}][{j}][{k}]"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
        }
    }

    /// Builds from the nonzero upper-triangular brackets (i < j); antisymmetric
    /// counterparts are filled in automatically.
    pub fn from_brackets(
        dim: usize,
        brackets: &[(usize, usize, Vec<Rational>)],
    ) -> Result<Self, AlgebraError> {
        let mut c = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for (i, j, coeffs) in brackets {
            if *i >= *j || *j >= dim {
                return Err(AlgebraError::Shape(format!(
                    "bracket indices ({i},{j}) need i < j < dim"
                )));
            }
            if coeffs.len() != dim {
                return Err(AlgebraError::Shape(format!(
                    "bracket ({i},{j}) needs {dim} coefficients"
                )));
            }
            for k in 0..dim {
                c[*i][*j][k] = coeffs[k].clone();
                c[*j][*i][k] = -&coeffs[k];
            }
        }
        LieAlgebra::new(dim, c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// [e_i, e_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.c[i][j].clone()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    /// Bilinear bracket of arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim, "bracket arg");
        assert_eq!(y.len(), self.dim, "bracket arg");
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &f * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(e_i): column j is [e_i, e_j].
    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c[i][j][k].clone())
    }
}

/// Serializes as {"bracket": [[i, j, [coeffs...]], ...], "dim": n} with only
/// i < j and nonzero brackets listed.
impl Serialize for LieAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        let mut brackets: Vec<(usize, usize, Vec<String>)> = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.c[i][j].iter().any(|x| !x.is_zero()) {
                    brackets.push((i, j, rationals_to_strings(&self.c[i][j])));
                }
            }
        }
        map.serialize_entry("bracket", &brackets)?;
        map.serialize_entry("dim", &self.dim)?;
        map.end()
    }
}

/// Jacobi identity on all strictly increasing basis triples.
pub fn check_jacobi(g: &LieAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = g.dim;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut residual = g.bracket(&g.bracket_basis(i, j), &basis_vec(n, k));
                let t2 = g.bracket(&g.bracket_basis(j, k), &basis_vec(n, i));
                let t3 = g.bracket(&g.bracket_basis(k, i), &basis_vec(n, j));
                for m in 0..n {
                    residual[m] += &t2[m] + &t3[m];
                }
                report.check_zero("jacobi", &[i, j, k], residual);
            }
        }
    }
    report
}

/// Standard basis vector e_i of ℚ^n.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num::One::one();
    v
}

/// Linear representation: one action matrix per Lie algebra basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRep {
    algebra: LieAlgebra,
    space_dim: usize,
    action: Vec<Matrix>,
}

impl LinearRep {
    pub fn new(algebra: LieAlgebra, action: Vec<Matrix>) -> Result<Self, AlgebraError> {
        let r = Self::new_unchecked_checkedshape(algebra, action)?;
        check_representation(&r).into_result()?;
        Ok(r)
    }

    pub fn new_unchecked(algebra: LieAlgebra, action: Vec<Matrix>) -> Self {
        Self::new_unchecked_checkedshape(algebra, action).expect("representation shape")
    }

    fn new_unchecked_checkedshape(
        algebra: LieAlgebra,
        action: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        if action.len() != algebra.dim() {
            return Err(AlgebraError::Shape(format!(
                "need one action matrix per basis element ({})",
                algebra.dim()
            )));
        }
        let space_dim = action.first().map_or(0, Matrix::rows);
        if action
            .iter()
            .any(|m| m.rows() != space_dim || m.cols() != space_dim)
        {
            return Err(AlgebraError::Shape(
                "action matrices must be square of equal size".into(),
            ));
        }
        Ok(LinearRep {
            algebra,
            space_dim,
            action,
        })
    }

    pub fn zero(algebra: LieAlgebra, space_dim: usize) -> Self {
        let action = vec![Matrix::zeros(space_dim, space_dim); algebra.dim()];
        LinearRep {
            algebra,
            space_dim,
            action,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    /// Matrix of ρ(e_i).
    pub fn act(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Matrix of ρ(x) for an arbitrary coordinate vector x.
    pub fn act_vec(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "act_vec arg");
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (i, coeff) in x.iter().enumerate() {
            if !coeff.is_zero() {
                out = out.add(&self.action[i].scale(coeff));
            }
        }
        out
    }

    /// ρ(x)v.
    pub fn apply(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.act_vec(x).mul_vec(v)
    }
}

impl Serialize for LinearRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("action", &self.action)?;
        map.serialize_entry("space_dim", &self.space_dim)?;
        map.end()
    }
}

/// Bracket compatibility ρ([e_i,e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i) on all
/// basis pairs; residuals are matrices flattened row-major.
pub fn check_representation(r: &LinearRep) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = r.algebra.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = r.act_vec(&r.algebra.bracket_basis(i, j));
            let rhs = r.action[i]
                .mul(&r.action[j])
                .sub(&r.action[j].mul(&r.action[i]));
            report.check_zero_matrix("representation", &[i, j], &lhs.sub(&rhs));
        }
    }
    report
}

/// Adjoint representation: action matrices ad(e_i).
pub fn adjoint_rep(g: &LieAlgebra) -> LinearRep {
    let action = (0..g.dim()).map(|i| g.ad_basis(i)).collect();
    LinearRep {
        algebra: g.clone(),
        space_dim: g.dim(),
        action,
    }
}

/// Dual representation ρ*(x) = −ρ(x)ᵀ on the dual space.
pub fn dual_rep(r: &LinearRep) -> LinearRep {
    let action = r.action.iter().map(|m| m.transpose().neg()).collect();
    LinearRep {
        algebra: r.algebra.clone(),
        space_dim: r.space_dim,
        action,
    }
}

/// Pre-Lie algebra by product constants a[i][j][k]: e_i ·_A e_j = Σ_k a[i][j][k] e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieAlgebra {
    dim: usize,
    a: Vec<Vec<Vec<Rational>>>,
}

impl PreLieAlgebra {
    pub fn new(dim: usize, a: Vec<Vec<Vec<Rational>>>) -> Result<Self, AlgebraError> {
        let p = Self::new_unchecked(dim, a);
        check_left_symmetry(&p).into_result()?;
        Ok(p)
    }

    pub fn new_unchecked(dim: usize, a: Vec<Vec<Vec<Rational>>>) -> Self {
        LieAlgebra::check_shape(dim, &a).expect("product constant shape");
        PreLieAlgebra { dim, a }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.a[i][j].clone()
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim, "product arg");
        assert_eq!(y.len(), self.dim, "product arg");
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.a[i][j][k].is_zero() {
                        out[k] += &f * &self.a[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication L_{e_i}: column j is e_i · e_j.
    pub fn left_mul_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.a[i][j][k].clone())
    }
}

/// Left-symmetry (x·y)·z − x·(y·z) = (y·x)·z − y·(x·z) on all basis triples.
pub fn check_left_symmetry(p: &PreLieAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = p.dim;
    let assoc = |i: usize, j: usize, k: usize| -> Vec<Rational> {
        let left = p.product(&p.product_basis(i, j), &basis_vec(n, k));
        let right = p.product(&basis_vec(n, i), &p.product_basis(j, k));
        left.iter().zip(&right).map(|(a, b)| a - b).collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = assoc(i, j, k);
                let rhs = assoc(j, i, k);
                let residual: Vec<Rational> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                report.check_zero("left_symmetry", &[i, j, k], residual);
            }
        }
    }
    report
}

/// Commutator Lie algebra of a pre-Lie algebra: c[i][j][k] = a[i][j][k] − a[j][i][k].
pub fn commutator_lie(p: &PreLieAlgebra) -> LieAlgebra {
    let n = p.dim;
    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = &p.a[i][j][k] - &p.a[j][i][k];
            }
        }
    }
    LieAlgebra { dim: n, c }
}

/// Pre-Lie representation data (θ, ϑ) on a space of dimension space_dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieRep {
    algebra: PreLieAlgebra,
    space_dim: usize,
    theta: Vec<Matrix>,
    vartheta: Vec<Matrix>,
}

impl PreLieRep {
    pub fn new(
        algebra: PreLieAlgebra,
        theta: Vec<Matrix>,
        vartheta: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let pr = Self::new_unchecked_shape(algebra, theta, vartheta)?;
        check_prelie_rep(&pr).into_result()?;
        Ok(pr)
    }

    pub fn new_unchecked(
        algebra: PreLieAlgebra,
        theta: Vec<Matrix>,
        vartheta: Vec<Matrix>,
    ) -> Self {
        Self::new_unchecked_shape(algebra, theta, vartheta).expect("pre-Lie rep shape")
    }

    fn new_unchecked_shape(
        algebra: PreLieAlgebra,
        theta: Vec<Matrix>,
        vartheta: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        if theta.len() != algebra.dim() || vartheta.len() != algebra.dim() {
            return Err(AlgebraError::Shape(
                "need one θ and one ϑ matrix per basis element".into(),
            ));
        }
        let space_dim = theta.first().map_or(0, Matrix::rows);
        let square = |m: &Matrix| m.rows() == space_dim && m.cols() == space_dim;
        if !theta.iter().all(square) || !vartheta.iter().all(square) {
            return Err(AlgebraError::Shape(
                "θ/ϑ matrices must be square of equal size".into(),
            ));
        }
        Ok(PreLieRep {
            algebra,
            space_dim,
            theta,
            vartheta,
        })
    }

    pub fn algebra(&self) -> &PreLieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn theta(&self, i: usize) -> &Matrix {
        &self.theta[i]
    }

    pub fn vartheta(&self, i: usize) -> &Matrix {
        &self.vartheta[i]
    }

    pub fn theta_vec(&self, x: &[Rational]) -> Matrix {
        linear_combination(&self.theta, x, self.space_dim)
    }

    pub fn vartheta_vec(&self, x: &[Rational]) -> Matrix {
        linear_combination(&self.vartheta, x, self.space_dim)
    }
}

fn linear_combination(mats: &[Matrix], coeffs: &[Rational], dim: usize) -> Matrix {
    assert_eq!(mats.len(), coeffs.len(), "linear combination arity");
    let mut out = Matrix::zeros(dim, dim);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// The two pre-Lie representation conditions on all basis pairs:
/// θ is a representation of the commutator Lie algebra, and
/// θ(x)ϑ(y) − ϑ(y)θ(x) = ϑ(x·y) − ϑ(y)ϑ(x).
pub fn check_prelie_rep(pr: &PreLieRep) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = pr.algebra.dim();
    let commutator = commutator_lie(&pr.algebra);
    for i in 0..n {
        for j in 0..n {
            if i < j {
                let lhs = pr.theta_vec(&commutator.bracket_basis(i, j));
                let rhs = pr.theta[i]
                    .mul(&pr.theta[j])
                    .sub(&pr.theta[j].mul(&pr.theta[i]));
                report.check_zero_matrix("prelie_rep_theta", &[i, j], &lhs.sub(&rhs));
            }
            let lhs = pr.theta[i]
                .mul(&pr.vartheta[j])
                .sub(&pr.vartheta[j].mul(&pr.theta[i]));
            let rhs = pr
                .vartheta_vec(&pr.algebra.product_basis(i, j))
                .sub(&pr.vartheta[j].mul(&pr.vartheta[i]));
            report.check_zero_matrix("prelie_rep_vartheta", &[i, j], &lhs.sub(&rhs));
        }
    }
    report
}

/// Serializes a list of matrices (used for μ, θ, ϑ packages).
pub fn serialize_matrices<S: Serializer>(
    mats: &[Matrix],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(mats.len()))?;
    for m in mats {
        seq.serialize_element(m)?;
    }
    seq.end()
}
