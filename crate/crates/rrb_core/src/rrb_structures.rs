//! Relative and plain Rota-Baxter Lie algebras, their representations, and
//! the structural constructions built from them: adjoint/dual/coadjoint
//! coefficient packages, semidirect products, induced pre-Lie data, the
//! operator algebra of a two-term complex, r-matrix candidates, derivations,
//! and the commutator functor from associative data.

use crate::algebra_core::{
    adjoint_rep, basis_vec, check_jacobi, check_representation, dual_rep, AlgebraError, LieAlgebra,
    LinearRep, PreLieAlgebra, PreLieRep, ValidationReport,
};
use crate::exact_linalg::{Matrix, Rational, Subspace};
use num::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Relative Rota-Baxter Lie algebra: a Lie algebra g, a representation ρ on
/// V, and an operator T: V → g with [Tu, Tv] = T(ρ(Tu)v − ρ(Tv)u).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRBAlgebra {
    rep: LinearRep,
    t: Matrix,
}

impl RRBAlgebra {
    /// Checked constructor: validates the Lie algebra, the representation,
    /// and the relative Rota-Baxter identity.
    pub fn new(rep: LinearRep, t: Matrix) -> Result<Self, AlgebraError> {
        let a = Self::new_unchecked(rep, t)?;
        check_jacobi(a.g()).into_result()?;
        check_representation(&a.rep).into_result()?;
        check_rrb(&a).into_result()?;
        Ok(a)
    }

    /// Shape-checked candidate; axioms may fail (use check_rrb to decide).
    pub fn new_unchecked(rep: LinearRep, t: Matrix) -> Result<Self, AlgebraError> {
        if t.rows() != rep.algebra().dim() || t.cols() != rep.space_dim() {
            return Err(AlgebraError::Shape(format!(
                "operator must be {}x{}, got {}x{}",
                rep.algebra().dim(),
                rep.space_dim(),
                t.rows(),
                t.cols()
            )));
        }
        Ok(RRBAlgebra { rep, t })
    }

    pub fn g(&self) -> &LieAlgebra {
        self.rep.algebra()
    }

    pub fn rho(&self) -> &LinearRep {
        &self.rep
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn g_dim(&self) -> usize {
        self.g().dim()
    }

    pub fn v_dim(&self) -> usize {
        self.rep.space_dim()
    }

    /// T(u) for a coordinate vector u ∈ V.
    pub fn t_apply(&self, u: &[Rational]) -> Vec<Rational> {
        self.t.mul_vec(u)
    }

    /// T(u_k) for a basis element.
    pub fn t_basis(&self, k: usize) -> Vec<Rational> {
        self.t.col(k)
    }
}

impl Serialize for RRBAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("T", &self.t)?;
        map.serialize_entry("lie", self.g())?;
        map.serialize_entry("rep", &self.rep)?;
        map.end()
    }
}

/// Rota-Baxter Lie algebra: T: g → g with [Tx, Ty] = T([Tx, y] + [x, Ty]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBAlgebra {
    g: LieAlgebra,
    t: Matrix,
}

impl RBAlgebra {
    pub fn new(g: LieAlgebra, t: Matrix) -> Result<Self, AlgebraError> {
        let a = Self::new_unchecked(g, t)?;
        check_jacobi(&a.g).into_result()?;
        check_rb(&a).into_result()?;
        Ok(a)
    }

    pub fn new_unchecked(g: LieAlgebra, t: Matrix) -> Result<Self, AlgebraError> {
        if t.rows() != g.dim() || t.cols() != g.dim() {
            return Err(AlgebraError::Shape(format!(
                "operator must be square of size {}, got {}x{}",
                g.dim(),
                t.rows(),
                t.cols()
            )));
        }
        Ok(RBAlgebra { g, t })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }
}

impl Serialize for RBAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("T", &self.t)?;
        map.serialize_entry("lie", &self.g)?;
        map.end()
    }
}

/// Coefficient package for relative Rota-Baxter cohomology: a two-term
/// complex 𝒯: W → ℋ, Lie representations ρ_ℋ and ρ_W of g, and a linear map
/// μ: V → Hom(ℋ, W) subject to the two compatibility equations checked by
/// [`check_rrb_representation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRBRepresentation {
    base: RRBAlgebra,
    curly_t: Matrix,
    rho_h: LinearRep,
    rho_w: LinearRep,
    mu: Vec<Matrix>,
}

impl RRBRepresentation {
    pub fn new(
        base: RRBAlgebra,
        curly_t: Matrix,
        rho_h: LinearRep,
        rho_w: LinearRep,
        mu: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let r = Self::new_unchecked(base, curly_t, rho_h, rho_w, mu)?;
        check_representation(&r.rho_h).into_result()?;
        check_representation(&r.rho_w).into_result()?;
        check_rrb_representation(&r).into_result()?;
        Ok(r)
    }

    pub fn new_unchecked(
        base: RRBAlgebra,
        curly_t: Matrix,
        rho_h: LinearRep,
        rho_w: LinearRep,
        mu: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let (h, w) = (rho_h.space_dim(), rho_w.space_dim());
        if rho_h.algebra() != base.g() || rho_w.algebra() != base.g() {
            return Err(AlgebraError::MismatchedBase);
        }
        if curly_t.rows() != h || curly_t.cols() != w {
            return Err(AlgebraError::Shape(format!(
                "complex map must be {}x{}, got {}x{}",
                h,
                w,
                curly_t.rows(),
                curly_t.cols()
            )));
        }
        if mu.len() != base.v_dim() || mu.iter().any(|m| m.rows() != w || m.cols() != h) {
            return Err(AlgebraError::Shape(format!(
                "need {} mu matrices of shape {}x{}",
                base.v_dim(),
                w,
                h
            )));
        }
        Ok(RRBRepresentation {
            base,
            curly_t,
            rho_h,
            rho_w,
            mu,
        })
    }

    pub fn base(&self) -> &RRBAlgebra {
        &self.base
    }

    pub fn curly_t(&self) -> &Matrix {
        &self.curly_t
    }

    pub fn rho_h(&self) -> &LinearRep {
        &self.rho_h
    }

    pub fn rho_w(&self) -> &LinearRep {
        &self.rho_w
    }

    pub fn h_dim(&self) -> usize {
        self.rho_h.space_dim()
    }

    pub fn w_dim(&self) -> usize {
        self.rho_w.space_dim()
    }

    /// μ(u_k) for a basis element.
    pub fn mu_basis(&self, k: usize) -> &Matrix {
        &self.mu[k]
    }

    /// μ(u) for a coordinate vector u ∈ V.
    pub fn mu_vec(&self, u: &[Rational]) -> Matrix {
        assert_eq!(u.len(), self.base.v_dim(), "mu arg");
        let mut out = Matrix::zeros(self.w_dim(), self.h_dim());
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.mu[k].scale(c));
            }
        }
        out
    }
}

impl Serialize for RRBRepresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("curlyT", &self.curly_t)?;
        map.serialize_entry("mu", &self.mu)?;
        map.serialize_entry("rho_h", &self.rho_h)?;
        map.serialize_entry("rho_w", &self.rho_w)?;
        map.end()
    }
}

/// Coefficient data for Rota-Baxter cohomology: ρ_W a Lie representation on W
/// and 𝒯 ∈ gl(W) with ρ_W(Tx)∘𝒯 = 𝒯∘ρ_W(Tx) + 𝒯∘ρ_W(x)∘𝒯.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBRepresentation {
    base: RBAlgebra,
    curly_t: Matrix,
    rho_w: LinearRep,
}

impl RBRepresentation {
    pub fn new(base: RBAlgebra, curly_t: Matrix, rho_w: LinearRep) -> Result<Self, AlgebraError> {
        let r = Self::new_unchecked(base, curly_t, rho_w)?;
        check_representation(&r.rho_w).into_result()?;
        check_rb_representation(&r).into_result()?;
        Ok(r)
    }

    pub fn new_unchecked(
        base: RBAlgebra,
        curly_t: Matrix,
        rho_w: LinearRep,
    ) -> Result<Self, AlgebraError> {
        if rho_w.algebra() != base.g() {
            return Err(AlgebraError::MismatchedBase);
        }
        let w = rho_w.space_dim();
        if curly_t.rows() != w || curly_t.cols() != w {
            return Err(AlgebraError::Shape(format!(
                "operator on W must be square of size {}, got {}x{}",
                w,
                curly_t.rows(),
                curly_t.cols()
            )));
        }
        Ok(RBRepresentation {
            base,
            curly_t,
            rho_w,
        })
    }

    pub fn base(&self) -> &RBAlgebra {
        &self.base
    }

    pub fn curly_t(&self) -> &Matrix {
        &self.curly_t
    }

    pub fn rho_w(&self) -> &LinearRep {
        &self.rho_w
    }

    pub fn w_dim(&self) -> usize {
        self.rho_w.space_dim()
    }
}

impl Serialize for RBRepresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("curlyT", &self.curly_t)?;
        map.serialize_entry("rho_w", &self.rho_w)?;
        map.end()
    }
}

/// [Tu_i, Tu_j] = T(ρ(Tu_i)u_j − ρ(Tu_j)u_i) on all basis pairs i ≤ j (the
/// diagonal is vacuous by antisymmetry but is evaluated anyway to keep a
/// uniform code path). Residuals are left minus right.
pub fn check_rrb(a: &RRBAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let v = a.v_dim();
    for i in 0..v {
        for j in i..v {
            let ti = a.t_basis(i);
            let tj = a.t_basis(j);
            let lhs = a.g().bracket(&ti, &tj);
            let inner: Vec<Rational> = {
                let x = a.rho().apply(&ti, &basis_vec(v, j));
                let y = a.rho().apply(&tj, &basis_vec(v, i));
                x.iter().zip(&y).map(|(p, q)| p - q).collect()
            };
            let rhs = a.t_apply(&inner);
            let residual: Vec<Rational> = lhs.iter().zip(&rhs).map(|(p, q)| p - q).collect();
            report.check_zero("relative_rota_baxter", &[i, j], residual);
        }
    }
    report
}

/// [Tx_i, Tx_j] = T([Tx_i, x_j] + [x_i, Tx_j]) on all basis pairs i ≤ j.
pub fn check_rb(a: &RBAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let ti = a.t.col(i);
            let tj = a.t.col(j);
            let lhs = a.g.bracket(&ti, &tj);
            let inner: Vec<Rational> = {
                let x = a.g.bracket(&ti, &basis_vec(n, j));
                let y = a.g.bracket(&basis_vec(n, i), &tj);
                x.iter().zip(&y).map(|(p, q)| p + q).collect()
            };
            let rhs = a.t.mul_vec(&inner);
            let residual: Vec<Rational> = lhs.iter().zip(&rhs).map(|(p, q)| p - q).collect();
            report.check_zero("rota_baxter", &[i, j], residual);
        }
    }
    report
}

/// The two coefficient-package equations:
/// μ(ρ(x)u) = ρ_W(x)μ(u) − μ(u)ρ_ℋ(x)  (mu_equivariance, witness [i, k]),
/// ρ_ℋ(Tu)∘𝒯 = 𝒯∘ρ_W(Tu) + 𝒯∘μ(u)∘𝒯  (operator_compatibility, witness [k]).
pub fn check_rrb_representation(r: &RRBRepresentation) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (n, v) = (r.base.g_dim(), r.base.v_dim());
    for i in 0..n {
        for k in 0..v {
            let lhs = r.mu_vec(&r.base.rho().apply(&basis_vec(n, i), &basis_vec(v, k)));
            let rhs = r
                .rho_w
                .act(i)
                .mul(&r.mu[k])
                .sub(&r.mu[k].mul(r.rho_h.act(i)));
            report.check_zero_matrix("mu_equivariance", &[i, k], &lhs.sub(&rhs));
        }
    }
    for k in 0..v {
        let tu = r.base.t_basis(k);
        let lhs = r.rho_h.act_vec(&tu).mul(&r.curly_t);
        let rhs = r
            .curly_t
            .mul(&r.rho_w.act_vec(&tu))
            .add(&r.curly_t.mul(&r.mu[k]).mul(&r.curly_t));
        report.check_zero_matrix("operator_compatibility", &[k], &lhs.sub(&rhs));
    }
    report
}

/// ρ_W(Tx)∘𝒯 = 𝒯∘ρ_W(Tx) + 𝒯∘ρ_W(x)∘𝒯 on all g-basis elements.
pub fn check_rb_representation(r: &RBRepresentation) -> ValidationReport {
    let mut report = ValidationReport::default();
    for i in 0..r.base.dim() {
        let tx = r.base.t.col(i);
        let lhs = r.rho_w.act_vec(&tx).mul(&r.curly_t);
        let rhs = r
            .curly_t
            .mul(&r.rho_w.act_vec(&tx))
            .add(&r.curly_t.mul(r.rho_w.act(i)).mul(&r.curly_t));
        report.check_zero_matrix("operator_compatibility", &[i], &lhs.sub(&rhs));
    }
    report
}

/// Adjoint coefficient package [V →(T)→ g, ad, ρ, ρ̄] with ρ̄(u)(x) = −ρ(x)u.
pub fn adjoint_rrb_rep(a: &RRBAlgebra) -> RRBRepresentation {
    let (n, v) = (a.g_dim(), a.v_dim());
    let mu = (0..v)
        .map(|k| {
            // Column j of μ(u_k): −ρ(e_j)u_k.
            Matrix::from_fn(v, n, |r, j| -a.rho().act(j).get(r, k))
        })
        .collect();
    RRBRepresentation {
        base: a.clone(),
        curly_t: a.t.clone(),
        rho_h: adjoint_rep(a.g()),
        rho_w: a.rep.clone(),
        mu,
    }
}

/// Dual coefficient package [ℋ* →(−𝒯ᵀ)→ W*, ρ_W*, ρ_ℋ*, −μᵀ]: the complex
/// reverses (the new W is ℋ*), actions dualize as negated transposes.
pub fn dual_rrb_rep(r: &RRBRepresentation) -> RRBRepresentation {
    RRBRepresentation {
        base: r.base.clone(),
        curly_t: r.curly_t.transpose().neg(),
        rho_h: dual_rep(&r.rho_w),
        rho_w: dual_rep(&r.rho_h),
        mu: r.mu.iter().map(|m| m.transpose().neg()).collect(),
    }
}

/// Coadjoint package: the dual of the adjoint one.
pub fn coadjoint_rrb_rep(a: &RRBAlgebra) -> RRBRepresentation {
    dual_rrb_rep(&adjoint_rrb_rep(a))
}

/// Adjoint Rota-Baxter coefficient data [g; T, ad].
pub fn adjoint_rb_rep(a: &RBAlgebra) -> RBRepresentation {
    RBRepresentation {
        base: a.clone(),
        curly_t: a.t.clone(),
        rho_w: adjoint_rep(&a.g),
    }
}

/// Dual Rota-Baxter coefficient data [W*; −𝒯ᵀ, ρ_W*].
pub fn dual_rb_rep(r: &RBRepresentation) -> RBRepresentation {
    RBRepresentation {
        base: r.base.clone(),
        curly_t: r.curly_t.transpose().neg(),
        rho_w: dual_rep(&r.rho_w),
    }
}

/// Semidirect product on g⊕ℋ and V⊕W (bases concatenated in that order):
/// [x+α, y+β] = [x,y] + ρ_ℋ(x)β − ρ_ℋ(y)α,
/// ϱ(x+α)(u+ξ) = ρ(x)u + ρ_W(x)ξ − μ(u)α,
/// 𝔗(u+ξ) = Tu + 𝒯ξ.
/// The output is validated by construction (it must pass every axiom check).
pub fn semidirect_rrb(a: &RRBAlgebra, r: &RRBRepresentation) -> Result<RRBAlgebra, AlgebraError> {
    if r.base() != a {
        return Err(AlgebraError::MismatchedBase);
    }
    let (n, v, h, w) = (a.g_dim(), a.v_dim(), r.h_dim(), r.w_dim());
    let big_n = n + h;
    let mut c = vec![vec![vec![Rational::zero(); big_n]; big_n]; big_n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = a.g().structure_constant(i, j, k).clone();
            }
        }
        for b in 0..h {
            // [e_i, ε_b] = ρ_ℋ(e_i)ε_b, and antisymmetrically.
            for bt in 0..h {
                let val = r.rho_h.act(i).get(bt, b).clone();
                c[i][n + b][n + bt] = val.clone();
                c[n + b][i][n + bt] = -val;
            }
        }
    }
    let lie = LieAlgebra::new(big_n, c)?;

    let mut action = Vec::with_capacity(big_n);
    for i in 0..n {
        action.push(Matrix::block_diag(&[a.rho().act(i), r.rho_w.act(i)]));
    }
    for b in 0..h {
        // ϱ(ε_b)(u_k) = −μ(u_k)ε_b lands in W; ϱ(ε_b) kills W.
        let mut m = Matrix::zeros(v + w, v + w);
        for k in 0..v {
            for rw in 0..w {
                m.set(v + rw, k, -r.mu[k].get(rw, b));
            }
        }
        action.push(m);
    }
    let rep = LinearRep::new(lie, action)?;
    let t = Matrix::block_diag(&[&a.t, &r.curly_t]);
    RRBAlgebra::new(rep, t)
}

/// Semidirect product on g⊕W with [x+u, y+v] = [x,y] + ρ_W(x)v − ρ_W(y)u and
/// the block-diagonal operator diag(T, 𝒯).
pub fn semidirect_rb(a: &RBAlgebra, r: &RBRepresentation) -> Result<RBAlgebra, AlgebraError> {
    if r.base() != a {
        return Err(AlgebraError::MismatchedBase);
    }
    let (n, w) = (a.dim(), r.w_dim());
    let big_n = n + w;
    let mut c = vec![vec![vec![Rational::zero(); big_n]; big_n]; big_n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = a.g.structure_constant(i, j, k).clone();
            }
        }
        for b in 0..w {
            for bt in 0..w {
                let val = r.rho_w.act(i).get(bt, b).clone();
                c[i][n + b][n + bt] = val.clone();
                c[n + b][i][n + bt] = -val;
            }
        }
    }
    let lie = LieAlgebra::new(big_n, c)?;
    let t = Matrix::block_diag(&[&a.t, &r.curly_t]);
    RBAlgebra::new(lie, t)
}

/// Induced pre-Lie product on V: u ·_T v = ρ(Tu)v. Validated by construction.
pub fn induced_prelie(a: &RRBAlgebra) -> Result<PreLieAlgebra, AlgebraError> {
    let v = a.v_dim();
    let mut p = vec![vec![vec![Rational::zero(); v]; v]; v];
    for i in 0..v {
        let m = a.rho().act_vec(&a.t_basis(i));
        for j in 0..v {
            for k in 0..v {
                p[i][j][k] = m.get(k, j).clone();
            }
        }
    }
    PreLieAlgebra::new(v, p)
}

/// Induced pre-Lie representation on W: θ(u) = ρ_W(Tu), ϑ(u)ξ = −μ(u)𝒯(ξ).
/// Validated against the induced pre-Lie algebra by construction.
pub fn induced_prelie_rep(
    a: &RRBAlgebra,
    r: &RRBRepresentation,
) -> Result<PreLieRep, AlgebraError> {
    if r.base() != a {
        return Err(AlgebraError::MismatchedBase);
    }
    let prelie = induced_prelie(a)?;
    let theta = (0..a.v_dim())
        .map(|k| r.rho_w.act_vec(&a.t_basis(k)))
        .collect();
    let vartheta = (0..a.v_dim())
        .map(|k| r.mu[k].mul(&r.curly_t).neg())
        .collect();
    PreLieRep::new(prelie, theta, vartheta)
}

/// Reads a Rota-Baxter operator as a relative one over the adjoint
/// representation: V = g, ρ = ad, same T.
pub fn rb_to_rrb(a: &RBAlgebra) -> Result<RRBAlgebra, AlgebraError> {
    RRBAlgebra::new(adjoint_rep(&a.g), a.t.clone())
}

/// Candidate relative Rota-Baxter structure from an antisymmetric matrix r:
/// V = g*, ρ = coadjoint, T = r read as a map g* → g. Returns the candidate
/// together with the verdict of the relative Rota-Baxter identity, so this
/// doubles as an r-matrix tester.
pub fn rrb_from_r_matrix(
    g: &LieAlgebra,
    r: &Matrix,
) -> Result<(RRBAlgebra, ValidationReport), AlgebraError> {
    let n = g.dim();
    if r.rows() != n || r.cols() != n {
        return Err(AlgebraError::Shape(format!("r must be {n}x{n}")));
    }
    if *r != r.transpose().neg() {
        return Err(AlgebraError::Shape("r must be antisymmetric".into()));
    }
    let coadjoint = dual_rep(&adjoint_rep(g));
    let candidate = RRBAlgebra::new_unchecked(coadjoint, r.clone())?;
    let report = check_rrb(&candidate);
    Ok((candidate, report))
}

/// The operator algebra of a two-term complex 𝒯: W → ℋ: the Lie algebra
/// End(W→ℋ) = {(A₀, A₁) : A₀𝒯 = 𝒯A₁} under componentwise commutators, acting
/// on Hom(ℋ, ker 𝒯) by ς(A₀,A₁)(Φ) = A₁Φ − ΦA₀, with operator Ω(Φ) = (0, Φ𝒯).
/// Basis conventions: End(W→ℋ) carries the canonical echelon basis of the
/// kernel of (A₀,A₁) ↦ A₀𝒯 − 𝒯A₁ on gl(ℋ)⊕gl(W) coordinates (A₀ row-major,
/// then A₁ row-major); Hom(ℋ, ker 𝒯) is indexed by (kernel basis vector p,
/// ℋ-basis index q) with flat index p·dim(ℋ) + q.
pub fn end_complex_rrb(curly_t: &Matrix) -> Result<RRBAlgebra, AlgebraError> {
    let (h, w) = (curly_t.rows(), curly_t.cols());
    // Linear condition A₀𝒯 − 𝒯A₁ = 0 on (A₀, A₁) coordinates.
    let mut cond = Matrix::zeros(h * w, h * h + w * w);
    for a in 0..h {
        for c in 0..w {
            let row = a * w + c;
            for b in 0..h {
                cond.set(row, a * h + b, curly_t.get(b, c).clone());
            }
            for d in 0..w {
                let cur = cond.get(row, h * h + d * w + c) - curly_t.get(a, d);
                cond.set(row, h * h + d * w + c, cur);
            }
        }
    }
    let end_space = cond.kernel();
    let m = end_space.dim();
    let unpack = |flat: &[Rational]| -> (Matrix, Matrix) {
        let a0 = Matrix::from_fn(h, h, |i, j| flat[i * h + j].clone());
        let a1 = Matrix::from_fn(w, w, |i, j| flat[h * h + i * w + j].clone());
        (a0, a1)
    };
    let pack = |a0: &Matrix, a1: &Matrix| -> Vec<Rational> {
        let mut v = Vec::with_capacity(h * h + w * w);
        for i in 0..h {
            for j in 0..h {
                v.push(a0.get(i, j).clone());
            }
        }
        for i in 0..w {
            for j in 0..w {
                v.push(a1.get(i, j).clone());
            }
        }
        v
    };
    let pairs: Vec<(Matrix, Matrix)> = end_space.basis().iter().map(|v| unpack(v)).collect();

    // Structure constants of the componentwise commutator in the chosen basis.
    let mut c = vec![vec![vec![Rational::zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            let a0 = pairs[i]
                .0
                .mul(&pairs[j].0)
                .sub(&pairs[j].0.mul(&pairs[i].0));
            let a1 = pairs[i]
                .1
                .mul(&pairs[j].1)
                .sub(&pairs[j].1.mul(&pairs[i].1));
            c[i][j] = express_in_echelon_basis(&end_space, &pack(&a0, &a1))
                .expect("commutator stays in the operator algebra");
        }
    }
    let lie = LieAlgebra::new(m, c)?;

    let ker = curly_t.kernel();
    let kd = ker.dim();
    let v_dim = kd * h;
    // Φ_{p,q} maps the ℋ-basis vector q to kernel basis vector p.
    let phi = |p: usize, q: usize| -> Matrix {
        Matrix::from_fn(w, h, |i, j| {
            if j == q {
                ker.basis()[p][i].clone()
            } else {
                Rational::zero()
            }
        })
    };
    let phi_coords = |mat: &Matrix| -> Vec<Rational> {
        // Each column must lie in ker 𝒯; coordinates come from the echelon basis.
        let mut out = vec![Rational::zero(); kd * h];
        for q in 0..h {
            let col = mat.col(q);
            let coords =
                express_in_echelon_basis(&ker, &col).expect("action output stays in Hom(ℋ, ker 𝒯)");
            for p in 0..kd {
                out[p * h + q] = coords[p].clone();
            }
        }
        out
    };
    let mut action = Vec::with_capacity(m);
    for (a0, a1) in &pairs {
        let mut mat = Matrix::zeros(v_dim, v_dim);
        for p in 0..kd {
            for q in 0..h {
                let psi = a1.mul(&phi(p, q)).sub(&phi(p, q).mul(a0));
                let coords = phi_coords(&psi);
                for row in 0..v_dim {
                    mat.set(row, p * h + q, coords[row].clone());
                }
            }
        }
        action.push(mat);
    }
    let rep = LinearRep::new(lie, action)?;

    let mut t = Matrix::zeros(m, v_dim);
    for p in 0..kd {
        for q in 0..h {
            let omega = pack(&Matrix::zeros(h, h), &phi(p, q).mul(curly_t));
            let coords = express_in_echelon_basis(&end_space, &omega)
                .expect("operator output stays in the operator algebra");
            for row in 0..m {
                t.set(row, p * h + q, coords[row].clone());
            }
        }
    }
    RRBAlgebra::new(rep, t)
}

/// Coordinates of v in the reduced-echelon basis of s, or None if v ∉ s.
pub fn express_in_echelon_basis(s: &Subspace, v: &[Rational]) -> Option<Vec<Rational>> {
    let coords: Vec<Rational> = s
        .basis()
        .iter()
        .map(|row| {
            let pc = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero basis row");
            v[pc].clone()
        })
        .collect();
    let mut recon = vec![Rational::zero(); v.len()];
    for (c, row) in coords.iter().zip(s.basis()) {
        if !c.is_zero() {
            for j in 0..v.len() {
                recon[j] += c * &row[j];
            }
        }
    }
    if recon.iter().zip(v).all(|(a, b)| a == b) {
        Some(coords)
    } else {
        None
    }
}

/// Derivation conditions for (f_g, f_V):
/// f_g is a Lie algebra derivation (lie_derivation, witness [i, j]),
/// T∘f_V = f_g∘T (operator_commutation, no witness indices),
/// f_V∘ρ(x) = ρ(x)∘f_V + ρ(f_g x) on basis x (action_derivation, witness [i]).
pub fn check_derivation(a: &RRBAlgebra, f_g: &Matrix, f_v: &Matrix) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = a.g_dim();
    assert_eq!((f_g.rows(), f_g.cols()), (n, n), "f_g shape");
    assert_eq!(
        (f_v.rows(), f_v.cols()),
        (a.v_dim(), a.v_dim()),
        "f_V shape"
    );
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f_g.mul_vec(&a.g().bracket_basis(i, j));
            let rhs1 = a.g().bracket(&f_g.col(i), &basis_vec(n, j));
            let rhs2 = a.g().bracket(&basis_vec(n, i), &f_g.col(j));
            let residual: Vec<Rational> =
                (0..n).map(|k| &lhs[k] - &(&rhs1[k] + &rhs2[k])).collect();
            report.check_zero("lie_derivation", &[i, j], residual);
        }
    }
    report.check_zero_matrix(
        "operator_commutation",
        &[],
        &a.t.mul(f_v).sub(&f_g.mul(&a.t)),
    );
    for i in 0..n {
        let lhs = f_v.mul(a.rho().act(i));
        let rhs = a.rho().act(i).mul(f_v).add(&a.rho().act_vec(&f_g.col(i)));
        report.check_zero_matrix("action_derivation", &[i], &lhs.sub(&rhs));
    }
    report
}

/// Rota-Baxter derivation conditions for f: Lie derivation plus f∘T = T∘f.
pub fn check_rb_derivation(a: &RBAlgebra, f: &Matrix) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = a.dim();
    assert_eq!((f.rows(), f.cols()), (n, n), "f shape");
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.mul_vec(&a.g.bracket_basis(i, j));
            let rhs1 = a.g.bracket(&f.col(i), &basis_vec(n, j));
            let rhs2 = a.g.bracket(&basis_vec(n, i), &f.col(j));
            let residual: Vec<Rational> =
                (0..n).map(|k| &lhs[k] - &(&rhs1[k] + &rhs2[k])).collect();
            report.check_zero("lie_derivation", &[i, j], residual);
        }
    }
    report.check_zero_matrix("operator_commutation", &[], &f.mul(&a.t).sub(&a.t.mul(f)));
    report
}

/// The Lie semidirect product g ⋉_ρ V with the block operator [[0, T], [0, 0]]
/// (a Rota-Baxter operator on it). Used to restate relative derivations as
/// plain Rota-Baxter derivations of this algebra.
pub fn rb_operator_on_semidirect(a: &RRBAlgebra) -> Result<RBAlgebra, AlgebraError> {
    let (n, v) = (a.g_dim(), a.v_dim());
    let big_n = n + v;
    let mut c = vec![vec![vec![Rational::zero(); big_n]; big_n]; big_n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = a.g().structure_constant(i, j, k).clone();
            }
        }
        for b in 0..v {
            for bt in 0..v {
                let val = a.rho().act(i).get(bt, b).clone();
                c[i][n + b][n + bt] = val.clone();
                c[n + b][i][n + bt] = -val;
            }
        }
    }
    let lie = LieAlgebra::new(big_n, c)?;
    let mut t = Matrix::zeros(big_n, big_n);
    t.set_block(0, n, &a.t);
    RBAlgebra::new(lie, t)
}

/// check_derivation restated through the semidirect product: diag(f_g, f_V)
/// must be a Rota-Baxter derivation of rb_operator_on_semidirect(a).
pub fn check_derivation_via_semidirect(
    a: &RRBAlgebra,
    f_g: &Matrix,
    f_v: &Matrix,
) -> Result<ValidationReport, AlgebraError> {
    let rb = rb_operator_on_semidirect(a)?;
    Ok(check_rb_derivation(&rb, &Matrix::block_diag(&[f_g, f_v])))
}

/// Stacks the residuals of a linear condition evaluated on each unit unknown
/// into a constraint matrix, then returns its kernel.
fn solution_space(
    total_unknowns: usize,
    residual: impl Fn(&[Rational]) -> Vec<Rational>,
) -> Subspace {
    let zero_res = residual(&vec![Rational::zero(); total_unknowns]);
    let rows = zero_res.len();
    let mut m = Matrix::zeros(rows, total_unknowns);
    for u in 0..total_unknowns {
        let mut unit = vec![Rational::zero(); total_unknowns];
        unit[u] = num::One::one();
        let col = residual(&unit);
        for r in 0..rows {
            m.set(r, u, col[r].clone());
        }
    }
    m.kernel()
}

/// Solution space of the derivation conditions, as vectors (f_g row-major,
/// then f_V row-major). Built directly from the defining equations, not from
/// any cochain machinery.
pub fn derivation_space(a: &RRBAlgebra) -> Subspace {
    let (n, v) = (a.g_dim(), a.v_dim());
    solution_space(n * n + v * v, |flat| {
        let f_g = Matrix::from_fn(n, n, |i, j| flat[i * n + j].clone());
        let f_v = Matrix::from_fn(v, v, |i, j| flat[n * n + i * v + j].clone());
        check_derivation_residuals(a, &f_g, &f_v)
    })
}

fn check_derivation_residuals(a: &RRBAlgebra, f_g: &Matrix, f_v: &Matrix) -> Vec<Rational> {
    let n = a.g_dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f_g.mul_vec(&a.g().bracket_basis(i, j));
            let rhs1 = a.g().bracket(&f_g.col(i), &basis_vec(n, j));
            let rhs2 = a.g().bracket(&basis_vec(n, i), &f_g.col(j));
            for k in 0..n {
                out.push(&lhs[k] - &(&rhs1[k] + &rhs2[k]));
            }
        }
    }
    let comm = a.t.mul(f_v).sub(&f_g.mul(&a.t));
    for i in 0..comm.rows() {
        out.extend(comm.row(i));
    }
    for i in 0..n {
        let res = f_v
            .mul(a.rho().act(i))
            .sub(&a.rho().act(i).mul(f_v))
            .sub(&a.rho().act_vec(&f_g.col(i)));
        for r in 0..res.rows() {
            out.extend(res.row(r));
        }
    }
    out
}

/// Solution space of the Rota-Baxter derivation conditions (f row-major).
pub fn rb_derivation_space(a: &RBAlgebra) -> Subspace {
    let n = a.dim();
    solution_space(n * n, |flat| {
        let f = Matrix::from_fn(n, n, |i, j| flat[i * n + j].clone());
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = f.mul_vec(&a.g.bracket_basis(i, j));
                let rhs1 = a.g.bracket(&f.col(i), &basis_vec(n, j));
                let rhs2 = a.g.bracket(&basis_vec(n, i), &f.col(j));
                for k in 0..n {
                    out.push(&lhs[k] - &(&rhs1[k] + &rhs2[k]));
                }
            }
        }
        let comm = f.mul(&a.t).sub(&a.t.mul(&f));
        for i in 0..n {
            out.extend(comm.row(i));
        }
        out
    })
}

/// Commutator functor from associative data: given an associative algebra
/// (product constants a[i][j][k]), a Rota-Baxter operator T on it, a left
/// module action, and a module operator 𝒯 with T(x)𝒯(u) = 𝒯(x𝒯(u) + T(x)u),
/// produces the commutator Rota-Baxter Lie algebra and the induced
/// representation. Every associative-side axiom is checked first; violations
/// are reported per axiom.
pub fn from_associative(
    assoc: &[Vec<Vec<Rational>>],
    t: &Matrix,
    module_action: &[Matrix],
    curly_t: &Matrix,
) -> Result<(RBAlgebra, RBRepresentation), AlgebraError> {
    let n = assoc.len();
    if assoc
        .iter()
        .any(|ai| ai.len() != n || ai.iter().any(|aij| aij.len() != n))
    {
        return Err(AlgebraError::Shape(format!(
            "product constants must be {n}^3"
        )));
    }
    if t.rows() != n || t.cols() != n {
        return Err(AlgebraError::Shape(format!("operator must be {n}x{n}")));
    }
    let w = curly_t.rows();
    if curly_t.cols() != w {
        return Err(AlgebraError::Shape("module operator must be square".into()));
    }
    if module_action.len() != n || module_action.iter().any(|m| m.rows() != w || m.cols() != w) {
        return Err(AlgebraError::Shape(format!(
            "need {n} module action matrices of size {w}"
        )));
    }

    let prod = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..n {
                    if !assoc[i][j][k].is_zero() {
                        out[k] += &f * &assoc[i][j][k];
                    }
                }
            }
        }
        out
    };
    let act = |x: &[Rational]| -> Matrix {
        let mut out = Matrix::zeros(w, w);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&module_action[i].scale(c));
            }
        }
        out
    };

    let mut report = ValidationReport::default();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = prod(&prod(&basis_vec(n, i), &basis_vec(n, j)), &basis_vec(n, k));
                let rhs = prod(&basis_vec(n, i), &prod(&basis_vec(n, j), &basis_vec(n, k)));
                let residual: Vec<Rational> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                report.check_zero("associativity", &[i, j, k], residual);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ti = t.col(i);
            let tj = t.col(j);
            let lhs = prod(&ti, &tj);
            let inner: Vec<Rational> = {
                let x = prod(&ti, &basis_vec(n, j));
                let y = prod(&basis_vec(n, i), &tj);
                x.iter().zip(&y).map(|(p, q)| p + q).collect()
            };
            let rhs = t.mul_vec(&inner);
            let residual: Vec<Rational> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            report.check_zero("rb_associative", &[i, j], residual);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = act(&prod(&basis_vec(n, i), &basis_vec(n, j)));
            let rhs = module_action[i].mul(&module_action[j]);
            report.check_zero_matrix("module_associativity", &[i, j], &lhs.sub(&rhs));
        }
    }
    for i in 0..n {
        let ti = t.col(i);
        let lhs = act(&ti).mul(curly_t);
        let rhs = curly_t
            .mul(&module_action[i])
            .mul(curly_t)
            .add(&curly_t.mul(&act(&ti)));
        report.check_zero_matrix("module_rb_compatibility", &[i], &lhs.sub(&rhs));
    }
    report.into_result()?;

    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = &assoc[i][j][k] - &assoc[j][i][k];
            }
        }
    }
    let rb = RBAlgebra::new(LieAlgebra::new(n, c)?, t.clone())?;
    let rho_w = LinearRep::new(rb.g.clone(), module_action.to_vec())?;
    let rep = RBRepresentation::new(rb.clone(), curly_t.clone(), rho_w)?;
    Ok((rb, rep))
}
