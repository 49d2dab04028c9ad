//! Classification correspondences, both made executable in coordinates:
//! abelian extensions against 2-cocycles, and skeletal (relative) Rota-Baxter
//! Lie 2-algebras against 3-cocycles, each in the relative and plain variants.
//!
//! Extensions always live on concatenated bases (g then ℋ, V then W) with the
//! canonical inclusion and projection, so roundtrips are coordinate
//! identities. Sections are plain matrices left-inverted by the projections.

use num::Zero;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::algebra_core::{basis_vec, AlgebraError, LieAlgebra, LinearRep, ValidationReport};
use crate::cohomology::combinatorics::{binomial, increasing_tuples, tuple_rank};
use crate::cohomology::{
    coboundary_matrix, eval_alt_tensor, eval_alternating, rb_coboundary_matrix, Cochain,
    CochainScheme, RBCochainScheme,
};
use crate::exact_linalg::{rationals_to_strings, Matrix, Rational};
use crate::rrb_structures::{RBAlgebra, RBRepresentation, RRBAlgebra, RRBRepresentation};

fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Σ coeffs[i] · mats[i], for linear maps stored one matrix per basis element.
fn combine(mats: &[Matrix], coeffs: &[Rational], rows: usize, cols: usize) -> Matrix {
    debug_assert_eq!(mats.len(), coeffs.len());
    let mut out = Matrix::zeros(rows, cols);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// Decodes the entries of an element of the degree-(n+1) cochain space into
/// per-block violations: rows are labeled h / w / theta with multi-index
/// witnesses (basis tuple then target coordinates).
fn cocycle_image_report(
    coeffs: &RRBRepresentation,
    degree: usize,
    image: &[Rational],
    label: &str,
) -> ValidationReport {
    let out = CochainScheme::new(coeffs, degree + 1);
    let (fh, fw, _) = out.layout();
    let (g, v) = (coeffs.base().g_dim(), coeffs.base().v_dim());
    let (h, w) = (coeffs.h_dim(), coeffs.w_dim());
    debug_assert_eq!(image.len(), out.total_dim());
    let mut report = ValidationReport::default();
    for (t, tuple) in increasing_tuples(g, degree + 1).iter().enumerate() {
        for a in 0..h {
            let mut wit = tuple.clone();
            wit.push(a);
            report.check_zero(
                &format!("{label}_h_block"),
                &wit,
                vec![image[t * h + a].clone()],
            );
        }
    }
    for (t, tuple) in increasing_tuples(g, degree).iter().enumerate() {
        for k in 0..v {
            for c in 0..w {
                let mut wit = tuple.clone();
                wit.push(k);
                wit.push(c);
                report.check_zero(
                    &format!("{label}_w_block"),
                    &wit,
                    vec![image[fh + (t * v + k) * w + c].clone()],
                );
            }
        }
    }
    for (t, tuple) in increasing_tuples(v, degree).iter().enumerate() {
        for a in 0..h {
            let mut wit = tuple.clone();
            wit.push(a);
            report.check_zero(
                &format!("{label}_theta_block"),
                &wit,
                vec![image[fh + fw + t * h + a].clone()],
            );
        }
    }
    report
}

/// Applies the degree-`degree` coboundary to flat coordinates and reports the
/// nonzero output entries block by block.
fn cocycle_check(
    coeffs: &RRBRepresentation,
    degree: usize,
    coords: &[Rational],
    label: &str,
) -> Result<ValidationReport, AlgebraError> {
    let scheme = CochainScheme::new(coeffs, degree);
    if coords.len() != scheme.total_dim() {
        return Err(AlgebraError::Shape(format!(
            "degree-{degree} cochain needs {} coordinates, got {}",
            scheme.total_dim(),
            coords.len()
        )));
    }
    let image = coboundary_matrix(&scheme).mul_vec(coords);
    Ok(cocycle_image_report(coeffs, degree, &image, label))
}

/// An abelian extension of relative Rota-Baxter Lie algebras presented on the
/// concatenated bases g⊕ℋ and V⊕W: the base sits in the leading coordinates,
/// the abelian kernel pair (ℋ, W) in the trailing ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianExtension {
    total: RRBAlgebra,
    base: RRBAlgebra,
    h_dim: usize,
    w_dim: usize,
}

impl AbelianExtension {
    /// Validates the block structure: the canonical projection is a
    /// homomorphism onto the base, ℋ is an abelian ideal acting trivially on
    /// V⊕W, the total representation preserves W, and the total operator
    /// restricts to W → ℋ over the base operator.
    pub fn new(
        total: RRBAlgebra,
        base: RRBAlgebra,
        h_dim: usize,
        w_dim: usize,
    ) -> Result<Self, AlgebraError> {
        let (g, v) = (base.g_dim(), base.v_dim());
        if total.g_dim() != g + h_dim || total.v_dim() != v + w_dim {
            return Err(AlgebraError::Shape(format!(
                "total must live on {}+{} and {}+{} dimensions, got {} and {}",
                g,
                h_dim,
                v,
                w_dim,
                total.g_dim(),
                total.v_dim()
            )));
        }
        let mut report = ValidationReport::default();
        for i in 0..g {
            for j in i + 1..g {
                let full = total.g().bracket_basis(i, j);
                let diff = vec_sub(&full[..g], &base.g().bracket_basis(i, j));
                report.check_zero("projection_bracket", &[i, j], diff);
            }
            for b in 0..h_dim {
                let full = total.g().bracket_basis(i, g + b);
                report.check_zero("ideal", &[i, b], full[..g].to_vec());
            }
        }
        for a in 0..h_dim {
            for b in a + 1..h_dim {
                report.check_zero("abelian", &[a, b], total.g().bracket_basis(g + a, g + b));
            }
        }
        for i in 0..g {
            let m = total.rho().act(i);
            for k in 0..v {
                let col = m.col(k);
                let diff = vec_sub(&col[..v], &base.rho().act(i).col(k));
                report.check_zero("projection_representation", &[i, k], diff);
            }
            for c in 0..w_dim {
                let col = m.col(v + c);
                report.check_zero("subrepresentation_w", &[i, c], col[..v].to_vec());
            }
        }
        for b in 0..h_dim {
            let m = total.rho().act(g + b);
            for k in 0..v {
                let col = m.col(k);
                report.check_zero("action_h_into_w", &[b, k], col[..v].to_vec());
            }
            for c in 0..w_dim {
                report.check_zero("nu_trivial", &[b, c], m.col(v + c));
            }
        }
        for k in 0..v {
            let col = total.t().col(k);
            let diff = vec_sub(&col[..g], &base.t().col(k));
            report.check_zero("projection_operator", &[k], diff);
        }
        for c in 0..w_dim {
            let col = total.t().col(v + c);
            report.check_zero("operator_w_into_h", &[c], col[..g].to_vec());
        }
        report.into_result()?;
        Ok(AbelianExtension {
            total,
            base,
            h_dim,
            w_dim,
        })
    }

    pub fn total(&self) -> &RRBAlgebra {
        &self.total
    }

    pub fn base(&self) -> &RRBAlgebra {
        &self.base
    }

    pub fn g_dim(&self) -> usize {
        self.base.g_dim()
    }

    pub fn v_dim(&self) -> usize {
        self.base.v_dim()
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    pub fn w_dim(&self) -> usize {
        self.w_dim
    }

    /// The ℋ×W block of the total operator, i.e. the complex map 𝒯 of the
    /// kernel pair.
    pub fn curly_t_block(&self) -> Matrix {
        let (g, v) = (self.g_dim(), self.v_dim());
        Matrix::from_fn(self.h_dim, self.w_dim, |a, c| {
            self.total.t().get(g + a, v + c).clone()
        })
    }
}

impl Serialize for AbelianExtension {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("base", &self.base)?;
        map.serialize_entry("h_dim", &self.h_dim)?;
        map.serialize_entry("total", &self.total)?;
        map.serialize_entry("w_dim", &self.w_dim)?;
        map.end()
    }
}

/// The canonical section (x ↦ (x, 0), u ↦ (u, 0)) of an extension in
/// concatenated-basis form.
pub fn canonical_section(e: &AbelianExtension) -> (Matrix, Matrix) {
    let sg = Matrix::vstack(&[
        &Matrix::identity(e.g_dim()),
        &Matrix::zeros(e.h_dim(), e.g_dim()),
    ]);
    let sv = Matrix::vstack(&[
        &Matrix::identity(e.v_dim()),
        &Matrix::zeros(e.w_dim(), e.v_dim()),
    ]);
    (sg, sv)
}

fn section_check(e: &AbelianExtension, s_g: &Matrix, s_v: &Matrix) -> Result<(), AlgebraError> {
    let (g, v, h, w) = (e.g_dim(), e.v_dim(), e.h_dim(), e.w_dim());
    if s_g.rows() != g + h || s_g.cols() != g || s_v.rows() != v + w || s_v.cols() != v {
        return Err(AlgebraError::Shape(format!(
            "section must be ({}+{})x{} and ({}+{})x{}",
            g, h, g, v, w, v
        )));
    }
    let mut report = ValidationReport::default();
    let top_g = Matrix::from_fn(g, g, |i, j| s_g.get(i, j).clone());
    report.check_zero_matrix(
        "section_left_inverse_g",
        &[],
        &top_g.sub(&Matrix::identity(g)),
    );
    let top_v = Matrix::from_fn(v, v, |i, j| s_v.get(i, j).clone());
    report.check_zero_matrix(
        "section_left_inverse_v",
        &[],
        &top_v.sub(&Matrix::identity(v)),
    );
    report.into_result()
}

/// A 2-cochain (ω, ϖ, χ) in Hom(∧²g, ℋ) ⊕ Hom(g⊗V, W) ⊕ Hom(V, ℋ), stored in
/// the flat degree-2 cochain layout. Checked constructors verify the cocycle
/// identity against a declared coefficient package.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCocycle {
    pub omega: Vec<Rational>,
    pub varpi: Vec<Rational>,
    pub chi: Vec<Rational>,
}

impl TwoCocycle {
    pub fn new(
        coeffs: &RRBRepresentation,
        omega: Vec<Rational>,
        varpi: Vec<Rational>,
        chi: Vec<Rational>,
    ) -> Result<Self, AlgebraError> {
        let z = TwoCocycle { omega, varpi, chi };
        cocycle_check(coeffs, 2, &z.coords(), "two_cocycle")?.into_result()?;
        Ok(z)
    }

    /// No cocycle check; for feeding deliberately bad data to the checked ops.
    pub fn new_unchecked(omega: Vec<Rational>, varpi: Vec<Rational>, chi: Vec<Rational>) -> Self {
        TwoCocycle { omega, varpi, chi }
    }

    pub fn zero(coeffs: &RRBRepresentation) -> Self {
        let scheme = CochainScheme::new(coeffs, 2);
        let (fh, fw, th) = scheme.layout();
        TwoCocycle {
            omega: vec![Rational::zero(); fh],
            varpi: vec![Rational::zero(); fw],
            chi: vec![Rational::zero(); th],
        }
    }

    /// Splits flat degree-2 coordinates into the three blocks. Shape check
    /// only; use [`TwoCocycle::new`] to also verify the cocycle identity.
    pub fn from_coords(
        coeffs: &RRBRepresentation,
        coords: &[Rational],
    ) -> Result<Self, AlgebraError> {
        let scheme = CochainScheme::new(coeffs, 2);
        let (fh, fw, _) = scheme.layout();
        if coords.len() != scheme.total_dim() {
            return Err(AlgebraError::Shape(format!(
                "degree-2 cochain needs {} coordinates, got {}",
                scheme.total_dim(),
                coords.len()
            )));
        }
        Ok(TwoCocycle {
            omega: coords[..fh].to_vec(),
            varpi: coords[fh..fh + fw].to_vec(),
            chi: coords[fh + fw..].to_vec(),
        })
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut out = self.omega.clone();
        out.extend_from_slice(&self.varpi);
        out.extend_from_slice(&self.chi);
        out
    }

    pub fn to_cochain(&self) -> Cochain {
        Cochain {
            degree: 2,
            coords: self.coords(),
        }
    }
}

impl Serialize for TwoCocycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("chi", &rationals_to_strings(&self.chi))?;
        map.serialize_entry("omega", &rationals_to_strings(&self.omega))?;
        map.serialize_entry("varpi", &rationals_to_strings(&self.varpi))?;
        map.end()
    }
}

/// Builds the extension classified by a 2-cocycle: bracket twisted by ω,
/// action twisted by ϖ (with ℋ acting on V through −μ), operator twisted by
/// χ. The zero cocycle reproduces the semidirect product.
pub fn extension_from_cocycle(
    coeffs: &RRBRepresentation,
    z: &TwoCocycle,
) -> Result<AbelianExtension, AlgebraError> {
    cocycle_check(coeffs, 2, &z.coords(), "two_cocycle")?.into_result()?;
    let base = coeffs.base();
    let (g, v, h, w) = (base.g_dim(), base.v_dim(), coeffs.h_dim(), coeffs.w_dim());
    let big_g = g + h;

    let mut c = vec![vec![vec![Rational::zero(); big_g]; big_g]; big_g];
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                c[i][j][k] = base.g().structure_constant(i, j, k).clone();
            }
        }
        for j in i + 1..g {
            let t = tuple_rank(&[i, j], g);
            for a in 0..h {
                let val = z.omega[t * h + a].clone();
                c[i][j][g + a] = val.clone();
                c[j][i][g + a] = -val;
            }
        }
        for b in 0..h {
            for bt in 0..h {
                let val = coeffs.rho_h().act(i).get(bt, b).clone();
                c[i][g + b][g + bt] = val.clone();
                c[g + b][i][g + bt] = -val;
            }
        }
    }
    let lie = LieAlgebra::new(big_g, c)?;

    let mut action = Vec::with_capacity(big_g);
    for i in 0..g {
        let mut m = Matrix::block_diag(&[base.rho().act(i), coeffs.rho_w().act(i)]);
        for k in 0..v {
            for cw in 0..w {
                m.set(v + cw, k, z.varpi[(i * v + k) * w + cw].clone());
            }
        }
        action.push(m);
    }
    for b in 0..h {
        let mut m = Matrix::zeros(v + w, v + w);
        for k in 0..v {
            for cw in 0..w {
                m.set(v + cw, k, -coeffs.mu_basis(k).get(cw, b));
            }
        }
        action.push(m);
    }
    let rep = LinearRep::new(lie, action)?;

    let mut t = Matrix::zeros(big_g, v + w);
    t.set_block(0, 0, base.t());
    t.set_block(g, v, coeffs.curly_t());
    for k in 0..v {
        for a in 0..h {
            t.set(g + a, k, z.chi[k * h + a].clone());
        }
    }

    let total = RRBAlgebra::new(rep, t)?;
    AbelianExtension::new(total, base.clone(), h, w)
}

/// Reads off the 2-cocycle of an extension along a section (𝔰, s):
/// ω(x,y) = [𝔰x, 𝔰y] − 𝔰[x,y], ϖ(x,u) = ϱ(𝔰x)s(u) − s(ρ(x)u),
/// χ(u) = 𝔗(s(u)) − 𝔰(T(u)), all landing in the kernel pair.
pub fn cocycle_from_extension(
    e: &AbelianExtension,
    s_g: &Matrix,
    s_v: &Matrix,
) -> Result<TwoCocycle, AlgebraError> {
    section_check(e, s_g, s_v)?;
    let (g, v, h, w) = (e.g_dim(), e.v_dim(), e.h_dim(), e.w_dim());
    let mut omega = vec![Rational::zero(); binomial(g, 2) * h];
    for i in 0..g {
        for j in i + 1..g {
            let lift = e.total().g().bracket(&s_g.col(i), &s_g.col(j));
            let section = s_g.mul_vec(&e.base().g().bracket_basis(i, j));
            let diff = vec_sub(&lift, &section);
            debug_assert!(diff[..g].iter().all(Rational::is_zero));
            let t = tuple_rank(&[i, j], g);
            for a in 0..h {
                omega[t * h + a] = diff[g + a].clone();
            }
        }
    }
    let mut varpi = vec![Rational::zero(); g * v * w];
    for i in 0..g {
        let act = e.total().rho().act_vec(&s_g.col(i));
        for k in 0..v {
            let lift = act.mul_vec(&s_v.col(k));
            let section = s_v.mul_vec(&e.base().rho().act(i).col(k));
            let diff = vec_sub(&lift, &section);
            debug_assert!(diff[..v].iter().all(Rational::is_zero));
            for c in 0..w {
                varpi[(i * v + k) * w + c] = diff[v + c].clone();
            }
        }
    }
    let mut chi = vec![Rational::zero(); v * h];
    for k in 0..v {
        let lift = e.total().t_apply(&s_v.col(k));
        let section = s_g.mul_vec(&e.base().t().col(k));
        let diff = vec_sub(&lift, &section);
        debug_assert!(diff[..g].iter().all(Rational::is_zero));
        for a in 0..h {
            chi[k * h + a] = diff[g + a].clone();
        }
    }
    let induced = induced_coeff_rep_from_extension(e, s_g, s_v)?;
    TwoCocycle::new(&induced, omega, varpi, chi)
}

/// The coefficient package an extension induces on its kernel pair:
/// ρ_ℋ(x)α = [𝔰x, α], ρ_W(x)ξ = ϱ(𝔰x)ξ, μ(u)α = −ϱ(α)s(u), 𝒯 = 𝔗 on W.
/// The result does not depend on the section; the checked constructor
/// verifies the package axioms.
pub fn induced_coeff_rep_from_extension(
    e: &AbelianExtension,
    s_g: &Matrix,
    s_v: &Matrix,
) -> Result<RRBRepresentation, AlgebraError> {
    section_check(e, s_g, s_v)?;
    let (g, v, h, w) = (e.g_dim(), e.v_dim(), e.h_dim(), e.w_dim());
    let mut rho_h_action = Vec::with_capacity(g);
    let mut rho_w_action = Vec::with_capacity(g);
    for i in 0..g {
        let mut mh = Matrix::zeros(h, h);
        for a in 0..h {
            let br = e.total().g().bracket(&s_g.col(i), &basis_vec(g + h, g + a));
            for at in 0..h {
                mh.set(at, a, br[g + at].clone());
            }
        }
        rho_h_action.push(mh);
        let act = e.total().rho().act_vec(&s_g.col(i));
        let mut mw = Matrix::zeros(w, w);
        for c in 0..w {
            let col = act.mul_vec(&basis_vec(v + w, v + c));
            for ct in 0..w {
                mw.set(ct, c, col[v + ct].clone());
            }
        }
        rho_w_action.push(mw);
    }
    let mut mu = Vec::with_capacity(v);
    for k in 0..v {
        let mut mk = Matrix::zeros(w, h);
        for a in 0..h {
            let col = e.total().rho().act(g + a).mul_vec(&s_v.col(k));
            for c in 0..w {
                mk.set(c, a, -&col[v + c]);
            }
        }
        mu.push(mk);
    }
    let lie = e.base().g().clone();
    RRBRepresentation::new(
        e.base().clone(),
        e.curly_t_block(),
        LinearRep::new(lie.clone(), rho_h_action)?,
        LinearRep::new(lie, rho_w_action)?,
        mu,
    )
}

/// For cohomologous cocycles z1 − z2 = D(N, S), the block-unitriangular pair
/// κ(x, α) = (x, N(x) + α), λ(u, ξ) = (u, S(u) + ξ) is an isomorphism from
/// the extension of z1 onto the extension of z2 fixing all four blocks. The
/// coboundary equation and the three intertwining identities are verified;
/// violations of either are reported together.
pub fn iso_from_coboundary(
    coeffs: &RRBRepresentation,
    z1: &TwoCocycle,
    z2: &TwoCocycle,
    n_wit: &Matrix,
    s_wit: &Matrix,
) -> Result<(Matrix, Matrix), AlgebraError> {
    let (g, v, h, w) = (
        coeffs.base().g_dim(),
        coeffs.base().v_dim(),
        coeffs.h_dim(),
        coeffs.w_dim(),
    );
    if n_wit.rows() != h || n_wit.cols() != g || s_wit.rows() != w || s_wit.cols() != v {
        return Err(AlgebraError::Shape(format!(
            "witness must be {h}x{g} and {w}x{v}"
        )));
    }
    let e1 = extension_from_cocycle(coeffs, z1)?;
    let e2 = extension_from_cocycle(coeffs, z2)?;

    let mut kappa = Matrix::identity(g + h);
    for a in 0..h {
        for i in 0..g {
            kappa.set(g + a, i, n_wit.get(a, i).clone());
        }
    }
    let mut lambda = Matrix::identity(v + w);
    for c in 0..w {
        for k in 0..v {
            lambda.set(v + c, k, s_wit.get(c, k).clone());
        }
    }

    let scheme1 = CochainScheme::new(coeffs, 1);
    let mut flat = vec![Rational::zero(); scheme1.total_dim()];
    for i in 0..g {
        for a in 0..h {
            flat[i * h + a] = n_wit.get(a, i).clone();
        }
    }
    for k in 0..v {
        for c in 0..w {
            flat[g * h + k * w + c] = s_wit.get(c, k).clone();
        }
    }
    let image = coboundary_matrix(&scheme1).mul_vec(&flat);
    let residual = vec_sub(&vec_sub(&z1.coords(), &z2.coords()), &image);
    let mut report = cocycle_image_report(coeffs, 1, &residual, "coboundary");

    for p in 0..g + h {
        for q in p + 1..g + h {
            let lhs = kappa.mul_vec(&e1.total().g().bracket_basis(p, q));
            let rhs = e2.total().g().bracket(&kappa.col(p), &kappa.col(q));
            report.check_zero("intertwine_bracket", &[p, q], vec_sub(&lhs, &rhs));
        }
        let rhs_act = e2.total().rho().act_vec(&kappa.col(p));
        for q in 0..v + w {
            let lhs = lambda.mul_vec(&e1.total().rho().act(p).col(q));
            let rhs = rhs_act.mul_vec(&lambda.col(q));
            report.check_zero("intertwine_representation", &[p, q], vec_sub(&lhs, &rhs));
        }
    }
    report.check_zero_matrix(
        "intertwine_operator",
        &[],
        &kappa.mul(e1.total().t()).sub(&e2.total().t().mul(&lambda)),
    );
    report.into_result()?;
    Ok((kappa, lambda))
}

/// A skeletal relative Rota-Baxter Lie 2-algebra: complexes g1 → g0 and
/// V1 → V0 with zero differentials, so the data is the degree-0 structure
/// (bracket, action, operator), its degree-1 companions, and the three
/// alternating higher maps l3, ρ2, T2 stored in flat cochain layout
/// (tuple slowest, target fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletalRRB2 {
    pub g0_dim: usize,
    pub g1_dim: usize,
    pub v0_dim: usize,
    pub v1_dim: usize,
    /// l2(e_i, ·) on g0, one g0×g0 matrix per i.
    pub l2_g0: Vec<Matrix>,
    /// l2(e_i, ·) on g1, one g1×g1 matrix per i.
    pub l2_g1: Vec<Matrix>,
    /// l3 ∈ Hom(∧³g0, g1), length C(g0,3)·g1.
    pub l3: Vec<Rational>,
    /// ρ0(e_i) on V0, one v0×v0 matrix per i.
    pub rho0_v0: Vec<Matrix>,
    /// ρ0(e_i) on V1, one v1×v1 matrix per i.
    pub rho0_v1: Vec<Matrix>,
    /// ρ1(ε_a): V0 → V1, one v1×v0 matrix per a.
    pub rho1: Vec<Matrix>,
    /// ρ2 ∈ Hom(∧²g0, Hom(V0, V1)), length C(g0,2)·v0·v1,
    /// entry ((pair·v0 + k)·v1 + c) = (ρ2(e_i,e_j)v_k)_c.
    pub rho2: Vec<Rational>,
    /// T0: V0 → g0.
    pub t0: Matrix,
    /// T1: V1 → g1.
    pub t1: Matrix,
    /// T2 ∈ Hom(∧²V0, g1), length C(v0,2)·g1.
    pub t2: Vec<Rational>,
}

impl SkeletalRRB2 {
    fn check_shapes(&self) -> Result<(), AlgebraError> {
        let (g0, g1, v0, v1) = (self.g0_dim, self.g1_dim, self.v0_dim, self.v1_dim);
        let square = |ms: &[Matrix], n: usize, len: usize, what: &str| {
            if ms.len() != len || ms.iter().any(|m| m.rows() != n || m.cols() != n) {
                Err(AlgebraError::Shape(format!(
                    "{what} must be {len} matrices of size {n}x{n}"
                )))
            } else {
                Ok(())
            }
        };
        square(&self.l2_g0, g0, g0, "l2_g0")?;
        square(&self.l2_g1, g1, g0, "l2_g1")?;
        square(&self.rho0_v0, v0, g0, "rho0_v0")?;
        square(&self.rho0_v1, v1, g0, "rho0_v1")?;
        if self.rho1.len() != g1 || self.rho1.iter().any(|m| m.rows() != v1 || m.cols() != v0) {
            return Err(AlgebraError::Shape(format!(
                "rho1 must be {g1} matrices of size {v1}x{v0}"
            )));
        }
        if self.l3.len() != binomial(g0, 3) * g1 {
            return Err(AlgebraError::Shape(format!(
                "l3 needs {} coordinates",
                binomial(g0, 3) * g1
            )));
        }
        if self.rho2.len() != binomial(g0, 2) * v0 * v1 {
            return Err(AlgebraError::Shape(format!(
                "rho2 needs {} coordinates",
                binomial(g0, 2) * v0 * v1
            )));
        }
        if self.t2.len() != binomial(v0, 2) * g1 {
            return Err(AlgebraError::Shape(format!(
                "t2 needs {} coordinates",
                binomial(v0, 2) * g1
            )));
        }
        if self.t0.rows() != g0 || self.t0.cols() != v0 {
            return Err(AlgebraError::Shape(format!("t0 must be {g0}x{v0}")));
        }
        if self.t1.rows() != g1 || self.t1.cols() != v1 {
            return Err(AlgebraError::Shape(format!("t1 must be {g1}x{v1}")));
        }
        Ok(())
    }

    fn l2_00(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        combine(&self.l2_g0, x, self.g0_dim, self.g0_dim).mul_vec(y)
    }

    fn l2_01(&self, x: &[Rational], alpha: &[Rational]) -> Vec<Rational> {
        combine(&self.l2_g1, x, self.g1_dim, self.g1_dim).mul_vec(alpha)
    }

    fn l3_eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        eval_alternating(
            &self.l3,
            3,
            self.g0_dim,
            self.g1_dim,
            &[x.to_vec(), y.to_vec(), z.to_vec()],
        )
    }

    fn rho2_eval(&self, x: &[Rational], y: &[Rational], u: &[Rational]) -> Vec<Rational> {
        eval_alt_tensor(
            &self.rho2,
            2,
            self.g0_dim,
            self.v0_dim,
            self.v1_dim,
            &[x.to_vec(), y.to_vec()],
            u,
        )
    }

    fn rho2_mat(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.v0_dim)
            .map(|k| self.rho2_eval(x, y, &basis_vec(self.v0_dim, k)))
            .collect();
        Matrix::from_fn(self.v1_dim, self.v0_dim, |c, k| cols[k][c].clone())
    }

    fn t2_eval(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        eval_alternating(
            &self.t2,
            2,
            self.v0_dim,
            self.g1_dim,
            &[u.to_vec(), v.to_vec()],
        )
    }

    fn rho1_vec(&self, alpha: &[Rational]) -> Matrix {
        combine(&self.rho1, alpha, self.v1_dim, self.v0_dim)
    }
}

impl Serialize for SkeletalRRB2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(14))?;
        map.serialize_entry("g0_dim", &self.g0_dim)?;
        map.serialize_entry("g1_dim", &self.g1_dim)?;
        map.serialize_entry("l2_g0", &self.l2_g0)?;
        map.serialize_entry("l2_g1", &self.l2_g1)?;
        map.serialize_entry("l3", &rationals_to_strings(&self.l3))?;
        map.serialize_entry("rho0_v0", &self.rho0_v0)?;
        map.serialize_entry("rho0_v1", &self.rho0_v1)?;
        map.serialize_entry("rho1", &self.rho1)?;
        map.serialize_entry("rho2", &rationals_to_strings(&self.rho2))?;
        map.serialize_entry("t0", &self.t0)?;
        map.serialize_entry("t1", &self.t1)?;
        map.serialize_entry("t2", &rationals_to_strings(&self.t2))?;
        map.serialize_entry("v0_dim", &self.v0_dim)?;
        map.serialize_entry("v1_dim", &self.v1_dim)?;
        map.end()
    }
}

/// Verifies every axiom of a skeletal relative Rota-Baxter Lie 2-algebra:
/// graded antisymmetry, both Jacobi-type identities and the Jacobiator for
/// (l2, l3), the representation conditions on (ρ0, ρ1, ρ2), and the three
/// operator conditions with both differentials zero.
pub fn check_skeletal_rrb2(s: &SkeletalRRB2) -> Result<ValidationReport, AlgebraError> {
    s.check_shapes()?;
    let (g0, g1, v0, v1) = (s.g0_dim, s.g1_dim, s.v0_dim, s.v1_dim);
    let mut report = ValidationReport::default();

    for i in 0..g0 {
        for j in i..g0 {
            let anti = vec_add(&s.l2_g0[i].col(j), &s.l2_g0[j].col(i));
            report.check_zero("l2_antisymmetry", &[i, j], anti);
        }
    }
    for i in 0..g0 {
        for j in i + 1..g0 {
            let b_ij = s.l2_g0[i].col(j);
            for k in j + 1..g0 {
                let b_jk = s.l2_g0[j].col(k);
                let b_ki = s.l2_g0[k].col(i);
                let mut jac = s.l2_00(&b_ij, &basis_vec(g0, k));
                jac = vec_add(&jac, &s.l2_00(&b_jk, &basis_vec(g0, i)));
                jac = vec_add(&jac, &s.l2_00(&b_ki, &basis_vec(g0, j)));
                report.check_zero("jacobi", &[i, j, k], jac);
            }
            for a in 0..g1 {
                let eps = basis_vec(g1, a);
                let mut mj = s.l2_01(&b_ij, &eps);
                mj = vec_sub(&mj, &s.l2_g1[i].mul_vec(&s.l2_g1[j].col(a)));
                mj = vec_add(&mj, &s.l2_g1[j].mul_vec(&s.l2_g1[i].col(a)));
                report.check_zero("mixed_jacobi", &[i, j, a], mj);
            }
        }
    }

    for tuple in increasing_tuples(g0, 4) {
        let mut total = vec![Rational::zero(); g1];
        for p in 0..4 {
            let rest: Vec<usize> = (0..4).filter(|q| *q != p).map(|q| tuple[q]).collect();
            let l3v = s.l3_eval(
                &basis_vec(g0, rest[0]),
                &basis_vec(g0, rest[1]),
                &basis_vec(g0, rest[2]),
            );
            let term = s.l2_01(&basis_vec(g0, tuple[p]), &l3v);
            if p % 2 == 0 {
                total = vec_add(&total, &term);
            } else {
                total = vec_sub(&total, &term);
            }
        }
        for p in 0..4 {
            for q in p + 1..4 {
                let rest: Vec<usize> = (0..4)
                    .filter(|r| *r != p && *r != q)
                    .map(|r| tuple[r])
                    .collect();
                let b = s.l2_g0[tuple[p]].col(tuple[q]);
                let term = s.l3_eval(&b, &basis_vec(g0, rest[0]), &basis_vec(g0, rest[1]));
                if (p + q) % 2 == 0 {
                    total = vec_add(&total, &term);
                } else {
                    total = vec_sub(&total, &term);
                }
            }
        }
        report.check_zero("jacobiator", &tuple, total);
    }

    for i in 0..g0 {
        for j in i + 1..g0 {
            let b_ij = s.l2_g0[i].col(j);
            let comm_v0 = s.rho0_v0[i]
                .mul(&s.rho0_v0[j])
                .sub(&s.rho0_v0[j].mul(&s.rho0_v0[i]));
            report.check_zero_matrix(
                "rho0_v0_representation",
                &[i, j],
                &combine(&s.rho0_v0, &b_ij, v0, v0).sub(&comm_v0),
            );
            let comm_v1 = s.rho0_v1[i]
                .mul(&s.rho0_v1[j])
                .sub(&s.rho0_v1[j].mul(&s.rho0_v1[i]));
            report.check_zero_matrix(
                "rho0_v1_representation",
                &[i, j],
                &combine(&s.rho0_v1, &b_ij, v1, v1).sub(&comm_v1),
            );
        }
        for a in 0..g1 {
            let lhs = s.rho1_vec(&s.l2_g1[i].col(a));
            let rhs = s.rho0_v1[i]
                .mul(&s.rho1[a])
                .sub(&s.rho1[a].mul(&s.rho0_v0[i]));
            report.check_zero_matrix("rho1_equivariance", &[i, a], &lhs.sub(&rhs));
        }
    }

    for tuple in increasing_tuples(g0, 3) {
        let (i, j, k) = (tuple[0], tuple[1], tuple[2]);
        let (ei, ej, ek) = (basis_vec(g0, i), basis_vec(g0, j), basis_vec(g0, k));
        let mut lhs = s.rho2_mat(&s.l2_g0[i].col(j), &ek);
        lhs = lhs.add(&s.rho2_mat(&s.l2_g0[j].col(k), &ei));
        lhs = lhs.add(&s.rho2_mat(&s.l2_g0[k].col(i), &ej));
        lhs = lhs.add(&s.rho1_vec(&s.l3_eval(&ei, &ej, &ek)));
        let bracket = |p: usize, m: &Matrix| s.rho0_v1[p].mul(m).sub(&m.mul(&s.rho0_v0[p]));
        let mut rhs = bracket(i, &s.rho2_mat(&ej, &ek));
        rhs = rhs.add(&bracket(j, &s.rho2_mat(&ek, &ei)));
        rhs = rhs.add(&bracket(k, &s.rho2_mat(&ei, &ej)));
        report.check_zero_matrix("rho2_coherence", &[i, j, k], &lhs.sub(&rhs));
    }

    for k in 0..v0 {
        for l in k + 1..v0 {
            let (tk, tl) = (s.t0.col(k), s.t0.col(l));
            let inner = vec_sub(
                &combine(&s.rho0_v0, &tk, v0, v0).col(l),
                &combine(&s.rho0_v0, &tl, v0, v0).col(k),
            );
            let residual = vec_sub(&s.t0.mul_vec(&inner), &s.l2_00(&tk, &tl));
            report.check_zero("operator_i", &[k, l], residual);
        }
    }
    for c in 0..v1 {
        let t1c = s.t1.col(c);
        for k in 0..v0 {
            let t0k = s.t0.col(k);
            let inner = vec_sub(
                &s.rho1_vec(&t1c).col(k),
                &combine(&s.rho0_v1, &t0k, v1, v1).col(c),
            );
            let residual = vec_add(&s.t1.mul_vec(&inner), &s.l2_01(&t0k, &t1c));
            report.check_zero("operator_ii", &[c, k], residual);
        }
    }
    for tuple in increasing_tuples(v0, 3) {
        let args: Vec<Vec<Rational>> = tuple.iter().map(|&k| basis_vec(v0, k)).collect();
        let mut total = s.l3_eval(
            &s.t0.mul_vec(&args[0]),
            &s.t0.mul_vec(&args[1]),
            &s.t0.mul_vec(&args[2]),
        );
        for cyc in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
            let (u1, u2, u3) = (&args[cyc[0]], &args[cyc[1]], &args[cyc[2]]);
            let (t1v, t2v) = (s.t0.mul_vec(u1), s.t0.mul_vec(u2));
            let t2_23 = s.t2_eval(u2, u3);
            total = vec_add(&total, &s.l2_01(&t1v, &t2_23));
            let inner = vec_sub(
                &combine(&s.rho0_v0, &t1v, v0, v0).mul_vec(u2),
                &combine(&s.rho0_v0, &t2v, v0, v0).mul_vec(u1),
            );
            total = vec_add(&total, &s.t2_eval(u3, &inner));
            let rep_part = vec_add(
                &s.rho1_vec(&t2_23).mul_vec(u1),
                &s.rho2_eval(&t2v, &s.t0.mul_vec(u3), u1),
            );
            total = vec_add(&total, &s.t1.mul_vec(&rep_part));
        }
        report.check_zero("operator_iii", &tuple, total);
    }
    Ok(report)
}

/// The 3-cocycle of a skeletal structure: base (g0, l2, ρ0 on V0, T0),
/// coefficients [V1 → g1 via T1; l2 on g1, ρ0 on V1, μ(u)α = −ρ1(α)u],
/// cochain (f_h, f_w, θ) = (l3, −ρ2, −T2). The cocycle identity is verified
/// before returning.
pub fn rrb2_to_3cocycle(s: &SkeletalRRB2) -> Result<(RRBRepresentation, Cochain), AlgebraError> {
    check_skeletal_rrb2(s)?.into_result()?;
    let (g0, g1, v0, v1) = (s.g0_dim, s.g1_dim, s.v0_dim, s.v1_dim);
    let mut c = vec![vec![vec![Rational::zero(); g0]; g0]; g0];
    for i in 0..g0 {
        for j in 0..g0 {
            for k in 0..g0 {
                c[i][j][k] = s.l2_g0[i].get(k, j).clone();
            }
        }
    }
    let lie = LieAlgebra::new(g0, c)?;
    let base = RRBAlgebra::new(
        LinearRep::new(lie.clone(), s.rho0_v0.clone())?,
        s.t0.clone(),
    )?;
    let mu = (0..v0)
        .map(|k| Matrix::from_fn(v1, g1, |ct, a| -s.rho1[a].get(ct, k)))
        .collect();
    let coeffs = RRBRepresentation::new(
        base,
        s.t1.clone(),
        LinearRep::new(lie.clone(), s.l2_g1.clone())?,
        LinearRep::new(lie, s.rho0_v1.clone())?,
        mu,
    )?;
    let mut coords = s.l3.clone();
    coords.extend(s.rho2.iter().map(|x| -x));
    coords.extend(s.t2.iter().map(|x| -x));
    cocycle_check(&coeffs, 3, &coords, "three_cocycle")?.into_result()?;
    Ok((coeffs, Cochain { degree: 3, coords }))
}

/// Inverse of [`rrb2_to_3cocycle`]: reads the sign table backwards
/// (l3 = f_h, ρ2 = −f_w, T2 = −θ, ρ1(α)u = −μ(u)α) and assembles the skeletal
/// structure over the given base and coefficients. The output is re-checked.
pub fn cocycle_to_rrb2(
    coeffs: &RRBRepresentation,
    c: &Cochain,
) -> Result<SkeletalRRB2, AlgebraError> {
    if c.degree != 3 {
        return Err(AlgebraError::Shape(format!(
            "skeletal structures correspond to degree-3 cocycles, got degree {}",
            c.degree
        )));
    }
    cocycle_check(coeffs, 3, &c.coords, "three_cocycle")?.into_result()?;
    let base = coeffs.base();
    let (g0, v0) = (base.g_dim(), base.v_dim());
    let (g1, v1) = (coeffs.h_dim(), coeffs.w_dim());
    let scheme = CochainScheme::new(coeffs, 3);
    let (fh, fw, _) = scheme.layout();
    let s = SkeletalRRB2 {
        g0_dim: g0,
        g1_dim: g1,
        v0_dim: v0,
        v1_dim: v1,
        l2_g0: (0..g0).map(|i| base.g().ad_basis(i)).collect(),
        l2_g1: (0..g0).map(|i| coeffs.rho_h().act(i).clone()).collect(),
        l3: c.coords[..fh].to_vec(),
        rho0_v0: (0..g0).map(|i| base.rho().act(i).clone()).collect(),
        rho0_v1: (0..g0).map(|i| coeffs.rho_w().act(i).clone()).collect(),
        rho1: (0..g1)
            .map(|a| Matrix::from_fn(v1, v0, |ct, k| -coeffs.mu_basis(k).get(ct, a)))
            .collect(),
        rho2: c.coords[fh..fh + fw].iter().map(|x| -x).collect(),
        t0: base.t().clone(),
        t1: coeffs.curly_t().clone(),
        t2: c.coords[fh + fw..].iter().map(|x| -x).collect(),
    };
    check_skeletal_rrb2(&s)?.into_result()?;
    Ok(s)
}

fn rb_cocycle_image_report(
    coeffs: &RBRepresentation,
    degree: usize,
    image: &[Rational],
    label: &str,
) -> ValidationReport {
    let out = RBCochainScheme::new(coeffs, degree + 1);
    let g = coeffs.base().dim();
    let h = coeffs.w_dim();
    debug_assert_eq!(image.len(), out.total_dim());
    let f_dim = out.f_dim();
    let mut report = ValidationReport::default();
    for (t, tuple) in increasing_tuples(g, degree + 1).iter().enumerate() {
        for a in 0..h {
            let mut wit = tuple.clone();
            wit.push(a);
            report.check_zero(
                &format!("{label}_f_block"),
                &wit,
                vec![image[t * h + a].clone()],
            );
        }
    }
    for (t, tuple) in increasing_tuples(g, degree).iter().enumerate() {
        for a in 0..h {
            let mut wit = tuple.clone();
            wit.push(a);
            report.check_zero(
                &format!("{label}_theta_block"),
                &wit,
                vec![image[f_dim + t * h + a].clone()],
            );
        }
    }
    report
}

fn rb_cocycle_check(
    coeffs: &RBRepresentation,
    degree: usize,
    coords: &[Rational],
    label: &str,
) -> Result<ValidationReport, AlgebraError> {
    let scheme = RBCochainScheme::new(coeffs, degree);
    if coords.len() != scheme.total_dim() {
        return Err(AlgebraError::Shape(format!(
            "degree-{degree} cochain needs {} coordinates, got {}",
            scheme.total_dim(),
            coords.len()
        )));
    }
    let image = rb_coboundary_matrix(coeffs, degree).mul_vec(coords);
    Ok(rb_cocycle_image_report(coeffs, degree, &image, label))
}

/// An abelian extension of Rota-Baxter Lie algebras on the concatenated basis
/// g⊕ℋ: base leading, abelian kernel ℋ trailing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBAbelianExtension {
    total: RBAlgebra,
    base: RBAlgebra,
    h_dim: usize,
}

impl RBAbelianExtension {
    pub fn new(total: RBAlgebra, base: RBAlgebra, h_dim: usize) -> Result<Self, AlgebraError> {
        let g = base.dim();
        if total.dim() != g + h_dim {
            return Err(AlgebraError::Shape(format!(
                "total must live on {}+{} dimensions, got {}",
                g,
                h_dim,
                total.dim()
            )));
        }
        let mut report = ValidationReport::default();
        for i in 0..g {
            for j in i + 1..g {
                let full = total.g().bracket_basis(i, j);
                let diff = vec_sub(&full[..g], &base.g().bracket_basis(i, j));
                report.check_zero("projection_bracket", &[i, j], diff);
            }
            for b in 0..h_dim {
                let full = total.g().bracket_basis(i, g + b);
                report.check_zero("ideal", &[i, b], full[..g].to_vec());
            }
            let col = total.t().col(i);
            let diff = vec_sub(&col[..g], &base.t().col(i));
            report.check_zero("projection_operator", &[i], diff);
        }
        for a in 0..h_dim {
            for b in a + 1..h_dim {
                report.check_zero("abelian", &[a, b], total.g().bracket_basis(g + a, g + b));
            }
            let col = total.t().col(g + a);
            report.check_zero("operator_h_into_h", &[a], col[..g].to_vec());
        }
        report.into_result()?;
        Ok(RBAbelianExtension { total, base, h_dim })
    }

    pub fn total(&self) -> &RBAlgebra {
        &self.total
    }

    pub fn base(&self) -> &RBAlgebra {
        &self.base
    }

    pub fn g_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    /// The ℋ×ℋ block of the total operator.
    pub fn curly_t_block(&self) -> Matrix {
        let g = self.g_dim();
        Matrix::from_fn(self.h_dim, self.h_dim, |a, b| {
            self.total.t().get(g + a, g + b).clone()
        })
    }
}

impl Serialize for RBAbelianExtension {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("base", &self.base)?;
        map.serialize_entry("h_dim", &self.h_dim)?;
        map.serialize_entry("total", &self.total)?;
        map.end()
    }
}

/// The canonical section x ↦ (x, 0) of a Rota-Baxter extension.
pub fn canonical_section_rb(e: &RBAbelianExtension) -> Matrix {
    Matrix::vstack(&[
        &Matrix::identity(e.g_dim()),
        &Matrix::zeros(e.h_dim(), e.g_dim()),
    ])
}

fn rb_section_check(e: &RBAbelianExtension, s_g: &Matrix) -> Result<(), AlgebraError> {
    let (g, h) = (e.g_dim(), e.h_dim());
    if s_g.rows() != g + h || s_g.cols() != g {
        return Err(AlgebraError::Shape(format!(
            "section must be ({}+{})x{}",
            g, h, g
        )));
    }
    let mut report = ValidationReport::default();
    let top = Matrix::from_fn(g, g, |i, j| s_g.get(i, j).clone());
    report.check_zero_matrix(
        "section_left_inverse_g",
        &[],
        &top.sub(&Matrix::identity(g)),
    );
    report.into_result()
}

/// A 2-cochain (ω, χ) in Hom(∧²g, ℋ) ⊕ Hom(g, ℋ) in flat layout, for the
/// Rota-Baxter complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBTwoCocycle {
    pub omega: Vec<Rational>,
    pub chi: Vec<Rational>,
}

impl RBTwoCocycle {
    pub fn new(
        coeffs: &RBRepresentation,
        omega: Vec<Rational>,
        chi: Vec<Rational>,
    ) -> Result<Self, AlgebraError> {
        let z = RBTwoCocycle { omega, chi };
        rb_cocycle_check(coeffs, 2, &z.coords(), "two_cocycle")?.into_result()?;
        Ok(z)
    }

    pub fn new_unchecked(omega: Vec<Rational>, chi: Vec<Rational>) -> Self {
        RBTwoCocycle { omega, chi }
    }

    pub fn zero(coeffs: &RBRepresentation) -> Self {
        let scheme = RBCochainScheme::new(coeffs, 2);
        RBTwoCocycle {
            omega: vec![Rational::zero(); scheme.f_dim()],
            chi: vec![Rational::zero(); scheme.theta_dim()],
        }
    }

    pub fn from_coords(
        coeffs: &RBRepresentation,
        coords: &[Rational],
    ) -> Result<Self, AlgebraError> {
        let scheme = RBCochainScheme::new(coeffs, 2);
        if coords.len() != scheme.total_dim() {
            return Err(AlgebraError::Shape(format!(
                "degree-2 cochain needs {} coordinates, got {}",
                scheme.total_dim(),
                coords.len()
            )));
        }
        Ok(RBTwoCocycle {
            omega: coords[..scheme.f_dim()].to_vec(),
            chi: coords[scheme.f_dim()..].to_vec(),
        })
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut out = self.omega.clone();
        out.extend_from_slice(&self.chi);
        out
    }

    pub fn to_cochain(&self) -> Cochain {
        Cochain {
            degree: 2,
            coords: self.coords(),
        }
    }
}

impl Serialize for RBTwoCocycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("chi", &rationals_to_strings(&self.chi))?;
        map.serialize_entry("omega", &rationals_to_strings(&self.omega))?;
        map.end()
    }
}

/// Builds the Rota-Baxter extension classified by (ω, χ): bracket twisted by
/// ω, operator twisted by χ.
pub fn extension_from_cocycle_rb(
    coeffs: &RBRepresentation,
    z: &RBTwoCocycle,
) -> Result<RBAbelianExtension, AlgebraError> {
    rb_cocycle_check(coeffs, 2, &z.coords(), "two_cocycle")?.into_result()?;
    let base = coeffs.base();
    let (g, h) = (base.dim(), coeffs.w_dim());
    let big_g = g + h;
    let mut c = vec![vec![vec![Rational::zero(); big_g]; big_g]; big_g];
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                c[i][j][k] = base.g().structure_constant(i, j, k).clone();
            }
        }
        for j in i + 1..g {
            let t = tuple_rank(&[i, j], g);
            for a in 0..h {
                let val = z.omega[t * h + a].clone();
                c[i][j][g + a] = val.clone();
                c[j][i][g + a] = -val;
            }
        }
        for b in 0..h {
            for bt in 0..h {
                let val = coeffs.rho_w().act(i).get(bt, b).clone();
                c[i][g + b][g + bt] = val.clone();
                c[g + b][i][g + bt] = -val;
            }
        }
    }
    let lie = LieAlgebra::new(big_g, c)?;
    let mut t = Matrix::zeros(big_g, big_g);
    t.set_block(0, 0, base.t());
    t.set_block(g, g, coeffs.curly_t());
    for i in 0..g {
        for a in 0..h {
            t.set(g + a, i, z.chi[i * h + a].clone());
        }
    }
    let total = RBAlgebra::new(lie, t)?;
    RBAbelianExtension::new(total, base.clone(), h)
}

/// Reads off the 2-cocycle of a Rota-Baxter extension along a section 𝔰:
/// ω(x,y) = [𝔰x, 𝔰y] − 𝔰[x,y], χ(x) = 𝔗(𝔰x) − 𝔰(T(x)).
pub fn cocycle_from_extension_rb(
    e: &RBAbelianExtension,
    s_g: &Matrix,
) -> Result<RBTwoCocycle, AlgebraError> {
    rb_section_check(e, s_g)?;
    let (g, h) = (e.g_dim(), e.h_dim());
    let mut omega = vec![Rational::zero(); binomial(g, 2) * h];
    for i in 0..g {
        for j in i + 1..g {
            let lift = e.total().g().bracket(&s_g.col(i), &s_g.col(j));
            let section = s_g.mul_vec(&e.base().g().bracket_basis(i, j));
            let diff = vec_sub(&lift, &section);
            debug_assert!(diff[..g].iter().all(Rational::is_zero));
            let t = tuple_rank(&[i, j], g);
            for a in 0..h {
                omega[t * h + a] = diff[g + a].clone();
            }
        }
    }
    let mut chi = vec![Rational::zero(); g * h];
    for i in 0..g {
        let lift = e.total().t().mul_vec(&s_g.col(i));
        let section = s_g.mul_vec(&e.base().t().col(i));
        let diff = vec_sub(&lift, &section);
        debug_assert!(diff[..g].iter().all(Rational::is_zero));
        for a in 0..h {
            chi[i * h + a] = diff[g + a].clone();
        }
    }
    let induced = induced_coeff_rep_from_extension_rb(e, s_g)?;
    RBTwoCocycle::new(&induced, omega, chi)
}

/// The coefficient data a Rota-Baxter extension induces on its kernel:
/// ρ_ℋ(x)α = [𝔰x, α], 𝒯 = 𝔗 on ℋ. Section-independent; validated.
pub fn induced_coeff_rep_from_extension_rb(
    e: &RBAbelianExtension,
    s_g: &Matrix,
) -> Result<RBRepresentation, AlgebraError> {
    rb_section_check(e, s_g)?;
    let (g, h) = (e.g_dim(), e.h_dim());
    let mut action = Vec::with_capacity(g);
    for i in 0..g {
        let mut m = Matrix::zeros(h, h);
        for a in 0..h {
            let br = e.total().g().bracket(&s_g.col(i), &basis_vec(g + h, g + a));
            for at in 0..h {
                m.set(at, a, br[g + at].clone());
            }
        }
        action.push(m);
    }
    RBRepresentation::new(
        e.base().clone(),
        e.curly_t_block(),
        LinearRep::new(e.base().g().clone(), action)?,
    )
}

/// Rota-Baxter counterpart of [`iso_from_coboundary`]: for z1 − z2 = D(N) the
/// map κ(x, α) = (x, N(x) + α) intertwines the two extensions.
pub fn iso_from_coboundary_rb(
    coeffs: &RBRepresentation,
    z1: &RBTwoCocycle,
    z2: &RBTwoCocycle,
    n_wit: &Matrix,
) -> Result<Matrix, AlgebraError> {
    let (g, h) = (coeffs.base().dim(), coeffs.w_dim());
    if n_wit.rows() != h || n_wit.cols() != g {
        return Err(AlgebraError::Shape(format!("witness must be {h}x{g}")));
    }
    let e1 = extension_from_cocycle_rb(coeffs, z1)?;
    let e2 = extension_from_cocycle_rb(coeffs, z2)?;
    let mut kappa = Matrix::identity(g + h);
    for a in 0..h {
        for i in 0..g {
            kappa.set(g + a, i, n_wit.get(a, i).clone());
        }
    }
    let mut flat = vec![Rational::zero(); g * h];
    for i in 0..g {
        for a in 0..h {
            flat[i * h + a] = n_wit.get(a, i).clone();
        }
    }
    let image = rb_coboundary_matrix(coeffs, 1).mul_vec(&flat);
    let residual = vec_sub(&vec_sub(&z1.coords(), &z2.coords()), &image);
    let mut report = rb_cocycle_image_report(coeffs, 1, &residual, "coboundary");
    for p in 0..g + h {
        for q in p + 1..g + h {
            let lhs = kappa.mul_vec(&e1.total().g().bracket_basis(p, q));
            let rhs = e2.total().g().bracket(&kappa.col(p), &kappa.col(q));
            report.check_zero("intertwine_bracket", &[p, q], vec_sub(&lhs, &rhs));
        }
    }
    report.check_zero_matrix(
        "intertwine_operator",
        &[],
        &kappa.mul(e1.total().t()).sub(&e2.total().t().mul(&kappa)),
    );
    report.into_result()?;
    Ok(kappa)
}

/// A skeletal Rota-Baxter Lie 2-algebra: the relative structure specialized
/// to the adjoint representation, so only (l2, l3, T0, T1, T2) are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletalRB2 {
    pub g0_dim: usize,
    pub g1_dim: usize,
    /// l2(e_i, ·) on g0, one g0×g0 matrix per i.
    pub l2_g0: Vec<Matrix>,
    /// l2(e_i, ·) on g1, one g1×g1 matrix per i.
    pub l2_g1: Vec<Matrix>,
    /// l3 ∈ Hom(∧³g0, g1), length C(g0,3)·g1.
    pub l3: Vec<Rational>,
    /// T0: g0 → g0.
    pub t0: Matrix,
    /// T1: g1 → g1.
    pub t1: Matrix,
    /// T2 ∈ Hom(∧²g0, g1), length C(g0,2)·g1.
    pub t2: Vec<Rational>,
}

impl SkeletalRB2 {
    fn check_shapes(&self) -> Result<(), AlgebraError> {
        let (g0, g1) = (self.g0_dim, self.g1_dim);
        if self.l2_g0.len() != g0 || self.l2_g0.iter().any(|m| m.rows() != g0 || m.cols() != g0) {
            return Err(AlgebraError::Shape(format!(
                "l2_g0 must be {g0} matrices {g0}x{g0}"
            )));
        }
        if self.l2_g1.len() != g0 || self.l2_g1.iter().any(|m| m.rows() != g1 || m.cols() != g1) {
            return Err(AlgebraError::Shape(format!(
                "l2_g1 must be {g0} matrices {g1}x{g1}"
            )));
        }
        if self.l3.len() != binomial(g0, 3) * g1 {
            return Err(AlgebraError::Shape(format!(
                "l3 needs {} coordinates",
                binomial(g0, 3) * g1
            )));
        }
        if self.t2.len() != binomial(g0, 2) * g1 {
            return Err(AlgebraError::Shape(format!(
                "t2 needs {} coordinates",
                binomial(g0, 2) * g1
            )));
        }
        if self.t0.rows() != g0 || self.t0.cols() != g0 {
            return Err(AlgebraError::Shape(format!("t0 must be {g0}x{g0}")));
        }
        if self.t1.rows() != g1 || self.t1.cols() != g1 {
            return Err(AlgebraError::Shape(format!("t1 must be {g1}x{g1}")));
        }
        Ok(())
    }

    fn l2_00(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        combine(&self.l2_g0, x, self.g0_dim, self.g0_dim).mul_vec(y)
    }

    fn l2_01(&self, x: &[Rational], alpha: &[Rational]) -> Vec<Rational> {
        combine(&self.l2_g1, x, self.g1_dim, self.g1_dim).mul_vec(alpha)
    }

    fn l3_eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        eval_alternating(
            &self.l3,
            3,
            self.g0_dim,
            self.g1_dim,
            &[x.to_vec(), y.to_vec(), z.to_vec()],
        )
    }

    fn t2_eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        eval_alternating(
            &self.t2,
            2,
            self.g0_dim,
            self.g1_dim,
            &[x.to_vec(), y.to_vec()],
        )
    }
}

impl Serialize for SkeletalRB2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(8))?;
        map.serialize_entry("g0_dim", &self.g0_dim)?;
        map.serialize_entry("g1_dim", &self.g1_dim)?;
        map.serialize_entry("l2_g0", &self.l2_g0)?;
        map.serialize_entry("l2_g1", &self.l2_g1)?;
        map.serialize_entry("l3", &rationals_to_strings(&self.l3))?;
        map.serialize_entry("t0", &self.t0)?;
        map.serialize_entry("t1", &self.t1)?;
        map.serialize_entry("t2", &rationals_to_strings(&self.t2))?;
        map.end()
    }
}

/// Verifies every axiom of a skeletal Rota-Baxter Lie 2-algebra: graded
/// antisymmetry, Jacobi and mixed Jacobi, the Jacobiator, and the three
/// operator conditions for the adjoint action with d = 0.
pub fn check_skeletal_rb2(s: &SkeletalRB2) -> Result<ValidationReport, AlgebraError> {
    s.check_shapes()?;
    let (g0, g1) = (s.g0_dim, s.g1_dim);
    let mut report = ValidationReport::default();
    for i in 0..g0 {
        for j in i..g0 {
            let anti = vec_add(&s.l2_g0[i].col(j), &s.l2_g0[j].col(i));
            report.check_zero("l2_antisymmetry", &[i, j], anti);
        }
    }
    for i in 0..g0 {
        for j in i + 1..g0 {
            let b_ij = s.l2_g0[i].col(j);
            for k in j + 1..g0 {
                let mut jac = s.l2_00(&b_ij, &basis_vec(g0, k));
                jac = vec_add(&jac, &s.l2_00(&s.l2_g0[j].col(k), &basis_vec(g0, i)));
                jac = vec_add(&jac, &s.l2_00(&s.l2_g0[k].col(i), &basis_vec(g0, j)));
                report.check_zero("jacobi", &[i, j, k], jac);
            }
            for a in 0..g1 {
                let mut mj = s.l2_01(&b_ij, &basis_vec(g1, a));
                mj = vec_sub(&mj, &s.l2_g1[i].mul_vec(&s.l2_g1[j].col(a)));
                mj = vec_add(&mj, &s.l2_g1[j].mul_vec(&s.l2_g1[i].col(a)));
                report.check_zero("mixed_jacobi", &[i, j, a], mj);
            }
        }
    }
    for tuple in increasing_tuples(g0, 4) {
        let mut total = vec![Rational::zero(); g1];
        for p in 0..4 {
            let rest: Vec<usize> = (0..4).filter(|q| *q != p).map(|q| tuple[q]).collect();
            let l3v = s.l3_eval(
                &basis_vec(g0, rest[0]),
                &basis_vec(g0, rest[1]),
                &basis_vec(g0, rest[2]),
            );
            let term = s.l2_01(&basis_vec(g0, tuple[p]), &l3v);
            if p % 2 == 0 {
                total = vec_add(&total, &term);
            } else {
                total = vec_sub(&total, &term);
            }
        }
        for p in 0..4 {
            for q in p + 1..4 {
                let rest: Vec<usize> = (0..4)
                    .filter(|r| *r != p && *r != q)
                    .map(|r| tuple[r])
                    .collect();
                let b = s.l2_g0[tuple[p]].col(tuple[q]);
                let term = s.l3_eval(&b, &basis_vec(g0, rest[0]), &basis_vec(g0, rest[1]));
                if (p + q) % 2 == 0 {
                    total = vec_add(&total, &term);
                } else {
                    total = vec_sub(&total, &term);
                }
            }
        }
        report.check_zero("jacobiator", &tuple, total);
    }
    for i in 0..g0 {
        let ti = s.t0.col(i);
        for j in i + 1..g0 {
            let tj = s.t0.col(j);
            let inner = vec_sub(
                &s.l2_00(&ti, &basis_vec(g0, j)),
                &s.l2_00(&tj, &basis_vec(g0, i)),
            );
            let residual = vec_sub(&s.t0.mul_vec(&inner), &s.l2_00(&ti, &tj));
            report.check_zero("operator_i", &[i, j], residual);
        }
        for a in 0..g1 {
            let t1a = s.t1.col(a);
            let inner = vec_add(&s.l2_g1[i].mul_vec(&t1a), &s.l2_01(&ti, &basis_vec(g1, a)));
            let residual = vec_sub(&s.l2_01(&ti, &t1a), &s.t1.mul_vec(&inner));
            report.check_zero("operator_ii", &[a, i], residual);
        }
    }
    for tuple in increasing_tuples(g0, 3) {
        let args: Vec<Vec<Rational>> = tuple.iter().map(|&k| basis_vec(g0, k)).collect();
        let mut total = s.l3_eval(
            &s.t0.mul_vec(&args[0]),
            &s.t0.mul_vec(&args[1]),
            &s.t0.mul_vec(&args[2]),
        );
        for cyc in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
            let (x1, x2, x3) = (&args[cyc[0]], &args[cyc[1]], &args[cyc[2]]);
            let (t1v, t2v) = (s.t0.mul_vec(x1), s.t0.mul_vec(x2));
            let t2_23 = s.t2_eval(x2, x3);
            total = vec_add(&total, &s.l2_01(&t1v, &t2_23));
            let inner = vec_sub(&s.l2_00(&t1v, x2), &s.l2_00(&t2v, x1));
            total = vec_add(&total, &s.t2_eval(x3, &inner));
            let rep_part = vec_sub(
                &s.l2_01(x1, &t2_23).iter().map(|r| -r).collect::<Vec<_>>(),
                &s.l3_eval(&t2v, &s.t0.mul_vec(x3), x1),
            );
            total = vec_add(&total, &s.t1.mul_vec(&rep_part));
        }
        report.check_zero("operator_iii", &tuple, total);
    }
    Ok(report)
}

/// The 3-cocycle of a skeletal Rota-Baxter Lie 2-algebra over the base
/// (g0, l2, T0) with coefficients (g1, l2-action, T1): (f, θ) = (l3, −T2).
pub fn rb2_to_3cocycle(s: &SkeletalRB2) -> Result<(RBRepresentation, Cochain), AlgebraError> {
    check_skeletal_rb2(s)?.into_result()?;
    let g0 = s.g0_dim;
    let mut c = vec![vec![vec![Rational::zero(); g0]; g0]; g0];
    for i in 0..g0 {
        for j in 0..g0 {
            for k in 0..g0 {
                c[i][j][k] = s.l2_g0[i].get(k, j).clone();
            }
        }
    }
    let lie = LieAlgebra::new(g0, c)?;
    let base = RBAlgebra::new(lie.clone(), s.t0.clone())?;
    let coeffs = RBRepresentation::new(base, s.t1.clone(), LinearRep::new(lie, s.l2_g1.clone())?)?;
    let mut coords = s.l3.clone();
    coords.extend(s.t2.iter().map(|x| -x));
    rb_cocycle_check(&coeffs, 3, &coords, "three_cocycle")?.into_result()?;
    Ok((coeffs, Cochain { degree: 3, coords }))
}

/// Inverse of [`rb2_to_3cocycle`]: l3 = f, T2 = −θ over the given base and
/// coefficients. The output is re-checked.
pub fn cocycle_to_rb2(coeffs: &RBRepresentation, c: &Cochain) -> Result<SkeletalRB2, AlgebraError> {
    if c.degree != 3 {
        return Err(AlgebraError::Shape(format!(
            "skeletal structures correspond to degree-3 cocycles, got degree {}",
            c.degree
        )));
    }
    rb_cocycle_check(coeffs, 3, &c.coords, "three_cocycle")?.into_result()?;
    let scheme = RBCochainScheme::new(coeffs, 3);
    let f_dim = scheme.f_dim();
    let g0 = coeffs.base().dim();
    let s = SkeletalRB2 {
        g0_dim: g0,
        g1_dim: coeffs.w_dim(),
        l2_g0: (0..g0).map(|i| coeffs.base().g().ad_basis(i)).collect(),
        l2_g1: (0..g0).map(|i| coeffs.rho_w().act(i).clone()).collect(),
        l3: c.coords[..f_dim].to_vec(),
        t0: coeffs.base().t().clone(),
        t1: coeffs.curly_t().clone(),
        t2: c.coords[f_dim..].iter().map(|x| -x).collect(),
    };
    check_skeletal_rb2(&s)?.into_result()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rat;
    use crate::rrb_structures::{
        adjoint_rb_rep, adjoint_rrb_rep, check_rrb, semidirect_rb, semidirect_rrb,
    };
    use crate::samples::{affine_rb, affine_rrb};

    fn adj_pkg() -> RRBRepresentation {
        adjoint_rrb_rep(&affine_rrb())
    }

    fn rats(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    /// ω = (1,2), ϖ = (3,−1), χ = (4,5) satisfies the single degree-2 cocycle
    /// equation −ω⁰ − ϖ₁ = 0 for the affine structure with adjoint package.
    fn frozen_cocycle(r: &RRBRepresentation) -> TwoCocycle {
        TwoCocycle::new(r, rats(&[1, 2]), rats(&[3, -1]), rats(&[4, 5])).unwrap()
    }

    #[test]
    fn zero_cocycle_gives_semidirect() {
        let a = affine_rrb();
        let r = adj_pkg();
        let e = extension_from_cocycle(&r, &TwoCocycle::zero(&r)).unwrap();
        let sd = semidirect_rrb(&a, &r).unwrap();
        assert_eq!(e.total(), &sd);
        assert_eq!(e.base(), &a);
        assert_eq!(e.curly_t_block(), *r.curly_t());
    }

    #[test]
    fn frozen_cocycle_roundtrips_through_extension() {
        let r = adj_pkg();
        let z = frozen_cocycle(&r);
        let e = extension_from_cocycle(&r, &z).unwrap();
        assert!(check_rrb(e.total()).valid());
        // [e0, e1] picks up the ω twist on the ℋ coordinates.
        assert_eq!(e.total().g().bracket_basis(0, 1), rats(&[0, 1, 1, 2]));
        // 𝔗(u) = T(u) + χ(u).
        assert_eq!(e.total().t().col(0), rats(&[0, 1, 4, 5]));
        let (sg, sv) = canonical_section(&e);
        let back = cocycle_from_extension(&e, &sg, &sv).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn non_cocycle_is_rejected_with_block_witness() {
        let r = adj_pkg();
        let bad = TwoCocycle::new_unchecked(rats(&[1, 0]), rats(&[0, 0]), rats(&[0, 0]));
        let err = extension_from_cocycle(&r, &bad).unwrap_err();
        match err {
            AlgebraError::Invalid(report) => {
                assert!(!report.valid());
                let v = &report.violations[0];
                assert_eq!(v.axiom, "two_cocycle_w_block");
                assert_eq!(v.witness, vec![0, 1, 0, 0]);
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
        assert!(TwoCocycle::new(&r, rats(&[1, 0]), rats(&[0, 0]), rats(&[0, 0])).is_err());
    }

    #[test]
    fn induced_rep_recovers_coefficients_and_ignores_section() {
        let r = adj_pkg();
        let e = extension_from_cocycle(&r, &frozen_cocycle(&r)).unwrap();
        let (sg, sv) = canonical_section(&e);
        let rep0 = induced_coeff_rep_from_extension(&e, &sg, &sv).unwrap();
        assert_eq!(rep0, r);
        let (g, v, h, w) = (e.g_dim(), e.v_dim(), e.h_dim(), e.w_dim());
        for a in 0..h {
            for i in 0..g {
                let mut sg2 = sg.clone();
                sg2.set(g + a, i, rat(1));
                assert_eq!(
                    induced_coeff_rep_from_extension(&e, &sg2, &sv).unwrap(),
                    rep0
                );
            }
        }
        for c in 0..w {
            for k in 0..v {
                let mut sv2 = sv.clone();
                sv2.set(v + c, k, rat(1));
                assert_eq!(
                    induced_coeff_rep_from_extension(&e, &sg, &sv2).unwrap(),
                    rep0
                );
            }
        }
    }

    #[test]
    fn section_change_shifts_cocycle_by_a_coboundary() {
        let r = adj_pkg();
        let z = frozen_cocycle(&r);
        let e = extension_from_cocycle(&r, &z).unwrap();
        let (sg, sv) = canonical_section(&e);
        let (g, v, h, w) = (e.g_dim(), e.v_dim(), e.h_dim(), e.w_dim());
        let mut sg2 = sg.clone();
        sg2.set(g, 0, rat(1));
        sg2.set(g + 1, 1, rat(-2));
        let mut sv2 = sv.clone();
        sv2.set(v, 0, rat(3));
        let z2 = cocycle_from_extension(&e, &sg2, &sv2).unwrap();
        // 𝔰' = 𝔰 + N, s' = s + S shifts the cocycle by exactly D(N, S).
        let scheme1 = CochainScheme::new(&r, 1);
        let mut flat = vec![Rational::zero(); scheme1.total_dim()];
        for i in 0..g {
            for a in 0..h {
                flat[i * h + a] = sg2.get(g + a, i).clone();
            }
        }
        for k in 0..v {
            for c in 0..w {
                flat[g * h + k * w + c] = sv2.get(v + c, k).clone();
            }
        }
        let shift = coboundary_matrix(&scheme1).mul_vec(&flat);
        assert_eq!(vec_sub(&z2.coords(), &z.coords()), shift);
    }

    #[test]
    fn coboundary_witness_maps_twisted_onto_semidirect() {
        let r = adj_pkg();
        let n_wit = Matrix::from_i64(&[&[1, 2], &[0, -1]]);
        let s_wit = Matrix::from_i64(&[&[3]]);
        let scheme1 = CochainScheme::new(&r, 1);
        let (g, v, h, w) = (2, 1, 2, 1);
        let mut flat = vec![Rational::zero(); scheme1.total_dim()];
        for i in 0..g {
            for a in 0..h {
                flat[i * h + a] = n_wit.get(a, i).clone();
            }
        }
        for k in 0..v {
            for c in 0..w {
                flat[g * h + k * w + c] = s_wit.get(c, k).clone();
            }
        }
        let coords = coboundary_matrix(&scheme1).mul_vec(&flat);
        let z1 = TwoCocycle::from_coords(&r, &coords).unwrap();
        let z2 = TwoCocycle::zero(&r);
        let (kappa, lambda) = iso_from_coboundary(&r, &z1, &z2, &n_wit, &s_wit).unwrap();
        assert_eq!(kappa.get(2, 0), &rat(1));
        assert_eq!(kappa.get(2, 2), &rat(1));
        assert_eq!(lambda.get(1, 0), &rat(3));
        // Independent spot check of one pushed-forward bracket.
        let e1 = extension_from_cocycle(&r, &z1).unwrap();
        let e2 = extension_from_cocycle(&r, &z2).unwrap();
        let lhs = kappa.mul_vec(&e1.total().g().bracket_basis(0, 1));
        let rhs = e2.total().g().bracket(&kappa.col(0), &kappa.col(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn iso_with_zero_witness_is_identity() {
        let r = adj_pkg();
        let z = frozen_cocycle(&r);
        let (kappa, lambda) =
            iso_from_coboundary(&r, &z, &z, &Matrix::zeros(2, 2), &Matrix::zeros(1, 1)).unwrap();
        assert_eq!(kappa, Matrix::identity(4));
        assert_eq!(lambda, Matrix::identity(2));
    }

    #[test]
    fn perturbed_witness_is_rejected_with_intertwining_violation() {
        let r = adj_pkg();
        let z = frozen_cocycle(&r);
        let mut n_wit = Matrix::zeros(2, 2);
        n_wit.set(0, 0, rat(1));
        let err = iso_from_coboundary(&r, &z, &z, &n_wit, &Matrix::zeros(1, 1)).unwrap_err();
        match err {
            AlgebraError::Invalid(report) => {
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.axiom.starts_with("coboundary_")));
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.axiom == "intertwine_bracket"));
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn extension_new_rejects_foreign_base() {
        let a = affine_rrb();
        let r = adj_pkg();
        let sd = semidirect_rrb(&a, &r).unwrap();
        let wrong = RRBAlgebra::new(
            LinearRep::new(
                LieAlgebra::abelian(2),
                vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)],
            )
            .unwrap(),
            Matrix::zeros(2, 1),
        )
        .unwrap();
        let err = AbelianExtension::new(sd, wrong, 2, 1).unwrap_err();
        match err {
            AlgebraError::Invalid(report) => {
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.axiom == "projection_bracket"));
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn all_zero_skeletal_structure_is_valid() {
        let s = SkeletalRRB2 {
            g0_dim: 2,
            g1_dim: 1,
            v0_dim: 1,
            v1_dim: 1,
            l2_g0: vec![Matrix::zeros(2, 2); 2],
            l2_g1: vec![Matrix::zeros(1, 1); 2],
            l3: vec![],
            rho0_v0: vec![Matrix::zeros(1, 1); 2],
            rho0_v1: vec![Matrix::zeros(1, 1); 2],
            rho1: vec![Matrix::zeros(1, 1)],
            rho2: vec![Rational::zero(); 1],
            t0: Matrix::zeros(2, 1),
            t1: Matrix::zeros(1, 1),
            t2: vec![],
        };
        assert!(check_skeletal_rrb2(&s).unwrap().valid());
    }

    #[test]
    fn zero_cocycle_gives_strict_skeletal_structure() {
        let r = adj_pkg();
        let scheme = CochainScheme::new(&r, 3);
        let c = Cochain::zero(&scheme);
        let s = cocycle_to_rrb2(&r, &c).unwrap();
        assert!(s.l3.iter().all(Rational::is_zero));
        assert!(s.rho2.iter().all(Rational::is_zero));
        assert!(s.t2.iter().all(Rational::is_zero));
        assert_eq!(s.l2_g0[0], affine_rrb().g().ad_basis(0));
        assert!(check_skeletal_rrb2(&s).unwrap().valid());
    }

    #[test]
    fn three_cocycle_roundtrips_through_skeletal_structure() {
        let r = adj_pkg();
        // The degree-3 space is one-dimensional here and every element is a
        // cocycle, so the kernel is spanned by the unit coordinate.
        let scheme = CochainScheme::new(&r, 3);
        assert_eq!(scheme.total_dim(), 1);
        assert!(coboundary_matrix(&scheme).is_zero());
        let c = Cochain {
            degree: 3,
            coords: rats(&[1]),
        };
        let s = cocycle_to_rrb2(&r, &c).unwrap();
        assert_eq!(s.rho2, rats(&[-1]));
        let (r2, c2) = rrb2_to_3cocycle(&s).unwrap();
        assert_eq!(c2, c);
        assert_eq!(r2, r);
    }

    /// One basis vector of V0 maps onto the generator acting on g1; condition
    /// (iii) then pins exactly the T2 coordinate paired with the other two.
    fn skeletal_sample() -> SkeletalRRB2 {
        SkeletalRRB2 {
            g0_dim: 1,
            g1_dim: 1,
            v0_dim: 3,
            v1_dim: 1,
            l2_g0: vec![Matrix::zeros(1, 1)],
            l2_g1: vec![Matrix::identity(1)],
            l3: vec![],
            rho0_v0: vec![Matrix::zeros(3, 3)],
            rho0_v1: vec![Matrix::zeros(1, 1)],
            rho1: vec![Matrix::zeros(1, 3)],
            rho2: vec![],
            t0: Matrix::from_i64(&[&[1, 0, 0]]),
            t1: Matrix::zeros(1, 1),
            t2: rats(&[5, 7, 0]),
        }
    }

    #[test]
    fn skeletal_sample_is_valid_and_roundtrips() {
        let s = skeletal_sample();
        assert!(check_skeletal_rrb2(&s).unwrap().valid());
        let (coeffs, c) = rrb2_to_3cocycle(&s).unwrap();
        assert_eq!(c.coords, rats(&[-5, -7, 0]));
        let s2 = cocycle_to_rrb2(&coeffs, &c).unwrap();
        assert_eq!(s2, s);
    }

    #[test]
    fn perturbing_t2_fails_condition_iii() {
        let mut s = skeletal_sample();
        s.t2[2] = rat(1);
        let report = check_skeletal_rrb2(&s).unwrap();
        assert!(!report.valid());
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].axiom, "operator_iii");
        assert_eq!(report.violations[0].witness, vec![0, 1, 2]);
    }

    #[test]
    fn rb_zero_cocycle_gives_semidirect() {
        let a = affine_rb();
        let r = adjoint_rb_rep(&a);
        let e = extension_from_cocycle_rb(&r, &RBTwoCocycle::zero(&r)).unwrap();
        assert_eq!(e.total(), &semidirect_rb(&a, &r).unwrap());
        assert_eq!(e.curly_t_block(), *r.curly_t());
    }

    /// ω = (1,2), χ(e0) = (3,4), χ(e1) = (0,5) satisfies the one nontrivial
    /// degree-2 equation: the e1 coordinate of the image is −χ(e1)⁰.
    #[test]
    fn rb_cocycle_roundtrips_through_extension() {
        let r = adjoint_rb_rep(&affine_rb());
        let z = RBTwoCocycle::new(&r, rats(&[1, 2]), rats(&[3, 4, 0, 5])).unwrap();
        let e = extension_from_cocycle_rb(&r, &z).unwrap();
        // T̂(e0) = T(e0) + χ(e0) = e1 + 3h0 + 4h1.
        assert_eq!(e.total().t().col(0), rats(&[0, 1, 3, 4]));
        let back = cocycle_from_extension_rb(&e, &canonical_section_rb(&e)).unwrap();
        assert_eq!(back, z);
        let bad = RBTwoCocycle::new(&r, rats(&[0, 0]), rats(&[0, 0, 1, 0]));
        match bad.unwrap_err() {
            AlgebraError::Invalid(report) => {
                assert_eq!(report.violations[0].axiom, "two_cocycle_theta_block");
                assert_eq!(report.violations[0].witness, vec![0, 1, 1]);
            }
            other => panic!("expected Invalid, got {other:?}"),
        }
    }

    #[test]
    fn rb_induced_rep_is_section_independent() {
        let r = adjoint_rb_rep(&affine_rb());
        let z = RBTwoCocycle::new(&r, rats(&[1, 2]), rats(&[3, 4, 0, 5])).unwrap();
        let e = extension_from_cocycle_rb(&r, &z).unwrap();
        let sg = canonical_section_rb(&e);
        let rep0 = induced_coeff_rep_from_extension_rb(&e, &sg).unwrap();
        assert_eq!(rep0, r);
        for a in 0..e.h_dim() {
            for i in 0..e.g_dim() {
                let mut sg2 = sg.clone();
                sg2.set(e.g_dim() + a, i, rat(-2));
                assert_eq!(induced_coeff_rep_from_extension_rb(&e, &sg2).unwrap(), rep0);
            }
        }
    }

    #[test]
    fn rb_iso_from_coboundary_and_perturbation() {
        let r = adjoint_rb_rep(&affine_rb());
        let n_wit = Matrix::from_i64(&[&[1, 2], &[0, 3]]);
        let mut flat = vec![Rational::zero(); 4];
        for i in 0..2 {
            for a in 0..2 {
                flat[i * 2 + a] = n_wit.get(a, i).clone();
            }
        }
        let coords = rb_coboundary_matrix(&r, 1).mul_vec(&flat);
        let z1 = RBTwoCocycle::from_coords(&r, &coords).unwrap();
        let z2 = RBTwoCocycle::zero(&r);
        let kappa = iso_from_coboundary_rb(&r, &z1, &z2, &n_wit).unwrap();
        assert_eq!(kappa.get(2, 0), &rat(1));
        assert_eq!(kappa.get(3, 1), &rat(3));
        // Shifting the witness at (0,0) changes it by a map that is not a
        // 1-cocycle, so both the coboundary equation and intertwining break.
        let mut bad = n_wit.clone();
        bad.set(0, 0, rat(9));
        assert!(iso_from_coboundary_rb(&r, &z1, &z2, &bad).is_err());
    }

    /// Abelian degree 0 with the identity operator; the generator e0 acts on
    /// g1, so condition (iii) pins the T2 coordinate on the pair (e1, e2).
    fn rb_skeletal_sample() -> SkeletalRB2 {
        SkeletalRB2 {
            g0_dim: 3,
            g1_dim: 1,
            l2_g0: vec![Matrix::zeros(3, 3); 3],
            l2_g1: vec![
                Matrix::identity(1),
                Matrix::zeros(1, 1),
                Matrix::zeros(1, 1),
            ],
            l3: rats(&[0]),
            t0: Matrix::identity(3),
            t1: Matrix::zeros(1, 1),
            t2: rats(&[2, -3, 0]),
        }
    }

    #[test]
    fn rb_skeletal_sample_is_valid_and_roundtrips() {
        let s = rb_skeletal_sample();
        assert!(check_skeletal_rb2(&s).unwrap().valid());
        let (coeffs, c) = rb2_to_3cocycle(&s).unwrap();
        assert_eq!(c.coords, rats(&[0, -2, 3, 0]));
        let s2 = cocycle_to_rb2(&coeffs, &c).unwrap();
        assert_eq!(s2, s);
    }

    #[test]
    fn rb_perturbing_t2_fails_condition_iii() {
        let mut s = rb_skeletal_sample();
        s.t2[2] = rat(1);
        let report = check_skeletal_rb2(&s).unwrap();
        assert!(!report.valid());
        assert_eq!(report.violations[0].axiom, "operator_iii");
        assert_eq!(report.violations[0].witness, vec![0, 1, 2]);
    }

    #[test]
    fn rb_zero_cocycle_gives_strict_skeletal() {
        let r = adjoint_rb_rep(&affine_rb());
        let scheme = RBCochainScheme::new(&r, 3);
        let c = Cochain {
            degree: 3,
            coords: vec![Rational::zero(); scheme.total_dim()],
        };
        let s = cocycle_to_rb2(&r, &c).unwrap();
        assert!(s.l3.iter().all(Rational::is_zero));
        assert!(s.t2.iter().all(Rational::is_zero));
        let (_, c2) = rb2_to_3cocycle(&s).unwrap();
        assert_eq!(c2, c);
    }
}
