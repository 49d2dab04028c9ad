//! JSON input parsing. Every shape error carries the offending file and a
//! JSON pointer; axiom checks are not run here, callers validate separately
//! so that schema errors and axiom violations keep distinct exit codes.

use serde_json::Value;

use rrb_core::algebra_core::{LieAlgebra, LinearRep};
use rrb_core::cohomology::{Cochain, CochainScheme, RBCochainScheme};
use rrb_core::correspondences::{RBTwoCocycle, SkeletalRB2, SkeletalRRB2, TwoCocycle};
use rrb_core::exact_linalg::{parse_rational, Matrix, Rational};
use rrb_core::rrb_structures::{
    adjoint_rb_rep, adjoint_rrb_rep, RBAlgebra, RBRepresentation, RRBAlgebra, RRBRepresentation,
};

#[derive(Debug, Clone)]
pub struct SchemaError {
    pub file: String,
    pub pointer: String,
    pub message: String,
}

impl SchemaError {
    pub fn new(file: &str, pointer: &str, message: impl Into<String>) -> Self {
        SchemaError {
            file: file.into(),
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

type Parsed<T> = Result<T, SchemaError>;

fn get<'v>(v: &'v Value, key: &str, ptr: &str, file: &str) -> Parsed<&'v Value> {
    let obj = v
        .as_object()
        .ok_or_else(|| SchemaError::new(file, ptr, "expected an object"))?;
    obj.get(key)
        .ok_or_else(|| SchemaError::new(file, ptr, format!("missing required key \"{key}\"")))
}

fn as_array<'v>(v: &'v Value, ptr: &str, file: &str) -> Parsed<&'v Vec<Value>> {
    v.as_array()
        .ok_or_else(|| SchemaError::new(file, ptr, "expected an array"))
}

fn as_usize(v: &Value, ptr: &str, file: &str) -> Parsed<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| SchemaError::new(file, ptr, "expected a nonnegative integer"))
}

fn rational(v: &Value, ptr: &str, file: &str) -> Parsed<Rational> {
    let s = v
        .as_str()
        .ok_or_else(|| SchemaError::new(file, ptr, "expected a rational string like \"-3/2\""))?;
    parse_rational(s).map_err(|msg| SchemaError::new(file, ptr, msg))
}

fn rational_vec(v: &Value, len: usize, ptr: &str, file: &str) -> Parsed<Vec<Rational>> {
    let arr = as_array(v, ptr, file)?;
    if arr.len() != len {
        return Err(SchemaError::new(
            file,
            ptr,
            format!("expected {len} entries, got {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{ptr}/{i}"), file))
        .collect()
}

fn matrix(v: &Value, rows: usize, cols: usize, ptr: &str, file: &str) -> Parsed<Matrix> {
    let arr = as_array(v, ptr, file)?;
    if arr.len() != rows {
        return Err(SchemaError::new(
            file,
            ptr,
            format!("expected {rows} rows, got {}", arr.len()),
        ));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in arr.iter().enumerate() {
        entries.extend(rational_vec(row, cols, &format!("{ptr}/{i}"), file)?);
    }
    Matrix::new(rows, cols, entries).map_err(|e| SchemaError::new(file, ptr, e.to_string()))
}

fn matrix_list(
    v: &Value,
    count: usize,
    rows: usize,
    cols: usize,
    ptr: &str,
    file: &str,
) -> Parsed<Vec<Matrix>> {
    let arr = as_array(v, ptr, file)?;
    if arr.len() != count {
        return Err(SchemaError::new(
            file,
            ptr,
            format!("expected {count} matrices, got {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(i, m)| matrix(m, rows, cols, &format!("{ptr}/{i}"), file))
        .collect()
}

/// {"dim": n, "bracket": [[i, j, [n rational strings]], ...]} with i < j,
/// indices in range, and no duplicate pairs. Antisymmetry holds by
/// construction; the Jacobi identity is an axiom checked by the caller.
pub fn parse_lie(v: &Value, ptr: &str, file: &str) -> Parsed<LieAlgebra> {
    let dim = as_usize(get(v, "dim", ptr, file)?, &format!("{ptr}/dim"), file)?;
    if dim == 0 {
        return Err(SchemaError::new(
            file,
            &format!("{ptr}/dim"),
            "dim must be at least 1",
        ));
    }
    let mut c = vec![vec![vec![Rational::from_integer(0.into()); dim]; dim]; dim];
    let bracket = as_array(
        get(v, "bracket", ptr, file)?,
        &format!("{ptr}/bracket"),
        file,
    )?;
    let mut seen = vec![false; dim * dim];
    for (e, entry) in bracket.iter().enumerate() {
        let eptr = format!("{ptr}/bracket/{e}");
        let triple = as_array(entry, &eptr, file)?;
        if triple.len() != 3 {
            return Err(SchemaError::new(
                file,
                &eptr,
                "expected [i, j, coefficients]",
            ));
        }
        let i = as_usize(&triple[0], &format!("{eptr}/0"), file)?;
        let j = as_usize(&triple[1], &format!("{eptr}/1"), file)?;
        if i >= dim {
            return Err(SchemaError::new(
                file,
                &format!("{eptr}/0"),
                "index out of range",
            ));
        }
        if j >= dim {
            return Err(SchemaError::new(
                file,
                &format!("{eptr}/1"),
                "index out of range",
            ));
        }
        if i == j {
            return Err(SchemaError::new(
                file,
                &eptr,
                "diagonal bracket entries are forbidden (antisymmetry forces them to zero)",
            ));
        }
        if i > j {
            return Err(SchemaError::new(
                file,
                &eptr,
                "bracket entries must have i < j",
            ));
        }
        if seen[i * dim + j] {
            return Err(SchemaError::new(
                file,
                &eptr,
                format!("duplicate bracket entry ({i}, {j})"),
            ));
        }
        seen[i * dim + j] = true;
        let coeffs = rational_vec(&triple[2], dim, &format!("{eptr}/2"), file)?;
        for (k, val) in coeffs.into_iter().enumerate() {
            c[j][i][k] = -&val;
            c[i][j][k] = val;
        }
    }
    Ok(LieAlgebra::new_unchecked(dim, c))
}

/// {"space_dim": n, "action": [one n×n matrix per basis element]}.
pub fn parse_linear_rep(v: &Value, lie: &LieAlgebra, ptr: &str, file: &str) -> Parsed<LinearRep> {
    let n = as_usize(
        get(v, "space_dim", ptr, file)?,
        &format!("{ptr}/space_dim"),
        file,
    )?;
    if n == 0 {
        return Err(SchemaError::new(
            file,
            &format!("{ptr}/space_dim"),
            "space_dim must be at least 1",
        ));
    }
    let action = matrix_list(
        get(v, "action", ptr, file)?,
        lie.dim(),
        n,
        n,
        &format!("{ptr}/action"),
        file,
    )?;
    Ok(LinearRep::new_unchecked(lie.clone(), action))
}

/// {"lie": ..., "rep": ..., "T": g×v matrix}.
pub fn parse_rrb_algebra(v: &Value, ptr: &str, file: &str) -> Parsed<RRBAlgebra> {
    let lie = parse_lie(get(v, "lie", ptr, file)?, &format!("{ptr}/lie"), file)?;
    let rep = parse_linear_rep(get(v, "rep", ptr, file)?, &lie, &format!("{ptr}/rep"), file)?;
    let t = matrix(
        get(v, "T", ptr, file)?,
        lie.dim(),
        rep.space_dim(),
        &format!("{ptr}/T"),
        file,
    )?;
    RRBAlgebra::new_unchecked(rep, t).map_err(|e| SchemaError::new(file, ptr, e.to_string()))
}

/// {"lie": ..., "T": g×g matrix}.
pub fn parse_rb_algebra(v: &Value, ptr: &str, file: &str) -> Parsed<RBAlgebra> {
    let lie = parse_lie(get(v, "lie", ptr, file)?, &format!("{ptr}/lie"), file)?;
    let t = matrix(
        get(v, "T", ptr, file)?,
        lie.dim(),
        lie.dim(),
        &format!("{ptr}/T"),
        file,
    )?;
    RBAlgebra::new_unchecked(lie, t).map_err(|e| SchemaError::new(file, ptr, e.to_string()))
}

/// Optional "coeffs" member {"curlyT", "mu", "rho_h", "rho_w"}; defaults to
/// the adjoint package. Returns the package and whether it was explicit.
pub fn parse_rrb_package(
    root: &Value,
    alg: &RRBAlgebra,
    file: &str,
) -> Parsed<(RRBRepresentation, bool)> {
    let Some(v) = root.get("coeffs") else {
        return Ok((adjoint_rrb_rep(alg), false));
    };
    let ptr = "/coeffs";
    let rho_h = parse_linear_rep(get(v, "rho_h", ptr, file)?, alg.g(), "/coeffs/rho_h", file)?;
    let rho_w = parse_linear_rep(get(v, "rho_w", ptr, file)?, alg.g(), "/coeffs/rho_w", file)?;
    let (h, w) = (rho_h.space_dim(), rho_w.space_dim());
    let curly_t = matrix(get(v, "curlyT", ptr, file)?, h, w, "/coeffs/curlyT", file)?;
    let mu = matrix_list(
        get(v, "mu", ptr, file)?,
        alg.v_dim(),
        w,
        h,
        "/coeffs/mu",
        file,
    )?;
    let pkg = RRBRepresentation::new_unchecked(alg.clone(), curly_t, rho_h, rho_w, mu)
        .map_err(|e| SchemaError::new(file, ptr, e.to_string()))?;
    Ok((pkg, true))
}

/// Optional "coeffs" member {"curlyT", "rho_w"}; defaults to the adjoint.
pub fn parse_rb_package(
    root: &Value,
    alg: &RBAlgebra,
    file: &str,
) -> Parsed<(RBRepresentation, bool)> {
    let Some(v) = root.get("coeffs") else {
        return Ok((adjoint_rb_rep(alg), false));
    };
    let ptr = "/coeffs";
    let rho_w = parse_linear_rep(get(v, "rho_w", ptr, file)?, alg.g(), "/coeffs/rho_w", file)?;
    let h = rho_w.space_dim();
    let curly_t = matrix(get(v, "curlyT", ptr, file)?, h, h, "/coeffs/curlyT", file)?;
    let pkg = RBRepresentation::new_unchecked(alg.clone(), curly_t, rho_w)
        .map_err(|e| SchemaError::new(file, ptr, e.to_string()))?;
    Ok((pkg, true))
}

/// {"total": ..., "base": ..., "h_dim": n, "w_dim": n}; block axioms are
/// checked by the caller through the extension constructor.
pub fn parse_rrb_extension(
    v: &Value,
    file: &str,
) -> Parsed<(RRBAlgebra, RRBAlgebra, usize, usize)> {
    let total = parse_rrb_algebra(get(v, "total", "", file)?, "/total", file)?;
    let base = parse_rrb_algebra(get(v, "base", "", file)?, "/base", file)?;
    let h_dim = as_usize(get(v, "h_dim", "", file)?, "/h_dim", file)?;
    let w_dim = as_usize(get(v, "w_dim", "", file)?, "/w_dim", file)?;
    Ok((total, base, h_dim, w_dim))
}

/// {"total": ..., "base": ..., "h_dim": n}.
pub fn parse_rb_extension(v: &Value, file: &str) -> Parsed<(RBAlgebra, RBAlgebra, usize)> {
    let total = parse_rb_algebra(get(v, "total", "", file)?, "/total", file)?;
    let base = parse_rb_algebra(get(v, "base", "", file)?, "/base", file)?;
    let h_dim = as_usize(get(v, "h_dim", "", file)?, "/h_dim", file)?;
    Ok((total, base, h_dim))
}

/// {"omega": [...], "varpi": [...], "chi": [...]} with block lengths taken
/// from the coefficient package. The cocycle identity is not checked here.
pub fn parse_two_cocycle(v: &Value, coeffs: &RRBRepresentation, file: &str) -> Parsed<TwoCocycle> {
    let scheme = CochainScheme::new(coeffs, 2);
    let (fh, fw, th) = scheme.layout();
    let omega = rational_vec(get(v, "omega", "", file)?, fh, "/omega", file)?;
    let varpi = rational_vec(get(v, "varpi", "", file)?, fw, "/varpi", file)?;
    let chi = rational_vec(get(v, "chi", "", file)?, th, "/chi", file)?;
    Ok(TwoCocycle::new_unchecked(omega, varpi, chi))
}

/// {"omega": [...], "chi": [...]} for the Rota-Baxter complex.
pub fn parse_rb_two_cocycle(
    v: &Value,
    coeffs: &RBRepresentation,
    file: &str,
) -> Parsed<RBTwoCocycle> {
    let scheme = RBCochainScheme::new(coeffs, 2);
    let omega = rational_vec(get(v, "omega", "", file)?, scheme.f_dim(), "/omega", file)?;
    let chi = rational_vec(get(v, "chi", "", file)?, scheme.theta_dim(), "/chi", file)?;
    Ok(RBTwoCocycle::new_unchecked(omega, chi))
}

/// {"degree": 3, "coords": [...]} against the relative scheme.
pub fn parse_cochain3(v: &Value, coeffs: &RRBRepresentation, file: &str) -> Parsed<Cochain> {
    let degree = as_usize(get(v, "degree", "", file)?, "/degree", file)?;
    if degree != 3 {
        return Err(SchemaError::new(file, "/degree", "expected degree 3"));
    }
    let want = CochainScheme::new(coeffs, 3).total_dim();
    let coords = rational_vec(get(v, "coords", "", file)?, want, "/coords", file)?;
    Ok(Cochain { degree: 3, coords })
}

/// {"degree": 3, "coords": [...]} against the Rota-Baxter scheme.
pub fn parse_rb_cochain3(v: &Value, coeffs: &RBRepresentation, file: &str) -> Parsed<Cochain> {
    let degree = as_usize(get(v, "degree", "", file)?, "/degree", file)?;
    if degree != 3 {
        return Err(SchemaError::new(file, "/degree", "expected degree 3"));
    }
    let want = RBCochainScheme::new(coeffs, 3).total_dim();
    let coords = rational_vec(get(v, "coords", "", file)?, want, "/coords", file)?;
    Ok(Cochain { degree: 3, coords })
}

/// {"s_g": (g+h)×g matrix, "s_v": (v+w)×v matrix}.
pub fn parse_section(
    v: &Value,
    g: usize,
    v_dim: usize,
    h: usize,
    w: usize,
    file: &str,
) -> Parsed<(Matrix, Matrix)> {
    let s_g = matrix(get(v, "s_g", "", file)?, g + h, g, "/s_g", file)?;
    let s_v = matrix(get(v, "s_v", "", file)?, v_dim + w, v_dim, "/s_v", file)?;
    Ok((s_g, s_v))
}

/// {"s_g": (g+h)×g matrix}; "s_v" is absent in the Rota-Baxter setting.
pub fn parse_rb_section(v: &Value, g: usize, h: usize, file: &str) -> Parsed<Matrix> {
    matrix(get(v, "s_g", "", file)?, g + h, g, "/s_g", file)
}

/// Mirrors the skeletal structure serialization field by field.
pub fn parse_skeletal_rrb2(v: &Value, file: &str) -> Parsed<SkeletalRRB2> {
    let g0 = as_usize(get(v, "g0_dim", "", file)?, "/g0_dim", file)?;
    let g1 = as_usize(get(v, "g1_dim", "", file)?, "/g1_dim", file)?;
    let v0 = as_usize(get(v, "v0_dim", "", file)?, "/v0_dim", file)?;
    let v1 = as_usize(get(v, "v1_dim", "", file)?, "/v1_dim", file)?;
    let binom = |n: usize, k: usize| -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    };
    Ok(SkeletalRRB2 {
        g0_dim: g0,
        g1_dim: g1,
        v0_dim: v0,
        v1_dim: v1,
        l2_g0: matrix_list(get(v, "l2_g0", "", file)?, g0, g0, g0, "/l2_g0", file)?,
        l2_g1: matrix_list(get(v, "l2_g1", "", file)?, g0, g1, g1, "/l2_g1", file)?,
        l3: rational_vec(get(v, "l3", "", file)?, binom(g0, 3) * g1, "/l3", file)?,
        rho0_v0: matrix_list(get(v, "rho0_v0", "", file)?, g0, v0, v0, "/rho0_v0", file)?,
        rho0_v1: matrix_list(get(v, "rho0_v1", "", file)?, g0, v1, v1, "/rho0_v1", file)?,
        rho1: matrix_list(get(v, "rho1", "", file)?, g1, v1, v0, "/rho1", file)?,
        rho2: rational_vec(
            get(v, "rho2", "", file)?,
            binom(g0, 2) * v0 * v1,
            "/rho2",
            file,
        )?,
        t0: matrix(get(v, "t0", "", file)?, g0, v0, "/t0", file)?,
        t1: matrix(get(v, "t1", "", file)?, g1, v1, "/t1", file)?,
        t2: rational_vec(get(v, "t2", "", file)?, binom(v0, 2) * g1, "/t2", file)?,
    })
}

/// Mirrors the Rota-Baxter skeletal structure serialization.
pub fn parse_skeletal_rb2(v: &Value, file: &str) -> Parsed<SkeletalRB2> {
    let g0 = as_usize(get(v, "g0_dim", "", file)?, "/g0_dim", file)?;
    let g1 = as_usize(get(v, "g1_dim", "", file)?, "/g1_dim", file)?;
    let binom = |n: usize, k: usize| -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    };
    Ok(SkeletalRB2 {
        g0_dim: g0,
        g1_dim: g1,
        l2_g0: matrix_list(get(v, "l2_g0", "", file)?, g0, g0, g0, "/l2_g0", file)?,
        l2_g1: matrix_list(get(v, "l2_g1", "", file)?, g0, g1, g1, "/l2_g1", file)?,
        l3: rational_vec(get(v, "l3", "", file)?, binom(g0, 3) * g1, "/l3", file)?,
        t0: matrix(get(v, "t0", "", file)?, g0, g0, "/t0", file)?,
        t1: matrix(get(v, "t1", "", file)?, g1, g1, "/t1", file)?,
        t2: rational_vec(get(v, "t2", "", file)?, binom(g0, 2) * g1, "/t2", file)?,
    })
}
