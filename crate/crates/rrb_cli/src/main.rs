//! Command-line front end. Exit codes: 0 success, 1 axiom or cocycle
//! violation (a report with witnesses is still printed), 2 file/schema
//! errors (with JSON pointers), 3 computation budget exceeded.

mod input;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use input::SchemaError;
use rrb_core::algebra_core::{check_jacobi, check_representation, AlgebraError, ValidationReport};
use rrb_core::cohomology::{
    cohomology_dims, les_report, rb_cohomology_dims, xi_commutes, CohomologyError,
};
use rrb_core::correspondences::{
    canonical_section, canonical_section_rb, cocycle_from_extension, cocycle_from_extension_rb,
    cocycle_to_rb2, cocycle_to_rrb2, extension_from_cocycle, extension_from_cocycle_rb,
    rb2_to_3cocycle, rrb2_to_3cocycle, AbelianExtension, RBAbelianExtension,
};
use rrb_core::exact_linalg::rationals_to_strings;
use rrb_core::rrb_structures::{
    check_rb, check_rb_representation, check_rrb, check_rrb_representation, derivation_space,
    rb_derivation_space, RBRepresentation, RRBRepresentation,
};

#[derive(Parser)]
#[command(
    name = "rrb",
    version,
    about = "Exact rational computations for relative Rota-Baxter Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Relative Rota-Baxter algebra over a representation.
    Rrb,
    /// Plain Rota-Baxter algebra (weight zero).
    Rb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Canonical single-line JSON with sorted keys.
    Json,
    /// Indented rendering of the same report.
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every axiom of a structure file, reporting violations with
    /// basis witnesses and residuals.
    Check {
        /// Structure file (algebra with operator, optional coefficients).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cochain, cocycle, coboundary, and cohomology dimensions per degree.
    Cohomology {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        /// Highest cohomology degree to compute (at least 1).
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        /// Abort with exit code 3 if any cochain space exceeds this size.
        #[arg(long, default_value_t = 20000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Basis of the operator-compatible derivation space.
    Derivations {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the abelian extension determined by a 2-cocycle.
    ExtensionBuild {
        /// Structure file carrying the base algebra and coefficients.
        input: PathBuf,
        /// 2-cocycle file with blocks "omega", "varpi", "chi" ("omega",
        /// "chi" for --variant rb).
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Extract the 2-cocycle of an abelian extension along a section.
    ExtensionExtract {
        /// Extension file with "total", "base", "h_dim" (and "w_dim").
        input: PathBuf,
        /// Section file with "s_g" (and "s_v"); defaults to the canonical
        /// inclusion of the base coordinates.
        #[arg(long)]
        section: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the skeletal 2-term structure determined by a 3-cocycle.
    Lie2FromCocycle {
        /// Structure file carrying the base algebra and coefficients.
        input: PathBuf,
        /// Cochain file with "degree" 3 and flat "coords".
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Read off the 3-cocycle of a skeletal 2-term structure.
    Lie2ToCocycle {
        /// Skeletal structure file.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Rrb)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Certify exactness of the long sequence linking the full complex to
    /// its subcomplex and quotient.
    Les {
        input: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        #[arg(long, default_value_t = 20000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify that the comparison map to the induced pre-Lie complex is a
    /// chain map degree by degree.
    XiCheck {
        input: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        #[arg(long, default_value_t = 20000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

impl Command {
    fn format(&self) -> Format {
        match self {
            Command::Check { format, .. }
            | Command::Cohomology { format, .. }
            | Command::Derivations { format, .. }
            | Command::ExtensionBuild { format, .. }
            | Command::ExtensionExtract { format, .. }
            | Command::Lie2FromCocycle { format, .. }
            | Command::Lie2ToCocycle { format, .. }
            | Command::Les { format, .. }
            | Command::XiCheck { format, .. } => *format,
        }
    }
}

struct Outcome {
    value: Value,
    code: u8,
}

enum CliError {
    Schema(SchemaError),
    Axioms(ValidationReport),
    Budget {
        degree: usize,
        required: usize,
        budget: usize,
    },
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        CliError::Schema(e)
    }
}

fn algebra_err(e: AlgebraError, file: &str) -> CliError {
    match e {
        AlgebraError::Invalid(report) => CliError::Axioms(report),
        AlgebraError::Shape(msg) => CliError::Schema(SchemaError::new(file, "", msg)),
        AlgebraError::MismatchedBase => CliError::Schema(SchemaError::new(
            file,
            "",
            "structures are built over different base algebras",
        )),
    }
}

fn cohomology_err(e: CohomologyError, file: &str) -> CliError {
    match e {
        CohomologyError::BudgetExceeded {
            degree,
            required,
            budget,
        } => CliError::Budget {
            degree,
            required,
            budget,
        },
        CohomologyError::Mismatch(msg) => CliError::Schema(SchemaError::new(file, "", msg)),
    }
}

fn error_value(e: &CliError) -> (Value, u8) {
    match e {
        CliError::Schema(s) => (
            json!({"errors": [{"file": s.file, "message": s.message, "pointer": s.pointer}]}),
            2,
        ),
        CliError::Axioms(report) => (val(report), 1),
        CliError::Budget {
            degree,
            required,
            budget,
        } => (
            json!({"error": {
                "budget": budget, "degree": degree, "required": required,
                "type": "budget_exceeded"
            }}),
            3,
        ),
    }
}

fn val<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize to plain JSON")
}

fn load(path: &Path) -> Result<(Value, String), CliError> {
    let file = path.display().to_string();
    let text = fs::read_to_string(path)
        .map_err(|e| SchemaError::new(&file, "", format!("cannot read file: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| SchemaError::new(&file, "", format!("invalid JSON: {e}")))?;
    Ok((v, file))
}

fn require_valid(report: ValidationReport) -> Result<(), CliError> {
    if report.valid() {
        Ok(())
    } else {
        Err(CliError::Axioms(report))
    }
}

/// Jacobi, representation, and operator axioms of the underlying structure;
/// with an explicit coefficient package, its axioms as well. A defaulted
/// adjoint package is valid whenever the structure is, so it is not rechecked.
fn validate_rrb(pkg: &RRBRepresentation, explicit: bool) -> ValidationReport {
    let alg = pkg.base();
    let mut report = check_jacobi(alg.g());
    report.absorb(check_representation(alg.rho()));
    report.absorb(check_rrb(alg));
    if explicit {
        report.absorb(check_representation(pkg.rho_h()));
        report.absorb(check_representation(pkg.rho_w()));
        report.absorb(check_rrb_representation(pkg));
    }
    report
}

fn validate_rb(pkg: &RBRepresentation, explicit: bool) -> ValidationReport {
    let alg = pkg.base();
    let mut report = check_jacobi(alg.g());
    report.absorb(check_rb(alg));
    if explicit {
        report.absorb(check_representation(pkg.rho_w()));
        report.absorb(check_rb_representation(pkg));
    }
    report
}

fn load_rrb_package(v: &Value, file: &str) -> Result<RRBRepresentation, CliError> {
    let alg = input::parse_rrb_algebra(v, "", file)?;
    let (pkg, explicit) = input::parse_rrb_package(v, &alg, file)?;
    require_valid(validate_rrb(&pkg, explicit))?;
    Ok(pkg)
}

fn load_rb_package(v: &Value, file: &str) -> Result<RBRepresentation, CliError> {
    let alg = input::parse_rb_algebra(v, "", file)?;
    let (pkg, explicit) = input::parse_rb_package(v, &alg, file)?;
    require_valid(validate_rb(&pkg, explicit))?;
    Ok(pkg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.command.format();
    let (value, code) = match dispatch(cli.command) {
        Ok(outcome) => (outcome.value, outcome.code),
        Err(e) => error_value(&e),
    };
    let rendered = match format {
        Format::Json => render::to_canonical_json(&value),
        Format::Text => render::to_text(&value),
    };
    println!("{rendered}");
    ExitCode::from(code)
}

fn dispatch(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Check { input, variant, .. } => cmd_check(&input, variant),
        Command::Cohomology {
            input,
            variant,
            max_degree,
            budget,
            ..
        } => cmd_cohomology(&input, variant, max_degree as usize, budget as usize),
        Command::Derivations { input, variant, .. } => cmd_derivations(&input, variant),
        Command::ExtensionBuild {
            input,
            cocycle,
            variant,
            ..
        } => cmd_extension_build(&input, &cocycle, variant),
        Command::ExtensionExtract {
            input,
            section,
            variant,
            ..
        } => cmd_extension_extract(&input, section.as_deref(), variant),
        Command::Lie2FromCocycle {
            input,
            cocycle,
            variant,
            ..
        } => cmd_lie2_from_cocycle(&input, &cocycle, variant),
        Command::Lie2ToCocycle { input, variant, .. } => cmd_lie2_to_cocycle(&input, variant),
        Command::Les {
            input,
            max_degree,
            budget,
            ..
        } => cmd_les(&input, max_degree as usize, budget as usize),
        Command::XiCheck {
            input,
            max_degree,
            budget,
            ..
        } => cmd_xi_check(&input, max_degree as usize, budget as usize),
    }
}

fn cmd_check(path: &Path, variant: Variant) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let report = match variant {
        Variant::Rrb => {
            let alg = input::parse_rrb_algebra(&v, "", &file)?;
            let (pkg, explicit) = input::parse_rrb_package(&v, &alg, &file)?;
            validate_rrb(&pkg, explicit)
        }
        Variant::Rb => {
            let alg = input::parse_rb_algebra(&v, "", &file)?;
            let (pkg, explicit) = input::parse_rb_package(&v, &alg, &file)?;
            validate_rb(&pkg, explicit)
        }
    };
    let code = u8::from(!report.valid());
    Ok(Outcome {
        value: val(&report),
        code,
    })
}

fn cmd_cohomology(
    path: &Path,
    variant: Variant,
    max_degree: usize,
    budget: usize,
) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let report = match variant {
        Variant::Rrb => {
            let pkg = load_rrb_package(&v, &file)?;
            cohomology_dims(&pkg, max_degree, budget).map_err(|e| cohomology_err(e, &file))?
        }
        Variant::Rb => {
            let pkg = load_rb_package(&v, &file)?;
            rb_cohomology_dims(&pkg, max_degree, budget).map_err(|e| cohomology_err(e, &file))?
        }
    };
    Ok(Outcome {
        value: val(&report),
        code: 0,
    })
}

fn cmd_derivations(path: &Path, variant: Variant) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let space = match variant {
        Variant::Rrb => {
            let alg = input::parse_rrb_algebra(&v, "", &file)?;
            let mut report = check_jacobi(alg.g());
            report.absorb(check_representation(alg.rho()));
            report.absorb(check_rrb(&alg));
            require_valid(report)?;
            derivation_space(&alg)
        }
        Variant::Rb => {
            let alg = input::parse_rb_algebra(&v, "", &file)?;
            let mut report = check_jacobi(alg.g());
            report.absorb(check_rb(&alg));
            require_valid(report)?;
            rb_derivation_space(&alg)
        }
    };
    let basis: Vec<Vec<String>> = space
        .basis()
        .iter()
        .map(|b| rationals_to_strings(b))
        .collect();
    Ok(Outcome {
        value: json!({"basis": basis, "dimension": space.dim()}),
        code: 0,
    })
}

fn cmd_extension_build(path: &Path, cocycle: &Path, variant: Variant) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let (zv, zfile) = load(cocycle)?;
    let value = match variant {
        Variant::Rrb => {
            let pkg = load_rrb_package(&v, &file)?;
            let z = input::parse_two_cocycle(&zv, &pkg, &zfile)?;
            let e = extension_from_cocycle(&pkg, &z).map_err(|e| algebra_err(e, &zfile))?;
            val(&e)
        }
        Variant::Rb => {
            let pkg = load_rb_package(&v, &file)?;
            let z = input::parse_rb_two_cocycle(&zv, &pkg, &zfile)?;
            let e = extension_from_cocycle_rb(&pkg, &z).map_err(|e| algebra_err(e, &zfile))?;
            val(&e)
        }
    };
    Ok(Outcome { value, code: 0 })
}

fn cmd_extension_extract(
    path: &Path,
    section: Option<&Path>,
    variant: Variant,
) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let value = match variant {
        Variant::Rrb => {
            let (total, base, h_dim, w_dim) = input::parse_rrb_extension(&v, &file)?;
            let mut report = check_jacobi(total.g());
            report.absorb(check_representation(total.rho()));
            report.absorb(check_rrb(&total));
            report.absorb(check_jacobi(base.g()));
            report.absorb(check_representation(base.rho()));
            report.absorb(check_rrb(&base));
            require_valid(report)?;
            let e = AbelianExtension::new(total, base, h_dim, w_dim)
                .map_err(|err| algebra_err(err, &file))?;
            let (s_g, s_v) = match section {
                Some(p) => {
                    let (sv, sfile) = load(p)?;
                    input::parse_section(&sv, e.g_dim(), e.v_dim(), e.h_dim(), e.w_dim(), &sfile)?
                }
                None => canonical_section(&e),
            };
            let z =
                cocycle_from_extension(&e, &s_g, &s_v).map_err(|err| algebra_err(err, &file))?;
            val(&z)
        }
        Variant::Rb => {
            let (total, base, h_dim) = input::parse_rb_extension(&v, &file)?;
            let mut report = check_jacobi(total.g());
            report.absorb(check_rb(&total));
            report.absorb(check_jacobi(base.g()));
            report.absorb(check_rb(&base));
            require_valid(report)?;
            let e = RBAbelianExtension::new(total, base, h_dim)
                .map_err(|err| algebra_err(err, &file))?;
            let s_g = match section {
                Some(p) => {
                    let (sv, sfile) = load(p)?;
                    input::parse_rb_section(&sv, e.g_dim(), e.h_dim(), &sfile)?
                }
                None => canonical_section_rb(&e),
            };
            let z = cocycle_from_extension_rb(&e, &s_g).map_err(|err| algebra_err(err, &file))?;
            val(&z)
        }
    };
    Ok(Outcome { value, code: 0 })
}

fn cmd_lie2_from_cocycle(
    path: &Path,
    cocycle: &Path,
    variant: Variant,
) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let (cv, cfile) = load(cocycle)?;
    let value = match variant {
        Variant::Rrb => {
            let pkg = load_rrb_package(&v, &file)?;
            let c = input::parse_cochain3(&cv, &pkg, &cfile)?;
            let s = cocycle_to_rrb2(&pkg, &c).map_err(|e| algebra_err(e, &cfile))?;
            val(&s)
        }
        Variant::Rb => {
            let pkg = load_rb_package(&v, &file)?;
            let c = input::parse_rb_cochain3(&cv, &pkg, &cfile)?;
            let s = cocycle_to_rb2(&pkg, &c).map_err(|e| algebra_err(e, &cfile))?;
            val(&s)
        }
    };
    Ok(Outcome { value, code: 0 })
}

fn cmd_lie2_to_cocycle(path: &Path, variant: Variant) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let value = match variant {
        Variant::Rrb => {
            let s = input::parse_skeletal_rrb2(&v, &file)?;
            let (coeffs, c) = rrb2_to_3cocycle(&s).map_err(|e| algebra_err(e, &file))?;
            json!({"base": val(coeffs.base()), "cochain": val(&c), "coeffs": val(&coeffs)})
        }
        Variant::Rb => {
            let s = input::parse_skeletal_rb2(&v, &file)?;
            let (coeffs, c) = rb2_to_3cocycle(&s).map_err(|e| algebra_err(e, &file))?;
            json!({"base": val(coeffs.base()), "cochain": val(&c), "coeffs": val(&coeffs)})
        }
    };
    Ok(Outcome { value, code: 0 })
}

fn cmd_les(path: &Path, max_degree: usize, budget: usize) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let pkg = load_rrb_package(&v, &file)?;
    let report = les_report(&pkg, max_degree, budget).map_err(|e| cohomology_err(e, &file))?;
    let code = u8::from(!report.exact);
    Ok(Outcome {
        value: val(&report),
        code,
    })
}

fn cmd_xi_check(path: &Path, max_degree: usize, budget: usize) -> Result<Outcome, CliError> {
    let (v, file) = load(path)?;
    let pkg = load_rrb_package(&v, &file)?;
    let report = xi_commutes(&pkg, max_degree, budget).map_err(|e| cohomology_err(e, &file))?;
    let code = u8::from(!report.commutes);
    Ok(Outcome {
        value: val(&report),
        code,
    })
}
