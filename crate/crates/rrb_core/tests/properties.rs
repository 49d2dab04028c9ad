//! Cross-checks against the independent dense oracle plus seeded property
//! tests over randomly generated valid structures.

mod common;

use common::{gen, named_rrb_packages, oracle, rb_packages};
use proptest::prelude::*;
use rrb_core::algebra_core::{check_jacobi, check_representation};
use rrb_core::cohomology::{
    coboundary_matrix, rb_coboundary_matrix, rb_embedding_coefficients, CochainScheme,
    RBCochainScheme,
};
use rrb_core::rrb_structures::{
    adjoint_rb_rep, adjoint_rrb_rep, check_rb, check_rrb, check_rrb_representation,
    derivation_space, dual_rrb_rep, rb_derivation_space, rb_to_rrb, semidirect_rb, semidirect_rrb,
};

#[test]
fn oracle_reproduces_the_relative_coboundaries() {
    for (name, r) in named_rrb_packages() {
        for n in 1..=3 {
            let library = coboundary_matrix(&CochainScheme::new(&r, n));
            let independent = oracle::rrb_coboundary_oracle(&r, n);
            assert_eq!(library, independent, "package {name}, degree {n}");
        }
    }
}

#[test]
fn oracle_reproduces_the_rota_baxter_coboundaries() {
    for (name, r) in rb_packages() {
        for n in 1..=3 {
            let library = rb_coboundary_matrix(&r, n);
            let independent = oracle::rb_coboundary_oracle(&r, n);
            assert_eq!(library, independent, "package {name}, degree {n}");
        }
    }
}

#[test]
fn composite_coboundaries_vanish_on_named_packages() {
    for (name, r) in named_rrb_packages() {
        for n in 1..=3 {
            let d_n = coboundary_matrix(&CochainScheme::new(&r, n));
            let d_next = coboundary_matrix(&CochainScheme::new(&r, n + 1));
            assert!(d_next.mul(&d_n).is_zero(), "package {name}, degree {n}");
        }
    }
    for (name, r) in rb_packages() {
        for n in 1..=3 {
            let d_n = rb_coboundary_matrix(&r, n);
            let d_next = rb_coboundary_matrix(&r, n + 1);
            assert!(d_next.mul(&d_n).is_zero(), "package {name}, degree {n}");
        }
    }
}

#[test]
fn derivation_dimensions_match_the_independent_solver() {
    let structures = [
        ("trivial", rrb_core::samples::trivial_rrb()),
        ("affine", rrb_core::samples::affine_rrb()),
    ];
    for (name, a) in structures {
        assert_eq!(
            derivation_space(&a).dim(),
            oracle::rrb_derivation_dim_oracle(&a),
            "structure {name}"
        );
    }
    let rb = rrb_core::samples::affine_rb();
    assert_eq!(
        rb_derivation_space(&rb).dim(),
        oracle::rb_derivation_dim_oracle(&rb)
    );
}

#[test]
fn dual_of_the_dual_returns_the_original_package() {
    for (name, r) in named_rrb_packages() {
        assert_eq!(dual_rrb_rep(&dual_rrb_rep(&r)), r, "package {name}");
    }
}

#[test]
fn structural_outputs_satisfy_their_own_axioms() {
    for (name, r) in named_rrb_packages() {
        let dual = dual_rrb_rep(&r);
        assert!(check_rrb_representation(&dual).valid(), "dual of {name}");
        let s = semidirect_rrb(r.base(), &r).expect("matching base");
        assert!(check_jacobi(s.g()).valid(), "semidirect bracket of {name}");
        assert!(
            check_representation(s.rho()).valid(),
            "semidirect action of {name}"
        );
        assert!(check_rrb(&s).valid(), "semidirect operator of {name}");
    }
    for (name, r) in rb_packages() {
        let s = semidirect_rb(r.base(), &r).expect("matching base");
        assert!(check_jacobi(s.g()).valid(), "semidirect bracket of {name}");
        assert!(check_rb(&s).valid(), "semidirect operator of {name}");
        let lifted = rb_to_rrb(r.base()).expect("adjoint data");
        assert!(check_rrb(&lifted).valid(), "adjoint lift of {name}");
        let coeffs = rb_embedding_coefficients(&r).expect("embedding coefficients");
        assert!(
            check_rrb_representation(&coeffs).valid(),
            "embedding coefficients of {name}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_relative_structures_agree_with_the_oracle(seed in any::<u64>()) {
        let a = gen::random_rrb(&mut gen::rng(seed));
        let r = adjoint_rrb_rep(&a);
        let mut matrices = Vec::new();
        for n in 1..=3 {
            let library = coboundary_matrix(&CochainScheme::new(&r, n));
            if n <= 2 {
                prop_assert_eq!(&library, &oracle::rrb_coboundary_oracle(&r, n), "degree {}", n);
            }
            matrices.push(library);
        }
        for n in 0..2 {
            prop_assert!(matrices[n + 1].mul(&matrices[n]).is_zero(), "square at degree {}", n + 1);
        }
    }

    #[test]
    fn random_rota_baxter_structures_agree_with_the_oracle(seed in any::<u64>()) {
        let a = gen::random_rb(&mut gen::rng(seed));
        let r = adjoint_rb_rep(&a);
        let mut matrices = Vec::new();
        for n in 1..=3 {
            let library = rb_coboundary_matrix(&r, n);
            if n <= 2 {
                prop_assert_eq!(&library, &oracle::rb_coboundary_oracle(&r, n), "degree {}", n);
            }
            matrices.push(library);
        }
        for n in 0..2 {
            prop_assert!(matrices[n + 1].mul(&matrices[n]).is_zero(), "square at degree {}", n + 1);
        }
    }

    #[test]
    fn random_structural_outputs_stay_valid(seed in any::<u64>()) {
        let a = gen::random_rrb(&mut gen::rng(seed));
        let r = adjoint_rrb_rep(&a);
        let dual = dual_rrb_rep(&r);
        prop_assert!(check_rrb_representation(&dual).valid());
        prop_assert_eq!(dual_rrb_rep(&dual), r.clone());
        let s = semidirect_rrb(&a, &r).expect("matching base");
        prop_assert!(check_jacobi(s.g()).valid());
        prop_assert!(check_representation(s.rho()).valid());
        prop_assert!(check_rrb(&s).valid());

        let b = gen::random_rb(&mut gen::rng(seed ^ 0x9e37_79b9_7f4a_7c15));
        let rb = adjoint_rb_rep(&b);
        let t = semidirect_rb(&b, &rb).expect("matching base");
        prop_assert!(check_jacobi(t.g()).valid());
        prop_assert!(check_rb(&t).valid());
        prop_assert!(check_rrb(&rb_to_rrb(&b).expect("adjoint data")).valid());
    }

    #[test]
    fn cochain_dimensions_count_increasing_tuples(
        g in 1usize..4, v in 1usize..4, n in 1usize..4,
    ) {
        let lie = rrb_core::algebra_core::LieAlgebra::abelian(g);
        let rep = rrb_core::algebra_core::LinearRep::zero(lie, v);
        let t = rrb_core::exact_linalg::Matrix::zeros(g, v);
        let a = rrb_core::rrb_structures::RRBAlgebra::new(rep, t).expect("abelian data");
        let r = adjoint_rrb_rep(&a);
        let scheme = CochainScheme::new(&r, n);
        let tuples = |d: usize, k: usize| oracle::inc_tuples(d, k).len();
        prop_assert_eq!(scheme.fh_dim(), tuples(g, n) * r.h_dim());
        prop_assert_eq!(scheme.fw_dim(), tuples(g, n - 1) * v * r.w_dim());
        let expected_theta = if n >= 2 { tuples(v, n - 1) * r.h_dim() } else { 0 };
        prop_assert_eq!(scheme.theta_dim(), expected_theta);

        let rb = adjoint_rb_rep(&gen::random_rb(&mut gen::rng((g * 16 + v * 4 + n) as u64)));
        let rb_scheme = RBCochainScheme::new(&rb, n);
        let gd = rb.base().dim();
        prop_assert_eq!(rb_scheme.f_dim(), tuples(gd, n) * rb.w_dim());
        let expected_rb_theta = if n >= 2 { tuples(gd, n - 1) * rb.w_dim() } else { 0 };
        prop_assert_eq!(rb_scheme.theta_dim(), expected_rb_theta);
    }
}
