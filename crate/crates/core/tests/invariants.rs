use schur_qseries::determinant::{
    check_coefficient_recurrence, check_stabilization, schur_coefficient, schur_finite,
    schur_finite_direct,
};
use schur_qseries::identities::{gis_lhs, verify_gis};
use schur_qseries::schur_poly::{
    lambda_coeff, mu_coeff, schur, schur_d, schur_e, wronskian, SchurKind,
};
use schur_qseries::LaurentPoly;

#[test]
fn forward_recursion_both_kinds() {
    for kind in [SchurKind::D, SchurKind::E] {
        for m in 0..=60 {
            let expected = &schur(kind, m - 1).unwrap() + &schur(kind, m - 2).unwrap().shift(m);
            assert_eq!(schur(kind, m).unwrap(), expected, "{kind:?} m={m}");
        }
    }
}

#[test]
fn lambda_and_mu_times_wronskian() {
    for m in 0..=40 {
        let w = wronskian(m).unwrap();
        assert_eq!(
            &lambda_coeff(m).unwrap() * &w,
            schur_e(m - 2).unwrap().shift(m)
        );
        assert_eq!(
            &mu_coeff(m).unwrap() * &-w,
            schur_d(m - 2).unwrap().shift(m)
        );
    }
}

#[test]
fn degrees_grow_and_constant_terms_are_one() {
    for kind in [SchurKind::D, SchurKind::E] {
        let mut last_deg = 0;
        for m in 0..=60 {
            let p = schur(kind, m).unwrap();
            assert_eq!(p.min_exp(), Some(0));
            assert_eq!(p.coeff(0), &1.into());
            assert!(p.terms().all(|(_, c)| c > &0.into()));
            let deg = p.max_exp().unwrap();
            assert!(deg >= last_deg);
            last_deg = deg;
        }
    }
}

#[test]
fn successive_differences_start_at_q_m() {
    for kind in [SchurKind::D, SchurKind::E] {
        for m in 2..=60 {
            let diff = &schur(kind, m).unwrap() - &schur(kind, m - 1).unwrap();
            assert_eq!(diff.min_exp(), Some(m), "{kind:?} m={m}");
        }
    }
}

#[test]
fn direct_determinant_obeys_bottom_recursion() {
    for m in 0..=8 {
        for n in 2..=12 {
            let expected = &schur_finite_direct(n - 1, m).unwrap()
                + &schur_finite_direct(n - 2, m)
                    .unwrap()
                    .shift(i64::from(n + m));
            assert_eq!(schur_finite_direct(n, m).unwrap(), expected, "n={n} m={m}");
        }
    }
}

#[test]
fn coefficient_lowest_term() {
    for n in 0..=8u32 {
        for m in 0..=6u32 {
            let a = schur_coefficient(n, m, 120);
            let low = i64::from(n * n + m * n);
            assert_eq!(a.min_exp(), low);
            assert_eq!(a.coeff(low), Some(&1.into()));
            assert!(a.coeffs().iter().all(|c| c >= &0.into()));
        }
    }
}

#[test]
fn coefficient_recurrence_wider_orders() {
    for (n, m, order) in [(1, 0, 10), (3, 2, 30), (7, 9, 250), (12, 0, 300)] {
        assert!(check_coefficient_recurrence(n, m, order).unwrap().passed());
    }
}

#[test]
fn sum_side_is_nonnegative() {
    for m in 0..=15 {
        assert!(gis_lhs(m, 150).coeffs().iter().all(|c| c >= &0.into()));
    }
}

#[test]
fn sum_side_ties_to_finite_determinants() {
    for m in 0..=6u32 {
        let lhs = gis_lhs(m, 80);
        for n in 2..=30u32 {
            let bound = i64::from(n + m) - 1;
            let finite = schur_finite(n, m).to_series(bound);
            assert_eq!(finite.first_mismatch(&lhs.truncate(bound), bound), Ok(None));
        }
    }
}

#[test]
fn stabilization_reports() {
    assert!(check_stabilization(40, 10).passed());
    assert_eq!(check_stabilization(5, 1).label, "stabilization");
}

#[test]
fn identity_at_larger_m() {
    assert!(verify_gis(7, 150).passed());
    for m in 0..=20 {
        assert!(verify_gis(m, 200).passed(), "m={m}");
    }
}

#[test]
fn decomposition_at_m_two_spelled_out() {
    // lambda(2) = q^-1 E_0, mu(2) = -q^-1 D_0, so Schur_n = q^-1 (D_{n+2} - E_{n+2}).
    for n in 0..10 {
        let via_schur =
            (&schur_d(i64::from(n) + 2).unwrap() - &schur_e(i64::from(n) + 2).unwrap()).shift(-1);
        assert_eq!(schur_finite(n, 2), via_schur);
        assert!(via_schur.min_exp().unwrap() >= 0);
    }
    assert_eq!(schur_finite(0, 2), LaurentPoly::one());
}
