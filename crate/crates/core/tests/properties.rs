use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use schur_qseries::{LaurentPoly, QSeries};

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=10, -9i64..=9), 0..=8).prop_map(|terms| {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            &acc + &LaurentPoly::monomial(c, e)
        })
    })
}

fn is_normalized(p: &LaurentPoly) -> bool {
    let (min_exp, coeffs) = p.as_parts();
    match (coeffs.first(), coeffs.last()) {
        (Some(a), Some(b)) => !a.is_zero() && !b.is_zero(),
        _ => min_exp == 0,
    }
}

/// A series whose lowest coefficient is a unit.
fn unit_series() -> impl Strategy<Value = QSeries> {
    (
        -4i64..=4,
        prop::bool::ANY,
        prop::collection::vec(-9i64..=9, 0..12),
        0i64..=15,
    )
        .prop_map(|(min_exp, negative, tail, extra)| {
            let mut coeffs = vec![BigInt::from(if negative { -1 } else { 1 })];
            coeffs.extend(tail.into_iter().map(BigInt::from));
            QSeries::new(min_exp, coeffs, min_exp + extra)
        })
}

proptest! {
    #[test]
    fn addition_commutes(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn addition_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn results_are_normalized(a in small_poly(), b in small_poly()) {
        prop_assert!(is_normalized(&(&a + &b)));
        prop_assert!(is_normalized(&(&a - &b)));
        prop_assert!(is_normalized(&(&a * &b)));
        if let (Some(x), Some(y)) = (a.min_exp(), b.min_exp()) {
            prop_assert_eq!((&a * &b).min_exp(), Some(x + y));
        }
    }

    #[test]
    fn inverse_is_two_sided_up_to_order(a in unit_series()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(inv.min_exp(), -a.min_exp());
        prop_assert_eq!(inv.order(), a.order() - 2 * a.min_exp());
        let prod = &a * &inv;
        prop_assert_eq!(prod.order(), a.order() - a.min_exp());
        prop_assert_eq!(prod, QSeries::one(a.order() - a.min_exp()));
    }

    #[test]
    fn truncated_product_is_exact_to_rule_order(
        p in small_poly(),
        r in small_poly(),
        order_p in -5i64..=14,
        order_r in -5i64..=14,
    ) {
        let (sp, sr) = (p.to_series(order_p), r.to_series(order_r));
        let prod = &sp * &sr;
        let expected_order = (sp.order() + sr.min_exp()).min(sr.order() + sp.min_exp());
        prop_assert_eq!(prod.order(), expected_order);
        prop_assert_eq!(prod, (&p * &r).to_series(expected_order));
    }

    #[test]
    fn series_addition_matches_polys(p in small_poly(), r in small_poly(), o in -5i64..=14) {
        prop_assert_eq!(&p.to_series(o) + &r.to_series(o + 2), (&p + &r).to_series(o));
    }
}

#[test]
fn one_is_identity() {
    let a = LaurentPoly::from_i64s(-3, &[2, 0, -7, 1]);
    assert_eq!(&a * &LaurentPoly::one(), a);
    assert_eq!(LaurentPoly::one().coeff(0), &BigInt::one());
}
