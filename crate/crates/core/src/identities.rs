//! The Rogers-Ramanujan products and the m-parametrized identity
//!
//! ```text
//! sum_n q^(n^2+mn) / (q;q)_n
//!     = (-1)^m q^(-C(m,2)) ( E_{m-2} P1 - D_{m-2} P2 )
//! ```
//!
//! with `P1 = prod 1/((1-q^(5n+1))(1-q^(5n+4)))` and
//! `P2 = prod 1/((1-q^(5n+2))(1-q^(5n+3)))`.

use rayon::prelude::*;

use crate::determinant::schur_x1_series;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::report::{CheckSuiteResult, VerificationReport};
use crate::schur_poly::{binom2, schur_d, schur_e};
use crate::series::QSeries;

/// `prod 1/(1 - q^k)` over `1 <= k <= order` with `k mod 5` in `residues`.
/// Factors with `k > order` do not touch the known coefficients.
fn euler_product(residues: [i64; 2], order: i64) -> QSeries {
    let mut acc = QSeries::one(order);
    for k in (1..=order).filter(|k| residues.contains(&(k % 5))) {
        let factor = (&LaurentPoly::one() - &LaurentPoly::monomial(1, k))
            .to_series(order)
            .inverse()
            .expect("1 - q^k has unit constant term");
        acc = &acc * &factor;
    }
    acc
}

/// Partitions into parts congruent to 1 or 4 mod 5.
pub fn rr_product_first(order: u32) -> QSeries {
    euler_product([1, 4], i64::from(order))
}

/// Partitions into parts congruent to 2 or 3 mod 5.
pub fn rr_product_second(order: u32) -> QSeries {
    euler_product([2, 3], i64::from(order))
}

/// Sum side: `sum_n q^(n^2+mn) / (q;q)_n`.
pub fn gis_lhs(m: u32, order: u32) -> QSeries {
    schur_x1_series(m, order)
}

/// Order the products need so that the assembled right side is exact to
/// `order` after the `q^(-C(m,2))` shift.
pub fn rhs_working_order(m: u32, order: u32) -> u32 {
    let m = i64::from(m);
    let deg = |p: LaurentPoly| p.max_exp().unwrap_or(0);
    let extra = deg(schur_e(m - 2).unwrap()).max(deg(schur_d(m - 2).unwrap()));
    (i64::from(order) + binom2(m) + extra) as u32
}

/// Product side, assembled with Laurent arithmetic and truncated at `order`.
pub fn gis_rhs(m: u32, order: u32) -> QSeries {
    let working = rhs_working_order(m, order);
    let first = rr_product_first(working);
    let second = rr_product_second(working);
    assemble_rhs(m, order, &first, &second)
}

/// Right side from precomputed products (each known at least to
/// [`rhs_working_order`]).
pub fn assemble_rhs(m: u32, order: u32, first: &QSeries, second: &QSeries) -> QSeries {
    let m64 = i64::from(m);
    let working = i64::from(rhs_working_order(m, order));
    let first = first.truncate(working);
    let second = second.truncate(working);
    let e = schur_e(m64 - 2).unwrap().to_series(working);
    let d = schur_d(m64 - 2).unwrap().to_series(working);
    let combo = &(&e * &first) - &(&d * &second);
    let shifted = combo.shift(-binom2(m64));
    let signed = if m64 % 2 == 0 { shifted } else { -&shifted };
    signed.truncate(i64::from(order))
}

/// Compares both sides of the identity on every exponent up to `order`.
pub fn verify_gis(m: u32, order: u32) -> VerificationReport {
    let lhs = gis_lhs(m, order);
    let rhs = gis_rhs(m, order);
    gis_report(m, order, &lhs, &rhs)
}

fn gis_report(m: u32, order: u32, lhs: &QSeries, rhs: &QSeries) -> VerificationReport {
    let order64 = i64::from(order);
    let mismatch = lhs
        .first_mismatch(rhs, order64)
        .expect("both sides are exact to the requested order")
        .map(Into::into);
    VerificationReport::new("gis", &[("m", i64::from(m)), ("order", order64)], mismatch)
}

/// [`verify_gis`] for every `m` in `m_min..=m_max`, in ascending `m`.
///
/// The two products are computed once at the largest working order and
/// shared across the range.
pub fn verify_gis_range(m_min: u32, m_max: u32, order: u32) -> CheckSuiteResult {
    let working = (m_min..=m_max)
        .map(|m| rhs_working_order(m, order))
        .max()
        .unwrap_or(order);
    let (first, second) = rayon::join(|| rr_product_first(working), || rr_product_second(working));
    let reports = (m_min..=m_max)
        .into_par_iter()
        .map(|m| {
            let lhs = gis_lhs(m, order);
            let rhs = assemble_rhs(m, order, &first, &second);
            gis_report(m, order, &lhs, &rhs)
        })
        .collect();
    CheckSuiteResult::from_reports(reports)
}

/// Checks that `D_M` and `E_M` agree with the first and second products on
/// all exponents up to `M - 1`.
pub fn verify_schur_limits(big_m: u32) -> Result<CheckSuiteResult> {
    if big_m < 2 {
        return Err(Error::IndexOutOfRange {
            index: i64::from(big_m),
            min: 2,
        });
    }
    let bound = big_m - 1;
    let bound64 = i64::from(bound);
    let m64 = i64::from(big_m);
    let checks = [
        ("schur-limit-D", schur_d(m64)?, rr_product_first(bound)),
        ("schur-limit-E", schur_e(m64)?, rr_product_second(bound)),
    ];
    let reports = checks
        .into_iter()
        .map(|(label, poly, product)| {
            let mismatch = poly
                .to_series(bound64)
                .first_mismatch(&product, bound64)?
                .map(Into::into);
            Ok(VerificationReport::new(
                label,
                &[("M", m64), ("order", bound64)],
                mismatch,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckSuiteResult::from_reports(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: i64) -> QSeries {
        LaurentPoly::from_i64s(0, c).to_series(order)
    }

    #[test]
    fn products_low_order() {
        assert_eq!(rr_product_first(0), QSeries::one(0));
        assert_eq!(rr_product_first(4), s(&[1, 1, 1, 1, 2], 4));
        assert_eq!(rr_product_first(7), s(&[1, 1, 1, 1, 2, 2, 3, 3], 7));
        assert_eq!(rr_product_second(0), QSeries::one(0));
        assert_eq!(rr_product_second(1), QSeries::one(1));
        assert_eq!(rr_product_second(6), s(&[1, 0, 1, 1, 1, 1, 2], 6));
    }

    #[test]
    fn sum_side_low_order() {
        assert_eq!(gis_lhs(0, 4), rr_product_first(4));
        assert_eq!(gis_lhs(1, 5), s(&[1, 0, 1, 1, 1, 1], 5));
        assert_eq!(gis_lhs(1, 5), rr_product_second(5));
        assert_eq!(gis_lhs(9, 0), QSeries::one(0));
    }

    #[test]
    fn product_side_low_order() {
        assert_eq!(gis_rhs(0, 4), rr_product_first(4));
        assert_eq!(gis_rhs(1, 5), rr_product_second(5));

        // m = 2: q^-1 (E_0 P1 - D_0 P2), assembled by hand.
        let working = 10;
        let diff = &rr_product_first(working) - &rr_product_second(working);
        let by_hand = diff.shift(-1).truncate(6);
        assert_eq!(gis_rhs(2, 6), by_hand);
        assert_eq!(gis_rhs(2, 6), gis_lhs(2, 6));
        assert_eq!(gis_rhs(2, 6).order(), 6);
    }

    #[test]
    fn verify_small_range() {
        assert!(verify_gis(0, 100).passed());
        assert!(verify_gis(1, 100).passed());
        let suite = verify_gis_range(0, 6, 60);
        assert!(suite.all_passed);
        assert_eq!(suite.reports.len(), 7);
        for (m, r) in suite.reports.iter().enumerate() {
            assert_eq!(r.params["m"], m as i64);
        }
    }

    #[test]
    fn limits() {
        let two = verify_schur_limits(2).unwrap();
        assert!(two.all_passed);
        assert_eq!(two.reports[0].params["order"], 1);
        assert!(verify_schur_limits(30).unwrap().all_passed);
        assert!(verify_schur_limits(1).is_err());
    }
}
