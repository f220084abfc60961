mod support;

use num_bigint::BigInt;
use schur_qseries::determinant::{schur_coefficient, schur_finite, schur_finite_direct};
use schur_qseries::identities::{gis_lhs, rr_product_first, rr_product_second};
use schur_qseries::QSeries;

use support::{partition_counts, rr1_part, rr2_part, sum_side_by_counting};

fn as_u64(s: &QSeries) -> Vec<u64> {
    s.coeffs_from(0)
        .iter()
        .map(|c| u64::try_from(c).unwrap())
        .collect()
}

#[test]
fn enumerator_sanity() {
    // p(0..=10) for unrestricted partitions.
    assert_eq!(
        partition_counts(10, |_| true),
        vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    );
    assert_eq!(partition_counts(7, rr1_part), vec![1, 1, 1, 1, 2, 2, 3, 3]);
    assert_eq!(partition_counts(6, rr2_part), vec![1, 0, 1, 1, 1, 1, 2]);
}

#[test]
fn products_match_partition_counts() {
    assert_eq!(
        as_u64(&rr_product_first(60)),
        partition_counts(60, rr1_part)
    );
    assert_eq!(
        as_u64(&rr_product_second(60)),
        partition_counts(60, rr2_part)
    );
}

#[test]
fn coefficients_match_bounded_partitions() {
    for n in 0..6u32 {
        for m in 0..4u32 {
            let order = 40u32;
            let shift = (n * n + m * n) as usize;
            let mut expected = vec![0u64; order as usize + 1];
            if shift <= order as usize {
                let counts = partition_counts(order as usize - shift, |p| p <= n as usize);
                expected[shift..].copy_from_slice(&counts);
            }
            assert_eq!(
                as_u64(&schur_coefficient(n, m, order)),
                expected,
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn sum_side_matches_counting() {
    for m in 0..8 {
        assert_eq!(
            as_u64(&gis_lhs(m as u32, 50)),
            sum_side_by_counting(m, 50),
            "m={m}"
        );
    }
}

#[test]
fn recursion_matches_cofactor_expansion_at_the_bound() {
    for m in [0u32, 3] {
        assert_eq!(schur_finite(14, m), schur_finite_direct(14, m).unwrap());
    }
}

#[test]
fn coefficients_stay_exact_past_64_bits() {
    let order = 1500u32;
    let first = rr_product_first(order);
    let expected = support::partition_counts_dp(order as usize, rr1_part);
    let top = first.coeff(i64::from(order)).unwrap();
    assert!(top > &BigInt::from(u64::MAX));
    let got: Vec<u128> = first
        .coeffs_from(0)
        .iter()
        .map(|c| c.try_into().unwrap())
        .collect();
    assert_eq!(got, expected);
}
