//! The Schur determinant: tridiagonal with unit diagonal, `-1` below it and
//! `q^(k+m)` above it in row `k` (1-based).
//!
//! `Schur_n` is the `(n+1) x (n+1)` truncation. Expanding along the last row
//! gives `Schur_n = Schur_{n-1} + q^(n+m) Schur_{n-2}`, while the infinite
//! determinant at `x = 1` equals `sum_n a_n` with
//! `a_n = q^(n^2+mn) / ((1-q)(1-q^2)...(1-q^n))`.

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::report::VerificationReport;
use crate::schur_poly::{lambda_coeff, mu_coeff, schur_d, schur_e};
use crate::series::QSeries;

/// Largest `n` accepted by [`schur_finite_direct`].
pub const DIRECT_MAX_N: u32 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSchurParams {
    pub n: u32,
    pub m: u32,
}

impl FiniteSchurParams {
    pub fn matrix_size(&self) -> usize {
        self.n as usize + 1
    }

    /// The explicit matrix, row-major.
    pub fn matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let size = self.matrix_size();
        let mut rows = vec![vec![LaurentPoly::zero(); size]; size];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = LaurentPoly::one();
            if k > 0 {
                row[k - 1] = LaurentPoly::monomial(-1, 0);
            }
            if k + 1 < size {
                row[k + 1] = LaurentPoly::monomial(1, (k + 1) as i64 + i64::from(self.m));
            }
        }
        rows
    }
}

/// `Schur_n` from the bottom recursion with `Schur_0 = 1`,
/// `Schur_1 = 1 + q^(1+m)`.
pub fn schur_finite(n: u32, m: u32) -> LaurentPoly {
    let m = i64::from(m);
    // Schur_{-1} = 1 makes the recursion produce Schur_1 from Schur_0.
    let mut prev = LaurentPoly::one();
    let mut cur = LaurentPoly::one();
    for k in 1..=i64::from(n) {
        let next = &cur + &prev.shift(k + m);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Schur_n` by Laplace expansion of the explicit matrix. Independent of the
/// recursion; used as an oracle.
pub fn schur_finite_direct(n: u32, m: u32) -> Result<LaurentPoly> {
    if n > DIRECT_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: DIRECT_MAX_N,
        });
    }
    let matrix = FiniteSchurParams { n, m }.matrix();
    let all_columns = (1u32 << matrix.len()) - 1;
    Ok(cofactor_expand(&matrix, 0, all_columns))
}

// Expands along `row` over the columns still set in `columns`.
fn cofactor_expand(matrix: &[Vec<LaurentPoly>], row: usize, columns: u32) -> LaurentPoly {
    if row == matrix.len() {
        return LaurentPoly::one();
    }
    let mut total = LaurentPoly::zero();
    let mut position = 0;
    for col in 0..matrix.len() {
        if columns & (1 << col) == 0 {
            continue;
        }
        let entry = &matrix[row][col];
        if !entry.is_zero() {
            let minor = cofactor_expand(matrix, row + 1, columns & !(1 << col));
            let term = entry * &minor;
            total = if position % 2 == 0 {
                &total + &term
            } else {
                &total - &term
            };
        }
        position += 1;
    }
    total
}

/// `a_n = q^(n^2+mn) / ((1-q)...(1-q^n))` truncated at `order`.
pub fn schur_coefficient(n: u32, m: u32, order: u32) -> QSeries {
    let order = i64::from(order);
    let (n64, m64) = (i64::from(n), i64::from(m));
    let mut acc = LaurentPoly::monomial(1, n64 * n64 + m64 * n64).to_series(order);
    for j in 1..=n64 {
        if acc.is_zero() {
            break;
        }
        let factor = (&LaurentPoly::one() - &LaurentPoly::monomial(1, j))
            .to_series(order)
            .inverse()
            .expect("1 - q^j has unit constant term");
        acc = &acc * &factor;
    }
    acc
}

/// Checks `(1 - q^n) a_n = q^(2n-1+m) a_{n-1}` up to `order`.
pub fn check_coefficient_recurrence(n: u32, m: u32, order: u32) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, min: 1 });
    }
    let current = schur_coefficient(n, m, order);
    let previous = schur_coefficient(n - 1, m, order);
    Ok(check_coefficient_recurrence_with(
        n, m, &current, &previous, order,
    ))
}

/// The recurrence check on caller-supplied `a_n` and `a_{n-1}`.
pub fn check_coefficient_recurrence_with(
    n: u32,
    m: u32,
    current: &QSeries,
    previous: &QSeries,
    order: u32,
) -> VerificationReport {
    let order_i = i64::from(order);
    let (n64, m64) = (i64::from(n), i64::from(m));
    let one_minus = (&LaurentPoly::one() - &LaurentPoly::monomial(1, n64)).to_series(order_i);
    let lhs = &one_minus * current;
    let rhs = previous.shift(2 * n64 - 1 + m64);
    let params = [("n", n64), ("m", m64), ("order", order_i)];
    let mismatch = match lhs.first_mismatch(&rhs, order_i) {
        Ok(found) => found.map(Into::into),
        // A too-short input cannot satisfy the check at the requested order.
        Err(_) => Some(unknown_mismatch(&lhs, &rhs)),
    };
    VerificationReport::new("coefficient-recurrence", &params, mismatch)
}

fn unknown_mismatch(lhs: &QSeries, rhs: &QSeries) -> crate::report::MismatchDetail {
    let e = lhs.order().min(rhs.order()) + 1;
    crate::report::MismatchDetail {
        exponent: e,
        lhs: lhs.coeff(e).cloned().unwrap_or_default(),
        rhs: rhs.coeff(e).cloned().unwrap_or_default(),
    }
}

/// `sum_n a_n` truncated at `order`, i.e. the infinite determinant at `x = 1`.
pub fn schur_x1_series(m: u32, order: u32) -> QSeries {
    let (m64, order64) = (i64::from(m), i64::from(order));
    let mut total = QSeries::zero(order64);
    for n in 0u32.. {
        let n64 = i64::from(n);
        if n64 * n64 + m64 * n64 > order64 {
            break;
        }
        total = &total + &schur_coefficient(n, m, order);
    }
    total
}

/// Checks `Schur_n = lambda(m) D_{n+m} + mu(m) E_{n+m}` exactly.
pub fn decompose(n: u32, m: u32) -> VerificationReport {
    let lhs = schur_finite(n, m);
    let idx = i64::from(n) + i64::from(m);
    let m64 = i64::from(m);
    let rhs = &(&lambda_coeff(m64).unwrap() * &schur_d(idx).unwrap())
        + &(&mu_coeff(m64).unwrap() * &schur_e(idx).unwrap());
    let mismatch = lhs
        .first_difference(&rhs)
        .map(|(exponent, lhs, rhs)| crate::report::MismatchDetail { exponent, lhs, rhs });
    VerificationReport::new("decompose", &[("n", i64::from(n)), ("m", m64)], mismatch)
}

/// Checks that `Schur_n` agrees with [`schur_x1_series`] on every exponent
/// up to `n + m - 1`.
pub fn check_stabilization(n: u32, m: u32) -> VerificationReport {
    let bound = i64::from(n) + i64::from(m) - 1;
    let params = [("n", i64::from(n)), ("m", i64::from(m))];
    if bound < 0 {
        return VerificationReport::new("stabilization", &params, None);
    }
    let finite = schur_finite(n, m).to_series(bound);
    let limit = schur_x1_series(m, bound as u32);
    let mismatch = finite
        .first_mismatch(&limit, bound)
        .expect("both sides known to the bound")
        .map(Into::into);
    VerificationReport::new("stabilization", &params, mismatch)
}
