//! Coefficient kernels shared by polynomials and series.
//!
//! Each kernel first tries a fixed-width path (`i64` inputs, checked `i128`
//! accumulation) and redoes the work with big integers as soon as any
//! operation would overflow.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::Coefficient;

fn to_small(v: &[Coefficient]) -> Option<Vec<i64>> {
    v.iter().map(|c| i64::try_from(c).ok()).collect()
}

fn nonzero<T: PartialEq + Default>(v: &[T]) -> Vec<(usize, &T)> {
    let zero = T::default();
    v.iter().enumerate().filter(|(_, c)| **c != zero).collect()
}

/// `out[k] = sum_{i+j=k} a[i] b[j]` for `k < len`.
pub(crate) fn convolve(a: &[Coefficient], b: &[Coefficient], len: usize) -> Vec<Coefficient> {
    if let (Some(sa), Some(sb)) = (to_small(a), to_small(b)) {
        if let Some(out) = convolve_small(&sa, &sb, len) {
            return out.into_iter().map(BigInt::from).collect();
        }
    }
    let mut out = vec![BigInt::zero(); len];
    let right = nonzero(b);
    for (i, x) in nonzero(a) {
        if i >= len {
            break;
        }
        for &(j, y) in right.iter().take_while(|(j, _)| i + j < len) {
            out[i + j] += x * y;
        }
    }
    out
}

fn convolve_small(a: &[i64], b: &[i64], len: usize) -> Option<Vec<i128>> {
    let mut out = vec![0i128; len];
    let right = nonzero(b);
    for (i, &x) in nonzero(a) {
        if i >= len {
            break;
        }
        for &(j, &y) in right.iter().take_while(|(j, _)| i + j < len) {
            let slot = &mut out[i + j];
            *slot = slot.checked_add(i128::from(x) * i128::from(y))?;
        }
    }
    Some(out)
}

/// First `a.len()` coefficients of `1 / a`, where `a[0]` is `+1` or `-1`.
pub(crate) fn invert_unit(a: &[Coefficient]) -> Vec<Coefficient> {
    if let Some(small) = to_small(a) {
        if let Some(out) = invert_small(&small) {
            return out.into_iter().map(BigInt::from).collect();
        }
    }
    let unit = a[0].clone();
    let tail: Vec<(usize, &Coefficient)> = nonzero(a).into_iter().skip(1).collect();
    let mut out: Vec<Coefficient> = Vec::with_capacity(a.len());
    out.push(unit.clone());
    for k in 1..a.len() {
        let mut acc = BigInt::zero();
        for &(j, c) in tail.iter().take_while(|(j, _)| *j <= k) {
            let prev = &out[k - j];
            if !prev.is_zero() {
                acc += c * prev;
            }
        }
        // b_k = -(1/u_0) sum_{j >= 1} u_j b_{k-j}, and 1/u_0 = u_0.
        out.push(-(acc * &unit));
    }
    out
}

fn invert_small(a: &[i64]) -> Option<Vec<i128>> {
    let unit = i128::from(a[0]);
    let tail: Vec<(usize, i128)> = nonzero(a)
        .into_iter()
        .skip(1)
        .map(|(j, &c)| (j, i128::from(c)))
        .collect();
    let mut out = Vec::with_capacity(a.len());
    out.push(unit);
    for k in 1..a.len() {
        let mut acc = 0i128;
        for &(j, c) in tail.iter().take_while(|(j, _)| *j <= k) {
            acc = acc.checked_add(c.checked_mul(out[k - j])?)?;
        }
        out.push(acc.checked_mul(-unit)?);
    }
    Some(out)
}
