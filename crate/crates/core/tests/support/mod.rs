//! Test-only oracles that never touch the series kernel.

#![allow(dead_code)]

/// `counts[k]` = number of partitions of `k` (for `k <= max`) whose parts
/// all satisfy `allowed`, found by walking every such partition once.
pub fn partition_counts(max: usize, allowed: impl Fn(usize) -> bool) -> Vec<u64> {
    let parts: Vec<usize> = (1..=max).rev().filter(|&p| allowed(p)).collect();
    let mut counts = vec![0u64; max + 1];
    // Each stack frame: (remaining budget, index of the largest part still usable).
    let mut stack = vec![(0usize, 0usize)];
    while let Some((sum, first)) = stack.pop() {
        counts[sum] += 1;
        for (i, &p) in parts.iter().enumerate().skip(first) {
            if sum + p <= max {
                stack.push((sum + p, i));
            }
        }
    }
    counts
}

pub fn rr1_part(p: usize) -> bool {
    matches!(p % 5, 1 | 4)
}

pub fn rr2_part(p: usize) -> bool {
    matches!(p % 5, 2 | 3)
}

/// Coefficients of `sum_n q^(n^2+mn) / (q;q)_n` up to `order`, from counts
/// of partitions into parts `<= n`.
pub fn sum_side_by_counting(m: usize, order: usize) -> Vec<u64> {
    let mut out = vec![0u64; order + 1];
    let mut n = 0;
    while n * n + m * n <= order {
        let shift = n * n + m * n;
        let counts = partition_counts(order - shift, |p| p <= n);
        for (k, c) in counts.into_iter().enumerate() {
            out[shift + k] += c;
        }
        n += 1;
    }
    out
}

/// Same counts by the coin-change recurrence in `u128`, for orders where
/// walking every partition is too slow.
pub fn partition_counts_dp(max: usize, allowed: impl Fn(usize) -> bool) -> Vec<u128> {
    let mut counts = vec![0u128; max + 1];
    counts[0] = 1;
    for p in (1..=max).filter(|&p| allowed(p)) {
        for k in p..=max {
            counts[k] += counts[k - p];
        }
    }
    counts
}
