//! Sums of ordered products over arrangements of a multiset of factors.

use alloc::vec::Vec;

use crate::txyz::TxyzPoly;

/// Sums `f_{s_1} · f_{s_2} ⋯ f_{s_m}` over every distinct sequence `s`
/// that uses factor `i` exactly `counts[i]` times. Returns the sum and the
/// number of sequences.
///
/// Enumeration is depth-first in factor-index order, sharing prefix
/// products, so the summation order is a function of the input order only.
pub(crate) fn ordered_product_sum(factors: &[TxyzPoly], counts: &[usize]) -> (TxyzPoly, u64) {
    debug_assert_eq!(factors.len(), counts.len());
    let mut remaining: Vec<usize> = counts.to_vec();
    let total: usize = counts.iter().sum();
    let mut sum = TxyzPoly::zero();
    let mut n = 0;
    let prefix = TxyzPoly::constant(crate::quat::Quaternion::ONE);
    walk(factors, &mut remaining, total, &prefix, &mut sum, &mut n);
    (sum, n)
}

fn walk(
    factors: &[TxyzPoly],
    remaining: &mut [usize],
    left: usize,
    prefix: &TxyzPoly,
    sum: &mut TxyzPoly,
    n: &mut u64,
) {
    if left == 0 {
        *sum = &*sum + prefix;
        *n += 1;
        return;
    }
    for i in 0..factors.len() {
        if remaining[i] == 0 {
            continue;
        }
        remaining[i] -= 1;
        let next = prefix * &factors[i];
        walk(factors, remaining, left - 1, &next, sum, n);
        remaining[i] += 1;
    }
}
