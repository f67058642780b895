//! Bases of the regular homogeneous polynomials `Reg_n(H)`.
//!
//! Two constructions are provided, both of dimension `(n+1)(n+2)/2`:
//!
//! * the divided-power basis `P^n_{kℓ} − j P^n_{k−1,ℓ}`, `0 ≤ k ≤ ℓ ≤ n`, in
//!   the complex variables `v = t + ix`, `w = y − iz` (so `q = v + jw`);
//! * symmetrized products of the linear regular polynomials
//!   `it − x`, `jt − y`, `kt − z`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::ordered_product_sum;
use crate::quat::Quaternion as Q;
use crate::txyz::TxyzPoly;

/// Largest degree accepted by the basis generators.
pub const MAX_BASIS_DEGREE: usize = 6;

/// Index convention for the divided-power basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SudberyIndexing {
    /// `w` carries the exponent `ℓ − r` and `w̄` carries `k − r`. Every
    /// element is regular.
    #[default]
    Corrected,
    /// The commonly printed form with the roles of `k` and `ℓ` swapped on
    /// `w`, `w̄`. Already for `n = 1` it yields `w̄`, which is not regular.
    AsPrinted,
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_BASIS_DEGREE {
        return Err(Error::DegreeBoundExceeded { requested: n, max: MAX_BASIS_DEGREE });
    }
    Ok(())
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|k| k as f64).product()
}

/// `p^m / m!`, zero for negative `m`.
fn divided_power(p: &TxyzPoly, m: i64) -> TxyzPoly {
    if m < 0 {
        return TxyzPoly::zero();
    }
    let mut acc = TxyzPoly::constant(Q::ONE);
    for _ in 0..m {
        acc = &acc * p;
    }
    acc.scale(1.0 / factorial(m as usize))
}

fn lin(t: Q, x: Q, y: Q, z: Q) -> TxyzPoly {
    TxyzPoly::from_terms([([1, 0, 0, 0], t), ([0, 1, 0, 0], x), ([0, 0, 1, 0], y), ([0, 0, 0, 1], z)])
}

struct ComplexVars {
    v: TxyzPoly,
    v_bar: TxyzPoly,
    w: TxyzPoly,
    w_bar: TxyzPoly,
}

impl ComplexVars {
    fn new() -> Self {
        Self {
            v: lin(Q::ONE, Q::I, Q::ZERO, Q::ZERO),
            v_bar: lin(Q::ONE, -Q::I, Q::ZERO, Q::ZERO),
            w: lin(Q::ZERO, Q::ZERO, Q::ONE, -Q::I),
            w_bar: lin(Q::ZERO, Q::ZERO, Q::ONE, Q::I),
        }
    }

    /// `P^n_{kℓ} = Σ_r (−1)^r v^{[n−k−ℓ+r]} v̄^{[r]} w^{[·]} w̄^{[·]}`.
    fn p(&self, n: i64, k: i64, l: i64, indexing: SudberyIndexing) -> TxyzPoly {
        let mut out = TxyzPoly::zero();
        if k < 0 || l < 0 {
            return out;
        }
        for r in 0..=k.min(l) {
            let (ew, ew_bar) = match indexing {
                SudberyIndexing::Corrected => (l - r, k - r),
                SudberyIndexing::AsPrinted => (k - r, l - r),
            };
            let term = &(&(&divided_power(&self.v, n - k - l + r)
                * &divided_power(&self.v_bar, r))
                * &divided_power(&self.w, ew))
                * &divided_power(&self.w_bar, ew_bar);
            out = if r % 2 == 0 { &out + &term } else { &out - &term };
        }
        out
    }
}

/// Divided-power basis of `Reg_n(H)` in the corrected indexing, ordered by
/// `ℓ` then `k`.
pub fn sudbery_basis(n: usize) -> Result<Vec<TxyzPoly>> {
    sudbery_basis_with(n, SudberyIndexing::Corrected)
}

pub fn sudbery_basis_with(n: usize, indexing: SudberyIndexing) -> Result<Vec<TxyzPoly>> {
    check_degree(n)?;
    let vars = ComplexVars::new();
    let n = n as i64;
    let mut out = Vec::new();
    for l in 0..=n {
        for k in 0..=l {
            let head = vars.p(n, k, l, indexing);
            let tail = vars.p(n, k - 1, l, indexing).mul_left(Q::J);
            out.push(&head - &tail);
        }
    }
    Ok(out)
}

/// Compositions `n_1 + n_2 + n_3 = n`, in the order used by
/// [`symmetrized_regular_basis`].
pub fn compositions3(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for b in (0..=n - a).rev() {
            out.push([a, b, n - a - b]);
        }
    }
    out
}

/// For each composition `(n_1, n_2, n_3)` of `n`, the average over all
/// distinct orderings of the product with `n_1` factors `it − x`, `n_2`
/// factors `jt − y` and `n_3` factors `kt − z`.
pub fn symmetrized_regular_basis(n: usize) -> Result<Vec<TxyzPoly>> {
    check_degree(n)?;
    let factors = [
        lin(Q::I, -Q::ONE, Q::ZERO, Q::ZERO),
        lin(Q::J, Q::ZERO, -Q::ONE, Q::ZERO),
        lin(Q::K, Q::ZERO, Q::ZERO, -Q::ONE),
    ];
    Ok(compositions3(n)
        .into_iter()
        .map(|c| {
            let (sum, count) = ordered_product_sum(&factors, &c);
            sum.scale(1.0 / count as f64)
        })
        .collect())
}
