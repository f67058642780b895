//! Order-independent Lagrange interpolation for functions `H → H`.
//!
//! The classical product formula for `ℓ_j` depends on the order of its
//! quaternion factors. Both constructions here average over all orderings,
//! so the basis depends only on the set of nodes, varies continuously with
//! them and commutes with translation.
//!
//! Nodes are put into a canonical (lexicographic) order before any
//! enumeration, which makes the output bit-for-bit independent of the order
//! the caller lists them in.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hz::NewtonUpdate;
use crate::linalg::{gauss_solve, QuatMatrix};
use crate::perm::ordered_product_sum;
use crate::points::PointSet;
use crate::quat::{Quaternion, Tolerance};
use crate::txyz::TxyzPoly;

/// Largest number of factors in an enumerated product (so at most
/// `MAX_SYM_DEGREE! ` orderings are summed).
pub const MAX_SYM_DEGREE: usize = 6;

/// How `ℓ_j` is built from the other nodes `y_1, …, y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LagrangeChoice {
    /// `ℓ_j(x) = p(x)·p(x_j)⁻¹` with `p` the symmetrized annihilator of
    /// the other nodes. Fails when `p(x_j) = 0`.
    QuotientNormalized,
    /// `ℓ_j(x) = (1/n!) Σ_σ Π_m (x − y_{σm})(x_j − y_{σm})⁻¹`, the product
    /// taken in ascending `m`. Always defined.
    SymmetrizedFactors,
}

impl LagrangeChoice {
    /// Numeric tag: 1 for quotient-normalized, 2 for symmetrized factors.
    pub fn number(self) -> u8 {
        match self {
            LagrangeChoice::QuotientNormalized => 1,
            LagrangeChoice::SymmetrizedFactors => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(LagrangeChoice::QuotientNormalized),
            2 => Some(LagrangeChoice::SymmetrizedFactors),
            _ => None,
        }
    }
}

fn check_count(n: usize) -> Result<()> {
    if n > MAX_SYM_DEGREE {
        return Err(Error::DegreeBoundExceeded { requested: n, max: MAX_SYM_DEGREE });
    }
    Ok(())
}

fn canonical(points: &[Quaternion]) -> Vec<Quaternion> {
    let mut v = points.to_vec();
    v.sort_by(Quaternion::total_cmp);
    v
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn average_over_orderings(factors: &[TxyzPoly]) -> TxyzPoly {
    let ones = alloc::vec![1; factors.len()];
    let (sum, count) = ordered_product_sum(factors, &ones);
    debug_assert_eq!(count as f64, factorial(factors.len()));
    sum.scale(1.0 / count as f64)
}

/// `p(x) = (1/n!) Σ_{σ ∈ S_n} (x − x_{σ1}) ⋯ (x − x_{σn})`.
///
/// Vanishes at every listed node and does not depend on their order. It may
/// have further zeros: for `{i, j}` it also vanishes at `0`.
pub fn sym_annihilator(points: &[Quaternion]) -> Result<TxyzPoly> {
    check_count(points.len())?;
    let factors: Vec<TxyzPoly> = canonical(points).into_iter().map(TxyzPoly::linear).collect();
    Ok(average_over_orderings(&factors))
}

/// Lagrange polynomials `ℓ_0, …, ℓ_n` for a node set.
#[derive(Clone, Debug, PartialEq)]
pub struct LagrangeBasis {
    points: Vec<Quaternion>,
    choice: LagrangeChoice,
    polys: Vec<TxyzPoly>,
}

impl LagrangeBasis {
    /// Factor order used by [`LagrangeChoice::SymmetrizedFactors`].
    pub const FACTOR_ORDER: &'static str = "ascending";

    pub fn points(&self) -> &[Quaternion] {
        &self.points
    }

    pub fn choice(&self) -> LagrangeChoice {
        self.choice
    }

    pub fn polys(&self) -> &[TxyzPoly] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<TxyzPoly> {
        self.polys
    }

    /// `L_Θ f = Σ_j ℓ_j f(x_j)`, summed in canonical node order.
    pub fn interpolate(&self, values: &[Quaternion]) -> Result<TxyzPoly> {
        if values.len() != self.points.len() {
            return Err(Error::DimensionMismatch { expected: self.points.len(), found: values.len() });
        }
        Ok(self
            .canonical_indices()
            .into_iter()
            .fold(TxyzPoly::zero(), |acc, j| &acc + &self.polys[j].mul_right(values[j])))
    }

    /// `max_{j,k} |ℓ_j(x_k) − δ_jk|`.
    pub fn delta_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (j, l) in self.polys.iter().enumerate() {
            for (k, &x) in self.points.iter().enumerate() {
                let target = if j == k { Quaternion::ONE } else { Quaternion::ZERO };
                worst = worst.max(l.eval(x).dist(target));
            }
        }
        worst
    }

    /// Largest coefficient of `Σ_j Re(ℓ_j) − 1`. Zero means the real parts
    /// form a partition of unity.
    pub fn unity_defect(&self) -> f64 {
        let sum = self
            .canonical_indices()
            .into_iter()
            .fold(TxyzPoly::zero(), |acc, j| &acc + &self.polys[j].real_part());
        (&sum - &TxyzPoly::constant(Quaternion::ONE)).max_coeff_norm()
    }

    fn canonical_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].total_cmp(&self.points[b]));
        idx
    }
}

/// Builds `ℓ_0, …, ℓ_n` with `ℓ_j(x_k) = δ_jk` for the given choice.
///
/// [`LagrangeChoice::QuotientNormalized`] reports
/// [`Error::DegenerateConfiguration`] with the offending value of `p(x_j)`
/// instead of falling back to the other choice.
pub fn lagrange_basis(pts: &PointSet, choice: LagrangeChoice) -> Result<LagrangeBasis> {
    let nodes = pts.points();
    if nodes.is_empty() {
        return Ok(LagrangeBasis { points: Vec::new(), choice, polys: Vec::new() });
    }
    check_count(nodes.len() - 1)?;
    let tol = pts.tol();
    let mut polys = Vec::with_capacity(nodes.len());
    for (j, &xj) in nodes.iter().enumerate() {
        let others: Vec<Quaternion> = canonical(
            &nodes.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &y)| y).collect::<Vec<_>>(),
        );
        let l = match choice {
            LagrangeChoice::QuotientNormalized => {
                let p = sym_annihilator(&others)?;
                let c = p.eval(xj);
                let scale: f64 = others.iter().map(|&y| xj.dist(y)).product();
                if c.norm() <= tol.eps() * scale {
                    return Err(Error::DegenerateConfiguration { index: j, witness: c });
                }
                p.mul_right(c.inv()?)
            }
            LagrangeChoice::SymmetrizedFactors => {
                let factors = others
                    .iter()
                    .map(|&y| Ok(TxyzPoly::linear(y).mul_right((xj - y).inv()?)))
                    .collect::<Result<Vec<_>>>()?;
                average_over_orderings(&factors)
            }
        };
        polys.push(l);
    }
    Ok(LagrangeBasis { points: nodes.to_vec(), choice, polys })
}

/// The interpolant `L_Θ f` for data `values` at the nodes.
pub fn interpolate_sym(
    pts: &PointSet,
    values: &[Quaternion],
    choice: LagrangeChoice,
) -> Result<TxyzPoly> {
    if values.len() != pts.len() {
        return Err(Error::DimensionMismatch { expected: pts.len(), found: values.len() });
    }
    lagrange_basis(pts, choice)?.interpolate(values)
}

/// Real-valued interpolation `Σ_j Re(ℓ_j) f(x_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealInterpolant {
    pub poly: TxyzPoly,
    /// See [`LagrangeBasis::unity_defect`]; reported, never enforced.
    pub unity_defect: f64,
}

pub fn real_interpolate(
    pts: &PointSet,
    values: &[f64],
    choice: LagrangeChoice,
) -> Result<RealInterpolant> {
    let basis = lagrange_basis(pts, choice)?;
    if values.len() != pts.len() {
        return Err(Error::DimensionMismatch { expected: pts.len(), found: values.len() });
    }
    let poly = basis
        .canonical_indices()
        .into_iter()
        .fold(TxyzPoly::zero(), |acc, j| &acc + &basis.polys[j].real_part().scale(values[j]));
    Ok(RealInterpolant { poly, unity_defect: basis.unity_defect() })
}

/// Which polynomial `p_n` (with `p_n(x_k) = δ_kn`) carries a Newton step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonBasis {
    /// Symmetrized annihilator of the previous nodes, normalized on the
    /// right by its value at the new node.
    Annihilator,
    /// The new node's Lagrange polynomial for the extended node set.
    Lagrange(LagrangeChoice),
}

/// Extends `prev` (interpolating on `prev_pts`) to `new_pt`:
/// `L_n f = L_{n−1} f + p_n · d` with divided difference
/// `d = new_val − prev(new_pt)`.
pub fn newton_step_sym(
    prev: &TxyzPoly,
    prev_pts: &PointSet,
    new_pt: Quaternion,
    new_val: Quaternion,
    basis: NewtonBasis,
) -> Result<NewtonUpdate<TxyzPoly>> {
    let all = prev_pts.with_point(new_pt)?;
    let p_n = match basis {
        NewtonBasis::Annihilator => {
            let p = sym_annihilator(prev_pts.points())?;
            let c = p.eval(new_pt);
            let scale: f64 = prev_pts.points().iter().map(|&y| new_pt.dist(y)).product();
            if c.norm() <= prev_pts.tol().eps() * scale {
                return Err(Error::DegenerateConfiguration { index: prev_pts.len(), witness: c });
            }
            p.mul_right(c.inv()?)
        }
        NewtonBasis::Lagrange(choice) => {
            lagrange_basis(&all, choice)?.into_polys().pop().expect("nonempty node set")
        }
    };
    let d = new_val - prev.eval(new_pt);
    Ok(NewtonUpdate { poly: prev + &p_n.mul_right(d), divided_difference: d })
}

/// `1, q, iq, jq, kq`, a basis of the linear polynomials.
fn linear_basis() -> [TxyzPoly; 5] {
    let q = TxyzPoly::variable();
    [
        TxyzPoly::constant(Quaternion::ONE),
        q.clone(),
        q.mul_left(Quaternion::I),
        q.mul_left(Quaternion::J),
        q.mul_left(Quaternion::K),
    ]
}

fn linear_system(pts5: &[Quaternion]) -> Result<QuatMatrix> {
    if pts5.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, found: pts5.len() });
    }
    let basis = linear_basis();
    let mut m = QuatMatrix::zeros(5, 5);
    for (r, &x) in pts5.iter().enumerate() {
        for (c, b) in basis.iter().enumerate() {
            m[(r, c)] = b.eval(x);
        }
    }
    Ok(m)
}

/// Unique interpolant from `span{1, q, iq, jq, kq}` at five affinely
/// independent nodes. Affinely dependent nodes give a singular system.
pub fn barycentric_linear(
    pts5: &[Quaternion],
    values: &[Quaternion],
    tol: Tolerance,
) -> Result<TxyzPoly> {
    let m = linear_system(pts5)?;
    if values.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, found: values.len() });
    }
    let u = gauss_solve(&m, values, tol)?;
    Ok(linear_basis()
        .iter()
        .zip(u.iter())
        .fold(TxyzPoly::zero(), |acc, (b, &c)| &acc + &b.mul_right(c)))
}

/// The five Lagrange polynomials of [`barycentric_linear`], i.e. the
/// barycentric coordinates of the nodes.
pub fn barycentric_basis(pts5: &[Quaternion], tol: Tolerance) -> Result<Vec<TxyzPoly>> {
    (0..5)
        .map(|j| {
            let mut e = [Quaternion::ZERO; 5];
            e[j] = Quaternion::ONE;
            barycentric_linear(pts5, &e, tol)
        })
        .collect()
}

/// `q = v + jw` with `v = t + ix` and `w = y − iz`.
pub fn cayley_dickson(q: Quaternion) -> (Complex64, Complex64) {
    (Complex64::new(q.t, q.x), Complex64::new(q.y, -q.z))
}

/// Same split from the product identities `v = ½(q − iqi)` and
/// `w = ½(−jq + kqi)`.
pub fn cayley_dickson_by_identities(q: Quaternion) -> (Complex64, Complex64) {
    use Quaternion as Q;
    let v = (q - Q::I * q * Q::I).scale(0.5);
    let w = (Q::K * q * Q::I - Q::J * q).scale(0.5);
    (Complex64::new(v.t, v.x), Complex64::new(w.t, w.x))
}

/// `v + jw`.
pub fn from_cayley_dickson(v: Complex64, w: Complex64) -> Quaternion {
    let vq = Quaternion::new(v.re, v.im, 0.0, 0.0);
    let wq = Quaternion::new(w.re, w.im, 0.0, 0.0);
    vq + Quaternion::J * wq
}
