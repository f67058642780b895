//! Left Lagrange interpolation from polynomials of degree `n` in `H[z]`.
//!
//! Interpolation at `n + 1` distinct nodes is uniquely possible exactly when
//! no three nodes are similar (same real part and modulus). Similar nodes
//! lie on a common 2-sphere on which left evaluation of any `f ∈ H[z]` is
//! determined by two of its values.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::formal::{annihilator_hz, FormalPoly};
use crate::linalg::{gauss_solve, QuatMatrix};
use crate::points::PointSet;
use crate::quat::{similar, Quaternion, Tolerance};

/// Result of one Newton-form extension step.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonUpdate<P> {
    pub poly: P,
    pub divided_difference: Quaternion,
}

/// True iff every similarity class holds at most two nodes.
pub fn unisolvent_hz(pts: &PointSet) -> bool {
    pts.class_sizes().iter().all(|&s| s <= 2)
}

/// Left Vandermonde matrix `A[j,k] = x_j^k`.
pub fn left_vandermonde(nodes: &[Quaternion]) -> QuatMatrix {
    let n = nodes.len();
    let mut m = QuatMatrix::zeros(n, n);
    for (r, &a) in nodes.iter().enumerate() {
        let mut pow = Quaternion::ONE;
        for c in 0..n {
            m[(r, c)] = pow;
            pow *= a;
        }
    }
    m
}

/// The polynomial of degree `≤ n` in `H[z]` whose left evaluation matches
/// `values` at the `n + 1` nodes.
pub fn interpolate_hz(pts: &PointSet, values: &[Quaternion]) -> Result<FormalPoly> {
    if values.len() != pts.len() {
        return Err(Error::DimensionMismatch { expected: pts.len(), found: values.len() });
    }
    if !unisolvent_hz(pts) {
        return Err(Error::NotUnisolvent);
    }
    if pts.is_empty() {
        return Ok(FormalPoly::zero());
    }
    let a = left_vandermonde(pts.points());
    let u = gauss_solve(&a, values, pts.tol())?;
    Ok(FormalPoly::from_coeffs(u.into_inner()))
}

/// Scaled gap in the three-point condition
/// `(c−a)⁻¹(c²−a²) = (b−a)⁻¹(b²−a²)`, which holds exactly when `a, b, c`
/// are mutually similar. The difference is divided by `1 + |a| + |b| + |c|`.
pub fn similar_triple_gap(a: Quaternion, b: Quaternion, c: Quaternion) -> Result<f64> {
    let lhs = (c - a).inv()? * (c * c - a * a);
    let rhs = (b - a).inv()? * (b * b - a * a);
    Ok(lhs.dist(rhs) / (1.0 + a.norm() + b.norm() + c.norm()))
}

/// `|f(c) − (c−b)(a−b)⁻¹ f(a) − (c−a)(b−a)⁻¹ f(b)|` under left evaluation,
/// for three distinct mutually similar nodes.
pub fn similar_dependency_residual(
    a: Quaternion,
    b: Quaternion,
    c: Quaternion,
    f: &FormalPoly,
    tol: Tolerance,
) -> Result<f64> {
    PointSet::new(alloc::vec![a, b, c], tol)?;
    if !(similar(a, b, tol) && similar(a, c, tol) && similar(b, c, tol)) {
        return Err(Error::PreconditionViolation("nodes must be mutually similar"));
    }
    let rhs = (c - b) * (a - b).inv()? * f.eval_left(a) + (c - a) * (b - a).inv()? * f.eval_left(b);
    Ok(f.eval_left(c).dist(rhs))
}

/// Extends an interpolant on `prev_pts` by one node.
///
/// With `w` the monic annihilator of `prev_pts` and `c = w^{e_l}(new_pt)`,
/// the update is `p = prev + w·c⁻¹·d` where
/// `d = new_val − prev^{e_l}(new_pt)` is the returned divided difference.
pub fn newton_extend_hz(
    prev: &FormalPoly,
    prev_pts: &PointSet,
    new_pt: Quaternion,
    new_val: Quaternion,
) -> Result<NewtonUpdate<FormalPoly>> {
    let all = prev_pts.with_point(new_pt)?;
    if !unisolvent_hz(&all) {
        return Err(Error::NotUnisolvent);
    }
    let w = annihilator_hz(prev_pts)?;
    let c = w.eval_left(new_pt);
    let scale: f64 = prev_pts.points().iter().map(|&x| (new_pt - x).norm()).product();
    if c.norm() <= prev_pts.tol().eps() * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::NotUnisolvent);
    }
    let w = w.mul_right(c.inv()?);
    let d = new_val - prev.eval_left(new_pt);
    Ok(NewtonUpdate { poly: prev + &w.mul_right(d), divided_difference: d })
}

/// Builds the interpolant node by node with [`newton_extend_hz`], returning
/// it together with the divided differences in node order.
pub fn newton_interpolate_hz(
    pts: &PointSet,
    values: &[Quaternion],
) -> Result<(FormalPoly, Vec<Quaternion>)> {
    if values.len() != pts.len() {
        return Err(Error::DimensionMismatch { expected: pts.len(), found: values.len() });
    }
    if !unisolvent_hz(pts) {
        return Err(Error::NotUnisolvent);
    }
    let mut poly = FormalPoly::zero();
    let mut done = PointSet::empty(pts.tol());
    let mut diffs = Vec::with_capacity(pts.len());
    for (&x, &v) in pts.points().iter().zip(values) {
        let step = newton_extend_hz(&poly, &done, x, v)?;
        poly = step.poly;
        diffs.push(step.divided_difference);
        done = done.with_point(x)?;
    }
    Ok((poly, diffs))
}
