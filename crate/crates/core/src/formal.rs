//! The formal polynomial ring `H[z]`.
//!
//! A polynomial `f(z) = z^n f_n + … + z f_1 + f_0` is stored as its
//! coefficients in ascending degree. The variable is formally central and
//! written to the left of the coefficients, so `H[z]` is a right `H`-module
//! and [`FormalPoly::eval_left`] is right-linear.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::points::PointSet;
use crate::quat::Quaternion;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct FormalPoly {
    coeffs: Vec<Quaternion>,
}

impl FormalPoly {
    /// Builds a polynomial from ascending coefficients, dropping exactly-zero
    /// leading terms.
    pub fn from_coeffs(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::ONE)
    }

    pub fn constant(c: Quaternion) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    /// `z − a`.
    pub fn linear_monic(a: Quaternion) -> Self {
        Self::from_coeffs(alloc::vec![-a, Quaternion::ONE])
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Quaternion> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `z^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Quaternion {
        self.coeffs.get(j).copied().unwrap_or(Quaternion::ZERO)
    }

    /// `f^{e_l}(a) = Σ a^j f_j`.
    pub fn eval_left(&self, a: Quaternion) -> Quaternion {
        self.coeffs.iter().rev().fold(Quaternion::ZERO, |acc, &c| c + a * acc)
    }

    /// `f^{e_r}(a) = Σ f_j a^j`.
    ///
    /// Unlike left evaluation this is not linear over the right module:
    /// `(f·α)^{e_r}(a) ≠ f^{e_r}(a)·α` in general.
    pub fn eval_right(&self, a: Quaternion) -> Quaternion {
        self.coeffs.iter().rev().fold(Quaternion::ZERO, |acc, &c| c + acc * a)
    }

    /// Star product `(Σ z^j a_j) * (Σ z^k b_k) = Σ z^{j+k} a_j b_k`.
    pub fn star_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = alloc::vec![Quaternion::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (j, &a) in self.coeffs.iter().enumerate() {
            for (k, &b) in other.coeffs.iter().enumerate() {
                out[j + k] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Right scalar multiple `f·α`.
    pub fn mul_right(&self, alpha: Quaternion) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| c * alpha).collect())
    }

    /// Left scalar multiple `α·f`.
    pub fn mul_left(&self, alpha: Quaternion) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| alpha * c).collect())
    }

    /// Divides by `z − a` on the left: returns `(g, r)` with
    /// `f = (z − a) * g + r`.
    ///
    /// The remainder equals `f^{e_l}(a)`, so `a` is a left root exactly when
    /// the division is exact. A constant `f` gives `(0, f_0)`.
    pub fn left_div_linear(&self, a: Quaternion) -> (Self, Quaternion) {
        let n = match self.degree() {
            None => return (Self::zero(), Quaternion::ZERO),
            Some(0) => return (Self::zero(), self.coeffs[0]),
            Some(n) => n,
        };
        // f_m = g_{m-1} − a·g_m, solved downwards from g_{n-1} = f_n.
        let mut g = alloc::vec![Quaternion::ZERO; n];
        g[n - 1] = self.coeffs[n];
        for m in (1..n).rev() {
            g[m - 1] = self.coeffs[m] + a * g[m];
        }
        let r = self.coeffs[0] + a * g[0];
        (Self::from_coeffs(g), r)
    }

    /// Largest coefficient-wise distance to `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|j| self.coeff(j).dist(other.coeff(j)))
            .fold(0.0, f64::max)
    }
}

impl Add for &FormalPoly {
    type Output = FormalPoly;
    fn add(self, o: &FormalPoly) -> FormalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        FormalPoly::from_coeffs((0..n).map(|j| self.coeff(j) + o.coeff(j)).collect())
    }
}

impl Sub for &FormalPoly {
    type Output = FormalPoly;
    fn sub(self, o: &FormalPoly) -> FormalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        FormalPoly::from_coeffs((0..n).map(|j| self.coeff(j) - o.coeff(j)).collect())
    }
}

impl Neg for &FormalPoly {
    type Output = FormalPoly;
    fn neg(self) -> FormalPoly {
        FormalPoly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// Star product.
impl Mul for &FormalPoly {
    type Output = FormalPoly;
    fn mul(self, o: &FormalPoly) -> FormalPoly {
        self.star_mul(o)
    }
}

/// Monic polynomial of degree `|points|` whose left evaluation vanishes at
/// every node.
///
/// Built one node at a time: with `c = p_k^{e_l}(a)`,
/// `p_{k+1} = p_k * (z − c⁻¹ a c)`. The identity
/// `(p * g)^{e_l}(a) = p^{e_l}(a) · g^{e_l}(c⁻¹ a c)` keeps all earlier roots
/// and adds `a`. A node already annihilated (`c = 0`) gets the factor
/// `z − a` so the degree still matches the node count.
pub fn annihilator_hz(points: &PointSet) -> Result<FormalPoly> {
    if !crate::hz::unisolvent_hz(points) {
        return Err(Error::NotUnisolvent);
    }
    let mut p = FormalPoly::one();
    for &a in points.points() {
        let c = p.eval_left(a);
        let root = match c.inv() {
            Ok(ci) if c.norm() > points.tol().eps() * a.norm().max(1.0) => ci * a * c,
            _ => a,
        };
        p = p.star_mul(&FormalPoly::linear_monic(root));
    }
    Ok(p)
}
