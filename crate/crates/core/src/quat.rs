//! Quaternion arithmetic.
//!
//! `Quaternion { t, x, y, z }` is `t + xi + yj + zk` with the Hamilton
//! relations `i² = j² = k² = ijk = −1`.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    /// The units `1, i, j, k` in coordinate order.
    pub const UNITS: [Self; 4] = [Self::ONE, Self::I, Self::J, Self::K];

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub const fn real(t: f64) -> Self {
        Self::new(t, 0.0, 0.0, 0.0)
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    /// Real (scalar) part.
    pub fn re(self) -> f64 {
        self.t
    }

    /// Imaginary part as a pure quaternion.
    pub fn im(self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    pub fn conj(self) -> Self {
        Self::new(self.t, -self.x, -self.y, -self.z)
    }

    /// `|q|² = q·conj(q)`.
    pub fn norm_sqr(self) -> f64 {
        self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    pub fn is_zero(self) -> bool {
        self.t == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Multiplicative inverse `conj(q)/|q|²`.
    pub fn inv(self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj() / n)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.t * s, self.x * s, self.y * s, self.z * s)
    }

    /// `self^n` by repeated squaring.
    pub fn powi(self, mut n: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// `|self − other|`.
    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(self) -> f64 {
        self.t.abs().max(self.x.abs()).max(self.y.abs()).max(self.z.abs())
    }

    /// Lexicographic total order on `(t, x, y, z)`; used to canonicalize
    /// node lists.
    pub fn total_cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.t
            .total_cmp(&other.t)
            .then(self.x.total_cmp(&other.x))
            .then(self.y.total_cmp(&other.y))
            .then(self.z.total_cmp(&other.z))
    }
}

impl From<f64> for Quaternion {
    fn from(t: f64) -> Self {
        Self::real(t)
    }
}

impl From<[f64; 4]> for Quaternion {
    fn from(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.to_array()
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.t, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.t * o.t - self.x * o.x - self.y * o.y - self.z * o.z,
            self.t * o.x + self.x * o.t + self.y * o.z - self.z * o.y,
            self.t * o.y - self.x * o.z + self.y * o.t + self.z * o.x,
            self.t * o.z + self.x * o.y - self.y * o.x + self.z * o.t,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.t / s, self.x / s, self.y / s, self.z / s)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for Quaternion {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl Sum for Quaternion {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.t, self.x, self.y, self.z)
    }
}

/// Relative comparison threshold with an absolute floor.
///
/// Two magnitudes `a`, `b` compare equal when
/// `|a − b| ≤ eps · max(1, |a|, |b|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    /// Returns `None` unless `eps` is finite and positive.
    pub fn new(eps: f64) -> Option<Self> {
        (eps.is_finite() && eps > 0.0).then_some(Self(eps))
    }

    pub fn eps(self) -> f64 {
        self.0
    }

    /// Threshold for quantities of size `scale`.
    pub fn threshold(self, scale: f64) -> f64 {
        self.0 * scale.max(1.0)
    }

    pub fn close(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.threshold(a.abs().max(b.abs()))
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self(Self::DEFAULT_EPS)
    }
}

/// Whether `b = c·a·c⁻¹` for some nonzero `c`, i.e. equal real parts and
/// equal moduli.
pub fn similar(a: Quaternion, b: Quaternion, tol: Tolerance) -> bool {
    let (na, nb) = (a.norm(), b.norm());
    let scale = na.max(nb);
    (a.re() - b.re()).abs() <= tol.threshold(scale) && (na - nb).abs() <= tol.threshold(scale)
}

/// Recovers `(t, x, y, z)` from `q` using only quaternion products:
///
/// ```text
/// t  = ¼ (q − iqi − jqj − kqk)
/// xi = ¼ (q − iqi + jqj + kqk)
/// yj = ¼ (q + iqi − jqj + kqk)
/// zk = ¼ (q + iqi + jqj − kqk)
/// ```
pub fn coord_extract(q: Quaternion) -> [f64; 4] {
    use Quaternion as Q;
    let iqi = Q::I * q * Q::I;
    let jqj = Q::J * q * Q::J;
    let kqk = Q::K * q * Q::K;
    let t = (q - iqi - jqj - kqk).scale(0.25);
    // Dividing by the unit u is left multiplication by −u.
    let x = -Q::I * (q - iqi + jqj + kqk).scale(0.25);
    let y = -Q::J * (q + iqi - jqj + kqk).scale(0.25);
    let z = -Q::K * (q + iqi + jqj - kqk).scale(0.25);
    [t.re(), x.re(), y.re(), z.re()]
}
