//! Gauss elimination over the quaternions.
//!
//! Systems are read as `Σ_k A[j,k]·u[k] = b[j]`: matrix entries multiply the
//! unknowns from the left, and the unknowns form a right `H`-module. All row
//! operations therefore left-multiply rows, which preserves the solution
//! set and the right-linear relations between columns.

use alloc::vec::Vec;
use core::ops::{Deref, Index, IndexMut};

use crate::error::{Error, Result};
use crate::quat::{Quaternion, Tolerance};

#[derive(Clone, Debug, PartialEq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
}

impl QuatMatrix {
    /// Row-major constructor.
    pub fn new(rows: usize, cols: usize, entries: Vec<Quaternion>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: alloc::vec![Quaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    /// Builds a matrix from equally long rows.
    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r);
        }
        Ok(Self { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Quaternion] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Largest entry norm; the reference scale for pivot thresholds.
    pub fn max_norm(&self) -> f64 {
        self.entries.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// `A·u` with entries acting from the left.
    pub fn apply(&self, u: &[Quaternion]) -> Result<QuatColumn> {
        if u.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: u.len() });
        }
        Ok(QuatColumn(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(u).map(|(&a, &x)| a * x).sum())
                .collect(),
        ))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `row[target] −= m · row[source]` from column `from` on.
    fn eliminate(&mut self, target: usize, source: usize, m: Quaternion, from: usize) {
        for c in from..self.cols {
            let s = self[(source, c)];
            self[(target, c)] -= m * s;
        }
    }
}

impl Index<(usize, usize)> for QuatMatrix {
    type Output = Quaternion;
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QuatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        &mut self.entries[r * self.cols + c]
    }
}

/// Column of unknowns or right-hand sides.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct QuatColumn(pub Vec<Quaternion>);

impl QuatColumn {
    pub fn into_inner(self) -> Vec<Quaternion> {
        self.0
    }

    pub fn max_norm(&self) -> f64 {
        self.0.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }
}

impl Deref for QuatColumn {
    type Target = [Quaternion];
    fn deref(&self) -> &[Quaternion] {
        &self.0
    }
}

impl From<Vec<Quaternion>> for QuatColumn {
    fn from(v: Vec<Quaternion>) -> Self {
        Self(v)
    }
}

fn is_negligible(norm: f64, tol: Tolerance, scale: f64) -> bool {
    norm == 0.0 || norm <= tol.eps() * scale
}

/// Solves the square system `A·u = b` by Gauss elimination with partial
/// pivoting on the largest entry norm.
///
/// A pivot with norm at most `tol · max_norm(A)` makes the system singular.
pub fn gauss_solve(a: &QuatMatrix, b: &[Quaternion], tol: Tolerance) -> Result<QuatColumn> {
    let n = a.rows;
    if a.cols != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.cols });
    }
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.len() });
    }
    let scale = a.max_norm();
    let mut m = a.clone();
    let mut rhs = b.to_vec();

    for p in 0..n {
        let (best, pivot_norm) = (p..n)
            .map(|r| (r, m[(r, p)].norm()))
            .fold((p, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if is_negligible(pivot_norm, tol, scale) {
            return Err(Error::SingularSystem { step: p, pivot_norm });
        }
        m.swap_rows(p, best);
        rhs.swap(p, best);
        let pinv = m[(p, p)].inv()?;
        for r in p + 1..n {
            let factor = m[(r, p)] * pinv;
            if factor.is_zero() {
                continue;
            }
            m.eliminate(r, p, factor, p);
            let s = rhs[p];
            rhs[r] -= factor * s;
        }
    }

    let mut u = alloc::vec![Quaternion::ZERO; n];
    for p in (0..n).rev() {
        let acc: Quaternion = (p + 1..n).map(|k| m[(p, k)] * u[k]).sum();
        u[p] = m[(p, p)].inv()? * (rhs[p] - acc);
    }
    Ok(QuatColumn(u))
}

/// Number of pivots found by row echelon reduction with left-acting row
/// operations. This is the dimension of the right-module span of the
/// columns (and of the left-module span of the rows).
pub fn rank(a: &QuatMatrix, tol: Tolerance) -> usize {
    let scale = a.max_norm();
    let mut m = a.clone();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let (best, pivot_norm) = (r..m.rows)
            .map(|i| (i, m[(i, c)].norm()))
            .fold((r, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if is_negligible(pivot_norm, tol, scale) {
            continue;
        }
        m.swap_rows(r, best);
        let pinv = match m[(r, c)].inv() {
            Ok(p) => p,
            Err(_) => continue,
        };
        for i in r + 1..m.rows {
            let factor = m[(i, c)] * pinv;
            if !factor.is_zero() {
                m.eliminate(i, r, factor, c);
            }
        }
        r += 1;
    }
    r
}
