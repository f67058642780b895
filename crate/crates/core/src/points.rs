use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quat::{similar, Quaternion, Tolerance};

/// Ordered list of pairwise distinct nodes, grouped into similarity classes.
///
/// Classes are assigned greedily in node order: a node joins the first
/// existing class whose representative (first member) it is similar to.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<Quaternion>,
    class_index: Vec<usize>,
    tol: Tolerance,
}

impl PointSet {
    pub fn new(points: Vec<Quaternion>, tol: Tolerance) -> Result<Self> {
        for (i, a) in points.iter().enumerate() {
            if !a.is_finite() {
                return Err(Error::PreconditionViolation("node coordinates must be finite"));
            }
            for (j, b) in points.iter().enumerate().skip(i + 1) {
                if a.dist(*b) <= tol.threshold(a.norm().max(b.norm())) {
                    return Err(Error::InvalidPointSet { first: i, second: j });
                }
            }
        }
        let mut reps: Vec<Quaternion> = Vec::new();
        let class_index = points
            .iter()
            .map(|&p| match reps.iter().position(|&r| similar(r, p, tol)) {
                Some(c) => c,
                None => {
                    reps.push(p);
                    reps.len() - 1
                }
            })
            .collect();
        Ok(Self { points, class_index, tol })
    }

    pub fn empty(tol: Tolerance) -> Self {
        Self { points: Vec::new(), class_index: Vec::new(), tol }
    }

    pub fn points(&self) -> &[Quaternion] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn class_of(&self, index: usize) -> usize {
        self.class_index[index]
    }

    pub fn class_count(&self) -> usize {
        self.class_index.iter().max().map_or(0, |m| m + 1)
    }

    /// Number of nodes in each similarity class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.class_count()];
        for &c in &self.class_index {
            sizes[c] += 1;
        }
        sizes
    }

    /// A new set with `point` appended.
    pub fn with_point(&self, point: Quaternion) -> Result<Self> {
        let mut pts = self.points.clone();
        pts.push(point);
        Self::new(pts, self.tol)
    }
}
