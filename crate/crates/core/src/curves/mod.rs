//! Polygonal curves and the distance measures defined on them.
//!
//! Continuous measures are exposed as deciders (`d(P, Q) <= delta`) built from
//! the vertex/edge predicates in [`predicates`]; [`compute_distance`] turns a
//! decider into a value by bisection. Discrete measures are computed directly.
//!
//! DTW here sums *squared* Euclidean vertex distances along the warping path
//! and takes no final square root.

mod compute;
mod discrete;
mod frechet;
mod hausdorff;
pub mod predicates;

pub use compute::{compute_distance, decide, decide_batch, CurveMeasure};
pub use discrete::{discrete_frechet, discrete_hausdorff, dtw, dtw_bruteforce, WarpingPath, BRUTEFORCE_LIMIT};
pub use frechet::{decide_frechet, decide_weak_frechet};
pub use hausdorff::{decide_directed_hausdorff_curve, decide_hausdorff_curve};

pub(crate) use compute::bisect;
pub(crate) use frechet::{frechet_verdict, weak_frechet_verdict};
pub(crate) use hausdorff::directed_hausdorff_verdict;

use crate::error::{Error, Result};
use crate::geometry::{check_dims, Point, Radius, Segment, Tolerance};

/// An ordered vertex sequence in `R^d`, read both as a point sequence and as
/// the piecewise-linear curve through it. Repeated consecutive vertices are
/// allowed and give degenerate edges.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCurve {
    vertices: Vec<Point>,
}

impl PolygonalCurve {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let first = vertices
            .first()
            .ok_or(Error::Empty("curve needs at least one vertex"))?;
        let dim = first.dim();
        for v in &vertices {
            check_dims(dim, v.dim())?;
        }
        Ok(Self { vertices })
    }

    pub fn from_coords<I, C>(coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Vec<f64>>,
    {
        let vertices = coords
            .into_iter()
            .map(|c| Point::new(c.into()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    /// Planar curve from `(x, y)` pairs; panics on non-finite input.
    pub fn xy(coords: &[(f64, f64)]) -> Self {
        assert!(!coords.is_empty(), "curve needs at least one vertex");
        Self {
            vertices: coords.iter().map(|&(x, y)| Point::xy(x, y)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn first(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Point {
        &self.vertices[self.vertices.len() - 1]
    }

    /// The `m - 1` edges in order.
    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment {
            a: w[0].clone(),
            b: w[1].clone(),
        })
    }

    /// Point set covered by the curve as coordinate pairs: the edges, or the
    /// single vertex as a degenerate piece when `m = 1`.
    pub(crate) fn pieces(&self) -> Vec<(&[f64], &[f64])> {
        if self.vertices.len() == 1 {
            let v = self.vertices[0].coords();
            return vec![(v, v)];
        }
        self.vertices
            .windows(2)
            .map(|w| (w[0].coords(), w[1].coords()))
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// Largest distance between a vertex of `self` and a vertex of `other`.
    pub fn max_vertex_distance(&self, other: &PolygonalCurve) -> f64 {
        self.vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| p.distance(q)))
            .fold(0.0, f64::max)
    }
}

/// Whether a verdict sits inside the tolerance band of the decision boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Margin {
    Robust,
    NearBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecisionResult {
    pub verdict: bool,
    pub margin: Margin,
}

impl DecisionResult {
    /// Evaluates `verdict` at `delta` and at `delta -/+ 10 eps max(delta, 1)`.
    /// If the two probes disagree, some governing comparison fell inside the
    /// band and the result is flagged as near the boundary.
    pub(crate) fn probe<F: Fn(f64) -> bool>(delta: Radius, tol: &Tolerance, verdict: F) -> Self {
        let d = delta.get();
        let band = 10.0 * tol.eps() * d.max(1.0);
        let at = verdict(d);
        let below = if d == 0.0 { at } else { verdict((d - band).max(0.0)) };
        let above = verdict(d + band);
        DecisionResult {
            verdict: at,
            margin: if below == above {
                Margin::Robust
            } else {
                Margin::NearBoundary
            },
        }
    }

    pub fn is_robust(&self) -> bool {
        self.margin == Margin::Robust
    }
}

pub(crate) fn check_pair(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<()> {
    check_dims(p.dim(), q.dim())
}
