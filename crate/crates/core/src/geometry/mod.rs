//! Geometric primitives: points, segments, tolerance-controlled comparisons,
//! and the line/object intersection routines the distance deciders reduce to.
//!
//! Every line intersection is reported in the carrier's own parameterization
//! `p + t (q - p)` with `t` unbounded. Callers clip to `[0, 1]` when they need
//! edge semantics.

mod intersect;
mod interval;
mod planar;
mod tolerance;

pub(crate) use intersect::{ball_interval, dist_point_segment, stadium_interval};
pub use intersect::{
    line_ball_intersection, line_capped_cylinder_intersection, line_double_stadium_intersects,
    line_stadium_intersection, order_on_line, point_in_ball, point_in_capped_cylinder, point_segment_distance,
    point_segment_within,
};
pub use interval::{covers, ParamInterval};
pub use planar::{ray_segment_intersects, segment_segment_intersection, SegmentIntersection};
pub(crate) use planar::{segment_hit, Hit};
pub use tolerance::{LineOrder, Radius, RootTypeTag, Tolerance};

use crate::error::{Error, Result};

/// A point in `R^d`, `d >= 1`, with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty("point has no coordinates"));
        }
        if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(format!("coordinate {bad}")));
        }
        Ok(Self { coords })
    }

    pub fn xy(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite point ({x}, {y})");
        Self { coords: vec![x, y] }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn x(&self) -> f64 {
        self.coords[0]
    }

    pub fn y(&self) -> f64 {
        self.coords[1]
    }

    pub fn distance(&self, other: &Point) -> f64 {
        dist2(&self.coords, &other.coords).sqrt()
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        }
    }
}

/// A closed segment `[a, b]`; `a == b` is a legal degenerate segment.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: b.dim(),
            });
        }
        Ok(Self { a, b })
    }

    /// Planar segment from raw coordinates; panics on non-finite input.
    pub fn xy(ax: f64, ay: f64, bx: f64, by: f64) -> Self {
        Self {
            a: Point::xy(ax, ay),
            b: Point::xy(bx, by),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn length(&self) -> f64 {
        self.a.distance(&self.b)
    }

    pub fn at(&self, t: f64) -> Point {
        self.a.lerp(&self.b, t)
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
