//! Hausdorff distance between planar polygonal regions with holes.
//!
//! `d_dH(P, Q) <= delta` splits into a boundary part (B), every point of
//! `∂P` lies within `delta` of `Q`, and an interior part (I), no point of
//! `P \ Q` in the interior of `P` is farther than `delta` from `∂Q`. The
//! farthest interior points are vertices of the Voronoi diagram of the edges
//! of `∂Q`, so (I) only needs a finite candidate set, see
//! [`voronoi_vertex_candidates`].

mod classify;
mod decide;
mod voronoi;

pub use classify::{classify_edge_against_region, EdgeClassification};
pub use decide::{
    boundary_predicate_b, compute_directed_hausdorff_region, compute_hausdorff_region,
    decide_directed_hausdorff_region, decide_hausdorff_region, interior_predicate_i, DirectedRegionDecider,
};
pub use voronoi::{voronoi_vertex_candidates, CandidateCase, SiteKind, SubSite, VoronoiCandidate};

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{dist2, dist_point_segment, segment_hit, Hit, Point, Segment, Tolerance};

/// A closed, simple polygonal ring in the plane. The closing edge from the
/// last vertex back to the first is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring {
    vertices: Vec<Point>,
}

impl Ring {
    /// Builds a ring, dropping an explicit closing vertex and consecutive
    /// repeats. Requires at least three distinct vertices and nonzero area;
    /// simplicity is checked by [`validate_region`].
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let mut clean: Vec<Point> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if v.dim() != 2 {
                return Err(Error::NotPlanar(v.dim()));
            }
            if clean.last() != Some(&v) {
                clean.push(v);
            }
        }
        while clean.len() > 1 && clean.first() == clean.last() {
            clean.pop();
        }
        if clean.len() < 3 {
            return Err(Error::Degenerate("ring needs at least three distinct vertices"));
        }
        let ring = Self { vertices: clean };
        if ring.is_collinear() {
            return Err(Error::Degenerate("ring has zero area"));
        }
        Ok(ring)
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        let vertices = coords
            .iter()
            .map(|&(x, y)| Point::new(vec![x, y]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of vertices (and of edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1` (cyclically).
    pub fn edge(&self, i: usize) -> Segment {
        Segment {
            a: self.vertices[i].clone(),
            b: self.vertices[(i + 1) % self.len()].clone(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.len()).map(|i| self.edge(i))
    }

    pub(crate) fn raw_edges(&self) -> impl Iterator<Item = (&[f64], &[f64])> + '_ {
        let n = self.len();
        (0..n).map(move |i| (self.vertices[i].coords(), self.vertices[(i + 1) % n].coords()))
    }

    fn is_collinear(&self) -> bool {
        let o = self.vertices[0].coords();
        let d = self.vertices[1].coords();
        let (dx, dy) = (d[0] - o[0], d[1] - o[1]);
        self.vertices[2..].iter().all(|v| {
            let (ex, ey) = (v.x() - o[0], v.y() - o[1]);
            (dx * ey - dy * ex).abs() <= 1e-12 * (dx * dx + dy * dy).max(ex * ex + ey * ey)
        })
    }

    /// Shoelace area, positive for counter-clockwise rings.
    pub fn signed_area(&self) -> f64 {
        self.raw_edges().map(|(a, b)| a[0] * b[1] - a[1] * b[0]).sum::<f64>() * 0.5
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// Same ring starting at vertex `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(k % self.len());
        Self { vertices }
    }

    fn crossings(&self, v: &[f64]) -> usize {
        self.raw_edges()
            .filter(|(a, b)| {
                (a[1] > v[1]) != (b[1] > v[1]) && {
                    let x = a[0] + (v[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
                    x > v[0]
                }
            })
            .count()
    }

    fn on_boundary(&self, v: &[f64], tol: &Tolerance) -> bool {
        self.raw_edges().any(|(a, b)| tol.le(dist_point_segment(v, a, b), 0.0))
    }

    /// Closed containment in the polygon bounded by this ring alone.
    pub fn contains(&self, v: &Point, tol: &Tolerance) -> bool {
        self.on_boundary(v.coords(), tol) || self.crossings(v.coords()) % 2 == 1
    }
}

/// A closed planar region: the outer ring's polygon minus the open interiors
/// of its holes.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalRegion {
    outer: Ring,
    holes: Vec<Ring>,
}

impl PolygonalRegion {
    /// Builds and validates a region with the default tolerance.
    pub fn new(outer: Ring, holes: Vec<Ring>) -> Result<Self> {
        Self::with_tolerance(outer, holes, &Tolerance::default())
    }

    pub fn with_tolerance(outer: Ring, holes: Vec<Ring>, tol: &Tolerance) -> Result<Self> {
        let region = Self::new_unchecked(outer, holes);
        validate_region(&region, tol).map_err(Error::InvalidRegion)?;
        Ok(region)
    }

    /// Skips simplicity, containment and disjointness checks.
    pub fn new_unchecked(outer: Ring, holes: Vec<Ring>) -> Self {
        Self { outer, holes }
    }

    /// Axis-aligned rectangle without holes.
    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::new(Ring::from_xy(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1)])?, vec![])
    }

    pub fn outer(&self) -> &Ring {
        &self.outer
    }

    pub fn holes(&self) -> &[Ring] {
        &self.holes
    }

    /// Outer ring first, then the holes.
    pub fn rings(&self) -> impl Iterator<Item = &Ring> + '_ {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }

    /// All boundary edges, ring by ring.
    pub fn boundary(&self) -> Vec<Segment> {
        self.rings().flat_map(|r| r.edges()).collect()
    }

    pub(crate) fn raw_boundary(&self) -> Vec<(&[f64], &[f64])> {
        self.rings().flat_map(|r| r.raw_edges()).collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Point> + '_ {
        self.rings().flat_map(|r| r.vertices().iter())
    }

    pub fn max_vertex_distance(&self, other: &PolygonalRegion) -> f64 {
        self.vertices()
            .flat_map(|p| other.vertices().map(move |q| p.distance(q)))
            .fold(0.0, f64::max)
    }

    /// Applies `f` to every vertex, keeping the ring structure.
    pub fn map_vertices<F: Fn(f64, f64) -> (f64, f64)>(&self, f: F) -> Result<Self> {
        let map_ring = |r: &Ring| {
            let coords: Vec<(f64, f64)> = r.vertices().iter().map(|v| f(v.x(), v.y())).collect();
            Ring::from_xy(&coords)
        };
        Ok(Self {
            outer: map_ring(&self.outer)?,
            holes: self.holes.iter().map(map_ring).collect::<Result<_>>()?,
        })
    }
}

/// A defect found by [`validate_region`]. Ring 0 is the outer ring and
/// ring `h + 1` is hole `h`.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    SelfIntersection {
        ring: usize,
        edges: (usize, usize),
    },
    RingsIntersect {
        rings: (usize, usize),
        edges: (usize, usize),
    },
    HoleOutside {
        ring: usize,
    },
    HolesNested {
        rings: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfIntersection { ring, edges } => {
                write!(f, "ring {ring}: edges {} and {} intersect", edges.0, edges.1)
            }
            Violation::RingsIntersect { rings, edges } => write!(
                f,
                "ring {} edge {} meets ring {} edge {}",
                rings.0, edges.0, rings.1, edges.1
            ),
            Violation::HoleOutside { ring } => write!(f, "ring {ring}: hole not inside the outer ring"),
            Violation::HolesNested { rings } => {
                write!(f, "rings {} and {}: holes overlap", rings.0, rings.1)
            }
        }
    }
}

fn self_intersections(ring: &Ring, index: usize, tol: &Tolerance, out: &mut Vec<Violation>) {
    let n = ring.len();
    let edges: Vec<_> = ring.raw_edges().collect();
    for i in 0..n {
        for j in i + 1..n {
            let (p1, q1) = edges[i];
            let (p2, q2) = edges[j];
            let hit = segment_hit(p1, q1, p2, q2, tol);
            let shared = if j == i + 1 {
                Some(q1)
            } else if i == 0 && j == n - 1 {
                Some(p1)
            } else {
                None
            };
            let ok = match (hit, shared) {
                (Hit::None, _) => true,
                (Hit::Point { t, .. }, Some(s)) => {
                    let x = [p1[0] + t * (q1[0] - p1[0]), p1[1] + t * (q1[1] - p1[1])];
                    tol.le(dist2(&x, s).sqrt(), 0.0)
                }
                _ => false,
            };
            if !ok {
                out.push(Violation::SelfIntersection {
                    ring: index,
                    edges: (i, j),
                });
            }
        }
    }
}

fn first_crossing(a: &Ring, b: &Ring, tol: &Tolerance) -> Option<(usize, usize)> {
    for (i, (p1, q1)) in a.raw_edges().enumerate() {
        for (j, (p2, q2)) in b.raw_edges().enumerate() {
            if !matches!(segment_hit(p1, q1, p2, q2, tol), Hit::None) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Checks ring simplicity, that every hole lies strictly inside the outer
/// ring, and that holes are pairwise disjoint.
pub fn validate_region(region: &PolygonalRegion, tol: &Tolerance) -> std::result::Result<(), Vec<Violation>> {
    let rings: Vec<&Ring> = region.rings().collect();
    let mut out = Vec::new();
    for (idx, ring) in rings.iter().enumerate() {
        self_intersections(ring, idx, tol, &mut out);
    }
    for h in 1..rings.len() {
        if let Some(edges) = first_crossing(rings[0], rings[h], tol) {
            out.push(Violation::RingsIntersect { rings: (0, h), edges });
        } else if !rings[0].contains(&rings[h].vertices()[0], tol) {
            out.push(Violation::HoleOutside { ring: h });
        }
        for g in h + 1..rings.len() {
            if let Some(edges) = first_crossing(rings[h], rings[g], tol) {
                out.push(Violation::RingsIntersect { rings: (h, g), edges });
            } else if rings[h].contains(&rings[g].vertices()[0], tol) || rings[g].contains(&rings[h].vertices()[0], tol)
            {
                out.push(Violation::HolesNested { rings: (h, g) });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

pub(crate) fn contains_raw(region: &PolygonalRegion, v: &[f64], tol: &Tolerance) -> bool {
    if region.rings().any(|r| r.on_boundary(v, tol)) {
        return true;
    }
    region.rings().map(|r| r.crossings(v)).sum::<usize>() % 2 == 1
}

/// Closed membership: boundary points are inside. Off the boundary, the
/// parity of horizontal-ray crossings over all rings decides. An edge counts
/// as crossed when its endpoints lie strictly on opposite sides of the ray's
/// line, with the lower endpoint's side closed, so a ray through a vertex
/// counts it once or twice according to whether the boundary passes through.
pub fn point_in_region(v: &Point, region: &PolygonalRegion, tol: &Tolerance) -> Result<bool> {
    if v.dim() != 2 {
        return Err(Error::NotPlanar(v.dim()));
    }
    Ok(contains_raw(region, v.coords(), tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_with_hole(lo: f64, hi: f64) -> PolygonalRegion {
        PolygonalRegion::new(
            Ring::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap(),
            vec![Ring::from_xy(&[(lo, lo), (hi, lo), (hi, hi), (lo, hi)]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn ring_construction() {
        let closed = Ring::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, 0.0)]).unwrap();
        assert_eq!(closed.len(), 3);
        assert!(Ring::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0)]).is_err());
        assert!(Ring::from_xy(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).is_err());
        assert!((closed.signed_area() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn validation_examples() {
        let tol = Tolerance::default();
        assert!(PolygonalRegion::rect(0.0, 0.0, 1.0, 1.0).is_ok());

        let bowtie = Ring::from_xy(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        let err = validate_region(&PolygonalRegion::new_unchecked(bowtie, vec![]), &tol).unwrap_err();
        assert_eq!(err, vec![Violation::SelfIntersection { ring: 0, edges: (0, 2) }]);

        let outer = Ring::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let poking = Ring::from_xy(&[(0.5, 0.5), (1.5, 0.5), (1.5, 0.7), (0.5, 0.7)]).unwrap();
        let err = validate_region(&PolygonalRegion::new_unchecked(outer.clone(), vec![poking]), &tol).unwrap_err();
        assert!(matches!(err[0], Violation::RingsIntersect { rings: (0, 1), .. }));

        let far = Ring::from_xy(&[(2.0, 2.0), (3.0, 2.0), (3.0, 3.0)]).unwrap();
        let err = validate_region(&PolygonalRegion::new_unchecked(outer.clone(), vec![far]), &tol).unwrap_err();
        assert_eq!(err, vec![Violation::HoleOutside { ring: 1 }]);

        let h1 = Ring::from_xy(&[(0.1, 0.1), (0.6, 0.1), (0.6, 0.6), (0.1, 0.6)]).unwrap();
        let h2 = Ring::from_xy(&[(0.2, 0.2), (0.3, 0.2), (0.3, 0.3)]).unwrap();
        let err = validate_region(&PolygonalRegion::new_unchecked(outer, vec![h1, h2]), &tol).unwrap_err();
        assert_eq!(err, vec![Violation::HolesNested { rings: (1, 2) }]);
    }

    #[test]
    fn membership_examples() {
        let tol = Tolerance::default();
        let square = PolygonalRegion::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(point_in_region(&Point::xy(0.5, 0.5), &square, &tol).unwrap());
        assert!(point_in_region(&Point::xy(0.0, 0.5), &square, &tol).unwrap());
        assert!(!point_in_region(&Point::xy(1.5, 0.5), &square, &tol).unwrap());

        let holed = square_with_hole(0.25, 0.75);
        assert!(!point_in_region(&Point::xy(0.5, 0.5), &holed, &tol).unwrap());
        assert!(point_in_region(&Point::xy(0.25, 0.5), &holed, &tol).unwrap());
        assert!(point_in_region(&Point::xy(0.1, 0.5), &holed, &tol).unwrap());
    }

    #[test]
    fn ray_through_vertices() {
        let tol = Tolerance::default();
        // Diamond: the ray from the center passes exactly through a vertex.
        let diamond = PolygonalRegion::new(
            Ring::from_xy(&[(0.0, -1.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)]).unwrap(),
            vec![],
        )
        .unwrap();
        assert!(point_in_region(&Point::xy(0.0, 0.0), &diamond, &tol).unwrap());
        assert!(!point_in_region(&Point::xy(-2.0, 0.0), &diamond, &tol).unwrap());
        // A ray grazing a spike tip from outside.
        let spike = PolygonalRegion::new(
            Ring::from_xy(&[(0.0, 0.0), (2.0, 0.0), (3.0, 1.0), (4.0, 0.0), (4.0, -1.0), (0.0, -1.0)]).unwrap(),
            vec![],
        )
        .unwrap();
        assert!(!point_in_region(&Point::xy(1.0, 1.0), &spike, &tol).unwrap());
        assert!(point_in_region(&Point::xy(3.0, 0.5), &spike, &tol).unwrap());
    }

    #[test]
    fn non_planar_point() {
        let tol = Tolerance::default();
        let square = PolygonalRegion::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        let p = Point::new(vec![0.5, 0.5, 0.5]).unwrap();
        assert!(matches!(point_in_region(&p, &square, &tol), Err(Error::NotPlanar(3))));
    }
}
