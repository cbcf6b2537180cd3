//! The vertex/edge predicates from which the curve deciders are assembled.
//!
//! * `p1`/`p2`: a vertex lies within `delta` of an edge.
//! * `p3`/`p4`: the line through an edge meets the intersection of two stadiums.
//! * `p5`/`p6`: first and last vertices lie within `delta` of each other.
//! * `p7`/`p8`: on the directed line through an edge, some point near the
//!   earlier vertex comes no later than some point near the later vertex.
//!
//! Odd and even predicates are the same test with the roles of the two
//! curves swapped, so each pair shares one implementation.

use super::{check_pair, PolygonalCurve};
use crate::error::Result;
use crate::geometry::{
    check_dims, line_ball_intersection, line_double_stadium_intersects, point_segment_within, Point, Radius, Segment,
    Tolerance,
};

/// A vertex of one curve lies within `delta` of an edge of the other.
pub fn predicate_p1(edge: &Segment, vertex: &Point, delta: Radius, tol: &Tolerance) -> Result<bool> {
    point_segment_within(vertex, edge, delta, tol)
}

pub use predicate_p1 as predicate_p2;

/// The line through `edge` meets `D(e1, delta) ∩ D(e2, delta)`. A degenerate
/// `edge` asks whether its point lies in both stadiums.
pub fn predicate_p3(edge: &Segment, e1: &Segment, e2: &Segment, delta: Radius, tol: &Tolerance) -> Result<bool> {
    check_dims(edge.dim(), e1.dim())?;
    if edge.is_degenerate() {
        return Ok(point_segment_within(&edge.a, e1, delta, tol)? && point_segment_within(&edge.a, e2, delta, tol)?);
    }
    line_double_stadium_intersects(edge, e1, e2, delta, tol)
}

pub use predicate_p3 as predicate_p4;

/// Endpoint tests: `(|p_1 - q_1| <= delta, |p_m - q_k| <= delta)`.
pub fn predicate_p5_p6(p: &PolygonalCurve, q: &PolygonalCurve, delta: Radius, tol: &Tolerance) -> Result<(bool, bool)> {
    check_pair(p, q)?;
    Ok((
        tol.le(p.first().distance(q.first()), delta.get()),
        tol.le(p.last().distance(q.last()), delta.get()),
    ))
}

/// There are `a1 <= a2` on the directed line through `edge` with
/// `|a1 - earlier| <= delta` and `|a2 - later| <= delta`. For a degenerate
/// edge its single point must lie in both balls.
pub fn predicate_p7(earlier: &Point, later: &Point, edge: &Segment, delta: Radius, tol: &Tolerance) -> Result<bool> {
    check_dims(edge.dim(), earlier.dim())?;
    check_dims(edge.dim(), later.dim())?;
    if edge.is_degenerate() {
        return Ok(tol.le(edge.a.distance(earlier), delta.get()) && tol.le(edge.a.distance(later), delta.get()));
    }
    let first = line_ball_intersection(edge, earlier, delta, tol)?;
    let second = line_ball_intersection(edge, later, delta, tol)?;
    Ok(match (first, second) {
        (Some(a), Some(b)) => tol.le(a.lo(), b.hi()),
        _ => false,
    })
}

pub use predicate_p7 as predicate_p8;

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Radius {
        Radius::new(x).unwrap()
    }

    #[test]
    fn p1_examples() {
        let tol = Tolerance::default();
        let e = Segment::xy(0.0, 0.0, 1.0, 0.0);
        assert!(predicate_p1(&e, &Point::xy(0.5, 0.0), r(0.0), &tol).unwrap());
        assert!(!predicate_p1(&e, &Point::xy(0.5, 2.0), r(1.0), &tol).unwrap());
        let deg = Segment::xy(0.0, 0.0, 0.0, 0.0);
        assert!(predicate_p2(&deg, &Point::xy(3.0, 4.0), r(5.0), &tol).unwrap());
    }

    #[test]
    fn p3_examples() {
        let tol = Tolerance::default();
        let carrier = Segment::xy(-3.0, 0.0, 3.0, 0.0);
        let (a, b) = (Segment::xy(0.0, 1.0, 0.0, -1.0), Segment::xy(0.5, 1.0, 0.5, -1.0));
        assert!(predicate_p3(&carrier, &a, &b, r(0.3), &tol).unwrap());
        let (c, d) = (Segment::xy(0.0, 1.0, 0.0, 2.0), Segment::xy(0.0, -1.0, 0.0, -2.0));
        assert!(!predicate_p4(&carrier, &c, &d, r(0.3), &tol).unwrap());
    }

    #[test]
    fn p3_degenerate_edge_falls_back_to_point_test() {
        let tol = Tolerance::default();
        let point = Segment::xy(0.25, 0.0, 0.25, 0.0);
        let (a, b) = (Segment::xy(0.0, 1.0, 0.0, -1.0), Segment::xy(0.5, 1.0, 0.5, -1.0));
        assert!(predicate_p3(&point, &a, &b, r(0.25), &tol).unwrap());
        assert!(!predicate_p3(&point, &a, &b, r(0.2), &tol).unwrap());
    }

    #[test]
    fn p5_p6_examples() {
        let tol = Tolerance::default();
        let p = PolygonalCurve::xy(&[(0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(predicate_p5_p6(&p, &p, r(0.0), &tol).unwrap(), (true, true));
        let q = PolygonalCurve::xy(&[(0.0, 3.0), (1.0, 0.0)]);
        assert!(!predicate_p5_p6(&p, &q, r(2.0), &tol).unwrap().0);
        let delta = 0.37;
        let q = PolygonalCurve::xy(&[(5.0, 5.0), (1.0, delta)]);
        assert!(predicate_p5_p6(&p, &q, r(delta), &tol).unwrap().1);
    }

    #[test]
    fn p7_examples() {
        let tol = Tolerance::default();
        let edge = Segment::xy(-2.0, 0.0, 2.0, 0.0);
        assert!(predicate_p7(&Point::xy(0.0, 0.0), &Point::xy(1.0, 0.0), &edge, r(0.1), &tol).unwrap());
        assert!(!predicate_p8(&Point::xy(1.0, 0.0), &Point::xy(0.0, 0.0), &edge, r(0.1), &tol).unwrap());
        // Overlapping balls allow a1 = a2 even when the order is reversed.
        assert!(predicate_p7(&Point::xy(0.1, 0.0), &Point::xy(0.0, 0.0), &edge, r(0.1), &tol).unwrap());
    }

    #[test]
    fn p7_degenerate_edge() {
        let tol = Tolerance::default();
        let edge = Segment::xy(0.0, 0.0, 0.0, 0.0);
        assert!(predicate_p7(&Point::xy(0.1, 0.0), &Point::xy(-0.1, 0.0), &edge, r(0.1), &tol).unwrap());
        assert!(!predicate_p7(&Point::xy(0.1, 0.0), &Point::xy(-0.3, 0.0), &edge, r(0.1), &tol).unwrap());
    }
}
