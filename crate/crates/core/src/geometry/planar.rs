use super::{Point, Segment, Tolerance};
use crate::error::{Error, Result};

/// Outcome of intersecting two closed planar segments.
#[derive(Debug, Clone, PartialEq)]
pub enum SegmentIntersection {
    None,
    /// A single point, at parameter `t` on the first segment and `u` on the second.
    Point {
        point: Point,
        t: f64,
        u: f64,
    },
    /// A collinear overlap. `start`/`end` are endpoints of the inputs, ordered
    /// along the first segment, with their parameters on it.
    Overlap {
        start: Point,
        end: Point,
        t_start: f64,
        t_end: f64,
    },
}

/// Raw planar hit, parameters on the first segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Hit {
    None,
    Point {
        t: f64,
        u: f64,
    },
    /// Overlap `[t0, t1]` on the first segment; `from_first` flags tell whether
    /// each end is an endpoint of the first segment (otherwise of the second).
    Overlap {
        t0: f64,
        t1: f64,
        start_first: bool,
        end_first: bool,
        start_is_b: bool,
        end_is_b: bool,
    },
}

#[inline]
fn cross(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    ax * by - ay * bx
}

/// Slack for a parameter on a segment of length `len`.
#[inline]
fn param_slack(len: f64, tol: &Tolerance) -> f64 {
    tol.band(len, 0.0) / len
}

fn project(p: &[f64], d: &[f64], len2: f64, x: &[f64]) -> f64 {
    ((x[0] - p[0]) * d[0] + (x[1] - p[1]) * d[1]) / len2
}

pub(crate) fn segment_hit(p1: &[f64], q1: &[f64], p2: &[f64], q2: &[f64], tol: &Tolerance) -> Hit {
    let d1 = [q1[0] - p1[0], q1[1] - p1[1]];
    let d2 = [q2[0] - p2[0], q2[1] - p2[1]];
    let len1 = d1[0].hypot(d1[1]);
    let len2 = d2[0].hypot(d2[1]);

    if len1 == 0.0 || len2 == 0.0 {
        return degenerate_hit(p1, q1, p2, q2, len1, len2, tol);
    }

    let r = [p2[0] - p1[0], p2[1] - p1[1]];
    let denom = cross(d1[0], d1[1], d2[0], d2[1]);
    if denom.abs() > tol.eps() * len1 * len2 {
        let t = cross(r[0], r[1], d2[0], d2[1]) / denom;
        let u = cross(r[0], r[1], d1[0], d1[1]) / denom;
        let (s1, s2) = (param_slack(len1, tol), param_slack(len2, tol));
        if t < -s1 || t > 1.0 + s1 || u < -s2 || u > 1.0 + s2 {
            return Hit::None;
        }
        return Hit::Point {
            t: t.clamp(0.0, 1.0),
            u: u.clamp(0.0, 1.0),
        };
    }

    // Parallel: only collinear segments can meet.
    let offset = cross(r[0], r[1], d1[0], d1[1]).abs() / len1;
    if !tol.le(offset, 0.0) {
        return Hit::None;
    }
    let l2 = len1 * len1;
    let ta = project(p1, &d1, l2, p2);
    let tb = project(p1, &d1, l2, q2);
    let (tmin, tmax, min_is_b) = if ta <= tb { (ta, tb, false) } else { (tb, ta, true) };
    let slack = param_slack(len1, tol);
    let lo = tmin.max(0.0);
    let hi = tmax.min(1.0);
    if lo > hi + slack {
        return Hit::None;
    }
    if hi - lo <= slack {
        let t = (0.5 * (lo + hi)).clamp(0.0, 1.0);
        let u = project(p2, &d2, len2 * len2, &[p1[0] + t * d1[0], p1[1] + t * d1[1]]);
        return Hit::Point {
            t,
            u: u.clamp(0.0, 1.0),
        };
    }
    let start_first = tmin <= 0.0;
    let end_first = tmax >= 1.0;
    Hit::Overlap {
        t0: lo,
        t1: hi,
        start_first,
        end_first,
        start_is_b: if start_first { false } else { min_is_b },
        end_is_b: if end_first { true } else { !min_is_b },
    }
}

fn degenerate_hit(p1: &[f64], q1: &[f64], p2: &[f64], q2: &[f64], len1: f64, len2: f64, tol: &Tolerance) -> Hit {
    let dist = |v: &[f64], a: &[f64], b: &[f64]| super::dist_point_segment(v, a, b);
    if len1 == 0.0 && len2 == 0.0 {
        return if tol.le(dist(p1, p2, p2), 0.0) {
            Hit::Point { t: 0.0, u: 0.0 }
        } else {
            Hit::None
        };
    }
    if len1 == 0.0 {
        if !tol.le(dist(p1, p2, q2), 0.0) {
            return Hit::None;
        }
        let d2 = [q2[0] - p2[0], q2[1] - p2[1]];
        let u = project(p2, &d2, len2 * len2, p1).clamp(0.0, 1.0);
        return Hit::Point { t: 0.0, u };
    }
    if !tol.le(dist(p2, p1, q1), 0.0) {
        return Hit::None;
    }
    let d1 = [q1[0] - p1[0], q1[1] - p1[1]];
    let t = project(p1, &d1, len1 * len1, p2).clamp(0.0, 1.0);
    Hit::Point { t, u: 0.0 }
}

fn require_planar(e: &Segment) -> Result<()> {
    if e.dim() == 2 {
        Ok(())
    } else {
        Err(Error::NotPlanar(e.dim()))
    }
}

/// Intersection of two closed planar segments.
pub fn segment_segment_intersection(e1: &Segment, e2: &Segment, tol: &Tolerance) -> Result<SegmentIntersection> {
    require_planar(e1)?;
    require_planar(e2)?;
    let hit = segment_hit(e1.a.coords(), e1.b.coords(), e2.a.coords(), e2.b.coords(), tol);
    Ok(match hit {
        Hit::None => SegmentIntersection::None,
        Hit::Point { t, u } => SegmentIntersection::Point {
            point: if e1.is_degenerate() { e1.a.clone() } else { e1.at(t) },
            t,
            u,
        },
        Hit::Overlap {
            t0,
            t1,
            start_first,
            end_first,
            start_is_b,
            end_is_b,
        } => {
            let pick = |first: bool, is_b: bool| match (first, is_b) {
                (true, false) => e1.a.clone(),
                (true, true) => e1.b.clone(),
                (false, false) => e2.a.clone(),
                (false, true) => e2.b.clone(),
            };
            SegmentIntersection::Overlap {
                start: pick(start_first, start_is_b),
                end: pick(end_first, end_is_b),
                t_start: t0,
                t_end: t1,
            }
        }
    })
}

pub(crate) fn ray_hits(v: &[f64], p: &[f64], q: &[f64], tol: &Tolerance) -> bool {
    let dy = q[1] - p[1];
    if tol.le(dy.abs(), 0.0) {
        // Horizontal (or degenerate) edge: must lie on the ray's line and
        // reach at least as far right as the ray origin.
        let y = 0.5 * (p[1] + q[1]);
        return tol.eq(v[1], y) && tol.le(v[0], p[0].max(q[0]));
    }
    let t = (v[1] - p[1]) / dy;
    let len = (q[0] - p[0]).hypot(dy);
    let slack = param_slack(len, tol);
    if t < -slack || t > 1.0 + slack {
        return false;
    }
    let x = p[0] + t.clamp(0.0, 1.0) * (q[0] - p[0]);
    tol.ge(x, v[0])
}

/// Whether the horizontal ray `{(x, v.y) : x >= v.x}` meets `e`.
pub fn ray_segment_intersects(v: &Point, e: &Segment, tol: &Tolerance) -> Result<bool> {
    require_planar(e)?;
    if v.dim() != 2 {
        return Err(Error::NotPlanar(v.dim()));
    }
    Ok(ray_hits(v.coords(), e.a.coords(), e.b.coords(), tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_x() {
        let tol = Tolerance::default();
        let hit =
            segment_segment_intersection(&Segment::xy(0.0, 0.0, 1.0, 1.0), &Segment::xy(0.0, 1.0, 1.0, 0.0), &tol)
                .unwrap();
        match hit {
            SegmentIntersection::Point { point, t, u } => {
                assert!((t - 0.5).abs() < 1e-12 && (u - 0.5).abs() < 1e-12);
                assert!((point.x() - 0.5).abs() < 1e-12 && (point.y() - 0.5).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn collinear_overlap() {
        let tol = Tolerance::default();
        let hit =
            segment_segment_intersection(&Segment::xy(0.0, 0.0, 2.0, 0.0), &Segment::xy(1.0, 0.0, 3.0, 0.0), &tol)
                .unwrap();
        assert_eq!(
            hit,
            SegmentIntersection::Overlap {
                start: Point::xy(1.0, 0.0),
                end: Point::xy(2.0, 0.0),
                t_start: 0.5,
                t_end: 1.0
            }
        );
    }

    #[test]
    fn collinear_touching_is_a_point() {
        let tol = Tolerance::default();
        let hit =
            segment_segment_intersection(&Segment::xy(0.0, 0.0, 1.0, 0.0), &Segment::xy(1.0, 0.0, 3.0, 0.0), &tol)
                .unwrap();
        assert!(matches!(hit, SegmentIntersection::Point { t, .. } if (t - 1.0).abs() < 1e-12));
    }

    #[test]
    fn parallel_disjoint() {
        let tol = Tolerance::default();
        let hit =
            segment_segment_intersection(&Segment::xy(0.0, 0.0, 1.0, 0.0), &Segment::xy(0.0, 1.0, 1.0, 1.0), &tol)
                .unwrap();
        assert_eq!(hit, SegmentIntersection::None);
    }

    #[test]
    fn non_planar_rejected() {
        let tol = Tolerance::default();
        let a = Point::new(vec![0.0, 0.0, 0.0]).unwrap();
        let b = Point::new(vec![1.0, 0.0, 0.0]).unwrap();
        let e = Segment::new(a, b).unwrap();
        assert!(matches!(
            segment_segment_intersection(&e, &e, &tol),
            Err(Error::NotPlanar(3))
        ));
    }

    #[test]
    fn ray_examples() {
        let tol = Tolerance::default();
        let vertical = Segment::xy(1.0, -1.0, 1.0, 1.0);
        assert!(ray_segment_intersects(&Point::xy(0.0, 0.0), &vertical, &tol).unwrap());
        assert!(!ray_segment_intersects(&Point::xy(2.0, 0.0), &vertical, &tol).unwrap());
        let flat = Segment::xy(1.0, 0.0, 3.0, 0.0);
        assert!(ray_segment_intersects(&Point::xy(0.0, 0.0), &flat, &tol).unwrap());
        assert!(ray_segment_intersects(&Point::xy(2.0, 0.0), &flat, &tol).unwrap());
        assert!(!ray_segment_intersects(&Point::xy(4.0, 0.0), &flat, &tol).unwrap());
        assert!(!ray_segment_intersects(&Point::xy(0.0, 0.5), &flat, &tol).unwrap());
        // Grazing the upper endpoint.
        assert!(ray_segment_intersects(&Point::xy(0.0, 1.0), &vertical, &tol).unwrap());
    }
}
