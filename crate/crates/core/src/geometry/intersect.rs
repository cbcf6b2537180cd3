use super::{check_dims, dist2, dot, LineOrder, ParamInterval, Point, Radius, Segment, Tolerance};
use crate::error::{Error, Result};

/// Distance from `v` to the closed segment `[a, b]`.
pub(crate) fn dist_point_segment(v: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let mut ab2 = 0.0;
    let mut proj = 0.0;
    for i in 0..v.len() {
        let w = b[i] - a[i];
        ab2 += w * w;
        proj += (v[i] - a[i]) * w;
    }
    if ab2 == 0.0 {
        return dist2(v, a).sqrt();
    }
    let t = (proj / ab2).clamp(0.0, 1.0);
    let mut acc = 0.0;
    for i in 0..v.len() {
        let f = a[i] + t * (b[i] - a[i]) - v[i];
        acc += f * f;
    }
    acc.sqrt()
}

/// Parameters of `line(p, q) ∩ B(center, delta)`; `p != q` is assumed.
pub(crate) fn ball_interval(
    p: &[f64],
    q: &[f64],
    center: &[f64],
    delta: f64,
    tol: &Tolerance,
) -> Option<ParamInterval> {
    let mut len2 = 0.0;
    let mut proj = 0.0;
    for i in 0..p.len() {
        let d = q[i] - p[i];
        len2 += d * d;
        proj += (center[i] - p[i]) * d;
    }
    debug_assert!(len2 > 0.0);
    let foot = proj / len2;
    let mut h2 = 0.0;
    for i in 0..p.len() {
        let f = p[i] + foot * (q[i] - p[i]) - center[i];
        h2 += f * f;
    }
    let h = h2.sqrt();
    if !tol.le(h, delta) {
        return None;
    }
    let half = ((delta * delta - h2).max(0.0) / len2).sqrt();
    Some(ParamInterval::new(foot - half, foot + half))
}

/// Parameters of `line(p, q) ∩ R(u, v, delta)`, the capped cylinder around
/// `[u, v]`; both `p != q` and `u != v` are assumed.
///
/// The slab between the two bounding hyperplanes is one linear constraint on
/// the carrier parameter and the cylinder wall is one quadratic constraint;
/// both give intervals, so the result is a single interval.
pub(crate) fn capcyl_interval(
    p: &[f64],
    q: &[f64],
    u: &[f64],
    v: &[f64],
    delta: f64,
    tol: &Tolerance,
) -> Option<ParamInterval> {
    let n = p.len();
    let d: Vec<f64> = (0..n).map(|i| q[i] - p[i]).collect();
    let w: Vec<f64> = (0..n).map(|i| v[i] - u[i]).collect();
    let pu: Vec<f64> = (0..n).map(|i| p[i] - u[i]).collect();
    let w2 = dot(&w, &w);
    let d2 = dot(&d, &d);
    debug_assert!(w2 > 0.0 && d2 > 0.0);

    // Axis coordinate s(t) = s0 + s1 t, must lie in [0, 1].
    let s0 = dot(&pu, &w) / w2;
    let s1 = dot(&d, &w) / w2;
    let s_lo = -tol.eps();
    let s_hi = 1.0 + tol.eps();
    let (mut lo, mut hi) = if s1.abs() <= f64::EPSILON * (d2 / w2).sqrt() {
        if s0 < s_lo || s0 > s_hi {
            return None;
        }
        (f64::NEG_INFINITY, f64::INFINITY)
    } else {
        let a = (s_lo - s0) / s1;
        let b = (s_hi - s0) / s1;
        (a.min(b), a.max(b))
    };

    // Offset from the axis line: r(t) = r0 + t dp.
    let r0: Vec<f64> = (0..n).map(|i| pu[i] - s0 * w[i]).collect();
    let dp: Vec<f64> = (0..n).map(|i| d[i] - s1 * w[i]).collect();
    let dp2 = dot(&dp, &dp);
    if dp2 <= 16.0 * f64::EPSILON * f64::EPSILON * d2 {
        // Carrier parallel to the axis: offset is constant.
        if !tol.le(dot(&r0, &r0).sqrt(), delta) {
            return None;
        }
    } else {
        let foot = -dot(&r0, &dp) / dp2;
        let h2: f64 = (0..n).map(|i| (r0[i] + foot * dp[i]).powi(2)).sum();
        if !tol.le(h2.sqrt(), delta) {
            return None;
        }
        let half = ((delta * delta - h2).max(0.0) / dp2).sqrt();
        lo = lo.max(foot - half);
        hi = hi.min(foot + half);
    }
    if tol.le(lo, hi) {
        Some(ParamInterval::new(lo.min(hi), hi.max(lo)))
    } else {
        None
    }
}

/// Parameters of `line(p, q) ∩ D(a, b, delta)`, the stadium around `[a, b]`.
pub(crate) fn stadium_interval(
    p: &[f64],
    q: &[f64],
    a: &[f64],
    b: &[f64],
    delta: f64,
    tol: &Tolerance,
) -> Option<ParamInterval> {
    let from_a = ball_interval(p, q, a, delta, tol);
    if a == b {
        return from_a;
    }
    let pieces = [
        from_a,
        ball_interval(p, q, b, delta, tol),
        capcyl_interval(p, q, a, b, delta, tol),
    ];
    // The stadium is convex, so the union of the pieces is their hull.
    pieces.into_iter().flatten().reduce(|acc, piece| acc.hull(&piece))
}

fn require_carrier(carrier: &Segment) -> Result<()> {
    if carrier.is_degenerate() {
        Err(Error::Degenerate("carrier segment has coincident endpoints"))
    } else {
        Ok(())
    }
}

/// Distance from `v` to the closed segment `e`.
pub fn point_segment_distance(v: &Point, e: &Segment) -> Result<f64> {
    check_dims(e.dim(), v.dim())?;
    Ok(dist_point_segment(v.coords(), e.a.coords(), e.b.coords()))
}

/// Whether some point of `e` lies within `delta` of `v` (stadium membership).
pub fn point_segment_within(v: &Point, e: &Segment, delta: Radius, tol: &Tolerance) -> Result<bool> {
    Ok(tol.le(point_segment_distance(v, e)?, delta.get()))
}

pub fn point_in_ball(v: &Point, center: &Point, delta: Radius, tol: &Tolerance) -> Result<bool> {
    check_dims(center.dim(), v.dim())?;
    Ok(tol.le(v.distance(center), delta.get()))
}

/// Membership in the capped cylinder: the orthogonal projection onto the axis
/// line falls on the axis segment and the offset is at most `delta`.
/// A degenerate axis reduces to the ball around its point.
pub fn point_in_capped_cylinder(v: &Point, axis: &Segment, delta: Radius, tol: &Tolerance) -> Result<bool> {
    check_dims(axis.dim(), v.dim())?;
    if axis.is_degenerate() {
        return point_in_ball(v, &axis.a, delta, tol);
    }
    let (u, w) = (axis.a.coords(), axis.b.coords());
    let x = v.coords();
    let dir: Vec<f64> = w.iter().zip(u).map(|(a, b)| a - b).collect();
    let rel: Vec<f64> = x.iter().zip(u).map(|(a, b)| a - b).collect();
    let s = dot(&rel, &dir) / dot(&dir, &dir);
    if !(tol.ge(s, 0.0) && tol.le(s, 1.0)) {
        return Ok(false);
    }
    let off: f64 = rel
        .iter()
        .zip(&dir)
        .map(|(r, d)| (r - s * d).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(tol.le(off, delta.get()))
}

pub fn line_ball_intersection(
    carrier: &Segment,
    center: &Point,
    delta: Radius,
    tol: &Tolerance,
) -> Result<Option<ParamInterval>> {
    check_dims(carrier.dim(), center.dim())?;
    require_carrier(carrier)?;
    Ok(ball_interval(
        carrier.a.coords(),
        carrier.b.coords(),
        center.coords(),
        delta.get(),
        tol,
    ))
}

pub fn line_capped_cylinder_intersection(
    carrier: &Segment,
    axis: &Segment,
    delta: Radius,
    tol: &Tolerance,
) -> Result<Option<ParamInterval>> {
    check_dims(carrier.dim(), axis.dim())?;
    require_carrier(carrier)?;
    if axis.is_degenerate() {
        return Err(Error::Degenerate("cylinder axis has coincident endpoints"));
    }
    Ok(capcyl_interval(
        carrier.a.coords(),
        carrier.b.coords(),
        axis.a.coords(),
        axis.b.coords(),
        delta.get(),
        tol,
    ))
}

/// Parameters of `line(carrier) ∩ D(e, delta)`; a degenerate `e` is a ball.
pub fn line_stadium_intersection(
    carrier: &Segment,
    e: &Segment,
    delta: Radius,
    tol: &Tolerance,
) -> Result<Option<ParamInterval>> {
    check_dims(carrier.dim(), e.dim())?;
    require_carrier(carrier)?;
    Ok(stadium_interval(
        carrier.a.coords(),
        carrier.b.coords(),
        e.a.coords(),
        e.b.coords(),
        delta.get(),
        tol,
    ))
}

/// Whether the carrier line meets `D(e1, delta) ∩ D(e2, delta)`.
pub fn line_double_stadium_intersects(
    carrier: &Segment,
    e1: &Segment,
    e2: &Segment,
    delta: Radius,
    tol: &Tolerance,
) -> Result<bool> {
    check_dims(carrier.dim(), e2.dim())?;
    let first = line_stadium_intersection(carrier, e1, delta, tol)?;
    let second = line_stadium_intersection(carrier, e2, delta, tol)?;
    Ok(match (first, second) {
        (Some(a), Some(b)) => a.overlaps(&b, tol),
        _ => false,
    })
}

/// Three-way order of two parameters on the carrier's directed line.
pub fn order_on_line(carrier: &Segment, t1: f64, t2: f64, tol: &Tolerance) -> Result<LineOrder> {
    require_carrier(carrier)?;
    if !t1.is_finite() || !t2.is_finite() {
        return Err(Error::NonFinite(format!("line parameters {t1}, {t2}")));
    }
    Ok(match tol.compare(t1, t2) {
        std::cmp::Ordering::Less => LineOrder::Before,
        std::cmp::Ordering::Equal => LineOrder::Equal,
        std::cmp::Ordering::Greater => LineOrder::After,
    })
}
