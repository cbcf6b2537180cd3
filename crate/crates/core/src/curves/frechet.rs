use std::collections::VecDeque;

use super::{check_pair, DecisionResult, PolygonalCurve};
use crate::error::Result;
use crate::geometry::{ball_interval, dist2, ParamInterval, Radius, Tolerance};

/// Free-space boundaries of the `(m - 1) x (k - 1)` cell grid.
///
/// `vert(i, j)` is the free part of the left boundary of cell `(i, j)`: the
/// parameters on edge `j` of `Q` within `delta` of vertex `i` of `P`.
/// `horiz(i, j)` is the bottom boundary of cell `(i, j)`: parameters on edge
/// `i` of `P` within `delta` of vertex `j` of `Q`. Free space inside a cell is
/// convex, so a cell connects any two free points on its boundary.
struct FreeSpace {
    m: usize,
    k: usize,
    vert: Vec<Option<ParamInterval>>,
    horiz: Vec<Option<ParamInterval>>,
}

fn free_on_edge(a: &[f64], b: &[f64], center: &[f64], delta: f64, tol: &Tolerance) -> Option<ParamInterval> {
    if a == b {
        return tol.le(dist2(a, center).sqrt(), delta).then_some(ParamInterval::UNIT);
    }
    ball_interval(a, b, center, delta, tol).and_then(|iv| iv.clip_unit(tol))
}

impl FreeSpace {
    fn new(p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> Self {
        let (m, k) = (p.len(), q.len());
        let pv = p.vertices();
        let qv = q.vertices();
        let mut vert = Vec::with_capacity(m * (k - 1));
        for pi in pv {
            for w in qv.windows(2) {
                vert.push(free_on_edge(w[0].coords(), w[1].coords(), pi.coords(), delta, tol));
            }
        }
        let mut horiz = Vec::with_capacity((m - 1) * k);
        for w in pv.windows(2) {
            for qj in qv {
                horiz.push(free_on_edge(w[0].coords(), w[1].coords(), qj.coords(), delta, tol));
            }
        }
        Self { m, k, vert, horiz }
    }

    fn vert(&self, i: usize, j: usize) -> Option<ParamInterval> {
        self.vert[i * (self.k - 1) + j]
    }

    fn horiz(&self, i: usize, j: usize) -> Option<ParamInterval> {
        self.horiz[i * self.k + j]
    }
}

/// Part of `free` at or after `from`, the monotone passage through a cell.
fn after(free: ParamInterval, from: f64, tol: &Tolerance) -> Option<ParamInterval> {
    let lo = free.lo().max(from);
    tol.le(lo, free.hi())
        .then(|| ParamInterval::new(lo.min(free.hi()), free.hi()))
}

fn endpoints_close(p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> bool {
    tol.le(p.first().distance(q.first()), delta) && tol.le(p.last().distance(q.last()), delta)
}

/// If one curve is a single point every reparameterization pairs that point
/// with all of the other curve, whose farthest point is a vertex.
fn point_curve_verdict(p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> Option<bool> {
    let (point, other) = if p.len() == 1 {
        (p.first(), q)
    } else if q.len() == 1 {
        (q.first(), p)
    } else {
        return None;
    };
    Some(other.vertices().iter().all(|v| tol.le(v.distance(point), delta)))
}

/// `d_F(P, Q) <= delta` by reachability in the free-space diagram.
pub(crate) fn frechet_verdict(p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> bool {
    if let Some(v) = point_curve_verdict(p, q, delta, tol) {
        return v;
    }
    if !endpoints_close(p, q, delta, tol) {
        return false;
    }
    let fs = FreeSpace::new(p, q, delta, tol);
    let (m, k) = (fs.m, fs.k);
    let touches = |iv: Option<ParamInterval>, t: f64| iv.is_some_and(|iv| tol.le(iv.lo(), t) && tol.ge(iv.hi(), t));

    // Reachable parts of the same boundaries as in `FreeSpace`.
    let mut rv: Vec<Option<ParamInterval>> = vec![None; m * (k - 1)];
    let mut rh: Vec<Option<ParamInterval>> = vec![None; (m - 1) * k];

    // Along the outer boundaries the path may only move while pinned to the
    // first vertex of the other curve.
    for j in 0..k - 1 {
        let free = fs.vert(0, j);
        let open = if j == 0 { true } else { touches(rv[j - 1], 1.0) };
        if open && touches(free, 0.0) {
            rv[j] = free;
        } else {
            break;
        }
    }
    for i in 0..m - 1 {
        let free = fs.horiz(i, 0);
        let open = if i == 0 { true } else { touches(rh[(i - 1) * k], 1.0) };
        if open && touches(free, 0.0) {
            rh[i * k] = free;
        } else {
            break;
        }
    }

    for i in 0..m - 1 {
        for j in 0..k - 1 {
            let left = rv[i * (k - 1) + j];
            let bottom = rh[i * k + j];
            if left.is_none() && bottom.is_none() {
                continue;
            }
            // Right boundary: fully reachable from the bottom, only above the
            // entry height from the left.
            rv[(i + 1) * (k - 1) + j] = fs.vert(i + 1, j).and_then(|free| match (bottom, left) {
                (Some(_), _) => Some(free),
                (None, Some(l)) => after(free, l.lo(), tol),
                (None, None) => None,
            });
            rh[i * k + j + 1] = fs.horiz(i, j + 1).and_then(|free| match (left, bottom) {
                (Some(_), _) => Some(free),
                (None, Some(b)) => after(free, b.lo(), tol),
                (None, None) => None,
            });
        }
    }

    rv[(m - 1) * (k - 1) + k - 2].is_some() || rh[(m - 2) * k + k - 1].is_some()
}

/// `d_wF(P, Q) <= delta`: the free cells connect the two corners, with no
/// monotonicity requirement on the path.
pub(crate) fn weak_frechet_verdict(p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> bool {
    if let Some(v) = point_curve_verdict(p, q, delta, tol) {
        return v;
    }
    if !endpoints_close(p, q, delta, tol) {
        return false;
    }
    let fs = FreeSpace::new(p, q, delta, tol);
    let (cols, rows) = (fs.m - 1, fs.k - 1);
    let mut seen = vec![false; cols * rows];
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    seen[0] = true;
    while let Some((i, j)) = queue.pop_front() {
        if (i, j) == (cols - 1, rows - 1) {
            return true;
        }
        let mut visit = |ni: usize, nj: usize, shared: Option<ParamInterval>| {
            if shared.is_some() && !seen[ni * rows + nj] {
                seen[ni * rows + nj] = true;
                queue.push_back((ni, nj));
            }
        };
        if i + 1 < cols {
            visit(i + 1, j, fs.vert(i + 1, j));
        }
        if i > 0 {
            visit(i - 1, j, fs.vert(i, j));
        }
        if j + 1 < rows {
            visit(i, j + 1, fs.horiz(i, j + 1));
        }
        if j > 0 {
            visit(i, j - 1, fs.horiz(i, j));
        }
    }
    false
}

/// Decides `d_F(P, Q) <= delta` for the Fréchet distance.
pub fn decide_frechet(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    delta: Radius,
    tol: &Tolerance,
) -> Result<DecisionResult> {
    check_pair(p, q)?;
    Ok(DecisionResult::probe(delta, tol, |d| frechet_verdict(p, q, d, tol)))
}

/// Decides `d_wF(P, Q) <= delta` for the weak Fréchet distance.
pub fn decide_weak_frechet(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    delta: Radius,
    tol: &Tolerance,
) -> Result<DecisionResult> {
    check_pair(p, q)?;
    Ok(DecisionResult::probe(delta, tol, |d| {
        weak_frechet_verdict(p, q, d, tol)
    }))
}
