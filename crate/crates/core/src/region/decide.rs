use super::voronoi::candidates_raw;
use super::{classify::classify_raw, contains_raw, PolygonalRegion};
use crate::curves::{bisect, DecisionResult};
use crate::error::Result;
use crate::exec::Execution;
use crate::geometry::{covers, dist_point_segment, stadium_interval, ParamInterval, Radius, Tolerance};

type Edge<'a> = (&'a [f64], &'a [f64]);

/// Everything about `d_dH(P, Q) <= delta` that does not depend on `delta`:
/// the parts of `∂P` outside `Q`, and the clearances from `∂Q` of the
/// Voronoi-vertex candidates of `∂Q` lying in `P \ Q`.
///
/// Building it costs one classification per edge of `∂P` and one candidate
/// enumeration per triple of edges of `∂Q`; afterwards every `delta` query
/// only runs the stadium coverage sweep.
pub struct DirectedRegionDecider<'a> {
    q_edges: Vec<Edge<'a>>,
    outside: Vec<(Edge<'a>, Vec<ParamInterval>)>,
    max_clearance: Option<f64>,
    tol: Tolerance,
}

impl<'a> DirectedRegionDecider<'a> {
    pub fn new(p: &'a PolygonalRegion, q: &'a PolygonalRegion, tol: &Tolerance, exec: Execution) -> Self {
        let q_edges = q.raw_boundary();
        let p_edges = p.raw_boundary();

        let outside = exec
            .map(&p_edges, |&(a, b)| {
                let (cuts, flags) = classify_raw(a, b, q, tol);
                let bounds: Vec<f64> = std::iter::once(0.0).chain(cuts).chain(std::iter::once(1.0)).collect();
                let pieces: Vec<ParamInterval> = flags
                    .iter()
                    .enumerate()
                    .filter(|(_, &inside)| !inside)
                    .map(|(i, _)| ParamInterval::new(bounds[i], bounds[i + 1]))
                    .collect();
                ((a, b), pieces)
            })
            .into_iter()
            .filter(|(_, pieces)| !pieces.is_empty())
            .collect();

        let k = q_edges.len();
        let max_clearance = exec
            .map_range(k, |i| {
                let mut best: Option<f64> = None;
                for j in i + 1..k {
                    for l in j + 1..k {
                        let cands = candidates_raw([q_edges[i], q_edges[j], q_edges[l]], [i, j, l], tol);
                        for c in cands {
                            let v = c.location.coords();
                            if !contains_raw(p, v, tol) || contains_raw(q, v, tol) {
                                continue;
                            }
                            let clearance = q_edges
                                .iter()
                                .map(|(u, w)| dist_point_segment(v, u, w))
                                .fold(f64::INFINITY, f64::min);
                            best = Some(best.map_or(clearance, |b| b.max(clearance)));
                        }
                    }
                }
                best
            })
            .into_iter()
            .flatten()
            .reduce(f64::max);

        Self {
            q_edges,
            outside,
            max_clearance,
            tol: *tol,
        }
    }

    /// Predicate (B): every point of `∂P` outside `Q` is within `delta` of `∂Q`.
    pub fn boundary(&self, delta: f64) -> bool {
        let tol = &self.tol;
        let mut hits = Vec::with_capacity(self.q_edges.len());
        self.outside.iter().all(|&((a, b), ref pieces)| {
            hits.clear();
            hits.extend(
                self.q_edges
                    .iter()
                    .filter_map(|(u, v)| stadium_interval(a, b, u, v, delta, tol)),
            );
            pieces.iter().all(|piece| covers(piece, &hits, tol))
        })
    }

    /// Predicate (I): no candidate of `P \ Q` is farther than `delta` from `∂Q`.
    pub fn interior(&self, delta: f64) -> bool {
        self.max_clearance.is_none_or(|r| self.tol.le(r, delta))
    }

    pub fn verdict(&self, delta: f64) -> bool {
        self.boundary(delta) && self.interior(delta)
    }

    pub fn decide(&self, delta: Radius) -> DecisionResult {
        DecisionResult::probe(delta, &self.tol, |d| self.verdict(d))
    }

    /// Largest clearance from `∂Q` among candidates in `P \ Q`.
    pub fn interior_clearance(&self) -> Option<f64> {
        self.max_clearance
    }
}

pub fn boundary_predicate_b(p: &PolygonalRegion, q: &PolygonalRegion, delta: Radius, tol: &Tolerance) -> bool {
    DirectedRegionDecider::new(p, q, tol, Execution::default()).boundary(delta.get())
}

pub fn interior_predicate_i(p: &PolygonalRegion, q: &PolygonalRegion, delta: Radius, tol: &Tolerance) -> bool {
    DirectedRegionDecider::new(p, q, tol, Execution::default()).interior(delta.get())
}

/// Decides `d_dH(P, Q) <= delta` as (B) ∧ (I).
pub fn decide_directed_hausdorff_region(
    p: &PolygonalRegion,
    q: &PolygonalRegion,
    delta: Radius,
    tol: &Tolerance,
) -> DecisionResult {
    DirectedRegionDecider::new(p, q, tol, Execution::default()).decide(delta)
}

/// Decides `d_H(P, Q) <= delta`, both directions.
pub fn decide_hausdorff_region(
    p: &PolygonalRegion,
    q: &PolygonalRegion,
    delta: Radius,
    tol: &Tolerance,
) -> DecisionResult {
    let forward = DirectedRegionDecider::new(p, q, tol, Execution::default());
    let backward = DirectedRegionDecider::new(q, p, tol, Execution::default());
    DecisionResult::probe(delta, tol, |d| forward.verdict(d) && backward.verdict(d))
}

/// Directed region Hausdorff distance by bisection on `[0, max vertex distance]`.
pub fn compute_directed_hausdorff_region(p: &PolygonalRegion, q: &PolygonalRegion, tol: &Tolerance) -> Result<f64> {
    let decider = DirectedRegionDecider::new(p, q, tol, Execution::default());
    bisect(p.max_vertex_distance(q), tol, |d| decider.verdict(d))
}

/// Region Hausdorff distance by bisection on `[0, max vertex distance]`.
pub fn compute_hausdorff_region(p: &PolygonalRegion, q: &PolygonalRegion, tol: &Tolerance) -> Result<f64> {
    let forward = DirectedRegionDecider::new(p, q, tol, Execution::default());
    let backward = DirectedRegionDecider::new(q, p, tol, Execution::default());
    bisect(p.max_vertex_distance(q), tol, |d| {
        forward.verdict(d) && backward.verdict(d)
    })
}
