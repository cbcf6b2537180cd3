use super::{
    check_pair, directed_hausdorff_verdict, frechet_verdict, weak_frechet_verdict, DecisionResult, PolygonalCurve,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{Radius, Tolerance};

/// Continuous curve measures that have a decider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveMeasure {
    Hausdorff,
    DirectedHausdorff,
    Frechet,
    WeakFrechet,
}

impl CurveMeasure {
    pub(crate) fn verdict(self, p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> bool {
        match self {
            CurveMeasure::Hausdorff => {
                directed_hausdorff_verdict(p, q, delta, tol) && directed_hausdorff_verdict(q, p, delta, tol)
            }
            CurveMeasure::DirectedHausdorff => directed_hausdorff_verdict(p, q, delta, tol),
            CurveMeasure::Frechet => frechet_verdict(p, q, delta, tol),
            CurveMeasure::WeakFrechet => weak_frechet_verdict(p, q, delta, tol),
        }
    }
}

/// Decides `measure(P, Q) <= delta`.
pub fn decide(
    measure: CurveMeasure,
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    delta: Radius,
    tol: &Tolerance,
) -> Result<DecisionResult> {
    check_pair(p, q)?;
    Ok(DecisionResult::probe(delta, tol, |d| measure.verdict(p, q, d, tol)))
}

/// Decides many independent pairs, in parallel when `exec` allows it.
/// Results keep the input order.
pub fn decide_batch(
    measure: CurveMeasure,
    pairs: &[(PolygonalCurve, PolygonalCurve)],
    delta: Radius,
    tol: &Tolerance,
    exec: Execution,
) -> Vec<Result<DecisionResult>> {
    exec.map(pairs, |(p, q)| decide(measure, p, q, delta, tol))
}

/// Bisection over `delta` with the decider for `measure`.
///
/// The bracket starts at `[0, max vertex distance]` and is halved until its
/// width is at most `eps`, so the returned upper end `d` satisfies
/// `decide(d) = true` and `decide(d - eps) = false` up to the band.
pub fn compute_distance(p: &PolygonalCurve, q: &PolygonalCurve, measure: CurveMeasure, tol: &Tolerance) -> Result<f64> {
    check_pair(p, q)?;
    bisect(p.max_vertex_distance(q), tol, |d| measure.verdict(p, q, d, tol))
}

pub(crate) const MAX_BISECTION_STEPS: usize = 64;

pub(crate) fn bisect<F: Fn(f64) -> bool>(upper: f64, tol: &Tolerance, verdict: F) -> Result<f64> {
    if verdict(0.0) {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0, upper);
    if !verdict(hi) {
        return Err(Error::NoConvergence { lo, hi });
    }
    for _ in 0..MAX_BISECTION_STEPS {
        if hi - lo <= tol.eps() {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if verdict(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
