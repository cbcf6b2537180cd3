use super::{check_pair, DecisionResult, PolygonalCurve};
use crate::error::Result;
use crate::geometry::{covers, dist_point_segment, stadium_interval, ParamInterval, Radius, Tolerance};

/// `d_dH(P, Q) <= delta` as a plain verdict.
///
/// Each edge of `P` must be covered by the union of the stadiums around the
/// edges of `Q`. Intersecting the edge's line with each stadium gives one
/// interval per `Q` edge, so coverage is a one-dimensional sweep.
pub(crate) fn directed_hausdorff_verdict(p: &PolygonalCurve, q: &PolygonalCurve, delta: f64, tol: &Tolerance) -> bool {
    let targets = q.pieces();
    let mut hits = Vec::with_capacity(targets.len());
    p.pieces().into_iter().all(|(a, b)| {
        if a == b {
            return targets.iter().any(|(u, v)| tol.le(dist_point_segment(a, u, v), delta));
        }
        hits.clear();
        hits.extend(
            targets
                .iter()
                .filter_map(|(u, v)| stadium_interval(a, b, u, v, delta, tol)),
        );
        covers(&ParamInterval::UNIT, &hits, tol)
    })
}

/// Decides `d_dH(P, Q) <= delta` for the directed curve Hausdorff distance.
pub fn decide_directed_hausdorff_curve(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    delta: Radius,
    tol: &Tolerance,
) -> Result<DecisionResult> {
    check_pair(p, q)?;
    Ok(DecisionResult::probe(delta, tol, |d| {
        directed_hausdorff_verdict(p, q, d, tol)
    }))
}

/// Decides `d_H(P, Q) <= delta`, the maximum of both directed distances.
pub fn decide_hausdorff_curve(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    delta: Radius,
    tol: &Tolerance,
) -> Result<DecisionResult> {
    check_pair(p, q)?;
    Ok(DecisionResult::probe(delta, tol, |d| {
        directed_hausdorff_verdict(p, q, d, tol) && directed_hausdorff_verdict(q, p, d, tol)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::Margin;

    fn r(x: f64) -> Radius {
        Radius::new(x).unwrap()
    }

    #[test]
    fn parallel_segments() {
        let tol = Tolerance::default();
        let p = PolygonalCurve::xy(&[(0.0, 0.0), (1.0, 0.0)]);
        let q = PolygonalCurve::xy(&[(0.0, 1.0), (1.0, 1.0)]);
        assert!(decide_hausdorff_curve(&p, &q, r(1.0), &tol).unwrap().verdict);
        assert!(!decide_hausdorff_curve(&p, &q, r(0.99), &tol).unwrap().verdict);
        assert_eq!(
            decide_hausdorff_curve(&p, &q, r(1.0), &tol).unwrap().margin,
            Margin::NearBoundary
        );
        assert!(decide_hausdorff_curve(&p, &q, r(1.5), &tol).unwrap().is_robust());
    }

    #[test]
    fn directed_is_asymmetric() {
        let tol = Tolerance::default();
        let short = PolygonalCurve::xy(&[(0.0, 0.0), (1.0, 0.0)]);
        let long = PolygonalCurve::xy(&[(0.0, 0.0), (3.0, 0.0)]);
        assert!(
            decide_directed_hausdorff_curve(&short, &long, r(0.0), &tol)
                .unwrap()
                .verdict
        );
        assert!(
            !decide_directed_hausdorff_curve(&long, &short, r(1.9), &tol)
                .unwrap()
                .verdict
        );
        assert!(
            decide_directed_hausdorff_curve(&long, &short, r(2.0), &tol)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn gap_between_stadiums_is_detected() {
        let tol = Tolerance::default();
        // The midpoint of P is 1 away from both Q pieces; endpoints are close.
        let p = PolygonalCurve::xy(&[(0.0, 0.0), (4.0, 0.0)]);
        let q = PolygonalCurve::xy(&[(0.0, 0.5), (1.0, 0.5), (2.0, 3.0), (3.0, 0.5), (4.0, 0.5)]);
        let exact = (1.0f64 + 0.25).sqrt();
        assert!(
            !decide_directed_hausdorff_curve(&p, &q, r(0.99 * exact), &tol)
                .unwrap()
                .verdict
        );
        assert!(
            decide_directed_hausdorff_curve(&p, &q, r(1.01 * exact), &tol)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn single_vertex_curves() {
        let tol = Tolerance::default();
        let p = PolygonalCurve::xy(&[(0.0, 0.0)]);
        let q = PolygonalCurve::xy(&[(3.0, 4.0)]);
        assert!(decide_hausdorff_curve(&p, &q, r(5.0), &tol).unwrap().verdict);
        assert!(!decide_hausdorff_curve(&p, &q, r(4.9), &tol).unwrap().verdict);
        let seg = PolygonalCurve::xy(&[(-1.0, 1.0), (1.0, 1.0)]);
        assert!(decide_directed_hausdorff_curve(&p, &seg, r(1.0), &tol).unwrap().verdict);
        assert!(!decide_directed_hausdorff_curve(&seg, &p, r(1.0), &tol).unwrap().verdict);
    }

    #[test]
    fn dimension_mismatch() {
        let tol = Tolerance::default();
        let p = PolygonalCurve::xy(&[(0.0, 0.0)]);
        let q = PolygonalCurve::from_coords(vec![vec![0.0, 0.0, 0.0]]).unwrap();
        assert!(decide_hausdorff_curve(&p, &q, r(1.0), &tol).is_err());
    }
}
