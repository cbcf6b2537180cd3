use super::{contains_raw, PolygonalRegion};
use crate::error::{Error, Result};
use crate::geometry::{segment_hit, Hit, ParamInterval, Segment, Tolerance};

/// An edge split at its contacts with a region boundary. Sub-interval `i`
/// runs between consecutive entries of `[0, cut_params.., 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeClassification {
    pub edge: Segment,
    pub cut_params: Vec<f64>,
    pub inside_flags: Vec<bool>,
}

impl EdgeClassification {
    /// Sub-intervals with their inside flags.
    pub fn pieces(&self) -> impl Iterator<Item = (ParamInterval, bool)> + '_ {
        let bounds: Vec<f64> = std::iter::once(0.0)
            .chain(self.cut_params.iter().copied())
            .chain(std::iter::once(1.0))
            .collect();
        self.inside_flags
            .iter()
            .enumerate()
            .map(move |(i, &f)| (ParamInterval::new(bounds[i], bounds[i + 1]), f))
    }
}

/// Interior cut parameters and per-piece flags for edge `[a, b]`.
pub(crate) fn classify_raw(a: &[f64], b: &[f64], region: &PolygonalRegion, tol: &Tolerance) -> (Vec<f64>, Vec<bool>) {
    let len = (b[0] - a[0]).hypot(b[1] - a[1]);
    if len == 0.0 {
        return (vec![], vec![contains_raw(region, a, tol)]);
    }
    let slack = tol.band(len, 0.0) / len;
    let mut cuts = Vec::new();
    for (u, v) in region.raw_boundary() {
        match segment_hit(a, b, u, v, tol) {
            Hit::None => {}
            Hit::Point { t, .. } => cuts.push(t),
            Hit::Overlap { t0, t1, .. } => cuts.extend([t0, t1]),
        }
    }
    cuts.retain(|&t| t > slack && t < 1.0 - slack);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|later, earlier| *later - *earlier <= slack);

    let mut flags = Vec::with_capacity(cuts.len() + 1);
    let mut lo = 0.0;
    for &hi in cuts.iter().chain(std::iter::once(&1.0)) {
        let t = 0.5 * (lo + hi);
        let mid = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
        flags.push(contains_raw(region, &mid, tol));
        lo = hi;
    }
    (cuts, flags)
}

/// Splits `e` where it meets `∂R` (crossings and both ends of collinear
/// overlaps) and flags each piece by probing its midpoint.
pub fn classify_edge_against_region(
    e: &Segment,
    region: &PolygonalRegion,
    tol: &Tolerance,
) -> Result<EdgeClassification> {
    if e.dim() != 2 {
        return Err(Error::NotPlanar(e.dim()));
    }
    let (cut_params, inside_flags) = classify_raw(e.a.coords(), e.b.coords(), region, tol);
    Ok(EdgeClassification {
        edge: e.clone(),
        cut_params,
        inside_flags,
    })
}
