use super::Tolerance;

/// Closed parameter interval `[lo, hi]` along a directed line `p + t (q - p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamInterval {
    lo: f64,
    hi: f64,
}

impl ParamInterval {
    /// Builds `[lo, hi]`. A reversed pair that lies within the band collapses
    /// to a single point; anything else reversed is a caller bug.
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(!lo.is_nan() && !hi.is_nan());
        if lo <= hi {
            Self { lo, hi }
        } else {
            debug_assert!(lo - hi <= 1e-6 * lo.abs().max(1.0), "reversed interval {lo} > {hi}");
            let mid = 0.5 * (lo + hi);
            Self { lo: mid, hi: mid }
        }
    }

    pub const UNIT: ParamInterval = ParamInterval { lo: 0.0, hi: 1.0 };

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }

    /// Intersection, allowing touching intervals to meet within the band.
    pub fn intersect(&self, other: &ParamInterval, tol: &Tolerance) -> Option<ParamInterval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if tol.le(lo, hi) {
            Some(ParamInterval::new(lo.min(hi), hi.max(lo)))
        } else {
            None
        }
    }

    pub fn overlaps(&self, other: &ParamInterval, tol: &Tolerance) -> bool {
        self.intersect(other, tol).is_some()
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &ParamInterval) -> ParamInterval {
        ParamInterval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn is_subset_of(&self, other: &ParamInterval, tol: &Tolerance) -> bool {
        tol.le(other.lo, self.lo) && tol.le(self.hi, other.hi)
    }

    pub fn clip_unit(&self, tol: &Tolerance) -> Option<ParamInterval> {
        self.intersect(&ParamInterval::UNIT, tol)
    }
}

/// Returns true when the union of `pieces` covers `target`, merging pieces
/// whose gaps are within the band.
pub fn covers(target: &ParamInterval, pieces: &[ParamInterval], tol: &Tolerance) -> bool {
    let mut sorted: Vec<ParamInterval> = pieces.iter().filter_map(|p| p.intersect(target, tol)).collect();
    sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let mut reach = target.lo;
    if !sorted.first().is_some_and(|p| tol.le(p.lo, reach)) {
        return false;
    }
    for piece in &sorted {
        if !tol.le(piece.lo, reach) {
            return false;
        }
        reach = reach.max(piece.hi);
        if tol.ge(reach, target.hi) {
            return true;
        }
    }
    tol.ge(reach, target.hi)
}
