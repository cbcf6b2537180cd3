use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curves::{self, CurveMeasure, PolygonalCurve};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{Radius, Tolerance};
use crate::region::{self, DirectedRegionDecider, PolygonalRegion};

/// Ground sets are capped so that the `2^n` subset table stays small.
pub const MAX_GROUND: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub enum GeometryObject {
    Curve(PolygonalCurve),
    Region(PolygonalRegion),
}

impl GeometryObject {
    pub fn kind(&self) -> &'static str {
        match self {
            GeometryObject::Curve(_) => "curve",
            GeometryObject::Region(_) => "region",
        }
    }

    fn translated(&self, dx: f64) -> Result<Self> {
        Ok(match self {
            GeometryObject::Curve(c) => {
                GeometryObject::Curve(PolygonalCurve::from_coords(c.vertices().iter().map(|v| {
                    let mut x = v.coords().to_vec();
                    x[0] += dx;
                    x
                }))?)
            }
            GeometryObject::Region(r) => GeometryObject::Region(r.map_vertices(|x, y| (x + dx, y))?),
        })
    }

    fn coords(&self) -> Vec<&[f64]> {
        match self {
            GeometryObject::Curve(c) => c.vertices().iter().map(|v| v.coords()).collect(),
            GeometryObject::Region(r) => r.vertices().map(|v| v.coords()).collect(),
        }
    }
}

/// A labelled ground element or center.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub id: String,
    pub object: GeometryObject,
}

impl Element {
    pub fn new(id: impl Into<String>, object: GeometryObject) -> Self {
        Self { id: id.into(), object }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Hausdorff,
    Frechet,
    WeakFrechet,
    DiscreteHausdorff,
    DiscreteFrechet,
    Dtw,
    HausdorffRegion,
}

impl Measure {
    pub const ALL: [Measure; 7] = [
        Measure::Hausdorff,
        Measure::Frechet,
        Measure::WeakFrechet,
        Measure::DiscreteHausdorff,
        Measure::DiscreteFrechet,
        Measure::Dtw,
        Measure::HausdorffRegion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Hausdorff => "hausdorff",
            Measure::Frechet => "frechet",
            Measure::WeakFrechet => "weak-frechet",
            Measure::DiscreteHausdorff => "discrete-hausdorff",
            Measure::DiscreteFrechet => "discrete-frechet",
            Measure::Dtw => "dtw",
            Measure::HausdorffRegion => "hausdorff-region",
        }
    }

    /// Kind of object the measure applies to.
    pub fn kind(self) -> &'static str {
        match self {
            Measure::HausdorffRegion => "region",
            _ => "curve",
        }
    }

    fn check(self, obj: &GeometryObject) -> Result<()> {
        if obj.kind() == self.kind() {
            Ok(())
        } else {
            Err(Error::MeasureMismatch {
                measure: self.name(),
                kind: obj.kind(),
            })
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Measure::ALL.into_iter().find(|m| m.name() == norm).ok_or_else(|| {
            let names: Vec<_> = Measure::ALL.iter().map(|m| m.name()).collect();
            format!("unknown measure '{s}', expected one of: {}", names.join(", "))
        })
    }
}

/// `measure(x, center)`. Continuous measures are computed by bisection.
pub fn distance(measure: Measure, x: &GeometryObject, center: &GeometryObject, tol: &Tolerance) -> Result<f64> {
    measure.check(x)?;
    measure.check(center)?;
    match (x, center) {
        (GeometryObject::Curve(p), GeometryObject::Curve(q)) => match measure {
            Measure::Hausdorff => curves::compute_distance(p, q, CurveMeasure::Hausdorff, tol),
            Measure::Frechet => curves::compute_distance(p, q, CurveMeasure::Frechet, tol),
            Measure::WeakFrechet => curves::compute_distance(p, q, CurveMeasure::WeakFrechet, tol),
            Measure::DiscreteHausdorff => curves::discrete_hausdorff(p, q),
            Measure::DiscreteFrechet => curves::discrete_frechet(p, q),
            Measure::Dtw => curves::dtw(p, q).map(|(v, _)| v),
            Measure::HausdorffRegion => unreachable!("checked kind"),
        },
        (GeometryObject::Region(p), GeometryObject::Region(q)) => region::compute_hausdorff_region(p, q, tol),
        _ => unreachable!("checked kind"),
    }
}

/// Whether `x` lies in the closed ball of radius `delta` around `center`,
/// using the public deciders.
pub fn ball_contains(
    measure: Measure,
    x: &GeometryObject,
    center: &GeometryObject,
    delta: f64,
    tol: &Tolerance,
) -> Result<bool> {
    measure.check(x)?;
    measure.check(center)?;
    let r = Radius::new(delta)?;
    Ok(match (x, center) {
        (GeometryObject::Curve(p), GeometryObject::Curve(q)) => match measure {
            Measure::Hausdorff => curves::decide_hausdorff_curve(p, q, r, tol)?.verdict,
            Measure::Frechet => curves::decide_frechet(p, q, r, tol)?.verdict,
            Measure::WeakFrechet => curves::decide_weak_frechet(p, q, r, tol)?.verdict,
            Measure::DiscreteHausdorff => tol.le(curves::discrete_hausdorff(p, q)?, delta),
            Measure::DiscreteFrechet => tol.le(curves::discrete_frechet(p, q)?, delta),
            Measure::Dtw => tol.le(curves::dtw(p, q)?.0, delta),
            Measure::HausdorffRegion => unreachable!("checked kind"),
        },
        (GeometryObject::Region(p), GeometryObject::Region(q)) => region::decide_hausdorff_region(p, q, r, tol).verdict,
        _ => unreachable!("checked kind"),
    })
}

/// Ball test for one (element, center) pair with the radius-independent
/// work done once.
enum PairTest<'a> {
    Curve(CurveMeasure, &'a PolygonalCurve, &'a PolygonalCurve),
    Value(f64),
    Region(DirectedRegionDecider<'a>, DirectedRegionDecider<'a>),
}

impl<'a> PairTest<'a> {
    fn new(measure: Measure, x: &'a GeometryObject, c: &'a GeometryObject, tol: &Tolerance) -> Result<Self> {
        measure.check(x)?;
        measure.check(c)?;
        Ok(match (x, c) {
            (GeometryObject::Curve(p), GeometryObject::Curve(q)) => {
                if p.dim() != q.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: p.dim(),
                        found: q.dim(),
                    });
                }
                match measure {
                    Measure::Hausdorff => PairTest::Curve(CurveMeasure::Hausdorff, p, q),
                    Measure::Frechet => PairTest::Curve(CurveMeasure::Frechet, p, q),
                    Measure::WeakFrechet => PairTest::Curve(CurveMeasure::WeakFrechet, p, q),
                    _ => PairTest::Value(distance(measure, x, c, tol)?),
                }
            }
            (GeometryObject::Region(p), GeometryObject::Region(q)) => PairTest::Region(
                DirectedRegionDecider::new(p, q, tol, Execution::Sequential),
                DirectedRegionDecider::new(q, p, tol, Execution::Sequential),
            ),
            _ => unreachable!("checked kind"),
        })
    }

    fn contains(&self, delta: f64, tol: &Tolerance) -> bool {
        match self {
            PairTest::Curve(m, p, q) => m.verdict(p, q, delta, tol),
            PairTest::Value(v) => tol.le(*v, delta),
            PairTest::Region(f, b) => f.verdict(delta) && b.verdict(delta),
        }
    }
}

/// A range realizing one subset: the ball of `radius` around `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub center: Element,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShatterReport {
    pub measure: Measure,
    pub ground_ids: Vec<String>,
    pub shattered: bool,
    /// First witness found per subset; bit `i` stands for ground element `i`.
    pub witnesses: BTreeMap<u32, Witness>,
    pub missing_subsets: Vec<u32>,
    /// Number of (center, radius) ranges evaluated.
    pub ranges_tried: usize,
}

fn check_ground(ground: &[Element], measure: Measure) -> Result<()> {
    if ground.is_empty() {
        return Err(Error::Empty("ground set"));
    }
    if ground.len() > MAX_GROUND {
        return Err(Error::TooLarge {
            what: "ground set",
            size: ground.len(),
            limit: MAX_GROUND,
        });
    }
    ground.iter().try_for_each(|g| measure.check(&g.object))
}

struct Table {
    n: usize,
    witnesses: BTreeMap<u32, Witness>,
    ranges_tried: usize,
}

impl Table {
    fn new(n: usize) -> Self {
        Self {
            n,
            witnesses: BTreeMap::new(),
            ranges_tried: 0,
        }
    }

    fn complete(&self) -> bool {
        self.witnesses.len() == 1usize << self.n
    }

    fn record(&mut self, mask: u32, center: &Element, radius: f64) {
        self.ranges_tried += 1;
        self.witnesses.entry(mask).or_insert_with(|| Witness {
            center: center.clone(),
            radius,
        });
    }

    fn finish(self, measure: Measure, ground: &[Element]) -> ShatterReport {
        let missing_subsets: Vec<u32> = (0..1u32 << self.n)
            .filter(|m| !self.witnesses.contains_key(m))
            .collect();
        ShatterReport {
            measure,
            ground_ids: ground.iter().map(|g| g.id.clone()).collect(),
            shattered: missing_subsets.is_empty(),
            witnesses: self.witnesses,
            missing_subsets,
            ranges_tried: self.ranges_tried,
        }
    }
}

/// Masks of all `radii` around one center.
fn masks_for(
    center: &Element,
    ground: &[Element],
    radii: &[f64],
    measure: Measure,
    tol: &Tolerance,
) -> Result<Vec<u32>> {
    let tests = ground
        .iter()
        .map(|g| PairTest::new(measure, &g.object, &center.object, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(radii
        .iter()
        .map(|&r| {
            tests
                .iter()
                .enumerate()
                .filter(|(_, t)| t.contains(r, tol))
                .fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .collect())
}

/// Tries every `(center, radius)` pair and records which subsets of
/// `ground` the balls cut out. Evaluation over centers may run in parallel;
/// witnesses are merged in center-major, radius-minor order.
pub fn shatter_check(
    ground: &[Element],
    centers: &[Element],
    radii: &[f64],
    measure: Measure,
    tol: &Tolerance,
    exec: Execution,
) -> Result<ShatterReport> {
    check_ground(ground, measure)?;
    for &r in radii {
        Radius::new(r)?;
    }
    let all = exec.map(centers, |c| masks_for(c, ground, radii, measure, tol));
    let mut table = Table::new(ground.len());
    for (center, masks) in centers.iter().zip(all) {
        for (&r, mask) in radii.iter().zip(masks?) {
            table.record(mask, center, r);
        }
    }
    Ok(table.finish(measure, ground))
}

/// Re-derives each witness's subset with independent decider calls and
/// returns the masks that fail to reproduce.
pub fn verify_report(report: &ShatterReport, ground: &[Element], tol: &Tolerance) -> Result<Vec<u32>> {
    let mut bad = Vec::new();
    for (&mask, w) in &report.witnesses {
        let mut got = 0u32;
        for (i, g) in ground.iter().enumerate() {
            if ball_contains(report.measure, &g.object, &w.center.object, w.radius, tol)? {
                got |= 1 << i;
            }
        }
        if got != mask {
            bad.push(mask);
        }
    }
    Ok(bad)
}

fn bounding_scale(ground: &[Element]) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for g in ground {
        for c in g.object.coords() {
            for &x in c {
                lo = lo.min(x);
                hi = hi.max(x);
            }
        }
    }
    (hi - lo).max(1.0)
}

fn jittered(obj: &GeometryObject, sigma: f64, rng: &mut ChaCha8Rng) -> Result<GeometryObject> {
    Ok(match obj {
        GeometryObject::Curve(c) => GeometryObject::Curve(PolygonalCurve::from_coords(c.vertices().iter().map(|v| {
            v.coords()
                .iter()
                .map(|x| x + sigma * rng.gen_range(-1.0..=1.0))
                .collect::<Vec<_>>()
        }))?),
        GeometryObject::Region(r) => {
            // Rigid jitter keeps the region valid.
            let (dx, dy) = (sigma * rng.gen_range(-1.0..=1.0), sigma * rng.gen_range(-1.0..=1.0));
            let s = 1.0 + 0.5 * rng.gen_range(-1.0..=1.0);
            let (cx, cy) = {
                let n = r.outer().len() as f64;
                let sx: f64 = r.outer().vertices().iter().map(|v| v.x()).sum();
                let sy: f64 = r.outer().vertices().iter().map(|v| v.y()).sum();
                (sx / n, sy / n)
            };
            GeometryObject::Region(r.map_vertices(|x, y| (cx + s * (x - cx) + dx, cy + s * (y - cy) + dy))?)
        }
    })
}

/// Vertex-wise mean of the curves selected by `mask`, if they share a
/// vertex count.
fn subset_mean(ground: &[Element], mask: u32) -> Option<GeometryObject> {
    let chosen: Vec<&PolygonalCurve> = ground
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, g)| match &g.object {
            GeometryObject::Curve(c) => Some(c),
            GeometryObject::Region(_) => None,
        })
        .collect::<Option<_>>()?;
    let len = chosen.first()?.len();
    if chosen.iter().any(|c| c.len() != len) {
        return None;
    }
    let n = chosen.len() as f64;
    let coords = (0..len).map(|i| {
        let dim = chosen[0].dim();
        (0..dim)
            .map(|k| chosen.iter().map(|c| c.vertex(i).coords()[k]).sum::<f64>() / n)
            .collect::<Vec<_>>()
    });
    PolygonalCurve::from_coords(coords).ok().map(GeometryObject::Curve)
}

/// Radii separating consecutive distances from `center` to the ground.
fn critical_radii(dists: &[f64]) -> Vec<f64> {
    let mut d: Vec<f64> = dists.to_vec();
    d.sort_by(f64::total_cmp);
    d.dedup();
    let mut radii = Vec::with_capacity(d.len() + 1);
    radii.push(0.5 * d[0]);
    for w in d.windows(2) {
        radii.push(0.5 * (w[0] + w[1]));
    }
    radii.push(d[d.len() - 1] + 1.0);
    radii
}

/// Seeded search for centers and radii realizing every subset of `ground`.
///
/// Candidate centers are, in order: the ground elements, a far-away copy,
/// vertex-wise means of equal-length curve subsets (regions get scaled and
/// translated copies instead), then random perturbations of ground elements.
/// Around each center the radii sit midway between consecutive distances to
/// the ground elements. At most `budget` ranges are evaluated, and every
/// witness is re-verified before it is reported.
pub fn random_shatter_search(
    ground: &[Element],
    measure: Measure,
    budget: usize,
    seed: u64,
    tol: &Tolerance,
    exec: Execution,
) -> Result<ShatterReport> {
    check_ground(ground, measure)?;
    let n = ground.len();
    let scale = bounding_scale(ground);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut fixed: Vec<Element> = ground.to_vec();
    fixed.push(Element::new("far", ground[0].object.translated(10.0 * scale + 10.0)?));
    if n <= 12 {
        for mask in 1u32..(1 << n) {
            if mask.count_ones() >= 2 {
                if let Some(obj) = subset_mean(ground, mask) {
                    fixed.push(Element::new(format!("mean-{mask:b}"), obj));
                }
            }
        }
    }

    let mut table = Table::new(n);
    let mut generated = 0usize;
    let batch = 16;
    let mut pending = fixed.into_iter();
    while table.ranges_tried < budget && !table.complete() {
        let mut centers: Vec<Element> = pending.by_ref().take(batch).collect();
        while centers.len() < batch {
            let base = &ground[rng.gen_range(0..n)];
            let sigma = scale * [0.05, 0.2, 0.5][generated % 3];
            centers.push(Element::new(
                format!("perturbed-{generated}"),
                jittered(&base.object, sigma, &mut rng)?,
            ));
            generated += 1;
        }
        let masks = exec.map(&centers, |c| -> Result<(Vec<f64>, Vec<u32>)> {
            let dists = ground
                .iter()
                .map(|g| distance(measure, &g.object, &c.object, tol))
                .collect::<Result<Vec<_>>>()?;
            let radii = critical_radii(&dists);
            let masks = masks_for(c, ground, &radii, measure, tol)?;
            Ok((radii, masks))
        });
        for (center, result) in centers.iter().zip(masks) {
            let (radii, masks) = result?;
            for (r, mask) in radii.into_iter().zip(masks) {
                if table.ranges_tried >= budget || table.complete() {
                    break;
                }
                if !table.witnesses.contains_key(&mask) {
                    let ok = (0..n).all(|i| {
                        ball_contains(measure, &ground[i].object, &center.object, r, tol)
                            .map(|inside| inside == (mask & (1 << i) != 0))
                            .unwrap_or(false)
                    });
                    if !ok {
                        table.ranges_tried += 1;
                        continue;
                    }
                }
                table.record(mask, center, r);
            }
        }
    }
    Ok(table.finish(measure, ground))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(id: &str, x0: f64, y0: f64, x1: f64, y1: f64) -> Element {
        Element::new(id, GeometryObject::Curve(PolygonalCurve::xy(&[(x0, y0), (x1, y1)])))
    }

    #[test]
    fn single_element_with_far_center() {
        let tol = Tolerance::default();
        let c = seg("c", 0.0, 0.0, 1.0, 0.0);
        let far = seg("far", 100.0, 0.0, 101.0, 0.0);
        let report = shatter_check(
            std::slice::from_ref(&c),
            &[c.clone(), far],
            &[0.0],
            Measure::Hausdorff,
            &tol,
            Execution::Sequential,
        )
        .unwrap();
        assert!(report.shattered);
        assert_eq!(report.witnesses.len(), 2);
        assert!(report.missing_subsets.is_empty());
    }

    #[test]
    fn identical_elements_never_shatter() {
        let tol = Tolerance::default();
        let a = seg("a", 0.0, 0.0, 1.0, 0.0);
        let b = seg("b", 0.0, 0.0, 1.0, 0.0);
        let report = random_shatter_search(&[a, b], Measure::Frechet, 200, 7, &tol, Execution::Sequential).unwrap();
        assert!(!report.shattered);
        assert!(report.missing_subsets.contains(&0b01) && report.missing_subsets.contains(&0b10));
    }

    #[test]
    fn separated_segments_shatter() {
        let tol = Tolerance::default();
        let ground = [seg("a", 0.0, 0.0, 1.0, 0.0), seg("b", 5.0, 0.0, 6.0, 0.0)];
        for measure in [Measure::Hausdorff, Measure::DiscreteFrechet, Measure::Dtw] {
            let report = random_shatter_search(&ground, measure, 500, 1, &tol, Execution::Parallel).unwrap();
            assert!(report.shattered, "{measure}");
            assert!(verify_report(&report, &ground, &tol).unwrap().is_empty());
        }
    }

    #[test]
    fn search_is_deterministic() {
        let tol = Tolerance::default();
        let ground = [
            seg("a", 0.0, 0.0, 1.0, 0.0),
            seg("b", 0.0, 1.0, 1.0, 1.3),
            seg("c", 0.5, -1.0, 0.7, 2.0),
        ];
        let a = random_shatter_search(&ground, Measure::Hausdorff, 300, 42, &tol, Execution::Parallel).unwrap();
        let b = random_shatter_search(&ground, Measure::Hausdorff, 300, 42, &tol, Execution::Sequential).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn guards() {
        let tol = Tolerance::default();
        let ground: Vec<Element> = (0..21).map(|i| seg("x", i as f64, 0.0, i as f64, 1.0)).collect();
        assert!(matches!(
            shatter_check(&ground, &[], &[1.0], Measure::Hausdorff, &tol, Execution::Sequential),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            shatter_check(
                &ground[..1],
                &[],
                &[1.0],
                Measure::HausdorffRegion,
                &tol,
                Execution::Sequential
            ),
            Err(Error::MeasureMismatch { .. })
        ));
    }

    #[test]
    fn measure_names_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
        assert_eq!("weak_frechet".parse::<Measure>().unwrap(), Measure::WeakFrechet);
        assert!("manhattan".parse::<Measure>().is_err());
    }
}
