use std::fs;
use std::path::Path;

use elastic_core::curves::{decide, CurveMeasure};
use elastic_core::region::{compute_directed_hausdorff_region, voronoi_vertex_candidates, CandidateCase, SiteKind};
use elastic_core::vc::{
    bound_discrete_frechet, bound_discrete_hausdorff, bound_dtw, bound_sign_combination, random_shatter_search,
    verify_report, BoundQuery, Element, GeometryObject, Measure,
};
use elastic_core::{
    compute_distance, compute_hausdorff_region, decide_directed_hausdorff_region, decide_hausdorff_region,
    discrete_frechet, discrete_hausdorff, dtw, DecisionResult, Execution, Margin, PolygonalCurve, PolygonalRegion,
    Radius, Segment, Tolerance,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{Family, MeasureArg};
use crate::document::{parse_document, parse_documents, DocumentError, GeometryDocument, Kind, Payload};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Core(#[from] elastic_core::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// A finished command: its result payload, a one-line summary and the exit code.
pub struct Done {
    pub result: Value,
    pub summary: String,
    pub margin: Option<Margin>,
    pub code: i32,
    pub seed: Option<u64>,
}

impl Done {
    fn ok(result: Value, summary: String) -> Self {
        Self {
            result,
            summary,
            margin: None,
            code: 0,
            seed: None,
        }
    }
}

/// Raw bytes of every input file read, in order, for the report digest.
#[derive(Default)]
pub struct Inputs(pub Vec<Vec<u8>>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<(String, String)> {
        let name = path.display().to_string();
        let bytes = fs::read(path).map_err(|e| CliError::Io {
            path: name.clone(),
            message: e.to_string(),
        })?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Io {
            path: name.clone(),
            message: "not valid UTF-8".into(),
        })?;
        self.0.push(bytes);
        Ok((text, name))
    }
}

struct Loaded {
    doc: GeometryDocument,
    object: GeometryObject,
}

fn load(path: &Path, tol: &Tolerance, inputs: &mut Inputs) -> Result<Loaded> {
    let (text, name) = inputs.read(path)?;
    let doc = parse_document(&text, &name)?;
    let object = doc.to_object(tol, &name)?;
    Ok(Loaded { doc, object })
}

enum Pair<'a> {
    Curves(&'a PolygonalCurve, &'a PolygonalCurve),
    Regions(&'a PolygonalRegion, &'a PolygonalRegion),
}

fn pair<'a>(measure: MeasureArg, a: &'a Loaded, b: &'a Loaded) -> Result<Pair<'a>> {
    let want = if measure.is_region() { Kind::Region } else { Kind::Curve };
    for x in [a, b] {
        if x.doc.kind() != want {
            return Err(CliError::Usage(format!(
                "measure {} requires {} documents, but '{}' is a {}",
                measure.name(),
                want.name(),
                x.doc.id,
                x.doc.kind().name()
            )));
        }
    }
    if a.doc.dimension != b.doc.dimension {
        return Err(CliError::Usage(format!(
            "dimension mismatch: '{}' has dimension {}, '{}' has dimension {}",
            a.doc.id, a.doc.dimension, b.doc.id, b.doc.dimension
        )));
    }
    Ok(match (&a.object, &b.object) {
        (GeometryObject::Curve(p), GeometryObject::Curve(q)) => Pair::Curves(p, q),
        (GeometryObject::Region(p), GeometryObject::Region(q)) => Pair::Regions(p, q),
        _ => unreachable!("kinds checked above"),
    })
}

fn curve_measure(measure: MeasureArg) -> Option<CurveMeasure> {
    Some(match measure {
        MeasureArg::Hausdorff => CurveMeasure::Hausdorff,
        MeasureArg::DirectedHausdorff => CurveMeasure::DirectedHausdorff,
        MeasureArg::Frechet => CurveMeasure::Frechet,
        MeasureArg::WeakFrechet => CurveMeasure::WeakFrechet,
        _ => return None,
    })
}

/// Value of a discrete measure (DTW is the squared-cost sum).
fn discrete_value(measure: MeasureArg, p: &PolygonalCurve, q: &PolygonalCurve) -> Result<Option<f64>> {
    Ok(match measure {
        MeasureArg::DiscreteHausdorff => Some(discrete_hausdorff(p, q)?),
        MeasureArg::DiscreteFrechet => Some(discrete_frechet(p, q)?),
        MeasureArg::Dtw => Some(dtw(p, q)?.0),
        _ => None,
    })
}

pub fn margin_name(m: Margin) -> &'static str {
    match m {
        Margin::Robust => "robust",
        Margin::NearBoundary => "near-boundary",
    }
}

pub fn decide_cmd(
    measure: MeasureArg,
    a: &Path,
    b: &Path,
    delta: f64,
    tol: &Tolerance,
    inputs: &mut Inputs,
) -> Result<Done> {
    let (la, lb) = (load(a, tol, inputs)?, load(b, tol, inputs)?);
    let radius = Radius::new(delta)?;
    let outcome = match pair(measure, &la, &lb)? {
        Pair::Regions(p, q) => match measure {
            MeasureArg::HausdorffRegion => decide_hausdorff_region(p, q, radius, tol),
            _ => decide_directed_hausdorff_region(p, q, radius, tol),
        },
        Pair::Curves(p, q) => match curve_measure(measure) {
            Some(cm) => decide(cm, p, q, radius, tol)?,
            None => {
                let value = discrete_value(measure, p, q)?.expect("discrete measure");
                let near = (value - delta).abs() <= 10.0 * tol.eps() * delta.max(1.0);
                DecisionResult {
                    verdict: tol.le(value, delta),
                    margin: if near { Margin::NearBoundary } else { Margin::Robust },
                }
            }
        },
    };
    Ok(Done {
        result: json!({
            "measure": measure.name(),
            "a": la.doc.id,
            "b": lb.doc.id,
            "delta": delta,
            "verdict": outcome.verdict,
        }),
        summary: format!("{} ({})", outcome.verdict, margin_name(outcome.margin)),
        margin: Some(outcome.margin),
        code: if outcome.verdict { 0 } else { 1 },
        seed: None,
    })
}

pub fn compute_cmd(measure: MeasureArg, a: &Path, b: &Path, tol: &Tolerance, inputs: &mut Inputs) -> Result<Done> {
    let (la, lb) = (load(a, tol, inputs)?, load(b, tol, inputs)?);
    let mut result = json!({
        "measure": measure.name(),
        "a": la.doc.id,
        "b": lb.doc.id,
        "tolerance": tol.eps(),
    });
    let value = match pair(measure, &la, &lb)? {
        Pair::Regions(p, q) => match measure {
            MeasureArg::HausdorffRegion => compute_hausdorff_region(p, q, tol)?,
            _ => compute_directed_hausdorff_region(p, q, tol)?,
        },
        Pair::Curves(p, q) => match (curve_measure(measure), measure) {
            (Some(cm), _) => compute_distance(p, q, cm, tol)?,
            (None, MeasureArg::Dtw) => {
                let (value, path) = dtw(p, q)?;
                result["path"] = json!(path.pairs());
                value
            }
            (None, _) => discrete_value(measure, p, q)?.expect("discrete measure"),
        },
    };
    result["value"] = json!(value);
    Ok(Done::ok(result, format!("{value} (tol {:e})", tol.eps())))
}

fn need(name: &str, v: Option<u64>, family: &str) -> Result<u64> {
    v.ok_or_else(|| CliError::Usage(format!("family {family} requires --{name}")))
}

pub fn vc_bound_cmd(
    family: Family,
    d: Option<u64>,
    k: Option<u64>,
    m: Option<u64>,
    t: Option<u64>,
    l: Option<u64>,
) -> Result<Done> {
    let (name, formula, instantiation, inputs, value) = match family {
        Family::Generic => {
            let (p, t, l) = (
                need("d", d, "generic")?,
                need("t", t, "generic")?,
                need("l", l, "generic")?,
            );
            (
                "generic",
                "2*d*log2(12*t*l)",
                format!("2*{p}*log2(12*{t}*{l})"),
                json!({ "d": p, "t": t, "l": l }),
                bound_sign_combination(p, t, l)?,
            )
        }
        Family::DiscreteHausdorff | Family::DiscreteFrechet | Family::Dtw => {
            let fam = match family {
                Family::DiscreteHausdorff => "discrete-hausdorff",
                Family::DiscreteFrechet => "discrete-frechet",
                _ => "dtw",
            };
            let (d, k, m) = (need("d", d, fam)?, need("k", k, fam)?, need("m", m, fam)?);
            let q = BoundQuery::new(d, k, m)?;
            let inputs = json!({ "d": d, "k": k, "m": m });
            match family {
                Family::Dtw => (
                    fam,
                    "2*(d*k+1)*(log2(24) + min((k-1)*log2(m), (m-1)*log2(k)))",
                    format!("2*({d}*{k}+1)*(log2(24) + min(({k}-1)*log2({m}), ({m}-1)*log2({k})))"),
                    inputs,
                    bound_dtw(&q),
                ),
                Family::DiscreteHausdorff => (
                    fam,
                    "2*(d*k+1)*log2(24*m*k)",
                    format!("2*({d}*{k}+1)*log2(24*{m}*{k})"),
                    inputs,
                    bound_discrete_hausdorff(&q),
                ),
                _ => (
                    fam,
                    "2*(d*k+1)*log2(24*m*k)",
                    format!("2*({d}*{k}+1)*log2(24*{m}*{k})"),
                    inputs,
                    bound_discrete_frechet(&q),
                ),
            }
        }
    };
    Ok(Done::ok(
        json!({
            "family": name,
            "formula": formula,
            "instantiation": instantiation,
            "inputs": inputs,
            "value": value,
        }),
        format!("{instantiation} = {value}"),
    ))
}

fn case_name(c: CandidateCase) -> &'static str {
    match c {
        CandidateCase::ThreePoints => "three-points",
        CandidateCase::TwoPointsLine => "two-points-line",
        CandidateCase::PointTwoLinesParallel => "point-two-lines-parallel",
        CandidateCase::PointTwoLinesCrossing => "point-two-lines-crossing",
        CandidateCase::ThreeLines => "three-lines",
    }
}

fn site_name(s: SiteKind) -> &'static str {
    match s {
        SiteKind::Start => "start",
        SiteKind::End => "end",
        SiteKind::Line => "line",
    }
}

pub fn voronoi_cmd(file: &Path, tol: &Tolerance, inputs: &mut Inputs) -> Result<Done> {
    let (text, name) = inputs.read(file)?;
    let docs = parse_documents(&text, &name)?;
    if docs.len() != 3 {
        return Err(CliError::Usage(format!(
            "{name}: expected 3 segment documents, found {}",
            docs.len()
        )));
    }
    let mut segs = Vec::with_capacity(3);
    for (i, doc) in docs.iter().enumerate() {
        match &doc.payload {
            Payload::Curve(v) if v.len() == 2 && doc.dimension == 2 => {
                segs.push(Segment::xy(v[0][0], v[0][1], v[1][0], v[1][1]));
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "{name}: $[{i}] must be a planar curve with exactly 2 vertices"
                )))
            }
        }
    }
    let cands = voronoi_vertex_candidates(&segs[0], &segs[1], &segs[2], tol)?;
    let list: Vec<Value> = cands
        .iter()
        .map(|c| {
            json!({
                "location": [c.location.x(), c.location.y()],
                "case": case_name(c.case),
                "cases": c.cases.iter().map(|&k| case_name(k)).collect::<Vec<_>>(),
                "root_type": c.tag.level(),
                "sites": c.sites.iter().map(|s| json!({ "segment": s.edge, "site": site_name(s.kind) })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let summary = cands
        .iter()
        .map(|c| {
            format!(
                "({}, {}) {} level {}",
                c.location.x(),
                c.location.y(),
                case_name(c.case),
                c.tag.level()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Done::ok(json!({ "count": list.len(), "candidates": list }), summary))
}

pub fn shatter_cmd(
    file: &Path,
    measure: Measure,
    budget: usize,
    seed: u64,
    tol: &Tolerance,
    inputs: &mut Inputs,
) -> Result<Done> {
    let (text, name) = inputs.read(file)?;
    let docs = parse_documents(&text, &name)?;
    let ground: Vec<Element> = docs
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let id = if d.id.is_empty() { format!("#{i}") } else { d.id.clone() };
            Ok(Element::new(id, d.to_object(tol, &name)?))
        })
        .collect::<Result<_>>()?;
    let report = random_shatter_search(&ground, measure, budget, seed, tol, Execution::default())?;
    let unverified = verify_report(&report, &ground, tol)?;
    let members = |mask: u32| -> Vec<&str> {
        (0..ground.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| ground[i].id.as_str())
            .collect()
    };
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|(&mask, w)| {
            json!({
                "mask": mask,
                "subset": members(mask),
                "center_id": w.center.id,
                "center": GeometryDocument::from_object(w.center.id.clone(), &w.center.object).to_json(),
                "radius": w.radius,
            })
        })
        .collect();
    let missing: Vec<Value> = report
        .missing_subsets
        .iter()
        .map(|&mask| json!({ "mask": mask, "subset": members(mask) }))
        .collect();
    let total = 1usize << ground.len();
    Ok(Done {
        summary: format!(
            "shattered: {} ({} of {} subsets, {} ranges tried)",
            report.shattered,
            report.witnesses.len(),
            total,
            report.ranges_tried
        ),
        result: json!({
            "measure": measure.name(),
            "ground_ids": report.ground_ids,
            "shattered": report.shattered,
            "witnesses": witnesses,
            "missing_subsets": missing,
            "ranges_tried": report.ranges_tried,
            "budget": budget,
            "verified": unverified.is_empty(),
        }),
        margin: None,
        code: if report.shattered { 0 } else { 1 },
        seed: Some(seed),
    })
}
