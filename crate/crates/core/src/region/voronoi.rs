use crate::error::{Error, Result};
use crate::geometry::{Point, RootTypeTag, Segment, Tolerance};

type V2 = [f64; 2];

/// Which part of a segment acts as a Voronoi site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteKind {
    Start,
    End,
    /// The supporting line.
    Line,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubSite {
    /// Index of the generating segment.
    pub edge: usize,
    pub kind: SiteKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CandidateCase {
    ThreePoints,
    TwoPointsLine,
    PointTwoLinesParallel,
    PointTwoLinesCrossing,
    ThreeLines,
}

/// A point equidistant from one sub-site of each of three segments.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiCandidate {
    pub location: Point,
    pub tag: RootTypeTag,
    pub sites: [SubSite; 3],
    pub case: CandidateCase,
    /// Every case that produced this location before deduplication,
    /// including `case`.
    pub cases: Vec<CandidateCase>,
}

#[derive(Clone, Copy)]
enum Site {
    Pt(V2),
    /// `n . x + c = 0` with unit `n`.
    Ln(V2, f64),
}

fn dot(a: V2, b: V2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn cross(a: V2, b: V2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub(a: V2, b: V2) -> V2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn perp(a: V2) -> V2 {
    [-a[1], a[0]]
}

fn norm(a: V2) -> f64 {
    a[0].hypot(a[1])
}

fn site_distance(site: Site, x: V2) -> f64 {
    match site {
        Site::Pt(u) => norm(sub(x, u)),
        Site::Ln(n, c) => (dot(n, x) + c).abs(),
    }
}

fn sites_of(a: V2, b: V2) -> [(SiteKind, Site); 3] {
    let d = sub(b, a);
    let n = perp(d);
    let len = norm(n);
    let n = [n[0] / len, n[1] / len];
    [
        (SiteKind::Start, Site::Pt(a)),
        (SiteKind::End, Site::Pt(b)),
        (SiteKind::Line, Site::Ln(n, -dot(n, a))),
    ]
}

/// Whether one site contains the other (equal points, point on line,
/// coincident lines). Such pairs do not have a proper bisector.
fn nested(s: Site, t: Site, z: f64) -> bool {
    match (s, t) {
        (Site::Pt(u), Site::Pt(w)) => norm(sub(u, w)) <= z,
        (Site::Pt(u), Site::Ln(n, c)) | (Site::Ln(n, c), Site::Pt(u)) => (dot(n, u) + c).abs() <= z,
        (Site::Ln(n1, c1), Site::Ln(n2, c2)) => {
            let s = if dot(n1, n2) < 0.0 { -1.0 } else { 1.0 };
            cross(n1, n2).abs() <= 1e-12 && (c1 - s * c2).abs() <= z
        }
    }
}

/// Points `x0 + t w` (unit `w`) equidistant from point `u` and line `(n, c)`.
fn line_parabola(x0: V2, w: V2, u: V2, n: V2, c: f64, eps: f64) -> Vec<V2> {
    let r = sub(x0, u);
    let h = dot(n, x0) + c;
    let nw = dot(n, w);
    let qa = 1.0 - nw * nw;
    let qb = 2.0 * (dot(r, w) - h * nw);
    let qc = dot(r, r) - h * h;
    let at = |t: f64| [x0[0] + t * w[0], x0[1] + t * w[1]];
    if qa.abs() <= 1e-12 {
        return if qb.abs() > 1e-300 { vec![at(-qc / qb)] } else { vec![] };
    }
    let mut disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        if disc < -eps * (qb * qb + 4.0 * (qa * qc).abs()) {
            return vec![];
        }
        disc = 0.0;
    }
    if disc == 0.0 {
        return vec![at(-qb / (2.0 * qa))];
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![at(0.0)];
    }
    vec![at(q / qa), at(qc / q)]
}

fn solve2(m1: V2, r1: f64, m2: V2, r2: f64) -> Option<V2> {
    let det = cross(m1, m2);
    if det.abs() <= 1e-12 * norm(m1) * norm(m2) {
        return None;
    }
    Some([(r1 * m2[1] - r2 * m1[1]) / det, (m1[0] * r2 - m2[0] * r1) / det])
}

fn solve(sites: [Site; 3], eps: f64) -> Vec<(V2, RootTypeTag, CandidateCase)> {
    let mut pts = Vec::new();
    let mut lns = Vec::new();
    for s in sites {
        match s {
            Site::Pt(u) => pts.push(u),
            Site::Ln(n, c) => lns.push((n, c)),
        }
    }
    let mut out = Vec::new();
    match (pts.len(), lns.len()) {
        (3, 0) => {
            let (a, b, c) = (pts[0], pts[1], pts[2]);
            let (b1, c1) = (sub(b, a), sub(c, a));
            if let Some(x) = solve2(b1, 0.5 * dot(b1, b1), c1, 0.5 * dot(c1, c1)) {
                out.push((
                    [a[0] + x[0], a[1] + x[1]],
                    RootTypeTag::Level1,
                    CandidateCase::ThreePoints,
                ));
            }
        }
        (2, 1) => {
            let (u, w) = (pts[0], pts[1]);
            let (n, c) = lns[0];
            let d = sub(w, u);
            let len = norm(d);
            let mid = [0.5 * (u[0] + w[0]), 0.5 * (u[1] + w[1])];
            let dir = [-d[1] / len, d[0] / len];
            for x in line_parabola(mid, dir, u, n, c, eps) {
                out.push((x, RootTypeTag::Level2, CandidateCase::TwoPointsLine));
            }
        }
        (1, 2) => {
            let u = pts[0];
            let ((n1, c1), (n2, c2)) = (lns[0], lns[1]);
            if cross(n1, n2).abs() <= 1e-12 {
                // Express the second line with normal n1.
                let c2 = if dot(n1, n2) < 0.0 { -c2 } else { c2 };
                let cm = 0.5 * (c1 + c2);
                let x0 = [-cm * n1[0], -cm * n1[1]];
                for x in line_parabola(x0, perp(n1), u, n1, c1, eps) {
                    out.push((x, RootTypeTag::Level2, CandidateCase::PointTwoLinesParallel));
                }
            } else {
                for s in [1.0, -1.0] {
                    let m = [n1[0] - s * n2[0], n1[1] - s * n2[1]];
                    let len = norm(m);
                    let (mn, cm) = ([m[0] / len, m[1] / len], (c1 - s * c2) / len);
                    let x0 = [-cm * mn[0], -cm * mn[1]];
                    for x in line_parabola(x0, perp(mn), u, n1, c1, eps) {
                        out.push((x, RootTypeTag::Level3, CandidateCase::PointTwoLinesCrossing));
                    }
                }
            }
        }
        (0, 3) => {
            let ((n1, c1), (n2, c2), (n3, c3)) = (lns[0], lns[1], lns[2]);
            for s2 in [1.0, -1.0] {
                for s3 in [1.0, -1.0] {
                    let m2 = [n1[0] - s2 * n2[0], n1[1] - s2 * n2[1]];
                    let m3 = [n1[0] - s3 * n3[0], n1[1] - s3 * n3[1]];
                    if norm(m2) <= 1e-12 || norm(m3) <= 1e-12 {
                        continue;
                    }
                    if let Some(x) = solve2(m2, s2 * c2 - c1, m3, s3 * c3 - c1) {
                        out.push((x, RootTypeTag::Level2, CandidateCase::ThreeLines));
                    }
                }
            }
        }
        _ => unreachable!("three sites"),
    }
    out
}

/// Candidates for segments given as raw planar coordinate pairs; `ids` name
/// the segments in the returned sub-sites.
pub(crate) fn candidates_raw(segs: [(&[f64], &[f64]); 3], ids: [usize; 3], tol: &Tolerance) -> Vec<VoronoiCandidate> {
    let pts: [(V2, V2); 3] = segs.map(|(a, b)| ([a[0], a[1]], [b[0], b[1]]));
    let scale = pts
        .iter()
        .flat_map(|(a, b)| [a[0], a[1], b[0], b[1]])
        .fold(1.0f64, |m, v| m.max(v.abs()));
    let z = 10.0 * tol.eps() * scale;
    let site_sets = pts.map(|(a, b)| sites_of(a, b));

    let mut found: Vec<VoronoiCandidate> = Vec::new();
    for x in &site_sets[0] {
        for y in &site_sets[1] {
            if nested(x.1, y.1, z) {
                continue;
            }
            for w in &site_sets[2] {
                if nested(x.1, w.1, z) || nested(y.1, w.1, z) {
                    continue;
                }
                let sites = [x.1, y.1, w.1];
                for (loc, tag, case) in solve(sites, tol.eps()) {
                    if !loc[0].is_finite() || !loc[1].is_finite() {
                        continue;
                    }
                    let d = sites.map(|s| site_distance(s, loc));
                    let (lo, hi) = (d[0].min(d[1]).min(d[2]), d[0].max(d[1]).max(d[2]));
                    if hi - lo > 1e-6 * hi.max(scale) {
                        continue;
                    }
                    let sub_sites = [
                        SubSite {
                            edge: ids[0],
                            kind: x.0,
                        },
                        SubSite {
                            edge: ids[1],
                            kind: y.0,
                        },
                        SubSite {
                            edge: ids[2],
                            kind: w.0,
                        },
                    ];
                    merge(&mut found, loc, tag, case, sub_sites, z);
                }
            }
        }
    }
    found
}

fn merge(
    found: &mut Vec<VoronoiCandidate>,
    loc: V2,
    tag: RootTypeTag,
    case: CandidateCase,
    sites: [SubSite; 3],
    z: f64,
) {
    if let Some(prev) = found
        .iter_mut()
        .find(|c| norm(sub(loc, [c.location.x(), c.location.y()])) <= z)
    {
        if !prev.cases.contains(&case) {
            prev.cases.push(case);
        }
        if tag < prev.tag {
            prev.location = Point::xy(loc[0], loc[1]);
            prev.tag = tag;
            prev.case = case;
            prev.sites = sites;
        }
        return;
    }
    found.push(VoronoiCandidate {
        location: Point::xy(loc[0], loc[1]),
        tag,
        sites,
        case,
        cases: vec![case],
    });
}

/// Enumerates points equidistant from one sub-site (start point, end point
/// or supporting line) of each of `a`, `b`, `c`. The result is a superset of
/// the Voronoi vertices of the three segments. Candidates closer than
/// `10 eps` are merged, keeping the lowest root type.
pub fn voronoi_vertex_candidates(
    a: &Segment,
    b: &Segment,
    c: &Segment,
    tol: &Tolerance,
) -> Result<Vec<VoronoiCandidate>> {
    for s in [a, b, c] {
        if s.dim() != 2 {
            return Err(Error::NotPlanar(s.dim()));
        }
        if s.is_degenerate() {
            return Err(Error::Degenerate("Voronoi site segment has coincident endpoints"));
        }
    }
    Ok(candidates_raw(
        [
            (a.a.coords(), a.b.coords()),
            (b.a.coords(), b.b.coords()),
            (c.a.coords(), c.b.coords()),
        ],
        [0, 1, 2],
        tol,
    ))
}
