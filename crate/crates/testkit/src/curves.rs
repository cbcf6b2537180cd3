//! Sampling and refinement oracles for curve distances. Curves are plain
//! vertex lists here.

use crate::geom::{dist, dist_to_segment, lerp};

pub type Coords = Vec<Vec<f64>>;

pub fn to_coords(c: &elastic_core::PolygonalCurve) -> Coords {
    c.vertices().iter().map(|v| v.coords().to_vec()).collect()
}

fn pieces(c: &[Vec<f64>]) -> Vec<(&[f64], &[f64])> {
    if c.len() == 1 {
        return vec![(&c[0], &c[0])];
    }
    c.windows(2).map(|w| (&w[0][..], &w[1][..])).collect()
}

fn dist_to_curve(v: &[f64], c: &[Vec<f64>]) -> f64 {
    pieces(c)
        .into_iter()
        .map(|(a, b)| dist_to_segment(v, a, b))
        .fold(f64::INFINITY, f64::min)
}

/// Directed Hausdorff distance from `p` to `q` estimated from `samples`
/// evenly spaced points per edge of `p` (endpoints included).
pub fn sampled_directed_hausdorff(p: &[Vec<f64>], q: &[Vec<f64>], samples: usize) -> f64 {
    let mut best: f64 = 0.0;
    for (a, b) in pieces(p) {
        for s in 0..samples {
            let t = s as f64 / (samples - 1).max(1) as f64;
            best = best.max(dist_to_curve(&lerp(a, b, t), q));
        }
    }
    best
}

pub fn sampled_hausdorff(p: &[Vec<f64>], q: &[Vec<f64>], samples: usize) -> f64 {
    sampled_directed_hausdorff(p, q, samples).max(sampled_directed_hausdorff(q, p, samples))
}

/// Splits every edge into `factor` equal pieces.
pub fn refine(c: &[Vec<f64>], factor: usize) -> Coords {
    let mut out = vec![c[0].clone()];
    for w in c.windows(2) {
        for s in 1..=factor {
            out.push(lerp(&w[0], &w[1], s as f64 / factor as f64));
        }
    }
    out
}

/// Discrete Fréchet distance by the textbook dynamic program.
pub fn discrete_frechet(p: &[Vec<f64>], q: &[Vec<f64>]) -> f64 {
    let (m, k) = (p.len(), q.len());
    let mut ca = vec![vec![f64::NAN; k]; m];
    for i in 0..m {
        for j in 0..k {
            let d = dist(&p[i], &q[j]);
            ca[i][j] = match (i, j) {
                (0, 0) => d,
                (0, _) => ca[0][j - 1].max(d),
                (_, 0) => ca[i - 1][0].max(d),
                _ => ca[i - 1][j].min(ca[i - 1][j - 1]).min(ca[i][j - 1]).max(d),
            };
        }
    }
    ca[m - 1][k - 1]
}

/// Discrete Hausdorff distance straight from the definition.
pub fn discrete_hausdorff(p: &[Vec<f64>], q: &[Vec<f64>]) -> f64 {
    let directed = |a: &[Vec<f64>], b: &[Vec<f64>]| {
        a.iter()
            .map(|u| b.iter().map(|v| dist(u, v)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(p, q).max(directed(q, p))
}

/// Weak Fréchet estimate: bottleneck path over the grid of sampled point
/// pairs, moving freely in all four directions.
pub fn sampled_weak_frechet(p: &[Vec<f64>], q: &[Vec<f64>], factor: usize) -> f64 {
    let (a, b) = (refine(p, factor), refine(q, factor));
    let (m, k) = (a.len(), b.len());
    let cost = |i: usize, j: usize| dist(&a[i], &b[j]);
    let mut best = vec![f64::INFINITY; m * k];
    best[0] = cost(0, 0);
    let mut heap = std::collections::BinaryHeap::new();
    heap.push((std::cmp::Reverse(OrdF(best[0])), 0usize, 0usize));
    while let Some((std::cmp::Reverse(OrdF(d)), i, j)) = heap.pop() {
        if d > best[i * k + j] {
            continue;
        }
        if (i, j) == (m - 1, k - 1) {
            return d;
        }
        let steps = [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)];
        for (di, dj) in steps {
            let (ni, nj) = (i as i64 + di, j as i64 + dj);
            if ni < 0 || nj < 0 || ni >= m as i64 || nj >= k as i64 {
                continue;
            }
            let (ni, nj) = (ni as usize, nj as usize);
            let nd = d.max(cost(ni, nj));
            if nd < best[ni * k + nj] {
                best[ni * k + nj] = nd;
                heap.push((std::cmp::Reverse(OrdF(nd)), ni, nj));
            }
        }
    }
    best[m * k - 1]
}

struct OrdF(f64);

impl PartialEq for OrdF {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other).is_eq()
    }
}

impl Eq for OrdF {}

impl PartialOrd for OrdF {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdF {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Brute-force check of "some `a1 <= a2` on the directed line through
/// `[u, v]` with `|a1 - pj| <= delta` and `|a2 - pt| <= delta`", over a grid
/// of `n x n` parameter pairs in `[lo, hi]`.
pub fn ordered_pair_exists(
    pj: &[f64],
    pt: &[f64],
    u: &[f64],
    v: &[f64],
    delta: f64,
    (lo, hi): (f64, f64),
    n: usize,
) -> bool {
    let ts: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
    let near_j: Vec<bool> = ts.iter().map(|&t| dist(&lerp(u, v, t), pj) <= delta).collect();
    let near_t: Vec<bool> = ts.iter().map(|&t| dist(&lerp(u, v, t), pt) <= delta).collect();
    // Earliest a1, then any a2 at or after it.
    match near_j.iter().position(|&x| x) {
        Some(first) => near_t[first..].iter().any(|&x| x),
        None => false,
    }
}
