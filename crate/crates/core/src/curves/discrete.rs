use super::{check_pair, PolygonalCurve};
use crate::error::{Error, Result};
use crate::geometry::dist2;

/// Largest `m + k` accepted by [`dtw_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 14;

/// Discrete Hausdorff distance between the vertex sets.
pub fn discrete_hausdorff(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<f64> {
    check_pair(p, q)?;
    let directed = |a: &PolygonalCurve, b: &PolygonalCurve| {
        a.vertices()
            .iter()
            .map(|u| {
                b.vertices()
                    .iter()
                    .map(|v| dist2(u.coords(), v.coords()))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    Ok(directed(p, q).max(directed(q, p)).sqrt())
}

/// Discrete Fréchet distance over monotone vertex couplings.
pub fn discrete_frechet(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<f64> {
    check_pair(p, q)?;
    let k = q.len();
    let (pv, qv) = (p.vertices(), q.vertices());
    let mut prev = vec![0.0; k];
    let mut row = vec![0.0; k];
    for (i, a) in pv.iter().enumerate() {
        for j in 0..k {
            let c = dist2(a.coords(), qv[j].coords());
            let best = match (i, j) {
                (0, 0) => c,
                (0, _) => row[j - 1],
                (_, 0) => prev[0],
                _ => prev[j].min(prev[j - 1]).min(row[j - 1]),
            };
            row[j] = best.max(c);
        }
        std::mem::swap(&mut prev, &mut row);
    }
    Ok(prev[k - 1].sqrt())
}

/// A warping path: 1-based index pairs from `(1, 1)` to `(m, k)`, each step
/// advancing `i`, `j` or both by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpingPath {
    pairs: Vec<(usize, usize)>,
}

impl WarpingPath {
    pub fn new(pairs: Vec<(usize, usize)>, m: usize, k: usize) -> Result<Self> {
        let invalid = |why| Err(Error::Degenerate(why));
        if pairs.first() != Some(&(1, 1)) {
            return invalid("warping path must start at (1, 1)");
        }
        if pairs.last() != Some(&(m, k)) {
            return invalid("warping path must end at (m, k)");
        }
        for w in pairs.windows(2) {
            let (di, dj) = (w[1].0.wrapping_sub(w[0].0), w[1].1.wrapping_sub(w[0].1));
            if !matches!((di, dj), (1, 0) | (0, 1) | (1, 1)) {
                return invalid("warping path step must be (1,0), (0,1) or (1,1)");
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Sum of squared vertex distances along the path, accumulated in order.
    pub fn cost(&self, p: &PolygonalCurve, q: &PolygonalCurve) -> Result<f64> {
        check_pair(p, q)?;
        Ok(self.pairs.iter().fold(0.0, |acc, &(i, j)| {
            acc + dist2(p.vertex(i - 1).coords(), q.vertex(j - 1).coords())
        }))
    }
}

/// Dynamic time warping with squared Euclidean vertex costs, returning the
/// optimal cost and one optimal path.
///
/// Ties during backtracking prefer the diagonal step, then the step that
/// retreats in `P`, then the one that retreats in `Q`.
pub fn dtw(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<(f64, WarpingPath)> {
    check_pair(p, q)?;
    let (m, k) = (p.len(), q.len());
    let (pv, qv) = (p.vertices(), q.vertices());
    let mut d = vec![f64::INFINITY; m * k];
    for (i, a) in pv.iter().enumerate() {
        for j in 0..k {
            let c = dist2(a.coords(), qv[j].coords());
            let best = if i == 0 && j == 0 {
                0.0
            } else {
                let mut b = f64::INFINITY;
                if i > 0 && j > 0 {
                    b = b.min(d[(i - 1) * k + j - 1]);
                }
                if i > 0 {
                    b = b.min(d[(i - 1) * k + j]);
                }
                if j > 0 {
                    b = b.min(d[i * k + j - 1]);
                }
                b
            };
            d[i * k + j] = best + c;
        }
    }

    let mut rev = vec![(m, k)];
    let (mut i, mut j) = (m - 1, k - 1);
    while (i, j) != (0, 0) {
        let diag = (i > 0 && j > 0).then(|| d[(i - 1) * k + j - 1]);
        let up = (i > 0).then(|| d[(i - 1) * k + j]);
        let left = (j > 0).then(|| d[i * k + j - 1]);
        let best = [diag, up, left].into_iter().flatten().fold(f64::INFINITY, f64::min);
        if diag == Some(best) {
            i -= 1;
            j -= 1;
        } else if up == Some(best) {
            i -= 1;
        } else {
            j -= 1;
        }
        rev.push((i + 1, j + 1));
    }
    rev.reverse();
    Ok((d[m * k - 1], WarpingPath { pairs: rev }))
}

/// DTW by enumerating every warping path; for cross-checking [`dtw`] on
/// small inputs (`m + k <= BRUTEFORCE_LIMIT`).
pub fn dtw_bruteforce(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<f64> {
    check_pair(p, q)?;
    let (m, k) = (p.len(), q.len());
    if m + k > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "dtw_bruteforce input (m + k)",
            size: m + k,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let cost: Vec<f64> = p
        .vertices()
        .iter()
        .flat_map(|u| q.vertices().iter().map(move |v| dist2(u.coords(), v.coords())))
        .collect();

    fn walk(i: usize, j: usize, acc: f64, m: usize, k: usize, cost: &[f64], best: &mut f64) {
        if i == m - 1 && j == k - 1 {
            *best = best.min(acc);
            return;
        }
        if i + 1 < m && j + 1 < k {
            walk(i + 1, j + 1, acc + cost[(i + 1) * k + j + 1], m, k, cost, best);
        }
        if i + 1 < m {
            walk(i + 1, j, acc + cost[(i + 1) * k + j], m, k, cost, best);
        }
        if j + 1 < k {
            walk(i, j + 1, acc + cost[i * k + j + 1], m, k, cost, best);
        }
    }

    let mut best = f64::INFINITY;
    walk(0, 0, 0.0 + cost[0], m, k, &cost, &mut best);
    Ok(best)
}
