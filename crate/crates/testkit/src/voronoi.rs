//! Grid-and-Newton search for points equidistant from three segments.

use crate::geom::{closest_on_segment, dist};

pub type Seg = ([f64; 2], [f64; 2]);

fn closest(v: [f64; 2], s: &Seg) -> [f64; 2] {
    let c = closest_on_segment(&v, &s.0, &s.1);
    [c[0], c[1]]
}

fn distances(v: [f64; 2], segs: &[Seg; 3]) -> [f64; 3] {
    segs.map(|s| dist(&v, &closest(v, &s)))
}

fn mismatch(v: [f64; 2], segs: &[Seg; 3]) -> f64 {
    let d = distances(v, segs);
    (d[0] - d[1]).abs() + (d[1] - d[2]).abs()
}

/// Newton iteration on `(d_a - d_b, d_b - d_c) = 0`; gradients are unit
/// vectors from the closest points.
fn newton(mut v: [f64; 2], segs: &[Seg; 3], steps: usize) -> Option<[f64; 2]> {
    for _ in 0..steps {
        let d = distances(v, segs);
        if d.iter().any(|&x| x < 1e-12) {
            return None;
        }
        let g = segs.map(|s| {
            let c = closest(v, &s);
            let len = dist(&v, &c);
            [(v[0] - c[0]) / len, (v[1] - c[1]) / len]
        });
        let f = [d[0] - d[1], d[1] - d[2]];
        let j = [
            [g[0][0] - g[1][0], g[0][1] - g[1][1]],
            [g[1][0] - g[2][0], g[1][1] - g[2][1]],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.abs() < 1e-14 {
            return None;
        }
        let dx = (f[0] * j[1][1] - f[1] * j[0][1]) / det;
        let dy = (j[0][0] * f[1] - j[1][0] * f[0]) / det;
        v = [v[0] - dx, v[1] - dy];
        if !v[0].is_finite() || !v[1].is_finite() {
            return None;
        }
    }
    let d = distances(v, segs);
    let scale = d[0].max(1.0);
    ((d[0] - d[1]).abs() <= 1e-11 * scale && (d[1] - d[2]).abs() <= 1e-11 * scale).then_some(v)
}

/// Points equidistant from all three segments whose three closest points
/// are pairwise distinct, found by scanning a `grid x grid` lattice over
/// `[lo, hi]^2` for local minima of `|d_a - d_b| + |d_b - d_c|` and
/// refining each with `steps` Newton iterations.
pub fn equidistant_points(segs: &[Seg; 3], lo: f64, hi: f64, grid: usize, steps: usize) -> Vec<[f64; 2]> {
    let h = (hi - lo) / (grid - 1) as f64;
    let at = |i: usize, j: usize| [lo + i as f64 * h, lo + j as f64 * h];
    let f: Vec<f64> = (0..grid * grid)
        .map(|idx| mismatch(at(idx / grid, idx % grid), segs))
        .collect();
    let mut found: Vec<[f64; 2]> = Vec::new();
    for i in 1..grid - 1 {
        for j in 1..grid - 1 {
            let here = f[i * grid + j];
            let is_min = (-1i64..=1).all(|di| {
                (-1i64..=1).all(|dj| {
                    let (ni, nj) = ((i as i64 + di) as usize, (j as i64 + dj) as usize);
                    here <= f[ni * grid + nj]
                })
            });
            if !is_min {
                continue;
            }
            let Some(v) = newton(at(i, j), segs, steps) else {
                continue;
            };
            if dist(&v, &at(i, j)) > 4.0 * h {
                continue;
            }
            let c = segs.map(|s| closest(v, &s));
            let sep = 1e-7 * distances(v, segs)[0].max(1.0);
            if dist(&c[0], &c[1]) <= sep || dist(&c[1], &c[2]) <= sep || dist(&c[0], &c[2]) <= sep {
                continue;
            }
            if !found.iter().any(|w| dist(w, &v) < 1e-9) {
                found.push(v);
            }
        }
    }
    found
}
