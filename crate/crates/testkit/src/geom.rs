//! Minimal standalone geometry on coordinate slices.

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

pub fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

/// Closest point of segment `[a, b]` to `v`.
pub fn closest_on_segment(v: &[f64], a: &[f64], b: &[f64]) -> Vec<f64> {
    let w: Vec<f64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    let ww: f64 = w.iter().map(|x| x * x).sum();
    if ww == 0.0 {
        return a.to_vec();
    }
    let t = v.iter().zip(a).zip(&w).map(|((p, q), r)| (p - q) * r).sum::<f64>() / ww;
    lerp(a, b, t.clamp(0.0, 1.0))
}

pub fn dist_to_segment(v: &[f64], a: &[f64], b: &[f64]) -> f64 {
    dist(v, &closest_on_segment(v, a, b))
}

/// Even-odd point-in-polygon over several rings, by brute-force winding
/// angle: the sum of signed angles subtended by each edge.
pub fn winding_inside(v: [f64; 2], rings: &[Vec<[f64; 2]>]) -> bool {
    let mut total = 0i64;
    for ring in rings {
        let mut angle = 0.0;
        for i in 0..ring.len() {
            let a = ring[i];
            let b = ring[(i + 1) % ring.len()];
            let (ax, ay) = (a[0] - v[0], a[1] - v[1]);
            let (bx, by) = (b[0] - v[0], b[1] - v[1]);
            angle += (ax * by - ay * bx).atan2(ax * bx + ay * by);
        }
        total += (angle / std::f64::consts::TAU).round() as i64;
    }
    total % 2 != 0
}

/// Distance from `v` to the boundary of a ring set.
pub fn dist_to_rings(v: [f64; 2], rings: &[Vec<[f64; 2]>]) -> f64 {
    let mut best = f64::INFINITY;
    for ring in rings {
        for i in 0..ring.len() {
            best = best.min(dist_to_segment(&v, &ring[i], &ring[(i + 1) % ring.len()]));
        }
    }
    best
}
