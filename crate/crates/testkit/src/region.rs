//! Monte-Carlo estimate of the directed Hausdorff distance between regions.

use rand::Rng;

use crate::geom::{dist_to_rings, lerp, winding_inside};

pub type Rings = Vec<Vec<[f64; 2]>>;

pub fn to_rings(r: &elastic_core::PolygonalRegion) -> Rings {
    r.rings()
        .map(|ring| ring.vertices().iter().map(|v| [v.x(), v.y()]).collect())
        .collect()
}

fn dist_to_region(v: [f64; 2], q: &Rings) -> f64 {
    if winding_inside(v, q) {
        0.0
    } else {
        dist_to_rings(v, q)
    }
}

/// Points of `p`: every vertex, `boundary` evenly spread samples per ring
/// edge, and `interior` rejection samples from its bounding box.
pub fn sample_region<R: Rng>(p: &Rings, boundary: usize, interior: usize, rng: &mut R) -> Vec<[f64; 2]> {
    let mut pts = Vec::with_capacity(interior + boundary * 16);
    for ring in p {
        for i in 0..ring.len() {
            let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
            for s in 0..boundary {
                let x = lerp(&a, &b, s as f64 / boundary as f64);
                pts.push([x[0], x[1]]);
            }
        }
    }
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for v in &p[0] {
        for k in 0..2 {
            lo[k] = lo[k].min(v[k]);
            hi[k] = hi[k].max(v[k]);
        }
    }
    let mut accepted = 0;
    while accepted < interior {
        let v = [rng.gen_range(lo[0]..=hi[0]), rng.gen_range(lo[1]..=hi[1])];
        if winding_inside(v, p) {
            pts.push(v);
            accepted += 1;
        }
    }
    pts
}

/// Largest distance from the samples of `p` to region `q`.
pub fn estimate_directed<R: Rng>(p: &Rings, q: &Rings, samples: usize, rng: &mut R) -> f64 {
    let boundary = (samples / 10 / p.iter().map(|r| r.len()).sum::<usize>()).max(1);
    let interior = samples - samples / 10;
    sample_region(p, boundary, interior, rng)
        .into_iter()
        .map(|v| dist_to_region(v, q))
        .fold(0.0, f64::max)
}

pub fn estimate<R: Rng>(p: &Rings, q: &Rings, samples: usize, rng: &mut R) -> f64 {
    estimate_directed(p, q, samples, rng).max(estimate_directed(q, p, samples, rng))
}
