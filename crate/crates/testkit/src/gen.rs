//! Seeded random instances.

use std::f64::consts::TAU;

use elastic_core::{PolygonalCurve, PolygonalRegion, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Curve with `m` vertices drawn uniformly from `[0, 1]^d`.
pub fn curve<R: Rng>(rng: &mut R, m: usize, d: usize) -> PolygonalCurve {
    PolygonalCurve::from_coords((0..m).map(|_| (0..d).map(|_| rng.gen::<f64>()).collect::<Vec<_>>()))
        .expect("finite coordinates")
}

/// Planar curve with a vertex count drawn from `lo..=hi`.
pub fn planar_curve<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> PolygonalCurve {
    let m = rng.gen_range(lo..=hi);
    curve(rng, m, 2)
}

/// Planar segment with endpoints in `[0, 1]^2`, length at least 0.05.
pub fn segment<R: Rng>(rng: &mut R) -> ([f64; 2], [f64; 2]) {
    loop {
        let a = [rng.gen::<f64>(), rng.gen::<f64>()];
        let b = [rng.gen::<f64>(), rng.gen::<f64>()];
        if (a[0] - b[0]).hypot(a[1] - b[1]) >= 0.05 {
            return (a, b);
        }
    }
}

fn star(center: [f64; 2], n: usize, r_lo: f64, r_hi: f64, rng: &mut impl Rng) -> Vec<(f64, f64)> {
    let phase = rng.gen_range(0.0..TAU);
    (0..n)
        .map(|i| {
            let a = phase + TAU * (i as f64 + rng.gen_range(-0.3..0.3)) / n as f64;
            let r = rng.gen_range(r_lo..r_hi);
            (center[0] + r * a.cos(), center[1] + r * a.sin())
        })
        .collect()
}

/// Star-shaped region around `center` with 3 to `max_vertices` outer
/// vertices at radius in `[0.5, 1] * size`, optionally with a small
/// star-shaped hole near the center.
pub fn star_region<R: Rng>(
    rng: &mut R,
    center: [f64; 2],
    size: f64,
    max_vertices: usize,
    hole: bool,
) -> PolygonalRegion {
    loop {
        let n = rng.gen_range(if hole { 4 } else { 3 }..=max_vertices);
        let outer = Ring::from_xy(&star(center, n, 0.5 * size, size, rng)).expect("ring");
        let holes = if hole {
            let h = rng.gen_range(3..=4);
            let shift = [
                center[0] + rng.gen_range(-0.03..0.03) * size,
                center[1] + rng.gen_range(-0.03..0.03) * size,
            ];
            vec![Ring::from_xy(&star(shift, h, 0.06 * size, 0.14 * size, rng)).expect("ring")]
        } else {
            vec![]
        };
        if let Ok(region) = PolygonalRegion::new(outer, holes) {
            return region;
        }
    }
}
