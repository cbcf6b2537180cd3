use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Parameters of a ball range space: ambient dimension `d`, vertex count
/// `k` of the centers, vertex count `m` of the ground elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundQuery {
    d: u64,
    k: u64,
    m: u64,
}

fn positive(name: &'static str, value: u64) -> Result<u64> {
    if value == 0 {
        Err(Error::InvalidBoundParameter { name, value })
    } else {
        Ok(value)
    }
}

impl BoundQuery {
    pub fn new(d: u64, k: u64, m: u64) -> Result<Self> {
        Ok(Self {
            d: positive("d", d)?,
            k: positive("k", k)?,
            m: positive("m", m)?,
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Dimension of the center-plus-radius parameter space, `d k + 1`.
    fn param_dim(&self) -> f64 {
        (self.d * self.k + 1) as f64
    }
}

/// `2 p log2(12 t l)`: VC-dimension bound for a range space that is a
/// `t`-combination of signs of functions polynomial of degree at most `l` in
/// `p` parameters.
pub fn bound_sign_combination(param_dim: u64, t: u64, l: u64) -> Result<f64> {
    let p = positive("param_dim", param_dim)? as f64;
    let t = positive("t", t)? as f64;
    let l = positive("l", l)? as f64;
    Ok(2.0 * p * (12.0 * t * l).log2())
}

/// `2 (d k + 1) log2(24 m k)` for balls under the discrete Hausdorff distance.
pub fn bound_discrete_hausdorff(q: &BoundQuery) -> f64 {
    2.0 * q.param_dim() * (24.0 * q.m as f64 * q.k as f64).log2()
}

/// Same bound as [`bound_discrete_hausdorff`].
pub fn bound_discrete_frechet(q: &BoundQuery) -> f64 {
    bound_discrete_hausdorff(q)
}

/// `2 (d k + 1) log2(24 min(m^(k-1), k^(m-1)))` for balls under DTW,
/// evaluated in log space.
///
/// With `k = 1` the exponent vanishes and the bound no longer depends on `m`.
pub fn bound_dtw(q: &BoundQuery) -> f64 {
    let (m, k) = (q.m as f64, q.k as f64);
    let paths = ((k - 1.0) * m.log2()).min((m - 1.0) * k.log2());
    2.0 * q.param_dim() * (24f64.log2() + paths)
}

/// Warping paths from `(1, 1)` to `(m, k)`: the exact count (a Delannoy
/// number) and the binomial bound `C(m + k - 2, m - 1)`.
pub fn count_warping_paths(m: u64, k: u64) -> Result<(BigUint, BigUint)> {
    let m = positive("m", m)? as usize;
    let k = positive("k", k)? as usize;
    let mut row = vec![BigUint::one(); k];
    for _ in 1..m {
        let mut next = vec![BigUint::one(); k];
        for j in 1..k {
            next[j] = &row[j] + &row[j - 1] + &next[j - 1];
        }
        row = next;
    }
    let total = row.pop().expect("k >= 1");

    let (n, r) = ((m + k - 2) as u64, (m.min(k) - 1) as u64);
    let mut binom = BigUint::one();
    for i in 0..r {
        binom = binom * (n - i) / (i + 1);
    }
    Ok((total, binom))
}
