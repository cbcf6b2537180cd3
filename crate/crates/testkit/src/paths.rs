//! Exhaustive warping-path enumeration.

/// Every warping path from `(1, 1)` to `(m, k)` with unit steps.
pub fn enumerate_warping_paths(m: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(i: usize, j: usize, m: usize, k: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        cur.push((i, j));
        if (i, j) == (m, k) {
            out.push(cur.clone());
        } else {
            for (di, dj) in [(1, 1), (1, 0), (0, 1)] {
                if i + di <= m && j + dj <= k {
                    go(i + di, j + dj, m, k, cur, out);
                }
            }
        }
        cur.pop();
    }
    let mut out = Vec::new();
    go(1, 1, m, k, &mut Vec::new(), &mut out);
    out
}

/// Paths whose `i` and `j` sequences are both non-decreasing from `(1, 1)`
/// to `(m, k)` with `i` and `j` advancing by 0 or 1, counted by brute force
/// over step strings.
pub fn count_by_step_strings(m: usize, k: usize) -> usize {
    // Steps: 0 = (1,0), 1 = (0,1), 2 = (1,1). Longest path has m + k - 2 steps.
    let max_len = m + k - 2;
    let mut count = 0;
    for len in 0..=max_len {
        let total = 3usize.pow(len as u32);
        for code in 0..total {
            let (mut i, mut j, mut c) = (1, 1, code);
            for _ in 0..len {
                match c % 3 {
                    0 => i += 1,
                    1 => j += 1,
                    _ => {
                        i += 1;
                        j += 1
                    }
                }
                c /= 3;
            }
            if (i, j) == (m, k) {
                count += 1;
            }
        }
    }
    count
}

/// Sum of squared distances along `path`, accumulated in path order.
pub fn path_cost(p: &[Vec<f64>], q: &[Vec<f64>], path: &[(usize, usize)]) -> f64 {
    path.iter().fold(0.0, |acc, &(i, j)| {
        acc + p[i - 1]
            .iter()
            .zip(&q[j - 1])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
    })
}
