//! LLL reduction and Fincke–Pohst enumeration for a real positive definite Gram matrix.

use rayon::prelude::*;

type Mat = Vec<Vec<f64>>;

fn gram_of(u: &[Vec<i64>], g0: &Mat) -> Mat {
    let n = u.len();
    let ug: Mat = u
        .iter()
        .map(|row| (0..n).map(|j| row.iter().enumerate().map(|(k, &x)| x as f64 * g0[k][j]).sum()).collect())
        .collect();
    (0..n).map(|i| (0..n).map(|j| u[j].iter().enumerate().map(|(k, &x)| ug[i][k] * x as f64).sum()).collect()).collect()
}

/// Gram–Schmidt data (μ, ‖b*‖²) from a Gram matrix.
fn gso(g: &Mat) -> (Mat, Vec<f64>) {
    let n = g.len();
    let mut mu = vec![vec![0.0; n]; n];
    let mut bs = vec![0.0; n];
    for i in 0..n {
        for j in 0..i {
            let mut s = g[i][j];
            for k in 0..j {
                s -= mu[j][k] * mu[i][k] * bs[k];
            }
            mu[i][j] = s / bs[j];
        }
        let mut s = g[i][i];
        for k in 0..i {
            s -= mu[i][k] * mu[i][k] * bs[k];
        }
        bs[i] = s;
    }
    (mu, bs)
}

/// LLL with δ = 0.99. Returns U with rows the reduced basis in the input coordinates.
pub fn lll(g0: &Mat) -> Vec<Vec<i64>> {
    let n = g0.len();
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut g = g0.clone();
    let mut k = 1;
    let mut steps = 0usize;
    while k < n {
        steps += 1;
        assert!(steps < 10_000_000, "LLL did not terminate");
        let (mut mu, _) = gso(&g);
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if q == 0.0 {
                continue;
            }
            let qi = q as i64;
            let bj = u[j].clone();
            for (x, y) in u[k].iter_mut().zip(&bj) {
                *x -= qi * y;
            }
            // G ← E G Eᵀ for the row operation b_k −= q b_j
            let gkk = g[k][k] - 2.0 * q * g[k][j] + q * q * g[j][j];
            for l in 0..n {
                if l != k {
                    g[k][l] -= q * g[j][l];
                    g[l][k] = g[k][l];
                }
            }
            g[k][k] = gkk;
            for l in 0..j {
                mu[k][l] -= q * mu[j][l];
            }
            mu[k][j] -= q;
        }
        let (mu, bs) = gso(&g);
        if bs[k] >= (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bs[k - 1] {
            k += 1;
        } else {
            u.swap(k, k - 1);
            g.swap(k, k - 1);
            for row in g.iter_mut() {
                row.swap(k, k - 1);
            }
            k = (k - 1).max(1);
        }
    }
    u
}

/// All nonzero x with xᵀGx ≤ r (both x and −x). `g` should be reduced.
pub fn short_vectors(g: &Mat, r: f64) -> Vec<Vec<i64>> {
    let n = g.len();
    let (mu, bs) = gso(g);
    // Q(x) = Σ_i bs_i (x_i + Σ_{j>i} μ_ji x_j)²
    let top = n - 1;
    let bound = (r / bs[top]).sqrt().floor() as i64;
    (-bound..=bound)
        .into_par_iter()
        .flat_map_iter(|xt| {
            let mut out = Vec::new();
            let mut x = vec![0i64; n];
            x[top] = xt;
            let used = bs[top] * (xt * xt) as f64;
            if used <= r {
                descend(&mu, &bs, r, top, used, &mut x, &mut out);
            }
            out
        })
        .filter(|x: &Vec<i64>| x.iter().any(|&v| v != 0))
        .collect()
}

fn descend(mu: &Mat, bs: &[f64], r: f64, level: usize, used: f64, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if level == 0 {
        out.push(x.clone());
        return;
    }
    let i = level - 1;
    let n = x.len();
    let c: f64 = -(i + 1..n).map(|j| mu[j][i] * x[j] as f64).sum::<f64>();
    let rem = (r - used).max(0.0);
    let w = (rem / bs[i]).sqrt();
    let lo = (c - w).ceil() as i64;
    let hi = (c + w).floor() as i64;
    for v in lo..=hi {
        let d = v as f64 - c;
        let u2 = used + bs[i] * d * d;
        if u2 <= r {
            x[i] = v;
            descend(mu, bs, r, i, u2, x, out);
        }
    }
    x[i] = 0;
}

/// Short vectors of g0 in the original coordinates.
pub fn enumerate(g0: &Mat, r: f64) -> Vec<Vec<i64>> {
    let u = lll(g0);
    let g = gram_of(&u, g0);
    let n = g0.len();
    short_vectors(&g, r).into_iter().map(|x| (0..n).map(|j| (0..n).map(|i| x[i] * u[i][j]).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_minimal_vectors() {
        // hexagonal lattice: 6 vectors of norm 1
        let g = vec![vec![1.0, -0.5], vec![-0.5, 1.0]];
        assert_eq!(enumerate(&g, 1.0 + 1e-9).len(), 6);
        assert_eq!(enumerate(&g, 3.0 + 1e-9).len(), 12);
    }

    #[test]
    fn skewed_basis_is_reduced() {
        // ℤ² with basis (1, 0), (100, 1)
        let g = vec![vec![1.0, 100.0], vec![100.0, 10001.0]];
        let v = enumerate(&g, 1.0 + 1e-9);
        assert_eq!(v.len(), 4);
    }
}
