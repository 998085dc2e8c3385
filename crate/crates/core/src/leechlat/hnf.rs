//! Echelon forms over ℰ and small exact linear algebra over ℚ(ω) ⊂ ℚ(ζ₁₂).

use crate::exactnum::{Cyclo12, EisMatrix, Eisenstein};

use super::vector::EVec;

/// Hermite-style row echelon form of the ℰ-span of `rows`: pivots are
/// canonical associates and entries above a pivot are Euclidean remainders.
/// Returns the nonzero rows, which form an ℰ-basis of the span.
pub fn hnf(rows: &[EVec]) -> Vec<EVec> {
    let mut a: Vec<EVec> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    if a.is_empty() {
        return a;
    }
    let ncols = a[0].len();
    let mut r = 0;
    for j in 0..ncols {
        if r == a.len() {
            break;
        }
        loop {
            // smallest nonzero entry in column j at or below row r
            let piv = (r..a.len()).filter(|&i| !a[i][j].is_zero()).min_by_key(|&i| (a[i][j].norm(), i));
            let Some(piv) = piv else { break };
            a.swap(r, piv);
            let mut done = true;
            for i in (r + 1)..a.len() {
                if a[i][j].is_zero() {
                    continue;
                }
                let (q, rem) = a[i][j].div_rem(&a[r][j]).expect("nonzero pivot");
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= q * *y;
                }
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][j].is_zero() {
            continue;
        }
        let (_, u) = a[r][j].canonical_associate();
        for x in a[r].iter_mut() {
            *x = *x * u;
        }
        for i in 0..r {
            if a[i][j].is_zero() {
                continue;
            }
            let (q, _) = a[i][j].div_rem(&a[r][j]).expect("nonzero pivot");
            let pr = a[r].clone();
            for (x, y) in a[i].iter_mut().zip(&pr) {
                *x -= q * *y;
            }
        }
        r += 1;
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    a
}

fn pivot_col(row: &[Eisenstein]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero")
}

/// Coefficients of `v` in an echelon basis, if `v` lies in its ℰ-span.
pub fn solve_echelon(basis: &[EVec], v: &[Eisenstein]) -> Option<Vec<Eisenstein>> {
    let mut w = v.to_vec();
    let mut coeffs = Vec::with_capacity(basis.len());
    for b in basis {
        let pc = pivot_col(b);
        let c = if w[pc].is_zero() { Eisenstein::ZERO } else { w[pc].div_exact(&b[pc])? };
        if !c.is_zero() {
            for (x, y) in w.iter_mut().zip(b) {
                *x -= c * *y;
            }
        }
        coeffs.push(c);
    }
    w.iter().all(|x| x.is_zero()).then_some(coeffs)
}

pub fn to_cyclo(m: &EisMatrix) -> Vec<Vec<Cyclo12>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| Cyclo12::from(*x)).collect()).collect()
}

/// Determinant by Gaussian elimination over the field.
pub fn det_cyclo(m: &[Vec<Cyclo12>]) -> Cyclo12 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Cyclo12::one();
    for j in 0..n {
        let Some(p) = (j..n).find(|&i| !a[i][j].is_zero()) else {
            return Cyclo12::zero();
        };
        if p != j {
            a.swap(p, j);
            det = -det;
        }
        det = &det * &a[j][j];
        let inv = a[j][j].inv().expect("nonzero pivot");
        for i in (j + 1)..n {
            if a[i][j].is_zero() {
                continue;
            }
            let f = &a[i][j] * &inv;
            for k in j..n {
                let t = &f * &a[j][k];
                a[i][k] -= &t;
            }
        }
    }
    det
}

/// Inverse by Gauss–Jordan elimination; `None` when singular.
pub fn inverse_cyclo(m: &[Vec<Cyclo12>]) -> Option<Vec<Vec<Cyclo12>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<Cyclo12>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Cyclo12::one() } else { Cyclo12::zero() }).collect()).collect();
    for j in 0..n {
        let p = (j..n).find(|&i| !a[i][j].is_zero())?;
        a.swap(p, j);
        inv.swap(p, j);
        let pinv = a[j][j].inv().ok()?;
        for k in 0..n {
            a[j][k] = &a[j][k] * &pinv;
            inv[j][k] = &inv[j][k] * &pinv;
        }
        for i in 0..n {
            if i == j || a[i][j].is_zero() {
                continue;
            }
            let f = a[i][j].clone();
            for k in 0..n {
                let t = &f * &a[j][k];
                a[i][k] -= &t;
                let t = &f * &inv[j][k];
                inv[i][k] -= &t;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    #[test]
    fn hnf_of_redundant_rows() {
        let rows =
            vec![vec![e(2, 1), e(0, 0)], vec![e(1, -1), e(0, 0)], vec![e(0, 0), e(3, 0)], vec![e(1, 0), e(1, 0)]];
        let h = hnf(&rows);
        assert_eq!(h.len(), 2);
        assert_eq!(h[0][0], Eisenstein::ONE);
        for r in &rows {
            assert!(solve_echelon(&h, r).is_some());
        }
        assert!(solve_echelon(&h, &[e(0, 0), e(2, 1)]).is_some());
        assert!(solve_echelon(&h, &[e(0, 0), e(0, 1)]).is_none());
    }

    #[test]
    fn det_and_inverse() {
        let m = EisMatrix::from_rows(&[vec![e(3, 0), e(8, 4)], vec![e(4, -4), e(3, 0)]]);
        let c = to_cyclo(&m);
        assert_eq!(det_cyclo(&c), Cyclo12::from_int(-39));
        let inv = inverse_cyclo(&c).unwrap();
        let prod: Cyclo12 = (0..2).map(|k| &c[0][k] * &inv[k][0]).sum();
        assert!(prod.is_one());
    }
}
