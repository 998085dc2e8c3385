//! Discriminant groups via Smith normal form of the realified Gram matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactnum::EisMatrix;

use super::LatticeError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscGroup {
    /// |M′/M|.
    #[serde(serialize_with = "ser_big")]
    pub order: BigInt,
    /// Invariant factors greater than 1, in divisibility order.
    #[serde(serialize_with = "ser_big_vec")]
    pub invariants: Vec<BigInt>,
    /// Prime factorization of the order.
    pub factored: Vec<(u64, u32)>,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_big_vec<S: serde::Serializer>(x: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(x.len()))?;
    for v in x {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

/// Multiplication by a + bω on ℰ = ℤ·1 ⊕ ℤ·ω, as the block [[a, −b], [b, a − b]].
pub fn realify(m: &EisMatrix) -> Vec<Vec<BigInt>> {
    let (r, c) = (m.rows(), m.cols());
    let mut out = vec![vec![BigInt::zero(); 2 * c]; 2 * r];
    for i in 0..r {
        for j in 0..c {
            let e = m[(i, j)];
            out[2 * i][2 * j] = e.a.into();
            out[2 * i][2 * j + 1] = (-e.b).into();
            out[2 * i + 1][2 * j] = e.b.into();
            out[2 * i + 1][2 * j + 1] = (e.a - e.b).into();
        }
    }
    out
}

/// Diagonal of the Smith normal form (nonnegative, each dividing the next).
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish(diag, rows.min(cols));
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in (t + 1)..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in (t + 1)..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    finish(diag, rows.min(cols))
}

fn finish(mut diag: Vec<BigInt>, n: usize) -> Vec<BigInt> {
    diag.resize(n, BigInt::zero());
    diag
}

fn factor(n: &BigInt) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n.abs();
    let mut p = 2u64;
    while m > BigInt::one() && p < 1_000_000 {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    out
}

/// D(M) = M′/M for an ℰ-lattice with Gram matrix `gram`, where M′ is the
/// ℰ-dual {v : ⟨v, M⟩ ⊆ ℰ}. Its order is |det gram|² = |det realify(gram)|.
pub fn disc_group(gram: &EisMatrix) -> Result<DiscGroup, LatticeError> {
    let d = smith_diagonal(&realify(gram));
    if d.iter().any(|x| x.is_zero()) {
        return Err(LatticeError::Degenerate);
    }
    let order: BigInt = d.iter().product();
    let invariants: Vec<BigInt> = d.into_iter().filter(|x| !x.is_one()).collect();
    let factored = factor(&order);
    Ok(DiscGroup { order, invariants, factored })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Eisenstein;

    #[test]
    fn unimodular_rank_one() {
        let g = EisMatrix::from_rows(&[vec![Eisenstein::from_int(-1)]]);
        assert_eq!(disc_group(&g).unwrap().order, BigInt::one());
    }

    #[test]
    fn norm_three_rank_one() {
        let g = EisMatrix::from_rows(&[vec![Eisenstein::from_int(3)]]);
        let d = disc_group(&g).unwrap();
        assert_eq!(d.order, BigInt::from(9));
        assert_eq!(d.invariants, vec![BigInt::from(3), BigInt::from(3)]);
    }

    #[test]
    fn degenerate_rejected() {
        let g = EisMatrix::from_rows(&[vec![Eisenstein::ONE, Eisenstein::ONE], vec![Eisenstein::ONE, Eisenstein::ONE]]);
        assert!(disc_group(&g).is_err());
    }
}
