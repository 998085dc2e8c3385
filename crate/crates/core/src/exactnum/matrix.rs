use std::ops::{Index, IndexMut, Mul};

use serde::Serialize;

use super::Eisenstein;

/// Dense row-major matrix over ℰ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EisMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Eisenstein>,
}

impl EisMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        EisMatrix { rows, cols, data: vec![Eisenstein::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = EisMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Eisenstein::ONE;
        }
        m
    }

    pub fn scalar(n: usize, s: Eisenstein) -> Self {
        let mut m = EisMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Eisenstein>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        EisMatrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: &[Vec<Eisenstein>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = EisMatrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Eisenstein] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Eisenstein> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = EisMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = EisMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Eisenstein]) -> Vec<Eisenstein> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| *a * *b).sum()).collect()
    }

    pub fn scale(&self, s: Eisenstein) -> Self {
        EisMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| *x * s).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == EisMatrix::identity(self.rows)
    }

    /// `Some(u)` when the matrix equals `u·I`.
    pub fn as_scalar(&self) -> Option<Eisenstein> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let s = self[(0, 0)];
        (*self == EisMatrix::scalar(self.rows, s)).then_some(s)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = EisMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn data(&self) -> &[Eisenstein] {
        &self.data
    }
}

impl Index<(usize, usize)> for EisMatrix {
    type Output = Eisenstein;
    fn index(&self, (i, j): (usize, usize)) -> &Eisenstein {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for EisMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Eisenstein {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a EisMatrix> for &'a EisMatrix {
    type Output = EisMatrix;
    fn mul(self, o: &EisMatrix) -> EisMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = EisMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }
}

impl Mul for EisMatrix {
    type Output = EisMatrix;
    fn mul(self, o: EisMatrix) -> EisMatrix {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_reverses_products() {
        let a =
            EisMatrix::from_rows(&[vec![Eisenstein::P, Eisenstein::OMEGA], vec![Eisenstein::ONE, Eisenstein::P_BAR]]);
        let b = EisMatrix::from_rows(&[
            vec![Eisenstein::new(1, 1), Eisenstein::ZERO],
            vec![Eisenstein::new(2, -3), Eisenstein::THETA],
        ]);
        assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
        assert_eq!(a.pow(0), EisMatrix::identity(2));
        assert_eq!(EisMatrix::scalar(3, Eisenstein::OMEGA).as_scalar(), Some(Eisenstein::OMEGA));
    }
}
