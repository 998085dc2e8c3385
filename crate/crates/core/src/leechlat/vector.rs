//! Vectors of the ambient space.
//!
//! Everything is stored in *scaled frame* coordinates: a vector with
//! reference-basis coordinates c = (c₀, c₁, …, c_n) with respect to
//! (w_P, x₁, …, x_n) is stored as s = p̄·c. In these coordinates the form is
//! ⟨s, t⟩ = s̄₀t₀ − Σ s̄ᵢtᵢ (conjugate-linear in the first slot), points are
//! p̄·e_x, lines are e₀ − Σ_{x∈l} e_x and w_P = p̄·e₀.

use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::exactnum::{Cyclo12, Eisenstein};

/// Integral vector in scaled frame coordinates.
pub type EVec = Vec<Eisenstein>;

pub fn ip_e(u: &[Eisenstein], v: &[Eisenstein]) -> Eisenstein {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = u[0].conj() * v[0];
    for (a, b) in u[1..].iter().zip(&v[1..]) {
        if !a.is_zero() && !b.is_zero() {
            acc -= a.conj() * *b;
        }
    }
    acc
}

pub fn norm_e(u: &[Eisenstein]) -> i64 {
    let mut acc = u[0].norm();
    for a in &u[1..] {
        acc -= a.norm();
    }
    acc
}

pub fn add_e(u: &[Eisenstein], v: &[Eisenstein]) -> EVec {
    u.iter().zip(v).map(|(a, b)| *a + *b).collect()
}

pub fn sub_e(u: &[Eisenstein], v: &[Eisenstein]) -> EVec {
    u.iter().zip(v).map(|(a, b)| *a - *b).collect()
}

pub fn scale_e(c: Eisenstein, u: &[Eisenstein]) -> EVec {
    u.iter().map(|a| c * *a).collect()
}

/// Whether `u` and `v` are ℰ-unit multiples of each other; returns the unit
/// `c` with `v = c·u`.
pub fn unit_ratio(u: &[Eisenstein], v: &[Eisenstein]) -> Option<Eisenstein> {
    Eisenstein::units().into_iter().find(|c| scale_e(*c, u) == v)
}

/// Exact vector with coordinates in ℚ(ζ₁₂), same scaled frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeVector {
    pub s: Vec<Cyclo12>,
}

impl LatticeVector {
    pub fn zero(dim: usize) -> Self {
        LatticeVector { s: vec![Cyclo12::zero(); dim] }
    }

    pub fn from_e(v: &[Eisenstein]) -> Self {
        LatticeVector { s: v.iter().map(|x| Cyclo12::from(*x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.s.len()
    }

    pub fn ip(&self, o: &LatticeVector) -> Cyclo12 {
        let mut acc = &self.s[0].conj() * &o.s[0];
        for (a, b) in self.s[1..].iter().zip(&o.s[1..]) {
            if !a.is_zero() && !b.is_zero() {
                acc -= &(&a.conj() * b);
            }
        }
        acc
    }

    /// ⟨v, v⟩ as an element of ℚ(√3).
    pub fn norm(&self) -> crate::exactnum::RealQ3 {
        self.ip(self).to_real().expect("Hermitian norm is real")
    }

    pub fn scale(&self, c: &Cyclo12) -> Self {
        LatticeVector { s: self.s.iter().map(|x| c * x).collect() }
    }

    /// Integral coordinates, if every entry lies in ℰ.
    pub fn to_e(&self) -> Option<EVec> {
        self.s.iter().map(|x| x.to_eisenstein()).collect()
    }

    /// Coordinates with respect to (w_P, x₁, …, x_n): s/p̄.
    pub fn reference_coords(&self) -> Vec<Cyclo12> {
        let pbar_inv = Cyclo12::from(Eisenstein::P_BAR).inv().expect("p̄ ≠ 0");
        self.s.iter().map(|x| x * &pbar_inv).collect()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.s.iter().map(|x| x.to_complex()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.s.iter().all(|x| x.is_zero())
    }
}

impl<'a> Add<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: &LatticeVector) -> LatticeVector {
        LatticeVector { s: self.s.iter().zip(&o.s).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;
    fn sub(self, o: &LatticeVector) -> LatticeVector {
        LatticeVector { s: self.s.iter().zip(&o.s).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { s: self.s.iter().map(|a| -a).collect() }
    }
}

/// Hermitian product of float vectors in the same frame.
pub fn ip_c(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    let mut acc = u[0].conj() * v[0];
    for (a, b) in u[1..].iter().zip(&v[1..]) {
        acc -= a.conj() * b;
    }
    acc
}
