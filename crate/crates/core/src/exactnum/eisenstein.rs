//! The Eisenstein integers ℰ = ℤ[ω], ω = e^{2πi/3}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ExactError;

/// `a + bω` with ω² = −1 − ω.
///
/// Arithmetic is checked: an overflow of the 64-bit coordinates panics
/// instead of wrapping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

#[inline]
fn ck_add(x: i64, y: i64) -> i64 {
    x.checked_add(y).expect("Eisenstein integer overflow")
}

#[inline]
fn ck_sub(x: i64, y: i64) -> i64 {
    x.checked_sub(y).expect("Eisenstein integer overflow")
}

#[inline]
fn ck_mul(x: i64, y: i64) -> i64 {
    x.checked_mul(y).expect("Eisenstein integer overflow")
}

/// Rounds `n/d` (d > 0) to the nearest integer, ties toward zero.
fn round_div(n: i128, d: i128) -> i128 {
    debug_assert!(d > 0);
    let q = n / d;
    let r = n - q * d;
    if 2 * r.abs() > d {
        q + n.signum()
    } else {
        q
    }
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
    pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
    pub const OMEGA: Eisenstein = Eisenstein { a: 0, b: 1 };
    /// ω̄ = ω² = −1 − ω.
    pub const OMEGA_BAR: Eisenstein = Eisenstein { a: -1, b: -1 };
    /// p = 2 + ω, the prime of norm 3.
    pub const P: Eisenstein = Eisenstein { a: 2, b: 1 };
    /// p̄ = 1 − ω.
    pub const P_BAR: Eisenstein = Eisenstein { a: 1, b: -1 };
    /// p₁ = 3 − ω, a prime of norm 13.
    pub const P1: Eisenstein = Eisenstein { a: 3, b: -1 };
    /// θ = ω − ω̄ = 1 + 2ω = i√3.
    pub const THETA: Eisenstein = Eisenstein { a: 1, b: 2 };

    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        Eisenstein { a, b: 0 }
    }

    /// The six units ±1, ±ω, ±ω², in the order ω^0..ω^5 of −ω̄ = e^{iπ/3}.
    pub fn units() -> [Eisenstein; 6] {
        let eta = Eisenstein::new(1, 1); // 1 + ω = e^{iπ/3}
        let mut out = [Eisenstein::ONE; 6];
        for k in 1..6 {
            out[k] = out[k - 1] * eta;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn conj(&self) -> Self {
        Eisenstein::new(ck_sub(self.a, self.b), -self.b)
    }

    /// `x · x̄ = a² − ab + b²`.
    pub fn norm(&self) -> i64 {
        let (a, b) = (self.a as i128, self.b as i128);
        i64::try_from(a * a - a * b + b * b).expect("Eisenstein norm overflow")
    }

    pub fn to_complex(&self) -> Complex64 {
        let s3 = 3f64.sqrt();
        Complex64::new(self.a as f64 - 0.5 * self.b as f64, 0.5 * s3 * self.b as f64)
    }

    /// Exact quotient if `other` divides `self`.
    pub fn div_exact(&self, other: &Eisenstein) -> Option<Eisenstein> {
        if other.is_zero() {
            return None;
        }
        let num = *self * other.conj();
        let n = other.norm();
        if num.a % n == 0 && num.b % n == 0 {
            Some(Eisenstein::new(num.a / n, num.b / n))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Eisenstein) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// Norm-Euclidean division: `self = q·other + r` with `N(r) < N(other)`.
    ///
    /// Each coordinate of the exact quotient is rounded to the nearest
    /// integer, ties toward zero.
    pub fn div_rem(&self, other: &Eisenstein) -> Result<(Eisenstein, Eisenstein), ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let num = *self * other.conj();
        let n = other.norm() as i128;
        let qa = round_div(num.a as i128, n);
        let qb = round_div(num.b as i128, n);
        let q = Eisenstein::new(
            i64::try_from(qa).expect("quotient overflow"),
            i64::try_from(qb).expect("quotient overflow"),
        );
        let r = *self - q * *other;
        debug_assert!(r.norm() < other.norm());
        Ok((q, r))
    }

    pub fn gcd(&self, other: &Eisenstein) -> Eisenstein {
        let (mut x, mut y) = (*self, *other);
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.canonical_associate().0
    }

    /// Returns `(u·self, u)` where `u` is the unit putting the value in the
    /// sector `0 ≤ b < a` (argument in `[0, π/3)`). Zero maps to itself.
    pub fn canonical_associate(&self) -> (Eisenstein, Eisenstein) {
        if self.is_zero() {
            return (*self, Eisenstein::ONE);
        }
        for u in Eisenstein::units() {
            let v = *self * u;
            if 0 <= v.b && v.b < v.a {
                return (v, u);
            }
        }
        unreachable!("every nonzero Eisenstein integer has an associate in the sector")
    }

    /// Residue modulo p̄ = 1 − ω, identifying ℰ/p̄ℰ with F₃ via ω ↦ 1.
    pub fn residue_mod_pbar(&self) -> u8 {
        (self.a + self.b).rem_euclid(3) as u8
    }

    pub fn pow(&self, mut e: u32) -> Eisenstein {
        let mut base = *self;
        let mut acc = Eisenstein::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// All elements of norm exactly `n`.
    pub fn with_norm(n: i64) -> Vec<Eisenstein> {
        let mut out = Vec::new();
        if n == 0 {
            out.push(Eisenstein::ZERO);
            return out;
        }
        // a² − ab + b² = n ⇒ |b| ≤ 2√(n/3)
        let bmax = (2.0 * (n as f64 / 3.0).sqrt()).ceil() as i64 + 1;
        for b in -bmax..=bmax {
            for a in -bmax - 1..=bmax + 1 {
                let e = Eisenstein::new(a, b);
                if e.norm() == n {
                    out.push(e);
                }
            }
        }
        out.sort();
        out
    }
}

/// Eisenstein norm of a single value.
pub fn eis_norm(x: &Eisenstein) -> i64 {
    x.norm()
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(ck_add(self.a, o.a), ck_add(self.b, o.b))
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(ck_sub(self.a, o.a), ck_sub(self.b, o.b))
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: Eisenstein) -> Eisenstein {
        let bd = ck_mul(self.b, o.b);
        Eisenstein::new(ck_sub(ck_mul(self.a, o.a), bd), ck_sub(ck_add(ck_mul(self.a, o.b), ck_mul(self.b, o.a)), bd))
    }
}

impl Mul<i64> for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, k: i64) -> Eisenstein {
        Eisenstein::new(ck_mul(self.a, k), ck_mul(self.b, k))
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.a, -self.b)
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, o: Eisenstein) {
        *self = *self + o;
    }
}

impl SubAssign for Eisenstein {
    fn sub_assign(&mut self, o: Eisenstein) {
        *self = *self - o;
    }
}

impl std::iter::Sum for Eisenstein {
    fn sum<I: Iterator<Item = Eisenstein>>(iter: I) -> Self {
        iter.fold(Eisenstein::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "ω"),
            (0, -1) => write!(f, "-ω"),
            (0, b) => write!(f, "{b}ω"),
            (a, 1) => write!(f, "{a}+ω"),
            (a, -1) => write!(f, "{a}-ω"),
            (a, b) if b > 0 => write!(f, "{a}+{b}ω"),
            (a, b) => write!(f, "{a}{b}ω"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_of_named_primes() {
        assert_eq!(eis_norm(&Eisenstein::P), 3);
        assert_eq!(eis_norm(&Eisenstein::P1), 13);
        assert_eq!(eis_norm(&Eisenstein::ZERO), 0);
        assert_eq!(Eisenstein::THETA.norm(), 3);
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = Eisenstein::OMEGA;
        assert_eq!(w * w, Eisenstein::OMEGA_BAR);
        assert_eq!(w * w * w, Eisenstein::ONE);
        assert_eq!(w.conj(), Eisenstein::OMEGA_BAR);
        assert_eq!(Eisenstein::P.conj(), Eisenstein::P_BAR);
    }

    #[test]
    fn units_are_sixth_roots() {
        let us = Eisenstein::units();
        for u in us {
            assert!(u.is_unit());
        }
        let mut sorted = us.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn euclidean_division_ties_toward_zero() {
        // 1 / 2: exact quotient 1/2 rounds to 0
        let (q, r) = Eisenstein::ONE.div_rem(&Eisenstein::from_int(2)).unwrap();
        assert_eq!(q, Eisenstein::ZERO);
        assert_eq!(r, Eisenstein::ONE);
        let (q, _) = Eisenstein::from_int(-3).div_rem(&Eisenstein::from_int(2)).unwrap();
        assert_eq!(q, Eisenstein::from_int(-1));
        assert!(Eisenstein::ONE.div_rem(&Eisenstein::ZERO).is_err());
    }

    #[test]
    fn thirteen_splits() {
        assert_eq!(Eisenstein::P1 * Eisenstein::P1.conj(), Eisenstein::from_int(13));
        assert!(Eisenstein::P1.divides(&Eisenstein::from_int(13)));
        assert!(!Eisenstein::P1.divides(&Eisenstein::ONE));
    }

    #[test]
    fn gcd_of_associates() {
        let g = (Eisenstein::P * Eisenstein::P1).gcd(&(Eisenstein::P * Eisenstein::from_int(2)));
        assert_eq!(g, Eisenstein::P.canonical_associate().0);
    }

    #[test]
    fn with_norm_counts() {
        assert_eq!(Eisenstein::with_norm(1).len(), 6);
        assert_eq!(Eisenstein::with_norm(3).len(), 6);
        assert_eq!(Eisenstein::with_norm(7).len(), 12);
        assert_eq!(Eisenstein::with_norm(2).len(), 0);
    }
}
