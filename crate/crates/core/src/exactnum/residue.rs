//! ℰ/13ℰ ≅ ℰ/p₁ℰ ⊕ ℰ/p̄₁ℰ ≅ F₁₃ ⊕ F₁₃.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Eisenstein;

/// A pair of residues mod 13. The first coordinate is reduction mod p₁ = 3 − ω
/// (ω ↦ 3), the second is reduction mod p̄₁ (ω ↦ 9).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue13 {
    pub u: u8,
    pub v: u8,
}

fn m13(x: i64) -> u8 {
    x.rem_euclid(13) as u8
}

pub fn crt13(x: &Eisenstein) -> Residue13 {
    Residue13 {
        u: m13(x.a.rem_euclid(13) + 3 * x.b.rem_euclid(13)),
        v: m13(x.a.rem_euclid(13) + 9 * x.b.rem_euclid(13)),
    }
}

impl Residue13 {
    pub const ONE: Residue13 = Residue13 { u: 1, v: 1 };

    pub fn new(u: i64, v: i64) -> Self {
        Residue13 { u: m13(u), v: m13(v) }
    }

    /// Inverse CRT: the representative a + bω with 0 ≤ a, b < 13.
    pub fn lift(&self) -> Eisenstein {
        // a + 3b ≡ u, a + 9b ≡ v ⇒ 6b ≡ v − u ⇒ b ≡ 11(v − u)
        let b = (11 * (self.v as i64 - self.u as i64)).rem_euclid(13);
        let a = (self.u as i64 - 3 * b).rem_euclid(13);
        Eisenstein::new(a, b)
    }

    pub fn is_unit(&self) -> bool {
        self.u != 0 && self.v != 0
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Residue13::ONE;
        for _ in 0..e {
            acc = acc * *self;
        }
        acc
    }
}

impl Add for Residue13 {
    type Output = Residue13;
    fn add(self, o: Residue13) -> Residue13 {
        Residue13::new(self.u as i64 + o.u as i64, self.v as i64 + o.v as i64)
    }
}

impl Sub for Residue13 {
    type Output = Residue13;
    fn sub(self, o: Residue13) -> Residue13 {
        Residue13::new(self.u as i64 - o.u as i64, self.v as i64 - o.v as i64)
    }
}

impl Mul for Residue13 {
    type Output = Residue13;
    fn mul(self, o: Residue13) -> Residue13 {
        Residue13::new(self.u as i64 * o.u as i64, self.v as i64 * o.v as i64)
    }
}

impl Neg for Residue13 {
    type Output = Residue13;
    fn neg(self) -> Residue13 {
        Residue13::new(-(self.u as i64), -(self.v as i64))
    }
}

impl fmt::Display for Residue13 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_images() {
        assert_eq!(crt13(&Eisenstein::OMEGA), Residue13::new(3, 9));
        assert_eq!(crt13(&Eisenstein::OMEGA_BAR), Residue13::new(9, 3));
        assert_eq!(crt13(&(Eisenstein::P * 3)), Residue13::new(2, 7));
        assert_eq!(crt13(&Eisenstein::P1), Residue13::new(0, 7));
    }

    #[test]
    fn kernel_is_13() {
        for a in 0..13 {
            for b in 0..13 {
                let r = crt13(&Eisenstein::new(a, b));
                assert_eq!(r == Residue13::new(0, 0), a == 0 && b == 0);
                assert_eq!(r.lift(), Eisenstein::new(a, b));
            }
        }
    }
}
