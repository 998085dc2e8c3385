//! Small finite fields F_q, q ≤ 9, by lookup tables.

use super::PlaneError;

/// Elements are `0..q`, encoded as base-p digit vectors of polynomials in the
/// generator; 0 and 1 are the additive and multiplicative identities.
#[derive(Clone, Debug)]
pub struct GaloisField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    neg: Vec<u8>,
}

/// Coefficients of the reduction polynomial x^k = Σ c_i x^i.
fn reduction(q: usize) -> Option<(usize, usize, Vec<usize>)> {
    match q {
        2 | 3 | 5 | 7 => Some((q, 1, vec![])),
        // x² = x + 1  (x² + x + 1)
        4 => Some((2, 2, vec![1, 1])),
        // x³ = x + 1  (x³ + x + 1)
        8 => Some((2, 3, vec![1, 1, 0])),
        // x² = −1 = 2  (x² + 1)
        9 => Some((3, 2, vec![2, 0])),
        _ => None,
    }
}

impl GaloisField {
    pub fn new(q: usize) -> Result<Self, PlaneError> {
        let (p, k, red) = reduction(q).ok_or(PlaneError::UnsupportedOrder(q))?;
        let digits = |x: usize| -> Vec<usize> {
            let mut v = vec![0; k];
            let mut y = x;
            for d in v.iter_mut() {
                *d = y % p;
                y /= p;
            }
            v
        };
        let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, d| acc * p + d) };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for x in 0..q {
            for y in 0..q {
                let (dx, dy) = (digits(x), digits(y));
                let s: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = encode(&s) as u8;

                let mut prod = vec![0usize; 2 * k];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                if k > 1 {
                    for deg in (k..2 * k - 1).rev() {
                        let c = prod[deg];
                        if c == 0 {
                            continue;
                        }
                        prod[deg] = 0;
                        for (i, r) in red.iter().enumerate() {
                            prod[deg - k + i] = (prod[deg - k + i] + c * r) % p;
                        }
                    }
                }
                mul[x * q + y] = encode(&prod[..k]) as u8;
            }
        }
        let mut inv = vec![0u8; q];
        let mut neg = vec![0u8; q];
        for x in 0..q {
            for y in 0..q {
                if mul[x * q + y] == 1 {
                    inv[x] = y as u8;
                }
                if add[x * q + y] == 0 {
                    neg[x] = y as u8;
                }
            }
        }
        let f = GaloisField { q, p, add, mul, inv, neg };
        f.check_axioms()?;
        Ok(f)
    }

    fn check_axioms(&self) -> Result<(), PlaneError> {
        for x in 1..self.q as u8 {
            if self.mul(x, self.inv(x)) != 1 {
                return Err(PlaneError::NotAField(self.q));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q + y as usize]
    }

    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q + y as usize]
    }

    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    pub fn inv(&self, x: u8) -> u8 {
        assert!(x != 0, "inverse of zero in F_q");
        self.inv[x as usize]
    }

    /// Smallest element generating the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        (1..self.q as u8)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .expect("multiplicative group is cyclic")
    }

    pub fn dot(&self, u: &[u8; 3], v: &[u8; 3]) -> u8 {
        let mut s = 0;
        for i in 0..3 {
            s = self.add(s, self.mul(u[i], v[i]));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            for x in 0..q as u8 {
                for y in 0..q as u8 {
                    for z in 0..q as u8 {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    }
                }
            }
            let _ = f.primitive_element();
        }
        assert!(GaloisField::new(6).is_err());
    }
}
