//! Real numbers of the form a + b√3 with rational a, b.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::fmt_rational;
use super::ExactError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealQ3 {
    a: BigRational,
    b: BigRational,
}

impl RealQ3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        RealQ3 { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        RealQ3::new(BigRational::from_integer(BigInt::from(a)), BigRational::from_integer(BigInt::from(b)))
    }

    pub fn from_rational(a: BigRational) -> Self {
        RealQ3::new(a, BigRational::zero())
    }

    pub fn zero() -> Self {
        RealQ3::from_ints(0, 0)
    }

    pub fn one() -> Self {
        RealQ3::from_ints(1, 0)
    }

    pub fn sqrt3() -> Self {
        RealQ3::from_ints(0, 1)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign in {−1, 0, 1}.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // mixed signs: compare a² with 3b²
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b * BigRational::from_integer(3.into());
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Galois conjugate a − b√3.
    pub fn galois(&self) -> Self {
        RealQ3::new(self.a.clone(), -&self.b)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        RealQ3::new(&self.a * r, &self.b * r)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        let n = &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(3.into());
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g = self.galois();
        Ok(RealQ3::new(g.a / &n, g.b / n))
    }

    pub fn div(&self, o: &RealQ3) -> Result<Self, ExactError> {
        Ok(self * &o.inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for RealQ3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealQ3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a RealQ3> for &'a RealQ3 {
    type Output = RealQ3;
    fn add(self, o: &RealQ3) -> RealQ3 {
        RealQ3::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a RealQ3> for &'a RealQ3 {
    type Output = RealQ3;
    fn sub(self, o: &RealQ3) -> RealQ3 {
        RealQ3::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a RealQ3> for &'a RealQ3 {
    type Output = RealQ3;
    fn mul(self, o: &RealQ3) -> RealQ3 {
        let three = BigRational::from_integer(3.into());
        RealQ3::new(&self.a * &o.a + &self.b * &o.b * three, &self.a * &o.b + &self.b * &o.a)
    }
}

impl Neg for &RealQ3 {
    type Output = RealQ3;
    fn neg(self) -> RealQ3 {
        RealQ3::new(-&self.a, -&self.b)
    }
}

impl Add for RealQ3 {
    type Output = RealQ3;
    fn add(self, o: RealQ3) -> RealQ3 {
        &self + &o
    }
}

impl Sub for RealQ3 {
    type Output = RealQ3;
    fn sub(self, o: RealQ3) -> RealQ3 {
        &self - &o
    }
}

impl Mul for RealQ3 {
    type Output = RealQ3;
    fn mul(self, o: RealQ3) -> RealQ3 {
        &self * &o
    }
}

impl Neg for RealQ3 {
    type Output = RealQ3;
    fn neg(self) -> RealQ3 {
        -&self
    }
}

impl fmt::Display for RealQ3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}√3", self.a, -&self.b)
                } else {
                    write!(f, "{} + {}√3", self.a, self.b)
                }
            }
        }
    }
}

impl serde::Serialize for RealQ3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [fmt_rational(&self.a), fmt_rational(&self.b)].serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_of_mixed() {
        assert_eq!(RealQ3::from_ints(2, -1).signum(), 1); // 2 − √3
        assert_eq!(RealQ3::from_ints(1, -1).signum(), -1);
        assert_eq!(RealQ3::from_ints(-7, 4).signum(), -1); // −7 + 4√3 ≈ −0.07
        assert_eq!(RealQ3::from_ints(0, 0).signum(), 0);
    }

    #[test]
    fn inverse() {
        let x = RealQ3::from_ints(4, 1);
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!((x.inv().unwrap().to_f64() - 1.0 / (4.0 + 3f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn ordering() {
        let a = RealQ3::from_ints(2, 0);
        let b = RealQ3::from_ints(0, 1);
        assert!(a > b);
        assert!(RealQ3::from_ints(1, 1) > a);
    }
}
