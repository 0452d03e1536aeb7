//! Exact arithmetic in ℚ(√5).

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The number `a + b·√5` with rational `a`, `b`.
///
/// `Ord` is the lexicographic order on `(a, b)`, used only to make sorted
/// output reproducible; [`QuadNum::real_cmp`] compares real values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadNum {
    pub a: BigRational,
    pub b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadNum { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QuadNum { a: rat(n, 1), b: BigRational::zero() }
    }

    /// `a_num/a_den + (b_num/b_den)·√5`.
    pub fn from_parts(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        QuadNum { a: rat(a_num, a_den), b: rat(b_num, b_den) }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadNum { a: BigRational::zero(), b: BigRational::one() }
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn golden() -> Self {
        Self::from_parts(1, 2, 1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rat(5, 1) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadNum { a: &self.a / &n, b: -&self.b / &n })
    }

    /// Sign of the real number `a + b√5`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            // opposite signs: compare a² with 5b²
            (x, _) => {
                let lhs = &self.a * &self.a;
                let rhs = rat(5, 1) * &self.b * &self.b;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn real_cmp(&self, other: &QuadNum) -> Ordering {
        (self - other).signum()
    }

    /// Exact coordinates `[a_num, a_den, b_num, b_den]`.
    pub fn parts(&self) -> [BigInt; 4] {
        [self.a.numer().clone(), self.a.denom().clone(), self.b.numer().clone(), self.b.denom().clone()]
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 2.236_067_977_499_79
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, o: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, o: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, o: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a * &o.a + rat(5, 1) * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }
}

impl Div for &QuadNum {
    type Output = QuadNum;
    fn div(self, o: &QuadNum) -> QuadNum {
        self * &o.inverse().expect("division by zero in Q(sqrt 5)")
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -&self.a, b: -&self.b }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadNum {
            type Output = QuadNum;
            fn $m(self, o: QuadNum) -> QuadNum { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√5", self.b)
        } else if self.b.is_negative() {
            write!(f, "{}-{}√5", self.a, -&self.b)
        } else {
            write!(f, "{}+{}√5", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_identities() {
        let t = QuadNum::golden();
        // τ² = τ + 1
        assert_eq!(&t * &t, &t + &QuadNum::one());
        // 1/τ = τ − 1
        assert_eq!(t.inverse().unwrap(), &t - &QuadNum::one());
        assert_eq!(t.norm(), rat(-1, 1));
        assert_eq!(&t * &t.conjugate(), QuadNum::from_int(-1));
    }

    #[test]
    fn signs() {
        assert_eq!(QuadNum::from_parts(3, 1, -1, 1).signum(), Ordering::Greater); // 3 − √5
        assert_eq!(QuadNum::from_parts(2, 1, -1, 1).signum(), Ordering::Less); // 2 − √5
        assert_eq!(QuadNum::from_parts(-3, 1, 1, 1).signum(), Ordering::Less);
        assert_eq!(QuadNum::zero().signum(), Ordering::Equal);
        assert_eq!(QuadNum::golden().real_cmp(&QuadNum::from_parts(8, 5, 0, 1)), Ordering::Greater);
        assert_eq!(QuadNum::golden().real_cmp(&QuadNum::from_parts(13, 8, 0, 1)), Ordering::Less);
    }

    #[test]
    fn division() {
        let x = QuadNum::from_parts(1, 3, -2, 7);
        let y = QuadNum::from_parts(5, 1, 1, 2);
        assert_eq!(&(&x / &y) * &y, x);
        assert!(QuadNum::zero().inverse().is_none());
    }
}
