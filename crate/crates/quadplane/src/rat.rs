//! Exact rational scalars.
//!
//! [`Rat`] is the coefficient field for everything in this crate: map
//! coefficients, polynomial coefficients, discriminants, certificates.
//! Values are always stored reduced with a positive denominator; zero is
//! `0/1`. The wire format is the decimal string `"n"` or `"n/d"`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision signed rational, stored reduced with denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Integer value.
    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d` from machine integers. Panics if `d == 0`; use [`Rat::new`]
    /// for fallible construction from untrusted input.
    pub fn frac(n: i64, d: i64) -> Self {
        assert!(d != 0, "Rat::frac with zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Sign as -1, 0, or 1.
    pub fn signum(&self) -> i8 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i32) -> Result<Self, Error> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.pow(exp)))
    }

    /// Nearest binary64 value (for display and flagged numeric steps only).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact rational value of a finite binary64.
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        BigRational::from_f64(x).map(Rat)
    }

    /// Exact rational square root, if one exists. `None` for negative input
    /// or when the reduced numerator/denominator are not perfect squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(Rat(BigRational::new(ns, ds)))
        } else {
            None
        }
    }

    /// Exact rational cube root, if one exists.
    pub fn cbrt_exact(&self) -> Option<Self> {
        let cbrt_int = |n: &BigInt| -> Option<BigInt> {
            let c = n.cbrt();
            if &(&c * &c * &c) == n {
                Some(c)
            } else {
                None
            }
        };
        let nc = cbrt_int(self.numer())?;
        let dc = cbrt_int(self.denom())?;
        Some(Rat(BigRational::new(nc, dc)))
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

/// The rational with the smallest denominator in the open interval
/// `(a, b)` (numerator 1 preferred among equals), by the classic
/// continued-fraction walk. Used to recognize rational roots sitting
/// inside tight isolating intervals.
pub fn simplest_in_open(a: &Rat, b: &Rat) -> Rat {
    assert!(a < b, "simplest_in_open needs a < b");
    if a.is_negative() && b.is_positive() {
        return Rat::zero();
    }
    if !b.is_positive() {
        return -simplest_in_open(&-b, &-a);
    }
    // now 0 <= a < b
    if a.is_zero() {
        if b > &Rat::one() {
            return Rat::one();
        }
        // 1/m with m the smallest integer > 1/b
        let inv = b.recip().expect("b > 0");
        let floor = num_integer::Integer::div_floor(inv.numer(), inv.denom());
        let m = Rat::from_bigint(floor) + Rat::one();
        return m.recip().expect("m >= 1");
    }
    let floor = Rat::from_bigint(num_integer::Integer::div_floor(a.numer(), a.denom()));
    let next = &floor + Rat::one();
    if &next < b {
        return next;
    }
    if &floor == a {
        // a is an integer: (a, b) with b <= a + 1
        return &floor + simplest_in_open(&Rat::zero(), &(b - &floor));
    }
    // strictly between consecutive integers: recurse on reciprocals
    let lo = (b - &floor).recip().expect("positive");
    let hi = (a - &floor).recip().expect("positive");
    &floor + simplest_in_open(&lo, &hi).recip().expect("positive")
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let parse_int =
            |t: &str| BigInt::from_str(t.trim()).map_err(|_| Error::ParseRational(s.to_string()));
        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let numer = parse_int(n)?;
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Rat(BigRational::new(numer, denom)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

// Division panics on a zero divisor; certificate code paths that can see
// user-controlled divisors go through `checked_div`.
forward_binop!(Div, div, /);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}
