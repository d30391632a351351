//! Exact arithmetic in the rational-function field `Q(q)`.
//!
//! A [`RatFunc`] is stored in canonical form, so equality and hashing are
//! syntactic:
//!
//! * numerator and denominator are coprime as polynomials once powers of `q`
//!   are cleared;
//! * the denominator has minimal exponent 0 (all powers of `q` live in the
//!   numerator), integer coefficients with content 1, and a positive leading
//!   coefficient;
//! * zero is `0 / 1`.

mod laurent;
mod parse;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::{BigRat, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(BigRat),
    #[error("cannot parse rational function: {0}")]
    Parse(String),
}

/// An element of `Q(q)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    /// `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(BigRat::from_integer(BigInt::from(n)))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// A Laurent polynomial is already canonical over denominator 1.
    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// Builds `num / den` and normalizes.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// `sum_k coeffs[k] * q^(lo + k)` with integer coefficients.
    pub fn from_int_coeffs(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_poly(LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (lo + k as i64, BigRat::from_integer(BigInt::from(c)))),
        ))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        // Move every power of q into the numerator.
        let shift = den.min_exp().unwrap();
        let (mut num, mut den) = (num.shift(-shift), den.shift(-shift));
        if den.max_exp() != Some(0) {
            let g = num.poly_gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let c = den.content();
        if !c.is_one() {
            let inv = c.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value lies in `Q[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, RatFuncError> {
        if self.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, RatFuncError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        Ok(Self::normalized(base.num.pow(n), base.den.pow(n)))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &BigRat) -> Result<BigRat, RatFuncError> {
        let pole = || RatFuncError::Pole(point.clone());
        let d = self.den.eval(point).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.eval(point).ok_or_else(pole)?;
        Ok(n / d)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg_impl() } else { other.clone() };
        }
        let combine = |a: &LaurentPoly, b: &LaurentPoly| if negate { a.sub(b) } else { a.add(b) };
        if self.den == other.den {
            let num = combine(&self.num, &other.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::normalized(num, self.den.clone());
        }
        let num = combine(&self.num.mul(&other.den), &other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }

    fn neg_impl(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for RatFunc {
    /// `( numerator ) / ( denominator )`, each in ascending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "( {} ) / ( {} )", self.num, self.den)
    }
}

impl std::str::FromStr for RatFunc {
    type Err = RatFuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_ratfunc(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                $body(self, rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_impl(b));
forward_binop!(Div, div, |a: &RatFunc, b: &RatFunc| a
    .mul_impl(&b.inv().expect("division by zero in Q(q)")));

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_impl()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_impl()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

/// `q - q^-1`, which shows up in every Hecke quadratic relation.
pub fn q_minus_qinv() -> RatFunc {
    RatFunc::from_int_coeffs(-1, &[-1, 0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn qi() -> RatFunc {
        RatFunc::q_pow(-1)
    }

    #[test]
    fn add_examples() {
        // q + q^-1 = (q^2 + 1)/q
        let s = q() + qi();
        assert_eq!(s, RatFunc::from_int_coeffs(-1, &[1, 0, 1]));
        let x = RatFunc::from_int_coeffs(0, &[3, 1]).inv().unwrap();
        assert_eq!(&x + &RatFunc::zero(), x);
        assert!((q_minus_qinv() + (qi() - q())).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(q_minus_qinv() * q(), RatFunc::from_int_coeffs(0, &[-1, 0, 1]));
        let x = RatFunc::from_int_coeffs(2, &[1, -7]);
        assert_eq!(&x * &RatFunc::one(), x);
        let a = RatFunc::new(
            LaurentPoly::from_terms([(2, BigRat::one()), (0, -BigRat::one())]),
            LaurentPoly::q_pow(1),
        )
        .unwrap();
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn inv_examples() {
        assert_eq!(q().inv().unwrap(), qi());
        let v = q_minus_qinv().inv().unwrap();
        // q / (q^2 - 1)
        assert_eq!(v.numer(), &LaurentPoly::q_pow(1));
        assert_eq!(v.denom().to_string(), "-1 + 1*q^2");
        assert_eq!(RatFunc::one().inv().unwrap(), RatFunc::one());
        assert_eq!(RatFunc::zero().inv(), Err(RatFuncError::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        let a = RatFunc::from_int_coeffs(0, &[-1, 0, 1]) / q();
        let two = BigRat::from_integer(2.into());
        assert_eq!(a.eval(&two).unwrap(), BigRat::new(3.into(), 2.into()));
        let b = RatFunc::from_int_coeffs(0, &[-1, 0, 1]).inv().unwrap();
        assert!(matches!(b.eval(&BigRat::one()), Err(RatFuncError::Pole(_))));
        assert!(a.eval(&BigRat::zero()).is_err());
        assert!(RatFunc::zero().eval(&two).unwrap().is_zero());
    }

    #[test]
    fn canonical_denominator() {
        // (2q) / (4q^3 - 2q) = 1 / (2q^2 - 1)
        let x = RatFunc::new(
            LaurentPoly::from_terms([(1, BigRat::from_integer(2.into()))]),
            LaurentPoly::from_terms([
                (3, BigRat::from_integer(4.into())),
                (1, BigRat::from_integer((-2).into())),
            ]),
        )
        .unwrap();
        assert_eq!(x.to_string(), "( 1 ) / ( -1 + 2*q^2 )");
        // negative leading coefficient in the denominator flips to the numerator
        let y = RatFunc::new(
            LaurentPoly::one(),
            LaurentPoly::from_terms([(1, -BigRat::one()), (0, BigRat::one())]),
        )
        .unwrap();
        assert_eq!(y.to_string(), "( -1 ) / ( -1 + 1*q )");
    }

    #[test]
    fn display_roundtrip() {
        let x = (q_minus_qinv() / (q() + RatFunc::from_int(3))) * RatFunc::from_rat(BigRat::new(1.into(), 2.into()));
        let s = x.to_string();
        assert_eq!(s.parse::<RatFunc>().unwrap(), x);
        let ex: RatFunc = "( -1 + 1*q^2 ) / ( 1*q )".parse().unwrap();
        assert_eq!(ex, q_minus_qinv());
    }
}
