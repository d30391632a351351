use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type BigRat = BigRational;

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is zero,
/// so the zero polynomial is the empty term list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigRat)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRat, exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRat::one(), exp)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRat)>>(terms: I) -> Self {
        let mut v: Vec<(i64, BigRat)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigRat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i64, BigRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn coeff(&self, exp: i64) -> BigRat {
        self.terms
            .binary_search_by_key(&exp, |(e, _)| *e)
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| BigRat::zero())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ea, _)), Some((eb, _))) => ea.cmp(eb),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Self {
                terms: self.terms.iter().map(|(f, d)| (f + e, d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut dense = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i64, c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at `point`; `None` when `point = 0` meets a negative exponent.
    pub fn eval(&self, point: &BigRat) -> Option<BigRat> {
        if self.is_zero() {
            return Some(BigRat::zero());
        }
        if point.is_zero() {
            if self.min_exp().unwrap() < 0 {
                return None;
            }
            return Some(self.coeff(0));
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        // Horner on the polynomial divided by q^lo.
        let mut acc = BigRat::zero();
        let mut idx = self.terms.len();
        let mut e = hi;
        while e >= lo {
            acc *= point;
            if idx > 0 && self.terms[idx - 1].0 == e {
                acc += &self.terms[idx - 1].1;
                idx -= 1;
            }
            e -= 1;
        }
        Some(acc * pow_rat(point, lo))
    }

    /// Least common multiple of coefficient denominators and gcd of numerators.
    pub(crate) fn content_parts(&self) -> (BigInt, BigInt) {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        (num_gcd, den_lcm)
    }

    /// The rational `c` with `self / c` integral, primitive, and with positive leading coefficient.
    pub fn content(&self) -> BigRat {
        if self.is_zero() {
            return BigRat::one();
        }
        let (g, l) = self.content_parts();
        let c = BigRat::new(g, l);
        if self.leading_coeff().unwrap().is_negative() {
            -c
        } else {
            c
        }
    }

    /// Dense ordinary-polynomial coefficients after dividing by `q^min_exp`.
    fn to_dense(&self) -> Vec<BigRat> {
        let lo = match self.min_exp() {
            Some(e) => e,
            None => return Vec::new(),
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: Vec<BigRat>) -> Self {
        Self {
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64, c))
                .collect(),
        }
    }

    /// Monic gcd of `self` and `other` regarded as ordinary polynomials
    /// (both shifted to minimal exponent 0). Powers of `q` never divide the result.
    pub fn poly_gcd(&self, other: &Self) -> Self {
        let mut a = self.to_dense();
        let mut b = other.to_dense();
        if a.is_empty() {
            return monic(other.to_dense());
        }
        if b.is_empty() {
            return monic(a);
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = dense_rem(&a, &b);
            a = b;
            b = monic_dense(r);
        }
        monic(a)
    }

    /// Exact quotient of ordinary polynomials (after shifting both to minimal exponent 0).
    /// The caller guarantees divisibility; the returned poly has minimal exponent `self.min_exp() - divisor.min_exp()`
    /// adjusted so that `quotient * divisor == self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let a = self.to_dense();
        let b = divisor.to_dense();
        let (q, r) = dense_div_rem(&a, &b);
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_dense(q).shift(self.min_exp().unwrap() - divisor.min_exp().unwrap())
    }
}

fn pow_rat(x: &BigRat, e: i64) -> BigRat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

fn trim(v: &mut Vec<BigRat>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn monic_dense(mut v: Vec<BigRat>) -> Vec<BigRat> {
    trim(&mut v);
    if let Some(lc) = v.last().cloned() {
        if !lc.is_one() {
            for c in v.iter_mut() {
                *c /= &lc;
            }
        }
    }
    v
}

fn monic(v: Vec<BigRat>) -> LaurentPoly {
    LaurentPoly::from_dense(monic_dense(v))
}

fn dense_rem(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    dense_div_rem(a, b).1
}

fn dense_div_rem(a: &[BigRat], b: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let mut r: Vec<BigRat> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRat::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / lb;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    (q, r)
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `-1 + 1*q^2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRat::from_integer(c.into()))))
    }

    #[test]
    fn mul_and_add() {
        let a = p(&[(1, 1), (-1, -1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b), p(&[(2, 1), (-2, -1)]));
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn gcd_of_shifted() {
        // (q^2 - 1) q^-3 and (q - 1) q^5 share q - 1.
        let a = p(&[(-1, 1), (-3, -1)]);
        let b = p(&[(6, 1), (5, -1)]);
        assert_eq!(a.poly_gcd(&b), p(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(2, 1), (0, -1)]);
        let b = p(&[(1, 1), (0, 1)]);
        assert_eq!(a.exact_div(&b), p(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let a = p(&[(1, 1), (-1, -1)]);
        let two = BigRat::from_integer(2.into());
        assert_eq!(a.eval(&two).unwrap(), BigRat::new(3.into(), 2.into()));
        assert!(a.eval(&BigRat::zero()).is_none());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[(2, 1), (0, -1)]).to_string(), "-1 + 1*q^2");
        assert_eq!(p(&[(-1, 3)]).to_string(), "3*q^-1");
    }
}
