//! Scalar fields the operators and elimination routines are generic over:
//! the exact field `Q(q)`, `Q` (operators specialized at a rational point), and
//! `F_p` for `p = 2^61 - 1` (the same specialization reduced mod `p`).

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ratfunc::{BigRat, LaurentPoly, RatFunc};

/// A sorted sparse row: `(column, value)` with strictly increasing columns and no zeros.
pub type SparseRow<F> = Vec<(usize, F)>;

pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    fn to_text(&self) -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Rescales a freshly inserted pivot row. The default makes the leading entry 1.
    fn normalize_pivot(row: &mut SparseRow<Self>) {
        if let Some(inv) = row.first().and_then(|(_, a)| a.inv()) {
            if !inv.is_one() {
                for (_, v) in row.iter_mut() {
                    *v = v.mul(&inv);
                }
            }
        }
    }

    /// Removes the entry of `cand` at `pivot`'s leading column, producing a row that
    /// spans the same space modulo `pivot`. The default assumes `pivot` is normalized
    /// to a leading 1.
    fn eliminate(cand: &SparseRow<Self>, pivot: &SparseRow<Self>, factor: &Self) -> SparseRow<Self> {
        axpy(cand, &factor.neg(), pivot)
    }
}

/// `a + s * b` on sorted sparse rows.
pub fn axpy<F: Field>(a: &SparseRow<F>, s: &F, b: &SparseRow<F>) -> SparseRow<F> {
    lincomb(a, &F::one(), b, s)
}

/// `sa * a + sb * b` on sorted sparse rows.
pub fn lincomb<F: Field>(a: &SparseRow<F>, sa: &F, b: &SparseRow<F>, sb: &F) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scale = |s: &F, v: &F| if s.is_one() { v.clone() } else { s.mul(v) };
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push((ca, scale(sa, &a[i].1)));
            i += 1;
        } else if cb < ca {
            out.push((cb, scale(sb, &b[j].1)));
            j += 1;
        } else {
            let v = scale(sa, &a[i].1).add(&scale(sb, &b[j].1));
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        BigRat::from_integer(n.into())
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }

    /// Pivot rows are kept as primitive rows of Laurent polynomials rather than
    /// being divided through by their leading entry.
    fn normalize_pivot(row: &mut SparseRow<Self>) {
        make_primitive(row);
    }

    /// Fraction-free step: `lead * cand - factor * pivot`, followed by content stripping.
    /// Here `factor` is the entry of `cand` at the pivot column.
    fn eliminate(cand: &SparseRow<Self>, pivot: &SparseRow<Self>, factor: &Self) -> SparseRow<Self> {
        let lead = &pivot[0].1;
        let mut out = lincomb(cand, lead, pivot, &factor.neg());
        make_primitive(&mut out);
        out
    }
}

/// Scales a row of `Q(q)` entries by a nonzero element of `Q(q)` so that all entries are
/// Laurent polynomials with no common polynomial factor, no common power of `q`, integer
/// coefficients with content 1, and a positive leading coefficient in the first entry.
pub fn make_primitive(row: &mut SparseRow<RatFunc>) {
    if row.is_empty() {
        return;
    }
    if row.iter().any(|(_, v)| !v.is_laurent()) {
        let mut l = LaurentPoly::one();
        for (_, v) in row.iter() {
            let d = v.denom();
            if d.is_one() {
                continue;
            }
            let g = l.poly_gcd(d);
            l = l.mul(&d.exact_div(&g));
        }
        let lr = RatFunc::from_poly(l);
        for (_, v) in row.iter_mut() {
            *v = &*v * &lr;
        }
    }
    // Common polynomial factor.
    let mut g: Option<LaurentPoly> = None;
    for (_, v) in row.iter() {
        let n = v.numer();
        g = Some(match g {
            None => n.poly_gcd(n),
            Some(g) => g.poly_gcd(n),
        });
        if g.as_ref().is_some_and(|g| g.is_one()) {
            break;
        }
    }
    let g = g.unwrap();
    // Common power of q and rational content.
    let mut min_exp = i64::MAX;
    let mut den_lcm = num_bigint::BigInt::one();
    let mut num_gcd = num_bigint::BigInt::zero();
    let nums: Vec<LaurentPoly> = row
        .iter()
        .map(|(_, v)| {
            if g.is_one() {
                v.numer().clone()
            } else {
                v.numer().exact_div(&g)
            }
        })
        .collect();
    for n in &nums {
        min_exp = min_exp.min(n.min_exp().unwrap());
        for (_, c) in n.terms() {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
            num_gcd = num_integer::gcd(num_gcd, c.numer().clone());
        }
    }
    let mut scale = BigRat::new(den_lcm, num_gcd);
    if nums[0].leading_coeff().unwrap().is_negative() {
        scale = -scale;
    }
    for ((_, v), n) in row.iter_mut().zip(nums) {
        let p = if One::is_one(&scale) { n } else { n.scale(&scale) };
        *v = RatFunc::from_poly(if min_exp == 0 { p } else { p.shift(-min_exp) });
    }
}

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

/// An element of `F_p`, `p = 2^61 - 1`, in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Self(v % MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(x: u128) -> u64 {
        let p = MODULUS as u128;
        let folded = (x & p) + (x >> 61);
        let folded = (folded & p) + (folded >> 61);
        (folded % p) as u64
    }

    pub fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self, Fp(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn from_bigint(n: &num_bigint::BigInt) -> Self {
        let r = n.mod_floor(&num_bigint::BigInt::from(MODULUS));
        Fp(r.try_into().expect("residue fits in u64"))
    }

    /// `None` when the denominator vanishes mod `p`.
    pub fn from_bigrat(x: &BigRat) -> Option<Self> {
        let d = Self::from_bigint(x.denom());
        Field::inv(&d).map(|di| Field::mul(&Self::from_bigint(x.numer()), &di))
    }

    fn eval_poly(poly: &LaurentPoly, q: Fp, qinv: Fp) -> Option<Fp> {
        let mut acc = Fp(0);
        for (e, c) in poly.terms() {
            let power = if *e >= 0 {
                q.pow(*e as u64)
            } else {
                qinv.pow(e.unsigned_abs())
            };
            acc = Field::add(&acc, &Field::mul(&Self::from_bigrat(c)?, &power));
        }
        Some(acc)
    }

    /// `f(point) mod p`; `None` at a pole mod `p`.
    pub fn eval(f: &RatFunc, point: &BigRat) -> Option<Fp> {
        let q = Self::from_bigrat(point)?;
        let qinv = Field::inv(&q)?;
        let num = Self::eval_poly(f.numer(), q, qinv)?;
        let den = Self::eval_poly(f.denom(), q, qinv)?;
        Field::inv(&den).map(|d| Field::mul(&num, &d))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + MODULUS - other.0
        })
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(Self::reduce(self.0 as u128 * other.0 as u128))
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(MODULUS - 2))
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(MODULUS as i64) as u64)
    }
    fn to_text(&self) -> String {
        self.0.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_row() {
        let q = RatFunc::q();
        let two = RatFunc::from_int(2);
        // [2q^2 (q+1), -4q (q+1)/(q-1)] -> scaled by (q-1)/(2q(q+1)) -> [q(q-1), -2]
        let qp1 = &q + &RatFunc::one();
        let qm1 = &q - &RatFunc::one();
        let mut row = vec![
            (0, &(&two * &(&q * &q)) * &qp1),
            (3, -(&(&RatFunc::from_int(4) * &q) * &qp1) / qm1.clone()),
        ];
        make_primitive(&mut row);
        assert_eq!(row[0].1, &q * &qm1);
        assert_eq!(row[1].1, RatFunc::from_int(-2));
    }

    #[test]
    fn lincomb_cancels() {
        let a: SparseRow<BigRat> = vec![(0, BigRat::from_i64(1)), (2, BigRat::from_i64(3))];
        let b: SparseRow<BigRat> = vec![(0, BigRat::from_i64(2)), (1, BigRat::from_i64(1))];
        let c = lincomb(&a, &BigRat::from_i64(2), &b, &BigRat::from_i64(-1));
        assert_eq!(c, vec![(1, BigRat::from_i64(-1)), (2, BigRat::from_i64(6))]);
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = Fp::from_i64(-5);
        assert_eq!(a.add(&Fp::from_i64(5)), Fp::zero());
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        assert_eq!(Fp::from_i64(3).pow(4), Fp::from_i64(81));
        assert!(Fp::zero().inv().is_none());
    }

    #[test]
    fn modular_evaluation_matches_rational() {
        let f: RatFunc = "( -1*q^-1 + 3*q ) / ( 2 + 1*q^2 )".parse().unwrap();
        let p = BigRat::new(7.into(), 3.into());
        let exact = f.eval(&p).unwrap();
        assert_eq!(Fp::eval(&f, &p), Fp::from_bigrat(&exact));
    }
}
