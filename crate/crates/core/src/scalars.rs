//! Exact base fields: the rationals and prime fields GF(p).
//!
//! A [`Scalar`] carries enough of its field to be self-describing, so that
//! arithmetic between elements of different fields is detected instead of
//! silently producing garbage. The operator impls (`+`, `*`, ...) panic on a
//! field mismatch; the `try_*` methods report it as [`Error::FieldMismatch`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A validated prime modulus `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u64::from(u32::MAX) {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    pub fn get(self) -> u64 {
        u64::from(self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The base field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeModulus),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeModulus::new(p).map(FieldSpec::Prime)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(m) => m.get(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Number of elements, `None` for an infinite field.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(m) => Some(m.get()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(m) => {
                let p = m.get() as i128;
                let r = (i128::from(n)).rem_euclid(p) as u32;
                Scalar::Residue { value: r, modulus: m }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(m) => {
                let p = BigInt::from(m.get());
                let mut r = n % &p;
                if r.is_negative() {
                    r += &p;
                }
                let value = r.to_u32().expect("residue fits in u32");
                Scalar::Residue { value, modulus: m }
            }
        }
    }

    /// `num / den` interpreted in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        n.try_div(&d)
    }

    /// Every element of a prime field, `0, 1, ..., p-1`.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match *self {
            FieldSpec::Rationals => Err(Error::InfiniteField),
            FieldSpec::Prime(m) => Ok((0..m.0).map(|value| Scalar::Residue { value, modulus: m }).collect()),
        }
    }

    /// The `p - 1` nonzero residues of a prime field in increasing order.
    pub fn units(&self) -> Result<Vec<Scalar>> {
        let mut all = self.elements()?;
        all.remove(0);
        Ok(all)
    }

    /// Parses `a`, `-a` or `a/b` with decimal integers.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(m) => write!(f, "GF({})", m.get()),
        }
    }
}

/// An element of a [`FieldSpec`], always in canonical form: rationals in
/// lowest terms with positive denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: PrimeModulus },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                let s = (u64::from(*a) + u64::from(*b)) % m.get();
                Ok(Scalar::Residue { value: s as u32, modulus: *m })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                let s = (u64::from(*a) * u64::from(*b)) % m.get();
                Ok(Scalar::Residue { value: s as u32, modulus: *m })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                // Fermat: a^(p-2)
                let p = modulus.get();
                Scalar::Residue { value: pow_mod(u64::from(*value), p - 2, p) as u32, modulus: *modulus }
            }
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => {
                let v = if *value == 0 { 0 } else { modulus.get() as u32 - value };
                Scalar::Residue { value: v, modulus: *modulus }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical residue for prime-field scalars.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue { .. } => None,
        }
    }

    /// True for negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.numer().sign() == num_bigint::Sign::Minus)
    }

    /// Short text form: `3/2`, `-1`, or a bare residue such as `5`.
    pub fn to_plain_string(&self) -> String {
        self.to_string()
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar operands from different fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rationals.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn prime_field_basics() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(&f7.from_i64(3) * &f7.from_i64(5), f7.one());
        assert_eq!(f7.from_i64(-1), f7.from_i64(6));
        assert_eq!(f7.parse_scalar("1/2").unwrap(), f7.from_i64(4));
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f5.one().try_div(&f5.zero()), Err(Error::DivisionByZero));
        assert_eq!(f5.one().try_add(&q(1, 1)), Err(Error::FieldMismatch));
        assert_eq!(FieldSpec::prime(7).unwrap().parse_scalar("1/7"), Err(Error::DivisionByZero));
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(FieldSpec::prime(1), Err(Error::NonPrimeModulus(1)));
        assert_eq!(FieldSpec::prime(9), Err(Error::NonPrimeModulus(9)));
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(4294967291).is_ok());
        assert_eq!(FieldSpec::prime(1 << 33), Err(Error::ModulusTooLarge(1 << 33)));
    }

    #[test]
    fn units() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.units().unwrap(), alloc::vec![f2.one()]);
        let f5 = FieldSpec::prime(5).unwrap();
        let u: Vec<u32> = f5.units().unwrap().iter().map(|s| s.residue().unwrap()).collect();
        assert_eq!(u, alloc::vec![1, 2, 3, 4]);
        assert_eq!(FieldSpec::Rationals.units(), Err(Error::InfiniteField));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = FieldSpec::prime(101).unwrap();
        let a = f.from_i64(3);
        let mut acc = f.one();
        for e in 0..20 {
            assert_eq!(a.pow(e), acc);
            acc = &acc * &a;
        }
    }
}
