//! Exact scalars: elements of Q, F_p, Q(eta) or F_p(eta).
//!
//! Every [`Scalar`] carries its [`FieldDescriptor`]. Rational functions are
//! kept as `num / den` with `gcd(num, den) = 1` and `den` monic, so equality
//! and hashing are structural.

mod parse;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use parse::parse_scalar;
use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("expression has a pole at eta = {0}")]
    PoleAtSpecialization(String),
    #[error("characteristic {0} is not 0 or an odd prime")]
    InvalidCharacteristic(u64),
    #[error("cannot parse scalar {input:?}: {message}")]
    Parse { input: String, message: String },
    #[error("`eta` used but the field has no indeterminate and no eta value was supplied")]
    UnboundEta,
    #[error("scalar {0} is not a constant")]
    NotConstant(String),
}

/// Coefficient domain: prime field (Q or F_p) and whether the indeterminate
/// `eta` is adjoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor {
    characteristic: u64,
    generic_eta: bool,
}

impl FieldDescriptor {
    pub fn new(characteristic: u64, generic_eta: bool) -> Result<Self, ScalarError> {
        if characteristic != 0 && (characteristic == 2 || !is_prime(characteristic)) {
            return Err(ScalarError::InvalidCharacteristic(characteristic));
        }
        Ok(Self { characteristic, generic_eta })
    }

    /// Q
    pub fn rationals() -> Self {
        Self { characteristic: 0, generic_eta: false }
    }

    /// Q(eta)
    pub fn rational_functions() -> Self {
        Self { characteristic: 0, generic_eta: true }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn generic_eta(&self) -> bool {
        self.generic_eta
    }

    /// The same prime field without the indeterminate.
    pub fn constants(&self) -> Self {
        Self { characteristic: self.characteristic, generic_eta: false }
    }

    pub fn with_generic_eta(&self) -> Self {
        Self { characteristic: self.characteristic, generic_eta: true }
    }

    fn modulus(&self) -> Option<BigInt> {
        (self.characteristic != 0).then(|| BigInt::from(self.characteristic))
    }

    /// Reduce a rational number into the prime field.
    pub(crate) fn reduce(&self, c: BigRational) -> BigRational {
        match self.modulus() {
            None => c,
            Some(p) => {
                let num = c.numer().mod_floor_pos(&p);
                let den = c.denom().mod_floor_pos(&p);
                // den is nonzero mod p for every coefficient produced here: callers only
                // feed integers or already-reduced values, or literals checked by the parser.
                let inv = den.modpow(&(&p - 2u32), &p);
                BigRational::from_integer((num * inv).mod_floor_pos(&p))
            }
        }
    }

    pub(crate) fn c_add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }

    pub(crate) fn c_sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a - b)
    }

    pub(crate) fn c_mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }

    pub(crate) fn c_neg(&self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }

    /// Inverse of a nonzero prime-field element.
    pub(crate) fn c_inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero());
        match self.modulus() {
            None => a.recip(),
            Some(p) => {
                let v = a.to_integer().mod_floor_pos(&p);
                BigRational::from_integer(v.modpow(&(&p - 2u32), &p))
            }
        }
    }

    pub(crate) fn rational_is_zero_here(&self, c: &BigRational) -> bool {
        match self.modulus() {
            None => c.is_zero(),
            Some(p) => c.numer().mod_floor_pos(&p).is_zero(),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.characteristic == 0 {
            "Q".to_string()
        } else {
            format!("F_{}", self.characteristic)
        };
        if self.generic_eta {
            write!(f, "{base}(eta)")
        } else {
            write!(f, "{base}")
        }
    }
}

trait ModFloorPos {
    fn mod_floor_pos(&self, p: &BigInt) -> BigInt;
}

impl ModFloorPos for BigInt {
    fn mod_floor_pos(&self, p: &BigInt) -> BigInt {
        let r = self % p;
        if r.is_negative() {
            r + p
        } else {
            r
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An exact field element in canonical form.
#[derive(Clone)]
pub struct Scalar {
    field: FieldDescriptor,
    num: Poly,
    den: Poly,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.num == other.num && self.den == other.den
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Scalar {
    pub fn zero(field: FieldDescriptor) -> Self {
        Self { field, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldDescriptor, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// `n / d` in the prime field. Panics if `d` vanishes in the field.
    pub fn from_ratio(field: FieldDescriptor, n: i64, d: i64) -> Self {
        Self::from_i64(field, n)
            .checked_div(&Self::from_i64(field, d))
            .expect("denominator vanishes in this field")
    }

    pub fn from_rational(field: FieldDescriptor, c: BigRational) -> Self {
        let c = field.reduce(c);
        Self { field, num: Poly::constant(c), den: Poly::one() }
    }

    /// The indeterminate. Only available in generic mode.
    pub fn eta(field: FieldDescriptor) -> Result<Self, ScalarError> {
        if !field.generic_eta {
            return Err(ScalarError::UnboundEta);
        }
        Ok(Self { field, num: Poly::x(), den: Poly::one() })
    }

    fn from_parts(field: FieldDescriptor, num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(field));
        }
        let (num, den) = if den.degree() == Some(0) && num.degree() == Some(0) {
            (num, den)
        } else {
            let g = Poly::gcd(&field, &num, &den);
            (Poly::div_exact(&field, &num, &g), Poly::div_exact(&field, &den, &g))
        };
        let lc_inv = field.c_inv(den.leading());
        Ok(Self {
            field,
            num: num.scale(&field, &lc_inv),
            den: den.scale(&field, &lc_inv),
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    /// The prime-field value of a constant scalar.
    pub fn constant_value(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.num.coeff(0))
    }

    /// Reinterpret a constant in another field of the same characteristic.
    pub fn cast_constant(&self, field: FieldDescriptor) -> Result<Self, ScalarError> {
        if field.characteristic != self.field.characteristic {
            return Err(ScalarError::FieldMismatch(self.field, field));
        }
        let c = self
            .constant_value()
            .ok_or_else(|| ScalarError::NotConstant(self.to_string()))?;
        Ok(Self::from_rational(field, c))
    }

    fn check_field(&self, other: &Self) -> Result<(), ScalarError> {
        if self.field != other.field {
            Err(ScalarError::FieldMismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_field(other)?;
        let f = self.field;
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self { field: f, num: Poly::add(&f, &self.num, &other.num), den: Poly::one() });
        }
        if self.den == other.den {
            return Self::from_parts(f, Poly::add(&f, &self.num, &other.num), self.den.clone());
        }
        let num = Poly::add(
            &f,
            &Poly::mul(&f, &self.num, &other.den),
            &Poly::mul(&f, &other.num, &self.den),
        );
        Self::from_parts(f, num, Poly::mul(&f, &self.den, &other.den))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_field(other)?;
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self { field: f, num: Poly::mul(&f, &self.num, &other.num), den: Poly::one() });
        }
        Self::from_parts(
            f,
            Poly::mul(&f, &self.num, &other.num),
            Poly::mul(&f, &self.den, &other.den),
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::from_parts(self.field, self.den.clone(), self.num.clone())
    }

    fn neg_ref(&self) -> Self {
        Self { field: self.field, num: self.num.neg(&self.field), den: self.den.clone() }
    }

    pub fn pow(&self, exp: i64) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut result = Self::one(self.field);
        for _ in 0..exp.unsigned_abs() {
            result = &result * &base;
        }
        Ok(result)
    }

    /// Substitute a constant for `eta`. The value may live in the constant
    /// field or in this field (as a constant).
    pub fn specialize(&self, value: &Scalar) -> Result<Scalar, ScalarError> {
        let target = self.field.constants();
        let v = value.cast_constant(target)?;
        let vc = v.constant_value().expect("constant");
        let n = self.num.eval(&target, &vc);
        let d = self.den.eval(&target, &vc);
        if target.rational_is_zero_here(&d) {
            return Err(ScalarError::PoleAtSpecialization(v.to_string()));
        }
        Ok(Scalar::from_rational(target, n).checked_div(&Scalar::from_rational(target, d))?)
    }

    /// Numerator and denominator coefficient lists (ascending powers of eta).
    pub fn parts(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        (self.num.coeffs().to_vec(), self.den.coeffs().to_vec())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.render(self.field.characteristic);
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        let den = self.den.render(self.field.characteristic);
        let num = if self.num.term_count() > 1 || num.contains('/') {
            format!("({num})")
        } else {
            num
        };
        write!(f, "{num}/({den})")
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order, used only for deterministic sorting.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.num.cmp(&other.num))
            .then_with(|| self.den.cmp(&other.den))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$call(rhs).expect(concat!("scalar ", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, checked_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn qe() -> FieldDescriptor {
        FieldDescriptor::rational_functions()
    }

    fn s(text: &str) -> Scalar {
        parse_scalar(text, qe(), None).unwrap()
    }

    #[test]
    fn telescoping_sum() {
        assert_eq!(s("eta/(eta-1)") + s("-1/(eta-1)"), s("1"));
        assert!((s("eta/(eta-1)") + s("-1/(eta-1)")).is_one());
    }

    #[test]
    fn product_of_linear_factors() {
        assert_eq!(s("eta+1") * s("eta-1"), s("eta^2-1"));
    }

    #[test]
    fn mod_three_addition() {
        let f3 = FieldDescriptor::new(3, false).unwrap();
        let two = Scalar::from_i64(f3, 2);
        assert_eq!(&two + &two, Scalar::one(f3));
    }

    #[test]
    fn char_two_rejected() {
        assert_eq!(
            FieldDescriptor::new(2, false),
            Err(ScalarError::InvalidCharacteristic(2))
        );
        assert!(FieldDescriptor::new(9, true).is_err());
        assert!(FieldDescriptor::new(2_147_483_647, false).is_ok());
    }

    #[test]
    fn specialization() {
        let q = FieldDescriptor::rationals();
        let three = Scalar::from_i64(q, 3);
        assert_eq!(s("(eta+1)/(eta-1)").specialize(&three).unwrap(), Scalar::from_i64(q, 2));
        let minus_one = Scalar::from_i64(q, -1);
        assert!(matches!(
            s("1/(eta+1)").specialize(&minus_one),
            Err(ScalarError::PoleAtSpecialization(_))
        ));
        let half = Scalar::from_ratio(q, 1, 2);
        assert!(s("1-2*eta").specialize(&half).unwrap().is_zero());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(s("eta").checked_div(&s("0")), Err(ScalarError::DivisionByZero));
        assert_eq!(s("0").inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn field_mismatch() {
        let a = Scalar::one(FieldDescriptor::rationals());
        let b = Scalar::one(qe());
        assert!(matches!(a.try_add(&b), Err(ScalarError::FieldMismatch(..))));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = s("1/(2*eta-1)");
        let (_, den) = x.parts();
        assert!(den.last().unwrap().is_one());
        assert_eq!(x, s("(1/2)/(eta-1/2)"));
    }

    #[test]
    fn display_round_trips() {
        for text in ["(eta+1)/(eta-1)", "-1/2", "eta^2-2", "1/2*eta-3", "eta/(eta^2+1)", "0"] {
            let x = s(text);
            assert_eq!(s(&x.to_string()), x, "{text} -> {x}");
        }
    }

    #[test]
    fn prime_field_inverse() {
        let f5 = FieldDescriptor::new(5, true).unwrap();
        let half = Scalar::from_ratio(f5, 1, 2);
        assert_eq!(half, Scalar::from_i64(f5, 3));
        let e = Scalar::eta(f5).unwrap();
        let x = (&e + &Scalar::one(f5)).inv().unwrap();
        assert!((x * (e + Scalar::one(f5))).is_one());
    }
}
