//! Exact field elements over the rationals and prime fields GF(p).
//!
//! Rationals are arbitrary precision and always kept in lowest terms with a
//! positive denominator; residues are always in `0..p`. Equality is
//! structural, so two scalars compare equal exactly when they are the same
//! field element of the same field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive). Keeps trial division cheap and
/// products inside `u64`.
const MODULUS_LIMIT: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// The field a scalar or matrix lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    modulus: Option<u64>,
}

impl Field {
    pub const RATIONALS: Field = Field { modulus: None };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// GF(p). Fails unless `p` is a prime below 2^32.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MODULUS_LIMIT || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field { modulus: Some(p) })
    }

    pub fn kind(&self) -> FieldKind {
        match self.modulus {
            None => FieldKind::Rationals,
            Some(_) => FieldKind::PrimeField,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_i64(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_i64(*self, 1)
    }

    pub(crate) fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => f.write_str("Q"),
            Some(p) => write!(f, "GF {p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses the header syntax `Q` or `GF p`.
    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        match (words.next(), words.next(), words.next()) {
            (Some("Q"), None, None) => Ok(Field::RATIONALS),
            (Some("GF"), Some(p), None) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::parse(0, format!("bad modulus `{p}`")))?;
                Field::prime(p)
            }
            _ => Err(Error::parse(0, format!("expected `Q` or `GF p`, got `{s}`"))),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact element of a [`Field`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Value);

impl Scalar {
    pub fn from_i64(field: Field, v: i64) -> Self {
        match field.modulus {
            None => Scalar(Value::Rational(BigRational::from_integer(v.into()))),
            Some(p) => Scalar(Value::Residue {
                value: reduce_i128(v as i128, p),
                modulus: p,
            }),
        }
    }

    /// `numer / denom` reduced into `field`.
    pub fn from_ratio(field: Field, numer: i64, denom: i64) -> Result<Self> {
        Self::from_big_ratio(field, BigInt::from(numer), BigInt::from(denom))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar(Value::Rational(q))
    }

    fn from_big_ratio(field: Field, numer: BigInt, denom: BigInt) -> Result<Self> {
        match field.modulus {
            None => {
                if denom.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar(Value::Rational(BigRational::new(numer, denom))))
            }
            Some(p) => {
                let n = Scalar(Value::Residue {
                    value: reduce_big(&numer, p),
                    modulus: p,
                });
                let d = Scalar(Value::Residue {
                    value: reduce_big(&denom, p),
                    modulus: p,
                });
                Ok(&n * &d.inv()?)
            }
        }
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Value::Rational(_) => Field::RATIONALS,
            Value::Residue { modulus, .. } => Field {
                modulus: Some(*modulus),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Value::Rational(q) => q.is_zero(),
            Value::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Value::Rational(q) => q.is_one(),
            Value::Residue { value, .. } => *value == 1,
        }
    }

    /// The rational value, if this scalar lives in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Value::Rational(q) => Some(q),
            Value::Residue { .. } => None,
        }
    }

    /// The residue in `0..p`, if this scalar lives in GF(p).
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Value::Rational(_) => None,
            Value::Residue { value, .. } => Some(*value),
        }
    }

    /// True when the internal representation is canonical: lowest terms with
    /// positive denominator, or a residue in range.
    pub fn is_canonical(&self) -> bool {
        match &self.0 {
            Value::Rational(q) => {
                q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
            }
            Value::Residue { value, modulus } => value < modulus,
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.field().ensure_same(&rhs.field())?;
        Ok(self * &rhs.inv()?)
    }

    /// Multiplicative inverse; extended Euclid over GF(p).
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Value::Rational(q) => Scalar(Value::Rational(q.recip())),
            Value::Residue { value, modulus } => Scalar(Value::Residue {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            }),
        })
    }

    /// Parses `[-]digits` or `[-]digits/digits` into `field`.
    pub fn parse(text: &str, field: Field) -> Result<Scalar> {
        let bad = || Error::parse(0, format!("malformed scalar `{text}`"));
        let (numer, denom) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let numer = parse_int(numer, true).ok_or_else(bad)?;
        let denom = match denom {
            Some(d) => parse_int(d, false).ok_or_else(bad)?,
            None => BigInt::one(),
        };
        Self::from_big_ratio(field, numer, denom)
    }

    fn binary(
        &self,
        rhs: &Scalar,
        on_q: impl Fn(&BigRational, &BigRational) -> BigRational,
        on_gf: impl Fn(u64, u64, u64) -> u64,
    ) -> Result<Scalar> {
        match (&self.0, &rhs.0) {
            (Value::Rational(a), Value::Rational(b)) => Ok(Scalar(Value::Rational(on_q(a, b)))),
            (
                Value::Residue { value: a, modulus: p },
                Value::Residue { value: b, modulus: q },
            ) if p == q => Ok(Scalar(Value::Residue {
                value: on_gf(*a, *b, *p),
                modulus: *p,
            })),
            _ => Err(Error::FieldMismatch(
                self.field().to_string(),
                rhs.field().to_string(),
            )),
        }
    }
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -v } else { v })
}

fn reduce_i128(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}

fn reduce_big(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "nonzero residue mod a prime is a unit");
    reduce_i128(old_s, p)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Value::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Value::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Value::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator forms panic on a field mismatch. Matrix code only combines
// entries it has already checked share a field.

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Value::Rational(q) => Scalar(Value::Rational(-q)),
            Value::Residue { value, modulus } => Scalar(Value::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
