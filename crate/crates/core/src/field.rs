//! Exact field scalars.
//!
//! Two fields are supported: arbitrary-precision rationals and the prime
//! fields `Z/pZ`. A [`Field`] value is the runtime descriptor that creates
//! scalars; a [`Scalar`] carries enough information to do arithmetic on its
//! own, so matrices do not need to thread the descriptor through every call.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Largest modulus accepted for prime fields; products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not a prime number")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported maximum {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("denominator of {0} is divisible by the field characteristic")]
    NotRepresentable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p > MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Modular { value: r, modulus: p }
            }
        }
    }

    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, FieldError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let num = q.numer().mod_floor(&m).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&m).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(FieldError::NotRepresentable(q.to_string()));
                }
                let num = Scalar::Modular { value: num, modulus: p };
                let den = Scalar::Modular { value: den, modulus: p };
                Ok(num.div(&den))
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a rational or prime field.
///
/// Rationals are always in lowest terms with a positive denominator (the
/// `num_rational` invariant); residues are always in `[0, modulus)`.
/// Mixing scalars of different fields is a logic error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Field division. Panics when `rhs` is zero.
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self * &rhs.inverse()
    }

    /// The rational this scalar stands for. Residues are lifted by rational
    /// reconstruction, which recovers `a/b` whenever `|a|, |b| <= sqrt(p/2)`.
    /// Residues with no such preimage fall back to the symmetric integer lift.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Modular { value, modulus } => reconstruct(*value, *modulus),
        }
    }

    /// `num/den` text, always with an explicit denominator.
    pub fn exact_string(&self) -> String {
        let q = self.to_rational();
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.to_rational();
        if q.is_integer() {
            write!(f, "{}", q.numer())
        } else {
            write!(f, "{}/{}", q.numer(), q.denom())
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn reconstruct(value: u64, modulus: u64) -> BigRational {
    let bound = ((modulus / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (modulus as i128, value as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 != 0 && t1.abs() <= bound && r1.gcd(&t1.abs()) == 1 {
        let (num, den) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
        return BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    let v = value as i128;
    let m = modulus as i128;
    let lifted = if v > m / 2 { v - m } else { v };
    BigRational::from_integer(BigInt::from(lifted))
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: m }, Scalar::Modular { value: b, modulus: n }) => {
                let m = same_modulus(*m, *n);
                Scalar::Modular { value: (a + b) % m, modulus: m }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: m }, Scalar::Modular { value: b, modulus: n }) => {
                let m = same_modulus(*m, *n);
                Scalar::Modular { value: (a + m - b) % m, modulus: m }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: m }, Scalar::Modular { value: b, modulus: n }) => {
                let m = same_modulus(*m, *n);
                Scalar::Modular { value: a * b % m, modulus: m }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}
