//! Scalar arithmetic: reduced fractions of arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Always stored reduced with a positive denominator; zero is `0/1`.
pub type ExactRational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> ExactRational {
    ExactRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(value))
}

pub fn factorial(k: u64) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn factorial_rational(k: u64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(factorial(k)))
}

/// `(-1)^e` as a rational.
pub fn sign_power(e: u64) -> ExactRational {
    if e % 2 == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

pub fn pow(base: &ExactRational, e: u32) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut sq = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Canonical text: `n` for integers, `p/q` otherwise.
pub fn format_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(ExactRational::new(num, den))
}
