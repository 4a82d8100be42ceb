use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::polynomial::{Assignment, Polynomial};
use super::rational::ExactRational;
use super::PolyError;

/// A quotient of polynomials kept unreduced.
///
/// No gcd is ever taken; two quotients are equal when their
/// cross-multiplied difference is the zero polynomial.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// `1 / p`.
    pub fn reciprocal_of(p: Polynomial) -> Result<Self, PolyError> {
        Self::new(Polynomial::one(), p)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Multiplies numerator and denominator by a common nonzero factor.
    pub fn with_denominator_scaled(&self, factor: &Polynomial) -> Result<Self, PolyError> {
        Self::new(&self.num * factor, &self.den * factor)
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<ExactRational, PolyError> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(PolyError::DenominatorVanishes);
        }
        Ok(self.num.evaluate(point)? / d)
    }
}

/// Cross-multiplication equality: `f.num * g.den - g.num * f.den == 0`.
pub fn rf_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    if f.den == g.den {
        return f.num == g.num;
    }
    &f.num * &g.den == &g.num * &f.den
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        rf_equal(self, other)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::VariableId;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }
    fn z(i: usize) -> Polynomial {
        Polynomial::var(VariableId::z(i))
    }

    #[test]
    fn equality_examples() {
        let a = RationalFunction::reciprocal_of(&x(1) - &z(1)).unwrap();
        let b = RationalFunction::new(&x(1) - &z(2), &(&x(1) - &z(1)) * &(&x(1) - &z(2))).unwrap();
        assert!(rf_equal(&a, &b));
        let c = RationalFunction::new(z(1), z(2)).unwrap();
        let d = RationalFunction::new(z(2), z(1)).unwrap();
        assert!(!rf_equal(&c, &d));
        let e = RationalFunction::new(Polynomial::zero(), z(1)).unwrap();
        let f = RationalFunction::new(Polynomial::zero(), &x(1) + &z(3)).unwrap();
        assert!(rf_equal(&e, &f));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(x(1), Polynomial::zero()).unwrap_err(),
            PolyError::DivisionByZero
        );
    }

    #[test]
    fn arithmetic() {
        // 1/(x1 - z1) - 1/(x1 - z2) = (z1 - z2) / ((x1 - z1)(x1 - z2))
        let a = RationalFunction::reciprocal_of(&x(1) - &z(1)).unwrap();
        let b = RationalFunction::reciprocal_of(&x(1) - &z(2)).unwrap();
        let expected =
            RationalFunction::new(&z(1) - &z(2), &(&x(1) - &z(1)) * &(&x(1) - &z(2))).unwrap();
        assert_eq!(&a - &b, expected);
        assert_eq!(&(&a * &b) * &RationalFunction::from_polynomial(&x(1) - &z(1)), b);
    }
}
