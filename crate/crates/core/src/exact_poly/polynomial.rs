use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::rational::{self, ExactRational};
use super::variable::VariableId;
use super::PolyError;

/// Values for variables during evaluation.
pub type Assignment = BTreeMap<VariableId, ExactRational>;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted by descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, ExactRational)>,
}

/// Hash-map accumulator for building large sums of products.
#[derive(Default)]
pub(crate) struct Accumulator {
    map: HashMap<Monomial, ExactRational>,
}

impl Accumulator {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, p: &Polynomial, m: &Monomial, c: &ExactRational) {
        for (pm, pc) in &p.terms {
            self.add_term(pm.mul(m), pc * c);
        }
    }

    pub(crate) fn add_product(&mut self, p: &Polynomial, q: &Polynomial) {
        let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
        self.map.reserve(large.len());
        for (m, c) in &small.terms {
            self.add_scaled(large, m, c);
        }
    }

    pub(crate) fn finish(self) -> Polynomial {
        let mut terms: Vec<(Monomial, ExactRational)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn integer(value: i64) -> Self {
        Self::constant(rational::integer(value))
    }

    pub fn var(v: VariableId) -> Self {
        Self::term(Monomial::var(v), ExactRational::one())
    }

    pub fn term(m: Monomial, c: ExactRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms (any order, duplicates, zeros).
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ExactRational)>) -> Self {
        let mut acc = Accumulator::new();
        for (m, c) in terms {
            acc.add_term(m, c);
        }
        acc.finish()
    }

    /// `v - u` for two variables, the ubiquitous linear factor.
    pub fn difference(v: VariableId, u: VariableId) -> Self {
        &Self::var(v) - &Self::var(u)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, ExactRational)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &ExactRational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// The value of a polynomial without variables.
    pub fn constant_value(&self) -> Option<ExactRational> {
        match self.terms.as_slice() {
            [] => Some(ExactRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Whether every term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.variables())
            .collect()
    }

    pub fn contains_variable(&self, v: VariableId) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: VariableId) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `c * m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(pm, pc)| (pm.mul(m), pc * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| &acc * f)
    }

    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut acc = Accumulator::new();
        for p in parts {
            for (m, c) in &p.terms {
                acc.add_term(m.clone(), c.clone());
            }
        }
        acc.finish()
    }

    pub fn derivative(&self, v: VariableId) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                terms.push((m.with_exponent(v, e - 1), c * rational::integer(e as i64)));
            }
        }
        Self::from_terms(terms)
    }

    /// Antiderivative in `v` with no `v`-free terms.
    pub fn antiderivative(&self, v: VariableId) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponent(v) + 1;
            terms.push((m.with_exponent(v, e), c / rational::integer(e as i64)));
        }
        Self::from_terms(terms)
    }

    /// Replaces every occurrence of `v` by `r`.
    pub fn substitute(&self, v: VariableId, r: &Polynomial) -> Self {
        if !self.contains_variable(v) {
            return self.clone();
        }
        if r.len() <= 1 {
            // monomial (or zero) image: map terms one by one
            let image = r.terms.first();
            let mut acc = Accumulator::new();
            for (m, c) in &self.terms {
                let (e, rest) = m.split(v);
                if e == 0 {
                    acc.add_term(rest, c.clone());
                    continue;
                }
                if let Some((rm, rc)) = image {
                    let mut mono = rest;
                    let mut coeff = c.clone();
                    for _ in 0..e {
                        mono = mono.mul(rm);
                        coeff *= rc;
                    }
                    acc.add_term(mono, coeff);
                }
            }
            return acc.finish();
        }
        self.substitute_all(&[(v, r.clone())])
    }

    /// Simultaneous substitution: each `v` is replaced by its image in one
    /// step, so images may mention other substituted variables.
    pub fn substitute_all(&self, images: &[(VariableId, Polynomial)]) -> Self {
        let lookup: BTreeMap<VariableId, &Polynomial> =
            images.iter().map(|(v, r)| (*v, r)).collect();
        // group terms by their substituted part
        let mut groups: BTreeMap<Monomial, Accumulator> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sub, keep): (Vec<_>, Vec<_>) = m
                .powers()
                .iter()
                .partition(|(v, _)| lookup.contains_key(v));
            groups
                .entry(Monomial::from_powers(sub))
                .or_default()
                .add_term(Monomial::from_powers(keep), c.clone());
        }
        let mut powers: HashMap<(VariableId, u32), Polynomial> = HashMap::new();
        let mut acc = Accumulator::new();
        for (sub, rest) in groups {
            let rest = rest.finish();
            let mut image = Polynomial::one();
            for &(v, e) in sub.powers() {
                let pw = powers
                    .entry((v, e))
                    .or_insert_with(|| lookup[&v].pow(e));
                image = &image * pw;
            }
            acc.add_product(&rest, &image);
        }
        acc.finish()
    }

    /// `F(upper) - F(lower)` with `F` the antiderivative in `v`.
    pub fn definite_integral(
        &self,
        v: VariableId,
        lower: &Polynomial,
        upper: &Polynomial,
    ) -> Result<Self, PolyError> {
        if lower.contains_variable(v) || upper.contains_variable(v) {
            return Err(PolyError::BoundContainsVariable(v));
        }
        let anti = self.antiderivative(v);
        let hi = anti.substitute(v, upper);
        if lower.is_zero() {
            // the antiderivative has no v-free terms, so F(0) = 0
            return Ok(hi);
        }
        Ok(&hi - &anti.substitute(v, lower))
    }

    /// Substitutes the assigned variables by their values; others stay symbolic.
    pub fn partial_evaluate(&self, point: &Assignment) -> Self {
        let mut acc = Accumulator::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut keep = Vec::new();
            for &(v, e) in m.powers() {
                match point.get(&v) {
                    Some(val) => coeff *= rational::pow(val, e),
                    None => keep.push((v, e)),
                }
            }
            acc.add_term(Monomial::from_powers(keep), coeff);
        }
        acc.finish()
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<ExactRational, PolyError> {
        let missing: Vec<VariableId> = self
            .variables()
            .into_iter()
            .filter(|v| !point.contains_key(v))
            .collect();
        if !missing.is_empty() {
            return Err(PolyError::UnboundVariable(missing));
        }
        let mut powers: HashMap<(VariableId, u32), ExactRational> = HashMap::new();
        let mut total = ExactRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                let pw = powers
                    .entry((v, e))
                    .or_insert_with(|| rational::pow(&point[&v], e));
                t *= &*pw;
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact quotient `self / divisor` by leading-term division.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Self, PolyError> {
        let (dm, dc) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        if divisor.len() == 1 {
            let inv = ExactRational::one() / &dc;
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let q = m.div(&dm).ok_or(PolyError::ExactDivisionFailed)?;
                terms.push((q, c * &inv));
            }
            return Ok(Self { terms });
        }
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((lm, lc)) = rem.leading_term() {
            let qm = lm.div(&dm).ok_or(PolyError::ExactDivisionFailed)?;
            let qc = lc / &dc;
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quotient.push((qm, qc));
        }
        Ok(Self::from_terms(quotient))
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        use std::cmp::Ordering;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let take_b = |c: &ExactRational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        Polynomial { terms: out }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc = Accumulator::new();
        acc.add_product(self, rhs);
        acc.finish()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<VariableId> for Polynomial {
    fn from(v: VariableId) -> Self {
        Polynomial::var(v)
    }
}

impl From<ExactRational> for Polynomial {
    fn from(c: ExactRational) -> Self {
        Polynomial::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational::{integer, rational};

    fn x(i: usize) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }
    fn z(i: usize) -> Polynomial {
        Polynomial::var(VariableId::z(i))
    }
    fn c(v: i64) -> Polynomial {
        Polynomial::integer(v)
    }

    #[test]
    fn add_cancels() {
        assert_eq!(&(&x(1) + &c(1)) + &(&x(1) - &c(1)), x(1).scale(&integer(2)));
        let p = &x(1) * &z(2);
        assert_eq!(&p + &Polynomial::zero(), p);
        assert!((&(&z(1) - &z(2)) + &(&z(2) - &z(1))).is_zero());
    }

    #[test]
    fn mul_and_pow() {
        let d = &x(1) - &z(1);
        let sq = &d * &d;
        let expected = Polynomial::sum([
            &(&x(1) * &x(1)),
            &(&x(1) * &z(1)).scale(&integer(-2)),
            &(&z(1) * &z(1)),
        ]);
        assert_eq!(sq, expected);
        assert_eq!(d.pow(2), expected);
        assert_eq!(&d * &Polynomial::one(), d);
        assert!((&(&x(2) - &x(1)) * &Polynomial::zero()).is_zero());
        assert!(d.pow(0).is_one());
        assert!(Polynomial::zero().pow(0).is_one());
        assert!(Polynomial::zero().pow(3).is_zero());
    }

    #[test]
    fn derivative_examples() {
        let x1 = VariableId::x(1);
        let p = &x(1).pow(3) * &z(1);
        assert_eq!(p.derivative(x1), (&x(1).pow(2) * &z(1)).scale(&integer(3)));
        assert!(x(1).pow(2).derivative(VariableId::z(1)).is_zero());
        let d = (&x(1) - &z(1)).pow(2);
        assert_eq!(d.derivative(x1), &x(1).scale(&integer(2)) - &z(1).scale(&integer(2)));
    }

    #[test]
    fn antiderivative_examples() {
        let x1 = VariableId::x(1);
        assert_eq!(x(1).pow(2).antiderivative(x1), x(1).pow(3).scale(&rational(1, 3)));
        assert_eq!(z(2).antiderivative(x1), &z(2) * &x(1));
        assert!(Polynomial::zero().antiderivative(x1).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let x1 = VariableId::x(1);
        assert!((&x(1) - &z(1)).substitute(x1, &z(1)).is_zero());
        let y1 = Polynomial::var(VariableId::y(1));
        let expected = Polynomial::sum([
            &y1.pow(2),
            &(&y1 * &z(1)).scale(&integer(2)),
            &z(1).pow(2),
        ]);
        assert_eq!(x(1).pow(2).substitute(x1, &(&y1 + &z(1))), expected);
        assert_eq!(z(2).substitute(x1, &(&y1 + &c(3))), z(2));
    }

    #[test]
    fn simultaneous_substitution() {
        // z1 -> z2 - z1, z2 -> z3 - z1 applied at once
        let p = &z(1) * &z(2);
        let images = vec![
            (VariableId::z(1), &z(2) - &z(1)),
            (VariableId::z(2), &z(3) - &z(1)),
        ];
        let expected = &(&z(2) - &z(1)) * &(&z(3) - &z(1));
        assert_eq!(p.substitute_all(&images), expected);
    }

    #[test]
    fn definite_integral_examples() {
        let x1 = VariableId::x(1);
        let base = (&x(1) - &z(1)).definite_integral(x1, &Polynomial::zero(), &z(1));
        assert_eq!(base.unwrap(), z(1).pow(2).scale(&rational(-1, 2)));
        // (-1)^a z^(a+1)/(a+1)
        for a in 0..=4u32 {
            let got = (&x(1) - &z(1))
                .pow(a)
                .definite_integral(x1, &Polynomial::zero(), &z(1))
                .unwrap();
            let sign = if a % 2 == 0 { 1 } else { -1 };
            let expected = z(1).pow(a + 1).scale(&rational(sign, a as i64 + 1));
            assert_eq!(got, expected, "a = {a}");
        }
        let y1 = VariableId::y(1);
        let got = Polynomial::one().definite_integral(y1, &z(1), &z(2)).unwrap();
        assert_eq!(got, &z(2) - &z(1));
        let err = x(1).definite_integral(x1, &Polynomial::zero(), &x(1));
        assert_eq!(err, Err(PolyError::BoundContainsVariable(x1)));
    }

    #[test]
    fn evaluate_examples() {
        let mut point = Assignment::new();
        point.insert(VariableId::x(1), integer(2));
        point.insert(VariableId::z(1), integer(3));
        assert_eq!((&x(1).pow(2) - &z(1)).evaluate(&point).unwrap(), integer(1));
        assert_eq!(Polynomial::zero().evaluate(&Assignment::new()).unwrap(), integer(0));
        let mut p2 = Assignment::new();
        p2.insert(VariableId::x(1), rational(1, 3));
        assert_eq!(x(1).scale(&rational(1, 2)).evaluate(&p2).unwrap(), rational(1, 6));
        let missing = (&x(1) * &z(2)).evaluate(&p2);
        assert_eq!(missing, Err(PolyError::UnboundVariable(vec![VariableId::z(2)])));
    }

    #[test]
    fn exact_division() {
        let a = &(&x(1) - &z(1)) * &(&x(2) + &c(3));
        let b = &x(1) - &z(1);
        assert_eq!(a.exact_div(&b).unwrap(), &x(2) + &c(3));
        assert_eq!(x(1).exact_div(&z(1)), Err(PolyError::ExactDivisionFailed));
        assert_eq!(x(1).exact_div(&Polynomial::zero()), Err(PolyError::DivisionByZero));
        assert_eq!((&x(1) + &c(1)).exact_div(&(&x(1) - &c(1))), Err(PolyError::ExactDivisionFailed));
    }
}
