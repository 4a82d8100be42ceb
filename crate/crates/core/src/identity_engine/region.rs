//! Signed sums of box integrals in `y_1..y_{n-1}`.
//!
//! For `i = 1..n` the "left" boxes drop `z_i` and integrate each `y_k` from
//! 0 to one of the remaining `z`'s; the "right" boxes integrate each `y_k`
//! from `z_1` to one of `z_2..z_n`. The symmetrized form sums over every
//! assignment of upper limits to slots, weighted by its permutation sign,
//! and holds for any integrand. The plain form uses only the sorted
//! assignment and needs an antisymmetric integrand.

use itertools::Itertools;

use super::check::{compare, CheckMeta, CheckMode, CheckOutcome};
use super::theorem_a::multiplicity_polynomial;
use super::{Budget, EngineError, SignRule};
use crate::exact_poly::rational::factorial_rational;
use crate::exact_poly::{ExactRational, Monomial, Polynomial, VariableId};
use crate::poly_linalg::vandermonde_product;

pub(crate) fn ys(m: usize) -> Vec<VariableId> {
    (1..=m).map(VariableId::y).collect()
}

/// `V(y_1..y_{n-1}) * prod_{j=1}^{n} prod_{k=1}^{n-1} (y_k - z_j)^{a_j}`.
pub fn region_integrand(a: &[u32], budget: &Budget) -> Result<Polynomial, EngineError> {
    let m = a.len().saturating_sub(1);
    let w = VariableId::w();
    let q = multiplicity_polynomial(a, w);
    let mut acc = Polynomial::one();
    for k in 1..=m {
        acc = budget.admit(&acc * &q.substitute(w, &Polynomial::var(VariableId::y(k))))?;
    }
    budget.admit(&acc * &vandermonde_product(&ys(m)))
}

/// Integrates `y_k` over `bounds[k-1]`, innermost (`y_m`) first.
pub fn box_integral(
    f: &Polynomial,
    bounds: &[(Polynomial, Polynomial)],
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    let mut p = f.clone();
    for (k, (lo, hi)) in bounds.iter().enumerate().rev() {
        p = budget.admit(p.definite_integral(VariableId::y(k + 1), lo, hi)?)?;
    }
    Ok(p)
}

/// Parity of a sequence of distinct integers relative to its sorted order.
pub fn permutation_sign(word: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn z(i: usize) -> Polynomial {
    Polynomial::var(VariableId::z(i))
}

fn signed_accumulate(parts: &mut Vec<Polynomial>, p: Polynomial, sign: i64) {
    parts.push(if sign < 0 { -p } else { p });
}

/// The symmetrized sides, valid for any integrand in `y_1..y_{n-1}`.
pub fn symmetrized_box_sides(
    n: usize,
    f: &Polynomial,
    rule: SignRule,
    budget: &Budget,
) -> Result<(Polynomial, Polynomial), EngineError> {
    let m = n - 1;
    let mut left = Vec::new();
    for i in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
        for word in others.iter().copied().permutations(m) {
            let bounds: Vec<_> = word.iter().map(|&j| (Polynomial::zero(), z(j))).collect();
            let sign = rule.sign(i, n) * permutation_sign(&word);
            signed_accumulate(&mut left, box_integral(f, &bounds, budget)?, sign);
        }
    }
    let mut right = Vec::new();
    for word in (2..=n).permutations(m) {
        let bounds: Vec<_> = word.iter().map(|&j| (z(1), z(j))).collect();
        signed_accumulate(&mut right, box_integral(f, &bounds, budget)?, permutation_sign(&word));
    }
    Ok((Polynomial::sum(left.iter()), Polynomial::sum(right.iter())))
}

/// The plain sides using sorted upper limits only.
pub fn signed_box_sides(
    n: usize,
    f: &Polynomial,
    rule: SignRule,
    budget: &Budget,
) -> Result<(Polynomial, Polynomial), EngineError> {
    let mut left = Vec::new();
    for i in 1..=n {
        let bounds: Vec<_> = (1..=n)
            .filter(|&j| j != i)
            .map(|j| (Polynomial::zero(), z(j)))
            .collect();
        signed_accumulate(&mut left, box_integral(f, &bounds, budget)?, rule.sign(i, n));
    }
    let bounds: Vec<_> = (2..=n).map(|j| (z(1), z(j))).collect();
    let right = box_integral(f, &bounds, budget)?;
    Ok((Polynomial::sum(left.iter()), right))
}

/// All exponent vectors of length `m` with entry sum at most `max_degree`.
pub fn monomial_basis(m: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn go(m: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            go(m, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, max_degree, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn basis_monomial(exponents: &[u32]) -> Polynomial {
    Polynomial::term(
        Monomial::from_powers(exponents.iter().enumerate().map(|(k, &e)| (VariableId::y(k + 1), e))),
        ExactRational::from_integer(1.into()),
    )
}

/// Symmetrized identity on the monomial basis up to `max_degree` (where
/// `n = 1` degenerates to the integrand itself on both sides).
pub(crate) fn symmetrized_on_basis(
    n: usize,
    max_degree: u32,
    rule: SignRule,
    budget: &Budget,
) -> Result<Option<Polynomial>, EngineError> {
    for e in monomial_basis(n - 1, max_degree) {
        let (l, r) = symmetrized_box_sides(n, &basis_monomial(&e), rule, budget)?;
        let diff = &l - &r;
        if !diff.is_zero() {
            return Ok(Some(diff));
        }
    }
    Ok(None)
}

/// Checks the symmetrized identity on every monomial up to
/// `max_basis_degree`, the plain identity on the antisymmetric integrand,
/// and that symmetrizing that integrand scales both plain sides by `(n-1)!`.
pub fn region_identity_check(
    a: &[u32],
    max_basis_degree: u32,
    rule: SignRule,
    budget: &Budget,
) -> Result<CheckOutcome, EngineError> {
    let n = a.len();
    if n < 2 {
        return Err(EngineError::InvalidInstance(
            "the region identity needs n >= 2".into(),
        ));
    }
    let meta = CheckMeta::new(format!("region[{}]", rule.label()), a, None);
    meta.run(CheckMode::Symbolic, || {
        if let Some(diff) = symmetrized_on_basis(n, max_basis_degree, rule, budget)? {
            return Ok((CheckMode::Symbolic, Some(super::Witness::Difference(diff))));
        }
        let f = region_integrand(a, budget)?;
        let (l5, r5) = signed_box_sides(n, &f, rule, budget)?;
        if let Some(w) = compare(&l5, &r5) {
            return Ok((CheckMode::Symbolic, Some(w)));
        }
        let (l6, r6) = symmetrized_box_sides(n, &f, rule, budget)?;
        let scale = factorial_rational((n - 1) as u64);
        if let Some(w) = compare(&l6, &l5.scale(&scale)) {
            return Ok((CheckMode::Symbolic, Some(w)));
        }
        Ok((CheckMode::Symbolic, compare(&r6, &r5.scale(&scale))))
    })
}
