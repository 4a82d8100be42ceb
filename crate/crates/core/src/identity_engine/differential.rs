//! `(n + sum a_i) F V = sum_i s(i) V(x without x_i) d/dx_i [prod_j (x_i - z_j) F]`
//! with `F = prod_{j,k} (x_j - z_k)^{a_k}` and `s` a candidate sign rule.

use super::check::{compare, CheckMeta, CheckMode, CheckOutcome};
use super::theorem_a::{multiplicity_polynomial, product_over_x, xs};
use super::{Budget, EngineError, SignRule};
use crate::exact_poly::rational;
use crate::exact_poly::{Polynomial, VariableId};
use crate::poly_linalg::vandermonde_product;

/// The left side and the unsigned summands of the right side.
pub(crate) fn differential_parts(
    a: &[u32],
    budget: &Budget,
) -> Result<(Polynomial, Vec<Polynomial>), EngineError> {
    let n = a.len();
    let w = VariableId::w();
    // F is product_over_x without the Vandermonde factor
    let q = multiplicity_polynomial(a, w);
    let mut f = Polynomial::one();
    for j in 1..=n {
        f = budget.admit(&f * &q.substitute(w, &Polynomial::var(VariableId::x(j))))?;
    }
    let fv = product_over_x(&q, n, budget)?;
    let weight = n as i64 + a.iter().map(|&e| e as i64).sum::<i64>();
    let left = fv.scale(&rational::integer(weight));

    let ones = vec![1u32; n];
    let mut summands = Vec::with_capacity(n);
    for i in 1..=n {
        let xi = VariableId::x(i);
        let linear = multiplicity_polynomial(&ones, w).substitute(w, &Polynomial::var(xi));
        let g = budget.admit(&linear * &f)?;
        let rest: Vec<VariableId> = xs(n).into_iter().filter(|&v| v != xi).collect();
        summands.push(budget.admit(&vandermonde_product(&rest) * &g.derivative(xi))?);
    }
    Ok((left, summands))
}

pub(crate) fn signed_sum(summands: &[Polynomial], rule: SignRule) -> Polynomial {
    let n = summands.len();
    let signed: Vec<Polynomial> = summands
        .iter()
        .enumerate()
        .map(|(k, t)| t.scale(&rational::integer(rule.sign(k + 1, n))))
        .collect();
    Polynomial::sum(signed.iter())
}

/// Both sides under `rule`.
pub fn differential_identity_sides(
    a: &[u32],
    rule: SignRule,
) -> Result<(Polynomial, Polynomial), EngineError> {
    if a.is_empty() {
        return Err(EngineError::InvalidInstance("n must be at least 1".into()));
    }
    let (left, summands) = differential_parts(a, &Budget::unlimited())?;
    Ok((left, signed_sum(&summands, rule)))
}

pub fn verify_differential(
    a: &[u32],
    rule: SignRule,
    budget: &Budget,
) -> Result<CheckOutcome, EngineError> {
    if a.is_empty() {
        return Err(EngineError::InvalidInstance("n must be at least 1".into()));
    }
    let meta = CheckMeta::new(format!("differential[{}]", rule.label()), a, None);
    meta.run(CheckMode::Symbolic, || {
        let (left, summands) = differential_parts(a, budget)?;
        Ok((CheckMode::Symbolic, compare(&left, &signed_sum(&summands, rule))))
    })
}
