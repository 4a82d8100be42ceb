//! Steps of the induction on `n` and of the passage to the determinant
//! identity, each checked as an explicit polynomial equality.

use super::check::{compare, CheckMeta, CheckMode, CheckOutcome, Witness};
use super::region::{box_integral, region_integrand, ys};
use super::theorem_a::{multiplicity_polynomial, theorem_a_rhs_within, zs};
use super::{Budget, EngineError, IdentityInstance};
use crate::critpoly::theorem_b_rhs;
use crate::exact_poly::rational::{self, factorial_rational, sign_power};
use crate::exact_poly::{rf_equal, Polynomial, VariableId};
use crate::poly_linalg::{
    cauchy_alternant, cauchy_closed_form, cauchy_numerator, cauchy_row_scaled, det_cofactor,
    det_rational,
};

fn z(i: usize) -> Polynomial {
    Polynomial::var(VariableId::z(i))
}

/// The box `z_1 <= y_k <= z_{k+1}` integral of the region integrand, computed
/// directly and again after the shift `y_k -> y_k + z_1`; both must equal the
/// closed form of `(a_2..a_n; b = a_1)` at `z_k -> z_{k+1} - z_1`.
pub fn reduction_step_check(a: &[u32], budget: &Budget) -> Result<CheckOutcome, EngineError> {
    let n = a.len();
    if n < 2 {
        return Err(EngineError::InvalidInstance(
            "the reduction step needs n >= 2".into(),
        ));
    }
    let meta = CheckMeta::new("reduction", a, None);
    meta.run(CheckMode::Symbolic, || {
        let m = n - 1;
        let f = region_integrand(a, budget)?;
        let direct_bounds: Vec<_> = (2..=n).map(|j| (z(1), z(j))).collect();
        let direct = box_integral(&f, &direct_bounds, budget)?;

        let shift: Vec<(VariableId, Polynomial)> = ys(m)
            .into_iter()
            .map(|y| (y, &Polynomial::var(y) + &z(1)))
            .collect();
        let shifted = budget.admit(f.substitute_all(&shift))?;
        let shifted_bounds: Vec<_> = (2..=n)
            .map(|j| (Polynomial::zero(), &z(j) - &z(1)))
            .collect();
        let translated = box_integral(&shifted, &shifted_bounds, budget)?;
        if let Some(w) = compare(&direct, &translated) {
            return Ok((CheckMode::Symbolic, Some(w)));
        }

        let smaller = IdentityInstance::new(a[1..].to_vec(), a[0])?;
        let closed = theorem_a_rhs_within(&smaller, budget)?;
        let images: Vec<(VariableId, Polynomial)> = zs(m)
            .into_iter()
            .enumerate()
            .map(|(k, v)| (v, &z(k + 2) - &z(1)))
            .collect();
        let expected = budget.admit(closed.substitute_all(&images))?;
        Ok((CheckMode::Symbolic, compare(&direct, &expected)))
    })
}

/// Evaluates `G = prod_j (x_i - z_j)^{a_j+1} prod_j prod_{i' != i} (x_{i'} - z_j)^{a_j}`
/// between `x_i = 0` and `x_i = z_i`; the upper value must vanish and the
/// difference must be `-prod_j (-z_j)^{a_j+1}` times the `i' != i` product.
pub fn boundary_term_check(
    a: &[u32],
    i: usize,
    budget: &Budget,
) -> Result<CheckOutcome, EngineError> {
    let n = a.len();
    if i == 0 || i > n {
        return Err(EngineError::InvalidInstance(format!(
            "boundary index {i} is outside 1..={n}"
        )));
    }
    let meta = CheckMeta::new(format!("boundary[i={i}]"), a, None);
    meta.run(CheckMode::Symbolic, || {
        let w = VariableId::w();
        let xi = VariableId::x(i);
        let raised: Vec<u32> = a.iter().map(|&e| e + 1).collect();
        let own = multiplicity_polynomial(&raised, w).substitute(w, &Polynomial::var(xi));
        let q = multiplicity_polynomial(a, w);
        let mut others = Polynomial::one();
        for k in (1..=n).filter(|&k| k != i) {
            others = budget.admit(&others * &q.substitute(w, &Polynomial::var(VariableId::x(k))))?;
        }
        let g = budget.admit(&own * &others)?;
        let upper = g.substitute(xi, &z(i));
        if !upper.is_zero() {
            return Ok((CheckMode::Symbolic, Some(Witness::Difference(upper))));
        }
        let lower = g.substitute(xi, &Polynomial::zero());
        let difference = &upper - &lower;
        let mut constant = Polynomial::integer(-1);
        for (j, &e) in a.iter().enumerate() {
            constant = &constant * &(-&z(j + 1)).pow(e + 1);
        }
        Ok((CheckMode::Symbolic, compare(&difference, &(&constant * &others))))
    })
}

/// The determinant closed form reached from the multi-integral closed form
/// with `b = 0` and shifted exponents `a_i - 1`.
pub fn chain_lhs(a: &[u32]) -> Result<Polynomial, EngineError> {
    let n = a.len();
    if let Some(index) = a.iter().position(|&e| e == 0) {
        return Err(EngineError::TheoremBRequiresPositiveMultiplicity { index: index + 1 });
    }
    let shifted = IdentityInstance::new(a.iter().map(|&e| e - 1).collect(), 0)?;
    // (-1)^{abar - ceil(n/2)} with abar of the unshifted exponents, which is
    // abar of the shifted instance.
    let mut c = sign_power(shifted.abar() as u64);
    let total: u32 = a.iter().sum();
    for &e in a {
        c *= rational::integer(-(e as i64)) * factorial_rational((e - 1) as u64);
    }
    c /= factorial_rational(total as u64);
    let mut acc = Polynomial::constant(c);
    for j in 1..=n {
        for i in 1..j {
            acc = &acc * &(&z(i) - &z(j));
            acc = &acc * &(&z(j) - &z(i)).pow(a[i - 1] + a[j - 1] - 1);
        }
    }
    for (i, &e) in a.iter().enumerate() {
        acc = &acc * &z(i + 1).pow(e);
    }
    Ok(acc)
}

pub fn a_implies_b_chain_check(a: &[u32], budget: &Budget) -> Result<CheckOutcome, EngineError> {
    let lhs = chain_lhs(a)?;
    let meta = CheckMeta::new("chain", a, None);
    meta.run(CheckMode::Symbolic, || {
        let lhs = budget.admit(lhs)?;
        let rhs = budget.admit(theorem_b_rhs(a)?)?;
        Ok((CheckMode::Symbolic, compare(&lhs, &rhs)))
    })
}

/// The alternant determinant against its closed form: through rational
/// functions for `n <= 3`, and denominator-free by row scaling for all `n`.
pub fn verify_cauchy(n: usize, budget: &Budget) -> Result<CheckOutcome, EngineError> {
    if n == 0 {
        return Err(EngineError::InvalidInstance("n must be at least 1".into()));
    }
    let meta = CheckMeta::new("cauchy", &vec![0; n], None);
    meta.run(CheckMode::Symbolic, || {
        if n <= 3 {
            let det = det_rational(&cauchy_alternant(n));
            budget.check(det.numerator())?;
            let closed = cauchy_closed_form(n);
            if !rf_equal(&det, &closed) {
                let diff = &(det.numerator() * closed.denominator())
                    - &(closed.numerator() * det.denominator());
                return Ok((CheckMode::Symbolic, Some(Witness::Difference(diff))));
            }
        }
        let det = budget.admit(det_cofactor(&cauchy_row_scaled(n)))?;
        Ok((CheckMode::Symbolic, compare(&det, &cauchy_numerator(n))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity_engine::Status;

    #[test]
    fn reduction_small_cases() {
        let b = Budget::default();
        for a in [vec![0, 0], vec![1, 0], vec![1, 1, 1]] {
            let out = reduction_step_check(&a, &b).unwrap();
            assert_eq!(out.status, Status::Pass, "{a:?}");
        }
    }

    #[test]
    fn reduction_two_point_values() {
        let b = Budget::default();
        let f = region_integrand(&[1, 0], &b).unwrap();
        let got = box_integral(&f, &[(z(1), z(2))], &b).unwrap();
        assert_eq!(got, (&z(2) - &z(1)).pow(2).scale(&rational::rational(1, 2)));
    }

    #[test]
    fn boundary_examples() {
        let out = boundary_term_check(&[0], 1, &Budget::default()).unwrap();
        assert_eq!(out.status, Status::Pass);
        let out = boundary_term_check(&[0, 0], 1, &Budget::default()).unwrap();
        assert_eq!(out.status, Status::Pass);
        let out = boundary_term_check(&[2, 1, 0], 2, &Budget::default()).unwrap();
        assert_eq!(out.status, Status::Pass);
        assert!(boundary_term_check(&[1], 2, &Budget::default()).is_err());
    }

    #[test]
    fn chain_examples() {
        assert_eq!(chain_lhs(&[1]).unwrap(), -&z(1));
        assert_eq!(a_implies_b_chain_check(&[1, 1], &Budget::default()).unwrap().status, Status::Pass);
        assert!(matches!(
            a_implies_b_chain_check(&[0], &Budget::default()),
            Err(EngineError::TheoremBRequiresPositiveMultiplicity { index: 1 })
        ));
    }

    #[test]
    fn cauchy_small() {
        for n in 1..=3 {
            assert_eq!(verify_cauchy(n, &Budget::default()).unwrap().status, Status::Pass);
        }
    }
}
