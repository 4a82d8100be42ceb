//! The n-fold integral of `prod x_i^b * prod_{j,k} (x_j - z_k)^{a_k} * V(x)`
//! over the box `0 <= x_i <= z_i`, and its closed form.

use num_traits::One;

use super::check::{compare, default_points, pointwise, CheckMeta, CheckMode, CheckOutcome};
use super::{Budget, EngineError, IdentityInstance};
use crate::exact_poly::rational::{self, factorial_rational, sign_power};
use crate::exact_poly::{Assignment, ExactRational, Monomial, Polynomial, VariableId};
use crate::poly_linalg::vandermonde_product;

pub(crate) fn xs(n: usize) -> Vec<VariableId> {
    (1..=n).map(VariableId::x).collect()
}

pub(crate) fn zs(n: usize) -> Vec<VariableId> {
    (1..=n).map(VariableId::z).collect()
}

/// `prod_k (t - z_k)^{a_k}` in the single variable `t`.
pub fn multiplicity_polynomial(a: &[u32], t: VariableId) -> Polynomial {
    let mut acc = Polynomial::one();
    for (k, &e) in a.iter().enumerate() {
        acc = &acc * &Polynomial::difference(t, VariableId::z(k + 1)).pow(e);
    }
    acc
}

/// `prod_j q(x_j) * V(x_1..x_n)` for a univariate `q` in `w`.
pub(crate) fn product_over_x(
    q: &Polynomial,
    n: usize,
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    let w = VariableId::w();
    let mut acc = Polynomial::one();
    for j in 1..=n {
        let factor = q.substitute(w, &Polynomial::var(VariableId::x(j)));
        acc = budget.admit(&acc * &factor)?;
    }
    budget.admit(&acc * &vandermonde_product(&xs(n)))
}

fn weighted_factor(inst: &IdentityInstance) -> Polynomial {
    let w = VariableId::w();
    multiplicity_polynomial(inst.a(), w).mul_term(&Monomial::var_pow(w, inst.b()), &ExactRational::one())
}

/// The unintegrated integrand.
pub fn theorem_a_integrand(
    inst: &IdentityInstance,
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    product_over_x(&weighted_factor(inst), inst.n(), budget)
}

fn integrate_box(
    mut p: Polynomial,
    order: &[usize],
    upper: impl Fn(usize) -> Polynomial,
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    for &i in order {
        p = p.definite_integral(VariableId::x(i), &Polynomial::zero(), &upper(i))?;
        budget.check(&p)?;
    }
    Ok(p)
}

/// The left side, integrating over `x_i` in the given order (1-based indices).
pub fn theorem_a_lhs_in_order(
    inst: &IdentityInstance,
    order: &[usize],
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=inst.n()).collect::<Vec<_>>() {
        return Err(EngineError::InvalidInstance(format!(
            "integration order {order:?} is not a permutation of 1..={}",
            inst.n()
        )));
    }
    let integrand = theorem_a_integrand(inst, budget)?;
    integrate_box(integrand, order, |i| Polynomial::var(VariableId::z(i)), budget)
}

/// The left side, integrating `x_n` first and `x_1` last.
pub fn theorem_a_lhs_within(
    inst: &IdentityInstance,
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    let order: Vec<usize> = (1..=inst.n()).rev().collect();
    theorem_a_lhs_in_order(inst, &order, budget)
}

pub fn theorem_a_lhs(inst: &IdentityInstance) -> Polynomial {
    theorem_a_lhs_within(inst, &Budget::unlimited()).expect("unlimited budget")
}

/// `(-1)^abar * b! * prod a_i! / (n + b + sum a_i)!`.
pub fn theorem_a_coefficient(inst: &IdentityInstance) -> ExactRational {
    let mut c = sign_power(inst.abar() as u64) * factorial_rational(inst.b() as u64);
    for &e in inst.a() {
        c *= factorial_rational(e as u64);
    }
    c / factorial_rational((inst.n() as u32 + inst.b() + inst.a_sum()) as u64)
}

/// Total degree of both sides.
pub fn theorem_a_degree(inst: &IdentityInstance) -> u32 {
    let a = inst.a();
    let n = a.len();
    let mut d: u32 = a.iter().map(|&e| e + inst.b() + 1).sum();
    for i in 0..n {
        for j in i + 1..n {
            d += a[i] + a[j] + 1;
        }
    }
    d
}

/// The closed form with each `z_i` replaced by `images[i-1]`.
pub(crate) fn theorem_a_rhs_with(
    inst: &IdentityInstance,
    images: &[Polynomial],
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    let a = inst.a();
    let n = a.len();
    let mut acc = Polynomial::constant(theorem_a_coefficient(inst));
    for j in 0..n {
        for i in 0..j {
            let factor = (&images[j] - &images[i]).pow(a[i] + a[j] + 1);
            acc = budget.admit(&acc * &factor)?;
        }
    }
    for i in 0..n {
        acc = budget.admit(&acc * &images[i].pow(a[i] + inst.b() + 1))?;
    }
    Ok(acc)
}

pub fn theorem_a_rhs_within(
    inst: &IdentityInstance,
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    let images: Vec<Polynomial> = zs(inst.n()).into_iter().map(Polynomial::var).collect();
    theorem_a_rhs_with(inst, &images, budget)
}

pub fn theorem_a_rhs(inst: &IdentityInstance) -> Polynomial {
    theorem_a_rhs_within(inst, &Budget::unlimited()).expect("unlimited budget")
}

fn value(point: &Assignment, v: VariableId) -> Result<&ExactRational, EngineError> {
    point
        .get(&v)
        .ok_or_else(|| crate::exact_poly::PolyError::UnboundVariable(vec![v]).into())
}

/// The closed form evaluated in factored form at a point.
pub fn theorem_a_rhs_at(
    inst: &IdentityInstance,
    point: &Assignment,
) -> Result<ExactRational, EngineError> {
    let a = inst.a();
    let n = a.len();
    let z: Vec<&ExactRational> = zs(n)
        .into_iter()
        .map(|v| value(point, v))
        .collect::<Result<_, _>>()?;
    let mut acc = theorem_a_coefficient(inst);
    for j in 0..n {
        for i in 0..j {
            acc *= rational::pow(&(z[j] - z[i]), a[i] + a[j] + 1);
        }
    }
    for i in 0..n {
        acc *= rational::pow(z[i], a[i] + inst.b() + 1);
    }
    Ok(acc)
}

/// The integral at numeric `z`. The integrand is specialised first, and
/// each `x_k` integral (innermost `x_n`) multiplies in only the factors that
/// mention `x_k`: `q(x_k)` and `x_k - x_i` for `i < k`. The remaining factors
/// are constant in `x_k` and stay outside.
pub fn theorem_a_lhs_at(
    inst: &IdentityInstance,
    point: &Assignment,
    budget: &Budget,
) -> Result<ExactRational, EngineError> {
    let n = inst.n();
    let z: Vec<ExactRational> = zs(n)
        .into_iter()
        .map(|v| value(point, v).cloned())
        .collect::<Result<_, _>>()?;
    let w = VariableId::w();
    let q = weighted_factor(inst).partial_evaluate(point);
    let mut carry = Polynomial::one();
    for k in (1..=n).rev() {
        let xk = VariableId::x(k);
        let mut f = budget.admit(&carry * &q.substitute(w, &Polynomial::var(xk)))?;
        for i in 1..k {
            f = budget.admit(&f * &Polynomial::difference(xk, VariableId::x(i)))?;
        }
        let upper = Polynomial::constant(z[k - 1].clone());
        carry = budget.admit(f.definite_integral(xk, &Polynomial::zero(), &upper)?)?;
    }
    Ok(carry
        .constant_value()
        .expect("all integration variables eliminated"))
}

pub fn verify_theorem_a(
    inst: &IdentityInstance,
    mode: CheckMode,
    budget: &Budget,
) -> Result<CheckOutcome, EngineError> {
    let meta = CheckMeta::new("theorem-a", inst.a(), Some(inst.b()));
    meta.run(mode, || match mode {
        CheckMode::Symbolic => {
            let lhs = theorem_a_lhs_within(inst, budget)?;
            let rhs = theorem_a_rhs_within(inst, budget)?;
            Ok((mode, compare(&lhs, &rhs)))
        }
        CheckMode::Evaluate { points, seed } => {
            let points = points.unwrap_or_else(|| default_points(theorem_a_degree(inst)));
            let witness = pointwise(
                meta.seed(seed),
                &zs(inst.n()),
                points,
                |p| theorem_a_lhs_at(inst, p, budget),
                |p| theorem_a_rhs_at(inst, p),
            )?;
            Ok((CheckMode::evaluate(points, seed), witness))
        }
    })
}
