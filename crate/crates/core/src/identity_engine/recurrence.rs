//! The recurrence in `b`:
//! `X(a; b+1) = sum_i (prod_{j!=i} z_j/(z_j - z_i)) X(a + e_i; b) + (prod_j z_j) X(a; b)`.
//!
//! Denominators are cleared by `D = prod_{i<j} (z_j - z_i)^2`; the multiplier
//! of `X(a + e_i; b)` over `D` is the polynomial `N_i` below.

use num_traits::Zero;

use super::check::{default_points, pointwise, CheckMeta, CheckMode, CheckOutcome, Witness};
use super::theorem_a::{
    theorem_a_integrand, theorem_a_lhs_within, theorem_a_degree, theorem_a_rhs_at,
    theorem_a_rhs_within, xs, zs,
};
use super::{Budget, EngineError, IdentityInstance};
use crate::exact_poly::rational;
use crate::exact_poly::{
    rf_equal, Assignment, ExactRational, PolyError, Polynomial, RationalFunction, VariableId,
};

/// Which function of `(a; b)` plays the role of `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceBuilder {
    /// The integral, built by iterated integration.
    Lhs,
    /// The closed form.
    Rhs,
    /// The unintegrated integrand (x variables stay symbolic).
    Integrand,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceLevel {
    Value,
    Integrand,
}

impl RecurrenceLevel {
    pub fn label(&self) -> &'static str {
        match self {
            RecurrenceLevel::Value => "value",
            RecurrenceLevel::Integrand => "integrand",
        }
    }
}

/// `D = prod_{i<j} (z_j - z_i)^2`.
pub fn recurrence_denominator(n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for j in 1..=n {
        for i in 1..j {
            acc = &acc * &Polynomial::difference(VariableId::z(j), VariableId::z(i)).pow(2);
        }
    }
    acc
}

/// `N_i = D * prod_{j!=i} z_j / (z_j - z_i)` as a polynomial (`i` 1-based).
///
/// Each pair `{i, j}` contributes `(z_j - z_i)^2` to `D`, so dividing by
/// `z_j - z_i` leaves exactly one factor `z_j - z_i` of either orientation.
pub fn recurrence_multiplier(n: usize, i: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for j in 1..=n {
        if j == i {
            continue;
        }
        acc = &acc * &Polynomial::var(VariableId::z(j));
        acc = &acc * &Polynomial::difference(VariableId::z(j), VariableId::z(i));
    }
    for l in 1..=n {
        for k in 1..l {
            if k != i && l != i {
                acc = &acc * &Polynomial::difference(VariableId::z(l), VariableId::z(k)).pow(2);
            }
        }
    }
    acc
}

fn build(
    inst: &IdentityInstance,
    builder: RecurrenceBuilder,
    budget: &Budget,
) -> Result<Polynomial, EngineError> {
    match builder {
        RecurrenceBuilder::Lhs => theorem_a_lhs_within(inst, budget),
        RecurrenceBuilder::Rhs => theorem_a_rhs_within(inst, budget),
        RecurrenceBuilder::Integrand => theorem_a_integrand(inst, budget),
    }
}

/// The right side of the recurrence over the common denominator `D`.
pub fn recurrence_rhs_value(
    inst: &IdentityInstance,
    builder: RecurrenceBuilder,
    budget: &Budget,
) -> Result<RationalFunction, EngineError> {
    let n = inst.n();
    let den = recurrence_denominator(n);
    let z_product = Polynomial::product(zs(n).iter().map(|&v| Polynomial::var(v)).collect::<Vec<_>>().iter());
    let mut parts = Vec::with_capacity(n + 1);
    for i in 1..=n {
        let x = build(&inst.bumped(i), builder, budget)?;
        parts.push(budget.admit(&recurrence_multiplier(n, i) * &x)?);
    }
    let base = build(inst, builder, budget)?;
    parts.push(budget.admit(&(&den * &z_product) * &base)?);
    let num = budget.admit(Polynomial::sum(parts.iter()))?;
    Ok(RationalFunction::new(num, den)?)
}

fn coefficient_at(n: usize, i: usize, point: &Assignment) -> Result<ExactRational, EngineError> {
    let z = |k: usize| &point[&VariableId::z(k)];
    let mut c = rational::integer(1);
    for j in (1..=n).filter(|&j| j != i) {
        let d = z(j) - z(i);
        if d.is_zero() {
            return Err(PolyError::DenominatorVanishes.into());
        }
        c *= z(j) / d;
    }
    Ok(c)
}

/// The integrand in factored form at a point.
fn integrand_at(inst: &IdentityInstance, point: &Assignment) -> ExactRational {
    let n = inst.n();
    let x = |k: usize| &point[&VariableId::x(k)];
    let z = |k: usize| &point[&VariableId::z(k)];
    let mut acc = rational::integer(1);
    for j in 1..=n {
        acc *= rational::pow(x(j), inst.b());
        for (k, &e) in inst.a().iter().enumerate() {
            acc *= rational::pow(&(x(j) - z(k + 1)), e);
        }
        for i in 1..j {
            acc *= x(j) - x(i);
        }
    }
    acc
}

fn value_at(
    inst: &IdentityInstance,
    level: RecurrenceLevel,
    point: &Assignment,
) -> Result<ExactRational, EngineError> {
    match level {
        RecurrenceLevel::Value => theorem_a_rhs_at(inst, point),
        RecurrenceLevel::Integrand => Ok(integrand_at(inst, point)),
    }
}

/// Checks the recurrence with the closed form (`Value`) or the integrand
/// (`Integrand`) as `X`.
pub fn verify_recurrence(
    inst: &IdentityInstance,
    level: RecurrenceLevel,
    mode: CheckMode,
    budget: &Budget,
) -> Result<CheckOutcome, EngineError> {
    let meta = CheckMeta::new(
        format!("recurrence-{}", level.label()),
        inst.a(),
        Some(inst.b()),
    );
    let builder = match level {
        RecurrenceLevel::Value => RecurrenceBuilder::Rhs,
        RecurrenceLevel::Integrand => RecurrenceBuilder::Integrand,
    };
    let n = inst.n();
    meta.run(mode, || match mode {
        CheckMode::Symbolic => {
            let shifted = RationalFunction::from_polynomial(build(&inst.with_b(inst.b() + 1), builder, budget)?);
            let rhs = recurrence_rhs_value(inst, builder, budget)?;
            let witness = if rf_equal(&shifted, &rhs) {
                None
            } else {
                let diff = &(shifted.numerator() * rhs.denominator()) - rhs.numerator();
                Some(Witness::Difference(diff))
            };
            Ok((mode, witness))
        }
        CheckMode::Evaluate { points, seed } => {
            let degree = theorem_a_degree(&inst.with_b(inst.b() + 1));
            let points = points.unwrap_or_else(|| default_points(degree));
            let vars: Vec<VariableId> = match level {
                RecurrenceLevel::Value => zs(n),
                RecurrenceLevel::Integrand => xs(n).into_iter().chain(zs(n)).collect(),
            };
            let witness = pointwise(
                meta.seed(seed),
                &vars,
                points,
                |p| value_at(&inst.with_b(inst.b() + 1), level, p),
                |p| {
                    let mut total = ExactRational::zero();
                    for i in 1..=n {
                        total += coefficient_at(n, i, p)? * value_at(&inst.bumped(i), level, p)?;
                    }
                    let z_product: ExactRational =
                        (1..=n).map(|k| p[&VariableId::z(k)].clone()).product();
                    Ok(total + z_product * value_at(inst, level, p)?)
                },
            )?;
            Ok((CheckMode::evaluate(points, seed), witness))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational::rational;
    use crate::identity_engine::Status;

    fn inst(a: &[u32], b: u32) -> IdentityInstance {
        IdentityInstance::new(a.to_vec(), b).unwrap()
    }

    fn z(i: usize) -> Polynomial {
        Polynomial::var(VariableId::z(i))
    }

    #[test]
    fn multiplier_clears_denominator() {
        for n in 1..=4 {
            let d = recurrence_denominator(n);
            for i in 1..=n {
                let mut lhs = recurrence_multiplier(n, i);
                let mut rhs = d.clone();
                for j in (1..=n).filter(|&j| j != i) {
                    lhs = &lhs * &Polynomial::difference(VariableId::z(j), VariableId::z(i));
                    rhs = &rhs * &z(j);
                }
                assert_eq!(lhs, rhs, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn one_variable_values() {
        let b = Budget::default();
        // L(2;0) + z L(1;0) = z^3/3 - z^3/2 = -z^3/6
        let v = recurrence_rhs_value(&inst(&[1], 0), RecurrenceBuilder::Rhs, &b).unwrap();
        assert!(v.denominator().is_one());
        assert_eq!(v.numerator(), &z(1).pow(3).scale(&rational(-1, 6)));
        // X(1;0) + z X(0;0) = -z^2/2 + z^2 = z^2/2
        let v = recurrence_rhs_value(&inst(&[0], 0), RecurrenceBuilder::Rhs, &b).unwrap();
        assert_eq!(v.numerator(), &z(1).pow(2).scale(&rational(1, 2)));
        let l = recurrence_rhs_value(&inst(&[0], 0), RecurrenceBuilder::Lhs, &b).unwrap();
        assert!(rf_equal(&l, &v));
    }

    #[test]
    fn checks_pass() {
        let b = Budget::default();
        let cases = [
            (inst(&[1], 0), RecurrenceLevel::Value, CheckMode::Symbolic),
            (inst(&[0, 1], 0), RecurrenceLevel::Integrand, CheckMode::Symbolic),
            (inst(&[1, 1, 1], 1), RecurrenceLevel::Value, CheckMode::evaluate(10, 1)),
            (inst(&[1, 0, 2], 0), RecurrenceLevel::Integrand, CheckMode::evaluate(10, 1)),
        ];
        for (i, level, mode) in cases {
            let out = verify_recurrence(&i, level, mode, &b).unwrap();
            assert_eq!(out.status, Status::Pass, "{i} {level:?} {mode:?}");
        }
    }

    #[test]
    fn any_distinct_point_is_admissible() {
        let mut p = Assignment::new();
        for (k, v) in [(1, rational(1, 2)), (2, rational(-3, 1)), (3, rational(7, 5))] {
            p.insert(VariableId::z(k), v);
        }
        for i in 1..=3 {
            assert!(coefficient_at(3, i, &p).is_ok());
        }
        p.insert(VariableId::z(3), rational(1, 2));
        assert!(coefficient_at(3, 1, &p).is_err());
    }
}
