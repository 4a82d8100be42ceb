//! Polynomials with prescribed critical points `z_i` of multiplicity `a_i`,
//! their critical values, and the Jacobian of the critical values with
//! respect to the critical points.
//!
//! `p(Z) = int_0^Z prod_i (w - z_i)^{a_i} dw` is built in the variables `Z`
//! (`VariableId::big_z`) and `w` (`VariableId::w`).

use crate::exact_poly::rational::{self, factorial_rational};
use crate::exact_poly::{Assignment, ExactRational, Polynomial, VariableId};
use crate::identity_engine::{
    compare, multiplicity_polynomial, pointwise, Budget, CheckMeta, CheckMode, CheckOutcome,
    EngineError, Witness,
};
use crate::poly_linalg::{det_cofactor, det_exact, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalPoints {
    /// The indeterminates `z_1..z_n`.
    Symbolic,
    /// Pairwise distinct rational values for `z_1..z_n`.
    Rational(Vec<ExactRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSpec {
    multiplicities: Vec<u32>,
    points: CriticalPoints,
}

fn require_positive(a: &[u32]) -> Result<(), EngineError> {
    if a.is_empty() {
        return Err(EngineError::InvalidInstance("n must be at least 1".into()));
    }
    match a.iter().position(|&e| e == 0) {
        Some(index) => Err(EngineError::TheoremBRequiresPositiveMultiplicity { index: index + 1 }),
        None => Ok(()),
    }
}

impl CriticalSpec {
    pub fn symbolic(multiplicities: Vec<u32>) -> Result<Self, EngineError> {
        require_positive(&multiplicities)?;
        Ok(Self {
            multiplicities,
            points: CriticalPoints::Symbolic,
        })
    }

    pub fn rational(
        multiplicities: Vec<u32>,
        points: Vec<ExactRational>,
    ) -> Result<Self, EngineError> {
        require_positive(&multiplicities)?;
        if points.len() != multiplicities.len() {
            return Err(EngineError::InvalidInstance(format!(
                "{} points given for {} multiplicities",
                points.len(),
                multiplicities.len()
            )));
        }
        for i in 0..points.len() {
            if points[i + 1..].contains(&points[i]) {
                return Err(EngineError::InvalidInstance(format!(
                    "critical point {} is repeated",
                    rational::format_rational(&points[i])
                )));
            }
        }
        Ok(Self {
            multiplicities,
            points: CriticalPoints::Rational(points),
        })
    }

    pub fn n(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn points(&self) -> &CriticalPoints {
        &self.points
    }

    /// The point values as an assignment to `z_1..z_n`, if rational.
    pub fn assignment(&self) -> Option<Assignment> {
        match &self.points {
            CriticalPoints::Symbolic => None,
            CriticalPoints::Rational(values) => Some(
                values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| (VariableId::z(k + 1), v.clone()))
                    .collect(),
            ),
        }
    }

    fn symbolic_p(&self) -> Polynomial {
        let w = VariableId::w();
        multiplicity_polynomial(&self.multiplicities, w)
            .definite_integral(w, &Polynomial::zero(), &Polynomial::var(VariableId::big_z()))
            .expect("bounds do not mention w")
    }
}

/// `p(Z)`, with the points substituted when they are rational.
pub fn build_p(spec: &CriticalSpec) -> Polynomial {
    let p = spec.symbolic_p();
    match spec.assignment() {
        None => p,
        Some(point) => p.partial_evaluate(&point),
    }
}

/// `p(z_j)` for each `j`, as polynomials in the `z`'s; constants when the
/// points are rational.
pub fn critical_values(spec: &CriticalSpec) -> Vec<Polynomial> {
    let p = spec.symbolic_p();
    let big_z = VariableId::big_z();
    let values = (1..=spec.n()).map(|j| p.substitute(big_z, &Polynomial::var(VariableId::z(j))));
    match spec.assignment() {
        None => values.collect(),
        Some(point) => values.map(|v| v.partial_evaluate(&point)).collect(),
    }
}

/// Critical values at rational points as numbers.
pub fn critical_values_at(spec: &CriticalSpec) -> Option<Vec<ExactRational>> {
    spec.assignment()?;
    Some(
        critical_values(spec)
            .into_iter()
            .map(|v| v.constant_value().expect("constant after substitution"))
            .collect(),
    )
}

/// Entry `(i, j)` is `d/dz_i p(z_j)`, differentiating the composed polynomial.
pub fn jacobian_direct(a: &[u32]) -> Result<PolyMatrix, EngineError> {
    let spec = CriticalSpec::symbolic(a.to_vec())?;
    let values = critical_values(&spec);
    Ok(PolyMatrix::from_fn(spec.n(), |i, j| {
        values[j].derivative(VariableId::z(i + 1))
    }))
}

/// Entry `(i, j)` is `-a_i int_0^{z_j} (w - z_i)^{a_i - 1} prod_{k != i} (w - z_k)^{a_k} dw`.
pub fn jacobian_rewrite(a: &[u32]) -> Result<PolyMatrix, EngineError> {
    require_positive(a)?;
    let n = a.len();
    let w = VariableId::w();
    let integrands: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut lowered = a.to_vec();
            lowered[i] -= 1;
            multiplicity_polynomial(&lowered, w).scale(&rational::integer(-(a[i] as i64)))
        })
        .collect();
    Ok(PolyMatrix::from_fn(n, |i, j| {
        integrands[i]
            .definite_integral(w, &Polynomial::zero(), &Polynomial::var(VariableId::z(j + 1)))
            .expect("bounds do not mention w")
    }))
}

/// The upper-limit chain-rule term `p'(z_j)` of each diagonal entry; all
/// zero when every `a_j >= 1`.
pub fn diagonal_boundary_terms(a: &[u32]) -> Vec<Polynomial> {
    let w = VariableId::w();
    let q = multiplicity_polynomial(a, w);
    (1..=a.len())
        .map(|j| q.substitute(w, &Polynomial::var(VariableId::z(j))))
        .collect()
}

/// The Jacobian at rational points, evaluated from the symbolic matrix.
pub fn jacobian_at(spec: &CriticalSpec) -> Result<Option<Vec<Vec<ExactRational>>>, EngineError> {
    let Some(point) = spec.assignment() else {
        return Ok(None);
    };
    let j = jacobian_direct(spec.multiplicities())?;
    Ok(Some(j.evaluate(&point)?))
}

/// `prod a_i! / (sum a_i)! * prod (-z_i)^{a_i} * prod_{i != j} (z_i - z_j)^{a_j}`.
pub fn theorem_b_rhs(a: &[u32]) -> Result<Polynomial, EngineError> {
    require_positive(a)?;
    let mut acc = Polynomial::constant(theorem_b_coefficient(a));
    for (i, &e) in a.iter().enumerate() {
        acc = &acc * &(-&Polynomial::var(VariableId::z(i + 1))).pow(e);
    }
    for i in 1..=a.len() {
        for j in (1..=a.len()).filter(|&j| j != i) {
            acc = &acc * &Polynomial::difference(VariableId::z(i), VariableId::z(j)).pow(a[j - 1]);
        }
    }
    Ok(acc)
}

fn theorem_b_coefficient(a: &[u32]) -> ExactRational {
    let mut c = ExactRational::from_integer(1.into());
    for &e in a {
        c *= factorial_rational(e as u64);
    }
    c / factorial_rational(a.iter().sum::<u32>() as u64)
}

/// The right side in factored form at a point.
pub fn theorem_b_rhs_at(a: &[u32], point: &Assignment) -> Result<ExactRational, EngineError> {
    require_positive(a)?;
    let z = |k: usize| {
        point
            .get(&VariableId::z(k))
            .cloned()
            .ok_or(crate::exact_poly::PolyError::UnboundVariable(vec![VariableId::z(k)]))
    };
    let mut acc = theorem_b_coefficient(a);
    for i in 1..=a.len() {
        let zi = z(i)?;
        acc *= rational::pow(&-&zi, a[i - 1]);
        for j in (1..=a.len()).filter(|&j| j != i) {
            acc *= rational::pow(&(&zi - &z(j)?), a[j - 1]);
        }
    }
    Ok(acc)
}

/// `det J` against the closed form, symbolically or at random points.
pub fn verify_theorem_b(
    a: &[u32],
    mode: CheckMode,
    budget: &Budget,
) -> Result<CheckOutcome, EngineError> {
    require_positive(a)?;
    let n = a.len();
    let meta = CheckMeta::new("theorem-b", a, None);
    meta.run(mode, || {
        let jac = jacobian_direct(a)?;
        for row in jac.rows() {
            row.iter().try_for_each(|p| budget.check(p))?;
        }
        for (j, term) in diagonal_boundary_terms(a).into_iter().enumerate() {
            if !term.is_zero() {
                return Err(EngineError::InvalidInstance(format!(
                    "diagonal boundary term {} does not vanish",
                    j + 1
                )));
            }
        }
        match mode {
            CheckMode::Symbolic => {
                let det = budget.admit(det_cofactor(&jac))?;
                Ok((mode, compare(&det, &theorem_b_rhs(a)?)))
            }
            CheckMode::Evaluate { points, seed } => {
                let degree = n as u32 * a.iter().sum::<u32>();
                let points = points.unwrap_or_else(|| crate::identity_engine::default_points(degree));
                let zs: Vec<VariableId> = (1..=n).map(VariableId::z).collect();
                let witness = pointwise(
                    meta.seed(seed),
                    &zs,
                    points,
                    |p| Ok(det_exact(&jac.evaluate(p)?)),
                    |p| theorem_b_rhs_at(a, p),
                )?;
                Ok((CheckMode::evaluate(points, seed), witness))
            }
        }
    })
}

/// The two Jacobian constructions agree entrywise.
pub fn verify_jacobian_paths(a: &[u32], budget: &Budget) -> Result<CheckOutcome, EngineError> {
    require_positive(a)?;
    let meta = CheckMeta::new("jacobian-paths", a, None);
    meta.run(CheckMode::Symbolic, || {
        let direct = jacobian_direct(a)?;
        let rewrite = jacobian_rewrite(a)?;
        let n = a.len();
        for i in 0..n {
            for j in 0..n {
                budget.check(direct.get(i, j))?;
                if let Some(w) = compare(direct.get(i, j), rewrite.get(i, j)) {
                    return Ok((CheckMode::Symbolic, Some(w)));
                }
            }
        }
        Ok((CheckMode::Symbolic, None::<Witness>))
    })
}

/// The Jacobian's determinant at rational points: from the symbolic
/// determinant, and from the numerically evaluated matrix.
pub fn rational_point_determinants(
    spec: &CriticalSpec,
) -> Result<Option<(ExactRational, ExactRational)>, EngineError> {
    let Some(point) = spec.assignment() else {
        return Ok(None);
    };
    let jac = jacobian_direct(spec.multiplicities())?;
    let symbolic = det_cofactor(&jac).evaluate(&point)?;
    let numeric = det_exact(&jac.evaluate(&point)?);
    Ok(Some((symbolic, numeric)))
}
