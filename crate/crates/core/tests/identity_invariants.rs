use itertools::Itertools;

use critval_core::critpoly::{
    diagonal_boundary_terms, jacobian_direct, rational_point_determinants, theorem_b_rhs,
    CriticalSpec,
};
use critval_core::exact_poly::rational::{self, rational};
use critval_core::exact_poly::{Assignment, ExactRational, Polynomial, VariableId};
use critval_core::identity_engine::{
    theorem_a_degree, theorem_a_integrand, theorem_a_lhs, theorem_a_lhs_in_order, theorem_a_rhs,
    theorem_a_rhs_at, verify_theorem_a, Budget, CheckMode, IdentityInstance, Status,
};
use critval_core::poly_linalg::{det_cofactor, det_exact};

fn inst(a: &[u32], b: u32) -> IdentityInstance {
    IdentityInstance::new(a.to_vec(), b).unwrap()
}

/// The box integral as `det[int_0^{z_j} f(x) x^{i-1} dx]`, which holds
/// because the Vandermonde factor is `det[x_j^{i-1}]` and each `x_j` sits in
/// one column only.
fn column_determinant(instance: &IdentityInstance, z: &[ExactRational]) -> ExactRational {
    let n = instance.n();
    let t = VariableId::w();
    let mut f = Polynomial::var(t).pow(instance.b());
    for (k, &e) in instance.a().iter().enumerate() {
        f = &f * &(&Polynomial::var(t) - &Polynomial::constant(z[k].clone())).pow(e);
    }
    let rows: Vec<Vec<ExactRational>> = (0..n)
        .map(|i| {
            let g = &f * &Polynomial::var(t).pow(i as u32);
            (0..n)
                .map(|j| {
                    g.definite_integral(t, &Polynomial::zero(), &Polynomial::constant(z[j].clone()))
                        .unwrap()
                        .constant_value()
                        .unwrap()
                })
                .collect()
        })
        .collect();
    det_exact(&rows)
}

fn assignment(z: &[ExactRational]) -> Assignment {
    z.iter()
        .enumerate()
        .map(|(k, v)| (VariableId::z(k + 1), v.clone()))
        .collect()
}

#[test]
fn closed_form_matches_column_determinant_oracle() {
    let z = [rational(3, 2), rational(-2, 1), rational(5, 3), rational(1, 4)];
    for (a, b) in [
        (vec![0], 0),
        (vec![3], 2),
        (vec![1, 2], 0),
        (vec![0, 1], 3),
        (vec![2, 0, 1], 1),
        (vec![1, 1, 1, 1], 0),
    ] {
        let i = inst(&a, b);
        let zs = &z[..a.len()];
        assert_eq!(
            theorem_a_rhs_at(&i, &assignment(zs)).unwrap(),
            column_determinant(&i, zs),
            "{i}"
        );
    }
}

#[test]
fn both_sides_are_homogeneous() {
    for (a, b) in [(vec![2], 1), (vec![1, 0], 2), (vec![1, 2, 0], 1)] {
        let i = inst(&a, b);
        let d = theorem_a_degree(&i);
        assert!(theorem_a_lhs(&i).is_homogeneous_of_degree(d), "{i}");
        assert!(theorem_a_rhs(&i).is_homogeneous_of_degree(d), "{i}");
    }
}

#[test]
fn every_integration_order_agrees() {
    let b = Budget::default();
    for (a, bb) in [(vec![1, 0, 1], 1), (vec![0, 2, 1], 0)] {
        let i = inst(&a, bb);
        let orders: Vec<Vec<usize>> = (1..=3).permutations(3).collect();
        assert_eq!(orders.len(), 6);
        let first = theorem_a_lhs_in_order(&i, &orders[0], &b).unwrap();
        for o in &orders[1..] {
            assert_eq!(theorem_a_lhs_in_order(&i, o, &b).unwrap(), first, "{i} {o:?}");
        }
    }
}

#[test]
fn integrand_is_antisymmetric_in_x() {
    let i = inst(&[1, 2, 0], 1);
    let f = theorem_a_integrand(&i, &Budget::default()).unwrap();
    let (x1, x3) = (VariableId::x(1), VariableId::x(3));
    let swapped = f.substitute_all(&[(x1, Polynomial::var(x3)), (x3, Polynomial::var(x1))]);
    assert_eq!(swapped, -&f);
}

#[test]
fn symbolic_pass_implies_pointwise_pass() {
    let b = Budget::default();
    for (a, bb) in [(vec![1], 2), (vec![2, 1], 0), (vec![0, 1, 1], 1)] {
        let i = inst(&a, bb);
        assert_eq!(verify_theorem_a(&i, CheckMode::Symbolic, &b).unwrap().status, Status::Pass);
        let out = verify_theorem_a(&i, CheckMode::evaluate(12, 99), &b).unwrap();
        assert_eq!(out.status, Status::Pass);
        assert_eq!(out.mode.points(), Some(12));
    }
}

#[test]
fn wrong_closed_form_is_caught_pointwise() {
    // scaling the right side by 2 must be detected at every sampled point
    let i = inst(&[1, 1], 0);
    let lhs = theorem_a_lhs(&i);
    let rhs = theorem_a_rhs(&i).scale(&rational::integer(2));
    let p = assignment(&[rational(1, 3), rational(4, 1)]);
    assert_ne!(lhs.evaluate(&p).unwrap(), rhs.evaluate(&p).unwrap());
}

#[test]
fn jacobian_determinant_degree() {
    for a in [vec![1], vec![2, 1], vec![1, 1, 2]] {
        let det = det_cofactor(&jacobian_direct(&a).unwrap());
        let d = a.len() as u32 * a.iter().sum::<u32>();
        assert!(det.is_homogeneous_of_degree(d), "{a:?}");
        assert_eq!(det, theorem_b_rhs(&a).unwrap());
    }
}

#[test]
fn diagonal_boundary_terms_vanish() {
    for a in [vec![1], vec![3, 1], vec![1, 2, 1]] {
        assert!(diagonal_boundary_terms(&a).iter().all(Polynomial::is_zero));
    }
    // with a zero multiplicity the term survives
    assert!(!diagonal_boundary_terms(&[1, 0])[1].is_zero());
}

#[test]
fn rational_point_det_consistency() {
    for (a, pts) in [
        (vec![1, 1], vec![rational(2, 1), rational(-1, 3)]),
        (vec![2, 1, 1], vec![rational(1, 2), rational(3, 1), rational(-5, 4)]),
    ] {
        let spec = CriticalSpec::rational(a.clone(), pts.clone()).unwrap();
        let (symbolic, numeric) = rational_point_determinants(&spec).unwrap().unwrap();
        assert_eq!(symbolic, numeric);
        assert_eq!(symbolic, theorem_b_rhs(&a).unwrap().evaluate(&assignment(&pts)).unwrap());
    }
}
