use crate::exact_poly::{Polynomial, RationalFunction, VariableId};

use super::{PolyMatrix, RatMatrix};

/// `prod_{i<j} (v_j - v_i)`; empty and single-variable products are 1.
pub fn vandermonde_product(vars: &[VariableId]) -> Polynomial {
    let mut acc = Polynomial::one();
    for j in 1..vars.len() {
        for i in 0..j {
            acc = &acc * &Polynomial::difference(vars[j], vars[i]);
        }
    }
    acc
}

fn xs(n: usize) -> Vec<VariableId> {
    (1..=n).map(VariableId::x).collect()
}

fn zs(n: usize) -> Vec<VariableId> {
    (1..=n).map(VariableId::z).collect()
}

/// The alternant with entry `(i, j) = 1 / (x_j - z_i)`.
pub fn cauchy_alternant(n: usize) -> RatMatrix {
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    RationalFunction::reciprocal_of(Polynomial::difference(
                        VariableId::x(j),
                        VariableId::z(i),
                    ))
                    .expect("x_j - z_i is nonzero")
                })
                .collect()
        })
        .collect();
    RatMatrix::new(rows).expect("square by construction")
}

/// `prod_{i<j} (z_i - z_j)(x_j - x_i)`.
pub fn cauchy_numerator(n: usize) -> Polynomial {
    let mut reversed_z = zs(n);
    reversed_z.reverse();
    // prod_{i<j} (z_i - z_j) is the Vandermonde of the reversed sequence
    &vandermonde_product(&reversed_z) * &vandermonde_product(&xs(n))
}

/// Closed form `prod_{i<j}(z_i - z_j)(x_j - x_i) / prod_{i,j}(x_j - z_i)`.
pub fn cauchy_closed_form(n: usize) -> RationalFunction {
    let mut den = Polynomial::one();
    for i in 1..=n {
        for j in 1..=n {
            den = &den * &Polynomial::difference(VariableId::x(j), VariableId::z(i));
        }
    }
    RationalFunction::new(cauchy_numerator(n), den).expect("nonzero denominator")
}

/// The alternant with row `i` multiplied by `prod_k (x_k - z_i)`, so entry
/// `(i, j)` becomes `prod_{k != j} (x_k - z_i)`.
pub fn cauchy_row_scaled(n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |i, j| {
        let factors: Vec<Polynomial> = (1..=n)
            .filter(|&k| k != j + 1)
            .map(|k| Polynomial::difference(VariableId::x(k), VariableId::z(i + 1)))
            .collect();
        Polynomial::product(factors.iter())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rf_equal;
    use crate::poly_linalg::{det_bareiss, det_cofactor, det_rational};

    fn z(i: usize) -> Polynomial {
        Polynomial::var(VariableId::z(i))
    }
    fn x(i: usize) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }

    #[test]
    fn small_vandermondes() {
        assert!(vandermonde_product(&[]).is_one());
        assert!(vandermonde_product(&[VariableId::x(1)]).is_one());
        assert_eq!(vandermonde_product(&xs(2)), &x(2) - &x(1));
        let expected = Polynomial::product([&(&x(2) - &x(1)), &(&x(3) - &x(1)), &(&x(3) - &x(2))]);
        assert_eq!(vandermonde_product(&xs(3)), expected);
    }

    #[test]
    fn vandermonde_matrix_determinant() {
        // row i = (1, z_i, z_i^2)
        let m = PolyMatrix::from_fn(3, |i, j| z(i + 1).pow(j as u32));
        let expected = Polynomial::product([&(&z(2) - &z(1)), &(&z(3) - &z(1)), &(&z(3) - &z(2))]);
        assert_eq!(det_cofactor(&m), expected);
        assert_eq!(det_bareiss(&m).unwrap(), expected);
    }

    #[test]
    fn alternant_small_cases() {
        let one = cauchy_closed_form(1);
        assert!(one.numerator().is_one());
        assert_eq!(one.denominator(), &(&x(1) - &z(1)));
        assert!(rf_equal(&det_rational(&cauchy_alternant(1)), &one));

        let two = cauchy_closed_form(2);
        let num = &(&z(1) - &z(2)) * &(&x(2) - &x(1));
        assert_eq!(two.numerator(), &num);
        let den = Polynomial::product([
            &(&x(1) - &z(1)),
            &(&x(2) - &z(1)),
            &(&x(1) - &z(2)),
            &(&x(2) - &z(2)),
        ]);
        assert_eq!(two.denominator(), &den);
        assert!(rf_equal(&det_rational(&cauchy_alternant(2)), &two));
    }

    #[test]
    fn diagonal_rational_matrix() {
        let d = |p: Polynomial| RationalFunction::reciprocal_of(p).unwrap();
        let m = RatMatrix::new(vec![
            vec![d(z(1)), RationalFunction::zero()],
            vec![RationalFunction::zero(), d(&z(2) + &x(1))],
        ])
        .unwrap();
        let expected = d(&z(1) * &(&z(2) + &x(1)));
        assert!(rf_equal(&det_rational(&m), &expected));
    }

    #[test]
    fn row_scaled_matches_numerator() {
        for n in 1..=3 {
            assert_eq!(det_cofactor(&cauchy_row_scaled(n)), cauchy_numerator(n), "n = {n}");
        }
    }
}
