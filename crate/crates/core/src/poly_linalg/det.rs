use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exact_poly::{ExactRational, Polynomial, RationalFunction};

use super::{LinalgError, PolyMatrix, RatMatrix};

/// The handful of ring operations cofactor expansion needs.
trait Entry: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Entry for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Entry for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Laplace expansion along the first remaining row. Minors are memoized
/// by the set of remaining columns, since the row set is determined by it.
fn cofactor<T: Entry>(n: usize, get: &impl Fn(usize, usize) -> T) -> T {
    fn go<T: Entry>(
        n: usize,
        cols: u32,
        get: &impl Fn(usize, usize) -> T,
        memo: &mut HashMap<u32, T>,
    ) -> T {
        let remaining = cols.count_ones() as usize;
        let row = n - remaining;
        if remaining == 1 {
            return get(row, cols.trailing_zeros() as usize);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = T::zero();
        for (pos, col) in (0..n).filter(|c| cols & (1 << c) != 0).enumerate() {
            let entry = get(row, col);
            if entry.is_zero() {
                continue;
            }
            let minor = go(n, cols & !(1 << col), get, memo);
            let term = entry.mul(&minor);
            acc = if pos % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        memo.insert(cols, acc.clone());
        acc
    }
    assert!(n >= 1 && n < 32);
    let mut memo = HashMap::new();
    go(n, (1u32 << n) - 1, get, &mut memo)
}

/// Determinant by recursive cofactor expansion along the first row.
pub fn det_cofactor(m: &PolyMatrix) -> Polynomial {
    cofactor(m.dim(), &|i, j| m.get(i, j).clone())
}

/// Cofactor determinant over rational functions; the result is unreduced.
pub fn det_rational(m: &RatMatrix) -> RationalFunction {
    cofactor(m.dim(), &|i, j| m.get(i, j).clone())
}

/// Fraction-free (Bareiss) elimination. Every division is exact; a zero
/// pivot is replaced by a lower row with a nonzero entry (flipping the
/// sign), and if none exists the determinant is zero.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    let n = m.dim();
    let mut a: Vec<Vec<Polynomial>> = m.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = cross
                    .exact_div(&prev)
                    .map_err(|_| LinalgError::ExactDivisionFailed(k))?;
            }
            a[i][k] = Polynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn det_exact(rows: &[Vec<ExactRational>]) -> ExactRational {
    let n = rows.len();
    let mut a: Vec<Vec<ExactRational>> = rows.to_vec();
    let mut det = ExactRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return ExactRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational::integer;
    use crate::exact_poly::VariableId;

    fn z(i: usize) -> Polynomial {
        Polynomial::var(VariableId::z(i))
    }

    #[test]
    fn identity_determinants() {
        assert!(det_cofactor(&PolyMatrix::identity(3)).is_one());
        assert!(det_bareiss(&PolyMatrix::identity(4)).unwrap().is_one());
    }

    #[test]
    fn two_by_two() {
        let m = PolyMatrix::new(vec![vec![z(1), z(2)], vec![z(3), z(4)]]).unwrap();
        let expected = &(&z(1) * &z(4)) - &(&z(2) * &z(3));
        assert_eq!(det_cofactor(&m), expected);
        assert_eq!(det_bareiss(&m).unwrap(), expected);
    }

    #[test]
    fn singular_and_pivoting() {
        let row = vec![z(1), &z(2) + &z(1), Polynomial::integer(3)];
        let m = PolyMatrix::new(vec![row.clone(), vec![z(3), z(4), z(1)], row]).unwrap();
        assert!(det_cofactor(&m).is_zero());
        assert!(det_bareiss(&m).unwrap().is_zero());
        // zero leading pivot forces a row swap
        let m = PolyMatrix::new(vec![
            vec![Polynomial::zero(), z(1), z(2)],
            vec![z(3), Polynomial::zero(), z(1)],
            vec![z(2), z(4), Polynomial::one()],
        ])
        .unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m));
        // an all-zero column below the pivot
        let m = PolyMatrix::new(vec![
            vec![Polynomial::zero(), z(1)],
            vec![Polynomial::zero(), z(2)],
        ])
        .unwrap();
        assert!(det_bareiss(&m).unwrap().is_zero());
    }

    #[test]
    fn exact_gaussian() {
        let rows = vec![
            vec![integer(0), integer(2), integer(1)],
            vec![integer(1), integer(1), integer(1)],
            vec![integer(2), integer(0), integer(5)],
        ];
        // 0*(5-0) - 2*(5-2) + 1*(0-2) = -8
        assert_eq!(det_exact(&rows), integer(-8));
    }

    #[test]
    fn not_square_rejected() {
        let err = PolyMatrix::new(vec![vec![z(1), z(2)], vec![z(3)]]).unwrap_err();
        assert_eq!(err, LinalgError::NotSquare { row: 1, len: 1, n: 2 });
        assert_eq!(PolyMatrix::new(vec![]).unwrap_err(), LinalgError::Empty);
    }
}
