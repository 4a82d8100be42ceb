use crate::exact_poly::{Assignment, ExactRational, PolyError, Polynomial, RationalFunction};

use super::LinalgError;

fn check_square<T>(rows: &[Vec<T>]) -> Result<usize, LinalgError> {
    let n = rows.len();
    if n == 0 {
        return Err(LinalgError::Empty);
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(LinalgError::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
    }
    Ok(n)
}

/// Square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self, LinalgError> {
        let n = check_square(&rows)?;
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Polynomial]> {
        self.entries.chunks(self.n)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| {
            let parts: Vec<Polynomial> = (0..self.n)
                .map(|k| self.get(i, k) * other.get(k, j))
                .collect();
            Polynomial::sum(parts.iter())
        })
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<Vec<Vec<ExactRational>>, PolyError> {
        self.rows()
            .map(|row| row.iter().map(|p| p.evaluate(point)).collect())
            .collect()
    }
}

/// Square matrix of rational functions with nonzero denominators.
#[derive(Clone, Debug)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<RationalFunction>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<RationalFunction>>) -> Result<Self, LinalgError> {
        let n = check_square(&rows)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.denominator().is_zero() {
                    return Err(LinalgError::ZeroDenominator(i, j));
                }
            }
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.n + j]
    }
}
