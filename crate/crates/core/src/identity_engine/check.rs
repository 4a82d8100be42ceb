use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::EngineError;
use crate::exact_poly::{Assignment, ExactRational, PolyError, Polynomial, VariableId};

/// Symbolic comparison, or comparison at random exact rational points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Symbolic,
    /// `points: None` picks `max(10, degree + 1)` points per check.
    Evaluate { points: Option<usize>, seed: u64 },
}

impl CheckMode {
    pub fn evaluate(points: usize, seed: u64) -> Self {
        CheckMode::Evaluate {
            points: Some(points),
            seed,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CheckMode::Symbolic => "symbolic",
            CheckMode::Evaluate { .. } => "evaluate",
        }
    }

    pub fn points(&self) -> Option<usize> {
        match self {
            CheckMode::Symbolic => None,
            CheckMode::Evaluate { points, .. } => *points,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Evidence that an identity does not hold.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// The nonzero difference of the two sides.
    Difference(Polynomial),
    /// A point where the two sides take different values.
    Point {
        assignment: Vec<(VariableId, ExactRational)>,
        lhs: ExactRational,
        rhs: ExactRational,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub check: String,
    pub n: usize,
    pub a: Vec<u32>,
    pub b: Option<u32>,
    /// The mode actually used; for Evaluate the resolved point count.
    pub mode: CheckMode,
    pub status: Status,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Identifying data of a check, shared by every outcome it produces.
#[derive(Clone, Debug)]
pub(crate) struct CheckMeta {
    pub check: String,
    pub n: usize,
    pub a: Vec<u32>,
    pub b: Option<u32>,
}

impl CheckMeta {
    pub fn new(check: impl Into<String>, a: &[u32], b: Option<u32>) -> Self {
        Self {
            check: check.into(),
            n: a.len(),
            a: a.to_vec(),
            b,
        }
    }

    /// Deterministic per-check seed derived from the master seed.
    pub fn seed(&self, master: u64) -> u64 {
        let mut h = Sha256::new();
        h.update(master.to_le_bytes());
        h.update(self.check.as_bytes());
        h.update([0u8]);
        h.update((self.n as u64).to_le_bytes());
        for &e in &self.a {
            h.update(e.to_le_bytes());
        }
        h.update(self.b.map_or(u64::MAX, u64::from).to_le_bytes());
        let digest = h.finalize();
        u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
    }

    /// Runs `body` and turns its verdict into an outcome. A budget overrun
    /// becomes `Skipped`; any other error is returned.
    pub fn run(
        &self,
        mode: CheckMode,
        body: impl FnOnce() -> Result<(CheckMode, Option<Witness>), EngineError>,
    ) -> Result<CheckOutcome, EngineError> {
        let start = Instant::now();
        let result = body();
        let elapsed = start.elapsed();
        let (mode, status, witness, reason) = match result {
            Ok((mode, None)) => (mode, Status::Pass, None, None),
            Ok((mode, Some(w))) => (mode, Status::Fail, Some(w), None),
            Err(e @ EngineError::BudgetExceeded { .. }) => {
                (mode, Status::Skipped, None, Some(e.to_string()))
            }
            Err(e) => return Err(e),
        };
        Ok(CheckOutcome {
            check: self.check.clone(),
            n: self.n,
            a: self.a.clone(),
            b: self.b,
            mode,
            status,
            witness,
            reason,
            elapsed,
        })
    }
}

/// `None` when `lhs == rhs`, otherwise the difference as a witness.
pub(crate) fn compare(lhs: &Polynomial, rhs: &Polynomial) -> Option<Witness> {
    let diff = lhs - rhs;
    if diff.is_zero() {
        None
    } else {
        Some(Witness::Difference(diff))
    }
}

/// Draws distinct nonzero rationals `p/q` with `|p| <= 50`, `1 <= q <= 10`.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self, vars: &[VariableId]) -> Assignment {
        let mut point = Assignment::new();
        let mut used: Vec<ExactRational> = Vec::with_capacity(vars.len());
        for &v in vars {
            let value = loop {
                let mut num: i64 = self.rng.gen_range(-50..=49);
                if num >= 0 {
                    num += 1;
                }
                let den: i64 = self.rng.gen_range(1..=10);
                let r = ExactRational::new(BigInt::from(num), BigInt::from(den));
                if !used.contains(&r) {
                    break r;
                }
            };
            used.push(value.clone());
            point.insert(v, value);
        }
        point
    }
}

/// Default number of evaluation points for an identity of total degree `d`.
pub fn default_points(degree: u32) -> usize {
    10usize.max(degree as usize + 1)
}

const MAX_RESAMPLES: usize = 1000;

/// Compares two evaluators at `points` random points. A point where some
/// denominator vanishes is discarded and redrawn.
pub(crate) fn pointwise(
    seed: u64,
    vars: &[VariableId],
    points: usize,
    mut lhs: impl FnMut(&Assignment) -> Result<ExactRational, EngineError>,
    mut rhs: impl FnMut(&Assignment) -> Result<ExactRational, EngineError>,
) -> Result<Option<Witness>, EngineError> {
    let mut sampler = PointSampler::new(seed);
    let mut done = 0;
    let mut rejected = 0;
    while done < points {
        let point = sampler.sample(vars);
        let values = lhs(&point).and_then(|l| rhs(&point).map(|r| (l, r)));
        let (l, r) = match values {
            Ok(v) => v,
            Err(EngineError::Poly(PolyError::DenominatorVanishes)) => {
                rejected += 1;
                if rejected > MAX_RESAMPLES {
                    return Err(EngineError::Poly(PolyError::DenominatorVanishes));
                }
                continue;
            }
            Err(e) => return Err(e),
        };
        if l != r {
            return Ok(Some(Witness::Point {
                assignment: point.into_iter().collect(),
                lhs: l,
                rhs: r,
            }));
        }
        done += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn sampler_draws_distinct_nonzero_small_rationals() {
        let vars: Vec<VariableId> = (1..=8).map(VariableId::z).collect();
        let mut s = PointSampler::new(7);
        for _ in 0..200 {
            let p = s.sample(&vars);
            let values: Vec<&ExactRational> = p.values().collect();
            for (k, v) in values.iter().enumerate() {
                assert!(!v.is_zero());
                assert!(v.denom() <= &BigInt::from(10));
                assert!(v.numer() <= &BigInt::from(50) && v.numer() >= &BigInt::from(-50));
                assert!(!values[..k].contains(v));
            }
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let vars = [VariableId::z(1), VariableId::z(2)];
        assert_eq!(PointSampler::new(3).sample(&vars), PointSampler::new(3).sample(&vars));
    }

    #[test]
    fn per_check_seed_depends_on_identity() {
        let a = CheckMeta::new("theorem-a", &[1, 2], Some(0));
        let b = CheckMeta::new("theorem-a", &[1, 2], Some(1));
        assert_eq!(a.seed(5), a.seed(5));
        assert_ne!(a.seed(5), b.seed(5));
        assert_ne!(a.seed(5), a.seed(6));
    }

    #[test]
    fn budget_overrun_is_skipped() {
        let meta = CheckMeta::new("x", &[1], None);
        let out = meta
            .run(CheckMode::Symbolic, || {
                Err(EngineError::BudgetExceeded { terms: 11, limit: 10 })
            })
            .unwrap();
        assert_eq!(out.status, Status::Skipped);
        assert!(out.witness.is_none());
        assert!(out.reason.unwrap().contains("11"));
    }

    #[test]
    fn default_point_count() {
        assert_eq!(default_points(3), 10);
        assert_eq!(default_points(30), 31);
    }
}
