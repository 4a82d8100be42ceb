use std::fmt;

use super::EngineError;
use crate::exact_poly::Polynomial;

/// Parameters `(a_1..a_n; b)` of one multi-integral instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdentityInstance {
    a: Vec<u32>,
    b: u32,
}

impl IdentityInstance {
    pub fn new(a: Vec<u32>, b: u32) -> Result<Self, EngineError> {
        if a.is_empty() {
            return Err(EngineError::InvalidInstance(
                "the exponent vector must have at least one entry".into(),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// `a_1 + a_3 + a_5 + ...` (1-based odd positions).
    pub fn abar(&self) -> u32 {
        self.a.iter().step_by(2).sum()
    }

    pub fn a_sum(&self) -> u32 {
        self.a.iter().sum()
    }

    pub fn with_b(&self, b: u32) -> Self {
        Self {
            a: self.a.clone(),
            b,
        }
    }

    /// The instance with `a_i` raised by one (`i` is 1-based).
    pub fn bumped(&self, i: usize) -> Self {
        let mut a = self.a.clone();
        a[i - 1] += 1;
        Self { a, b: self.b }
    }
}

impl fmt::Display for IdentityInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|e| e.to_string()).collect();
        write!(f, "n={} a=({}) b={}", self.n(), a.join(","), self.b)
    }
}

/// Candidate alternating-sign conventions for summations over `i = 1..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignRule {
    /// `(-1)^i`
    PowI,
    /// `(-1)^(i+1)`
    PowIPlusOne,
    /// `(-1)^(n-i)`
    PowNMinusI,
}

impl SignRule {
    pub const ALL: [SignRule; 3] = [SignRule::PowI, SignRule::PowIPlusOne, SignRule::PowNMinusI];

    /// The sign at 1-based index `i` in a sum of length `n`.
    pub fn sign(self, i: usize, n: usize) -> i64 {
        let e = match self {
            SignRule::PowI => i,
            SignRule::PowIPlusOne => i + 1,
            SignRule::PowNMinusI => n - i,
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SignRule::PowI => "(-1)^i",
            SignRule::PowIPlusOne => "(-1)^(i+1)",
            SignRule::PowNMinusI => "(-1)^(n-i)",
        }
    }

    /// Short form used on the command line: `i`, `i+1`, `n-i`.
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "i" | "(-1)^i" => Some(SignRule::PowI),
            "i+1" | "(-1)^(i+1)" => Some(SignRule::PowIPlusOne),
            "n-i" | "(-1)^(n-i)" => Some(SignRule::PowNMinusI),
            _ => None,
        }
    }
}

impl fmt::Display for SignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Cap on the number of terms of any intermediate polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_terms: usize,
}

impl Budget {
    pub const DEFAULT_MAX_TERMS: usize = 4_000_000;

    pub fn new(max_terms: usize) -> Self {
        Self { max_terms }
    }

    pub fn unlimited() -> Self {
        Self {
            max_terms: usize::MAX,
        }
    }

    pub fn check(&self, p: &Polynomial) -> Result<(), EngineError> {
        if p.len() > self.max_terms {
            Err(EngineError::BudgetExceeded {
                terms: p.len(),
                limit: self.max_terms,
            })
        } else {
            Ok(())
        }
    }

    /// Checks `p` and passes it through.
    pub fn admit(&self, p: Polynomial) -> Result<Polynomial, EngineError> {
        self.check(&p)?;
        Ok(p)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX_TERMS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abar_sums_odd_positions() {
        let inst = IdentityInstance::new(vec![1, 2, 3, 4, 5], 0).unwrap();
        assert_eq!(inst.abar(), 1 + 3 + 5);
        assert_eq!(IdentityInstance::new(vec![7], 2).unwrap().abar(), 7);
        assert_eq!(IdentityInstance::new(vec![7, 9], 2).unwrap().abar(), 7);
        assert!(IdentityInstance::new(vec![], 0).is_err());
    }

    #[test]
    fn sign_rules() {
        assert_eq!(SignRule::PowI.sign(1, 3), -1);
        assert_eq!(SignRule::PowIPlusOne.sign(1, 3), 1);
        assert_eq!(SignRule::PowNMinusI.sign(1, 2), -1);
        assert_eq!(SignRule::PowNMinusI.sign(2, 2), 1);
        for rule in SignRule::ALL {
            assert_eq!(SignRule::parse(rule.label()), Some(rule));
        }
        assert_eq!(SignRule::parse("n-i"), Some(SignRule::PowNMinusI));
        assert_eq!(SignRule::parse("2i"), None);
    }
}
