use std::cmp::Ordering;
use std::fmt;

use super::variable::VariableId;

/// A power product of variables, stored as `(variable, exponent)` pairs
/// sorted by variable with no zero exponents. The empty list is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    powers: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self { powers: Vec::new() }
    }

    pub fn var(v: VariableId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VariableId, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self {
            powers: vec![(v, e)],
        }
    }

    /// Builds a monomial from unsorted pairs; repeated variables are combined.
    pub fn from_powers(powers: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut powers: Vec<(VariableId, u32)> =
            powers.into_iter().filter(|&(_, e)| e > 0).collect();
        powers.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VariableId, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Self { powers: merged }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.powers
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> &[(VariableId, u32)] {
        &self.powers
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.powers.iter().map(|&(v, _)| v)
    }

    /// Splits off the power of `v`: returns `(e, m)` with `self = v^e * m`.
    pub fn split(&self, v: VariableId) -> (u32, Monomial) {
        match self.powers.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => {
                let mut rest = self.powers.clone();
                let (_, e) = rest.remove(i);
                (e, Monomial { powers: rest })
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Returns `self * v^e` with the exponent of `v` replaced, not added.
    pub fn with_exponent(&self, v: VariableId, e: u32) -> Monomial {
        let mut powers = self.powers.clone();
        match powers.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) if e == 0 => {
                powers.remove(i);
            }
            Ok(i) => powers[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => powers.insert(i, (v, e)),
        }
        Monomial { powers }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        let b = &other.powers;
        for &(v, e) in &self.powers {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                let d = b[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial { powers: out })
    }
}

/// Graded lexicographic order: higher total degree is greater; ties are
/// broken by comparing exponents in increasing variable order, where the
/// larger exponent on the first differing variable is greater.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&(va, ea), &(vb, eb)) in self.powers.iter().zip(other.powers.iter()) {
            match va.cmp(&vb) {
                // `self` has a positive exponent on `va` where `other` has 0.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.powers.len().cmp(&other.powers.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(VariableId, u32)]) -> Monomial {
        Monomial::from_powers(p.iter().copied())
    }

    #[test]
    fn grlex_order() {
        let x1 = VariableId::x(1);
        let x2 = VariableId::x(2);
        let a = m(&[(x1, 2)]);
        let b = m(&[(x1, 1), (x2, 1)]);
        let c = m(&[(x2, 2)]);
        let d = m(&[(x1, 1)]);
        assert!(a > b && b > c && c > d && d > Monomial::one());
        // equal degree, x1 outranks z1
        assert!(m(&[(x1, 1)]) > m(&[(VariableId::z(1), 1)]));
    }

    #[test]
    fn mul_div() {
        let x1 = VariableId::x(1);
        let z1 = VariableId::z(1);
        let a = m(&[(x1, 2), (z1, 1)]);
        let b = m(&[(z1, 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab, m(&[(x1, 2), (z1, 4)]));
        assert_eq!(ab.div(&b), Some(a.clone()));
        assert_eq!(b.div(&a), None);
        assert_eq!(ab.degree(), 6);
        assert_eq!(ab.split(x1), (2, m(&[(z1, 4)])));
    }

    #[test]
    fn from_powers_merges() {
        let x1 = VariableId::x(1);
        assert_eq!(m(&[(x1, 1), (x1, 2), (VariableId::w(), 0)]), m(&[(x1, 3)]));
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(m(&[(VariableId::z(2), 1), (x1, 3)]).to_string(), "x1^3*z2");
    }
}
