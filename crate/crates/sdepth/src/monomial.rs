//! Monomials over a fixed polynomial ring, as exponent vectors.
//!
//! The coefficient field is never materialized; everything here is
//! combinatorics on nonnegative integer vectors. Exponents are `u32`
//! with checked arithmetic: overflow panics instead of wrapping.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The ambient polynomial ring: a variable count plus display names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    n: usize,
    names: Vec<String>,
}

impl Ring {
    /// Ring with default names `x1, ..., xn`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "ring needs at least one variable");
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Ring { n, names }
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Parse("ring needs at least one variable".into()));
        }
        let mut seen = names.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != names.len() {
            return Err(Error::Parse("variable names must be distinct".into()));
        }
        Ok(Ring { n: names.len(), names })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }
}

/// A sorted, deduplicated set of variable indices (0-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(Vec<usize>);

impl VarSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VarSet(members)
    }

    pub fn empty() -> Self {
        VarSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VarSet((0..n).collect())
    }

    pub fn contains(&self, var: usize) -> bool {
        self.0.binary_search(&var).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset_of(&self, other: &VarSet) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Size of the intersection with another set.
    pub fn intersection_len(&self, other: &VarSet) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }
}

/// A monomial x1^{e1} ... xn^{en}, stored as its exponent vector.
///
/// The derived `Ord` is lexicographic on exponents, which is the
/// canonical ordering used everywhere for determinism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "monomial needs at least one variable");
        Monomial(exponents)
    }

    /// The monomial 1 in an n-variable ring.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable x_{var} (0-based) in an n-variable ring.
    pub fn variable(var: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[var] = 1;
        Monomial(e)
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn support(&self) -> VarSet {
        VarSet::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Exponents clamped to at most one.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    fn check_same_ring(&self, other: &Monomial) {
        assert_eq!(
            self.0.len(),
            other.0.len(),
            "monomials from different rings"
        );
    }

    /// Componentwise `<=`: self divides other.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.check_same_ring(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise min.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Division with clamping at zero; `a.saturating_div(b)` has
    /// exponents max(a_i - b_i, 0). This is the colon-ideal generator map.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Degree sum over a variable subset, as used by the symbolic-power
    /// membership criterion.
    pub fn degree_on(&self, vars: &VarSet) -> u64 {
        vars.iter().map(|v| self.0[v] as u64).sum()
    }

    pub fn format(&self, ring: &Ring) -> String {
        assert_eq!(ring.num_vars(), self.num_vars());
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.name(i).to_string()),
                _ => parts.push(format!("{}^{}", ring.name(i), e)),
            }
        }
        parts.join("*")
    }

    /// Parse the `x1^2*x3` text form. `1` is the unit monomial.
    pub fn parse(text: &str, ring: &Ring) -> Result<Monomial> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if text == "1" {
            return Ok(Monomial::one(ring.num_vars()));
        }
        let mut exps = vec![0u32; ring.num_vars()];
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (name.trim(), e)
                }
                None => (factor, 1),
            };
            let var = ring
                .var_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[var] = exps[var]
                .checked_add(exp)
                .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
        }
        Ok(Monomial(exps))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(&Ring::new(self.num_vars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divides_basic() {
        assert!(m(&[1, 0]).divides(&m(&[1, 1])));
        assert!(!m(&[2, 0]).divides(&m(&[1, 1])));
        assert!(m(&[0, 0]).divides(&m(&[7, 3])));
    }

    #[test]
    fn gcd_lcm_componentwise() {
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 3])), m(&[1, 1]));
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        let u = m(&[4, 0, 2]);
        assert_eq!(u.gcd(&u), u);
    }

    #[test]
    fn parse_format_round_trip() {
        let ring = Ring::new(3);
        for text in ["1", "x1", "x1^2*x3", "x2^5", "x1*x2*x3"] {
            let mono = Monomial::parse(text, &ring).unwrap();
            assert_eq!(mono.format(&ring), text);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        let ring = Ring::new(2);
        assert!(Monomial::parse("x3", &ring).is_err());
        assert!(Monomial::parse("x1^", &ring).is_err());
        assert!(Monomial::parse("", &ring).is_err());
    }

    #[test]
    fn degree_on_subset() {
        let u = m(&[1, 1, 1]);
        assert_eq!(u.degree_on(&VarSet::new(vec![0, 1])), 2);
        assert_eq!(u.degree_on(&VarSet::empty()), 0);
    }
}
