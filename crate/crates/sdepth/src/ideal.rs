//! Monomial ideals as canonical antichains of minimal generators.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Ring};
use serde::{Deserialize, Serialize};

/// A monomial ideal, stored by its unique minimal monomial generators.
///
/// Canonical form: generators form an antichain under divisibility and
/// are sorted lexicographically, so `==` is ideal equality. The empty
/// generator set is the zero ideal; the set `{1}` is the whole ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize and canonicalize an arbitrary generating set.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.num_vars(), n, "generator from a different ring");
        }
        let gens = minimalize(gens);
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper: nonzero and not the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// u is in the ideal iff some generator divides it.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Componentwise max of generator exponents; the all-zero vector for
    /// the zero ideal. This bounds every membership-relevant exponent.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut g = vec![0u32; self.n];
        for gen in &self.gens {
            for (slot, &e) in g.iter_mut().zip(gen.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        g
    }

    /// Minimal generators of the intersection, via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ideals from different rings");
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.n);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ideals from different rings");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// Ordinary power I^k, k >= 1, minimalized after each product.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        assert!(k >= 1, "power requires k >= 1");
        let mut out = self.clone();
        for _ in 1..k {
            out = out.product(self);
        }
        out
    }

    /// Colon ideal (I : v); contains u iff u*v is in I.
    pub fn colon(&self, v: &Monomial) -> MonomialIdeal {
        assert_eq!(self.n, v.num_vars(), "monomial from a different ring");
        let gens = self.gens.iter().map(|g| g.saturating_div(v)).collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// The radical: squarefree parts of generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// The exponent k_I = lcm of the least k_i with u_i^{k_i} in I, over
    /// the minimal generators u_i of the radical. For every monomial u,
    /// u is in the radical iff u^{k_I} is in I.
    pub fn radical_power_exponent(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let rad = self.radical();
        let mut k_ideal: u32 = 1;
        for u in rad.generators() {
            let mut k = 1u32;
            while !self.contains(&u.pow(k)) {
                k += 1;
            }
            k_ideal = lcm_u32(k_ideal, k);
        }
        Ok(k_ideal)
    }

    pub fn format(&self, ring: &Ring) -> String {
        self.gens
            .iter()
            .map(|g| g.format(ring))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// One monomial per line, in the `x1^2*x3` text form.
    pub fn parse(text: &str, ring: &Ring) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            gens.push(Monomial::parse(line, ring)?);
        }
        Ok(MonomialIdeal::new(ring.num_vars(), gens))
    }

    /// Parse either the JSON form (sniffed by the leading brace) or the
    /// line-per-monomial text form with default variable names, taking
    /// the ring size from the largest variable index mentioned.
    pub fn parse_auto(text: &str) -> Result<MonomialIdeal> {
        if text.trim_start().starts_with('{') {
            return MonomialIdeal::from_json(text);
        }
        let mut max_var = 1usize;
        for token in text.split(|c: char| !c.is_ascii_alphanumeric()) {
            if let Some(idx) = token.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                max_var = max_var.max(idx);
            }
        }
        MonomialIdeal::parse(text, &Ring::new(max_var))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&IdealJson {
            n: self.n,
            generators: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        })
        .expect("ideal serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<MonomialIdeal> {
        let raw: IdealJson = serde_json::from_str(text)?;
        if raw.n == 0 {
            return Err(Error::Parse("ring needs at least one variable".into()));
        }
        let mut gens = Vec::with_capacity(raw.generators.len());
        for exps in raw.generators {
            if exps.len() != raw.n {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} in a ring with n = {}",
                    exps.len(),
                    raw.n
                )));
            }
            gens.push(Monomial::new(exps));
        }
        Ok(MonomialIdeal::new(raw.n, gens))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

/// Drop every monomial strictly divisible by another in the set, then
/// sort lexicographically. Idempotent and order-independent.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let keep: Vec<Monomial> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect();
    keep
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd_u32(b, a % b) }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}
