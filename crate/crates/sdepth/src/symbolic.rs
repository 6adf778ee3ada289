//! Primary decomposition of squarefree monomial ideals and symbolic powers.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

/// Exhaustive subset search is capped at this many distinct support
/// variables.
const MAX_SUPPORT_VARS: usize = 22;

/// A monomial prime: the ideal generated by the variables in `support`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    support: VarSet,
}

impl PrimeIdeal {
    pub fn new(support: VarSet) -> Self {
        assert!(!support.is_empty(), "prime ideal needs nonempty support");
        PrimeIdeal { support }
    }

    pub fn support(&self) -> &VarSet {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn as_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            n,
            self.support.iter().map(|v| Monomial::variable(v, n)).collect(),
        )
    }

    /// Membership in p^k without materializing generators: the degree
    /// sum over the support must reach k.
    pub fn power_contains(&self, u: &Monomial, k: u32) -> bool {
        u.degree_on(&self.support) >= k as u64
    }

    /// Minimal generators of p^k: all monomials of total degree k
    /// supported on p's variables (weak compositions of k).
    pub fn power_ideal(&self, n: usize, k: u32) -> MonomialIdeal {
        assert!(k >= 1, "prime power requires k >= 1");
        let vars: Vec<usize> = self.support.iter().collect();
        let mut gens = Vec::new();
        let mut current = vec![0u32; n];
        compositions(&vars, k, 0, &mut current, &mut gens);
        MonomialIdeal::new(n, gens)
    }
}

fn compositions(vars: &[usize], remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if pos == vars.len() - 1 {
        current[vars[pos]] = remaining;
        out.push(Monomial::new(current.clone()));
        current[vars[pos]] = 0;
        return;
    }
    for e in 0..=remaining {
        current[vars[pos]] = e;
        compositions(vars, remaining - e, pos + 1, current, out);
    }
    current[vars[pos]] = 0;
}

/// The irredundant primary decomposition of a squarefree monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    primes: Vec<PrimeIdeal>,
    source: MonomialIdeal,
}

impl PrimaryDecomposition {
    pub fn primes(&self) -> &[PrimeIdeal] {
        &self.primes
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    /// JSON list of 1-based variable-index lists.
    pub fn to_json(&self) -> String {
        let lists: Vec<Vec<usize>> = self
            .primes
            .iter()
            .map(|p| p.support().iter().map(|v| v + 1).collect())
            .collect();
        serde_json::to_string(&lists).expect("serialization cannot fail")
    }
}

/// Minimal primes of a squarefree proper nonzero ideal: the
/// inclusion-minimal variable subsets meeting every generator support
/// (minimal transversals of the support hypergraph).
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let supports: Vec<VarSet> = ideal.generators().iter().map(Monomial::support).collect();
    let union: VarSet = VarSet::new(supports.iter().flat_map(|s| s.iter()).collect());
    let vars: Vec<usize> = union.iter().collect();
    if vars.len() > MAX_SUPPORT_VARS {
        return Err(Error::TooManyVariables(vars.len(), MAX_SUPPORT_VARS));
    }
    let support_masks: Vec<u32> = supports
        .iter()
        .map(|s| {
            vars.iter()
                .enumerate()
                .filter(|(_, v)| s.contains(**v))
                .fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .collect();

    let mut transversals: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << vars.len()) {
        if support_masks.iter().all(|s| s & mask != 0) {
            transversals.push(mask);
        }
    }
    let mut primes: Vec<PrimeIdeal> = transversals
        .iter()
        .filter(|&&t| {
            !transversals
                .iter()
                .any(|&o| o != t && o & t == o)
        })
        .map(|&t| {
            PrimeIdeal::new(VarSet::new(
                vars.iter()
                    .enumerate()
                    .filter(|(i, _)| t & (1 << i) != 0)
                    .map(|(_, v)| *v)
                    .collect(),
            ))
        })
        .collect();
    primes.sort();
    Ok(PrimaryDecomposition { primes, source: ideal.clone() })
}

/// The k-th symbolic power: intersection of the k-th powers of the
/// minimal primes. The unit ideal maps to itself.
pub fn symbolic_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    assert!(k >= 1, "symbolic power requires k >= 1");
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let dec = minimal_primes(ideal)?;
    let n = ideal.num_vars();
    let mut out: Option<MonomialIdeal> = None;
    for p in dec.primes() {
        let pk = p.power_ideal(n, k);
        out = Some(match out {
            None => pk,
            Some(acc) => acc.intersect(&pk),
        });
    }
    Ok(out.expect("proper ideal has at least one minimal prime"))
}

/// Membership in the k-th symbolic power by the degree-sum criterion,
/// checked against every minimal prime simultaneously.
pub fn symbolic_power_contains(dec: &PrimaryDecomposition, u: &Monomial, k: u32) -> bool {
    dec.primes().iter().all(|p| p.power_contains(u, k))
}

/// Height (minimum prime support size) and whether all minimal primes
/// share that size.
pub fn height_unmixed(ideal: &MonomialIdeal) -> Result<(usize, bool)> {
    let dec = minimal_primes(ideal)?;
    let sizes: Vec<usize> = dec.primes().iter().map(PrimeIdeal::height).collect();
    let d = *sizes.iter().min().expect("at least one minimal prime");
    Ok((d, sizes.iter().all(|&s| s == d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    fn primes_of(i: &MonomialIdeal) -> Vec<Vec<usize>> {
        minimal_primes(i)
            .unwrap()
            .primes()
            .iter()
            .map(|p| p.support().iter().collect())
            .collect()
    }

    #[test]
    fn minimal_primes_small() {
        assert_eq!(primes_of(&ideal(2, &[&[1, 0]])), vec![vec![0]]);
        assert_eq!(primes_of(&ideal(2, &[&[1, 1]])), vec![vec![0], vec![1]]);
        // triangle cover ideal: all three edge primes
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(
            primes_of(&j),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
    }

    #[test]
    fn minimal_primes_intersection_recovers_ideal_and_is_irredundant() {
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let dec = minimal_primes(&j).unwrap();
        let n = j.num_vars();
        let full = dec
            .primes()
            .iter()
            .fold(MonomialIdeal::unit(n), |acc, p| acc.intersect(&p.as_ideal(n)));
        assert_eq!(full, j);
        for skip in 0..dec.primes().len() {
            let partial = dec
                .primes()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .fold(MonomialIdeal::unit(n), |acc, (_, p)| acc.intersect(&p.as_ideal(n)));
            assert_ne!(partial, j, "prime {skip} is redundant");
        }
    }

    #[test]
    fn minimal_primes_rejects_bad_input() {
        assert!(matches!(minimal_primes(&ideal(2, &[&[2, 0]])), Err(Error::NotSquarefree)));
        assert!(matches!(minimal_primes(&MonomialIdeal::zero(2)), Err(Error::ImproperIdeal)));
        assert!(matches!(minimal_primes(&MonomialIdeal::unit(2)), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn prime_powers() {
        let p = PrimeIdeal::new(VarSet::new(vec![0, 1]));
        assert_eq!(
            p.power_ideal(2, 2),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        let q = PrimeIdeal::new(VarSet::new(vec![0]));
        assert_eq!(q.power_ideal(1, 3), ideal(1, &[&[3]]));
        assert!(p.power_contains(&Monomial::new(vec![1, 1, 0]), 2));
        assert!(!p.power_contains(&Monomial::new(vec![1, 0, 5]), 2));
    }

    #[test]
    fn symbolic_power_identity_and_principal() {
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(symbolic_power(&j, 1).unwrap(), j);
        let p = ideal(2, &[&[1, 1]]);
        assert_eq!(symbolic_power(&p, 3).unwrap(), ideal(2, &[&[3, 3]]));
        let unit = MonomialIdeal::unit(2);
        assert_eq!(symbolic_power(&unit, 4).unwrap(), unit);
    }

    #[test]
    fn symbolic_vs_ordinary_power_of_triangle() {
        // x1*x2*x3 lies in J^(2) but not in J^2
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let s2 = symbolic_power(&j, 2).unwrap();
        let o2 = j.power(2);
        let u = Monomial::new(vec![1, 1, 1]);
        assert!(s2.contains(&u));
        assert!(!o2.contains(&u));
        assert!(s2.contains_ideal(&o2));
    }

    #[test]
    fn height_and_unmixedness() {
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(height_unmixed(&j).unwrap(), (2, true));
        assert_eq!(height_unmixed(&ideal(2, &[&[1, 0]])).unwrap(), (1, true));
        // (x1) ∩ <x2,x3> = (x1x2, x1x3): primes of sizes 1 and 2
        let mixed = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(height_unmixed(&mixed).unwrap(), (1, false));
    }

    #[test]
    fn is_squarefree_cases() {
        assert!(ideal(3, &[&[1, 1, 0], &[0, 1, 1]]).is_squarefree());
        assert!(!ideal(1, &[&[2]]).is_squarefree());
        assert!(MonomialIdeal::zero(2).is_squarefree());
    }
}
