//! Constructive transfer of Stanley decompositions along a monomial map.
//!
//! Given nested pairs (I1, I2) and (J1, J2) and a map phi with
//! u in I1 iff phi(u) in J1, u in I2 iff phi(u) in J2, and space
//! membership preserved in both directions, a Stanley decomposition of
//! J1/J2 is rebuilt into one of I1/I2 of at least the same depth:
//! monomials of I1\I2 are grouped by the unique source space containing
//! their image, and each group is re-rooted at its gcd.

use crate::decomposition::{next_in_box, QuotientPair, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::symbolic::symbolic_power;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Box doublings attempted before giving up on root stabilization.
const MAX_BOX_GROWTH: u32 = 3;

/// The closed catalog of monomial maps. Space-membership preservation
/// holds by construction for every member: powers scale divisibility
/// and support growth, multiplications translate them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiMap {
    /// u maps to u^k.
    Power(u32),
    /// u maps to v*u.
    Multiply(Monomial),
    Identity,
}

impl PhiMap {
    pub fn apply(&self, u: &Monomial) -> Monomial {
        match self {
            PhiMap::Power(k) => u.pow(*k),
            PhiMap::Multiply(v) => v.mul(u),
            PhiMap::Identity => u.clone(),
        }
    }

    /// Map a bound on image exponents back to a bound on preimages.
    fn pull_back_bound(&self, bound: &[u32]) -> Vec<u32> {
        match self {
            PhiMap::Power(k) => bound.iter().map(|b| b.div_ceil(*k)).collect(),
            PhiMap::Multiply(v) => bound
                .iter()
                .zip(v.exponents())
                .map(|(b, e)| b.saturating_sub(*e))
                .collect(),
            PhiMap::Identity => bound.to_vec(),
        }
    }
}

/// Pair shape for symbolic-power instances: the ideal itself or the
/// quotient ring by it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceMode {
    Ideal,
    Quotient,
}

/// A checked transfer problem: the decomposition of `source` is known,
/// the decomposition of `target` is wanted, and `phi` maps target-side
/// monomials to source-side monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferInstance {
    source: QuotientPair,
    target: QuotientPair,
    phi: PhiMap,
}

impl TransferInstance {
    /// Build an instance and check the membership-equivalence conditions
    /// on the working box. For catalog maps the box check is complete.
    pub fn new(source: QuotientPair, target: QuotientPair, phi: PhiMap) -> Result<Self> {
        assert_eq!(source.num_vars(), target.num_vars(), "pairs from different rings");
        let inst = TransferInstance { source, target, phi };
        inst.check_conditions()?;
        Ok(inst)
    }

    pub fn source(&self) -> &QuotientPair {
        &self.source
    }

    pub fn target(&self) -> &QuotientPair {
        &self.target
    }

    pub fn phi(&self) -> &PhiMap {
        &self.phi
    }

    fn working_bound(&self) -> Vec<u32> {
        let mut source_bound = self.source.numerator().max_exponents();
        for (slot, e) in source_bound.iter_mut().zip(self.source.denominator().max_exponents()) {
            *slot = (*slot).max(e);
        }
        let pulled = self.phi.pull_back_bound(&source_bound);
        let mut bound = self.target.numerator().max_exponents();
        for (slot, e) in bound.iter_mut().zip(self.target.denominator().max_exponents()) {
            *slot = (*slot).max(e);
        }
        for (slot, e) in bound.iter_mut().zip(pulled) {
            *slot = (*slot).max(e);
        }
        for slot in bound.iter_mut() {
            *slot += 1;
        }
        bound
    }

    fn check_conditions(&self) -> Result<()> {
        let bound = self.working_bound();
        let mut exps = vec![0u32; bound.len()];
        loop {
            let u = Monomial::new(exps.clone());
            let image = self.phi.apply(&u);
            let ok1 = self.target.numerator().contains(&u) == self.source.numerator().contains(&image);
            let ok2 =
                self.target.denominator().contains(&u) == self.source.denominator().contains(&image);
            if !ok1 || !ok2 {
                return Err(Error::ConditionViolated { monomial: u.to_string() });
            }
            if !next_in_box(&mut exps, &bound) {
                return Ok(());
            }
        }
    }

    /// Symbolic-power instance: source I^(ks) side, target I^(s) side,
    /// phi the k-th power map. The degree-sum membership criterion
    /// scales linearly under powers, so the conditions hold.
    pub fn symbolic(ideal: &MonomialIdeal, s: u32, k: u32, mode: InstanceMode) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let low = symbolic_power(ideal, s)?;
        let high = symbolic_power(ideal, k.checked_mul(s).expect("exponent overflow"))?;
        let (source, target) = match mode {
            InstanceMode::Ideal => (QuotientPair::of_ideal(high), QuotientPair::of_ideal(low)),
            InstanceMode::Quotient => (
                QuotientPair::of_quotient_ring(high),
                QuotientPair::of_quotient_ring(low),
            ),
        };
        TransferInstance::new(source, target, PhiMap::Power(k))
    }

    /// Colon instance: source (I, J), target ((I:v), (J:v)), phi
    /// multiplication by v.
    pub fn colon(ideal: &MonomialIdeal, sub: &MonomialIdeal, v: &Monomial) -> Result<Self> {
        let source = QuotientPair::new(ideal.clone(), sub.clone())?;
        let target = QuotientPair::new(ideal.colon(v), sub.colon(v))?;
        TransferInstance::new(source, target, PhiMap::Multiply(v.clone()))
    }

    /// Radical instance: source (I, J), target (rad I, rad J), phi the
    /// k-th power map with k = lcm of the radical exponents. The zero
    /// ideal is accepted on the J side with exponent 1.
    pub fn radical(ideal: &MonomialIdeal, sub: &MonomialIdeal) -> Result<Self> {
        let k_i = ideal.radical_power_exponent()?;
        let k_j = if sub.is_zero() { 1 } else { sub.radical_power_exponent()? };
        let k = lcm_u32(k_i, k_j);
        let source = QuotientPair::new(ideal.clone(), sub.clone())?;
        let target = QuotientPair::new(ideal.radical(), sub.radical())?;
        TransferInstance::new(source, target, PhiMap::Power(k))
    }

    pub fn to_json(&self) -> String {
        let pair = |q: &QuotientPair| PairJson {
            numerator: q.numerator().generators().iter().map(|g| g.exponents().to_vec()).collect(),
            denominator: q
                .denominator()
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        };
        let phi = match &self.phi {
            PhiMap::Power(k) => PhiJson { kind: "power".into(), k: Some(*k), v: None },
            PhiMap::Multiply(v) => PhiJson {
                kind: "multiply".into(),
                k: None,
                v: Some(v.exponents().to_vec()),
            },
            PhiMap::Identity => PhiJson { kind: "identity".into(), k: None, v: None },
        };
        serde_json::to_string(&InstanceJson {
            n: self.source.num_vars(),
            source: pair(&self.source),
            target: pair(&self.target),
            phi,
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: InstanceJson = serde_json::from_str(text)?;
        let n = raw.n;
        let to_ideal = |gens: Vec<Vec<u32>>| -> Result<MonomialIdeal> {
            let mut out = Vec::with_capacity(gens.len());
            for e in gens {
                if e.len() != n {
                    return Err(Error::Parse(format!(
                        "exponent vector of length {} in a ring with n = {n}",
                        e.len()
                    )));
                }
                out.push(Monomial::new(e));
            }
            Ok(MonomialIdeal::new(n, out))
        };
        let source = QuotientPair::new(to_ideal(raw.source.numerator)?, to_ideal(raw.source.denominator)?)?;
        let target = QuotientPair::new(to_ideal(raw.target.numerator)?, to_ideal(raw.target.denominator)?)?;
        let phi = match raw.phi.kind.as_str() {
            "power" => PhiMap::Power(
                raw.phi.k.ok_or_else(|| Error::Parse("power map needs field `k`".into()))?,
            ),
            "multiply" => {
                let v = raw.phi.v.ok_or_else(|| Error::Parse("multiply map needs field `v`".into()))?;
                if v.len() != n {
                    return Err(Error::Parse("multiplier length mismatch".into()));
                }
                PhiMap::Multiply(Monomial::new(v))
            }
            "identity" => PhiMap::Identity,
            other => return Err(Error::Parse(format!("unknown phi kind `{other}`"))),
        };
        TransferInstance::new(source, target, phi)
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    n: usize,
    source: PairJson,
    target: PairJson,
    phi: PhiJson,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    numerator: Vec<Vec<u32>>,
    denominator: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct PhiJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<Vec<u32>>,
}

/// Rebuild a Stanley decomposition of the target pair from one of the
/// source pair. The output always verifies and its depth is at least
/// the input's: the variable sets are inherited unchanged.
pub fn transfer(instance: &TransferInstance, source_dec: &StanleyDecomposition) -> Result<StanleyDecomposition> {
    if source_dec.quotient != instance.source {
        return Err(Error::NotNested);
    }
    source_dec.verify().map_err(Error::InvalidDecomposition)?;

    let mut bound = instance.working_bound();
    for attempt in 0..=MAX_BOX_GROWTH {
        let out = transfer_on_box(instance, source_dec, &bound)?;
        if out.verify().is_ok() {
            debug_assert!(out.sdepth() >= source_dec.sdepth());
            return Ok(out);
        }
        if attempt < MAX_BOX_GROWTH {
            for b in bound.iter_mut() {
                *b = b.checked_mul(2).expect("exponent overflow");
            }
        }
    }
    Err(Error::BoxGrowthExceeded)
}

fn transfer_on_box(
    instance: &TransferInstance,
    source_dec: &StanleyDecomposition,
    bound: &[u32],
) -> Result<StanleyDecomposition> {
    // group index -> gcd of the monomials whose image lands in that space
    let mut roots: BTreeMap<usize, Monomial> = BTreeMap::new();
    let mut exps = vec![0u32; bound.len()];
    loop {
        let u = Monomial::new(exps.clone());
        if instance.target.contains(&u) {
            let image = instance.phi.apply(&u);
            let hits: Vec<usize> = source_dec
                .spaces
                .iter()
                .enumerate()
                .filter(|(_, sp)| sp.contains(&image))
                .map(|(i, _)| i)
                .collect();
            let space = match hits.as_slice() {
                [i] => *i,
                _ => {
                    return Err(Error::BadSpaceLookup { monomial: image.to_string(), count: hits.len() })
                }
            };
            roots
                .entry(space)
                .and_modify(|r| *r = r.gcd(&u))
                .or_insert(u);
        }
        if !next_in_box(&mut exps, bound) {
            break;
        }
    }

    let mut spaces = Vec::with_capacity(roots.len());
    for (i, root) in roots {
        let src = &source_dec.spaces[i];
        // the proof's claim: the group gcd itself belongs to the group
        if !src.contains(&instance.phi.apply(&root)) {
            return Err(Error::RootClaimFailed { root: root.to_string() });
        }
        spaces.push(StanleySpace::new(root, src.vars.clone()));
    }
    Ok(StanleyDecomposition::new(instance.target.clone(), spaces))
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd_u32(b, a % b) }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}
