//! Stanley spaces and decompositions of monomial quotients I/J, with
//! finite-box validity checking.
//!
//! Spaces are infinite monomial sets, but every membership question for
//! I, J, and each space is a threshold condition on exponents, so a scan
//! of the box bounded by all generator and root exponents (plus a margin
//! of one) decides validity. Diagnostics report the lexicographically
//! first failing monomial.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The Stanley space root * K[vars]: all multiples of the root by
/// monomials supported on `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleySpace {
    pub root: Monomial,
    pub vars: VarSet,
}

impl StanleySpace {
    pub fn new(root: Monomial, vars: VarSet) -> Self {
        StanleySpace { root, vars }
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    /// v lies in the space iff root | v and v/root is supported on vars.
    pub fn contains(&self, v: &Monomial) -> bool {
        if !self.root.divides(v) {
            return false;
        }
        v.exponents()
            .iter()
            .zip(self.root.exponents())
            .enumerate()
            .all(|(i, (ve, re))| ve == re || self.vars.contains(i))
    }
}

/// The module I/J for nested monomial ideals J ⊆ I.
///
/// S/I is the pair (unit ideal, I); the ideal I alone is (I, zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPair {
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl QuotientPair {
    pub fn new(numerator: MonomialIdeal, denominator: MonomialIdeal) -> Result<Self> {
        assert_eq!(numerator.num_vars(), denominator.num_vars(), "ideals from different rings");
        if !numerator.contains_ideal(&denominator) {
            return Err(Error::NotNested);
        }
        Ok(QuotientPair { numerator, denominator })
    }

    /// The ideal I viewed as a module: the pair (I, 0).
    pub fn of_ideal(ideal: MonomialIdeal) -> Self {
        let n = ideal.num_vars();
        QuotientPair { numerator: ideal, denominator: MonomialIdeal::zero(n) }
    }

    /// The quotient ring S/I as the pair (S, I).
    pub fn of_quotient_ring(ideal: MonomialIdeal) -> Self {
        let n = ideal.num_vars();
        QuotientPair { numerator: MonomialIdeal::unit(n), denominator: ideal }
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    pub fn num_vars(&self) -> usize {
        self.numerator.num_vars()
    }

    /// u represents a nonzero element of I/J.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.numerator.contains(u) && !self.denominator.contains(u)
    }
}

/// Why a box scan rejected a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    /// A monomial of I\J lies in no space.
    Uncovered { witness: Monomial },
    /// A monomial of I\J lies in more than one space.
    Overlap { witness: Monomial, spaces: Vec<usize> },
    /// A space contains a monomial outside I\J.
    OutsideQuotient { witness: Monomial, space: usize },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Uncovered { witness } => {
                write!(f, "monomial {witness} of I\\J is covered by no space")
            }
            VerifyFailure::Overlap { witness, spaces } => {
                write!(f, "monomial {witness} lies in spaces {spaces:?}")
            }
            VerifyFailure::OutsideQuotient { witness, space } => {
                write!(f, "space {space} contains {witness}, which is outside I\\J")
            }
        }
    }
}

/// A candidate Stanley decomposition of a quotient pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub quotient: QuotientPair,
    pub spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(quotient: QuotientPair, spaces: Vec<StanleySpace>) -> Self {
        for sp in &spaces {
            assert_eq!(sp.root.num_vars(), quotient.num_vars(), "space from a different ring");
        }
        StanleyDecomposition { quotient, spaces }
    }

    /// Min space dimension; 0 for the empty list (zero module).
    pub fn sdepth(&self) -> usize {
        self.spaces.iter().map(StanleySpace::dimension).min().unwrap_or(0)
    }

    /// Verify first, then report the Stanley depth.
    pub fn sdepth_checked(&self) -> Result<usize> {
        self.verify().map_err(Error::InvalidDecomposition)?;
        Ok(self.sdepth())
    }

    /// Bound of the verification box: componentwise max over all
    /// generator exponents of I and J and all roots, plus one.
    pub fn verify_box(&self) -> Vec<u32> {
        let n = self.quotient.num_vars();
        let mut bound = self.quotient.numerator.max_exponents();
        for (slot, e) in bound.iter_mut().zip(self.quotient.denominator.max_exponents()) {
            *slot = (*slot).max(e);
        }
        for sp in &self.spaces {
            for (slot, &e) in bound.iter_mut().zip(sp.root.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        for slot in bound.iter_mut() {
            *slot += 1;
        }
        debug_assert_eq!(bound.len(), n);
        bound
    }

    /// Scan the verification box in lexicographic order and check that
    /// the spaces partition I\J exactly. Returns the first failure.
    pub fn verify(&self) -> std::result::Result<(), VerifyFailure> {
        self.verify_on_box(&self.verify_box())
    }

    pub fn verify_on_box(&self, bound: &[u32]) -> std::result::Result<(), VerifyFailure> {
        let n = self.quotient.num_vars();
        assert_eq!(bound.len(), n);
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            let in_quotient = self.quotient.contains(&m);
            let hits: Vec<usize> = self
                .spaces
                .iter()
                .enumerate()
                .filter(|(_, sp)| sp.contains(&m))
                .map(|(i, _)| i)
                .collect();
            if in_quotient {
                match hits.len() {
                    0 => return Err(VerifyFailure::Uncovered { witness: m }),
                    1 => {}
                    _ => return Err(VerifyFailure::Overlap { witness: m, spaces: hits }),
                }
            } else if let Some(&space) = hits.first() {
                return Err(VerifyFailure::OutsideQuotient { witness: m, space });
            }
            if !next_in_box(&mut exps, bound) {
                return Ok(());
            }
        }
    }

    /// The `{"spaces": [{"root": [...], "vars": [1-based...]}]}` format.
    pub fn spaces_to_json(&self) -> String {
        let spaces = self
            .spaces
            .iter()
            .map(|sp| SpaceJson {
                root: sp.root.exponents().to_vec(),
                vars: sp.vars.iter().map(|v| v + 1).collect(),
            })
            .collect();
        serde_json::to_string(&DecompositionJson { spaces }).expect("serialization cannot fail")
    }

    pub fn from_spaces_json(quotient: QuotientPair, text: &str) -> Result<Self> {
        let raw: DecompositionJson = serde_json::from_str(text)?;
        let n = quotient.num_vars();
        let mut spaces = Vec::with_capacity(raw.spaces.len());
        for sp in raw.spaces {
            if sp.root.len() != n {
                return Err(Error::Parse(format!(
                    "root of length {} in a ring with n = {}",
                    sp.root.len(),
                    n
                )));
            }
            let mut vars = Vec::with_capacity(sp.vars.len());
            for v in sp.vars {
                if v == 0 || v > n {
                    return Err(Error::Parse(format!("variable index {v} out of range 1..={n}")));
                }
                vars.push(v - 1);
            }
            spaces.push(StanleySpace::new(Monomial::new(sp.root), VarSet::new(vars)));
        }
        Ok(StanleyDecomposition::new(quotient, spaces))
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    spaces: Vec<SpaceJson>,
}

#[derive(Serialize, Deserialize)]
struct SpaceJson {
    root: Vec<u32>,
    vars: Vec<usize>,
}

/// Advance `exps` to the lexicographic successor inside the closed box
/// `[0, bound]`; false when exhausted. Iteration order: last coordinate
/// varies fastest, which matches lexicographic order on vectors.
pub(crate) fn next_in_box(exps: &mut [u32], bound: &[u32]) -> bool {
    for i in (0..exps.len()).rev() {
        if exps[i] < bound[i] {
            exps[i] += 1;
            return true;
        }
        exps[i] = 0;
    }
    false
}
