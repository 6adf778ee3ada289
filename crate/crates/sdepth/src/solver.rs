//! Exact Stanley depth of I/J via interval partitions of the
//! characteristic poset of exponent vectors below the generator bound.

use crate::decomposition::{next_in_box, QuotientPair, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};
use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

/// Hard limits for the partition search. Exceeding either is a loud
/// refusal, never a silent approximation.
#[derive(Clone, Debug)]
pub struct SolverLimits {
    pub max_poset_points: usize,
    pub time_budget: Duration,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            max_poset_points: 4096,
            time_budget: Duration::from_secs(60),
        }
    }
}

/// The finite poset of exponent vectors c with 0 <= c <= g and
/// x^c in I\J, where g bounds the generator exponents of I and J.
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    g: Vec<u32>,
    points: Vec<Vec<u32>>,
    quotient: QuotientPair,
}

impl CharacteristicPoset {
    pub fn bound(&self) -> &[u32] {
        &self.g
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn quotient(&self) -> &QuotientPair {
        &self.quotient
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Enumerate the poset points in lexicographic order. An empty point
/// set signals the zero module.
pub fn build_poset(quotient: &QuotientPair) -> CharacteristicPoset {
    let n = quotient.num_vars();
    let mut g = quotient.numerator().max_exponents();
    for (slot, e) in g.iter_mut().zip(quotient.denominator().max_exponents()) {
        *slot = (*slot).max(e);
    }
    let mut points = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        if quotient.contains(&Monomial::new(exps.clone())) {
            points.push(exps.clone());
        }
        if !next_in_box(&mut exps, &g) {
            break;
        }
    }
    CharacteristicPoset { g, points, quotient: quotient.clone() }
}

/// True iff the poset admits an interval partition in which every
/// interval top b has at least d coordinates with b_j = g_j.
pub fn sdepth_decision(quotient: &QuotientPair, d: usize, limits: &SolverLimits) -> Result<bool> {
    let poset = build_poset(quotient);
    if poset.is_empty() {
        return Ok(d == 0);
    }
    let mut search = Search::new(&poset, d, limits)?;
    search.run(false).map(|r| r.is_some())
}

/// Maximum partition value, plus a witness decomposition mapping each
/// interval (a, b) to the Stanley space x^a K[{x_j : b_j = g_j}].
///
/// The witness always verifies; the solver cannot over-report.
pub fn sdepth_exact(quotient: &QuotientPair, limits: &SolverLimits) -> Result<(usize, StanleyDecomposition)> {
    let poset = build_poset(quotient);
    if poset.is_empty() {
        return Ok((0, StanleyDecomposition::new(quotient.clone(), vec![])));
    }
    let n = quotient.num_vars();
    for d in (0..=n).rev() {
        let mut search = Search::new(&poset, d, limits)?;
        if let Some(intervals) = search.run(true)? {
            let witness = witness_decomposition(&poset, &intervals);
            debug_assert!(witness.verify().is_ok());
            debug_assert!(witness.sdepth() >= d);
            return Ok((d, witness));
        }
    }
    unreachable!("d = 0 always admits the singleton partition");
}

fn witness_decomposition(poset: &CharacteristicPoset, intervals: &[(Vec<u32>, Vec<u32>)]) -> StanleyDecomposition {
    let spaces = intervals
        .iter()
        .map(|(a, b)| {
            let free: Vec<usize> = b
                .iter()
                .zip(poset.bound())
                .enumerate()
                .filter(|(_, (be, ge))| be == ge)
                .map(|(j, _)| j)
                .collect();
            StanleySpace::new(Monomial::new(a.clone()), VarSet::new(free))
        })
        .collect();
    StanleyDecomposition::new(poset.quotient().clone(), spaces)
}

/// An interval [a, b] of the poset, stored as its endpoint exponents.
type Interval = (Vec<u32>, Vec<u32>);

/// Depth-first search for an interval partition of value >= d.
///
/// The first uncovered point in lexicographic order must be the bottom
/// of its interval, so branching only on candidate tops enumerates each
/// partition exactly once. Failed covered-sets are memoized.
struct Search<'a> {
    poset: &'a CharacteristicPoset,
    index: HashMap<&'a [u32], usize>,
    d: usize,
    covered: Vec<bool>,
    chosen: Vec<Interval>,
    failed: HashSet<Vec<u64>>,
    deadline: Instant,
    budget_secs: u64,
    tick: u32,
}

impl<'a> Search<'a> {
    fn new(poset: &'a CharacteristicPoset, d: usize, limits: &SolverLimits) -> Result<Self> {
        if poset.points.len() > limits.max_poset_points {
            return Err(Error::PosetTooLarge {
                points: poset.points.len(),
                limit: limits.max_poset_points,
            });
        }
        let index = poset
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        Ok(Search {
            poset,
            index,
            d,
            covered: vec![false; poset.points.len()],
            chosen: Vec::new(),
            failed: HashSet::new(),
            deadline: Instant::now() + limits.time_budget,
            budget_secs: limits.time_budget.as_secs(),
            tick: 0,
        })
    }

    fn run(&mut self, want_witness: bool) -> Result<Option<Vec<Interval>>> {
        if self.search()? {
            Ok(Some(if want_witness { std::mem::take(&mut self.chosen) } else { Vec::new() }))
        } else {
            Ok(None)
        }
    }

    fn check_budget(&mut self) -> Result<()> {
        self.tick = self.tick.wrapping_add(1);
        if self.tick.is_multiple_of(1024) && Instant::now() > self.deadline {
            return Err(Error::TimeBudgetExceeded { secs: self.budget_secs });
        }
        Ok(())
    }

    fn covered_key(&self) -> Vec<u64> {
        let mut key = vec![0u64; self.covered.len().div_ceil(64)];
        for (i, &c) in self.covered.iter().enumerate() {
            if c {
                key[i / 64] |= 1 << (i % 64);
            }
        }
        key
    }

    fn search(&mut self) -> Result<bool> {
        self.check_budget()?;
        let Some(first) = self.covered.iter().position(|&c| !c) else {
            return Ok(true);
        };
        let key = self.covered_key();
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let bottom = self.poset.points[first].clone();
        for (top, members) in self.candidate_tops(&bottom)? {
            for &m in &members {
                self.covered[m] = true;
            }
            self.chosen.push((bottom.clone(), top.clone()));
            if self.search()? {
                return Ok(true);
            }
            self.chosen.pop();
            for &m in &members {
                self.covered[m] = false;
            }
        }
        self.failed.insert(key);
        Ok(false)
    }

    /// Candidate tops for an interval with bottom a: every coordinate
    /// of the top is either a_j or g_j, so the interval [a, b] maps
    /// exactly onto the Stanley space x^a K[{x_j : b_j = g_j}]. Tops
    /// need at least d coordinates at the bound and the whole interval
    /// inside the uncovered point set. Largest intervals first.
    fn candidate_tops(&mut self, a: &[u32]) -> Result<Vec<(Vec<u32>, Vec<usize>)>> {
        let g = self.poset.bound();
        let fixed_at_bound = a.iter().zip(g).filter(|(ae, ge)| ae == ge).count();
        let free: Vec<usize> = (0..a.len()).filter(|&j| a[j] < g[j]).collect();
        let mut out: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
        for raise in 0u32..(1 << free.len()) {
            self.check_budget()?;
            let at_bound = fixed_at_bound + raise.count_ones() as usize;
            if at_bound < self.d {
                continue;
            }
            let mut b = a.to_vec();
            for (bit, &j) in free.iter().enumerate() {
                if raise & (1 << bit) != 0 {
                    b[j] = g[j];
                }
            }
            if let Some(members) = self.interval_members(a, &b) {
                out.push((b, members));
            }
        }
        out.sort_by(|(b1, m1), (b2, m2)| {
            let k1 = b1.iter().zip(g).filter(|(be, ge)| be == ge).count();
            let k2 = b2.iter().zip(g).filter(|(be, ge)| be == ge).count();
            k2.cmp(&k1).then(m2.len().cmp(&m1.len())).then(b1.cmp(b2))
        });
        Ok(out)
    }

    /// Point indices of [a, b] if every lattice point is an uncovered
    /// poset point, else None.
    fn interval_members(&self, a: &[u32], b: &[u32]) -> Option<Vec<usize>> {
        let mut members = Vec::new();
        let mut c = a.to_vec();
        loop {
            match self.index.get(c.as_slice()) {
                Some(&i) if !self.covered[i] => members.push(i),
                _ => return None,
            }
            if !next_in_sub_box(&mut c, a, b) {
                return Some(members);
            }
        }
    }
}

/// Odometer over the box [low, high], last coordinate fastest.
fn next_in_sub_box(v: &mut [u32], low: &[u32], high: &[u32]) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < high[i] {
            v[i] += 1;
            return true;
        }
        v[i] = low[i];
    }
    false
}
