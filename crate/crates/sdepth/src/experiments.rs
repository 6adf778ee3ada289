//! Experiment harness: turns the depth inequalities into reproducible
//! desk-scale check suites with deterministic CSV reports.
//!
//! A FAIL verdict on any theorem-backed inequality means an
//! implementation bug and fails the run. Rows whose sdepth computation
//! hit a solver limit are REFUSED and the dependent verdicts SKIPPED,
//! never silently passed.

use crate::decomposition::QuotientPair;
use crate::error::{Error, Result};
use crate::graph::{a_set_for, Graph};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::solver::{sdepth_exact, SolverLimits};
use crate::symbolic::{height_unmixed, symbolic_power};
use crate::transfer::{transfer, InstanceMode, TransferInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

/// A named squarefree ideal under test.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ideal: MonomialIdeal,
}

/// Where the ideals come from.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// Cover ideal of a graph file (text or JSON).
    CoverIdeal { graph: String },
    /// An explicit ideal file (text or JSON).
    Explicit { ideal: String },
    /// Seeded random squarefree ideals.
    RandomSquarefree { n: usize, generators: usize, count: usize, seed: u64 },
    /// The built-in graph corpus plus seeded random ideals.
    DefaultCorpus { seed: u64 },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    SymbolicInequality,
    UnmixedStep,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LimitSpec {
    #[serde(default = "default_poset_cap")]
    pub max_poset_points: usize,
    #[serde(default = "default_budget_secs")]
    pub time_budget_secs: u64,
}

fn default_poset_cap() -> usize {
    1024
}

fn default_budget_secs() -> u64 {
    10
}

impl Default for LimitSpec {
    fn default() -> Self {
        LimitSpec {
            max_poset_points: default_poset_cap(),
            time_budget_secs: default_budget_secs(),
        }
    }
}

impl LimitSpec {
    pub fn to_solver_limits(&self) -> SolverLimits {
        SolverLimits {
            max_poset_points: self.max_poset_points,
            time_budget: Duration::from_secs(self.time_budget_secs),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub family: Family,
    pub suite: Suite,
    /// (k, s) pairs for the symbolic suite.
    #[serde(default = "default_pairs")]
    pub pairs: Vec<[u32; 2]>,
    /// Base exponents k for the unmixed-step suite.
    #[serde(default = "default_ks")]
    pub ks: Vec<u32>,
    pub mode: InstanceMode,
    #[serde(default)]
    pub limits: LimitSpec,
}

fn default_pairs() -> Vec<[u32; 2]> {
    vec![[2, 1], [3, 1]]
}

fn default_ks() -> Vec<u32> {
    vec![1, 2]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub ideal: String,
    pub mode: String,
    pub power: String,
    pub sdepth: String,
    pub theorem: String,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
    pub metadata: BTreeMap<String, String>,
}

impl ExperimentReport {
    /// Stable schema: `ideal,mode,power,sdepth,theorem,verdict`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ideal,mode,power,sdepth,theorem,verdict\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.ideal, r.mode, r.power, r.sdepth, r.theorem, r.verdict
            )
            .expect("string writes cannot fail");
        }
        out
    }

    pub fn has_failure(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == "FAIL")
    }
}

/// Random squarefree proper ideal: generators drawn as random nonempty
/// variable subsets, then minimalized.
pub fn random_squarefree(n: usize, generators: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let mut gens = Vec::with_capacity(generators);
    for _ in 0..generators {
        let mut exps = vec![0u32; n];
        while exps.iter().all(|&e| e == 0) {
            for e in exps.iter_mut() {
                *e = u32::from(rng.gen_bool(0.5));
            }
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(n, gens)
}

/// The default corpus: small paths, cycles and complete graphs, plus
/// ten seeded random squarefree ideals with at most five variables.
pub fn default_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut add_graph = |name: &str, g: Graph| {
        out.push(CorpusEntry {
            name: name.to_string(),
            ideal: g.cover_ideal().expect("corpus graphs have edges"),
        });
    };
    for k in 3..=5 {
        add_graph(&format!("P{k}"), Graph::path(k));
    }
    for k in 3..=6 {
        add_graph(&format!("C{k}"), Graph::cycle(k));
    }
    for k in 3..=4 {
        add_graph(&format!("K{k}"), Graph::complete(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 1..=10 {
        let n = rng.gen_range(2..=5);
        let generators = rng.gen_range(2..=4);
        out.push(CorpusEntry {
            name: format!("R{i}"),
            ideal: random_squarefree(n, generators, &mut rng),
        });
    }
    out
}

impl Family {
    pub fn resolve(&self) -> Result<Vec<CorpusEntry>> {
        match self {
            Family::CoverIdeal { graph } => {
                let text = std::fs::read_to_string(graph)?;
                let g = Graph::parse(&text)?;
                Ok(vec![CorpusEntry { name: graph.clone(), ideal: g.cover_ideal()? }])
            }
            Family::Explicit { ideal } => {
                let text = std::fs::read_to_string(ideal)?;
                Ok(vec![CorpusEntry { name: ideal.clone(), ideal: MonomialIdeal::parse_auto(&text)? }])
            }
            Family::RandomSquarefree { n, generators, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((1..=*count)
                    .map(|i| CorpusEntry {
                        name: format!("R{i}"),
                        ideal: random_squarefree(*n, *generators, &mut rng),
                    })
                    .collect())
            }
            Family::DefaultCorpus { seed } => Ok(default_corpus(*seed)),
        }
    }
}

/// Run the requested suite and assemble the report.
pub fn run(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    let entries = spec.family.resolve()?;
    let limits = spec.limits.to_solver_limits();
    let mut report = match spec.suite {
        Suite::SymbolicInequality => run_symbolic_inequality(&entries, &spec.pairs, spec.mode, &limits)?,
        Suite::UnmixedStep => run_unmixed_step(&entries, &spec.ks, spec.mode, &limits)?,
    };
    report.metadata.insert("family".into(), format!("{:?}", spec.family));
    report
        .metadata
        .insert("limits".into(), format!("{}pts/{}s", spec.limits.max_poset_points, spec.limits.time_budget_secs));
    report
        .metadata
        .insert("version".into(), env!("CARGO_PKG_VERSION").to_string());
    Ok(report)
}

enum Cached {
    Value(usize, crate::decomposition::StanleyDecomposition),
    Refused(String),
}

struct SdepthCache<'a> {
    limits: &'a SolverLimits,
    map: BTreeMap<(String, u32), Cached>,
    mode: InstanceMode,
}

impl<'a> SdepthCache<'a> {
    fn get(&mut self, entry: &CorpusEntry, power: u32) -> Result<&Cached> {
        let key = (entry.name.clone(), power);
        if !self.map.contains_key(&key) {
            let ideal = symbolic_power(&entry.ideal, power)?;
            let quotient = match self.mode {
                InstanceMode::Ideal => QuotientPair::of_ideal(ideal),
                InstanceMode::Quotient => QuotientPair::of_quotient_ring(ideal),
            };
            let cached = match sdepth_exact(&quotient, self.limits) {
                Ok((value, witness)) => Cached::Value(value, witness),
                Err(e @ (Error::PosetTooLarge { .. } | Error::TimeBudgetExceeded { .. })) => {
                    Cached::Refused(refusal_tag(&e))
                }
                Err(e) => return Err(e),
            };
            self.map.insert(key.clone(), cached);
        }
        Ok(&self.map[&key])
    }
}

fn refusal_tag(e: &Error) -> String {
    match e {
        Error::PosetTooLarge { .. } => "REFUSED(poset)".into(),
        Error::TimeBudgetExceeded { .. } => "REFUSED(time)".into(),
        _ => "REFUSED".into(),
    }
}

fn mode_name(mode: InstanceMode) -> &'static str {
    match mode {
        InstanceMode::Ideal => "ideal",
        InstanceMode::Quotient => "quotient",
    }
}

/// The ks-vs-s inequality suite, plus a transfer run per instance.
pub fn run_symbolic_inequality(
    entries: &[CorpusEntry],
    pairs: &[[u32; 2]],
    mode: InstanceMode,
    limits: &SolverLimits,
) -> Result<ExperimentReport> {
    let mut rows = Vec::new();
    let mut cache = SdepthCache { limits, map: BTreeMap::new(), mode };
    for entry in entries {
        for &[k, s] in pairs {
            let ks = k.checked_mul(s).expect("exponent overflow");
            let base = match cache.get(entry, s)? {
                Cached::Value(v, _) => Ok(*v),
                Cached::Refused(tag) => Err(tag.clone()),
            };
            rows.push(ReportRow {
                ideal: entry.name.clone(),
                mode: mode_name(mode).into(),
                power: s.to_string(),
                sdepth: base.clone().map_or_else(|t| t, |v| v.to_string()),
                theorem: "-".into(),
                verdict: "-".into(),
            });
            let (high, witness) = match cache.get(entry, ks)? {
                Cached::Value(v, w) => (Ok(*v), Some(w.clone())),
                Cached::Refused(tag) => (Err(tag.clone()), None),
            };
            let verdict = match (&high, &base) {
                (Ok(h), Ok(b)) => {
                    if h <= b {
                        "PASS"
                    } else {
                        "FAIL"
                    }
                }
                _ => "SKIPPED",
            };
            rows.push(ReportRow {
                ideal: entry.name.clone(),
                mode: mode_name(mode).into(),
                power: ks.to_string(),
                sdepth: high.clone().map_or_else(|t| t, |v| v.to_string()),
                theorem: format!("csymbol(k={k};s={s})"),
                verdict: verdict.into(),
            });
            // transfer the optimal decomposition of the high power down
            let (sdepth_cell, verdict) = match witness {
                Some(w) => {
                    let instance = TransferInstance::symbolic(&entry.ideal, s, k, mode)?;
                    match transfer(&instance, &w) {
                        Ok(out) => {
                            let ok = out.verify().is_ok() && out.sdepth() >= w.sdepth();
                            (out.sdepth().to_string(), if ok { "PASS" } else { "FAIL" })
                        }
                        Err(_) => ("-".into(), "FAIL"),
                    }
                }
                None => ("SKIPPED".into(), "SKIPPED"),
            };
            rows.push(ReportRow {
                ideal: entry.name.clone(),
                mode: mode_name(mode).into(),
                power: format!("{ks}->{s}"),
                sdepth: sdepth_cell,
                theorem: format!("main(k={k};s={s})"),
                verdict: verdict.into(),
            });
        }
    }
    Ok(ExperimentReport { rows, metadata: BTreeMap::new() })
}

/// The k+d (and, when an A-set exists, k+1) step suite for unmixed
/// ideals, with the exact colon identity checked before any search.
pub fn run_unmixed_step(
    entries: &[CorpusEntry],
    ks: &[u32],
    mode: InstanceMode,
    limits: &SolverLimits,
) -> Result<ExperimentReport> {
    let mut rows = Vec::new();
    let mut cache = SdepthCache { limits, map: BTreeMap::new(), mode };
    for entry in entries {
        let (d, unmixed) = height_unmixed(&entry.ideal)?;
        if !unmixed {
            rows.push(ReportRow {
                ideal: entry.name.clone(),
                mode: mode_name(mode).into(),
                power: "-".into(),
                sdepth: "-".into(),
                theorem: "unmix".into(),
                verdict: "SKIPPED".into(),
            });
            continue;
        }
        let d = d as u32;
        let n = entry.ideal.num_vars();
        let all_vars = Monomial::new(vec![1; n]);
        let a_set = if n <= 20 { a_set_for(&entry.ideal)? } else { None };
        for &k in ks {
            // exact colon identity with t = d and v the product of all
            // variables; cheap, zero tolerance
            let ok = symbolic_power(&entry.ideal, k + d)?.colon(&all_vars)
                == symbolic_power(&entry.ideal, k)?;
            rows.push(ReportRow {
                ideal: entry.name.clone(),
                mode: mode_name(mode).into(),
                power: format!("{}:{k}", k + d),
                sdepth: "-".into(),
                theorem: format!("phi(t={d})"),
                verdict: if ok { "PASS".into() } else { "FAIL".into() },
            });
            rows.extend(step_rows(entry, k, k + d, format!("unmix(k={k};d={d})"), mode, &mut cache)?);
            if let Some(a) = &a_set {
                let v = product_of(a, n);
                let ok = symbolic_power(&entry.ideal, k + 1)?.colon(&v)
                    == symbolic_power(&entry.ideal, k)?;
                rows.push(ReportRow {
                    ideal: entry.name.clone(),
                    mode: mode_name(mode).into(),
                    power: format!("{}:{k}", k + 1),
                    sdepth: "-".into(),
                    theorem: "phi(t=1)".into(),
                    verdict: if ok { "PASS".into() } else { "FAIL".into() },
                });
                rows.extend(step_rows(entry, k, k + 1, format!("one(k={k})"), mode, &mut cache)?);
            }
        }
    }
    Ok(ExperimentReport { rows, metadata: BTreeMap::new() })
}

fn product_of(vars: &VarSet, n: usize) -> Monomial {
    let mut exps = vec![0u32; n];
    for v in vars.iter() {
        exps[v] = 1;
    }
    Monomial::new(exps)
}

fn step_rows(
    entry: &CorpusEntry,
    low: u32,
    high: u32,
    theorem: String,
    mode: InstanceMode,
    cache: &mut SdepthCache<'_>,
) -> Result<Vec<ReportRow>> {
    let base = match cache.get(entry, low)? {
        Cached::Value(v, _) => Ok(*v),
        Cached::Refused(tag) => Err(tag.clone()),
    };
    let upper = match cache.get(entry, high)? {
        Cached::Value(v, _) => Ok(*v),
        Cached::Refused(tag) => Err(tag.clone()),
    };
    let verdict = match (&upper, &base) {
        (Ok(h), Ok(b)) => {
            if h <= b {
                "PASS"
            } else {
                "FAIL"
            }
        }
        _ => "SKIPPED",
    };
    Ok(vec![
        ReportRow {
            ideal: entry.name.clone(),
            mode: mode_name(mode).into(),
            power: low.to_string(),
            sdepth: base.map_or_else(|t| t, |v| v.to_string()),
            theorem: "-".into(),
            verdict: "-".into(),
        },
        ReportRow {
            ideal: entry.name.clone(),
            mode: mode_name(mode).into(),
            power: high.to_string(),
            sdepth: upper.map_or_else(|t| t, |v| v.to_string()),
            theorem,
            verdict: verdict.into(),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_seed_deterministic() {
        let a = default_corpus(7);
        let b = default_corpus(7);
        let c = default_corpus(8);
        assert_eq!(a.len(), 19);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.ideal, y.ideal);
        }
        assert!(a.iter().zip(&c).any(|(x, y)| x.ideal != y.ideal));
        for e in &a {
            assert!(e.ideal.is_squarefree(), "{} not squarefree", e.name);
            assert!(e.ideal.is_proper(), "{} not proper", e.name);
        }
    }

    #[test]
    fn symbolic_suite_on_a_small_entry() {
        let entries = vec![CorpusEntry {
            name: "C3".into(),
            ideal: Graph::cycle(3).cover_ideal().unwrap(),
        }];
        let limits = SolverLimits::default();
        let report =
            run_symbolic_inequality(&entries, &[[2, 1]], InstanceMode::Quotient, &limits).unwrap();
        assert!(!report.has_failure(), "{}", report.to_csv());
        assert!(report.rows.iter().any(|r| r.theorem.starts_with("csymbol") && r.verdict == "PASS"));
        assert!(report.rows.iter().any(|r| r.theorem.starts_with("main") && r.verdict == "PASS"));
    }

    #[test]
    fn unmixed_suite_on_triangle() {
        let entries = vec![CorpusEntry {
            name: "C3".into(),
            ideal: Graph::cycle(3).cover_ideal().unwrap(),
        }];
        let limits = SolverLimits::default();
        let report = run_unmixed_step(&entries, &[1], InstanceMode::Quotient, &limits).unwrap();
        assert!(!report.has_failure(), "{}", report.to_csv());
        // C3 has no A-set, so only the d-step rows appear
        assert!(report.rows.iter().all(|r| !r.theorem.starts_with("one")));
        assert!(report.rows.iter().any(|r| r.theorem == "phi(t=2)" && r.verdict == "PASS"));
    }

    #[test]
    fn refused_rows_are_skipped_not_passed() {
        let entries = vec![CorpusEntry {
            name: "C3".into(),
            ideal: Graph::cycle(3).cover_ideal().unwrap(),
        }];
        let limits = SolverLimits { max_poset_points: 1, ..Default::default() };
        let report =
            run_symbolic_inequality(&entries, &[[2, 1]], InstanceMode::Quotient, &limits).unwrap();
        assert!(!report.has_failure());
        assert!(report.rows.iter().any(|r| r.sdepth.starts_with("REFUSED")));
        assert!(report.rows.iter().any(|r| r.verdict == "SKIPPED"));
    }

    #[test]
    fn csv_schema_is_stable() {
        let report = ExperimentReport {
            rows: vec![ReportRow {
                ideal: "C3".into(),
                mode: "ideal".into(),
                power: "1".into(),
                sdepth: "2".into(),
                theorem: "-".into(),
                verdict: "-".into(),
            }],
            metadata: BTreeMap::new(),
        };
        assert_eq!(
            report.to_csv(),
            "ideal,mode,power,sdepth,theorem,verdict\nC3,ideal,1,2,-,-\n"
        );
    }
}
