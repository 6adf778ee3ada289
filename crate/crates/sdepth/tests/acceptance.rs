//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdepth::experiments::{
    default_corpus, run_symbolic_inequality, run_unmixed_step, ExperimentSpec, Family, LimitSpec,
    Suite,
};
use sdepth::oracle;
use sdepth::{
    build_poset, height_unmixed, sdepth_exact, symbolic_power, transfer, Graph, InstanceMode,
    Monomial, MonomialIdeal, QuotientPair, SolverLimits, TransferInstance,
};
use std::time::{Duration, Instant};

const CORPUS_SEED: u64 = 42;

fn report(criterion: &str, failures: &[String], start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed <= budget;
    println!(
        "acceptance {criterion}: {} ({elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" }
    );
    for f in failures {
        println!("  - {f}");
    }
    assert!(failures.is_empty(), "{criterion}: {failures:?}");
    assert!(elapsed <= budget, "{criterion}: exceeded {budget:?} ({elapsed:?})");
}

fn bipartite_members() -> Vec<&'static str> {
    vec!["P3", "P4", "P5", "C4", "C6"]
}

#[test]
fn criterion_1_exact_identities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let corpus = default_corpus(CORPUS_SEED);
    for entry in &corpus {
        let ideal = &entry.ideal;
        if symbolic_power(ideal, 1).unwrap() != *ideal {
            failures.push(format!("{}: I^(1) != I", entry.name));
        }
        for k in 1..=3 {
            let sym = symbolic_power(ideal, k).unwrap();
            if !sym.contains_ideal(&ideal.power(k)) {
                failures.push(format!("{}: I^{k} not inside I^({k})", entry.name));
            }
            if sym.radical() != *ideal {
                failures.push(format!("{}: radical of I^({k}) differs from I", entry.name));
            }
        }
        let (d, unmixed) = height_unmixed(ideal).unwrap();
        if unmixed {
            let v = Monomial::new(vec![1; ideal.num_vars()]);
            for k in 1..=3u32 {
                let lhs = symbolic_power(ideal, k + d as u32).unwrap().colon(&v);
                if lhs != symbolic_power(ideal, k).unwrap() {
                    failures.push(format!("{}: colon identity fails at k = {k}", entry.name));
                }
            }
        }
    }
    for name in bipartite_members() {
        let entry = corpus.iter().find(|e| e.name == name).unwrap();
        for k in 1..=3 {
            if symbolic_power(&entry.ideal, k).unwrap() != entry.ideal.power(k) {
                failures.push(format!("{name}: symbolic != ordinary power at k = {k}"));
            }
        }
    }
    report("1 (exact identities)", &failures, start, Duration::from_secs(5));
}

#[test]
fn criterion_2_solver_validation() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let limits = SolverLimits::default();
    let maximal = |n: usize| MonomialIdeal::new(n, (0..n).map(|i| Monomial::variable(i, n)).collect());

    for n in 1..=5 {
        let (s, _) = sdepth_exact(&QuotientPair::of_ideal(MonomialIdeal::unit(n)), &limits).unwrap();
        if s != n {
            failures.push(format!("sdepth(S) = {s}, expected {n}"));
        }
        let (s, _) = sdepth_exact(&QuotientPair::of_quotient_ring(maximal(n)), &limits).unwrap();
        if s != 0 {
            failures.push(format!("sdepth(S/m) = {s}, expected 0 at n = {n}"));
        }
    }
    for n in 2..=4 {
        let q = QuotientPair::of_ideal(maximal(n));
        let (s, _) = sdepth_exact(&q, &limits).unwrap();
        let expected = n.div_ceil(2);
        if s != expected {
            failures.push(format!("sdepth(m) = {s}, expected {expected} at n = {n}"));
        }
        if oracle::naive_sdepth(&q) != expected {
            failures.push(format!("naive sdepth(m) disagrees at n = {n}"));
        }
    }

    // 50 seeded random quotients with at most 12 poset points
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 50 {
        attempts += 1;
        assert!(attempts < 10_000, "random quotient generation stalled");
        let n = rng.gen_range(1..=3);
        let numerator = MonomialIdeal::new(
            n,
            (0..rng.gen_range(1..=3))
                .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=2u32)).collect()))
                .collect(),
        );
        let mut sub_gens = Vec::new();
        for g in numerator.generators() {
            if rng.gen_bool(0.6) {
                let shift = Monomial::new((0..n).map(|_| rng.gen_range(0..=1u32)).collect());
                sub_gens.push(g.mul(&shift));
            }
        }
        let denominator = MonomialIdeal::new(n, sub_gens);
        let quotient = QuotientPair::new(numerator, denominator).unwrap();
        if build_poset(&quotient).points().len() > 12 {
            continue;
        }
        checked += 1;
        let (value, witness) = sdepth_exact(&quotient, &limits).unwrap();
        let naive = oracle::naive_sdepth(&quotient);
        if value != naive || witness.verify().is_err() {
            failures.push(format!("random quotient {checked}: solver {value} vs naive {naive}"));
        }
    }
    report("2 (solver validation)", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_3_transfer_soundness() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let limits = SolverLimits::default();
    let mut instances = Vec::new();
    for graph in [Graph::path(3), Graph::cycle(3), Graph::cycle(4)] {
        let j = graph.cover_ideal().unwrap();
        for mode in [InstanceMode::Ideal, InstanceMode::Quotient] {
            instances.push(TransferInstance::symbolic(&j, 1, 2, mode).unwrap());
        }
        let n = j.num_vars();
        instances.push(
            TransferInstance::colon(&j, &MonomialIdeal::zero(n), &Monomial::variable(0, n)).unwrap(),
        );
    }
    instances.push(
        TransferInstance::radical(
            &MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0]), Monomial::new(vec![0, 3])]),
            &MonomialIdeal::zero(2),
        )
        .unwrap(),
    );
    for instance in &instances {
        let (_, source_dec) = sdepth_exact(instance.source(), &limits).unwrap();
        match transfer(instance, &source_dec) {
            Ok(out) => {
                if out.verify().is_err() {
                    failures.push("transfer output failed verification".into());
                }
                if out.sdepth() < source_dec.sdepth() {
                    failures.push(format!(
                        "transfer dropped sdepth: {} < {}",
                        out.sdepth(),
                        source_dec.sdepth()
                    ));
                }
            }
            Err(e) => failures.push(format!("transfer error: {e}")),
        }
    }
    report("3 (transfer soundness)", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_4_inequality_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let corpus = default_corpus(CORPUS_SEED);
    let limits = LimitSpec::default().to_solver_limits();
    let mut refused = 0usize;
    for mode in [InstanceMode::Ideal, InstanceMode::Quotient] {
        let symbolic =
            run_symbolic_inequality(&corpus, &[[2, 1], [3, 1]], mode, &limits).unwrap();
        // k + d <= 4 with d = 2 for cover ideals caps the base k at 2
        let unmixed = run_unmixed_step(&corpus, &[1, 2], mode, &limits).unwrap();
        for report in [&symbolic, &unmixed] {
            for row in &report.rows {
                if row.verdict == "FAIL" {
                    failures.push(format!(
                        "{} {} {} {}: FAIL",
                        row.ideal, row.mode, row.power, row.theorem
                    ));
                }
                if row.sdepth.starts_with("REFUSED") {
                    refused += 1;
                }
            }
        }
    }
    println!("  ({refused} REFUSED sdepth cells reported)");
    report("4 (inequality suite)", &failures, start, Duration::from_secs(600));
}

#[test]
fn criterion_5_monotone_prefixes() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let j = Graph::cycle(3).cover_ideal().unwrap();
    let limits = SolverLimits::default();
    let value = |k: u32| {
        let q = QuotientPair::of_quotient_ring(symbolic_power(&j, k).unwrap());
        sdepth_exact(&q, &limits).unwrap().0
    };
    let values: Vec<usize> = (1..=4).map(value).collect();
    println!("  sdepth(S/J_C3^(k)) for k = 1..4: {values:?}");
    if values[2] > values[0] {
        failures.push(format!("sdepth(S/J^(3)) = {} > sdepth(S/J^(1)) = {}", values[2], values[0]));
    }
    if values[3] > values[1] {
        failures.push(format!("sdepth(S/J^(4)) = {} > sdepth(S/J^(2)) = {}", values[3], values[1]));
    }
    report("5 (monotone prefixes)", &failures, start, Duration::from_secs(600));
}

#[test]
fn criterion_6_determinism() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let spec = ExperimentSpec {
        family: Family::DefaultCorpus { seed: CORPUS_SEED },
        suite: Suite::SymbolicInequality,
        pairs: vec![[2, 1]],
        ks: vec![],
        mode: InstanceMode::Quotient,
        limits: LimitSpec::default(),
    };
    let first = sdepth::experiments::run(&spec).unwrap().to_csv();
    let second = sdepth::experiments::run(&spec).unwrap().to_csv();
    if first.as_bytes() != second.as_bytes() {
        failures.push("two runs with the same spec differ".into());
    }
    report("6 (determinism)", &failures, start, Duration::from_secs(600));
}
