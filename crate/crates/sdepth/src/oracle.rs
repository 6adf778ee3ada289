//! Brute-force reference implementations for cross-validation.
//!
//! Everything here recomputes its answer by exhaustive enumeration,
//! independent of the search machinery in the rest of the crate. Used
//! by the test suites; not intended for production-size inputs.

use crate::decomposition::{next_in_box, QuotientPair};
use crate::graph::Graph;
use crate::monomial::{Monomial, VarSet};

/// Stanley depth by enumerating every interval partition of the
/// characteristic poset and taking the best minimum value. Exponential;
/// keep the poset at a dozen points or so.
pub fn naive_sdepth(quotient: &QuotientPair) -> usize {
    let n = quotient.num_vars();
    let mut g = quotient.numerator().max_exponents();
    for (slot, e) in g.iter_mut().zip(quotient.denominator().max_exponents()) {
        *slot = (*slot).max(e);
    }
    let mut points: Vec<Vec<u32>> = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        if quotient.contains(&Monomial::new(exps.clone())) {
            points.push(exps.clone());
        }
        if !next_in_box(&mut exps, &g) {
            break;
        }
    }
    if points.is_empty() {
        return 0;
    }
    let mut covered = vec![false; points.len()];
    let mut best = 0;
    enumerate_partitions(&points, &g, &mut covered, n, &mut best);
    best
}

fn enumerate_partitions(
    points: &[Vec<u32>],
    g: &[u32],
    covered: &mut [bool],
    value_so_far: usize,
    best: &mut usize,
) {
    let Some(first) = covered.iter().position(|&c| !c) else {
        *best = (*best).max(value_so_far);
        return;
    };
    if value_so_far <= *best {
        // the running minimum only decreases, so this branch cannot
        // improve on the best complete partition already found
        return;
    }
    let a = &points[first];
    // every top b in [a, g]
    let mut b = a.clone();
    loop {
        if let Some(members) = interval_members(points, covered, a, &b) {
            for &m in &members {
                covered[m] = true;
            }
            let value = b.iter().zip(g).filter(|(x, y)| x == y).count();
            enumerate_partitions(points, g, covered, value_so_far.min(value), best);
            for &m in &members {
                covered[m] = false;
            }
        }
        if !advance(&mut b, a, g) {
            break;
        }
    }
}

fn interval_members(points: &[Vec<u32>], covered: &[bool], a: &[u32], b: &[u32]) -> Option<Vec<usize>> {
    let mut members = Vec::new();
    let mut c = a.to_vec();
    loop {
        match points.iter().position(|p| p.as_slice() == c.as_slice()) {
            Some(i) if !covered[i] => members.push(i),
            _ => return None,
        }
        if !advance(&mut c, a, b) {
            return Some(members);
        }
    }
}

fn advance(v: &mut [u32], low: &[u32], high: &[u32]) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < high[i] {
            v[i] += 1;
            return true;
        }
        v[i] = low[i];
    }
    false
}

/// All minimal vertex covers of a graph, by enumerating every vertex
/// subset and keeping the inclusion-minimal covering ones.
pub fn minimal_vertex_covers(graph: &Graph) -> Vec<VarSet> {
    let n = graph.vertex_count();
    assert!(n <= 20, "brute-force cover enumeration is capped at 20 vertices");
    let covers: Vec<u32> = (0u32..(1 << n))
        .filter(|mask| {
            graph
                .edges()
                .iter()
                .all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0)
        })
        .collect();
    let mut minimal: Vec<VarSet> = covers
        .iter()
        .filter(|&&c| !covers.iter().any(|&o| o != c && o & c == o))
        .map(|&c| VarSet::new((0..n).filter(|v| c & (1 << v) != 0).collect()))
        .collect();
    minimal.sort();
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;

    #[test]
    fn naive_sdepth_known_values() {
        let m3 = MonomialIdeal::new(3, (0..3).map(|i| Monomial::variable(i, 3)).collect());
        assert_eq!(naive_sdepth(&QuotientPair::of_ideal(m3.clone())), 2);
        assert_eq!(naive_sdepth(&QuotientPair::of_quotient_ring(m3)), 0);
        assert_eq!(naive_sdepth(&QuotientPair::of_ideal(MonomialIdeal::unit(2))), 2);
        assert_eq!(naive_sdepth(&QuotientPair::of_ideal(MonomialIdeal::zero(2))), 0);
    }

    #[test]
    fn covers_of_small_graphs() {
        let covers = minimal_vertex_covers(&Graph::path(3));
        assert_eq!(covers, vec![VarSet::new(vec![0, 2]), VarSet::new(vec![1])]);
        assert_eq!(minimal_vertex_covers(&Graph::cycle(3)).len(), 3);
    }
}
