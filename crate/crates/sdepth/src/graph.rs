//! Graphs, cover ideals, bipartiteness, and A-set search.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::symbolic::minimal_primes;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Exhaustive A-set search is capped at this many variables.
const MAX_A_SET_VARS: usize = 20;

/// A finite simple graph on vertices 0..n (0-based internally; all file
/// formats are 1-based). Isolated vertices are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Parse(format!("edge ({a}, {b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Graph { n, edges: normalized })
    }

    /// Path on k vertices: 0-1-2-...-(k-1).
    pub fn path(k: usize) -> Graph {
        Graph::new(k, (0..k - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    /// Cycle on k vertices.
    pub fn cycle(k: usize) -> Graph {
        let mut edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
        edges.push((k - 1, 0));
        Graph::new(k, edges).unwrap()
    }

    /// Complete graph on k vertices.
    pub fn complete(k: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                edges.push((a, b));
            }
        }
        Graph::new(k, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The cover ideal: intersection over edges of the edge primes
    /// <x_i, x_j>. Its generators are the minimal vertex covers.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::EdgelessGraph);
        }
        let n = self.n;
        let mut out = MonomialIdeal::unit(n);
        for &(a, b) in &self.edges {
            let edge_prime = MonomialIdeal::new(
                n,
                vec![Monomial::variable(a, n), Monomial::variable(b, n)],
            );
            out = out.intersect(&edge_prime);
        }
        Ok(out)
    }

    /// Two-coloring by breadth-first traversal; None on an odd cycle.
    /// The least vertex of each component is colored into the first side.
    pub fn is_bipartite(&self) -> Option<(VarSet, VarSet)> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let side = |want: bool| {
            VarSet::new(
                color
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.unwrap() == want)
                    .map(|(v, _)| v)
                    .collect(),
            )
        };
        Some((side(false), side(true)))
    }

    /// Text format: first line `n`, then one `i j` pair per line (1-based).
    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse(format!("bad edge line `{line}`")));
            };
            let a: usize = a.parse().map_err(|_| Error::Parse(format!("bad vertex `{a}`")))?;
            let b: usize = b.parse().map_err(|_| Error::Parse(format!("bad vertex `{b}`")))?;
            if a == 0 || b == 0 {
                return Err(Error::Parse("vertices are 1-based".into()));
            }
            edges.push((a - 1, b - 1));
        }
        Graph::new(n, edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(text)?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for [a, b] in raw.edges {
            if a == 0 || b == 0 {
                return Err(Error::Parse("vertices are 1-based".into()));
            }
            edges.push((a - 1, b - 1));
        }
        Graph::new(raw.n, edges)
    }

    /// Parse either format, sniffing JSON by the leading brace.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::parse_text(text)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// A variable subset meeting every minimal prime of a squarefree ideal
/// in exactly one element, or None. Searched exhaustively, smallest
/// cardinality first, then lexicographically.
pub fn a_set_for(ideal: &MonomialIdeal) -> Result<Option<VarSet>> {
    let n = ideal.num_vars();
    if n > MAX_A_SET_VARS {
        return Err(Error::TooManyVariables(n, MAX_A_SET_VARS));
    }
    let dec = minimal_primes(ideal)?;
    let primes: Vec<&VarSet> = dec.primes().iter().map(|p| p.support()).collect();
    for size in 1..=n {
        for mask in 1u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let a = VarSet::new((0..n).filter(|v| mask & (1 << v) != 0).collect());
            if primes.iter().all(|p| p.intersection_len(&a) == 1) {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    #[test]
    fn cover_ideal_single_edge() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(g.cover_ideal().unwrap(), ideal(2, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn cover_ideal_triangle_and_path() {
        let c3 = Graph::cycle(3);
        assert_eq!(
            c3.cover_ideal().unwrap(),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        // P3: minimal covers {v2} and {v1, v3}
        let p3 = Graph::path(3);
        assert_eq!(p3.cover_ideal().unwrap(), ideal(3, &[&[0, 1, 0], &[1, 0, 1]]));
    }

    #[test]
    fn edgeless_graph_rejected() {
        let g = Graph::new(3, vec![]).unwrap();
        assert!(matches!(g.cover_ideal(), Err(Error::EdgelessGraph)));
    }

    #[test]
    fn bipartiteness() {
        let (u, w) = Graph::cycle(4).is_bipartite().unwrap();
        assert_eq!(u, VarSet::new(vec![0, 2]));
        assert_eq!(w, VarSet::new(vec![1, 3]));
        assert!(Graph::cycle(3).is_bipartite().is_none());
        assert!(Graph::new(2, vec![(0, 1)]).unwrap().is_bipartite().is_some());
    }

    #[test]
    fn a_sets() {
        let single = Graph::new(2, vec![(0, 1)]).unwrap().cover_ideal().unwrap();
        assert_eq!(a_set_for(&single).unwrap(), Some(VarSet::new(vec![0])));

        let c4 = Graph::cycle(4).cover_ideal().unwrap();
        assert_eq!(a_set_for(&c4).unwrap(), Some(VarSet::new(vec![0, 2])));

        let c3 = Graph::cycle(3).cover_ideal().unwrap();
        assert_eq!(a_set_for(&c3).unwrap(), None);
    }

    #[test]
    fn parse_both_formats() {
        let text = "4\n1 2\n2 3\n3 4\n4 1\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, Graph::cycle(4));
        let back = Graph::parse(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Graph::parse_text("").is_err());
        assert!(Graph::parse_text("2\n1 1\n").is_err());
        assert!(Graph::parse_text("2\n0 1\n").is_err());
        assert!(Graph::parse_text("2\n1 3\n").is_err());
    }
}
