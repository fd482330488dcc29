//! Helpers shared by the integration tests.
//!
//! The `naive_*` functions recompute bicircular ranks straight from the
//! definition with a plain graph search, so they share no code with the
//! union-find implementation under test.

#![allow(dead_code)]

use bicircular::generators::{self, GeneratorSpec};
use bicircular::{EdgeSet, Multigraph};
use proptest::prelude::*;

/// Components of `G[S]` as (vertex count, edge count) pairs, by DFS.
pub fn naive_components(g: &Multigraph, s: &EdgeSet) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    let mut touched = vec![false; n];
    for e in s {
        let (u, v) = g.endpoints(e);
        adj[u].push(e);
        if u != v {
            adj[v].push(e);
        }
        touched[u] = true;
        touched[v] = true;
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if !touched[root] || seen[root] {
            continue;
        }
        let mut stack = vec![root];
        seen[root] = true;
        let mut vertices = 0;
        let mut edges = EdgeSet::new();
        while let Some(x) = stack.pop() {
            vertices += 1;
            for &e in &adj[x] {
                edges.insert(e);
                let (u, v) = g.endpoints(e);
                let y = if u == x { v } else { u };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push((vertices, edges.len()));
    }
    out
}

pub fn naive_independent(g: &Multigraph, s: &EdgeSet) -> bool {
    naive_components(g, s).iter().all(|&(v, e)| e <= v)
}

/// Largest independent subset, by brute force. Only for small `S`.
pub fn naive_rank(g: &Multigraph, s: &EdgeSet) -> usize {
    s.subsets()
        .filter(|t| naive_independent(g, t))
        .map(|t| t.len())
        .max()
        .unwrap_or(0)
}

/// Double circuits straight from the definition, on top of `naive_rank`.
pub fn naive_double_circuits(g: &Multigraph) -> Vec<EdgeSet> {
    let mut out: Vec<EdgeSet> = g
        .all_edges()
        .subsets()
        .filter(|d| {
            let r = naive_rank(g, d);
            r + 2 == d.len() && d.iter().all(|e| naive_rank(g, &d.without(e)) == r)
        })
        .collect();
    out.sort();
    out
}

/// Small graphs with loops, parallel edges, thetas and handcuffs.
pub fn small_named() -> Vec<(String, Multigraph)> {
    [
        GeneratorSpec::Complete { n: 4 },
        GeneratorSpec::Cycle { n: 5 },
        GeneratorSpec::Bouquet { n: 3 },
        GeneratorSpec::Banana { n: 4 },
        GeneratorSpec::Theta { a: 2, b: 2, c: 1 },
        GeneratorSpec::Theta { a: 1, b: 1, c: 1 },
        GeneratorSpec::Handcuff { p: 1, q: 2, r: 1 },
        GeneratorSpec::Handcuff { p: 2, q: 2, r: 0 },
    ]
    .into_iter()
    .map(|spec| (spec.to_string(), generators::named(&spec).unwrap()))
    .collect()
}

/// Seeded random multigraphs with `m` between `lo` and `hi`.
pub fn random_corpus(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<(String, Multigraph)> {
    (0..count)
        .map(|i| {
            let m = lo + i % (hi - lo + 1);
            let n = 2 + (i * 7 + 3) % 6;
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            let g = generators::random_multigraph(n, m, s).unwrap();
            (format!("random(n={n}, m={m}, seed={s})"), g)
        })
        .collect()
}

/// Multigraphs on up to `max_n` vertices with up to `max_m` edges.
pub fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |edges| Multigraph::new(n, edges).unwrap())
    })
}

/// A graph together with a subset of its edges.
pub fn arb_graph_and_set(
    max_n: usize,
    max_m: usize,
) -> impl Strategy<Value = (Multigraph, EdgeSet)> {
    arb_multigraph(max_n, max_m).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(any::<bool>(), m)).prop_map(|(g, bits)| {
            let s = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect();
            (g, s)
        })
    })
}
