//! Double circuits of bicircular matroids.
//!
//! Two independent enumerators produce the same census:
//!
//! * [`enumerate_oracle`] tests the rank definition on every subset of `E`;
//! * [`enumerate_structural`] builds candidates from the graph.
//!
//! The structural search rests on a component count. A double circuit `D`
//! has nullity 2 and no coloops, and every component of `G[D]` with nullity 0
//! consists of coloops. So `G[D]` is either one connected leafless piece with
//! `|D| = |V| + 2`, or two vertex-disjoint circuits.
//!
//! Connected edge sets with minimum degree 2 and `|E| = |V| + k` are grown
//! one *handle* at a time from a cycle: a handle is a path whose interior
//! avoids the current vertex set and which either ends back on it (an ear,
//! possibly closed at its start) or ends on itself (a lollipop). Adding a
//! handle raises `|E| - |V|` by exactly one and keeps every degree >= 2, and
//! every leafless connected graph with `|E| - |V| = k` arises from one with
//! `k - 1` this way.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::bicircular::BicircularContext;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::matroid::{partition_by, DoubleCircuitReport};
use crate::multigraph::Multigraph;

/// Default largest edge count for the subset-scanning enumerator.
pub const ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Enumerator {
    Oracle,
    Structural,
}

impl std::str::FromStr for Enumerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Enumerator::Oracle),
            "structural" => Ok(Enumerator::Structural),
            other => Err(Error::Precondition(format!("unknown enumerator {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCircuitCensus {
    pub graph: String,
    pub reports: Vec<DoubleCircuitReport>,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub positive_count: usize,
    pub enumerator: Enumerator,
}

impl DoubleCircuitCensus {
    /// Census over reports found by the definitional predicate.
    pub fn from_reports(graph: &str, reports: Vec<DoubleCircuitReport>) -> Self {
        Self::new(graph.to_string(), reports, Enumerator::Oracle)
    }

    fn new(graph: String, reports: Vec<DoubleCircuitReport>, enumerator: Enumerator) -> Self {
        let mut degree_histogram = BTreeMap::new();
        for r in &reports {
            *degree_histogram.entry(r.degree).or_insert(0) += 1;
        }
        let positive_count = reports.iter().filter(|r| r.positive).count();
        Self {
            graph,
            reports,
            degree_histogram,
            positive_count,
            enumerator,
        }
    }

    pub fn total(&self) -> usize {
        self.reports.len()
    }

    /// The double circuits alone, in census order.
    pub fn edge_sets(&self) -> Vec<EdgeSet> {
        self.reports.iter().map(|r| r.edges.clone()).collect()
    }

    /// Largest degree present, 0 for an empty census.
    pub fn max_degree(&self) -> usize {
        self.degree_histogram
            .keys()
            .next_back()
            .copied()
            .unwrap_or(0)
    }
}

pub fn max_degree(census: &DoubleCircuitCensus) -> usize {
    census.max_degree()
}

/// The definitional predicate on a plain rank function.
fn is_double_circuit_by(ctx: &BicircularContext, d: &EdgeSet) -> bool {
    let r = ctx.rank_unchecked(d);
    r + 2 == d.len() && d.iter().all(|e| ctx.rank_unchecked(&d.without(e)) == r)
}

/// Scans all `2^m` subsets. Refuses graphs with more than `limit` edges.
pub fn enumerate_oracle(
    ctx: &BicircularContext,
    name: &str,
    limit: usize,
) -> Result<DoubleCircuitCensus> {
    let m = ctx.ground_size();
    if m > limit || m >= 63 {
        return Err(Error::Resource(format!(
            "the subset oracle is limited to {limit} edges but the graph has {m}; \
             use the structural enumerator"
        )));
    }
    let found: Vec<EdgeSet> = (0u64..1u64 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let d = EdgeSet::from_bits(mask);
            is_double_circuit_by(ctx, &d).then_some(d)
        })
        .collect();
    census_from(ctx, name, found, Enumerator::Oracle)
}

/// Builds the census from graph structure; no limit on `m`.
pub fn enumerate_structural(ctx: &BicircularContext, name: &str) -> Result<DoubleCircuitCensus> {
    let g = ctx.graph();
    let cycles = cycles(g);
    let circuits = grow(g, &cycles);
    let mut found = grow(g, &circuits);
    found.extend(disjoint_pairs(g, &circuits));
    census_from(ctx, name, found, Enumerator::Structural)
}

fn census_from(
    ctx: &BicircularContext,
    name: &str,
    mut found: Vec<EdgeSet>,
    enumerator: Enumerator,
) -> Result<DoubleCircuitCensus> {
    found.par_sort_unstable();
    found.dedup();
    let reports = found
        .par_iter()
        .map(|d| analyze_unchecked(ctx, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(DoubleCircuitCensus::new(
        name.to_string(),
        reports,
        enumerator,
    ))
}

pub fn enumerate(
    ctx: &BicircularContext,
    name: &str,
    enumerator: Enumerator,
) -> Result<DoubleCircuitCensus> {
    match enumerator {
        Enumerator::Oracle => enumerate_oracle(ctx, name, ORACLE_LIMIT),
        Enumerator::Structural => enumerate_structural(ctx, name),
    }
}

/// Circuit partition of `d` plus its distinguished vertices and whether the
/// subdivision classes of `G[D]` respect the partition.
pub fn analyze(ctx: &BicircularContext, d: &EdgeSet) -> Result<DoubleCircuitReport> {
    ctx.graph().check(d)?;
    if !is_double_circuit_by(ctx, d) {
        return Err(Error::Precondition(format!(
            "{d:?} is not a double circuit"
        )));
    }
    analyze_unchecked(ctx, d)
}

fn analyze_unchecked(ctx: &BicircularContext, d: &EdgeSet) -> Result<DoubleCircuitReport> {
    let g = ctx.graph();
    let mut report = partition_by(|s| ctx.rank_unchecked(s), d)?;
    report.distinguished_vertices = Some(g.branch_vertices(d)?);
    let contained = match g.subdivision_classes(d) {
        Ok(subdivision) => subdivision
            .iter()
            .all(|s| report.classes.iter().any(|c| s.is_subset(c))),
        Err(Error::Precondition(_)) => false,
        Err(e) => return Err(e),
    };
    report.subdivision_classes_contained = Some(contained);
    Ok(report)
}

/// Every cycle of `g` once, including loops and 2-cycles of parallel edges.
///
/// A cycle is generated from its smallest edge `e = uv` as a path from `v`
/// back to `u` that only uses edges larger than `e`.
pub fn cycles(g: &Multigraph) -> Vec<EdgeSet> {
    let mut out: Vec<EdgeSet> = (0..g.edge_count())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let (u, v) = g.endpoints(first);
            if u == v {
                found.push(EdgeSet::singleton(first));
                return found;
            }
            let mut on_path = vec![false; g.vertex_count()];
            on_path[v] = true;
            let mut path = EdgeSet::singleton(first);
            close_cycles(g, first, u, v, &mut on_path, &mut path, &mut found);
            found
        })
        .collect();
    out.par_sort_unstable();
    out
}

fn close_cycles(
    g: &Multigraph,
    first: usize,
    target: usize,
    cur: usize,
    on_path: &mut [bool],
    path: &mut EdgeSet,
    found: &mut Vec<EdgeSet>,
) {
    for &e in g.incident(cur) {
        if e <= first || path.contains(e) || g.is_loop(e) {
            continue;
        }
        let w = g.other_end(e, cur);
        if w == target {
            found.push(path.with(e));
        } else if !on_path[w] {
            on_path[w] = true;
            path.insert(e);
            close_cycles(g, first, target, w, on_path, path, found);
            path.remove(e);
            on_path[w] = false;
        }
    }
}

fn vertex_set(g: &Multigraph, s: &EdgeSet) -> EdgeSet {
    let mut vs = EdgeSet::new();
    for e in s {
        let (u, v) = g.endpoints(e);
        vs.insert(u);
        vs.insert(v);
    }
    vs
}

/// All sets `B ∪ H` for `B` in `bases` and `H` a handle on `B`, deduplicated.
fn grow(g: &Multigraph, bases: &[EdgeSet]) -> Vec<EdgeSet> {
    let sets: HashSet<EdgeSet> = bases
        .par_iter()
        .fold(HashSet::new, |mut acc, base| {
            for_each_handle(g, base, |grown| {
                acc.insert(grown);
            });
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return reduce_into(b, a);
            }
            a.extend(b);
            a
        });
    let mut out: Vec<EdgeSet> = sets.into_iter().collect();
    out.par_sort_unstable();
    out
}

fn reduce_into(mut big: HashSet<EdgeSet>, small: HashSet<EdgeSet>) -> HashSet<EdgeSet> {
    big.extend(small);
    big
}

fn for_each_handle(g: &Multigraph, base: &EdgeSet, mut emit: impl FnMut(EdgeSet)) {
    let base_vertices = vertex_set(g, base);
    let mut state = HandleSearch {
        g,
        base_vertices: &base_vertices,
        on_path: vec![false; g.vertex_count()],
        current: base.clone(),
    };
    for u in base_vertices.iter() {
        state.extend(u, &mut emit);
    }
}

struct HandleSearch<'a> {
    g: &'a Multigraph,
    base_vertices: &'a EdgeSet,
    /// Path vertices outside the base.
    on_path: Vec<bool>,
    /// Base edges plus the path so far.
    current: EdgeSet,
}

impl HandleSearch<'_> {
    fn extend(&mut self, cur: usize, emit: &mut impl FnMut(EdgeSet)) {
        let g = self.g;
        for &e in g.incident(cur) {
            if self.current.contains(e) {
                continue;
            }
            let w = g.other_end(e, cur);
            if self.base_vertices.contains(w) || self.on_path[w] {
                emit(self.current.with(e));
            } else {
                self.on_path[w] = true;
                self.current.insert(e);
                self.extend(w, emit);
                self.current.remove(e);
                self.on_path[w] = false;
            }
        }
    }
}

/// Unions of two vertex-disjoint circuits.
fn disjoint_pairs(g: &Multigraph, circuits: &[EdgeSet]) -> Vec<EdgeSet> {
    let vertex_sets: Vec<EdgeSet> = circuits.par_iter().map(|c| vertex_set(g, c)).collect();
    (0..circuits.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let vertex_sets = &vertex_sets;
            (i + 1..circuits.len())
                .filter(move |&j| vertex_sets[i].is_disjoint(&vertex_sets[j]))
                .map(move |j| circuits[i].union(&circuits[j]))
        })
        .collect()
}

/// All circuits of `B(G)`, from the same handle search.
pub fn circuits(g: &Multigraph) -> Vec<EdgeSet> {
    grow(g, &cycles(g))
}
