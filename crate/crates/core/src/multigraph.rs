//! Labeled multigraphs with loops and parallel edges.
//!
//! Degrees follow the usual convention: a loop contributes 2 to the degree of
//! its vertex. A loop is a cycle of length 1 and two parallel edges form a
//! cycle of length 2.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Edge indices incident to each vertex, ascending. A loop is listed once.
    incidence: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Multigraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Multigraph::new(raw.vertex_count, raw.edges)
    }
}

impl From<Multigraph> for RawGraph {
    fn from(g: Multigraph) -> Self {
        RawGraph {
            vertex_count: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// The subgraph `G[S]`: the edges of `S` and the vertices they touch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphView {
    pub edges: EdgeSet,
    /// Touched vertices, ascending.
    pub vertices: Vec<usize>,
    degrees: Vec<usize>,
}

impl SubgraphView {
    /// Degree of `v` in the subgraph; 0 for untouched vertices.
    pub fn degree(&self, v: usize) -> usize {
        self.degrees.get(v).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.iter().map(|&v| (v, self.degrees[v]))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices.iter().map(|&v| self.degrees[v]).min()
    }
}

/// A connected component of `G[S]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: EdgeSet,
}

impl Component {
    /// Cyclomatic excess `|E| - |V|`. Negative exactly for trees.
    pub fn excess(&self) -> isize {
        self.edges.len() as isize - self.vertices.len() as isize
    }
}

/// Length of a shortest cycle. Orders finite values below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// Partition of an edge set into maximal paths whose interior vertices have
/// degree 2; each class is one edge of the graph obtained by suppressing the
/// degree-2 vertices.
pub type SubdivisionClasses = Vec<EdgeSet>;

/// Minimal union-find over vertex ids.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        edge: i,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            incidence[u].push(i);
            if v != u {
                incidence[v].push(i);
            }
        }
        Ok(Self {
            vertex_count,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// The endpoint of `e` opposite to `v` (`v` itself for a loop).
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn check(&self, s: &EdgeSet) -> Result<()> {
        if s.bound() > self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                edge: s.bound() - 1,
                edge_count: self.edges.len(),
            });
        }
        Ok(())
    }

    /// The graph with the edges renumbered: new edge `i` is old edge `order[i]`.
    pub fn relabel_edges(&self, order: &[usize]) -> Result<Self> {
        Self::new(
            self.vertex_count,
            order.iter().map(|&e| self.edges[e]).collect(),
        )
    }

    /// `G[S]` as a standalone graph on the same vertex set.
    pub fn restrict(&self, s: &EdgeSet) -> Self {
        Self::new(self.vertex_count, s.iter().map(|e| self.edges[e]).collect())
            .expect("endpoints already validated")
    }

    pub fn induced(&self, s: &EdgeSet) -> Result<SubgraphView> {
        self.check(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: &EdgeSet) -> SubgraphView {
        let mut degrees = vec![0; self.vertex_count];
        for e in s {
            let (u, v) = self.edges[e];
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let vertices = (0..self.vertex_count).filter(|&v| degrees[v] > 0).collect();
        SubgraphView {
            edges: s.clone(),
            vertices,
            degrees,
        }
    }

    /// Connected components of `G[S]`, ordered by smallest edge index.
    pub fn components(&self, s: &EdgeSet) -> Result<Vec<Component>> {
        self.check(s)?;
        Ok(self.components_unchecked(s))
    }

    pub(crate) fn components_unchecked(&self, s: &EdgeSet) -> Vec<Component> {
        let mut dsu = Dsu::new(self.vertex_count);
        for e in s {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        // Roots are visited in order of first edge, which gives the required
        // ordering by smallest edge index.
        let mut slot = vec![usize::MAX; self.vertex_count];
        let mut out: Vec<Component> = Vec::new();
        for e in s {
            let (u, v) = self.edges[e];
            let root = dsu.find(u);
            if slot[root] == usize::MAX {
                slot[root] = out.len();
                out.push(Component {
                    vertices: Vec::new(),
                    edges: EdgeSet::new(),
                });
            }
            let c = &mut out[slot[root]];
            c.edges.insert(e);
            c.vertices.push(u);
            c.vertices.push(v);
        }
        for c in &mut out {
            c.vertices.sort_unstable();
            c.vertices.dedup();
        }
        out
    }

    /// Shortest cycle length, with loops as 1-cycles and parallel pairs as
    /// 2-cycles.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.vertex_count];
        let mut via = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        for root in 0..self.vertex_count {
            dist.fill(usize::MAX);
            via.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // any cycle closed from here has length >= 2 * dist[u]
                if 2 * dist[u] >= best {
                    break;
                }
                for &e in &self.incidence[u] {
                    if e == via[u] {
                        continue;
                    }
                    let w = self.other_end(e, u);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn has_leaves(&self, s: &EdgeSet) -> Result<bool> {
        let view = self.induced(s)?;
        let leafy = view.degrees().any(|(_, d)| d == 1);
        Ok(leafy)
    }

    /// Vertices of degree at least 3 in `G[S]`, ascending.
    pub fn branch_vertices(&self, s: &EdgeSet) -> Result<Vec<usize>> {
        let view = self.induced(s)?;
        Ok(view
            .degrees()
            .filter(|&(_, d)| d >= 3)
            .map(|(v, _)| v)
            .collect())
    }

    /// Splits `S` into maximal paths between branch vertices.
    ///
    /// Requires `G[S]` to be leafless with a branch vertex in every component;
    /// a component that is a bare cycle has no such decomposition.
    pub fn subdivision_classes(&self, s: &EdgeSet) -> Result<SubdivisionClasses> {
        let view = self.induced(s)?;
        if let Some((v, _)) = view.degrees().find(|&(_, d)| d == 1) {
            return Err(Error::Precondition(format!(
                "vertex {v} is a leaf of the induced subgraph"
            )));
        }
        for c in self.components_unchecked(s) {
            if c.vertices.iter().all(|&v| view.degree(v) == 2) {
                return Err(Error::Precondition(format!(
                    "component containing edge {} is a cycle with no branch vertex",
                    c.edges.first().unwrap_or_default()
                )));
            }
        }

        let mut assigned = EdgeSet::new();
        let mut classes = Vec::new();
        for &b in view.vertices.iter().filter(|&&v| view.degree(v) >= 3) {
            for &start in &self.incidence[b] {
                if !s.contains(start) || assigned.contains(start) {
                    continue;
                }
                let mut class = EdgeSet::singleton(start);
                let mut prev = start;
                let mut cur = self.other_end(start, b);
                while view.degree(cur) == 2 {
                    let next = self.incidence[cur]
                        .iter()
                        .copied()
                        .find(|&e| e != prev && s.contains(e))
                        .expect("degree-2 vertex has a second edge");
                    class.insert(next);
                    prev = next;
                    cur = self.other_end(next, cur);
                }
                assigned = assigned.union(&class);
                classes.push(class);
            }
        }
        classes.sort();
        Ok(classes)
    }
}
