//! The bicircular matroid of a multigraph.
//!
//! An edge set is independent when every connected component of the subgraph
//! it induces contains at most one cycle, i.e. `|E_c| <= |V_c|` for each
//! component `c`. The rank of `S` is the number of touched vertices minus the
//! number of acyclic components of `G[S]`.

use smallvec::SmallVec;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Largest set `circuits_within` will scan exhaustively.
pub const CIRCUIT_SCAN_LIMIT: usize = 24;

/// `B(G)`: ground set is the edge set of `graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicircularContext {
    graph: Multigraph,
}

/// Scratch union-find with a per-root "contains a cycle" flag.
struct CycleForest {
    parent: SmallVec<[u32; 64]>,
    cyclic: SmallVec<[bool; 64]>,
    touched: SmallVec<[bool; 64]>,
}

enum Join {
    Merged,
    /// The edge closed a cycle in a component that was acyclic.
    FirstCycle,
    /// The edge created a second independent cycle in its component.
    Dependent,
}

impl CycleForest {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            cyclic: SmallVec::from_elem(false, n),
            touched: SmallVec::from_elem(false, n),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn add(&mut self, u: usize, v: usize) -> Join {
        self.touched[u] = true;
        self.touched[v] = true;
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            if self.cyclic[ru] {
                Join::Dependent
            } else {
                self.cyclic[ru] = true;
                Join::FirstCycle
            }
        } else {
            let both = self.cyclic[ru] && self.cyclic[rv];
            let either = self.cyclic[ru] || self.cyclic[rv];
            self.parent[rv] = ru as u32;
            self.cyclic[ru] = either;
            if both {
                Join::Dependent
            } else {
                Join::Merged
            }
        }
    }
}

impl BicircularContext {
    pub fn new(graph: Multigraph) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn ground_size(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn is_independent(&self, s: &EdgeSet) -> Result<bool> {
        self.graph.check(s)?;
        Ok(self.is_independent_unchecked(s))
    }

    pub(crate) fn is_independent_unchecked(&self, s: &EdgeSet) -> bool {
        let mut forest = CycleForest::new(self.graph.vertex_count());
        for e in s {
            let (u, v) = self.graph.endpoints(e);
            if let Join::Dependent = forest.add(u, v) {
                return false;
            }
        }
        true
    }

    pub fn rank(&self, s: &EdgeSet) -> Result<usize> {
        self.graph.check(s)?;
        Ok(self.rank_unchecked(s))
    }

    pub(crate) fn rank_unchecked(&self, s: &EdgeSet) -> usize {
        let n = self.graph.vertex_count();
        let mut forest = CycleForest::new(n);
        for e in s {
            let (u, v) = self.graph.endpoints(e);
            forest.add(u, v);
        }
        let mut rank = 0;
        for v in 0..n {
            if forest.touched[v] {
                rank += 1;
                if forest.parent[v] as usize == v && !forest.cyclic[v] {
                    rank -= 1;
                }
            }
        }
        rank
    }

    pub fn is_circuit(&self, s: &EdgeSet) -> Result<bool> {
        self.graph.check(s)?;
        Ok(self.is_circuit_unchecked(s))
    }

    pub(crate) fn is_circuit_unchecked(&self, s: &EdgeSet) -> bool {
        !self.is_independent_unchecked(s)
            && s.iter()
                .all(|e| self.is_independent_unchecked(&s.without(e)))
    }

    /// Every circuit contained in `d`, in lexicographic order.
    ///
    /// Scans subsets of `d` in increasing mask order; a subset with a
    /// dependent maximal proper subset is dependent without a rank query.
    pub fn circuits_within(&self, d: &EdgeSet) -> Result<Vec<EdgeSet>> {
        self.graph.check(d)?;
        let members = d.to_vec();
        if members.len() > CIRCUIT_SCAN_LIMIT {
            return Err(Error::Resource(format!(
                "circuit scan over {} elements exceeds the limit of {CIRCUIT_SCAN_LIMIT}",
                members.len()
            )));
        }
        let total = 1usize << members.len();
        let mut dependent = vec![false; total];
        let mut circuits = Vec::new();
        for mask in 1..total {
            let mut bits = mask;
            let mut inherits = false;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                if dependent[mask ^ b] {
                    inherits = true;
                    break;
                }
                bits ^= b;
            }
            if inherits {
                dependent[mask] = true;
                continue;
            }
            let set = subset_of(&members, mask);
            if !self.is_independent_unchecked(&set) {
                dependent[mask] = true;
                circuits.push(set);
            }
        }
        circuits.sort();
        Ok(circuits)
    }
}

fn subset_of(members: &[usize], mask: usize) -> EdgeSet {
    let mut s = EdgeSet::new();
    let mut bits = mask;
    while bits != 0 {
        s.insert(members[bits.trailing_zeros() as usize]);
        bits &= bits - 1;
    }
    s
}
