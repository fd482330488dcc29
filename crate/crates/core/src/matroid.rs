//! Matroids given by a rank oracle.
//!
//! Everything here works for any rank function: duals and minors are built by
//! composing oracles, and the coline / double-circuit machinery only ever asks
//! for ranks. Rank values are memoized per instance.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::bicircular::BicircularContext;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

/// Largest ground set the exhaustive scans (`is_uniform`, `circuits_within`)
/// will accept: `2^20` subsets.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Entries kept per memo table before it stops growing.
const MEMO_CAPACITY: usize = 1 << 20;

/// A rank function on the subsets of `{0, .., ground_size - 1}`.
pub trait RankOracle: Send + Sync {
    fn ground_size(&self) -> usize;
    fn rank(&self, s: &EdgeSet) -> usize;
}

impl RankOracle for BicircularContext {
    fn ground_size(&self) -> usize {
        BicircularContext::ground_size(self)
    }

    fn rank(&self, s: &EdgeSet) -> usize {
        self.rank_unchecked(s)
    }
}

/// `U_{r,n}`.
#[derive(Debug, Clone, Copy)]
pub struct UniformOracle {
    pub rank: usize,
    pub size: usize,
}

impl RankOracle for UniformOracle {
    fn ground_size(&self) -> usize {
        self.size
    }

    fn rank(&self, s: &EdgeSet) -> usize {
        s.len().min(self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Bicircular,
    Uniform {
        rank: usize,
        size: usize,
    },
    Dual(Box<Provenance>),
    Minor {
        of: Box<Provenance>,
        deleted: EdgeSet,
        contracted: EdgeSet,
    },
    Custom(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Bicircular => f.write_str("B(G)"),
            Provenance::Uniform { rank, size } => write!(f, "U({rank},{size})"),
            Provenance::Dual(p) => write!(f, "({p})*"),
            Provenance::Minor {
                of,
                deleted,
                contracted,
            } => write!(f, "{of} \\ {deleted:?} / {contracted:?}"),
            Provenance::Custom(name) => f.write_str(name),
        }
    }
}

struct Inner {
    oracle: Box<dyn RankOracle>,
    provenance: Provenance,
    memo: Mutex<HashMap<EdgeSet, usize>>,
}

/// A matroid on `{0, .., n - 1}`. Cheap to clone; clones share the memo.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.ground_size())
            .field("provenance", &self.inner.provenance)
            .finish()
    }
}

struct DualOracle {
    primal: Matroid,
    full_rank: usize,
}

impl RankOracle for DualOracle {
    fn ground_size(&self) -> usize {
        self.primal.ground_size()
    }

    fn rank(&self, s: &EdgeSet) -> usize {
        let n = self.primal.ground_size();
        let complement = EdgeSet::full(n).difference(s);
        s.len() + self.primal.rank_unchecked(&complement) - self.full_rank
    }
}

struct MinorOracle {
    parent: Matroid,
    /// Parent index of each minor element.
    elements: Vec<usize>,
    contracted: EdgeSet,
    contracted_rank: usize,
}

impl RankOracle for MinorOracle {
    fn ground_size(&self) -> usize {
        self.elements.len()
    }

    fn rank(&self, s: &EdgeSet) -> usize {
        let mut lifted = self.contracted.clone();
        for e in s {
            lifted.insert(self.elements[e]);
        }
        self.parent.rank_unchecked(&lifted) - self.contracted_rank
    }
}

/// A double circuit together with its circuit partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCircuitReport {
    pub edges: EdgeSet,
    /// Classes `D_i`, ordered by smallest element; `D \ D_i` are the circuits.
    pub classes: Vec<EdgeSet>,
    pub degree: usize,
    pub singular_count: usize,
    pub multiple_count: usize,
    pub positive: bool,
    /// Vertices of degree >= 3 in `G[D]`, for graph-backed matroids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguished_vertices: Option<Vec<usize>>,
    /// Whether every subdivision class of `G[D]` sits inside one class.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdivision_classes_contained: Option<bool>,
}

impl DoubleCircuitReport {
    pub(crate) fn from_classes(edges: EdgeSet, mut classes: Vec<EdgeSet>) -> Self {
        classes.sort();
        let singular_count = classes.iter().filter(|c| c.len() == 1).count();
        let multiple_count = classes.len() - singular_count;
        Self {
            edges,
            degree: classes.len(),
            classes,
            singular_count,
            multiple_count,
            positive: singular_count > multiple_count,
            distinguished_vertices: None,
            subdivision_classes_contained: None,
        }
    }

    /// The circuits `D \ D_i`, one per class.
    pub fn circuits(&self) -> Vec<EdgeSet> {
        let mut out: Vec<EdgeSet> = self
            .classes
            .iter()
            .map(|c| self.edges.difference(c))
            .collect();
        out.sort();
        out
    }
}

/// A coline together with its copoint partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColineReport {
    pub coline: EdgeSet,
    /// Classes `H_i`, ordered by smallest element; `L ∪ H_i` are the copoints.
    pub classes: Vec<EdgeSet>,
    pub degree: usize,
    pub simple_count: usize,
    pub multiple_count: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Simplicity {
    pub simple: bool,
    pub cosimple: bool,
}

impl Matroid {
    pub fn from_oracle(oracle: impl RankOracle + 'static, provenance: Provenance) -> Self {
        Self {
            inner: Arc::new(Inner {
                oracle: Box::new(oracle),
                provenance,
                memo: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn from_bicircular(ctx: BicircularContext) -> Self {
        Self::from_oracle(ctx, Provenance::Bicircular)
    }

    pub fn uniform(rank: usize, size: usize) -> Self {
        Self::from_oracle(
            UniformOracle { rank, size },
            Provenance::Uniform { rank, size },
        )
    }

    pub fn ground_size(&self) -> usize {
        self.inner.oracle.ground_size()
    }

    pub fn ground_set(&self) -> EdgeSet {
        EdgeSet::full(self.ground_size())
    }

    pub fn provenance(&self) -> &Provenance {
        &self.inner.provenance
    }

    fn check(&self, s: &EdgeSet) -> Result<()> {
        if s.bound() > self.ground_size() {
            return Err(Error::EdgeOutOfRange {
                edge: s.bound() - 1,
                edge_count: self.ground_size(),
            });
        }
        Ok(())
    }

    pub fn rank(&self, s: &EdgeSet) -> Result<usize> {
        self.check(s)?;
        Ok(self.rank_unchecked(s))
    }

    pub(crate) fn rank_unchecked(&self, s: &EdgeSet) -> usize {
        if let Some(&r) = self.inner.memo.lock().unwrap().get(s) {
            return r;
        }
        let r = self.inner.oracle.rank(s);
        let mut memo = self.inner.memo.lock().unwrap();
        if memo.len() < MEMO_CAPACITY {
            memo.insert(s.clone(), r);
        }
        r
    }

    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(&self.ground_set())
    }

    pub fn is_independent(&self, s: &EdgeSet) -> Result<bool> {
        Ok(self.rank(s)? == s.len())
    }

    pub fn is_circuit(&self, s: &EdgeSet) -> Result<bool> {
        let r = self.rank(s)?;
        Ok(!s.is_empty()
            && r + 1 == s.len()
            && s.iter().all(|e| self.rank_unchecked(&s.without(e)) == r))
    }

    /// `r*(A) = |A| + r(E \ A) - r(E)`.
    pub fn dual(&self) -> Matroid {
        Matroid::from_oracle(
            DualOracle {
                primal: self.clone(),
                full_rank: self.full_rank(),
            },
            Provenance::Dual(Box::new(self.inner.provenance.clone())),
        )
    }

    /// `M \ deleted / contracted`, relabeled so that the surviving elements
    /// keep their relative order. The two sets must be disjoint.
    pub fn minor(&self, deleted: &EdgeSet, contracted: &EdgeSet) -> Result<Matroid> {
        self.check(deleted)?;
        self.check(contracted)?;
        if !deleted.is_disjoint(contracted) {
            return Err(Error::Precondition(
                "deleted and contracted sets overlap".into(),
            ));
        }
        let removed = deleted.union(contracted);
        let elements: Vec<usize> = (0..self.ground_size())
            .filter(|e| !removed.contains(*e))
            .collect();
        Ok(Matroid::from_oracle(
            MinorOracle {
                parent: self.clone(),
                elements,
                contracted: contracted.clone(),
                contracted_rank: self.rank_unchecked(contracted),
            },
            Provenance::Minor {
                of: Box::new(self.inner.provenance.clone()),
                deleted: deleted.clone(),
                contracted: contracted.clone(),
            },
        ))
    }

    pub fn delete(&self, t: &EdgeSet) -> Result<Matroid> {
        self.minor(t, &EdgeSet::new())
    }

    pub fn contract(&self, t: &EdgeSet) -> Result<Matroid> {
        self.minor(&EdgeSet::new(), t)
    }

    /// All `e` with `r(A + e) = r(A)`.
    pub fn closure(&self, a: &EdgeSet) -> Result<EdgeSet> {
        let r = self.rank(a)?;
        Ok(self.closure_with_rank(a, r))
    }

    fn closure_with_rank(&self, a: &EdgeSet, r: usize) -> EdgeSet {
        let mut out = a.clone();
        for e in 0..self.ground_size() {
            if !a.contains(e) && self.rank_unchecked(&a.with(e)) == r {
                out.insert(e);
            }
        }
        out
    }

    /// `r(D) = |D| - 2` and no element of `D` lowers the rank when removed.
    pub fn is_double_circuit(&self, d: &EdgeSet) -> Result<bool> {
        let r = self.rank(d)?;
        Ok(r + 2 == d.len() && d.iter().all(|e| self.rank_unchecked(&d.without(e)) == r))
    }

    /// Circuits contained in the double circuit `d`, one for each element
    /// removed. Sorted and deduplicated.
    pub fn circuits_of_double_circuit(&self, d: &EdgeSet) -> Result<Vec<EdgeSet>> {
        if !self.is_double_circuit(d)? {
            return Err(Error::Precondition(format!(
                "{d:?} is not a double circuit"
            )));
        }
        let mut circuits: Vec<EdgeSet> = d
            .iter()
            .map(|e| unique_circuit(|s| self.rank_unchecked(s), &d.without(e)))
            .collect();
        circuits.sort();
        circuits.dedup();
        Ok(circuits)
    }

    /// Every circuit contained in `s`, by exhaustive scan.
    pub fn circuits_within(&self, s: &EdgeSet) -> Result<Vec<EdgeSet>> {
        self.check(s)?;
        if s.len() > EXHAUSTIVE_LIMIT {
            return Err(Error::Resource(format!(
                "circuit scan over {} elements exceeds the limit of {EXHAUSTIVE_LIMIT}",
                s.len()
            )));
        }
        let mut out = Vec::new();
        for sub in s.subsets() {
            if self.is_circuit(&sub)? {
                out.push(sub);
            }
        }
        out.sort();
        Ok(out)
    }

    /// The circuit partition of a double circuit.
    pub fn circuit_partition(&self, d: &EdgeSet) -> Result<DoubleCircuitReport> {
        if !self.is_double_circuit(d)? {
            return Err(Error::Precondition(format!(
                "{d:?} is not a double circuit"
            )));
        }
        partition_by(|s| self.rank_unchecked(s), d)
    }

    /// A flat of rank `r(E) - 2`.
    pub fn is_coline(&self, l: &EdgeSet) -> Result<bool> {
        let r = self.rank(l)?;
        Ok(r + 2 == self.full_rank() && self.closure_with_rank(l, r) == *l)
    }

    /// Groups `E \ L` by the copoint `cl(L + e)` each element spans.
    pub fn copoint_partition(&self, l: &EdgeSet) -> Result<ColineReport> {
        if !self.is_coline(l)? {
            return Err(Error::Precondition(format!("{l:?} is not a coline")));
        }
        let r = self.rank_unchecked(l);
        let mut by_copoint: BTreeMap<EdgeSet, EdgeSet> = BTreeMap::new();
        for e in self.ground_set().difference(l).iter() {
            let copoint = self.closure_with_rank(&l.with(e), r + 1);
            by_copoint.entry(copoint).or_default().insert(e);
        }
        let mut classes: Vec<EdgeSet> = by_copoint.into_values().collect();
        classes.sort();
        let simple_count = classes.iter().filter(|c| c.len() == 1).count();
        let multiple_count = classes.len() - simple_count;
        Ok(ColineReport {
            coline: l.clone(),
            degree: classes.len(),
            classes,
            simple_count,
            multiple_count,
            positive: simple_count > multiple_count,
        })
    }

    /// Contracts a coline and keeps one element per copoint class, giving a
    /// `U_{2,k}` for a coline of degree `k`.
    pub fn coline_minor(&self, report: &ColineReport) -> Result<Matroid> {
        let keep: EdgeSet = report.classes.iter().filter_map(|c| c.first()).collect();
        let deleted = self
            .ground_set()
            .difference(&report.coline)
            .difference(&keep);
        self.minor(&deleted, &report.coline)
    }

    /// `Some((r, n))` when the matroid is `U_{r,n}`.
    pub fn is_uniform(&self) -> Result<Option<(usize, usize)>> {
        let n = self.ground_size();
        if n > EXHAUSTIVE_LIMIT {
            return Err(Error::Resource(format!(
                "uniformity scan over {n} elements exceeds the limit of {EXHAUSTIVE_LIMIT}"
            )));
        }
        let r = self.full_rank();
        let all_independent = k_subsets(n, r).all(|s| self.rank_unchecked(&s) == r);
        let all_dependent = r == n || k_subsets(n, r + 1).all(|s| self.rank_unchecked(&s) <= r);
        Ok((all_independent && all_dependent).then_some((r, n)))
    }

    /// Simple: no loops and no parallel pairs. Cosimple: the dual is simple.
    pub fn simplicity(&self) -> Simplicity {
        Simplicity {
            simple: self.is_simple(),
            cosimple: self.dual().is_simple(),
        }
    }

    fn is_simple(&self) -> bool {
        let n = self.ground_size();
        (0..n).all(|e| self.rank_unchecked(&EdgeSet::singleton(e)) == 1)
            && (0..n).all(|a| {
                (a + 1..n).all(|b| self.rank_unchecked(&[a, b].into_iter().collect()) == 2)
            })
    }
}

/// The unique circuit inside a set of nullity one: its non-coloops.
pub(crate) fn unique_circuit(rank: impl Fn(&EdgeSet) -> usize, s: &EdgeSet) -> EdgeSet {
    let r = rank(s);
    s.iter().filter(|&f| rank(&s.without(f)) == r).collect()
}

/// Circuit partition of a known double circuit under `rank`.
///
/// For `e ∈ D`, `D - e` has nullity one, so it holds exactly one circuit
/// `C`, and the class of `e` is `D \ C`. Classes computed from different
/// seeds must be disjoint; anything else is reported as an internal
/// inconsistency.
pub(crate) fn partition_by(
    rank: impl Fn(&EdgeSet) -> usize,
    d: &EdgeSet,
) -> Result<DoubleCircuitReport> {
    let mut covered = EdgeSet::new();
    let mut classes = Vec::new();
    for e in d {
        if covered.contains(e) {
            continue;
        }
        let circuit = unique_circuit(&rank, &d.without(e));
        let class = d.difference(&circuit);
        if !class.is_disjoint(&covered) || !class.contains(e) {
            return Err(Error::Inconsistent(format!(
                "class {class:?} of element {e} overlaps earlier classes of {d:?}"
            )));
        }
        covered = covered.union(&class);
        classes.push(class);
    }
    if classes.len() < 2 {
        return Err(Error::Inconsistent(format!(
            "double circuit {d:?} has a single class"
        )));
    }
    Ok(DoubleCircuitReport::from_classes(d.clone(), classes))
}

/// The `k`-subsets of `{0, .., n - 1}` for `n < 64`, via Gosper's hack.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = EdgeSet> {
    assert!(n < 64);
    let limit = 1u64 << n;
    let mut next = if k <= n { Some((1u64 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let candidate = (((r ^ cur) >> 2) / c) | r;
            (candidate < limit).then_some(candidate)
        };
        Some(EdgeSet::from_bits(cur))
    })
}
