//! Per-graph analysis reports and the fixed claim suite.
//!
//! Everything the command-line tool prints is assembled here so the same
//! checks can run in-process from tests. Reports contain only sorted
//! collections; timings are included only on request, so two runs with the
//! same inputs serialize to identical bytes.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bicircular::BicircularContext;
use crate::double_circuit::{self, DoubleCircuitCensus, Enumerator, ORACLE_LIMIT};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::generators::{self, GeneratorSpec};
use crate::matroid::{Matroid, Provenance, RankOracle, Simplicity};
use crate::multigraph::{Girth, Multigraph};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest edge count for the exhaustive coline/double-circuit duality check.
pub const DUALITY_LIMIT: usize = 10;

/// Double circuits up to this size also get an exhaustive circuit scan in the
/// partition-law check.
pub const EXHAUSTIVE_PARTITION_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
}

/// The offending edge set behind a failed verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub edges: EdgeSet,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<EdgeSet>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: &'static str,
    pub tag: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn new(claim: &'static str, tag: &'static str, status: Status) -> Self {
        Self {
            claim,
            tag,
            status,
            reason: None,
            witness: None,
        }
    }

    fn reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    fn from_witness(claim: &'static str, tag: &'static str, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::new(claim, tag, Status::Pass),
            Some(w) => Self {
                witness: Some(w),
                ..Self::new(claim, tag, Status::Fail)
            },
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Deliberate corruption for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Reports `r(E - first edge)` one higher than it is, which breaks
    /// monotonicity whenever `E` itself is a double circuit.
    CorruptRank,
}

struct FaultyOracle {
    ctx: BicircularContext,
    bumped: EdgeSet,
}

impl RankOracle for FaultyOracle {
    fn ground_size(&self) -> usize {
        self.ctx.ground_size()
    }

    fn rank(&self, s: &EdgeSet) -> usize {
        let r = self.ctx.rank_unchecked(s);
        if *s == self.bumped {
            r + 1
        } else {
            r
        }
    }
}

/// `B(G)`, optionally with an injected fault.
pub fn bicircular_matroid(g: &Multigraph, fault: Option<Fault>) -> Matroid {
    let ctx = BicircularContext::new(g.clone());
    match fault {
        None => Matroid::from_bicircular(ctx),
        Some(Fault::CorruptRank) => {
            let bumped = g.all_edges().without(0);
            Matroid::from_oracle(
                FaultyOracle { ctx, bumped },
                Provenance::Custom("B(G) with corrupted rank".into()),
            )
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// `None` picks the oracle for `m <= 20` and the structural search above.
    pub enumerator: Option<Enumerator>,
    pub timing: bool,
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMeta {
    pub source: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub enumerator: Enumerator,
    pub total: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub positive_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub graph: GraphMeta,
    pub girth: Girth,
    pub simplicity: Simplicity,
    pub census: CensusSummary,
    pub verdicts: Vec<Verdict>,
}

impl AnalysisReport {
    pub fn all_pass(&self) -> bool {
        !self.verdicts.iter().any(Verdict::failed)
    }
}

pub fn choose_enumerator(m: usize, requested: Option<Enumerator>) -> Enumerator {
    requested.unwrap_or(if m <= ORACLE_LIMIT {
        Enumerator::Oracle
    } else {
        Enumerator::Structural
    })
}

/// Full report for one graph.
pub fn analyze_graph(
    g: &Multigraph,
    source: &str,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let ctx = BicircularContext::new(g.clone());
    let enumerator = choose_enumerator(g.edge_count(), opts.enumerator);
    let start = Instant::now();
    let census = double_circuit::enumerate(&ctx, source, enumerator)?;
    let elapsed = start.elapsed();
    let girth = g.girth();
    let matroid = bicircular_matroid(g, opts.fault);

    let verdicts = vec![
        girth_verdict(girth, &census),
        degree_verdict(&census),
        lemma_verdict(g, &census),
        duality_verdict(&matroid),
    ];

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        graph: GraphMeta {
            source: source.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
        },
        girth,
        simplicity: matroid.simplicity(),
        census: CensusSummary {
            enumerator,
            total: census.total(),
            degree_histogram: census.degree_histogram.clone(),
            positive_count: census.positive_count,
            wall_time_ms: opts.timing.then_some(elapsed.as_millis()),
        },
        verdicts,
    })
}

fn girth_verdict(girth: Girth, census: &DoubleCircuitCensus) -> Verdict {
    const CLAIM: &str = "girth5_implies_no_positive";
    const TAG: &str = "main-theorem";
    if !girth.at_least(5) {
        return Verdict::new(CLAIM, TAG, Status::NotApplicable)
            .reason(format!("girth {girth} < 5"));
    }
    let witness = census.reports.iter().find(|r| r.positive).map(|r| Witness {
        edges: r.edges.clone(),
        classes: r.classes.clone(),
        detail: format!(
            "positive double circuit: {} singular vs {} multiple classes",
            r.singular_count, r.multiple_count
        ),
    });
    Verdict::from_witness(CLAIM, TAG, witness)
}

fn degree_verdict(census: &DoubleCircuitCensus) -> Verdict {
    let witness = census
        .reports
        .iter()
        .find(|r| r.degree > 6)
        .map(|r| Witness {
            edges: r.edges.clone(),
            classes: r.classes.clone(),
            detail: format!("degree {}", r.degree),
        });
    Verdict::from_witness("degree_bound_6", "degree-corollary", witness)
}

/// Leafless, at most four branch vertices, subdivision classes inside
/// partition classes. Returns a description of the first failure.
pub fn lemma_violation(g: &Multigraph, report: &crate::DoubleCircuitReport) -> Option<String> {
    let d = &report.edges;
    if g.has_leaves(d).unwrap_or(true) {
        return Some("induced subgraph has a leaf".into());
    }
    let branch = g.branch_vertices(d).unwrap_or_default();
    if branch.len() > 4 {
        return Some(format!("{} branch vertices", branch.len()));
    }
    if report.subdivision_classes_contained != Some(true) {
        return Some("a subdivision class meets two partition classes".into());
    }
    None
}

fn lemma_verdict(g: &Multigraph, census: &DoubleCircuitCensus) -> Verdict {
    let witness = census.reports.iter().find_map(|r| {
        lemma_violation(g, r).map(|detail| Witness {
            edges: r.edges.clone(),
            classes: r.classes.clone(),
            detail,
        })
    });
    Verdict::from_witness("lemma_structure", "structure-lemma", witness)
}

/// Compares colines of the dual with double circuits of `m` on every subset.
/// Returns the first disagreement, as the double-circuit side `E \ L`.
pub fn duality_mismatch(m: &Matroid) -> Result<Option<Witness>> {
    let n = m.ground_size();
    if n > DUALITY_LIMIT {
        return Err(Error::Resource(format!(
            "duality check over {n} elements exceeds the limit of {DUALITY_LIMIT}"
        )));
    }
    let dual = m.dual();
    let ground = m.ground_set();
    for l in ground.subsets() {
        if let Some(w) = duality_mismatch_at(m, &dual, &l)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// The duality check for a single coline candidate `L`.
pub fn duality_mismatch_at(m: &Matroid, dual: &Matroid, l: &EdgeSet) -> Result<Option<Witness>> {
    let d = m.ground_set().difference(l);
    let coline = dual.is_coline(l)?;
    let double = m.is_double_circuit(&d)?;
    if coline != double {
        return Ok(Some(Witness {
            edges: d,
            classes: Vec::new(),
            detail: format!(
                "L = {l:?}: coline of the dual is {coline}, complement is a double circuit is {double}"
            ),
        }));
    }
    if coline {
        let copoints = dual.copoint_partition(l)?.classes;
        let circuits = match m.circuit_partition(&d) {
            Ok(rep) => rep.classes,
            Err(Error::Inconsistent(msg)) => {
                return Ok(Some(Witness {
                    edges: d,
                    classes: copoints,
                    detail: msg,
                }))
            }
            Err(e) => return Err(e),
        };
        if copoints != circuits {
            return Ok(Some(Witness {
                edges: d,
                classes: circuits,
                detail: format!("copoint partition {copoints:?} differs from circuit partition"),
            }));
        }
    }
    Ok(None)
}

fn duality_verdict(m: &Matroid) -> Verdict {
    const CLAIM: &str = "duality_check";
    const TAG: &str = "coline-duality";
    if m.ground_size() > DUALITY_LIMIT {
        return Verdict::new(CLAIM, TAG, Status::Skipped).reason(format!(
            "m = {} exceeds the exhaustive limit of {DUALITY_LIMIT}",
            m.ground_size()
        ));
    }
    match duality_mismatch(m) {
        Ok(w) => Verdict::from_witness(CLAIM, TAG, w),
        Err(e) => Verdict::new(CLAIM, TAG, Status::Fail).reason(e.to_string()),
    }
}

/// Checks a census entry against the circuit-partition law: the classes
/// partition `D`, each `D \ D_i` is a circuit, and there are no other
/// circuits inside `D`.
pub fn partition_law_violation(
    ctx: &BicircularContext,
    report: &crate::DoubleCircuitReport,
) -> Option<String> {
    let d = &report.edges;
    let mut union = EdgeSet::new();
    for c in &report.classes {
        if c.is_empty() || !c.is_disjoint(&union) {
            return Some(format!("classes {:?} overlap", report.classes));
        }
        union = union.union(c);
    }
    if union != *d {
        return Some("classes do not cover D".into());
    }
    let expected = report.circuits();
    if let Some(c) = expected.iter().find(|c| !ctx.is_circuit_unchecked(c)) {
        return Some(format!("{c:?} is not a circuit"));
    }
    // every circuit in D misses some e, and D - e has nullity one
    let mut found: Vec<EdgeSet> = d
        .iter()
        .map(|e| crate::matroid::unique_circuit(|s| ctx.rank_unchecked(s), &d.without(e)))
        .collect();
    found.sort();
    found.dedup();
    if found != expected {
        return Some(format!("circuits inside D are {found:?}"));
    }
    if d.len() <= EXHAUSTIVE_PARTITION_LIMIT {
        match ctx.circuits_within(d) {
            Ok(scanned) if scanned == expected => {}
            Ok(scanned) => return Some(format!("exhaustive scan found circuits {scanned:?}")),
            Err(e) => return Some(e.to_string()),
        }
    }
    None
}

/// Whether `(r, n)` is one of the uniform matroids that occur as bicircular
/// matroids.
pub fn uniform_is_listed(r: usize, n: usize) -> bool {
    r == 1 || r == 2 || r == n || r + 1 == n || matches!((r, n), (3, 5) | (3, 6) | (4, 6))
}

/// Every multiset of at most `max_edges` edges over `vertices` vertices
/// (loops included), as graphs.
pub fn small_multigraphs(vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u..vertices).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        from: usize,
        left: usize,
        vertices: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Multigraph>,
    ) {
        out.push(Multigraph::new(vertices, chosen.clone()).expect("pairs in range"));
        if left == 0 {
            return;
        }
        for i in from..pairs.len() {
            chosen.push(pairs[i]);
            rec(pairs, i, left - 1, vertices, chosen, out);
            chosen.pop();
        }
    }
    rec(&pairs, 0, max_edges, vertices, &mut chosen, &mut out);
    out
}

/// One line of the claim suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: &'static str,
    pub tag: &'static str,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub claims: Vec<ClaimResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status == Status::Pass)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub timing: bool,
    pub fault: Option<Fault>,
}

struct Claim {
    claim: &'static str,
    tag: &'static str,
    timing: bool,
    start: Instant,
}

impl Claim {
    fn start(claim: &'static str, tag: &'static str, timing: bool) -> Self {
        Self {
            claim,
            tag,
            timing,
            start: Instant::now(),
        }
    }

    fn finish(
        self,
        outcome: std::result::Result<String, (String, Option<Witness>)>,
    ) -> ClaimResult {
        let elapsed: Duration = self.start.elapsed();
        let (status, detail, witness) = match outcome {
            Ok(detail) => (Status::Pass, detail, None),
            Err((detail, witness)) => (Status::Fail, detail, witness),
        };
        ClaimResult {
            claim: self.claim,
            tag: self.tag,
            status,
            detail,
            witness,
            wall_time_ms: self.timing.then_some(elapsed.as_millis()),
        }
    }
}

type Outcome = std::result::Result<String, (String, Option<Witness>)>;

fn fail(detail: impl Into<String>) -> Outcome {
    Err((detail.into(), None))
}

fn witness_of(r: &crate::DoubleCircuitReport, detail: impl Into<String>) -> Witness {
    Witness {
        edges: r.edges.clone(),
        classes: r.classes.clone(),
        detail: detail.into(),
    }
}

/// Named graphs with at most 15 edges, used for enumerator agreement.
pub fn named_corpus() -> Vec<(String, Multigraph)> {
    let specs = [
        GeneratorSpec::Petersen,
        GeneratorSpec::Complete { n: 4 },
        GeneratorSpec::Complete { n: 5 },
        GeneratorSpec::Cycle { n: 5 },
        GeneratorSpec::Bouquet { n: 4 },
        GeneratorSpec::Banana { n: 4 },
        GeneratorSpec::Banana { n: 6 },
        GeneratorSpec::Theta { a: 1, b: 1, c: 1 },
        GeneratorSpec::Theta { a: 2, b: 2, c: 1 },
        GeneratorSpec::Theta { a: 3, b: 2, c: 2 },
        GeneratorSpec::Handcuff { p: 1, q: 1, r: 1 },
        GeneratorSpec::Handcuff { p: 2, q: 3, r: 0 },
        GeneratorSpec::Handcuff { p: 3, q: 3, r: 2 },
    ];
    let mut out: Vec<(String, Multigraph)> = specs
        .iter()
        .map(|s| (s.to_string(), generators::named(s).expect("valid spec")))
        .collect();
    out.push((
        "two-banana3".into(),
        Multigraph::new(4, vec![(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)]).unwrap(),
    ));
    out.push((
        "k4-with-loops".into(),
        Multigraph::new(
            4,
            vec![
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 0),
                (3, 3),
            ],
        )
        .unwrap(),
    ));
    out.push((
        "prism".into(),
        Multigraph::new(
            6,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap(),
    ));
    out
}

/// Corpus for the exhaustive duality check: named graphs and seeded random
/// multigraphs, all with at most 10 edges.
pub fn duality_corpus() -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = named_corpus()
        .into_iter()
        .filter(|(_, g)| g.edge_count() <= DUALITY_LIMIT)
        .collect();
    for seed in 0..12u64 {
        let n = 2 + (seed as usize % 4);
        let m = 6 + (seed as usize % 5);
        out.push((
            format!("random(n={n},m={m},seed={seed})"),
            generators::random_multigraph(n, m, seed).expect("n >= 1"),
        ));
    }
    out
}

/// Runs the fixed claim suite.
pub fn verify_paper(opts: &SuiteOptions) -> Result<SuiteReport> {
    let t = opts.timing;
    let mut claims = Vec::new();
    let mut censuses: Vec<(Multigraph, DoubleCircuitCensus)> = Vec::new();

    // Petersen: both enumerators agree and nothing is positive
    let claim = Claim::start("petersen_no_positive", "counterexample-corollary", t);
    let petersen = generators::petersen();
    let ctx = BicircularContext::new(petersen.clone());
    let oracle = double_circuit::enumerate_oracle(&ctx, "petersen", ORACLE_LIMIT)?;
    let structural = double_circuit::enumerate_structural(&ctx, "petersen")?;
    let outcome = if oracle.reports != structural.reports {
        fail("oracle and structural censuses differ")
    } else if let Some(r) = oracle.reports.iter().find(|r| r.positive) {
        Err((
            "positive double circuit".into(),
            Some(witness_of(r, "positive")),
        ))
    } else {
        Ok(format!(
            "{} double circuits, identical under both enumerators, none positive",
            oracle.total()
        ))
    };
    claims.push(claim.finish(outcome));
    censuses.push((petersen.clone(), oracle));

    // Dodecahedron: structural only
    let claim = Claim::start("dodecahedron_no_positive", "counterexample-corollary", t);
    let dodecahedron = generators::dodecahedron();
    let census = double_circuit::enumerate_structural(
        &BicircularContext::new(dodecahedron.clone()),
        "dodecahedron",
    )?;
    let outcome = match census.reports.iter().find(|r| r.positive) {
        Some(r) => Err((
            "positive double circuit".into(),
            Some(witness_of(r, "positive")),
        )),
        None => Ok(format!("{} double circuits, none positive", census.total())),
    };
    claims.push(claim.finish(outcome));
    censuses.push((dodecahedron.clone(), census));

    // both are cosimple with corank at least two
    let claim = Claim::start("counterexamples_cosimple", "counterexample-corollary", t);
    let mut outcome = Ok(String::new());
    let mut details = Vec::new();
    for (name, g) in [("petersen", &petersen), ("dodecahedron", &dodecahedron)] {
        let m = bicircular_matroid(g, None);
        let corank = m.ground_size() - m.full_rank();
        let cosimple = m.simplicity().cosimple;
        details.push(format!("{name}: cosimple={cosimple}, corank={corank}"));
        if !cosimple || corank < 2 {
            outcome = fail(format!("{name}: cosimple={cosimple}, corank={corank}"));
        }
    }
    claims.push(claim.finish(outcome.map(|_| details.join("; "))));

    // K4 attains degree 6
    let claim = Claim::start("k4_degree_six", "degree-corollary", t);
    let k4 = generators::complete(4);
    let census = double_circuit::enumerate_oracle(
        &BicircularContext::new(k4.clone()),
        "complete(4)",
        ORACLE_LIMIT,
    )?;
    let outcome = if census.total() == 1
        && census.reports[0].degree == 6
        && census.reports[0].positive
        && census.reports[0].edges == k4.all_edges()
    {
        Ok("E(K4) is the only double circuit; degree 6, positive".into())
    } else {
        fail(format!(
            "census of K4: {} double circuits, histogram {:?}",
            census.total(),
            census.degree_histogram
        ))
    };
    claims.push(claim.finish(outcome));
    censuses.push((k4, census));

    // uniform bicircular matroids come from the known list
    let claim = Claim::start("uniform_classification", "uniform-list", t);
    claims.push(claim.finish(uniform_claim()));

    // duality between colines of the dual and double circuits
    let claim = Claim::start("coline_duality", "coline-duality", t);
    let corpus = duality_corpus();
    let mismatch = corpus
        .par_iter()
        .map(|(name, g)| {
            duality_mismatch(&bicircular_matroid(g, opts.fault)).map(|w| {
                w.map(|mut w| {
                    w.detail = format!("{name}: {}", w.detail);
                    w
                })
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    let outcome = match mismatch {
        None => Ok(format!("{} graphs, every subset checked", corpus.len())),
        Some(w) => Err(("coline/double-circuit duality violated".into(), Some(w))),
    };
    claims.push(claim.finish(outcome));

    // oracle and structural enumerators agree on the named corpus
    let claim = Claim::start("enumerator_agreement", "enumerator-agreement", t);
    let mut outcome = Ok(String::new());
    let mut compared = 0;
    for (name, g) in named_corpus() {
        let ctx = BicircularContext::new(g.clone());
        let a = double_circuit::enumerate_oracle(&ctx, &name, ORACLE_LIMIT)?;
        let b = double_circuit::enumerate_structural(&ctx, &name)?;
        compared += 1;
        if a.reports != b.reports {
            outcome = fail(format!(
                "{name}: oracle {} vs structural {}",
                a.total(),
                b.total()
            ));
            break;
        }
        censuses.push((g, a));
    }
    claims.push(claim.finish(outcome.map(|_| format!("{compared} graphs agree"))));

    // checks over every census computed above
    let claim = Claim::start("degree_bound_6", "degree-corollary", t);
    let over = censuses
        .iter()
        .flat_map(|(_, c)| c.reports.iter())
        .find(|r| r.degree > 6);
    let total: usize = censuses.iter().map(|(_, c)| c.total()).sum();
    let outcome = match over {
        None => Ok(format!("{total} double circuits, all of degree <= 6")),
        Some(r) => Err((
            "degree above 6".into(),
            Some(witness_of(r, format!("degree {}", r.degree))),
        )),
    };
    claims.push(claim.finish(outcome));

    let claim = Claim::start("lemma_structure", "structure-lemma", t);
    let violation = censuses.par_iter().find_map_any(|(g, c)| {
        c.reports
            .iter()
            .find_map(|r| lemma_violation(g, r).map(|why| witness_of(r, why)))
    });
    let outcome = match violation {
        None => Ok(format!(
            "{total} double circuits: leafless, <= 4 branch vertices, classes respected"
        )),
        Some(w) => Err(("structure violated".into(), Some(w))),
    };
    claims.push(claim.finish(outcome));

    let claim = Claim::start("circuit_partition_law", "partition-law", t);
    let violation = censuses.par_iter().find_map_any(|(g, c)| {
        let ctx = BicircularContext::new(g.clone());
        c.reports
            .par_iter()
            .find_map_any(|r| partition_law_violation(&ctx, r).map(|why| witness_of(r, why)))
    });
    let outcome = match violation {
        None => Ok(format!("{total} double circuits partition correctly")),
        Some(w) => Err(("partition law violated".into(), Some(w))),
    };
    claims.push(claim.finish(outcome));

    Ok(SuiteReport {
        schema: SCHEMA_VERSION,
        claims,
    })
}

fn uniform_claim() -> Outcome {
    for n in 1..=6 {
        let m = Matroid::from_bicircular(BicircularContext::new(
            generators::named(&GeneratorSpec::Bouquet { n }).expect("valid"),
        ));
        if m.is_uniform().ok().flatten() != Some((1, n)) {
            return fail(format!("B(bouquet({n})) is not U(1,{n})"));
        }
    }
    let k4 = Matroid::from_bicircular(BicircularContext::new(generators::complete(4)));
    if k4.is_uniform().ok().flatten() != Some((4, 6)) {
        return fail("B(K4) is not U(4,6)");
    }
    let graphs = small_multigraphs(4, 6);
    let found: Vec<(usize, usize)> = graphs
        .par_iter()
        .filter_map(|g| {
            Matroid::from_bicircular(BicircularContext::new(g.clone()))
                .is_uniform()
                .expect("at most 6 elements")
        })
        .collect();
    let mut kinds: Vec<(usize, usize)> = found.clone();
    kinds.sort();
    kinds.dedup();
    if let Some(&(r, n)) = kinds.iter().find(|&&(r, n)| !uniform_is_listed(r, n)) {
        return fail(format!("found U({r},{n}), which is not on the list"));
    }
    Ok(format!(
        "{} graphs scanned, {} uniform, kinds {:?}",
        graphs.len(),
        found.len(),
        kinds
    ))
}

/// Parameters of a random counterexample search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchParams {
    pub n: usize,
    pub m: usize,
    pub min_girth: usize,
    pub count: usize,
    pub seed: u64,
    pub max_tries: usize,
    pub enumerator: Option<Enumerator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub graph_seed: u64,
    pub girth: Girth,
    pub graph: Vec<(usize, usize)>,
    pub witness: Witness,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub params: SearchParams,
    pub random_algorithm: &'static str,
    pub graphs_checked: usize,
    pub double_circuits_checked: usize,
    pub positives_found: usize,
    pub findings: Vec<Finding>,
}

/// Seed of the `i`-th graph of a search.
pub fn graph_seed(seed: u64, i: usize) -> u64 {
    (seed << 32) | i as u64
}

/// Samples `count` graphs meeting the girth bound and reports every graph
/// that has a positive double circuit.
pub fn search(params: &SearchParams) -> Result<SearchReport> {
    let results = (0..params.count)
        .into_par_iter()
        .map(|i| {
            let seed = graph_seed(params.seed, i);
            let g = generators::random_with_min_girth(
                params.n,
                params.m,
                params.min_girth,
                seed,
                params.max_tries,
            )?;
            let ctx = BicircularContext::new(g.clone());
            let enumerator = choose_enumerator(g.edge_count(), params.enumerator);
            let census = double_circuit::enumerate(&ctx, "search", enumerator)?;
            let finding = census.reports.iter().find(|r| r.positive).map(|r| Finding {
                graph_seed: seed,
                girth: g.girth(),
                graph: g.edges().to_vec(),
                witness: witness_of(
                    r,
                    format!(
                        "positive double circuit: {} singular vs {} multiple classes",
                        r.singular_count, r.multiple_count
                    ),
                ),
            });
            Ok((census.total(), census.positive_count, finding))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        schema: SCHEMA_VERSION,
        params: params.clone(),
        random_algorithm: generators::RANDOM_ALGORITHM,
        graphs_checked: results.len(),
        double_circuits_checked: results.iter().map(|r| r.0).sum(),
        positives_found: results.iter().map(|r| r.1).sum(),
        findings: results.into_iter().filter_map(|r| r.2).collect(),
    })
}

/// Everything known about one edge set of one graph; used to re-check a
/// witness from an earlier report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub schema: u32,
    pub graph: GraphMeta,
    pub girth: Girth,
    pub edges: EdgeSet,
    pub double_circuit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<crate::DoubleCircuitReport>,
    pub verdicts: Vec<Verdict>,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        !self.verdicts.iter().any(Verdict::failed)
    }
}

pub fn analyze_witness(
    g: &Multigraph,
    source: &str,
    edges: &EdgeSet,
    fault: Option<Fault>,
) -> Result<WitnessReport> {
    g.check(edges)?;
    let ctx = BicircularContext::new(g.clone());
    let girth = g.girth();
    let report = double_circuit::analyze(&ctx, edges).ok();
    let census = DoubleCircuitCensus::from_reports(source, report.iter().cloned().collect());

    let mut verdicts = vec![
        girth_verdict(girth, &census),
        degree_verdict(&census),
        lemma_verdict(g, &census),
    ];
    let m = bicircular_matroid(g, fault);
    if g.edge_count() <= DUALITY_LIMIT {
        let l = g.all_edges().difference(edges);
        verdicts.push(Verdict::from_witness(
            "duality_check",
            "coline-duality",
            duality_mismatch_at(&m, &m.dual(), &l)?,
        ));
    }
    Ok(WitnessReport {
        schema: SCHEMA_VERSION,
        graph: GraphMeta {
            source: source.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
        },
        girth,
        edges: edges.clone(),
        double_circuit: report.is_some(),
        report,
        verdicts,
    })
}
