//! Browser bindings for the census tools. Every export takes and returns
//! strings: graphs travel in the `p`/`e` text format, results as JSON.

use bicircular::double_circuit::{self, Enumerator, ORACLE_LIMIT};
use bicircular::format::{parse_graph, write_graph};
use bicircular::generators::{self, GeneratorSpec, DEFAULT_MAX_TRIES};
use bicircular::{BicircularContext, EdgeSet, Matroid, Multigraph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest number of individual double circuits sent to the page.
pub const LISTED_LIMIT: usize = 2000;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn graph_json(g: &Multigraph, source: &str) -> Value {
    json!({
        "source": source,
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "edges": g.edges(),
        "girth": g.girth(),
        "text": write_graph(g),
    })
}

/// Builds a named or random graph. `params` is a comma- or space-separated
/// list; random graphs take `n, m, seed[, min_girth]`.
pub fn generate_graph(name: &str, params: &str) -> Result<String, String> {
    let nums: Vec<u64> = params
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| format!("{s:?} is not a non-negative integer"))
        })
        .collect::<Result<_, _>>()?;
    let spec = if name == "random" {
        match nums[..] {
            [n, m, seed] | [n, m, seed, _] => GeneratorSpec::Random {
                n: n as usize,
                m: m as usize,
                seed,
                min_girth: nums.get(3).map(|&g| g as usize),
                max_tries: DEFAULT_MAX_TRIES,
            },
            _ => return Err("random needs n, m, seed and an optional girth bound".into()),
        }
    } else {
        let params: Vec<usize> = nums.iter().map(|&x| x as usize).collect();
        GeneratorSpec::from_name(name, &params).map_err(err)?
    };
    let g = generators::named(&spec).map_err(err)?;
    Ok(graph_json(&g, &spec.to_string()).to_string())
}

/// Double-circuit census of a graph given as text.
pub fn census_of(text: &str) -> Result<String, String> {
    let g = parse_graph(text).map_err(err)?;
    let enumerator = if g.edge_count() <= ORACLE_LIMIT {
        Enumerator::Oracle
    } else {
        Enumerator::Structural
    };
    let ctx = BicircularContext::new(g.clone());
    let census = double_circuit::enumerate(&ctx, "graph", enumerator).map_err(err)?;
    let listed: Vec<&_> = census.reports.iter().take(LISTED_LIMIT).collect();
    Ok(json!({
        "graph": graph_json(&g, "input"),
        "enumerator": census.enumerator,
        "total": census.total(),
        "degree_histogram": census.degree_histogram,
        "positive_count": census.positive_count,
        "listed": listed,
    })
    .to_string())
}

/// Everything known about one edge set: rank, whether it is a circuit or a
/// double circuit, and for double circuits the partition and graph shape.
pub fn inspect_edges(text: &str, edges: &str) -> Result<String, String> {
    let g = parse_graph(text).map_err(err)?;
    let set: EdgeSet = edges
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| format!("{s:?} is not an edge index"))
        })
        .collect::<Result<_, _>>()?;
    g.check(&set).map_err(err)?;
    let ctx = BicircularContext::new(g.clone());
    let m = Matroid::from_bicircular(ctx.clone());
    let double = m.is_double_circuit(&set).map_err(err)?;
    let report = if double {
        Some(double_circuit::analyze(&ctx, &set).map_err(err)?)
    } else {
        None
    };
    let subdivision = if double {
        g.subdivision_classes(&set).ok()
    } else {
        None
    };
    Ok(json!({
        "edges": set,
        "size": set.len(),
        "rank": m.rank(&set).map_err(err)?,
        "independent": m.is_independent(&set).map_err(err)?,
        "circuit": m.is_circuit(&set).map_err(err)?,
        "double_circuit": double,
        "report": report,
        "subdivision_classes": subdivision,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(name: &str, params: &str) -> Result<String, JsValue> {
    generate_graph(name, params).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn census(text: &str) -> Result<String, JsValue> {
    census_of(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn inspect(text: &str, edges: &str) -> Result<String, JsValue> {
    inspect_edges(text, edges).map_err(|e| JsValue::from_str(&e))
}
