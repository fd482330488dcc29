//! Named graphs and seeded random graphs.
//!
//! Random graphs are driven by ChaCha8 (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64`, and bounded integers are drawn by rejection
//! from `next_u64`. Both steps are fixed algorithms, so a seed pins the exact
//! edge list across toolchains and dependency upgrades.

use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Version tag of the random-graph procedure. Bump on any change that alters
/// the graphs produced for a given seed.
pub const RANDOM_ALGORITHM: &str = "chacha8-rejection-v1";

pub const DEFAULT_MAX_TRIES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Petersen,
    Dodecahedron,
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Bouquet {
        n: usize,
    },
    Banana {
        n: usize,
    },
    /// Two vertices joined by three internally disjoint paths.
    Theta {
        a: usize,
        b: usize,
        c: usize,
    },
    /// Cycles of lengths `p` and `q` joined by a path of length `r`.
    Handcuff {
        p: usize,
        q: usize,
        r: usize,
    },
    Random {
        n: usize,
        m: usize,
        seed: u64,
        min_girth: Option<usize>,
        max_tries: usize,
    },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Petersen => f.write_str("petersen"),
            GeneratorSpec::Dodecahedron => f.write_str("dodecahedron"),
            GeneratorSpec::Complete { n } => write!(f, "complete({n})"),
            GeneratorSpec::Cycle { n } => write!(f, "cycle({n})"),
            GeneratorSpec::Bouquet { n } => write!(f, "bouquet({n})"),
            GeneratorSpec::Banana { n } => write!(f, "banana({n})"),
            GeneratorSpec::Theta { a, b, c } => write!(f, "theta({a},{b},{c})"),
            GeneratorSpec::Handcuff { p, q, r } => write!(f, "handcuff({p},{q},{r})"),
            GeneratorSpec::Random {
                n,
                m,
                seed,
                min_girth,
                ..
            } => match min_girth {
                Some(g) => write!(f, "random(n={n},m={m},seed={seed},min_girth={g})"),
                None => write!(f, "random(n={n},m={m},seed={seed})"),
            },
        }
    }
}

impl GeneratorSpec {
    /// Builds a spec from a family name and its integer parameters, as
    /// given on the command line.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Generator(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "petersen" => {
                want(0)?;
                GeneratorSpec::Petersen
            }
            "dodecahedron" => {
                want(0)?;
                GeneratorSpec::Dodecahedron
            }
            "complete" | "cycle" | "bouquet" | "banana" => {
                want(1)?;
                let n = params[0];
                match name {
                    "complete" => GeneratorSpec::Complete { n },
                    "cycle" => GeneratorSpec::Cycle { n },
                    "bouquet" => GeneratorSpec::Bouquet { n },
                    _ => GeneratorSpec::Banana { n },
                }
            }
            "theta" => {
                want(3)?;
                GeneratorSpec::Theta {
                    a: params[0],
                    b: params[1],
                    c: params[2],
                }
            }
            "handcuff" => {
                want(3)?;
                GeneratorSpec::Handcuff {
                    p: params[0],
                    q: params[1],
                    r: params[2],
                }
            }
            other => return Err(Error::Generator(format!("unknown graph family {other:?}"))),
        };
        Ok(spec)
    }
}

/// Builds the graph a spec describes.
pub fn named(spec: &GeneratorSpec) -> Result<Multigraph> {
    match *spec {
        GeneratorSpec::Petersen => Ok(petersen()),
        GeneratorSpec::Dodecahedron => Ok(dodecahedron()),
        GeneratorSpec::Complete { n } => Ok(complete(n)),
        GeneratorSpec::Cycle { n } => {
            if n == 0 {
                return Err(Error::Generator("cycle length must be at least 1".into()));
            }
            let mut b = Builder::new(1);
            b.cycle_through(0, n);
            Ok(b.finish())
        }
        GeneratorSpec::Bouquet { n } => Ok(Multigraph::new(1, vec![(0, 0); n])?),
        GeneratorSpec::Banana { n } => Ok(Multigraph::new(2, vec![(0, 1); n])?),
        GeneratorSpec::Theta { a, b, c } => {
            if a.min(b).min(c) == 0 {
                return Err(Error::Generator(
                    "theta path lengths must be at least 1".into(),
                ));
            }
            let mut g = Builder::new(2);
            for len in [a, b, c] {
                g.path(0, 1, len);
            }
            Ok(g.finish())
        }
        GeneratorSpec::Handcuff { p, q, r } => {
            if p == 0 || q == 0 {
                return Err(Error::Generator(
                    "handcuff cycle lengths must be at least 1".into(),
                ));
            }
            let mut g = Builder::new(1);
            g.cycle_through(0, p);
            let far = if r == 0 {
                0
            } else {
                let x = g.vertex();
                g.path(0, x, r);
                x
            };
            g.cycle_through(far, q);
            Ok(g.finish())
        }
        GeneratorSpec::Random {
            n,
            m,
            seed,
            min_girth,
            max_tries,
        } => match min_girth {
            None => random_multigraph(n, m, seed),
            Some(g) => random_with_min_girth(n, m, g, seed, max_tries),
        },
    }
}

struct Builder {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    /// A path of `len >= 1` edges from `from` to `to` through fresh vertices.
    fn path(&mut self, from: usize, to: usize, len: usize) {
        let mut prev = from;
        for _ in 1..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
        self.edges.push((prev, to));
    }

    /// A cycle of `len >= 1` edges through `at`; length 1 is a loop.
    fn cycle_through(&mut self, at: usize, len: usize) {
        self.path(at, at, len);
    }

    fn finish(self) -> Multigraph {
        Multigraph::new(self.vertex_count, self.edges).expect("builder keeps endpoints in range")
    }
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::new(10, edges).expect("static graph")
}

/// Outer 5-cycle `0..5`, a middle 10-cycle `5..15`, inner 5-cycle `15..20`.
/// Outer vertex `i` meets middle vertex `5 + 2i`; inner vertex `15 + i`
/// meets middle vertex `6 + 2i`.
pub fn dodecahedron() -> Multigraph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, 5 + 2 * i));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    for i in 0..5 {
        edges.push((6 + 2 * i, 15 + i));
    }
    for i in 0..5 {
        edges.push((15 + i, 15 + (i + 1) % 5));
    }
    Multigraph::new(20, edges).expect("static graph")
}

pub fn complete(n: usize) -> Multigraph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Multigraph::new(n, edges).expect("static graph")
}

/// Uniform integer in `0..bound` by rejection on 64-bit draws.
fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = (u64::MAX / bound) * bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// `m` edges drawn independently and uniformly from the `n(n+1)/2` unordered
/// vertex pairs, loops included.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::Generator(
            "random graphs need at least one vertex".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..m)
        .map(|_| pairs[below(&mut rng, pairs.len() as u64) as usize])
        .collect();
    Multigraph::new(n, edges)
}

/// Uniform simple graph with `n` vertices and `m` edges, rejection-sampled
/// until its girth is at least `girth`.
pub fn random_with_min_girth(
    n: usize,
    m: usize,
    girth: usize,
    seed: u64,
    max_tries: usize,
) -> Result<Multigraph> {
    if girth == 0 {
        return Err(Error::Generator("girth bound must be at least 1".into()));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if m > pairs.len() {
        return Err(Error::Generator(format!(
            "a simple graph on {n} vertices has at most {} edges, {m} requested",
            pairs.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        // partial Fisher-Yates: the first m slots become a uniform m-subset
        for i in 0..m {
            let j = i + below(&mut rng, (pairs.len() - i) as u64) as usize;
            pairs.swap(i, j);
        }
        let g = Multigraph::new(n, pairs[..m].to_vec())?;
        if g.girth().at_least(girth) {
            return Ok(g);
        }
    }
    Err(Error::GenerationExhausted {
        girth,
        tries: max_tries,
    })
}
