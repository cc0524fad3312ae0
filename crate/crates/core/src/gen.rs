//! Seeded graph families for benchmarks and randomized tests. Every
//! generator is a pure function of its arguments (ChaCha8 streams).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `n` vertices, `5n` edges, no isolated vertex.
    Random,
    /// About `√n` hubs on a path, every other vertex a leaf of one hub; the
    /// least k is about `√n`, so the k loop runs many rounds.
    StarBlowup,
    Path,
    /// Rows of `⌊√n⌋` vertices, truncated to `n` vertices.
    Grid,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Random,
        Family::StarBlowup,
        Family::Path,
        Family::Grid,
    ];

    pub fn generate(self, n: usize, seed: u64) -> Graph {
        match self {
            Family::Random => random_graph(n, 5 * n, seed),
            Family::StarBlowup => star_blowup(n),
            Family::Path => path(n),
            Family::Grid => grid(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Random => "random",
            Family::StarBlowup => "star-blowup",
            Family::Path => "path",
            Family::Grid => "grid",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::contract(format!("unknown family {s:?}")))
    }
}

/// `n` vertices and `min(m, C(n,2))` distinct edges. Each vertex first gets
/// one edge to a random partner (so none is isolated when `n ≥ 2`), then
/// uniform random pairs fill up to `m`.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = n * n.saturating_sub(1) / 2;
    let m = m.min(cap);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut touched = vec![false; n];
    let mut add = |u: usize, v: usize, edges: &mut Vec<(usize, usize)>, touched: &mut [bool]| {
        let key = (u.min(v), u.max(v));
        if u != v && seen.insert(key) {
            edges.push(key);
            touched[u] = true;
            touched[v] = true;
        }
    };
    if n >= 2 {
        for v in 0..n {
            if edges.len() < m && !touched[v] {
                let mut w = rng.gen_range(0..n - 1);
                if w >= v {
                    w += 1;
                }
                add(v, w, &mut edges, &mut touched);
            }
        }
    }
    while edges.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        add(u, v, &mut edges, &mut touched);
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
}

pub fn grid(n: usize) -> Graph {
    let w = ((n as f64).sqrt() as usize).max(1);
    let mut edges = Vec::new();
    for v in 0..n {
        if v % w + 1 < w && v + 1 < n {
            edges.push((v, v + 1));
        }
        if v + w < n {
            edges.push((v, v + w));
        }
    }
    Graph::from_edges(n, edges).expect("grid edges are valid")
}

pub fn star_blowup(n: usize) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let hubs = ((n as f64).sqrt().ceil() as usize).clamp(1, n / 2);
    let mut edges: Vec<(usize, usize)> = (1..hubs).map(|h| (h - 1, h)).collect();
    edges.extend((hubs..n).map(|v| ((v - hubs) % hubs, v)));
    Graph::from_edges(n, edges).expect("star-blowup edges are valid")
}
