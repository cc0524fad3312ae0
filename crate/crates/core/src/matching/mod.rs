//! Matching engines: maximum-cardinality matching in general graphs
//! (blossom shrinking), bipartite matching with deficiency sets, perfect
//! 2-matchings through the bipartite double cover, and the weighted blossom
//! engine behind minimum-weight perfect matching.

mod bipartite;
pub(crate) mod weighted;

use std::collections::VecDeque;

pub use bipartite::{
    bipartite_max_matching, double_cover, right_neighbors, BipartiteGraph, BipartiteMatching,
};

use crate::cover::{verify_certificate, StableSetCertificate};
use crate::error::{Error, Result};
use crate::graph::{neighborhood, Edge, Graph, Vertex, VertexSet};

const NIL: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Result<Matching> {
        edges.sort_unstable();
        edges.dedup();
        if !is_matching(&edges) {
            return Err(Error::contract("edge set is not a matching"));
        }
        Ok(Matching { edges })
    }

    pub(crate) fn from_mates(mate: &[usize]) -> Matching {
        let edges = (0..mate.len())
            .filter(|&v| mate[v] != NIL && v < mate[v])
            .map(|v| Edge(v, mate[v]))
            .collect();
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.edges.len() == n
    }
}

pub fn is_matching(edges: &[Edge]) -> bool {
    let mut seen = std::collections::HashSet::new();
    edges.iter().all(|e| seen.insert(e.0) && seen.insert(e.1))
}

/// Maximum-cardinality matching by Edmonds' blossom shrinking.
///
/// Starts from a greedy matching (low-degree vertices first), then grows an
/// alternating forest from all exposed vertices at once; the first edge
/// between two trees gives an augmenting path. Searching from every root
/// together keeps the found paths short while many vertices are exposed.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NIL; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| g.degree(v));
    for &v in &order {
        if mate[v] != NIL {
            continue;
        }
        if let Some(w) = g
            .neighbors(v)
            .filter(|&w| mate[w] == NIL)
            .min_by_key(|&w| g.degree(w))
        {
            mate[v] = w;
            mate[w] = v;
        }
    }
    let mut search = BlossomSearch::new(n);
    while search.phase(g, &mut mate) > 0 {}
    Matching::from_mates(&mate)
}

/// Alternating forest state. Only vertices listed in `touched` differ from
/// the reset state, so a search costs time proportional to what it
/// explores. Even vertices are the `used` ones; `parent` and `base` follow
/// the usual blossom-shrinking conventions. `members[b]` lists the vertices
/// whose base is `b` once `b` heads a blossom (empty means just `b`).
struct BlossomSearch {
    parent: Vec<usize>,
    base: Vec<usize>,
    root: Vec<usize>,
    dead: Vec<bool>,
    members: Vec<Vec<usize>>,
    used: Vec<bool>,
    touched: Vec<usize>,
    is_touched: Vec<bool>,
    path_mark: Vec<u32>,
    blossom_mark: Vec<u32>,
    epoch: u32,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> BlossomSearch {
        BlossomSearch {
            parent: vec![NIL; n],
            base: (0..n).collect(),
            root: vec![NIL; n],
            dead: vec![false; n],
            members: vec![Vec::new(); n],
            used: vec![false; n],
            touched: Vec::new(),
            is_touched: vec![false; n],
            path_mark: vec![0; n],
            blossom_mark: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.is_touched[v] {
            self.is_touched[v] = true;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NIL;
            self.base[v] = v;
            self.root[v] = NIL;
            self.dead[v] = false;
            self.members[v].clear();
            self.used[v] = false;
            self.is_touched[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn bump(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.path_mark.iter_mut().for_each(|x| *x = 0);
            self.blossom_mark.iter_mut().for_each(|x| *x = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    fn make_even(&mut self, v: usize, root: usize) {
        self.used[v] = true;
        self.root[v] = root;
        self.touch(v);
        self.queue.push_back(v);
    }

    /// Lowest common base of two even vertices in the same tree.
    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mark = self.bump();
        loop {
            a = self.base[a];
            self.path_mark[a] = mark;
            if mate[a] == NIL {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.path_mark[b] == mark {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(
        &mut self,
        mate: &[usize],
        mut v: usize,
        b: usize,
        mut child: usize,
        mark: u32,
        bases: &mut Vec<usize>,
    ) {
        while self.base[v] != b {
            for x in [self.base[v], self.base[mate[v]]] {
                if self.blossom_mark[x] != mark {
                    self.blossom_mark[x] = mark;
                    bases.push(x);
                }
            }
            self.parent[v] = child;
            self.touch(v);
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn shrink(&mut self, mate: &[usize], v: usize, to: usize) {
        let cur = self.lca(mate, v, to);
        let mark = self.bump();
        let mut bases = Vec::new();
        self.mark_path(mate, v, cur, to, mark, &mut bases);
        self.mark_path(mate, to, cur, v, mark, &mut bases);
        let root = self.root[cur];
        let mut into = std::mem::take(&mut self.members[cur]);
        if into.is_empty() {
            into.push(cur);
        }
        for b in bases {
            let mut inner = std::mem::take(&mut self.members[b]);
            if inner.is_empty() {
                inner.push(b);
            }
            for &x in &inner {
                self.base[x] = cur;
                if !self.used[x] {
                    self.make_even(x, root);
                }
            }
            into.append(&mut inner);
        }
        self.members[cur] = into;
    }

    /// Flips the path from the exposed vertex `v` up through `parent[v]` to
    /// its root.
    fn flip(&self, mate: &mut [usize], mut v: usize) {
        while v != NIL {
            let pv = self.parent[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }

    /// One phase: grows the forest from every exposed vertex, augmenting
    /// along each edge found between two live trees and retiring both trees.
    /// Returns the number of augmentations; 0 means the matching is maximum.
    fn phase(&mut self, g: &Graph, mate: &mut [usize]) -> usize {
        self.reset();
        for (r, &m) in mate.iter().enumerate() {
            if m == NIL && g.degree(r) > 0 {
                self.make_even(r, r);
            }
        }
        let mut found = 0;
        'queue: while let Some(v) = self.queue.pop_front() {
            if self.dead[self.root[v]] {
                continue;
            }
            for &(to, _) in g.incident(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if self.is_touched[to] && self.dead[self.root[to]] {
                    continue;
                }
                if self.used[to] {
                    if self.root[to] == self.root[v] {
                        self.shrink(mate, v, to);
                        continue;
                    }
                    let (r1, r2) = (self.root[v], self.root[to]);
                    // root(v) … v – to … root(to): flip the `to` side first,
                    // then treat `to` as an exposed vertex reached from v
                    if mate[to] != NIL {
                        let o = mate[to];
                        self.flip(mate, o);
                    }
                    self.parent[to] = v;
                    mate[to] = NIL;
                    self.flip(mate, to);
                    self.dead[r1] = true;
                    self.dead[r2] = true;
                    found += 1;
                    continue 'queue;
                }
                if self.parent[to] == NIL {
                    // untouched vertices are matched: exposed ones are roots
                    let root = self.root[v];
                    self.parent[to] = v;
                    self.root[to] = root;
                    self.touch(to);
                    let next = mate[to];
                    self.make_even(next, root);
                }
            }
        }
        found
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoMatchingComponent {
    Edge(Edge),
    /// Vertices in cyclic order; length at least 3.
    Circuit(Vec<Vertex>),
}

impl TwoMatchingComponent {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            TwoMatchingComponent::Edge(e) => vec![e.0, e.1],
            TwoMatchingComponent::Circuit(c) => c.clone(),
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        match self {
            TwoMatchingComponent::Edge(e) => vec![*e],
            TwoMatchingComponent::Circuit(c) => (0..c.len())
                .map(|i| Edge::new(c[i], c[(i + 1) % c.len()]))
                .collect(),
        }
    }
}

/// Vertex-disjoint edges and circuits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoMatching {
    pub components: Vec<TwoMatchingComponent>,
}

impl TwoMatching {
    pub fn edges(&self) -> Vec<Edge> {
        self.components.iter().flat_map(|c| c.edges()).collect()
    }

    pub fn covered(&self) -> VertexSet {
        self.components.iter().flat_map(|c| c.vertices()).collect()
    }

    /// Checks the structural definition against `g`: components are edges of
    /// `g` or circuits of length ≥ 3 in `g`, pairwise vertex-disjoint.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for comp in &self.components {
            if let TwoMatchingComponent::Circuit(c) = comp {
                if c.len() < 3 {
                    return Err(Error::contract("circuit shorter than 3"));
                }
            }
            for v in comp.vertices() {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: g.n(),
                    });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::contract(format!(
                        "vertex {v} appears in two components"
                    )));
                }
            }
            if let Some(e) = comp.edges().into_iter().find(|e| !g.has_edge(e.0, e.1)) {
                return Err(Error::contract(format!("edge {e} is not in the graph")));
            }
        }
        Ok(())
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.validate(g).is_ok() && self.covered().len() == g.n()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoMatchingOutcome {
    Perfect(TwoMatching),
    /// A stable set with `|S| > |N(S)|` (certificate with `k = 1`).
    Obstructed(StableSetCertificate),
}

/// A perfect 2-matching of `g`, or a stable set `S` with `|S| > |N(S)|`.
///
/// Both come from one maximum matching of the double cover. A perfect one
/// is a permutation `v ↦ mate(v₁)`; its 2-cycles are edges and its longer
/// cycles are circuits of `g`. Otherwise the deficiency set `X` has fewer
/// right neighbours `Y` than members, and `S = X ∖ Y` is stable with
/// `N(S) ⊆ Y ∖ X`, hence `|N(S)| < |S|`.
pub fn perfect_2_matching(g: &Graph) -> Result<TwoMatchingOutcome> {
    let b = double_cover(g);
    let (m, deficient) = bipartite_max_matching(&b);
    if m.size() == g.n() {
        let sigma: Vec<Vertex> = m.mate_left.iter().map(|r| r.unwrap()).collect();
        let mut seen = vec![false; g.n()];
        let mut components = Vec::new();
        for start in 0..g.n() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v);
                v = sigma[v];
            }
            components.push(match cyc.len() {
                2 => TwoMatchingComponent::Edge(Edge::new(cyc[0], cyc[1])),
                _ => TwoMatchingComponent::Circuit(cyc),
            });
        }
        return Ok(TwoMatchingOutcome::Perfect(TwoMatching { components }));
    }

    let y = right_neighbors(&b, &deficient);
    let s: VertexSet = deficient.iter().filter(|&v| !y.contains(v)).collect();
    let cert = StableSetCertificate {
        n_of_s: neighborhood(g, &s),
        s,
        k: 1,
    };
    if !verify_certificate(g, &cert, None) {
        return Err(Error::Extraction(format!(
            "2-matching obstruction S={:?} N(S)={:?} does not verify on graph {:?}",
            cert.s.as_slice(),
            cert.n_of_s.as_slice(),
            g.edges()
        )));
    }
    Ok(TwoMatchingOutcome::Obstructed(cert))
}
