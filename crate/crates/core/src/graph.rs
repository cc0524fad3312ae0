//! Simple undirected graphs on dense vertex ids, plus the vertex sets,
//! edge weights and per-vertex lower bounds that the solvers take as input.
//!
//! Edges keep their input order (after dropping duplicates). Several
//! procedures scan edges "in input order", so that order is part of a
//! graph's identity for reproducible output; [`Graph::canonical`] gives the
//! order-free form.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// An undirected edge, stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        debug_assert!(self.touches(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    // (neighbour, edge id), sorted by neighbour
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Repeated edges are dropped (first
    /// occurrence wins), self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            let e = Edge::new(u, v);
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Ok(Graph::build(n, edges))
    }

    fn build(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (id, &Edge(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::build(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    /// `(neighbour, edge id)` pairs at `v`, sorted by neighbour.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        (0..self.n).find(|&v| self.adj[v].is_empty())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Same graph with edges sorted; two graphs are equal as graphs iff
    /// their canonical forms have equal `n` and edge lists.
    pub fn canonical(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph::build(self.n, edges)
    }

    /// Edge-list text: an `n` header line, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }

    /// Subgraph on the same vertex set keeping only `ids`.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Graph {
        Graph::build(self.n, ids.iter().map(|&id| self.edges[id]).collect())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// A set of vertex ids, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet((0..mask.len()).filter(|&v| mask[v]).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> VertexSet {
        a.into_iter().collect()
    }
}

/// `N(S)`: vertices outside `s` adjacent to some member of `s`.
pub fn neighborhood(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = Vec::new();
    for v in s.iter() {
        out.extend(g.neighbors(v).filter(|&u| !s.contains(u)));
    }
    out.into_iter().collect()
}

pub fn is_stable(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).all(|u| !s.contains(u)))
}

/// The line graph of `h` together with the star cliques `δ(v)`.
#[derive(Clone, Debug)]
pub struct LineGraph {
    /// Node `i` stands for edge `i` of the source graph.
    pub graph: Graph,
    /// One clique per non-isolated source vertex, in vertex order.
    pub cliques: Vec<VertexSet>,
}

pub fn line_graph(h: &Graph) -> LineGraph {
    let mut pairs = Vec::new();
    let mut cliques = Vec::new();
    for v in 0..h.n() {
        let ids: Vec<EdgeId> = h.incident(v).iter().map(|&(_, id)| id).collect();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                pairs.push((a, b));
            }
        }
        if !ids.is_empty() {
            cliques.push(ids.into_iter().collect());
        }
    }
    // distinct edges of a simple graph share at most one endpoint, so no
    // pair is produced twice
    let graph = Graph::build(
        h.m(),
        pairs.into_iter().map(|(a, b)| Edge::new(a, b)).collect(),
    );
    LineGraph { graph, cliques }
}

/// Nonnegative exact edge weights, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap(Vec<BigRational>);

impl WeightMap {
    pub fn new(g: &Graph, weights: Vec<BigRational>) -> Result<WeightMap> {
        if weights.len() != g.m() {
            return Err(Error::contract(format!(
                "weight map has {} entries for {} edges",
                weights.len(),
                g.m()
            )));
        }
        if let Some(id) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::contract(format!(
                "edge {} has negative weight {}",
                g.edge(id),
                weights[id]
            )));
        }
        Ok(WeightMap(weights))
    }

    pub fn from_integers(g: &Graph, weights: &[i64]) -> Result<WeightMap> {
        WeightMap::new(
            g,
            weights
                .iter()
                .map(|&w| BigRational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    pub fn uniform(g: &Graph, w: BigRational) -> Result<WeightMap> {
        WeightMap::new(g, vec![w; g.m()])
    }

    pub fn unit(g: &Graph) -> WeightMap {
        WeightMap(vec![BigRational::from_integer(1.into()); g.m()])
    }

    pub fn zero(g: &Graph) -> WeightMap {
        WeightMap(vec![BigRational::zero(); g.m()])
    }

    pub fn get(&self, id: EdgeId) -> &BigRational {
        &self.0[id]
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.0
    }

    /// Total weight of a set of edges of `g`.
    pub fn total(&self, g: &Graph, edges: &[Edge]) -> Result<BigRational> {
        let mut sum = BigRational::zero();
        for e in edges {
            let id = g
                .edge_id(e.0, e.1)
                .ok_or_else(|| Error::contract(format!("edge {e} is not in the graph")))?;
            sum += &self.0[id];
        }
        Ok(sum)
    }
}

/// Per-vertex lower bounds `ℓ(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LBounds(Vec<usize>);

impl LBounds {
    pub fn new(bounds: Vec<usize>) -> LBounds {
        LBounds(bounds)
    }

    pub fn uniform(n: usize, l: usize) -> LBounds {
        LBounds(vec![l; n])
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.n() {
            return Err(Error::contract(format!(
                "{} lower bounds for {} vertices",
                self.0.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex id, found {tok:?}"),
    })
}

/// Parses the edge-list format: an optional `n` header on the first content
/// line, then `u v` lines. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut pairs = Vec::new();
    for (idx, (line, tokens)) in content_lines(text).enumerate() {
        match tokens.as_slice() {
            [n] if idx == 0 => declared = Some(parse_id(n, line)?),
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                pairs.push((u, v, line));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    let max_id = pairs
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = match declared {
        Some(n) => {
            if let Some(&(u, v, line)) = pairs.iter().find(|&&(u, v, _)| u.max(v) >= n) {
                return Err(Error::Parse {
                    line,
                    message: format!("edge {u} {v} exceeds declared vertex count {n}"),
                });
            }
            n
        }
        None => max_id,
    };
    Graph::from_edges(n, pairs.into_iter().map(|(u, v, _)| (u, v)))
}

/// Parses `p/q`, an integer, or a decimal like `2.75`, exactly.
pub fn parse_rational(tok: &str) -> Option<BigRational> {
    if tok.contains('/') {
        return BigRational::from_str(tok).ok();
    }
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = if digits.is_empty() {
        BigInt::zero()
    } else {
        BigInt::from_str(&digits).ok()?
    };
    let denom = num::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(numer, denom);
    Some(if neg { -r } else { r })
}

/// Parses `u v w` lines into a weight map for `g`. Every edge of `g` must
/// receive exactly one nonnegative weight.
pub fn parse_weights(text: &str, g: &Graph) -> Result<WeightMap> {
    let mut weights: Vec<Option<BigRational>> = vec![None; g.m()];
    for (line, tokens) in content_lines(text) {
        let [u, v, w] = tokens.as_slice() else {
            return Err(Error::Parse {
                line,
                message: "expected `u v w`".into(),
            });
        };
        let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
        let w = parse_rational(w).ok_or_else(|| Error::Parse {
            line,
            message: format!("bad weight {w:?}"),
        })?;
        if w.is_negative() {
            return Err(Error::Parse {
                line,
                message: format!("negative weight {w} (only nonnegative weights are supported)"),
            });
        }
        let id = g.edge_id(u, v).ok_or_else(|| Error::Parse {
            line,
            message: format!("{u} {v} is not an edge of the graph"),
        })?;
        if weights[id].replace(w).is_some() {
            return Err(Error::Parse {
                line,
                message: format!("second weight for edge {u} {v}"),
            });
        }
    }
    if let Some(id) = weights.iter().position(Option::is_none) {
        return Err(Error::Parse {
            line: 0,
            message: format!("edge {} has no weight", g.edge(id)),
        });
    }
    WeightMap::new(g, weights.into_iter().map(Option::unwrap).collect())
}

/// Parses a vertex subset: one `v` per line.
pub fn parse_subset(text: &str, n: usize) -> Result<VertexSet> {
    let mut out = Vec::new();
    for (line, tokens) in content_lines(text) {
        let [v] = tokens.as_slice() else {
            return Err(Error::Parse {
                line,
                message: "expected a single vertex id".into(),
            });
        };
        let v = parse_id(v, line)?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        out.push(v);
    }
    Ok(out.into_iter().collect())
}

/// Parses lower bounds: `v l` lines, or a bare `v` meaning `l = 1`.
/// Vertices not listed get bound 0.
pub fn parse_lbounds(text: &str, n: usize) -> Result<LBounds> {
    let mut bounds = vec![0; n];
    for (line, tokens) in content_lines(text) {
        let (v, l) = match tokens.as_slice() {
            [v] => (parse_id(v, line)?, 1),
            [v, l] => (parse_id(v, line)?, parse_id(l, line)?),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: "expected `v` or `v l`".into(),
                })
            }
        };
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        bounds[v] = l;
    }
    Ok(LBounds(bounds))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        graph(
            leaves + 1,
            &(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>(),
        )
    }

    pub fn cycle(n: usize) -> Graph {
        graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        graph(n, &e)
    }

    #[test]
    fn parses_header_and_edges() {
        let g = parse_graph("3\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[Edge(0, 1), Edge(1, 2)]);
    }

    #[test]
    fn duplicate_edges_are_dropped() {
        let g = parse_graph("2\n0 1\n0 1").unwrap();
        assert_eq!(g.m(), 1);
        let g = parse_graph("2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn self_loop_is_rejected_with_line() {
        assert_eq!(
            parse_graph("1\n0 0").unwrap_err(),
            Error::SelfLoop { line: 2, vertex: 0 }
        );
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_graph("3\n0 1\n# comment\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
        let err = parse_graph("0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_graph("2\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn headerless_input_and_comments() {
        let g = parse_graph("# triangle\n0 1 # first\n1 2\n\n2 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        let g = parse_graph("").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        let g = parse_graph("5\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
    }

    #[test]
    fn neighborhood_examples() {
        let s = star(3);
        assert_eq!(
            neighborhood(&s, &VertexSet::from([1, 2, 3])),
            VertexSet::from([0])
        );
        assert!(neighborhood(&s, &VertexSet::new()).is_empty());
        let c5 = cycle(5);
        assert_eq!(
            neighborhood(&c5, &VertexSet::from([0, 2])),
            VertexSet::from([1, 3, 4])
        );
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&star(3), &VertexSet::from([1, 2, 3])));
        assert!(!is_stable(&graph(2, &[(0, 1)]), &VertexSet::from([0, 1])));
        assert!(is_stable(&cycle(5), &VertexSet::from([0, 2])));
    }

    #[test]
    fn line_graph_of_p3() {
        let lg = line_graph(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!(lg.graph.n(), 2);
        assert_eq!(lg.graph.edges(), &[Edge(0, 1)]);
        assert_eq!(
            lg.cliques,
            vec![
                VertexSet::from([0]),
                VertexSet::from([0, 1]),
                VertexSet::from([1])
            ]
        );
    }

    #[test]
    fn line_graph_of_triangle_and_2k2() {
        let lg = line_graph(&cycle(3));
        assert_eq!((lg.graph.n(), lg.graph.m()), (3, 3));
        assert_eq!(lg.cliques.len(), 3);
        assert!(lg.cliques.iter().all(|c| c.len() == 2));

        let lg = line_graph(&graph(5, &[(0, 1), (2, 3)]));
        assert_eq!((lg.graph.n(), lg.graph.m()), (2, 0));
        assert_eq!(lg.cliques.len(), 4);
        assert!(lg.cliques.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn rationals_parse_exactly() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(parse_rational("3/4"), Some(r(3, 4)));
        assert_eq!(parse_rational("2.75"), Some(r(11, 4)));
        assert_eq!(parse_rational("0.1"), Some(r(1, 10)));
        assert_eq!(parse_rational("7"), Some(r(7, 1)));
        assert_eq!(parse_rational("-1"), Some(r(-1, 1)));
        assert_eq!(parse_rational(".5"), Some(r(1, 2)));
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn weight_file_rules() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let w = parse_weights("0 1 1\n2 1 10\n", &g).unwrap();
        assert_eq!(w.get(1), &BigRational::from_integer(10.into()));
        assert!(parse_weights("0 1 1\n", &g).is_err());
        assert!(parse_weights("0 1 1\n1 2 -1\n", &g).is_err());
        assert!(parse_weights("0 1 1\n1 2 1\n0 1 2\n", &g).is_err());
        assert!(parse_weights("0 1 1\n0 2 1\n", &g).is_err());
    }

    #[test]
    fn subset_and_lbounds_files() {
        assert_eq!(parse_subset("0\n2\n", 3).unwrap(), VertexSet::from([0, 2]));
        assert!(parse_subset("3\n", 3).is_err());
        let l = parse_lbounds("0 2\n1\n", 3).unwrap();
        assert_eq!(l.as_slice(), &[2, 1, 0]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_graph("4\n2 3\n0 1\n1 2\n").unwrap();
        let again = parse_graph(&g.to_edge_list()).unwrap();
        assert_eq!(g, again);
        assert_eq!(g.canonical().edges(), &[Edge(0, 1), Edge(1, 2), Edge(2, 3)]);
    }
}
