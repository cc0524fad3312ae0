//! Covers built from richer pieces than matchings: ℓ-bounded covers by
//! edge-disjoint matchings, 2-matching covers, 2-star-packing covers and
//! path-packing covers.

use crate::cover::{self, MatchingDecomposition, Outcome, StableSetCertificate};
use crate::error::{Error, Result};
use crate::factor::{lk_factor, minimalize_above, FactorSpec};
use crate::graph::{Edge, Graph, LBounds, Vertex, VertexSet};
use crate::matching::{perfect_2_matching, TwoMatching, TwoMatchingComponent, TwoMatchingOutcome};

/// Splits `f` into k matchings. Requires every degree ≤ k and no edge
/// between two vertices of degree k, which is what makes k colours enough
/// even when the maximum degree is k.
///
/// Edges avoiding degree-k vertices are coloured first (that subgraph has
/// maximum degree < k, so Misra–Gries with k colours works). The remaining
/// edges are coloured from their degree-k endpoint: its neighbours all have
/// degree < k and therefore always have a free colour, which is all the
/// fan argument needs.
pub fn fournier_edge_color(f: &[Edge], k: usize) -> Result<Vec<Vec<Edge>>> {
    let n = f.iter().map(|e| e.0.max(e.1) + 1).max().unwrap_or(0);
    let mut deg = vec![0usize; n];
    let mut edges: Vec<Edge> = Vec::with_capacity(f.len());
    for &e in f {
        if e.0 == e.1 {
            return Err(Error::contract(format!("self-loop at {}", e.0)));
        }
        edges.push(Edge::new(e.0, e.1));
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::contract("edge listed twice"));
    }
    for e in &edges {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    if let Some(v) = (0..n).find(|&v| deg[v] > k) {
        return Err(Error::contract(format!(
            "vertex {v} has degree {} > k = {k}",
            deg[v]
        )));
    }
    if let Some(e) = edges.iter().find(|e| deg[e.0] == k && deg[e.1] == k) {
        return Err(Error::contract(format!(
            "edge {e} joins two vertices of degree k = {k}; k colours may not suffice"
        )));
    }

    let mut col = Coloring::new(n, k);
    let (hub_free, hub_edges): (Vec<Edge>, Vec<Edge>) =
        edges.iter().partition(|e| deg[e.0] < k && deg[e.1] < k);
    for e in hub_free {
        col.color_edge(e.0, e.1);
    }
    for e in hub_edges {
        if deg[e.0] == k {
            col.color_edge(e.0, e.1);
        } else {
            col.color_edge(e.1, e.0);
        }
    }

    let mut classes = vec![Vec::new(); k];
    for e in &edges {
        classes[col.color_of(e.0, e.1).expect("every edge coloured")].push(*e);
    }
    Ok(classes)
}

/// `at[v][c]`: the neighbour joined to `v` by the edge of colour `c`.
struct Coloring {
    k: usize,
    at: Vec<Vec<Option<Vertex>>>,
}

impl Coloring {
    fn new(n: usize, k: usize) -> Coloring {
        Coloring {
            k,
            at: vec![vec![None; k]; n],
        }
    }

    fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free(&self, v: Vertex) -> usize {
        (0..self.k)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex below its colour budget has a free colour")
    }

    fn color_of(&self, u: Vertex, v: Vertex) -> Option<usize> {
        (0..self.k).find(|&c| self.at[u][c] == Some(v))
    }

    fn set(&mut self, u: Vertex, v: Vertex, c: usize) {
        self.at[u][c] = Some(v);
        self.at[v][c] = Some(u);
    }

    fn unset(&mut self, u: Vertex, v: Vertex, c: usize) {
        self.at[u][c] = None;
        self.at[v][c] = None;
    }

    /// Misra–Gries step for the uncoloured edge `uv`, building the fan at `u`.
    fn color_edge(&mut self, u: Vertex, v: Vertex) {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = (0..self.k).find_map(|c| {
                let y = self.at[u][c]?;
                (self.is_free(last, c) && !fan.contains(&y)).then_some(y)
            });
            match next {
                Some(y) => fan.push(y),
                None => break,
            }
        }
        let c = self.free(u);
        let d = self.free(*fan.last().unwrap());

        // invert the cd-path starting at u (it starts with a d-edge)
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        while let Some(y) = self.at[x][want] {
            path.push((x, y, want));
            x = y;
            want = if want == c { d } else { c };
        }
        for &(a, b, cc) in &path {
            self.unset(a, b, cc);
        }
        for &(a, b, cc) in &path {
            self.set(a, b, if cc == c { d } else { c });
        }

        // longest prefix that is still a fan; stop at the first vertex with d free
        let mut w = 0;
        loop {
            if self.is_free(fan[w], d) {
                break;
            }
            w += 1;
            let prev = fan[w - 1];
            let cw = self.color_of(u, fan[w]).expect("fan edges are coloured");
            assert!(
                self.is_free(prev, cw),
                "fan prefix broken before a d-free vertex"
            );
        }
        // rotate: each fan edge takes the colour of the next one
        for i in 0..w {
            let ci = self.color_of(u, fan[i + 1]).unwrap();
            self.unset(u, fan[i + 1], ci);
            self.set(u, fan[i], ci);
        }
        self.set(u, fan[w], d);
    }
}

/// k pairwise edge-disjoint matchings, covering each `v` at least `ℓ(v)`
/// times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LBoundedCover {
    pub k: usize,
    pub matchings: Vec<Vec<Edge>>,
    /// Number of matchings covering each vertex.
    pub multiplicity: Vec<usize>,
}

/// ℓ-bounded matching-k-cover for `ℓ(v) < k`: a minimal `(ℓ,k)`-factor is
/// k-edge-colourable, and its colour classes are the matchings. `None` when
/// no `(ℓ,k)`-factor exists. Vertices with `ℓ(v) = 0` need not be covered.
pub fn l_bounded_cover(g: &Graph, l: &LBounds, k: usize) -> Result<Option<LBoundedCover>> {
    if k < 2 {
        return Err(Error::contract("l_bounded_cover needs k >= 2"));
    }
    l.check(g)?;
    if let Some(v) = (0..g.n()).find(|&v| l.get(v) >= k) {
        return Err(Error::contract(format!(
            "l({v}) = {} is not below k = {k}; the case l = k is NP-hard and unsupported",
            l.get(v)
        )));
    }
    let Some(f) = lk_factor(g, &FactorSpec::new(l.clone(), k))? else {
        return Ok(None);
    };
    let f = minimalize_above(g, &f, l);
    let matchings = fournier_edge_color(&f, k)?;
    let mut multiplicity = vec![0; g.n()];
    for e in &f {
        multiplicity[e.0] += 1;
        multiplicity[e.1] += 1;
    }
    Ok(Some(LBoundedCover {
        k,
        matchings,
        multiplicity,
    }))
}

impl LBoundedCover {
    /// Checks edge-disjointness, the matching property, membership in `g`,
    /// the multiplicities and the lower bounds.
    pub fn verify(&self, g: &Graph, l: &LBounds) -> bool {
        let mut all: Vec<Edge> = self.matchings.iter().flatten().copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        let mut mult = vec![0usize; g.n()];
        for e in &all {
            mult[e.0] += 1;
            mult[e.1] += 1;
        }
        self.matchings.len() == self.k
            && all.len() == total
            && all.iter().all(|e| g.has_edge(e.0, e.1))
            && self
                .matchings
                .iter()
                .all(|m| crate::matching::is_matching(m))
            && mult == self.multiplicity
            && (0..g.n()).all(|v| mult[v] >= l.get(v))
    }
}

/// Turns k 2-matchings covering `V` into k matchings covering `V`, using
/// only edges of the given members:
///
/// * an even circuit becomes one of its perfect matchings;
/// * an odd circuit with a vertex `v` covered by another member becomes a
///   perfect matching of the circuit minus `v`;
/// * an odd circuit no other member touches becomes a near-perfect
///   matching, and its last edge moves to another member (where both ends
///   are free).
pub fn minimalize_2matching_cover(
    g: &Graph,
    members: &[TwoMatching],
    k: usize,
) -> Result<MatchingDecomposition> {
    if k < 2 || members.len() > k {
        return Err(Error::contract(format!(
            "{} members for k = {k}; need k >= 2 and at most k members",
            members.len()
        )));
    }
    for m in members {
        m.validate(g)?;
    }
    // cover_count[v]: number of members touching v
    let mut cover_count = vec![0usize; g.n()];
    for m in members {
        for v in m.covered().iter() {
            cover_count[v] += 1;
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| cover_count[v] == 0) {
        return Err(Error::contract(format!(
            "vertex {v} is not covered by any member"
        )));
    }

    let mut out: Vec<Vec<Edge>> = vec![Vec::new(); k];
    // (member, circuit) still to process
    let mut pending: Vec<(usize, Vec<Vertex>)> = Vec::new();
    for (i, m) in members.iter().enumerate() {
        for comp in &m.components {
            match comp {
                TwoMatchingComponent::Edge(e) => out[i].push(*e),
                TwoMatchingComponent::Circuit(c) => pending.push((i, c.clone())),
            }
        }
    }
    for (i, c) in pending {
        let len = c.len();
        if len % 2 == 0 {
            out[i].extend((0..len).step_by(2).map(|j| Edge::new(c[j], c[j + 1])));
            continue;
        }
        if let Some(pos) = (0..len).find(|&j| cover_count[c[j]] >= 2) {
            // rotate so the dropped vertex is last
            let r: Vec<Vertex> = (1..=len).map(|j| c[(pos + j) % len]).collect();
            out[i].extend((0..len - 1).step_by(2).map(|j| Edge::new(r[j], r[j + 1])));
            cover_count[c[pos]] -= 1;
            continue;
        }
        out[i].extend((0..len - 1).step_by(2).map(|j| Edge::new(c[j], c[j + 1])));
        let other = (i + 1) % k;
        out[other].push(Edge::new(c[len - 1], c[0]));
        cover_count[c[len - 1]] += 1;
        cover_count[c[0]] += 1;
    }
    MatchingDecomposition::new(k, out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HKKind {
    TwoMatching,
    TwoStarPacking,
    PathPacking,
}

/// k members of one covering family that together touch every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HKCover {
    pub kind: HKKind,
    pub k: usize,
    /// Edge sets of the members; members may be empty.
    pub members: Vec<Vec<Edge>>,
    pub covered: VertexSet,
}

impl HKCover {
    fn new(kind: HKKind, k: usize, mut members: Vec<Vec<Edge>>) -> HKCover {
        members.resize(k, Vec::new());
        for m in &mut members {
            m.sort_unstable();
        }
        let covered = members.iter().flatten().flat_map(|e| [e.0, e.1]).collect();
        HKCover {
            kind,
            k,
            members,
            covered,
        }
    }

    /// Checks each member against its kind and that the members cover `V`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.members.len() == self.k
            && self.members.iter().all(|m| member_ok(g, self.kind, m))
            && self.covered.len() == g.n()
            && self.covered
                == self
                    .members
                    .iter()
                    .flatten()
                    .flat_map(|e| [e.0, e.1])
                    .collect()
    }
}

fn member_ok(g: &Graph, kind: HKKind, m: &[Edge]) -> bool {
    if m.iter().any(|e| !g.has_edge(e.0, e.1)) {
        return false;
    }
    let mut sorted = m.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let sub = g.edge_subgraph(
        &m.iter()
            .map(|e| g.edge_id(e.0, e.1).unwrap())
            .collect::<Vec<_>>(),
    );
    for comp in sub.components() {
        let edges: usize = comp.iter().map(|&v| sub.degree(v)).sum::<usize>() / 2;
        let max_deg = comp.iter().map(|&v| sub.degree(v)).max().unwrap_or(0);
        let vertices = comp.len();
        let ok = match kind {
            // a single edge or a circuit
            HKKind::TwoMatching => {
                edges == 0
                    || (vertices == 2 && edges == 1)
                    || (vertices >= 3 && edges == vertices && max_deg == 2)
            }
            // a star with at most two edges
            HKKind::TwoStarPacking => edges < vertices && edges <= 2,
            HKKind::PathPacking => edges < vertices && max_deg <= 2,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// 2-matching-k-cover. For k = 1 this is a perfect 2-matching; for k ≥ 2
/// matchings already suffice, so the members returned are matchings.
pub fn two_matching_k_cover(g: &Graph, k: usize) -> Result<Outcome<HKCover>> {
    match k {
        0 => Err(Error::contract("k must be positive")),
        1 => Ok(match perfect_2_matching(g)? {
            TwoMatchingOutcome::Perfect(t) => {
                Outcome::Found(HKCover::new(HKKind::TwoMatching, 1, vec![t.edges()]))
            }
            TwoMatchingOutcome::Obstructed(c) => Outcome::Obstructed(c),
        }),
        _ => Ok(match full_cover(g, k)? {
            Ok(d) => Outcome::Found(HKCover::new(HKKind::TwoMatching, k, d.matchings)),
            Err(c) => Outcome::Obstructed(c),
        }),
    }
}

fn full_cover(
    g: &Graph,
    k: usize,
) -> Result<std::result::Result<MatchingDecomposition, StableSetCertificate>> {
    let r = cover::solve(g, k, &VertexSet::full(g.n()))?;
    match r.witness {
        None => Ok(Ok(r.decomposition)),
        Some(c) => Ok(Err(c)),
    }
}

/// Cover by k 2-star packings, which exists exactly when a matching-2k-cover
/// does. Each star of the minimal 2k-cover is cut into pairs of edges (in
/// leaf order), and piece i goes to member i.
pub fn two_star_k_cover(g: &Graph, k: usize) -> Result<Outcome<HKCover>> {
    if k == 0 {
        return Err(Error::contract("k must be positive"));
    }
    let d = match full_cover(g, 2 * k)? {
        Ok(d) => d,
        Err(c) => return Ok(Outcome::Obstructed(c)),
    };
    let stars = d.edges();
    let mut deg = vec![0usize; g.n()];
    for e in &stars {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    let mut leaves: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    let mut members = vec![Vec::new(); k];
    for e in &stars {
        if deg[e.0] >= 2 {
            leaves[e.0].push(e.1);
        } else if deg[e.1] >= 2 {
            leaves[e.1].push(e.0);
        } else {
            members[0].push(*e);
        }
    }
    for (centre, ls) in leaves.iter_mut().enumerate() {
        ls.sort_unstable();
        for (i, pair) in ls.chunks(2).enumerate() {
            members[i].extend(pair.iter().map(|&x| Edge::new(centre, x)));
        }
    }
    Ok(Outcome::Found(HKCover::new(
        HKKind::TwoStarPacking,
        k,
        members,
    )))
}

/// Cover by k path packings: every 2-star packing is one, and the
/// feasibility condition is the same.
pub fn path_packing_k_cover(g: &Graph, k: usize) -> Result<Outcome<HKCover>> {
    Ok(match two_star_k_cover(g, k)? {
        Outcome::Found(c) => Outcome::Found(HKCover {
            kind: HKKind::PathPacking,
            ..c
        }),
        other => other,
    })
}
