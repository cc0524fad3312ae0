//! Covering vertices with k matchings by alternating-path augmentation.
//!
//! The working object is an edge set `F` with `d_F(v) ≤ k` everywhere. Any
//! such `F` splits into k matchings covering the same vertices (delete edges
//! whose endpoints both have `F`-degree ≥ 2; what is left is a forest of
//! stars with at most k edges each). Vertices of `F`-degree ≤ 1 form `B`,
//! the rest form `A`, and once `F` is minimal no `F`-edge has both ends in
//! `A`. From the uncovered targets `B'` we search along non-`F` edges
//! `B → A` and `F` edges `A → B`. Reaching an `A` vertex of degree < k, a
//! `B` vertex across a non-`F` edge, or a non-target `B` vertex lets us
//! swap `F` along the walk and cover one more target. If the search gets
//! stuck, the `B` vertices it reached form a stable set `S` with
//! `N(S) = A'` (the reached `A` vertices, each of `F`-degree exactly k), so
//! `|S| − k·|N(S)| = |B'|`: no k matchings do better.

use crate::error::{Error, Result};
use crate::graph::{is_stable, neighborhood, Edge, EdgeId, Graph, Vertex, VertexSet};
use crate::matching::{self, TwoMatchingOutcome};

const NIL: usize = usize::MAX;

/// k matchings (some possibly empty) and the vertices they touch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingDecomposition {
    pub k: usize,
    pub matchings: Vec<Vec<Edge>>,
    pub covered: VertexSet,
}

impl MatchingDecomposition {
    /// Wraps `matchings`, padding with empty matchings up to `k`.
    pub fn new(k: usize, mut matchings: Vec<Vec<Edge>>) -> Result<MatchingDecomposition> {
        if matchings.len() > k {
            return Err(Error::contract(format!(
                "{} matchings given for k = {k}",
                matchings.len()
            )));
        }
        if let Some(i) = matchings.iter().position(|m| !matching::is_matching(m)) {
            return Err(Error::contract(format!("member {i} is not a matching")));
        }
        matchings.resize(k, Vec::new());
        for m in &mut matchings {
            m.sort_unstable();
        }
        let covered = matchings
            .iter()
            .flatten()
            .flat_map(|e| [e.0, e.1])
            .collect();
        Ok(MatchingDecomposition {
            k,
            matchings,
            covered,
        })
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.matchings.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// A nonempty stable set `S` with `|S| > k·|N(S)|`, proving that k
/// matchings cannot cover `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetCertificate {
    pub s: VertexSet,
    pub n_of_s: VertexSet,
    pub k: usize,
}

impl StableSetCertificate {
    /// `|S| − k·|N(S)|`.
    pub fn deficit(&self) -> i64 {
        self.s.len() as i64 - (self.k * self.n_of_s.len()) as i64
    }

    /// `⌈|S| / |N(S)|⌉`, or `None` when `N(S)` is empty.
    pub fn ratio_ceil(&self) -> Option<usize> {
        let d = self.n_of_s.len();
        (d > 0).then(|| self.s.len().div_ceil(d))
    }
}

/// A structure that was asked for, or the stable set that rules it out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Obstructed(StableSetCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub decomposition: MatchingDecomposition,
    /// Targets left uncovered; as few as any k matchings allow.
    pub uncovered: VertexSet,
    /// Present iff `uncovered` is nonempty; its deficit equals `|uncovered|`.
    pub witness: Option<StableSetCertificate>,
    /// Number of augmentations performed.
    pub augmentations: usize,
}

impl SolveResult {
    pub fn is_feasible(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Outcome of one alternating search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// `F` was changed along an alternating walk; `gained` more targets are
    /// covered (1 or 2).
    Augmented { gained: usize },
    /// No augmentation exists: `S` are the reached `B` vertices, `N(S)` the
    /// reached `A` vertices.
    Certified(StableSetCertificate),
}

/// The mutable `F` of a solve, with its degrees and the target set `U`.
#[derive(Clone, Debug)]
pub struct CoverState<'g> {
    g: &'g Graph,
    k: usize,
    in_f: Vec<bool>,
    deg: Vec<usize>,
    target: Vec<bool>,
    uncovered: Vec<Vertex>,
    augmentations: usize,
    // search scratch
    stamp: Vec<u32>,
    epoch: u32,
    from: Vec<Vertex>,
    via: Vec<EdgeId>,
}

impl<'g> CoverState<'g> {
    /// Empty `F`, targets `u`. Requires `k ≥ 2`.
    pub fn new(g: &'g Graph, k: usize, u: &VertexSet) -> Result<CoverState<'g>> {
        CoverState::with_edges(g, k, u, &[])
    }

    /// Starts from the given `F`; every vertex must have `F`-degree ≤ k.
    pub fn with_edges(g: &'g Graph, k: usize, u: &VertexSet, f: &[Edge]) -> Result<CoverState<'g>> {
        if k < 2 {
            return Err(Error::contract(
                "alternating-path covers need k >= 2; use min_k or max_matching for k = 1",
            ));
        }
        u.check_within(g.n())?;
        let mut in_f = vec![false; g.m()];
        let mut deg = vec![0; g.n()];
        for e in f {
            let id = g
                .edge_id(e.0, e.1)
                .ok_or_else(|| Error::contract(format!("edge {e} is not in the graph")))?;
            if !std::mem::replace(&mut in_f[id], true) {
                deg[e.0] += 1;
                deg[e.1] += 1;
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| deg[v] > k) {
            return Err(Error::contract(format!(
                "vertex {v} has F-degree {} > k = {k}",
                deg[v]
            )));
        }
        let target = u.to_mask(g.n());
        let uncovered = u.iter().filter(|&v| deg[v] == 0).collect();
        Ok(CoverState {
            g,
            k,
            in_f,
            deg,
            target,
            uncovered,
            augmentations: 0,
            stamp: vec![0; g.n()],
            epoch: 0,
            from: vec![NIL; g.n()],
            via: vec![NIL; g.n()],
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn augmentations(&self) -> usize {
        self.augmentations
    }

    pub fn f_degree(&self, v: Vertex) -> usize {
        self.deg[v]
    }

    /// `F` in edge-id order.
    pub fn f_edges(&self) -> Vec<Edge> {
        (0..self.g.m())
            .filter(|&id| self.in_f[id])
            .map(|id| self.g.edge(id))
            .collect()
    }

    /// `B'`: targets not covered by `F`.
    pub fn uncovered_targets(&self) -> VertexSet {
        self.uncovered
            .iter()
            .copied()
            .filter(|&v| self.deg[v] == 0)
            .collect()
    }

    /// Raises k by one, keeping `F`.
    pub fn increase_k(&mut self) {
        self.k += 1;
    }

    /// Greedily gives each uncovered target one `F` edge, preferring
    /// uncovered neighbours.
    pub fn seed_greedy(&mut self) {
        for i in 0..self.uncovered.len() {
            let v = self.uncovered[i];
            if self.deg[v] > 0 {
                continue;
            }
            let g = self.g;
            let pick = g
                .incident(v)
                .iter()
                .find(|&&(w, _)| self.deg[w] == 0)
                .or_else(|| g.incident(v).iter().find(|&&(w, _)| self.deg[w] < self.k));
            if let Some(&(_, id)) = pick {
                self.toggle(id);
            }
        }
        self.uncovered.retain(|&v| self.deg[v] == 0);
    }

    fn toggle(&mut self, id: EdgeId) {
        let e = self.g.edge(id);
        if self.in_f[id] {
            self.in_f[id] = false;
            self.deg[e.0] -= 1;
            self.deg[e.1] -= 1;
        } else {
            self.in_f[id] = true;
            self.deg[e.0] += 1;
            self.deg[e.1] += 1;
        }
    }

    fn deletable(&self, id: EdgeId) -> bool {
        let e = self.g.edge(id);
        self.in_f[id] && self.deg[e.0] >= 2 && self.deg[e.1] >= 2
    }

    /// Deletes, in edge order, every `F` edge whose endpoints both have
    /// `F`-degree ≥ 2. Degrees only drop, so one pass reaches the fixed
    /// point.
    pub fn minimalize(&mut self) {
        for id in 0..self.g.m() {
            if self.deletable(id) {
                self.toggle(id);
            }
        }
    }

    /// True iff no `F` edge joins two vertices of `A`.
    pub fn is_minimal(&self) -> bool {
        (0..self.g.m()).all(|id| !self.deletable(id))
    }

    fn minimalize_around(&mut self, v: Vertex) {
        let mut ids: Vec<EdgeId> = self
            .g
            .incident(v)
            .iter()
            .map(|&(_, id)| id)
            .filter(|&id| self.in_f[id])
            .collect();
        ids.sort_unstable();
        for id in ids {
            if self.deletable(id) {
                self.toggle(id);
            }
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// One breadth-first alternating search from all of `B'`. Requires a
    /// minimal `F` and a nonempty `B'`.
    pub fn augment_or_certify(&mut self) -> Result<Step> {
        self.uncovered.retain(|&v| self.deg[v] == 0);
        if self.uncovered.is_empty() {
            return Err(Error::contract(
                "augment_or_certify needs an uncovered target",
            ));
        }
        debug_assert!(self.is_minimal());
        let g = self.g;
        let epoch = self.next_epoch();
        let mut queue: Vec<Vertex> = self.uncovered.clone();
        let mut reached_a = Vec::new();
        for &r in &queue {
            self.stamp[r] = epoch;
            self.from[r] = NIL;
            self.via[r] = NIL;
        }
        let mut head = 0;
        while head < queue.len() {
            let s = queue[head];
            head += 1;
            for &(x, eid) in g.incident(s) {
                if self.in_f[eid] {
                    continue;
                }
                if self.deg[x] <= 1 {
                    // s–x leaves B for B: extend the walk by this edge
                    return Ok(self.apply_walk(s, Some((eid, x))));
                }
                if self.stamp[x] == epoch {
                    continue;
                }
                self.stamp[x] = epoch;
                self.from[x] = s;
                self.via[x] = eid;
                if self.deg[x] < self.k {
                    return Ok(self.apply_walk(x, None));
                }
                reached_a.push(x);
                for &(y, fe) in g.incident(x) {
                    if !self.in_f[fe] || self.stamp[y] == epoch {
                        continue;
                    }
                    debug_assert_eq!(self.deg[y], 1);
                    self.stamp[y] = epoch;
                    self.from[y] = x;
                    self.via[y] = fe;
                    if !self.target[y] {
                        return Ok(self.apply_walk(y, None));
                    }
                    queue.push(y);
                }
            }
        }
        let cert = StableSetCertificate {
            s: queue.into_iter().collect(),
            n_of_s: reached_a.into_iter().collect(),
            k: self.k,
        };
        debug_assert!(is_stable(g, &cert.s));
        debug_assert_eq!(neighborhood(g, &cert.s), cert.n_of_s);
        Ok(Step::Certified(cert))
    }

    /// Flips `F` along the search-tree path ending at `end`, then along the
    /// optional extra edge. Edges on the tree path each touch an `A` vertex
    /// and the extra edge joins two `B` vertices, so the walk repeats no
    /// edge even when the extra edge returns to a vertex on the path.
    fn apply_walk(&mut self, end: Vertex, extra: Option<(EdgeId, Vertex)>) -> Step {
        let before = |st: &Self, v: Vertex| st.target[v] && st.deg[v] == 0;
        let mut newly: Vec<Vertex> = Vec::new();
        let mut root = end;
        while self.from[root] != NIL {
            root = self.from[root];
        }
        newly.push(root);
        let tip = extra.map_or(end, |(_, x)| x);
        if tip != root && before(self, tip) {
            newly.push(tip);
        }
        let mut v = end;
        while self.from[v] != NIL {
            self.toggle(self.via[v]);
            v = self.from[v];
        }
        if let Some((eid, _)) = extra {
            self.toggle(eid);
        }
        self.augmentations += 1;
        self.minimalize_around(root);
        self.minimalize_around(tip);
        debug_assert!(newly.iter().all(|&v| self.deg[v] > 0));
        debug_assert!((0..self.g.n()).all(|v| self.deg[v] <= self.k));
        self.uncovered.retain(|&v| self.deg[v] == 0);
        Step::Augmented {
            gained: newly.len(),
        }
    }

    /// Augments until every target is covered (`None`) or a search gets
    /// stuck (`Some(certificate)`).
    pub fn run(&mut self) -> Result<Option<StableSetCertificate>> {
        loop {
            self.uncovered.retain(|&v| self.deg[v] == 0);
            if self.uncovered.is_empty() {
                return Ok(None);
            }
            if let Step::Certified(c) = self.augment_or_certify()? {
                return Ok(Some(c));
            }
        }
    }

    pub fn decomposition(&self) -> MatchingDecomposition {
        star_decompose(self.g, &self.f_edges(), self.k).expect("F respects the degree bound")
    }
}

/// Splits an edge set with all degrees ≤ k into k matchings covering the
/// same vertices. Edges whose endpoints both have degree ≥ 2 are deleted in
/// the given order; the remaining stars get their edges spread over
/// matchings `0..deg` in leaf-id order.
pub fn star_decompose(g: &Graph, f: &[Edge], k: usize) -> Result<MatchingDecomposition> {
    let mut deg = vec![0usize; g.n()];
    let mut edges = Vec::with_capacity(f.len());
    let mut seen = std::collections::HashSet::new();
    for &e in f {
        let e = Edge::new(e.0, e.1);
        if !g.has_edge(e.0, e.1) {
            return Err(Error::contract(format!("edge {e} is not in the graph")));
        }
        if seen.insert(e) {
            deg[e.0] += 1;
            deg[e.1] += 1;
            edges.push(e);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| deg[v] > k) {
        return Err(Error::contract(format!(
            "vertex {v} has degree {} > k = {k}",
            deg[v]
        )));
    }
    let mut keep = vec![true; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        if deg[e.0] >= 2 && deg[e.1] >= 2 {
            keep[i] = false;
            deg[e.0] -= 1;
            deg[e.1] -= 1;
        }
    }
    let kept: Vec<Edge> = edges
        .iter()
        .zip(&keep)
        .filter_map(|(&e, &k)| k.then_some(e))
        .collect();

    let mut leaves: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    for e in &kept {
        if deg[e.0] >= 2 {
            leaves[e.0].push(e.1);
        } else if deg[e.1] >= 2 {
            leaves[e.1].push(e.0);
        }
    }
    let mut matchings = vec![Vec::new(); k];
    for e in &kept {
        let slot = if deg[e.0] >= 2 {
            star_slot(&mut leaves[e.0], e.1)
        } else if deg[e.1] >= 2 {
            star_slot(&mut leaves[e.1], e.0)
        } else {
            0
        };
        matchings[slot].push(*e);
    }
    MatchingDecomposition::new(k, matchings)
}

fn star_slot(leaves: &mut [Vertex], leaf: Vertex) -> usize {
    leaves.sort_unstable();
    leaves.binary_search(&leaf).expect("leaf of its star")
}

/// Covers as many vertices of `u` as k matchings can, returning a
/// maximum-deficit stable set when some remain uncovered.
pub fn solve(g: &Graph, k: usize, u: &VertexSet) -> Result<SolveResult> {
    if k < 2 {
        return Err(Error::contract(
            "solve needs k >= 2; use min_k(.., true) or max_matching for k = 1",
        ));
    }
    let mut state = CoverState::new(g, k, u)?;
    state.seed_greedy();
    state.minimalize();
    let witness = state.run()?;
    Ok(SolveResult {
        decomposition: state.decomposition(),
        uncovered: state.uncovered_targets(),
        witness,
        augmentations: state.augmentations(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinKResult {
    pub k: usize,
    pub decomposition: MatchingDecomposition,
    /// A stable set with `⌈|S|/|N(S)|⌉ = k`, as a certificate for `k − 1`
    /// (so it passes [`verify_certificate`]). Absent for `k = 1`, and for
    /// `k = 2` when every stable set has `|S| ≤ |N(S)|` (the graph has a
    /// perfect 2-matching but no perfect matching).
    pub lower_bound: Option<StableSetCertificate>,
    /// `(k, augmentations performed while k was current)` for every k tried.
    pub augmentations_per_k: Vec<(usize, usize)>,
}

/// The least k for which k matchings cover all vertices. Tries k = 2, 3, …
/// keeping `F` between rounds. With `distinguish_k1`, a result of 2 is
/// lowered to 1 when the graph has a perfect matching.
pub fn min_k(g: &Graph, distinguish_k1: bool) -> Result<MinKResult> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let all = VertexSet::full(g.n());
    let mut state = CoverState::new(g, 2, &all)?;
    state.seed_greedy();
    state.minimalize();
    let mut last = None;
    let mut per_k = Vec::new();
    loop {
        let before = state.augmentations();
        let outcome = state.run()?;
        per_k.push((state.k(), state.augmentations() - before));
        match outcome {
            None => break,
            Some(cert) => {
                last = Some(cert);
                state.increase_k();
            }
        }
    }
    let k = state.k();
    if k > 2 {
        return Ok(MinKResult {
            k,
            decomposition: state.decomposition(),
            lower_bound: last,
            augmentations_per_k: per_k,
        });
    }
    if distinguish_k1 {
        let m = matching::max_matching(g);
        if m.is_perfect(g.n()) {
            return Ok(MinKResult {
                k: 1,
                decomposition: MatchingDecomposition::new(1, vec![m.into_edges()])?,
                lower_bound: None,
                augmentations_per_k: per_k,
            });
        }
    }
    let lower_bound = match matching::perfect_2_matching(g)? {
        TwoMatchingOutcome::Obstructed(c) => Some(c),
        TwoMatchingOutcome::Perfect(_) => None,
    };
    Ok(MinKResult {
        k: 2,
        decomposition: state.decomposition(),
        lower_bound,
        augmentations_per_k: per_k,
    })
}

/// True iff every member of `d` is a matching and together they cover `u`.
/// Edges outside `g` are a contract error.
pub fn verify_cover(g: &Graph, d: &MatchingDecomposition, u: &VertexSet) -> Result<bool> {
    let mut covered = vec![false; g.n()];
    let mut ok = d.matchings.len() == d.k;
    for m in &d.matchings {
        for e in m {
            if !g.has_edge(e.0, e.1) {
                return Err(Error::contract(format!("edge {e} is not in the graph")));
            }
            covered[e.0] = true;
            covered[e.1] = true;
        }
        ok &= matching::is_matching(m);
    }
    Ok(ok && u.iter().all(|v| v < g.n() && covered[v]))
}

/// Checks that `c.s` is a nonempty stable set (inside `u` when given), that
/// `c.n_of_s` is exactly its neighbourhood, and that `|S| > k·|N(S)|`.
pub fn verify_certificate(g: &Graph, c: &StableSetCertificate, u: Option<&VertexSet>) -> bool {
    !c.s.is_empty()
        && c.s.check_within(g.n()).is_ok()
        && c.n_of_s.check_within(g.n()).is_ok()
        && is_stable(g, &c.s)
        && u.is_none_or(|u| c.s.is_subset(u))
        && neighborhood(g, &c.s) == c.n_of_s
        && c.s.len() > c.k * c.n_of_s.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, graph, star};

    fn p(n: usize) -> Graph {
        graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn star_edges_go_to_distinct_matchings() {
        let g = star(3);
        let d = star_decompose(&g, g.edges(), 3).unwrap();
        assert_eq!(
            d.matchings.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
        assert_eq!(d.covered, VertexSet::full(4));
    }

    #[test]
    fn path_middle_edge_is_deleted() {
        let g = p(4);
        let d = star_decompose(&g, g.edges(), 2).unwrap();
        assert_eq!(d.edges(), vec![Edge(0, 1), Edge(2, 3)]);
        assert_eq!(d.covered, VertexSet::full(4));
        assert!(verify_cover(&g, &d, &VertexSet::full(4)).unwrap());
    }

    #[test]
    fn empty_f_gives_empty_matchings() {
        let d = star_decompose(&p(3), &[], 2).unwrap();
        assert_eq!(d.matchings, vec![Vec::<Edge>::new(), Vec::new()]);
        assert!(d.covered.is_empty());
    }

    #[test]
    fn degree_violation_is_rejected() {
        let g = star(3);
        assert!(matches!(
            star_decompose(&g, g.edges(), 2),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn certify_on_claw_with_two_matchings() {
        let g = star(3);
        let f = [Edge(0, 1), Edge(0, 2)];
        let mut st = CoverState::with_edges(&g, 2, &VertexSet::full(4), &f).unwrap();
        assert_eq!(st.uncovered_targets(), VertexSet::from([3]));
        match st.augment_or_certify().unwrap() {
            Step::Certified(c) => {
                assert_eq!(c.s, VertexSet::from([1, 2, 3]));
                assert_eq!(c.n_of_s, VertexSet::from([0]));
                assert!(verify_certificate(&g, &c, None));
            }
            s => panic!("expected certificate, got {s:?}"),
        }
    }

    #[test]
    fn augment_on_p3() {
        let g = p(3);
        let mut st = CoverState::with_edges(&g, 2, &VertexSet::full(3), &[Edge(0, 1)]).unwrap();
        assert_eq!(
            st.augment_or_certify().unwrap(),
            Step::Augmented { gained: 1 }
        );
        assert_eq!(st.f_edges(), vec![Edge(0, 1), Edge(1, 2)]);
        assert!(st.uncovered_targets().is_empty());
    }

    #[test]
    fn first_augmentation_on_single_edge() {
        let g = graph(2, &[(0, 1)]);
        let mut st = CoverState::new(&g, 2, &VertexSet::full(2)).unwrap();
        assert_eq!(
            st.augment_or_certify().unwrap(),
            Step::Augmented { gained: 2 }
        );
        assert_eq!(st.f_edges(), vec![Edge(0, 1)]);
    }

    #[test]
    fn augment_requires_uncovered_target() {
        let g = graph(2, &[(0, 1)]);
        let mut st = CoverState::with_edges(&g, 2, &VertexSet::full(2), &[Edge(0, 1)]).unwrap();
        assert!(st.augment_or_certify().is_err());
    }

    #[test]
    fn walk_revisiting_a_path_vertex() {
        // F = {1-0, 1-2} (A = {1}), B' = {3}; 3 sees 1, 1's F-neighbours 0
        // and 2 are reached, and 0–2 is a non-F edge inside B. k = 2.
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (1, 3)]);
        let f = [Edge(0, 1), Edge(1, 2)];
        let mut st = CoverState::with_edges(&g, 2, &VertexSet::full(4), &f).unwrap();
        assert!(matches!(
            st.augment_or_certify().unwrap(),
            Step::Augmented { .. }
        ));
        assert!(st.uncovered_targets().is_empty());
        assert!((0..4).all(|v| st.f_degree(v) <= 2));
    }

    #[test]
    fn solve_stars_need_k() {
        for k in 2..=6 {
            let g = star(k);
            let r = solve(&g, k, &VertexSet::full(k + 1)).unwrap();
            assert!(r.is_feasible());
            assert!(verify_cover(&g, &r.decomposition, &VertexSet::full(k + 1)).unwrap());
            let r = solve(&g, k - 1, &VertexSet::full(k + 1));
            if k > 2 {
                let r = r.unwrap();
                assert_eq!(r.uncovered.len(), 1);
                assert_eq!(r.witness.unwrap().deficit(), 1);
            } else {
                assert!(r.is_err());
            }
        }
    }

    #[test]
    fn solve_claw_with_two() {
        let g = star(3);
        let r = solve(&g, 2, &VertexSet::full(4)).unwrap();
        assert_eq!(r.uncovered.len(), 1);
        let w = r.witness.unwrap();
        assert_eq!(w.s, VertexSet::from([1, 2, 3]));
        assert_eq!(w.deficit(), 1);
    }

    #[test]
    fn solve_c5_with_two() {
        let g = cycle(5);
        let r = solve(&g, 2, &VertexSet::full(5)).unwrap();
        assert!(r.is_feasible());
        assert!(r.witness.is_none());
        assert!(verify_cover(&g, &r.decomposition, &VertexSet::full(5)).unwrap());
    }

    #[test]
    fn solve_empty_target_and_k_contract() {
        let g = cycle(5);
        let r = solve(&g, 3, &VertexSet::new()).unwrap();
        assert!(r.is_feasible());
        assert_eq!(r.decomposition.matchings.len(), 3);
        assert!(matches!(
            solve(&g, 1, &VertexSet::full(5)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn solve_subset_outside_u_is_released() {
        // claw with k = 2 and U = three leaves minus nothing but centre is
        // not a target: still one leaf uncovered
        let g = star(3);
        let r = solve(&g, 2, &VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(r.uncovered.len(), 1);
        // U = two leaves: coverable
        let r = solve(&g, 2, &VertexSet::from([1, 2])).unwrap();
        assert!(r.is_feasible());
    }

    #[test]
    fn min_k_examples() {
        let r = min_k(&star(3), false).unwrap();
        assert_eq!(r.k, 3);
        let lb = r.lower_bound.unwrap();
        assert_eq!(lb.s, VertexSet::from([1, 2, 3]));
        assert_eq!(lb.ratio_ceil(), Some(3));
        assert_eq!(lb.k, 2);

        let r = min_k(&complete(4), true).unwrap();
        assert_eq!(r.k, 1);
        assert!(r.lower_bound.is_none());
        assert!(verify_cover(&complete(4), &r.decomposition, &VertexSet::full(4)).unwrap());

        let r = min_k(&cycle(5), true).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.lower_bound.is_none());

        let r = min_k(&complete(4), false).unwrap();
        assert_eq!(r.k, 2);
    }

    #[test]
    fn min_k_rejects_isolated_vertex() {
        let g = graph(3, &[(0, 1)]);
        assert_eq!(
            min_k(&g, true).unwrap_err(),
            Error::IsolatedVertex { vertex: 2 }
        );
    }

    #[test]
    fn min_k_two_with_stable_set_witness() {
        // cherry: leaves {1,2} vs centre, ratio 2
        let r = min_k(&star(2), true).unwrap();
        assert_eq!(r.k, 2);
        let lb = r.lower_bound.unwrap();
        assert_eq!((lb.k, lb.ratio_ceil()), (1, Some(2)));
        assert!(verify_certificate(&star(2), &lb, None));
    }

    #[test]
    fn verify_cover_examples() {
        let g = cycle(5);
        let d = MatchingDecomposition::new(2, vec![vec![Edge(0, 1), Edge(2, 3)], vec![Edge(0, 4)]])
            .unwrap();
        assert!(verify_cover(&g, &d, &VertexSet::full(5)).unwrap());

        let g = p(3);
        let d = MatchingDecomposition::new(2, vec![vec![Edge(0, 1)], vec![Edge(0, 1)]]).unwrap();
        assert!(!verify_cover(&g, &d, &VertexSet::full(3)).unwrap());

        let bad = MatchingDecomposition {
            k: 1,
            matchings: vec![vec![Edge(0, 1), Edge(1, 2)]],
            covered: VertexSet::full(3),
        };
        assert!(!verify_cover(&g, &bad, &VertexSet::full(3)).unwrap());

        let foreign = MatchingDecomposition::new(1, vec![vec![Edge(0, 2)]]).unwrap();
        assert!(verify_cover(&g, &foreign, &VertexSet::new()).is_err());
    }

    #[test]
    fn verify_certificate_examples() {
        let g = star(3);
        let c = |k| StableSetCertificate {
            s: VertexSet::from([1, 2, 3]),
            n_of_s: VertexSet::from([0]),
            k,
        };
        assert!(verify_certificate(&g, &c(2), None));
        assert!(!verify_certificate(&g, &c(3), None));
        assert!(!verify_certificate(
            &g,
            &c(2),
            Some(&VertexSet::from([1, 2]))
        ));
        let e = graph(2, &[(0, 1)]);
        let not_stable = StableSetCertificate {
            s: VertexSet::from([0, 1]),
            n_of_s: VertexSet::new(),
            k: 1,
        };
        assert!(!verify_certificate(&e, &not_stable, None));
    }
}
