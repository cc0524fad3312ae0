//! Exhaustive reference implementations. Exponential on purpose and
//! refused beyond configurable size limits; used to check the polynomial
//! solvers on small graphs.
//!
//! Limits default to 20 vertices and 20 edges and can be changed with the
//! `MATCHCOVER_ORACLE_MAX_N` and `MATCHCOVER_ORACLE_MAX_M` environment
//! variables (hard cap 30 vertices, 40 edges).

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num::{BigInt, BigRational, ToPrimitive};

use crate::error::{Error, Result};
use crate::factor::scale_to_integers;
use crate::graph::{Graph, LBounds, VertexSet, WeightMap};

pub const DEFAULT_MAX_VERTICES: usize = 20;
pub const DEFAULT_MAX_EDGES: usize = 20;
const HARD_MAX_VERTICES: usize = 30;
const HARD_MAX_EDGES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

impl OracleLimits {
    pub fn from_env() -> OracleLimits {
        let read = |key: &str, default: usize, cap: usize| {
            std::env::var(key)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
                .map_or(default, |v| v.min(cap))
        };
        OracleLimits {
            max_vertices: read(
                "MATCHCOVER_ORACLE_MAX_N",
                DEFAULT_MAX_VERTICES,
                HARD_MAX_VERTICES,
            ),
            max_edges: read("MATCHCOVER_ORACLE_MAX_M", DEFAULT_MAX_EDGES, HARD_MAX_EDGES),
        }
    }
}

fn limits() -> OracleLimits {
    static LIMITS: OnceLock<OracleLimits> = OnceLock::new();
    *LIMITS.get_or_init(OracleLimits::from_env)
}

fn check_vertices(g: &Graph) -> Result<()> {
    let limit = limits().max_vertices;
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "vertices",
            size: g.n(),
            limit,
        });
    }
    Ok(())
}

fn check_edges(g: &Graph) -> Result<()> {
    let limit = limits().max_edges;
    if g.m() > limit {
        return Err(Error::SizeLimit {
            what: "edges",
            size: g.m(),
            limit,
        });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect()
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Calls `visit(S)` for every nonempty stable `S ⊆ allowed`, branching on
/// the lowest allowed vertex and pruning its neighbours when included.
fn for_each_stable(adj: &[u64], allowed: u64, visit: &mut impl FnMut(u64)) {
    fn go(adj: &[u64], chosen: u64, allowed: u64, visit: &mut impl FnMut(u64)) {
        if allowed == 0 {
            if chosen != 0 {
                visit(chosen);
            }
            return;
        }
        let v = allowed.trailing_zeros() as usize;
        let rest = allowed & !(1 << v);
        go(adj, chosen | 1 << v, rest & !adj[v], visit);
        go(adj, chosen, rest, visit);
    }
    go(adj, 0, allowed, visit);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficitReport {
    /// Max of `|S| − k·|N(S)|` over nonempty stable `S ⊆ U`; 0 when `U` is
    /// empty.
    pub max_deficit: i64,
    pub argmax_set: VertexSet,
    /// Max of `⌈|S|/|N(S)|⌉` over stable `S ⊆ U` with `N(S)` nonempty.
    pub ratio_max: Option<usize>,
    pub ratio_argmax: Option<VertexSet>,
}

pub fn brute_max_deficit(g: &Graph, k: usize, u: &VertexSet) -> Result<DeficitReport> {
    check_vertices(g)?;
    u.check_within(g.n())?;
    let adj = adjacency_masks(g);
    let allowed = u.iter().fold(0u64, |m, v| m | 1 << v);
    let mut best: Option<(i64, u64)> = None;
    let mut ratio: Option<(usize, u64)> = None;
    for_each_stable(&adj, allowed, &mut |s| {
        let nb = s_neighbours(&adj, s);
        let (size, nsize) = (s.count_ones() as i64, nb.count_ones() as i64);
        let deficit = size - k as i64 * nsize;
        if best.is_none_or(|(b, _)| deficit > b) {
            best = Some((deficit, s));
        }
        if nsize > 0 {
            let r = (size as usize).div_ceil(nsize as usize);
            if ratio.is_none_or(|(b, _)| r > b) {
                ratio = Some((r, s));
            }
        }
    });
    let (max_deficit, argmax) = best.unwrap_or((0, 0));
    Ok(DeficitReport {
        max_deficit,
        argmax_set: mask_to_set(argmax),
        ratio_max: ratio.map(|r| r.0),
        ratio_argmax: ratio.map(|r| mask_to_set(r.1)),
    })
}

fn s_neighbours(adj: &[u64], s: u64) -> u64 {
    let mut nb = 0u64;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        nb |= adj[v];
        rest &= rest - 1;
    }
    nb & !s
}

/// Size of a maximum matching, by memoized search over vertex subsets.
pub fn brute_matching_number(g: &Graph) -> Result<usize> {
    check_vertices(g)?;
    fn go(mask: u64, adj: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            best = best.max(1 + go(rest & !(1 << w), adj, memo));
            cand &= cand - 1;
        }
        memo.insert(mask, best);
        best
    }
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    Ok(go(full, &adjacency_masks(g), &mut HashMap::new()))
}

/// Least k such that k matchings cover `V`, from the stable-set ratio and
/// a perfect-matching check.
pub fn brute_min_k(g: &Graph) -> Result<usize> {
    check_vertices(g)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let r = brute_max_deficit(g, 1, &VertexSet::full(g.n()))?
        .ratio_max
        .unwrap_or(1);
    if r >= 2 {
        return Ok(r);
    }
    Ok(if 2 * brute_matching_number(g)? == g.n() {
        1
    } else {
        2
    })
}

/// Minimum weight of a `(1,k)`-factor (equivalently of a matching-k-cover),
/// by search over edge subsets with degree pruning. `None` if there is
/// none.
pub fn brute_min_weight_cover(g: &Graph, k: usize, w: &WeightMap) -> Result<Option<BigRational>> {
    check_edges(g)?;
    if k == 0 {
        return Err(Error::contract("k must be positive"));
    }
    let (ints, scale) = scale_to_integers(w.as_slice());
    let ints: Vec<i128> = ints
        .iter()
        .map(|x| x.to_i128().filter(|x| x.abs() < 1 << 100))
        .collect::<Option<_>>()
        .ok_or(Error::WeightOverflow)?;
    // last[v]: index of the last edge at v, after which d(v) is final
    let mut last = vec![None; g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        last[e.0] = Some(i);
        last[e.1] = Some(i);
    }
    if (0..g.n()).any(|v| last[v].is_none()) {
        return Ok(None);
    }
    struct Search<'a> {
        g: &'a Graph,
        k: usize,
        w: &'a [i128],
        last: Vec<Option<usize>>,
        deg: Vec<usize>,
        best: Option<i128>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, acc: i128) {
            if self.best.is_some_and(|b| acc >= b) {
                return;
            }
            if i == self.g.m() {
                self.best = Some(acc);
                return;
            }
            let e = self.g.edge(i);
            let closes = |s: &Self, v: usize, d: usize| s.last[v] != Some(i) || d >= 1;
            if self.deg[e.0] < self.k && self.deg[e.1] < self.k {
                self.deg[e.0] += 1;
                self.deg[e.1] += 1;
                self.go(i + 1, acc + self.w[i]);
                self.deg[e.0] -= 1;
                self.deg[e.1] -= 1;
            }
            if closes(self, e.0, self.deg[e.0]) && closes(self, e.1, self.deg[e.1]) {
                self.go(i + 1, acc);
            }
        }
    }
    let mut s = Search {
        g,
        k,
        w: &ints,
        last,
        deg: vec![0; g.n()],
        best: None,
    };
    s.go(0, 0);
    Ok(s.best.map(|b| BigRational::new(BigInt::from(b), scale)))
}

/// Max over `X ⊆ V` of `Σ_{x∉X} max(ℓ(x) − d_{G−X}(x), 0) − k·|X|`, with a
/// maximizing `X`.
pub fn brute_lk_deficit(g: &Graph, l: &LBounds, k: usize) -> Result<(i64, VertexSet)> {
    check_vertices(g)?;
    l.check(g)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut best = (i64::MIN, 0u64);
    for x in 0u64..(1u64 << n) {
        let mut total = -((k as i64) * x.count_ones() as i64);
        for (v, &nbrs) in adj.iter().enumerate() {
            if x >> v & 1 == 0 {
                let d = (nbrs & !x).count_ones() as i64;
                total += (l.get(v) as i64 - d).max(0);
            }
        }
        if total > best.0 {
            best = (total, x);
        }
    }
    Ok((best.0, mask_to_set(best.1)))
}

/// Whether `edges` on `n` vertices split into k matchings, by backtracking.
pub fn brute_k_edge_colorable(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    fn go(i: usize, edges: &[(usize, usize)], k: usize, used: &mut [u32]) -> bool {
        if i == edges.len() {
            return true;
        }
        let (u, v) = edges[i];
        for c in 0..k {
            let bit = 1 << c;
            if used[u] & bit == 0 && used[v] & bit == 0 {
                used[u] |= bit;
                used[v] |= bit;
                if go(i + 1, edges, k, used) {
                    return true;
                }
                used[u] &= !bit;
                used[v] &= !bit;
            }
            // colours are interchangeable: only try one unused-everywhere colour
            if used.iter().all(|&m| m & bit == 0) {
                break;
            }
        }
        false
    }
    go(0, edges, k.min(32), &mut vec![0; n])
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// (`n ≤ 8`), built by adding a vertex with every possible neighbourhood
/// to the classes on `n − 1` vertices and keeping canonical forms.
pub fn graph_catalog(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "catalog limited to 8 vertices");
    let mut level: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    level.insert(Vec::new());
    for size in 1..=n {
        let mut next = BTreeSet::new();
        for edges in &level {
            for nb in 0u32..(1 << (size - 1)) {
                let mut e = edges.clone();
                e.extend(
                    (0..size - 1)
                        .filter(|&u| nb >> u & 1 == 1)
                        .map(|u| (u, size - 1)),
                );
                next.insert(canonical_form(size, &e));
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|e| Graph::from_edges(n, e).expect("catalog edges are valid"))
        .collect()
}

/// Connected catalog graphs on 1..=max_n vertices, smallest first.
pub fn connected_catalog(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(graph_catalog)
        .filter(|g| g.is_connected())
        .collect()
}

/// Lexicographically least sorted edge list over all relabellings that
/// respect a refinement of vertices by (degree, neighbour degrees).
fn canonical_form(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
        deg[u] += 1;
        deg[v] += 1;
    }
    let invariant = |v: usize| {
        let mut nd: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| invariant(v));
    // blocks of equal invariant, in order
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if invariant(b[0]) == invariant(v) => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm = Vec::with_capacity(n);
    permute_blocks(&blocks, 0, &mut perm, &mut |perm: &[usize]| {
        // perm[i] = original vertex placed at position i
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
    });
    best.unwrap_or_default()
}

fn permute_blocks(
    blocks: &[Vec<usize>],
    i: usize,
    perm: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if i == blocks.len() {
        visit(perm);
        return;
    }
    let mut block = blocks[i].clone();
    let len = block.len();
    heap_permutations(&mut block, len, &mut |p: &[usize]| {
        let start = perm.len();
        perm.extend_from_slice(p);
        permute_blocks(blocks, i + 1, perm, visit);
        perm.truncate(start);
    });
}

fn heap_permutations(a: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(a);
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            a.swap(j, k - 1);
        }
    }
}
