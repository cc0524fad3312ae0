//! Degree-constrained subgraphs: `(ℓ,k)`-factors through a perfect-matching
//! gadget, minimum-weight versions, and the bridge from minimal
//! `(1,k)`-factors to matching-k-covers.
//!
//! Gadget, for each vertex `v` with `c(v) = max(min(k, d(v)), ℓ(v))`:
//!
//! * every edge `e = uv` (`u < v`) gets two nodes `e_u`, `e_v` joined by a
//!   "skip" edge;
//! * `v` gets `c(v)` copies, each adjacent to every `e_v` at `v`; choosing
//!   edge `e` means matching `e_u` and `e_v` to copies instead of each
//!   other, and the weight of `e` sits on the `copy(u)–e_u` edges;
//! * `v` gets `c(v) − ℓ(v)` slack nodes adjacent to its copies, so between
//!   `ℓ(v)` and `c(v)` copies are left for edge nodes;
//! * slack nodes of all vertices form one clique (plus a parity node when
//!   the node count is odd), which absorbs the unused ones.
//!
//! So the perfect matchings pull back exactly onto the `(ℓ,k)`-factors, with
//! the same weight.

use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};

use crate::cover::{self, star_decompose, MatchingDecomposition, Outcome};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph, LBounds, Vertex, VertexSet, WeightMap};
use crate::matching::{self, weighted, Matching};

/// Bounds `ℓ(v) ≤ d_F(v) ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub lower: LBounds,
    pub k: usize,
}

impl FactorSpec {
    pub fn new(lower: LBounds, k: usize) -> FactorSpec {
        FactorSpec { lower, k }
    }

    /// `ℓ ≡ 1`: the `(1,k)`-factors.
    pub fn one_k(n: usize, k: usize) -> FactorSpec {
        FactorSpec::new(LBounds::uniform(n, 1), k)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        self.lower.check(g)?;
        if let Some(v) = (0..g.n()).find(|&v| self.lower.get(v) > self.k) {
            return Err(Error::contract(format!(
                "lower bound {} at vertex {v} exceeds k = {}",
                self.lower.get(v),
                self.k
            )));
        }
        Ok(())
    }

    pub fn admits(&self, g: &Graph, f: &[Edge]) -> bool {
        let mut deg = vec![0usize; g.n()];
        for e in f {
            deg[e.0] += 1;
            deg[e.1] += 1;
        }
        (0..g.n()).all(|v| self.lower.get(v) <= deg[v] && deg[v] <= self.k)
    }
}

/// The auxiliary graph of the reduction and how to read a factor back off
/// one of its perfect matchings.
#[derive(Clone, Debug)]
pub struct GadgetMapping {
    pub aux: Graph,
    pub weights: WeightMap,
    /// For each auxiliary edge, the original edge it selects, if any.
    pub back: Vec<Option<EdgeId>>,
    pub copies: Vec<Vec<Vertex>>,
    pub slack: Vec<Vec<Vertex>>,
}

impl GadgetMapping {
    /// Original edges selected by a perfect matching of `aux`.
    pub fn pull_back(&self, g: &Graph, m: &[Edge]) -> Vec<Edge> {
        let mut ids: Vec<EdgeId> = m
            .iter()
            .filter_map(|e| self.aux.edge_id(e.0, e.1).and_then(|a| self.back[a]))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(|id| g.edge(id)).collect()
    }
}

pub fn build_factor_gadget(
    g: &Graph,
    spec: &FactorSpec,
    w: Option<&WeightMap>,
) -> Result<GadgetMapping> {
    spec.check(g)?;
    if let Some(w) = w {
        if w.as_slice().len() != g.m() {
            return Err(Error::contract("weight map does not match the graph"));
        }
    }
    fn fresh(next: &mut usize, count: usize) -> Vec<Vertex> {
        let ids = (*next..*next + count).collect();
        *next += count;
        ids
    }
    // edge nodes: 2·id for the smaller endpoint, 2·id + 1 for the larger
    let mut next = 2 * g.m();
    let mut copies = Vec::with_capacity(g.n());
    let mut slack = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let c = spec.k.min(g.degree(v)).max(spec.lower.get(v));
        copies.push(fresh(&mut next, c));
        slack.push(fresh(&mut next, c - spec.lower.get(v)));
    }
    let parity = (next % 2 == 1).then(|| fresh(&mut next, 1)[0]);

    let zero = BigRational::zero();
    let mut pairs: Vec<(Vertex, Vertex, BigRational, Option<EdgeId>)> = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        pairs.push((2 * id, 2 * id + 1, zero.clone(), None));
        let wt = w.map_or_else(BigRational::zero, |w| w.get(id).clone());
        for &c in &copies[e.0] {
            pairs.push((c, 2 * id, wt.clone(), Some(id)));
        }
        for &c in &copies[e.1] {
            pairs.push((c, 2 * id + 1, zero.clone(), None));
        }
    }
    for v in 0..g.n() {
        for &s in &slack[v] {
            for &c in &copies[v] {
                pairs.push((c, s, zero.clone(), None));
            }
        }
    }
    let mut pool: Vec<Vertex> = slack.iter().flatten().copied().collect();
    pool.extend(parity);
    for (i, &a) in pool.iter().enumerate() {
        for &b in &pool[i + 1..] {
            pairs.push((a, b, zero.clone(), None));
        }
    }

    let aux = Graph::from_edges(next, pairs.iter().map(|p| (p.0, p.1)))?;
    let mut weights = vec![BigRational::zero(); aux.m()];
    let mut back = vec![None; aux.m()];
    for (a, b, wt, orig) in pairs {
        let id = aux.edge_id(a, b).expect("just inserted");
        weights[id] = wt;
        back[id] = orig;
    }
    Ok(GadgetMapping {
        weights: WeightMap::new(&aux, weights)?,
        aux,
        back,
        copies,
        slack,
    })
}

/// Clears denominators: integer weights `w·L` for the least common
/// multiple `L` of the denominators.
pub(crate) fn scale_to_integers(ws: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let l = ws.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let ints = ws.iter().map(|w| (w * &l).to_integer()).collect();
    (ints, l)
}

/// Minimum-weight perfect matching on vertices `0..n` with nonnegative
/// rational edge weights, or `None` if there is no perfect matching.
pub(crate) fn min_weight_perfect_mates(
    n: usize,
    edges: &[(Vertex, Vertex)],
    ws: &[BigRational],
) -> Result<Option<Vec<Vertex>>> {
    if n % 2 == 1 {
        return Ok(None);
    }
    let (ints, _) = scale_to_integers(ws);
    // maximize Σ (M − w): with M above the total weight, more edges always
    // win, so the optimum is a minimum-weight perfect matching whenever one
    // exists
    let big: BigInt = ints.iter().sum::<BigInt>() + 1;
    let headroom = 120u64.saturating_sub(64 - (n as u64 + 2).leading_zeros() as u64);
    if big.bits() > headroom {
        return Err(Error::WeightOverflow);
    }
    let m = big.to_i128().ok_or(Error::WeightOverflow)?;
    let table: Vec<(usize, usize, i128)> = edges
        .iter()
        .zip(&ints)
        .map(|(&(a, b), w)| (a, b, m - w.to_i128().expect("bounded by M")))
        .collect();
    let mates = weighted::max_weight_matching(n, &table);
    if mates.iter().any(Option::is_none) {
        return Ok(None);
    }
    Ok(Some(mates.into_iter().map(Option::unwrap).collect()))
}

/// Minimum-weight perfect matching of `g`; `None` when `g` has none.
pub fn min_weight_perfect_matching(g: &Graph, w: &WeightMap) -> Result<Option<Matching>> {
    let pairs: Vec<(Vertex, Vertex)> = g.edges().iter().map(|e| (e.0, e.1)).collect();
    Ok(min_weight_perfect_mates(g.n(), &pairs, w.as_slice())?.map(|m| Matching::from_mates(&m)))
}

/// Minimum-weight `(ℓ,k)`-factor, or `None` when none exists.
pub fn min_weight_factor(g: &Graph, spec: &FactorSpec, w: &WeightMap) -> Result<Option<Vec<Edge>>> {
    let gm = build_factor_gadget(g, spec, Some(w))?;
    let pairs: Vec<(Vertex, Vertex)> = gm.aux.edges().iter().map(|e| (e.0, e.1)).collect();
    let Some(mates) = min_weight_perfect_mates(gm.aux.n(), &pairs, gm.weights.as_slice())? else {
        return Ok(None);
    };
    let m = Matching::from_mates(&mates);
    Ok(Some(gm.pull_back(g, m.edges())))
}

/// Some `(ℓ,k)`-factor, or `None` when none exists. Uses cardinality
/// matching on the gadget.
pub fn lk_factor(g: &Graph, spec: &FactorSpec) -> Result<Option<Vec<Edge>>> {
    let gm = build_factor_gadget(g, spec, None)?;
    let m = matching::max_matching(&gm.aux);
    if !m.is_perfect(gm.aux.n()) {
        return Ok(None);
    }
    Ok(Some(gm.pull_back(g, m.edges())))
}

/// Deletes, in the given order, edges whose endpoints both have degree ≥ 2.
/// The result is a perfect star packing with stars of at most k edges.
pub fn minimalize_to_star_packing(g: &Graph, f: &[Edge], k: usize) -> Result<Vec<Edge>> {
    let spec = FactorSpec::one_k(g.n(), k);
    if f.iter().any(|e| !g.has_edge(e.0, e.1)) || !spec.admits(g, f) {
        return Err(Error::contract("input is not a (1,k)-factor of the graph"));
    }
    Ok(minimalize_above(g, f, &LBounds::uniform(g.n(), 1)))
}

/// Deletes, in order, every edge whose endpoints both exceed their lower
/// bound. Degrees only fall, so one pass reaches the fixed point.
pub(crate) fn minimalize_above(g: &Graph, f: &[Edge], l: &LBounds) -> Vec<Edge> {
    let mut deg = vec![0usize; g.n()];
    for e in f {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    let mut kept = Vec::with_capacity(f.len());
    for &e in f {
        if deg[e.0] > l.get(e.0) && deg[e.1] > l.get(e.1) {
            deg[e.0] -= 1;
            deg[e.1] -= 1;
        } else {
            kept.push(e);
        }
    }
    kept
}

/// A cheapest matching-k-cover and its exact weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCover {
    pub decomposition: MatchingDecomposition,
    pub total_weight: BigRational,
}

/// Minimum-weight matching-k-cover (k ≥ 2): cheapest `(1,k)`-factor,
/// minimalized to a star packing, split into k matchings. Minimalizing
/// never adds weight, and the star packing is itself a cover of the same
/// or lower weight. When no cover exists the stable-set certificate comes
/// from [`cover::solve`].
pub fn min_weight_matching_k_cover(
    g: &Graph,
    k: usize,
    w: &WeightMap,
) -> Result<Outcome<WeightedCover>> {
    if k < 2 {
        return Err(Error::contract("min_weight_matching_k_cover needs k >= 2"));
    }
    match min_weight_factor(g, &FactorSpec::one_k(g.n(), k), w)? {
        Some(f) => {
            let stars = minimalize_to_star_packing(g, &f, k)?;
            let decomposition = star_decompose(g, &stars, k)?;
            let total_weight = w.total(g, &decomposition.edges())?;
            Ok(Outcome::Found(WeightedCover {
                decomposition,
                total_weight,
            }))
        }
        None => {
            let r = cover::solve(g, k, &VertexSet::full(g.n()))?;
            r.witness.map(Outcome::Obstructed).ok_or_else(|| {
                Error::Extraction("no (1,k)-factor, yet k matchings cover every vertex".into())
            })
        }
    }
}
