//! Hopcroft–Karp on explicit bipartite graphs, returning the left-side
//! deficiency set alongside the matching.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const NIL: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new<I>(left: usize, right: usize, edges: I) -> Result<BipartiteGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); left];
        for (l, r) in edges {
            if l >= left || r >= right {
                return Err(Error::contract(format!(
                    "bipartite edge ({l},{r}) outside {left}x{right}"
                )));
            }
            adj[l].push(r);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(BipartiteGraph { left, right, adj })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
}

impl BipartiteMatching {
    pub fn size(&self) -> usize {
        self.mate_left.iter().flatten().count()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate_left
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

/// Maximum matching plus the deficiency set `D`: the left vertices reachable
/// from unmatched left vertices by alternating paths. Every unmatched left
/// vertex is in `D`, every neighbour of `D` is matched into `D`, and
/// `|N(D)| = |D| − (number of unmatched left vertices)`.
pub fn bipartite_max_matching(b: &BipartiteGraph) -> (BipartiteMatching, VertexSet) {
    let mut mate_l = vec![NIL; b.left];
    let mut mate_r = vec![NIL; b.right];

    // greedy start
    for (l, ml) in mate_l.iter_mut().enumerate() {
        if let Some(&r) = b.adj[l].iter().find(|&&r| mate_r[r] == NIL) {
            *ml = r;
            mate_r[r] = l;
        }
    }

    let mut dist = vec![0usize; b.left];
    loop {
        if !hk_bfs(b, &mate_l, &mate_r, &mut dist) {
            break;
        }
        let mut it = vec![0usize; b.left];
        for l in 0..b.left {
            if mate_l[l] == NIL {
                hk_dfs(b, l, &mut mate_l, &mut mate_r, &mut dist, &mut it);
            }
        }
    }

    let deficiency = deficiency_set(b, &mate_l, &mate_r);
    let wrap = |v: Vec<usize>| v.into_iter().map(|x| (x != NIL).then_some(x)).collect();
    (
        BipartiteMatching {
            mate_left: wrap(mate_l),
            mate_right: wrap(mate_r),
        },
        deficiency,
    )
}

fn hk_bfs(b: &BipartiteGraph, mate_l: &[usize], mate_r: &[usize], dist: &mut [usize]) -> bool {
    let mut queue = VecDeque::new();
    for l in 0..b.left {
        if mate_l[l] == NIL {
            dist[l] = 0;
            queue.push_back(l);
        } else {
            dist[l] = NIL;
        }
    }
    let mut found = false;
    while let Some(l) = queue.pop_front() {
        for &r in &b.adj[l] {
            let next = mate_r[r];
            if next == NIL {
                found = true;
            } else if dist[next] == NIL {
                dist[next] = dist[l] + 1;
                queue.push_back(next);
            }
        }
    }
    found
}

fn hk_dfs(
    b: &BipartiteGraph,
    start: usize,
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    // iterative DFS over layered graph; stack holds left vertices
    let mut stack = vec![start];
    while let Some(&l) = stack.last() {
        if it[l] == b.adj[l].len() {
            dist[l] = NIL;
            stack.pop();
            continue;
        }
        let r = b.adj[l][it[l]];
        let next = mate_r[r];
        if next == NIL {
            // augment along the stack
            let mut r = r;
            for &x in stack.iter().rev() {
                let prev = mate_l[x];
                mate_l[x] = r;
                mate_r[r] = x;
                r = prev;
            }
            return true;
        }
        if dist[next] != NIL && dist[next] == dist[l] + 1 {
            stack.push(next);
        } else {
            it[l] += 1;
        }
        // when a child fails it is popped with dist = NIL, so the parent's
        // next look at the same r advances
    }
    false
}

fn deficiency_set(b: &BipartiteGraph, mate_l: &[usize], mate_r: &[usize]) -> VertexSet {
    let mut seen_l = vec![false; b.left];
    let mut seen_r = vec![false; b.right];
    let mut queue: VecDeque<usize> = (0..b.left).filter(|&l| mate_l[l] == NIL).collect();
    for &l in &queue {
        seen_l[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &b.adj[l] {
            if seen_r[r] {
                continue;
            }
            seen_r[r] = true;
            let next = mate_r[r];
            debug_assert!(next != NIL, "augmenting path left after maximum matching");
            if next != NIL && !seen_l[next] {
                seen_l[next] = true;
                queue.push_back(next);
            }
        }
    }
    VertexSet::from_mask(&seen_l)
}

/// Left and right copies of `V`; each edge `uv` yields `(u, v)` and `(v, u)`.
pub fn double_cover(g: &Graph) -> BipartiteGraph {
    let pairs = g.edges().iter().flat_map(|e| [(e.0, e.1), (e.1, e.0)]);
    BipartiteGraph::new(g.n(), g.n(), pairs).expect("edges of g are in range")
}

/// Right vertices adjacent to a set of left vertices.
pub fn right_neighbors(b: &BipartiteGraph, left: &VertexSet) -> VertexSet {
    left.iter().flat_map(|l| b.adj[l].iter().copied()).collect()
}
