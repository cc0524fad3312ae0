//! Maximum-weight matching in general graphs: the O(n³) primal–dual blossom
//! method on a dense edge table, integer weights only. Vertex labels hold
//! doubled duals, so every comparison stays integral.
//!
//! Internally vertices are `1..=n` and blossoms `n+1..=2n`; index 0 means
//! "none". An entry with `w == 0` means "no edge", so callers must pass
//! strictly positive weights.

use std::collections::VecDeque;

#[derive(Clone, Copy, Default)]
struct WEdge {
    u: usize,
    v: usize,
    w: i128,
}

struct Blossom {
    n: usize,
    n_x: usize,
    g: Vec<Vec<WEdge>>,
    lab: Vec<i128>,
    mate: Vec<usize>,
    slack: Vec<usize>,
    st: Vec<usize>,
    pa: Vec<usize>,
    flower_from: Vec<Vec<usize>>,
    label: Vec<i8>,
    vis: Vec<usize>,
    stamp: usize,
    flower: Vec<Vec<usize>>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(n: usize, edges: &[(usize, usize, i128)]) -> Blossom {
        let size = 2 * n + 1;
        let mut g = vec![vec![WEdge::default(); size]; size];
        for (u, row) in g.iter_mut().enumerate() {
            for (v, e) in row.iter_mut().enumerate() {
                e.u = u;
                e.v = v;
            }
        }
        for &(u, v, w) in edges {
            debug_assert!(w > 0);
            g[u + 1][v + 1].w = w;
            g[v + 1][u + 1].w = w;
        }
        let mut flower_from = vec![vec![0; n + 1]; size];
        for (u, row) in flower_from.iter_mut().enumerate().take(n + 1).skip(1) {
            row[u] = u;
        }
        let w_max = edges.iter().map(|e| e.2).max().unwrap_or(0);
        let mut lab = vec![0; size];
        for l in lab.iter_mut().take(n + 1).skip(1) {
            *l = w_max;
        }
        let mut st = vec![0; size];
        for (u, s) in st.iter_mut().enumerate().take(n + 1) {
            *s = u;
        }
        Blossom {
            n,
            n_x: n,
            g,
            lab,
            mate: vec![0; size],
            slack: vec![0; size],
            st,
            pa: vec![0; size],
            flower_from,
            label: vec![-1; size],
            vis: vec![0; size],
            stamp: 0,
            flower: vec![Vec::new(); size],
            queue: VecDeque::new(),
        }
    }

    fn dist(&self, e: WEdge) -> i128 {
        self.lab[e.u] + self.lab[e.v] - 2 * e.w
    }

    fn update_slack(&mut self, u: usize, x: usize) {
        if self.slack[x] == 0 || self.dist(self.g[u][x]) < self.dist(self.g[self.slack[x]][x]) {
            self.slack[x] = u;
        }
    }

    fn set_slack(&mut self, x: usize) {
        self.slack[x] = 0;
        for u in 1..=self.n {
            if self.g[u][x].w > 0 && self.st[u] != x && self.label[self.st[u]] == 0 {
                self.update_slack(u, x);
            }
        }
    }

    fn q_push(&mut self, x: usize) {
        if x <= self.n {
            self.queue.push_back(x);
        } else {
            for i in 0..self.flower[x].len() {
                let c = self.flower[x][i];
                self.q_push(c);
            }
        }
    }

    fn set_st(&mut self, x: usize, b: usize) {
        self.st[x] = b;
        if x > self.n {
            for i in 0..self.flower[x].len() {
                let c = self.flower[x][i];
                self.set_st(c, b);
            }
        }
    }

    fn get_pr(&mut self, b: usize, xr: usize) -> usize {
        let pr = self.flower[b]
            .iter()
            .position(|&x| x == xr)
            .expect("child of blossom");
        if pr % 2 == 1 {
            self.flower[b][1..].reverse();
            self.flower[b].len() - pr
        } else {
            pr
        }
    }

    fn set_match(&mut self, u: usize, v: usize) {
        self.mate[u] = self.g[u][v].v;
        if u > self.n {
            let e = self.g[u][v];
            let xr = self.flower_from[u][e.u];
            let pr = self.get_pr(u, xr);
            for i in 0..pr {
                let (a, b) = (self.flower[u][i], self.flower[u][i ^ 1]);
                self.set_match(a, b);
            }
            self.set_match(xr, v);
            self.flower[u].rotate_left(pr);
        }
    }

    fn augment(&mut self, mut u: usize, mut v: usize) {
        loop {
            let xnv = self.st[self.mate[u]];
            self.set_match(u, v);
            if xnv == 0 {
                return;
            }
            let next = self.st[self.pa[xnv]];
            self.set_match(xnv, next);
            u = next;
            v = xnv;
        }
    }

    fn get_lca(&mut self, mut u: usize, mut v: usize) -> usize {
        self.stamp += 1;
        let t = self.stamp;
        while u != 0 || v != 0 {
            if u != 0 {
                if self.vis[u] == t {
                    return u;
                }
                self.vis[u] = t;
                u = self.st[self.mate[u]];
                if u != 0 {
                    u = self.st[self.pa[u]];
                }
            }
            std::mem::swap(&mut u, &mut v);
        }
        0
    }

    fn add_blossom(&mut self, u: usize, lca: usize, v: usize) {
        let mut b = self.n + 1;
        while b <= self.n_x && self.st[b] != 0 {
            b += 1;
        }
        if b > self.n_x {
            self.n_x += 1;
        }
        self.lab[b] = 0;
        self.label[b] = 0;
        self.mate[b] = self.mate[lca];
        self.flower[b].clear();
        self.flower[b].push(lca);
        let mut x = u;
        while x != lca {
            self.flower[b].push(x);
            let y = self.st[self.mate[x]];
            self.flower[b].push(y);
            self.q_push(y);
            x = self.st[self.pa[y]];
        }
        self.flower[b][1..].reverse();
        let mut x = v;
        while x != lca {
            self.flower[b].push(x);
            let y = self.st[self.mate[x]];
            self.flower[b].push(y);
            self.q_push(y);
            x = self.st[self.pa[y]];
        }
        self.set_st(b, b);
        for x in 1..=self.n_x {
            self.g[b][x].w = 0;
            self.g[x][b].w = 0;
        }
        for x in 1..=self.n {
            self.flower_from[b][x] = 0;
        }
        for i in 0..self.flower[b].len() {
            let xs = self.flower[b][i];
            for x in 1..=self.n_x {
                if self.g[b][x].w == 0 || self.dist(self.g[xs][x]) < self.dist(self.g[b][x]) {
                    self.g[b][x] = self.g[xs][x];
                    self.g[x][b] = self.g[x][xs];
                }
            }
            for x in 1..=self.n {
                if self.flower_from[xs][x] != 0 {
                    self.flower_from[b][x] = xs;
                }
            }
        }
        self.set_slack(b);
    }

    fn expand_blossom(&mut self, b: usize) {
        for i in 0..self.flower[b].len() {
            let c = self.flower[b][i];
            self.set_st(c, c);
        }
        let xr = self.flower_from[b][self.g[b][self.pa[b]].u];
        let pr = self.get_pr(b, xr);
        let mut i = 0;
        while i < pr {
            let xs = self.flower[b][i];
            let xns = self.flower[b][i + 1];
            self.pa[xs] = self.g[xns][xs].u;
            self.label[xs] = 1;
            self.label[xns] = 0;
            self.slack[xs] = 0;
            self.set_slack(xns);
            self.q_push(xns);
            i += 2;
        }
        self.label[xr] = 1;
        self.pa[xr] = self.pa[b];
        for i in pr + 1..self.flower[b].len() {
            let xs = self.flower[b][i];
            self.label[xs] = -1;
            self.set_slack(xs);
        }
        self.st[b] = 0;
    }

    fn on_found_edge(&mut self, e: WEdge) -> bool {
        let u = self.st[e.u];
        let v = self.st[e.v];
        if self.label[v] == -1 {
            self.pa[v] = e.u;
            self.label[v] = 1;
            let nu = self.st[self.mate[v]];
            self.slack[v] = 0;
            self.slack[nu] = 0;
            self.label[nu] = 0;
            self.q_push(nu);
        } else if self.label[v] == 0 {
            let lca = self.get_lca(u, v);
            if lca == 0 {
                self.augment(u, v);
                self.augment(v, u);
                return true;
            }
            self.add_blossom(u, lca, v);
        }
        false
    }

    /// One augmentation; false when the current matching is optimal.
    fn matching(&mut self) -> bool {
        for x in 1..=self.n_x {
            self.label[x] = -1;
            self.slack[x] = 0;
        }
        self.queue.clear();
        for x in 1..=self.n_x {
            if self.st[x] == x && self.mate[x] == 0 {
                self.pa[x] = 0;
                self.label[x] = 0;
                self.q_push(x);
            }
        }
        if self.queue.is_empty() {
            return false;
        }
        loop {
            while let Some(u) = self.queue.pop_front() {
                if self.label[self.st[u]] == 1 {
                    continue;
                }
                for v in 1..=self.n {
                    if self.g[u][v].w > 0 && self.st[u] != self.st[v] {
                        if self.dist(self.g[u][v]) == 0 {
                            if self.on_found_edge(self.g[u][v]) {
                                return true;
                            }
                        } else {
                            let sv = self.st[v];
                            self.update_slack(u, sv);
                        }
                    }
                }
            }
            let mut d = i128::MAX;
            for b in self.n + 1..=self.n_x {
                if self.st[b] == b && self.label[b] == 1 {
                    d = d.min(self.lab[b] / 2);
                }
            }
            for x in 1..=self.n_x {
                if self.st[x] == x && self.slack[x] != 0 {
                    let s = self.dist(self.g[self.slack[x]][x]);
                    if self.label[x] == -1 {
                        d = d.min(s);
                    } else if self.label[x] == 0 {
                        d = d.min(s / 2);
                    }
                }
            }
            // an S-vertex dual reaching zero means no augmenting path remains
            if (1..=self.n).any(|u| self.label[self.st[u]] == 0 && self.lab[u] <= d) {
                return false;
            }
            for u in 1..=self.n {
                match self.label[self.st[u]] {
                    0 => self.lab[u] -= d,
                    1 => self.lab[u] += d,
                    _ => {}
                }
            }
            for b in self.n + 1..=self.n_x {
                if self.st[b] == b {
                    match self.label[b] {
                        0 => self.lab[b] += 2 * d,
                        1 => self.lab[b] -= 2 * d,
                        _ => {}
                    }
                }
            }
            self.queue.clear();
            for x in 1..=self.n_x {
                let sx = self.slack[x];
                if self.st[x] == x
                    && sx != 0
                    && self.st[sx] != x
                    && self.dist(self.g[sx][x]) == 0
                    && self.on_found_edge(self.g[sx][x])
                {
                    return true;
                }
            }
            for b in self.n + 1..=self.n_x {
                if self.st[b] == b && self.label[b] == 1 && self.lab[b] == 0 {
                    self.expand_blossom(b);
                }
            }
        }
    }
}

/// Maximum-weight matching on vertices `0..n` with strictly positive
/// integer weights. Returns `mate[v]`.
pub(crate) fn max_weight_matching(n: usize, edges: &[(usize, usize, i128)]) -> Vec<Option<usize>> {
    let mut b = Blossom::new(n, edges);
    while b.matching() {}
    (1..=n)
        .map(|u| (b.mate[u] != 0).then(|| b.mate[u] - 1))
        .collect()
}
