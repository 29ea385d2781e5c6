//! Dinic's algorithm on real-valued capacities.

use std::collections::VecDeque;

/// Residual capacities at or below this value count as saturated.
pub const FLOW_EPS: f64 = 1e-12;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    residual: f64,
    rev: usize,
}

#[derive(Debug, Clone)]
pub struct FlowGraph {
    adj: Vec<Vec<Arc>>,
    level: Vec<i64>,
    cursor: Vec<usize>,
}

impl FlowGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            level: vec![-1; n],
            cursor: vec![0; n],
        }
    }

    /// Undirected edge: two antiparallel arcs of capacity `cap` that serve as
    /// each other's residual.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: f64) {
        let iu = self.adj[u].len();
        let iv = self.adj[v].len();
        self.adj[u].push(Arc {
            to: v,
            residual: cap,
            rev: iv,
        });
        self.adj[v].push(Arc {
            to: u,
            residual: cap,
            rev: iu,
        });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for arc in &self.adj[x] {
                if arc.residual > FLOW_EPS && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[x] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
    }

    fn dfs(&mut self, x: usize, t: usize, pushed: f64) -> f64 {
        if x == t {
            return pushed;
        }
        while self.cursor[x] < self.adj[x].len() {
            let i = self.cursor[x];
            let Arc { to, residual, rev } = self.adj[x][i];
            if residual > FLOW_EPS && self.level[to] == self.level[x] + 1 {
                let got = self.dfs(to, t, pushed.min(residual));
                if got > FLOW_EPS {
                    self.adj[x][i].residual -= got;
                    self.adj[to][rev].residual += got;
                    return got;
                }
            }
            self.cursor[x] += 1;
        }
        0.0
    }

    /// Maximum `s`–`t` flow; stops when no augmenting path carries more than [`FLOW_EPS`].
    pub fn max_flow(&mut self, s: usize, t: usize) -> f64 {
        let mut total = 0.0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.dfs(s, t, f64::INFINITY);
                if pushed <= FLOW_EPS {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes reachable from `s` through unsaturated residual arcs.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for arc in &self.adj[x] {
                if arc.residual > FLOW_EPS && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}
