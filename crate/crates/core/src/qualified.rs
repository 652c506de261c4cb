//! Depth-first search for a vertex order meeting the optimality conditions.
//!
//! Endpoints are fixed first (center first, a center neighbor last; or the
//! two centers at either end), then positions are filled left to right in
//! ascending vertex id. A candidate is rejected when it shares a branch (or
//! side, with two centers) with its predecessor, or sits more than `n / 2`
//! away from it. The first order found in this fixed traversal is returned,
//! so results are deterministic.

use crate::coloring::{ColoringError, LinearOrder};
use crate::tree::{DistanceMatrix, Tree, Vertex};

pub const DEFAULT_SEARCH_NODE_LIMIT: u64 = 50_000_000;

/// Returns `Ok(None)` when no qualified order exists.
pub fn find_qualified_order(tree: &Tree, node_limit: u64) -> Result<Option<LinearOrder>, ColoringError> {
    let n = tree.n();
    if n < 3 {
        return Ok(None);
    }
    let r = tree.rooting();
    let centers = r.center.centers.clone();

    // group key per vertex: branch anchor (one center) or side (two centers);
    // with one center the center gets a key of its own
    let mut key = vec![0usize; n];
    let mut keys = 0;
    if r.center.has_two() {
        for v in tree.vertices() {
            key[v] = usize::from(r.side(v) != centers[0]);
        }
        keys = 2;
    } else {
        let mut ids = vec![usize::MAX; n];
        for v in tree.vertices() {
            let a = r.anchor(v).unwrap_or(v);
            if ids[a] == usize::MAX {
                ids[a] = keys;
                keys += 1;
            }
            key[v] = ids[a];
        }
    }

    let endpoints: Vec<(Vertex, Vertex)> = if r.center.has_two() {
        vec![(centers[0], centers[1]), (centers[1], centers[0])]
    } else {
        let w = centers[0];
        tree.neighbors(w).iter().map(|&x| (w, x)).collect()
    };

    let dm = tree.distance_matrix();
    let mut search = Search {
        n,
        dm: &dm,
        key: &key,
        nodes: 0,
        node_limit,
        used: vec![false; n],
        counts: vec![0; keys],
        order: Vec::with_capacity(n),
    };
    for (first, last) in endpoints {
        if let Some(order) = search.run(first, last)? {
            return Ok(Some(LinearOrder::new(n, order).expect("search builds permutations")));
        }
    }
    Ok(None)
}

struct Search<'a> {
    n: usize,
    dm: &'a DistanceMatrix,
    key: &'a [usize],
    nodes: u64,
    node_limit: u64,
    used: Vec<bool>,
    counts: Vec<usize>,
    order: Vec<Vertex>,
}

impl Search<'_> {
    fn run(&mut self, first: Vertex, last: Vertex) -> Result<Option<Vec<Vertex>>, ColoringError> {
        self.used.iter_mut().for_each(|u| *u = false);
        self.counts.iter_mut().for_each(|c| *c = 0);
        self.order.clear();
        self.used[first] = true;
        self.used[last] = true;
        for v in 0..self.n {
            if !self.used[v] {
                self.counts[self.key[v]] += 1;
            }
        }
        self.order.push(first);
        let remaining = self.n - 2;
        if !self.feasible(first, last, remaining) {
            return Ok(None);
        }
        if self.dfs(last, remaining)? {
            self.order.push(last);
            return Ok(Some(self.order.clone()));
        }
        Ok(None)
    }

    fn compatible(&self, a: Vertex, b: Vertex) -> bool {
        self.key[a] != self.key[b] && 2 * self.dm.get(a, b) as usize <= self.n
    }

    /// Necessary condition for arranging the remaining vertices between
    /// `prev` and `last` with no two neighbors in the same group: a group
    /// with `c` members needs `c <= ceil(slots / 2)`, where slots excludes
    /// the end positions touching a same-group boundary vertex.
    fn feasible(&self, prev: Vertex, last: Vertex, remaining: usize) -> bool {
        if remaining == 0 {
            return self.compatible(prev, last);
        }
        self.counts.iter().enumerate().all(|(k, &c)| {
            if c == 0 {
                return true;
            }
            let slots = remaining as i64 - i64::from(self.key[prev] == k) - i64::from(self.key[last] == k);
            2 * c as i64 <= slots + 1
        })
    }

    fn dfs(&mut self, last: Vertex, remaining: usize) -> Result<bool, ColoringError> {
        if remaining == 0 {
            return Ok(true);
        }
        let prev = *self.order.last().expect("order starts with an endpoint");
        for v in 0..self.n {
            if self.used[v] || !self.compatible(prev, v) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                return Err(ColoringError::SearchBudgetExceeded { nodes: self.nodes });
            }
            self.used[v] = true;
            self.counts[self.key[v]] -= 1;
            self.order.push(v);
            if self.feasible(v, last, remaining - 1) && self.dfs(last, remaining - 1)? {
                return Ok(true);
            }
            self.order.pop();
            self.counts[self.key[v]] += 1;
            self.used[v] = false;
        }
        Ok(false)
    }
}
