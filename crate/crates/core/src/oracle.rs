//! Exact computations on small trees, used to check the bound and the
//! constructions against ground truth.
//!
//! # Exact hc as a search over orders
//!
//! Fix the order `u_0, ..., u_{n-1}` in which a coloring's values are
//! non-decreasing. Every pairwise constraint then reads
//! `c(u_i) - c(u_j) >= n - 1 - D(u_j, u_i)` for `j < i`, a one-sided
//! difference bound, so the pointwise smallest feasible assignment is the
//! greedy closure `c(u_i) = max_{j<i} c(u_j) + max(0, n - 1 - D(u_j, u_i))`.
//! Any coloring with that value order dominates it pointwise, hence
//! `hc = min over orders of the closure's last color`.
//!
//! The search is branch-and-bound over prefixes. From a prefix ending at
//! `a` with remaining set `R` (`|R| = r`), the remaining increments sum to at
//! least `r (n - 1 - eps) - L(a) - 2 L(R) + min L(R)` because every tree
//! distance satisfies `D(x, y) <= L(x) + L(y) + eps`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::coloring::{greedy_with, lower_bound, Coloring, LinearOrder};
use crate::exec::Execution;
use crate::tree::{validate_tree, DistanceMatrix, Tree, Vertex};

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION_N: usize = 16;

// vertex sets are u64 masks; the subset DP allocates 2^n * n entries
const HC_HARD_CAP: usize = 63;
const D_HARD_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 10,
            node_limit: None,
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    MaxN { n: usize, max_n: usize },
    Nodes(u64),
    Time(Duration),
}

impl std::fmt::Display for Limit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Limit::MaxN { n, max_n } => write!(f, "n = {n} exceeds max_n = {max_n}"),
            Limit::Nodes(k) => write!(f, "node limit {k} reached"),
            Limit::Time(t) => write!(f, "time limit {t:?} reached"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search is inexhaustive: {0}")]
    Inexhaustive(Limit),
    #[error("enumeration of trees with n = {n} exceeds the cap of {max}")]
    BudgetExceeded { n: usize, max: usize },
}

/// Exact hamiltonian chromatic number with a witness coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactHc {
    pub value: u64,
    pub witness: Coloring,
    /// Value order of the witness, first in search order among optimal ones.
    pub order: LinearOrder,
}

pub fn brute_force_hc(tree: &Tree, budget: &OracleBudget) -> Result<ExactHc, OracleError> {
    brute_force_hc_with(tree, budget, Execution::default())
}

/// Exact hc by branch-and-bound over value orders.
///
/// The first position fans out under `exec`. The value and witness do not
/// depend on scheduling; whether a node or time limit trips can.
pub fn brute_force_hc_with(tree: &Tree, budget: &OracleBudget, exec: Execution) -> Result<ExactHc, OracleError> {
    let n = tree.n();
    let max_n = budget.max_n.min(HC_HARD_CAP);
    if n > max_n {
        return Err(OracleError::Inexhaustive(Limit::MaxN { n, max_n }));
    }
    let dm = tree.distance_matrix();
    if n <= 2 {
        let witness = greedy_with(&dm, &(0..n).collect::<Vec<_>>());
        return Ok(ExactHc {
            value: witness.span(),
            order: LinearOrder::from_coloring(&witness),
            witness,
        });
    }
    let r = tree.rooting();

    // candidates by descending eccentricity, then id
    let ecc = tree.eccentricities();
    let mut rank: Vec<Vertex> = tree.vertices().collect();
    rank.sort_by_key(|&v| (Reverse(ecc[v]), v));

    let mut bfs_order: Vec<Vertex> = tree.vertices().collect();
    bfs_order.sort_by_key(|&v| (r.level(v), v));
    let incumbent = greedy_with(&dm, &bfs_order).span();

    let ctx = Ctx {
        n,
        dm: &dm,
        level: &r.levels.level,
        eps: u64::from(r.center.epsilon()),
        min_step: (n as u64 - 1).saturating_sub(u64::from(dm.max())),
        rank: &rank,
        stop_at: lower_bound(tree).ok().map(|b| b as u64),
        best: AtomicU64::new(incumbent),
        first_at_bound: AtomicUsize::new(usize::MAX),
        nodes: AtomicU64::new(0),
        tripped: OnceLock::new(),
        budget,
        start: Instant::now(),
    };

    let results = exec.map_range(0..n, |f| ctx.subtree(f));
    let mut best: Option<(u64, Vec<Vertex>)> = None;
    for res in results {
        match res {
            Err(limit) => return Err(OracleError::Inexhaustive(limit)),
            Ok(Some((value, order))) if best.as_ref().is_none_or(|(b, _)| value < *b) => {
                best = Some((value, order));
            }
            Ok(_) => {}
        }
    }
    let (value, order) = best.expect("an order no worse than the incumbent always exists");
    let witness = greedy_with(&dm, &order);
    debug_assert_eq!(witness.span(), value);
    Ok(ExactHc {
        value,
        witness,
        order: LinearOrder::new(n, order).expect("search builds permutations"),
    })
}

struct Ctx<'a> {
    n: usize,
    dm: &'a DistanceMatrix,
    level: &'a [u32],
    eps: u64,
    min_step: u64,
    rank: &'a [Vertex],
    stop_at: Option<u64>,
    best: AtomicU64,
    first_at_bound: AtomicUsize,
    nodes: AtomicU64,
    tripped: OnceLock<Limit>,
    budget: &'a OracleBudget,
    start: Instant,
}

struct Walk {
    first: usize,
    order: Vec<Vertex>,
    color: Vec<u64>,
    used: u64,
    rest_level: u64,
    local_best: u64,
    found: Option<Vec<Vertex>>,
    pending: u64,
}

enum Flow {
    Continue,
    Done,
}

impl Ctx<'_> {
    fn subtree(&self, first: usize) -> Result<Option<(u64, Vec<Vertex>)>, Limit> {
        let v0 = self.rank[first];
        let mut walk = Walk {
            first,
            order: vec![v0],
            color: vec![0; self.n],
            used: 1 << v0,
            rest_level: self.level.iter().map(|&l| u64::from(l)).sum::<u64>() - u64::from(self.level[v0]),
            local_best: u64::MAX,
            found: None,
            pending: 0,
        };
        self.dfs(&mut walk)?;
        self.flush(&mut walk)?;
        Ok(walk.found.map(|o| (walk.local_best, o)))
    }

    fn flush(&self, walk: &mut Walk) -> Result<(), Limit> {
        let total = self.nodes.fetch_add(walk.pending, Ordering::Relaxed) + walk.pending;
        walk.pending = 0;
        if let Some(&limit) = self.tripped.get() {
            return Err(limit);
        }
        let hit = match (self.budget.node_limit, self.budget.time_limit) {
            (Some(limit), _) if total > limit => Some(Limit::Nodes(limit)),
            (_, Some(limit)) if self.start.elapsed() > limit => Some(Limit::Time(limit)),
            _ => None,
        };
        match hit {
            Some(limit) => Err(*self.tripped.get_or_init(|| limit)),
            None => Ok(()),
        }
    }

    fn bound(&self, walk: &Walk, last: Vertex, last_color: u64) -> u64 {
        let r = (self.n - walk.order.len()) as u64;
        if r == 0 {
            return last_color;
        }
        let min_rest = (0..self.n)
            .filter(|&v| walk.used & (1 << v) == 0)
            .map(|v| u64::from(self.level[v]))
            .min()
            .unwrap_or(0);
        let by_levels = (r * (self.n as u64 - 1 - self.eps) + min_rest)
            .saturating_sub(u64::from(self.level[last]) + 2 * walk.rest_level);
        last_color + by_levels.max(r * self.min_step)
    }

    fn dfs(&self, walk: &mut Walk) -> Result<Flow, Limit> {
        if self.first_at_bound.load(Ordering::Relaxed) < walk.first {
            return Ok(Flow::Done);
        }
        let last = *walk.order.last().expect("non-empty prefix");
        let last_color = walk.color[last];
        if walk.order.len() == self.n {
            if last_color < walk.local_best {
                walk.local_best = last_color;
                walk.found = Some(walk.order.clone());
                self.best.fetch_min(last_color, Ordering::Relaxed);
                if self.stop_at == Some(last_color) {
                    self.first_at_bound.fetch_min(walk.first, Ordering::Relaxed);
                    return Ok(Flow::Done);
                }
            }
            return Ok(Flow::Continue);
        }
        let need = self.n as u64 - 1;
        for &v in self.rank {
            if walk.used & (1 << v) != 0 {
                continue;
            }
            walk.pending += 1;
            if walk.pending >= 1024 {
                self.flush(walk)?;
            }
            let c = walk
                .order
                .iter()
                .map(|&p| walk.color[p] + need.saturating_sub(u64::from(self.dm.get(p, v))))
                .max()
                .unwrap_or(0);
            walk.used |= 1 << v;
            walk.rest_level -= u64::from(self.level[v]);
            walk.color[v] = c;
            walk.order.push(v);
            let bound = self.bound(walk, v, c);
            let flow = if bound > self.best.load(Ordering::Relaxed) || bound >= walk.local_best {
                Flow::Continue
            } else {
                self.dfs(walk)?
            };
            walk.order.pop();
            walk.rest_level += u64::from(self.level[v]);
            walk.used &= !(1 << v);
            if let Flow::Done = flow {
                return Ok(Flow::Done);
            }
        }
        Ok(Flow::Continue)
    }
}

/// Maximum over all vertex orders of the sum of consecutive distances,
/// by dynamic programming over subsets.
pub fn brute_force_d(tree: &Tree, budget: &OracleBudget) -> Result<u64, OracleError> {
    let n = tree.n();
    let max_n = budget.max_n.min(D_HARD_CAP);
    if n > max_n {
        return Err(OracleError::Inexhaustive(Limit::MaxN { n, max_n }));
    }
    if n <= 1 {
        return Ok(0);
    }
    let dm = tree.distance_matrix();
    let full = 1usize << n;
    let mut best = vec![None::<u64>; full * n];
    for v in 0..n {
        best[(1 << v) * n + v] = Some(0);
    }
    for mask in 1..full {
        for v in 0..n {
            let Some(cur) = best[mask * n + v] else { continue };
            for w in 0..n {
                if mask & (1 << w) != 0 {
                    continue;
                }
                let slot = &mut best[(mask | 1 << w) * n + w];
                let cand = cur + u64::from(dm.get(v, w));
                if slot.is_none_or(|s| cand > s) {
                    *slot = Some(cand);
                }
            }
        }
    }
    Ok((0..n).filter_map(|v| best[(full - 1) * n + v]).max().unwrap_or(0))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn decode_pruefer(n: usize, seq: &[Vertex]) -> Tree {
    assert!(n >= 2 && seq.len() == n - 2, "Prüfer sequence length must be n - 2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    validate_tree(n, &edges).expect("Prüfer decoding yields a tree")
}

/// One tree per isomorphism class on `n` vertices, sorted by canonical form.
///
/// Classes on `n` vertices are grown from those on `n - 1` by attaching a
/// leaf to every vertex and merging by canonical form. The representative of
/// a class is the first extension found, scanning parents in output order
/// and attachment points in id order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, OracleError> {
    enumerate_trees_with(n, Execution::default())
}

pub fn enumerate_trees_with(n: usize, exec: Execution) -> Result<Vec<Tree>, OracleError> {
    if n > MAX_ENUMERATION_N {
        return Err(OracleError::BudgetExceeded {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![validate_tree(1, &[]).expect("single vertex")];
    for size in 2..=n {
        let grown = exec.map(&level, |parent| {
            parent
                .vertices()
                .map(|v| {
                    let mut edges = parent.edges().to_vec();
                    edges.push((v, size - 1));
                    let tree = validate_tree(size, &edges).expect("adding a leaf keeps a tree");
                    (canonical_form(&tree), tree)
                })
                .collect::<Vec<_>>()
        });
        let mut classes: BTreeMap<CanonicalForm, Tree> = BTreeMap::new();
        for (form, tree) in grown.into_iter().flatten() {
            classes.entry(form).or_insert(tree);
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// A uniformly random labeled tree on `n` vertices, determined by `seed`.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    match n {
        1 => validate_tree(1, &[]).expect("single vertex"),
        2 => validate_tree(2, &[(0, 1)]).expect("single edge"),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            decode_pruefer(n, &seq)
        }
    }
}
