//! Trees over dense vertex ids, their center, detour levels and branches.
//!
//! In a tree the detour distance (longest path) between two vertices is the
//! ordinary distance, since the path is unique. Everything downstream reasons
//! about a tree rooted at its central vertex (or at both central vertices,
//! which then both sit at level 0).

use std::collections::VecDeque;
use std::sync::OnceLock;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex id {id} is out of range for n = {n}")]
    BadVertexId { id: usize, n: usize },
    #[error("edge {u}-{v} closes a cycle")]
    CycleDetected { u: Vertex, v: Vertex },
    #[error("graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },
}

/// An immutable tree on vertices `0..n`.
#[derive(Debug, Clone)]
pub struct Tree {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    rooting: OnceLock<Rooting>,
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Tree {}

/// Checks that `edges` form a tree on `0..n` and builds it.
///
/// Edges are stored normalized (`u < v`) and sorted, so two edge lists that
/// describe the same tree produce equal values.
pub fn validate_tree(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    let mut dsu = Dsu::new(n);
    for &(u, v) in edges {
        for id in [u, v] {
            if id >= n {
                return Err(TreeError::BadVertexId { id, n });
            }
        }
        if !dsu.union(u, v) {
            return Err(TreeError::CycleDetected { u, v });
        }
    }
    if edges.len() != n - 1 {
        return Err(TreeError::DisconnectedGraph {
            components: n - edges.len(),
        });
    }

    let mut norm: Vec<(Vertex, Vertex)> = edges
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    norm.sort_unstable();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &norm {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Tree {
        n,
        edges: norm,
        adj,
        rooting: OnceLock::new(),
    })
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Tree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Center, levels and branch structure, computed once on first use.
    pub fn rooting(&self) -> &Rooting {
        self.rooting.get_or_init(|| Rooting::new(self, center(self)))
    }

    pub fn center_info(&self) -> &CenterInfo {
        &self.rooting().center
    }

    pub fn level_table(&self) -> &LevelTable {
        &self.rooting().levels
    }

    /// BFS distances from `source` to every vertex.
    pub fn bfs(&self, source: Vertex) -> Vec<u32> {
        self.bfs_multi(&[source])
    }

    fn bfs_multi(&self, sources: &[Vertex]) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        for &s in sources {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn eccentricities(&self) -> Vec<u32> {
        self.vertices()
            .map(|v| self.bfs(v).into_iter().max().unwrap_or(0))
            .collect()
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut data = Vec::with_capacity(self.n * self.n);
        for v in self.vertices() {
            data.extend(self.bfs(v));
        }
        DistanceMatrix { n: self.n, data }
    }
}

/// All-pairs distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// The one or two central vertices of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterInfo {
    /// Sorted; two entries means the centers are adjacent.
    pub centers: Vec<Vertex>,
}

impl CenterInfo {
    /// 0 for one center, 1 for two.
    pub fn epsilon(&self) -> u32 {
        (self.centers.len() - 1) as u32
    }

    pub fn epsilon_prime(&self) -> u32 {
        1 - self.epsilon()
    }

    pub fn is_central(&self, v: Vertex) -> bool {
        self.centers.contains(&v)
    }

    pub fn has_two(&self) -> bool {
        self.centers.len() == 2
    }
}

/// Computes the center by repeatedly stripping leaves.
pub fn center(tree: &Tree) -> CenterInfo {
    let n = tree.n();
    if n <= 2 {
        return CenterInfo {
            centers: (0..n).collect(),
        };
    }
    let mut deg: Vec<usize> = tree.vertices().map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: Vec<Vertex> = tree.vertices().filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &leaves {
            removed[leaf] = true;
            remaining -= 1;
            for &u in tree.neighbors(leaf) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        leaves = next;
    }
    CenterInfo {
        centers: tree.vertices().filter(|&v| !removed[v]).collect(),
    }
}

/// Per-vertex detour level (distance to the nearest central vertex) and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTable {
    pub level: Vec<u32>,
    pub total: u64,
}

impl LevelTable {
    pub fn get(&self, v: Vertex) -> u32 {
        self.level[v]
    }
}

pub fn levels(tree: &Tree, c: &CenterInfo) -> LevelTable {
    let level = tree.bfs_multi(&c.centers);
    let total = level.iter().map(|&l| u64::from(l)).sum();
    LevelTable { level, total }
}

/// Which branch a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchId {
    /// Root of the branch (a non-central neighbor of a center); `None` for central vertices.
    pub anchor: Option<Vertex>,
    /// The central vertex the branch hangs from. A central vertex is its own side.
    pub side: Vertex,
}

/// A tree hung from its center(s): parents point toward the center.
#[derive(Debug, Clone)]
pub struct Rooting {
    pub center: CenterInfo,
    pub levels: LevelTable,
    parent: Vec<Option<Vertex>>,
    side: Vec<Vertex>,
    anchor: Vec<Option<Vertex>>,
}

impl Rooting {
    pub fn new(tree: &Tree, center: CenterInfo) -> Self {
        let n = tree.n();
        let lt = levels(tree, &center);
        let mut parent = vec![None; n];
        let mut side = vec![usize::MAX; n];
        let mut anchor = vec![None; n];
        let mut queue = VecDeque::new();
        for &w in &center.centers {
            side[w] = w;
            queue.push_back(w);
        }
        while let Some(x) = queue.pop_front() {
            for &y in tree.neighbors(x) {
                if side[y] != usize::MAX {
                    continue;
                }
                parent[y] = Some(x);
                side[y] = side[x];
                anchor[y] = if center.is_central(x) { Some(y) } else { anchor[x] };
                queue.push_back(y);
            }
        }
        Rooting {
            center,
            levels: lt,
            parent,
            side,
            anchor,
        }
    }

    pub fn level(&self, v: Vertex) -> u32 {
        self.levels.level[v]
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn side(&self, v: Vertex) -> Vertex {
        self.side[v]
    }

    pub fn anchor(&self, v: Vertex) -> Option<Vertex> {
        self.anchor[v]
    }

    pub fn branch_of(&self, v: Vertex) -> BranchId {
        BranchId {
            anchor: self.anchor[v],
            side: self.side[v],
        }
    }

    /// Deepest common ancestor of `u` and `v`, or `None` when they hang from
    /// different centers. A vertex counts as its own ancestor.
    pub fn common_ancestor(&self, mut u: Vertex, mut v: Vertex) -> Option<Vertex> {
        if self.side[u] != self.side[v] {
            return None;
        }
        while self.level(u) > self.level(v) {
            u = self.parent[u]?;
        }
        while self.level(v) > self.level(u) {
            v = self.parent[v]?;
        }
        while u != v {
            u = self.parent[u]?;
            v = self.parent[v]?;
        }
        Some(u)
    }

    pub fn phi(&self, u: Vertex, v: Vertex) -> u32 {
        self.common_ancestor(u, v).map_or(0, |a| self.level(a))
    }

    pub fn delta(&self, u: Vertex, v: Vertex) -> u32 {
        u32::from(self.center.has_two() && self.side[u] != self.side[v])
    }

    /// `L(u) + L(v) - 2 phi(u, v) + delta(u, v)`.
    pub fn distance_via_levels(&self, u: Vertex, v: Vertex) -> u32 {
        if u == v {
            return 0;
        }
        self.level(u) + self.level(v) - 2 * self.phi(u, v) + self.delta(u, v)
    }
}

fn rooting_for<'a>(tree: &'a Tree, c: &CenterInfo) -> &'a Rooting {
    let r = tree.rooting();
    debug_assert_eq!(&r.center, c, "center does not belong to this tree");
    r
}

pub fn branch_of(tree: &Tree, c: &CenterInfo, u: Vertex) -> BranchId {
    rooting_for(tree, c).branch_of(u)
}

pub fn phi(tree: &Tree, c: &CenterInfo, lt: &LevelTable, u: Vertex, v: Vertex) -> u32 {
    let r = rooting_for(tree, c);
    debug_assert_eq!(&r.levels, lt);
    r.phi(u, v)
}

pub fn delta(tree: &Tree, c: &CenterInfo, u: Vertex, v: Vertex) -> u32 {
    rooting_for(tree, c).delta(u, v)
}

/// Length of the unique `u`-`v` path, by traversal.
pub fn distance(tree: &Tree, u: Vertex, v: Vertex) -> u32 {
    tree.bfs(u)[v]
}

pub fn distance_via_levels(tree: &Tree, c: &CenterInfo, lt: &LevelTable, u: Vertex, v: Vertex) -> u32 {
    let r = rooting_for(tree, c);
    debug_assert_eq!(&r.levels, lt);
    r.distance_via_levels(u, v)
}

/// Diameter by double BFS sweep.
pub fn diameter(tree: &Tree) -> u32 {
    let first = tree.bfs(0);
    let far = (0..tree.n())
        .max_by_key(|&v| (first[v], std::cmp::Reverse(v)))
        .unwrap_or(0);
    tree.bfs(far).into_iter().max().unwrap_or(0)
}

/// True iff every pairwise distance is at most `n / 2` (compared as `2d <= n`).
pub fn is_db_half(tree: &Tree) -> bool {
    2 * diameter(tree) as usize <= tree.n()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star3() -> Tree {
        validate_tree(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    // two adjacent centers 0 and 1, each with two leaves
    fn t3_3() -> Tree {
        validate_tree(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        validate_tree(n, &edges).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            validate_tree(3, &[(0, 1), (1, 2), (0, 2)]).unwrap_err(),
            TreeError::CycleDetected { u: 0, v: 2 }
        );
        assert_eq!(
            validate_tree(4, &[(0, 1), (2, 3)]).unwrap_err(),
            TreeError::DisconnectedGraph { components: 2 }
        );
        assert_eq!(
            validate_tree(3, &[(0, 1), (1, 7)]).unwrap_err(),
            TreeError::BadVertexId { id: 7, n: 3 }
        );
        assert_eq!(validate_tree(0, &[]).unwrap_err(), TreeError::Empty);
        assert!(matches!(
            validate_tree(2, &[(0, 1), (1, 0)]),
            Err(TreeError::CycleDetected { .. })
        ));
        assert!(matches!(
            validate_tree(2, &[(1, 1)]),
            Err(TreeError::CycleDetected { .. })
        ));
        assert_eq!(validate_tree(1, &[]).unwrap().n(), 1);
    }

    #[test]
    fn edge_order_does_not_matter() {
        let a = validate_tree(4, &[(3, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(a, star3());
    }

    #[test]
    fn centers() {
        let c = center(&star3());
        assert_eq!(c.centers, vec![0]);
        assert_eq!((c.epsilon(), c.epsilon_prime()), (0, 1));
        let c = center(&path(4));
        assert_eq!(c.centers, vec![1, 2]);
        assert_eq!((c.epsilon(), c.epsilon_prime()), (1, 0));
        // path 0-1-2-3 with pendants 4-1 and 5-2
        let p4 = validate_tree(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(center(&p4).centers, vec![1, 2]);
        assert_eq!(center(&path(1)).centers, vec![0]);
        assert_eq!(center(&path(2)).centers, vec![0, 1]);
    }

    #[test]
    fn level_tables() {
        let t = star3();
        let lt = levels(&t, &center(&t));
        assert_eq!(lt.level, vec![0, 1, 1, 1]);
        assert_eq!(lt.total, 3);
        let t = t3_3();
        assert_eq!(levels(&t, &center(&t)).total, 4);
    }

    #[test]
    fn branches() {
        let t = star3();
        let c = center(&t);
        assert_eq!(
            branch_of(&t, &c, 2),
            BranchId {
                anchor: Some(2),
                side: 0
            }
        );
        assert_eq!(branch_of(&t, &c, 0).anchor, None);

        // depth-2 two-center tree: 0 - 1 centers, 2 child of 0, 3 child of 2
        let t = validate_tree(6, &[(0, 1), (0, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let c = center(&t);
        assert_eq!(c.centers, vec![0, 1]);
        assert_eq!(
            branch_of(&t, &c, 3),
            BranchId {
                anchor: Some(2),
                side: 0
            }
        );
        assert_eq!(
            branch_of(&t, &c, 5),
            BranchId {
                anchor: Some(4),
                side: 1
            }
        );
    }

    #[test]
    fn phi_and_delta() {
        let t = star3();
        let (c, lt) = (center(&t), t.level_table().clone());
        assert_eq!(phi(&t, &c, &lt, 2, 3), 0);
        assert_eq!(delta(&t, &c, 2, 3), 0);

        let t = t3_3();
        let (c, lt) = (center(&t), t.level_table().clone());
        assert_eq!(phi(&t, &c, &lt, 0, 1), 0);
        assert_eq!(delta(&t, &c, 0, 1), 1);
        assert_eq!(delta(&t, &c, 2, 4), 1);
        assert_eq!(delta(&t, &c, 2, 3), 0);

        // 0 center; chains 0-1-2-3 and 0-4-5-6; 2 is an ancestor of 3 at level 2
        let t = validate_tree(7, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let (c, lt) = (t.center_info().clone(), t.level_table().clone());
        assert_eq!(c.centers, vec![0]);
        assert_eq!(phi(&t, &c, &lt, 2, 3), 2);
        assert_eq!(phi(&t, &c, &lt, 1, 3), 1);
        assert_eq!(phi(&t, &c, &lt, 3, 5), 0);
    }

    #[test]
    fn distances() {
        let t = star3();
        assert_eq!(distance(&t, 2, 2), 0);
        assert_eq!(distance(&t, 2, 3), 2);
        let (c, lt) = (t.center_info().clone(), t.level_table().clone());
        assert_eq!(distance_via_levels(&t, &c, &lt, 2, 3), 2);
        let t = t3_3();
        let (c, lt) = (t.center_info().clone(), t.level_table().clone());
        assert_eq!(distance_via_levels(&t, &c, &lt, 0, 1), 1);
        assert_eq!(distance_via_levels(&t, &c, &lt, 2, 5), 3);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&star3()), 2);
        assert!(is_db_half(&star3()));
        assert_eq!(diameter(&path(5)), 4);
        assert!(!is_db_half(&path(5)));
        assert_eq!(diameter(&path(1)), 0);
    }
}
