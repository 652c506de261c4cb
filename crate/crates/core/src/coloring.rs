//! Hamiltonian colorings of trees: verification, the level-sum lower bound,
//! the ordering conditions under which it is attained, and the colorings
//! built from a vertex order.
//!
//! Colors are 0-based. A coloring `c` is hamiltonian when
//! `D(u, v) + |c(u) - c(v)| >= n - 1` for every pair of distinct vertices.

use thiserror::Error;

use crate::qualified::{find_qualified_order, DEFAULT_SEARCH_NODE_LIMIT};
use crate::tree::{is_db_half, DistanceMatrix, Tree, Vertex};

pub type Color = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has no color")]
    MissingVertexColor { vertex: Vertex },
    #[error("vertex {vertex} is colored more than once")]
    DuplicateVertexColor { vertex: Vertex },
    #[error("vertex {vertex} does not exist in a tree of order {n}")]
    UnknownVertex { vertex: Vertex, n: usize },
    #[error("requires n >= 4 and maximum degree >= 3 (got n = {n}, max degree = {max_degree})")]
    HypothesisViolated { n: usize, max_degree: usize },
    #[error("not a permutation of the vertices: {reason}")]
    NotAPermutation { reason: String },
    #[error("increment into position {position} would be {increment}")]
    NegativeIncrement { position: usize, increment: i64 },
    #[error("no vertex order satisfies the optimality conditions")]
    NoQualifiedOrder,
    #[error("qualified-order search gave up after {nodes} nodes")]
    SearchBudgetExceeded { nodes: u64 },
}

/// A color per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    /// Builds a coloring of `0..n` from `(vertex, color)` pairs, each vertex exactly once.
    pub fn from_assignments<I>(n: usize, pairs: I) -> Result<Self, ColoringError>
    where
        I: IntoIterator<Item = (Vertex, Color)>,
    {
        let mut colors = vec![None; n];
        for (vertex, color) in pairs {
            let slot = colors
                .get_mut(vertex)
                .ok_or(ColoringError::UnknownVertex { vertex, n })?;
            if slot.replace(color).is_some() {
                return Err(ColoringError::DuplicateVertexColor { vertex });
            }
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(vertex, c)| c.ok_or(ColoringError::MissingVertexColor { vertex }))
            .collect::<Result<_, _>>()?;
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn span(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// A permutation `u_0, ..., u_{n-1}` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    order: Vec<Vertex>,
}

impl LinearOrder {
    pub fn new(n: usize, order: Vec<Vertex>) -> Result<Self, ColoringError> {
        if order.len() != n {
            return Err(ColoringError::NotAPermutation {
                reason: format!("length {} for {} vertices", order.len(), n),
            });
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(ColoringError::NotAPermutation {
                    reason: format!("vertex {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ColoringError::NotAPermutation {
                    reason: format!("vertex {v} repeated"),
                });
            }
        }
        Ok(LinearOrder { order })
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.order.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.order.last().copied()
    }

    /// Vertices sorted by color (ties by id).
    pub fn from_coloring(coloring: &Coloring) -> Self {
        let mut order: Vec<Vertex> = (0..coloring.len()).collect();
        order.sort_by_key(|&v| (coloring.color(v), v));
        LinearOrder { order }
    }
}

/// A pair of vertices whose colors are too close for their distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: u32,
    pub color_gap: Color,
    /// `distance + color_gap - (n - 1)`, always negative.
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the hamiltonian condition on every unordered pair.
pub fn verify(tree: &Tree, coloring: &Coloring) -> Result<VerifyReport, ColoringError> {
    let n = tree.n();
    if coloring.len() < n {
        return Err(ColoringError::MissingVertexColor { vertex: coloring.len() });
    }
    if coloring.len() > n {
        return Err(ColoringError::UnknownVertex { vertex: n, n });
    }
    let dm = tree.distance_matrix();
    Ok(verify_with(&dm, coloring))
}

pub(crate) fn verify_with(dm: &DistanceMatrix, coloring: &Coloring) -> VerifyReport {
    let n = dm.n();
    let need = n.saturating_sub(1) as i64;
    let mut violations = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let distance = dm.get(u, v);
            let color_gap = coloring.color(u).abs_diff(coloring.color(v));
            let slack = i64::from(distance) + color_gap as i64 - need;
            if slack < 0 {
                violations.push(Violation {
                    u,
                    v,
                    distance,
                    color_gap,
                    slack,
                });
            }
        }
    }
    VerifyReport { violations }
}

fn check_hypotheses(tree: &Tree) -> Result<(), ColoringError> {
    let (n, max_degree) = (tree.n(), tree.max_degree());
    if n < 4 || max_degree < 3 {
        return Err(ColoringError::HypothesisViolated { n, max_degree });
    }
    Ok(())
}

/// `(n-1)(n-1-eps) + eps' - 2 L(T)` for the given order, center count and total level.
pub fn lower_bound_formula(n: u64, two_centers: bool, total_level: u64) -> i64 {
    let (n, total) = (n as i64, total_level as i64);
    let eps = i64::from(two_centers);
    (n - 1) * (n - 1 - eps) + (1 - eps) - 2 * total
}

/// Lower bound on the hamiltonian chromatic number of a tree with `n >= 4`
/// and maximum degree at least 3.
pub fn lower_bound(tree: &Tree) -> Result<i64, ColoringError> {
    check_hypotheses(tree)?;
    let r = tree.rooting();
    Ok(lower_bound_formula(tree.n() as u64, r.center.has_two(), r.levels.total))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderViolation {
    /// One center: `u_0` must be the center.
    FirstNotCenter,
    /// One center: `u_{n-1}` must be adjacent to the center.
    LastNotAdjacentToCenter,
    /// Two centers: `{u_0, u_{n-1}}` must be the two centers.
    EndpointsNotCenters,
    /// One center: consecutive vertices share a branch.
    SameBranch,
    /// Two centers: consecutive vertices hang from the same center.
    SameSide,
    /// Consecutive vertices are more than `n / 2` apart.
    GapTooLarge { distance: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderConditionReport {
    pub cond_endpoints: bool,
    pub cond_branches: bool,
    /// Always true when the gap condition was not requested.
    pub cond_gap: bool,
    pub gap_checked: bool,
    /// Position (or pair start index) and reason of the first failure.
    pub first_violation: Option<(usize, OrderViolation)>,
}

impl OrderConditionReport {
    pub fn all_hold(&self) -> bool {
        self.cond_endpoints && self.cond_branches && self.cond_gap
    }
}

/// Evaluates the endpoint, branch-alternation and (optionally) consecutive
/// distance conditions on `order`. When all hold, [`coloring_from_order`]
/// produces an optimal coloring whose span is [`lower_bound`].
pub fn check_order(tree: &Tree, order: &LinearOrder, require_gap: bool) -> Result<OrderConditionReport, ColoringError> {
    let n = tree.n();
    if order.len() != n {
        return Err(ColoringError::NotAPermutation {
            reason: format!("length {} for {} vertices", order.len(), n),
        });
    }
    let r = tree.rooting();
    let centers = &r.center.centers;
    let u = order.as_slice();
    let mut first_violation = None;
    let mut note = |i: usize, why: OrderViolation| {
        first_violation.get_or_insert((i, why));
    };

    let (first, last) = (u[0], u[n - 1]);
    let cond_endpoints = if r.center.has_two() {
        let ok = n >= 2 && first != last && centers.contains(&first) && centers.contains(&last);
        if !ok {
            note(0, OrderViolation::EndpointsNotCenters);
        }
        ok
    } else {
        let w = centers[0];
        let first_ok = first == w;
        let last_ok = tree.neighbors(w).contains(&last);
        if !first_ok {
            note(0, OrderViolation::FirstNotCenter);
        } else if !last_ok {
            note(n - 1, OrderViolation::LastNotAdjacentToCenter);
        }
        first_ok && last_ok
    };

    let dm = require_gap.then(|| tree.distance_matrix());
    let mut cond_branches = true;
    let mut cond_gap = true;
    for i in 0..n.saturating_sub(1) {
        let (a, b) = (u[i], u[i + 1]);
        if r.center.has_two() {
            if r.side(a) == r.side(b) {
                cond_branches = false;
                note(i, OrderViolation::SameSide);
            }
        } else if r.anchor(a).is_some() && r.anchor(a) == r.anchor(b) {
            cond_branches = false;
            note(i, OrderViolation::SameBranch);
        }
        if let Some(dm) = &dm {
            let distance = dm.get(a, b);
            if 2 * distance as usize > n {
                cond_gap = false;
                note(i, OrderViolation::GapTooLarge { distance });
            }
        }
    }

    Ok(OrderConditionReport {
        cond_endpoints,
        cond_branches,
        cond_gap,
        gap_checked: require_gap,
        first_violation,
    })
}

/// The coloring `c(u_0) = 0`, `c(u_{i+1}) = c(u_i) + n - 1 - L(u_i) - L(u_{i+1}) - eps`.
///
/// Fails if some increment is negative; use [`greedy_coloring`] for arbitrary orders.
pub fn coloring_from_order(tree: &Tree, order: &LinearOrder) -> Result<Coloring, ColoringError> {
    let n = tree.n();
    if order.len() != n {
        return Err(ColoringError::NotAPermutation {
            reason: format!("length {} for {} vertices", order.len(), n),
        });
    }
    let r = tree.rooting();
    let eps = i64::from(r.center.epsilon());
    let base = n as i64 - 1 - eps;
    let u = order.as_slice();
    let mut colors = vec![0; n];
    let mut current: i64 = 0;
    for i in 1..n {
        let increment = base - i64::from(r.level(u[i - 1])) - i64::from(r.level(u[i]));
        if increment < 0 {
            return Err(ColoringError::NegativeIncrement { position: i, increment });
        }
        current += increment;
        colors[u[i]] = current as Color;
    }
    Ok(Coloring::new(colors))
}

/// Smallest coloring whose colors are non-decreasing along `order`:
/// `c(u_i) = max_{j<i} c(u_j) + max(0, n - 1 - D(u_j, u_i))`. Always hamiltonian.
pub fn greedy_coloring(tree: &Tree, order: &LinearOrder) -> Coloring {
    greedy_with(&tree.distance_matrix(), order.as_slice())
}

pub(crate) fn greedy_with(dm: &DistanceMatrix, order: &[Vertex]) -> Coloring {
    let n = dm.n();
    let need = n.saturating_sub(1) as Color;
    let mut colors = vec![0; n];
    for i in 1..order.len() {
        let v = order[i];
        colors[v] = order[..i]
            .iter()
            .map(|&p| colors[p] + need.saturating_sub(Color::from(dm.get(p, v))))
            .max()
            .unwrap_or(0);
    }
    Coloring::new(colors)
}

/// An optimal coloring certified by a qualified vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcCertificate {
    pub value: i64,
    pub order: LinearOrder,
    pub coloring: Coloring,
}

/// Searches for a vertex order meeting the optimality conditions and, if one
/// exists, returns the resulting coloring; its span equals [`lower_bound`].
///
/// [`ColoringError::NoQualifiedOrder`] only means the sufficient condition
/// fails for this tree, not that the bound is loose.
pub fn hc_via_conditions(tree: &Tree) -> Result<HcCertificate, ColoringError> {
    hc_via_conditions_with_limit(tree, DEFAULT_SEARCH_NODE_LIMIT)
}

pub fn hc_via_conditions_with_limit(tree: &Tree, node_limit: u64) -> Result<HcCertificate, ColoringError> {
    let value = lower_bound(tree)?;
    let order = find_qualified_order(tree, node_limit)?.ok_or(ColoringError::NoQualifiedOrder)?;
    certify(tree, order, value)
}

pub(crate) fn certify(tree: &Tree, order: LinearOrder, value: i64) -> Result<HcCertificate, ColoringError> {
    let report = check_order(tree, &order, !is_db_half(tree))?;
    assert!(report.all_hold(), "search returned an unqualified order: {report:?}");
    let coloring = coloring_from_order(tree, &order)?;
    assert_eq!(coloring.span() as i64, value, "qualified order must attain the bound");
    Ok(HcCertificate { value, order, coloring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::validate_tree;

    fn star3() -> Tree {
        validate_tree(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn t3_3() -> Tree {
        validate_tree(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    fn order(n: usize, v: &[Vertex]) -> LinearOrder {
        LinearOrder::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn verify_star() {
        let t = star3();
        let ok = Coloring::new(vec![0, 2, 3, 4]);
        assert!(verify(&t, &ok).unwrap().is_valid());
        let zeros = Coloring::new(vec![0; 4]);
        let report = verify(&t, &zeros).unwrap();
        assert_eq!(report.violations.len(), 6);
        // leaf pairs: 2 + 0 < 3
        let leaf_pair = report.violations.iter().find(|v| (v.u, v.v) == (1, 2)).unwrap();
        assert_eq!((leaf_pair.distance, leaf_pair.slack), (2, -1));
        assert_eq!(
            verify(&t, &Coloring::new(vec![0, 1])).unwrap_err(),
            ColoringError::MissingVertexColor { vertex: 2 }
        );
        let single = validate_tree(1, &[]).unwrap();
        assert!(verify(&single, &Coloring::new(vec![0])).unwrap().is_valid());
    }

    #[test]
    fn from_assignments_errors() {
        assert_eq!(
            Coloring::from_assignments(3, [(0, 1), (2, 5)]).unwrap_err(),
            ColoringError::MissingVertexColor { vertex: 1 }
        );
        assert_eq!(
            Coloring::from_assignments(2, [(0, 1), (0, 5), (1, 1)]).unwrap_err(),
            ColoringError::DuplicateVertexColor { vertex: 0 }
        );
        assert!(matches!(
            Coloring::from_assignments(2, [(4, 1)]),
            Err(ColoringError::UnknownVertex { vertex: 4, .. })
        ));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&star3()).unwrap(), 4);
        assert_eq!(lower_bound(&t3_3()).unwrap(), 12);
        let path = validate_tree(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            lower_bound(&path).unwrap_err(),
            ColoringError::HypothesisViolated { n: 5, max_degree: 2 }
        );
        let tiny = validate_tree(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(lower_bound(&tiny).is_err());
    }

    #[test]
    fn permutation_checks() {
        assert!(LinearOrder::new(3, vec![0, 1]).is_err());
        assert!(LinearOrder::new(3, vec![0, 1, 1]).is_err());
        assert!(LinearOrder::new(3, vec![0, 1, 3]).is_err());
        assert!(LinearOrder::new(3, vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn check_order_star() {
        let t = star3();
        let rep = check_order(&t, &order(4, &[0, 1, 2, 3]), true).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.first_violation, None);
        let rep = check_order(&t, &order(4, &[1, 0, 2, 3]), false).unwrap();
        assert!(!rep.cond_endpoints);
        assert!(rep.cond_branches);
        assert_eq!(rep.first_violation, Some((0, OrderViolation::FirstNotCenter)));
    }

    #[test]
    fn check_order_two_centers() {
        let t = t3_3();
        // 0 and 1 are centers; 2, 3 hang from 0 and 4, 5 from 1
        let rep = check_order(&t, &order(6, &[0, 4, 2, 5, 3, 1]), false).unwrap();
        assert!(rep.all_hold());
        let rep = check_order(&t, &order(6, &[0, 2, 4, 3, 5, 1]), false).unwrap();
        assert!(rep.cond_endpoints);
        assert!(!rep.cond_branches);
        assert_eq!(rep.first_violation, Some((0, OrderViolation::SameSide)));
        let rep = check_order(&t, &order(6, &[4, 0, 2, 5, 3, 1]), false).unwrap();
        assert!(!rep.cond_endpoints);
    }

    #[test]
    fn check_order_gap() {
        // path 0..4 with pendant 5 on the center 2: n = 6, diameter 4
        let t = validate_tree(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        let rep = check_order(&t, &order(6, &[2, 0, 3, 1, 4, 5]), true).unwrap();
        assert!(rep.all_hold());
        let rep = check_order(&t, &order(6, &[2, 0, 4, 1, 3, 5]), true).unwrap();
        assert!(!rep.cond_gap);
        assert_eq!(
            rep.first_violation,
            Some((1, OrderViolation::GapTooLarge { distance: 4 }))
        );
        let rep = check_order(&t, &order(6, &[2, 0, 4, 1, 3, 5]), false).unwrap();
        assert!(rep.all_hold() && !rep.gap_checked);
    }

    #[test]
    fn coloring_from_orders() {
        let t = star3();
        let c = coloring_from_order(&t, &order(4, &[0, 1, 2, 3])).unwrap();
        assert_eq!(c.colors(), &[0, 2, 3, 4]);
        let c = coloring_from_order(&t, &order(4, &[1, 0, 2, 3])).unwrap();
        assert_eq!(c.colors(), &[2, 0, 4, 5]);
        assert_eq!(c.span(), 5);
        assert!(verify(&t, &c).unwrap().is_valid());

        let t = t3_3();
        let c = coloring_from_order(&t, &order(6, &[0, 4, 2, 5, 3, 1])).unwrap();
        assert_eq!(c.span(), 12);
    }

    #[test]
    fn greedy() {
        let t = star3();
        assert_eq!(greedy_coloring(&t, &order(4, &[0, 1, 2, 3])).span(), 4);
        let p = validate_tree(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = greedy_coloring(&p, &order(4, &[1, 3, 0, 2]));
        assert!(verify(&p, &c).unwrap().is_valid());
    }

    #[test]
    fn conditions_search() {
        let cert = hc_via_conditions(&star3()).unwrap();
        assert_eq!(cert.value, 4);
        assert_eq!(cert.coloring.span(), 4);
        let cert = hc_via_conditions(&t3_3()).unwrap();
        assert_eq!(cert.value, 12);
        let path = validate_tree(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(
            hc_via_conditions(&path),
            Err(ColoringError::HypothesisViolated { .. })
        ));
    }
}
