//! Four parametric tree families with closed forms for their order, total
//! level and hamiltonian chromatic number, plus a vertex order for each
//! instance that attains the lower bound.
//!
//! Vertex ids per family:
//!
//! * symmetric `T_{k+1}(d)`: breadth-first. Even `d`: `0` is the center `w`.
//!   Odd `d`: `0` is `w`, `1` is `w'`. Children are numbered in index order.
//! * firecracker `F(m, k)`: path vertices `w^i_k` are `0..m` in path order,
//!   apexes `w^i_1` are `m..2m`, then the remaining leaves `w^i_2..w^i_{k-1}`
//!   copy by copy from `2m`.
//! * caterpillar `C(m, k)`: spine `v_1..v_m` is `0..m`, then the legs
//!   `v_i^1..v_i^{k-2}` for `i = 2..m-1` in that order.
//! * path plus pendant `P_m'`: path `v_1..v_m` is `0..m`, then `v'` (and
//!   `v''` for even `m`).
//!
//! Canonical orders follow the explicit constructions. Each is checked as
//! a permutation satisfying the optimality conditions; one that fails is
//! replaced by the result of the qualified-order search and the instance
//! records why.

use num_rational::Ratio;
use thiserror::Error;

use crate::coloring::{check_order, ColoringError, LinearOrder};
use crate::qualified::{find_qualified_order, DEFAULT_SEARCH_NODE_LIMIT};
use crate::tree::{is_db_half, validate_tree, Tree, Vertex};

/// Instances with more vertices than this are refused.
pub const MAX_FAMILY_N: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: &'static str, reason: String },
    #[error("closed form for {what} is not an integer")]
    NonIntegral { what: &'static str },
    #[error("no qualified order for {family}: {source}")]
    NoOrder {
        family: &'static str,
        #[source]
        source: ColoringError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `T_{k+1}(d)`: internal vertices of degree `k + 1`, leaves all at eccentricity `d`.
    Symmetric { k: u32, d: u32 },
    /// `F(m, k)`: `m` copies of a `(k-1)`-star, one leaf of each on a path.
    Firecracker { m: u32, k: u32 },
    /// `C(m, k)`: spine of `m` vertices, inner spine vertices of degree `k`.
    Caterpillar { m: u32, k: u32 },
    /// `P_m'`: path on `m` vertices with a pendant on each central vertex.
    PathPlusPendant { m: u32 },
}

/// Closed-form order, total level and hamiltonian chromatic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm {
    pub n: u64,
    pub total_level: u64,
    pub hc: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSource {
    /// The explicit construction, validated as is.
    Literal,
    /// The explicit construction failed validation; the order came from search.
    Repaired { reason: String },
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub spec: FamilySpec,
    pub tree: Tree,
    pub canonical_order: LinearOrder,
    /// Structured vertex name per id, e.g. `w^2_{0,1}`.
    pub labels: Vec<String>,
    pub order_source: OrderSource,
}

impl FamilyInstance {
    /// Whether the consecutive-distance condition has to be checked explicitly.
    pub fn require_gap(&self) -> bool {
        !is_db_half(&self.tree)
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Symmetric { .. } => "symmetric",
            FamilySpec::Firecracker { .. } => "firecracker",
            FamilySpec::Caterpillar { .. } => "caterpillar",
            FamilySpec::PathPlusPendant { .. } => "pathpendant",
        }
    }

    /// Parameter names and values, in display order.
    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            FamilySpec::Symmetric { k, d } => vec![("k", k), ("d", d)],
            FamilySpec::Firecracker { m, k } => vec![("m", m), ("k", k)],
            FamilySpec::Caterpillar { m, k } => vec![("m", m), ("k", k)],
            FamilySpec::PathPlusPendant { m } => vec![("m", m)],
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |reason: &str| {
            Err(FamilyError::BadParams {
                family: self.name(),
                reason: reason.to_string(),
            })
        };
        match *self {
            FamilySpec::Symmetric { k, d } if k < 2 || d < 2 => bad("need k >= 2 and d >= 2"),
            FamilySpec::Firecracker { m, k } if m < 3 || k < 4 => bad("need m >= 3 and k >= 4"),
            FamilySpec::Caterpillar { m, k } if m < 3 || k < 3 => bad("need m >= 3 and k >= 3"),
            FamilySpec::PathPlusPendant { m } if m < 3 => bad("need m >= 3"),
            _ => Ok(()),
        }?;
        let n = self.closed_form()?.n;
        if n > MAX_FAMILY_N {
            return bad(&format!("{n} vertices exceeds the cap of {MAX_FAMILY_N}"));
        }
        Ok(())
    }

    pub fn closed_form(&self) -> Result<ClosedForm, FamilyError> {
        match *self {
            FamilySpec::Symmetric { k, d } => symmetric_closed_form(k, d),
            FamilySpec::Firecracker { m, k } => firecracker_closed_form(m, k),
            FamilySpec::Caterpillar { m, k } => caterpillar_closed_form(m, k),
            FamilySpec::PathPlusPendant { m } => path_plus_pendant_closed_form(m),
        }
    }

    pub fn generate(&self) -> Result<FamilyInstance, FamilyError> {
        self.validate()?;
        let (n, edges, labels, literal) = match *self {
            FamilySpec::Symmetric { k, d } => build_symmetric(k as usize, d as usize),
            FamilySpec::Firecracker { m, k } => build_firecracker(m as usize, k as usize),
            FamilySpec::Caterpillar { m, k } => build_caterpillar(m as usize, k as usize),
            FamilySpec::PathPlusPendant { m } => build_path_plus_pendant(m as usize),
        };
        let tree = validate_tree(n, &edges).expect("family generators build trees");
        let (canonical_order, order_source) = match literal.finish(&tree) {
            Ok(order) => (order, OrderSource::Literal),
            Err(reason) => {
                log::info!(
                    "{} {:?}: explicit order rejected ({reason}); using searched order",
                    self.name(),
                    self.params()
                );
                let order = find_qualified_order(&tree, DEFAULT_SEARCH_NODE_LIMIT)
                    .and_then(|o| o.ok_or(ColoringError::NoQualifiedOrder))
                    .map_err(|source| FamilyError::NoOrder {
                        family: self.name(),
                        source,
                    })?;
                (order, OrderSource::Repaired { reason })
            }
        };
        Ok(FamilyInstance {
            spec: *self,
            tree,
            canonical_order,
            labels,
            order_source,
        })
    }
}

fn exact(r: Ratio<i128>, what: &'static str) -> Result<i128, FamilyError> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(FamilyError::NonIntegral { what })
    }
}

fn too_large(family: &'static str) -> FamilyError {
    FamilyError::BadParams {
        family,
        reason: "parameters overflow the closed forms".into(),
    }
}

fn finish(family: &'static str, n: i128, total_level: i128, hc: i128) -> Result<ClosedForm, FamilyError> {
    let conv = |x: i128| u64::try_from(x).map_err(|_| too_large(family));
    Ok(ClosedForm {
        n: conv(n)?,
        total_level: conv(total_level)?,
        hc: i64::try_from(hc).map_err(|_| too_large(family))?,
    })
}

fn r(x: i128) -> Ratio<i128> {
    Ratio::from_integer(x)
}

pub fn symmetric_closed_form(k: u32, d: u32) -> Result<ClosedForm, FamilyError> {
    const F: &str = "symmetric";
    if k < 2 || d < 2 {
        return Err(FamilyError::BadParams {
            family: F,
            reason: "need k >= 2 and d >= 2".into(),
        });
    }
    let (ki, di) = (i128::from(k), i128::from(d));
    let big = (ki)
        .checked_pow(d / 2)
        .filter(|&p| p < 1 << 40)
        .ok_or_else(|| too_large(F))?;
    let (kk, dd, kp) = (r(ki), r(di), r(big));
    let one = r(1);
    let (n, total, hc) = if d.is_multiple_of(2) {
        let n = one + (kk + 1) / (kk - 1) * (kp - 1);
        let total = (kk + 1) * (dd * kp / (r(2) * (kk - 1)) - (kp - 1) / ((kk - 1) * (kk - 1)));
        let hc =
            (kk + 1) * (kk + 1) / ((kk - 1) * (kk - 1)) * (kp - 1) * ((kp - 1) + (r(2) - (kk - 1) * dd) / (kk + 1))
                - (kk + 1) / (kk - 1) * dd
                + 1;
        (n, total, hc)
    } else {
        let n = r(2) * (one + kk / (kk - 1) * (kp - 1));
        let total = r(2) * kk * ((dd - 1) * kp / (r(2) * (kk - 1)) - (kp - 1) / ((kk - 1) * (kk - 1)));
        let hc = r(4) * kk / ((kk - 1) * (kk - 1)) * (kp - 1) * (kk * (kp - 1) + 1)
            + r(2) * kk / (kk - 1) * (r(2) - dd) * kp
            - r(2) * kk / (kk - 1);
        (n, total, hc)
    };
    finish(
        F,
        exact(n, "symmetric order")?,
        exact(total, "symmetric total level")?,
        exact(hc, "symmetric hc")?,
    )
}

pub fn firecracker_closed_form(m: u32, k: u32) -> Result<ClosedForm, FamilyError> {
    const F: &str = "firecracker";
    if m < 3 || k < 4 {
        return Err(FamilyError::BadParams {
            family: F,
            reason: "need m >= 3 and k >= 4".into(),
        });
    }
    let (m, k) = (i128::from(m), i128::from(k));
    let n = m * k;
    let (total, hc) = if m % 2 == 1 {
        (
            Ratio::new(k * m * m + (8 * k - 12) * m - k, 4),
            r(m * m * k * k - 6 * m * (k - 1) + 2) - Ratio::new(k * (m * m - 1), 2),
        )
    } else {
        (
            Ratio::new(k * m * m + 6 * m * (k - 2), 4),
            r(m * m * k * k - 6 * m * (k - 1) + 2) - Ratio::new(k * m * m, 2),
        )
    };
    finish(
        F,
        n,
        exact(total, "firecracker total level")?,
        exact(hc, "firecracker hc")?,
    )
}

pub fn caterpillar_closed_form(m: u32, k: u32) -> Result<ClosedForm, FamilyError> {
    const F: &str = "caterpillar";
    if m < 3 || k < 3 {
        return Err(FamilyError::BadParams {
            family: F,
            reason: "need m >= 3 and k >= 3".into(),
        });
    }
    let (m, k) = (i128::from(m), i128::from(k));
    let n = m * (k - 1) - 2 * (k - 2);
    let lead = r((m - 2) * (m - 2) * k * k);
    let (total, hc) = if m % 2 == 1 {
        (
            Ratio::new((m * m - 5) * (k - 1), 4) + 1,
            lead - Ratio::new((5 * m * m - 20 * m + 19) * k, 2) + Ratio::new(3 * m * m - 12 * m + 11, 2),
        )
    } else {
        (
            Ratio::new(m * (m - 2) * (k - 1), 4),
            lead - Ratio::new((5 * m * m - 20 * m + 20) * k, 2) + Ratio::new(3 * m * m - 12 * m + 12, 2),
        )
    };
    finish(
        F,
        n,
        exact(total, "caterpillar total level")?,
        exact(hc, "caterpillar hc")?,
    )
}

pub fn path_plus_pendant_closed_form(m: u32) -> Result<ClosedForm, FamilyError> {
    const F: &str = "pathpendant";
    if m < 3 {
        return Err(FamilyError::BadParams {
            family: F,
            reason: "need m >= 3".into(),
        });
    }
    let m = i128::from(m);
    let (n, total, hc) = if m % 2 == 1 {
        (m + 1, Ratio::new(m * m + 3, 4), Ratio::new(m * m - 1, 2))
    } else {
        (
            m + 2,
            Ratio::new(m * m - 2 * m + 8, 4),
            Ratio::new(m * m, 2) + 2 * m - 4,
        )
    };
    finish(
        F,
        n,
        exact(total, "path-plus-pendant total level")?,
        exact(hc, "path-plus-pendant hc")?,
    )
}

pub fn gen_symmetric(k: u32, d: u32) -> Result<FamilyInstance, FamilyError> {
    FamilySpec::Symmetric { k, d }.generate()
}

pub fn hc_symmetric(k: u32, d: u32) -> Result<i64, FamilyError> {
    symmetric_closed_form(k, d).map(|c| c.hc)
}

pub fn gen_firecracker(m: u32, k: u32) -> Result<FamilyInstance, FamilyError> {
    FamilySpec::Firecracker { m, k }.generate()
}

pub fn hc_firecracker(m: u32, k: u32) -> Result<i64, FamilyError> {
    firecracker_closed_form(m, k).map(|c| c.hc)
}

pub fn gen_caterpillar(m: u32, k: u32) -> Result<FamilyInstance, FamilyError> {
    FamilySpec::Caterpillar { m, k }.generate()
}

pub fn hc_caterpillar(m: u32, k: u32) -> Result<i64, FamilyError> {
    caterpillar_closed_form(m, k).map(|c| c.hc)
}

pub fn gen_path_plus_pendant(m: u32) -> Result<FamilyInstance, FamilyError> {
    FamilySpec::PathPlusPendant { m }.generate()
}

pub fn hc_path_plus_pendant(m: u32) -> Result<i64, FamilyError> {
    path_plus_pendant_closed_form(m).map(|c| c.hc)
}

/// Position assignments for an explicit order, validated on `finish`.
struct OrderDraft {
    slots: Vec<Option<Vertex>>,
    problems: Vec<String>,
}

impl OrderDraft {
    fn new(n: usize) -> Self {
        OrderDraft {
            slots: vec![None; n],
            problems: Vec::new(),
        }
    }

    fn place(&mut self, position: i64, v: Vertex, name: &str) {
        let Some(slot) = usize::try_from(position).ok().and_then(|p| self.slots.get_mut(p)) else {
            self.problems
                .push(format!("{name} placed at {position}, outside 0..{}", self.slots.len()));
            return;
        };
        if let Some(prev) = slot.replace(v) {
            self.problems
                .push(format!("{name} collides with vertex {prev} at {position}"));
        }
    }

    fn finish(self, tree: &Tree) -> Result<LinearOrder, String> {
        let n = self.slots.len();
        let mut problems = self.problems;
        let unfilled: Vec<usize> = (0..n).filter(|&p| self.slots[p].is_none()).collect();
        if !unfilled.is_empty() {
            problems.push(format!("positions {unfilled:?} left empty"));
        }
        if !problems.is_empty() {
            return Err(summarize(problems));
        }
        let order = LinearOrder::new(n, self.slots.into_iter().flatten().collect()).map_err(|e| e.to_string())?;
        let report = check_order(tree, &order, !is_db_half(tree)).map_err(|e| e.to_string())?;
        if report.all_hold() {
            Ok(order)
        } else {
            Err(format!("conditions fail: {:?}", report.first_violation))
        }
    }
}

fn summarize(mut problems: Vec<String>) -> String {
    let extra = problems.len().saturating_sub(3);
    problems.truncate(3);
    let mut s = problems.join("; ");
    if extra > 0 {
        s.push_str(&format!("; and {extra} more"));
    }
    s
}

type Built = (usize, Vec<(Vertex, Vertex)>, Vec<String>, OrderDraft);

fn index_label(base: &str, top: Option<usize>, path: &[usize]) -> String {
    let mut s = base.to_string();
    if let Some(t) = top {
        s.push_str(&format!("^{t}"));
    }
    if !path.is_empty() {
        let idx: Vec<String> = path.iter().map(usize::to_string).collect();
        s.push_str(&format!("_{{{}}}", idx.join(",")));
    }
    s
}

fn build_symmetric(k: usize, d: usize) -> Built {
    // per vertex: (side 0/1, top branch t (even d), child index path)
    struct Node {
        side: usize,
        top: Option<usize>,
        path: Vec<usize>,
        depth: usize,
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut edges = Vec::new();
    let even = d.is_multiple_of(2);
    let height = d / 2;
    nodes.push(Node {
        side: 0,
        top: None,
        path: vec![],
        depth: 0,
    });
    if !even {
        nodes.push(Node {
            side: 1,
            top: None,
            path: vec![],
            depth: 0,
        });
        edges.push((0, 1));
    }
    let mut head = 0;
    while head < nodes.len() {
        let (side, top, path, depth) = {
            let p = &nodes[head];
            (p.side, p.top, p.path.clone(), p.depth)
        };
        if depth < height {
            let fan = if even && depth == 0 { k + 1 } else { k };
            for c in 0..fan {
                let child = nodes.len();
                edges.push((head, child));
                let node = if even && depth == 0 {
                    Node {
                        side,
                        top: Some(c + 1),
                        path: vec![],
                        depth: 1,
                    }
                } else {
                    let mut p = path.clone();
                    p.push(c);
                    Node {
                        side,
                        top,
                        path: p,
                        depth: depth + 1,
                    }
                };
                nodes.push(node);
            }
        }
        head += 1;
    }
    let n = nodes.len();
    let labels = nodes
        .iter()
        .map(|nd| {
            let base = if nd.side == 0 { "w" } else { "w'" };
            index_label(base, nd.top, &nd.path)
        })
        .collect();

    // within a branch, j counts deepest levels first:
    // j = 1 + i_1 + i_2 k + ... + i_l k^{l-1} + sum of k^s over the levels below
    let kpow = |s: usize| k.pow(s as u32);
    let mut draft = OrderDraft::new(n);
    if even {
        let branch = (kpow(height) - 1) / (k - 1);
        let mut v = vec![vec![None; branch + 1]; k + 2];
        for (id, nd) in nodes.iter().enumerate().skip(1) {
            let l = nd.path.len();
            let mut j = 1 + nd.path.iter().enumerate().map(|(x, &i)| i * kpow(x)).sum::<usize>();
            j += (l + 1..height).map(kpow).sum::<usize>();
            v[nd.top.expect("non-central vertex has a top branch")][j] = Some(id);
        }
        draft.place(0, 0, "w");
        for j in 1..=(n - k - 2) {
            let t = match j % (k + 1) {
                0 => k + 1,
                t => t,
            };
            let s = j.div_ceil(k + 1);
            match v[t].get(s).copied().flatten() {
                Some(id) => draft.place(j as i64, id, &format!("v^{t}_{s}")),
                None => draft.problems.push(format!("v^{t}_{s} does not exist")),
            }
        }
        for j in (n - k - 1)..n {
            let t = j + k + 2 - n;
            let id = 1 + (t - 1);
            draft.place(j as i64, id, &format!("w^{t}"));
        }
    } else {
        let half = n / 2;
        let mut v = vec![vec![None; half]; 2];
        for (id, nd) in nodes.iter().enumerate().skip(2) {
            let l = nd.path.len();
            let mut j = 1 + nd.path.iter().enumerate().map(|(x, &i)| i * kpow(x)).sum::<usize>();
            j += (l + 1..=height).map(kpow).sum::<usize>();
            v[nd.side][j] = Some(id);
        }
        draft.place(0, 0, "w");
        draft.place(n as i64 - 1, 1, "w'");
        for j in 1..=(n - 2) {
            let s = j.div_ceil(2);
            let side = if j % 2 == 0 { 0 } else { 1 };
            match v[side].get(s).copied().flatten() {
                Some(id) => draft.place(j as i64, id, &format!("v_{s}")),
                None => draft.problems.push(format!("v_{s} on side {side} does not exist")),
            }
        }
    }
    (n, edges, labels, draft)
}

fn build_firecracker(m: usize, k: usize) -> Built {
    let n = m * k;
    // id of w^i_j, 1-based i and j
    let id = |i: usize, j: usize| -> Vertex {
        match j {
            _ if j == k => i - 1,
            1 => m + i - 1,
            _ => 2 * m + (i - 1) * (k - 2) + (j - 2),
        }
    };
    let mut edges = Vec::with_capacity(n - 1);
    let mut labels = vec![String::new(); n];
    for i in 1..=m {
        if i < m {
            edges.push((id(i, k), id(i + 1, k)));
        }
        for j in 2..=k {
            edges.push((id(i, 1), id(i, j)));
        }
        for j in 1..=k {
            labels[id(i, j)] = format!("w^{i}_{j}");
        }
    }

    let (mi, ni) = (m as i64, n as i64);
    let half = (m / 2) as i64;
    let mut draft = OrderDraft::new(n);
    if m % 2 == 1 {
        let c = m / 2;
        draft.place(0, id(c, k), "w");
        for i in 1..=m {
            let ii = i as i64;
            for j in 1..=k {
                let jj = j as i64;
                let t = if j < k {
                    if i == c {
                        (jj - 1) * mi + (ii - half)
                    } else if i < c {
                        (jj - 1) * mi + 2 * ii
                    } else {
                        (jj - 1) * mi + 2 * (ii - half) + 1
                    }
                } else if i == c {
                    continue;
                } else if i < c {
                    (jj - 1) * mi - 2 * (ii - half) + 1
                } else {
                    (jj - 1) * mi + 2 * (mi - ii + 1)
                };
                draft.place(t, id(i, j), &labels[id(i, j)]);
            }
        }
    } else {
        let h = m / 2;
        draft.place(0, id(h + 1, k), "w'");
        draft.place(ni - 1, id(h, k), "w");
        for i in 1..=m {
            let ii = i as i64;
            for j in 1..=k {
                let jj = j as i64;
                let t = if j < k {
                    if i <= h {
                        (jj - 1) * mi + 2 * ii - 1
                    } else {
                        (jj - 1) * mi + 2 * (ii - half)
                    }
                } else if i == h || i == h + 1 {
                    continue;
                } else if i < h {
                    (jj - 1) * mi + 2 * ii - 1
                } else {
                    (jj - 1) * mi + 2 * (ii - 1 - half)
                };
                draft.place(t, id(i, j), &labels[id(i, j)]);
            }
        }
    }
    (n, edges, labels, draft)
}

fn build_caterpillar(m: usize, k: usize) -> Built {
    let legs = k - 2;
    let n = m + (m - 2) * legs;
    let spine = |i: usize| i - 1;
    let leg = |i: usize, j: usize| m + (i - 2) * legs + (j - 1);
    let mut edges = Vec::with_capacity(n - 1);
    let mut labels = vec![String::new(); n];
    for i in 1..=m {
        labels[spine(i)] = format!("v_{i}");
        if i < m {
            edges.push((spine(i), spine(i + 1)));
        }
        if (2..m).contains(&i) {
            for j in 1..=legs {
                edges.push((spine(i), leg(i, j)));
                labels[leg(i, j)] = format!("v_{i}^{j}");
            }
        }
    }

    let (mi, ni) = (m as i64, n as i64);
    let f = m / 2;
    let fi = f as i64;
    let mut draft = OrderDraft::new(n);
    if m % 2 == 1 {
        draft.place(0, spine(f + 1), &labels[spine(f + 1)]);
        draft.place(ni - 1, spine(f), &labels[spine(f)]);
        for i in 1..=m {
            let ii = i as i64;
            let t = if i < f {
                2 * ii - 1
            } else if i > f + 1 {
                2 * (ii - fi)
            } else {
                continue;
            };
            draft.place(t, spine(i), &labels[spine(i)]);
        }
        for i in 2..m {
            let ii = i as i64;
            for j in 1..=legs {
                let jj = j as i64;
                let t = if i < f {
                    (mi - 2) * jj + 2 * (ii - 1)
                } else if i == f {
                    (mi - 2) * jj + 1
                } else {
                    (mi - 2) * jj + 2 * (ii - fi) + 1
                };
                draft.place(t, leg(i, j), &labels[leg(i, j)]);
            }
        }
    } else {
        draft.place(0, spine(f + 1), &labels[spine(f + 1)]);
        draft.place(ni - 1, spine(f), &labels[spine(f)]);
        for i in 1..=m {
            let ii = i as i64;
            let t = if i + 1 < f {
                2 * ii - 1
            } else if i > f + 1 {
                2 * (ii - fi)
            } else {
                continue;
            };
            draft.place(t, spine(i), &labels[spine(i)]);
        }
        for i in 2..m {
            let ii = i as i64;
            for j in 1..=legs {
                let jj = j as i64;
                let t = if i <= f {
                    (mi - 2) * jj + 2 * (ii - 2) + 1
                } else {
                    (mi - 2) * jj + 2 * (ii - fi)
                };
                draft.place(t, leg(i, j), &labels[leg(i, j)]);
            }
        }
    }
    (n, edges, labels, draft)
}

fn build_path_plus_pendant(m: usize) -> Built {
    let odd = m % 2 == 1;
    let n = if odd { m + 1 } else { m + 2 };
    let v = |i: usize| i - 1;
    let mut edges: Vec<(Vertex, Vertex)> = (1..m).map(|i| (v(i), v(i + 1))).collect();
    let mut labels: Vec<String> = (1..=m).map(|i| format!("v_{i}")).collect();
    let mut seq = Vec::with_capacity(n);
    if odd {
        let c = m.div_ceil(2);
        edges.push((v(c), m));
        labels.push("v'".into());
        // v_c, v_1, v_{c+1}, v_2, ..., v_{c-1}, v_m, v'
        seq.push(v(c));
        for s in 1..c {
            seq.push(v(s));
            seq.push(v(c + s));
        }
        seq.push(m);
    } else {
        let h = m / 2;
        edges.push((v(h), m));
        edges.push((v(h + 1), m + 1));
        labels.push("v'".into());
        labels.push("v''".into());
        // v_{h+1}, v_1, v_{h+2}, v_2, ..., v_{h-1}, v_m, v', v'', v_h
        seq.push(v(h + 1));
        for s in 1..h {
            seq.push(v(s));
            seq.push(v(h + 1 + s));
        }
        seq.extend([m, m + 1, v(h)]);
    }
    let mut draft = OrderDraft::new(n);
    for (t, &x) in seq.iter().enumerate() {
        draft.place(t as i64, x, &labels[x]);
    }
    (n, edges, labels, draft)
}
