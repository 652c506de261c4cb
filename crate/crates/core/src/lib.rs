//! Hamiltonian colorings of trees.
//!
//! A hamiltonian coloring of a graph on `n` vertices assigns non-negative
//! integers so that `d(u, v) + |c(u) - c(v)| >= n - 1` for every pair of
//! distinct vertices. Its span is the largest color used, and the
//! hamiltonian chromatic number `hc` is the smallest span over all such
//! colorings.
//!
//! For trees this crate provides a level-sum lower bound, a test for vertex
//! orders whose induced coloring attains it, closed forms for four tree
//! families, and an exact branch-and-bound oracle for small trees.
//!
//! ```
//! use hctree::{validate_tree, lower_bound, hc_via_conditions};
//!
//! let star = validate_tree(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
//! assert_eq!(lower_bound(&star).unwrap(), 4);
//! assert_eq!(hc_via_conditions(&star).unwrap().value, 4);
//! ```

pub mod canon;
pub mod coloring;
pub mod exec;
pub mod families;
pub mod oracle;
pub mod qualified;
pub mod tree;

pub use canon::{canonical_form, CanonicalForm};
pub use coloring::{
    check_order, coloring_from_order, greedy_coloring, hc_via_conditions, hc_via_conditions_with_limit, lower_bound,
    lower_bound_formula, verify, Color, Coloring, ColoringError, HcCertificate, LinearOrder, OrderConditionReport,
    OrderViolation, VerifyReport, Violation,
};
pub use exec::Execution;
pub use families::{ClosedForm, FamilyError, FamilyInstance, FamilySpec, OrderSource};
pub use oracle::{
    brute_force_d, brute_force_hc, brute_force_hc_with, enumerate_trees, enumerate_trees_with, random_tree, ExactHc,
    Limit, OracleBudget, OracleError,
};
pub use qualified::{find_qualified_order, DEFAULT_SEARCH_NODE_LIMIT};
pub use tree::{
    center, diameter, distance, is_db_half, levels, validate_tree, BranchId, CenterInfo, LevelTable, Tree, TreeError,
    Vertex,
};
