//! Brute-force oracle for the walk counts.
//!
//! Every closed walk of `2k` steps whose steps are each undone later, with
//! new edges opened leftmost-first, traces out exactly one plane rooted tree
//! and covers it. Enumerating the trees with at most `k` edges and, for each
//! tree, every such covering walk recovers `m_k` at `p = 1` and its split by
//! the number of returns to the root, without touching the recurrence.

mod tree;
mod walk;

pub use tree::{catalan, enumerate_trees, PlaneRootedTree, MAX_TREE_EDGES};
pub use walk::{
    count_covering_walks, covering_walks, oracle_moment, validate_walk, walks_by_returns,
    walks_by_returns_for_tree, CoveringWalk, WalkViolation, MAX_ORACLE_ORDER, MAX_WALK_ORDER,
};
