use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::tree::{enumerate_trees, FlatTree, PlaneRootedTree};
use crate::{Error, Result};

/// Largest `k` accepted by [`count_covering_walks`] and [`covering_walks`].
pub const MAX_WALK_ORDER: usize = 8;

/// Largest `k` accepted by [`oracle_moment`] and [`walks_by_returns`].
pub const MAX_ORACLE_ORDER: usize = 6;

/// One closed walk over a plane rooted tree, as the preorder indices of the
/// visited vertices (`2k + 1` entries, starting and ending at the root `0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringWalk {
    pub tree: PlaneRootedTree,
    pub vertices: Vec<usize>,
    pub returns_to_root: usize,
}

impl CoveringWalk {
    /// Directed edge traversals `(from, to)`.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn step_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

/// Why a vertex sequence is not a valid covering walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkViolation {
    Empty,
    NotRooted,
    NotAnEdge { step: usize },
    EdgeUncovered { child: usize },
    OddTraversals { child: usize },
    Unmatched { child: usize },
    SkippedLeftEdge { step: usize },
    WrongReturnCount { claimed: usize, actual: usize },
}

struct Search<'a> {
    tree: &'a FlatTree,
    opened: Vec<usize>,
    unopened: usize,
    path: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, remaining: usize, emit: &mut dyn FnMut(&[usize])) {
        let here = *self.path.last().expect("path holds the root");
        if remaining == 0 {
            if here == 0 && self.unopened == 0 {
                emit(&self.path);
            }
            return;
        }
        let after = remaining - 1;
        let feasible = |target: usize, unopened: usize, tree: &FlatTree| after >= tree.depth[target] + 2 * unopened;

        if let Some(up) = self.tree.parent[here] {
            if feasible(up, self.unopened, self.tree) {
                self.path.push(up);
                self.run(after, emit);
                self.path.pop();
            }
        }
        let opened = self.opened[here];
        for idx in 0..opened {
            let down = self.tree.children[here][idx];
            if feasible(down, self.unopened, self.tree) {
                self.path.push(down);
                self.run(after, emit);
                self.path.pop();
            }
        }
        if let Some(&fresh) = self.tree.children[here].get(opened) {
            if feasible(fresh, self.unopened - 1, self.tree) {
                self.opened[here] += 1;
                self.unopened -= 1;
                self.path.push(fresh);
                self.run(after, emit);
                self.path.pop();
                self.unopened += 1;
                self.opened[here] -= 1;
            }
        }
    }
}

fn check_walk_order(tree: &PlaneRootedTree, k: usize) -> Result<()> {
    if k > MAX_WALK_ORDER {
        return Err(Error::Guard {
            what: "walk order k",
            value: k as u64,
            limit: MAX_WALK_ORDER as u64,
        });
    }
    let e = tree.edge_count();
    if e > super::tree::MAX_TREE_EDGES {
        return Err(Error::Guard {
            what: "tree edges",
            value: e as u64,
            limit: super::tree::MAX_TREE_EDGES as u64,
        });
    }
    Ok(())
}

/// Visits every covering walk of `2k` steps in canonical order: at each
/// vertex try the parent, then already opened children left to right, then
/// the leftmost unopened child.
fn for_each_walk(tree: &PlaneRootedTree, k: usize, emit: &mut dyn FnMut(&[usize])) {
    let flat = tree.flatten();
    let mut search = Search {
        opened: vec![0; flat.len()],
        unopened: flat.len() - 1,
        path: Vec::with_capacity(2 * k + 1),
        tree: &flat,
    };
    search.path.push(0);
    if 2 * k < 2 * search.unopened {
        return;
    }
    search.run(2 * k, emit);
}

fn root_returns(vertices: &[usize]) -> usize {
    vertices.iter().skip(1).filter(|&&v| v == 0).count()
}

/// `U(k; τ)`: the number of covering walks of `2k` steps on `tree`.
pub fn count_covering_walks(tree: &PlaneRootedTree, k: usize) -> Result<u64> {
    check_walk_order(tree, k)?;
    let mut n = 0u64;
    for_each_walk(tree, k, &mut |_| n += 1);
    Ok(n)
}

/// Every covering walk of `2k` steps on `tree`, in canonical order.
pub fn covering_walks(tree: &PlaneRootedTree, k: usize) -> Result<Vec<CoveringWalk>> {
    check_walk_order(tree, k)?;
    let mut out = Vec::new();
    for_each_walk(tree, k, &mut |path| {
        out.push(CoveringWalk {
            tree: tree.clone(),
            vertices: path.to_vec(),
            returns_to_root: root_returns(path),
        })
    });
    Ok(out)
}

/// Covering walks of `2k` steps on `tree`, tallied by returns to the root.
pub fn walks_by_returns_for_tree(tree: &PlaneRootedTree, k: usize) -> Result<BTreeMap<usize, u64>> {
    check_walk_order(tree, k)?;
    let mut tally = BTreeMap::new();
    for_each_walk(tree, k, &mut |path| *tally.entry(root_returns(path)).or_insert(0) += 1);
    Ok(tally)
}

fn check_oracle_order(k: usize) -> Result<()> {
    if k > MAX_ORACLE_ORDER {
        return Err(Error::Guard {
            what: "oracle order",
            value: k as u64,
            limit: MAX_ORACLE_ORDER as u64,
        });
    }
    Ok(())
}

/// All walks of `2u` steps over every tree they can induce, tallied by
/// the number of returns to the root. Zero tallies are omitted.
pub fn walks_by_returns(u: usize) -> Result<BTreeMap<usize, u64>> {
    check_oracle_order(u)?;
    if u == 0 {
        return Ok(BTreeMap::from([(0, 1)]));
    }
    let mut tally = BTreeMap::new();
    for e in 1..=u {
        for tree in enumerate_trees(e)? {
            for (v, n) in walks_by_returns_for_tree(&tree, u)? {
                *tally.entry(v).or_insert(0) += n;
            }
        }
    }
    Ok(tally)
}

/// `Σ_{q=0}^{k-1} Σ_{τ ∈ T_{k-q}} U(k; τ)`: the limiting moment `m_k` at
/// `p = 1` counted walk by walk. `k = 0` gives the empty walk.
pub fn oracle_moment(k: usize) -> Result<u64> {
    check_oracle_order(k)?;
    if k == 0 {
        return Ok(1);
    }
    let mut total = 0;
    for q in 0..k {
        for tree in enumerate_trees(k - q)? {
            total += count_covering_walks(&tree, k)?;
        }
    }
    Ok(total)
}

/// Replays `vertices` over `tree` and checks every covering-walk property
/// from scratch: rooted at both ends, moves along tree edges only, each edge
/// traversed an even positive number of times with downs matching ups,
/// children opened strictly left to right, and the return count.
pub fn validate_walk(
    tree: &PlaneRootedTree,
    vertices: &[usize],
    claimed_returns: usize,
) -> core::result::Result<(), WalkViolation> {
    let flat = tree.flatten();
    let (first, last) = match (vertices.first(), vertices.last()) {
        (Some(f), Some(l)) => (*f, *l),
        _ => return Err(WalkViolation::Empty),
    };
    if first != 0 || last != 0 {
        return Err(WalkViolation::NotRooted);
    }
    // Edges are keyed by their child endpoint.
    let mut downs = vec![0usize; flat.len()];
    let mut ups = vec![0usize; flat.len()];
    let mut opened = vec![0usize; flat.len()];
    for (step, w) in vertices.windows(2).enumerate() {
        let (from, to) = (w[0], w[1]);
        if to < flat.len() && flat.parent[to] == Some(from) {
            let slot = flat.children[from].iter().position(|&c| c == to).expect("child of its parent");
            if downs[to] == 0 {
                if slot != opened[from] {
                    return Err(WalkViolation::SkippedLeftEdge { step });
                }
                opened[from] += 1;
            }
            downs[to] += 1;
        } else if from < flat.len() && flat.parent[from] == Some(to) {
            ups[from] += 1;
        } else {
            return Err(WalkViolation::NotAnEdge { step });
        }
    }
    for child in 1..flat.len() {
        let total = downs[child] + ups[child];
        if total == 0 {
            return Err(WalkViolation::EdgeUncovered { child });
        }
        if total % 2 == 1 {
            return Err(WalkViolation::OddTraversals { child });
        }
        if downs[child] != ups[child] {
            return Err(WalkViolation::Unmatched { child });
        }
    }
    let actual = vertices.iter().skip(1).filter(|&&v| v == 0).count();
    if actual != claimed_returns {
        return Err(WalkViolation::WrongReturnCount {
            claimed: claimed_returns,
            actual,
        });
    }
    Ok(())
}
