use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest edge count [`enumerate_trees`] will generate.
pub const MAX_TREE_EDGES: usize = 8;

/// A rooted tree whose children are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneRootedTree {
    children: Vec<PlaneRootedTree>,
}

impl PlaneRootedTree {
    /// The single-vertex tree.
    pub fn root_only() -> Self {
        Self::default()
    }

    pub fn with_children(children: Vec<PlaneRootedTree>) -> Self {
        PlaneRootedTree { children }
    }

    /// The root with `e` leaf children.
    pub fn star(e: usize) -> Self {
        Self::with_children(vec![Self::root_only(); e])
    }

    /// A single path of `e` edges hanging from the root.
    pub fn path(e: usize) -> Self {
        (0..e).fold(Self::root_only(), |t, _| Self::with_children(vec![t]))
    }

    pub fn children(&self) -> &[PlaneRootedTree] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.edge_count() + 1
    }

    /// Parses a balanced-parenthesis word, `(` for a step down an edge and
    /// `)` for the step back up.
    pub fn from_dyck(word: &str) -> Option<Self> {
        let mut stack: Vec<Vec<PlaneRootedTree>> = vec![Vec::new()];
        for c in word.chars() {
            match c {
                '(' => stack.push(Vec::new()),
                ')' => {
                    let kids = stack.pop()?;
                    stack.last_mut()?.push(PlaneRootedTree::with_children(kids));
                }
                _ => return None,
            }
        }
        if stack.len() != 1 {
            return None;
        }
        stack.pop().map(PlaneRootedTree::with_children)
    }

    pub fn to_dyck(&self) -> String {
        let mut out = String::with_capacity(2 * self.edge_count());
        self.write_dyck(&mut out);
        out
    }

    fn write_dyck(&self, out: &mut String) {
        for c in &self.children {
            out.push('(');
            c.write_dyck(out);
            out.push(')');
        }
    }

    /// Preorder flattening; vertex 0 is the root.
    pub(crate) fn flatten(&self) -> FlatTree {
        let mut flat = FlatTree {
            parent: vec![None],
            children: vec![Vec::new()],
            depth: vec![0],
        };
        fn walk(node: &PlaneRootedTree, id: usize, flat: &mut FlatTree) {
            for child in &node.children {
                let cid = flat.parent.len();
                flat.parent.push(Some(id));
                flat.children.push(Vec::new());
                flat.depth.push(flat.depth[id] + 1);
                flat.children[id].push(cid);
                walk(child, cid, flat);
            }
        }
        walk(self, 0, &mut flat);
        flat
    }
}

impl fmt::Display for PlaneRootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dyck())
    }
}

/// Index form of a tree: vertices in preorder, children in plane order.
#[derive(Debug, Clone)]
pub(crate) struct FlatTree {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub depth: Vec<usize>,
}

impl FlatTree {
    pub fn len(&self) -> usize {
        self.parent.len()
    }
}

/// All plane rooted trees with `e` edges, ordered lexicographically by their
/// balanced-parenthesis words with `(` before `)`.
pub fn enumerate_trees(e: usize) -> Result<Vec<PlaneRootedTree>> {
    if e > MAX_TREE_EDGES {
        return Err(Error::Guard {
            what: "tree edges",
            value: e as u64,
            limit: MAX_TREE_EDGES as u64,
        });
    }
    let mut words = Vec::new();
    let mut buf = String::with_capacity(2 * e);
    dyck_words(e, 0, 0, &mut buf, &mut words);
    Ok(words
        .iter()
        .map(|w| PlaneRootedTree::from_dyck(w).expect("generated words are balanced"))
        .collect())
}

fn dyck_words(e: usize, open: usize, close: usize, buf: &mut String, out: &mut Vec<String>) {
    if close == e {
        out.push(buf.clone());
        return;
    }
    if open < e {
        buf.push('(');
        dyck_words(e, open + 1, close, buf, out);
        buf.pop();
    }
    if close < open {
        buf.push(')');
        dyck_words(e, open, close + 1, buf, out);
        buf.pop();
    }
}

/// The `n`-th Catalan number, `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_edge_counts() {
        assert_eq!(enumerate_trees(0).unwrap(), vec![PlaneRootedTree::root_only()]);
        assert_eq!(enumerate_trees(1).unwrap(), vec![PlaneRootedTree::star(1)]);
        let three: Vec<String> = enumerate_trees(3).unwrap().iter().map(|t| t.to_dyck()).collect();
        assert_eq!(three, ["((()))", "(()())", "(())()", "()(())", "()()()"]);
    }

    #[test]
    fn counts_are_catalan_numbers() {
        let known = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (e, &count) in known.iter().enumerate() {
            let trees = enumerate_trees(e).unwrap();
            assert_eq!(trees.len() as u64, catalan(e));
            assert_eq!(catalan(e), count);
            let mut sorted = trees.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), trees.len());
            assert!(trees.iter().all(|t| t.edge_count() == e));
            assert!(trees.windows(2).all(|w| w[0].to_dyck() < w[1].to_dyck()));
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_trees(MAX_TREE_EDGES + 1), Err(Error::Guard { .. })));
    }

    #[test]
    fn dyck_round_trip_and_rejects() {
        for w in ["", "()", "(()())()", "((())(()))"] {
            assert_eq!(PlaneRootedTree::from_dyck(w).unwrap().to_dyck(), w);
        }
        assert!(PlaneRootedTree::from_dyck("(()").is_none());
        assert!(PlaneRootedTree::from_dyck("())").is_none());
        assert!(PlaneRootedTree::from_dyck("(x)").is_none());
    }

    #[test]
    fn flatten_is_preorder() {
        let t = PlaneRootedTree::from_dyck("(()())()").unwrap();
        let flat = t.flatten();
        assert_eq!(flat.len(), 5);
        assert_eq!(flat.children[0], [1, 4]);
        assert_eq!(flat.children[1], [2, 3]);
        assert_eq!(flat.depth, [0, 1, 2, 2, 1]);
        assert_eq!(flat.parent[4], Some(0));
        assert_eq!(PlaneRootedTree::path(3).to_dyck(), "((()))");
    }
}
