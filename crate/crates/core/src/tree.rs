//! Planar rooted trees, with edges indexed in depth-first (pre-)order.
//!
//! Edge `e` corresponds to the `e`-th up step of the associated Dyck path and to
//! the chord pair opened by that step.

use std::fmt;

use crate::error::{Error, Result};
use crate::path::{ChordPair, DyckPath};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    path: DyckPath,
    chords: Vec<ChordPair>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
    // last pre-order index inside the subtree of each edge
    subtree_end: Vec<usize>,
}

impl PlaneTree {
    pub fn from_path(path: &DyckPath) -> PlaneTree {
        let chords = path.chord_pairs();
        let n = chords.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for (e, c) in chords.iter().enumerate() {
            while stack.last().is_some_and(|&t| chords[t].j < c.i) {
                stack.pop();
            }
            match stack.last() {
                Some(&p) => {
                    parent[e] = Some(p);
                    children[p].push(e);
                }
                None => roots.push(e),
            }
            stack.push(e);
        }
        let subtree_end = (0..n).map(|e| e + chords[e].len() - 1).collect();
        PlaneTree { path: path.clone(), chords, parent, children, roots, subtree_end }
    }

    pub fn parse(word: &str) -> Result<PlaneTree> {
        Ok(PlaneTree::from_path(&DyckPath::parse(word)?))
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn size(&self) -> usize {
        self.chords.len()
    }

    pub fn chord(&self, e: usize) -> ChordPair {
        self.chords[e]
    }

    pub fn parent(&self, e: usize) -> Option<usize> {
        self.parent[e]
    }

    pub fn children(&self, e: usize) -> &[usize] {
        &self.children[e]
    }

    /// Edges attached to the root, left to right.
    pub fn root_edges(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_leaf(&self, e: usize) -> bool {
        self.children[e].is_empty()
    }

    /// Number of proper ancestor edges.
    pub fn depth(&self, e: usize) -> usize {
        let mut d = 0;
        let mut cur = self.parent[e];
        while let Some(p) = cur {
            d += 1;
            cur = self.parent[p];
        }
        d
    }

    /// `a` is a proper ancestor of `e`.
    pub fn is_ancestor(&self, a: usize, e: usize) -> bool {
        a < e && e <= self.subtree_end[a]
    }

    /// Edges of the subtree hanging from `e`, including `e`, in pre-order.
    pub fn subtree(&self, e: usize) -> std::ops::RangeInclusive<usize> {
        e..=self.subtree_end[e]
    }

    /// `e` is strictly right of `f`: neither lies on the other's root path and `e` comes later.
    pub fn strictly_right(&self, e: usize, f: usize) -> bool {
        e != f && !self.is_ancestor(e, f) && !self.is_ancestor(f, e) && e > f
    }

    pub fn strictly_left(&self, e: usize, f: usize) -> bool {
        self.strictly_right(f, e)
    }

    /// Edges in leaf-deletion order: repeatedly remove the left-most edge ending at a leaf.
    pub fn post_order(&self) -> Vec<usize> {
        fn rec(t: &PlaneTree, e: usize, out: &mut Vec<usize>) {
            for &c in t.children(e) {
                rec(t, c, out);
            }
            out.push(e);
        }
        let mut out = Vec::with_capacity(self.size());
        for &r in &self.roots {
            rec(self, r, &mut out);
        }
        out
    }

    /// A node is a branch point when at least two edges hang below it.
    /// Returns the branch points as `None` (the root) or `Some(edge above the node)`.
    pub fn branch_points(&self) -> Vec<Option<usize>> {
        let mut out = Vec::new();
        if self.roots.len() >= 2 {
            out.push(None);
        }
        for e in 0..self.size() {
            if self.children[e].len() >= 2 {
                out.push(Some(e));
            }
        }
        out
    }

    /// Mirror image; returns the tree and, for each edge of `self`, its index in the mirror.
    pub fn mirror(&self) -> (PlaneTree, Vec<usize>) {
        let m = PlaneTree::from_path(&self.path.mirror());
        let len = self.path.len() + 1;
        let map = self
            .chords
            .iter()
            .map(|c| {
                let target = ChordPair { i: len - c.j, j: len - c.i };
                m.chords.binary_search(&target).expect("mirror chord")
            })
            .collect();
        (m, map)
    }

    /// Every edge replaced by a chain of `k` edges. Edge `e` becomes edges `map[e]..map[e]+k`,
    /// top to bottom.
    pub fn subdivide(&self, k: usize) -> (PlaneTree, Vec<usize>) {
        assert!(k >= 1);
        let steps = crate::rational::expand_du(&self.path, k, k);
        let t = PlaneTree::from_path(&DyckPath::new(steps).expect("inflated Dyck path"));
        let map = (0..self.size()).map(|e| e * k).collect();
        (t, map)
    }

    /// Remove a leaf edge; the remaining edges keep their relative order.
    pub fn remove_leaf(&self, e: usize) -> Result<PlaneTree> {
        if !self.is_leaf(e) {
            return Err(Error::Precondition(format!("edge {e} is not a leaf")));
        }
        let c = self.chords[e];
        let steps: Vec<_> = self
            .path
            .steps()
            .iter()
            .enumerate()
            .filter(|(k, _)| k + 1 != c.i && k + 1 != c.j)
            .map(|(_, s)| *s)
            .collect();
        Ok(PlaneTree::from_path(&DyckPath::new(steps)?))
    }

    /// Balanced-parenthesis form, identical to the path word with `(`/`)`.
    pub fn to_parens(&self) -> String {
        self.path.to_string().replace('U', "(").replace('D', ")")
    }

    pub fn enumerate(n: usize) -> Vec<PlaneTree> {
        DyckPath::enumerate(n).iter().map(PlaneTree::from_path).collect()
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path)
    }
}

pub fn path_to_tree(p: &DyckPath) -> PlaneTree {
    PlaneTree::from_path(p)
}

pub fn tree_to_path(t: &PlaneTree) -> DyckPath {
    t.path().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure() {
        let t = PlaneTree::parse("UDUUDUDD").unwrap();
        assert_eq!(t.root_edges(), &[0, 1]);
        assert_eq!(t.children(1), &[2, 3]);
        assert!(t.strictly_right(3, 2));
        assert!(t.strictly_right(2, 0));
        assert!(!t.strictly_right(2, 1));
        assert_eq!(t.post_order(), vec![0, 2, 3, 1]);
        assert_eq!(t.branch_points(), vec![None, Some(1)]);
    }

    #[test]
    fn mirror_map() {
        let t = PlaneTree::parse("UDUUDUDD").unwrap();
        let (m, map) = t.mirror();
        assert_eq!(m.path().to_string(), "UUDUDDUD");
        assert_eq!(map, vec![3, 0, 2, 1]);
    }
}
