//! Increasing and decreasing edge labels on plane trees, their words and posets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::poset::Poset;
use crate::qpoly::QPoly;
use crate::tree::PlaneTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Which traversal a word is read along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Pre,
    Post,
}

/// A traversal together with a reading direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Reading {
    pub order: Order,
    pub reversed: bool,
}

impl Reading {
    pub const PRE: Reading = Reading { order: Order::Pre, reversed: false };
    pub const POST: Reading = Reading { order: Order::Post, reversed: false };
    pub const PRE_REV: Reading = Reading { order: Order::Pre, reversed: true };
    pub const POST_REV: Reading = Reading { order: Order::Post, reversed: true };

    /// The reading under which a cover relation lowers `inversion` by one for each direction.
    pub fn default_for(dir: Direction) -> Reading {
        match dir {
            Direction::Increasing => Reading::POST,
            Direction::Decreasing => Reading::PRE,
        }
    }
}

/// `#{(j, i) : j < i, w_j < w_i}`.
pub fn inversion(w: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] < w[i] {
                c += 1;
            }
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    tree: PlaneTree,
    labels: Vec<usize>,
    dir: Direction,
}

impl LabeledTree {
    /// `labels[e]` is the label of edge `e` (pre-order index).
    pub fn new(tree: PlaneTree, labels: Vec<usize>, dir: Direction) -> Result<Self> {
        let n = tree.size();
        if labels.len() != n {
            return Err(Error::InvalidLabel(format!("{} labels for {n} edges", labels.len())));
        }
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidLabel(format!("{labels:?} is not a permutation of 1..{n}")));
            }
            seen[l] = true;
        }
        for e in 0..n {
            if let Some(p) = tree.parent(e) {
                let ok = match dir {
                    Direction::Increasing => labels[p] < labels[e],
                    Direction::Decreasing => labels[p] > labels[e],
                };
                if !ok {
                    return Err(Error::InvalidLabel(format!(
                        "labels {} above {} break the {dir:?} condition",
                        labels[p], labels[e]
                    )));
                }
            }
        }
        Ok(LabeledTree { tree, labels, dir })
    }

    /// Build from the pre-order word.
    pub fn from_pre_order(tree: PlaneTree, word: &[usize], dir: Direction) -> Result<Self> {
        LabeledTree::new(tree, word.to_vec(), dir)
    }

    pub fn from_post_order(tree: PlaneTree, word: &[usize], dir: Direction) -> Result<Self> {
        let order = tree.post_order();
        if word.len() != order.len() {
            return Err(Error::InvalidLabel("word length differs from edge count".into()));
        }
        let mut labels = vec![0; word.len()];
        for (k, &e) in order.iter().enumerate() {
            labels[e] = word[k];
        }
        LabeledTree::new(tree, labels, dir)
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> usize {
        self.labels[e]
    }

    pub fn direction(&self) -> Direction {
        self.dir
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Edge carrying label `l`.
    pub fn edge_of(&self, l: usize) -> usize {
        self.labels.iter().position(|&x| x == l).expect("label present")
    }

    pub fn pre_order_word(&self) -> Vec<usize> {
        self.labels.clone()
    }

    pub fn post_order_word(&self) -> Vec<usize> {
        self.tree.post_order().into_iter().map(|e| self.labels[e]).collect()
    }

    pub fn word(&self, r: Reading) -> Vec<usize> {
        let mut w = match r.order {
            Order::Pre => self.pre_order_word(),
            Order::Post => self.post_order_word(),
        };
        if r.reversed {
            w.reverse();
        }
        w
    }

    pub fn inversion(&self, r: Reading) -> usize {
        inversion(&self.word(r))
    }

    /// `l -> n + 1 - l` on every edge; flips the direction.
    pub fn bar(&self) -> LabeledTree {
        let n = self.size();
        let dir = match self.dir {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        };
        LabeledTree { tree: self.tree.clone(), labels: self.labels.iter().map(|l| n + 1 - l).collect(), dir }
    }

    /// No edges `e1, e2, e3`, each strictly right of the next, with `L(e2) < L(e3) < L(e1)`.
    pub fn is_312_avoiding(&self) -> bool {
        let n = self.size();
        let t = &self.tree;
        let l = &self.labels;
        for e3 in 0..n {
            for e2 in e3 + 1..n {
                if !t.strictly_right(e2, e3) || l[e2] >= l[e3] {
                    continue;
                }
                for e1 in e2 + 1..n {
                    if t.strictly_right(e1, e2) && l[e3] < l[e1] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every label that covers `self`.
    pub fn upper_covers(&self) -> Vec<LabeledTree> {
        let n = self.size();
        let t = &self.tree;
        let l = &self.labels;
        let mut out = Vec::new();
        for el in 0..n {
            for er in el + 1..n {
                if !t.strictly_right(er, el) || l[el] >= l[er] {
                    continue;
                }
                let blocked = (el + 1..er).any(|ec| {
                    t.strictly_right(ec, el) && t.strictly_right(er, ec) && l[el] <= l[ec] && l[ec] <= l[er]
                });
                if blocked {
                    continue;
                }
                let mut nl = l.clone();
                nl.swap(el, er);
                if let Ok(lt) = LabeledTree::new(t.clone(), nl, self.dir) {
                    out.push(lt);
                }
            }
        }
        out
    }

    /// Whether `other` covers `self`.
    pub fn is_covered_by(&self, other: &LabeledTree) -> Result<bool> {
        if self.tree != other.tree || self.dir != other.dir {
            return Err(Error::Precondition("labels live on different trees or directions".into()));
        }
        Ok(self.upper_covers().contains(other))
    }

    pub fn enumerate(tree: &PlaneTree, dir: Direction) -> Vec<LabeledTree> {
        let n = tree.size();
        let mut out = Vec::new();
        let mut labels = vec![0; n];
        // assign labels in increasing order of value; an edge is available once its
        // parent (increasing) or all its children (decreasing) are labelled
        fn rec(t: &PlaneTree, dir: Direction, next: usize, labels: &mut Vec<usize>, out: &mut Vec<LabeledTree>) {
            let n = labels.len();
            if next > n {
                out.push(LabeledTree { tree: t.clone(), labels: labels.clone(), dir });
                return;
            }
            for e in 0..n {
                if labels[e] != 0 {
                    continue;
                }
                let ok = match dir {
                    Direction::Increasing => t.parent(e).is_none_or(|p| labels[p] != 0),
                    Direction::Decreasing => t.children(e).iter().all(|&c| labels[c] != 0),
                };
                if ok {
                    labels[e] = next;
                    rec(t, dir, next + 1, labels, out);
                    labels[e] = 0;
                }
            }
        }
        rec(tree, dir, 1, &mut labels, &mut out);
        out.sort_by(|a, b| a.labels.cmp(&b.labels));
        out
    }

    /// Labels in pre-order, e.g. `[4, 1, 5, 2, 3]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tree": self.tree.path().to_string(),
            "direction": self.dir,
            "labels": self.labels,
        })
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        let sep = if self.labels.iter().any(|&l| l > 9) { "," } else { "" };
        write!(f, "{}", w.join(sep))
    }
}

pub const DEFAULT_MAX_ELEMENTS: usize = 2_000_000;

/// The poset of labels above `seed`.
pub fn build_poset(seed: &LabeledTree) -> Result<Poset<LabeledTree>> {
    Poset::generate(seed.clone(), DEFAULT_MAX_ELEMENTS, |l| l.upper_covers())
}

/// `sum over L >= seed of q^inversion(word(L))`.
pub fn gf_z_with(seed: &LabeledTree, r: Reading) -> Result<QPoly> {
    let p = build_poset(seed)?;
    Ok(p.elements.iter().map(|l| QPoly::monomial(1, l.inversion(r))).sum())
}

/// The seed's increasing label whose pre-order word is `1, 2, ..., n`.
pub fn pre_order_seed(tree: &PlaneTree) -> LabeledTree {
    let labels = (1..=tree.size()).collect();
    LabeledTree::new(tree.clone(), labels, Direction::Increasing).expect("pre-order labels increase")
}

/// The decreasing label whose post-order word is `1, 2, ..., n`. Its tau-poset holds every
/// decreasing label of the tree.
pub fn post_order_seed(tree: &PlaneTree) -> LabeledTree {
    let word: Vec<usize> = (1..=tree.size()).collect();
    LabeledTree::from_post_order(tree.clone(), &word, Direction::Decreasing).expect("post-order labels decrease")
}

/// `Z(L0, T)`: every label above the seed weighted by how many inversions of its
/// post-order word it gained over the seed. Each cover adds exactly one, so this is
/// the rank generating function of the up-set.
pub fn gf_z(seed: &LabeledTree) -> Result<QPoly> {
    let base = seed.inversion(Reading::POST) as i64;
    let p = build_poset(seed)?;
    p.elements
        .iter()
        .map(|l| {
            let d = base - l.inversion(Reading::POST) as i64;
            if d < 0 {
                return Err(Error::Invariant(format!("{l} has more inversions than the seed {seed}")));
            }
            Ok(QPoly::monomial(1, d as usize))
        })
        .sum()
}

/// The leaf recursion for decreasing labels: move label 1 to each leaf right of its
/// current edge, take the least label of the up-set with that placement, and recurse
/// on the tree without that leaf.
pub fn gf_z_recursive(seed: &LabeledTree) -> Result<QPoly> {
    if seed.direction() != Direction::Decreasing {
        return Err(Error::Precondition("the leaf recursion is stated for decreasing labels".into()));
    }
    let n = seed.size();
    if n <= 1 {
        return Ok(QPoly::one());
    }
    let t = seed.tree();
    let l1 = seed.edge_of(1);
    let leaves: Vec<usize> =
        std::iter::once(l1).chain((l1 + 1..n).filter(|&e| t.is_leaf(e) && t.strictly_right(e, l1))).collect();
    let poset = build_poset(seed)?;
    let ranks = poset.ranks()?;
    let leq = poset.order_matrix();
    let mut total = QPoly::zero();
    for leaf in leaves {
        let hits: Vec<usize> = (0..poset.len()).filter(|&k| poset.elements[k].label(leaf) == 1).collect();
        let Some(&least) = hits.iter().min_by_key(|&&k| ranks[k]) else { continue };
        if !hits.iter().all(|&k| leq[least][k]) {
            return Err(Error::Invariant(format!("labels with 1 on edge {leaf} have no least element")));
        }
        let lab = &poset.elements[least];
        let sub = t.remove_leaf(leaf)?;
        let rest: Vec<usize> =
            lab.labels().iter().enumerate().filter(|(e, _)| *e != leaf).map(|(_, &x)| x - 1).collect();
        let smaller = LabeledTree::new(sub, rest, Direction::Decreasing)?;
        total = &total + &gf_z_recursive(&smaller)?.shift(ranks[least]);
    }
    Ok(total)
}

/// Replace the subtree below a branch point by a single chain carrying the same labels
/// in decreasing order from the top.
pub fn collapse_below(l: &LabeledTree, branch: Option<usize>) -> Result<LabeledTree> {
    let t = l.tree();
    let n = l.size();
    let (lo, hi) = match branch {
        None => (0, n),
        Some(e) => (e + 1, *t.subtree(e).end() + 1),
    };
    let mut inner: Vec<usize> = l.labels()[lo..hi].to_vec();
    inner.sort_unstable_by(|a, b| match l.direction() {
        Direction::Decreasing => b.cmp(a),
        Direction::Increasing => a.cmp(b),
    });
    let m = hi - lo;
    // everything before the subtree's first edge, the chain, then the rest
    let start = if lo < n { t.chord(lo).i - 1 } else { t.path().len() };
    let end = (lo..hi).map(|e| t.chord(e).j).max().unwrap_or(start);
    let mut steps = Vec::with_capacity(t.path().len());
    steps.extend_from_slice(&t.path().steps()[..start]);
    steps.extend(std::iter::repeat_n(Step::U, m));
    steps.extend(std::iter::repeat_n(Step::D, m));
    steps.extend_from_slice(&t.path().steps()[end..]);
    let tree = PlaneTree::from_path(&DyckPath::new(steps)?);
    let mut labels = l.labels()[..lo].to_vec();
    labels.extend(inner);
    labels.extend_from_slice(&l.labels()[hi..]);
    LabeledTree::new(tree, labels, l.direction())
}
