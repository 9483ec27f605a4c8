//! Sequences with blocks: the (1,k) version of tau and its (k,1) counterpart eta.
//!
//! A (1,k)-tiling above `D^k(lambda)` gives sets `S_i`, one per up step counted from the
//! top. They label the subdivided tree `T^(k)` decreasingly, and tau is read off its
//! mirror image. A (k,1)-tiling above `U^k(lambda)` gives sets `Q_i`, one per down step
//! from the left, which label `T^(k)` increasingly.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::{Direction, LabeledTree};
use crate::path::DyckPath;
use crate::poset::Poset;
use crate::tau::tau_of_label;
use crate::tiling::Tiling;
use crate::tree::PlaneTree;

use super::sets::{sets_from_mu, sets_from_xi, xi_from_sets};

pub const MAX_BLOCK_ELEMENTS: usize = 500_000;

/// A sequence together with its partition of positions (0-based) into blocks of size `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockSeq {
    pub seq: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSeq {
    pub fn new(seq: Vec<usize>, mut blocks: Vec<Vec<usize>>) -> Result<BlockSeq> {
        let n = seq.len();
        let mut seen = vec![false; n];
        let k = blocks.first().map_or(0, Vec::len);
        for b in &mut blocks {
            b.sort_unstable();
            if b.len() != k {
                return Err(Error::Domain("blocks of different sizes".into()));
            }
            for &p in b.iter() {
                if p >= n || seen[p] {
                    return Err(Error::Domain(format!("blocks do not partition 0..{n}")));
                }
                seen[p] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Domain(format!("blocks do not partition 0..{n}")));
        }
        blocks.sort();
        Ok(BlockSeq { seq, blocks })
    }

    pub fn k(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    fn block_of(&self, p: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&p)).expect("blocks partition the positions")
    }

    /// Blocks as 1-based position sets, the way they are written by hand.
    pub fn blocks_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.iter().map(|p| p + 1).collect()).collect()
    }
}

impl fmt::Display for BlockSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.seq.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Decreasing label of `T^(k)` built from the sets `S_i`.
///
/// The set of the `i`-th up step from the top goes on that step's chain, smallest at the
/// top, which gives an increasing label. Complementing inside each subtree of a root edge
/// ([`phi`](super::phi)) makes it decreasing, and the result is mirrored so that the
/// right-most step belongs to the left-most edge.
pub fn label_1k(lambda: &DyckPath, sets: &[Vec<usize>]) -> Result<LabeledTree> {
    let n = lambda.size();
    if sets.len() != n {
        return Err(Error::Domain(format!("{} sets for a path of size {n}", sets.len())));
    }
    let k = sets.first().map_or(1, Vec::len);
    let (tk, map) = PlaneTree::from_path(lambda).subdivide(k);
    let mut labels = vec![0; n * k];
    for (i, s) in sets.iter().enumerate() {
        let mut s = s.clone();
        s.sort_unstable();
        for (r, &v) in s.iter().enumerate() {
            labels[map[n - 1 - i] + r] = v;
        }
    }
    let down = super::duality::phi(&LabeledTree::new(tk, labels, Direction::Increasing)?)?;
    let (mt, mm) = down.tree().mirror();
    let mut ml = vec![0; n * k];
    for (f, &g) in mm.iter().enumerate() {
        ml[g] = down.label(f);
    }
    LabeledTree::new(mt, ml, Direction::Decreasing)
}

/// Tau and blocks for the sets of a (1,k)-tiling. The block of `S_i` sits at the
/// positions `nk + 1 - v` for `v` in `S_i`, which are the tau entries of its labels.
pub fn tau_1k_of_sets(lambda: &DyckPath, sets: &[Vec<usize>]) -> Result<BlockSeq> {
    let l = label_1k(lambda, sets)?;
    let tau = tau_of_label(&l)?;
    let nk = l.size();
    let blocks = sets.iter().map(|s| s.iter().map(|&v| nk - v).collect()).collect();
    BlockSeq::new(tau.0, blocks)
}

/// `mu_i = (n - i) k` minus the horizontal history of the `i`-th up step from the top.
pub fn mu_of_1k_tiling(t: &Tiling) -> Result<Vec<usize>> {
    if t.a != 1 {
        return Err(Error::Precondition(format!("expected a (1,k)-tiling, got ({},{})", t.a, t.b)));
    }
    let k = t.b;
    let h = t.horizontal_history();
    let n = h.len();
    (1..=n)
        .map(|i| {
            ((n - i) * k).checked_sub(h[n - i]).ok_or_else(|| {
                Error::Invariant(format!("history {} at up step {i} from the top exceeds {}", h[n - i], (n - i) * k))
            })
        })
        .collect()
}

pub fn base_path(t: &Tiling) -> Result<DyckPath> {
    super::compress(&t.bottom, t.a, t.b)
        .ok_or_else(|| Error::Precondition("bottom path is not an inflated Dyck path".into()))
}

pub fn tau_1k_of_tiling(t: &Tiling) -> Result<BlockSeq> {
    let lambda = base_path(t)?;
    let sets = sets_from_mu(&mu_of_1k_tiling(t)?, t.b)?;
    tau_1k_of_sets(&lambda, &sets)
}

/// Elements covering `x`: a block `j_1 < ... < j_k` and a position `p < j_1` outside it, with
/// every entry strictly between `p` and `j_k` outside the block at least `tau_{j_1}`, and
/// `tau_p <= tau_{j_1} - 2`. The block entries shift left by one place (dropping 2), `p`
/// takes the first one and `j_k` takes the old `tau_p`.
pub fn tau_1k_upper_covers(x: &BlockSeq) -> Vec<BlockSeq> {
    let t = &x.seq;
    let mut out = Vec::new();
    for (bi, b) in x.blocks.iter().enumerate() {
        let (j1, jk) = (b[0], *b.last().unwrap());
        if b[1..].iter().any(|&j| t[j] < 2) {
            continue;
        }
        for p in 0..j1 {
            if t[p] + 2 > t[j1] {
                continue;
            }
            if !((p + 1)..jk).filter(|q| !b.contains(q)).all(|q| t[q] >= t[j1]) {
                continue;
            }
            let mut s = t.clone();
            s[p] = t[j1] - 2;
            for r in 0..b.len() - 1 {
                s[b[r]] = t[b[r + 1]] - 2;
            }
            s[jk] = t[p];
            let pb = x.block_of(p);
            let mut blocks = x.blocks.clone();
            blocks[bi] = std::iter::once(p).chain(b[..b.len() - 1].iter().copied()).collect();
            blocks[pb] = x.blocks[pb].iter().map(|&q| if q == p { jk } else { q }).collect();
            out.push(BlockSeq::new(s, blocks).expect("moves keep a partition"));
        }
    }
    out
}

pub fn tau_1k_covers(x: &BlockSeq, y: &BlockSeq) -> bool {
    tau_1k_upper_covers(x).contains(y)
}

pub fn tau_1k_poset(seed: &BlockSeq) -> Result<Poset<BlockSeq>> {
    Poset::generate(seed.clone(), MAX_BLOCK_ELEMENTS, tau_1k_upper_covers)
}

/// Increasing label of `T^(k)` from the sets `Q_i` (the set of the `i`-th down step from
/// the left goes on that edge's chain, smallest at the top).
pub fn label_k1(lambda: &DyckPath, sets: &[Vec<usize>]) -> Result<LabeledTree> {
    let n = lambda.size();
    if sets.len() != n {
        return Err(Error::Domain(format!("{} sets for a path of size {n}", sets.len())));
    }
    let k = sets.first().map_or(1, Vec::len);
    let t = PlaneTree::from_path(lambda);
    let (tk, map) = t.subdivide(k);
    let mut by_close: Vec<usize> = (0..n).collect();
    by_close.sort_by_key(|&e| t.chord(e).j);
    let mut labels = vec![0; n * k];
    for (i, s) in sets.iter().enumerate() {
        let e = by_close[i];
        let mut s = s.clone();
        s.sort_unstable();
        for (r, &v) in s.iter().enumerate() {
            labels[map[e] + r] = v;
        }
    }
    LabeledTree::new(tk, labels, Direction::Increasing)
}

/// `eta_i = 2 #{j < i : e(i) strictly right of e(j)} + #{j < i : e(j) above e(i)}` where `e(i)`
/// carries label `i`.
pub fn eta_of_label(l: &LabeledTree) -> Result<Vec<usize>> {
    if l.direction() != Direction::Increasing {
        return Err(Error::Precondition("eta is defined for increasing labels".into()));
    }
    let t = l.tree();
    let n = l.size();
    Ok((1..=n)
        .map(|i| {
            let e = l.edge_of(i);
            let right = (1..i).filter(|&j| t.strictly_right(e, l.edge_of(j))).count();
            let up = (1..i).filter(|&j| t.is_ancestor(l.edge_of(j), e)).count();
            2 * right + up
        })
        .collect())
}

pub fn eta_of_sets(lambda: &DyckPath, sets: &[Vec<usize>]) -> Result<BlockSeq> {
    let l = label_k1(lambda, sets)?;
    let eta = eta_of_label(&l)?;
    let blocks = sets.iter().map(|s| s.iter().map(|&v| v - 1).collect()).collect();
    BlockSeq::new(eta, blocks)
}

/// `xi_i`: the vertical history of the `i`-th down step from the left.
pub fn xi_of_k1_tiling(t: &Tiling) -> Result<Vec<usize>> {
    if t.b != 1 {
        return Err(Error::Precondition(format!("expected a (k,1)-tiling, got ({},{})", t.a, t.b)));
    }
    Ok(t.vertical_history())
}

pub fn eta_of_tiling(t: &Tiling) -> Result<BlockSeq> {
    let lambda = base_path(t)?;
    let sets = sets_from_xi(&xi_of_k1_tiling(t)?, t.a)?;
    eta_of_sets(&lambda, &sets)
}

/// The literal rule on `(eta, blocks)`: a block `j_1 < ... < j_k` followed by `p`,
/// every other entry in `[j_1, p]` at least the maximum of those, `eta_p` at least the block
/// maximum and at least `2k`. The block entries shift right by one place, `j_1` takes
/// `eta_p - 2k` and `p` takes `eta_{j_k}`. Kept for comparison; see [`eta_upper_covers`].
pub fn eta_upper_covers_literal(x: &BlockSeq) -> Vec<BlockSeq> {
    let e = &x.seq;
    let k = x.k();
    let mut out = Vec::new();
    for (bi, b) in x.blocks.iter().enumerate() {
        let (j1, jk) = (b[0], *b.last().unwrap());
        let bmax = b.iter().map(|&j| e[j]).max().unwrap();
        for p in jk + 1..e.len() {
            if e[p] < bmax || e[p] < 2 * k {
                continue;
            }
            let m = bmax.max(e[p]);
            if !(j1..=p).filter(|q| !b.contains(q) && *q != p).all(|q| e[q] >= m) {
                continue;
            }
            let mut s = e.clone();
            s[j1] = e[p] - 2 * k;
            for r in 1..b.len() {
                s[b[r]] = e[b[r - 1]];
            }
            s[p] = e[jk];
            let pb = x.block_of(p);
            let mut blocks = x.blocks.clone();
            blocks[bi] = b[1..].iter().copied().chain(std::iter::once(p)).collect();
            blocks[pb] = x.blocks[pb].iter().map(|&q| if q == p { j1 } else { q }).collect();
            out.push(BlockSeq::new(s, blocks).expect("moves keep a partition"));
        }
    }
    out
}

/// Label sets of the chains of `T^(k)`, ordered by the down steps of the base path.
pub fn chain_sets(l: &LabeledTree, k: usize) -> Result<Vec<Vec<usize>>> {
    let t = l.tree();
    if k == 0 || !l.size().is_multiple_of(k) {
        return Err(Error::Domain(format!("{} edges do not split into chains of {k}", l.size())));
    }
    let n = l.size() / k;
    let mut base: Vec<usize> = (0..n).collect();
    base.sort_by_key(|&e| t.chord(e * k).j);
    Ok(base.iter().map(|&e| (0..k).map(|r| l.label(e * k + r)).collect()).collect())
}

pub fn xi_of_label(l: &LabeledTree, k: usize) -> Result<Vec<usize>> {
    xi_from_sets(&chain_sets(l, k)?, k)
}

pub fn eta_block_seq(l: &LabeledTree, k: usize) -> Result<BlockSeq> {
    let blocks = chain_sets(l, k)?.iter().map(|s| s.iter().map(|&v| v - 1).collect()).collect();
    BlockSeq::new(eta_of_label(l)?, blocks)
}

/// Labels covering `l` in the (k,1) lattice. For a chain with labels `j_1 < ... < j_k` and a
/// larger label `p` elsewhere, the labels rotate: `j_r` moves to `j_{r+1}`, `j_k` to `p` and
/// `p` to `j_1`. The move is a cover when the result is an increasing label whose chain
/// sets still come from a sequence `xi`, and `sum xi` drops by one.
pub fn eta_upper_covers(l: &LabeledTree, k: usize) -> Result<Vec<LabeledTree>> {
    let w: usize = xi_of_label(l, k)?.iter().sum();
    let nk = l.size();
    let mut out = Vec::new();
    for mut b in chain_sets(l, k)? {
        b.sort_unstable();
        for p in b[k - 1] + 1..=nk {
            if b.contains(&p) {
                continue;
            }
            let labels: Vec<usize> = l
                .labels()
                .iter()
                .map(|&v| match b.iter().position(|&y| y == v) {
                    Some(r) if r + 1 < k => b[r + 1],
                    Some(_) => p,
                    None if v == p => b[0],
                    None => v,
                })
                .collect();
            let Ok(l2) = LabeledTree::new(l.tree().clone(), labels, Direction::Increasing) else {
                continue;
            };
            if xi_of_label(&l2, k).is_ok_and(|x| x.iter().sum::<usize>() + 1 == w) {
                out.push(l2);
            }
        }
    }
    Ok(out)
}

pub fn eta_covers(lo: &LabeledTree, hi: &LabeledTree, k: usize) -> Result<bool> {
    Ok(eta_upper_covers(lo, k)?.contains(hi))
}

pub fn eta_poset(seed: &LabeledTree, k: usize) -> Result<Poset<LabeledTree>> {
    xi_of_label(seed, k)?;
    Poset::generate(seed.clone(), MAX_BLOCK_ELEMENTS, |l| eta_upper_covers(l, k).expect("chain sets checked on entry"))
}
