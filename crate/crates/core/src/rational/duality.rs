//! Duality between (1,k)- and (k,1)-tilings by transposition.

use crate::error::{Error, Result};
use crate::label::{Direction, LabeledTree};
use crate::tiling::Tiling;

use super::blocks::{base_path, label_1k, label_k1, mu_of_1k_tiling, xi_of_k1_tiling};
use super::sets::{sets_from_mu, sets_from_xi};

/// Inside each subtree hanging from a root edge, the edge carrying the `r`-th smallest
/// label of that subtree gets the `r`-th largest. Decreasing labels become increasing.
pub fn phi(l: &LabeledTree) -> Result<LabeledTree> {
    let t = l.tree();
    let mut out = vec![0; l.size()];
    for &r in t.root_edges() {
        let edges: Vec<usize> = t.subtree(r).collect();
        let mut vals: Vec<usize> = edges.iter().map(|&e| l.label(e)).collect();
        vals.sort_unstable();
        let m = vals.len();
        for &e in &edges {
            let rank = vals.binary_search(&l.label(e)).expect("label present");
            out[e] = vals[m - 1 - rank];
        }
    }
    let dir = match l.direction() {
        Direction::Decreasing => Direction::Increasing,
        Direction::Increasing => Direction::Decreasing,
    };
    LabeledTree::new(t.clone(), out, dir)
}

/// Decreasing label of a (1,k)-tiling, on the mirrored subdivided tree.
pub fn label_of_1k_tiling(t: &Tiling) -> Result<LabeledTree> {
    let lambda = base_path(t)?;
    label_1k(&lambda, &sets_from_mu(&mu_of_1k_tiling(t)?, t.b)?)
}

/// Increasing label of a (k,1)-tiling, on the subdivided tree.
pub fn label_of_k1_tiling(t: &Tiling) -> Result<LabeledTree> {
    let lambda = base_path(t)?;
    label_k1(&lambda, &sets_from_xi(&xi_of_k1_tiling(t)?, t.a)?)
}

/// Checks that transposing a (1,k)-tiling corresponds to `phi` on labels.
pub fn check_duality(t: &Tiling) -> Result<()> {
    let l = label_of_1k_tiling(t)?;
    let lt = label_of_k1_tiling(&t.transpose())?;
    let p = phi(&l)?;
    if p != lt {
        return Err(Error::Invariant(format!(
            "phi gives {:?}, the transposed tiling gives {:?}",
            p.pre_order_word(),
            lt.pre_order_word()
        )));
    }
    Ok(())
}
