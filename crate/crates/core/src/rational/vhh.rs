//! Tuples of vertical histories for trivial (a,b)-tilings, and the poset they generate.
//!
//! A trivial (a,b)-tiling above `U^a(D^b(lambda))` is recorded by its column counts split
//! into `a` columns-count vectors `V_1 >= V_2 >= ... >= V_a >= V_1 - 1`; each `V_i` is the
//! column data of a trivial (1,b)-tiling above `D^b(lambda)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::poset::Poset;
use crate::tiling::{enumerate_tilings, Tiling};

use super::blocks::base_path;
use super::decompose::{reinstate, trivial_from_columns, trivialize};
use super::{expand_d, expand_du};

pub const MAX_VHH_ELEMENTS: usize = 200_000;

/// Split column counts into `a` parts, largest first.
pub fn split_columns(v: &[i64], a: usize) -> Vec<Vec<i64>> {
    let mut rest = v.to_vec();
    let mut parts = Vec::with_capacity(a);
    for i in 1..=a {
        let w: Vec<i64> = rest.iter().map(|&r| r.div_euclid((a + 1 - i) as i64)).collect();
        for (r, x) in rest.iter_mut().zip(&w) {
            *r -= x;
        }
        parts.push(w);
    }
    parts.reverse();
    parts
}

/// `V_k <= V_j <= V_k + 1` entrywise for `j < k`.
pub fn is_interleaved(v: &[Vec<i64>]) -> bool {
    v.iter().enumerate().all(|(j, vj)| {
        v[j + 1..].iter().all(|vk| vj.len() == vk.len() && vj.iter().zip(vk).all(|(x, y)| y <= x && *x <= y + 1))
    })
}

/// The tuple of a tiling, read off its trivial version.
pub fn vhh_of(t: &Tiling) -> Result<Vec<Vec<i64>>> {
    Ok(split_columns(&trivialize(t)?.column_counts(), t.a))
}

/// The `a` trivial (1,b)-tilings of the tuple, largest first, with every non-trivial tile
/// of `t` put back into the first one as a (1,b)-tile of the same size.
pub fn vhh_parts(t: &Tiling) -> Result<Vec<Tiling>> {
    let lambda = base_path(t)?;
    let bot1 = expand_d(&lambda, t.b);
    let mut parts = vhh_of(t)?
        .iter()
        .map(|p| trivial_from_columns(1, t.b, &bot1, p))
        .collect::<Result<Vec<_>>>()?;
    let mut sizes: Vec<usize> = t.tiles.iter().map(|x| x.size()).filter(|&m| m > 0).collect();
    sizes.sort_unstable_by(|x, y| y.cmp(x));
    for m in sizes {
        parts[0] = reinstate(&parts[0], m)?;
    }
    Ok(parts)
}

/// Vertical histories of [`vhh_parts`].
pub fn vhh_histories(t: &Tiling) -> Result<Vec<Vec<usize>>> {
    Ok(vhh_parts(t)?.iter().map(Tiling::vertical_history).collect())
}

/// Trivial (a,b)-tiling above `U^a(D^b(lambda))` with the given column counts.
pub fn vhh_seed(lambda: &DyckPath, a: usize, b: usize, counts: &[i64]) -> Result<Tiling> {
    let t = trivial_from_columns(a, b, &expand_du(lambda, a, b), counts)?;
    check_parts(&t)?;
    Ok(t)
}

fn check_parts(t: &Tiling) -> Result<()> {
    let lambda = base_path(t)?;
    let bot1 = expand_d(&lambda, t.b);
    for (i, p) in vhh_of(t)?.iter().enumerate() {
        trivial_from_columns(1, t.b, &bot1, p)
            .map_err(|e| Error::Domain(format!("V_{} is not a (1,{}) tiling: {e}", i + 1, t.b)))?;
    }
    Ok(())
}

/// Tilings with the same top whose tiles are unions of tiles of `t` and whose weight is one less.
pub fn merge_covers(t: &Tiling) -> Result<Vec<Tiling>> {
    let top = t.top()?;
    let owners = t.owners();
    let w = t.weight();
    Ok(enumerate_tilings(t.a, t.b, &t.bottom, &top)
        .into_iter()
        .filter(|d| d.weight() + 1 == w)
        .filter(|d| {
            d.tiles.iter().all(|tile| {
                let boxes: HashSet<_> = tile.boxes(t.a, t.b).into_iter().collect();
                let ids: HashSet<usize> = boxes.iter().map(|c| owners[c]).collect();
                ids.iter().all(|&i| t.tiles[i].boxes(t.a, t.b).iter().all(|c| boxes.contains(c)))
            })
        })
        .map(Tiling::normalized)
        .collect())
}

/// Elements covering `t`: remove one box from one `V_i` keeping a valid interleaved tuple
/// (trivial tilings only), or merge tiles lowering the weight by one.
pub fn vhh_upper_covers(t: &Tiling) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    if t.is_trivial() {
        let lambda = base_path(t)?;
        let bot1 = expand_d(&lambda, t.b);
        let v = vhh_of(t)?;
        for i in 0..v.len() {
            for x in 0..v[i].len() {
                if v[i][x] == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[i][x] -= 1;
                if !is_interleaved(&w) || trivial_from_columns(1, t.b, &bot1, &w[i]).is_err() {
                    continue;
                }
                let counts: Vec<i64> = (0..w[0].len()).map(|c| w.iter().map(|p| p[c]).sum()).collect();
                if let Ok(d) = trivial_from_columns(t.a, t.b, &t.bottom, &counts) {
                    out.push(d);
                }
            }
        }
    }
    out.extend(merge_covers(t)?);
    out.sort_by(|x, y| x.tiles.cmp(&y.tiles));
    out.dedup();
    Ok(out)
}

pub fn vhh_covers(lo: &Tiling, hi: &Tiling) -> Result<bool> {
    Ok(vhh_upper_covers(lo)?.contains(&hi.clone().normalized()))
}

pub fn vhh_poset(seed: &Tiling) -> Result<Poset<Tiling>> {
    if !seed.is_trivial() {
        return Err(Error::Precondition("the seed must be a trivial tiling".into()));
    }
    check_parts(seed)?;
    let mut err = None;
    let p = Poset::generate(seed.clone().normalized(), MAX_VHH_ELEMENTS, |t| match vhh_upper_covers(t) {
        Ok(v) => v,
        Err(e) => {
            err.get_or_insert(e);
            Vec::new()
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(p),
    }
}

/// Entries `lo..hi` of each vertical history, parts separated by `/`.
pub fn vhh_compact(t: &Tiling, lo: usize, hi: usize) -> Result<String> {
    let rows: Vec<String> = vhh_histories(t)?
        .iter()
        .map(|p| p[lo..hi.min(p.len())].iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(rows.join("/"))
}

/// The columns outside which every part of the seed is zero.
pub fn nonzero_window(seed: &Tiling) -> Result<(usize, usize)> {
    let c = seed.column_counts();
    let lo = c.iter().position(|&x| x != 0).unwrap_or(0);
    let hi = c.iter().rposition(|&x| x != 0).map_or(lo, |p| p + 1);
    Ok((lo, hi))
}

/// The bottom word of an (a,b)-tiling as `U^a(D^b(lambda))`.
pub fn inflated_bottom(lambda: &DyckPath, a: usize, b: usize) -> Vec<Step> {
    expand_du(lambda, a, b)
}
