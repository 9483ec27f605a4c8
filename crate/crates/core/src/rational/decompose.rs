//! Splitting (1,k)- and (a,b)-tilings into ordinary Dyck tilings above `lambda`.
//!
//! Only the boxes matter for the split, so a tiling is first replaced by the trivial
//! tiling with the same top. Non-trivial tiles are put back afterwards: a tile of size
//! `m` becomes a tile of size `m` in the last cell of the grid and a tile of size
//! `m - 1` in every other cell of the last row and the last column.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::tiling::{column_heights, path_from_columns, trivial_tiling, Tile, Tiling};

use super::blocks::{base_path, mu_of_1k_tiling};
use super::expand_d;

/// `alpha_i = floor((mu - alpha_1 - ... - alpha_{i-1}) / (k + 1 - i))`, entrywise.
pub fn decompose_mu(mu: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut rest = mu.to_vec();
    let mut out = Vec::with_capacity(k);
    for i in 1..=k {
        let a: Vec<usize> = rest.iter().map(|&r| r / (k + 1 - i)).collect();
        for (r, x) in rest.iter_mut().zip(&a) {
            *r -= x;
        }
        out.push(a);
    }
    out
}

/// `beta - 1 <= alpha <= beta` entrywise.
pub fn sandwiched(alpha: &[usize], beta: &[usize]) -> bool {
    alpha.len() == beta.len() && alpha.iter().zip(beta).all(|(&a, &b)| a <= b && a + 1 >= b)
}

/// Trivial tiling with `h[r]` boxes to the left of the `r`-th north step of `bottom`,
/// counted from the bottom.
pub fn trivial_from_rows(a: usize, b: usize, bottom: &[Step], h: &[usize]) -> Result<Tiling> {
    let mut tiles = Vec::new();
    let (mut x, mut y, mut r) = (0i64, 0i64, 0usize);
    for s in bottom {
        match s {
            Step::U => {
                let c = *h.get(r).ok_or_else(|| Error::Domain("too few row counts".into()))?;
                for dx in 1..=c as i64 {
                    tiles.push(Tile::trivial((x - dx, y)));
                }
                r += 1;
                y += 1;
            }
            Step::D => x += 1,
        }
    }
    if r != h.len() {
        return Err(Error::Domain(format!("{} row counts for {r} north steps", h.len())));
    }
    let t = Tiling { a, b, bottom: bottom.to_vec(), tiles }.normalized();
    t.validate()?;
    Ok(t)
}

/// Trivial tiling above `bottom` with the given number of boxes in each column.
pub fn trivial_from_columns(a: usize, b: usize, bottom: &[Step], counts: &[i64]) -> Result<Tiling> {
    let bot = column_heights(bottom);
    if counts.len() != bot.len() {
        return Err(Error::Domain(format!("{} column counts for {} columns", counts.len(), bot.len())));
    }
    let cols: Vec<i64> = bot.iter().zip(counts).map(|(x, c)| x + c).collect();
    let height = bottom.iter().filter(|s| **s == Step::U).count() as i64;
    if cols.windows(2).any(|w| w[0] > w[1]) || cols.last().is_some_and(|&c| c > height) {
        return Err(Error::InvalidTiling(format!("column counts {counts:?} do not give a lattice path")));
    }
    trivial_tiling(a, b, bottom, &path_from_columns(&cols, height))
}

/// Trivial Dyck tiling above `lambda` for `alpha`: the `j`-th north step from the top has
/// `n - j - alpha_j` boxes to its left.
pub fn dyck_of_alpha(lambda: &DyckPath, alpha: &[usize]) -> Result<Tiling> {
    let n = lambda.size();
    if alpha.len() != n {
        return Err(Error::Domain(format!("alpha has length {}, expected {n}", alpha.len())));
    }
    let mut h = Vec::with_capacity(n);
    for r in 0..n {
        let j = n - r;
        h.push((n - j).checked_sub(alpha[j - 1]).ok_or_else(|| Error::Domain(format!("alpha_{j} > {}", n - j)))?);
    }
    trivial_from_rows(1, 1, lambda.steps(), &h)
}

/// The trivial tiling with the same bottom and top.
pub fn trivialize(t: &Tiling) -> Result<Tiling> {
    trivial_tiling(t.a, t.b, &t.bottom, &t.top()?)
}

/// Merge trivial boxes of `t` into one tile of size `m`, taking the left-most placement
/// (smallest anchor, then first core) that leaves a valid tiling.
pub fn reinstate(t: &Tiling, m: usize) -> Result<Tiling> {
    if m == 0 {
        return Ok(t.clone());
    }
    let mut anchors: Vec<_> = t.tiles.iter().filter(|x| x.is_trivial()).map(|x| x.anchor).collect();
    anchors.sort();
    for anchor in anchors {
        for core in DyckPath::enumerate(m) {
            let tile = Tile { anchor, core };
            let boxes = tile.boxes(t.a, t.b);
            let all_free = boxes.iter().all(|c| t.tiles.iter().any(|x| x.is_trivial() && x.anchor == *c));
            if !all_free {
                continue;
            }
            let mut tiles: Vec<Tile> =
                t.tiles.iter().filter(|x| !(x.is_trivial() && boxes.contains(&x.anchor))).cloned().collect();
            tiles.push(tile);
            let cand = Tiling { tiles, ..t.clone() }.normalized();
            if cand.is_valid() {
                return Ok(cand);
            }
        }
    }
    Err(Error::Invariant(format!("no place for a tile of size {m}")))
}

/// The `a x b` grid of Dyck tilings above `lambda`, plus the data it was built from.
/// `rows[i]` comes from `parts[i]`; inside a row the tilings are ordered by `alpha_b, ..., alpha_1`,
/// so the number of boxes grows along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub lambda: DyckPath,
    pub parts: Vec<Vec<i64>>,
    pub alphas: Vec<Vec<Vec<usize>>>,
    pub rows: Vec<Vec<Tiling>>,
}

impl Grid {
    pub fn weights(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.iter().map(Tiling::weight).collect()).collect()
    }

    pub fn total_weight(&self) -> usize {
        self.weights().iter().flatten().sum()
    }
}

/// Split the trivial version of `t` into the grid of trivial Dyck tilings.
pub fn decompose_trivial_ab(t: &Tiling) -> Result<Grid> {
    let (a, b) = (t.a, t.b);
    let lambda = base_path(t)?;
    let v = trivialize(t)?.column_counts();
    let mut rest = v.clone();
    let mut parts = Vec::with_capacity(a);
    for i in 1..=a {
        let w: Vec<i64> = rest.iter().map(|&r| r.div_euclid((a + 1 - i) as i64)).collect();
        for (r, x) in rest.iter_mut().zip(&w) {
            *r -= x;
        }
        parts.push(w);
    }
    let bot1 = expand_d(&lambda, b);
    let mut alphas = Vec::with_capacity(a);
    let mut rows = Vec::with_capacity(a);
    for w in &parts {
        let tw = trivial_from_columns(1, b, &bot1, w)?;
        let al = decompose_mu(&mu_of_1k_tiling(&tw)?, b);
        let row = al.iter().rev().map(|x| dyck_of_alpha(&lambda, x)).collect::<Result<Vec<_>>>()?;
        alphas.push(al);
        rows.push(row);
    }
    Ok(Grid { lambda, parts, alphas, rows })
}

/// Full decomposition, with the non-trivial tiles put back greedily.
pub fn decompose_ab(t: &Tiling) -> Result<Grid> {
    let mut g = decompose_trivial_ab(t)?;
    let (a, b) = (t.a, t.b);
    let mut sizes: Vec<usize> = t.tiles.iter().map(Tile::size).filter(|&m| m > 0).collect();
    sizes.sort_unstable_by(|x, y| y.cmp(x));
    for m in sizes {
        for i in 0..a {
            for j in 0..b {
                let s = if i == a - 1 && j == b - 1 {
                    m
                } else if i == a - 1 || j == b - 1 {
                    m - 1
                } else {
                    0
                };
                g.rows[i][j] = reinstate(&g.rows[i][j], s)?;
            }
        }
    }
    Ok(g)
}

/// The `k` Dyck tilings of a (1,k)-tiling, fewest boxes first.
pub fn decompose_1k(t: &Tiling) -> Result<Vec<Tiling>> {
    if t.a != 1 {
        return Err(Error::Precondition(format!("expected a (1,k)-tiling, got ({},{})", t.a, t.b)));
    }
    Ok(decompose_ab(t)?.rows.remove(0))
}

fn row_histories(t: &Tiling) -> Vec<usize> {
    let mut h = t.horizontal_history();
    h.reverse();
    h
}

/// Rows are admissible in horizontal histories and columns in vertical histories:
/// each entry is sandwiched by the next one along the row or column.
pub fn check_grid_admissible(g: &Grid) -> Result<()> {
    for (i, row) in g.rows.iter().enumerate() {
        for j in 0..row.len() {
            if j + 1 < row.len() && !sandwiched(&row_histories(&row[j]), &row_histories(&row[j + 1])) {
                return Err(Error::Invariant(format!("row {} is not admissible at column {}", i + 1, j + 1)));
            }
            if i + 1 < g.rows.len()
                && !sandwiched(&row[j].vertical_history(), &g.rows[i + 1][j].vertical_history())
            {
                return Err(Error::Invariant(format!("column {} is not admissible at row {}", j + 1, i + 1)));
            }
        }
    }
    Ok(())
}

/// Top boundary of the (a,b)-tiling rebuilt from the column counts of a grid.
pub fn reassemble_top(g: &Grid, a: usize, b: usize) -> Result<Vec<Step>> {
    let bottom = super::expand_du(&g.lambda, a, b);
    let bot = column_heights(&bottom);
    let mut counts = vec![0i64; bot.len()];
    let bot1 = expand_d(&g.lambda, b);
    let n = g.lambda.size();
    for row in &g.rows {
        let mut mu = vec![0usize; n];
        for d in row {
            let h = trivialize(d)?.horizontal_history();
            for (j, m) in mu.iter_mut().enumerate() {
                *m += (n - 1 - j) - h[n - 1 - j];
            }
        }
        let h1: Vec<usize> = (0..n).map(|r| r * b - mu[n - 1 - r]).collect();
        let w = trivial_from_rows(1, b, &bot1, &h1)?.column_counts();
        for (c, x) in counts.iter_mut().zip(w) {
            *c += x;
        }
    }
    trivial_from_columns(a, b, &bottom, &counts)?.top()
}

/// Weight of the tiling next to the total weight of its decomposition.
pub fn weight_sum_check(t: &Tiling) -> Result<(usize, usize)> {
    Ok((t.weight(), decompose_ab(t)?.total_weight()))
}
