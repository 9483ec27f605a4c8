//! Ordinary Dyck tilings: the strip insertion map from increasing labels, Hermite
//! histories back to decreasing labels, and the generating functions above a path.

use crate::error::{Error, Result};
use crate::label::{LabeledTree, Direction};
use crate::path::{DyckPath, Step};
use crate::qpoly::{q_factorial, q_int, QPoly};
use crate::tiling::{self, column_heights, Cell, Tile, Tiling};
use crate::tree::PlaneTree;

/// Tiling associated with an increasing label by repeated peak insertion.
pub fn dts(l: &LabeledTree) -> Result<Tiling> {
    if l.direction() != Direction::Increasing {
        return Err(Error::Precondition("strip insertion needs an increasing label".into()));
    }
    dts_rec(l.tree().path(), l.labels())
}

fn dts_rec(path: &DyckPath, labels: &[usize]) -> Result<Tiling> {
    let n = labels.len();
    if n <= 1 {
        return Ok(Tiling::dyck(path, Vec::new()));
    }
    let tree = PlaneTree::from_path(path);
    let e = labels.iter().position(|&x| x == n).expect("label n");
    let smaller = tree.remove_leaf(e)?;
    let rest: Vec<usize> = labels.iter().enumerate().filter(|(k, _)| *k != e).map(|(_, &x)| x).collect();
    let inner = dts_rec(smaller.path(), &rest)?;
    // the peak of edge e starts after `cut` steps of the shorter path
    let cut = tree.chord(e).i as i64 - 1;
    Ok(insert_peak(&inner, path, cut))
}

/// Insert a peak into the bottom of `t` after `cut` steps, growing the tiles that straddle
/// the cut and adding a box on every north step of the top that lies right of the new peak.
fn insert_peak(t: &Tiling, bottom: &DyckPath, cut: i64) -> Tiling {
    let diag = |c: Cell| c.0 + c.1 + 1;
    let mut tiles = Vec::with_capacity(t.tiles.len());
    for tile in &t.tiles {
        let boxes = tile.boxes(1, 1);
        let anchor = if diag(tile.anchor) > cut { (tile.anchor.0 + 1, tile.anchor.1 + 1) } else { tile.anchor };
        let core = match boxes.iter().position(|&c| diag(c) == cut) {
            Some(k) => {
                let mut s = tile.core.steps().to_vec();
                s.splice(k..k, [Step::U, Step::D]);
                DyckPath::new(s).expect("inserting a peak keeps a Dyck path")
            }
            None => tile.core.clone(),
        };
        tiles.push(Tile { anchor, core });
    }
    let mut grown = Tiling::dyck(bottom, tiles);
    let top = grown.top().expect("grown tiling fills a region");
    let (mut x, mut y) = (0i64, 0i64);
    let mut extra = Vec::new();
    for s in &top {
        match s {
            Step::U => {
                if x + y > cut {
                    extra.push(Tile::trivial((x - 1, y)));
                }
                y += 1;
            }
            Step::D => x += 1,
        }
    }
    grown.tiles.extend(extra);
    grown.normalized()
}

/// Horizontal Hermite history, one entry per up step from left to right.
pub fn hermite_history(t: &Tiling) -> Vec<usize> {
    t.horizontal_history()
}

/// Decode a code `h` with `h_k = #{j < k : w_j < w_k}` into the permutation `w`.
pub fn decode_lehmer(h: &[usize]) -> Result<Vec<usize>> {
    let n = h.len();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut w = vec![0; n];
    for k in (0..n).rev() {
        if h[k] > k {
            return Err(Error::Invariant(format!("code entry {} exceeds {k}", h[k])));
        }
        w[k] = remaining.remove(h[k]);
    }
    Ok(w)
}

pub fn encode_lehmer(w: &[usize]) -> Vec<usize> {
    (0..w.len()).map(|k| (0..k).filter(|&j| w[j] < w[k]).count()).collect()
}

/// Decreasing label read off the Hermite history: the history is the code of the
/// label's pre-order word.
pub fn hermite_label(t: &Tiling) -> Result<LabeledTree> {
    let lambda = DyckPath::new(t.bottom.clone())?;
    let w = decode_lehmer(&hermite_history(t))?;
    LabeledTree::from_pre_order(PlaneTree::from_path(&lambda), &w, Direction::Decreasing)
}

/// Inverse of [`hermite_label`]: the tiling whose history encodes the given decreasing label.
pub fn tiling_of_decreasing(l: &LabeledTree) -> Result<Tiling> {
    if l.direction() != Direction::Decreasing {
        return Err(Error::Precondition("expected a decreasing label".into()));
    }
    dts(&l.bar())
}

/// The decreasing label paired with an increasing one, `e -> n + 1 - L(e)`.
pub fn label_duality(l: &LabeledTree) -> Result<LabeledTree> {
    if l.direction() != Direction::Increasing {
        return Err(Error::Precondition("expected an increasing label".into()));
    }
    Ok(l.bar())
}

/// `sum q^wt(D)` over tilings between `lambda` and `mu`.
pub fn gf_dyck(lambda: &DyckPath, mu: &DyckPath) -> Result<QPoly> {
    if !lambda.is_below(mu) {
        return Err(Error::Precondition(format!("{mu} is not weakly above {lambda}")));
    }
    Ok(tiling::weight_gf(&tiling::enumerate_tilings(1, 1, lambda.steps(), mu.steps())))
}

/// `sum over lambda <= nu <= mu` of `gf_dyck(lambda, nu)`.
pub fn gf_z_paths(lambda: &DyckPath, mu: &DyckPath) -> Result<QPoly> {
    if !lambda.is_below(mu) {
        return Err(Error::Precondition(format!("{mu} is not weakly above {lambda}")));
    }
    lambda.paths_between(mu).iter().map(|nu| gf_dyck(lambda, nu)).sum()
}

/// `[n]! / prod over chord pairs of [|a|]`.
pub fn hook_length_gf(t: &PlaneTree) -> Result<QPoly> {
    let mut den = QPoly::one();
    for e in 0..t.size() {
        den = &den * &q_int(t.chord(e).len())?;
    }
    q_factorial(t.size()).div_exact(&den)
}

/// The top path of an all-trivial tiling.
pub fn trivial_tiling_to_path(t: &Tiling) -> Result<DyckPath> {
    if let Some(tile) = t.tiles.iter().find(|x| !x.is_trivial()) {
        return Err(Error::Precondition(format!("non-trivial tile at {:?}", tile.anchor)));
    }
    DyckPath::new(t.top()?)
}

pub fn path_to_trivial_tiling(lambda: &DyckPath, nu: &DyckPath) -> Result<Tiling> {
    tiling::trivial_tiling(1, 1, lambda.steps(), nu.steps())
}

/// SVG drawing in the rotated picture: bottom path in bold, tile outlines in thin lines.
pub fn to_svg(t: &Tiling) -> String {
    let unit = 20.0;
    let w = t.bottom.len() as f64;
    let top = t.top().unwrap_or_else(|_| t.bottom.clone());
    let hmax = {
        let mut h = 0i64;
        let mut m = 0i64;
        for s in &top {
            h += if *s == Step::U { 1 } else { -1 };
            m = m.max(h);
        }
        m as f64
    };
    // N/E lattice point (x, y) sits at rotated (x + y, y - x)
    let pt = |x: i64, y: i64| ((x + y) as f64 * unit + unit, (hmax - (y - x) as f64) * unit + unit);
    let path_d = |steps: &[Step]| {
        let (mut x, mut y) = (0i64, 0i64);
        let (px, py) = pt(x, y);
        let mut d = format!("M{px},{py}");
        for s in steps {
            match s {
                Step::U => y += 1,
                Step::D => x += 1,
            }
            let (px, py) = pt(x, y);
            d.push_str(&format!(" L{px},{py}"));
        }
        d
    };
    let mut body = String::new();
    let owners = t.owners();
    for (&(x, y), &i) in {
        let mut v: Vec<_> = owners.iter().collect();
        v.sort();
        v
    } {
        // draw each box edge that separates it from a different tile or from the outside
        let nbrs = [((x - 1, y), (x, y), (x, y + 1)), ((x + 1, y), (x + 1, y), (x + 1, y + 1)),
            ((x, y - 1), (x, y), (x + 1, y)), ((x, y + 1), (x, y + 1), (x + 1, y + 1))];
        for (nb, a, b) in nbrs {
            if owners.get(&nb) != Some(&i) {
                let (x1, y1) = pt(a.0, a.1);
                let (x2, y2) = pt(b.0, b.1);
                body.push_str(&format!("<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"1\"/>\n"));
            }
        }
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n{}<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n</svg>\n",
        (w + 2.0) * unit,
        (hmax + 2.0) * unit,
        body,
        path_d(&t.bottom)
    )
}

/// Heights of the bottom path's east steps, exposed for callers building regions by hand.
pub fn bottom_columns(lambda: &DyckPath) -> Vec<i64> {
    column_heights(lambda.steps())
}
