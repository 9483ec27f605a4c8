//! Trivial tilings as non-intersecting lattice paths, the rectangle division above a
//! path, and the product formula for 312-avoiding decreasing labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dyck::{dts, tiling_of_decreasing};
use crate::error::{Error, Result};
use crate::label::{gf_z_with, Direction, LabeledTree, Reading};
use crate::path::{DyckPath, Step};
use crate::qpoly::QPoly;
use crate::tiling::Tiling;
use crate::tree::PlaneTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(YoungDiagram { parts })
    }

    /// The rectangle `(len^rows)`.
    pub fn rectangle(rows: usize, len: usize) -> Self {
        YoungDiagram { parts: if len == 0 { Vec::new() } else { vec![len; rows] } }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Every diagram contained in `self`, with the same number of rows (padded with zeros).
    pub fn subdiagrams(&self) -> Vec<Vec<usize>> {
        fn rec(p: &[usize], k: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..=p[k].min(cap) {
                cur.push(v);
                rec(p, k + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YDir {
    Up,
    Down,
}

/// `sum over mu' in mu of q^|mu'|` (up) or `q^(|mu| - |mu'|)` (down).
pub fn gf_y(mu: &YoungDiagram, dir: YDir) -> QPoly {
    let total = mu.size();
    mu.subdiagrams()
        .into_iter()
        .map(|s| {
            let k: usize = s.iter().sum();
            QPoly::monomial(1, if dir == YDir::Up { k } else { total - k })
        })
        .sum()
}

pub type Point = (i64, i64);

/// Sources, sinks and the normalizing exponent of a determinant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub sources: Vec<Point>,
    pub sinks: Vec<Point>,
    pub shift: usize,
}

impl PointConfig {
    /// `a_i = (i-1, i-1)`, `b_i = a_i - (0,1) + (mu_{m+1-i}, 0)`.
    pub fn for_diagram(mu: &[usize]) -> PointConfig {
        let m = mu.len();
        let sources: Vec<Point> = (0..m).map(|i| (i as i64, i as i64)).collect();
        let sinks = (0..m).map(|i| (i as i64 + mu[m - 1 - i] as i64, i as i64 - 1)).collect();
        let shift = (0..m).map(|i| i * mu[m - 1 - i]).sum();
        PointConfig { sources, sinks, shift }
    }

    /// The matrix of weighted path sums.
    pub fn matrix(&self) -> Vec<Vec<QPoly>> {
        self.sources.iter().map(|&a| self.sinks.iter().map(|&b| path_weight(a, b)).collect()).collect()
    }
}

/// Right/down paths from `a` to `b`, each right step at height `y` weighted `q^(y+1)`.
pub fn path_weight(a: Point, b: Point) -> QPoly {
    let dx = b.0 - a.0;
    if dx < 0 || b.1 > a.1 {
        return QPoly::zero();
    }
    let dx = dx as usize;
    // f[r] = weighted count of ways to place r right steps on the rows seen so far
    let mut f = vec![QPoly::zero(); dx + 1];
    f[0] = QPoly::one();
    for y in b.1..=a.1 {
        let w = QPoly::monomial(1, (y + 1).max(0) as usize);
        for r in 1..=dx {
            let add = &f[r - 1] * &w;
            f[r] = &f[r] + &add;
        }
    }
    f[dx].clone()
}

/// Fraction-free (Bareiss) determinant over integer polynomials.
pub fn bareiss_det(mut m: Vec<Vec<QPoly>>) -> Result<QPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(QPoly::one());
    }
    let mut sign = false;
    let mut prev = QPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(QPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}

/// `q^(-D) det(wt(source_i -> sink_j))`.
pub fn lgv_determinant(cfg: &PointConfig) -> Result<QPoly> {
    let d = bareiss_det(cfg.matrix())?;
    d.unshift(cfg.shift).map_err(|_| Error::Inexact(format!("determinant {d} is not divisible by q^{}", cfg.shift)))
}

/// Boxes of a tiling in each row, keyed by row from the bottom.
fn row_counts(t: &Tiling) -> Vec<usize> {
    let mut rows = vec![0; t.height() as usize];
    for tile in &t.tiles {
        for (_, y) in tile.boxes(t.a, t.b) {
            rows[y as usize] += 1;
        }
    }
    rows
}

/// Points for the trivial tiling of an increasing label: one source/sink pair per
/// up step, counted from the top.
pub fn label_points(t: &Tiling) -> PointConfig {
    let n = t.height() as usize;
    if n == 0 {
        return PointConfig { sources: Vec::new(), sinks: Vec::new(), shift: 0 };
    }
    let mut xs = vec![0i64; n];
    let mut x = 0;
    let mut y = 0;
    for s in &t.bottom {
        match s {
            Step::U => {
                xs[y] = x;
                y += 1;
            }
            Step::D => x += 1,
        }
    }
    let rows = row_counts(t);
    // u_i is the i-th up step from the top
    let xu: Vec<i64> = (0..n).rev().map(|r| xs[r]).collect();
    let mu: Vec<usize> = (0..n).rev().map(|r| rows[r]).collect();
    let mut sources: Vec<Point> = vec![(0, 0)];
    for i in 0..n.saturating_sub(1) {
        let c = sources[i];
        sources.push((c.0 + 1 + (xu[i] - xu[i + 1]), c.1 + 1));
    }
    let sinks = (0..n).map(|i| (sources[i].0 + mu[i] as i64, sources[i].1 - 1)).collect();
    let shift = (0..n).map(|i| i * mu[i]).sum();
    PointConfig { sources, sinks, shift }
}

/// Determinant attached to an increasing label whose tiling has only unit tiles.
pub fn det_y_label(l: &LabeledTree) -> Result<QPoly> {
    let t = dts(l)?;
    if !t.is_trivial() {
        return Err(Error::Precondition(format!("the tiling of {l} has a non-trivial tile")));
    }
    lgv_determinant(&label_points(&t))
}

/// Same determinant, addressed by the decreasing label `bar(L)`.
pub fn det_y_decreasing(l: &LabeledTree) -> Result<QPoly> {
    det_y_label(&l.bar())
}

/// A rectangle of boxes `x0 <= x < x0 + width`, `y0 <= y < y0 + height` in the N/E picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x0: i64,
    pub y0: i64,
    pub width: usize,
    pub height: usize,
}

impl Rect {
    pub fn contains(&self, c: (i64, i64)) -> bool {
        c.0 >= self.x0 && c.0 < self.x0 + self.width as i64 && c.1 >= self.y0 && c.1 < self.y0 + self.height as i64
    }
}

/// Peel branch points, left-most and lowest first, into rectangles covering the region
/// between `lambda` and `U^n D^n`.
pub fn rectangle_division(lambda: &DyckPath) -> Vec<Rect> {
    let mut cur = lambda.clone();
    let mut out = Vec::new();
    loop {
        let t = PlaneTree::from_path(&cur);
        // a branch point whose child subtrees are chains
        let pick = t.branch_points().into_iter().find(|&b| {
            let kids: Vec<usize> = match b {
                None => t.root_edges().to_vec(),
                Some(e) => t.children(e).to_vec(),
            };
            kids.iter().all(|&k| t.subtree(k).all(|f| t.children(f).len() <= 1))
        });
        let Some(b) = pick else { break };
        let (start, end) = match b {
            None => (0, cur.len()),
            Some(e) => (t.chord(e).i, t.chord(e).j - 1),
        };
        let steps = cur.steps();
        let (mut x0, mut y0) = (0i64, 0i64);
        for s in &steps[..start] {
            match s {
                Step::U => y0 += 1,
                Step::D => x0 += 1,
            }
        }
        let inner = DyckPath::new(steps[start..end].to_vec()).expect("balanced factor");
        let blocks: Vec<usize> = inner.prime_decompose().iter().map(|p| p.size()).collect();
        let mut acc = blocks[0];
        for &m in &blocks[1..] {
            out.push(Rect { x0, y0: y0 + acc as i64, width: acc, height: m });
            acc += m;
        }
        let mut next = steps[..start].to_vec();
        next.extend(std::iter::repeat_n(Step::U, acc));
        next.extend(std::iter::repeat_n(Step::D, acc));
        next.extend_from_slice(&steps[end..]);
        cur = DyckPath::new(next).expect("merged path");
    }
    out
}

/// Young diagram cut out of a rectangle by the boxes of a tiling: row lengths, bottom row first.
pub fn diagram_in(rect: &Rect, t: &Tiling) -> Result<YoungDiagram> {
    let owners = t.owners();
    let mut parts = Vec::with_capacity(rect.height);
    for dy in 0..rect.height as i64 {
        let y = rect.y0 + dy;
        let row: Vec<bool> = (0..rect.width as i64).map(|dx| owners.contains_key(&(rect.x0 + dx, y))).collect();
        let k = row.iter().filter(|b| **b).count();
        // boxes sit flush against the rectangle's right side
        if row[rect.width - k..].iter().any(|b| !b) {
            return Err(Error::Invariant(format!("boxes in {rect:?} are not right-justified")));
        }
        parts.push(k);
    }
    YoungDiagram::new(parts)
}

/// Condition on siblings: a right sibling carries the larger label.
pub fn check_condition_star2(l: &LabeledTree) -> bool {
    let t = l.tree();
    let mut groups: Vec<Vec<usize>> = vec![t.root_edges().to_vec()];
    groups.extend((0..t.size()).map(|e| t.children(e).to_vec()));
    groups.iter().all(|g| g.windows(2).all(|w| l.label(w[0]) < l.label(w[1])))
}

fn is_block_concatenation(p: &DyckPath) -> bool {
    p.prime_decompose().iter().all(|f| *f == DyckPath::top(f.size()))
}

/// One rectangle of the division with its diagram and factor.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Factor {
    pub rect: Rect,
    pub diagram: YoungDiagram,
    pub y_down: QPoly,
}

/// Factors of the product formula for a 312-avoiding decreasing seed.
pub fn factorization(seed: &LabeledTree) -> Result<Vec<Factor>> {
    if seed.direction() != Direction::Decreasing {
        return Err(Error::Precondition("the product formula needs a decreasing label".into()));
    }
    if !seed.is_312_avoiding() {
        return Err(Error::Precondition(format!("{seed} is not 312-avoiding")));
    }
    let lambda = seed.tree().path();
    if !check_condition_star2(seed) && !is_block_concatenation(lambda) {
        return Err(Error::Precondition(format!("{seed} violates the sibling condition")));
    }
    let t = tiling_of_decreasing(seed)?;
    if !t.is_trivial() {
        return Err(Error::Invariant(format!("tiling of the 312-avoiding label {seed} has a non-trivial tile")));
    }
    rectangle_division(lambda)
        .into_iter()
        .map(|rect| {
            let diagram = diagram_in(&rect, &t)?;
            let y_down = gf_y(&diagram, YDir::Down);
            Ok(Factor { rect, diagram, y_down })
        })
        .collect()
}

/// `prod Y_down(mu_i)` over the rectangle division.
pub fn factorized_gf(seed: &LabeledTree) -> Result<QPoly> {
    Ok(factorization(seed)?.into_iter().map(|f| f.y_down).product())
}

/// `sum over labels above the seed of q^wt` where `wt` is the weight of the label's tiling.
pub fn gf_z_weight(seed: &LabeledTree) -> Result<QPoly> {
    if seed.direction() != Direction::Decreasing {
        return Err(Error::Precondition("expected a decreasing label".into()));
    }
    gf_z_with(seed, Reading::PRE)
}

/// Tilings of the up-set containing a non-trivial tile: `Z - Y` with both sides weighted
/// by tiling weight.
pub fn gf_w(seed: &LabeledTree) -> Result<QPoly> {
    let z = gf_z_weight(seed)?;
    let y = det_y_decreasing(seed)?;
    let w = &z - &y;
    if !w.is_nonnegative() {
        return Err(Error::Invariant(format!("Z - Y = {w} has a negative coefficient")));
    }
    Ok(w)
}
