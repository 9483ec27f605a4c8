//! Cover-inclusive tilings by (a,b)-Dyck tiles in the N/E lattice picture.
//!
//! A path is a word of `U` (north) and `D` (east) steps from the origin. Box `(x, y)`
//! is the unit square with lower-left corner `(x, y)`. A box lies in the region between
//! a bottom path and a top path when `bottom(x) <= y < top(x)`, where `bottom(x)` is the
//! height of the east step crossing column `x`.
//!
//! A tile of size `m` is the ribbon of boxes visited by `U^a(D^b(core))` for a Dyck path
//! `core` of size `m`, starting at its anchor. Ordinary Dyck tilings are the case
//! `a = b = 1`; the diamond picture is the same object rotated by 45 degrees.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::qpoly::QPoly;
use crate::rational::expand_du;

pub type Cell = (i64, i64);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tile {
    pub anchor: Cell,
    pub core: DyckPath,
}

impl Tile {
    pub fn trivial(anchor: Cell) -> Tile {
        Tile { anchor, core: DyckPath::empty() }
    }

    pub fn size(&self) -> usize {
        self.core.size()
    }

    pub fn is_trivial(&self) -> bool {
        self.core.is_empty()
    }

    pub fn weight(&self, a: usize, b: usize) -> usize {
        (a + b - 1) * self.size() + 1
    }

    /// Boxes in path order; the first is the anchor.
    pub fn boxes(&self, a: usize, b: usize) -> Vec<Cell> {
        let mut cur = self.anchor;
        let mut out = vec![cur];
        for s in expand_du(&self.core, a, b) {
            cur = match s {
                Step::U => (cur.0, cur.1 + 1),
                Step::D => (cur.0 + 1, cur.1),
            };
            out.push(cur);
        }
        out
    }
}

/// Heights of the east steps of a lattice word, one per column.
pub fn column_heights(steps: &[Step]) -> Vec<i64> {
    let mut h = 0;
    let mut out = Vec::new();
    for s in steps {
        match s {
            Step::U => h += 1,
            Step::D => out.push(h),
        }
    }
    out
}

/// Inverse of [`column_heights`] given the total number of north steps.
pub fn path_from_columns(cols: &[i64], height: i64) -> Vec<Step> {
    let mut out = Vec::new();
    let mut h = 0;
    for &c in cols {
        while h < c {
            out.push(Step::U);
            h += 1;
        }
        out.push(Step::D);
    }
    while h < height {
        out.push(Step::U);
        h += 1;
    }
    out
}

/// All lattice words whose column heights lie between those of `lo` and `hi`.
pub fn lattice_paths_between(lo: &[Step], hi: &[Step]) -> Vec<Vec<Step>> {
    let lc = column_heights(lo);
    let hc = column_heights(hi);
    let height = lo.iter().filter(|s| **s == Step::U).count() as i64;
    let mut out = Vec::new();
    fn rec(lc: &[i64], hc: &[i64], h: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let x = cur.len();
        if x == lc.len() {
            out.push(cur.clone());
            return;
        }
        for t in lc[x].max(cur.last().copied().unwrap_or(0))..=hc[x] {
            cur.push(t);
            rec(lc, hc, h, cur, out);
            cur.pop();
        }
    }
    if lc.len() != hc.len() || lc.iter().zip(&hc).any(|(l, h)| l > h) {
        return out;
    }
    let mut cols = Vec::new();
    rec(&lc, &hc, height, &mut Vec::new(), &mut cols);
    for c in cols {
        out.push(path_from_columns(&c, height));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    pub a: usize,
    pub b: usize,
    #[serde(with = "step_word")]
    pub bottom: Vec<Step>,
    pub tiles: Vec<Tile>,
}

pub(crate) mod step_word {
    use super::Step;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Step], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::path::steps_to_string(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Step>, D::Error> {
        let s = String::deserialize(d)?;
        crate::path::parse_steps(&s).map_err(serde::de::Error::custom)
    }
}

impl Tiling {
    pub fn empty(a: usize, b: usize, bottom: Vec<Step>) -> Tiling {
        Tiling { a, b, bottom, tiles: Vec::new() }
    }

    /// An ordinary Dyck tiling above `lambda`.
    pub fn dyck(lambda: &DyckPath, tiles: Vec<Tile>) -> Tiling {
        Tiling { a: 1, b: 1, bottom: lambda.steps().to_vec(), tiles }
    }

    pub fn width(&self) -> usize {
        self.bottom.iter().filter(|s| **s == Step::D).count()
    }

    pub fn height(&self) -> i64 {
        self.bottom.iter().filter(|s| **s == Step::U).count() as i64
    }

    pub fn bottom_columns(&self) -> Vec<i64> {
        column_heights(&self.bottom)
    }

    pub fn weight(&self) -> usize {
        self.tiles.iter().map(|t| t.weight(self.a, self.b)).sum()
    }

    pub fn box_count(&self) -> usize {
        self.tiles.iter().map(|t| 1 + (self.a + self.b) * t.size()).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.tiles.iter().all(Tile::is_trivial)
    }

    /// Box to tile index.
    pub fn owners(&self) -> HashMap<Cell, usize> {
        let mut m = HashMap::new();
        for (i, t) in self.tiles.iter().enumerate() {
            for c in t.boxes(self.a, self.b) {
                m.insert(c, i);
            }
        }
        m
    }

    /// Number of boxes in each column.
    pub fn column_counts(&self) -> Vec<i64> {
        let mut v = vec![0; self.width()];
        for t in &self.tiles {
            for (x, _) in t.boxes(self.a, self.b) {
                if x >= 0 && (x as usize) < v.len() {
                    v[x as usize] += 1;
                }
            }
        }
        v
    }

    /// The top boundary word; fails if the boxes do not stack into a region above the bottom.
    pub fn top(&self) -> Result<Vec<Step>> {
        self.check_region()?;
        let b = self.bottom_columns();
        let cols: Vec<i64> = b.iter().zip(self.column_counts()).map(|(x, c)| x + c).collect();
        Ok(path_from_columns(&cols, self.height()))
    }

    fn check_region(&self) -> Result<()> {
        let bot = self.bottom_columns();
        let w = bot.len() as i64;
        let mut seen: HashMap<Cell, usize> = HashMap::new();
        for (i, t) in self.tiles.iter().enumerate() {
            for c in t.boxes(self.a, self.b) {
                if c.0 < 0 || c.0 >= w {
                    return Err(Error::InvalidTiling(format!("tile {i} leaves the strip at {c:?}")));
                }
                if c.1 < bot[c.0 as usize] {
                    return Err(Error::InvalidTiling(format!("tile {i} dips below the bottom at {c:?}")));
                }
                if let Some(j) = seen.insert(c, i) {
                    return Err(Error::InvalidTiling(format!("tiles {j} and {i} overlap at {c:?}")));
                }
            }
        }
        let counts = self.column_counts();
        let mut prev = 0;
        for x in 0..w as usize {
            let lo = bot[x];
            for y in lo..lo + counts[x] {
                if !seen.contains_key(&(x as i64, y)) {
                    return Err(Error::InvalidTiling(format!("hole at {:?}", (x, y))));
                }
            }
            let top = lo + counts[x];
            if top < prev {
                return Err(Error::InvalidTiling(format!("top boundary descends at column {x}")));
            }
            prev = top;
        }
        if prev > self.height() {
            return Err(Error::InvalidTiling("region exceeds the path's height".into()));
        }
        Ok(())
    }

    /// Full validity: region fill, disjointness, and cover-inclusivity.
    pub fn validate(&self) -> Result<()> {
        self.check_region()?;
        let owners = self.owners();
        let bot = self.bottom_columns();
        for (i, t) in self.tiles.iter().enumerate() {
            if !cover_ok(t.boxes(self.a, self.b).iter(), &owners, &bot) {
                return Err(Error::InvalidTiling(format!(
                    "tile {i} at {:?} is not cover-inclusive",
                    t.anchor
                )));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Canonical order of tiles (by anchor) for comparisons.
    pub fn normalized(mut self) -> Tiling {
        self.tiles.sort();
        self
    }

    /// Mirror along `y = -x`: an (a,b)-tiling becomes a (b,a)-tiling above the
    /// reversed, letter-swapped path.
    pub fn transpose(&self) -> Tiling {
        let w = self.width() as i64;
        let h = self.height();
        let bottom = self.bottom.iter().rev().map(|s| s.flip()).collect();
        let tiles = self
            .tiles
            .iter()
            .map(|t| {
                let last = *t.boxes(self.a, self.b).last().unwrap();
                Tile { anchor: (h - 1 - last.1, w - 1 - last.0), core: t.core.mirror() }
            })
            .collect();
        Tiling { a: self.b, b: self.a, bottom, tiles }.normalized()
    }

    /// Horizontal history: one value per north step of the bottom path, bottom to top.
    /// Lines run west from each north step, enter a tile through an east edge and leave
    /// through the west edge of its anchor; a line whose first tile is already used
    /// starts one box further up the anti-diagonal.
    pub fn horizontal_history(&self) -> Vec<usize> {
        let owners = self.owners();
        let mut claimed = vec![false; self.tiles.len()];
        let mut ups = Vec::new();
        let (mut x, mut y) = (0i64, 0i64);
        for s in &self.bottom {
            match s {
                Step::U => {
                    ups.push((x, y));
                    y += 1;
                }
                Step::D => x += 1,
            }
        }
        let mut h = vec![0; ups.len()];
        for (k, &(px, py)) in ups.iter().enumerate().rev() {
            let mut cur = (px - 1, py);
            while let Some(&t) = owners.get(&cur) {
                if !claimed[t] {
                    break;
                }
                cur = (cur.0 - 1, cur.1 + 1);
            }
            while let Some(&t) = owners.get(&cur) {
                if claimed[t] {
                    break;
                }
                claimed[t] = true;
                h[k] += self.tiles[t].weight(self.a, self.b);
                let an = self.tiles[t].anchor;
                cur = (an.0 - 1, an.1);
            }
        }
        h
    }

    /// Vertical history: one value per east step, left to right (the horizontal history
    /// of the transposed tiling, read in the matching order).
    pub fn vertical_history(&self) -> Vec<usize> {
        let mut h = self.transpose().horizontal_history();
        h.reverse();
        h
    }
}

/// The tile with the given boxes, moved by `(1, -1)`, lies below the bottom or inside one tile.
fn cover_ok<'a>(boxes: impl Iterator<Item = &'a Cell>, owners: &HashMap<Cell, usize>, bot: &[i64]) -> bool {
    let mut below = false;
    let mut inside: Option<usize> = None;
    for &(x, y) in boxes {
        let s = (x + 1, y - 1);
        let is_below = s.0 as usize >= bot.len() || s.1 < bot[s.0 as usize];
        if is_below {
            below = true;
            if inside.is_some() {
                return false;
            }
        } else {
            match owners.get(&s) {
                Some(&o) => {
                    if below || inside.is_some_and(|i| i != o) {
                        return false;
                    }
                    inside = Some(o);
                }
                None => return false,
            }
        }
    }
    true
}

/// Cores of all tile shapes with at most `max_boxes` boxes, smallest first.
fn tile_cores(a: usize, b: usize, max_boxes: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut m = 0;
    while (a + b) * m < max_boxes {
        out.extend(DyckPath::enumerate(m));
        m += 1;
    }
    out
}

/// All cover-inclusive tilings of the region between `bottom` and `top`.
pub fn enumerate_tilings(a: usize, b: usize, bottom: &[Step], top: &[Step]) -> Vec<Tiling> {
    let bot = column_heights(bottom);
    let tc = column_heights(top);
    let mut cells: Vec<Cell> = Vec::new();
    for x in 0..bot.len() {
        for y in bot[x]..tc[x] {
            cells.push((x as i64, y));
        }
    }
    let (ai, bi) = (a as i64, b as i64);
    cells.sort_by_key(|&(x, y)| (bi * y - ai * x, x));
    let cores = tile_cores(a, b, cells.len());
    let inside: std::collections::HashSet<Cell> = cells.iter().copied().collect();
    let mut owners: HashMap<Cell, usize> = HashMap::new();
    let mut tiles: Vec<Tile> = Vec::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: usize,
        b: usize,
        cells: &[Cell],
        pos: usize,
        inside: &std::collections::HashSet<Cell>,
        bot: &[i64],
        cores: &[DyckPath],
        owners: &mut HashMap<Cell, usize>,
        tiles: &mut Vec<Tile>,
        out: &mut Vec<Tiling>,
        bottom: &[Step],
    ) {
        let mut pos = pos;
        while pos < cells.len() && owners.contains_key(&cells[pos]) {
            pos += 1;
        }
        if pos == cells.len() {
            out.push(Tiling { a, b, bottom: bottom.to_vec(), tiles: tiles.clone() }.normalized());
            return;
        }
        let anchor = cells[pos];
        for core in cores {
            let t = Tile { anchor, core: core.clone() };
            let bx = t.boxes(a, b);
            if !bx.iter().all(|c| inside.contains(c) && !owners.contains_key(c)) {
                continue;
            }
            if !cover_ok(bx.iter(), owners, bot) {
                continue;
            }
            let id = tiles.len();
            for c in &bx {
                owners.insert(*c, id);
            }
            tiles.push(t);
            rec(a, b, cells, pos + 1, inside, bot, cores, owners, tiles, out, bottom);
            tiles.pop();
            for c in &bx {
                owners.remove(c);
            }
        }
    }
    rec(a, b, &cells, 0, &inside, &bot, &cores, &mut owners, &mut tiles, &mut out, bottom);
    out.sort_by(|x, y| x.tiles.cmp(&y.tiles));
    out
}

/// Every tiling above `bottom` whose top lies weakly below `bound`.
pub fn enumerate_tilings_below(a: usize, b: usize, bottom: &[Step], bound: &[Step]) -> Vec<Tiling> {
    lattice_paths_between(bottom, bound)
        .iter()
        .flat_map(|top| enumerate_tilings(a, b, bottom, top))
        .collect()
}

/// The unique all-trivial tiling between two boundaries.
pub fn trivial_tiling(a: usize, b: usize, bottom: &[Step], top: &[Step]) -> Result<Tiling> {
    let bot = column_heights(bottom);
    let tc = column_heights(top);
    if bot.len() != tc.len() || bot.iter().zip(&tc).any(|(l, h)| l > h) {
        return Err(Error::Precondition("top boundary is not weakly above the bottom".into()));
    }
    let mut tiles = Vec::new();
    for x in 0..bot.len() {
        for y in bot[x]..tc[x] {
            tiles.push(Tile::trivial((x as i64, y)));
        }
    }
    Ok(Tiling { a, b, bottom: bottom.to_vec(), tiles }.normalized())
}

/// Weight generating function of a list of tilings.
pub fn weight_gf<'a>(ts: impl IntoIterator<Item = &'a Tiling>) -> QPoly {
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    for t in ts {
        *counts.entry(t.weight()).or_default() += 1;
    }
    counts.into_iter().map(|(w, c)| QPoly::monomial(c, w)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_steps;

    #[test]
    fn six_tilings_above_zigzag() {
        let lo = parse_steps("UDUDUD").unwrap();
        let hi = parse_steps("UUUDDD").unwrap();
        let all = enumerate_tilings_below(1, 1, &lo, &hi);
        assert_eq!(all.len(), 6);
        assert_eq!(weight_gf(&all), QPoly::from_i64s(&[1, 2, 2, 1]));
    }

    #[test]
    fn transpose_is_involution() {
        let lo = parse_steps("UDUDUD").unwrap();
        let hi = parse_steps("UUUDDD").unwrap();
        for t in enumerate_tilings_below(1, 1, &lo, &hi) {
            assert_eq!(t.transpose().transpose(), t.clone().normalized());
            assert!(t.transpose().is_valid());
        }
    }
}
