//! Integer sequences encoding decreasing labels, and the lattice they generate.
//!
//! Entry `i` of `tau` describes the edge carrying label `n + 1 - i`: twice the number of
//! edges with larger labels strictly right of it, plus the number of its ancestors
//! (all of which carry larger labels).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::{Direction, LabeledTree};
use crate::poset::Poset;
use crate::tree::PlaneTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tau(pub Vec<usize>);

impl Tau {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(s: &str) -> Result<Tau> {
        let s = s.trim();
        let v: Option<Vec<usize>> = if s.contains(',') {
            s.trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
                .split(',')
                .map(|x| x.trim().parse::<usize>().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        v.map(Tau).ok_or_else(|| Error::Parse(format!("cannot read {s:?} as an integer sequence")))
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(","))
        }
    }
}

pub fn tau_of_label(l: &LabeledTree) -> Result<Tau> {
    if l.direction() != Direction::Decreasing {
        return Err(Error::Precondition("tau is defined for decreasing labels".into()));
    }
    let n = l.size();
    let t = l.tree();
    let v = (1..=n)
        .map(|i| {
            let lab = n + 1 - i;
            let e = l.edge_of(lab);
            let right = (0..t.size()).filter(|&f| l.label(f) > lab && t.strictly_right(f, e)).count();
            let up = (0..t.size()).filter(|&f| l.label(f) > lab && t.is_ancestor(f, e)).count();
            2 * right + up
        })
        .collect();
    Ok(Tau(v))
}

/// Decode from the smallest label up: label 1 sits on the unique leaf of the remaining
/// tree whose count matches the last entry, and so on.
pub fn label_of_tau(t: &PlaneTree, tau: &Tau) -> Result<LabeledTree> {
    let n = t.size();
    if tau.len() != n {
        return Err(Error::InvalidLabel(format!("sequence of length {} for a tree with {n} edges", tau.len())));
    }
    let mut labels = vec![0usize; n];
    for lab in 1..=n {
        let free = |f: usize, labels: &[usize]| labels[f] == 0;
        let fits: Vec<usize> = (0..n)
            .filter(|&e| free(e, &labels) && t.children(e).iter().all(|&c| !free(c, &labels)))
            .filter(|&e| {
                let right = (0..n).filter(|&f| free(f, &labels) && t.strictly_right(f, e)).count();
                let up = (0..n).filter(|&f| free(f, &labels) && t.is_ancestor(f, e)).count();
                2 * right + up == tau.0[n - lab]
            })
            .collect();
        match fits.as_slice() {
            [e] => labels[*e] = lab,
            [] => return Err(Error::InvalidLabel(format!("{tau} does not encode a label: no edge for {lab}"))),
            _ => return Err(Error::Invariant(format!("{tau}: label {lab} fits edges {fits:?}"))),
        }
    }
    LabeledTree::new(t.clone(), labels, Direction::Decreasing)
}

/// The admissible `i` for a given `j`, if any (0-based). Fails if two exist.
pub fn admissible_i(tau: &Tau, j: usize) -> Result<Option<usize>> {
    let v = &tau.0;
    let found: Vec<usize> =
        (0..j).filter(|&i| v[j] >= v[i] + 2 && (i + 1..j).all(|k| v[k] >= v[j])).collect();
    match found.len() {
        0 => Ok(None),
        1 => Ok(Some(found[0])),
        _ => Err(Error::Invariant(format!("{tau}: several partners {found:?} for position {}", j + 1))),
    }
}

fn apply(tau: &Tau, i: usize, j: usize) -> Tau {
    let mut v = tau.0.clone();
    v[i] = tau.0[j] - 2;
    v[j] = tau.0[i];
    Tau(v)
}

/// Every sequence covering `tau`, ordered by `j`.
pub fn upper_covers(tau: &Tau) -> Result<Vec<Tau>> {
    let mut out = Vec::new();
    for j in 1..tau.len() {
        if let Some(i) = admissible_i(tau, j)? {
            out.push(apply(tau, i, j));
        }
    }
    Ok(out)
}

pub fn tau_covers(a: &Tau, b: &Tau) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Precondition("sequences of different lengths".into()));
    }
    Ok(upper_covers(a)?.contains(b))
}

pub const MAX_ELEMENTS: usize = 1_000_000;

pub fn tau_poset(seed: &Tau) -> Result<Poset<Tau>> {
    let mut err = None;
    let p = Poset::generate(seed.clone(), MAX_ELEMENTS, |t| match upper_covers(t) {
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

/// Sequences covered by `tau`: undo a move `(i, j)` and check the move applies.
pub fn lower_covers(tau: &Tau) -> Result<Vec<Tau>> {
    let v = &tau.0;
    let mut out = Vec::new();
    for j in 1..v.len() {
        for i in 0..j {
            let mut w = v.clone();
            w[i] = v[j];
            w[j] = v[i] + 2;
            let w = Tau(w);
            if admissible_i(&w, j)? == Some(i) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

fn closure(start: &Tau, step: fn(&Tau) -> Result<Vec<Tau>>) -> Result<HashSet<Tau>> {
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start.clone()];
    while let Some(x) = stack.pop() {
        for y in step(&x)? {
            if seen.len() >= MAX_ELEMENTS {
                return Err(Error::TooLarge { what: "tau closure", got: seen.len() + 1, max: MAX_ELEMENTS });
            }
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    Ok(seen)
}

fn least(common: Vec<Tau>, dir: fn(&Tau) -> Result<Vec<Tau>>, what: &str) -> Result<Tau> {
    // the least element is the one from which every other common bound is reachable
    let mut cands = Vec::new();
    for c in &common {
        let reach = closure(c, dir)?;
        if common.iter().all(|x| reach.contains(x)) {
            cands.push(c.clone());
        }
    }
    match cands.len() {
        1 => Ok(cands.pop().unwrap()),
        k => Err(Error::Invariant(format!("{k} candidates for the {what}"))),
    }
}

/// Least upper bound, found by intersecting the two up-sets.
pub fn join(a: &Tau, b: &Tau) -> Result<Tau> {
    if a.len() != b.len() {
        return Err(Error::Precondition("sequences of different lengths".into()));
    }
    let ua = closure(a, upper_covers)?;
    let ub = closure(b, upper_covers)?;
    least(ua.intersection(&ub).cloned().collect(), upper_covers, "join")
}

/// Greatest lower bound, found by intersecting the two down-sets.
pub fn meet(a: &Tau, b: &Tau) -> Result<Tau> {
    if a.len() != b.len() {
        return Err(Error::Precondition("sequences of different lengths".into()));
    }
    let da = closure(a, lower_covers)?;
    let db = closure(b, lower_covers)?;
    least(da.intersection(&db).cloned().collect(), lower_covers, "meet")
}

/// Scanning join: for `j` from the end, while the `j`-th entries differ,
/// apply the move `(i, j)` to the side with the larger entry. Gets stuck on some inputs,
/// in which case an invariant error names the position.
pub fn join_scan(a: &Tau, b: &Tau) -> Result<Tau> {
    if a.len() != b.len() {
        return Err(Error::Precondition("sequences of different lengths".into()));
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    for j in (0..x.len()).rev() {
        while x.0[j] != y.0[j] {
            let big = if x.0[j] > y.0[j] { &mut x } else { &mut y };
            let i = admissible_i(big, j)?
                .ok_or_else(|| Error::Invariant(format!("join scan: no move lowers entry {} of {big}", j + 1)))?;
            *big = apply(big, i, j);
        }
    }
    Ok(x)
}

fn mirror_tau(t: &PlaneTree, tau: &Tau) -> Result<(PlaneTree, Tau)> {
    let (mt, map) = t.mirror();
    let l = label_of_tau(t, tau)?;
    let mut labels = vec![0; t.size()];
    for e in 0..t.size() {
        labels[map[e]] = l.label(e);
    }
    let nu = tau_of_label(&LabeledTree::new(mt.clone(), labels, Direction::Decreasing)?)?;
    Ok((mt, nu))
}

/// Meet through the mirror image: mirror both labels, scan-join, mirror back.
/// Only correct when mirroring reverses the order, which fails in general.
pub fn meet_mirror(t: &PlaneTree, a: &Tau, b: &Tau) -> Result<Tau> {
    let (mt, na) = mirror_tau(t, a)?;
    let (_, nb) = mirror_tau(t, b)?;
    let j = join_scan(&na, &nb)?;
    Ok(mirror_tau(&mt, &j)?.1)
}

/// Distance from the seed along any saturated chain.
pub fn rank(seed: &Tau, tau: &Tau) -> Result<usize> {
    let p = tau_poset(seed)?;
    let k = p.index_of(tau).ok_or_else(|| Error::Precondition(format!("{tau} is not above {seed}")))?;
    Ok(p.ranks()?[k])
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeReport {
    pub elements: usize,
    pub covers: usize,
    pub height: usize,
    pub bottom: String,
    pub top: String,
    pub violations: Vec<String>,
    /// Pairs where the scanning join or mirror meet differs from the true join or meet.
    pub scan_mismatches: usize,
}

impl LatticeReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Build the up-set of `seed` and compare the join/meet algorithms against exhaustive search.
pub fn verify_lattice(t: &PlaneTree, seed: &Tau) -> Result<LatticeReport> {
    let p = tau_poset(seed)?;
    let mut violations = Vec::new();
    let mins = p.minimal();
    let maxs = p.maximal();
    if maxs.len() != 1 {
        violations.push(format!("{} maximal elements", maxs.len()));
    }
    let ranks = match p.ranks() {
        Ok(r) => r,
        Err(e) => {
            violations.push(e.to_string());
            vec![0; p.len()]
        }
    };
    for x in &p.elements {
        if x.0.iter().enumerate().any(|(i, &v)| v > 2 * i) {
            violations.push(format!("{x} leaves the range 0..=2(i-1)"));
        }
        if label_of_tau(t, x).and_then(|l| tau_of_label(&l)).ok().as_ref() != Some(x) {
            violations.push(format!("{x} does not round-trip through a label"));
        }
    }
    let leq = p.order_matrix();
    let mut scan_mismatches = 0;
    'pairs: for i in 0..p.len() {
        for j in i..p.len() {
            let (a, b) = (&p.elements[i], &p.elements[j]);
            let (bj, bm) = (p.join_brute(&leq, i, j), p.meet_brute(&leq, i, j));
            if bj.is_none() || bm.is_none() {
                violations.push(format!("pair {a}, {b} has no unique join or meet"));
                if violations.len() > 10 {
                    break 'pairs;
                }
                continue;
            }
            let in_p = |x: Result<Tau>| x.ok().and_then(|x| p.index_of(&x));
            if in_p(join(a, b)) != bj {
                violations.push(format!("join({a}, {b}) disagrees with exhaustive search"));
            }
            if in_p(meet(a, b)) != bm {
                violations.push(format!("meet({a}, {b}) disagrees with exhaustive search"));
            }
            if in_p(join_scan(a, b)) != bj || in_p(meet_mirror(t, a, b)) != bm {
                scan_mismatches += 1;
            }
        }
    }
    if let Err(e) = check_common_covers(&p, &ranks) {
        violations.push(e.to_string());
    }
    Ok(LatticeReport {
        elements: p.len(),
        covers: p.covers.len(),
        height: ranks.iter().copied().max().unwrap_or(0),
        bottom: mins.first().map(|&k| p.elements[k].to_string()).unwrap_or_default(),
        top: maxs.first().map(|&k| p.elements[k].to_string()).unwrap_or_default(),
        violations,
        scan_mismatches,
    })
}

/// Two distinct elements of the same positive rank never share two upper covers.
pub fn check_common_covers(p: &Poset<Tau>, ranks: &[usize]) -> Result<()> {
    let ups: Vec<Vec<usize>> = (0..p.len()).map(|i| p.upper_covers(i)).collect();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if ranks[a] != ranks[b] || ranks[a] == 0 {
                continue;
            }
            let common = ups[a].iter().filter(|x| ups[b].contains(x)).count();
            if common >= 2 {
                return Err(Error::Invariant(format!(
                    "{} and {} share {common} upper covers",
                    p.elements[a], p.elements[b]
                )));
            }
        }
    }
    Ok(())
}
