//! Finite posets given by their cover relation.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

#[derive(Clone, Debug)]
pub struct Poset<T> {
    pub elements: Vec<T>,
    /// `(i, j)` means element `j` covers element `i`.
    pub covers: Vec<(usize, usize)>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + Hash> Poset<T> {
    /// Breadth-first closure of `seed` under `up`, which lists the elements covering its argument.
    pub fn generate(seed: T, max_elements: usize, mut up: impl FnMut(&T) -> Vec<T>) -> Result<Poset<T>> {
        let mut elements = vec![seed.clone()];
        let mut index = HashMap::new();
        index.insert(seed, 0);
        let mut covers = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let cur = elements[i].clone();
            for nxt in up(&cur) {
                let j = match index.get(&nxt) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= max_elements {
                            return Err(Error::TooLarge {
                                what: "poset elements",
                                got: elements.len() + 1,
                                max: max_elements,
                            });
                        }
                        let j = elements.len();
                        elements.push(nxt.clone());
                        index.insert(nxt, j);
                        queue.push_back(j);
                        j
                    }
                };
                covers.push((i, j));
            }
        }
        covers.sort();
        covers.dedup();
        Ok(Poset { elements, covers, index })
    }

    pub fn from_parts(elements: Vec<T>, covers: Vec<(usize, usize)>) -> Poset<T> {
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut covers = covers;
        covers.sort();
        covers.dedup();
        Poset { elements, covers, index }
    }

    pub fn index_of(&self, t: &T) -> Option<usize> {
        self.index.get(t).copied()
    }
}

impl<T> Poset<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect()
    }

    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == i).map(|c| c.0).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lower_covers(i).is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper_covers(i).is_empty()).collect()
    }

    /// `leq[i][j]` iff element `i <= j`.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut up = vec![Vec::new(); n];
        for &(i, j) in &self.covers {
            up[i].push(j);
        }
        let mut leq = vec![vec![false; n]; n];
        for (s, row) in leq.iter_mut().enumerate() {
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                if !row[x] {
                    row[x] = true;
                    stack.extend(up[x].iter().copied());
                }
            }
        }
        leq
    }

    /// Rank function when every maximal chain from the bottom has the same length.
    pub fn ranks(&self) -> Result<Vec<usize>> {
        let mins = self.minimal();
        if mins.len() != 1 {
            return Err(Error::Invariant(format!("{} minimal elements", mins.len())));
        }
        let n = self.len();
        let mut rank: Vec<Option<usize>> = vec![None; n];
        rank[mins[0]] = Some(0);
        let order = self.topological()?;
        for &i in &order {
            let lows = self.lower_covers(i);
            if lows.is_empty() {
                continue;
            }
            let rs: BTreeSet<usize> = lows.iter().map(|&l| rank[l].expect("topological") + 1).collect();
            if rs.len() != 1 {
                return Err(Error::Invariant(format!("element {i} has lower covers at ranks {rs:?}")));
            }
            rank[i] = rs.into_iter().next();
        }
        Ok(rank.into_iter().map(|r| r.expect("connected")).collect())
    }

    pub fn topological(&self) -> Result<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0; n];
        for &(_, j) in &self.covers {
            indeg[j] += 1;
        }
        let mut q: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(i) = q.pop_front() {
            out.push(i);
            for j in self.upper_covers(i) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    q.push_back(j);
                }
            }
        }
        if out.len() != n {
            return Err(Error::Invariant("cover relation has a cycle".into()));
        }
        Ok(out)
    }

    /// `sum_x q^rank(x)`.
    pub fn rank_gf(&self) -> Result<QPoly> {
        Ok(self.ranks()?.into_iter().map(|r| QPoly::monomial(1, r)).sum())
    }

    /// Least upper bound of `i` and `j` found by exhaustive search.
    pub fn join_brute(&self, leq: &[Vec<bool>], i: usize, j: usize) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.len()).filter(|&k| leq[i][k] && leq[j][k]).collect();
        let least: Vec<usize> = ubs.iter().copied().filter(|&k| ubs.iter().all(|&u| leq[k][u])).collect();
        (least.len() == 1).then(|| least[0])
    }

    pub fn meet_brute(&self, leq: &[Vec<bool>], i: usize, j: usize) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.len()).filter(|&k| leq[k][i] && leq[k][j]).collect();
        let great: Vec<usize> = lbs.iter().copied().filter(|&k| lbs.iter().all(|&l| leq[l][k])).collect();
        (great.len() == 1).then(|| great[0])
    }

    /// First pair without a unique join or meet, if any.
    pub fn lattice_violation(&self) -> Option<(usize, usize)> {
        let leq = self.order_matrix();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.join_brute(&leq, i, j).is_none() || self.meet_brute(&leq, i, j).is_none() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_violation().is_none()
    }

    /// Graphviz rendering, bottom to top.
    pub fn to_dot(&self, name: &str, label: impl Fn(&T) -> String) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", label(e).replace('"', "\\\""));
        }
        for &(i, j) in &self.covers {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }

    /// Plain isomorphism test of cover graphs by backtracking (small posets only).
    pub fn isomorphic<U>(&self, other: &Poset<U>) -> bool {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let adj = |p: &[(usize, usize)]| {
            let mut m = vec![vec![false; n]; n];
            for &(i, j) in p {
                m[i][j] = true;
            }
            m
        };
        let a = adj(&self.covers);
        let b = adj(&other.covers);
        let deg = |m: &Vec<Vec<bool>>, i: usize| {
            (m[i].iter().filter(|x| **x).count(), (0..n).filter(|&k| m[k][i]).count())
        };
        let da: Vec<_> = (0..n).map(|i| deg(&a, i)).collect();
        let db: Vec<_> = (0..n).map(|i| deg(&b, i)).collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            k: usize,
            n: usize,
            a: &[Vec<bool>],
            b: &[Vec<bool>],
            da: &[(usize, usize)],
            db: &[(usize, usize)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if k == n {
                return true;
            }
            for c in 0..n {
                if used[c] || da[k] != db[c] {
                    continue;
                }
                let ok = (0..k).all(|p| a[p][k] == b[map[p]][c] && a[k][p] == b[c][map[p]]);
                if !ok {
                    continue;
                }
                map[k] = c;
                used[c] = true;
                if rec(k + 1, n, a, b, da, db, map, used) {
                    return true;
                }
                used[c] = false;
            }
            false
        }
        rec(0, n, &a, &b, &da, &db, &mut map, &mut used)
    }
}
