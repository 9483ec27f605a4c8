//! Dyck paths as U/D words, chord pairs and prime factors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }
}

/// Parse a word over `U`/`D` (`(`/`)` are accepted as aliases) without any validity check.
pub fn parse_steps(word: &str) -> Result<Vec<Step>> {
    word.chars()
        .filter(|c| !c.is_whitespace())
        .enumerate()
        .map(|(i, c)| match c {
            'U' | 'u' | '(' | 'N' => Ok(Step::U),
            'D' | 'd' | ')' | 'E' => Ok(Step::D),
            _ => Err(Error::InvalidPath { index: i + 1, msg: format!("unexpected character {c:?}") }),
        })
        .collect()
}

pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::U { 'U' } else { 'D' }).collect()
}

/// A matched up/down pair, 1-based step indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChordPair {
    pub i: usize,
    pub j: usize,
}

impl ChordPair {
    /// Number of up steps inside the pair, itself included.
    pub fn len(&self) -> usize {
        (self.j - self.i).div_ceil(2)
    }

    pub fn contains(&self, o: &ChordPair) -> bool {
        self.i <= o.i && o.j <= self.j
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidPath { index: i + 1, msg: "prefix has more D than U".into() });
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath { index: steps.len(), msg: "unequal U and D counts".into() });
        }
        Ok(DyckPath { steps })
    }

    pub fn parse(word: &str) -> Result<Self> {
        DyckPath::new(parse_steps(word)?)
    }

    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// `U^n D^n`
    pub fn top(n: usize) -> Self {
        DyckPath::from_blocks(&[n])
    }

    /// `U^{m_1} D^{m_1} U^{m_2} D^{m_2} ...`
    pub fn from_blocks(ms: &[usize]) -> Self {
        let mut steps = Vec::new();
        for &m in ms {
            steps.extend(std::iter::repeat_n(Step::U, m));
            steps.extend(std::iter::repeat_n(Step::D, m));
        }
        DyckPath { steps }
    }

    /// `(UD)^n`
    pub fn zigzag(n: usize) -> Self {
        DyckPath::from_blocks(&vec![1; n])
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each prefix, `h[0] = 0`, length `2n + 1`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0i64];
        for s in &self.steps {
            let last = *h.last().unwrap();
            h.push(if *s == Step::U { last + 1 } else { last - 1 });
        }
        h
    }

    /// Chord pairs ordered by their up step.
    pub fn chord_pairs(&self) -> Vec<ChordPair> {
        let mut open = Vec::new();
        let mut pairs = Vec::new();
        for (k, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => open.push(k + 1),
                Step::D => {
                    let i = open.pop().expect("valid path");
                    pairs.push(ChordPair { i, j: k + 1 });
                }
            }
        }
        pairs.sort();
        pairs
    }

    pub fn prime_decompose(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut h = 0i64;
        let mut start = 0;
        for (k, s) in self.steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h == 0 {
                out.push(DyckPath { steps: self.steps[start..=k].to_vec() });
                start = k + 1;
            }
        }
        out
    }

    pub fn is_prime(&self) -> bool {
        self.prime_decompose().len() == 1
    }

    pub fn concat(parts: &[DyckPath]) -> DyckPath {
        DyckPath { steps: parts.iter().flat_map(|p| p.steps.iter().copied()).collect() }
    }

    /// `U self D`
    pub fn lift(&self) -> DyckPath {
        let mut steps = vec![Step::U];
        steps.extend(self.steps.iter().copied());
        steps.push(Step::D);
        DyckPath { steps }
    }

    /// Reflection in a vertical line: reverse the word and swap U and D.
    pub fn mirror(&self) -> DyckPath {
        DyckPath { steps: self.steps.iter().rev().map(|s| s.flip()).collect() }
    }

    /// Height profile comparison: `other` is weakly above `self`.
    pub fn is_below(&self, other: &DyckPath) -> bool {
        self.len() == other.len() && self.heights().iter().zip(other.heights()).all(|(a, b)| *a <= b)
    }

    /// Number of unit boxes (in the N/E picture) between `self` and a path weakly above it.
    pub fn area_to(&self, above: &DyckPath) -> usize {
        let s: i64 = self.heights().iter().zip(above.heights()).map(|(a, b)| b - a).sum();
        (s / 2) as usize
    }

    /// All Dyck paths of size `n` in lexicographic order (`U < D`).
    pub fn enumerate(n: usize) -> Vec<DyckPath> {
        fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if ups == n && downs == n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if ups < n {
                cur.push(Step::U);
                rec(n, ups + 1, downs, cur, out);
                cur.pop();
            }
            if downs < ups {
                cur.push(Step::D);
                rec(n, ups, downs + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, 0, &mut Vec::new(), &mut out);
        out
    }

    /// Dyck paths `nu` with `self <= nu <= top`.
    pub fn paths_between(&self, top: &DyckPath) -> Vec<DyckPath> {
        let lo = self.heights();
        let hi = top.heights();
        let len = self.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn rec(lo: &[i64], hi: &[i64], h: i64, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            let k = cur.len();
            if k + 1 == lo.len() {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            for (s, nh) in [(Step::U, h + 1), (Step::D, h - 1)] {
                if nh >= lo[k + 1] && nh <= hi[k + 1] {
                    cur.push(s);
                    rec(lo, hi, nh, cur, out);
                    cur.pop();
                }
            }
        }
        if self.is_below(top) {
            rec(&lo, &hi, 0, &mut cur, &mut out);
        }
        debug_assert!(out.iter().all(|p| p.len() == len));
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_to_string(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        DyckPath::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![1u128; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_name_the_step() {
        match DyckPath::parse("UDDU") {
            Err(Error::InvalidPath { index, .. }) => assert_eq!(index, 3),
            other => panic!("{other:?}"),
        }
        assert!(DyckPath::parse("UUD").is_err());
        assert!(DyckPath::parse("").unwrap().is_empty());
    }

    #[test]
    fn chords() {
        let p = DyckPath::parse("UUUDDD").unwrap();
        let c = p.chord_pairs();
        assert_eq!(c, vec![ChordPair { i: 1, j: 6 }, ChordPair { i: 2, j: 5 }, ChordPair { i: 3, j: 4 }]);
        assert_eq!(c.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![3, 2, 1]);
    }

    #[test]
    fn between() {
        let lo = DyckPath::zigzag(3);
        assert_eq!(lo.paths_between(&DyckPath::top(3)).len(), 5);
        assert_eq!(lo.area_to(&DyckPath::top(3)), 3);
    }
}
