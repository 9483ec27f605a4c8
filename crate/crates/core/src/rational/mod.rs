//! Rational (a,b)-Dyck paths of inflated type and their tilings.

mod blocks;
mod decompose;
mod duality;
mod sets;
mod vhh;

pub use blocks::*;
pub use decompose::*;
pub use duality::*;
pub use sets::*;
pub use vhh::*;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{steps_to_string, DyckPath, Step};

/// Replace every `U` by `U^a` and every `D` by `D^b`.
pub fn expand_du(p: &DyckPath, a: usize, b: usize) -> Vec<Step> {
    let mut out = Vec::with_capacity(a * p.size() + b * p.size());
    for s in p.steps() {
        let k = if *s == Step::U { a } else { b };
        out.extend(std::iter::repeat_n(*s, k));
    }
    out
}

pub fn expand_d(p: &DyckPath, k: usize) -> Vec<Step> {
    expand_du(p, 1, k)
}

pub fn expand_u(p: &DyckPath, k: usize) -> Vec<Step> {
    expand_du(p, k, 1)
}

/// The Dyck path `lambda` with `expand_du(lambda, a, b) == steps`, if there is one.
pub fn compress(steps: &[Step], a: usize, b: usize) -> Option<DyckPath> {
    let mut out = Vec::new();
    let mut k = 0;
    while k < steps.len() {
        let s = steps[k];
        let run = if s == Step::U { a } else { b };
        if k + run > steps.len() || steps[k..k + run].iter().any(|&t| t != s) {
            return None;
        }
        out.push(s);
        k += run;
    }
    DyckPath::new(out).ok()
}

/// Lattice path from the origin to `(bn, an)` that never passes below the diagonal:
/// every prefix has `b * #U >= a * #D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalPath {
    pub a: usize,
    pub b: usize,
    #[serde(with = "crate::tiling::step_word")]
    pub steps: Vec<Step>,
}

impl RationalPath {
    pub fn new(steps: Vec<Step>, a: usize, b: usize) -> Result<RationalPath> {
        if a == 0 || b == 0 {
            return Err(Error::Domain("a and b must be positive".into()));
        }
        let (mut u, mut d) = (0usize, 0usize);
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::U => u += 1,
                Step::D => d += 1,
            }
            if b * u < a * d {
                return Err(Error::InvalidPath { index: i, msg: format!("passes below the ({a},{b}) diagonal") });
            }
        }
        if u % a != 0 || b * u != a * d {
            return Err(Error::InvalidPath { index: steps.len(), msg: format!("does not end on the ({a},{b}) diagonal") });
        }
        Ok(RationalPath { a, b, steps })
    }

    pub fn parse(word: &str, a: usize, b: usize) -> Result<RationalPath> {
        RationalPath::new(crate::path::parse_steps(word)?, a, b)
    }

    pub fn size(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::U).count() / self.a
    }

    /// The Dyck path it inflates, when it is of the form `U^a(D^b(lambda))`.
    pub fn base(&self) -> Option<DyckPath> {
        compress(&self.steps, self.a, self.b)
    }

    pub fn is_inflated(&self) -> bool {
        self.base().is_some()
    }
}

impl fmt::Display for RationalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", steps_to_string(&self.steps))
    }
}

pub const MAX_RATIONAL_PATHS: usize = 1_000_000;

/// Every (a,b)-Dyck path of size `n`, in lexicographic order with `U < D`.
pub fn enumerate_rational(n: usize, a: usize, b: usize) -> Result<Vec<RationalPath>> {
    if a == 0 || b == 0 {
        return Err(Error::Domain("a and b must be positive".into()));
    }
    let (nu, nd) = (a * n, b * n);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(nu + nd);
    fn rec(
        nu: usize,
        nd: usize,
        a: usize,
        b: usize,
        u: usize,
        d: usize,
        cur: &mut Vec<Step>,
        out: &mut Vec<RationalPath>,
    ) -> Result<()> {
        if u == nu && d == nd {
            if out.len() >= MAX_RATIONAL_PATHS {
                return Err(Error::TooLarge { what: "rational paths", got: out.len() + 1, max: MAX_RATIONAL_PATHS });
            }
            out.push(RationalPath { a, b, steps: cur.clone() });
            return Ok(());
        }
        if u < nu {
            cur.push(Step::U);
            rec(nu, nd, a, b, u + 1, d, cur, out)?;
            cur.pop();
        }
        if d < nd && b * u >= a * (d + 1) {
            cur.push(Step::D);
            rec(nu, nd, a, b, u, d + 1, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    rec(nu, nd, a, b, 0, 0, &mut cur, &mut out)?;
    Ok(out)
}

/// The inflated paths `U^a(D^b(lambda))` for every Dyck path `lambda` of size `n`.
pub fn inflated_paths(n: usize, a: usize, b: usize) -> Vec<RationalPath> {
    let mut v: Vec<RationalPath> = DyckPath::enumerate(n)
        .iter()
        .map(|l| RationalPath { a, b, steps: expand_du(l, a, b) })
        .collect();
    v.sort();
    v
}
