//! Dense polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A polynomial `c_0 + c_1 q + ... + c_d q^d`.
///
/// Coefficients are stored without trailing zeros; the zero polynomial
/// has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c * q^e`
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::from(c);
        QPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        QPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e` (zero past the degree).
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `q^deg * p(1/q)` for the given `deg` (must be at least the degree).
    pub fn reflect(&self, deg: usize) -> QPoly {
        assert!(self.degree().is_none_or(|d| d <= deg));
        let mut v = vec![BigInt::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[deg - i] = c.clone();
        }
        QPoly::from_coeffs(v)
    }

    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.reflect(d) == *self,
        }
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); e];
        v.extend(self.coeffs.iter().cloned());
        QPoly { coeffs: v }
    }

    /// Divide by `q^e`; fails unless the low `e` coefficients vanish.
    pub fn unshift(&self, e: usize) -> Result<QPoly, Error> {
        if self.coeffs.iter().take(e).any(|c| !c.is_zero()) {
            return Err(Error::Inexact(format!("{self} is not divisible by q^{e}")));
        }
        Ok(QPoly::from_coeffs(self.coeffs.iter().skip(e).cloned().collect()))
    }

    pub fn pow(&self, k: u32) -> QPoly {
        (0..k).fold(QPoly::one(), |acc, _| &acc * self)
    }

    /// Exact division; an error if `d` does not divide `self`.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly, Error> {
        let (quot, rem) = self.div_rem_lead(d)?;
        if !rem.is_zero() {
            return Err(Error::Inexact(format!("({self}) / ({d}) leaves remainder {rem}")));
        }
        Ok(quot)
    }

    // Long division that requires each step's leading coefficient to divide evenly.
    fn div_rem_lead(&self, d: &QPoly) -> Result<(QPoly, QPoly), Error> {
        let dd = d.degree().ok_or_else(|| Error::Inexact("division by zero polynomial".into()))?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if sd < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            if !(c % lead).is_zero() {
                return Err(Error::Inexact(format!("({self}) / ({d}) is not integral")));
            }
            let f = c / lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &f * dc;
            }
            quot[k] = f;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Rendering without `*`, e.g. `1 + 2q + q^2`.
    pub fn compact(&self) -> String {
        self.render(false)
    }

    fn render(&self, star: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{e}"),
            };
            if e == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else if star {
                out.push_str(&format!("{mag}*{var}"));
            } else {
                out.push_str(&format!("{mag}{var}"));
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Accepts both `2*q^3` and `2q^3` term styles.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |m: &str| Error::Parse(format!("polynomial {s:?}: {m}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in t.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut acc = QPoly::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coef, exp) = match body.find('q') {
                None => (body, 0usize),
                Some(qi) => {
                    let c = body[..qi].trim_end_matches('*');
                    let rest = &body[qi + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| bad("expected ^ after q"))?
                            .parse()
                            .map_err(|_| bad("bad exponent"))?
                    };
                    (if c.is_empty() { "1" } else { c }, e)
                }
            };
            let mut c: BigInt = coef.parse().map_err(|_| bad("bad coefficient"))?;
            if neg {
                c = -c;
            }
            let mut v = vec![BigInt::zero(); exp + 1];
            v[exp] = c;
            acc = &acc + &QPoly::from_coeffs(v);
        }
        Ok(acc)
    }
}

impl Serialize for QPoly {
    /// Coefficient array, lowest degree first; entries outside `i64` become strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let vals: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        vals.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let vals = Vec::<serde_json::Value>::deserialize(d)?;
        let mut cs = Vec::with_capacity(vals.len());
        for v in vals {
            let c = match &v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("non-integer coefficient"))?,
                serde_json::Value::String(s) => {
                    s.parse().map_err(|_| D::Error::custom("bad coefficient string"))?
                }
                _ => return Err(D::Error::custom("coefficient must be integer or string")),
            };
            cs.push(c);
        }
        Ok(QPoly::from_coeffs(cs))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(v)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, o: QPoly) -> QPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(it: I) -> QPoly {
        it.fold(QPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(it: I) -> QPoly {
        it.fold(QPoly::one(), |a, b| &a * &b)
    }
}

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: usize) -> Result<QPoly, Error> {
    if n == 0 {
        return Err(Error::Domain("[0] is not defined here".into()));
    }
    Ok(QPoly::from_coeffs(vec![BigInt::one(); n]))
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(|i| q_int(i).expect("i >= 1")).product()
}

/// Gaussian binomial `[p+r]! / ([p]! [r]!)`, built by the q-Pascal rule.
pub fn q_binomial(p: usize, r: usize) -> QPoly {
    // row[j] holds the binomial for (i - j, j) while i sweeps up to p + r
    let mut row = vec![QPoly::one()];
    for i in 1..=p + r {
        let mut next = vec![QPoly::zero(); i + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            // [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
            let mut v = QPoly::zero();
            if j >= 1 {
                v = &v + &row[j - 1];
            }
            if j < i {
                v = &v + &row[j].shift(j);
            }
            *slot = v;
        }
        row = next;
    }
    row[r].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_int(3).unwrap(), QPoly::from_i64s(&[1, 1, 1]));
        assert!(q_int(0).is_err());
        assert_eq!(q_factorial(3), QPoly::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(q_binomial(2, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(0, 0), QPoly::one());
    }

    #[test]
    fn render_and_parse() {
        let p = QPoly::from_i64s(&[1, 2, 0, -3]);
        assert_eq!(p.to_string(), "1 + 2*q - 3*q^3");
        assert_eq!(p.compact(), "1 + 2q - 3q^3");
        assert_eq!(p.to_string().parse::<QPoly>().unwrap(), p);
        assert_eq!(p.compact().parse::<QPoly>().unwrap(), p);
        assert_eq!("0".parse::<QPoly>().unwrap(), QPoly::zero());
        assert!("q^".parse::<QPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let f = q_factorial(5);
        let d = q_factorial(2) * q_factorial(3);
        assert_eq!(f.div_exact(&d).unwrap(), q_binomial(2, 3));
        assert!(q_int(3).unwrap().div_exact(&q_int(2).unwrap()).is_err());
    }
}
