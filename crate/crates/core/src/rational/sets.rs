//! Set families attached to trivial (1,k)- and (k,1)-tilings, and k-Stirling permutations.

use crate::error::{Error, Result};

/// `S_i` is the run of `k` consecutive remaining integers starting at the
/// `(mu_i + 1)`-th smallest one. Each set is returned in increasing order.
pub fn sets_from_mu(mu: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    let n = mu.len();
    let mut rest: Vec<usize> = (1..=n * k).collect();
    let mut out = Vec::with_capacity(n);
    for (i, &m) in mu.iter().enumerate() {
        if m + k > rest.len() {
            return Err(Error::Domain(format!("mu_{} = {m} exceeds the {} remaining integers", i + 1, rest.len())));
        }
        out.push(rest.drain(m..m + k).collect());
    }
    Ok(out)
}

pub fn mu_from_sets(sets: &[Vec<usize>], k: usize) -> Result<Vec<usize>> {
    check_family(sets, k)?;
    let n = sets.len();
    let mut rest: Vec<usize> = (1..=n * k).collect();
    let mut mu = Vec::with_capacity(n);
    for s in sets {
        let mut s = s.clone();
        s.sort_unstable();
        let m = rest.iter().position(|&x| x == s[0]).expect("checked family");
        if rest[m..m + k] != s[..] {
            return Err(Error::Domain(format!("{s:?} is not a run of consecutive remaining integers")));
        }
        rest.drain(m..m + k);
        mu.push(m);
    }
    Ok(mu)
}

/// `Q_i` is the run of `k` consecutive remaining integers going down from the
/// `(xi_i + 1)`-th largest one. Each set is returned in decreasing order.
pub fn sets_from_xi(xi: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    let n = xi.len();
    let mut rest: Vec<usize> = (1..=n * k).rev().collect();
    let mut out = Vec::with_capacity(n);
    for (i, &x) in xi.iter().enumerate() {
        if x + k > rest.len() {
            return Err(Error::Domain(format!("xi_{} = {x} exceeds the {} remaining integers", i + 1, rest.len())));
        }
        out.push(rest.drain(x..x + k).collect());
    }
    Ok(out)
}

pub fn xi_from_sets(sets: &[Vec<usize>], k: usize) -> Result<Vec<usize>> {
    check_family(sets, k)?;
    let n = sets.len();
    let mut rest: Vec<usize> = (1..=n * k).rev().collect();
    let mut xi = Vec::with_capacity(n);
    for s in sets {
        let mut s = s.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        let m = rest.iter().position(|&x| x == s[0]).expect("checked family");
        if rest[m..m + k] != s[..] {
            return Err(Error::Domain(format!("{s:?} is not a run of consecutive remaining integers")));
        }
        rest.drain(m..m + k);
        xi.push(m);
    }
    Ok(xi)
}

fn check_family(sets: &[Vec<usize>], k: usize) -> Result<()> {
    let nk = sets.len() * k;
    let mut seen = vec![false; nk + 1];
    for s in sets {
        if s.len() != k {
            return Err(Error::Domain(format!("{s:?} does not have {k} elements")));
        }
        for &x in s {
            if x == 0 || x > nk || seen[x] {
                return Err(Error::Domain(format!("sets do not partition 1..{nk}")));
            }
            seen[x] = true;
        }
    }
    Ok(())
}

/// `s_p = n + 1 - i` for every `p` in `S_i`.
pub fn stirling_from_sets(sets: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = sets.len();
    let k = sets.first().map_or(0, Vec::len);
    check_family(sets, k)?;
    let mut s = vec![0; n * k];
    for (i, set) in sets.iter().enumerate() {
        for &p in set {
            s[p - 1] = n - i;
        }
    }
    Ok(s)
}

/// Each value appears `k` times, and everything between two equal values is at least as large.
pub fn is_stirling(s: &[usize], k: usize) -> bool {
    if k == 0 || !s.len().is_multiple_of(k) {
        return false;
    }
    let n = s.len() / k;
    let mut count = vec![0; n + 1];
    for &v in s {
        if v == 0 || v > n {
            return false;
        }
        count[v] += 1;
    }
    if count[1..].iter().any(|&c| c != k) {
        return false;
    }
    (1..=n).all(|v| {
        let first = s.iter().position(|&x| x == v).unwrap();
        let last = s.iter().rposition(|&x| x == v).unwrap();
        s[first..=last].iter().all(|&x| x >= v)
    })
}

pub fn sets_from_stirling(s: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    if !is_stirling(s, k) {
        return Err(Error::Domain(format!("{s:?} is not a {k}-Stirling permutation")));
    }
    let n = s.len() / k;
    Ok((1..=n).map(|i| (1..=n * k).filter(|&p| s[p - 1] == n + 1 - i).collect()).collect())
}

/// `mu_i` read off the permutation: the number of smaller entries before the first `n + 1 - i`.
pub fn mu_from_stirling(s: &[usize], k: usize) -> Result<Vec<usize>> {
    if !is_stirling(s, k) {
        return Err(Error::Domain(format!("{s:?} is not a {k}-Stirling permutation")));
    }
    let n = s.len() / k;
    Ok((1..=n)
        .map(|i| {
            let v = n + 1 - i;
            let first = s.iter().position(|&x| x == v).unwrap();
            s[..first].iter().filter(|&&x| x < v).count()
        })
        .collect())
}

/// Every `mu` with `0 <= mu_i <= (n - i) k`.
pub fn all_mu(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|m: Vec<usize>| {
                (0..=(n - i) * k).map(move |x| {
                    let mut m = m.clone();
                    m.push(x);
                    m
                })
            })
            .collect();
    }
    out
}
