//! Generalized t-designs in the weight slices `X_k` of `K^n`.

use std::collections::HashSet;

use num_integer::Integer;
use rayon::prelude::*;

use crate::code::{KCode, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::symbol::KSymbol;
use crate::word::KWord;

/// Whether every nonzero symbol of `x` equals the symbol of `y` there.
pub fn covers(x: &KWord, y: &KWord) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let (px, qx) = x.planes();
    let (py, qy) = y.planes();
    let s = x.support();
    Ok((px ^ py) & s == 0 && (qx ^ qy) & s == 0)
}

/// A set of distinct words of one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignSlice {
    pub n: usize,
    pub k: usize,
    pub words: Vec<KWord>,
}

impl DesignSlice {
    pub fn new(n: usize, k: usize, words: Vec<KWord>) -> Result<Self> {
        let mut seen = HashSet::new();
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: w.len(),
                });
            }
            if w.weight() != k {
                return Err(Error::Precondition(format!("{w} does not have weight {k}")));
            }
            if !seen.insert(*w) {
                return Err(Error::Precondition(format!("{w} appears twice")));
            }
        }
        Ok(DesignSlice { n, k, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// The codewords of weight `w`.
pub fn slice(c: &KCode, w: usize) -> Result<DesignSlice> {
    let words = c
        .codewords_limited(ENUMERATION_LIMIT)?
        .filter(|x| x.weight() == w)
        .collect();
    DesignSlice::new(c.len(), w, words)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub t: usize,
    pub is_design: bool,
    /// The common number of blocks covering each element of `X_t`.
    pub mu: Option<u64>,
    /// An element of `X_t` whose count differs from the first one seen.
    pub offending: Option<KWord>,
    pub blocks: usize,
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `|X_t| = C(n, t) 3^t`.
pub fn slice_size(n: usize, t: usize) -> u64 {
    binomial(n, t) * 3u64.pow(t as u32)
}

/// All position sets of size `t`, as bit masks in increasing order.
fn subsets(n: usize, t: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if t > n {
        return out;
    }
    if t == 0 {
        return vec![0];
    }
    let mut s: u64 = (1 << t) - 1;
    while s < 1 << n {
        out.push(s);
        // next subset of the same size
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// The words of `X_t`, position set by position set.
pub fn weight_slice(n: usize, t: usize) -> Vec<KWord> {
    let mut out = Vec::with_capacity(slice_size(n, t) as usize);
    for s in subsets(n, t) {
        let positions: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        for code in 0..3usize.pow(t as u32) {
            let mut w = KWord::zero(n);
            for (j, &p) in positions.iter().enumerate() {
                w.set(p, KSymbol::NONZERO[code / 3usize.pow(j as u32) % 3]);
            }
            out.push(w);
        }
    }
    out
}

/// Sweeps `X_t`, counting for each element the blocks covering it.
pub fn check_design(y: &DesignSlice, t: usize) -> Result<DesignReport> {
    if t > y.k {
        return Err(Error::Precondition(format!("t = {t} exceeds block weight {}", y.k)));
    }
    let xt = weight_slice(y.n, t);
    let counts: Vec<u64> = xt
        .par_iter()
        .map(|z| {
            y.words
                .iter()
                .filter(|b| covers(z, b).expect("lengths match"))
                .count() as u64
        })
        .collect();
    let first = counts.first().copied().unwrap_or(0);
    let offending = counts.iter().position(|&c| c != first).map(|i| xt[i]);
    let is_design = offending.is_none() && first > 0 && !y.is_empty();
    Ok(DesignReport {
        t,
        is_design,
        mu: offending.is_none().then_some(first),
        offending,
        blocks: y.len(),
    })
}

/// Lower bound on the number of blocks of a generalized 2-design with block
/// weight `k`: `3n` when `k < n`, `2n + 1` when `k = n`.
pub fn fisher_bound(n: usize, k: usize) -> Result<u64> {
    if !(2..=n).contains(&k) {
        return Err(Error::Precondition("need 2 <= k <= n".into()));
    }
    Ok(if k < n { 3 * n as u64 } else { 2 * n as u64 + 1 })
}

/// The number of blocks is `mu |X_t| / C(k, t)`, so it is a multiple of
/// `|X_t| / gcd(|X_t|, C(k, t))`.
pub fn block_count_step(n: usize, k: usize, t: usize) -> u64 {
    let xt = slice_size(n, t);
    xt / xt.gcd(&binomial(k, t))
}

/// The least block count allowed by both [`fisher_bound`] and the
/// divisibility condition for `t = 2`.
pub fn fisher_divisible_bound(n: usize, k: usize) -> Result<u64> {
    let f = fisher_bound(n, k)?;
    let step = block_count_step(n, k, 2);
    Ok(f.div_ceil(step) * step)
}

/// The pair `(r, s)` with `r` the number of positions where `x` and `y`
/// agree and are nonzero, `s` the number where both are nonzero.
pub fn johnson_relation(x: &KWord, y: &KWord) -> Result<(usize, usize)> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    if x.weight() != y.weight() {
        return Err(Error::Precondition("words must have equal weight".into()));
    }
    let both = x.support() & y.support();
    let (px, qx) = x.planes();
    let (py, qy) = y.planes();
    let equal = both & !(px ^ py) & !(qx ^ qy);
    Ok((equal.count_ones() as usize, both.count_ones() as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> KWord {
        s.parse().unwrap()
    }

    #[test]
    fn covering() {
        assert!(covers(&w("a0"), &w("ab")).unwrap());
        assert!(!covers(&w("a0"), &w("b0")).unwrap());
        assert!(covers(&w("000"), &w("abc")).unwrap());
        assert!(covers(&w("a0"), &w("abc")).is_err());
    }

    #[test]
    fn slices_have_the_right_size() {
        for (n, t) in [(4, 0), (4, 2), (6, 3)] {
            let s = weight_slice(n, t);
            assert_eq!(s.len() as u64, slice_size(n, t));
            let set: HashSet<_> = s.iter().collect();
            assert_eq!(set.len(), s.len());
            assert!(s.iter().all(|x| x.weight() == t));
        }
    }

    #[test]
    fn epsilon_design() {
        let e = crate::standard::epsilon2();
        let r = check_design(&slice(&e, 2).unwrap(), 1).unwrap();
        assert!(r.is_design);
        assert_eq!(r.mu, Some(1));
    }

    #[test]
    fn relations_and_bounds() {
        assert_eq!(johnson_relation(&w("aa0000"), &w("ab0000")).unwrap(), (1, 2));
        assert_eq!(fisher_bound(6, 4).unwrap(), 18);
        assert_eq!(fisher_bound(6, 6).unwrap(), 13);
        assert_eq!(fisher_divisible_bound(6, 6).unwrap(), 18);
        assert!(DesignSlice::new(2, 1, vec![w("a0"), w("a0")]).is_err());
    }
}
