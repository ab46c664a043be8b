//! Greedy lexicographic codes.
//!
//! Words are visited in the order `0 < a < b < c`, leftmost position most
//! significant. The symbol indices make `lex_key` additive under XOR, so a
//! word's key plus an error pattern's key is the key of their sum.

use crate::canon;
use crate::code::KCode;
use crate::error::{Error, Result};
use crate::symbol::KSymbol;
use crate::word::KWord;

/// Largest `n` with `4^n <= 2^26`.
pub const LEX_LEN_LIMIT: usize = 13;

/// A direct-sum period of the self-orthogonal lexicodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Period {
    pub length: usize,
    pub element: KCode,
    /// Lengths `kp` at which the code equals `element^k` exactly.
    pub equal_at: Vec<usize>,
    /// Lengths `kp` at which the code is equivalent to `element^k`.
    pub equivalent_at: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexTrace {
    /// Accepted words in order of acceptance.
    pub words: Vec<KWord>,
    pub code: KCode,
    /// Whether the accepted words are exactly the span.
    pub linear: bool,
    /// For the self-orthogonal variant, the code at each length `1..=n_max`.
    pub by_length: Vec<KCode>,
    pub period: Option<Period>,
}

struct Bitmap(Vec<u64>);

impl Bitmap {
    fn new(bits: usize) -> Self {
        Bitmap(vec![0; bits.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
}

/// Keys of the words of weight below `d`.
fn ball_keys(n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0usize];
    let mut layer = vec![KWord::zero(n)];
    for _ in 1..d {
        let mut next = Vec::new();
        for x in &layer {
            let start = if x.is_zero() {
                0
            } else {
                64 - x.support().leading_zeros() as usize
            };
            for i in start..n {
                for s in KSymbol::NONZERO {
                    let mut y = *x;
                    y.set(i, s);
                    next.push(y);
                }
            }
        }
        out.extend(next.iter().map(|y| y.lex_key() as usize));
        layer = next;
    }
    out
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 || n > LEX_LEN_LIMIT {
        return Err(Error::TooLarge {
            dim2: 2 * n,
            limit: 2 * LEX_LEN_LIMIT,
        });
    }
    Ok(())
}

/// Greedy run over `K^n`; with `orthogonal` each new word must also be
/// orthogonal to all earlier ones.
fn greedy(n: usize, d: usize, orthogonal: bool) -> Result<(Vec<KWord>, KCode)> {
    check_len(n)?;
    if d == 0 || d > n {
        return Err(Error::Precondition(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    let total = 1usize << (2 * n);
    let ball = ball_keys(n, d);
    let mut blocked = Bitmap::new(total);
    let mut words = Vec::new();
    let mut span = KCode::zero(n);
    let mut dual = KCode::full(n);
    for key in 0..total {
        if blocked.get(key) {
            continue;
        }
        let x = KWord::from_lex_key(n, key as u128);
        if orthogonal && !dual.contains(&x) {
            continue;
        }
        for &e in &ball {
            blocked.set(key ^ e);
        }
        words.push(x);
        if span.insert(x) && orthogonal {
            dual = span.dual();
        }
    }
    Ok((words, span))
}

/// The lexicode of length `n` and minimal distance `d`.
pub fn lexicode(n: usize, d: usize) -> Result<LexTrace> {
    let (words, code) = greedy(n, d, false)?;
    let linear = code.size() == words.len() as u128;
    Ok(LexTrace {
        words,
        code,
        linear,
        by_length: Vec::new(),
        period: None,
    })
}

/// Self-orthogonal lexicodes of distance `d` at every length up to `n_max`,
/// with the least direct-sum period visible in that range.
pub fn so_lexicode(d: usize, n_max: usize) -> Result<LexTrace> {
    if !(1..=4).contains(&d) {
        return Err(Error::Precondition(format!("d must lie in 1..=4, got {d}")));
    }
    check_len(n_max)?;
    let mut by_length = Vec::with_capacity(n_max);
    let mut last = None;
    for n in 1..=n_max {
        if n < d {
            by_length.push(KCode::zero(n));
            continue;
        }
        let (words, code) = greedy(n, d, true)?;
        by_length.push(code);
        last = Some(words);
    }
    let words = last.unwrap_or_default();
    let code = by_length.last().cloned().unwrap_or_else(|| KCode::zero(n_max));
    let linear = code.size() == words.len() as u128;
    let period = find_period(&by_length)?;
    Ok(LexTrace {
        words,
        code,
        linear,
        by_length,
        period,
    })
}

/// Least `p` whose code is self-dual and whose multiples up to the range
/// are equivalent to its direct powers.
fn find_period(by_length: &[KCode]) -> Result<Option<Period>> {
    let n_max = by_length.len();
    for p in 1..=n_max / 2 {
        let e = &by_length[p - 1];
        if !e.is_self_dual() {
            continue;
        }
        let mut equal_at = Vec::new();
        let mut equivalent_at = Vec::new();
        let mut ok = true;
        for k in 1..=n_max / p {
            let c = &by_length[k * p - 1];
            let power = e.power(k);
            if *c == power {
                equal_at.push(k * p);
            }
            if canon::equivalent(c, &power)?.is_some() {
                equivalent_at.push(k * p);
            } else {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(Period {
                length: p,
                element: e.clone(),
                equal_at,
                equivalent_at,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    #[test]
    fn epsilon_lexicode() {
        let t = lexicode(2, 2).unwrap();
        let order: Vec<String> = t.words.iter().map(|w| w.to_string()).collect();
        assert_eq!(order, ["00", "aa", "bb", "cc"]);
        assert_eq!(t.code, standard::epsilon2());
        assert!(t.linear);
    }

    #[test]
    fn full_space() {
        let t = lexicode(1, 1).unwrap();
        assert_eq!(t.code, KCode::full(1));
        assert_eq!(t.words.len(), 4);
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(ball_keys(4, 3).len(), 1 + 12 + 54);
    }

    #[test]
    fn gamma_period() {
        let t = so_lexicode(1, 4).unwrap();
        let p = t.period.unwrap();
        assert_eq!(p.length, 1);
        assert_eq!(p.element, standard::gamma1());
    }
}
