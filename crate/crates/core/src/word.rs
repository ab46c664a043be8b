//! Words of `K^n`, bit-packed as two planes.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symbol::KSymbol;

/// Longest supported word; each plane is a single `u64`.
pub const MAX_LEN: usize = 64;

/// A word of length `n` over `K`.
///
/// Bit `i` of `p` (resp. `q`) holds the `p` (resp. `q`) bit of the symbol at
/// position `i`, position `0` being the leftmost character in text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KWord {
    n: usize,
    p: u64,
    q: u64,
}

#[inline]
pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl KWord {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_LEN, "word length {n} exceeds {MAX_LEN}");
        KWord { n, p: 0, q: 0 }
    }

    /// Builds a word from raw planes; bits above `n` are cleared.
    pub fn from_planes(n: usize, p: u64, q: u64) -> Self {
        assert!(n <= MAX_LEN, "word length {n} exceeds {MAX_LEN}");
        let m = mask(n);
        KWord {
            n,
            p: p & m,
            q: q & m,
        }
    }

    pub fn from_symbols(symbols: &[KSymbol]) -> Result<Self> {
        if symbols.len() > MAX_LEN {
            return Err(Error::UnsupportedLength(symbols.len()));
        }
        let mut w = KWord::zero(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            w.set(i, s);
        }
        Ok(w)
    }

    /// Word with symbol `s` on every position in `0..n`.
    pub fn constant(n: usize, s: KSymbol) -> Self {
        let (p, q) = s.bits();
        let m = mask(n);
        KWord::from_planes(n, if p { m } else { 0 }, if q { m } else { 0 })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn planes(&self) -> (u64, u64) {
        (self.p, self.q)
    }

    pub fn get(&self, i: usize) -> KSymbol {
        debug_assert!(i < self.n);
        KSymbol::from_bits(self.p >> i & 1 != 0, self.q >> i & 1 != 0)
    }

    pub fn set(&mut self, i: usize, s: KSymbol) {
        assert!(i < self.n, "position {i} out of range for length {}", self.n);
        let (p, q) = s.bits();
        let bit = 1u64 << i;
        self.p = (self.p & !bit) | if p { bit } else { 0 };
        self.q = (self.q & !bit) | if q { bit } else { 0 };
    }

    pub fn symbols(&self) -> impl Iterator<Item = KSymbol> + '_ {
        (0..self.n).map(move |i| self.get(i))
    }

    /// Mask of the nonzero positions.
    #[inline]
    pub fn support(&self) -> u64 {
        self.p | self.q
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    /// The scalar product `sum_i x_i . y_i` over `F2`.
    pub fn inner(&self, other: &KWord) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self.inner_unchecked(other))
    }

    #[inline]
    pub(crate) fn inner_unchecked(&self, other: &KWord) -> bool {
        ((self.p & other.q) ^ (self.q & other.p)).count_ones() & 1 == 1
    }

    /// Hamming distance `wt(x - y)`.
    pub fn distance(&self, other: &KWord) -> usize {
        ((self.p ^ other.p) | (self.q ^ other.q)).count_ones() as usize
    }

    /// Leading coordinate in the position-major, `p`-before-`q` order used
    /// for row reduction: `2 * position + (0 for p, 1 for q)`.
    #[inline]
    pub(crate) fn pivot(&self) -> Option<usize> {
        let s = self.support();
        if s == 0 {
            return None;
        }
        let i = s.trailing_zeros() as usize;
        Some(2 * i + if self.p >> i & 1 == 1 { 0 } else { 1 })
    }

    #[inline]
    pub(crate) fn has_coordinate(&self, coord: usize) -> bool {
        let i = coord / 2;
        let plane = if coord % 2 == 0 { self.p } else { self.q };
        plane >> i & 1 == 1
    }

    /// Integer key of the lexicographic order `0 < a < b < c`, leftmost
    /// position most significant.
    pub fn lex_key(&self) -> u128 {
        let mut key = 0u128;
        for i in 0..self.n {
            key = key << 2 | self.get(i).index() as u128;
        }
        key
    }

    pub fn from_lex_key(n: usize, mut key: u128) -> Self {
        let mut w = KWord::zero(n);
        for i in (0..n).rev() {
            w.set(i, KSymbol::from_index((key & 3) as u8));
            key >>= 2;
        }
        w
    }

    /// Concatenation `(x, y)`.
    pub fn concat(&self, other: &KWord) -> Self {
        let n = self.n + other.n;
        assert!(n <= MAX_LEN, "word length {n} exceeds {MAX_LEN}");
        KWord {
            n,
            p: self.p | other.p << self.n,
            q: self.q | other.q << self.n,
        }
    }

    /// Removes position `i`, shifting later positions down.
    pub fn delete(&self, i: usize) -> Self {
        assert!(i < self.n);
        let low = mask(i);
        let squeeze = |x: u64| (x & low) | (x >> 1 & !low);
        KWord::from_planes(self.n - 1, squeeze(self.p), squeeze(self.q))
    }

    /// Keeps the positions selected by `keep` (in increasing order).
    pub fn restrict(&self, keep: u64) -> Self {
        let mut out = KWord::zero(keep.count_ones() as usize);
        let mut j = 0;
        for i in 0..self.n {
            if keep >> i & 1 == 1 {
                out.set(j, self.get(i));
                j += 1;
            }
        }
        out
    }

    /// Appends symbol `s` as a new last position.
    pub fn push(&self, s: KSymbol) -> Self {
        let mut w = KWord::from_planes(self.n + 1, self.p, self.q);
        w.set(self.n, s);
        w
    }
}

impl Add for KWord {
    type Output = KWord;

    fn add(self, rhs: KWord) -> KWord {
        debug_assert_eq!(self.n, rhs.n);
        KWord {
            n: self.n,
            p: self.p ^ rhs.p,
            q: self.q ^ rhs.q,
        }
    }
}

impl AddAssign for KWord {
    fn add_assign(&mut self, rhs: KWord) {
        debug_assert_eq!(self.n, rhs.n);
        self.p ^= rhs.p;
        self.q ^= rhs.q;
    }
}

impl fmt::Display for KWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for KWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .enumerate()
            .map(|(col, ch)| {
                KSymbol::from_char(ch).map_err(|_| Error::Parse {
                    line: 1,
                    column: col + 1,
                    message: format!("invalid symbol `{ch}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        KWord::from_symbols(&symbols)
    }
}

impl PartialOrd for KWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.lex_key()).cmp(&(other.n, other.lex_key()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> KWord {
        s.parse().unwrap()
    }

    #[test]
    fn inner_examples() {
        assert!(!w("aa").inner(&w("bb")).unwrap());
        assert!(!w("ab").inner(&w("ba")).unwrap());
        assert!(w("a0").inner(&w("b0")).unwrap());
        assert!(w("a0").inner(&w("b00")).is_err());
    }

    #[test]
    fn weight_and_sum() {
        let x = w("a0bc0");
        assert_eq!(x.weight(), 3);
        assert!((x + x).is_zero());
        assert_eq!(x.to_string(), "a0bc0");
        assert_eq!(w("ab") + w("bb"), w("c0"));
    }

    #[test]
    fn lex_key_round_trip() {
        for key in 0..256u128 {
            let x = KWord::from_lex_key(4, key);
            assert_eq!(x.lex_key(), key);
        }
        assert!(w("0a") < w("0b"));
        assert!(w("0c") < w("a0"));
    }

    #[test]
    fn delete_and_restrict() {
        let x = w("abc0a");
        assert_eq!(x.delete(1), w("ac0a"));
        assert_eq!(x.restrict(0b10101), w("aca"));
        assert_eq!(w("ab").concat(&w("c")), w("abc"));
        assert_eq!(w("ab").push(KSymbol::C), w("abc"));
    }

    #[test]
    fn pivot_order_is_position_major() {
        assert_eq!(w("0b").pivot(), Some(3));
        assert_eq!(w("0c").pivot(), Some(2));
        assert_eq!(w("b0").pivot(), Some(1));
        assert_eq!(w("00").pivot(), None);
    }
}
