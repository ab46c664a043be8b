//! Linear codes over `K`, stored as a canonical GF(2) row-reduced basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::symbol::KSymbol;
use crate::word::{mask, KWord, MAX_LEN};

/// Largest `dim2` that enumeration-based operations accept by default.
pub const ENUMERATION_LIMIT: usize = 24;

/// A linear code of length `n`.
///
/// The basis is in reduced row-echelon form over the `2n` coordinate bits
/// ordered position-major with the `p` bit first, rows sorted by pivot.
/// Two generator sets span the same code iff they produce equal bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KCode {
    n: usize,
    basis: Vec<KWord>,
    pivots: Vec<usize>,
}

impl KCode {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        KCode {
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole space `K^n`.
    pub fn full(n: usize) -> Self {
        let mut gens = Vec::with_capacity(2 * n);
        for i in 0..n {
            gens.push(KWord::from_planes(n, 1 << i, 0));
            gens.push(KWord::from_planes(n, 0, 1 << i));
        }
        KCode::from_words(n, gens)
    }

    /// Span of a non-empty generator list.
    pub fn span(gens: &[KWord]) -> Result<Self> {
        let n = gens.first().ok_or(Error::EmptyGenerators)?.len();
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: g.len(),
            });
        }
        Ok(KCode::from_words(n, gens.iter().copied()))
    }

    /// Span of generators that are known to have length `n`.
    pub fn from_words(n: usize, gens: impl IntoIterator<Item = KWord>) -> Self {
        let mut code = KCode::zero(n);
        for g in gens {
            debug_assert_eq!(g.len(), n);
            code.insert(g);
        }
        code
    }

    /// Adds `x` to the span; returns `false` when it was already contained.
    pub fn insert(&mut self, x: KWord) -> bool {
        let x = self.reduce(&x);
        let Some(pc) = x.pivot() else {
            return false;
        };
        for row in self.basis.iter_mut() {
            if row.has_coordinate(pc) {
                *row += x;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.basis.insert(at, x);
        true
    }

    /// The code spanned by `self` and `x`.
    pub fn extended(&self, x: KWord) -> Self {
        let mut c = self.clone();
        c.insert(x);
        c
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn basis(&self) -> &[KWord] {
        &self.basis
    }

    /// GF(2) dimension; the half-integral dimension is `dim2 / 2`.
    pub fn dim2(&self) -> usize {
        self.basis.len()
    }

    /// Number of codewords, `2^dim2`.
    pub fn size(&self) -> u128 {
        1u128 << self.dim2()
    }

    pub fn is_zero_code(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical coset representative of `x + C`: the unique element with
    /// zeros on every pivot coordinate.
    #[inline]
    pub fn reduce(&self, x: &KWord) -> KWord {
        let mut x = *x;
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if x.has_coordinate(pc) {
                x += *row;
            }
        }
        x
    }

    pub fn contains(&self, x: &KWord) -> bool {
        x.len() == self.n && self.reduce(x).is_zero()
    }

    /// Whether every word of `other` lies in `self`.
    pub fn contains_code(&self, other: &KCode) -> bool {
        other.n == self.n && other.basis.iter().all(|r| self.contains(r))
    }

    /// All codewords in Gray-code order, starting with zero.
    pub fn codewords(&self) -> CodewordIter<'_> {
        assert!(self.dim2() < 64, "code too large to enumerate");
        CodewordIter {
            basis: &self.basis,
            current: KWord::zero(self.n),
            counter: 0,
            total: 1u64 << self.dim2(),
        }
    }

    /// Like [`KCode::codewords`] but refuses codes above `2^limit` words.
    pub fn codewords_limited(&self, limit: usize) -> Result<CodewordIter<'_>> {
        if self.dim2() > limit {
            return Err(Error::TooLarge {
                dim2: self.dim2(),
                limit,
            });
        }
        Ok(self.codewords())
    }

    /// `A_0..A_n` by enumeration.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut a = vec![0u64; self.n + 1];
        for x in self.codewords_limited(ENUMERATION_LIMIT)? {
            a[x.weight()] += 1;
        }
        Ok(a)
    }

    /// Minimum nonzero weight, by enumeration up to `2^24` words.
    pub fn min_weight(&self) -> Result<usize> {
        self.min_weight_with_limit(ENUMERATION_LIMIT)
    }

    /// [`KCode::min_weight`] with an explicit enumeration limit.
    pub fn min_weight_with_limit(&self, limit: usize) -> Result<usize> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        let mut best = usize::MAX;
        for x in self.codewords_limited(limit)?.skip(1) {
            best = best.min(x.weight());
            if best == 1 {
                break;
            }
        }
        Ok(best)
    }

    /// The dual `{x : (x, y) = 0 for all y in C}`.
    pub fn dual(&self) -> KCode {
        // x is orthogonal to r iff x has even overlap with r with planes swapped
        let n = self.n;
        let swapped = KCode::from_words(
            n,
            self.basis.iter().map(|r| {
                let (p, q) = r.planes();
                KWord::from_planes(n, q, p)
            }),
        );
        let mut is_pivot = vec![false; 2 * n];
        for &pc in &swapped.pivots {
            is_pivot[pc] = true;
        }
        let mut gens = Vec::with_capacity(2 * n - swapped.dim2());
        for free in (0..2 * n).filter(|&c| !is_pivot[c]) {
            let mut v = unit(n, free);
            for (row, &pc) in swapped.basis.iter().zip(&swapped.pivots) {
                if row.has_coordinate(free) {
                    v += unit(n, pc);
                }
            }
            gens.push(v);
        }
        KCode::from_words(n, gens)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, x)| {
            self.basis[i + 1..]
                .iter()
                .all(|y| !x.inner_unchecked(y))
        })
    }

    pub fn is_self_dual(&self) -> bool {
        self.dim2() == self.n && self.is_self_orthogonal()
    }

    /// All weights even. An even code is automatically self-orthogonal since
    /// `wt(x + y) = wt(x) + wt(y) + (x, y) mod 2`.
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|r| r.weight() % 2 == 0) && self.is_self_orthogonal()
    }

    /// The subcode of even-weight codewords.
    ///
    /// Needs a self-orthogonal code, where weight parity is additive.
    pub fn even_subcode(&self) -> Result<KCode> {
        if !self.is_self_orthogonal() {
            return Err(Error::Precondition(
                "even subcode needs a self-orthogonal code".into(),
            ));
        }
        let mut odd: Option<KWord> = None;
        let mut gens = Vec::with_capacity(self.dim2());
        for &r in &self.basis {
            if r.weight() % 2 == 0 {
                gens.push(r);
            } else if let Some(o) = odd {
                gens.push(r + o);
            } else {
                odd = Some(r);
            }
        }
        Ok(KCode::from_words(self.n, gens))
    }

    /// `C (+) D` on `n + m` positions.
    pub fn direct_sum(&self, other: &KCode) -> KCode {
        let n = self.n + other.n;
        let left = KWord::zero(self.n);
        let right = KWord::zero(other.n);
        let gens = self
            .basis
            .iter()
            .map(|r| r.concat(&right))
            .chain(other.basis.iter().map(|r| left.concat(r)));
        KCode::from_words(n, gens)
    }

    /// `C^k`, the direct sum of `k` copies.
    pub fn power(&self, k: usize) -> KCode {
        let mut out = KCode::zero(0);
        for _ in 0..k {
            out = out.direct_sum(self);
        }
        out
    }

    /// Nonzero coset representatives of `self` inside `sup` (which must
    /// contain `self`), as reduced words sorted by lexicographic key.
    pub fn coset_representatives(&self, sup: &KCode) -> Vec<KWord> {
        debug_assert!(sup.contains_code(self));
        // sup / self is spanned by the reductions of sup's basis
        let quotient: Vec<KWord> = {
            let mut q = KCode::zero(self.n);
            let mut out = Vec::new();
            for r in &sup.basis {
                let x = self.reduce(r);
                if q.insert(x) {
                    out.push(x);
                }
            }
            out
        };
        let mut reps = Vec::with_capacity((1usize << quotient.len()) - 1);
        let mut cur = KWord::zero(self.n);
        for counter in 1u64..(1u64 << quotient.len()) {
            cur += quotient[counter.trailing_zeros() as usize];
            reps.push(self.reduce(&cur));
        }
        reps.sort_by_key(|w| w.lex_key());
        reps
    }

    /// Codewords that vanish at position `pos`, with that position removed
    /// and, when `glue` is nonzero, those carrying `glue` there as well.
    ///
    /// For an even self-dual code and nonzero `glue` this is the self-dual
    /// child of length `n - 1`.
    pub fn shorten(&self, pos: usize, glue: KSymbol) -> KCode {
        assert!(pos < self.n);
        let mut out = KCode::zero(self.n - 1);
        let sub = self.restricted_subgroup(pos, glue);
        for r in sub.basis() {
            out.insert(r.delete(pos));
        }
        out
    }

    /// The subgroup of codewords whose symbol at `pos` lies in `{0, glue}`
    /// (just `{0}` when `glue` is zero).
    fn restricted_subgroup(&self, pos: usize, glue: KSymbol) -> KCode {
        // kernel of the linear map x -> class of x_pos in K / {0, glue}
        let image = |s: KSymbol| -> u8 {
            if glue.is_zero() {
                s.index()
            } else {
                crate::symbol::dot(s, glue) as u8
            }
        };
        let mut pivots: Vec<(u8, KWord)> = Vec::new();
        let mut gens = Vec::new();
        for &r in &self.basis {
            let mut img = image(r.get(pos));
            let mut w = r;
            for &(pimg, pw) in &pivots {
                let top = 1u8 << (7 - pimg.leading_zeros());
                if img & top != 0 {
                    img ^= pimg;
                    w += pw;
                }
            }
            if img == 0 {
                gens.push(w);
            } else {
                pivots.push((img, w));
                pivots.sort_by(|a, b| b.0.cmp(&a.0));
            }
        }
        KCode::from_words(self.n, gens)
    }

    /// Applies a position permutation: position `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> KCode {
        KCode::from_words(
            self.n,
            self.basis.iter().map(|r| {
                let mut w = KWord::zero(self.n);
                for i in 0..self.n {
                    w.set(perm[i], r.get(i));
                }
                w
            }),
        )
    }

    /// The code on the positions in `keep` obtained from codewords that
    /// vanish outside `keep`.
    pub fn subcode_on(&self, keep: u64) -> KCode {
        let outside = mask(self.n) & !keep;
        let mut c = self.clone();
        for i in 0..self.n {
            if outside >> i & 1 == 1 {
                c = c.restricted_subgroup(i, KSymbol::Zero);
            }
        }
        KCode::from_words(
            keep.count_ones() as usize,
            c.basis.iter().map(|r| r.restrict(keep)),
        )
    }
}

fn unit(n: usize, coord: usize) -> KWord {
    let i = coord / 2;
    if coord % 2 == 0 {
        KWord::from_planes(n, 1 << i, 0)
    } else {
        KWord::from_planes(n, 0, 1 << i)
    }
}

impl fmt::Debug for KCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KCode[n={}, dim2={}](", self.n, self.dim2())?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for KCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.basis {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Iterates over all codewords of a code, one basis addition per step.
pub struct CodewordIter<'a> {
    basis: &'a [KWord],
    current: KWord,
    counter: u64,
    total: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = KWord;

    fn next(&mut self) -> Option<KWord> {
        if self.counter == self.total {
            return None;
        }
        if self.counter > 0 {
            self.current += self.basis[self.counter.trailing_zeros() as usize];
        }
        self.counter += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.counter) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CodewordIter<'_> {}
