//! Binary codes from Kleinian codes: constructions A and B, their weight
//! enumerators, markings and marked enumerators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::code::{KCode, ENUMERATION_LIMIT};
use crate::enumerator::{SymWE, WeightEnum, WeightEnumerator};
use crate::error::{Error, Result};
use crate::group::{GroupElement, SymbolPerm};
use crate::poly::{solve_rational, HomPoly, MPoly};
use crate::symbol::KSymbol;
use crate::word::KWord;

/// Longest binary code handled (one `u128` per word).
pub const BINARY_MAX_LEN: usize = 128;
/// Largest dimension enumerated.
pub const BINARY_ENUMERATION_LIMIT: usize = 26;

/// A binary linear code as a reduced row echelon basis; bit `j` of a row
/// is coordinate `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    len: usize,
    basis: Vec<u128>,
    pivots: Vec<usize>,
}

fn ones(len: usize) -> u128 {
    if len == 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl BinaryCode {
    pub fn zero(len: usize) -> Self {
        assert!(len <= BINARY_MAX_LEN, "binary length exceeds {BINARY_MAX_LEN}");
        BinaryCode {
            len,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_words(len: usize, gens: impl IntoIterator<Item = u128>) -> Self {
        let mut c = BinaryCode::zero(len);
        for g in gens {
            c.insert(g & ones(len));
        }
        c
    }

    pub fn reduce(&self, mut x: u128) -> u128 {
        for (r, &p) in self.basis.iter().zip(&self.pivots) {
            if x >> p & 1 == 1 {
                x ^= r;
            }
        }
        x
    }

    /// Adds a word to the span; returns whether the dimension grew.
    pub fn insert(&mut self, x: u128) -> bool {
        let x = self.reduce(x);
        if x == 0 {
            return false;
        }
        let p = x.trailing_zeros() as usize;
        for r in self.basis.iter_mut() {
            if *r >> p & 1 == 1 {
                *r ^= x;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, x);
        true
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u128] {
        &self.basis
    }

    pub fn contains(&self, x: u128) -> bool {
        self.reduce(x) == 0
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.dim() > BINARY_ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                dim2: self.dim(),
                limit: BINARY_ENUMERATION_LIMIT,
            });
        }
        Ok(())
    }

    /// All codewords in Gray-code order.
    pub fn codewords(&self) -> Result<Vec<u128>> {
        self.check_enumerable()?;
        let mut out = Vec::with_capacity(1 << self.dim());
        let mut cur = 0u128;
        out.push(cur);
        for k in 1u64..1 << self.dim() {
            cur ^= self.basis[k.trailing_zeros() as usize];
            out.push(cur);
        }
        Ok(out)
    }

    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut a = vec![0u64; self.len + 1];
        for x in self.codewords()? {
            a[x.count_ones() as usize] += 1;
        }
        Ok(a)
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnum> {
        Ok(WeightEnum::from_counts(&self.weight_distribution()?))
    }

    pub fn min_weight(&self) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let a = self.weight_distribution()?;
        Ok((1..=self.len).find(|&i| a[i] > 0).unwrap_or(0))
    }

    pub fn dual(&self) -> BinaryCode {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let gens = (0..self.len).filter(|&j| !is_pivot[j]).map(|free| {
            let mut v = 1u128 << free;
            for (r, &p) in self.basis.iter().zip(&self.pivots) {
                if r >> free & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        });
        BinaryCode::from_words(self.len, gens.collect::<Vec<_>>())
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis
            .iter()
            .all(|x| self.basis.iter().all(|y| (x & y).count_ones() % 2 == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.len && self.is_self_orthogonal()
    }

    /// Every weight even.
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|x| x.count_ones() % 2 == 0)
    }

    /// Every weight divisible by 4; for a self-orthogonal code the basis
    /// suffices.
    pub fn is_doubly_even(&self) -> Result<bool> {
        if self.is_self_orthogonal() {
            return Ok(self.basis.iter().all(|x| x.count_ones() % 4 == 0));
        }
        Ok(self.codewords()?.iter().all(|x| x.count_ones() % 4 == 0))
    }

    pub fn word_to_string(&self, x: u128) -> String {
        (0..self.len)
            .map(|j| if x >> j & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}](", self.len, self.dim())?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.word_to_string(*r))?;
        }
        write!(f, ")")
    }
}

/// Generator lines of `0` and `1`; blank lines and `#` comments skipped.
impl FromStr for BinaryCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut len = None;
        let mut gens = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut x = 0u128;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => x |= 1 << j,
                    _ => {
                        return Err(Error::Parse {
                            line: i + 1,
                            column: j + 1,
                            message: format!("unexpected `{ch}` in a binary word"),
                        })
                    }
                }
            }
            let l = line.chars().count();
            if l > BINARY_MAX_LEN {
                return Err(Error::Parse {
                    line: i + 1,
                    column: BINARY_MAX_LEN + 1,
                    message: format!("binary words are limited to {BINARY_MAX_LEN} bits"),
                });
            }
            match len {
                None => len = Some(l),
                Some(m) if m != l => {
                    return Err(Error::Parse {
                        line: i + 1,
                        column: 1,
                        message: format!("expected {m} bits, found {l}"),
                    })
                }
                _ => {}
            }
            gens.push(x);
        }
        let len = len.ok_or(Error::EmptyGenerators)?;
        Ok(BinaryCode::from_words(len, gens))
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.basis {
            writeln!(f, "{}", self.word_to_string(*r))?;
        }
        Ok(())
    }
}

/// Four-bit images of `0, a, b, c`, written left to right.
const HAT: [[u8; 4]; 4] = [[0, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [0, 1, 1, 0]];

fn block(bits: [u8; 4], i: usize) -> u128 {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(0, |acc, (j, _)| acc | 1 << (4 * i + j))
}

fn check_binary_len(n: usize) -> Result<()> {
    if 4 * n > BINARY_MAX_LEN {
        return Err(Error::TooLarge {
            dim2: 4 * n,
            limit: BINARY_MAX_LEN,
        });
    }
    Ok(())
}

/// The binary word of length `4n` replacing each symbol by its block.
pub fn hat(x: &KWord) -> Result<u128> {
    check_binary_len(x.len())?;
    Ok((0..x.len()).fold(0, |acc, i| acc | block(HAT[x.get(i).index() as usize], i)))
}

fn hat_code(c: &KCode) -> Result<Vec<u128>> {
    c.basis().iter().map(hat).collect()
}

fn full_block(i: usize) -> u128 {
    0b1111 << (4 * i)
}

/// `hat(C) + d4^n`.
pub fn rho_a(c: &KCode) -> Result<BinaryCode> {
    let n = c.len();
    let mut gens = hat_code(c)?;
    gens.extend((0..n).map(full_block));
    Ok(BinaryCode::from_words(4 * n, gens))
}

/// The shift word: `(1000)^n` when `4 | n`, `(1000)^{n-1} (0111)` when
/// `n = 2 mod 4`.
fn shift(n: usize) -> u128 {
    let mut s = (0..n).fold(0u128, |acc, i| acc | block([1, 0, 0, 0], i));
    if n % 4 == 2 {
        s ^= full_block(n - 1);
    }
    s
}

/// An equivalent code containing `c^n`, with the element reaching it.
///
/// The shift word has odd product with `hat(x)` exactly when `x` has an odd
/// number of `a`s and `b`s, that is when `(x, c^n) = 1`; so construction B
/// is self-orthogonal on `C` iff `c^n` lies in `C`. Otherwise the least
/// full-weight codeword is moved onto `c^n` by swapping its symbol with `c`
/// at each position.
pub fn b_normal_form(c: &KCode) -> Result<(KCode, GroupElement)> {
    let n = c.len();
    let target = KWord::constant(n, KSymbol::C);
    if c.contains(&target) {
        return Ok((c.clone(), GroupElement::identity(n)));
    }
    let x = c
        .codewords_limited(ENUMERATION_LIMIT)?
        .filter(|x| x.weight() == n)
        .min()
        .ok_or_else(|| Error::Precondition("construction B needs a codeword of full weight".into()))?;
    let tau = x
        .symbols()
        .map(|s| {
            let mut images = [KSymbol::A, KSymbol::B, KSymbol::C];
            images.swap(s.index() as usize - 1, 2);
            SymbolPerm::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let g = GroupElement::new((0..n).collect(), tau)?;
    Ok((g.apply_code(c), g))
}

/// `hat(C) + (d4^n)_0`, together with its translate by the shift word,
/// applied to [`b_normal_form`] of `C`.
pub fn rho_b(c: &KCode) -> Result<BinaryCode> {
    let n = c.len();
    if n % 2 == 1 {
        return Err(Error::Precondition("construction B needs even length".into()));
    }
    let (c, _) = b_normal_form(c)?;
    let mut gens = hat_code(&c)?;
    gens.extend((1..n).map(|i| full_block(i - 1) | full_block(i)));
    gens.push(shift(n));
    Ok(BinaryCode::from_words(4 * n, gens))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    A,
    B,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Mode::A),
            "B" | "b" => Ok(Mode::B),
            other => Err(Error::Precondition(format!("unknown construction `{other}`"))),
        }
    }
}

pub fn construct(c: &KCode, mode: Mode) -> Result<BinaryCode> {
    match mode {
        Mode::A => rho_a(c),
        Mode::B => rho_b(c),
    }
}

type Poly2 = MPoly<BigRational, 2>;

fn monomial2(e: [u32; 2], c: i64) -> Poly2 {
    MPoly::monomial(e, BigRational::from_integer(BigInt::from(c)))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn sign_half_n(n: usize) -> i64 {
    if (n / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn to_hom(p: &Poly2, degree: usize) -> Result<WeightEnum> {
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (e, c) in p.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral { index: e[1] as usize });
        }
        coeffs[e[1] as usize] = c.to_integer();
    }
    Ok(WeightEnumerator::new(coeffs))
}

/// The binary enumerator predicted from `W_C`: `W_C(x^4+y^4, 2x^2y^2)`,
/// and for construction B the two correction terms.
pub fn predicted_we(w: &WeightEnum, mode: Mode) -> Result<WeightEnum> {
    let n = w.n();
    let x4y4 = monomial2([4, 0], 1).add(&monomial2([0, 4], 1));
    let two_x2y2 = monomial2([2, 2], 2);
    let mut base = Poly2::zero();
    for (i, a) in w.coeffs().iter().enumerate() {
        let t = x4y4
            .pow(n - i)
            .mul(&two_x2y2.pow(i))
            .scale(&BigRational::from_integer(a.clone()));
        base = base.add(&t);
    }
    let total = match mode {
        Mode::A => base,
        Mode::B => {
            if n % 2 == 1 {
                return Err(Error::Precondition("construction B needs even length".into()));
            }
            if w.coeffs().iter().skip(1).step_by(2).any(|a| !a.is_zero()) {
                return Err(Error::Precondition("construction B formula needs an even code".into()));
            }
            let diff = monomial2([4, 0], 1).sub(&monomial2([0, 4], 1)).pow(n);
            let p = monomial2([3, 1], 1).add(&monomial2([1, 3], 1)).pow(n);
            let m = monomial2([3, 1], 1).sub(&monomial2([1, 3], 1)).pow(n);
            let tail = p.add(&m.scale(&BigRational::from_integer(BigInt::from(sign_half_n(n)))));
            let pow2 = BigRational::from_integer(BigInt::one() << n);
            base.add(&diff)
                .scale(&half())
                .add(&tail.scale(&(pow2 * half())))
        }
    };
    to_hom(&total, 4 * n)
}

/// A marking: one nonzero symbol per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marking(Vec<KSymbol>);

impl Marking {
    pub fn new(symbols: Vec<KSymbol>) -> Result<Self> {
        if symbols.iter().any(|s| s.is_zero()) {
            return Err(Error::Precondition("markings have no zero entries".into()));
        }
        Ok(Marking(symbols))
    }

    /// `(a a .. a)`.
    pub fn standard(n: usize) -> Self {
        Marking(vec![KSymbol::A; n])
    }

    pub fn symbols(&self) -> &[KSymbol] {
        &self.0
    }
}

/// A pairing of binary coordinates, numbered from 1.
pub type Pairing = Vec<(usize, usize)>;

/// The pairs `I_i` of each block: `a` pairs the block as `(1,2),(3,4)`,
/// `b` as `(1,3),(2,4)`, `c` as `(1,4),(3,2)`.
pub fn marking_intervals(m: &Marking) -> Pairing {
    let mut out = Vec::with_capacity(2 * m.0.len());
    for (i, s) in m.0.iter().enumerate() {
        let o = 4 * i;
        let [p, q] = match s {
            KSymbol::A => [(1, 2), (3, 4)],
            KSymbol::B => [(1, 3), (2, 4)],
            _ => [(1, 4), (3, 2)],
        };
        out.push((o + p.0, o + p.1));
        out.push((o + q.0, o + q.1));
    }
    out
}

/// Marked enumerator in `x, y, z`: per pair `00 -> x`, `11 -> y`, mixed
/// `-> z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSmwe {
    pub pairs: usize,
    pub poly: MPoly<BigInt, 3>,
}

impl MarkedSmwe {
    /// `smwe(x, y, z)` at `x = 1, y = t^2, z = t`: the binary enumerator.
    pub fn to_binary(&self) -> WeightEnum {
        let mut a = vec![BigInt::zero(); 2 * self.pairs + 1];
        for (e, c) in self.poly.terms() {
            a[(2 * e[1] + e[2]) as usize] += c;
        }
        WeightEnumerator::new(a)
    }
}

pub fn bin_smwe(b: &BinaryCode, pairing: &Pairing) -> Result<MarkedSmwe> {
    let mut seen = vec![false; b.len()];
    for &(i, j) in pairing {
        for k in [i, j] {
            if k == 0 || k > b.len() || seen[k - 1] {
                return Err(Error::Precondition("pairing must cover each coordinate once".into()));
            }
            seen[k - 1] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::Precondition("pairing must cover each coordinate once".into()));
    }
    let mut poly = MPoly::zero();
    for x in b.codewords()? {
        let mut e = [0u32; 3];
        for &(i, j) in pairing {
            let (u, v) = (x >> (i - 1) & 1, x >> (j - 1) & 1);
            e[match (u, v) {
                (0, 0) => 0,
                (1, 1) => 1,
                _ => 2,
            }] += 1;
        }
        poly.add_term(e, BigInt::one());
    }
    Ok(MarkedSmwe {
        pairs: pairing.len(),
        poly,
    })
}

type Poly3 = MPoly<BigRational, 3>;

fn mono3(e: [u32; 3], c: i64) -> Poly3 {
    MPoly::monomial(e, BigRational::from_integer(BigInt::from(c)))
}

/// `swe_C(x^2+y^2, 2xy, 2z^2)`, and for construction B the correction
/// terms, for the standard marking.
pub fn predicted_smwe(s: &SymWE, mode: Mode) -> Result<MarkedSmwe> {
    let n = s.n;
    let images = [
        mono3([2, 0, 0], 1).add(&mono3([0, 2, 0], 1)),
        mono3([1, 1, 0], 2),
        mono3([0, 0, 2], 2),
    ];
    let base = s
        .poly
        .map(|c| BigRational::from_integer(c.clone()))
        .substitute(&images);
    let total = match mode {
        Mode::A => base,
        Mode::B => {
            if n % 2 == 1 {
                return Err(Error::Precondition("construction B needs even length".into()));
            }
            if s.poly.terms().any(|(e, c)| (n as u32 - e[0]) % 2 == 1 && !c.is_zero()) {
                return Err(Error::Precondition("construction B formula needs an even code".into()));
            }
            let diff = mono3([2, 0, 0], 1).sub(&mono3([0, 2, 0], 1)).pow(n);
            let p = mono3([1, 0, 0], 1).add(&mono3([0, 1, 0], 1)).pow(n);
            let m = mono3([1, 0, 0], 1).sub(&mono3([0, 1, 0], 1)).pow(n);
            let zn = mono3([0, 0, n as u32], 1);
            let tail = p
                .add(&m.scale(&BigRational::from_integer(BigInt::from(sign_half_n(n)))))
                .mul(&zn);
            let pow2 = BigRational::from_integer(BigInt::one() << n);
            base.add(&diff)
                .scale(&half())
                .add(&tail.scale(&(pow2 * half())))
        }
    };
    let mut poly = MPoly::zero();
    for (e, c) in total.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral { index: e[0] as usize });
        }
        poly.add_term(*e, c.to_integer());
    }
    Ok(MarkedSmwe {
        pairs: 2 * n,
        poly,
    })
}

/// The generators `p2, q2, p4, p6` of the invariant ring for symmetrized
/// enumerators of even self-dual codes, in `x, y, z`.
pub fn smwe_ring_generators() -> [(usize, MPoly<BigRational, 3>); 4] {
    let p2 = mono3([2, 0, 0], 1).add(&mono3([0, 2, 0], 2)).add(&mono3([0, 0, 2], 1));
    let q2 = mono3([2, 0, 0], 1).add(&mono3([0, 1, 1], 4)).sub(&mono3([0, 0, 2], 1));
    let p4 = mono3([4, 0, 0], 1)
        .add(&mono3([0, 4, 0], 8))
        .add(&mono3([2, 0, 2], 6))
        .add(&mono3([0, 0, 4], 1));
    let p6 = [
        ([6, 0, 0], 1),
        ([2, 4, 0], 6),
        ([0, 6, 0], 4),
        ([2, 3, 1], 24),
        ([2, 2, 2], 12),
        ([0, 4, 2], 6),
        ([0, 3, 3], 8),
        ([2, 0, 4], 3),
    ]
    .iter()
    .fold(Poly3::zero(), |acc, &(e, c)| acc.add(&mono3(e, c)));
    [(2, p2), (2, q2), (4, p4), (6, p6)]
}

/// The symmetrized enumerator of the standard marking in the variables of
/// the invariant ring: `x` counts zeros, `y` the unmarked nonzero symbols
/// and `z` the marked one.
pub fn swe_ring_form(s: &SymWE) -> MPoly<BigInt, 3> {
    s.poly.collapse(|e| [e[0], e[2], e[1]])
}

/// Exponent vectors `(i, j, k, l)` of products `p2^i q2^j p4^k p6^l` of
/// degree `n`.
fn ring_monomials(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for l in 0..=n / 6 {
        for k in 0..=(n - 6 * l) / 4 {
            let rest = n - 6 * l - 4 * k;
            if rest % 2 == 1 {
                continue;
            }
            for j in 0..=rest / 2 {
                out.push([rest / 2 - j, j, k, l]);
            }
        }
    }
    out
}

/// Coefficients expressing a degree-`n` polynomial in the products of the
/// ring generators, or `None` when it lies outside their span.
pub fn smwe_ring_coefficients(p: &MPoly<BigInt, 3>, n: usize) -> Option<Vec<([usize; 4], BigRational)>> {
    let gens = smwe_ring_generators();
    let monos = ring_monomials(n);
    let products: Vec<Poly3> = monos
        .iter()
        .map(|e| {
            (0..4).fold(Poly3::one(), |acc, g| acc.mul(&gens[g].1.pow(e[g])))
        })
        .collect();
    // rows indexed by the monomials of x, y, z of degree n
    let mut rows: Vec<[u32; 3]> = Vec::new();
    for a in 0..=n as u32 {
        for b in 0..=n as u32 - a {
            rows.push([a, b, n as u32 - a - b]);
        }
    }
    let matrix: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|e| products.iter().map(|q| q.coeff(e)).collect())
        .collect();
    let rhs: Vec<BigRational> = rows
        .iter()
        .map(|e| BigRational::from_integer(p.coeff(e)))
        .collect();
    let x = solve_rational(&matrix, &rhs)?;
    Some(monos.into_iter().zip(x).collect())
}

/// Hamming enumerator as a polynomial in `x, y` for display.
pub fn we_display(w: &WeightEnum) -> String {
    HomPoly::new(w.coeffs().to_vec()).to_string()
}
