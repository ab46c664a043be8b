//! Weight enumerators, MacWilliams transforms, Gleason decompositions and
//! shadows.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::code::{KCode, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::poly::{HomPoly, MPoly, Scalar};
use crate::word::KWord;

/// `W(u, v) = sum_i A_i u^{n-i} v^i` with coefficients in `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator<T> {
    poly: HomPoly<T>,
}

impl<T: Scalar> WeightEnumerator<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        WeightEnumerator {
            poly: HomPoly::new(coeffs),
        }
    }

    pub fn from_poly(poly: HomPoly<T>) -> Self {
        WeightEnumerator { poly }
    }

    pub fn n(&self) -> usize {
        self.poly.degree()
    }

    pub fn coeffs(&self) -> &[T] {
        self.poly.coeffs()
    }

    pub fn coeff(&self, i: usize) -> &T {
        self.poly.coeff(i)
    }

    pub fn poly(&self) -> &HomPoly<T> {
        &self.poly
    }

    /// `sum_i A_i`, the number of words counted.
    pub fn total(&self) -> T {
        self.coeffs()
            .iter()
            .cloned()
            .fold(T::zero(), |a, b| a + b)
    }

    /// Smallest `i > 0` with `A_i != 0`.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.n()).find(|&i| !self.coeff(i).is_zero())
    }

    /// Smallest `i` with `A_i != 0`.
    pub fn valuation(&self) -> Option<usize> {
        (0..=self.n()).find(|&i| !self.coeff(i).is_zero())
    }

    /// Product enumerator, the enumerator of a direct sum.
    pub fn mul(&self, other: &Self) -> Self {
        WeightEnumerator::from_poly(self.poly.mul(&other.poly))
    }

    pub fn to_rational(&self) -> WeightEnumerator<BigRational>
    where
        T: Into<BigInt>,
    {
        WeightEnumerator::from_poly(self.poly.map(|c| BigRational::from_integer(c.clone().into())))
    }
}

impl<T: Scalar> fmt::Debug for WeightEnumerator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}]", self.poly)
    }
}

impl<T: Scalar> fmt::Display for WeightEnumerator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Integer Hamming weight enumerator.
pub type WeightEnum = WeightEnumerator<BigInt>;
/// Rational Hamming weight enumerator for hypothetical codes and shadows.
pub type RationalWE = WeightEnumerator<BigRational>;

impl WeightEnum {
    pub fn from_counts(counts: &[u64]) -> Self {
        WeightEnumerator::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients as `i64` (panics on overflow, never at supported sizes).
    pub fn to_i64(&self) -> Vec<i64> {
        self.coeffs()
            .iter()
            .map(|c| c.to_i64().expect("coefficient fits i64"))
            .collect()
    }
}

impl RationalWE {
    /// The integer enumerator, when every coefficient is integral.
    pub fn to_integral(&self) -> Option<WeightEnum> {
        self.coeffs()
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(WeightEnumerator::new)
    }

    /// First coefficient that is negative or non-integral.
    pub fn first_defect(&self) -> Option<(usize, BigRational)> {
        self.coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative() || !c.is_integer())
            .map(|(i, c)| (i, c.clone()))
    }
}

/// Complete weight enumerator: exponents count the symbols `0, a, b, c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompleteWE {
    pub n: usize,
    pub poly: MPoly<BigInt, 4>,
}

/// Symmetrized weight enumerator: exponents count `0`, `a` and `{b, c}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymWE {
    pub n: usize,
    pub poly: MPoly<BigInt, 3>,
}

impl CompleteWE {
    /// `cwe(u, v, v, v)`.
    pub fn to_hamming(&self) -> WeightEnum {
        let mut a = vec![BigInt::zero(); self.n + 1];
        for (e, c) in self.poly.terms() {
            let w = (e[1] + e[2] + e[3]) as usize;
            a[w] += c;
        }
        WeightEnumerator::new(a)
    }

    /// `cwe(U, V, W, W)`.
    pub fn to_swe(&self) -> SymWE {
        SymWE {
            n: self.n,
            poly: self.poly.collapse(|e| [e[0], e[1], e[2] + e[3]]),
        }
    }

    pub fn count(&self, exps: [u32; 4]) -> BigInt {
        self.poly.coeff(&exps)
    }
}

impl SymWE {
    pub fn to_hamming(&self) -> WeightEnum {
        let mut a = vec![BigInt::zero(); self.n + 1];
        for (e, c) in self.poly.terms() {
            a[(e[1] + e[2]) as usize] += c;
        }
        WeightEnumerator::new(a)
    }

    pub fn count(&self, exps: [u32; 3]) -> BigInt {
        self.poly.coeff(&exps)
    }
}

fn check_enumerable(c: &KCode) -> Result<()> {
    if c.dim2() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            dim2: c.dim2(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

pub fn hamming_we(c: &KCode) -> Result<WeightEnum> {
    Ok(WeightEnum::from_counts(&c.weight_distribution()?))
}

/// Weight distribution of the coset `rep + C`.
pub fn coset_distribution(c: &KCode, rep: &KWord) -> Result<Vec<u64>> {
    check_enumerable(c)?;
    let mut a = vec![0u64; c.len() + 1];
    for x in c.codewords() {
        a[(x + *rep).weight()] += 1;
    }
    Ok(a)
}

fn symbol_counts(x: &KWord) -> [u32; 4] {
    let (p, q) = x.planes();
    let na = (p & !q).count_ones();
    let nb = (q & !p).count_ones();
    let nc = (p & q).count_ones();
    [x.len() as u32 - na - nb - nc, na, nb, nc]
}

pub fn complete_we(c: &KCode) -> Result<CompleteWE> {
    check_enumerable(c)?;
    let mut counts: HashMap<[u32; 4], u64> = HashMap::new();
    for x in c.codewords() {
        *counts.entry(symbol_counts(&x)).or_default() += 1;
    }
    let mut poly = MPoly::zero();
    for (e, k) in counts {
        poly.add_term(e, BigInt::from(k));
    }
    Ok(CompleteWE { n: c.len(), poly })
}

pub fn swe(c: &KCode) -> Result<SymWE> {
    Ok(complete_we(c)?.to_swe())
}

fn exact_div(x: &BigInt, d: &BigInt, index: usize) -> Result<BigInt> {
    let (q, r) = x.div_rem(d);
    if !r.is_zero() {
        return Err(Error::NonIntegral { index });
    }
    Ok(q)
}

/// `(1/|C|) W(u + 3v, u - v)`, the enumerator of the dual code.
pub fn macwilliams(w: &WeightEnum, size: &BigInt) -> Result<WeightEnum> {
    let t = w.poly().substitute_linear(1, 3, 1, -1);
    let coeffs = t
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let q = exact_div(c, size, i)?;
            if q.is_negative() {
                return Err(Error::NonIntegral { index: i });
            }
            Ok(q)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightEnumerator::new(coeffs))
}

/// The complete enumerator of the dual code.
pub fn macwilliams_complete(w: &CompleteWE, size: &BigInt) -> Result<CompleteWE> {
    let images = [
        MPoly::linear([1, 1, 1, 1]),
        MPoly::linear([1, 1, -1, -1]),
        MPoly::linear([1, -1, 1, -1]),
        MPoly::linear([1, -1, -1, 1]),
    ];
    let t = w.poly.substitute(&images);
    let mut poly = MPoly::zero();
    for (i, (e, c)) in t.terms().enumerate() {
        poly.add_term(*e, exact_div(c, size, i)?);
    }
    Ok(CompleteWE { n: w.n, poly })
}

/// Elements `(u + v)^{n-2i} (v (u - v))^i` of the odd Gleason basis.
pub fn gleason_odd_basis<T: Scalar>(n: usize) -> Vec<HomPoly<T>> {
    let s = HomPoly::<T>::linear(T::one(), T::one());
    let g = HomPoly::new(vec![T::zero(), T::one(), -T::one()]);
    (0..=n / 2)
        .map(|i| s.pow(n - 2 * i).mul(&g.pow(i)))
        .collect()
}

/// Elements `(u^2 + 3v^2)^a (v^2 (u^2 - v^2)^2)^b`, `2a + 6b = n`, indexed
/// by `b`.
pub fn gleason_even_basis<T: Scalar>(n: usize) -> Vec<HomPoly<T>> {
    assert!(n % 2 == 0, "even basis needs even degree");
    let p = HomPoly::new(vec![T::one(), T::zero(), T::from_int(3)]);
    let g = HomPoly::new(vec![
        T::zero(),
        T::zero(),
        T::one(),
        T::zero(),
        T::from_int(-2),
        T::zero(),
        T::one(),
    ]);
    (0..=n / 6)
        .map(|b| p.pow((n - 6 * b) / 2).mul(&g.pow(b)))
        .collect()
}

/// Solves `target = sum_j x_j basis_j` where `basis_j` has `v`-valuation
/// `step * j` with coefficient one there.
fn unitriangular_solve<T: Scalar>(
    basis: &[HomPoly<T>],
    step: usize,
    target: &HomPoly<T>,
) -> Result<Vec<T>> {
    let mut rest = target.clone();
    let mut x = Vec::with_capacity(basis.len());
    for (j, b) in basis.iter().enumerate() {
        let c = rest.coeff(step * j).clone();
        rest = rest.sub(&b.scale(&c));
        x.push(c);
    }
    if let Some(index) = rest.coeffs().iter().position(|c| !c.is_zero()) {
        return Err(Error::NotInvariant { index });
    }
    Ok(x)
}

/// Coefficients `a_0..a_m` with `W = sum a_i (u+v)^{n-2i} (v(u-v))^i`.
pub fn gleason_odd(w: &WeightEnum) -> Result<Vec<BigInt>> {
    unitriangular_solve(&gleason_odd_basis(w.n()), 1, w.poly())
}

/// Coefficients, indexed by `b`, in the basis
/// `(u^2 + 3v^2)^{(n-6b)/2} (v^2 (u^2 - v^2)^2)^b`.
pub fn gleason_even(w: &WeightEnum) -> Result<Vec<BigInt>> {
    if w.n() % 2 == 1 {
        return Err(Error::NotInvariant { index: 0 });
    }
    unitriangular_solve(&gleason_even_basis(w.n()), 2, w.poly())
}

/// `(1/|C|) W(u + 3v, -(u - v))`, the enumerator of the shadow.
pub fn shadow_we<T: Scalar + Into<BigInt>>(w: &WeightEnumerator<T>, size: &BigInt) -> RationalWE {
    let r = w.to_rational();
    let t = r.poly().substitute_linear(1, 3, -1, 1);
    let s = BigRational::from_integer(size.clone());
    WeightEnumerator::from_poly(t.scale(&s.recip()))
}

/// Cosets of the even subcode `C0` of a self-dual code inside `C0`-dual.
#[derive(Clone, Debug)]
pub struct ShadowSet {
    pub code: KCode,
    pub c0: KCode,
    /// Representatives of `C0, C1, C2, C3` with `C = C0 + C1`; a single
    /// entry when `C` is even.
    pub coset_reps: Vec<KWord>,
}

impl ShadowSet {
    pub fn is_even(&self) -> bool {
        self.coset_reps.len() == 1
    }

    /// Representatives of the cosets making up the shadow.
    pub fn shadow_reps(&self) -> &[KWord] {
        if self.is_even() {
            &self.coset_reps
        } else {
            &self.coset_reps[2..]
        }
    }

    /// Whether `x` lies in the shadow.
    pub fn contains(&self, x: &KWord) -> bool {
        self.shadow_reps()
            .iter()
            .any(|r| self.c0.contains(&(*x + *r)))
    }

    /// Weight distribution of the shadow by enumeration.
    pub fn distribution(&self) -> Result<Vec<u64>> {
        let mut a = vec![0u64; self.code.len() + 1];
        for r in self.shadow_reps() {
            for (i, k) in coset_distribution(&self.c0, r)?.into_iter().enumerate() {
                a[i] += k;
            }
        }
        Ok(a)
    }

    /// Minimum weight `h` of a shadow word.
    pub fn min_weight(&self) -> Result<usize> {
        let a = self.distribution()?;
        Ok(a.iter().position(|&k| k > 0).unwrap_or(0))
    }
}

pub fn shadow(c: &KCode) -> Result<ShadowSet> {
    if !c.is_self_dual() {
        return Err(Error::Precondition("shadow needs a self-dual code".into()));
    }
    let c0 = c.even_subcode()?;
    let zero = KWord::zero(c.len());
    if c0 == *c {
        return Ok(ShadowSet {
            code: c.clone(),
            c0,
            coset_reps: vec![zero],
        });
    }
    let odd = *c
        .basis()
        .iter()
        .find(|r| r.weight() % 2 == 1)
        .expect("non-even code has an odd basis row");
    let others: Vec<KWord> = c0
        .coset_representatives(&c0.dual())
        .into_iter()
        .filter(|r| !c.contains(r))
        .collect();
    debug_assert_eq!(others.len(), 2);
    Ok(ShadowSet {
        code: c.clone(),
        coset_reps: vec![zero, c0.reduce(&odd), others[0], others[1]],
        c0,
    })
}

/// Shadow enumerator as an integer enumerator; fails when the transform is
/// not integral.
pub fn shadow_we_integral(w: &WeightEnum, size: &BigInt) -> Result<WeightEnum> {
    let r = shadow_we(w, size);
    r.to_integral().ok_or_else(|| {
        let index = r.first_defect().map_or(0, |(i, _)| i);
        Error::NonIntegral { index }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn code(rows: &[&str]) -> KCode {
        let gens: Vec<KWord> = rows.iter().map(|r| r.parse().unwrap()).collect();
        KCode::span(&gens).unwrap()
    }

    fn ints(w: &WeightEnum) -> Vec<i64> {
        w.to_i64()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_enumerators() {
        assert_eq!(ints(&hamming_we(&code(&["a"])).unwrap()), vec![1, 1]);
        assert_eq!(ints(&hamming_we(&code(&["aa", "bb"])).unwrap()), vec![1, 0, 3]);
    }

    #[test]
    fn macwilliams_fixed_points() {
        let e2 = WeightEnum::from_counts(&[1, 0, 3]);
        assert_eq!(macwilliams(&e2, &BigInt::from(4)).unwrap(), e2);
        let g1 = WeightEnum::from_counts(&[1, 1]);
        assert_eq!(macwilliams(&g1, &BigInt::from(2)).unwrap(), g1);
        let bad = WeightEnum::from_counts(&[1, 1, 1]);
        assert!(macwilliams(&bad, &BigInt::from(3)).is_err());
    }

    #[test]
    fn macwilliams_of_delta3() {
        let d3 = code(&["aa0", "0aa"]);
        let w = hamming_we(&d3).unwrap();
        let dual = hamming_we(&d3.dual()).unwrap();
        assert_eq!(macwilliams(&w, &BigInt::from(4)).unwrap(), dual);
    }

    #[test]
    fn complete_enumerators() {
        let e2 = complete_we(&code(&["aa", "bb"])).unwrap();
        for e in [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]] {
            assert_eq!(e2.count(e), BigInt::one());
        }
        assert_eq!(macwilliams_complete(&e2, &BigInt::from(4)).unwrap(), e2);
        let z = complete_we(&KCode::zero(1)).unwrap();
        let full = macwilliams_complete(&z, &BigInt::one()).unwrap();
        assert_eq!(full, complete_we(&KCode::full(1)).unwrap());
    }

    #[test]
    fn symmetrized() {
        let s = swe(&code(&["aa", "bb"])).unwrap();
        assert_eq!(s.count([2, 0, 0]), BigInt::one());
        assert_eq!(s.count([0, 2, 0]), BigInt::one());
        assert_eq!(s.count([0, 0, 2]), BigInt::from(2));
    }

    #[test]
    fn gleason_decompositions() {
        let g1 = WeightEnum::from_counts(&[1, 1]);
        assert_eq!(gleason_odd(&g1).unwrap(), big(&[1]));
        let e2 = WeightEnum::from_counts(&[1, 0, 3]);
        assert_eq!(gleason_odd(&e2).unwrap(), big(&[1, -2]));
        assert_eq!(gleason_even(&e2).unwrap(), big(&[1]));
        let c6 = WeightEnum::from_counts(&[1, 0, 0, 0, 45, 0, 18]);
        assert_eq!(gleason_even(&c6).unwrap(), big(&[1, -9]));
        let bad = WeightEnum::from_counts(&[1, 1, 1]);
        assert!(matches!(gleason_odd(&bad), Err(Error::NotInvariant { .. })));
    }

    #[test]
    fn shadow_of_gamma() {
        let g1 = code(&["a"]);
        let s = shadow(&g1).unwrap();
        assert!(s.contains(&"b".parse().unwrap()));
        assert!(s.contains(&"c".parse().unwrap()));
        assert!(!s.contains(&"a".parse().unwrap()));
        let sq = shadow(&code(&["a0", "0a"])).unwrap();
        assert_eq!(sq.distribution().unwrap(), vec![0, 0, 4]);
        let w = shadow_we(&WeightEnum::from_counts(&[1, 1]), &BigInt::from(2));
        assert_eq!(w.to_integral().unwrap(), WeightEnum::from_counts(&[0, 2]));
    }
}
