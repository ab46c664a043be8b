//! Exact polynomial arithmetic, generic over the coefficient type.
//!
//! [`HomPoly`] is a homogeneous polynomial in two variables `(u, v)` stored
//! as the coefficients of `u^{n-i} v^i`. [`MPoly`] is a sparse polynomial in
//! `K` variables keyed by exponent arrays. Enumerators use `BigInt` or
//! `BigRational` coefficients; nothing here rounds.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

/// Coefficient ring for enumerator polynomials.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + num_traits::Num + Signed + FromPrimitive
{
    fn from_int(x: i64) -> Self {
        Self::from_i64(x).expect("integer fits the scalar type")
    }

    fn from_bigint(x: &BigInt) -> Self;
}

impl Scalar for BigInt {
    fn from_bigint(x: &BigInt) -> Self {
        x.clone()
    }
}

impl Scalar for BigRational {
    fn from_bigint(x: &BigInt) -> Self {
        BigRational::from_integer(x.clone())
    }
}

impl Scalar for i64 {
    fn from_bigint(x: &BigInt) -> Self {
        i64::try_from(x).expect("value fits i64")
    }
}

impl Scalar for i128 {
    fn from_bigint(x: &BigInt) -> Self {
        i128::try_from(x).expect("value fits i128")
    }
}

/// Binomial coefficients `C(n, k)` for `k = 0..=n`.
pub fn binomial_row<T: Scalar>(n: usize) -> Vec<T> {
    let mut row = vec![T::one()];
    for k in 1..=n {
        let prev = row[k - 1].clone();
        row.push(prev * T::from_usize(n + 1 - k).unwrap() / T::from_usize(k).unwrap());
    }
    row
}

/// Homogeneous polynomial of degree `n` in `(u, v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> HomPoly<T> {
    /// From coefficients of `u^{n-i} v^i`, `i = 0..=n`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "degree needs at least one coefficient");
        HomPoly { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        HomPoly {
            coeffs: vec![T::zero(); degree + 1],
        }
    }

    /// `alpha u + beta v`.
    pub fn linear(alpha: T, beta: T) -> Self {
        HomPoly {
            coeffs: vec![alpha, beta],
        }
    }

    /// The constant `1` (degree zero).
    pub fn one() -> Self {
        HomPoly {
            coeffs: vec![T::one()],
        }
    }

    /// The monomial `c u^{n-i} v^i`.
    pub fn monomial(degree: usize, i: usize, c: T) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[i] = c;
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        HomPoly { coeffs: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "adding different degrees");
        HomPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        HomPoly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `sum_i a_i P^{n-i} Q^i` for homogeneous `P`, `Q` of equal degree.
    pub fn compose(&self, p: &Self, q: &Self) -> Self {
        assert_eq!(p.degree(), q.degree(), "substitutes must share a degree");
        let n = self.degree();
        let p_pows = powers(p, n);
        let q_pows = powers(q, n);
        let mut acc = Self::zero(n * p.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = p_pows[n - i].mul(&q_pows[i]).scale(a);
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitution `u -> alpha u + beta v`, `v -> gamma u + delta v`.
    pub fn substitute_linear(&self, alpha: i64, beta: i64, gamma: i64, delta: i64) -> Self {
        self.compose(
            &Self::linear(T::from_int(alpha), T::from_int(beta)),
            &Self::linear(T::from_int(gamma), T::from_int(delta)),
        )
    }

    /// Maps coefficients into another scalar type.
    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> HomPoly<S> {
        HomPoly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

fn powers<T: Scalar>(p: &HomPoly<T>, n: usize) -> Vec<HomPoly<T>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(HomPoly::one());
    for k in 1..=n {
        let next = out[k - 1].mul(p);
        out.push(next);
    }
    out
}

impl<T: Scalar> Debug for HomPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Scalar> Display for HomPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mono = monomial_text(&[("u", n - i), ("v", i)]);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn monomial_text(parts: &[(&str, usize)]) -> String {
    parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Sparse polynomial in `K` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<T, const K: usize> {
    terms: BTreeMap<[u32; K], T>,
}

impl<T: Scalar, const K: usize> Default for MPoly<T, K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar, const K: usize> MPoly<T, K> {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial([0; K], T::one())
    }

    pub fn monomial(exps: [u32; K], c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; K];
        e[i] = 1;
        Self::monomial(e, T::one())
    }

    /// `sum_i c_i x_i`.
    pub fn linear(coeffs: [i64; K]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = [0; K];
            e[i] = 1;
            p.add_term(e, T::from_int(c));
        }
        p
    }

    pub fn add_term(&mut self, exps: [u32; K], c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; K], &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32; K]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let mut e = *e1;
                for k in 0..K {
                    e[k] += e2[k];
                }
                out.add_term(e, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`.
    pub fn substitute<const L: usize>(&self, images: &[MPoly<T, L>; K]) -> MPoly<T, L> {
        let max_deg = self
            .terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let pows: Vec<Vec<MPoly<T, L>>> = images
            .iter()
            .map(|img| {
                let mut v = vec![MPoly::one()];
                for k in 1..=max_deg {
                    let next = v[k - 1].mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::monomial([0; L], c.clone());
            for k in 0..K {
                term = term.mul(&pows[k][e[k] as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> MPoly<S, K> {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Sets variables to zero/keeps them according to a projection and
    /// merges variables: exponent `e` moves to `merge(e)`.
    pub fn collapse<const L: usize>(&self, merge: impl Fn(&[u32; K]) -> [u32; L]) -> MPoly<T, L> {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(merge(e), c.clone());
        }
        out
    }
}

impl<T: Scalar, const K: usize> Debug for MPoly<T, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Solves `A x = b` exactly over the rationals; returns `None` when the
/// system is inconsistent. Free variables are set to zero.
pub fn solve_rational(matrix: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=cols {
                    let v = a[r][j].clone() * f.clone();
                    a[i][j] = a[i][j].clone() - v;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = HomPoly<BigInt>;

    fn p(c: &[i64]) -> P {
        HomPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn binomials() {
        let row: Vec<i64> = binomial_row::<i64>(5);
        assert_eq!(row, vec![1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn mul_and_pow() {
        let uv = p(&[1, 1]);
        assert_eq!(uv.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[1, 0, 3]).mul(&p(&[1, 0, 3])), p(&[1, 0, 6, 0, 9]));
    }

    #[test]
    fn substitution_matches_direct_expansion() {
        // u^2 + 3 v^2 at (u + 3v, u - v) = 4u^2 + 12 v^2
        let e2 = p(&[1, 0, 3]);
        assert_eq!(e2.substitute_linear(1, 3, 1, -1), p(&[4, 0, 12]));
    }

    #[test]
    fn generic_over_scalar() {
        let q: HomPoly<i64> = HomPoly::new(vec![1, 1]);
        assert_eq!(q.pow(2).coeffs(), &[1, 2, 1]);
        let r: HomPoly<BigRational> = q.map(|&c| BigRational::from_integer(c.into()));
        assert_eq!(r.degree(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3]).to_string(), "u^2 - 3*v^2");
        assert_eq!(p(&[0, 2]).to_string(), "2*v");
    }

    #[test]
    fn multivariate_substitution() {
        // (x + y)^2 with x -> a + b, y -> a - b gives 4a^2
        let xy: MPoly<BigInt, 2> = MPoly::linear([1, 1]);
        let sq = xy.pow(2);
        let images = [MPoly::<BigInt, 2>::linear([1, 1]), MPoly::linear([1, -1])];
        let out = sq.substitute(&images);
        assert_eq!(out, MPoly::monomial([2, 0], BigInt::from(4)));
    }

    #[test]
    fn rational_solve() {
        let r = |x: i64| BigRational::from_integer(x.into());
        let m = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        let x = solve_rational(&m, &[r(5), r(10)]).unwrap();
        assert_eq!(x, vec![r(1), r(3)]);
        let singular = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        assert!(solve_rational(&singular, &[r(1), r(3)]).is_none());
    }
}
