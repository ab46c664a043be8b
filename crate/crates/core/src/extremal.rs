//! Extremal enumerators, distance bounds, nonexistence certificates and
//! backtracking search for codes of large minimal weight.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::canon::{canonical_form, equivalent, CANON_DIM2_LIMIT};
use crate::code::{KCode, ENUMERATION_LIMIT};
use crate::enumerator::{gleason_even_basis, gleason_odd_basis, hamming_we, shadow, shadow_we, WeightEnum, WeightEnumerator};
use crate::error::{Error, Result};
use crate::poly::HomPoly;
use crate::standard;
use crate::word::KWord;

/// Upper bound on the minimal weight of a self-dual code (`[n/2] + 1`) or
/// of an even self-dual code (`2[n/6] + 2`).
pub fn dmax_bound(n: usize, even: bool) -> Result<usize> {
    if even {
        if n % 2 == 1 {
            return Err(Error::Precondition("even codes need even length".into()));
        }
        Ok(2 * (n / 6) + 2)
    } else {
        Ok(n / 2 + 1)
    }
}

/// The extremal enumerator with its Gleason coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalSolve {
    pub n: usize,
    pub even: bool,
    /// Coefficients in the odd basis `(u+v)^{n-2i} (v(u-v))^i`, or in the
    /// even basis indexed by `b`.
    pub a: Vec<BigInt>,
    pub we: WeightEnum,
    /// Number of forced zero coefficients after `A_0`: `[n/2]` in the odd
    /// case, `[n/6]` weights `2, 4, ..` in the even case.
    pub m: usize,
}

/// The unique enumerator in the invariant ring with the longest forced run
/// of zero coefficients after `A_0 = 1`.
pub fn extremal_we(n: usize, even: bool) -> Result<ExtremalSolve> {
    if n == 0 {
        return Err(Error::Precondition("length must be positive".into()));
    }
    let (basis, step) = if even {
        if n % 2 == 1 {
            return Err(Error::Precondition("even codes need even length".into()));
        }
        (gleason_even_basis::<BigInt>(n), 2)
    } else {
        (gleason_odd_basis::<BigInt>(n), 1)
    };
    let mut w = HomPoly::zero(n);
    let mut a = Vec::with_capacity(basis.len());
    for (j, b) in basis.iter().enumerate() {
        let want = if j == 0 { BigInt::one() } else { BigInt::zero() };
        let c = want - w.coeff(step * j);
        w = w.add(&b.scale(&c));
        a.push(c);
    }
    Ok(ExtremalSolve {
        n,
        even,
        m: basis.len() - 1,
        a,
        we: WeightEnumerator::from_poly(w),
    })
}

/// `b_k` in `(1+v)^{-n} = sum_k b_k phi^k`, `phi = v(1-v)/(1+v)^2`, by
/// Lagrange inversion:
/// `b_k = (-n/k) [v^{k-1}] (1+v)^{2k-n-1} (1-v)^{-k}`.
pub fn burmann_bk(n: usize, k: usize) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let e = 2 * k as i64 - n as i64 - 1;
    // [v^j] (1+v)^e = binom(e, j), [v^j] (1-v)^{-k} = binom(k+j-1, j)
    let gen_binom = |top: i64, j: usize| -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..j as i64 {
            num *= top - i;
            den *= i + 1;
        }
        num / den
    };
    let mut s = BigInt::zero();
    for j in 0..k {
        s += gen_binom(e, j) * gen_binom((k + (k - 1 - j)) as i64 - 1, k - 1 - j);
    }
    BigRational::new(-BigInt::from(n) * s, BigInt::from(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    /// A shadow coefficient that is not an integer.
    ShadowFractional,
    /// A negative shadow coefficient.
    ShadowNegative,
    /// A negative coefficient of the extremal enumerator itself.
    EnumeratorNegative,
}

/// Proof that no code has the extremal enumerator: an exact coefficient
/// that a genuine enumerator could not have.
#[derive(Debug, Clone, PartialEq)]
pub struct NonexistenceCert {
    pub n: usize,
    pub even: bool,
    pub kind: CertKind,
    /// Power of `v` carrying the offending coefficient.
    pub index: usize,
    pub value: BigRational,
}

fn first_shadow_defect(w: &WeightEnum, n: usize) -> Option<(CertKind, usize, BigRational)> {
    let s = shadow_we(w, &(BigInt::one() << n));
    s.coeffs().iter().enumerate().find_map(|(i, c)| {
        if !c.is_integer() {
            Some((CertKind::ShadowFractional, i, c.clone()))
        } else if c.is_negative() {
            Some((CertKind::ShadowNegative, i, c.clone()))
        } else {
            None
        }
    })
}

fn first_negative(w: &WeightEnum) -> Option<(usize, BigRational)> {
    w.coeffs()
        .iter()
        .position(|c| c.is_negative())
        .map(|i| (i, BigRational::from_integer(w.coeff(i).clone())))
}

/// A certificate that no extremal code of length `n` exists, or `None`
/// when none is found.
///
/// Odd case: for `n <= 11` the first non-integral or negative shadow
/// coefficient; from `n = 12` the coefficient `A_{m+2}` when negative.
/// Even case: the first negative coefficient of the extremal enumerator.
pub fn nonexistence_certificate(n: usize, even: bool) -> Result<Option<NonexistenceCert>> {
    let ext = extremal_we(n, even)?;
    let cert = |kind, index, value| NonexistenceCert {
        n,
        even,
        kind,
        index,
        value,
    };
    if even {
        return Ok(first_negative(&ext.we).map(|(i, v)| cert(CertKind::EnumeratorNegative, i, v)));
    }
    if n <= 11 {
        if let Some((k, i, v)) = first_shadow_defect(&ext.we, n) {
            return Ok(Some(cert(k, i, v)));
        }
    } else {
        let i = ext.m + 2;
        if ext.we.coeff(i).is_negative() {
            let v = BigRational::from_integer(ext.we.coeff(i).clone());
            return Ok(Some(cert(CertKind::EnumeratorNegative, i, v)));
        }
    }
    if let Some((i, v)) = first_negative(&ext.we) {
        return Ok(Some(cert(CertKind::EnumeratorNegative, i, v)));
    }
    Ok(first_shadow_defect(&ext.we, n).map(|(k, i, v)| cert(k, i, v)))
}

/// Facts about the shadow of a self-dual code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowReport {
    pub n: usize,
    /// Minimal weight of a shadow word.
    pub h: usize,
    /// Whether `h = n`, which happens exactly for `gamma_1^n`.
    pub h_equals_n: bool,
    pub is_gamma_power: bool,
    pub a1: u64,
    pub a2: u64,
    /// `n(5 - n)/2`, the least number of weight-2 words when `A_1 = 0`.
    pub weight2_bound: i64,
    /// `A_1 = 0` and `A_2` equals the bound.
    pub meets_weight2_bound: bool,
    /// Number of shadow words of weight `n - 2` (when `n >= 2`).
    pub shadow_top: Option<u64>,
    /// Whether every implication checked above held.
    pub consistent: bool,
}

pub fn shadow_extremal_check(c: &KCode) -> Result<ShadowReport> {
    let n = c.len();
    let sh = shadow(c)?;
    let dist = sh.distribution()?;
    let h = dist.iter().position(|&k| k > 0).unwrap_or(0);
    let a = c.weight_distribution()?;
    let a1 = a.get(1).copied().unwrap_or(0);
    let a2 = a.get(2).copied().unwrap_or(0);
    let bound = n as i64 * (5 - n as i64) / 2;
    let is_gamma_power = if 2 * n <= CANON_DIM2_LIMIT {
        equivalent(c, &standard::gamma1().power(n))?.is_some()
    } else {
        a1 == n as u64
    };
    let meets = a1 == 0 && a2 as i64 == bound;
    let shadow_top = (n >= 2).then(|| dist[n - 2]);
    let mut consistent = h <= n && (h == n) == is_gamma_power;
    if a1 == 0 {
        consistent &= a2 as i64 >= bound;
        consistent &= meets == (h == n - 2);
        if meets && n >= 3 {
            consistent &= shadow_top == Some((1u64 << (n - 3)) * n as u64);
        }
    }
    Ok(ShadowReport {
        n,
        h,
        h_equals_n: h == n,
        is_gamma_power,
        a1,
        a2,
        weight2_bound: bound,
        meets_weight2_bound: meets,
        shadow_top,
        consistent,
    })
}

/// Parameters of a backtracking search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub even: bool,
    /// Required minimal weight.
    pub d: usize,
    /// Wall-clock budget; unlimited when `None`.
    pub budget: Option<Duration>,
    /// Collect every class instead of stopping at the first code.
    pub exhaustive: bool,
    /// Depths at which candidates are reduced to `Aut(C)`-orbits.
    pub symmetry_depth: usize,
    /// Self-orthogonal code every result must contain.
    pub seed: Option<KCode>,
    /// Try heavier candidates first.
    pub heavy_first: bool,
    /// Shuffle sibling order with this seed; with `restart_nodes` the
    /// search restarts from the root with a fresh order after that many
    /// nodes. Restarts forgo exhaustiveness.
    pub shuffle: Option<u64>,
    pub restart_nodes: Option<u64>,
}

impl SearchConfig {
    pub fn new(n: usize, even: bool, d: usize) -> Self {
        SearchConfig {
            n,
            even,
            d,
            budget: None,
            exhaustive: false,
            symmetry_depth: 2,
            seed: None,
            heavy_first: false,
            shuffle: None,
            restart_nodes: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    /// Codes found. In exhaustive mode this is one code per class and the
    /// list is complete.
    Found(Vec<KCode>),
    /// The whole tree was searched and no code exists.
    NoneExist,
    /// The budget ran out; codes found so far are attached.
    BudgetExhausted(Vec<KCode>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

/// Largest length whose whole word space is tabulated by the search.
pub const SEARCH_TABLE_LIMIT: usize = 12;

/// Searches for a self-dual code (even when requested) of length `n` and
/// minimal weight at least `d`.
///
/// A node is a self-orthogonal code `C` with every word of weight `>= d`,
/// together with the cosets `x + C` in `C`-dual whose words all have weight
/// `>= d`. Adding `x` keeps exactly the cosets `y` with `y` orthogonal to
/// `x` and `y + x` also admissible, so no weights are recounted below the
/// root. A branch that fails removes its coset from its siblings, and a
/// node with fewer admissible cosets than a self-dual extension needs is
/// cut.
pub fn search(cfg: &SearchConfig) -> Result<SearchReport> {
    if cfg.n == 0 || cfg.d == 0 {
        return Err(Error::Precondition("length and target weight must be positive".into()));
    }
    if cfg.even && cfg.n % 2 == 1 {
        return Err(Error::Precondition("even codes need even length".into()));
    }
    if cfg.exhaustive && 2 * cfg.n > CANON_DIM2_LIMIT {
        return Err(Error::Precondition(format!(
            "exhaustive search keeps classes, which needs n <= {}",
            CANON_DIM2_LIMIT / 2
        )));
    }
    let mut s = Searcher {
        cfg: cfg.clone(),
        deadline: cfg.budget.map(|b| Instant::now() + b),
        nodes: 0,
        found: Vec::new(),
        out_of_time: false,
        attempt_start: 0,
        aborted: false,
    };
    let mut root = KCode::zero(cfg.n);
    if cfg.n <= SEARCH_TABLE_LIMIT {
        let mut cands = s.root_candidates();
        if let Some(seed) = &cfg.seed {
            check_seed(seed, cfg)?;
            for r in seed.basis() {
                let x = root.reduce(r);
                if cands.binary_search(&x).is_err() {
                    return Err(Error::Precondition("seed has words below the target weight".into()));
                }
                let none = vec![false; cands.len()];
                let (next, child) = descend(&root, &cands, x, &none);
                root = next;
                cands = child;
            }
        }
        loop {
            s.tabulated(&root, cands.clone(), 0);
            if !s.aborted || s.out_of_time {
                break;
            }
            s.aborted = false;
            s.attempt_start = s.nodes;
            s.cfg.shuffle = Some(s.cfg.shuffle.unwrap_or(0).wrapping_add(1));
        }
    } else {
        if let Some(seed) = &cfg.seed {
            check_seed(seed, cfg)?;
            if seed.codewords_limited(ENUMERATION_LIMIT)?.any(|x| !x.is_zero() && !s.admissible(&x)) {
                return Err(Error::Precondition("seed has words below the target weight".into()));
            }
            root = seed.clone();
        }
        s.lazy(&root, 0)?;
    }
    let found = std::mem::take(&mut s.found);
    let outcome = if s.out_of_time || (s.cfg.restart_nodes.is_some() && found.is_empty()) {
        SearchOutcome::BudgetExhausted(found)
    } else if found.is_empty() {
        SearchOutcome::NoneExist
    } else {
        SearchOutcome::Found(found)
    };
    Ok(SearchReport {
        outcome,
        nodes: s.nodes,
    })
}

fn check_seed(seed: &KCode, cfg: &SearchConfig) -> Result<()> {
    if seed.len() != cfg.n {
        return Err(Error::LengthMismatch {
            expected: cfg.n,
            found: seed.len(),
        });
    }
    if !seed.is_self_orthogonal() {
        return Err(Error::Precondition("seed must be self-orthogonal".into()));
    }
    Ok(())
}

/// The node `C + x` and its admissible cosets, skipping removed ones.
fn descend(c: &KCode, cands: &[KWord], x: KWord, removed: &[bool]) -> (KCode, Vec<KWord>) {
    let next = c.extended(x);
    let mut v: Vec<KWord> = cands
        .par_iter()
        .enumerate()
        .filter_map(|(i, y)| {
            if removed[i] || *y == x || y.inner_unchecked(&x) {
                return None;
            }
            let z = c.reduce(&(*y + x));
            match cands.binary_search(&z) {
                Ok(j) if !removed[j] && *y < z => Some(next.reduce(y)),
                _ => None,
            }
        })
        .collect();
    v.par_sort_unstable();
    v.dedup();
    (next, v)
}

struct Searcher {
    cfg: SearchConfig,
    deadline: Option<Instant>,
    nodes: u64,
    found: Vec<KCode>,
    out_of_time: bool,
    attempt_start: u64,
    aborted: bool,
}

impl Searcher {
    fn stop(&mut self) -> bool {
        if self.out_of_time || self.aborted || (!self.cfg.exhaustive && !self.found.is_empty()) {
            return true;
        }
        if let Some(limit) = self.cfg.restart_nodes {
            if self.nodes - self.attempt_start > limit {
                self.aborted = true;
                return true;
            }
        }
        if let Some(t) = self.deadline {
            if self.nodes % 64 == 0 && Instant::now() > t {
                self.out_of_time = true;
            }
        }
        self.out_of_time
    }

    fn admissible(&self, x: &KWord) -> bool {
        let w = x.weight();
        w >= self.cfg.d && (!self.cfg.even || w % 2 == 0)
    }

    fn root_candidates(&self) -> Vec<KWord> {
        let n = self.cfg.n;
        let m = (1u64 << n) - 1;
        let mut v: Vec<KWord> = (1u64..1 << (2 * n))
            .into_par_iter()
            .map(|k| KWord::from_planes(n, k & m, k >> n))
            .filter(|x| self.admissible(x))
            .collect();
        v.par_sort_unstable();
        v
    }

    fn record(&mut self, c: &KCode) {
        if !self.cfg.exhaustive {
            self.found.push(c.clone());
            return;
        }
        let k = canonical_form(c).expect("length checked").code;
        if !self.found.contains(&k) {
            self.found.push(k);
        }
    }

    /// Groups candidate indices into orbits of `Aut(C)`; singletons when
    /// symmetry is not used at this depth.
    fn orbit_classes(&self, c: &KCode, cands: &[KWord], depth: usize) -> Vec<Vec<usize>> {
        if depth >= self.cfg.symmetry_depth || c.dim2() > CANON_DIM2_LIMIT {
            return (0..cands.len()).map(|i| vec![i]).collect();
        }
        if c.dim2() == 0 {
            // the whole group acts; words of equal weight are equivalent
            let mut by_weight: Vec<Vec<usize>> = vec![Vec::new(); self.cfg.n + 1];
            for (i, x) in cands.iter().enumerate() {
                by_weight[x.weight()].push(i);
            }
            return by_weight.into_iter().filter(|v| !v.is_empty()).collect();
        }
        let gens = canonical_form(c).expect("dimension checked").aut.generators;
        let mut parent: Vec<usize> = (0..cands.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &gens {
            let images: Vec<usize> = cands
                .par_iter()
                .map(|x| {
                    cands
                        .binary_search(&c.reduce(&g.apply_word(x)))
                        .expect("candidate set is Aut-invariant")
                })
                .collect();
            for (i, j) in images.into_iter().enumerate() {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); cands.len()];
        for i in 0..cands.len() {
            let r = root(&mut parent, i);
            classes[r].push(i);
        }
        classes.into_iter().filter(|v| !v.is_empty()).collect()
    }

    fn tabulated(&mut self, c: &KCode, cands: Vec<KWord>, depth: usize) {
        self.nodes += 1;
        if c.dim2() == self.cfg.n {
            self.record(c);
            return;
        }
        let need = (1usize << (self.cfg.n - c.dim2())) - 1;
        if cands.len() < need || self.stop() {
            return;
        }
        let mut classes = self.orbit_classes(c, &cands, depth);
        if self.cfg.heavy_first {
            classes.sort_by_key(|cl| std::cmp::Reverse(cands[cl[0]].weight()));
        }
        if let Some(seed) = self.cfg.shuffle {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ self.nodes.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            classes.shuffle(&mut rng);
        }
        let mut removed = vec![false; cands.len()];
        let mut left = cands.len();
        for class in classes {
            if left < need || self.stop() {
                return;
            }
            let (next, child) = descend(c, &cands, cands[class[0]], &removed);
            self.tabulated(&next, child, depth + 1);
            for &i in &class {
                removed[i] = true;
            }
            left -= class.len();
        }
    }

    /// Search without a word table, for lengths beyond
    /// [`SEARCH_TABLE_LIMIT`]: candidates are enumerated as coset
    /// representatives and each coset is weighed directly.
    fn lazy(&mut self, c: &KCode, depth: usize) -> Result<()> {
        self.nodes += 1;
        if c.dim2() == self.cfg.n {
            self.record(c);
            return Ok(());
        }
        if c.dim2() > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                dim2: c.dim2(),
                limit: ENUMERATION_LIMIT,
            });
        }
        let dual = c.dual();
        let quotient: Vec<KWord> = {
            let mut q = c.clone();
            dual.basis()
                .iter()
                .filter_map(|r| q.insert(c.reduce(r)).then(|| c.reduce(r)))
                .collect()
        };
        let mut cur = KWord::zero(self.cfg.n);
        for counter in 1u64..1u64 << quotient.len().min(63) {
            if self.stop() {
                return Ok(());
            }
            cur += quotient[counter.trailing_zeros() as usize];
            let x = c.reduce(&cur);
            if !self.admissible(&x) {
                continue;
            }
            if c.codewords().all(|y| self.admissible(&(y + x))) {
                self.lazy(&c.extended(x), depth + 1)?;
            }
        }
        Ok(())
    }
}

/// Whether the Hamming enumerator of `c` is the extremal one.
pub fn is_extremal(c: &KCode, even: bool) -> Result<bool> {
    Ok(hamming_we(c)? == extremal_we(c.len(), even)?.we)
}

/// `A_{m+1}` of the odd extremal enumerator as an integer, for quick
/// inspection.
pub fn first_free_coefficient(n: usize) -> Result<i64> {
    let e = extremal_we(n, false)?;
    e.we
        .coeff(e.m + 1)
        .to_i64()
        .ok_or_else(|| Error::Precondition("coefficient exceeds i64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(w: &WeightEnum) -> Vec<i64> {
        w.to_i64()
    }

    #[test]
    fn bounds() {
        assert_eq!(dmax_bound(6, false).unwrap(), 4);
        assert_eq!(dmax_bound(12, true).unwrap(), 6);
        assert_eq!(dmax_bound(1, false).unwrap(), 1);
        assert!(dmax_bound(3, true).is_err());
    }

    #[test]
    fn small_extremal() {
        let e = extremal_we(4, false).unwrap();
        assert_eq!(ints(&e.we), vec![1, 0, 0, 12, 3]);
        assert_eq!(e.a, vec![BigInt::from(1), BigInt::from(-4), BigInt::from(-2)]);
        assert_eq!(ints(&extremal_we(5, false).unwrap().we), vec![1, 0, 0, 10, 15, 6]);
    }

    #[test]
    fn burmann_small() {
        assert_eq!(burmann_bk(5, 0), BigRational::one());
        // (1+v)^{-n} = 1 - n v + .. and phi = v + .., so b_1 = -n
        assert_eq!(burmann_bk(7, 1), BigRational::from_integer(BigInt::from(-7)));
    }

    #[test]
    fn search_tiny() {
        let r = search(&SearchConfig::new(4, false, 3)).unwrap();
        assert_eq!(r.outcome, SearchOutcome::NoneExist);
        let r = search(&SearchConfig::new(2, true, 2)).unwrap();
        match r.outcome {
            SearchOutcome::Found(v) => assert_eq!(v[0].weight_distribution().unwrap(), vec![1, 0, 3]),
            o => panic!("{o:?}"),
        }
    }
}
