//! Classification of self-dual codes up to equivalence.
//!
//! Codes are grown one GF(2) dimension at a time from the zero code: a
//! self-orthogonal code `C` extends by any coset `x + C` of `C` in its dual
//! (only even cosets when the target is even), taken up to `Aut(C)`. Each
//! level keeps one canonical representative per class. Completeness is
//! certified by the mass formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonForm};
use crate::code::KCode;
use crate::enumerator::{hamming_we, RationalWE, WeightEnum, WeightEnumerator};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::poly::HomPoly;
use crate::symbol::KSymbol;
use crate::word::{mask, KWord};

/// `6^n n!`, the order of the monomial group.
pub fn group_order(n: usize) -> BigUint {
    let mut g = BigUint::one();
    for i in 1..=n {
        g *= BigUint::from(6 * i as u64);
    }
    g
}

/// Number of distinct self-dual codes (`even = false`) or even self-dual
/// codes of length `n`.
pub fn mass(n: usize, even: bool) -> Result<BigUint> {
    if even && n % 2 == 1 {
        return Err(Error::Precondition("even codes need even length".into()));
    }
    let range = if even { 0..n } else { 1..n + 1 };
    Ok(range.fold(BigUint::one(), |acc, i| {
        acc * (BigUint::one() + (BigUint::one() << i))
    }))
}

/// Components of the subcode generated by the words of weight 1 and 2.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Skeleton {
    pub gamma1: usize,
    pub epsilon2: usize,
    /// `delta_l` multiplicities keyed by `l >= 2`.
    pub deltas: BTreeMap<usize, usize>,
    /// Positions outside every component.
    pub untouched: usize,
}

impl Skeleton {
    pub fn is_empty(&self) -> bool {
        self.gamma1 == 0 && self.epsilon2 == 0 && self.deltas.is_empty()
    }

    /// The skeleton with the `gamma_1` factors removed.
    pub fn without_gamma(&self) -> Skeleton {
        Skeleton {
            gamma1: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let power = |name: String, k: usize| {
            if k == 1 {
                name
            } else {
                format!("{name}^{k}")
            }
        };
        for (&l, &k) in self.deltas.iter().rev() {
            parts.push(power(format!("delta{l}"), k));
        }
        if self.epsilon2 > 0 {
            parts.push(power("epsilon2".into(), self.epsilon2));
        }
        if self.gamma1 > 0 {
            parts.push(power("gamma1".into(), self.gamma1));
        }
        if parts.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Positions carrying a weight-1 codeword.
pub fn gamma_positions(c: &KCode) -> u64 {
    let mut m = 0u64;
    for i in 0..c.len() {
        let sub = c.subcode_on(1 << i);
        if sub.dim2() > 0 {
            m |= 1 << i;
        }
    }
    m
}

pub fn skeleton(c: &KCode) -> Result<Skeleton> {
    if !c.is_self_orthogonal() {
        return Err(Error::Precondition("skeleton needs a self-orthogonal code".into()));
    }
    let n = c.len();
    let gammas = gamma_positions(c);
    let pairs: Vec<KWord> = c
        .codewords_limited(crate::code::ENUMERATION_LIMIT)?
        .filter(|x| x.weight() == 2 && x.support() & gammas == 0)
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in &pairs {
        let s = x.support();
        let i = s.trailing_zeros() as usize;
        let j = 63 - s.leading_zeros() as usize;
        let (a, b) = (root(&mut parent, i), root(&mut parent, j));
        parent[a.max(b)] = a.min(b);
    }
    let mut comps: BTreeMap<usize, u64> = BTreeMap::new();
    for x in &pairs {
        let i = x.support().trailing_zeros() as usize;
        let r = root(&mut parent, i);
        *comps.entry(r).or_default() |= x.support();
    }
    let mut sk = Skeleton {
        gamma1: gammas.count_ones() as usize,
        ..Skeleton::default()
    };
    let mut covered = gammas;
    for (_, support) in comps {
        covered |= support;
        let l = support.count_ones() as usize;
        let dim2 = KCode::from_words(n, pairs.iter().copied().filter(|x| x.support() & !support == 0))
            .dim2();
        if l == 2 && dim2 == 2 {
            sk.epsilon2 += 1;
        } else if dim2 == l - 1 {
            *sk.deltas.entry(l).or_default() += 1;
        } else {
            return Err(Error::Precondition(format!(
                "weight-2 component on {l} positions has dimension {dim2}/2"
            )));
        }
    }
    sk.untouched = (mask(n) & !covered).count_ones() as usize;
    Ok(sk)
}

/// One equivalence class of self-dual codes.
#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub code: KCode,
    pub aut_order: BigUint,
    pub aut_generators: Vec<GroupElement>,
    pub we: WeightEnum,
    pub is_even: bool,
    pub skeleton: Skeleton,
    /// Indices of the child classes in the classification of length
    /// `n - 1`, filled by [`link_children`].
    pub children: Vec<usize>,
}

impl ClassRecord {
    pub fn from_form(form: CanonForm) -> Result<ClassRecord> {
        let code = form.code;
        let gens = conjugate_generators(&form.labeling, &form.aut.generators);
        Ok(ClassRecord {
            we: hamming_we(&code)?,
            is_even: code.is_even(),
            skeleton: skeleton(&code)?,
            aut_order: form.aut.order,
            aut_generators: gens,
            children: Vec::new(),
            code,
        })
    }

    pub fn n(&self) -> usize {
        self.code.len()
    }

    /// `6^n n! / |Aut|`, the number of distinct codes in the class.
    pub fn class_size(&self) -> BigUint {
        group_order(self.n()) / &self.aut_order
    }
}

/// Generators of `Aut(L C)` from generators of `Aut(C)`.
fn conjugate_generators(labeling: &GroupElement, gens: &[GroupElement]) -> Vec<GroupElement> {
    let inv = labeling.inverse();
    gens.iter()
        .map(|h| labeling.compose(h).compose(&inv))
        .collect()
}

/// A complete list of classes for one length and parity.
#[derive(Debug, Clone)]
pub struct Classification {
    pub n: usize,
    /// Whether only even codes were classified.
    pub even: bool,
    pub classes: Vec<ClassRecord>,
}

impl Classification {
    /// `sum 6^n n! / |Aut(C)|` over the classes.
    pub fn mass_sum(&self) -> BigUint {
        self.classes.iter().map(ClassRecord::class_size).sum()
    }

    pub fn audit(&self) -> Result<()> {
        let expected = mass(self.n, self.even)?;
        let got = self.mass_sum();
        if got != expected {
            return Err(Error::Audit(format!(
                "length {}: class sizes sum to {got}, mass formula gives {expected}",
                self.n
            )));
        }
        Ok(())
    }

    /// Index of the class containing `c`.
    pub fn find(&self, c: &KCode) -> Result<Option<usize>> {
        let k = canonical_form(c)?.code;
        Ok(self.classes.iter().position(|r| r.code == k))
    }

    /// `sum (6^n n! / |Aut|) W_C` over the classes.
    pub fn weighted_we(&self) -> WeightEnum {
        let mut acc = vec![BigInt::zero(); self.n + 1];
        for r in &self.classes {
            let size = BigInt::from(r.class_size());
            for (i, a) in r.we.coeffs().iter().enumerate() {
                acc[i] += a * &size;
            }
        }
        WeightEnumerator::new(acc)
    }
}

fn sort_key(c: &KCode) -> Vec<(u64, u64)> {
    c.basis().iter().map(|r| r.planes()).collect()
}

fn find_root(p: &mut [u32], mut x: u32) -> u32 {
    while p[x as usize] != x {
        p[x as usize] = p[p[x as usize] as usize];
        x = p[x as usize];
    }
    x
}

/// Representatives of the `Aut(C)`-orbits on the nonzero cosets of `C` in
/// its dual (even cosets only when `even_only`).
fn extension_orbits(c: &KCode, gens: &[GroupElement], even_only: bool) -> Vec<KWord> {
    let reps: Vec<KWord> = c
        .coset_representatives(&c.dual())
        .into_iter()
        .filter(|x| !even_only || x.weight() % 2 == 0)
        .collect();
    let index: HashMap<KWord, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, x)| (*x, i as u32))
        .collect();
    let mut parent: Vec<u32> = (0..reps.len() as u32).collect();
    for g in gens {
        for (i, x) in reps.iter().enumerate() {
            let y = c.reduce(&g.apply_word(x));
            let j = index[&y];
            let (a, b) = (find_root(&mut parent, i as u32), find_root(&mut parent, j));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    (0..reps.len() as u32)
        .filter(|&i| find_root(&mut parent, i) == i)
        .map(|i| reps[i as usize])
        .collect()
}

/// Collects canonical forms, keeping one per class, in a deterministic order.
fn dedup_forms(forms: Vec<CanonForm>) -> Vec<(KCode, Vec<GroupElement>, BigUint)> {
    let mut seen: HashMap<KCode, (Vec<GroupElement>, BigUint)> = HashMap::new();
    for f in forms {
        seen.entry(f.code.clone()).or_insert_with(|| {
            (
                conjugate_generators(&f.labeling, &f.aut.generators),
                f.aut.order,
            )
        });
    }
    let mut out: Vec<_> = seen.into_iter().map(|(c, (g, o))| (c, g, o)).collect();
    out.sort_by_key(|(c, _, _)| sort_key(c));
    out
}

/// All classes of self-dual codes of length `n` (`even = false`, even
/// codes included) or of even self-dual codes, audited against the mass
/// formula.
pub fn classify(n: usize, even: bool) -> Result<Classification> {
    if n == 0 || n > 8 {
        return Err(Error::Precondition(format!(
            "classification is supported for 1 <= n <= 8, got {n}"
        )));
    }
    if even && n % 2 == 1 {
        return Err(Error::Precondition("even codes need even length".into()));
    }
    let start = canonical_form(&KCode::zero(n))?;
    let mut level = vec![(
        start.code.clone(),
        conjugate_generators(&start.labeling, &start.aut.generators),
        start.aut.order,
    )];
    for _ in 0..n {
        let forms: Vec<CanonForm> = level
            .par_iter()
            .map(|(c, gens, _)| {
                extension_orbits(c, gens, even)
                    .into_par_iter()
                    .map(|x| canonical_form(&c.extended(x)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        level = dedup_forms(forms);
    }
    let classes = level
        .into_par_iter()
        .map(|(code, gens, order)| {
            Ok(ClassRecord {
                we: hamming_we(&code)?,
                is_even: code.is_even(),
                skeleton: skeleton(&code)?,
                aut_order: order,
                aut_generators: gens,
                children: Vec::new(),
                code,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut cls = Classification { n, even, classes };
    sort_classes(&mut cls.classes);
    cls.audit()?;
    Ok(cls)
}

/// Orders classes by decreasing number of low-weight words, then by the
/// canonical basis.
fn sort_classes(classes: &mut [ClassRecord]) {
    classes.sort_by(|a, b| {
        let ka: Vec<i64> = a.we.to_i64().iter().map(|x| -x).collect();
        let kb: Vec<i64> = b.we.to_i64().iter().map(|x| -x).collect();
        ka.cmp(&kb)
            .then_with(|| a.aut_order.cmp(&b.aut_order).reverse())
            .then_with(|| sort_key(&a.code).cmp(&sort_key(&b.code)))
    });
}

/// A child of an even self-dual code.
#[derive(Debug, Clone)]
pub struct Child {
    pub position: usize,
    pub glue: KSymbol,
    /// Size of the `Aut`-orbit of `(position, glue)`.
    pub orbit_size: usize,
    pub code: KCode,
}

/// Children of an even self-dual code, one per `Aut(C)`-orbit of
/// (position, nonzero symbol) pairs. `gens` generate `Aut(C)`.
pub fn children_with(c: &KCode, gens: &[GroupElement]) -> Result<Vec<Child>> {
    if !(c.is_self_dual() && c.is_even()) {
        return Err(Error::Precondition("children need an even self-dual code".into()));
    }
    let n = c.len();
    let cell = |i: usize, s: KSymbol| 3 * i + s.index() as usize - 1;
    let mut parent: Vec<u32> = (0..3 * n as u32).collect();
    for g in gens {
        for i in 0..n {
            for s in KSymbol::NONZERO {
                let j = cell(g.sigma()[i], g.tau()[i].apply(s));
                let (a, b) = (
                    find_root(&mut parent, cell(i, s) as u32),
                    find_root(&mut parent, j as u32),
                );
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
    }
    let mut sizes = vec![0usize; 3 * n];
    for k in 0..3 * n as u32 {
        sizes[find_root(&mut parent, k) as usize] += 1;
    }
    Ok((0..3 * n)
        .filter(|&k| find_root(&mut parent, k as u32) == k as u32)
        .map(|k| {
            let (position, glue) = (k / 3, KSymbol::NONZERO[k % 3]);
            Child {
                position,
                glue,
                orbit_size: sizes[k],
                code: c.shorten(position, glue),
            }
        })
        .collect())
}

/// Children of an even self-dual code.
pub fn children(c: &KCode) -> Result<Vec<Child>> {
    let form = canonical_form(c)?;
    children_with(c, &form.aut.generators)
}

/// Classes of length `n - 1` arising as children of the given even classes.
pub fn classify_children(parents: &Classification) -> Result<Classification> {
    if !parents.even {
        return Err(Error::Precondition("children come from an even classification".into()));
    }
    let forms: Vec<CanonForm> = parents
        .classes
        .par_iter()
        .map(|r| {
            children_with(&r.code, &r.aut_generators)?
                .into_par_iter()
                .map(|ch| canonical_form(&ch.code))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let classes = dedup_forms(forms)
        .into_par_iter()
        .map(|(code, gens, order)| {
            Ok(ClassRecord {
                we: hamming_we(&code)?,
                is_even: code.is_even(),
                skeleton: skeleton(&code)?,
                aut_order: order,
                aut_generators: gens,
                children: Vec::new(),
                code,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut cls = Classification {
        n: parents.n - 1,
        even: false,
        classes,
    };
    sort_classes(&mut cls.classes);
    cls.audit()?;
    Ok(cls)
}

/// Fills `children` of every even class with indices into `kids`.
pub fn link_children(parents: &mut Classification, kids: &Classification) -> Result<()> {
    let index: HashMap<&KCode, usize> = kids
        .classes
        .iter()
        .enumerate()
        .map(|(i, r)| (&r.code, i))
        .collect();
    let links: Vec<Vec<usize>> = parents
        .classes
        .par_iter()
        .map(|r| {
            let mut v: Vec<usize> = children_with(&r.code, &r.aut_generators)?
                .iter()
                .map(|ch| {
                    let k = canonical_form(&ch.code)?.code;
                    index.get(&k).copied().ok_or_else(|| {
                        Error::Audit("child missing from the classification".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            v.sort_unstable();
            v.dedup();
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    for (r, l) in parents.classes.iter_mut().zip(links) {
        r.children = l;
    }
    Ok(())
}

/// The code with its `gamma_1` factors removed.
pub fn primitive_part(c: &KCode) -> KCode {
    let g = gamma_positions(c);
    c.subcode_on(mask(c.len()) & !g)
}

/// The primitive child at `(pos, glue)`: the child with the positions
/// left carrying weight-1 words deleted.
pub fn primitive_child(c: &KCode, pos: usize, glue: KSymbol) -> Result<KCode> {
    if !(c.is_self_dual() && c.is_even()) {
        return Err(Error::Precondition("children need an even self-dual code".into()));
    }
    if glue.is_zero() || pos >= c.len() {
        return Err(Error::Precondition("glue must be a nonzero symbol at a valid position".into()));
    }
    Ok(primitive_part(&c.shorten(pos, glue)))
}

/// The even self-dual parent of length `n + 1` of a non-even self-dual code
/// of length `n`.
pub fn parent(d: &KCode) -> Result<KCode> {
    let sh = crate::enumerator::shadow(d)?;
    if sh.is_even() || d.len() % 2 == 0 {
        return Err(Error::Precondition(
            "parent needs a non-even self-dual code of odd length".into(),
        ));
    }
    let ext = |x: &KWord, s: KSymbol| x.push(s);
    let base: Vec<KWord> = sh.c0.basis().iter().map(|r| ext(r, KSymbol::Zero)).collect();
    for i2 in [2, 3] {
        let mut gens = base.clone();
        gens.push(ext(&sh.coset_reps[1], KSymbol::A));
        gens.push(ext(&sh.coset_reps[i2], KSymbol::B));
        let c = KCode::from_words(d.len() + 1, gens);
        if c.is_self_dual() && c.is_even() {
            return Ok(c);
        }
    }
    Err(Error::Audit("no gluing of the shadow cosets is even self-dual".into()))
}

/// The two even self-dual neighbours `D0 + D2` and `D0 + D3`.
pub fn neighbors(d: &KCode) -> Result<(KCode, KCode)> {
    let sh = crate::enumerator::shadow(d)?;
    if sh.is_even() || d.len() % 2 == 1 {
        return Err(Error::Precondition(
            "neighbours need a non-even self-dual code of even length".into(),
        ));
    }
    Ok((
        sh.c0.extended(sh.coset_reps[2]),
        sh.c0.extended(sh.coset_reps[3]),
    ))
}

/// One non-even class seen as an edge between even classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    /// Index of the non-even class in the full classification.
    pub class: usize,
    pub ends: (usize, usize),
}

impl GraphEdge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

/// Even classes as vertices, non-even classes as edges or loops.
#[derive(Debug, Clone)]
pub struct NeighGraph {
    pub n: usize,
    /// Indices of the even classes in the full classification.
    pub vertices: Vec<usize>,
    pub edges: Vec<GraphEdge>,
}

impl NeighGraph {
    pub fn loops(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn proper_edges(&self) -> usize {
        self.edges.len() - self.loops()
    }

    pub fn is_connected(&self) -> bool {
        let k = self.vertices.len();
        if k == 0 {
            return true;
        }
        let mut parent: Vec<u32> = (0..k as u32).collect();
        for e in &self.edges {
            let (a, b) = (
                find_root(&mut parent, e.ends.0 as u32),
                find_root(&mut parent, e.ends.1 as u32),
            );
            parent[a.max(b) as usize] = a.min(b);
        }
        (0..k as u32).all(|v| find_root(&mut parent, v) == 0)
    }
}

/// The neighbourhood graph of length `n` from the full classification.
pub fn neighborhood_graph(all: &Classification) -> Result<NeighGraph> {
    if all.even || all.n % 2 == 1 {
        return Err(Error::Precondition(
            "the graph needs the full classification of an even length".into(),
        ));
    }
    let vertices: Vec<usize> = (0..all.classes.len())
        .filter(|&i| all.classes[i].is_even)
        .collect();
    let vertex_of: HashMap<&KCode, usize> = vertices
        .iter()
        .enumerate()
        .map(|(v, &i)| (&all.classes[i].code, v))
        .collect();
    let edges = (0..all.classes.len())
        .filter(|&i| !all.classes[i].is_even)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&i| {
            let (x, y) = neighbors(&all.classes[i].code)?;
            let end = |c: &KCode| -> Result<usize> {
                let k = canonical_form(c)?.code;
                vertex_of
                    .get(&k)
                    .copied()
                    .ok_or_else(|| Error::Audit("neighbour missing from the classification".into()))
            };
            let (a, b) = (end(&x)?, end(&y)?);
            Ok(GraphEdge {
                class: i,
                ends: (a.min(b), a.max(b)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NeighGraph {
        n: all.n,
        vertices,
        edges,
    })
}

/// The closed form of `sum (6^n n! / |Aut|) W_C` over all classes.
pub fn average_we(n: usize, even: bool) -> Result<RationalWE> {
    let m = BigRational::from_integer(BigInt::from(mass(n, even)?));
    let r = |x: i64| BigRational::from_integer(BigInt::from(x));
    let pow2 = |k: usize| BigRational::from_integer(BigInt::one() << k);
    let up = HomPoly::linear(r(1), r(3)).pow(n);
    let u_n = HomPoly::monomial(n, 0, r(1));
    let poly = if even {
        let um = HomPoly::linear(r(1), r(-3)).pow(n);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let bracket = u_n.scale(&pow2(n - 1)).add(&up.add(&um).scale(&half));
        bracket.scale(&(m / (r(1) + pow2(n - 1))))
    } else {
        let bracket = u_n.scale(&pow2(n)).add(&up);
        bracket.scale(&(m / (r(1) + pow2(n))))
    };
    Ok(WeightEnumerator::from_poly(poly))
}

/// Counts of child classes `(n1, n2)`: distinct children and those with a
/// weight-1 word.
pub fn child_counts(rec: &ClassRecord, kids: &Classification) -> (usize, usize) {
    let n1 = rec.children.len();
    let n2 = rec
        .children
        .iter()
        .filter(|&&k| kids.classes[k].we.coeff(1).to_u64().unwrap_or(0) > 0)
        .count();
    (n1, n2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    #[test]
    fn mass_values() {
        assert_eq!(mass(2, false).unwrap(), BigUint::from(15u32));
        assert_eq!(mass(2, true).unwrap(), BigUint::from(6u32));
        assert_eq!(mass(4, true).unwrap(), BigUint::from(270u32));
        assert!(mass(3, true).is_err());
    }

    #[test]
    fn skeletons() {
        let e = standard::epsilon2().power(2);
        let s = skeleton(&e).unwrap();
        assert_eq!((s.epsilon2, s.gamma1), (2, 0));
        assert!(skeleton(&standard::hexacode()).unwrap().is_empty());
        let g = standard::gamma1().direct_sum(&standard::delta_plus(3));
        let s = skeleton(&g).unwrap();
        assert_eq!(s.gamma1, 1);
        assert_eq!(s.deltas.get(&3), Some(&1));
        assert_eq!(s.to_string(), "delta3 gamma1");
    }

    #[test]
    fn small_classifications() {
        let c = classify(2, false).unwrap();
        assert_eq!(c.classes.len(), 2);
        let e = classify(4, true).unwrap();
        assert_eq!(e.classes.len(), 2);
    }

    #[test]
    fn children_of_epsilon_and_hexacode() {
        let ch = children(&standard::epsilon2()).unwrap();
        assert_eq!(ch.len(), 1);
        assert_eq!(ch[0].code, standard::gamma1());
        let ch = children(&standard::hexacode()).unwrap();
        assert_eq!(ch.len(), 1);
        assert_eq!(ch[0].orbit_size, 18);
        assert_eq!(ch[0].code.weight_distribution().unwrap(), vec![1, 0, 0, 10, 15, 6]);
    }

    #[test]
    fn neighbours_of_gamma_squared() {
        let (x, y) = neighbors(&standard::gamma1().power(2)).unwrap();
        for z in [x, y] {
            assert!(z.is_even() && z.is_self_dual());
            assert_eq!(z.weight_distribution().unwrap(), vec![1, 0, 3]);
        }
    }

    #[test]
    fn parent_round_trip() {
        let c5 = standard::shorter_hexacode();
        let p = parent(&c5).unwrap();
        assert_eq!(p.weight_distribution().unwrap(), vec![1, 0, 0, 0, 45, 0, 18]);
    }

    #[test]
    fn closed_form_n2() {
        let w = average_we(2, false).unwrap();
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        assert_eq!(w.coeffs(), &[r(15), r(18), r(27)]);
    }

    #[test]
    fn neighbourhood_graph_counts() {
        for (n, v, e, p) in [(2, 1, 1, 0), (4, 2, 4, 1), (6, 6, 20, 8)] {
            let g = neighborhood_graph(&classify(n, false).unwrap()).unwrap();
            assert_eq!((g.vertices.len(), g.edges.len(), g.proper_edges()), (v, e, p), "n = {n}");
            assert!(g.is_connected());
        }
    }

}
