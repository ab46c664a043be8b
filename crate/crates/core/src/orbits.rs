//! Orbits of `Aut(C)` on words, and the covering radius.

use std::collections::HashMap;

use crate::code::KCode;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::symbol::KSymbol;
use crate::word::KWord;

/// Largest `n` for which all of `K^n` is scanned.
pub const ORBIT_LEN_LIMIT: usize = 12;

/// Which words to decompose into orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subset {
    All,
    Weight(usize),
}

/// One orbit: its least word in lexicographic order and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: KWord,
    pub size: usize,
}

/// Orbits partitioning a subset of `K^n`, sorted by weight then
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    pub n: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitTable {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn total(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }
}

fn index_of(x: &KWord) -> usize {
    let (p, q) = x.planes();
    (p | q << x.len()) as usize
}

fn word_at(n: usize, k: usize) -> KWord {
    let m = (1u64 << n) - 1;
    KWord::from_planes(n, k as u64 & m, (k as u64 >> n) & m)
}

fn find(p: &mut [u32], mut x: u32) -> u32 {
    while p[x as usize] != x {
        p[x as usize] = p[p[x as usize] as usize];
        x = p[x as usize];
    }
    x
}

/// Orbits of the group generated by `gens` on a subset of `K^n`.
pub fn orbits_under(n: usize, gens: &[GroupElement], subset: Subset) -> Result<OrbitTable> {
    if n == 0 || n > ORBIT_LEN_LIMIT {
        return Err(Error::TooLarge {
            dim2: 2 * n,
            limit: 2 * ORBIT_LEN_LIMIT,
        });
    }
    let total = 1usize << (2 * n);
    let member = |x: &KWord| match subset {
        Subset::All => true,
        Subset::Weight(w) => x.weight() == w,
    };
    let mut parent: Vec<u32> = (0..total as u32).collect();
    for g in gens {
        for k in 0..total {
            let x = word_at(n, k);
            if !member(&x) {
                continue;
            }
            let j = index_of(&g.apply_word(&x)) as u32;
            let (a, b) = (find(&mut parent, k as u32), find(&mut parent, j));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<u32, Orbit> = HashMap::new();
    for k in 0..total {
        let x = word_at(n, k);
        if !member(&x) {
            continue;
        }
        let r = find(&mut parent, k as u32);
        let e = groups.entry(r).or_insert(Orbit {
            representative: x,
            size: 0,
        });
        e.size += 1;
        if x < e.representative {
            e.representative = x;
        }
    }
    let mut orbits: Vec<Orbit> = groups.into_values().collect();
    orbits.sort_by_key(|o| (o.representative.weight(), o.representative));
    Ok(OrbitTable { n, orbits })
}

/// Orbits of `Aut(C)` on `K^n` or on the words of one weight.
pub fn orbits(c: &KCode, subset: Subset) -> Result<OrbitTable> {
    let aut = crate::canon::aut(c)?;
    orbits_under(c.len(), &aut.generators, subset)
}

/// Distance from `x` to the nearest codeword, and the number of codewords
/// at that distance.
pub fn distance_to_code(c: &KCode, x: &KWord) -> Result<(usize, usize)> {
    let mut best = (usize::MAX, 0);
    for y in c.codewords_limited(crate::code::ENUMERATION_LIMIT)? {
        let d = x.distance(&y);
        if d < best.0 {
            best = (d, 1);
        } else if d == best.0 {
            best.1 += 1;
        }
    }
    Ok(best)
}

/// A coset of `K^n / C` with its minimal weight and a word of that weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetLeader {
    pub leader: KWord,
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pub radius: usize,
    /// One entry per coset, ordered by weight then leader.
    pub cosets: Vec<CosetLeader>,
}

/// Covering radius of `C` with minimal-weight coset leaders, found by
/// scanning words in order of increasing weight.
pub fn covering_radius(c: &KCode) -> Result<Covering> {
    let n = c.len();
    let cosets_log = 2 * n - c.dim2();
    if cosets_log > 24 {
        return Err(Error::TooLarge {
            dim2: cosets_log,
            limit: 24,
        });
    }
    let count = 1usize << cosets_log;
    let mut seen: HashMap<KWord, ()> = HashMap::with_capacity(count);
    let mut cosets = Vec::with_capacity(count);
    let mut layer = vec![KWord::zero(n)];
    for w in 0..=n {
        for x in &layer {
            if seen.insert(c.reduce(x), ()).is_none() {
                cosets.push(CosetLeader {
                    leader: *x,
                    weight: w,
                });
            }
        }
        if cosets.len() == count {
            break;
        }
        layer = next_layer(n, &layer);
    }
    cosets.sort_by_key(|l| (l.weight, l.leader));
    Ok(Covering {
        radius: cosets.last().map_or(0, |l| l.weight),
        cosets,
    })
}

/// All words of weight `w + 1` from the words of weight `w`, each once.
fn next_layer(n: usize, layer: &[KWord]) -> Vec<KWord> {
    let mut out = Vec::new();
    for x in layer {
        // extend beyond the last nonzero position only
        let start = if x.is_zero() {
            0
        } else {
            64 - x.support().leading_zeros() as usize
        };
        for i in start..n {
            for s in KSymbol::NONZERO {
                let mut y = *x;
                y.set(i, s);
                out.push(y);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    #[test]
    fn epsilon_orbits() {
        let t = orbits(&standard::epsilon2(), Subset::All).unwrap();
        assert_eq!(t.total(), 16);
        // weight 1 words form one orbit; the weight-2 words split into
        // the three codewords and the six others
        assert_eq!(t.sizes(), vec![1, 6, 3, 6]);
    }

    #[test]
    fn layers_cover_each_weight_once() {
        let mut layer = vec![KWord::zero(4)];
        for w in 1..=4 {
            layer = next_layer(4, &layer);
            let binom = [1, 4, 6, 4, 1][w];
            assert_eq!(layer.len(), binom * 3usize.pow(w as u32));
        }
    }

    #[test]
    fn full_space_radius() {
        let c = covering_radius(&KCode::full(3)).unwrap();
        assert_eq!((c.radius, c.cosets.len()), (0, 1));
        let g = covering_radius(&standard::gamma1()).unwrap();
        assert_eq!(g.radius, 1);
    }
}
