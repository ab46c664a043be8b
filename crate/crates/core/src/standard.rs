//! Named codes.

use crate::code::KCode;
use crate::error::{Error, Result};
use crate::symbol::KSymbol;
use crate::word::{KWord, MAX_LEN};

fn words(rows: &[&str]) -> Vec<KWord> {
    rows.iter()
        .map(|r| r.parse().expect("built-in generator parses"))
        .collect()
}

/// `gamma_1 = {0, a}`.
pub fn gamma1() -> KCode {
    KCode::span(&words(&["a"])).unwrap()
}

/// `epsilon_2 = {00, aa, bb, cc}`.
pub fn epsilon2() -> KCode {
    KCode::span(&words(&["aa", "bb"])).unwrap()
}

/// `delta_n`, the even subcode of `gamma_1^n`.
pub fn delta(n: usize) -> KCode {
    assert!((1..=MAX_LEN).contains(&n));
    let gens = (0..n.saturating_sub(1)).map(|i| KWord::from_planes(n, 0b11 << i, 0));
    KCode::from_words(n, gens)
}

/// `delta_n^+ = delta_n + {0, b^n}`.
pub fn delta_plus(n: usize) -> KCode {
    delta(n).extended(KWord::constant(n, KSymbol::B))
}

/// The Hexacode `C6`.
pub fn hexacode() -> KCode {
    KCode::span(&words(&[
        "a0a0bb", "a0bba0", "bba0a0", "00aaaa", "aa00aa", "b0b0ca",
    ]))
    .unwrap()
}

/// The shorter Hexacode `C5`, the child of `C6` at the first position.
pub fn shorter_hexacode() -> KCode {
    hexacode().shorten(0, KSymbol::A)
}

/// The odd Hexacode `O6`: the non-even self-dual `[6,3]` code without
/// words of weight 1 or 2.
pub fn odd_hexacode() -> KCode {
    KCode::span(&words(&["a000ab", "b00acb", "0a0cab", "0b0aba", "00a0ba", "00bcca"])).unwrap()
}

/// Arithmetic in `F4` with `a, b, c` as `1, w, w^2`.
mod f4 {
    use crate::symbol::KSymbol;

    const LOG: [u8; 4] = [0, 0, 1, 2];
    const EXP: [u8; 3] = [1, 2, 3];

    pub fn mul(x: u8, y: u8) -> u8 {
        if x == 0 || y == 0 {
            0
        } else {
            EXP[((LOG[x as usize] + LOG[y as usize]) % 3) as usize]
        }
    }

    pub fn inv(x: u8) -> u8 {
        debug_assert!(x != 0);
        EXP[((3 - LOG[x as usize]) % 3) as usize]
    }

    pub fn symbol(x: u8) -> KSymbol {
        KSymbol::from_index(x)
    }
}

/// `F4`-nullspace of a matrix with entries `0..4`, as row vectors.
fn f4_nullspace(h: &[Vec<u8>], ncols: usize) -> Vec<Vec<u8>> {
    let mut a: Vec<Vec<u8>> = h.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = f4::inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = f4::mul(*x, inv);
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..ncols {
                    a[i][j] ^= f4::mul(f, a[r][j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u8; ncols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            // over characteristic 2, -x = x
            v[pc] = a[i][free];
        }
        out.push(v);
    }
    out
}

fn hamming_vectors(m: usize) -> Vec<Vec<u8>> {
    assert!(m >= 2, "Hamming codes need m >= 2");
    let n = (4usize.pow(m as u32) - 1) / 3;
    assert!(n < MAX_LEN, "Hamming code length {n} exceeds {MAX_LEN}");
    // projective points: columns whose first nonzero entry is 1
    let mut cols = Vec::with_capacity(n);
    for x in 1..4usize.pow(m as u32) {
        let digits: Vec<u8> = (0..m).map(|k| (x >> (2 * k) & 3) as u8).collect();
        if digits.iter().find(|&&d| d != 0) == Some(&1) {
            cols.push(digits);
        }
    }
    let h: Vec<Vec<u8>> = (0..m).map(|row| cols.iter().map(|c| c[row]).collect()).collect();
    f4_nullspace(&h, n)
}

fn additive_span(n: usize, vectors: &[Vec<u8>]) -> KCode {
    let mut gens = Vec::new();
    for v in vectors {
        for scalar in [1u8, 2] {
            let syms: Vec<KSymbol> = v.iter().map(|&x| f4::symbol(f4::mul(scalar, x))).collect();
            gens.push(KWord::from_symbols(&syms).unwrap());
        }
    }
    KCode::from_words(n, gens)
}

/// The Hamming code `H_m` of length `(4^m - 1) / 3`.
pub fn hamming(m: usize) -> KCode {
    let vs = hamming_vectors(m);
    additive_span(vs[0].len(), &vs)
}

/// The extended Hamming code of length 6: `H_2` with one weighted `F4`
/// parity position, the first weighting (in lexicographic order of the
/// weights) reaching minimum weight 4.
///
/// For `m >= 3` no `F4`-linear extension reaches weight 4, so only `m = 2`
/// is provided.
pub fn extended_hamming(m: usize) -> Result<KCode> {
    if m != 2 {
        return Err(Error::UnknownCode(format!("ext-H{m}")));
    }
    let base = hamming_vectors(m);
    let n = base[0].len();
    for code in 0..3usize.pow(n as u32) {
        let weights: Vec<u8> = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as u8 + 1).collect();
        let vs: Vec<Vec<u8>> = base
            .iter()
            .map(|v| {
                let mut v = v.clone();
                let parity = v.iter().zip(&weights).fold(0, |a, (&x, &w)| a ^ f4::mul(x, w));
                v.push(parity);
                v
            })
            .collect();
        let c = additive_span(n + 1, &vs);
        if c.min_weight() == Ok(4) {
            return Ok(c);
        }
    }
    unreachable!("the hexacode is an extension of H_2")
}

fn trailing_number(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Looks up a code by name: `gamma1`, `epsilon2`, `deltaN`, `deltaN+`,
/// `C5`, `C6` (or `hexacode`), `O6`, `Hm`, `ext-Hm`, with optional
/// powers written `name^k`, e.g. `gamma1^3`.
pub fn standard_code(name: &str) -> Result<KCode> {
    let unknown = || Error::UnknownCode(name.to_string());
    let name = name.trim();
    if let Some((base, k)) = name.rsplit_once('^') {
        let k: usize = k.parse().map_err(|_| unknown())?;
        let c = standard_code(base)?;
        if k == 0 || k * c.len() > MAX_LEN {
            return Err(unknown());
        }
        return Ok(c.power(k));
    }
    let lower = name.to_lowercase();
    let code = match lower.as_str() {
        "gamma1" | "γ1" => gamma1(),
        "epsilon2" | "ε2" => epsilon2(),
        "c5" => shorter_hexacode(),
        "c6" | "hexacode" => hexacode(),
        "o6" => odd_hexacode(),
        _ => {
            if let Some(rest) = lower.strip_suffix('+') {
                let n = trailing_number(rest, "delta")
                    .or_else(|| trailing_number(rest, "δ"))
                    .filter(|n| (1..=MAX_LEN).contains(n))
                    .ok_or_else(unknown)?;
                delta_plus(n)
            } else if let Some(n) =
                trailing_number(&lower, "delta").or_else(|| trailing_number(&lower, "δ"))
            {
                if !(1..=MAX_LEN).contains(&n) {
                    return Err(unknown());
                }
                delta(n)
            } else if let Some(m) = trailing_number(&lower, "ext-h") {
                extended_hamming(m).map_err(|_| unknown())?
            } else if let Some(m) = trailing_number(&lower, "h") {
                if !(2..=3).contains(&m) {
                    return Err(unknown());
                }
                hamming(m)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_codes() {
        assert_eq!(delta(3).dim2(), 2);
        assert_eq!(delta_plus(3).weight_distribution().unwrap(), vec![1, 0, 3, 4]);
        assert!(delta_plus(4).is_self_dual() && delta_plus(4).is_even());
    }

    #[test]
    fn hexacodes() {
        let c6 = hexacode();
        assert_eq!(c6.dim2(), 6);
        assert!(c6.is_self_dual() && c6.is_even());
        assert_eq!(
            shorter_hexacode().weight_distribution().unwrap(),
            vec![1, 0, 0, 10, 15, 6]
        );
        let o6 = odd_hexacode();
        assert!(o6.is_self_dual() && !o6.is_even());
        assert_eq!(o6.weight_distribution().unwrap(), vec![1, 0, 0, 8, 21, 24, 10]);
    }

    #[test]
    fn hamming_is_perfect() {
        let h2 = hamming(2);
        assert_eq!((h2.len(), h2.dim2()), (5, 6));
        assert_eq!(h2.min_weight().unwrap(), 3);
        // radius-1 balls about codewords are disjoint and cover K^5
        let mut seen = vec![false; 1 << 10];
        for x in h2.codewords() {
            let mut ball = vec![x];
            for i in 0..5 {
                for s in KSymbol::NONZERO {
                    let mut y = KWord::zero(5);
                    y.set(i, s);
                    ball.push(x + y);
                }
            }
            for y in ball {
                let (p, q) = y.planes();
                let k = (p | q << 5) as usize;
                assert!(!seen[k]);
                seen[k] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        let e2 = extended_hamming(2).unwrap();
        assert_eq!(e2.weight_distribution().unwrap(), vec![1, 0, 0, 0, 45, 0, 18]);
        assert!(e2.is_self_dual() && e2.is_even());
        assert!(extended_hamming(3).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(standard_code("gamma1^2").unwrap(), gamma1().power(2));
        assert_eq!(standard_code("delta3+").unwrap(), delta_plus(3));
        assert_eq!(standard_code("H2").unwrap(), hamming(2));
        assert!(standard_code("zeta9").is_err());
    }
}
