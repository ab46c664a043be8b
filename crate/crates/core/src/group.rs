//! The monomial group `S3^n : S_n` acting on `K^n`.

use std::fmt;
use std::str::FromStr;

use crate::code::KCode;
use crate::error::{Error, Result};
use crate::symbol::KSymbol;
use crate::word::KWord;

/// A permutation of the nonzero symbols, stored as the images of `a, b, c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolPerm([KSymbol; 3]);

impl SymbolPerm {
    pub const IDENTITY: SymbolPerm = SymbolPerm([KSymbol::A, KSymbol::B, KSymbol::C]);

    /// All six permutations, identity first.
    pub fn all() -> [SymbolPerm; 6] {
        use KSymbol::*;
        [
            SymbolPerm([A, B, C]),
            SymbolPerm([A, C, B]),
            SymbolPerm([B, A, C]),
            SymbolPerm([B, C, A]),
            SymbolPerm([C, A, B]),
            SymbolPerm([C, B, A]),
        ]
    }

    pub fn new(images: [KSymbol; 3]) -> Result<Self> {
        let mut seen = [false; 4];
        for s in images {
            if s.is_zero() || seen[s.index() as usize] {
                return Err(Error::Precondition(format!(
                    "{}{}{} is not a permutation of abc",
                    images[0], images[1], images[2]
                )));
            }
            seen[s.index() as usize] = true;
        }
        Ok(SymbolPerm(images))
    }

    pub fn images(&self) -> [KSymbol; 3] {
        self.0
    }

    #[inline]
    pub fn apply(&self, s: KSymbol) -> KSymbol {
        match s {
            KSymbol::Zero => KSymbol::Zero,
            _ => self.0[s.index() as usize - 1],
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &SymbolPerm) -> SymbolPerm {
        SymbolPerm(other.0.map(|s| self.apply(s)))
    }

    pub fn inverse(&self) -> SymbolPerm {
        let mut out = [KSymbol::Zero; 3];
        for (i, s) in self.0.iter().enumerate() {
            out[s.index() as usize - 1] = KSymbol::NONZERO[i];
        }
        SymbolPerm(out)
    }
}

/// An element `(sigma; tau_1, ..., tau_n)` acting by
/// `y[sigma(i)] = tau_i(x_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    sigma: Vec<usize>,
    tau: Vec<SymbolPerm>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            sigma: (0..n).collect(),
            tau: vec![SymbolPerm::IDENTITY; n],
        }
    }

    pub fn new(sigma: Vec<usize>, tau: Vec<SymbolPerm>) -> Result<Self> {
        let n = sigma.len();
        if tau.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: tau.len(),
            });
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::Precondition(format!(
                    "{sigma:?} is not a permutation"
                )));
            }
            seen[s] = true;
        }
        Ok(GroupElement { sigma, tau })
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau(&self) -> &[SymbolPerm] {
        &self.tau
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::identity(self.len())
    }

    pub fn apply_word(&self, x: &KWord) -> KWord {
        assert_eq!(x.len(), self.len(), "length mismatch");
        let mut y = KWord::zero(x.len());
        for i in 0..x.len() {
            let s = x.get(i);
            if !s.is_zero() {
                y.set(self.sigma[i], self.tau[i].apply(s));
            }
        }
        y
    }

    /// Image of a code; every symbol permutation is GF(2)-linear, so the
    /// image of a basis spans the image code.
    pub fn apply_code(&self, c: &KCode) -> KCode {
        KCode::from_words(c.len(), c.basis().iter().map(|r| self.apply_word(r)))
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.len(), other.len(), "length mismatch");
        let n = self.len();
        let sigma = (0..n).map(|i| self.sigma[other.sigma[i]]).collect();
        let tau = (0..n)
            .map(|i| self.tau[other.sigma[i]].compose(&other.tau[i]))
            .collect();
        GroupElement { sigma, tau }
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.len();
        let mut sigma = vec![0; n];
        let mut tau = vec![SymbolPerm::IDENTITY; n];
        for i in 0..n {
            sigma[self.sigma[i]] = i;
            tau[self.sigma[i]] = self.tau[i].inverse();
        }
        GroupElement { sigma, tau }
    }
}

/// `act(g, x)` for words.
pub fn act(g: &GroupElement, x: &KWord) -> KWord {
    g.apply_word(x)
}

/// `act(g, C)` for codes.
pub fn act_code(g: &GroupElement, c: &KCode) -> KCode {
    g.apply_code(c)
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma: Vec<String> = self.sigma.iter().map(usize::to_string).collect();
        let tau: Vec<String> = self
            .tau
            .iter()
            .map(|t| t.0.iter().map(|s| s.to_char()).collect())
            .collect();
        write!(f, "sigma=[{}]; tau=[{}]", sigma.join(","), tau.join(","))
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            column: 0,
            message: message.to_string(),
        };
        let (left, right) = s.split_once(';').ok_or_else(|| bad("expected `;`"))?;
        let list = |part: &str, key: &str| -> Result<Vec<String>> {
            let body = part
                .trim()
                .strip_prefix(key)
                .and_then(|r| r.trim_start().strip_prefix('='))
                .map(str::trim)
                .and_then(|r| r.strip_prefix('['))
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad(&format!("expected `{key}=[...]`")))?;
            Ok(body
                .split(',')
                .map(|t| t.trim().to_string())
                .filter(|t| !t.is_empty())
                .collect())
        };
        let sigma = list(left, "sigma")?
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| bad("bad sigma entry")))
            .collect::<Result<Vec<_>>>()?;
        let tau = list(right, "tau")?
            .iter()
            .map(|t| {
                let syms = t
                    .chars()
                    .map(KSymbol::from_char)
                    .collect::<Result<Vec<_>>>()?;
                let arr: [KSymbol; 3] = syms
                    .try_into()
                    .map_err(|_| bad("tau entries have three symbols"))?;
                SymbolPerm::new(arr)
            })
            .collect::<Result<Vec<_>>>()?;
        GroupElement::new(sigma, tau)
    }
}

/// Every element of `S3^n : S_n`, for brute-force checks at tiny `n`.
pub fn all_elements(n: usize) -> Vec<GroupElement> {
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    let perms6 = SymbolPerm::all();
    let mut out = Vec::new();
    for sigma in perms {
        let mut taus = vec![Vec::new()];
        for _ in 0..n {
            taus = taus
                .into_iter()
                .flat_map(|t: Vec<SymbolPerm>| {
                    perms6.iter().map(move |p| {
                        let mut t = t.clone();
                        t.push(*p);
                        t
                    })
                })
                .collect();
        }
        for tau in taus {
            out.push(GroupElement {
                sigma: sigma.clone(),
                tau,
            });
        }
    }
    out
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> KWord {
        s.parse().unwrap()
    }

    #[test]
    fn relabel_second_position() {
        let g: GroupElement = "sigma=[0,1]; tau=[abc,acb]".parse().unwrap();
        let c = KCode::span(&[w("aa"), w("bc")]).unwrap();
        let e2 = KCode::span(&[w("aa"), w("bb")]).unwrap();
        assert_eq!(g.apply_code(&c), e2);
    }

    #[test]
    fn composition_is_action() {
        let all = all_elements(2);
        assert_eq!(all.len(), 72);
        let x = w("ab");
        for g in all.iter().step_by(7) {
            for h in all.iter().step_by(5) {
                assert_eq!(g.compose(h).apply_word(&x), g.apply_word(&h.apply_word(&x)));
            }
            assert!(g.compose(&g.inverse()).is_identity());
        }
    }

    #[test]
    fn text_round_trip() {
        let g: GroupElement = "sigma=[2,0,1]; tau=[bca,abc,cba]".parse().unwrap();
        assert_eq!(g.to_string(), "sigma=[2,0,1]; tau=[bca,abc,cba]");
        assert!("sigma=[0,0]; tau=[abc,abc]".parse::<GroupElement>().is_err());
        assert!("sigma=[0]; tau=[aac]".parse::<GroupElement>().is_err());
    }

    #[test]
    fn action_preserves_inner_products() {
        let x = w("abc0a");
        let y = w("bb0ca");
        let g: GroupElement = "sigma=[4,2,0,1,3]; tau=[bca,acb,cba,bac,cab]"
            .parse()
            .unwrap();
        assert_eq!(
            g.apply_word(&x).inner(&g.apply_word(&y)).unwrap(),
            x.inner(&y).unwrap()
        );
        assert_eq!(g.apply_word(&x).weight(), x.weight());
    }
}
