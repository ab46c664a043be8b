//! Brute-force enumerations shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

use kleinian::{KCode, KWord};

pub fn all_words(n: usize) -> Vec<KWord> {
    (0..1u128 << (2 * n)).map(|k| KWord::from_lex_key(n, k)).collect()
}

/// Every self-dual code of length `n` (even ones only when asked), grown one
/// word at a time from the zero code.
pub fn all_self_dual(n: usize, even: bool) -> HashSet<KCode> {
    let words: Vec<KWord> = all_words(n)
        .into_iter()
        .filter(|w| !w.is_zero() && (!even || w.weight() % 2 == 0))
        .collect();
    let mut layer: HashSet<KCode> = HashSet::from([KCode::zero(n)]);
    let mut done = HashSet::new();
    while !layer.is_empty() {
        let mut next = HashSet::new();
        for c in &layer {
            if c.dim2() == n {
                done.insert(c.clone());
                continue;
            }
            for w in &words {
                if !c.contains(w) && c.basis().iter().all(|b| !b.inner(w).unwrap()) {
                    next.insert(c.extended(*w));
                }
            }
        }
        layer = next;
    }
    done
}

/// All subspaces of `K^n`, by closure from the zero code.
pub fn all_codes(n: usize) -> Vec<KCode> {
    let words = all_words(n);
    let mut seen: HashSet<KCode> = HashSet::from([KCode::zero(n)]);
    let mut layer = vec![KCode::zero(n)];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for c in &layer {
            for w in &words {
                if !c.contains(w) {
                    let d = c.extended(*w);
                    if seen.insert(d.clone()) {
                        next.push(d);
                    }
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}
