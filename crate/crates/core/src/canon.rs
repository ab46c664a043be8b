//! Canonical forms, equivalence and automorphism groups.
//!
//! A code is encoded as a coloured graph: one vertex per position, one per
//! (position, nonzero symbol) cell and one per nonzero codeword, with a word
//! joined to the cell it occupies at each position of its support. Graph
//! automorphisms preserving the three vertex kinds are exactly the monomial
//! automorphisms of the code. The search is individualization-refinement
//! over ordered partitions, individualizing positions and cells only; a
//! leaf's certificate is the row-reduced image of the code together with
//! the labels of the individualized vertices.

use num_bigint::BigUint;
use num_traits::One;

use crate::code::KCode;
use crate::error::{Error, Result};
use crate::group::{GroupElement, SymbolPerm};
use crate::symbol::KSymbol;

/// Largest `dim2` accepted by the canonizer (codeword vertices are explicit).
pub const CANON_DIM2_LIMIT: usize = 20;

/// `Aut(C)` as an exact order and a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutResult {
    pub order: BigUint,
    pub generators: Vec<GroupElement>,
}

/// The outcome of one canonization.
#[derive(Debug, Clone)]
pub struct CanonForm {
    /// The canonical representative of the orbit.
    pub code: KCode,
    /// A group element mapping the input onto `code`.
    pub labeling: GroupElement,
    pub aut: AutResult,
    /// Search tree nodes visited.
    pub nodes: u64,
}

struct Graph {
    n: usize,
    nv: usize,
    offsets: Vec<u32>,
    targets: Vec<u32>,
    /// Initial ordered partition: vertex order and cell boundaries.
    init_order: Vec<u32>,
    init_starts: Vec<u32>,
}

impl Graph {
    fn build(c: &KCode) -> Graph {
        let n = c.len();
        let words: Vec<_> = c.codewords().filter(|x| !x.is_zero()).collect();
        let nv = 4 * n + words.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for i in 0..n {
            for s in 0..3 {
                let cell = (n + 3 * i + s) as u32;
                adj[i].push(cell);
                adj[cell as usize].push(i as u32);
            }
        }
        for (k, x) in words.iter().enumerate() {
            let wv = (4 * n + k) as u32;
            for i in 0..n {
                let s = x.get(i);
                if !s.is_zero() {
                    let cell = (n + 3 * i + s.index() as usize - 1) as u32;
                    adj[wv as usize].push(cell);
                    adj[cell as usize].push(wv);
                }
            }
        }
        let mut offsets = Vec::with_capacity(nv + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for a in &adj {
            targets.extend_from_slice(a);
            offsets.push(targets.len() as u32);
        }
        // positions, cells, then words grouped by weight
        let mut word_ids: Vec<u32> = (0..words.len() as u32).collect();
        word_ids.sort_by_key(|&k| words[k as usize].weight());
        let mut init_order: Vec<u32> = (0..4 * n as u32).collect();
        let mut init_starts = vec![0u32, n as u32];
        if n > 0 {
            init_starts.push(4 * n as u32);
        }
        let mut last_w = usize::MAX;
        for &k in &word_ids {
            let w = words[k as usize].weight();
            if w != last_w && last_w != usize::MAX {
                init_starts.push(init_order.len() as u32);
            }
            last_w = w;
            init_order.push(4 * n as u32 + k);
        }
        init_starts.retain(|&s| (s as usize) < nv);
        init_starts.dedup();
        Graph {
            n,
            nv,
            offsets,
            targets,
            init_order,
            init_starts,
        }
    }

    fn neighbours(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }
}

/// Ordered partition: `color[v]` is the start index of the cell of `v`.
#[derive(Clone)]
struct Partition {
    order: Vec<u32>,
    pos: Vec<u32>,
    color: Vec<u32>,
    cell_end: Vec<u32>,
}

impl Partition {
    fn initial(g: &Graph) -> Partition {
        let nv = g.nv;
        let mut p = Partition {
            order: g.init_order.clone(),
            pos: vec![0; nv],
            color: vec![0; nv],
            cell_end: vec![0; nv],
        };
        for (k, &v) in p.order.iter().enumerate() {
            p.pos[v as usize] = k as u32;
        }
        for (j, &s) in g.init_starts.iter().enumerate() {
            let e = g.init_starts.get(j + 1).copied().unwrap_or(nv as u32);
            p.cell_end[s as usize] = e;
            for k in s..e {
                p.color[p.order[k as usize] as usize] = s;
            }
        }
        p
    }

    fn individualize(&mut self, v: u32) {
        let s = self.color[v as usize];
        let e = self.cell_end[s as usize];
        if e - s == 1 {
            return;
        }
        let pv = self.pos[v as usize];
        let u = self.order[s as usize];
        self.order.swap(s as usize, pv as usize);
        self.pos[u as usize] = pv;
        self.pos[v as usize] = s;
        for k in s + 1..e {
            self.color[self.order[k as usize] as usize] = s + 1;
        }
        self.cell_end[s as usize] = s + 1;
        self.cell_end[s as usize + 1] = e;
    }

    /// Iterated refinement: every cell is split by the sorted multiset of
    /// neighbour colours until nothing changes.
    fn refine(&mut self, g: &Graph, sig: &mut Vec<u32>, idx: &mut Vec<(u32, u32, u32)>) {
        loop {
            let mut splits: Vec<(u32, Vec<u32>, Vec<u32>)> = Vec::new();
            let mut s = 0u32;
            while (s as usize) < g.nv {
                let e = self.cell_end[s as usize];
                if e - s > 1 {
                    sig.clear();
                    idx.clear();
                    for k in s..e {
                        let v = self.order[k as usize];
                        let from = sig.len() as u32;
                        sig.extend(g.neighbours(v).iter().map(|&w| self.color[w as usize]));
                        let to = sig.len() as u32;
                        sig[from as usize..to as usize].sort_unstable();
                        idx.push((v, from, to));
                    }
                    let key = |t: &(u32, u32, u32)| &sig[t.1 as usize..t.2 as usize];
                    let first = key(&idx[0]);
                    if idx.iter().any(|t| key(t) != first) {
                        idx.sort_by(|a, b| key(a).cmp(key(b)).then(a.0.cmp(&b.0)));
                        let mut bounds = Vec::new();
                        for j in 1..idx.len() {
                            if key(&idx[j]) != key(&idx[j - 1]) {
                                bounds.push(s + j as u32);
                            }
                        }
                        splits.push((s, idx.iter().map(|t| t.0).collect(), bounds));
                    }
                }
                s = e;
            }
            if splits.is_empty() {
                return;
            }
            for (s, verts, bounds) in splits {
                let e = s + verts.len() as u32;
                let mut start = s;
                let mut b = bounds.iter().peekable();
                for (j, &v) in verts.iter().enumerate() {
                    let k = s + j as u32;
                    if b.peek() == Some(&&k) {
                        self.cell_end[start as usize] = k;
                        start = k;
                        b.next();
                    }
                    self.order[k as usize] = v;
                    self.pos[v as usize] = k;
                    self.color[v as usize] = start;
                }
                self.cell_end[start as usize] = e;
            }
        }
    }

    /// First non-singleton cell among position and cell vertices.
    fn target(&self, limit: u32) -> Option<(u32, u32)> {
        let mut s = 0u32;
        while s < limit {
            let e = self.cell_end[s as usize];
            if e - s > 1 {
                return Some((s, e));
            }
            s = e;
        }
        None
    }
}

struct Leaf {
    cert: Vec<u64>,
    elem: GroupElement,
    seq: Vec<u32>,
}

struct Search<'a> {
    g: &'a Graph,
    code: &'a KCode,
    first: Option<Leaf>,
    best_is_first: bool,
    best: Option<Leaf>,
    gens: Vec<GroupElement>,
    gen_perms: Vec<Vec<u32>>,
    nodes: u64,
    node_limit: u64,
    sig: Vec<u32>,
    idx: Vec<(u32, u32, u32)>,
}

/// The action of a group element on position and cell vertices.
fn vertex_perm(n: usize, h: &GroupElement) -> Vec<u32> {
    let mut p = vec![0u32; 4 * n];
    for i in 0..n {
        let si = h.sigma()[i];
        p[i] = si as u32;
        for (s, sym) in KSymbol::NONZERO.iter().enumerate() {
            let img = h.tau()[i].apply(*sym).index() as usize - 1;
            p[n + 3 * i + s] = (n + 3 * si + img) as u32;
        }
    }
    p
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// Union-find of the orbits of the generators that fix `prefix` pointwise.
fn orbits_fixing(perms: &[Vec<u32>], prefix: &[u32], size: usize) -> Vec<u32> {
    let mut parent: Vec<u32> = (0..size as u32).collect();
    for p in perms {
        if prefix.iter().all(|&v| p[v as usize] == v) {
            for (x, &y) in p.iter().enumerate() {
                let (a, b) = (find(&mut parent, x as u32), find(&mut parent, y));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
    }
    parent
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn leaf(&self, part: &Partition, seq: &[u32]) -> Leaf {
        let n = self.g.n;
        let sigma: Vec<usize> = (0..n).map(|i| part.color[i] as usize).collect();
        let tau: Vec<SymbolPerm> = (0..n)
            .map(|i| {
                let cols: Vec<u32> = (0..3).map(|s| part.color[n + 3 * i + s]).collect();
                let mut images = [KSymbol::Zero; 3];
                for s in 0..3 {
                    let rank = cols.iter().filter(|&&c| c < cols[s]).count();
                    images[s] = KSymbol::NONZERO[rank];
                }
                SymbolPerm::new(images).expect("discrete cells give a permutation")
            })
            .collect();
        let elem = GroupElement::new(sigma, tau).expect("discrete positions give a permutation");
        let image = elem.apply_code(self.code);
        let vp = vertex_perm(n, &elem);
        let mut cert = Vec::with_capacity(2 * image.dim2() + seq.len());
        for r in image.basis() {
            let (p, q) = r.planes();
            cert.push(p);
            cert.push(q);
        }
        cert.extend(seq.iter().map(|&v| vp[v as usize] as u64));
        Leaf {
            cert,
            elem,
            seq: seq.to_vec(),
        }
    }

    fn add_generator(&mut self, h: GroupElement) {
        debug_assert_eq!(h.apply_code(self.code), *self.code);
        if h.is_identity() || self.gens.contains(&h) {
            return;
        }
        self.gen_perms.push(vertex_perm(self.g.n, &h));
        self.gens.push(h);
    }

    /// Returns the depth to jump back to, if a subtree was found redundant.
    fn visit(&mut self, mut part: Partition, seq: &mut Vec<u32>) -> Result<Option<usize>> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::BudgetExhausted);
        }
        part.refine(self.g, &mut self.sig, &mut self.idx);
        let limit = 4 * self.g.n as u32;
        let Some((s, e)) = part.target(limit) else {
            return Ok(self.process_leaf(&part, seq));
        };
        let mut children: Vec<u32> = part.order[s as usize..e as usize].to_vec();
        children.sort_unstable();
        let depth = seq.len();
        let mut explored: Vec<u32> = Vec::new();
        let mut uf: Option<(usize, Vec<u32>)> = None;
        for w in children {
            if !explored.is_empty() {
                if uf.as_ref().map(|u| u.0) != Some(self.gen_perms.len()) {
                    uf = Some((
                        self.gen_perms.len(),
                        orbits_fixing(&self.gen_perms, seq, limit as usize),
                    ));
                }
                let parent = &mut uf.as_mut().unwrap().1;
                let rw = find(parent, w);
                if explored.iter().any(|&x| find(parent, x) == rw) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = part.clone();
            child.individualize(w);
            seq.push(w);
            let r = self.visit(child, seq)?;
            seq.pop();
            if let Some(d) = r {
                if d < depth {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    }

    fn process_leaf(&mut self, part: &Partition, seq: &[u32]) -> Option<usize> {
        let leaf = self.leaf(part, seq);
        let Some(first) = &self.first else {
            self.first = Some(leaf);
            self.best_is_first = true;
            return None;
        };
        if leaf.cert == first.cert {
            let h = leaf.elem.inverse().compose(&first.elem);
            let d = common_prefix(&first.seq, &leaf.seq);
            self.add_generator(h);
            return Some(d);
        }
        if !self.best_is_first {
            let best = self.best.as_ref().unwrap();
            if leaf.cert == best.cert {
                let h = leaf.elem.inverse().compose(&best.elem);
                let d = common_prefix(&best.seq, &leaf.seq);
                self.add_generator(h);
                return Some(d);
            }
        }
        let best_cert = if self.best_is_first {
            &first.cert
        } else {
            &self.best.as_ref().unwrap().cert
        };
        if leaf.cert < *best_cert {
            self.best = Some(leaf);
            self.best_is_first = false;
        }
        None
    }
}

/// Canonical form, labeling and automorphism group in one search.
pub fn canonical_form(c: &KCode) -> Result<CanonForm> {
    canonical_form_with_limit(c, u64::MAX)
}

/// As [`canonical_form`], failing with [`Error::BudgetExhausted`] after
/// `node_limit` search nodes.
pub fn canonical_form_with_limit(c: &KCode, node_limit: u64) -> Result<CanonForm> {
    if c.dim2() > CANON_DIM2_LIMIT {
        return Err(Error::TooLarge {
            dim2: c.dim2(),
            limit: CANON_DIM2_LIMIT,
        });
    }
    let n = c.len();
    let g = Graph::build(c);
    let mut search = Search {
        g: &g,
        code: c,
        first: None,
        best_is_first: true,
        best: None,
        gens: Vec::new(),
        gen_perms: Vec::new(),
        nodes: 0,
        node_limit,
        sig: Vec::new(),
        idx: Vec::new(),
    };
    let mut seq = Vec::new();
    search.visit(Partition::initial(&g), &mut seq)?;
    let first = search.first.take().expect("search reaches a leaf");
    let best = if search.best_is_first {
        &first
    } else {
        search.best.as_ref().unwrap()
    };
    let labeling = best.elem.clone();
    let code = labeling.apply_code(c);

    let mut order = BigUint::one();
    for l in 0..first.seq.len() {
        let mut parent = orbits_fixing(&search.gen_perms, &first.seq[..l], 4 * n);
        let root = find(&mut parent, first.seq[l]);
        let size = (0..4 * n as u32)
            .filter(|&x| find(&mut parent, x) == root)
            .count();
        order *= BigUint::from(size);
    }
    Ok(CanonForm {
        code,
        labeling,
        aut: AutResult {
            order,
            generators: search.gens,
        },
        nodes: search.nodes,
    })
}

/// The canonical representative of the equivalence class of `c`.
pub fn canonical(c: &KCode) -> Result<KCode> {
    Ok(canonical_form(c)?.code)
}

pub fn aut(c: &KCode) -> Result<AutResult> {
    Ok(canonical_form(c)?.aut)
}

/// A witness `g` with `g(c) = d`, or `None` when the codes are inequivalent.
pub fn equivalent(c: &KCode, d: &KCode) -> Result<Option<GroupElement>> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: c.len(),
            found: d.len(),
        });
    }
    if c.dim2() != d.dim2() || c.weight_distribution()? != d.weight_distribution()? {
        return Ok(None);
    }
    let fc = canonical_form(c)?;
    let fd = canonical_form(d)?;
    if fc.code != fd.code {
        return Ok(None);
    }
    Ok(Some(fd.labeling.inverse().compose(&fc.labeling)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::all_elements;
    use crate::word::KWord;

    fn code(rows: &[&str]) -> KCode {
        let gens: Vec<KWord> = rows.iter().map(|r| r.parse().unwrap()).collect();
        KCode::span(&gens).unwrap()
    }

    #[test]
    fn small_automorphism_orders() {
        assert_eq!(aut(&code(&["a"])).unwrap().order, BigUint::from(2u32));
        assert_eq!(aut(&code(&["aa", "bb"])).unwrap().order, BigUint::from(12u32));
        assert_eq!(aut(&KCode::zero(2)).unwrap().order, BigUint::from(72u32));
    }

    #[test]
    fn generators_fix_the_code() {
        let c = code(&["aab0", "0bba", "c0c0"]);
        let a = aut(&c).unwrap();
        for g in &a.generators {
            assert_eq!(g.apply_code(&c), c);
        }
    }

    #[test]
    fn orbit_constancy_and_witness() {
        let c = code(&["ab0", "0ca"]);
        let canon = canonical(&c).unwrap();
        for g in all_elements(3).iter().step_by(37) {
            let d = g.apply_code(&c);
            assert_eq!(canonical(&d).unwrap(), canon);
            let w = equivalent(&c, &d).unwrap().unwrap();
            assert_eq!(w.apply_code(&c), d);
        }
        assert!(equivalent(&code(&["aa", "bb"]), &code(&["a0", "0a"]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn canonical_is_idempotent() {
        let c = code(&["abc0", "0bca"]);
        let k = canonical(&c).unwrap();
        assert_eq!(canonical(&k).unwrap(), k);
    }
}
