use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{IndexedAlgebra, TableAlgebra};
use crate::check::advance;
use crate::error::{Error, Result};

/// Largest carrier for which all congruences are enumerated by default.
pub const DEFAULT_CONGRUENCE_BOUND: usize = 64;

/// An equivalence relation on carrier indices, stored as block labels
/// numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    blocks: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }

    fn into_congruence(mut self) -> Congruence {
        let labels: Vec<usize> = (0..self.0.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&labels)
    }
}

impl Congruence {
    /// Canonicalise arbitrary labels: equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let blocks = labels
            .iter()
            .map(|&l| match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, b)) => b,
                None => {
                    let b = map.len();
                    map.push((l, b));
                    b
                }
            })
            .collect();
        Congruence { blocks }
    }

    /// Build from a relation, checking that it is an equivalence.
    pub fn from_relation(size: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut labels = vec![usize::MAX; size];
        for a in 0..size {
            if !rel(a, a) {
                return Err(Error::NotAnEquivalence);
            }
            if labels[a] == usize::MAX {
                labels[a] = a;
                for b in a + 1..size {
                    if rel(a, b) {
                        if labels[b] != usize::MAX {
                            return Err(Error::NotAnEquivalence);
                        }
                        labels[b] = a;
                    }
                }
            }
        }
        let c = Congruence::from_labels(&labels);
        for a in 0..size {
            for b in 0..size {
                if rel(a, b) != c.related(a, b) {
                    return Err(Error::NotAnEquivalence);
                }
            }
        }
        Ok(c)
    }

    /// The identity relation `Δ`.
    pub fn identity(size: usize) -> Self {
        Congruence { blocks: (0..size).collect() }
    }

    /// The total relation `∇`.
    pub fn total(size: usize) -> Self {
        Congruence { blocks: vec![0; size] }
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks[x]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.blocks[a] == self.blocks[b]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Blocks as sorted member lists, ordered by least member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let b = self.blocks[x];
        (0..self.size()).filter(|&y| self.blocks[y] == b).collect()
    }

    /// `self ⊆ other`.
    pub fn le(&self, other: &Congruence) -> bool {
        let mut rep = vec![usize::MAX; self.num_blocks()];
        for (x, &b) in self.blocks.iter().enumerate() {
            if rep[b] == usize::MAX {
                rep[b] = x;
            } else if !other.related(rep[b], x) {
                return false;
            }
        }
        true
    }

    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for c in [self, other] {
            let mut rep = vec![usize::MAX; c.num_blocks()];
            for (x, &b) in c.blocks.iter().enumerate() {
                if rep[b] == usize::MAX {
                    rep[b] = x;
                } else {
                    uf.union(rep[b], x);
                }
            }
        }
        uf.into_congruence()
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let labels: Vec<usize> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| a * other.size().max(1) + b)
            .collect();
        Congruence::from_labels(&labels)
    }

    /// Compatibility with `q`: related arguments in one position give related
    /// results, for every choice of the remaining arguments.
    pub fn is_compatible<A: IndexedAlgebra>(&self, alg: &A) -> bool {
        let mut rep = vec![usize::MAX; self.num_blocks()];
        let mut edges = Vec::new();
        for (x, &b) in self.blocks.iter().enumerate() {
            if rep[b] == usize::MAX {
                rep[b] = x;
            } else {
                edges.push((rep[b], x));
            }
        }
        edges.iter().all(|&(a, b)| translations_agree(alg, a, b, |u, v| self.related(u, v)))
    }
}

/// Apply every basic translation to `(a, b)`, calling `visit` on the image
/// pair; stops early when `visit` returns false.
fn translations_agree<A: IndexedAlgebra>(alg: &A, a: usize, b: usize, mut visit: impl FnMut(usize, usize) -> bool) -> bool {
    let n = alg.dim().get();
    let s = alg.size();
    let mut others = vec![0usize; n];
    let mut args_a = vec![0usize; n + 1];
    let mut args_b = vec![0usize; n + 1];
    for pos in 0..=n {
        others.iter_mut().for_each(|o| *o = 0);
        loop {
            let mut k = 0;
            for slot in 0..=n {
                if slot == pos {
                    args_a[slot] = a;
                    args_b[slot] = b;
                } else {
                    args_a[slot] = others[k];
                    args_b[slot] = others[k];
                    k += 1;
                }
            }
            let qa = alg.q(args_a[0], &args_a[1..]);
            let qb = alg.q(args_b[0], &args_b[1..]);
            if qa != qb && !visit(qa, qb) {
                return false;
            }
            if !advance(&mut others, s) {
                break;
            }
        }
    }
    true
}

fn generate<A: IndexedAlgebra>(alg: &A, pairs: &[(usize, usize)]) -> Congruence {
    let mut uf = UnionFind::new(alg.size());
    let mut work: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    // Unions of basic-translation images of the processed edges are enough:
    // the edges span each class and translations are unary polynomials.
    while let Some((a, b)) = work.pop() {
        let mut fresh = Vec::new();
        translations_agree(alg, a, b, |u, v| {
            if uf.union(u, v) {
                fresh.push((u, v));
            }
            true
        });
        work.extend(fresh);
    }
    uf.into_congruence()
}

/// The least congruence containing `pairs`.
pub fn congruence_generated<A: IndexedAlgebra>(alg: &A, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let s = alg.size();
    for &(a, b) in pairs {
        for x in [a, b] {
            if x >= s {
                return Err(Error::IndexOutOfRange { index: x, size: s });
            }
        }
    }
    Ok(generate(alg, pairs))
}

/// Every congruence of `alg`, as joins of principal congruences, ordered by
/// number of blocks descending and then by labels.
pub fn all_congruences<A: IndexedAlgebra>(alg: &A, bound: usize) -> Result<Vec<Congruence>> {
    let s = alg.size();
    if s > bound {
        return Err(Error::CarrierTooLarge { size: s, bound });
    }
    match TableAlgebra::from_algebra(alg) {
        Ok(t) => Ok(enumerate(&t)),
        Err(_) => Ok(enumerate(alg)),
    }
}

fn enumerate<A: IndexedAlgebra>(alg: &A) -> Vec<Congruence> {
    let s = alg.size();
    let mut principal: Vec<Congruence> = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            let c = generate(alg, &[(a, b)]);
            if !principal.contains(&c) {
                principal.push(c);
            }
        }
    }
    let mut all = vec![Congruence::identity(s)];
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            for p in &principal {
                let j = c.join(p);
                if !all.contains(&j) {
                    all.push(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|x, y| y.num_blocks().cmp(&x.num_blocks()).then_with(|| x.cmp(y)));
    all
}
