use alloc::vec;
use alloc::vec::Vec;

use super::{AxiomReport, Suite};
use crate::algebra::{IndexSet, IndexedAlgebra};
use crate::check::{audit_law, AuditConfig};
use crate::derived::CenterParams;

/// The Boolean algebra `B_ij = {x : x ∧_i e_j = x}` with `∧_i`, `∨̄_i`,
/// `¬x = t_i(x, e_i, e_j)`, bottom `e_i` and top `e_j`.
///
/// Operations act on carrier indices of the ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanCenter {
    cp: CenterParams,
    size: usize,
    members: Vec<usize>,
    meet: Vec<usize>,
    join: Vec<usize>,
    neg: Vec<usize>,
    bottom: usize,
    top: usize,
}

pub fn boolean_center<A: IndexedAlgebra>(alg: &A, cp: CenterParams) -> BooleanCenter {
    let d = IndexSet::singleton(cp.i());
    let (ei, ej) = (alg.constant(cp.i()), alg.constant(cp.j()));
    let s = alg.size();
    let members: Vec<usize> = (0..s).filter(|&x| alg.t(d, x, ej, ei) == x).collect();
    let mut meet = vec![0; s * s];
    let mut join = vec![0; s * s];
    for &a in &members {
        for &b in &members {
            meet[a * s + b] = alg.t(d, a, b, ei);
            join[a * s + b] = alg.t(d, a, a, b);
        }
    }
    let neg = (0..s).map(|x| alg.t(d, x, ei, ej)).collect();
    BooleanCenter { cp, size: s, members, meet, join, neg, bottom: ei, top: ej }
}

impl BooleanCenter {
    pub fn params(&self) -> CenterParams {
        self.cp
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// Minimal members above the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        let bot = self.bottom;
        self.members
            .iter()
            .copied()
            .filter(|&a| a != bot && self.members.iter().all(|&b| b == bot || b == a || !self.le(b, a)))
            .collect()
    }

    /// Join of a list of members; the empty join is the bottom.
    pub fn join_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.bottom, |acc, &x| self.join(acc, x))
    }

    /// Closure of the carrier and the Boolean algebra laws, quantified over
    /// positions in `members()`.
    pub fn audit(&self, cfg: &AuditConfig) -> AxiomReport {
        let mem = &self.members;
        let s = mem.len();
        let m = |a: usize, b: usize| self.meet(mem[a], mem[b]);
        let j = |a: usize, b: usize| self.join(mem[a], mem[b]);
        let at = |x: usize| mem[x];
        let (bot, top) = (self.bottom, self.top);
        let mut out = Vec::new();
        out.push(audit_law("constants", &[], s, cfg, |_| self.contains(bot) && self.contains(top)));
        out.push(audit_law("closed", &["x", "y"], s, cfg, |v| {
            self.contains(m(v[0], v[1])) && self.contains(j(v[0], v[1])) && self.contains(self.neg(at(v[0])))
        }));
        let pos = |x: usize| mem.binary_search(&x).unwrap_or(0);
        out.push(audit_law("meet-assoc", &["x", "y", "z"], s, cfg, |v| {
            m(pos(m(v[0], v[1])), v[2]) == m(v[0], pos(m(v[1], v[2])))
        }));
        out.push(audit_law("join-assoc", &["x", "y", "z"], s, cfg, |v| {
            j(pos(j(v[0], v[1])), v[2]) == j(v[0], pos(j(v[1], v[2])))
        }));
        out.push(audit_law("meet-comm", &["x", "y"], s, cfg, |v| m(v[0], v[1]) == m(v[1], v[0])));
        out.push(audit_law("join-comm", &["x", "y"], s, cfg, |v| j(v[0], v[1]) == j(v[1], v[0])));
        out.push(audit_law("absorb-meet", &["x", "y"], s, cfg, |v| m(v[0], pos(j(v[0], v[1]))) == at(v[0])));
        out.push(audit_law("absorb-join", &["x", "y"], s, cfg, |v| j(v[0], pos(m(v[0], v[1]))) == at(v[0])));
        out.push(audit_law("distributive", &["x", "y", "z"], s, cfg, |v| {
            m(v[0], pos(j(v[1], v[2]))) == j(pos(m(v[0], v[1])), pos(m(v[0], v[2])))
        }));
        out.push(audit_law("bounds", &["x"], s, cfg, |v| {
            let x = at(v[0]);
            self.meet(x, bot) == bot && self.join(x, top) == top && self.join(x, bot) == x && self.meet(x, top) == x
        }));
        out.push(audit_law("complement", &["x"], s, cfg, |v| {
            let x = at(v[0]);
            let nx = self.neg(x);
            self.meet(x, nx) == bot && self.join(x, nx) == top
        }));
        AxiomReport { suite: Suite::Boolean, outcomes: out }
    }
}
