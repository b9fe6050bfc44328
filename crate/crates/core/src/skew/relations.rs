use alloc::vec::Vec;

use super::{audit_skew_lattice, SkewTables};
use crate::check::AuditConfig;
use crate::error::{Error, Result};

/// The natural partial order, the preorders and Green's relations of a skew
/// lattice, as dense boolean matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationBundle {
    size: usize,
    le: Vec<bool>,
    pre: Vec<bool>,
    pre_l: Vec<bool>,
    pre_r: Vec<bool>,
}

impl RelationBundle {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `x ≤ y` iff `x∧y = x = y∧x`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.le[x * self.size + y]
    }

    /// `x ⪯ y` iff `x∧y∧x = x`.
    pub fn preceq(&self, x: usize, y: usize) -> bool {
        self.pre[x * self.size + y]
    }

    /// `x ⪯_l y` iff `x∧y = x`.
    pub fn preceq_l(&self, x: usize, y: usize) -> bool {
        self.pre_l[x * self.size + y]
    }

    /// `x ⪯_r y` iff `y∧x = x`.
    pub fn preceq_r(&self, x: usize, y: usize) -> bool {
        self.pre_r[x * self.size + y]
    }

    pub fn d(&self, x: usize, y: usize) -> bool {
        self.preceq(x, y) && self.preceq(y, x)
    }

    pub fn l(&self, x: usize, y: usize) -> bool {
        self.preceq_l(x, y) && self.preceq_l(y, x)
    }

    pub fn r(&self, x: usize, y: usize) -> bool {
        self.preceq_r(x, y) && self.preceq_r(y, x)
    }

    /// Elements with nothing strictly above them in `≤`.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| (0..self.size).all(|y| y == x || !self.le(x, y)))
            .collect()
    }

    /// The least element of `≤`, if any.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.le(x, y)))
    }

    /// `D = R`, the defining property of a right-handed skew lattice.
    pub fn is_right_handed(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.d(x, y) == self.r(x, y)))
    }

    /// `D`-classes in order of least member.
    pub fn d_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let class: Vec<usize> = (x..self.size).filter(|&y| self.d(x, y)).collect();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class);
        }
        out
    }
}

/// Derive the relations, refusing when the tables fail the skew-lattice
/// audit.
pub fn relations(t: &SkewTables, cfg: &AuditConfig) -> Result<RelationBundle> {
    let report = audit_skew_lattice(t, cfg);
    if let Some(bad) = report.first_failure() {
        return Err(Error::AuditFailed(bad.name.clone()));
    }
    let s = t.size();
    let m = |a, b| t.meet.get(a, b);
    let mut le = Vec::with_capacity(s * s);
    let mut pre = Vec::with_capacity(s * s);
    let mut pre_l = Vec::with_capacity(s * s);
    let mut pre_r = Vec::with_capacity(s * s);
    for x in 0..s {
        for y in 0..s {
            let l = m(x, y) == x;
            let r = m(y, x) == x;
            le.push(l && r);
            pre.push(m(m(x, y), x) == x);
            pre_l.push(l);
            pre_r.push(r);
        }
    }
    Ok(RelationBundle { size: s, le, pre, pre_l, pre_r })
}
