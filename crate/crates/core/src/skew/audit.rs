use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{RcaTable, SkewTables, StarTable};
use crate::algebra::IndexedAlgebra;
use crate::check::{audit_law, AuditConfig, LawOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    SkewLattice,
    SkewBa,
    RightHanded,
    Srca,
    Nba,
    SkewStar,
    Boolean,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::SkewLattice,
        Suite::SkewBa,
        Suite::RightHanded,
        Suite::Srca,
        Suite::Nba,
        Suite::SkewStar,
        Suite::Boolean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SkewLattice => "SKEW_LATTICE",
            Suite::SkewBa => "SKEW_BA",
            Suite::RightHanded => "RIGHT_HANDED",
            Suite::Srca => "SRCA",
            Suite::Nba => "NBA",
            Suite::SkewStar => "SKEW_STAR",
            Suite::Boolean => "BOOLEAN",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-law outcomes of one audit suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub suite: Suite,
    pub outcomes: Vec<LawOutcome>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.outcomes.iter().all(|o| o.ok)
    }

    pub fn first_failure(&self) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| !o.ok)
    }

    pub fn get(&self, name: &str) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

fn lattice_laws(t: &SkewTables, cfg: &AuditConfig, out: &mut Vec<LawOutcome>) {
    let s = t.size();
    let m = |a, b| t.meet.get(a, b);
    let j = |a, b| t.join.get(a, b);
    out.push(audit_law("meet-assoc", &["x", "y", "z"], s, cfg, |v| {
        m(m(v[0], v[1]), v[2]) == m(v[0], m(v[1], v[2]))
    }));
    out.push(audit_law("join-assoc", &["x", "y", "z"], s, cfg, |v| {
        j(j(v[0], v[1]), v[2]) == j(v[0], j(v[1], v[2]))
    }));
    out.push(audit_law("meet-idem", &["x"], s, cfg, |v| m(v[0], v[0]) == v[0]));
    out.push(audit_law("join-idem", &["x"], s, cfg, |v| j(v[0], v[0]) == v[0]));
    out.push(audit_law("absorb-1", &["x", "y"], s, cfg, |v| j(v[0], m(v[0], v[1])) == v[0]));
    out.push(audit_law("absorb-2", &["x", "y"], s, cfg, |v| m(v[0], j(v[0], v[1])) == v[0]));
    out.push(audit_law("absorb-3", &["x", "y"], s, cfg, |v| j(m(v[1], v[0]), v[0]) == v[0]));
    out.push(audit_law("absorb-4", &["x", "y"], s, cfg, |v| m(j(v[1], v[0]), v[0]) == v[0]));
}

pub fn audit_skew_lattice(t: &SkewTables, cfg: &AuditConfig) -> AxiomReport {
    let mut outcomes = Vec::new();
    lattice_laws(t, cfg, &mut outcomes);
    AxiomReport { suite: Suite::SkewLattice, outcomes }
}

/// Skew-lattice laws followed by normality, distributivity, the absorbing
/// zero and the relative complement.
pub fn audit_skew_ba(t: &SkewTables, cfg: &AuditConfig) -> AxiomReport {
    let s = t.size();
    let zero = t.zero;
    let m = |a, b| t.meet.get(a, b);
    let j = |a, b| t.join.get(a, b);
    let d = |a, b| t.minus.get(a, b);
    let xyx = |x, y| m(m(x, y), x);
    let mut out = Vec::new();
    lattice_laws(t, cfg, &mut out);
    out.push(audit_law("S1-normal", &["x", "y", "z"], s, cfg, |v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        m(m(m(x, y), z), x) == m(m(m(x, z), y), x)
    }));
    out.push(audit_law("S1-dist-left", &["x", "y", "z"], s, cfg, |v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        m(x, j(y, z)) == j(m(x, y), m(x, z))
    }));
    out.push(audit_law("S1-dist-right", &["x", "y", "z"], s, cfg, |v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        m(j(y, z), x) == j(m(y, x), m(z, x))
    }));
    out.push(audit_law("S2-left", &["x"], s, cfg, |v| m(zero, v[0]) == zero));
    out.push(audit_law("S2-right", &["x"], s, cfg, |v| m(v[0], zero) == zero));
    out.push(audit_law("S3-join-left", &["x", "y"], s, cfg, |v| {
        j(xyx(v[0], v[1]), d(v[0], v[1])) == v[0]
    }));
    out.push(audit_law("S3-join-right", &["x", "y"], s, cfg, |v| {
        j(d(v[0], v[1]), xyx(v[0], v[1])) == v[0]
    }));
    out.push(audit_law("S3-meet-left", &["x", "y"], s, cfg, |v| {
        m(xyx(v[0], v[1]), d(v[0], v[1])) == zero
    }));
    out.push(audit_law("S3-meet-right", &["x", "y"], s, cfg, |v| {
        m(d(v[0], v[1]), xyx(v[0], v[1])) == zero
    }));
    AxiomReport { suite: Suite::SkewBa, outcomes: out }
}

pub fn audit_right_handed(t: &SkewTables, cfg: &AuditConfig) -> AxiomReport {
    let m = |a, b| t.meet.get(a, b);
    let o = audit_law("right-handed", &["x", "y"], t.size(), cfg, |v| {
        m(m(v[0], v[1]), v[0]) == m(v[1], v[0])
    });
    AxiomReport { suite: Suite::RightHanded, outcomes: vec![o] }
}

fn srca_laws<F>(prefix: &str, size: usize, q: F, zero: usize, cfg: &AuditConfig, out: &mut Vec<LawOutcome>)
where
    F: Fn(usize, usize, usize) -> usize,
{
    let name = |s: &str| format!("{prefix}{s}");
    out.push(audit_law(&name("RCA"), &["x", "y"], size, cfg, |v| q(zero, v[0], v[1]) == v[1]));
    out.push(audit_law(&name("D1"), &["e", "x"], size, cfg, |v| q(v[0], v[1], v[1]) == v[1]));
    out.push(audit_law(&name("D2"), &["e", "a", "b", "c", "d"], size, cfg, |v| {
        let e = v[0];
        q(e, q(e, v[1], v[2]), q(e, v[3], v[4])) == q(e, v[1], v[4])
    }));
    out.push(audit_law(&name("D3"), &["e", "a1", "a2", "a3", "b1", "b2", "b3"], size, cfg, |v| {
        let e = v[0];
        q(e, q(v[1], v[2], v[3]), q(v[4], v[5], v[6]))
            == q(q(e, v[1], v[4]), q(e, v[2], v[5]), q(e, v[3], v[6]))
    }));
    out.push(audit_law(&name("D3.0"), &["e"], size, cfg, |v| q(v[0], zero, zero) == zero));
    out.push(audit_law(&name("semicentral"), &["e"], size, cfg, |v| q(v[0], v[0], zero) == v[0]));
}

/// Every element is semicentral: `q(0,x,y) = y` and each `q(e,-,-)` is a
/// binary decomposition operator with `q(e,e,0) = e`.
pub fn audit_srca(t: &RcaTable, cfg: &AuditConfig) -> AxiomReport {
    let mut outcomes = Vec::new();
    srca_laws("", t.q.size(), |x, y, z| t.q.get(x, y, z), t.zero, cfg, &mut outcomes);
    AxiomReport { suite: Suite::Srca, outcomes }
}

fn grid_names(prefix: &str, rows: core::ops::RangeInclusive<usize>, cols: core::ops::RangeInclusive<usize>) -> Vec<String> {
    let mut v = Vec::new();
    for r in rows {
        for c in cols.clone() {
            v.push(format!("{prefix}{r}_{c}"));
        }
    }
    v
}

/// The axioms B0–B4 over the operation table of `alg`.
pub fn audit_nba<A: IndexedAlgebra>(alg: &A, cfg: &AuditConfig) -> AxiomReport {
    let n = alg.dim().get();
    let s = alg.size();
    let consts = alg.constants();
    let mut out = Vec::new();

    let xs = grid_names("x", 1..=1, 1..=n);
    let xs: Vec<&str> = xs.iter().map(String::as_str).collect();
    out.push(audit_law("B0", &xs, s, cfg, |v| (1..=n).all(|i| alg.q(consts[i - 1], v) == v[i - 1])));

    let mut ys = vec![0usize; n];
    out.push(audit_law("B1", &["y", "x"], s, cfg, |v| {
        ys.iter_mut().for_each(|y| *y = v[1]);
        alg.q(v[0], &ys) == v[1]
    }));

    let b2 = grid_names("x", 1..=n, 1..=n);
    let mut b2v = vec!["y"];
    b2v.extend(b2.iter().map(String::as_str));
    let mut inner = vec![0usize; n];
    let mut diag = vec![0usize; n];
    out.push(audit_law("B2", &b2v, s, cfg, |v| {
        let y = v[0];
        let x = &v[1..];
        for r in 0..n {
            inner[r] = alg.q(y, &x[r * n..(r + 1) * n]);
            diag[r] = x[r * n + r];
        }
        alg.q(y, &inner) == alg.q(y, &diag)
    }));

    let b3 = grid_names("x", 1..=n, 0..=n);
    let mut b3v = vec!["y"];
    b3v.extend(b3.iter().map(String::as_str));
    let mut rows = vec![0usize; n];
    let mut cols = vec![0usize; n + 1];
    let mut col = vec![0usize; n];
    out.push(audit_law("B3", &b3v, s, cfg, |v| {
        let y = v[0];
        let x = &v[1..];
        let w = n + 1;
        for r in 0..n {
            rows[r] = alg.q(x[r * w], &x[r * w + 1..(r + 1) * w]);
        }
        for c in 0..=n {
            for r in 0..n {
                col[r] = x[r * w + c];
            }
            cols[c] = alg.q(y, &col);
        }
        alg.q(y, &rows) == alg.q(cols[0], &cols[1..])
    }));

    out.push(audit_law("B4", &["y"], s, cfg, |v| alg.q(v[0], &consts) == v[0]));
    AxiomReport { suite: Suite::Nba, outcomes: out }
}

/// The skew-star axioms N0–N5; scheme instances are named with their
/// indices, e.g. `N0[1].D2` or `N3[1,2]`.
pub fn audit_skew_star(b: &StarTable, cfg: &AuditConfig) -> AxiomReport {
    let n = b.dim().get() as u8;
    let s = b.size();
    let mut out = Vec::new();
    for i in 1..=n {
        srca_laws(&format!("N0[{i}]."), s, |x, y, z| b.t(i, x, y, z), b.zero(i), cfg, &mut out);
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let zj = b.zero(j);
            out.push(audit_law(&format!("N1[{i},{j}]"), &["y", "z"], s, cfg, |v| b.t(i, zj, v[0], v[1]) == v[0]));
        }
    }
    let zeros: Vec<usize> = (1..=n).map(|k| b.zero(k)).collect();
    out.push(audit_law("N2", &["x"], s, cfg, |v| b.q_t(v[0], &zeros) == v[0]));
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            out.push(audit_law(&format!("N3[{i},{j}]"), &["x", "y", "z", "u"], s, cfg, |v| {
                let (x, y, z, u) = (v[0], v[1], v[2], v[3]);
                b.t(i, x, b.t(j, x, y, z), u) == b.t(j, x, b.t(i, x, y, u), z)
            }));
        }
    }
    let mut ys = vec![0usize; n as usize];
    for i in 1..=n {
        out.push(audit_law(&format!("N4[{i}]"), &["x", "y", "z"], s, cfg, |v| {
            for (k, slot) in ys.iter_mut().enumerate() {
                *slot = if k + 1 == i as usize { v[2] } else { v[1] };
            }
            b.t(i, v[0], v[1], v[2]) == b.q_t(v[0], &ys)
        }));
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            out.push(audit_law(&format!("N5[{i},{j}]"), &["x", "y1", "y2", "y3", "z1", "z2", "z3"], s, cfg, |v| {
                let x = v[0];
                b.t(i, x, b.t(j, v[1], v[2], v[3]), b.t(j, v[4], v[5], v[6]))
                    == b.t(j, b.t(i, x, v[1], v[4]), b.t(i, x, v[2], v[5]), b.t(i, x, v[3], v[6]))
            }));
        }
    }
    AxiomReport { suite: Suite::SkewStar, outcomes: out }
}
