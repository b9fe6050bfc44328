//! Reducts of an nBA, skew-lattice relations, axiom audits, element kinds
//! and the Boolean center.

mod audit;
mod center;
mod relations;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{table_len, Dim, Element, IndexSet, IndexedAlgebra, PowerAlgebra, TableAlgebra, TABLE_LIMIT};
use crate::check::{audit_law, AuditConfig, LawOutcome};
use crate::derived::{bin_index, designated, t_eval};
use crate::error::{Error, Result};
use crate::ideals::Congruence;
use crate::term::BinOp;

pub use audit::{audit_nba, audit_right_handed, audit_skew_ba, audit_skew_lattice, audit_skew_star, audit_srca, AxiomReport, Suite};
pub use center::{boolean_center, BooleanCenter};
pub use relations::{relations, RelationBundle};

/// Largest carrier for which reduct tables are materialised.
pub const REDUCT_LIMIT: usize = 256;

fn check_reduct_size(size: usize) -> Result<()> {
    if size > REDUCT_LIMIT {
        Err(Error::CarrierTooLarge { size, bound: REDUCT_LIMIT })
    } else {
        Ok(())
    }
}

/// A binary operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinTable {
    size: usize,
    data: Vec<u32>,
}

impl BinTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                data.push(f(a, b) as u32);
            }
        }
        BinTable { size, data }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.size + b] as usize
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// A ternary operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernTable {
    size: usize,
    data: Vec<u32>,
}

impl TernTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(size * size * size);
        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    data.push(f(x, y, z) as u32);
                }
            }
        }
        TernTable { size, data }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        self.data[(x * self.size + y) * self.size + z] as usize
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Tables of a structure `(A, ∧, ∨, \, 0)`; `minus.get(a, b)` is `a \ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTables {
    pub meet: BinTable,
    pub join: BinTable,
    pub minus: BinTable,
    pub zero: usize,
}

impl SkewTables {
    pub fn size(&self) -> usize {
        self.meet.size()
    }
}

/// A right Church algebra `(A, q, 0)` given by its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcaTable {
    pub q: TernTable,
    pub zero: usize,
}

/// The Church reduct `(A, t_d, 0_i, 1_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChurchTable {
    pub t: TernTable,
    pub zero: usize,
    pub one: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductKind {
    /// `(A, t_d, 0_i, 1_j)`; `None` picks the least admissible index.
    Church { d: IndexSet, i: Option<u8>, j: Option<u8> },
    /// `(A, t_i, 0_i)`
    RightChurch { i: u8 },
    /// `(A, ∧_i, ∨̄_i, \_i, 0_i)`
    Skew { i: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduct {
    Church(ChurchTable),
    RightChurch(RcaTable),
    Skew(SkewTables),
}

pub fn reduct<A: IndexedAlgebra>(alg: &A, kind: ReductKind) -> Result<Reduct> {
    Ok(match kind {
        ReductKind::Church { d, i, j } => Reduct::Church(church_reduct(alg, d, i, j)?),
        ReductKind::RightChurch { i } => Reduct::RightChurch(right_church_reduct(alg, i)?),
        ReductKind::Skew { i } => Reduct::Skew(skew_reduct(alg, i)?),
    })
}

pub fn church_reduct<A: IndexedAlgebra>(alg: &A, d: IndexSet, i: Option<u8>, j: Option<u8>) -> Result<ChurchTable> {
    check_reduct_size(alg.size())?;
    let (i, j) = designated(alg.dim(), d, i, j)?;
    let j = j.ok_or(Error::NoComplementIndex)?;
    Ok(ChurchTable {
        t: TernTable::from_fn(alg.size(), |x, y, z| alg.t(d, x, y, z)),
        zero: alg.constant(i),
        one: alg.constant(j),
    })
}

pub fn right_church_reduct<A: IndexedAlgebra>(alg: &A, i: u8) -> Result<RcaTable> {
    check_reduct_size(alg.size())?;
    alg.dim().check_value(i as usize)?;
    let d = IndexSet::singleton(i);
    Ok(RcaTable {
        q: TernTable::from_fn(alg.size(), |x, y, z| alg.t(d, x, y, z)),
        zero: alg.constant(i),
    })
}

pub fn skew_reduct<A: IndexedAlgebra>(alg: &A, i: u8) -> Result<SkewTables> {
    check_reduct_size(alg.size())?;
    alg.dim().check_value(i as usize)?;
    let d = IndexSet::singleton(i);
    let s = alg.size();
    Ok(SkewTables {
        meet: BinTable::from_fn(s, |a, b| bin_index(alg, BinOp::Meet, d, i, None, a, b)),
        join: BinTable::from_fn(s, |a, b| bin_index(alg, BinOp::BarVee, d, i, None, a, b)),
        minus: BinTable::from_fn(s, |a, b| bin_index(alg, BinOp::Minus, d, i, None, a, b)),
        zero: alg.constant(i),
    })
}

/// Tables of a structure `(B, t_1..t_n, 0_1..0_n)` in the skew-star signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTable {
    dim: Dim,
    size: usize,
    t: Vec<TernTable>,
    zeros: Vec<usize>,
}

impl StarTable {
    pub fn new(dim: Dim, size: usize, t: Vec<TernTable>, zeros: Vec<usize>) -> Result<Self> {
        if t.len() != dim.get() || zeros.len() != dim.get() {
            return Err(Error::Arity { expected: dim.get(), found: t.len().min(zeros.len()) });
        }
        if let Some(bad) = t.iter().find(|tt| tt.size() != size) {
            return Err(Error::Shape { expected: size, found: bad.size() });
        }
        if let Some(&z) = zeros.iter().find(|&&z| z >= size) {
            return Err(Error::IndexOutOfRange { index: z, size });
        }
        Ok(StarTable { dim, size, t, zeros })
    }

    /// `A*`: `t_i(x,y,z) = q(x, y/ī, z/i)` and `0_i = e_i`.
    pub fn of<A: IndexedAlgebra>(alg: &A) -> Result<Self> {
        check_reduct_size(alg.size())?;
        let t = alg
            .dim()
            .values()
            .map(|i| {
                let d = IndexSet::singleton(i);
                TernTable::from_fn(alg.size(), |x, y, z| alg.t(d, x, y, z))
            })
            .collect();
        Ok(StarTable { dim: alg.dim(), size: alg.size(), t, zeros: alg.constants() })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn t(&self, i: u8, x: usize, y: usize, z: usize) -> usize {
        self.t[i as usize - 1].get(x, y, z)
    }

    pub fn zero(&self, i: u8) -> usize {
        self.zeros[i as usize - 1]
    }

    /// `q_t(x, y_1..y_n) = t_1(x, t_2(x, .. t_{n-1}(x, y_n, y_{n-1}) .., y_2), y_1)`.
    pub fn q_t(&self, x: usize, ys: &[usize]) -> usize {
        let n = ys.len();
        let mut acc = ys[n - 1];
        for k in (1..n).rev() {
            acc = self.t(k as u8, x, acc, ys[k - 1]);
        }
        acc
    }

    /// `B•`: the algebra `(B, q_t, 0_1..0_n)`.
    pub fn bullet(&self) -> Result<TableAlgebra> {
        let n = self.dim.get();
        let len = table_len(self.size, n + 1)?;
        if len > TABLE_LIMIT {
            return Err(Error::CarrierTooLarge { size: self.size, bound: TABLE_LIMIT });
        }
        let mut q = Vec::with_capacity(len);
        let mut args = alloc::vec![0usize; n + 1];
        loop {
            q.push(self.q_t(args[0], &args[1..]));
            if !crate::check::advance(&mut args, self.size) {
                break;
            }
        }
        TableAlgebra::new(self.dim, self.size, self.zeros.clone(), q)
    }
}

/// `c(x) = t_d(x, 1_j, 0_i)`.
pub fn central_retract(alg: &PowerAlgebra, d: IndexSet, i: u8, j: u8, x: &Element) -> Result<Element> {
    let (i, j) = designated(alg.dim(), d, Some(i), Some(j))?;
    let j = j.expect("explicit j");
    t_eval(alg, d, x, &alg.constant(j), &alg.constant(i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    /// `q(e, -, .., -)` is an n-ary decomposition operator.
    Factor,
    /// Factor element of `(A, t_i, 0_i)` with `t_i(e, e, 0_i) = e`.
    Semicentral(u8),
    /// Factor element with `q(e, e_1, .., e_n) = e`.
    Central,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KindVerdict {
    pub holds: bool,
    pub outcomes: Vec<LawOutcome>,
}

/// Decide whether carrier element `e` is of the given kind, by auditing the
/// defining laws over all (or sampled) arguments.
pub fn is_element_kind<A: IndexedAlgebra>(alg: &A, e: usize, kind: ElementKind, cfg: &AuditConfig) -> Result<KindVerdict> {
    if e >= alg.size() {
        return Err(Error::IndexOutOfRange { index: e, size: alg.size() });
    }
    let s = alg.size();
    let mut outcomes = Vec::new();
    match kind {
        ElementKind::Factor | ElementKind::Central => {
            outcomes.extend(factor_laws(alg, e, cfg));
            if kind == ElementKind::Central {
                let consts = alg.constants();
                outcomes.push(audit_law("normal", &[], s, cfg, |_| alg.q(e, &consts) == e));
            }
        }
        ElementKind::Semicentral(i) => {
            alg.dim().check_value(i as usize)?;
            let d = IndexSet::singleton(i);
            let zero = alg.constant(i);
            let f = |a: usize, b: usize| alg.t(d, e, a, b);
            outcomes.push(audit_law("D1", &["x"], s, cfg, |v| f(v[0], v[0]) == v[0]));
            outcomes.push(audit_law("D2", &["a", "b", "c", "d"], s, cfg, |v| {
                f(f(v[0], v[1]), f(v[2], v[3])) == f(v[0], v[3])
            }));
            outcomes.push(audit_law("D3", &["a1", "a2", "a3", "b1", "b2", "b3"], s, cfg, |v| {
                f(alg.t(d, v[0], v[1], v[2]), alg.t(d, v[3], v[4], v[5]))
                    == alg.t(d, f(v[0], v[3]), f(v[1], v[4]), f(v[2], v[5]))
            }));
            outcomes.push(audit_law("D3.0", &[], s, cfg, |_| f(zero, zero) == zero));
            outcomes.push(audit_law("semicentral", &[], s, cfg, |_| f(e, zero) == e));
        }
    }
    Ok(KindVerdict { holds: outcomes.iter().all(|o| o.ok), outcomes })
}

fn factor_laws<A: IndexedAlgebra>(alg: &A, e: usize, cfg: &AuditConfig) -> Vec<LawOutcome> {
    let n = alg.dim().get();
    let s = alg.size();
    let names = |prefix: &str, rows: usize, cols: usize, from: usize| -> Vec<String> {
        let mut v = Vec::new();
        for r in 1..=rows {
            for c in from..from + cols {
                v.push(format!("{prefix}{r}_{c}"));
            }
        }
        v
    };

    let mut out = Vec::new();
    let mut ys = alloc::vec![0usize; n];
    out.push(audit_law("D1", &["x"], s, cfg, |v| {
        ys.iter_mut().for_each(|y| *y = v[0]);
        alg.q(e, &ys) == v[0]
    }));

    let d2_names = names("x", n, n, 1);
    let d2_refs: Vec<&str> = d2_names.iter().map(String::as_str).collect();
    let mut inner = alloc::vec![0usize; n];
    let mut diag = alloc::vec![0usize; n];
    out.push(audit_law("D2", &d2_refs, s, cfg, |v| {
        for r in 0..n {
            inner[r] = alg.q(e, &v[r * n..(r + 1) * n]);
            diag[r] = v[r * n + r];
        }
        alg.q(e, &inner) == alg.q(e, &diag)
    }));

    // f(q(x_r0, .., x_rn) for r) = q(f(x_10..x_n0), .., f(x_1n..x_nn))
    let d3_names = names("x", n, n + 1, 0);
    let d3_refs: Vec<&str> = d3_names.iter().map(String::as_str).collect();
    let mut rows = alloc::vec![0usize; n];
    let mut cols = alloc::vec![0usize; n + 1];
    let mut col = alloc::vec![0usize; n];
    out.push(audit_law("D3", &d3_refs, s, cfg, |v| {
        let w = n + 1;
        for r in 0..n {
            rows[r] = alg.q(v[r * w], &v[r * w + 1..(r + 1) * w]);
        }
        for c in 0..=n {
            for r in 0..n {
                col[r] = v[r * w + c];
            }
            cols[c] = alg.q(e, &col);
        }
        alg.q(e, &rows) == alg.q(cols[0], &cols[1..])
    }));
    out
}

/// The pair `φ = {(a,b) : t_i(e,a,b) = a}`, `φ̄ = {(a,b) : t_i(e,a,b) = b}`
/// of complementary factor congruences of the right Church `i`-reduct.
pub fn factor_congruences_of<A: IndexedAlgebra>(alg: &A, e: usize, i: u8) -> Result<(Congruence, Congruence)> {
    if e >= alg.size() {
        return Err(Error::IndexOutOfRange { index: e, size: alg.size() });
    }
    alg.dim().check_value(i as usize)?;
    let d = IndexSet::singleton(i);
    let phi = Congruence::from_relation(alg.size(), |a, b| alg.t(d, e, a, b) == a)?;
    let phi_bar = Congruence::from_relation(alg.size(), |a, b| alg.t(d, e, a, b) == b)?;
    Ok((phi, phi_bar))
}
