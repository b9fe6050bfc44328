//! Skew Boolean algebras of partial functions `X ⇀ {1,2}` and their
//! embedding into the skew `i`-reduct of `n^X`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{power_algebra, Dim, Element, IndexSet, IndexedAlgebra, PowerAlgebra};
use crate::error::{Error, Result};
use crate::skew::{BinTable, RcaTable, SkewTables, TernTable};

/// Largest `|X|` for which the full algebra is built.
pub const MAX_POINTS: usize = 5;

/// A partial function from `X = {0..m}` to `{1, 2}`; `None` is undefined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialFn(Vec<Option<u8>>);

impl PartialFn {
    pub fn new(values: Vec<Option<u8>>) -> Result<Self> {
        if let Some(v) = values.iter().flatten().find(|&&v| v != 1 && v != 2) {
            return Err(Error::ValueOutOfRange { value: *v as usize, n: 2 });
        }
        Ok(PartialFn(values))
    }

    pub fn empty(points: usize) -> Self {
        PartialFn(vec![None; points])
    }

    pub fn values(&self) -> &[Option<u8>] {
        &self.0
    }

    pub fn points(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, p: usize) -> Option<u8> {
        self.0[p]
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    /// Base-3 index with the first point most significant; `∅` is 0.
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, v| acc * 3 + v.map_or(0, |x| x as usize))
    }

    pub fn from_index(points: usize, mut idx: usize) -> Self {
        let mut out = vec![None; points];
        for p in (0..points).rev() {
            out[p] = match idx % 3 {
                0 => None,
                d => Some(d as u8),
            };
            idx /= 3;
        }
        PartialFn(out)
    }

    /// `f ∧ g = g|_{G∩F}`.
    pub fn meet(&self, g: &PartialFn) -> PartialFn {
        PartialFn(self.0.iter().zip(&g.0).map(|(f, g)| f.and(*g)).collect())
    }

    /// `f ∨ g = f ∪ g|_{G∖F}`.
    pub fn join(&self, g: &PartialFn) -> PartialFn {
        PartialFn(self.0.iter().zip(&g.0).map(|(f, g)| f.or(*g)).collect())
    }

    /// `self \ f = self|_{G∖F}`.
    pub fn minus(&self, f: &PartialFn) -> PartialFn {
        PartialFn(self.0.iter().zip(&f.0).map(|(g, f)| if f.is_some() { None } else { *g }).collect())
    }

    /// `q(f, g, h) = g|_{G∩F} ∪ h|_{H∖F}`.
    pub fn q(&self, g: &PartialFn, h: &PartialFn) -> PartialFn {
        PartialFn(
            self.0
                .iter()
                .zip(g.0.iter().zip(&h.0))
                .map(|(f, (g, h))| if f.is_some() { *g } else { *h })
                .collect(),
        )
    }
}

impl fmt::Display for PartialFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (p, v) in self.0.iter().enumerate() {
            if let Some(v) = v {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                write!(f, "{p}->{v}")?;
            }
        }
        f.write_str("}")
    }
}

/// All `3^m` partial functions on `m` points with the skew operations and
/// the ternary `q`, indexed as in [`PartialFn::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFnAlgebra {
    points: usize,
    pub skew: SkewTables,
    pub rca: RcaTable,
}

pub fn partial_fn_algebra(points: usize) -> Result<PartialFnAlgebra> {
    if points > MAX_POINTS {
        return Err(Error::CarrierTooLarge { size: points, bound: MAX_POINTS });
    }
    let size = 3usize.pow(points as u32);
    let els: Vec<PartialFn> = (0..size).map(|i| PartialFn::from_index(points, i)).collect();
    let skew = SkewTables {
        meet: BinTable::from_fn(size, |a, b| els[a].meet(&els[b]).index()),
        join: BinTable::from_fn(size, |a, b| els[a].join(&els[b]).index()),
        minus: BinTable::from_fn(size, |a, b| els[a].minus(&els[b]).index()),
        zero: 0,
    };
    let rca = RcaTable { q: TernTable::from_fn(size, |f, g, h| els[f].q(&els[g], &els[h]).index()), zero: 0 };
    Ok(PartialFnAlgebra { points, skew, rca })
}

impl PartialFnAlgebra {
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn size(&self) -> usize {
        self.skew.size()
    }

    pub fn element(&self, idx: usize) -> PartialFn {
        PartialFn::from_index(self.points, idx)
    }

    pub fn elements(&self) -> Vec<PartialFn> {
        (0..self.size()).map(|i| self.element(i)).collect()
    }
}

fn check_star_params(n: Dim, i: u8) -> Result<()> {
    if n.get() < 3 {
        return Err(Error::InvalidIndex(format!("embedding needs n >= 3, got {}", n.get())));
    }
    if i == 1 || i == 2 || i as usize > n.get() {
        return Err(Error::InvalidIndex(format!("index {i} must lie in 3..={}", n.get())));
    }
    Ok(())
}

/// `f*`: the n-partition `(f⁻¹(1), f⁻¹(2), .., X ∖ dom f at position i, ..)`,
/// as the element taking `f(p)` where defined and `i` elsewhere.
pub fn star_embed(f: &PartialFn, n: Dim, i: u8) -> Result<Element> {
    check_star_params(n, i)?;
    Element::new(n, f.0.iter().map(|v| v.unwrap_or(i)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingOp {
    Meet,
    Join,
    Minus,
    Q,
}

impl fmt::Display for EmbeddingOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddingOp::Meet => "meet",
            EmbeddingOp::Join => "join",
            EmbeddingOp::Minus => "minus",
            EmbeddingOp::Q => "q",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingFailure {
    pub op: EmbeddingOp,
    pub args: Vec<PartialFn>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub points: usize,
    pub n: Dim,
    pub i: u8,
    pub pairs_checked: usize,
    pub injective: bool,
    pub failure: Option<EmbeddingFailure>,
}

impl EmbeddingReport {
    pub fn ok(&self) -> bool {
        self.injective && self.failure.is_none()
    }
}

/// Check that `*` is injective and carries `∧`, `∨`, `\` to `∧_i`, `∨̄_i`,
/// `\_i` on every pair, and `q` to `t_i` on every triple.
pub fn verify_embedding(points: usize, n: Dim, i: u8) -> Result<EmbeddingReport> {
    check_star_params(n, i)?;
    let pf = partial_fn_algebra(points)?;
    let target: PowerAlgebra = power_algebra(n.get(), points)?;
    let d = IndexSet::singleton(i);
    let zero = IndexedAlgebra::constant(&target, i);
    let img: Vec<usize> = pf
        .elements()
        .iter()
        .map(|f| Ok(target.index_of(&star_embed(f, n, i)?).expect("full power")))
        .collect::<Result<_>>()?;
    let mut sorted = img.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == img.len();

    let s = pf.size();
    let fail = |op, args: &[usize]| Some(EmbeddingFailure { op, args: args.iter().map(|&a| pf.element(a)).collect() });
    let mut failure = None;
    'pairs: for f in 0..s {
        for g in 0..s {
            let (x, y) = (img[f], img[g]);
            if img[pf.skew.meet.get(f, g)] != target.t(d, x, y, zero) {
                failure = fail(EmbeddingOp::Meet, &[f, g]);
                break 'pairs;
            }
            if img[pf.skew.join.get(f, g)] != target.t(d, x, x, y) {
                failure = fail(EmbeddingOp::Join, &[f, g]);
                break 'pairs;
            }
            if img[pf.skew.minus.get(g, f)] != target.t(d, x, zero, y) {
                failure = fail(EmbeddingOp::Minus, &[g, f]);
                break 'pairs;
            }
            for h in 0..s {
                if img[pf.rca.q.get(f, g, h)] != target.t(d, x, y, img[h]) {
                    failure = fail(EmbeddingOp::Q, &[f, g, h]);
                    break 'pairs;
                }
            }
        }
    }
    Ok(EmbeddingReport { points, n, i, pairs_checked: s * s, injective, failure })
}
