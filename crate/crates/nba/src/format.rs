//! JSON file formats for algebras, truth tables, multideals, congruences and
//! partial functions.

use std::collections::BTreeMap;

use nba_core::ideals::{Congruence, Multideal};
use nba_core::representation::PartialFn;
use nba_core::synthesis::TruthTable;
use nba_core::{Dim, Element, IndexedAlgebra, PowerAlgebra, TableAlgebra};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"n":3,"kind":"power","points":2}`, `{"n":3,"kind":"subpower",..}` or
/// `{"n":3,"kind":"table",..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub n: usize,
    #[serde(flatten)]
    pub body: AlgebraBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraBody {
    Power { points: usize },
    Subpower { points: usize, carrier: Vec<Vec<u8>> },
    /// `q` is flat and row-major over `(x, y_1, .., y_n)`, `x` slowest.
    Table { size: usize, constants: Vec<usize>, q: Vec<usize> },
}

/// An element in a report: a value vector for sub-powers, an index for
/// table algebras.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Index(usize),
    Values(Vec<u8>),
}

/// A loaded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Power(PowerAlgebra),
    Table(TableAlgebra),
}

impl IndexedAlgebra for Algebra {
    fn dim(&self) -> Dim {
        match self {
            Algebra::Power(a) => a.dim(),
            Algebra::Table(a) => a.dim(),
        }
    }

    fn size(&self) -> usize {
        match self {
            Algebra::Power(a) => a.size(),
            Algebra::Table(a) => a.size(),
        }
    }

    fn constant(&self, k: u8) -> usize {
        match self {
            Algebra::Power(a) => IndexedAlgebra::constant(a, k),
            Algebra::Table(a) => a.constant(k),
        }
    }

    fn q(&self, x: usize, ys: &[usize]) -> usize {
        match self {
            Algebra::Power(a) => a.q(x, ys),
            Algebra::Table(a) => a.q(x, ys),
        }
    }
}

impl Algebra {
    pub fn from_file(file: &AlgebraFile) -> Result<Self, nba_core::Error> {
        let dim = Dim::new(file.n)?;
        Ok(match &file.body {
            AlgebraBody::Power { points } => Algebra::Power(nba_core::power_algebra(file.n, *points)?),
            AlgebraBody::Subpower { points, carrier } => {
                let elements = carrier
                    .iter()
                    .map(|v| Element::new(dim, v.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                Algebra::Power(PowerAlgebra::subpower(dim, *points, elements)?)
            }
            AlgebraBody::Table { size, constants, q } => {
                Algebra::Table(TableAlgebra::new(dim, *size, constants.clone(), q.clone())?)
            }
        })
    }

    pub fn to_file(&self) -> AlgebraFile {
        let n = self.dim().get();
        let body = match self {
            Algebra::Power(a) if a.is_full() => AlgebraBody::Power { points: a.points() },
            Algebra::Power(a) => AlgebraBody::Subpower {
                points: a.points(),
                carrier: a.elements().iter().map(|x| x.values().to_vec()).collect(),
            },
            Algebra::Table(a) => AlgebraBody::Table {
                size: a.size(),
                constants: a.constants_slice().to_vec(),
                q: a.q_table(),
            },
        };
        AlgebraFile { n, body }
    }

    pub fn label(&self, x: usize) -> ElementRepr {
        match self {
            Algebra::Power(a) => ElementRepr::Values(a.element(x).values().to_vec()),
            Algebra::Table(_) => ElementRepr::Index(x),
        }
    }

    pub fn labels(&self, xs: &[usize]) -> Vec<ElementRepr> {
        xs.iter().map(|&x| self.label(x)).collect()
    }

    /// Resolve an element written in either form.
    pub fn resolve(&self, repr: &ElementRepr) -> Result<usize, CliError> {
        match (self, repr) {
            (_, ElementRepr::Index(i)) if *i < self.size() => Ok(*i),
            (_, ElementRepr::Index(i)) => Err(CliError::Invalid(nba_core::Error::IndexOutOfRange {
                index: *i,
                size: self.size(),
            })),
            (Algebra::Power(a), ElementRepr::Values(v)) => {
                let x = Element::new(a.dim(), v.clone())?;
                a.index_of(&x).ok_or(CliError::Invalid(nba_core::Error::NotInCarrier))
            }
            (Algebra::Table(_), ElementRepr::Values(_)) => {
                Err(CliError::Format("table algebras address elements by index".into()))
            }
        }
    }
}

/// `{"n":3,"k":2,"entries":[..]}`, row-major with the first argument
/// varying slowest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruthTableFile {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<u8>,
}

impl TruthTableFile {
    pub fn to_table(&self) -> Result<TruthTable, nba_core::Error> {
        TruthTable::new(Dim::new(self.n)?, self.k, self.entries.clone())
    }

    pub fn from_table(t: &TruthTable) -> Self {
        TruthTableFile { n: t.dim().get(), k: t.arity(), entries: t.entries().to_vec() }
    }
}

/// Multideal components as lists of elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultidealJson {
    pub components: Vec<Vec<ElementRepr>>,
}

impl MultidealJson {
    pub fn of(alg: &Algebra, m: &Multideal) -> Option<Self> {
        let comps = m.components()?;
        Some(MultidealJson { components: comps.iter().map(|c| alg.labels(c)).collect() })
    }

    pub fn resolve(&self, alg: &Algebra) -> Result<Vec<Vec<usize>>, CliError> {
        self.components
            .iter()
            .map(|c| c.iter().map(|e| alg.resolve(e)).collect())
            .collect()
    }
}

/// A congruence as its blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceJson {
    pub blocks: Vec<Vec<ElementRepr>>,
}

impl CongruenceJson {
    pub fn of(alg: &Algebra, c: &Congruence) -> Self {
        CongruenceJson { blocks: c.classes().iter().map(|b| alg.labels(b)).collect() }
    }
}

/// A partial function as `point -> value` over its domain.
pub type PartialFnJson = BTreeMap<usize, u8>;

pub fn partial_fn_json(f: &PartialFn) -> PartialFnJson {
    f.values()
        .iter()
        .enumerate()
        .filter_map(|(p, v)| v.map(|v| (p, v)))
        .collect()
}

pub fn partial_fn_from_json(map: &PartialFnJson, points: usize) -> Result<PartialFn, CliError> {
    let mut values = vec![None; points];
    for (&p, &v) in map {
        if p >= points {
            return Err(CliError::Invalid(nba_core::Error::IndexOutOfRange { index: p, size: points }));
        }
        values[p] = Some(v);
    }
    Ok(PartialFn::new(values)?)
}
