//! Terms over the q-, skew- and skew-star signatures.
//!
//! One syntax tree covers all three signatures: `q` nodes, ternary `t_d`
//! nodes, the five derived binary operations, the constants `e_k` and `0_k`
//! (which denote the same element), and variables.

mod eval;
mod identity;
pub mod laws;
mod parse;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Dim, IndexSet};
use crate::error::{Error, Result};

pub use eval::{eval_indexed, eval_term, Program};
pub use identity::{check_identity, Assignment, CheckMode, Outcome, Verdict};
pub use parse::parse_term;

/// The derived binary operations on an nBA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    /// `x ∧_d y = t_d(x, y, 0_i)`
    Meet,
    /// `x ∨_d y = t_d(x, 1_j, y)`
    Join,
    /// `y \_d x = t_d(x, 0_i, y)`, written `sub[d](y,x)`
    Minus,
    /// `x ∧̄_d y = t_d(x, y, x)`
    BarWedge,
    /// `x ∨̄_d y = t_d(x, x, y)`
    BarVee,
}

impl BinOp {
    pub const ALL: [BinOp; 5] =
        [BinOp::Meet, BinOp::Join, BinOp::Minus, BinOp::BarWedge, BinOp::BarVee];

    pub fn keyword(self) -> &'static str {
        match self {
            BinOp::Meet => "and",
            BinOp::Join => "or",
            BinOp::Minus => "sub",
            BinOp::BarWedge => "bw",
            BinOp::BarVee => "bv",
        }
    }

    pub fn from_keyword(s: &str) -> Option<BinOp> {
        BinOp::ALL.into_iter().find(|op| op.keyword() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// `e_k`
    Const(u8),
    /// `0_k`, the same element as `e_k` under the skew reading.
    Zero(u8),
    /// `q(x, y_1, .., y_n)`: the scrutinee followed by `n` branches.
    Q(Vec<Term>),
    /// `t_d(x, y, z)`
    T(IndexSet, Box<[Term; 3]>),
    Bin(BinOp, IndexSet, Box<[Term; 2]>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn e(k: u8) -> Term {
        Term::Const(k)
    }

    pub fn q(x: Term, branches: impl IntoIterator<Item = Term>) -> Term {
        let mut args = Vec::from([x]);
        args.extend(branches);
        Term::Q(args)
    }

    pub fn t(d: IndexSet, x: Term, y: Term, z: Term) -> Term {
        Term::T(d, Box::new([x, y, z]))
    }

    /// `t_{k}` for a single index.
    pub fn t1(k: u8, x: Term, y: Term, z: Term) -> Term {
        Term::t(IndexSet::singleton(k), x, y, z)
    }

    pub fn bin(op: BinOp, d: IndexSet, a: Term, b: Term) -> Term {
        Term::Bin(op, d, Box::new([a, b]))
    }

    pub fn children(&self) -> &[Term] {
        match self {
            Term::Var(_) | Term::Const(_) | Term::Zero(_) => &[],
            Term::Q(args) => args,
            Term::T(_, args) => &args[..],
            Term::Bin(_, _, args) => &args[..],
        }
    }

    /// Distinct variables in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.iter().any(|w| w == v) {
                    out.push(v.clone());
                }
            }
            _ => {
                for c in self.children() {
                    c.collect_vars(out);
                }
            }
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(Term::node_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        self.children().iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    /// The subterm at a path of child indices.
    pub fn at(&self, path: &[usize]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i)?.at(rest),
        }
    }

    /// Check arities, constant and subscript ranges against `n`.
    pub fn validate(&self, n: Dim) -> Result<()> {
        match self {
            Term::Var(_) => Ok(()),
            Term::Const(k) | Term::Zero(k) => n.check_value(*k as usize),
            Term::Q(args) => {
                if args.len() != n.get() + 1 {
                    return Err(Error::Arity { expected: n.get(), found: args.len().saturating_sub(1) });
                }
                args.iter().try_for_each(|a| a.validate(n))
            }
            Term::T(d, args) => {
                d.validate(n)?;
                args.iter().try_for_each(|a| a.validate(n))
            }
            Term::Bin(op, d, args) => {
                d.validate(n)?;
                if *op == BinOp::Join && d.complement(n).is_empty() {
                    return Err(Error::NoComplementIndex);
                }
                args.iter().try_for_each(|a| a.validate(n))
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn args(f: &mut fmt::Formatter<'_>, items: &[Term]) -> fmt::Result {
            f.write_str("(")?;
            for (pos, t) in items.iter().enumerate() {
                if pos > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")
        }
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(k) => write!(f, "e{k}"),
            Term::Zero(k) => write!(f, "0{k}"),
            Term::Q(items) => {
                f.write_str("q")?;
                args(f, items)
            }
            Term::T(d, items) => {
                write!(f, "t[{d}]")?;
                args(f, &items[..])
            }
            Term::Bin(op, d, items) => {
                write!(f, "{}[{d}]", op.keyword())?;
                args(f, &items[..])
            }
        }
    }
}
