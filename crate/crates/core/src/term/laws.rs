//! Named identities as term pairs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{BinOp, Term};
use crate::algebra::{Dim, IndexSet};

/// A named law; some laws are schemes with one instance per index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub instances: Vec<(Term, Term)>,
}

fn x(r: usize, s: usize) -> Term {
    Term::Var(format!("x{r}_{s}"))
}

/// The nBA axioms B0–B4.
pub fn nba_axioms(n: Dim) -> Vec<Law> {
    let n = n.get();
    let y = Term::var("y");
    let xs = |r: usize| (1..=n).map(move |s| x(r, s));
    let consts = (1..=n as u8).map(Term::e);

    let b0 = (1..=n)
        .map(|i| (Term::q(Term::e(i as u8), xs(1)), x(1, i)))
        .collect();
    let b1 = Term::q(y.clone(), (0..n).map(|_| Term::var("x")));
    let b2_lhs = Term::q(y.clone(), (1..=n).map(|r| Term::q(y.clone(), xs(r))));
    let b2_rhs = Term::q(y.clone(), (1..=n).map(|r| x(r, r)));
    let b3_lhs = Term::q(
        y.clone(),
        (1..=n).map(|r| Term::q(x(r, 0), xs(r))),
    );
    let b3_rhs = Term::Q(
        (0..=n)
            .map(|s| Term::q(y.clone(), (1..=n).map(|r| x(r, s))))
            .collect(),
    );
    Vec::from([
        Law { name: "B0".into(), instances: b0 },
        Law { name: "B1".into(), instances: Vec::from([(b1, Term::var("x"))]) },
        Law { name: "B2".into(), instances: Vec::from([(b2_lhs, b2_rhs)]) },
        Law { name: "B3".into(), instances: Vec::from([(b3_lhs, b3_rhs)]) },
        Law { name: "B4".into(), instances: Vec::from([(Term::q(y.clone(), consts), y)]) },
    ])
}

/// The four translations between the right Church `i`-reduct `(t_i, 0_i)`
/// and the skew `i`-reduct, stated as identities.
pub fn skew_dictionary(i: u8) -> Vec<Law> {
    let d = IndexSet::singleton(i);
    let (vx, vy, vz) = (Term::var("x"), Term::var("y"), Term::var("z"));
    let zero = Term::Zero(i);
    let meet = |a: Term, b: Term| Term::bin(BinOp::Meet, d, a, b);
    let join = |a: Term, b: Term| Term::bin(BinOp::BarVee, d, a, b);
    let minus = |a: Term, b: Term| Term::bin(BinOp::Minus, d, a, b);
    let t = |a: Term, b: Term, c: Term| Term::t(d, a, b, c);
    let law = |name: &str, l: Term, r: Term| Law { name: name.into(), instances: Vec::from([(l, r)]) };
    Vec::from([
        law(
            "q",
            t(vx.clone(), vy.clone(), vz.clone()),
            join(meet(vx.clone(), vy.clone()), minus(vz.clone(), vx.clone())),
        ),
        law("join", join(vx.clone(), vy.clone()), t(vx.clone(), vx.clone(), vy.clone())),
        law("meet", meet(vx.clone(), vy.clone()), t(vx.clone(), vy.clone(), zero.clone())),
        law("minus", minus(vy.clone(), vx.clone()), t(vx, zero, vy)),
    ])
}
