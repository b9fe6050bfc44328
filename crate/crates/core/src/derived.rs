//! Operations derived from q: `t_d`, the binary operations, the action of
//! permutations, coordinates, `+_i`, and translations between signatures.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Dim, Element, IndexSet, IndexedAlgebra, PowerAlgebra};
use crate::error::{Error, Result};
use crate::term::{BinOp, Term};

/// The pair `(i, j)`, `i ≠ j`, fixing the Boolean center `B_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CenterParams {
    i: u8,
    j: u8,
}

impl CenterParams {
    pub fn new(n: Dim, i: u8, j: u8) -> Result<Self> {
        n.check_value(i as usize)?;
        n.check_value(j as usize)?;
        if i == j {
            return Err(Error::InvalidIndex(format!("i and j must differ, both are {i}")));
        }
        Ok(CenterParams { i, j })
    }

    pub fn i(self) -> u8 {
        self.i
    }

    pub fn j(self) -> u8 {
        self.j
    }
}

impl Default for CenterParams {
    fn default() -> Self {
        CenterParams { i: 1, j: 2 }
    }
}

/// Designated constants for a derived operation on subscript `d`.
///
/// `i` must lie in `d` and `j` outside; `None` picks the least admissible
/// index.
pub fn designated(n: Dim, d: IndexSet, i: Option<u8>, j: Option<u8>) -> Result<(u8, Option<u8>)> {
    d.validate(n)?;
    let i = match i {
        Some(i) if d.contains(i) => i,
        Some(i) => return Err(Error::InvalidIndex(format!("0_{i} must lie in the subscript {{{d}}}"))),
        None => d.first().expect("validated nonempty"),
    };
    let outside = d.complement(n);
    let j = match j {
        Some(j) if outside.contains(j) => Some(j),
        Some(j) => return Err(Error::InvalidIndex(format!("1_{j} must lie outside the subscript {{{d}}}"))),
        None => outside.first(),
    };
    Ok((i, j))
}

fn check_element(alg: &PowerAlgebra, x: &Element) -> Result<()> {
    if x.points() != alg.points() {
        return Err(Error::Shape { expected: alg.points(), found: x.points() });
    }
    for &v in x.values() {
        alg.dim().check_value(v as usize)?;
    }
    if !alg.contains(x) {
        return Err(Error::NotInCarrier);
    }
    Ok(())
}

/// `t_d(x, y, z) = q(x, y/d̄, z/d)`.
pub fn t_eval(alg: &PowerAlgebra, d: IndexSet, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    d.validate(alg.dim())?;
    let ys: Vec<Element> = alg
        .dim()
        .values()
        .map(|k| if d.contains(k) { z.clone() } else { y.clone() })
        .collect();
    alg.q_eval(x, &ys)
}

/// A derived binary operation with the default designated constants.
///
/// For [`BinOp::Minus`] the arguments are read as `x \_d y`, i.e. the
/// result is `t_d(y, 0_i, x)`.
pub fn derived_bin(alg: &PowerAlgebra, op: BinOp, d: IndexSet, x: &Element, y: &Element) -> Result<Element> {
    derived_bin_with(alg, op, d, None, None, x, y)
}

/// [`derived_bin`] with explicit `0_i` and `1_j`.
pub fn derived_bin_with(
    alg: &PowerAlgebra,
    op: BinOp,
    d: IndexSet,
    i: Option<u8>,
    j: Option<u8>,
    x: &Element,
    y: &Element,
) -> Result<Element> {
    let (i, j) = designated(alg.dim(), d, i, j)?;
    let zero = alg.constant(i);
    match op {
        BinOp::Meet => t_eval(alg, d, x, y, &zero),
        BinOp::Join => {
            let one = alg.constant(j.ok_or(Error::NoComplementIndex)?);
            t_eval(alg, d, x, &one, y)
        }
        BinOp::Minus => t_eval(alg, d, y, &zero, x),
        BinOp::BarWedge => t_eval(alg, d, x, y, x),
        BinOp::BarVee => t_eval(alg, d, x, x, y),
    }
}

/// Index-level derived operation over any indexed algebra, same argument
/// convention as [`derived_bin`].
pub fn bin_index<A: IndexedAlgebra>(alg: &A, op: BinOp, d: IndexSet, i: u8, j: Option<u8>, x: usize, y: usize) -> usize {
    let zero = alg.constant(i);
    match op {
        BinOp::Meet => alg.t(d, x, y, zero),
        BinOp::Join => alg.t(d, x, alg.constant(j.expect("join needs 1_j")), y),
        BinOp::Minus => alg.t(d, y, zero, x),
        BinOp::BarWedge => alg.t(d, x, y, x),
        BinOp::BarVee => alg.t(d, x, x, y),
    }
}

/// A permutation of `1..=n`, stored as the images of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(n: Dim, images: Vec<u8>) -> Result<Self> {
        if images.len() != n.get() {
            return Err(Error::Arity { expected: n.get(), found: images.len() });
        }
        let mut seen = Vec::from_iter(core::iter::repeat(false).take(n.get()));
        for &k in &images {
            n.check_value(k as usize)?;
            if core::mem::replace(&mut seen[k as usize - 1], true) {
                return Err(Error::InvalidIndex(format!("{k} occurs twice in a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: Dim) -> Self {
        Permutation(n.values().collect())
    }

    /// The transposition `(r k)`.
    pub fn transposition(n: Dim, r: u8, k: u8) -> Result<Self> {
        n.check_value(r as usize)?;
        n.check_value(k as usize)?;
        let mut p = Self::identity(n);
        p.0.swap(r as usize - 1, k as usize - 1);
        Ok(p)
    }

    /// All `n!` permutations in lexicographic order of their image vectors.
    pub fn all(n: Dim) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for k in 0..used.len() {
                if !used[k] {
                    used[k] = true;
                    prefix.push(k as u8 + 1);
                    go(prefix, used, out);
                    prefix.pop();
                    used[k] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut Vec::from_iter(core::iter::repeat(false).take(n.get())), &mut out);
        out
    }

    #[inline]
    pub fn apply(&self, k: u8) -> u8 {
        self.0[k as usize - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation(first.0.iter().map(|&k| self.apply(k)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = self.0.clone();
        for (pos, &k) in self.0.iter().enumerate() {
            inv[k as usize - 1] = pos as u8 + 1;
        }
        Permutation(inv)
    }
}

/// `x^σ = q(x, e_{σ1}, .., e_{σn})`.
pub fn perm_apply(alg: &PowerAlgebra, x: &Element, sigma: &Permutation) -> Result<Element> {
    if sigma.0.len() != alg.dim().get() {
        return Err(Error::Arity { expected: alg.dim().get(), found: sigma.0.len() });
    }
    let ys: Vec<Element> = sigma.0.iter().map(|&k| alg.constant(k)).collect();
    let out = alg.q_eval(x, &ys)?;
    debug_assert!(out.values().iter().zip(x.values()).all(|(&o, &v)| o == sigma.apply(v)));
    Ok(out)
}

/// Index-level `x^σ`.
pub fn perm_index<A: IndexedAlgebra>(alg: &A, x: usize, sigma: &Permutation) -> usize {
    let ys: Vec<usize> = sigma.0.iter().map(|&k| alg.constant(k)).collect();
    alg.q(x, &ys)
}

/// The coordinates `x_k = t_k(x, e_i, e_j)`, `k = 1..n`.
pub fn coordinates(alg: &PowerAlgebra, x: &Element, cp: CenterParams) -> Result<Vec<Element>> {
    check_element(alg, x)?;
    let (ei, ej) = (alg.constant(cp.i), alg.constant(cp.j));
    alg.dim()
        .values()
        .map(|k| t_eval(alg, IndexSet::singleton(k), x, &ei, &ej))
        .collect()
}

/// Index-level coordinates.
pub fn coordinates_index<A: IndexedAlgebra>(alg: &A, x: usize, cp: CenterParams) -> Vec<usize> {
    let (ei, ej) = (alg.constant(cp.i), alg.constant(cp.j));
    alg.dim().values().map(|k| alg.t(IndexSet::singleton(k), x, ei, ej)).collect()
}

/// `x +_i y = q(x, t_i(y,e_i,e_1), .., y, .., t_i(y,e_i,e_n))` with `y` at
/// position `i`.
pub fn plus_i(alg: &PowerAlgebra, x: &Element, y: &Element, i: u8) -> Result<Element> {
    alg.dim().check_value(i as usize)?;
    check_element(alg, y)?;
    let d = IndexSet::singleton(i);
    let ei = alg.constant(i);
    let mut ys = Vec::with_capacity(alg.dim().get());
    for k in alg.dim().values() {
        ys.push(if k == i { y.clone() } else { t_eval(alg, d, y, &ei, &alg.constant(k))? });
    }
    alg.q_eval(x, &ys)
}

/// How a chain `a_1 +_i a_2 +_i .. +_i a_n` is bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `a_1 +_i (a_2 +_i (.. +_i a_n))`
    Right,
    /// `((a_1 +_i a_2) +_i ..) +_i a_n`
    Left,
}

/// Fold `+_i` over the summands.
pub fn sum_i(alg: &PowerAlgebra, summands: &[Element], i: u8, bracketing: Bracketing) -> Result<Element> {
    let Some((first, rest)) = summands.split_first() else {
        return Ok(alg.constant(i));
    };
    match bracketing {
        Bracketing::Left => rest.iter().try_fold(first.clone(), |acc, s| plus_i(alg, &acc, s, i)),
        Bracketing::Right => {
            let (last, init) = summands.split_last().unwrap();
            init.iter().rev().try_fold(last.clone(), |acc, s| plus_i(alg, s, &acc, i))
        }
    }
}

/// `(x_1 ∧_i e_1) +_i .. +_i (x_n ∧_i e_n)`, right-nested.
pub fn reconstruct(alg: &PowerAlgebra, coords: &[Element], i: u8) -> Result<Element> {
    let summands = reconstruct_summands(alg, coords, i)?;
    sum_i(alg, &summands, i, Bracketing::Right)
}

/// The summands `x_k ∧_i e_k` of [`reconstruct`].
pub fn reconstruct_summands(alg: &PowerAlgebra, coords: &[Element], i: u8) -> Result<Vec<Element>> {
    let n = alg.dim();
    if coords.len() != n.get() {
        return Err(Error::Arity { expected: n.get(), found: coords.len() });
    }
    let d = IndexSet::singleton(i);
    n.values()
        .zip(coords)
        .map(|(k, c)| derived_bin(alg, BinOp::Meet, d, c, &alg.constant(k)))
        .collect()
}

/// The signature a term is translated into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signature {
    /// `q` and `e_k` only.
    Q,
    /// `∧_i`, `∨̄_i`, `\_i` and `0_i` for one fixed `i`.
    Skew(u8),
    /// `t_1..t_n` and `0_1..0_n`.
    Star,
}

/// Translate a term into another signature, preserving its value in every
/// nBA.
pub fn translate_term(t: &Term, n: Dim, target: Signature) -> Result<Term> {
    t.validate(n)?;
    match target {
        Signature::Q => Ok(to_q(t, n)),
        Signature::Star => Ok(to_star(&to_q(t, n), n)),
        Signature::Skew(i) => {
            n.check_value(i as usize)?;
            to_skew(t, n, i)
        }
    }
}

fn t_as_q(d: IndexSet, n: Dim, x: Term, y: Term, z: Term) -> Term {
    Term::q(x, n.values().map(|k| if d.contains(k) { z.clone() } else { y.clone() }))
}

fn to_q(t: &Term, n: Dim) -> Term {
    match t {
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::Zero(k) => Term::Const(*k),
        Term::Q(args) => Term::Q(args.iter().map(|a| to_q(a, n)).collect()),
        Term::T(d, args) => {
            let [x, y, z] = &**args;
            t_as_q(*d, n, to_q(x, n), to_q(y, n), to_q(z, n))
        }
        Term::Bin(op, d, args) => {
            let [a, b] = &**args;
            let (a, b) = (to_q(a, n), to_q(b, n));
            let i = d.first().expect("validated");
            let zero = Term::Const(i);
            match op {
                BinOp::Meet => t_as_q(*d, n, a, b, zero),
                BinOp::Join => {
                    let j = d.complement(n).first().expect("validated");
                    t_as_q(*d, n, a, Term::Const(j), b)
                }
                BinOp::Minus => t_as_q(*d, n, b, zero, a),
                BinOp::BarWedge => t_as_q(*d, n, a.clone(), b, a),
                BinOp::BarVee => t_as_q(*d, n, a.clone(), a, b),
            }
        }
    }
}

/// `q_t(x, y_1..y_n) = t_1(x, t_2(x, .. t_{n-1}(x, y_n, y_{n-1}) .., y_2), y_1)`.
pub fn q_as_star(x: Term, ys: Vec<Term>) -> Term {
    let n = ys.len();
    let mut acc = ys[n - 1].clone();
    for k in (1..n).rev() {
        acc = Term::t1(k as u8, x.clone(), acc, ys[k - 1].clone());
    }
    acc
}

fn to_star(t: &Term, n: Dim) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::Const(k) | Term::Zero(k) => Term::Zero(*k),
        Term::Q(args) => {
            let conv: Vec<Term> = args.iter().map(|a| to_star(a, n)).collect();
            let mut it = conv.into_iter();
            let x = it.next().expect("q has a scrutinee");
            q_as_star(x, it.collect())
        }
        Term::T(..) | Term::Bin(..) => unreachable!("input is in the q signature"),
    }
}

fn to_skew(t: &Term, n: Dim, i: u8) -> Result<Term> {
    let d = IndexSet::singleton(i);
    let foreign = |what: &str| Err(Error::Translation(format!("{what} has no skew-{i} counterpart")));
    match t {
        Term::Var(_) => Ok(t.clone()),
        Term::Const(k) | Term::Zero(k) if *k == i => Ok(Term::Zero(i)),
        Term::Const(_) | Term::Zero(_) => foreign(&format!("{t}")),
        Term::T(sub, args) if *sub == d => {
            let [x, y, z] = &**args;
            let (x, y, z) = (to_skew(x, n, i)?, to_skew(y, n, i)?, to_skew(z, n, i)?);
            Ok(Term::bin(
                BinOp::BarVee,
                d,
                Term::bin(BinOp::Meet, d, x.clone(), y),
                Term::bin(BinOp::Minus, d, z, x),
            ))
        }
        Term::Q(args) if n.get() == 2 => {
            // q(x, y1, y2) = t_i(x, y_other, y_i)
            let other = 3 - i as usize;
            let t = Term::t(d, args[0].clone(), args[other].clone(), args[i as usize].clone());
            to_skew(&t, n, i)
        }
        Term::Bin(op, sub, args) if *sub == d && *op != BinOp::Join => {
            let [a, b] = &**args;
            let op = if *op == BinOp::BarWedge { BinOp::Meet } else { *op };
            Ok(Term::bin(op, d, to_skew(a, n, i)?, to_skew(b, n, i)?))
        }
        Term::Q(_) | Term::T(..) | Term::Bin(..) => foreign(&format!("{t}")),
    }
}
