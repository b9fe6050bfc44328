//! Compiling finite functions on `{1..n}` into `q`-terms, simplifying them,
//! and checking the results.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Dim, Generator, IndexedAlgebra, TableAlgebra};
use crate::check::{advance, space};
use crate::error::{Error, Result};
use crate::term::{Program, Term};

/// A function `{1..n}^k → {1..n}`, row-major with the first argument
/// varying slowest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    dim: Dim,
    arity: usize,
    entries: Vec<u8>,
}

/// The canonical variable names `x1..xk`.
pub fn variables(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}

impl TruthTable {
    pub fn new(dim: Dim, arity: usize, entries: Vec<u8>) -> Result<Self> {
        let len = space(dim.get(), arity);
        if len != entries.len() as u128 {
            return Err(Error::Shape { expected: usize::try_from(len).unwrap_or(usize::MAX), found: entries.len() });
        }
        for &v in &entries {
            dim.check_value(v as usize)?;
        }
        Ok(TruthTable { dim, arity, entries })
    }

    /// Tabulate `f` on argument tuples with values in `1..=n`.
    pub fn from_fn(dim: Dim, arity: usize, mut f: impl FnMut(&[u8]) -> u8) -> Result<Self> {
        let mut entries = Vec::new();
        let mut idx = vec![0usize; arity];
        let mut args = vec![0u8; arity];
        loop {
            for (a, &i) in args.iter_mut().zip(&idx) {
                *a = i as u8 + 1;
            }
            entries.push(f(&args));
            if !advance(&mut idx, dim.get()) {
                break;
            }
        }
        TruthTable::new(dim, arity, entries)
    }

    /// The table of a term over the variables `x1..xk`.
    pub fn of_term(t: &Term, dim: Dim, arity: usize) -> Result<Self> {
        let prog = Program::compile(t, dim, &variables(arity))?;
        let g = Generator(dim);
        let mut stack = Vec::new();
        let mut env = vec![0usize; arity];
        TruthTable::from_fn(dim, arity, |args| {
            for (e, &a) in env.iter_mut().zip(args) {
                *e = a as usize - 1;
            }
            prog.run(&g, &env, &mut stack) as u8 + 1
        })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, args: &[u8]) -> u8 {
        let n = self.dim.get();
        let idx = args.iter().fold(0, |acc, &a| acc * n + (a as usize - 1));
        self.entries[idx]
    }

    /// The table with the first argument fixed to `k`.
    pub fn restrict_first(&self, k: u8) -> TruthTable {
        let block = self.entries.len() / self.dim.get();
        let start = (k as usize - 1) * block;
        TruthTable { dim: self.dim, arity: self.arity - 1, entries: self.entries[start..start + block].to_vec() }
    }

    /// Every table of the given arity, in lexicographic order of entries.
    pub fn all(dim: Dim, arity: usize) -> impl Iterator<Item = TruthTable> {
        let len = dim.get().pow(arity as u32);
        let mut digits = vec![0usize; len];
        let mut done = false;
        core::iter::from_fn(move || {
            if done {
                return None;
            }
            let t = TruthTable { dim, arity, entries: digits.iter().map(|&d| d as u8 + 1).collect() };
            done = !advance(&mut digits, dim.get());
            Some(t)
        })
    }
}

/// Shannon expansion on `x1`, then `x2`, and so on:
/// `q(x1, synth(f|x1=e1), .., synth(f|x1=en))`, with constants at arity 0.
pub fn synth(table: &TruthTable) -> Term {
    expand(table, 1)
}

fn expand(table: &TruthTable, var: usize) -> Term {
    if table.arity == 0 {
        return Term::e(table.entries[0]);
    }
    let branches = table.dim.values().map(|k| expand(&table.restrict_first(k), var + 1));
    Term::q(Term::Var(format!("x{var}")), branches)
}

/// Whether `t` agrees with `table` on all inputs. Fails when `t` mentions a
/// variable outside `x1..xk`.
pub fn verify_term(t: &Term, table: &TruthTable) -> Result<bool> {
    Ok(&TruthTable::of_term(t, table.dim, table.arity)? == table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `q(e_i, y_1, .., y_n) → y_i`
    ConstScrutinee,
    /// `q(x, y, .., y) → y`
    EqualBranches,
    /// `q(x, e_1, .., e_n) → x`
    IdentityBranches,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::ConstScrutinee => "B0-const-scrutinee",
            Rule::EqualBranches => "B1-equal-branches",
            Rule::IdentityBranches => "B4-identity-branches",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rewrite at a path of child indices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: Rule,
    pub position: Vec<usize>,
}

fn constant_of(t: &Term) -> Option<u8> {
    match t {
        Term::Const(k) | Term::Zero(k) => Some(*k),
        _ => None,
    }
}

fn rewrite_once(args: &[Term], n: usize) -> Option<(Rule, Term)> {
    if args.len() != n + 1 {
        return None;
    }
    let (x, ys) = (&args[0], &args[1..]);
    if let Some(k) = constant_of(x) {
        return Some((Rule::ConstScrutinee, ys[k as usize - 1].clone()));
    }
    if ys.iter().all(|y| y == &ys[0]) {
        return Some((Rule::EqualBranches, ys[0].clone()));
    }
    if ys.iter().enumerate().all(|(k, y)| constant_of(y) == Some(k as u8 + 1)) {
        return Some((Rule::IdentityBranches, x.clone()));
    }
    None
}

/// Rewrite innermost-first, leftmost first, with B0, B1 and B4 read left to
/// right. Each rule removes nodes, so this terminates.
pub fn simplify(t: &Term, n: Dim) -> (Term, Vec<RewriteStep>) {
    let mut trace = Vec::new();
    let mut path = Vec::new();
    let out = simplify_at(t, n.get(), &mut path, &mut trace);
    (out, trace)
}

fn simplify_at(t: &Term, n: usize, path: &mut Vec<usize>, trace: &mut Vec<RewriteStep>) -> Term {
    let mut kids = Vec::with_capacity(t.children().len());
    for (i, c) in t.children().iter().enumerate() {
        path.push(i);
        kids.push(simplify_at(c, n, path, trace));
        path.pop();
    }
    let mut node = match t {
        Term::Var(_) | Term::Const(_) | Term::Zero(_) => return t.clone(),
        Term::Q(_) => Term::Q(kids),
        Term::T(d, _) => {
            let [x, y, z]: [Term; 3] = kids.try_into().expect("ternary");
            Term::t(*d, x, y, z)
        }
        Term::Bin(op, d, _) => {
            let [a, b]: [Term; 2] = kids.try_into().expect("binary");
            Term::bin(*op, *d, a, b)
        }
    };
    // the result of a rule is an already simplified subterm, but it may sit
    // under a q whose other rules now apply; loop until none does
    while let Term::Q(args) = &node {
        match rewrite_once(args, n) {
            Some((rule, next)) => {
                trace.push(RewriteStep { rule, position: path.clone() });
                node = next;
            }
            None => break,
        }
    }
    node
}

/// Outcome of the primality search on a small table algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primality {
    /// A term operation `q'` and constants realising the generator were
    /// found: `order[k-1]` is the element playing `e_k`.
    Primal { order: Vec<usize> },
    /// The `(n+1)`-ary clone was closed without meeting any target.
    NotPrimal,
    /// The evaluation budget ran out first.
    Unknown { explored: usize },
    /// Size differs from `n` or exceeds [`PRIMALITY_LIMIT`].
    NotApplicable,
}

pub const PRIMALITY_LIMIT: usize = 4;

/// Best-effort test of whether a table algebra of cardinality `n` has the
/// generator as a reduct of its term operations. Explores the `(n+1)`-ary
/// term operations generated by projections and constants until one of the
/// `n!` target operations `q'(x, ys) = ys[φ(x)]` appears. Exponential.
pub fn primality_search(alg: &TableAlgebra, budget: u64) -> Primality {
    let n = alg.dim().get();
    let s = alg.size();
    if s != n || s > PRIMALITY_LIMIT {
        return Primality::NotApplicable;
    }
    let arity = n + 1;
    let points = s.pow(arity as u32);
    let decode = |mut p: usize| {
        let mut tuple = vec![0usize; arity];
        for slot in (0..arity).rev() {
            tuple[slot] = p % s;
            p /= s;
        }
        tuple
    };
    let tuples: Vec<Vec<usize>> = (0..points).map(decode).collect();

    // targets keyed by operation, each with the bijection it encodes
    let mut targets: Vec<(Vec<u8>, Vec<usize>)> = Vec::new();
    for perm in crate::derived::Permutation::all(alg.dim()) {
        let phi: Vec<usize> = (0..s).map(|x| perm.apply(x as u8 + 1) as usize - 1).collect();
        let op: Vec<u8> = tuples.iter().map(|t| t[1 + phi[t[0]]] as u8).collect();
        let mut order = vec![0usize; n];
        for x in 0..s {
            order[phi[x]] = x;
        }
        targets.push((op, order));
    }
    let hit = |f: &Vec<u8>| targets.iter().find(|(op, _)| op == f).map(|(_, o)| o.clone());

    let mut known: Vec<Vec<u8>> = Vec::new();
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut push = |f: Vec<u8>, known: &mut Vec<Vec<u8>>| {
        if seen.insert(f.clone()) {
            known.push(f);
        }
    };
    for slot in 0..arity {
        push(tuples.iter().map(|t| t[slot] as u8).collect(), &mut known);
    }
    for c in alg.constants() {
        push(vec![c as u8; points], &mut known);
    }
    for f in &known {
        if let Some(order) = hit(f) {
            return Primality::Primal { order };
        }
    }

    let mut evaluations: u64 = 0;
    let mut done = 0;
    let mut ys = vec![0usize; n];
    loop {
        let old = done;
        done = known.len();
        if old == done {
            return Primality::NotPrimal;
        }
        // combinations using at least one function from the newest layer
        let mut pick = vec![0usize; arity];
        loop {
            if pick.iter().any(|&p| p >= old) {
                evaluations += 1;
                if evaluations > budget {
                    return Primality::Unknown { explored: known.len() };
                }
                let f: Vec<u8> = (0..points)
                    .map(|p| {
                        for k in 0..n {
                            ys[k] = known[pick[k + 1]][p] as usize;
                        }
                        alg.q(known[pick[0]][p] as usize, &ys) as u8
                    })
                    .collect();
                if let Some(order) = hit(&f) {
                    return Primality::Primal { order };
                }
                push(f, &mut known);
            }
            if !advance(&mut pick, done) {
                break;
            }
        }
    }
}
