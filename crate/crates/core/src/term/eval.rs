use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{BinOp, Term};
use crate::algebra::{Dim, Element, IndexSet, IndexedAlgebra, PowerAlgebra};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Var(usize),
    Const(u8),
    Q,
    T(IndexSet),
}

/// A term lowered to postfix code over `q` and `t_d`.
///
/// Derived binary operations are expanded with the default designated
/// indices `i = min d` and `j = min d̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    dim: Dim,
    ops: Vec<Op>,
    vars: Vec<String>,
}

impl Program {
    /// Compile against a fixed variable order; every free variable of `t`
    /// must appear in `vars`.
    pub fn compile(t: &Term, n: Dim, vars: &[String]) -> Result<Program> {
        t.validate(n)?;
        let mut ops = Vec::new();
        lower(t, n, vars, &mut ops)?;
        Ok(Program { dim: n, ops, vars: vars.to_vec() })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Evaluate with `env[v]` the carrier index bound to `vars()[v]`.
    pub fn run<A: IndexedAlgebra>(&self, alg: &A, env: &[usize], stack: &mut Vec<usize>) -> usize {
        debug_assert_eq!(alg.dim(), self.dim);
        let n = self.dim.get();
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Var(v) => stack.push(env[v]),
                Op::Const(k) => stack.push(alg.constant(k)),
                Op::Q => {
                    let base = stack.len() - n - 1;
                    let out = alg.q(stack[base], &stack[base + 1..]);
                    stack.truncate(base);
                    stack.push(out);
                }
                Op::T(d) => {
                    let z = stack.pop().unwrap();
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    stack.push(alg.t(d, x, y, z));
                }
            }
        }
        stack.pop().expect("program leaves one value")
    }
}

fn lower(t: &Term, n: Dim, vars: &[String], ops: &mut Vec<Op>) -> Result<()> {
    match t {
        Term::Var(v) => {
            let idx = vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            ops.push(Op::Var(idx));
        }
        Term::Const(k) | Term::Zero(k) => ops.push(Op::Const(*k)),
        Term::Q(args) => {
            for a in args {
                lower(a, n, vars, ops)?;
            }
            ops.push(Op::Q);
        }
        Term::T(d, args) => {
            for a in args.iter() {
                lower(a, n, vars, ops)?;
            }
            ops.push(Op::T(*d));
        }
        Term::Bin(op, d, args) => {
            let [a, b] = &**args;
            let i = d.first().ok_or(Error::EmptySubscript)?;
            let j = || d.complement(n).first().ok_or(Error::NoComplementIndex);
            match op {
                BinOp::Meet => {
                    lower(a, n, vars, ops)?;
                    lower(b, n, vars, ops)?;
                    ops.push(Op::Const(i));
                }
                BinOp::Join => {
                    let j = j()?;
                    lower(a, n, vars, ops)?;
                    ops.push(Op::Const(j));
                    lower(b, n, vars, ops)?;
                }
                BinOp::Minus => {
                    lower(b, n, vars, ops)?;
                    ops.push(Op::Const(i));
                    lower(a, n, vars, ops)?;
                }
                BinOp::BarWedge => {
                    lower(a, n, vars, ops)?;
                    lower(b, n, vars, ops)?;
                    lower(a, n, vars, ops)?;
                }
                BinOp::BarVee => {
                    lower(a, n, vars, ops)?;
                    lower(a, n, vars, ops)?;
                    lower(b, n, vars, ops)?;
                }
            }
            ops.push(Op::T(*d));
        }
    }
    Ok(())
}

/// Evaluate over any indexed algebra with variables bound to carrier indices.
pub fn eval_indexed<A: IndexedAlgebra>(
    t: &Term,
    alg: &A,
    env: &BTreeMap<String, usize>,
) -> Result<usize> {
    let vars = t.vars();
    let mut values = Vec::with_capacity(vars.len());
    for v in &vars {
        let idx = *env.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
        if idx >= alg.size() {
            return Err(Error::IndexOutOfRange { index: idx, size: alg.size() });
        }
        values.push(idx);
    }
    let prog = Program::compile(t, alg.dim(), &vars)?;
    Ok(prog.run(alg, &values, &mut Vec::new()))
}

/// Evaluate a term in a sub-power, with `t_d` and the derived operations
/// elaborated to `q`.
pub fn eval_term(t: &Term, env: &BTreeMap<String, Element>, alg: &PowerAlgebra) -> Result<Element> {
    let mut indices = BTreeMap::new();
    for v in t.vars() {
        let x = env.get(&v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
        if x.points() != alg.points() {
            return Err(Error::Shape { expected: alg.points(), found: x.points() });
        }
        for &val in x.values() {
            alg.dim().check_value(val as usize)?;
        }
        let idx = alg.index_of(x).ok_or(Error::NotInCarrier)?;
        indices.insert(v, idx);
    }
    let idx = eval_indexed(t, alg, &indices)?;
    Ok(alg.element(idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{generator, power_algebra};
    use crate::term::parse_term;
    use alloc::vec;

    fn env(pairs: &[(&str, &[u8])]) -> BTreeMap<String, Element> {
        pairs.iter().map(|(k, v)| (String::from(*k), Element::from_raw(v.to_vec()))).collect()
    }

    #[test]
    fn t_with_first_constant_picks_z() {
        let a = generator(3).unwrap();
        let t = parse_term("t[1](x,y,z)", a.dim()).unwrap();
        let e = env(&[("x", &[1]), ("y", &[2]), ("z", &[3])]);
        assert_eq!(eval_term(&t, &e, &a).unwrap(), Element::from_raw(vec![3]));
    }

    #[test]
    fn meet_with_outside_constant_is_identity() {
        let a = power_algebra(3, 2).unwrap();
        let t = parse_term("and[1](e2,x)", a.dim()).unwrap();
        for x in a.elements() {
            let e: BTreeMap<String, Element> = [(String::from("x"), x.clone())].into();
            assert_eq!(eval_term(&t, &e, &a).unwrap(), x);
        }
    }

    #[test]
    fn identity_branches_return_scrutinee() {
        let a = power_algebra(3, 2).unwrap();
        let t = parse_term("q(x,e1,e2,e3)", a.dim()).unwrap();
        for x in a.elements() {
            let e: BTreeMap<String, Element> = [(String::from("x"), x.clone())].into();
            assert_eq!(eval_term(&t, &e, &a).unwrap(), x);
        }
    }

    #[test]
    fn unbound_variable() {
        let a = generator(2).unwrap();
        let t = parse_term("q(x,y,e1)", a.dim()).unwrap();
        let e = env(&[("x", &[1])]);
        assert_eq!(eval_term(&t, &e, &a), Err(Error::UnboundVariable("y".into())));
    }

    #[test]
    fn rejects_elements_outside_carrier() {
        let a = power_algebra(3, 2).unwrap();
        let diag = crate::algebra::subalgebra_closure(&a, &[]).unwrap();
        let t = parse_term("x", a.dim()).unwrap();
        let e = env(&[("x", &[1, 2])]);
        assert_eq!(eval_term(&t, &e, &diag), Err(Error::NotInCarrier));
    }
}
