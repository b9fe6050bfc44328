use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::congruence::{all_congruences, Congruence};
use crate::algebra::IndexedAlgebra;
use crate::check::{advance, space, DEFAULT_BUDGET};
use crate::derived::{coordinates_index, CenterParams};
use crate::error::{Error, Result};
use crate::skew::boolean_center;

/// An n-tuple of pairwise disjoint sets of carrier indices satisfying
/// m1–m3, or the degenerate tuple `(A, .., A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multideal {
    /// Components `I_1..I_n`, each sorted.
    Proper(Vec<Vec<usize>>),
    Degenerate,
}

impl Multideal {
    /// `({e_1}, .., {e_n})`.
    pub fn minimum<A: IndexedAlgebra>(alg: &A) -> Multideal {
        Multideal::Proper(alg.constants().into_iter().map(|c| vec![c]).collect())
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, Multideal::Degenerate)
    }

    pub fn components(&self) -> Option<&[Vec<usize>]> {
        match self {
            Multideal::Proper(c) => Some(c),
            Multideal::Degenerate => None,
        }
    }

    pub(crate) fn proper(&self) -> Result<&[Vec<usize>]> {
        self.components().ok_or(Error::Degenerate)
    }

    /// `I_k` for `k` in `1..=n`.
    pub fn component(&self, k: u8) -> Option<&[usize]> {
        self.components().map(|c| c[k as usize - 1].as_slice())
    }

    pub fn contains(&self, k: u8, x: usize) -> bool {
        match self {
            Multideal::Proper(c) => c[k as usize - 1].binary_search(&x).is_ok(),
            Multideal::Degenerate => true,
        }
    }

    /// The `k` with `x ∈ I_k`, if any.
    pub fn component_of(&self, x: usize) -> Option<u8> {
        self.components()?
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
            .map(|k| k as u8 + 1)
    }

    /// Sorted union of the components.
    pub fn carrier(&self) -> Option<Vec<usize>> {
        let mut all: Vec<usize> = self.components()?.iter().flatten().copied().collect();
        all.sort_unstable();
        Some(all)
    }

    /// Proper with carrier of the given size.
    pub fn is_ultra(&self, size: usize) -> bool {
        self.components().is_some_and(|c| c.iter().map(Vec::len).sum::<usize>() == size)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    M1,
    Disjoint,
    M2,
    M3,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::M1 => "m1",
            Clause::Disjoint => "disjointness",
            Clause::M2 => "m2",
            Clause::M3 => "m3",
        })
    }
}

/// Outcome of [`validate_multideal`].
///
/// `witness` lists carrier indices: the missing constant for m1, the shared
/// element for disjointness, and the full argument list `x, y_1..y_n` of the
/// escaping `q` instance for m2 and m3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Proper(Multideal),
    Degenerate,
    Invalid { clause: Clause, witness: Vec<usize> },
}

fn check_shape<A: IndexedAlgebra>(alg: &A, tuple: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let n = alg.dim().get();
    if tuple.len() != n {
        return Err(Error::Arity { expected: n, found: tuple.len() });
    }
    let s = alg.size();
    tuple
        .iter()
        .map(|c| {
            let mut c = c.clone();
            if let Some(&x) = c.iter().find(|&&x| x >= s) {
                return Err(Error::IndexOutOfRange { index: x, size: s });
            }
            c.sort_unstable();
            c.dedup();
            Ok(c)
        })
        .collect()
}

fn degenerate_witness<A: IndexedAlgebra>(alg: &A, tuple: &[Vec<usize>]) -> bool {
    let consts = alg.constants();
    tuple.iter().enumerate().any(|(r, comp)| {
        consts
            .iter()
            .enumerate()
            .any(|(k, c)| k != r && comp.binary_search(c).is_ok())
    })
}

/// Check m1, disjointness, m2 and m3 by exhaustive instantiation.
///
/// The degenerate criterion (some `e_k ∈ I_r` with `r ≠ k`) is tested
/// first, since the closure of any such tuple is `(A, .., A)`.
pub fn validate_multideal<A: IndexedAlgebra>(alg: &A, candidate: &[Vec<usize>]) -> Result<Validation> {
    let comps = check_shape(alg, candidate)?;
    if degenerate_witness(alg, &comps) {
        return Ok(Validation::Degenerate);
    }
    let n = alg.dim().get();
    let s = alg.size();
    let consts = alg.constants();

    for (k, c) in consts.iter().enumerate() {
        if comps[k].binary_search(c).is_err() {
            return Ok(Validation::Invalid { clause: Clause::M1, witness: vec![*c] });
        }
    }
    let mut label = vec![None::<usize>; s];
    for (k, comp) in comps.iter().enumerate() {
        for &x in comp {
            if label[x].is_some() {
                return Ok(Validation::Invalid { clause: Clause::Disjoint, witness: vec![x] });
            }
            label[x] = Some(k);
        }
    }

    let total: usize = comps.iter().map(Vec::len).sum();
    let m2_cost = space(total, 2).saturating_mul(space(s, n - 1));
    let m3_cost = comps.iter().map(|c| space(c.len(), n)).sum::<u128>().saturating_mul(s as u128);
    let required = m2_cost.saturating_add(m3_cost);
    if required > DEFAULT_BUDGET as u128 {
        return Err(Error::BudgetExceeded { required, budget: DEFAULT_BUDGET });
    }

    let mut args = vec![0usize; n + 1];
    for (r, ir) in comps.iter().enumerate() {
        for &a in ir {
            for (k, ik) in comps.iter().enumerate() {
                for &b in ik {
                    let mut others = vec![0usize; n - 1];
                    loop {
                        args[0] = a;
                        let mut o = 0;
                        for slot in 0..n {
                            args[slot + 1] = if slot == r {
                                b
                            } else {
                                o += 1;
                                others[o - 1]
                            };
                        }
                        let out = alg.q(args[0], &args[1..]);
                        if label[out] != Some(k) {
                            return Ok(Validation::Invalid { clause: Clause::M2, witness: args });
                        }
                        if !advance(&mut others, s) {
                            break;
                        }
                    }
                }
            }
        }
    }

    for (k, ik) in comps.iter().enumerate() {
        let mut pos = vec![0usize; n];
        loop {
            for a in 0..s {
                args[0] = a;
                for slot in 0..n {
                    args[slot + 1] = ik[pos[slot]];
                }
                if label[alg.q(a, &args[1..])] != Some(k) {
                    return Ok(Validation::Invalid { clause: Clause::M3, witness: args });
                }
            }
            if !advance(&mut pos, ik.len()) {
                break;
            }
        }
    }
    Ok(Validation::Proper(Multideal::Proper(comps)))
}

/// The least multideal containing `seed`: constants are added to their
/// components and m2/m3 are applied to a fixpoint.
pub fn ideal_closure<A: IndexedAlgebra>(alg: &A, seed: &[Vec<usize>]) -> Result<Multideal> {
    let comps = check_shape(alg, seed)?;
    let n = alg.dim().get();
    let s = alg.size();
    let mut label = vec![None::<usize>; s];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, c) in alg.constants().into_iter().enumerate() {
        add(&mut label, &mut members, c, k);
    }
    for (k, comp) in comps.iter().enumerate() {
        for &x in comp {
            if add(&mut label, &mut members, x, k).is_none() {
                return Ok(Multideal::Degenerate);
            }
        }
    }

    let mut args = vec![0usize; n + 1];
    loop {
        let mut changed = false;
        // m2
        for r in 0..n {
            let ir = members[r].clone();
            for &a in &ir {
                for k in 0..n {
                    let ik = members[k].clone();
                    for &b in &ik {
                        let mut others = vec![0usize; n - 1];
                        loop {
                            let mut o = 0;
                            for slot in 0..n {
                                args[slot + 1] = if slot == r {
                                    b
                                } else {
                                    o += 1;
                                    others[o - 1]
                                };
                            }
                            let out = alg.q(a, &args[1..]);
                            match add(&mut label, &mut members, out, k) {
                                None => return Ok(Multideal::Degenerate),
                                Some(c) => changed |= c,
                            }
                            if !advance(&mut others, s) {
                                break;
                            }
                        }
                    }
                }
            }
        }
        // m3
        for k in 0..n {
            let ik = members[k].clone();
            let mut pos = vec![0usize; n];
            loop {
                for slot in 0..n {
                    args[slot + 1] = ik[pos[slot]];
                }
                for a in 0..s {
                    let out = alg.q(a, &args[1..]);
                    match add(&mut label, &mut members, out, k) {
                        None => return Ok(Multideal::Degenerate),
                        Some(c) => changed |= c,
                    }
                }
                if !advance(&mut pos, ik.len()) {
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for m in members.iter_mut() {
        m.sort_unstable();
    }
    Ok(Multideal::Proper(members))
}

/// Put `x` in component `k`: `None` on a clash, otherwise whether it is new.
fn add(label: &mut [Option<usize>], members: &mut [Vec<usize>], x: usize, k: usize) -> Option<bool> {
    match label[x] {
        Some(j) if j == k => Some(false),
        Some(_) => None,
        None => {
            label[x] = Some(k);
            members[k].push(x);
            Some(true)
        }
    }
}

/// `I(θ) = (e_1/θ, .., e_n/θ)`; degenerate when two constants are related.
pub fn multideal_of<A: IndexedAlgebra>(alg: &A, theta: &Congruence) -> Result<Multideal> {
    if theta.size() != alg.size() {
        return Err(Error::Shape { expected: alg.size(), found: theta.size() });
    }
    let consts = alg.constants();
    for (a, &ca) in consts.iter().enumerate() {
        if consts[a + 1..].iter().any(|&cb| theta.related(ca, cb)) {
            return Ok(Multideal::Degenerate);
        }
    }
    Ok(Multideal::Proper(consts.iter().map(|&c| theta.class_of(c)).collect()))
}

/// `x θ_I y` iff `f(x_k) = f(y_k)` for every `k`, where `f` is the quotient
/// of the Boolean center by the principal ideal on the join of `I_i ∩ B_ij`.
pub fn theta_of<A: IndexedAlgebra>(alg: &A, ideal: &Multideal, cp: CenterParams) -> Result<Congruence> {
    let comps = ideal.proper()?;
    let b = boolean_center(alg, cp);
    let lower: Vec<usize> = comps[cp.i() as usize - 1]
        .iter()
        .copied()
        .filter(|&x| b.contains(x))
        .collect();
    let m = b.join_all(&lower);
    let not_m = b.neg(m);
    let mut keys: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let labels: Vec<usize> = (0..alg.size())
        .map(|x| {
            let key: Vec<usize> = coordinates_index(alg, x, cp)
                .into_iter()
                .map(|c| b.meet(c, not_m))
                .collect();
            let next = keys.len();
            *keys.entry(key).or_insert(next)
        })
        .collect();
    Ok(Congruence::from_labels(&labels))
}

/// Every proper multideal, via the congruence correspondence, in the order
/// of [`all_congruences`]. The degenerate multideal is omitted.
pub fn all_multideals<A: IndexedAlgebra>(alg: &A, bound: usize) -> Result<Vec<Multideal>> {
    let mut out = Vec::new();
    for c in all_congruences(alg, bound)? {
        let m = multideal_of(alg, &c)?;
        if !m.is_degenerate() {
            out.push(m);
        }
    }
    Ok(out)
}
