use alloc::vec;
use alloc::vec::Vec;

use super::multideal::Multideal;
use crate::algebra::IndexedAlgebra;
use crate::check::advance;
use crate::derived::{coordinates_index, CenterParams};
use crate::error::{Error, Result};
use crate::skew::{boolean_center, BooleanCenter};

/// A proper multideal whose carrier is the whole algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ultramultideal {
    components: Vec<Vec<usize>>,
}

impl Ultramultideal {
    /// Wrap a multideal, checking that it is proper and total.
    pub fn new(m: &Multideal, size: usize) -> Result<Self> {
        let comps = m.proper()?;
        if !m.is_ultra(size) {
            return Err(Error::NotUltra);
        }
        Ok(Ultramultideal { components: comps.to_vec() })
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn to_multideal(&self) -> Multideal {
        Multideal::Proper(self.components.clone())
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// `h(x) = k` for `x ∈ G_k`, with `k` in `1..=n`.
    pub fn homomorphism(&self) -> Vec<u8> {
        let mut h = vec![0u8; self.size()];
        for (k, comp) in self.components.iter().enumerate() {
            for &x in comp {
                h[x] = k as u8 + 1;
            }
        }
        h
    }

    /// `G_k = h⁻¹(k)` for a surjective homomorphism `h` onto the generator.
    pub fn from_homomorphism<A: IndexedAlgebra>(alg: &A, h: &[u8]) -> Result<Self> {
        if !is_homomorphism_onto(alg, h) {
            return Err(Error::NotHomomorphism);
        }
        let n = alg.dim().get();
        let mut components = vec![Vec::new(); n];
        for (x, &k) in h.iter().enumerate() {
            components[k as usize - 1].push(x);
        }
        Ok(Ultramultideal { components })
    }
}

/// Whether `h` (values `1..=n`) is a `q`-homomorphism onto the generator
/// fixing every constant.
pub fn is_homomorphism_onto<A: IndexedAlgebra>(alg: &A, h: &[u8]) -> bool {
    let n = alg.dim().get();
    let s = alg.size();
    if h.len() != s || h.iter().any(|&k| k == 0 || k as usize > n) {
        return false;
    }
    if alg.constants().iter().enumerate().any(|(k, &c)| h[c] as usize != k + 1) {
        return false;
    }
    let mut args = vec![0usize; n + 1];
    loop {
        let out = alg.q(args[0], &args[1..]);
        let x = h[args[0]] as usize;
        if h[out] != h[args[x]] {
            return false;
        }
        if !advance(&mut args, s) {
            return true;
        }
    }
}

fn upper_star(b: &BooleanCenter, comps: &[Vec<usize>]) -> Vec<usize> {
    comps[b.params().j() as usize - 1].iter().copied().filter(|&x| b.contains(x)).collect()
}

/// Atoms of `B_ij` whose principal ultrafilter contains `I^* = B_ij ∩ I_j`.
pub fn admissible_atoms<A: IndexedAlgebra>(alg: &A, ideal: &Multideal, cp: CenterParams) -> Result<Vec<usize>> {
    let comps = ideal.proper()?;
    let b = boolean_center(alg, cp);
    Ok(b.atoms()
        .into_iter()
        .filter(|&a| upper_star(&b, comps).into_iter().all(|f| b.le(a, f)))
        .collect())
}

fn ultra_from_atom<A: IndexedAlgebra>(alg: &A, b: &BooleanCenter, atom: usize) -> Ultramultideal {
    let n = alg.dim().get();
    let mut components = vec![Vec::new(); n];
    for x in 0..alg.size() {
        let coords = coordinates_index(alg, x, b.params());
        let mut hits = coords.iter().enumerate().filter(|(_, &c)| b.le(atom, c));
        let (k, _) = hits.next().expect("coordinates join to the top");
        debug_assert!(hits.next().is_none(), "coordinates are pairwise disjoint");
        components[k].push(x);
    }
    Ultramultideal { components }
}

/// `G_k = {x : x_k ∈ U}` for the principal ultrafilter `U` of `atom`.
pub fn extend_to_ultra<A: IndexedAlgebra>(alg: &A, ideal: &Multideal, cp: CenterParams, atom: usize) -> Result<Ultramultideal> {
    let comps = ideal.proper()?;
    let b = boolean_center(alg, cp);
    if !b.atoms().contains(&atom) {
        return Err(Error::InvalidAtom(alloc::format!("{atom} is not an atom of the Boolean center")));
    }
    if let Some(f) = upper_star(&b, comps).into_iter().find(|&f| !b.le(atom, f)) {
        return Err(Error::InvalidAtom(alloc::format!(
            "ultrafilter of {atom} misses {f} of the upper Boolean component"
        )));
    }
    Ok(ultra_from_atom(alg, &b, atom))
}

/// One ultramultideal per atom of `B_12`, in atom order.
pub fn all_ultramultideals<A: IndexedAlgebra>(alg: &A) -> Vec<Ultramultideal> {
    all_ultramultideals_with(alg, CenterParams::default())
}

pub fn all_ultramultideals_with<A: IndexedAlgebra>(alg: &A, cp: CenterParams) -> Vec<Ultramultideal> {
    let b = boolean_center(alg, cp);
    b.atoms().into_iter().map(|a| ultra_from_atom(alg, &b, a)).collect()
}

/// `x ∧_i y ∈ I_i` implies `x ∈ I_i` or `y ∈ I_i`, checked over all pairs.
pub fn is_prime<A: IndexedAlgebra>(alg: &A, ideal: &Multideal, cp: CenterParams) -> Result<bool> {
    ideal.proper()?;
    let i = cp.i();
    let d = crate::algebra::IndexSet::singleton(i);
    let zero = alg.constant(i);
    let s = alg.size();
    for x in 0..s {
        if ideal.contains(i, x) {
            continue;
        }
        for y in 0..s {
            if !ideal.contains(i, y) && ideal.contains(i, alg.t(d, x, y, zero)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
