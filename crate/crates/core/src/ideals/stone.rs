use alloc::vec;
use alloc::vec::Vec;

use super::multideal::Multideal;
use super::ultra::{all_ultramultideals, Ultramultideal};
use crate::algebra::{power_algebra, Element, IndexedAlgebra, PowerAlgebra};
use crate::check::advance;
use crate::error::{Error, Result};

/// `x ↦ (h_U(x))_U` into `n^U`, one point per ultramultideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneEmbedding {
    target: PowerAlgebra,
    ultras: Vec<Ultramultideal>,
    images: Vec<Element>,
}

pub fn stone_embed<A: IndexedAlgebra>(alg: &A) -> Result<StoneEmbedding> {
    let ultras = all_ultramultideals(alg);
    let target = power_algebra(alg.dim().get(), ultras.len())?;
    let homs: Vec<Vec<u8>> = ultras.iter().map(Ultramultideal::homomorphism).collect();
    let images = (0..alg.size())
        .map(|x| Element::new(alg.dim(), homs.iter().map(|h| h[x]).collect()))
        .collect::<Result<_>>()?;
    Ok(StoneEmbedding { target, ultras, images })
}

impl StoneEmbedding {
    pub fn target(&self) -> &PowerAlgebra {
        &self.target
    }

    pub fn ultras(&self) -> &[Ultramultideal] {
        &self.ultras
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn image(&self, x: usize) -> &Element {
        &self.images[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted: Vec<&Element> = self.images.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.is_injective() && self.images.len() == self.target.size()
    }

    /// `φ(q(x, ys)) = q(φ(x), φ(ys))` and `φ(e_k) = e_k`, over all arguments.
    pub fn preserves_q<A: IndexedAlgebra>(&self, alg: &A) -> bool {
        let n = alg.dim().get();
        let s = alg.size();
        if s != self.images.len() {
            return false;
        }
        let img = |x: usize| self.target.index_of(&self.images[x]).expect("image in the full power");
        let idx: Vec<usize> = (0..s).map(img).collect();
        if (1..=n as u8).any(|k| idx[alg.constant(k)] != IndexedAlgebra::constant(&self.target, k)) {
            return false;
        }
        let mut args = vec![0usize; n + 1];
        let mut mapped = vec![0usize; n];
        loop {
            for k in 0..n {
                mapped[k] = idx[args[k + 1]];
            }
            if idx[alg.q(args[0], &args[1..])] != self.target.q(idx[args[0]], &mapped) {
                return false;
            }
            if !advance(&mut args, s) {
                return true;
            }
        }
    }
}

/// The Boolean ideal `I_2` and filter `I_1` of a 2-dimensional multideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFilter {
    pub ideal: Vec<usize>,
    pub filter: Vec<usize>,
}

/// Read a multideal of a 2BA as an ideal/filter pair of its Boolean
/// reduct (`0 = e_2`, `1 = e_1`, `x∧y = q(x,y,0)`, `x∨y = q(x,1,y)`,
/// `¬x = q(x,0,1)`), checking the classical axioms and `I_1 = ¬I_2`.
pub fn boolean_ideal_filter_view<A: IndexedAlgebra>(alg: &A, m: &Multideal) -> Result<IdealFilter> {
    let n = alg.dim().get();
    if n != 2 {
        return Err(Error::RequiresDimension { expected: 2, found: n });
    }
    let comps = m.proper()?;
    let (one, zero) = (alg.constant(1), alg.constant(2));
    let meet = |x, y| alg.q(x, &[y, zero]);
    let join = |x, y| alg.q(x, &[one, y]);
    let neg = |x| alg.q(x, &[zero, one]);
    let ideal = comps[1].clone();
    let filter = comps[0].clone();
    let s = alg.size();
    let has = |set: &[usize], x: usize| set.binary_search(&x).is_ok();

    if !has(&ideal, zero) {
        return Err(Error::AuditFailed("ideal contains 0".into()));
    }
    for &a in &ideal {
        for &b in &ideal {
            if !has(&ideal, join(a, b)) {
                return Err(Error::AuditFailed("ideal closed under join".into()));
            }
        }
        for y in 0..s {
            if !has(&ideal, meet(a, y)) {
                return Err(Error::AuditFailed("ideal is a down-set".into()));
            }
        }
    }
    if has(&ideal, one) {
        return Err(Error::AuditFailed("ideal is proper".into()));
    }
    let mut negated: Vec<usize> = ideal.iter().map(|&x| neg(x)).collect();
    negated.sort_unstable();
    negated.dedup();
    if negated != filter {
        return Err(Error::AuditFailed("filter is the negation of the ideal".into()));
    }
    Ok(IdealFilter { ideal, filter })
}
