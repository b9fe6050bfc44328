//! Canonical finite nBAs: sub-powers of the generator `n`, raw operation
//! tables, and the n-subset operator.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Number of constants (and of truth values) of an nBA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dim(u8);

impl Dim {
    /// Subscript sets are stored as 64-bit masks.
    pub const MAX: usize = 64;

    pub fn new(n: usize) -> Result<Dim> {
        if (2..=Self::MAX).contains(&n) {
            Ok(Dim(n as u8))
        } else {
            Err(Error::Dimension(n))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// The value indices `1..=n`.
    pub fn values(self) -> impl Iterator<Item = u8> + Clone {
        1..=self.0
    }

    pub(crate) fn check_value(self, v: usize) -> Result<()> {
        if v >= 1 && v <= self.get() {
            Ok(())
        } else {
            Err(Error::ValueOutOfRange { value: v, n: self.get() })
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `{1..n}`, used as the subscript `d` of `t_d` and of the
/// derived binary operations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const fn empty() -> Self {
        IndexSet(0)
    }

    pub fn singleton(k: u8) -> Self {
        let mut s = IndexSet(0);
        s.insert(k);
        s
    }

    pub fn full(n: Dim) -> Self {
        if n.get() == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n.get()) - 1)
        }
    }

    /// Panics if `k` is outside `1..=64`.
    pub fn insert(&mut self, k: u8) {
        assert!((1..=64).contains(&k), "subscript {k} out of range");
        self.0 |= 1u64 << (k - 1);
    }

    #[inline]
    pub fn contains(self, k: u8) -> bool {
        (1..=64).contains(&k) && self.0 & (1u64 << (k - 1)) != 0
    }

    pub fn complement(self, n: Dim) -> Self {
        IndexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as u8 + 1)
        }
    }

    pub fn last(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as u8)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1..=64u8).filter(move |&k| self.contains(k))
    }

    /// Nonempty and contained in `1..=n`.
    pub fn validate(self, n: Dim) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptySubscript);
        }
        match self.last() {
            Some(m) if (m as usize) <= n.get() => Ok(()),
            Some(m) => Err(Error::ValueOutOfRange { value: m as usize, n: n.get() }),
            None => unreachable!(),
        }
    }
}

impl FromIterator<u8> for IndexSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut s = IndexSet::empty();
        for k in iter {
            s.insert(k);
        }
        s
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, k) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// A total assignment of value indices `1..=n` to the points `0..m`.
///
/// Read as an n-partition, part `k` is the set of points carrying `k`.
/// The derived ordering is lexicographic on the value vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(Vec<u8>);

impl Element {
    pub fn new(dim: Dim, values: Vec<u8>) -> Result<Self> {
        for &v in &values {
            dim.check_value(v as usize)?;
        }
        Ok(Element(values))
    }

    #[cfg(test)]
    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        Element(values)
    }

    /// The constant `e_k` over `points` points.
    pub fn constant(k: u8, points: usize) -> Self {
        Element(vec![k; points])
    }

    #[inline]
    pub fn values(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn points(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn get(&self, p: usize) -> u8 {
        self.0[p]
    }

    /// Part `k` of the n-partition view.
    pub fn part(&self, k: u8) -> Vec<usize> {
        (0..self.0.len()).filter(|&p| self.0[p] == k).collect()
    }

    pub fn is_constant(&self) -> Option<u8> {
        let first = *self.0.first()?;
        self.0.iter().all(|&v| v == first).then_some(first)
    }

    pub fn to_nsubset(&self, dim: Dim) -> NSubset {
        let mut parts = vec![vec![false; self.0.len()]; dim.get()];
        for (p, &v) in self.0.iter().enumerate() {
            parts[v as usize - 1][p] = true;
        }
        NSubset { points: self.0.len(), parts }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (p, v) in self.0.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Pointwise q on raw value vectors: `out[p] = ys[x[p]][p]`.
pub(crate) fn q_pointwise(x: &[u8], ys: &[&[u8]]) -> Vec<u8> {
    x.iter()
        .enumerate()
        .map(|(p, &v)| ys[v as usize - 1][p])
        .collect()
}

/// A finite algebra in the pure nBA signature whose elements are addressed
/// by index `0..size`.
///
/// Index-based algorithms (congruences, multideals, audits) work over this
/// trait so that they apply both to sub-powers and to raw tables.
pub trait IndexedAlgebra {
    fn dim(&self) -> Dim;
    fn size(&self) -> usize;
    /// Index of the constant `e_k`.
    fn constant(&self, k: u8) -> usize;
    /// `q(x, ys[0], .., ys[n-1])`; `ys` has exactly `n` entries.
    fn q(&self, x: usize, ys: &[usize]) -> usize;

    /// `t_d(x, y, z) = q(x, y/d̄, z/d)`.
    fn t(&self, d: IndexSet, x: usize, y: usize, z: usize) -> usize {
        let ys: Vec<usize> = self
            .dim()
            .values()
            .map(|k| if d.contains(k) { z } else { y })
            .collect();
        self.q(x, &ys)
    }

    fn constants(&self) -> Vec<usize> {
        self.dim().values().map(|k| self.constant(k)).collect()
    }
}

impl<A: IndexedAlgebra + ?Sized> IndexedAlgebra for &A {
    fn dim(&self) -> Dim {
        (**self).dim()
    }
    fn size(&self) -> usize {
        (**self).size()
    }
    fn constant(&self, k: u8) -> usize {
        (**self).constant(k)
    }
    fn q(&self, x: usize, ys: &[usize]) -> usize {
        (**self).q(x, ys)
    }
    fn t(&self, d: IndexSet, x: usize, y: usize, z: usize) -> usize {
        (**self).t(d, x, y, z)
    }
}

/// The generator `n` acting directly on value indices; the cheapest model
/// for evaluating identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator(pub Dim);

impl IndexedAlgebra for Generator {
    fn dim(&self) -> Dim {
        self.0
    }
    fn size(&self) -> usize {
        self.0.get()
    }
    fn constant(&self, k: u8) -> usize {
        k as usize - 1
    }
    #[inline]
    fn q(&self, x: usize, ys: &[usize]) -> usize {
        ys[x]
    }
    #[inline]
    fn t(&self, d: IndexSet, x: usize, y: usize, z: usize) -> usize {
        if d.contains(x as u8 + 1) {
            z
        } else {
            y
        }
    }
}

/// A sub-power of the generator `n` over the points `0..m`.
///
/// With no explicit carrier this is the full power `n^m`; otherwise the
/// carrier is a sorted set of elements containing the constants and closed
/// under pointwise q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerAlgebra {
    dim: Dim,
    points: usize,
    carrier: Option<Vec<Element>>,
}

/// The n-element generator: the one-point power with carrier `{e_1..e_n}`.
pub fn generator(n: usize) -> Result<PowerAlgebra> {
    power_algebra(n, 1)
}

/// The full power `n^m`.
pub fn power_algebra(n: usize, m: usize) -> Result<PowerAlgebra> {
    let dim = Dim::new(n)?;
    full_size(dim, m)?;
    Ok(PowerAlgebra { dim, points: m, carrier: None })
}

fn full_size(dim: Dim, points: usize) -> Result<usize> {
    u32::try_from(points)
        .ok()
        .and_then(|m| dim.get().checked_pow(m))
        .ok_or(Error::CarrierTooLarge { size: usize::MAX, bound: usize::MAX })
}

impl PowerAlgebra {
    /// A sub-power with an explicit carrier. Checks shapes, the presence of
    /// the constants and closure under q.
    pub fn subpower(
        dim: Dim,
        points: usize,
        carrier: impl IntoIterator<Item = Element>,
    ) -> Result<Self> {
        let full = full_size(dim, points)?;
        let set: BTreeSet<Element> = carrier.into_iter().collect();
        for x in &set {
            if x.points() != points {
                return Err(Error::Shape { expected: points, found: x.points() });
            }
            for &v in x.values() {
                dim.check_value(v as usize)?;
            }
        }
        for k in dim.values() {
            if !set.contains(&Element::constant(k, points)) {
                return Err(Error::MissingConstant(k as usize));
            }
        }
        let alg = Self::from_sorted(dim, points, set.into_iter().collect(), full);
        if !alg.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(alg)
    }

    fn from_sorted(dim: Dim, points: usize, carrier: Vec<Element>, full: usize) -> Self {
        let carrier = if carrier.len() == full { None } else { Some(carrier) };
        PowerAlgebra { dim, points, carrier }
    }

    fn is_closed(&self) -> bool {
        if self.carrier.is_none() {
            return true;
        }
        let n = self.dim.get();
        let s = self.size();
        let mut ys = vec![0usize; n];
        let mut tuples = TupleIter::new(s, n + 1);
        while let Some(t) = tuples.next_tuple() {
            ys.copy_from_slice(&t[1..]);
            let xs: Vec<&[u8]> = ys.iter().map(|&y| self.raw(y)).collect();
            let out = q_pointwise(self.raw(t[0]), &xs);
            if self.index_of_raw(&out).is_none() {
                return false;
            }
        }
        true
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn is_full(&self) -> bool {
        self.carrier.is_none()
    }

    pub fn size(&self) -> usize {
        match &self.carrier {
            Some(c) => c.len(),
            None => self.dim.get().pow(self.points as u32),
        }
    }

    /// The full power this algebra lives in.
    pub fn ambient(&self) -> PowerAlgebra {
        PowerAlgebra { dim: self.dim, points: self.points, carrier: None }
    }

    /// Element at `idx` in lexicographic order.
    pub fn element(&self, idx: usize) -> Element {
        match &self.carrier {
            Some(c) => c[idx].clone(),
            None => Element(self.decode_full(idx)),
        }
    }

    fn raw(&self, idx: usize) -> &[u8] {
        match &self.carrier {
            Some(c) => c[idx].values(),
            None => panic!("raw access needs an explicit carrier"),
        }
    }

    fn decode_full(&self, mut idx: usize) -> Vec<u8> {
        let n = self.dim.get();
        let mut out = vec![0u8; self.points];
        for p in (0..self.points).rev() {
            out[p] = (idx % n) as u8 + 1;
            idx /= n;
        }
        out
    }

    fn encode_full(&self, values: &[u8]) -> usize {
        let n = self.dim.get();
        values.iter().fold(0, |acc, &v| acc * n + (v as usize - 1))
    }

    fn index_of_raw(&self, values: &[u8]) -> Option<usize> {
        match &self.carrier {
            Some(c) => c.binary_search_by(|e| e.values().cmp(values)).ok(),
            None => Some(self.encode_full(values)),
        }
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        if x.points() != self.points
            || x.values().iter().any(|&v| v == 0 || v as usize > self.dim.get())
        {
            return None;
        }
        self.index_of_raw(x.values())
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index_of(x).is_some()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Element> {
        match &self.carrier {
            Some(c) => c.clone(),
            None => (0..self.size()).map(|i| self.element(i)).collect(),
        }
    }

    pub fn constant(&self, k: u8) -> Element {
        Element::constant(k, self.points)
    }

    fn check_input(&self, x: &Element) -> Result<()> {
        if x.points() != self.points {
            return Err(Error::Shape { expected: self.points, found: x.points() });
        }
        for &v in x.values() {
            self.dim.check_value(v as usize)?;
        }
        if self.carrier.is_some() && !self.contains(x) {
            return Err(Error::NotInCarrier);
        }
        Ok(())
    }

    /// Pointwise `q(x, ys)`: `result[p] = ys[x[p]][p]`.
    pub fn q_eval(&self, x: &Element, ys: &[Element]) -> Result<Element> {
        if ys.len() != self.dim.get() {
            return Err(Error::Arity { expected: self.dim.get(), found: ys.len() });
        }
        self.check_input(x)?;
        for y in ys {
            self.check_input(y)?;
        }
        let out = self.q_unchecked(x, ys);
        debug_assert!(self.contains(&out));
        Ok(out)
    }

    pub(crate) fn q_unchecked(&self, x: &Element, ys: &[Element]) -> Element {
        let rows: Vec<&[u8]> = ys.iter().map(|y| y.values()).collect();
        Element(q_pointwise(x.values(), &rows))
    }
}

impl IndexedAlgebra for PowerAlgebra {
    fn dim(&self) -> Dim {
        self.dim
    }

    fn size(&self) -> usize {
        PowerAlgebra::size(self)
    }

    fn constant(&self, k: u8) -> usize {
        self.index_of_raw(&vec![k; self.points])
            .expect("constants belong to every sub-power")
    }

    fn q(&self, x: usize, ys: &[usize]) -> usize {
        match &self.carrier {
            None => {
                // digit-wise on the mixed-radix index, no allocation
                let n = self.dim.get();
                let mut out = 0usize;
                let mut weight = 1usize;
                let mut xr = x;
                for _ in 0..self.points {
                    let digit = xr % n;
                    xr /= n;
                    let y = ys[digit];
                    let yd = (y / weight) % n;
                    out += yd * weight;
                    weight *= n;
                }
                out
            }
            Some(c) => {
                let rows: Vec<&[u8]> = ys.iter().map(|&y| c[y].values()).collect();
                let out = q_pointwise(c[x].values(), &rows);
                self.index_of_raw(&out).expect("carrier is closed under q")
            }
        }
    }
}

/// Smallest sub-power of `alg` containing the constants and `gens`.
pub fn subalgebra_closure(alg: &PowerAlgebra, gens: &[Element]) -> Result<PowerAlgebra> {
    for g in gens {
        alg.check_input(g)?;
    }
    let n = alg.dim.get();
    let mut set: BTreeSet<Element> = alg.dim.values().map(|k| alg.constant(k)).collect();
    set.extend(gens.iter().cloned());
    let mut members: Vec<Element> = set.iter().cloned().collect();
    // semi-naive: only tuples touching an element added in the last round
    let mut fresh_from = 0;
    loop {
        let old_len = members.len();
        let mut found = Vec::new();
        let mut tuples = TupleIter::new(old_len, n + 1);
        while let Some(t) = tuples.next_tuple() {
            if t.iter().all(|&i| i < fresh_from) {
                continue;
            }
            let rows: Vec<&[u8]> = t[1..].iter().map(|&i| members[i].values()).collect();
            let out = Element(q_pointwise(members[t[0]].values(), &rows));
            if !set.contains(&out) {
                set.insert(out.clone());
                found.push(out);
            }
        }
        if found.is_empty() {
            break;
        }
        fresh_from = old_len;
        members.extend(found);
    }
    let full = alg.ambient().size();
    Ok(PowerAlgebra::from_sorted(alg.dim, alg.points, set.into_iter().collect(), full))
}

/// A sequence of `n` arbitrary subsets of the points `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSubset {
    points: usize,
    parts: Vec<Vec<bool>>,
}

impl NSubset {
    pub fn new(dim: Dim, points: usize, parts: &[Vec<usize>]) -> Result<Self> {
        if parts.len() != dim.get() {
            return Err(Error::Arity { expected: dim.get(), found: parts.len() });
        }
        let mut masks = vec![vec![false; points]; dim.get()];
        for (k, part) in parts.iter().enumerate() {
            for &p in part {
                if p >= points {
                    return Err(Error::IndexOutOfRange { index: p, size: points });
                }
                masks[k][p] = true;
            }
        }
        Ok(NSubset { points, parts: masks })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .map(|m| (0..self.points).filter(|&p| m[p]).collect())
            .collect()
    }

    /// The element this n-subset denotes, if it is an n-partition.
    pub fn to_element(&self) -> Option<Element> {
        let mut values = Vec::with_capacity(self.points);
        for p in 0..self.points {
            let mut owners = self.parts.iter().enumerate().filter(|(_, m)| m[p]);
            let (k, _) = owners.next()?;
            if owners.next().is_some() {
                return None;
            }
            values.push(k as u8 + 1);
        }
        Some(Element(values))
    }
}

/// q on n-subsets: part `k` of the result is `⋃_i (Y0_i ∩ Yi_k)`.
pub fn nsubset_q(n: Dim, y0: &NSubset, ys: &[NSubset]) -> Result<NSubset> {
    let n = n.get();
    if ys.len() != n {
        return Err(Error::Arity { expected: n, found: ys.len() });
    }
    for s in core::iter::once(y0).chain(ys) {
        if s.points != y0.points {
            return Err(Error::Shape { expected: y0.points, found: s.points });
        }
        if s.parts.len() != n {
            return Err(Error::Arity { expected: n, found: s.parts.len() });
        }
    }
    let points = y0.points;
    let parts = (0..n)
        .map(|k| {
            (0..points)
                .map(|p| (0..n).any(|i| y0.parts[i][p] && ys[i].parts[k][p]))
                .collect()
        })
        .collect();
    Ok(NSubset { points, parts })
}

/// Raw operation tables for an algebra in the pure nBA signature.
///
/// The q table is row-major over `(x, y_1, .., y_n)` with `x` slowest.
/// Nothing is assumed about the axioms; this is the object audits run on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAlgebra {
    dim: Dim,
    size: usize,
    constants: Vec<usize>,
    q: Vec<u32>,
}

/// Largest q table [`TableAlgebra::from_algebra`] will materialise.
pub const TABLE_LIMIT: usize = 1 << 26;

impl TableAlgebra {
    pub fn new(dim: Dim, size: usize, constants: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        if constants.len() != dim.get() {
            return Err(Error::Arity { expected: dim.get(), found: constants.len() });
        }
        for &c in &constants {
            if c >= size {
                return Err(Error::IndexOutOfRange { index: c, size });
            }
        }
        let expected = table_len(size, dim.get() + 1)?;
        if q.len() != expected {
            return Err(Error::Shape { expected, found: q.len() });
        }
        for &v in &q {
            if v >= size {
                return Err(Error::IndexOutOfRange { index: v, size });
            }
        }
        Ok(TableAlgebra { dim, size, constants, q: q.into_iter().map(|v| v as u32).collect() })
    }

    /// Materialise the q table of any indexed algebra.
    pub fn from_algebra(alg: &impl IndexedAlgebra) -> Result<Self> {
        let n = alg.dim().get();
        let s = alg.size();
        let len = table_len(s, n + 1)?;
        if len > TABLE_LIMIT {
            return Err(Error::CarrierTooLarge { size: s, bound: TABLE_LIMIT });
        }
        let mut q = Vec::with_capacity(len);
        let mut tuples = TupleIter::new(s, n + 1);
        while let Some(t) = tuples.next_tuple() {
            q.push(alg.q(t[0], &t[1..]) as u32);
        }
        Ok(TableAlgebra { dim: alg.dim(), size: s, constants: alg.constants(), q })
    }

    pub fn constants_slice(&self) -> &[usize] {
        &self.constants
    }

    /// The flat q table.
    pub fn q_table(&self) -> Vec<usize> {
        self.q.iter().map(|&v| v as usize).collect()
    }

    fn offset(&self, x: usize, ys: &[usize]) -> usize {
        ys.iter().fold(x, |acc, &y| acc * self.size + y)
    }

    /// Overwrite one q entry.
    pub fn set_entry(&mut self, x: usize, ys: &[usize], value: usize) -> Result<()> {
        if ys.len() != self.dim.get() {
            return Err(Error::Arity { expected: self.dim.get(), found: ys.len() });
        }
        for &v in core::iter::once(&x).chain(ys).chain(core::iter::once(&value)) {
            if v >= self.size {
                return Err(Error::IndexOutOfRange { index: v, size: self.size });
            }
        }
        let at = self.offset(x, ys);
        self.q[at] = value as u32;
        Ok(())
    }
}

impl IndexedAlgebra for TableAlgebra {
    fn dim(&self) -> Dim {
        self.dim
    }
    fn size(&self) -> usize {
        self.size
    }
    fn constant(&self, k: u8) -> usize {
        self.constants[k as usize - 1]
    }
    #[inline]
    fn q(&self, x: usize, ys: &[usize]) -> usize {
        self.q[self.offset(x, ys)] as usize
    }
}

pub(crate) fn table_len(size: usize, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| size.checked_pow(a))
        .ok_or(Error::CarrierTooLarge { size, bound: TABLE_LIMIT })
}

/// Odometer over `size^arity` tuples, last position fastest.
pub(crate) struct TupleIter {
    size: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl TupleIter {
    pub(crate) fn new(size: usize, arity: usize) -> Self {
        TupleIter { size, current: vec![0; arity], started: false, done: size == 0 && arity > 0 }
    }

    pub(crate) fn next_tuple(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        for pos in (0..self.current.len()).rev() {
            self.current[pos] += 1;
            if self.current[pos] < self.size {
                return Some(&self.current);
            }
            self.current[pos] = 0;
        }
        self.done = true;
        None
    }
}
