//! Finite Boolean-like algebras of dimension `n` (nBAs).
//!
//! The pure nBA signature has `n` constants `e_1..e_n` and one `(n+1)`-ary
//! generalised if-then-else `q`. Every finite nBA is a subalgebra of a power
//! of the `n`-element generator, so algebras are represented as sets of
//! point vectors ([`PowerAlgebra`]); [`TableAlgebra`] holds raw operation
//! tables for candidate algebras that may fail the axioms.
//!
//! On top of that the crate provides:
//!
//! * a term language over the q-, skew- and skew-star signatures with an
//!   identity checker that is complete for the whole variety ([`term`]);
//! * the ternary `t_d` operations, the derived binary operations, the
//!   permutation action, coordinates and signature translations ([`derived`]);
//! * skew reducts, skew-lattice relations and axiom audits ([`skew`]);
//! * congruences, multideals, ultramultideals and the Stone embedding
//!   ([`ideals`]);
//! * partial-function skew Boolean algebras and their embedding into
//!   algebras of n-partitions ([`representation`]);
//! * a truth-table to q-term compiler with a sound simplifier ([`synthesis`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod check;
pub mod derived;
mod error;
pub mod ideals;
pub mod representation;
pub mod skew;
pub mod synthesis;
pub mod term;

pub use algebra::{
    generator, nsubset_q, power_algebra, subalgebra_closure, Dim, Element, Generator,
    IndexSet, IndexedAlgebra, NSubset, PowerAlgebra, TableAlgebra,
};
pub use check::{AuditConfig, Mode};
pub use error::{Error, ParseError, Result};
pub use term::{check_identity, eval_term, parse_term, CheckMode, Term, Verdict};
