//! Budget-gated evaluation of laws over carrier assignments.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_SAMPLES: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 0xA11CE;

/// How a law or identity was evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive { assignments: u128 },
    Sampled { count: u64, seed: u64 },
}

impl Mode {
    pub fn is_exhaustive(self) -> bool {
        matches!(self, Mode::Exhaustive { .. })
    }
}

/// Evaluation limits shared by every audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    /// Largest assignment space that is enumerated exhaustively.
    pub budget: u64,
    /// Number of random assignments once the budget is exceeded.
    pub samples: u64,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { budget: DEFAULT_BUDGET, samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED }
    }
}

/// Result of auditing one named law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: String,
    pub ok: bool,
    pub mode: Mode,
    /// Variable names in assignment order.
    pub variables: Vec<String>,
    /// Carrier indices of the first violating assignment.
    pub counterexample: Option<Vec<usize>>,
}

/// `size^arity`, saturating.
pub(crate) fn space(size: usize, arity: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..arity {
        total = total.saturating_mul(size as u128);
    }
    total
}

/// Evaluate `holds` on every assignment of `arity` carrier indices, or on a
/// seeded sample when the space exceeds the budget.
pub fn audit_law<F>(
    name: &str,
    variables: &[&str],
    size: usize,
    cfg: &AuditConfig,
    mut holds: F,
) -> LawOutcome
where
    F: FnMut(&[usize]) -> bool,
{
    let arity = variables.len();
    let total = space(size, arity);
    let mut outcome = LawOutcome {
        name: name.into(),
        ok: true,
        mode: Mode::Exhaustive { assignments: total },
        variables: variables.iter().map(|&v| v.into()).collect(),
        counterexample: None,
    };
    if size == 0 {
        return outcome;
    }
    if total <= cfg.budget as u128 {
        let mut tuple = vec![0usize; arity];
        loop {
            if !holds(&tuple) {
                outcome.ok = false;
                outcome.counterexample = Some(tuple);
                return outcome;
            }
            if !advance(&mut tuple, size) {
                return outcome;
            }
        }
    }
    outcome.mode = Mode::Sampled { count: cfg.samples, seed: cfg.seed };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tuple = vec![0usize; arity];
    for _ in 0..cfg.samples {
        for slot in tuple.iter_mut() {
            *slot = rng.random_range(0..size);
        }
        if !holds(&tuple) {
            outcome.ok = false;
            outcome.counterexample = Some(tuple);
            return outcome;
        }
    }
    outcome
}

/// Odometer step, last position fastest. Returns false after the last tuple.
pub(crate) fn advance(tuple: &mut [usize], size: usize) -> bool {
    for pos in (0..tuple.len()).rev() {
        tuple[pos] += 1;
        if tuple[pos] < size {
            return true;
        }
        tuple[pos] = 0;
    }
    false
}
