use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Program, Term};
use crate::algebra::{Dim, Generator};
use crate::check::{self, space, Mode, DEFAULT_BUDGET, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Enumerate all `n^vars` assignments; fails when they exceed `budget`.
    Exhaustive { budget: u64 },
    Sampled { count: u64, seed: u64 },
    /// Exhaustive within the default budget, sampled with defaults otherwise.
    Auto,
}

impl CheckMode {
    pub fn exhaustive() -> Self {
        CheckMode::Exhaustive { budget: DEFAULT_BUDGET }
    }

    pub fn sampled() -> Self {
        CheckMode::Sampled { count: DEFAULT_SAMPLES, seed: DEFAULT_SEED }
    }
}

/// A binding of variables to constants `e_k` of the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment(pub Vec<(String, u8)>);

impl Assignment {
    pub fn get(&self, var: &str) -> Option<u8> {
        self.0.iter().find(|(v, _)| v == var).map(|&(_, k)| k)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, (v, k)) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}=e{k}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Valid,
    Counterexample(Assignment),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub mode: Mode,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.outcome == Outcome::Valid
    }
}

/// Decide `lhs = rhs` by evaluation in the generator `n`.
///
/// The generator lies in the variety and generates it, so an exhaustive
/// verdict holds for every nBA. Variables are enumerated in order of first
/// occurrence in `lhs` then `rhs`, the last one varying fastest.
pub fn check_identity(lhs: &Term, rhs: &Term, n: Dim, mode: CheckMode) -> Result<Verdict> {
    let mut vars = lhs.vars();
    rhs.collect_vars(&mut vars);
    let left = Program::compile(lhs, n, &vars)?;
    let right = Program::compile(rhs, n, &vars)?;
    let g = Generator(n);
    let total = space(n.get(), vars.len());
    let (exhaustive, count, seed) = match mode {
        CheckMode::Exhaustive { budget } => {
            if total > budget as u128 {
                return Err(Error::BudgetExceeded { required: total, budget });
            }
            (true, 0, 0)
        }
        CheckMode::Sampled { count, seed } => (false, count, seed),
        CheckMode::Auto if total <= DEFAULT_BUDGET as u128 => (true, 0, 0),
        CheckMode::Auto => (false, DEFAULT_SAMPLES, DEFAULT_SEED),
    };

    let mut ls = Vec::new();
    let mut rs = Vec::new();
    let mut differs = |env: &[usize]| left.run(&g, env, &mut ls) != right.run(&g, env, &mut rs);
    let mut env = vec![0usize; vars.len()];
    let mut found = None;
    let mode = if exhaustive {
        loop {
            if differs(&env) {
                found = Some(env.clone());
                break;
            }
            if !check::advance(&mut env, n.get()) {
                break;
            }
        }
        Mode::Exhaustive { assignments: total }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            for slot in env.iter_mut() {
                *slot = rng.random_range(0..n.get());
            }
            if differs(&env) {
                found = Some(env.clone());
                break;
            }
        }
        Mode::Sampled { count, seed }
    };

    let outcome = match found {
        None => Outcome::Valid,
        Some(env) => Outcome::Counterexample(Assignment(
            vars.into_iter().zip(env).map(|(v, k)| (v, k as u8 + 1)).collect(),
        )),
    };
    Ok(Verdict { outcome, mode })
}
