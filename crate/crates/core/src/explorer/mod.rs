//! Bounded search over the right action of `E_2` on pairs.
//!
//! Everything here is a semi-decision: positive answers come with an explicit
//! word that has been re-applied exactly, negative answers only mean that the
//! budgeted window did not contain a connection.

mod bfs;
mod equiv;
mod member;
mod reduce;

pub use bfs::{orbit_bfs, OrbitReport};
pub use equiv::{pairs_equivalent, Equivalence};
pub use member::{matrix_in_e2, Membership};
pub use reduce::{best_multiplier, reduce_pair, Outcome, ReductionResult};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{QuadInt, RingDesc};

/// Budgets for a bounded orbit search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchParams {
    /// Largest allowed `norm_sq` of either entry of a visited pair.
    pub state_norm_cap: u64,
    /// Largest allowed `norm_sq` of a move parameter `t`.
    pub gen_norm_cap: u64,
    pub max_states: usize,
    pub max_depth: usize,
}

impl SearchParams {
    pub fn new(state_norm_cap: u64, gen_norm_cap: u64, max_states: usize, max_depth: usize) -> Result<Self> {
        let p = SearchParams { state_norm_cap, gen_norm_cap, max_states, max_depth };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.state_norm_cap < 1 || self.gen_norm_cap < 1 || self.max_states < 1 || self.max_depth < 1 {
            return Err(Error::InvalidParameter(format!("all search budgets must be >= 1, got {self:?}")));
        }
        Ok(())
    }
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams { state_norm_cap: 400, gen_norm_cap: 16, max_states: 200_000, max_depth: 40 }
    }
}

/// Move parameters `t` with `1 <= norm_sq(t) <= cap`, in generator order
/// `(norm_sq, a, b)`, paired with their norms.
pub(crate) fn generator_set(ring: RingDesc, cap: u64) -> Vec<(QuadInt, BigInt)> {
    ring.elements_with_norm_at_most(cap)
        .into_iter()
        .filter(|t| !t.is_zero())
        .map(|t| {
            let n = t.norm_sq();
            (t, n)
        })
        .collect()
}
