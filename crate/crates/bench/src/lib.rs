//! Shared workloads for the criterion benches.

use e2_core::{corrigendum_pair, QuadInt, RingDesc, SearchParams, UniPair};

/// The special pair `(3+2i, 3-2i)` over `Z[2i]`.
pub fn family_start() -> UniPair {
    corrigendum_pair(2, 2).expect("valid family parameters").0
}

/// Budgets used by the orbit benches.
pub fn orbit_params() -> SearchParams {
    SearchParams::new(200, 16, 100_000, 30).expect("positive budgets")
}

/// Every pair of elements of norm at most `cap`, row-major.
pub fn pair_grid(ring: RingDesc, cap: u64) -> Vec<UniPair> {
    let elems: Vec<QuadInt> = ring.elements_with_norm_at_most(cap);
    elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| UniPair::new(a.clone(), b.clone()).expect("one ring")))
        .collect()
}
