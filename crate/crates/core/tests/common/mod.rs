#![allow(dead_code)]

use e2_core::{QuadInt, RingDesc, UniPair};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

pub fn rings() -> Vec<RingDesc> {
    vec![
        RingDesc::sqrt(1).unwrap(),
        RingDesc::sqrt(2).unwrap(),
        RingDesc::sqrt(4).unwrap(),
        RingDesc::sqrt(5).unwrap(),
        RingDesc::half(1).unwrap(),
        RingDesc::half(2).unwrap(),
        RingDesc::half(3).unwrap(),
    ]
}

pub fn ring_strategy() -> impl Strategy<Value = RingDesc> {
    proptest::sample::select(rings())
}

pub fn element_in(ring: RingDesc, bound: i64) -> impl Strategy<Value = QuadInt> {
    (-bound..=bound, -bound..=bound).prop_map(move |(a, b)| QuadInt::new(ring, a, b))
}

/// `x / y` when the quotient lies in the ring; computed as `x * conj(y) / |y|^2`.
pub fn exact_div(x: &QuadInt, y: &QuadInt) -> Option<QuadInt> {
    if y.is_zero() {
        return None;
    }
    let n = y.norm_sq();
    let z = x * &y.conj();
    let (qa, ra) = z.a().div_rem(&n);
    let (qb, rb) = z.b().div_rem(&n);
    (ra.is_zero() && rb.is_zero()).then(|| QuadInt::new(x.ring(), qa, qb))
}

/// Brute-force completion: some `(gamma, delta)` with both norms at most
/// `cap` and `alpha*delta - beta*gamma = 1`.
pub fn brute_force_completion(p: &UniPair, cap: u64) -> Option<(QuadInt, QuadInt)> {
    let ring = p.ring();
    let small = ring.elements_with_norm_at_most(cap);
    let cap_big = BigInt::from(cap);
    let one = ring.one();
    for gamma in &small {
        let rhs = &one + &(p.beta() * gamma);
        if p.alpha().is_zero() {
            if rhs.is_zero() {
                return Some((gamma.clone(), ring.zero()));
            }
            continue;
        }
        if let Some(delta) = exact_div(&rhs, p.alpha()) {
            if delta.norm_sq() <= cap_big {
                return Some((gamma.clone(), delta));
            }
        }
    }
    None
}
