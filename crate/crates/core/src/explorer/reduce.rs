use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::{ElemMove, ElemWord, Side};
use crate::ring::QuadInt;
use crate::unimodular::{is_trivial_variant, UniPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Reached one of `(1,0), (0,-1), (-1,0), (0,1)`.
    Reduced,
    /// No single move lowers the pair any further.
    Stalled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub outcome: Outcome,
    pub final_pair: UniPair,
    /// `start * word = final_pair`.
    pub word: ElemWord,
}

/// The `t` minimizing `norm_sq(y + t x)`, with that norm.
///
/// `-y/x = -y * conj(x) / norm_sq(x)` has rational coordinates `(u, v)` in
/// the basis `{1, w}`; the minimizer is a corner of the lattice cell around
/// `(u, v)`, since `{1, w}` is a reduced basis in both forms. Ties go to the
/// smaller `(norm_sq(t), a, b)`. Requires `x != 0`.
pub fn best_multiplier(y: &QuadInt, x: &QuadInt) -> (QuadInt, BigInt) {
    assert!(!x.is_zero(), "best_multiplier needs a nonzero divisor");
    let ring = x.ring();
    let n = x.norm_sq();
    let z = -(y * &x.conj());
    let (ua, ub) = (z.a().div_floor(&n), z.b().div_floor(&n));
    let mut best: Option<(BigInt, QuadInt)> = None;
    for da in 0..2u32 {
        for db in 0..2u32 {
            let t = QuadInt::new(ring, &ua + da, &ub + db);
            let value = (y + &(&t * x)).norm_sq();
            let better = match &best {
                None => true,
                Some((bv, bt)) => match value.cmp(bv) {
                    Ordering::Less => true,
                    Ordering::Equal => t.cmp_by_norm(bt) == Ordering::Less,
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((value, t));
            }
        }
    }
    let (value, t) = best.expect("four candidates");
    (t, value)
}

/// `(max, min)` of the two squared norms; the descent compares these lexicographically.
fn height(p: &UniPair) -> (BigInt, BigInt) {
    let (na, nb) = (p.alpha().norm_sq(), p.beta().norm_sq());
    if na >= nb {
        (na, nb)
    } else {
        (nb, na)
    }
}

struct Candidate {
    height: (BigInt, BigInt),
    t: QuadInt,
    side: Side,
    next: UniPair,
}

impl Candidate {
    fn beats(&self, other: &Candidate) -> bool {
        self.height
            .cmp(&other.height)
            .then_with(|| self.t.cmp_by_norm(&other.t))
            .then_with(|| self.side.cmp(&other.side))
            == Ordering::Less
    }
}

fn best_move(p: &UniPair) -> Option<Candidate> {
    let mut cands = Vec::with_capacity(2);
    if !p.alpha().is_zero() {
        let (t, _) = best_multiplier(p.beta(), p.alpha());
        if !t.is_zero() {
            let next = UniPair::new_unchecked(p.alpha().clone(), p.beta() + &(p.alpha() * &t));
            cands.push(Candidate { height: height(&next), t, side: Side::Upper, next });
        }
    }
    if !p.beta().is_zero() {
        let (t, _) = best_multiplier(p.alpha(), p.beta());
        if !t.is_zero() {
            let next = UniPair::new_unchecked(p.alpha() + &(p.beta() * &t), p.beta().clone());
            cands.push(Candidate { height: height(&next), t, side: Side::Lower, next });
        }
    }
    cands.into_iter().reduce(|a, b| if b.beats(&a) { b } else { a })
}

/// Word for `diag(v, v^-1)` with `v` a unit: `w(v) w(-1)` where
/// `w(x) = U(x) L(-x^-1) U(x)`.
fn diagonal_word(v: &QuadInt) -> ElemWord {
    let ring = v.ring();
    let v_inv = v.unit_inverse().expect("unit");
    let one = ring.one();
    ElemWord::from_moves(
        ring,
        [
            (Side::Upper, v.clone()),
            (Side::Lower, -&v_inv),
            (Side::Upper, v.clone()),
            (Side::Upper, -&one),
            (Side::Lower, one.clone()),
            (Side::Upper, -&one),
        ],
    )
    .expect("one ring")
}

/// Greedy exact descent: repeatedly apply the single elementary move that
/// most lowers `(max norm, min norm)`, stopping when no move lowers it.
///
/// A descent that ends at `(u, 0)` or `(0, u)` with `u` a unit other than
/// `+-1` is finished off with a diagonal word so that `Reduced` always means
/// a variant of `(1, 0)`.
pub fn reduce_pair(start: &UniPair) -> Result<ReductionResult> {
    if start.alpha().is_zero() && start.beta().is_zero() {
        return Err(Error::InvalidInput("cannot reduce the zero pair".into()));
    }
    let ring = start.ring();
    let mut word = ElemWord::empty(ring);
    let mut current = start.clone();
    let mut h = height(&current);
    while let Some(c) = best_move(&current) {
        if c.height >= h {
            break;
        }
        word.push(ElemMove::new(c.side, c.t).expect("nonzero t"));
        current = c.next;
        h = c.height;
    }

    let one_row = UniPair::unit_row(ring);
    if !is_trivial_variant(&one_row, &current) {
        let lead = if current.beta().is_zero() {
            Some(current.alpha().clone())
        } else if current.alpha().is_zero() {
            Some(-current.beta())
        } else {
            None
        };
        if let Some(u) = lead.filter(QuadInt::is_unit) {
            // (0, b) * S = (-b, 0), then diag(u^-1, u) sends (u, 0) to (1, 0)
            let prefix = if current.beta().is_zero() { ElemWord::empty(ring) } else { ElemWord::s_word(ring) };
            let finish = prefix.concat(&diagonal_word(&u.unit_inverse().expect("unit")))?;
            current = finish.apply(&current)?;
            word = word.concat(&finish)?;
        }
    }

    debug_assert_eq!(word.apply(start).unwrap(), current);
    let outcome = if is_trivial_variant(&one_row, &current) { Outcome::Reduced } else { Outcome::Stalled };
    Ok(ReductionResult { outcome, final_pair: current, word })
}
