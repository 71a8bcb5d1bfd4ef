use super::{pairs_equivalent, reduce_pair, Equivalence, Outcome, SearchParams};
use crate::error::{Error, Result};
use crate::linalg::{ElemWord, Mat2, Side};
use crate::unimodular::UniPair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// `word.to_matrix() == M`, verified exactly.
    Word(ElemWord),
    /// Neither the descent nor the budgeted search reached `(1, 0)`. Inconclusive.
    NotFound,
}

impl Membership {
    pub fn word(&self) -> Option<&ElemWord> {
        match self {
            Membership::Word(w) => Some(w),
            Membership::NotFound => None,
        }
    }
}

/// Word sending a variant of `(1, 0)` to `(1, 0)`.
fn finishing_word(v: &UniPair) -> ElemWord {
    let ring = v.ring();
    let s = ElemWord::s_word(ring);
    if v.alpha().is_one() {
        ElemWord::empty(ring)
    } else if v.alpha().is_zero() && (-v.beta()).is_one() {
        s
    } else if v.alpha().is_zero() {
        s.inverse()
    } else {
        s.concat(&s).expect("one ring")
    }
}

/// Budgeted search for a word in elementary matrices equal to `m`.
///
/// `m` lies in `E_2` iff its top row can be carried to `(1, 0)`: if
/// `top(m) * T = (1, 0)` then `m T` is lower unitriangular, a single move
/// `L(c)`, and `m = L(c) T^-1`. The top row is first reduced greedily; when
/// that stalls, a bidirectional search toward `(1, 0)` within `params` is tried.
pub fn matrix_in_e2(m: &Mat2, params: &SearchParams) -> Result<Membership> {
    let det = m.det();
    if !det.is_one() {
        return Err(Error::NotUnimodular { det: det.to_string() });
    }
    let ring = m.ring();
    let top = m.top_row();
    let target = UniPair::unit_row(ring);

    let reduction = reduce_pair(&top)?;
    let to_unit_row = if reduction.outcome == Outcome::Reduced {
        reduction.word.concat(&finishing_word(&reduction.final_pair))?
    } else {
        match pairs_equivalent(&reduction.final_pair, &target, params)? {
            Equivalence::Equivalent(w) => reduction.word.concat(&w)?,
            Equivalence::NotFound => return Ok(Membership::NotFound),
        }
    };
    debug_assert_eq!(to_unit_row.apply(&top)?, target);

    let lower = m.mul(&to_unit_row.to_matrix())?;
    assert!(lower.is_l2(), "row reduction left a non-triangular residue");
    let head = ElemWord::from_moves(ring, [(Side::Lower, lower.m21().clone())])?;
    let word = head.concat(&to_unit_row.inverse())?;
    assert_eq!(&word.to_matrix(), m, "membership word failed to verify");
    Ok(Membership::Word(word))
}
