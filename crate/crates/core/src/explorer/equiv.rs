use super::bfs::SearchTree;
use super::SearchParams;
use crate::error::{Error, Result};
use crate::linalg::ElemWord;
use crate::unimodular::{is_unimodular, UniPair};

/// Outcome of a budgeted equivalence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// `p * word = q`, verified exactly.
    Equivalent(ElemWord),
    /// No connection inside the budget. This is inconclusive, not a proof.
    NotFound,
}

impl Equivalence {
    pub fn word(&self) -> Option<&ElemWord> {
        match self {
            Equivalence::Equivalent(w) => Some(w),
            Equivalence::NotFound => None,
        }
    }
}

/// Bidirectional breadth-first search for a word `w` with `p * w = q`.
///
/// Both trees share the budgets in `params`: `max_states` bounds the total
/// number of stored pairs and `max_depth` the combined depth of the two trees.
pub fn pairs_equivalent(p: &UniPair, q: &UniPair, params: &SearchParams) -> Result<Equivalence> {
    params.validate()?;
    if p.ring() != q.ring() {
        return Err(Error::RingMismatch { left: p.ring(), right: q.ring() });
    }
    for x in [p, q] {
        if !is_unimodular(x) {
            return Err(Error::InvalidInput(format!("{x} is not unimodular")));
        }
    }
    if p == q {
        return Ok(Equivalence::Equivalent(ElemWord::empty(p.ring())));
    }

    let mut fwd = SearchTree::new(p.clone(), params);
    let mut bwd = SearchTree::new(q.clone(), params);
    loop {
        if fwd.layers + bwd.layers >= params.max_depth {
            return Ok(Equivalence::NotFound);
        }
        let used = fwd.states.len() + bwd.states.len();
        if used >= params.max_states {
            return Ok(Equivalence::NotFound);
        }
        let room = params.max_states - used;
        // grow the smaller frontier; forward on ties
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (grow, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        if grow.frontier.is_empty() {
            return Ok(Equivalence::NotFound);
        }
        let (added, truncated) = grow.expand_layer(room);

        // the meeting point with the shortest combined path, first discovered on ties
        let meet = added
            .iter()
            .filter_map(|&id| {
                let other_id = *other.index.get(&grow.states[id])?;
                Some((grow.depth[id] + other.depth[other_id], id, other_id))
            })
            .min_by_key(|&(len, id, _)| (len, id));
        if let Some((_, id, other_id)) = meet {
            let (f_id, b_id) = if forward { (id, other_id) } else { (other_id, id) };
            let word = fwd.word_to(f_id).concat(&bwd.word_to(b_id).inverse())?;
            let reached = word.apply(p)?;
            assert_eq!(&reached, q, "equivalence witness failed to verify");
            return Ok(Equivalence::Equivalent(word));
        }
        if truncated {
            return Ok(Equivalence::NotFound);
        }
    }
}
