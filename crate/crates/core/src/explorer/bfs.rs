use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{generator_set, SearchParams};
use crate::error::{Error, Result};
use crate::linalg::{ElemWord, Side};
use crate::ring::{QuadInt, RingDesc};
use crate::unimodular::{is_unimodular, UniPair};

/// Largest `norm_sq(t)` for which `y + t*x` can still satisfy
/// `norm_sq <= cap`: `|t||x| <= |y| + |y + t x|`.
fn multiplier_bound(x_norm: &BigInt, y_norm: &BigInt, cap: &BigInt) -> Option<BigInt> {
    if x_norm.is_zero() {
        return None;
    }
    let cross = (y_norm * cap).sqrt() + 1u32;
    Some((y_norm + cap + cross * 2u32) / x_norm)
}

/// One direction of a layer-synchronous breadth-first search. States are
/// stored in discovery order; the first discovery of a state fixes its
/// parent, which makes witnesses independent of how a layer is scheduled.
pub(crate) struct SearchTree {
    ring: RingDesc,
    gens: Vec<(QuadInt, BigInt)>,
    state_cap: BigInt,
    pub(crate) states: Vec<UniPair>,
    pub(crate) index: HashMap<UniPair, usize>,
    parent: Vec<Option<(usize, Side, usize)>>,
    pub(crate) depth: Vec<usize>,
    pub(crate) frontier: Vec<usize>,
    pub(crate) layers: usize,
}

impl SearchTree {
    pub(crate) fn new(start: UniPair, params: &SearchParams) -> Self {
        let ring = start.ring();
        let mut index = HashMap::new();
        index.insert(start.clone(), 0);
        SearchTree {
            ring,
            gens: generator_set(ring, params.gen_norm_cap),
            state_cap: BigInt::from(params.state_norm_cap),
            states: vec![start],
            index,
            parent: vec![None],
            depth: vec![0],
            frontier: vec![0],
            layers: 0,
        }
    }

    /// Neighbours of `p` inside the norm window, in generator order
    /// `(norm_sq(t), a, b, side)`.
    fn successors(&self, p: &UniPair) -> Vec<(UniPair, Side, usize)> {
        let na = p.alpha().norm_sq();
        let nb = p.beta().norm_sq();
        let upper = multiplier_bound(&na, &nb, &self.state_cap);
        let lower = multiplier_bound(&nb, &na, &self.state_cap);
        let mut out = Vec::new();
        for (gi, (t, tn)) in self.gens.iter().enumerate() {
            let up_ok = upper.as_ref().is_some_and(|b| tn <= b);
            let low_ok = lower.as_ref().is_some_and(|b| tn <= b);
            if !up_ok && !low_ok {
                break;
            }
            if up_ok {
                let beta = p.beta() + &(p.alpha() * t);
                if beta.norm_sq() <= self.state_cap {
                    out.push((UniPair::new_unchecked(p.alpha().clone(), beta), Side::Upper, gi));
                }
            }
            if low_ok {
                let alpha = p.alpha() + &(p.beta() * t);
                if alpha.norm_sq() <= self.state_cap {
                    out.push((UniPair::new_unchecked(alpha, p.beta().clone()), Side::Lower, gi));
                }
            }
        }
        out
    }

    /// Expands the current frontier by one layer, inserting at most
    /// `room` new states. Returns the indices of the new states and whether
    /// the state budget cut the layer short.
    pub(crate) fn expand_layer(&mut self, room: usize) -> (Vec<usize>, bool) {
        let expanded: Vec<Vec<(UniPair, Side, usize)>> =
            self.frontier.par_iter().map(|&i| self.successors(&self.states[i])).collect();
        let mut added = Vec::new();
        let mut truncated = false;
        'outer: for (&from, succ) in self.frontier.iter().zip(expanded) {
            for (q, side, gi) in succ {
                if self.index.contains_key(&q) {
                    continue;
                }
                if added.len() == room {
                    truncated = true;
                    break 'outer;
                }
                let id = self.states.len();
                self.index.insert(q.clone(), id);
                self.states.push(q);
                self.parent.push(Some((from, side, gi)));
                self.depth.push(self.depth[from] + 1);
                added.push(id);
            }
        }
        self.frontier = added.clone();
        self.layers += 1;
        (added, truncated)
    }

    /// Whether expanding the frontier would reach any unseen state.
    pub(crate) fn frontier_is_closed(&self) -> bool {
        self.frontier
            .par_iter()
            .all(|&i| self.successors(&self.states[i]).iter().all(|(q, _, _)| self.index.contains_key(q)))
    }

    /// The word taking the root to state `id`.
    pub(crate) fn word_to(&self, mut id: usize) -> ElemWord {
        let mut moves = Vec::new();
        while let Some((from, side, gi)) = self.parent[id] {
            moves.push((side, self.gens[gi].0.clone()));
            id = from;
        }
        moves.reverse();
        ElemWord::from_moves(self.ring, moves).expect("moves share the ring")
    }
}

/// A bounded window onto the orbit of a pair.
pub struct OrbitReport {
    tree: SearchTree,
    exhausted: bool,
}

impl OrbitReport {
    pub fn start(&self) -> &UniPair {
        &self.tree.states[0]
    }

    /// Visited pairs in discovery order.
    pub fn visited(&self) -> &[UniPair] {
        &self.tree.states
    }

    pub fn len(&self) -> usize {
        self.tree.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.states.is_empty()
    }

    pub fn contains(&self, p: &UniPair) -> bool {
        self.tree.index.contains_key(p)
    }

    /// True iff the search stopped because no new pair was reachable.
    pub fn frontier_exhausted(&self) -> bool {
        self.exhausted
    }

    /// A shortest word `w` (within the window) with `start * w = p`.
    pub fn witness(&self, p: &UniPair) -> Option<ElemWord> {
        self.tree.index.get(p).map(|&i| self.tree.word_to(i))
    }

    pub fn depth_of(&self, p: &UniPair) -> Option<usize> {
        self.tree.index.get(p).map(|&i| self.tree.depth[i])
    }

    pub fn to_json(&self) -> Value {
        let witnesses: BTreeMap<String, String> = self
            .tree
            .states
            .iter()
            .enumerate()
            .map(|(i, p)| (p.to_string(), self.tree.word_to(i).to_string()))
            .collect();
        json!({
            "visited": self.tree.states.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "witnesses": witnesses,
            "exhausted": self.exhausted,
        })
    }
}

/// Breadth-first closure of `start` under right multiplication by
/// elementary matrices, inside the norm window given by `params`.
pub fn orbit_bfs(start: &UniPair, params: &SearchParams) -> Result<OrbitReport> {
    params.validate()?;
    if !is_unimodular(start) {
        return Err(Error::InvalidInput(format!("{start} is not unimodular")));
    }
    let mut tree = SearchTree::new(start.clone(), params);
    let exhausted = loop {
        if tree.frontier.is_empty() {
            break true;
        }
        if tree.layers == params.max_depth || tree.states.len() == params.max_states {
            break tree.frontier_is_closed();
        }
        let room = params.max_states - tree.states.len();
        let (_, truncated) = tree.expand_layer(room);
        if truncated {
            break false;
        }
    };
    Ok(OrbitReport { tree, exhausted })
}
