//! Randomized checks of the mechanics behind the bijection between
//! `L_2 \ SL_2 / E_2` and unimodular rows modulo `E_2`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_name, param, Certificate, Check};
use crate::error::{Error, Result};
use crate::linalg::{ElemWord, Mat2, Side};
use crate::ring::{QuadInt, RingDesc};
use crate::unimodular::complete_pair;

const MAX_WORD_LEN: usize = 8;
const PARAM_NORM_CAP: u64 = 9;

struct Sampler {
    rng: ChaCha8Rng,
    ring: RingDesc,
    params: Vec<QuadInt>,
}

impl Sampler {
    fn new(ring: RingDesc, seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), ring, params: ring.elements_with_norm_at_most(PARAM_NORM_CAP) }
    }

    fn element(&mut self) -> QuadInt {
        self.params.choose(&mut self.rng).expect("nonempty").clone()
    }

    fn lower(&mut self) -> Mat2 {
        let c = self.element();
        Mat2::new(self.ring.one(), self.ring.zero(), c, self.ring.one()).expect("one ring")
    }

    fn word(&mut self) -> ElemWord {
        let len = self.rng.gen_range(1..=MAX_WORD_LEN);
        let moves: Vec<(Side, QuadInt)> = (0..len)
            .map(|_| {
                let side = if self.rng.gen_bool(0.5) { Side::Upper } else { Side::Lower };
                (side, self.element())
            })
            .collect();
        ElemWord::from_moves(self.ring, moves).expect("one ring")
    }

    /// A random element of `SL_2`: a random `L_2` factor times a random word.
    fn sl2(&mut self) -> Mat2 {
        let l = self.lower();
        let w = self.word().to_matrix();
        l.mul(&w).expect("one ring")
    }
}

struct Tally {
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: 0, first: None }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(detail());
            }
        }
    }

    fn into_check(self, name: String, claim: &str, samples: usize) -> Check {
        let mut witness = vec![("samples", samples.to_string()), ("failures", self.failures.to_string())];
        if let Some(first) = self.first {
            witness.push(("first_failure", first));
        }
        Check::new(name, claim, self.failures == 0, witness)
    }
}

const KINDS: [&str; 3] = ["lemma1.a-well-defined", "lemma1.b-injective", "lemma1.c-surjective"];

/// Runs `samples` random `SL_2` elements through the three proof mechanisms:
/// left `L_2` factors keep the top row, two matrices with one top row differ by a
/// left `L_2` factor, and every top row has a completion.
pub fn check_lemma1(ring: RingDesc, samples: usize, seed: u64) -> Result<Certificate> {
    if samples == 0 {
        return Err(Error::InvalidParameter("sample count must be >= 1".into()));
    }
    let mut sampler = Sampler::new(ring, seed);
    let mut well_defined = Tally::new();
    let mut injective = Tally::new();
    let mut surjective = Tally::new();

    for _ in 0..samples {
        let m = sampler.sl2();
        let l = sampler.lower();

        let moved = l.mul(&m)?;
        well_defined.record(moved.top_row() == m.top_row() && m.det().is_one(), || format!("{l} * {m} = {moved}"));

        let completion = complete_pair(&m.top_row());
        surjective.record(completion.is_some(), || format!("no completion for {}", m.top_row()));

        // second preimages: another L_2 translate, and the independent HNF completion
        let mut partners = vec![sampler.lower().mul(&m)?];
        partners.extend(completion.map(|c| c.into_matrix()));
        for other in partners {
            let q = m.mul(&other.inv_sl2()?)?;
            injective.record(q.is_l2(), || format!("{m} * {other}^-1 = {q}"));
        }
    }

    let params = [("samples", samples.to_string()), ("seed", seed.to_string())];
    let checks = vec![
        well_defined.into_check(
            check_name(KINDS[0], &params),
            "left multiplication by L_2 leaves the top row unchanged",
            samples,
        ),
        injective.into_check(
            check_name(KINDS[1], &params),
            "matrices sharing a top row satisfy M N^-1 in L_2",
            samples,
        ),
        surjective.into_check(
            check_name(KINDS[2], &params),
            "the top row of every sampled SL_2 element has a completion",
            samples,
        ),
    ];
    Ok(Certificate::new(ring, checks))
}

pub(super) fn regenerate(ring: RingDesc, kind: &str, params: &BTreeMap<&str, &str>) -> Result<Check> {
    let samples: usize = param(params, "samples")?;
    let seed: u64 = param(params, "seed")?;
    let idx =
        KINDS.iter().position(|k| *k == kind).ok_or_else(|| Error::Parse(format!("unknown check kind `{kind}`")))?;
    Ok(check_lemma1(ring, samples, seed)?.checks.swap_remove(idx))
}
