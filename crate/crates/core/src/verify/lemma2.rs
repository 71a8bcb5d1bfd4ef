//! Empirical scan of the rigidity of special pairs: the four trivial variants
//! of a special pair are connected by explicit words, and no budgeted search
//! connects it to any other special pair.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{check_name, param, Certificate, Check};
use crate::error::{Error, Result};
use crate::explorer::{orbit_bfs, pairs_equivalent, Equivalence, SearchParams};
use crate::ring::RingDesc;
use crate::unimodular::{enumerate_special, is_special, is_trivial_variant, trivial_variants, UniPair};

/// The rigidity statement is only used for `D >= 4`.
pub fn scan_hypothesis(ring: RingDesc) -> Result<()> {
    if ring.param() < 4 {
        return Err(Error::OutOfScopeRing { ring, reason: "special-pair rigidity needs D >= 4".into() });
    }
    Ok(())
}

fn class_rep(p: &UniPair) -> UniPair {
    trivial_variants(p).into_iter().min_by(UniPair::sort_key_cmp).expect("four variants")
}

fn name_params(cap: u64, params: &SearchParams, rep: &UniPair) -> Vec<(&'static str, String)> {
    vec![
        ("cap", cap.to_string()),
        ("state_cap", params.state_norm_cap.to_string()),
        ("gen_cap", params.gen_norm_cap.to_string()),
        ("max_states", params.max_states.to_string()),
        ("max_depth", params.max_depth.to_string()),
        ("pair", rep.to_string()),
    ]
}

fn variants_check(cap: u64, params: &SearchParams, rep: &UniPair) -> Result<Check> {
    let mut witness = Vec::new();
    let mut ok = true;
    for (i, v) in trivial_variants(rep).iter().enumerate().skip(1) {
        let key = ["", "to_v1", "to_v2", "to_v3"][i];
        match pairs_equivalent(rep, v, params)? {
            Equivalence::Equivalent(w) => {
                ok &= &w.apply(rep)? == v;
                witness.push((key, format!("{v} via {w}")));
            }
            Equivalence::NotFound => {
                ok = false;
                witness.push((key, format!("{v} not found")));
            }
        }
    }
    Ok(Check::new(
        check_name("lemma2.variants", &name_params(cap, params, rep)),
        "the trivial variants (b,-a), (-a,-b), (-b,a) are reached by explicit verified words",
        ok,
        witness,
    ))
}

fn separation_check(cap: u64, params: &SearchParams, rep: &UniPair, specials: &[UniPair]) -> Result<Check> {
    let report = orbit_bfs(rep, params)?;
    let reached: Vec<&UniPair> = specials.iter().filter(|q| report.contains(q)).collect();
    let cross: Vec<String> = reached
        .iter()
        .filter(|q| !is_trivial_variant(rep, q))
        .map(|q| match report.witness(q) {
            Some(w) => format!("{q} via {w}"),
            None => q.to_string(),
        })
        .collect();
    Ok(Check::new(
        check_name("lemma2.separation", &name_params(cap, params, rep)),
        "no budgeted word reaches a special pair outside the trivial variants \
         (consistent with rigidity; a negative search is inconclusive, not a proof)",
        cross.is_empty(),
        vec![
            ("window_states", report.len().to_string()),
            ("window_closed", report.frontier_exhausted().to_string()),
            ("specials_reached", reached.len().to_string()),
            ("cross_class", format!("[{}]", cross.join("; "))),
        ],
    ))
}

/// For every class of special pairs with `norm_sq(alpha) <= norm_cap`,
/// connects the four trivial variants with words and searches the orbit
/// window for any other special pair.
pub fn lemma2_scan(ring: RingDesc, norm_cap: u64, params: &SearchParams) -> Result<Certificate> {
    scan_hypothesis(ring)?;
    params.validate()?;
    if norm_cap < 1 {
        return Err(Error::InvalidParameter("norm cap must be >= 1".into()));
    }
    let specials = enumerate_special(ring, norm_cap);
    let mut reps: Vec<UniPair> = specials.iter().map(class_rep).collect();
    reps.sort_by(UniPair::sort_key_cmp);
    reps.dedup();

    let checks: Vec<Vec<Check>> = reps
        .par_iter()
        .map(|rep| {
            Ok(vec![variants_check(norm_cap, params, rep)?, separation_check(norm_cap, params, rep, &specials)?])
        })
        .collect::<Result<_>>()?;
    Ok(Certificate::new(ring, checks.into_iter().flatten().collect()))
}

pub(super) fn regenerate(ring: RingDesc, kind: &str, params: &BTreeMap<&str, &str>) -> Result<Check> {
    scan_hypothesis(ring)?;
    let cap: u64 = param(params, "cap")?;
    let search = SearchParams::new(
        param(params, "state_cap")?,
        param(params, "gen_cap")?,
        param(params, "max_states")?,
        param(params, "max_depth")?,
    )?;
    let rep = UniPair::parse(ring, params.get("pair").ok_or_else(|| Error::Parse("missing pair".into()))?)?;
    if !is_special(&rep) {
        return Err(Error::InvalidInput(format!("{rep} is not special")));
    }
    match kind {
        "lemma2.variants" => variants_check(cap, &search, &rep),
        "lemma2.separation" => separation_check(cap, &search, &rep, &enumerate_special(ring, cap)),
        _ => Err(Error::Parse(format!("unknown check kind `{kind}`"))),
    }
}
