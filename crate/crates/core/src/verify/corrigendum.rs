//! Exact re-computation of the matrix identities behind the non-normality
//! argument over `Z[di]`, one group of nine checks per value of `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{check_name, param, Certificate, Check};
use crate::error::{Error, Result};
use crate::explorer::{matrix_in_e2, SearchParams};
use crate::linalg::{ElemWord, Mat2};
use crate::ring::{QuadInt, RingDesc};
use crate::unimodular::{is_special, is_trivial_variant, UniPair};

/// Builds `re + im*i` in `Z[di]` (encoded as `sqrt:d^2`, `w = di`); needs `d | im`.
fn gi(ring: RingDesc, d: u64, re: i128, im: i128) -> QuadInt {
    let d = i128::from(d);
    assert_eq!(im % d, 0, "{im}i is not in Z[{d}i]");
    QuadInt::new(ring, BigInt::from(re), BigInt::from(im / d))
}

fn mat(ring: RingDesc, d: u64, e: [(i128, i128); 4]) -> Mat2 {
    let [a, b, c, x] = e.map(|(re, im)| gi(ring, d, re, im));
    Mat2::new(a, b, c, x).expect("one ring")
}

/// `[[1+n+ni, 1+n-ni], [n, 1-ni]]`.
pub(crate) fn family_matrix(d: u64, n: u64) -> Mat2 {
    let ring = RingDesc::gaussian_multiple(d).expect("d >= 2");
    let n = i128::from(n);
    mat(ring, d, [(1 + n, n), (1 + n, -n), (n, 0), (1, -n)])
}

/// `(1+m+mi, 1+m-mi)`.
fn family_pair(ring: RingDesc, d: u64, m: u64) -> UniPair {
    let m = i128::from(m);
    UniPair::new(gi(ring, d, 1 + m, m), gi(ring, d, 1 + m, -m)).expect("one ring")
}

fn s_inverse(ring: RingDesc) -> Mat2 {
    Mat2::from_coords(ring, [(0, 0), (-1, 0), (1, 0), (0, 0)])
}

const KINDS: [&str; 9] = [
    "corrigendum.1-det",
    "corrigendum.2-special-norms",
    "corrigendum.3-s-word",
    "corrigendum.4-conjugation",
    "corrigendum.5-inverse",
    "corrigendum.6-square",
    "corrigendum.7-conjugated-product",
    "corrigendum.8-lemma1-linkage",
    "corrigendum.9-distinct-classes",
];

fn build_check(
    kind: &str,
    d: u64,
    n: u64,
    others: &[u64],
    family: &(dyn Fn(u64, u64) -> Mat2 + Sync),
) -> Result<Check> {
    let ring = RingDesc::gaussian_multiple(d)?;
    let ni = i128::from(n);
    let mut params = vec![("d", d.to_string()), ("n", n.to_string())];
    let x = mat(ring, d, [(1, -ni), (-ni, 0), (-ni, 0), (1, ni)]);
    let y = mat(ring, d, [(1, ni), (ni, 0), (ni, 0), (1, -ni)]);
    let s = ElemWord::s_word(ring).to_matrix();
    let s_inv = s_inverse(ring);
    let b = mat(ring, d, [(1, -2 * ni), (-2 * ni, 0), (-1 - 2 * ni, 2 * ni), (1 + 2 * ni, 2 * ni)]);

    let check = match kind {
        "corrigendum.1-det" => {
            let f = family(d, n);
            let det = f.det();
            Check::new(
                check_name(kind, &params),
                "det [[1+n+ni, 1+n-ni], [n, 1-ni]] = 1, so (1+n+ni, 1+n-ni) is unimodular",
                det.is_one(),
                vec![("matrix", f.to_string()), ("det", det.to_string())],
            )
        }
        "corrigendum.2-special-norms" => {
            let p = family_pair(ring, d, n);
            let (na, nb) = (p.alpha().norm_sq(), p.beta().norm_sq());
            let nsum = (p.alpha() + p.beta()).norm_sq();
            let ndiff = (p.alpha() - p.beta()).norm_sq();
            let n_big = BigInt::from(n);
            let base = (&n_big + 1u32) * (&n_big + 1u32) + &n_big * &n_big;
            let ok = na == base
                && nb == base
                && nsum == (&n_big * 2u32 + 2u32).pow(2)
                && ndiff == (&n_big * 2u32).pow(2)
                && n > 1
                && nsum > base
                && ndiff > base;
            Check::new(
                check_name(kind, &params),
                "|1+n+ni|^2 = |1+n-ni|^2 = (1+n)^2+n^2 < (2+2n)^2, (2n)^2 = |sum|^2, |difference|^2 (n > 1)",
                ok,
                vec![
                    ("pair", p.to_string()),
                    ("norm_alpha", na.to_string()),
                    ("norm_beta", nb.to_string()),
                    ("norm_sum", nsum.to_string()),
                    ("norm_diff", ndiff.to_string()),
                ],
            )
        }
        "corrigendum.3-s-word" => {
            let word = ElemWord::s_word(ring);
            let found = matrix_in_e2(&Mat2::s_matrix(ring), &SearchParams::default())?;
            let found = found.word().map(ToString::to_string).unwrap_or_else(|| "not-found".into());
            let ok = word.to_matrix() == Mat2::s_matrix(ring) && found == word.to_string();
            Check::new(
                check_name(kind, &params),
                "U(1) L(-1) U(1) = [[0,1],[-1,0]], so S lies in E_2 (length-3 word derived here)",
                ok,
                vec![("word", word.to_string()), ("product", s.to_string()), ("membership", found)],
            )
        }
        "corrigendum.4-conjugation" => {
            let product = s.mul(&x)?.mul(&s_inv)?;
            Check::new(
                check_name(kind, &params),
                "S [[1-ni,-n],[-n,1+ni]] S^-1 = [[1+ni,n],[n,1-ni]]: both rows share an E_2 class",
                product == y,
                vec![("lhs", product.to_string()), ("expected", y.to_string())],
            )
        }
        "corrigendum.5-inverse" => {
            let inv = y.inv_sl2()?;
            Check::new(
                check_name(kind, &params),
                "[[1-ni,-n],[-n,1+ni]] = [[1+ni,n],[n,1-ni]]^-1: the class of (1-ni, -n) would have order 2",
                inv == x,
                vec![("inverse", inv.to_string()), ("expected", x.to_string())],
            )
        }
        "corrigendum.6-square" => {
            let sq = x.mul(&x)?;
            let expected = mat(ring, d, [(1, -2 * ni), (-2 * ni, 0), (-2 * ni, 0), (1, 2 * ni)]);
            Check::new(
                check_name(kind, &params),
                "[[1-ni,-n],[-n,1+ni]]^2 = [[1-2ni,-2n],[-2n,1+2ni]]",
                sq == expected,
                vec![("square", sq.to_string()), ("expected", expected.to_string())],
            )
        }
        "corrigendum.7-conjugated-product" => {
            let product = s_inv.mul(&b)?.mul(&s)?;
            let expected = mat(ring, d, [(1 + 2 * ni, 2 * ni), (1 + 2 * ni, -2 * ni), (2 * ni, 0), (1, -2 * ni)]);
            Check::new(
                check_name(kind, &params),
                "S^-1 [[1-2ni,-2n],[-1-2n+2ni,1+2n+2ni]] S = [[1+2n+2ni,1+2n-2ni],[2n,1-2ni]]",
                product == expected && b.det().is_one(),
                vec![("lhs", product.to_string()), ("expected", expected.to_string())],
            )
        }
        "corrigendum.8-lemma1-linkage" => {
            let a = x.mul(&x)?;
            let quotient = a.mul(&b.inv_sl2()?)?;
            let ok = a.det().is_one() && b.det().is_one() && a.top_row() == b.top_row() && quotient.is_l2();
            Check::new(
                check_name(kind, &params),
                "the two matrices with top row (1-2ni, -2n) differ by a left L_2 factor",
                ok,
                vec![("a", a.to_string()), ("b", b.to_string()), ("a_b_inverse", quotient.to_string())],
            )
        }
        "corrigendum.9-distinct-classes" => {
            params.push(("others", others.iter().map(u64::to_string).collect::<Vec<_>>().join(",")));
            let p = family_pair(ring, d, 2 * n);
            let clashes: Vec<u64> = others
                .iter()
                .copied()
                .filter(|&m| m != n && is_trivial_variant(&family_pair(ring, d, 2 * m), &p))
                .collect();
            let special = is_special(&p);
            Check::new(
                check_name(kind, &params),
                "(1+2n+2ni, 1+2n-2ni) is special and no other n' in the list gives one of its trivial variants",
                special && clashes.is_empty(),
                vec![("pair", p.to_string()), ("special", special.to_string()), ("clashes", format!("{clashes:?}"))],
            )
        }
        _ => return Err(Error::Parse(format!("unknown check kind `{kind}`"))),
    };
    Ok(check)
}

fn true_family(d: u64, n: u64) -> Mat2 {
    family_matrix(d, n)
}

/// All nine identity checks for every `n` in `ns`, over `Z[di]`.
pub fn verify_corrigendum(d: u64, ns: &[u64]) -> Result<Certificate> {
    verify_corrigendum_with_family(d, ns, &true_family)
}

/// [`verify_corrigendum`] with the matrix of check 1 supplied by the caller,
/// for fault-injection tests.
#[doc(hidden)]
pub fn verify_corrigendum_with_family(
    d: u64,
    ns: &[u64],
    family: &(dyn Fn(u64, u64) -> Mat2 + Sync),
) -> Result<Certificate> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d must be >= 2, got {d}")));
    }
    if ns.is_empty() {
        return Err(Error::InvalidParameter("no values of n given".into()));
    }
    if let Some(n) = ns.iter().find(|&&n| n == 0 || n % d != 0) {
        return Err(Error::InvalidParameter(format!("n = {n} is not a positive multiple of d = {d}")));
    }
    let ring = RingDesc::gaussian_multiple(d)?;
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let jobs: Vec<(u64, &str)> = ns.iter().flat_map(|&n| KINDS.iter().map(move |&k| (n, k))).collect();
    let others: Vec<u64> = ns.clone();
    let checks = jobs
        .par_iter()
        .map(|&(n, kind)| {
            let others: Vec<u64> = others.iter().copied().filter(|&m| m != n).collect();
            build_check(kind, d, n, &others, family)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate::new(ring, checks))
}

pub(super) fn regenerate(ring: RingDesc, kind: &str, params: &BTreeMap<&str, &str>) -> Result<Check> {
    let d: u64 = param(params, "d")?;
    let n: u64 = param(params, "n")?;
    if RingDesc::gaussian_multiple(d)? != ring {
        return Err(Error::InvalidInput(format!("check for d = {d} recorded under ring {ring}")));
    }
    let others = match params.get("others") {
        Some(list) if !list.is_empty() => list
            .split(',')
            .map(|v| v.parse().map_err(|_| Error::Parse(format!("bad n `{v}`"))))
            .collect::<Result<Vec<u64>>>()?,
        _ => Vec::new(),
    };
    build_check(kind, d, n, &others, &true_family)
}
