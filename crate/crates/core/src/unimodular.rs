//! Unimodular pairs: deciding and completing them, the special-pair
//! predicate, and the explicit special family over `Z[di]`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hnf::hermite_normal_form;
use crate::linalg::Mat2;
use crate::ring::{QuadInt, RingDesc};

/// A pair `(alpha, beta)` of elements of one ring, read as a row vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPair {
    alpha: QuadInt,
    beta: QuadInt,
}

impl UniPair {
    pub fn new(alpha: QuadInt, beta: QuadInt) -> Result<Self> {
        if alpha.ring() != beta.ring() {
            return Err(Error::RingMismatch { left: alpha.ring(), right: beta.ring() });
        }
        Ok(UniPair { alpha, beta })
    }

    pub(crate) fn new_unchecked(alpha: QuadInt, beta: QuadInt) -> Self {
        debug_assert_eq!(alpha.ring(), beta.ring());
        UniPair { alpha, beta }
    }

    /// `(1, 0)`.
    pub fn unit_row(ring: RingDesc) -> Self {
        UniPair { alpha: ring.one(), beta: ring.zero() }
    }

    pub fn ring(&self) -> RingDesc {
        self.alpha.ring()
    }

    pub fn alpha(&self) -> &QuadInt {
        &self.alpha
    }

    pub fn beta(&self) -> &QuadInt {
        &self.beta
    }

    /// The larger of the two squared norms.
    pub fn max_norm(&self) -> BigInt {
        self.alpha.norm_sq().max(self.beta.norm_sq())
    }

    /// Deterministic order: `(norm_sq(alpha), alpha.a, alpha.b, beta.a, beta.b)`.
    pub fn sort_key_cmp(&self, other: &UniPair) -> Ordering {
        self.alpha
            .norm_sq()
            .cmp(&other.alpha.norm_sq())
            .then_with(|| self.alpha.a().cmp(other.alpha.a()))
            .then_with(|| self.alpha.b().cmp(other.alpha.b()))
            .then_with(|| self.beta.a().cmp(other.beta.a()))
            .then_with(|| self.beta.b().cmp(other.beta.b()))
    }

    /// Parses `(a1+b1*w, a2+b2*w)`.
    pub fn parse(ring: RingDesc, s: &str) -> Result<UniPair> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(alpha, beta)`, got `{s}`")))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse(format!("expected two entries in `{s}`")))?;
        UniPair::new(QuadInt::parse(ring, a)?, QuadInt::parse(ring, b)?)
    }
}

impl fmt::Display for UniPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

impl Serialize for UniPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A determinant-one matrix whose top row is a given pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    matrix: Mat2,
}

impl Completion {
    /// Accepts `matrix` only if it has determinant one and top row `pair`.
    pub fn validate(pair: &UniPair, matrix: Mat2) -> Result<Completion> {
        if matrix.ring() != pair.ring() {
            return Err(Error::RingMismatch { left: pair.ring(), right: matrix.ring() });
        }
        let det = matrix.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        if matrix.top_row() != *pair {
            return Err(Error::InvalidInput(format!("top row of {matrix} is not {pair}")));
        }
        Ok(Completion { matrix })
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn into_matrix(self) -> Mat2 {
        self.matrix
    }
}

fn coords(x: &QuadInt) -> Vec<BigInt> {
    vec![x.a().clone(), x.b().clone()]
}

/// Bezout coefficients `(x, y)` with `alpha*x + beta*y = 1`, if they exist.
///
/// The ideal `(alpha, beta)` is the Z-lattice spanned by `alpha, w*alpha,
/// beta, w*beta`; it is the whole order exactly when its Hermite normal form
/// is the 2x2 identity, and the first row of the transformation then spells
/// out `1` in terms of the generators.
pub fn bezout(p: &UniPair) -> Option<(QuadInt, QuadInt)> {
    let ring = p.ring();
    let w = ring.omega();
    let rows = vec![coords(&p.alpha), coords(&(&w * &p.alpha)), coords(&p.beta), coords(&(&w * &p.beta))];
    let h = hermite_normal_form(&rows);
    let full =
        h.rank == 2 && h.hnf[0][0].is_one() && h.hnf[0][1].is_zero() && h.hnf[1][0].is_zero() && h.hnf[1][1].is_one();
    if !full {
        return None;
    }
    let u = &h.transform[0];
    let x = QuadInt::new(ring, u[0].clone(), u[1].clone());
    let y = QuadInt::new(ring, u[2].clone(), u[3].clone());
    debug_assert!((&(&p.alpha * &x) + &(&p.beta * &y)).is_one());
    Some((x, y))
}

/// A completion `[[alpha, beta], [-y, x]]` of a unimodular pair, or `None`
/// when `1` is not in the ideal `(alpha, beta)`.
pub fn complete_pair(p: &UniPair) -> Option<Completion> {
    let (x, y) = bezout(p)?;
    let m = Mat2::new(p.alpha.clone(), p.beta.clone(), -y, x).expect("one ring");
    Some(Completion::validate(p, m).expect("Bezout completion has det 1"))
}

pub fn is_unimodular(p: &UniPair) -> bool {
    bezout(p).is_some()
}

/// The norm inequalities `|alpha| = |beta| < |alpha +- beta|`, without the
/// unimodularity requirement.
pub fn has_special_norms(p: &UniPair) -> bool {
    let n = p.alpha.norm_sq();
    n == p.beta.norm_sq() && n < (&p.alpha + &p.beta).norm_sq() && n < (&p.alpha - &p.beta).norm_sq()
}

/// Unimodular with `|alpha| = |beta| < |alpha +- beta|`.
pub fn is_special(p: &UniPair) -> bool {
    has_special_norms(p) && is_unimodular(p)
}

/// `[(a, b), (b, -a), (-a, -b), (-b, a)]`.
pub fn trivial_variants(p: &UniPair) -> [UniPair; 4] {
    let (a, b) = (&p.alpha, &p.beta);
    [
        p.clone(),
        UniPair::new_unchecked(b.clone(), -a),
        UniPair::new_unchecked(-a, -b),
        UniPair::new_unchecked(-b, a.clone()),
    ]
}

pub fn is_trivial_variant(p: &UniPair, q: &UniPair) -> bool {
    trivial_variants(p).iter().any(|v| v == q)
}

/// The pair `(1+n+ni, 1+n-ni)` over `Z[di]` and its completion
/// `[[1+n+ni, 1+n-ni], [n, 1-ni]]`. Requires `d >= 2` and `d | n`.
pub fn corrigendum_pair(d: u64, n: u64) -> Result<(UniPair, Completion)> {
    if d < 2 {
        let ring = RingDesc::gaussian_multiple(d.max(1))?;
        return Err(Error::OutOfScopeRing { ring, reason: format!("family needs d >= 2, got d = {d}") });
    }
    if n == 0 || !n.is_multiple_of(d) {
        return Err(Error::InvalidParameter(format!("n = {n} must be a positive multiple of d = {d}")));
    }
    let ring = RingDesc::gaussian_multiple(d)?;
    // i = w / d, so n*i = (n/d) w
    let k = BigInt::from(n / d);
    let n1 = BigInt::from(n) + 1u32;
    let alpha = QuadInt::new(ring, n1.clone(), k.clone());
    let beta = QuadInt::new(ring, n1, -&k);
    let pair = UniPair::new_unchecked(alpha.clone(), beta.clone());
    let m = Mat2::new(alpha, beta, QuadInt::from_int(ring, n), QuadInt::new(ring, 1, -k))?;
    let completion = Completion::validate(&pair, m)?;
    Ok((pair, completion))
}

/// Every special pair with `norm_sq(alpha) <= norm_cap`, sorted by
/// [`UniPair::sort_key_cmp`].
pub fn enumerate_special(ring: RingDesc, norm_cap: u64) -> Vec<UniPair> {
    let elements = ring.elements_with_norm_at_most(norm_cap);
    let mut classes: Vec<&[QuadInt]> = Vec::new();
    let mut start = 0;
    for i in 1..=elements.len() {
        if i == elements.len() || elements[i].norm_sq() != elements[start].norm_sq() {
            classes.push(&elements[start..i]);
            start = i;
        }
    }
    let mut out: Vec<UniPair> = classes
        .par_iter()
        .flat_map_iter(|class| {
            let mut found = Vec::new();
            for a in class.iter() {
                for b in class.iter() {
                    let p = UniPair::new_unchecked(a.clone(), b.clone());
                    if is_special(&p) {
                        found.push(p);
                    }
                }
            }
            found
        })
        .collect();
    out.sort_by(UniPair::sort_key_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: u64) -> RingDesc {
        RingDesc::gaussian_multiple(d).unwrap()
    }

    fn pair(r: RingDesc, a: (i64, i64), b: (i64, i64)) -> UniPair {
        UniPair::new(QuadInt::new(r, a.0, a.1), QuadInt::new(r, b.0, b.1)).unwrap()
    }

    #[test]
    fn completion_examples() {
        let r = g(2);
        let c = complete_pair(&pair(r, (1, 0), (0, 0))).unwrap();
        assert!(c.matrix().det().is_one());

        let p = pair(r, (3, 1), (3, -1));
        let c = complete_pair(&p).unwrap();
        assert_eq!(c.matrix().top_row(), p);
        let family = Mat2::from_coords(r, [(3, 1), (3, -1), (2, 0), (1, -1)]);
        assert!(Completion::validate(&p, family).is_ok());

        // (2, 2i): both entries lie in the ideal (2, w)
        assert!(complete_pair(&pair(r, (2, 0), (0, 1))).is_none());
        assert!(complete_pair(&pair(r, (0, 0), (0, 0))).is_none());
    }

    #[test]
    fn validator_rejects_bad_completions() {
        let r = g(2);
        let p = pair(r, (3, 1), (3, -1));
        let wrong_det = Mat2::from_coords(r, [(3, 1), (3, -1), (0, 0), (1, 0)]);
        assert!(matches!(Completion::validate(&p, wrong_det), Err(Error::NotUnimodular { .. })));
        let wrong_row = Mat2::identity(r);
        assert!(Completion::validate(&p, wrong_row).is_err());
    }

    #[test]
    fn special_examples() {
        let r = g(2);
        assert!(is_special(&pair(r, (3, 1), (3, -1))));
        assert!(!is_special(&pair(r, (1, 0), (1, 0))));
        assert!(!is_special(&pair(r, (3, 1), (2, 0))));
        // norms fine but not unimodular: (2+2i, 2-2i)
        let p = pair(r, (2, 1), (2, -1));
        assert!(has_special_norms(&p));
        assert!(!is_special(&p));
    }

    #[test]
    fn family_examples() {
        let (p, c) = corrigendum_pair(2, 2).unwrap();
        let r = g(2);
        assert_eq!(p, pair(r, (3, 1), (3, -1)));
        assert_eq!(c.matrix().m21(), &QuadInt::from_int(r, 2));
        assert_eq!(c.matrix().m22(), &QuadInt::new(r, 1, -1));

        let (p, c) = corrigendum_pair(2, 4).unwrap();
        assert_eq!(p, pair(r, (5, 2), (5, -2)));
        assert_eq!(c.matrix().m22(), &QuadInt::new(r, 1, -2));

        assert!(matches!(corrigendum_pair(3, 4), Err(Error::InvalidParameter(_))));
        assert!(matches!(corrigendum_pair(1, 4), Err(Error::OutOfScopeRing { .. })));
        assert!(matches!(corrigendum_pair(2, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn variant_examples() {
        let r = g(2);
        let v = trivial_variants(&UniPair::unit_row(r));
        assert_eq!(v[1], pair(r, (0, 0), (-1, 0)));
        assert_eq!(v[2], pair(r, (-1, 0), (0, 0)));
        assert_eq!(v[3], pair(r, (0, 0), (1, 0)));

        let p = pair(r, (3, 1), (3, -1));
        assert!(trivial_variants(&p).contains(&pair(r, (3, -1), (-3, -1))));
        for v in trivial_variants(&p) {
            let mut inner: Vec<_> = trivial_variants(&v).to_vec();
            let mut outer: Vec<_> = trivial_variants(&p).to_vec();
            inner.sort_by(UniPair::sort_key_cmp);
            outer.sort_by(UniPair::sort_key_cmp);
            assert_eq!(inner, outer);
        }
    }

    #[test]
    fn enumeration_small_caps() {
        let r = g(2);
        let list = enumerate_special(r, 13);
        for v in trivial_variants(&pair(r, (3, 1), (3, -1))) {
            assert!(list.contains(&v));
        }
        assert!(enumerate_special(r, 0).is_empty());

        // In Z[i], 1+i and 1-i are associates, so (1+i, 1-i) has the special
        // norm pattern but spans the proper ideal (1+i).
        let gi = g(1);
        let list = enumerate_special(gi, 2);
        let p = pair(gi, (1, 1), (1, -1));
        assert!(has_special_norms(&p));
        assert!(!list.contains(&p));
        assert!(list.contains(&pair(gi, (1, 0), (0, 1))));
    }

    #[test]
    fn pair_text_round_trip() {
        let r = g(2);
        let p = pair(r, (3, 2), (3, -2));
        assert_eq!(p.to_string(), "(3+2*w, 3-2*w)");
        assert_eq!(UniPair::parse(r, "(3+2*w, 3-2*w)").unwrap(), p);
        assert_eq!(UniPair::parse(r, " ( 3 + 2*w ,3-2*w ) ").unwrap(), p);
        assert!(UniPair::parse(r, "3+2*w, 3-2*w").is_err());
        assert!(UniPair::parse(r, "(3)").is_err());
    }
}
