//! Exact arithmetic in the imaginary quadratic orders `Z[sqrt(-D)]` and
//! `Z[(1 + sqrt(1 - 4D)) / 2]`.
//!
//! Every element is stored as `a + b*w` over the basis `{1, w}` of its ambient
//! order, with arbitrary-precision coordinates. The Gaussian orders `Z[di]`
//! are the square case `sqrt:d^2`, so `w = di` and `3+2*w` in `sqrt:4` is
//! the complex number `3 + 4i`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which generator the order is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Form {
    /// `w = sqrt(-D)`, minimal polynomial `w^2 + D`.
    Sqrt,
    /// `w = (1 + sqrt(1 - 4D)) / 2`, minimal polynomial `w^2 - w + D`.
    Half,
}

/// An imaginary quadratic order, identified by its form and parameter `D >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingDesc {
    form: Form,
    d: u64,
}

impl RingDesc {
    pub fn new(form: Form, d: u64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter(format!("ring parameter D must be >= 1, got {d}")));
        }
        Ok(RingDesc { form, d })
    }

    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(Form::Sqrt, d)
    }

    pub fn half(d: u64) -> Result<Self> {
        Self::new(Form::Half, d)
    }

    /// The order `Z[di]`, encoded as `sqrt:d^2` with `w = di`.
    pub fn gaussian_multiple(d: u64) -> Result<Self> {
        let square = d.checked_mul(d).ok_or_else(|| Error::InvalidParameter(format!("d = {d} is too large")))?;
        Self::new(Form::Sqrt, square)
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// The parameter `D`.
    pub fn param(&self) -> u64 {
        self.d
    }

    pub(crate) fn param_big(&self) -> BigInt {
        BigInt::from(self.d)
    }

    /// For `sqrt:D` with `D` a perfect square `d^2`, returns `d`.
    pub fn gaussian_scale(&self) -> Option<u64> {
        if self.form != Form::Sqrt {
            return None;
        }
        let r = self.d.sqrt();
        (r * r == self.d).then_some(r)
    }

    /// Human-readable description of the generator `w`.
    pub fn omega_description(&self) -> String {
        match (self.form, self.gaussian_scale()) {
            (Form::Sqrt, Some(1)) => "w = i".to_string(),
            (Form::Sqrt, Some(k)) => format!("w = {k}i"),
            (Form::Sqrt, None) => format!("w = sqrt(-{})", self.d),
            (Form::Half, _) => format!("w = (1+sqrt(-{}))/2", 4 * u128::from(self.d) - 1),
        }
    }

    pub fn zero(&self) -> QuadInt {
        QuadInt::from_int(*self, 0)
    }

    pub fn one(&self) -> QuadInt {
        QuadInt::from_int(*self, 1)
    }

    pub fn omega(&self) -> QuadInt {
        QuadInt::new(*self, 0, 1)
    }

    /// Every element with `norm_sq <= cap`, sorted by `(norm_sq, a, b)`.
    pub fn elements_with_norm_at_most(&self, cap: u64) -> Vec<QuadInt> {
        let cap = i128::from(cap);
        let d = i128::from(self.d);
        let mut out: Vec<(i128, i128, i128)> = Vec::new();
        match self.form {
            Form::Sqrt => {
                let b_max = (cap / d).sqrt();
                for b in -b_max..=b_max {
                    let rest = cap - d * b * b;
                    let a_max = rest.sqrt();
                    for a in -a_max..=a_max {
                        out.push((a * a + d * b * b, a, b));
                    }
                }
            }
            Form::Half => {
                // 4N = (2a + b)^2 + (4D - 1) b^2
                let disc = 4 * d - 1;
                let b_max = (4 * cap / disc).sqrt();
                for b in -b_max..=b_max {
                    let rest = 4 * cap - disc * b * b;
                    let s = rest.sqrt();
                    let lo = num_integer::Integer::div_ceil(&(-s - b), &2);
                    let hi = num_integer::Integer::div_floor(&(s - b), &2);
                    for a in lo..=hi {
                        let n = a * a + a * b + d * b * b;
                        debug_assert!(n <= cap);
                        out.push((n, a, b));
                    }
                }
            }
        }
        out.sort_unstable();
        out.into_iter().map(|(_, a, b)| QuadInt::new(*self, a, b)).collect()
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            Form::Sqrt => write!(f, "sqrt:{}", self.d),
            Form::Half => write!(f, "half:{}", self.d),
        }
    }
}

impl FromStr for RingDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (form, d) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("expected `sqrt:D` or `half:D`, got `{s}`")))?;
        let form = match form.trim() {
            "sqrt" => Form::Sqrt,
            "half" => Form::Half,
            other => return Err(Error::Parse(format!("unknown ring form `{other}`"))),
        };
        let d: u64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad ring parameter `{d}`")))?;
        RingDesc::new(form, d)
    }
}

impl Serialize for RingDesc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RingDesc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `D' = 4D - 1`: the `sqrt`-form parameter whose constructions carry over to `half:D`.
pub fn half_to_sqrt_partner(d: u64) -> Result<u64> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("D must be >= 1, got {d}")));
    }
    d.checked_mul(4).map(|x| x - 1).ok_or_else(|| Error::InvalidParameter(format!("D = {d} is too large")))
}

/// An element `a + b*w` of an imaginary quadratic order.
///
/// The arithmetic operators on references panic when the operands live in
/// different rings; the `try_*` methods report [`Error::RingMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    ring: RingDesc,
    a: BigInt,
    b: BigInt,
}

impl QuadInt {
    pub fn new(ring: RingDesc, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { ring, a: a.into(), b: b.into() }
    }

    pub fn from_int(ring: RingDesc, a: impl Into<BigInt>) -> Self {
        QuadInt { ring, a: a.into(), b: BigInt::zero() }
    }

    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    /// Coefficient of `1`.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of `w`.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the element is a rational integer (`b = 0`).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_ring(&self, other: &QuadInt) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring, right: other.ring })
        }
    }

    pub fn try_add(&self, other: &QuadInt) -> Result<QuadInt> {
        self.same_ring(other)?;
        Ok(QuadInt { ring: self.ring, a: &self.a + &other.a, b: &self.b + &other.b })
    }

    pub fn try_sub(&self, other: &QuadInt) -> Result<QuadInt> {
        self.same_ring(other)?;
        Ok(QuadInt { ring: self.ring, a: &self.a - &other.a, b: &self.b - &other.b })
    }

    pub fn try_mul(&self, other: &QuadInt) -> Result<QuadInt> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &QuadInt) -> QuadInt {
        let d = self.ring.param_big();
        let ac = &self.a * &other.a;
        let be = &self.b * &other.b;
        let a = &ac - &d * &be;
        let mut b = &self.a * &other.b + &self.b * &other.a;
        if self.ring.form == Form::Half {
            b += &be;
        }
        QuadInt { ring: self.ring, a, b }
    }

    /// Multiplication by a rational integer.
    pub fn scale(&self, k: &BigInt) -> QuadInt {
        QuadInt { ring: self.ring, a: &self.a * k, b: &self.b * k }
    }

    /// Complex conjugate, which stays inside the order.
    pub fn conj(&self) -> QuadInt {
        match self.ring.form {
            Form::Sqrt => QuadInt { ring: self.ring, a: self.a.clone(), b: -&self.b },
            Form::Half => QuadInt { ring: self.ring, a: &self.a + &self.b, b: -&self.b },
        }
    }

    /// `|x|^2`, exactly.
    pub fn norm_sq(&self) -> BigInt {
        let d = self.ring.param_big();
        let mut n = &self.a * &self.a + d * &self.b * &self.b;
        if self.ring.form == Form::Half {
            n += &self.a * &self.b;
        }
        n
    }

    /// Units are exactly the elements of norm one.
    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    /// Inverse of a unit; `None` for non-units.
    pub fn unit_inverse(&self) -> Option<QuadInt> {
        self.is_unit().then(|| self.conj())
    }

    /// Ordering key `(norm_sq, a, b)` used wherever a deterministic order on elements is needed.
    pub fn cmp_by_norm(&self, other: &QuadInt) -> Ordering {
        self.norm_sq().cmp(&other.norm_sq()).then_with(|| self.a.cmp(&other.a)).then_with(|| self.b.cmp(&other.b))
    }

    /// Parses the `a+b*w` text form relative to `ring`.
    pub fn parse(ring: RingDesc, s: &str) -> Result<QuadInt> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let term = &compact[start..end];
            let (negative, body) = match term.as_bytes()[0] {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            let bad = || Error::Parse(format!("bad term `{term}` in `{s}`"));
            let (coeff, is_omega) = if let Some(k) = body.strip_suffix("*w") {
                (parse_digits(k).ok_or_else(bad)?, true)
            } else if body == "w" {
                (BigInt::one(), true)
            } else {
                (parse_digits(body).ok_or_else(bad)?, false)
            };
            let coeff = if negative { -coeff } else { coeff };
            if is_omega {
                b += coeff;
            } else {
                a += coeff;
            }
            start = end;
        }
        Ok(QuadInt { ring, a, b })
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        self.try_add(rhs).expect("QuadInt addition across rings")
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        self.try_sub(rhs).expect("QuadInt subtraction across rings")
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        self.try_mul(rhs).expect("QuadInt multiplication across rings")
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { ring: self.ring, a: -&self.a, b: -&self.b }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { ring: self.ring, a: -self.a, b: -self.b }
    }
}
