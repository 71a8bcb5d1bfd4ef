//! Fundamental solutions of `x^2 - D y^2 = 1`.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Minimal positive solution of the Pell equation for a given `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: BigInt,
    pub y: BigInt,
}

/// Fundamental solution via the periodic continued fraction of `sqrt(D)`.
///
/// Returns `Ok(None)` exactly when `D` is a perfect square.
pub fn pell_fundamental(d: u64) -> Result<Option<PellSolution>> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("D must be >= 1, got {d}")));
    }
    let a0 = d.sqrt();
    if a0 * a0 == d {
        return Ok(None);
    }
    let big_d = BigInt::from(d);
    let a0 = BigInt::from(a0);

    // sqrt(D) = [a0; a1, a2, ...] with (m + sqrt(D)) / q complete quotients.
    let (mut m, mut q, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut p_prev, mut p) = (BigInt::one(), a0.clone());
    let (mut q_prev, mut qq) = (BigInt::zero(), BigInt::one());
    loop {
        if &p * &p - &big_d * &qq * &qq == BigInt::one() {
            return Ok(Some(PellSolution { x: p, y: qq }));
        }
        m = &q * &a - &m;
        q = (&big_d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &qq + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut qq, q_next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest y >= 1 with 1 + D y^2 a perfect square.
    fn brute_force(d: u64) -> Option<(u64, u64)> {
        if d.sqrt() * d.sqrt() == d {
            return None;
        }
        (1u64..).find_map(|y| {
            let rhs = 1 + d * y * y;
            let x = rhs.sqrt();
            (x * x == rhs).then_some((x, y))
        })
    }

    #[test]
    fn small_examples() {
        let s = pell_fundamental(2).unwrap().unwrap();
        assert_eq!((s.x, s.y), (BigInt::from(3), BigInt::from(2)));
        let s = pell_fundamental(3).unwrap().unwrap();
        assert_eq!((s.x, s.y), (BigInt::from(2), BigInt::from(1)));
        assert_eq!(pell_fundamental(4).unwrap(), None);
        assert!(pell_fundamental(0).is_err());
    }

    #[test]
    fn agrees_with_brute_force_up_to_50() {
        for d in 1..=50u64 {
            let fast = pell_fundamental(d).unwrap();
            let slow = brute_force(d);
            match (fast, slow) {
                (None, None) => {}
                (Some(s), Some((x, y))) => {
                    assert_eq!((s.x, s.y), (BigInt::from(x), BigInt::from(y)), "D = {d}");
                }
                (f, s) => panic!("D = {d}: {f:?} vs {s:?}"),
            }
        }
    }

    #[test]
    fn large_fundamental_solution() {
        // D = 61: x has ten digits, well past naive search range.
        let s = pell_fundamental(61).unwrap().unwrap();
        assert_eq!(s.x, BigInt::from(1_766_319_049u64));
        assert_eq!(s.y, BigInt::from(226_153_980u64));
        let s = pell_fundamental(991).unwrap().unwrap();
        assert_eq!(&s.x * &s.x - BigInt::from(991) * &s.y * &s.y, BigInt::one());
        assert!(s.x.to_string().len() > 25);
    }
}
