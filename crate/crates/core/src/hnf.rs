//! Row-style Hermite normal form of integer matrices, with the unimodular
//! transformation that produces it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of [`hermite_normal_form`]: `transform * input = hnf`.
///
/// `hnf` is in row echelon form with positive pivots, zero rows at the
/// bottom, and entries above each pivot reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfDecomp {
    pub hnf: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
    pub rank: usize,
}

struct State {
    m: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
}

impl State {
    fn swap(&mut self, i: usize, j: usize) {
        self.m.swap(i, j);
        self.u.swap(i, j);
    }

    fn negate(&mut self, i: usize) {
        for x in self.m[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
    }

    /// row[dst] -= k * row[src]
    fn sub_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        let (m_src, u_src) = (self.m[src].clone(), self.u[src].clone());
        for (x, y) in self.m[dst].iter_mut().zip(&m_src) {
            *x -= k * y;
        }
        for (x, y) in self.u[dst].iter_mut().zip(&u_src) {
            *x -= k * y;
        }
    }
}

pub fn hermite_normal_form(input: &[Vec<BigInt>]) -> HnfDecomp {
    let rows = input.len();
    let cols = input.first().map_or(0, Vec::len);
    assert!(input.iter().all(|r| r.len() == cols), "ragged matrix");

    let identity =
        (0..rows).map(|i| (0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut st = State { m: input.to_vec(), u: identity };

    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclid on the column below pivot_row until a single nonzero entry remains.
        loop {
            let smallest = (pivot_row..rows)
                .filter(|&r| !st.m[r][col].is_zero())
                .min_by(|&x, &y| st.m[x][col].abs().cmp(&st.m[y][col].abs()));
            let Some(best) = smallest else { break };
            st.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if st.m[r][col].is_zero() {
                    continue;
                }
                let q = st.m[r][col].div_floor(&st.m[pivot_row][col]);
                st.sub_multiple(r, pivot_row, &q);
                if !st.m[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if st.m[pivot_row][col].is_zero() {
            continue;
        }
        if st.m[pivot_row][col].is_negative() {
            st.negate(pivot_row);
        }
        let pivot = st.m[pivot_row][col].clone();
        for r in 0..pivot_row {
            let q = st.m[r][col].div_floor(&pivot);
            st.sub_multiple(r, pivot_row, &q);
        }
        pivot_row += 1;
    }

    HnfDecomp { hnf: st.m, transform: st.u, rank: pivot_row }
}
