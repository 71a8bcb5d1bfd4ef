//! Exact computations around the elementary subgroup `E_2(A)` of `SL_2(A)`
//! for imaginary quadratic orders `A`.
//!
//! The crate provides exact arithmetic in `Z[sqrt(-D)]` and
//! `Z[(1 + sqrt(1 - 4D)) / 2]`, 2x2 matrices and elementary words over them,
//! unimodular pairs and their completions, bounded searches over the right
//! action of `E_2(A)` on pairs, and certificates that re-check explicit
//! matrix identities over `Z[di]`.

pub mod error;
pub mod explorer;
pub mod hnf;
pub mod linalg;
pub mod pell;
pub mod ring;
pub mod unimodular;
pub mod verify;

pub use error::{Error, Result};
pub use explorer::{
    matrix_in_e2, orbit_bfs, pairs_equivalent, reduce_pair, Equivalence, Membership, OrbitReport, Outcome,
    ReductionResult, SearchParams,
};
pub use linalg::{act_row, ElemMove, ElemWord, Mat2, Side};
pub use pell::{pell_fundamental, PellSolution};
pub use ring::{half_to_sqrt_partner, Form, QuadInt, RingDesc};
pub use unimodular::{
    complete_pair, corrigendum_pair, enumerate_special, is_special, is_trivial_variant, is_unimodular,
    trivial_variants, Completion, UniPair,
};
pub use verify::{check_lemma1, lemma2_scan, recheck, verify_corrigendum, Certificate, Check, Status};
