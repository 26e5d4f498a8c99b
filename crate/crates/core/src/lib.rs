//! Construction, characterisation and search of bivariate bicycle (BB)
//! quantum error-correction codes through the ring structure of
//! `F2[x,y]/<x^l-1, y^m-1>`.
//!
//! The crate is organised around the pipeline a code goes through:
//!
//! - [`poly`]: univariate GF(2) polynomial arithmetic and the elementary
//!   number theory (polynomial order, totient, factor counts) the
//!   factorisation theory needs.
//! - [`factor`]: factorisation of `z^n - 1`, cyclotomic cosets and
//!   polynomials, trinomial-divisibility tests, Mersenne/outlier primes.
//! - [`ring`]: the bivariate quotient ring, monomial equivalence and
//!   canonical forms, lexicographic Buchberger, and the coprime
//!   univariate isomorphism.
//! - [`dimension`]: the code dimension `k` by every applicable strategy
//!   (coprime gcd, one-sided CRT, Groebner, matrix rank) with a
//!   cross-checking harness.
//! - [`linalg`]: bit-packed GF(2) matrices, parity checks `H_X = [A|B]`,
//!   `H_Z = [B^T|A^T]`, ranks, kernels, logical operators and alist
//!   export.
//! - [`distance`]: exact and randomised minimum-distance computation,
//!   semi-trivial shortcuts, and the generalised Bravyi-Terhal bound.
//! - [`search`]: existence and connectivity predicates, the candidate
//!   enumeration recipe, and manifest verification.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the
//! command line live in the companion `bbqc-cli` crate.

#![no_std]

extern crate alloc;

pub mod bits;
pub mod distance;
pub mod dimension;
pub mod factor;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod search;

pub use bits::BitVec;
pub use poly::UniPoly;
