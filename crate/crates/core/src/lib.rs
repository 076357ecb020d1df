//! Exact enumerative combinatorics for tilings of a 1 x n board by unit
//! squares and (1,1)-fences.
//!
//! A (1,1)-fence is a pair of unit posts separated by a gap of one cell;
//! the gap must be filled by a square or by a post of another fence.
//! Counting such tilings by board length, by tile count, and by fence
//! count produces interleaved Fibonacci products, Jacobsthal numbers, and
//! two triangles of restricted binomial sums. This crate provides:
//!
//! - [`sequences`]: memoized exact counting sequences (Fibonacci,
//!   Jacobsthal, board tilings, tile-count tilings, and the general
//!   (1,m-1)-fence family),
//! - [`tiling`]: explicit tiling enumeration, both cell-level and
//!   metatile-level, plus fence-count classification,
//! - [`bijections`]: the structure-preserving maps that explain the
//!   counting coincidences (board splicing into square-and-domino tuples,
//!   and the domino-pair correspondence),
//! - [`triangles`]: the fence-count triangles, their closed forms, the
//!   auxiliary binomial-sum arrays, and Riordan-array expansion,
//! - [`identities`]: a registry of the identities relating all of the
//!   above, each checked at many points with independently computed
//!   sides,
//! - [`series`]: exact truncated power series for rational generating
//!   functions,
//! - [`arith`]: total binomial coefficients and integer helpers.
//!
//! All counts are exact ([`num_bigint::BigUint`] / [`num_bigint::BigInt`]);
//! nothing is floating point.

pub mod arith;
pub mod bijections;
mod error;
pub mod identities;
pub mod sequences;
pub mod series;
pub mod tiling;
pub mod triangles;

pub use error::Error;
