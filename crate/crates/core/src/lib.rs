//! Exact verification kernel for degree-7 dihedral covers of the line and
//! the cubic order Z[eta] with eta^3 + eta^2 - 2 eta - 1 = 0.
//!
//! The permutation side enumerates and classifies monodromy tuples of
//! dihedral covers, certifies conjugacy and normalizers inside symmetric
//! groups, and tracks genus through Riemann-Hurwitz and fiber products.
//! The arithmetic side is generic over the integer scalar backing the
//! cubic order; the aliases below fix the concrete instantiations used by
//! the command-line tool.

pub mod cubic;
pub mod dihedral;
pub mod error;
pub mod group;
pub mod hurwitz;
pub mod matrix;
pub mod perm;
pub mod sturm;

pub use error::{Error, Result};

/// Cubic-order element with arbitrary-precision coefficients; the default.
pub type CubicInt = cubic::Cubic<num_bigint::BigInt>;
/// Fixed-width variant for small bounded searches.
pub type CubicInt64 = cubic::Cubic<i64>;
pub type CubicInt128 = cubic::Cubic<i128>;

/// 2x2 matrix over the cubic order, arbitrary precision.
pub type OMatrix2 = matrix::Mat2<num_bigint::BigInt>;
pub type OMatrix2I64 = matrix::Mat2<i64>;
