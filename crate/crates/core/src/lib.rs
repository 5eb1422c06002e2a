//! Exact-arithmetic engine for the mixed Witt ring and mixed Grothendieck-Witt
//! ring of an algebra with involution of index at most 2 over the rationals.
//!
//! The crate is organised around the Klein-group grading of the mixed ring:
//! the even components are classes of symmetric and anti-symmetric bilinear
//! forms over the rationals, the odd components are diagonal epsilon-hermitian
//! forms over a quaternion algebra with an involution of the first kind.
//! Every product is computed exactly, either through a closed formula or
//! through the Gram matrix of the relevant twisted trace form, and the two
//! routes are cross-checked in the test suites.
//!
//! Module map:
//! - [`arith`]: big-integer factorization, square classes, Legendre and
//!   Hilbert symbols, places of the rationals.
//! - [`qform`]: diagonal quadratic forms, local-global invariants, Witt
//!   equivalence, Pfister forms and the quadratic trace transfer.
//! - [`quaternion`]: quaternion algebras, involutions of the first kind,
//!   the Goldman element and the twisted sandwich action.
//! - [`herm`]: diagonal hermitian forms, the graded mixed ring elements,
//!   products, equality decisions, dimension maps and scaling transfer.
//! - [`lambda`]: the pre-lambda-ring structure, determinants, duality and
//!   the degree-two identity checks.
//! - [`cohomology`]: Brauer classes as ramification sets, low-degree
//!   e-invariants, mixed symbols and cup products.
//! - [`signatures`]: ordering type and the two signature ring morphisms.
//! - [`crossed`]: quaternions presented as crossed products with involution.
//! - [`selftest`]: seeded random generators and the named verification
//!   suites used by the command-line `selftest` mode.

pub mod arith;
pub mod cohomology;
pub mod crossed;
pub mod herm;
pub mod lambda;
pub mod qform;
pub mod quaternion;
pub mod selftest;
pub mod signatures;

mod error;
mod linalg;

pub use arith::{factor, hilbert_symbol, legendre, square_class, Place, Rational, SquareClass};
pub use error::{Error, Result};
// herm re-exports restored when the module lands
pub use qform::{GWClass, QuadraticForm, WittInvariants};
pub use quaternion::{InvolutionSpec, Quat, QuaternionAlgebra, TensorElement};

/// Convenience constructor for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Convenience constructor for an exact rational from an integer.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
