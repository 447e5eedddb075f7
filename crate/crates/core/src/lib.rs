//! Exact computations attached to a list `X` of nonzero integer vectors:
//! the matroid and hyperplane-arrangement combinatorics of `X`, cocircuit
//! ideals and the Hilbert functions of their quotients, the
//! Dahmen–Micchelli space `D(X)`, multivariate truncated powers `T_X`, and
//! the dimension bookkeeping of the spline spaces `G(X)_i`.
//!
//! Everything is computed over the rationals with arbitrary precision.

pub mod algebra;
pub mod arrangement;
pub mod dmspace;
pub mod error;
pub mod gspaces;
pub mod ideals;
pub mod splines;
pub mod verify;

pub use algebra::{GradedDims, MultiPoly, Rational, UniPoly};
pub use arrangement::{Cocircuit, RationalSubspace, RegularFace, TuttePoly, VectorList};
pub use error::{Error, Result};
