//! decision engine and constructive witness generator for topological
//! conjugacy of affine maps f(x) = Ax + b over the real and complex
//! numbers in dimensions one and two.
//!
//! classification is exact: every verdict is derived from rational (or
//! gaussian-rational) invariants of the linear part and the fixed-point
//! set. where the underlying theory is constructive the library also
//! synthesizes an explicit conjugating homeomorphism as a composition
//! chain of primitive maps and can verify it numerically.

pub mod numeric;
pub mod spectral;
pub mod classify;
pub mod homeo;
pub mod cli;
