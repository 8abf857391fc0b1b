//! Arithmetic of factorization lengths in non-commutative and commutative
//! monoids.
//!
//! The crate is organized in four layers:
//!
//! - [`lengthsets`]: finite sets of factorization lengths and the derived
//!   statistics (distance sets, elasticity, unions, almost arithmetical
//!   progressions).
//! - [`bn`]: closed-form length arithmetic for the one-relator family
//!   `B_n = <a, b | ba = b^n>`, together with the image monoid of its system
//!   of length sets.
//! - [`fp`]: a presentation-driven enumeration engine that recovers
//!   factorization sets by congruence closure, plus pluggable distances and
//!   catenary degrees.  It is deliberately independent of the closed forms in
//!   [`bn`] so that the two can be played against each other.
//! - [`zerosum`]: zero-sum sequences over finite abelian groups, the
//!   commutative counterpart used to separate "elasticity attained" from
//!   "elasticity approached".
//!
//! [`verify`] bundles the cross-checks between the layers into reusable
//! suites; the `factorlen` binary exposes everything on the command line.

pub mod bn;
pub mod fp;
pub mod lengthsets;
pub mod verify;
pub mod zerosum;

pub use lengthsets::{LengthSet, LengthSetError};
