//! Numerical and exact verification of the curvature identities governing
//! real hypersurfaces of the complex projective plane `CP²(4)` that attain
//! equality in `maxRic ≤ (9/4)‖H‖² + 5`.
//!
//! The crate has two engines:
//!
//! * a floating-point pipeline ([`hopf`], [`curvature`], [`classify`]) that
//!   lifts parametrized hypersurfaces to the unit sphere `S⁵ ⊂ C³`, computes
//!   the shape operator through the Hopf fibration, and evaluates Ricci and
//!   sectional curvature from the Gauss equation;
//! * an exact-arithmetic engine ([`algebra`]) that replays the polynomial
//!   elimination showing the equality case forces a minimal ruled surface.
//!
//! [`suite`] wires both into named checks producing [`report::CheckReport`]s.

pub mod algebra;
pub mod classify;
pub mod curvature;
mod error;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
