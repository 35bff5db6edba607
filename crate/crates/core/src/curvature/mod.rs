//! Intrinsic curvature of the hypersurface from its extrinsic data.

mod gauss;
mod intrinsic;
mod sectional;

pub use gauss::{
    curvature_report, deficit, ricci, ricci_closed_form, riemann_gauss, CurvatureReport,
};
pub use intrinsic::{compare_with_gauss, intrinsic_riemann, CoordinateRiemann, IntrinsicComparison};
pub use sectional::{min_sectional, sectional, PlaneSearch, SectionalMinimum};
