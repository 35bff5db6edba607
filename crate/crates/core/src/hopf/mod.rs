//! Hypersurfaces of `CP²` seen through the Hopf fibration `S⁵ → CP²`.
//!
//! Points and tangent vectors live in `C³`; the fiber through `p` is the
//! circle `e^{iψ}p` with velocity `i·p`. Charts parametrize a section of
//! the lifted hypersurface (fiber coordinate fixed), and every quantity is
//! built from vectors orthogonal to both `p` and `i·p`.

mod ambient;
mod chart;
mod frame;
mod shape;

pub use ambient::AmbientVector;
pub use chart::{
    ruled_chart, sphere_chart, Param, ParamBox, PerturbedRuledChart, RuledChart, SphereChart,
    SurfaceChart,
};
pub use frame::{build_frame, horizontalize, MovingFrame, RANK_THRESHOLD};
pub use shape::{shape_operator, NormalSign, ShapeData, ShapeOptions};
