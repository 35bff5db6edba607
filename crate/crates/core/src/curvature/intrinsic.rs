//! Curvature of the induced metric in chart coordinates, computed with no
//! reference to the shape operator. Serves as the independent oracle for
//! the Gauss-equation pipeline.

use nalgebra::{Matrix3, Vector3};

use super::riemann_gauss;
use crate::hopf::{build_frame, horizontalize, shape_operator, Param, ShapeOptions, SurfaceChart};
use crate::linalg::plane_basis;
use crate::Result;

type Tensor3 = [[[f64; 3]; 3]; 3];
type Tensor4 = [[[[f64; 3]; 3]; 3]; 3];

/// Metric, Christoffel symbols and Riemann tensor in chart coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateRiemann {
    pub metric: Matrix3<f64>,
    /// `christoffel[k][a][b] = Γᵏ_ab`.
    pub christoffel: Tensor3,
    /// `riemann[a][b][c][d] = g(R(∂ₐ, ∂_b)∂_c, ∂_d)`.
    pub riemann: Tensor4,
}

impl CoordinateRiemann {
    /// `R(v, w, w, v) / |v ∧ w|²` for coordinate vectors `v`, `w`.
    pub fn sectional(&self, v: &Vector3<f64>, w: &Vector3<f64>) -> f64 {
        let mut num = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        num += v[a] * w[b] * w[c] * v[d] * self.riemann[a][b][c][d];
                    }
                }
            }
        }
        let g = &self.metric;
        let area = v.dot(&(g * v)) * w.dot(&(g * w)) - v.dot(&(g * w)).powi(2);
        num / area
    }
}

fn metric(chart: &dyn SurfaceChart, q: Param) -> Matrix3<f64> {
    let p = chart.evaluate(q);
    let h = chart.partials(q).map(|d| horizontalize(&d, &p));
    Matrix3::from_fn(|a, b| h[a].dot(&h[b]))
}

fn shifted(q: Param, axis: usize, by: f64) -> Param {
    let mut out = q;
    out[axis] += by;
    out
}

fn christoffel(chart: &dyn SurfaceChart, q: Param, h: f64) -> (Matrix3<f64>, Tensor3) {
    let g = metric(chart, q);
    let dg: [Matrix3<f64>; 3] = std::array::from_fn(|c| {
        (metric(chart, shifted(q, c, h)) - metric(chart, shifted(q, c, -h))) / (2.0 * h)
    });
    let inv = g.try_inverse().unwrap_or_else(Matrix3::zeros);
    let mut gamma = [[[0.0; 3]; 3]; 3];
    for (k, gk) in gamma.iter_mut().enumerate() {
        for a in 0..3 {
            for b in 0..3 {
                gk[a][b] = 0.5
                    * (0..3)
                        .map(|l| inv[(k, l)] * (dg[a][(b, l)] + dg[b][(a, l)] - dg[l][(a, b)]))
                        .sum::<f64>();
            }
        }
    }
    (g, gamma)
}

/// Riemann tensor of the induced metric at `q`.
///
/// Metric values come from the analytic partials; only derivatives of the
/// metric and of the Christoffel symbols are finite-differenced, so the
/// stencil reaches `2h` from `q`.
pub fn intrinsic_riemann(chart: &dyn SurfaceChart, q: Param, h: f64) -> Result<CoordinateRiemann> {
    build_frame(chart, q)?;
    for axis in 0..3 {
        for by in [-2.0 * h, 2.0 * h] {
            build_frame(chart, shifted(q, axis, by))?;
        }
    }
    let (g, gamma) = christoffel(chart, q, h);
    let d_gamma: [Tensor3; 3] = std::array::from_fn(|c| {
        let plus = christoffel(chart, shifted(q, c, h), h).1;
        let minus = christoffel(chart, shifted(q, c, -h), h).1;
        let mut out = [[[0.0; 3]; 3]; 3];
        for k in 0..3 {
            for a in 0..3 {
                for b in 0..3 {
                    out[k][a][b] = (plus[k][a][b] - minus[k][a][b]) / (2.0 * h);
                }
            }
        }
        out
    });

    // R(∂a, ∂b)∂c = Rᵈ_cab ∂d
    let mut up = [[[[0.0; 3]; 3]; 3]; 3];
    for d in 0..3 {
        for c in 0..3 {
            for a in 0..3 {
                for b in 0..3 {
                    let mut v = d_gamma[a][d][b][c] - d_gamma[b][d][a][c];
                    for e in 0..3 {
                        v += gamma[d][a][e] * gamma[e][b][c] - gamma[d][b][e] * gamma[e][a][c];
                    }
                    up[d][c][a][b] = v;
                }
            }
        }
    }
    let mut riemann = [[[[0.0; 3]; 3]; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    riemann[a][b][c][d] = (0..3).map(|e| up[e][c][a][b] * g[(e, d)]).sum();
                }
            }
        }
    }
    Ok(CoordinateRiemann {
        metric: g,
        christoffel: gamma,
        riemann,
    })
}

/// Intrinsic curvature set against the Gauss equation at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct IntrinsicComparison {
    pub intrinsic: CoordinateRiemann,
    /// `g(R(∂ₐ, ∂_b)∂_c, ∂_d)` from the Gauss equation.
    pub gauss: Tensor4,
    pub max_abs_diff: f64,
    /// Sectional curvature of the plane orthogonal to `ξ`, from the
    /// intrinsic tensor.
    pub holomorphic_sectional: f64,
}

pub fn compare_with_gauss(
    chart: &dyn SurfaceChart,
    q: Param,
    intrinsic_step: f64,
    shape: &ShapeOptions,
) -> Result<IntrinsicComparison> {
    let intrinsic = intrinsic_riemann(chart, q, intrinsic_step)?;
    let frame = build_frame(chart, q)?;
    let s = shape_operator(chart, q, shape)?;
    let coords: [Vector3<f64>; 3] = frame.horizontal.map(|h| Vector3::from(frame.project(&h)));
    let mut gauss = [[[[0.0; 3]; 3]; 3]; 3];
    let mut max_abs_diff: f64 = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let r = riemann_gauss(&s, &coords[a], &coords[b], &coords[c]);
                for d in 0..3 {
                    gauss[a][b][c][d] = r.dot(&coords[d]);
                    max_abs_diff = max_abs_diff.max((gauss[a][b][c][d] - intrinsic.riemann[a][b][c][d]).abs());
                }
            }
        }
    }
    let (u, w) = plane_basis(&s.xi);
    let to_coords = |x: &Vector3<f64>| frame.coeffs.transpose() * x;
    let holomorphic_sectional = intrinsic.sectional(&to_coords(&u), &to_coords(&w));
    Ok(IntrinsicComparison {
        intrinsic,
        gauss,
        max_abs_diff,
        holomorphic_sectional,
    })
}
