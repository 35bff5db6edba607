use std::f64::consts::PI;

use nalgebra::Vector3;

use super::riemann_gauss;
use crate::hopf::ShapeData;
use crate::linalg::plane_basis;

/// Grid-plus-refinement search over tangent planes, parametrized by their
/// unit normal on the 2-sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneSearch {
    pub polar_steps: usize,
    pub azimuth_steps: usize,
    /// Golden-section bracket width at which refinement stops (radians).
    pub tol: f64,
    pub max_rounds: usize,
}

impl Default for PlaneSearch {
    fn default() -> Self {
        PlaneSearch {
            polar_steps: 64,
            azimuth_steps: 128,
            tol: 1e-8,
            max_rounds: 200,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionalMinimum {
    pub value: f64,
    /// Unit normal of the minimizing plane.
    pub normal: Vector3<f64>,
}

/// Sectional curvature of the plane with unit normal `n`.
pub fn sectional(s: &ShapeData, n: &Vector3<f64>) -> f64 {
    let (x, y) = plane_basis(n);
    riemann_gauss(s, &x, &y, &y).dot(&x)
}

/// Minimum of `K(π) = ⟨R(X,Y)Y, X⟩` over tangent planes.
pub fn min_sectional(s: &ShapeData, search: &PlaneSearch) -> SectionalMinimum {
    let mut best = Vector3::z();
    let mut best_k = f64::INFINITY;
    for i in 0..search.polar_steps {
        let theta = PI * (i as f64 + 0.5) / search.polar_steps as f64;
        let (st, ct) = theta.sin_cos();
        for j in 0..search.azimuth_steps {
            let phi = 2.0 * PI * j as f64 / search.azimuth_steps as f64;
            let n = Vector3::new(st * phi.cos(), st * phi.sin(), ct);
            let k = sectional(s, &n);
            if k < best_k {
                best_k = k;
                best = n;
            }
        }
    }

    let half_width = 2.0 * PI / search.polar_steps as f64;
    for _ in 0..search.max_rounds {
        let start = best_k;
        let (t1, t2) = plane_basis(&best);
        for axis in [t1, t2] {
            let centre = best;
            let along = |angle: f64| centre * angle.cos() + axis * angle.sin();
            let angle = golden_section(|a| sectional(s, &along(a)), -half_width, half_width, search.tol);
            let candidate = along(angle).normalize();
            let k = sectional(s, &candidate);
            if k < best_k {
                best_k = k;
                best = candidate;
            }
        }
        if start - best_k <= 1e-15 * (1.0 + best_k.abs()) {
            break;
        }
    }
    SectionalMinimum {
        value: best_k,
        normal: best,
    }
}

fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::ricci;
    use crate::linalg::sym3_eigenvalues;
    use nalgebra::Matrix3;

    #[test]
    fn constant_curvature_planes_all_tie() {
        let s = ShapeData::new(Matrix3::zeros(), Matrix3::zeros(), Vector3::x());
        let m = min_sectional(&s, &PlaneSearch::default());
        assert!((m.value - 1.0).abs() < 1e-14);
        for n in [Vector3::x(), Vector3::new(1.0, 2.0, 3.0).normalize()] {
            assert!((sectional(&s, &n) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn minimum_matches_dimension_three_identity() {
        // In dimension 3, min K = τ/2 − maxRic.
        let a = Matrix3::new(0.3, 1.2, -0.4, 1.2, -0.7, 0.9, -0.4, 0.9, 0.1);
        let s = ShapeData::synthetic(a, Vector3::new(0.2, 0.5, -0.8));
        let ev = sym3_eigenvalues(&ricci(&s));
        let expected = ev.iter().sum::<f64>() / 2.0 - ev[2];
        let m = min_sectional(&s, &PlaneSearch::default());
        assert!((m.value - expected).abs() < 1e-9, "{} vs {}", m.value, expected);
        assert!((sectional(&s, &m.normal) - m.value).abs() < 1e-15);
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let x = golden_section(|t| (t - 0.123).powi(2), -1.0, 1.0, 1e-10);
        assert!((x - 0.123).abs() < 1e-9);
    }
}
