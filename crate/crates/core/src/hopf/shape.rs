use nalgebra::{Matrix3, Vector3};

use super::{build_frame, AmbientVector, MovingFrame, Param, SurfaceChart};
use crate::{Error, Result};

/// Orientation of the unit normal relative to the frame's sign rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormalSign {
    #[default]
    Auto,
    Flipped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeOptions {
    /// Central-difference step for the normal field.
    pub step: f64,
    /// Largest tolerated `max |A - Aᵀ|` before symmetrization.
    pub asymmetry_bound: f64,
    pub normal_sign: NormalSign,
}

impl Default for ShapeOptions {
    fn default() -> Self {
        ShapeOptions {
            step: 1e-5,
            asymmetry_bound: 1e-6,
            normal_sign: NormalSign::Auto,
        }
    }
}

impl ShapeOptions {
    pub fn with_step(step: f64) -> Self {
        ShapeOptions {
            step,
            ..Self::default()
        }
    }
}

/// Extrinsic data at one point, in the coordinates of an orthonormal frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeData {
    /// Shape operator `A`, symmetric.
    pub a: Matrix3<f64>,
    /// Tangential part `P` of the complex structure; column `i` is `P eᵢ`.
    pub p: Matrix3<f64>,
    /// Structure vector `ξ = -JN`.
    pub xi: Vector3<f64>,
    /// `⟨Aξ, ξ⟩`.
    pub alpha: f64,
    /// `β = ‖Aξ - αξ‖`; zero exactly at Hopf points.
    pub hopf_defect: f64,
    /// `tr A / 3`.
    pub mean_curvature: f64,
    /// `max |A - Aᵀ|` before symmetrization (zero for synthetic data).
    pub asymmetry: f64,
}

impl ShapeData {
    pub fn new(a: Matrix3<f64>, p: Matrix3<f64>, xi: Vector3<f64>) -> Self {
        Self::with_asymmetry(a, p, xi, 0.0)
    }

    fn with_asymmetry(a: Matrix3<f64>, p: Matrix3<f64>, xi: Vector3<f64>, asymmetry: f64) -> Self {
        let a_xi = a * xi;
        let alpha = xi.dot(&a_xi);
        let hopf_defect = (a_xi - xi * alpha).norm();
        ShapeData {
            a,
            p,
            xi,
            alpha,
            hopf_defect,
            mean_curvature: a.trace() / 3.0,
            asymmetry,
        }
    }

    /// Data with `P X = ξ × X`, the tangential complex structure of any
    /// orthonormal frame in which the structure vector is `ξ` (up to the
    /// orientation of the holomorphic plane).
    pub fn synthetic(a: Matrix3<f64>, xi: Vector3<f64>) -> Self {
        let xi = xi.normalize();
        Self::new(a, xi.cross_matrix(), xi)
    }

    pub fn trace(&self) -> f64 {
        self.a.trace()
    }

    /// `‖H‖²` with `H = (tr A / 3) N`.
    pub fn mean_curvature_sq(&self) -> f64 {
        self.mean_curvature * self.mean_curvature
    }

    /// The same point seen with the opposite unit normal: `A ↦ -A`, `ξ ↦ -ξ`.
    pub fn flipped(&self) -> Self {
        Self::with_asymmetry(-self.a, self.p, -self.xi, self.asymmetry)
    }

    /// Largest violation of `Pᵀ = -P`, `Pξ = 0`, `P² = -I + ξξᵀ`, `‖ξ‖ = 1`.
    pub fn structure_defect(&self) -> f64 {
        let skew = (self.p + self.p.transpose()).amax();
        let kills_xi = (self.p * self.xi).amax();
        let square = (self.p * self.p + Matrix3::identity() - self.xi * self.xi.transpose()).amax();
        let unit = (self.xi.norm() - 1.0).abs();
        skew.max(kills_xi).max(square).max(unit)
    }
}

/// Shape operator, tangential complex structure and structure vector at `q`.
///
/// The normal is recomputed at the six points `q ± h·eₐ`, aligned in sign
/// with the center normal, and differentiated by central differences. The
/// derivative along a horizontalized partial `Hₐ = ∂ₐz - cₐ·ip` uses
/// `dN(ip) = iN`, which holds because the lifted normal field is invariant
/// under the fiber action.
pub fn shape_operator(chart: &dyn SurfaceChart, q: Param, opts: &ShapeOptions) -> Result<ShapeData> {
    let mut frame = build_frame(chart, q)?;
    if opts.normal_sign == NormalSign::Flipped {
        frame.flip_normal();
    }
    let h = opts.step;

    let mut d_normal = [AmbientVector::ZERO; 3];
    for (a, dn) in d_normal.iter_mut().enumerate() {
        let mut plus = q;
        let mut minus = q;
        plus[a] += h;
        minus[a] -= h;
        let np = aligned_normal(chart, plus, &frame.normal)?;
        let nm = aligned_normal(chart, minus, &frame.normal)?;
        *dn = (np - nm).scale(0.5 / h);
    }

    let xi = Vector3::from(frame.project(&frame.normal.mul_i().scale(-1.0)));
    let p = complex_structure(&frame);

    let partials = chart.partials(q);
    let fiber_speed: [f64; 3] = partials.map(|d| d.dot(&frame.vertical));
    // g[(j, a)] = ⟨D_{H_a} N, E_j⟩
    let mut g = Matrix3::<f64>::zeros();
    for a in 0..3 {
        let proj = frame.project(&d_normal[a]);
        for j in 0..3 {
            g[(j, a)] = proj[j] + fiber_speed[a] * xi[j];
        }
    }
    let raw = -(g * frame.coeffs.transpose());
    let asymmetry = (raw - raw.transpose()).amax();
    if asymmetry > opts.asymmetry_bound {
        return Err(Error::AsymmetryExceeded {
            asymmetry,
            bound: opts.asymmetry_bound,
        });
    }
    let a = (raw + raw.transpose()) * 0.5;
    Ok(ShapeData::with_asymmetry(a, p, xi, asymmetry))
}

fn aligned_normal(chart: &dyn SurfaceChart, q: Param, reference: &AmbientVector) -> Result<AmbientVector> {
    let n = build_frame(chart, q)?.normal;
    Ok(if n.dot(reference) < 0.0 { -n } else { n })
}

fn complex_structure(frame: &MovingFrame) -> Matrix3<f64> {
    let mut p = Matrix3::zeros();
    for i in 0..3 {
        let col = frame.project(&frame.e[i].mul_i());
        for j in 0..3 {
            p[(j, i)] = col[j];
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{PerturbedRuledChart, RuledChart, SphereChart};
    use crate::linalg::sym3_eigenvalues;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn sorted_abs(mut v: [f64; 3]) -> [f64; 3] {
        for x in v.iter_mut() {
            *x = x.abs();
        }
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn ruled_point_is_minimal_with_vanishing_alpha() {
        let s = shape_operator(&RuledChart, [0.6, 1.0, 2.0], &ShapeOptions::default()).unwrap();
        assert!(s.trace().abs() < 1e-8, "tr A = {}", s.trace());
        assert!(s.alpha.abs() < 1e-8, "alpha = {}", s.alpha);
        assert!(s.hopf_defect > 0.1);
        assert!(s.structure_defect() < 1e-10);
    }

    #[test]
    fn geodesic_sphere_principal_curvatures() {
        for (r, expected) in [
            (FRAC_PI_4, [0.0, 1.0, 1.0]),
            (PI / 6.0, [2.0 / 3f64.sqrt(), 3f64.sqrt(), 3f64.sqrt()]),
        ] {
            let c = SphereChart::new(r).unwrap();
            // closed form cross-check of the oracle
            let model = c.principal_curvatures();
            assert!(sorted_abs(model)
                .iter()
                .zip(expected.iter())
                .all(|(a, b)| (a - b).abs() < 1e-14));
            for q in [[0.3, 0.7, 0.4], [2.0, 1.1, 5.0]] {
                let s = shape_operator(&c, q, &ShapeOptions::default()).unwrap();
                let ev = sorted_abs(sym3_eigenvalues(&s.a));
                for k in 0..3 {
                    assert!((ev[k] - expected[k]).abs() < 1e-7, "r={r} {:?}", ev);
                }
                assert!(s.hopf_defect < 1e-8);
                assert!(s.structure_defect() < 1e-10);
            }
        }
    }

    #[test]
    fn normal_flip_negates_extrinsic_data() {
        let q = [0.8, 2.0, 1.0];
        let chart = PerturbedRuledChart::new(0.05, 11);
        let s = shape_operator(&chart, q, &ShapeOptions::default()).unwrap();
        let f = shape_operator(
            &chart,
            q,
            &ShapeOptions {
                normal_sign: NormalSign::Flipped,
                ..ShapeOptions::default()
            },
        )
        .unwrap();
        assert!((s.a + f.a).amax() < 1e-12);
        assert!((s.xi + f.xi).amax() < 1e-12);
        assert!((s.p - f.p).amax() < 1e-15);
        assert!((s.hopf_defect - f.hopf_defect).abs() < 1e-12);
        assert!((s.mean_curvature_sq() - f.mean_curvature_sq()).abs() < 1e-12);
        let flipped = s.flipped();
        assert!((flipped.a - f.a).amax() < 1e-12);
    }

    #[test]
    fn richardson_consistency() {
        // coarse steps so truncation dominates roundoff
        let h = 2e-2;
        let chart = PerturbedRuledChart::new(0.05, 5);
        for q in [[0.6, 1.0, 2.0], [1.0, 4.0, 0.5]] {
            let at = |step: f64| {
                let opts = ShapeOptions {
                    asymmetry_bound: 1.0,
                    ..ShapeOptions::with_step(step)
                };
                shape_operator(&chart, q, &opts).unwrap().a
            };
            let (a1, a2, a4) = (at(h), at(h / 2.0), at(h / 4.0));
            let estimate = (a1 - a2).amax() / 3.0;
            let extrapolated = (a4 * 4.0 - a2) / 3.0;
            assert!((a2 - extrapolated).amax() <= 4.0 * estimate, "q={q:?}");
        }
    }

    #[test]
    fn synthetic_structure() {
        let xi = Vector3::new(0.3, -0.4, 1.2);
        let s = ShapeData::synthetic(Matrix3::identity(), xi);
        assert!(s.structure_defect() < 1e-15);
        let e1 = ShapeData::synthetic(Matrix3::zeros(), Vector3::x());
        assert_eq!(e1.p * Vector3::y(), Vector3::z());
    }

    #[test]
    fn oversized_step_trips_asymmetry_bound() {
        let opts = ShapeOptions {
            step: 0.2,
            asymmetry_bound: 1e-9,
            normal_sign: NormalSign::Auto,
        };
        let err = shape_operator(&PerturbedRuledChart::new(0.3, 2), [0.7, 1.0, 2.0], &opts).unwrap_err();
        assert!(matches!(err, Error::AsymmetryExceeded { .. }));
    }
}
