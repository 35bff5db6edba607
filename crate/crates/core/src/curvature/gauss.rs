use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::{min_sectional, PlaneSearch};
use crate::hopf::ShapeData;
use crate::linalg::sym3_eigenvalues;

/// `R(X, Y)Z` from the Gauss equation of a hypersurface in `CP²(4)`:
///
/// `⟨Y,Z⟩X − ⟨X,Z⟩Y + ⟨PY,Z⟩PX − ⟨PX,Z⟩PY − 2⟨PX,Y⟩PZ + ⟨AY,Z⟩AX − ⟨AX,Z⟩AY`.
pub fn riemann_gauss(
    s: &ShapeData,
    x: &Vector3<f64>,
    y: &Vector3<f64>,
    z: &Vector3<f64>,
) -> Vector3<f64> {
    let (px, py, pz) = (s.p * x, s.p * y, s.p * z);
    let (ax, ay) = (s.a * x, s.a * y);
    x * y.dot(z) - y * x.dot(z) + px * py.dot(z) - py * px.dot(z) - pz * (2.0 * px.dot(y))
        + ax * ay.dot(z)
        - ay * ax.dot(z)
}

/// Ricci tensor `S(X, Y) = Σᵢ ⟨R(eᵢ, X)Y, eᵢ⟩` by direct contraction.
pub fn ricci(s: &ShapeData) -> Matrix3<f64> {
    let basis = [Vector3::x(), Vector3::y(), Vector3::z()];
    let mut out = Matrix3::zeros();
    for j in 0..3 {
        for k in j..3 {
            let v: f64 = basis
                .iter()
                .map(|e| riemann_gauss(s, e, &basis[j], &basis[k]).dot(e))
                .sum();
            out[(j, k)] = v;
            out[(k, j)] = v;
        }
    }
    debug_assert!((out - ricci_closed_form(s)).amax() < 1e-9 * (1.0 + out.amax()));
    out
}

/// Contracted form `S = 2I + 3PᵀP + (tr A)A − A²`, i.e.
/// `S(X,X) = 2 + 3‖PX‖² + tr A·⟨AX,X⟩ − ‖AX‖²` for unit `X`.
pub fn ricci_closed_form(s: &ShapeData) -> Matrix3<f64> {
    Matrix3::identity() * 2.0 + s.p.transpose() * s.p * 3.0 + s.a * s.trace() - s.a * s.a
}

/// `(9/4)‖H‖² + 5 − maxRic`; nonnegative on every hypersurface of `CP²(4)`.
pub fn deficit(s: &ShapeData) -> f64 {
    let max_ricci = sym3_eigenvalues(&ricci(s))[2];
    2.25 * s.mean_curvature_sq() + 5.0 - max_ricci
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CurvatureReport {
    /// Ascending.
    pub ricci_eigenvalues: [f64; 3],
    pub max_ricci: f64,
    /// Trace of the Ricci operator.
    pub scalar_curvature: f64,
    pub mean_curv_sq: f64,
    pub deficit: f64,
    pub min_sectional: f64,
    /// `τ/2 − min K`.
    pub delta2: f64,
}

pub fn curvature_report(s: &ShapeData, search: &PlaneSearch) -> CurvatureReport {
    let ricci_eigenvalues = sym3_eigenvalues(&ricci(s));
    let max_ricci = ricci_eigenvalues[2];
    let scalar_curvature = ricci_eigenvalues.iter().sum::<f64>();
    let mean_curv_sq = s.mean_curvature_sq();
    let min_k = min_sectional(s, search).value;
    CurvatureReport {
        ricci_eigenvalues,
        max_ricci,
        scalar_curvature,
        mean_curv_sq,
        deficit: 2.25 * mean_curv_sq + 5.0 - max_ricci,
        min_sectional: min_k,
        delta2: scalar_curvature / 2.0 - min_k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn constant_curvature() -> ShapeData {
        ShapeData::new(Matrix3::zeros(), Matrix3::zeros(), Vector3::x())
    }

    fn sphere_data(r: f64) -> ShapeData {
        let cot = |t: f64| t.cos() / t.sin();
        ShapeData::synthetic(
            Matrix3::from_diagonal(&Vector3::new(2.0 * cot(2.0 * r), cot(r), cot(r))),
            Vector3::x(),
        )
    }

    fn vec3() -> impl Strategy<Value = Vector3<f64>> {
        proptest::array::uniform3(-2.0f64..2.0).prop_map(Vector3::from)
    }

    fn shape_data() -> impl Strategy<Value = ShapeData> {
        (proptest::array::uniform6(-3.0f64..3.0), vec3())
            .prop_filter("xi nonzero", |(_, xi)| xi.norm() > 1e-2)
            .prop_map(|(e, xi)| {
                let a = Matrix3::new(e[0], e[1], e[2], e[1], e[3], e[4], e[2], e[4], e[5]);
                ShapeData::synthetic(a, xi)
            })
    }

    #[test]
    fn vanishing_second_fundamental_form_is_constant_curvature_one() {
        let s = constant_curvature();
        let (x, y, z) = (Vector3::new(1.0, 2.0, 0.5), Vector3::new(-1.0, 0.3, 2.0), Vector3::new(0.2, 0.0, -1.5));
        let expected = x * y.dot(&z) - y * x.dot(&z);
        assert!((riemann_gauss(&s, &x, &y, &z) - expected).amax() < 1e-15);
        assert!(riemann_gauss(&s, &x, &x, &z).amax() == 0.0);
        assert!((ricci(&s) - Matrix3::identity() * 2.0).amax() < 1e-15);
    }

    #[test]
    fn holomorphic_plane_of_the_pi_over_4_sphere() {
        let s = sphere_data(std::f64::consts::FRAC_PI_4);
        let (e2, e3) = (Vector3::y(), Vector3::z());
        // 1 (constant part) + 3 (complex structure) + 1 (A-terms)
        assert!((riemann_gauss(&s, &e2, &e3, &e3).dot(&e2) - 5.0).abs() < 1e-14);
        let ev = sym3_eigenvalues(&ricci(&s));
        assert!((ev[0] - 2.0).abs() < 1e-14 && (ev[1] - 6.0).abs() < 1e-14 && (ev[2] - 6.0).abs() < 1e-14);
        assert!(deficit(&s).abs() < 1e-14);
    }

    #[test]
    fn pi_over_6_sphere() {
        let s = sphere_data(std::f64::consts::PI / 6.0);
        // oracle: maximize S(X,X) over X = cos φ·ξ + sin φ·e₂
        let ric = ricci_closed_form(&s);
        let oracle = (0..=100_000)
            .map(|k| {
                let phi = std::f64::consts::PI * k as f64 / 100_000.0;
                let x = Vector3::new(phi.cos(), phi.sin(), 0.0);
                x.dot(&(ric * x))
            })
            .fold(f64::MIN, f64::max);
        assert!((oracle - 10.0).abs() < 1e-12);
        let ev = sym3_eigenvalues(&ricci(&s));
        assert!((ev[2] - 10.0).abs() < 1e-13);
        assert!((deficit(&s) - 1.0 / 3.0).abs() < 1e-13);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn closed_form_ricci_matches_contraction(s in shape_data()) {
            prop_assert!((ricci(&s) - ricci_closed_form(&s)).amax() < 1e-12 * (1.0 + s.a.amax().powi(2)));
        }
    }

    proptest! {
        #[test]
        fn curvature_symmetries(s in shape_data(), x in vec3(), y in vec3(), z in vec3(), w in vec3()) {
            let tol = 1e-12 * (1.0 + s.a.amax().powi(2)) * (1.0 + x.norm() * y.norm() * z.norm() * (1.0 + w.norm()));
            prop_assert!((riemann_gauss(&s, &x, &y, &z) + riemann_gauss(&s, &y, &x, &z)).amax() < tol);
            let lhs = riemann_gauss(&s, &x, &y, &z).dot(&w);
            let rhs = riemann_gauss(&s, &x, &y, &w).dot(&z);
            prop_assert!((lhs + rhs).abs() < tol);
        }

        #[test]
        fn normal_flip_invariance(s in shape_data()) {
            let f = s.flipped();
            let search = PlaneSearch::default();
            let (a, b) = (curvature_report(&s, &search), curvature_report(&f, &search));
            let tol = 1e-12 * (1.0 + s.a.amax().powi(2));
            prop_assert!((a.deficit - b.deficit).abs() < tol);
            prop_assert!((a.max_ricci - b.max_ricci).abs() < tol);
            prop_assert!((a.min_sectional - b.min_sectional).abs() < tol);
        }

        #[test]
        fn report_identities(s in shape_data()) {
            let r = curvature_report(&s, &PlaneSearch::default());
            let scale = 1.0 + s.a.amax().powi(2);
            prop_assert!((r.scalar_curvature - r.ricci_eigenvalues.iter().sum::<f64>()).abs() < 1e-12 * scale);
            prop_assert!((r.deficit - (2.25 * r.mean_curv_sq + 5.0 - r.max_ricci)).abs() < 1e-12 * scale);
            prop_assert!((r.delta2 - r.max_ricci).abs() < 1e-5 * scale);
        }
    }
}
