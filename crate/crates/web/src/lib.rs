//! WebAssembly entry points for the static demo page in `www/`.
//!
//! Every function returns a flat `Float64Array`-compatible vector so the
//! page can plot it without any glue beyond `wasm-bindgen`.

use std::f64::consts::FRAC_PI_2;

use cp2lab_core::classify::{hopf_equality_radii, tube_condition};
use cp2lab_core::hopf::{Param, PerturbedRuledChart, ShapeOptions, SphereChart, SurfaceChart};
use cp2lab_core::suite::{model_deficit, scan_point};
use wasm_bindgen::prelude::*;

const SPHERE_MARGIN: f64 = 0.05;

/// `n` samples of the geodesic sphere family as `[r, deficit, k₁, k₂, k₃]`
/// records, with `r` spanning `(0, π/2)`.
#[wasm_bindgen]
pub fn sphere_curve(n: usize) -> Vec<f64> {
    let n = n.max(2);
    let mut out = Vec::with_capacity(5 * n);
    for i in 0..n {
        let r = SPHERE_MARGIN + (FRAC_PI_2 - 2.0 * SPHERE_MARGIN) * i as f64 / (n - 1) as f64;
        let k = SphereChart::new(r).expect("radius inside (0, pi/2)").principal_curvatures();
        out.push(r);
        out.push(model_deficit(k));
        out.extend_from_slice(&k);
    }
    out
}

/// Deficit on an `n × n` grid over the ruled box's `(u, v)` at fixed `θ`
/// for the perturbed chart; row-major in `u`, NaN where evaluation failed.
#[wasm_bindgen]
pub fn perturbed_slice(epsilon: f64, seed: u32, theta: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    let chart = PerturbedRuledChart::new(epsilon, u64::from(seed));
    let dom = chart.domain();
    let opts = ShapeOptions::default();
    let at = |k: usize, i: usize| dom.lo[k] + (dom.hi[k] - dom.lo[k]) * i as f64 / (n - 1) as f64;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let q: Param = [at(0, i), at(1, j), theta];
            out.push(scan_point(&chart, q, &opts).deficit);
        }
    }
    out
}

/// Bounds of the perturbed chart's box as `[u_lo, u_hi, v_lo, v_hi, θ_lo, θ_hi]`.
#[wasm_bindgen]
pub fn ruled_box() -> Vec<f64> {
    let d = PerturbedRuledChart::new(0.0, 0).domain();
    vec![d.lo[0], d.hi[0], d.lo[1], d.hi[1], d.lo[2], d.hi[2]]
}

/// `n` samples `[r, c(r)]` of the tube condition on `(0, π/4)`; its root is
/// the tube radius.
#[wasm_bindgen]
pub fn tube_curve(n: usize) -> Vec<f64> {
    let n = n.max(2);
    let (lo, hi) = (0.02, std::f64::consts::FRAC_PI_4 - 0.02);
    (0..n)
        .flat_map(|i| {
            let r = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            [r, tube_condition(r)]
        })
        .collect()
}

/// The tube radius found by bisection, or NaN.
#[wasm_bindgen]
pub fn tube_radius() -> f64 {
    hopf_equality_radii().map_or(f64::NAN, |h| h.r_tube)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_curve_vanishes_only_at_quarter_pi() {
        let c = sphere_curve(101);
        let mid = &c[5 * 50..5 * 51];
        assert!((mid[0] - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        assert!(mid[1].abs() < 1e-9);
        assert!(c.chunks(5).all(|rec| rec[1] >= -1e-9));
    }

    #[test]
    fn slice_shape_and_zero_perturbation() {
        let s = perturbed_slice(0.0, 1, 2.0, 4);
        assert_eq!(s.len(), 16);
        assert!(s.iter().all(|d| d.abs() < 1e-6));
        let p = perturbed_slice(0.05, 1, 2.0, 4);
        assert!(p.iter().all(|d| *d >= -1e-6));
    }

    #[test]
    fn tube_curve_changes_sign_once_near_the_radius() {
        let c = tube_curve(200);
        let vals: Vec<f64> = c.chunks(2).map(|p| p[1]).collect();
        assert_eq!(vals.windows(2).filter(|w| w[0].signum() != w[1].signum()).count(), 1);
        assert!((tube_radius() - 0.333_119_71).abs() < 1e-7);
        assert_eq!(ruled_box().len(), 6);
    }
}
