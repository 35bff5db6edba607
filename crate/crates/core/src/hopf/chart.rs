use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::AmbientVector;
use crate::{Error, Result};

/// A point in chart parameter space.
pub type Param = [f64; 3];

/// Distance to a coordinate singularity below which a chart reports it.
const SINGULAR_EPS: f64 = 1e-6;

/// A closed axis-aligned box in parameter space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamBox {
    pub lo: Param,
    pub hi: Param,
}

impl ParamBox {
    pub fn new(lo: Param, hi: Param) -> Self {
        ParamBox { lo, hi }
    }

    pub fn contains(&self, q: Param) -> bool {
        (0..3).all(|a| q[a] >= self.lo[a] && q[a] <= self.hi[a])
    }

    /// `n` equally spaced samples per axis including both endpoints, in
    /// row-major order (last parameter fastest).
    pub fn grid(&self, n: usize) -> Vec<Param> {
        let axis = |a: usize| -> Vec<f64> {
            if n == 1 {
                return vec![0.5 * (self.lo[a] + self.hi[a])];
            }
            (0..n)
                .map(|k| self.lo[a] + (self.hi[a] - self.lo[a]) * k as f64 / (n - 1) as f64)
                .collect()
        };
        let (x, y, z) = (axis(0), axis(1), axis(2));
        let mut out = Vec::with_capacity(n * n * n);
        for &a in &x {
            for &b in &y {
                for &c in &z {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    pub fn center(&self) -> Param {
        [
            0.5 * (self.lo[0] + self.hi[0]),
            0.5 * (self.lo[1] + self.hi[1]),
            0.5 * (self.lo[2] + self.hi[2]),
        ]
    }
}

/// A parametrization `q ↦ z(q) ∈ S⁵` of a section of a lifted hypersurface,
/// with exact first partial derivatives.
///
/// New surface families only need to implement this trait; the frame,
/// shape-operator and curvature pipeline is chart-agnostic.
pub trait SurfaceChart: Send + Sync {
    fn name(&self) -> String;

    fn evaluate(&self, q: Param) -> AmbientVector;

    fn partials(&self, q: Param) -> [AmbientVector; 3];

    /// Default sampling box, kept clear of coordinate singularities.
    fn domain(&self) -> ParamBox;

    fn is_singular(&self, q: Param) -> bool;

    fn param_names(&self) -> [&'static str; 3] {
        ["u", "v", "theta"]
    }
}

fn cis(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The `ψ = 0` section of the minimal ruled hypersurface
/// `z(u, v, θ) = (cos u cos v, cos u sin v, sin u·e^{iθ})`.
#[derive(Debug, Clone, Copy, Default)]
pub struct RuledChart;

pub fn ruled_chart() -> RuledChart {
    RuledChart
}

impl SurfaceChart for RuledChart {
    fn name(&self) -> String {
        "ruled".into()
    }

    fn evaluate(&self, [u, v, theta]: Param) -> AmbientVector {
        AmbientVector::new(
            re(u.cos() * v.cos()),
            re(u.cos() * v.sin()),
            cis(theta) * u.sin(),
        )
    }

    fn partials(&self, [u, v, theta]: Param) -> [AmbientVector; 3] {
        let (su, cu) = u.sin_cos();
        let (sv, cv) = v.sin_cos();
        let e = cis(theta);
        [
            AmbientVector::new(re(-su * cv), re(-su * sv), e * cu),
            AmbientVector::new(re(-cu * sv), re(cu * cv), re(0.0)),
            AmbientVector::new(re(0.0), re(0.0), Complex64::i() * e * su),
        ]
    }

    fn domain(&self) -> ParamBox {
        ParamBox::new([0.3, 0.1, 0.1], [1.2, 6.1, 6.1])
    }

    fn is_singular(&self, [u, _, _]: Param) -> bool {
        u.sin().abs() < SINGULAR_EPS || u.cos().abs() < SINGULAR_EPS
    }
}

/// Lift of the geodesic sphere of radius `r` about `[1 : 0 : 0]`:
/// `(φ, s, t) ↦ (cos r·e^{iφ}, sin r·cos s, sin r·sin s·e^{it})`.
#[derive(Debug, Clone, Copy)]
pub struct SphereChart {
    radius: f64,
}

pub fn sphere_chart(r: f64) -> Result<SphereChart> {
    SphereChart::new(r)
}

impl SphereChart {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius < FRAC_PI_2) {
            return Err(Error::Domain(format!(
                "sphere radius {radius} outside (0, pi/2)"
            )));
        }
        Ok(SphereChart { radius })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Principal curvatures `(2cot 2r, cot r, cot r)`; the first belongs to `ξ`.
    pub fn principal_curvatures(&self) -> [f64; 3] {
        let r = self.radius;
        let cot = |x: f64| x.cos() / x.sin();
        [2.0 * cot(2.0 * r), cot(r), cot(r)]
    }
}

impl SurfaceChart for SphereChart {
    fn name(&self) -> String {
        format!("sphere:{}", self.radius)
    }

    fn evaluate(&self, [phi, s, t]: Param) -> AmbientVector {
        let (sr, cr) = self.radius.sin_cos();
        AmbientVector::new(cis(phi) * cr, re(sr * s.cos()), cis(t) * (sr * s.sin()))
    }

    fn partials(&self, [phi, s, t]: Param) -> [AmbientVector; 3] {
        let (sr, cr) = self.radius.sin_cos();
        let (ss, cs) = s.sin_cos();
        let i = Complex64::i();
        [
            AmbientVector::new(i * cis(phi) * cr, re(0.0), re(0.0)),
            AmbientVector::new(re(0.0), re(-sr * ss), cis(t) * (sr * cs)),
            AmbientVector::new(re(0.0), re(0.0), i * cis(t) * (sr * ss)),
        ]
    }

    fn domain(&self) -> ParamBox {
        ParamBox::new([0.1, 0.3, 0.1], [6.1, 1.2, 6.1])
    }

    fn is_singular(&self, [_, s, _]: Param) -> bool {
        s.sin().abs() < SINGULAR_EPS || s.cos().abs() < SINGULAR_EPS
    }

    fn param_names(&self) -> [&'static str; 3] {
        ["phi", "s", "t"]
    }
}

/// Integer frequency vectors the displacement modes are drawn from.
const FREQUENCIES: [[i32; 3]; 8] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [0, 1, 1],
    [1, 0, 1],
    [2, 1, 1],
    [1, -1, 2],
];

const MODES_PER_COMPONENT: usize = 3;

#[derive(Debug, Clone, Copy)]
struct Mode {
    component: usize,
    coeff: Complex64,
    freq: [i32; 3],
    phase: f64,
}

impl Mode {
    fn arg(&self, q: Param) -> f64 {
        (0..3).map(|a| self.freq[a] as f64 * q[a]).sum::<f64>() + self.phase
    }
}

/// The ruled chart displaced by `ε·w(u, v, θ)` and pushed back onto `S⁵`.
///
/// `w` is a sum of seeded trigonometric modes `c·cos(n·q + φ)` with integer
/// frequency vectors `n`, so the displacement is smooth and periodic in `v`
/// and `θ`.
#[derive(Debug, Clone)]
pub struct PerturbedRuledChart {
    epsilon: f64,
    seed: u64,
    modes: Vec<Mode>,
}

impl PerturbedRuledChart {
    pub fn new(epsilon: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut modes = Vec::with_capacity(3 * MODES_PER_COMPONENT);
        for component in 0..3 {
            for _ in 0..MODES_PER_COMPONENT {
                let freq = FREQUENCIES[rng.gen_range(0..FREQUENCIES.len())];
                let coeff = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let phase = rng.gen_range(0.0..2.0 * PI);
                modes.push(Mode {
                    component,
                    coeff,
                    freq,
                    phase,
                });
            }
        }
        PerturbedRuledChart {
            epsilon,
            seed,
            modes,
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn displacement(&self, q: Param) -> AmbientVector {
        let mut w = AmbientVector::ZERO;
        for m in &self.modes {
            w.0[m.component] += m.coeff * m.arg(q).cos();
        }
        w
    }

    fn displacement_partials(&self, q: Param) -> [AmbientVector; 3] {
        let mut dw = [AmbientVector::ZERO; 3];
        for m in &self.modes {
            let s = m.arg(q).sin();
            for (a, d) in dw.iter_mut().enumerate() {
                d.0[m.component] -= m.coeff * (m.freq[a] as f64 * s);
            }
        }
        dw
    }

    fn unnormalized(&self, q: Param) -> AmbientVector {
        RuledChart.evaluate(q) + self.displacement(q).scale(self.epsilon)
    }
}

impl SurfaceChart for PerturbedRuledChart {
    fn name(&self) -> String {
        format!("perturbed-ruled:{},{}", self.epsilon, self.seed)
    }

    fn evaluate(&self, q: Param) -> AmbientVector {
        self.unnormalized(q).normalized()
    }

    fn partials(&self, q: Param) -> [AmbientVector; 3] {
        let y = self.unnormalized(q);
        let n = y.norm();
        let base = RuledChart.partials(q);
        let dw = self.displacement_partials(q);
        let mut out = [AmbientVector::ZERO; 3];
        for a in 0..3 {
            let dy = base[a] + dw[a].scale(self.epsilon);
            // d(y/|y|) = dy/|y| - y <y, dy>/|y|^3
            out[a] = dy.scale(1.0 / n) - y.scale(y.dot(&dy) / (n * n * n));
        }
        out
    }

    fn domain(&self) -> ParamBox {
        RuledChart.domain()
    }

    fn is_singular(&self, q: Param) -> bool {
        RuledChart.is_singular(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn charts() -> Vec<Box<dyn SurfaceChart>> {
        vec![
            Box::new(RuledChart),
            Box::new(SphereChart::new(FRAC_PI_4).unwrap()),
            Box::new(SphereChart::new(PI / 6.0).unwrap()),
            Box::new(PerturbedRuledChart::new(0.05, 7)),
        ]
    }

    #[test]
    fn ruled_chart_at_origin() {
        let z = RuledChart.evaluate([0.0, 0.0, 0.0]);
        assert!(z.max_abs_diff(&AmbientVector::unit(0)) < 1e-16);
    }

    #[test]
    fn ruled_theta_partial_vertical_component_is_sin_squared() {
        for &q in &[[0.6, 1.0, 2.0], [0.3, 5.0, 0.2], [1.1, 2.5, 4.0]] {
            let z = RuledChart.evaluate(q);
            let d = RuledChart.partials(q);
            // hand computation: z_θ·conj(i z) = |sin u|² for the third slot only
            let expected = q[0].sin().powi(2);
            assert!((d[2].dot(&z.mul_i()) - expected).abs() < 1e-15);
            assert!(d[0].dot(&z.mul_i()).abs() < 1e-15);
        }
    }

    #[test]
    fn sphere_chart_values() {
        let c = SphereChart::new(FRAC_PI_4).unwrap();
        let z = c.evaluate([0.0, FRAC_PI_4, 0.0]);
        let expected = AmbientVector::from_real([0.5f64.sqrt(), 0.0, 0.5, 0.0, 0.5, 0.0]);
        assert!(z.max_abs_diff(&expected) < 1e-15);
        for &r in &[0.2, FRAC_PI_4, 1.3] {
            let c = SphereChart::new(r).unwrap();
            for q in c.domain().grid(3) {
                let z = c.evaluate(q);
                assert!((z[0].norm() - r.cos()).abs() < 1e-15);
                let d = c.partials(q);
                assert!((d[0].dot(&z.mul_i()) - r.cos().powi(2)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn sphere_radius_out_of_range() {
        for r in [0.0, -0.1, FRAC_PI_2, 2.0, f64::NAN] {
            assert!(matches!(SphereChart::new(r), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn charts_land_on_the_unit_sphere() {
        for c in charts() {
            for q in c.domain().grid(5) {
                let z = c.evaluate(q);
                assert!((z.norm() - 1.0).abs() < 1e-14, "{} at {:?}", c.name(), q);
                for d in c.partials(q) {
                    assert!(d.dot(&z).abs() < 1e-14, "{} at {:?}", c.name(), q);
                }
            }
        }
    }

    #[test]
    fn analytic_partials_match_central_differences() {
        let h = 1e-5;
        for c in charts() {
            for q in c.domain().grid(4) {
                let d = c.partials(q);
                for a in 0..3 {
                    let mut qp = q;
                    let mut qm = q;
                    qp[a] += h;
                    qm[a] -= h;
                    let fd = (c.evaluate(qp) - c.evaluate(qm)).scale(0.5 / h);
                    assert!(fd.max_abs_diff(&d[a]) < 1e-9, "{} partial {a} at {:?}", c.name(), q);
                }
            }
        }
    }

    #[test]
    fn singular_predicates() {
        assert!(RuledChart.is_singular([0.0, 1.0, 2.0]));
        assert!(RuledChart.is_singular([FRAC_PI_2, 1.0, 2.0]));
        assert!(!RuledChart.is_singular([0.6, 1.0, 2.0]));
        let s = SphereChart::new(0.5).unwrap();
        assert!(s.is_singular([1.0, 0.0, 1.0]));
        assert!(s.is_singular([1.0, FRAC_PI_2, 1.0]));
        assert!(!s.is_singular([1.0, 0.7, 1.0]));
        for c in charts() {
            assert!(c.domain().grid(6).into_iter().all(|q| !c.is_singular(q)));
        }
    }

    #[test]
    fn zero_perturbation_is_the_ruled_chart() {
        let p = PerturbedRuledChart::new(0.0, 99);
        for q in RuledChart.domain().grid(3) {
            assert!(p.evaluate(q).max_abs_diff(&RuledChart.evaluate(q)) < 1e-15);
        }
    }

    #[test]
    fn perturbation_is_seed_deterministic() {
        let a = PerturbedRuledChart::new(0.05, 3);
        let b = PerturbedRuledChart::new(0.05, 3);
        let c = PerturbedRuledChart::new(0.05, 4);
        let q = [0.7, 1.3, 2.9];
        assert_eq!(a.evaluate(q), b.evaluate(q));
        assert_ne!(a.evaluate(q), c.evaluate(q));
    }

    #[test]
    fn grid_layout() {
        let b = ParamBox::new([0.0, 0.0, 0.0], [1.0, 2.0, 3.0]);
        let g = b.grid(3);
        assert_eq!(g.len(), 27);
        assert_eq!(g[0], [0.0, 0.0, 0.0]);
        assert_eq!(g[1], [0.0, 0.0, 1.5]);
        assert_eq!(g[26], [1.0, 2.0, 3.0]);
        assert!(g.iter().all(|&q| b.contains(q)));
    }
}
