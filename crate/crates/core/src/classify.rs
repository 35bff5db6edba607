//! Pointwise residuals for the equality basis, the ruled criterion, and the
//! radii at which Hopf hypersurfaces attain equality.

use std::f64::consts::FRAC_PI_4;

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::hopf::ShapeData;
use crate::{Error, Result};

/// Default `β` threshold separating Hopf from non-Hopf points.
pub const HOPF_TOL: f64 = 1e-6;

/// Shape operator in the basis `e₁ = ξ`, `e₂ = (Aξ − αξ)/β`, `e₃ = Pe₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Lemma1Report {
    /// `max(|a₁₃|, |a₂₃|)`.
    pub block_residual: f64,
    /// `|a₁₁ + a₂₂ − a₃₃|`.
    pub trace_residual: f64,
    /// `[a₁₁, a₁₂, a₂₂, a₂₃, a₃₃]`; `a₁₃` vanishes by construction.
    pub entries: [f64; 5],
    /// Deviation of the constructed basis from orthonormality.
    pub basis_defect: f64,
    /// `|⟨Pe₁, e₂⟩|`.
    pub pe1_e2: f64,
}

impl Lemma1Report {
    pub fn max_residual(&self) -> f64 {
        self.block_residual.max(self.trace_residual)
    }
}

fn non_hopf_direction(s: &ShapeData, tol: f64) -> Result<Vector3<f64>> {
    if s.hopf_defect <= tol {
        return Err(Error::HopfPoint {
            beta: s.hopf_defect,
            tol,
        });
    }
    Ok((s.a * s.xi - s.xi * s.alpha) / s.hopf_defect)
}

/// Expresses `A` in the basis `{ξ, (Aξ − αξ)/β, P e₂}` and measures how far
/// it is from the block form `[[α, β, 0], [β, γ, 0], [0, 0, μ]]` with
/// `α + γ = μ`.
pub fn lemma1_basis(s: &ShapeData, tol: f64) -> Result<Lemma1Report> {
    let e1 = s.xi;
    let e2 = non_hopf_direction(s, tol)?;
    let e3 = s.p * e2;
    let basis = Matrix3::from_columns(&[e1, e2, e3]);
    let m = basis.transpose() * s.a * basis;
    let basis_defect = (basis.transpose() * basis - Matrix3::identity()).amax();
    Ok(Lemma1Report {
        block_residual: m[(0, 2)].abs().max(m[(1, 2)].abs()),
        trace_residual: (m[(0, 0)] + m[(1, 1)] - m[(2, 2)]).abs(),
        entries: [m[(0, 0)], m[(0, 1)], m[(1, 1)], m[(1, 2)], m[(2, 2)]],
        basis_defect,
        pe1_e2: (s.p * e1).dot(&e2).abs(),
    })
}

/// Residual of `Aξ = αξ + βU, AU = βξ, AW = 0` with `U = (Aξ − αξ)/β` and
/// `W ⊥ {ξ, U}`. With `minimal` set, `|α|` and `|tr A|` are included.
pub fn ruled_check(s: &ShapeData, tol: f64, minimal: bool) -> Result<f64> {
    let u = non_hopf_direction(s, tol)?;
    let w = s.xi.cross(&u).normalize();
    let mut residual = (s.a * u - s.xi * s.hopf_defect).norm().max((s.a * w).norm());
    if minimal {
        residual = residual.max(s.alpha.abs()).max(s.trace().abs());
    }
    Ok(residual)
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

/// `a₁₁ + a₂₂ − a₃₃` for the tube model `diag(2cot 2r, cot(r−π/4), cot(r+π/4))`.
pub fn tube_condition(r: f64) -> f64 {
    2.0 * cot(2.0 * r) + cot(r - FRAC_PI_4) - cot(r + FRAC_PI_4)
}

/// `tan⁻¹((1 + √5 − √(2 + 2√5))/2)`.
pub fn tube_radius_closed_form() -> f64 {
    let s5 = 5f64.sqrt();
    ((1.0 + s5 - (2.0 + 2.0 * s5).sqrt()) / 2.0).atan()
}

pub const TUBE_BRACKET: (f64, f64) = (0.01, FRAC_PI_4 - 0.01);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HopfRadii {
    pub r_sphere: f64,
    pub r_tube: f64,
    pub sphere_model: String,
    pub tube_model: String,
    pub bisection_steps: usize,
}

/// Radii at which the Hopf models satisfy the equality-basis condition
/// `a₁₁ + a₂₂ = a₃₃` (with `e₁ = ξ`).
///
/// Geodesic sphere `diag(2cot 2r, cot r, cot r)`: the condition reduces to
/// `2cot 2r = 0`, so `r = π/4`. Tube over the complex quadric
/// `diag(2cot 2r, cot(r−π/4), cot(r+π/4))`: solved by bisection.
pub fn hopf_equality_radii() -> Result<HopfRadii> {
    let (r_tube, bisection_steps) = bisect(tube_condition, TUBE_BRACKET.0, TUBE_BRACKET.1, 1e-15)?;
    Ok(HopfRadii {
        r_sphere: FRAC_PI_4,
        r_tube,
        sphere_model: "geodesic sphere, principal curvatures (2cot 2r, cot r, cot r)".into(),
        tube_model: "tube over complex quadric, principal curvatures (2cot 2r, cot(r-pi/4), cot(r+pi/4))"
            .into(),
        bisection_steps,
    })
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, usize)> {
    let (bracket_lo, bracket_hi) = (lo, hi);
    let mut f_lo = f(lo);
    if f_lo.signum() == f(hi).signum() {
        return Err(Error::NoRoot {
            what: "tube condition",
            lo: bracket_lo,
            hi: bracket_hi,
        });
    }
    let mut steps = 0;
    while hi - lo > tol && steps < 200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok((mid, steps));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        steps += 1;
    }
    Ok((0.5 * (lo + hi), steps))
}

/// Number of sign changes of `tube_condition` over `n` equally spaced
/// points of the bracket.
pub fn tube_sign_changes(n: usize) -> usize {
    let (lo, hi) = TUBE_BRACKET;
    let vals: Vec<f64> = (0..n)
        .map(|k| tube_condition(lo + (hi - lo) * k as f64 / (n - 1) as f64))
        .collect();
    vals.windows(2).filter(|w| w[0].signum() != w[1].signum()).count()
}
