//! Verification suites over parameter grids, as run by the command-line
//! front end. Each suite returns [`CheckReport`]s; none of them panics on a
//! bad grid point, which is counted and reported instead.

use std::f64::consts::FRAC_PI_4;
use std::str::FromStr;

use nalgebra::{Matrix3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::checks;
use crate::classify::{hopf_equality_radii, lemma1_basis, ruled_check, tube_radius_closed_form, tube_sign_changes, HOPF_TOL};
use crate::curvature::{compare_with_gauss, curvature_report, deficit, ricci, ricci_closed_form, PlaneSearch};
use crate::hopf::{shape_operator, Param, PerturbedRuledChart, RuledChart, ShapeData, ShapeOptions, SphereChart, SurfaceChart};
use crate::linalg::sym3_eigenvalues;
use crate::report::{CheckReport, Exact, Residual, ScanRow, Status};
use crate::{Error, Result};

/// Principal curvatures of the sphere checks are compared at this fixed
/// tolerance, independent of `--tol`.
pub const PRINCIPAL_TOL: f64 = 1e-7;
/// Agreement required between intrinsic and Gauss-equation curvature.
pub const CROSSCHECK_TOL: f64 = 1e-4;
/// Agreement required between `δ(2)` and `maxRic`.
pub const DELTA2_TOL: f64 = 1e-5;
/// Published decimal value of the tube radius and its tolerance.
pub const TUBE_DECIMAL: f64 = 0.333_119_71;
pub const TUBE_DECIMAL_TOL: f64 = 1e-7;
pub const TUBE_CLOSED_FORM_TOL: f64 = 1e-12;
/// Scan rows must satisfy `deficit ≥ −SCAN_FLOOR`.
pub const SCAN_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    /// Points per axis.
    pub grid: usize,
    pub shape: ShapeOptions,
    pub tol: f64,
    pub parallel: bool,
    /// Halves the fixed tolerances; `tol` itself is set by the caller.
    pub strict: bool,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            grid: 16,
            shape: ShapeOptions::default(),
            tol: 1e-6,
            parallel: true,
            strict: false,
        }
    }
}

impl GridConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid < 2 {
            return Err(Error::Domain(format!("grid must have at least 2 points per axis, got {}", self.grid)));
        }
        if !(self.shape.step > 0.0 && self.tol > 0.0) {
            return Err(Error::Domain("step and tolerance must be positive".into()));
        }
        Ok(())
    }

    /// A fixed tolerance, halved in strict mode.
    pub fn fixed(&self, tol: f64) -> f64 {
        if self.strict {
            tol / 2.0
        } else {
            tol
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "grid": self.grid,
            "step": self.shape.step,
            "tol": self.tol,
            "parallel": self.parallel,
            "strict": self.strict,
        })
    }
}

/// Evaluates `f` at every point, in grid order.
pub fn map_points<T, F>(points: &[Param], parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Param) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return points.par_iter().map(|&q| f(q)).collect();
    }
    let _ = parallel;
    points.iter().map(|&q| f(q)).collect()
}

fn max_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, |m: f64, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

fn with_errors(mut r: CheckReport, errors: usize) -> CheckReport {
    if errors > 0 {
        r.status = Status::Error;
        r.details["errorPoints"] = json!(errors);
    }
    r
}

// ----------------------------------------------------------------- ruled

#[derive(Debug, Clone, Copy)]
struct RuledPoint {
    deficit: f64,
    trace: f64,
    alpha: f64,
    lemma1: f64,
    lemma2: f64,
    hopf_defect: f64,
    delta2_gap: f64,
}

fn ruled_point(q: Param, opts: &ShapeOptions, search: &PlaneSearch) -> Result<RuledPoint> {
    let s = shape_operator(&RuledChart, q, opts)?;
    let c = curvature_report(&s, search);
    Ok(RuledPoint {
        deficit: c.deficit,
        trace: s.trace(),
        alpha: s.alpha,
        lemma1: lemma1_basis(&s, HOPF_TOL)?.max_residual(),
        lemma2: ruled_check(&s, HOPF_TOL, true)?,
        hopf_defect: s.hopf_defect,
        delta2_gap: c.delta2 - c.max_ricci,
    })
}

/// Equality, minimality and the ruled shape-operator form on the ruled
/// chart's default box.
pub fn check_ruled(cfg: &GridConfig) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    let points = RuledChart.domain().grid(cfg.grid);
    let search = PlaneSearch::default();
    let results = map_points(&points, cfg.parallel, |q| ruled_point(q, &cfg.shape, &search));
    let errors = results.iter().filter(|r| r.is_err()).count();
    let ok: Vec<RuledPoint> = results.into_iter().filter_map(Result::ok).collect();
    if ok.is_empty() {
        return Err(Error::Degenerate("no grid point could be evaluated".into()));
    }
    let max = |f: fn(&RuledPoint) -> f64| max_of(ok.iter().map(|p| f(p).abs()));
    let min_hopf = ok.iter().map(|p| p.hopf_defect).fold(f64::INFINITY, f64::min);
    let pts = json!({ "points": points.len() });
    let mut reports = vec![
        CheckReport::bounded("ruled.deficit", max(|p| p.deficit), cfg.tol, pts.clone()),
        CheckReport::bounded("ruled.traceA", max(|p| p.trace), cfg.tol, pts.clone()),
        CheckReport::bounded("ruled.alpha", max(|p| p.alpha), cfg.tol, pts.clone()),
        CheckReport::bounded("ruled.lemma1", max(|p| p.lemma1), cfg.tol, pts.clone()),
        CheckReport::bounded("ruled.lemma2", max(|p| p.lemma2), cfg.tol, pts.clone()),
        CheckReport::bounded("ruled.delta2", max(|p| p.delta2_gap), cfg.fixed(DELTA2_TOL), pts.clone()),
        CheckReport {
            check_name: "ruled.hopfDefect".into(),
            status: if min_hopf > HOPF_TOL { Status::Pass } else { Status::Fail },
            max_abs_residual: Residual::Missing,
            details: json!({ "minHopfDefect": min_hopf, "threshold": HOPF_TOL }),
        },
    ];
    for r in reports.iter_mut() {
        *r = with_errors(r.clone(), errors);
    }
    Ok(reports)
}

// ---------------------------------------------------------------- sphere

/// Deficit of a Hopf point with principal curvatures `k`, `ξ` along the
/// first.
pub fn model_deficit(k: [f64; 3]) -> f64 {
    deficit(&ShapeData::synthetic(Matrix3::from_diagonal(&Vector3::from(k)), Vector3::x()))
}

fn sorted(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(f64::total_cmp);
    v
}

fn spectrum_gap(ev: [f64; 3], model: [f64; 3]) -> f64 {
    let neg = model.map(|x| -x);
    let gap = |m: [f64; 3]| {
        let (a, b) = (sorted(ev), sorted(m));
        (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
    };
    // the normal's orientation is a convention
    gap(model).min(gap(neg))
}

/// Deficit against the closed-form value and principal curvatures against
/// the classical model, over the sphere chart's default box.
pub fn check_sphere(radius: f64, cfg: &GridConfig) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    let chart = SphereChart::new(radius)?;
    let model = chart.principal_curvatures();
    let expected = model_deficit(model);
    let points = chart.domain().grid(cfg.grid);
    let results = map_points(&points, cfg.parallel, |q| -> Result<(f64, f64)> {
        let s = shape_operator(&chart, q, &cfg.shape)?;
        Ok((deficit(&s), spectrum_gap(sym3_eigenvalues(&s.a), model)))
    });
    let errors = results.iter().filter(|r| r.is_err()).count();
    let ok: Vec<(f64, f64)> = results.into_iter().filter_map(Result::ok).collect();
    if ok.is_empty() {
        return Err(Error::Degenerate("no grid point could be evaluated".into()));
    }
    let details = json!({ "radius": radius, "expectedDeficit": expected, "model": model, "points": points.len() });
    Ok(vec![
        with_errors(
            CheckReport::bounded("sphere.deficit", max_of(ok.iter().map(|p| (p.0 - expected).abs())), cfg.tol, details.clone()),
            errors,
        ),
        with_errors(
            CheckReport::bounded("sphere.principalCurvatures", max_of(ok.iter().map(|p| p.1)), cfg.fixed(PRINCIPAL_TOL), details),
            errors,
        ),
    ])
}

// ------------------------------------------------------------------ tube

/// The tube radius by root-finding against its closed form and the
/// published decimal; the sphere radius must be exactly π/4.
pub fn check_tube(strict: bool) -> CheckReport {
    let scale = if strict { 0.5 } else { 1.0 };
    match hopf_equality_radii() {
        Ok(h) => {
            let closed = tube_radius_closed_form();
            let vs_closed = (h.r_tube - closed).abs();
            let vs_decimal = (h.r_tube - TUBE_DECIMAL).abs();
            let pass = vs_closed <= TUBE_CLOSED_FORM_TOL * scale
                && vs_decimal <= TUBE_DECIMAL_TOL * scale
                && h.r_sphere == FRAC_PI_4;
            CheckReport {
                check_name: "tube.radius".into(),
                status: if pass { Status::Pass } else { Status::Fail },
                max_abs_residual: Residual::Value(vs_closed),
                details: json!({
                    "rTube": h.r_tube,
                    "rSphere": h.r_sphere,
                    "closedForm": closed,
                    "vsDecimal": vs_decimal,
                    "bisectionSteps": h.bisection_steps,
                    "signChanges": tube_sign_changes(2001),
                    "tubeModel": h.tube_model,
                    "sphereModel": h.sphere_model,
                }),
            }
        }
        Err(e) => CheckReport {
            check_name: "tube.radius".into(),
            status: Status::Fail,
            max_abs_residual: Residual::Missing,
            details: json!({ "error": e.to_string() }),
        },
    }
}

// -------------------------------------------------------------- symbolic

pub fn verdict_report(v: checks::Verdict) -> CheckReport {
    let status = if v.passed {
        Status::Pass
    } else if v.errored {
        Status::Error
    } else {
        Status::Fail
    };
    let mut details = v.details;
    if let Some(r) = v.remainder {
        details = json!({ "details": details, "remainder": r });
    }
    CheckReport {
        check_name: v.name.to_string(),
        status,
        max_abs_residual: Residual::Exact(if v.passed { Exact::ExactZero } else { Exact::ExactNonzero }),
        details,
    }
}

/// The exact checks by name; an empty list runs all of them.
pub fn symbolic(names: &[&str]) -> Result<Vec<CheckReport>> {
    let verdicts = checks::run_checks(names).map_err(Error::Domain)?;
    Ok(verdicts.into_iter().map(verdict_report).collect())
}

// ------------------------------------------------------------------ scan

/// Surfaces accepted by [`scan`]: `ruled`, `sphere:<r>`,
/// `perturbed-ruled:<ε>,<seed>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Surface {
    Ruled,
    Sphere(f64),
    PerturbedRuled { epsilon: f64, seed: u64 },
}

impl FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Domain(format!("{what} in surface '{s}'"));
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        match name {
            "ruled" if args.is_empty() => Ok(Surface::Ruled),
            "sphere" => {
                let r = args.parse().map_err(|_| bad("bad radius"))?;
                SphereChart::new(r)?;
                Ok(Surface::Sphere(r))
            }
            "perturbed-ruled" => {
                let (e, seed) = args.split_once(',').unwrap_or((args, "0"));
                let epsilon: f64 = e.parse().map_err(|_| bad("bad epsilon"))?;
                if !epsilon.is_finite() {
                    return Err(bad("bad epsilon"));
                }
                let seed = seed.parse().map_err(|_| bad("bad seed"))?;
                Ok(Surface::PerturbedRuled { epsilon, seed })
            }
            _ => Err(Error::Domain(format!(
                "unknown surface '{s}'; expected ruled, sphere:<r> or perturbed-ruled:<eps>,<seed>"
            ))),
        }
    }
}

impl Surface {
    pub fn chart(&self) -> Result<Box<dyn SurfaceChart>> {
        Ok(match *self {
            Surface::Ruled => Box::new(RuledChart),
            Surface::Sphere(r) => Box::new(SphereChart::new(r)?),
            Surface::PerturbedRuled { epsilon, seed } => Box::new(PerturbedRuledChart::new(epsilon, seed)),
        })
    }
}

fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::RankDeficient { .. } => "rank-deficient",
        Error::AsymmetryExceeded { .. } => "asymmetric",
        _ => "error",
    }
}

/// Curvature data at one point; failures leave NaNs and a flag.
pub fn scan_point(chart: &dyn SurfaceChart, q: Param, opts: &ShapeOptions) -> ScanRow {
    let mut flags = Vec::new();
    if chart.is_singular(q) {
        flags.push("singular");
    }
    let nan = f64::NAN;
    let mut row = ScanRow {
        u: q[0],
        v: q[1],
        theta: q[2],
        max_ricci: nan,
        mean_curv_sq: nan,
        deficit: nan,
        alpha: nan,
        hopf_defect: nan,
        trace_a: nan,
        flags: String::new(),
    };
    match shape_operator(chart, q, opts) {
        Ok(s) => {
            row.max_ricci = sym3_eigenvalues(&ricci(&s))[2];
            row.mean_curv_sq = s.mean_curvature_sq();
            row.deficit = 2.25 * row.mean_curv_sq + 5.0 - row.max_ricci;
            row.alpha = s.alpha;
            row.hopf_defect = s.hopf_defect;
            row.trace_a = s.trace();
            if s.hopf_defect <= HOPF_TOL {
                flags.push("hopf");
            }
        }
        Err(e) => flags.push(error_tag(&e)),
    }
    row.flags = flags.join(";");
    row
}

/// One row per grid point of the surface's default box, in grid order.
pub fn scan(surface: &Surface, cfg: &GridConfig) -> Result<Vec<ScanRow>> {
    cfg.validate()?;
    let chart = surface.chart()?;
    let points = chart.domain().grid(cfg.grid);
    Ok(map_points(&points, cfg.parallel, |q| scan_point(chart.as_ref(), q, &cfg.shape)))
}

/// `deficit ≥ −floor` on every evaluated row; errored rows fail the check.
pub fn scan_report(rows: &[ScanRow], floor: f64) -> CheckReport {
    let evaluated: Vec<f64> = rows.iter().map(|r| r.deficit).filter(|d| d.is_finite()).collect();
    let errors = rows.len() - evaluated.len();
    let min = evaluated.iter().copied().fold(f64::INFINITY, f64::min);
    let max = evaluated.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let violation = (-min).max(0.0);
    let r = CheckReport::bounded(
        "scan.deficitFloor",
        violation,
        floor,
        json!({ "rows": rows.len(), "minDeficit": min, "maxDeficit": max, "floor": -floor }),
    );
    with_errors(r, errors)
}

// ------------------------------------------------------------ crosscheck

/// Intrinsic curvature from the metric against the Gauss equation, on a
/// grid over both builtin charts; the π/4 sphere also reports its
/// holomorphic sectional curvature, which must be 5.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrosscheckConfig {
    pub grid: usize,
    /// Finite-difference step for the metric derivatives.
    pub intrinsic_step: f64,
    pub shape: ShapeOptions,
    pub tol: f64,
    pub parallel: bool,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        CrosscheckConfig {
            grid: 5,
            intrinsic_step: 1e-3,
            shape: ShapeOptions::default(),
            tol: CROSSCHECK_TOL,
            parallel: true,
        }
    }
}

pub fn crosscheck(cfg: &CrosscheckConfig) -> Result<Vec<CheckReport>> {
    let CrosscheckConfig { grid, intrinsic_step, ref shape, tol, parallel } = *cfg;
    if grid < 2 {
        return Err(Error::Domain(format!("grid must have at least 2 points per axis, got {grid}")));
    }
    let sphere = SphereChart::new(FRAC_PI_4)?;
    let charts: [(&str, &dyn SurfaceChart); 2] = [("ruled", &RuledChart), ("sphere", &sphere)];
    let mut reports = Vec::new();
    for (label, chart) in charts {
        let points = chart.domain().grid(grid);
        let results = map_points(&points, parallel, |q| compare_with_gauss(chart, q, intrinsic_step, shape));
        let errors = results.iter().filter(|r| r.is_err()).count();
        let diff = max_of(results.iter().flatten().map(|c| c.max_abs_diff));
        let details = json!({ "points": points.len(), "intrinsicStep": intrinsic_step });
        reports.push(with_errors(
            CheckReport::bounded(format!("crosscheck.{label}"), diff, tol, details),
            errors,
        ));
        if label == "sphere" {
            let hol = max_of(results.iter().flatten().map(|c| (c.holomorphic_sectional - 5.0).abs()));
            reports.push(with_errors(
                CheckReport::bounded("crosscheck.sphereHolomorphic", hol, tol, json!({ "expected": 5.0 })),
                errors,
            ));
        }
    }
    Ok(reports)
}

// ------------------------------------------------------------ self-check

/// Random extrinsic data: symmetric `A` with entries in `[-3, 3]` and a
/// unit structure vector.
pub fn random_shape(rng: &mut impl Rng) -> ShapeData {
    let mut a = Matrix3::zeros();
    for i in 0..3 {
        for j in i..3 {
            let x = rng.gen_range(-3.0..3.0);
            a[(i, j)] = x;
            a[(j, i)] = x;
        }
    }
    let xi = loop {
        let v = Vector3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if v.norm() > 0.1 {
            break v;
        }
    };
    ShapeData::synthetic(a, xi)
}

/// Closed-form Ricci tensor against the direct contraction of the Gauss
/// equation on `cases` random inputs.
pub fn ricci_self_check(cases: usize, seed: u64, tol: f64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let diff = max_of((0..cases).map(|_| {
        let s = random_shape(&mut rng);
        (ricci(&s) - ricci_closed_form(&s)).amax()
    }));
    CheckReport::bounded("selfcheck.ricciClosedForm", diff, tol, json!({ "cases": cases, "seed": seed }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> GridConfig {
        GridConfig {
            grid: 3,
            ..GridConfig::default()
        }
    }

    #[test]
    fn surfaces_parse() {
        assert_eq!("ruled".parse::<Surface>().unwrap(), Surface::Ruled);
        assert_eq!("sphere:0.5".parse::<Surface>().unwrap(), Surface::Sphere(0.5));
        assert_eq!(
            "perturbed-ruled:0.05,7".parse::<Surface>().unwrap(),
            Surface::PerturbedRuled { epsilon: 0.05, seed: 7 }
        );
        for bad in ["torus", "sphere:2", "sphere:x", "perturbed-ruled:a,1", "ruled:1"] {
            assert!(bad.parse::<Surface>().is_err(), "{bad}");
        }
    }

    #[test]
    fn grid_of_one_is_rejected() {
        let cfg = GridConfig { grid: 1, ..GridConfig::default() };
        assert!(matches!(check_ruled(&cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn small_ruled_grid_passes() {
        let reports = check_ruled(&small()).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(CheckReport::passed), "{reports:#?}");
    }

    #[test]
    fn sphere_deficits() {
        let r = check_sphere(FRAC_PI_4, &small()).unwrap();
        assert!(r.iter().all(CheckReport::passed), "{r:#?}");
        assert!(r[0].details["expectedDeficit"].as_f64().unwrap().abs() < 1e-12);
        let r = check_sphere(std::f64::consts::PI / 6.0, &small()).unwrap();
        assert!(r.iter().all(CheckReport::passed));
        let expected = r[0].details["expectedDeficit"].as_f64().unwrap();
        assert!((expected - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn zero_perturbation_matches_ruled_rows() {
        let cfg = small();
        let a = scan(&Surface::Ruled, &cfg).unwrap();
        let b = scan(&Surface::PerturbedRuled { epsilon: 0.0, seed: 3 }, &cfg).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x.deficit - y.deficit).abs() < 1e-9);
            assert!(x.deficit.abs() < 1e-6);
        }
    }

    #[test]
    fn rows_satisfy_deficit_identity() {
        let rows = scan(&Surface::PerturbedRuled { epsilon: 0.05, seed: 1 }, &small()).unwrap();
        for r in &rows {
            assert!((r.deficit - (2.25 * r.mean_curv_sq + 5.0 - r.max_ricci)).abs() <= 1e-12);
        }
        assert!(scan_report(&rows, SCAN_FLOOR).passed());
    }

    #[test]
    fn sequential_and_parallel_scans_agree_bitwise() {
        let cfg = small();
        let seq = GridConfig { parallel: false, ..cfg };
        let s = Surface::PerturbedRuled { epsilon: 0.05, seed: 9 };
        let (a, b) = (scan(&s, &cfg).unwrap(), scan(&s, &seq).unwrap());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.deficit.to_bits(), y.deficit.to_bits());
        }
    }

    #[test]
    fn coarse_intrinsic_step_fails_crosscheck() {
        let coarse = CrosscheckConfig { grid: 2, intrinsic_step: 1e-1, ..CrosscheckConfig::default() };
        let r = crosscheck(&coarse).unwrap();
        assert!(r.iter().any(|c| !c.passed()));
        let r = crosscheck(&CrosscheckConfig { grid: 2, ..CrosscheckConfig::default() }).unwrap();
        assert!(r.iter().all(CheckReport::passed), "{r:#?}");
    }

    #[test]
    fn tube_and_self_check() {
        assert!(check_tube(false).passed());
        assert!(ricci_self_check(200, 1, 1e-12).passed());
    }
}
