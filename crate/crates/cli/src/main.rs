//! `cp2lab`: batch verification runs with JSON reports and CSV scans.
//!
//! Exit status: 0 when every check passes, 1 when any fails, 2 on usage or
//! configuration errors.

use std::f64::consts::FRAC_PI_4;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cp2lab_core::hopf::ShapeOptions;
use cp2lab_core::report::{CheckReport, RunReport, ScanRow, Status, SCAN_HEADER};
use cp2lab_core::suite::{
    self, check_ruled, check_sphere, check_tube, crosscheck, ricci_self_check, scan, scan_report, CrosscheckConfig,
    GridConfig, Surface, CROSSCHECK_TOL, SCAN_FLOOR,
};
use serde_json::json;

const SELF_CHECK_CASES: usize = 100;
const SELF_CHECK_SEED: u64 = 1;
const SELF_CHECK_TOL: f64 = 1e-12;

#[derive(Parser, Debug)]
#[command(name = "cp2lab", version, about = "Curvature and elimination checks for hypersurfaces of CP^2")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Grid points per axis [check, scan: 16; crosscheck: 5]
    #[arg(long, global = true)]
    grid: Option<usize>,

    /// Finite-difference step [shape operator: 1e-5; crosscheck metric: 1e-3]
    #[arg(long, global = true)]
    step: Option<f64>,

    /// Residual tolerance [1e-6; crosscheck 1e-4]
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Geodesic sphere radius, in (0, pi/2) [pi/4]
    #[arg(long, global = true)]
    radius: Option<f64>,

    /// Perturbation size for `scan perturbed-ruled` [0.05]
    #[arg(long, global = true)]
    epsilon: Option<f64>,

    /// Perturbation seed for `scan perturbed-ruled` [0]
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format [json for reports, csv for scans]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Halve all tolerances
    #[arg(long, global = true)]
    strict: bool,

    /// Evaluate grid points on one thread
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Equality checks on one of the classified hypersurfaces
    Check {
        #[arg(value_enum)]
        target: Target,
    },
    /// Exact replay of the elimination; no names runs every check
    Symbolic {
        /// kappa, f-emergence, f2, resultant, mu1, mu0 (or all)
        names: Vec<String>,
    },
    /// Curvature data at every grid point of a surface
    Scan {
        /// ruled | sphere[:r] | perturbed-ruled[:eps,seed]
        surface: String,
    },
    /// Intrinsic curvature against the Gauss equation on both builtin charts
    Crosscheck,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    Ruled,
    Sphere,
    Tube,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

/// A usage or configuration problem (exit 2).
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("cp2lab: {msg}");
            ExitCode::from(2)
        }
    }
}

impl Cli {
    fn tol_scale(&self) -> f64 {
        if self.strict {
            0.5
        } else {
            1.0
        }
    }

    fn grid_config(&self) -> Result<GridConfig, UsageError> {
        let d = GridConfig::default();
        let cfg = GridConfig {
            grid: self.grid.unwrap_or(d.grid),
            shape: ShapeOptions::with_step(self.step.unwrap_or(d.shape.step)),
            tol: self.tol.unwrap_or(d.tol) * self.tol_scale(),
            parallel: !self.sequential,
            strict: self.strict,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn writer(&self) -> Result<Box<dyn Write>, UsageError> {
        Ok(match &self.out {
            Some(p) => Box::new(File::create(p).map_err(|e| UsageError(format!("{}: {e}", p.display())))?),
            None => Box::new(io::stdout().lock()),
        })
    }

    fn report_format(&self) -> Result<(), UsageError> {
        match self.format {
            Some(Format::Csv) => Err(UsageError("reports are JSON only; --format csv applies to scan".into())),
            _ => Ok(()),
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { target } => run_check(cli, *target),
        Command::Symbolic { names } => run_symbolic(cli, names),
        Command::Scan { surface } => run_scan(cli, surface),
        Command::Crosscheck => run_crosscheck(cli),
    }
}

fn self_check(cli: &Cli) -> CheckReport {
    ricci_self_check(SELF_CHECK_CASES, SELF_CHECK_SEED, SELF_CHECK_TOL * cli.tol_scale())
}

fn emit(cli: &Cli, report: RunReport) -> Outcome {
    cli.report_format()?;
    for r in &report.reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        eprintln!("{status:5} {} {}", r.check_name, serde_json::to_string(&r.max_abs_residual)?);
    }
    let ok = report.summary.all_passed();
    let mut w = cli.writer()?;
    writeln!(w, "{}", report.to_json())?;
    Ok(ok)
}

fn run_check(cli: &Cli, target: Target) -> Outcome {
    cli.report_format()?;
    let (name, config, mut reports) = match target {
        Target::Ruled => {
            let cfg = cli.grid_config()?;
            ("check ruled", cfg.to_json(), check_ruled(&cfg)?)
        }
        Target::Sphere => {
            let cfg = cli.grid_config()?;
            let r = cli.radius.unwrap_or(FRAC_PI_4);
            let mut config = cfg.to_json();
            config["radius"] = json!(r);
            ("check sphere", config, check_sphere(r, &cfg)?)
        }
        Target::Tube => ("check tube", json!({ "strict": cli.strict }), vec![check_tube(cli.strict)]),
    };
    reports.insert(0, self_check(cli));
    emit(cli, RunReport::new(name, config, reports))
}

fn run_symbolic(cli: &Cli, names: &[String]) -> Outcome {
    let names: Vec<&str> = names.iter().map(String::as_str).filter(|n| *n != "all").collect();
    let reports = suite::symbolic(&names)?;
    emit(cli, RunReport::new("symbolic", json!({ "names": names }), reports))
}

fn resolve_surface(cli: &Cli, spec: &str) -> Result<Surface, UsageError> {
    let spec = match spec {
        "sphere" => format!("sphere:{}", cli.radius.unwrap_or(FRAC_PI_4)),
        "perturbed-ruled" => format!("perturbed-ruled:{},{}", cli.epsilon.unwrap_or(0.05), cli.seed.unwrap_or(0)),
        s => s.to_string(),
    };
    Ok(spec.parse()?)
}

fn run_scan(cli: &Cli, spec: &str) -> Outcome {
    let surface = resolve_surface(cli, spec)?;
    let cfg = cli.grid_config()?;
    let rows = scan(&surface, &cfg)?;
    let floor = SCAN_FLOOR * cli.tol_scale();
    let summary = scan_report(&rows, floor);
    let selfcheck = self_check(cli);
    let mut w = cli.writer()?;
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(&mut w, &rows)?,
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(&rows)?)?,
    }
    w.flush()?;
    for r in [&selfcheck, &summary] {
        eprintln!("{:?} {} {}", r.status, r.check_name, r.details);
    }
    Ok(selfcheck.passed() && summary.passed())
}

fn write_csv(w: &mut dyn Write, rows: &[ScanRow]) -> Result<(), UsageError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(SCAN_HEADER)?;
    for r in rows {
        out.write_record([
            r.u.to_string(),
            r.v.to_string(),
            r.theta.to_string(),
            r.max_ricci.to_string(),
            r.mean_curv_sq.to_string(),
            r.deficit.to_string(),
            r.alpha.to_string(),
            r.hopf_defect.to_string(),
            r.trace_a.to_string(),
            r.flags.clone(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

fn run_crosscheck(cli: &Cli) -> Outcome {
    let d = CrosscheckConfig::default();
    let cfg = CrosscheckConfig {
        grid: cli.grid.unwrap_or(d.grid),
        intrinsic_step: cli.step.unwrap_or(d.intrinsic_step),
        shape: d.shape,
        tol: cli.tol.unwrap_or(CROSSCHECK_TOL) * cli.tol_scale(),
        parallel: !cli.sequential,
    };
    let mut reports = crosscheck(&cfg)?;
    reports.insert(0, self_check(cli));
    let config = json!({ "grid": cfg.grid, "step": cfg.intrinsic_step, "tol": cfg.tol });
    emit(cli, RunReport::new("crosscheck", config, reports))
}
