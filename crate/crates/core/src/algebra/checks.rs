//! The exact checks of the elimination chain.
//!
//! Every check works on transcribed displays from [`constants`] and either
//! finds the claimed identity to hold as an equality of polynomials, or
//! returns the nonzero remainder.

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use super::constants::{self, Relation};
use super::{
    discriminant_quadratic, parse_expr, parse_poly, sturm_count, sylvester_resultant, Bound, MPoly, Rational,
    RationalExpr, UPoly, Var,
};
use crate::Result;

pub const CHECK_NAMES: [&str; 6] = ["kappa", "f-emergence", "f2", "resultant", "mu1", "mu0"];

/// Outcome of one exact check.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub name: &'static str,
    pub passed: bool,
    /// The check could not run (parse or degeneracy error).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub errored: bool,
    /// `None` when every compared difference is the zero polynomial.
    pub remainder: Option<String>,
    pub details: Value,
}

impl Verdict {
    fn new(name: &'static str, failures: Vec<String>, details: Value) -> Self {
        let passed = failures.is_empty();
        Verdict {
            name,
            passed,
            errored: false,
            remainder: (!passed).then(|| failures.join("; ")),
            details,
        }
    }

    fn errored(name: &'static str, err: crate::Error) -> Self {
        Verdict {
            name,
            passed: false,
            errored: true,
            remainder: Some(format!("error: {err}")),
            details: Value::Null,
        }
    }
}

fn d_poly() -> MPoly {
    parse_poly("(mu - gamma)^2 + beta^2").expect("static display")
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Numerator of `e` over the fixed denominator `den`; `e.den()` must
/// divide `den`.
fn over(e: &RationalExpr, den: &MPoly) -> Option<MPoly> {
    Some(e.num() * &den.div_exact(e.den())?)
}

/// Writes `n = c · ∏ sᵢ^{kᵢ} · target`, stripping each factor `sᵢ` as often
/// as it divides. `diff` is `n / ∏ sᵢ^{kᵢ} − c · target`, zero on success.
#[derive(Debug, Clone)]
pub struct Proportionality {
    pub constant: Rational,
    pub powers: Vec<u32>,
    pub diff: MPoly,
}

pub fn proportionality(n: &MPoly, target: &MPoly, strip: &[MPoly]) -> Proportionality {
    let mut rest = n.clone();
    let mut powers = Vec::with_capacity(strip.len());
    for s in strip {
        let (k, r) = rest.strip_factor(s);
        powers.push(k);
        rest = r;
    }
    let constant = match (rest.leading_term(), target.leading_term()) {
        (Some((_, a)), Some((_, b))) => a / b,
        _ => Rational::zero(),
    };
    let diff = &rest - &target.scale(&constant);
    Proportionality { constant, powers, diff }
}

fn diff_report(diff: &MPoly) -> Value {
    json!({
        "terms": diff.len(),
        "difference": diff.to_string(),
    })
}

fn substitute_kappas(e: &RationalExpr, kappa1: &RationalExpr, kappa3: &RationalExpr) -> Result<RationalExpr> {
    e.substitute(Var::Kappa1, kappa1)?.substitute(Var::Kappa3, kappa3)
}

// ---------------------------------------------------------------- kappa

/// κ₁ and κ₃ as displayed solve both linear Codazzi relations, and they turn
/// the Codazzi forms of e₃β, e₃γ into the displayed ones.
pub fn check_kappa() -> Verdict {
    check_kappa_with(constants::KAPPA1.rhs)
}

/// [`check_kappa`] with a substitute display for κ₁.
pub fn check_kappa_with(kappa1_display: &str) -> Verdict {
    const NAME: &str = "kappa";
    let run = || -> Result<Verdict> {
        let k1 = parse_expr(kappa1_display)?;
        let k3 = constants::KAPPA3.rhs_expr()?;
        let mut failures = Vec::new();
        let mut record = |label: &str, e: RationalExpr| {
            if !e.is_zero() {
                failures.push(format!("{label}: {}", e.num()));
            }
            e.is_zero()
        };
        let codazzi = record(
            "codazzi-kappa",
            substitute_kappas(&constants::CODAZZI_KAPPA.residual()?, &k1, &k3)?,
        );
        let eliminated = record(
            "kappa-eliminated",
            substitute_kappas(&constants::KAPPA_ELIMINATED.residual()?, &k1, &k3)?,
        );
        // the two Codazzi forms of e₃γ differ by the eliminated relation
        let alt_gap = &(&constants::CODAZZI_E3_GAMMA.rhs_expr()? - &constants::CODAZZI_E3_GAMMA_ALT.rhs_expr()?)
            - &constants::KAPPA_ELIMINATED.residual()?;
        let elimination = record("e3gamma-elimination", alt_gap);
        let e3b = record(
            "e3beta",
            &substitute_kappas(&constants::CODAZZI_E3_BETA.rhs_expr()?, &k1, &k3)? - &constants::E3_BETA.rhs_expr()?,
        );
        let e3g = record(
            "e3gamma",
            &substitute_kappas(&constants::CODAZZI_E3_GAMMA_ALT.rhs_expr()?, &k1, &k3)?
                - &constants::E3_GAMMA.rhs_expr()?,
        );
        let details = json!({
            "clearedDenominator": d_poly().to_string(),
            "codazziKappa": codazzi,
            "kappaEliminated": eliminated,
            "e3gammaElimination": elimination,
            "e3betaDisplay": e3b,
            "e3gammaDisplay": e3g,
        });
        Ok(Verdict::new(NAME, failures, details))
    };
    run().unwrap_or_else(|e| Verdict::errored(NAME, e))
}

// ---------------------------------------------------------- f emergence

/// Cleared numerator of `rel`'s residual after `e3beta`, `e3gamma` are
/// replaced by their displayed values over `D`, with the cleared power.
fn substitute_e3(poly: &MPoly, d: &MPoly) -> Result<(MPoly, u32)> {
    let b = over(&constants::E3_BETA.rhs_expr()?, d).ok_or_else(|| den_mismatch("e3beta"))?;
    let g = over(&constants::E3_GAMMA.rhs_expr()?, d).ok_or_else(|| den_mismatch("e3gamma"))?;
    Ok(poly.substitute_common(&[(Var::E3Beta, b), (Var::E3Gamma, g)], d))
}

fn den_mismatch(what: &str) -> crate::Error {
    crate::Error::Degenerate(format!("{what} is not a quotient over (mu - gamma)^2 + beta^2"))
}

fn poly_of(rel: &Relation) -> Result<MPoly> {
    let r = rel.residual()?;
    if !r.is_polynomial() {
        return Err(crate::Error::Degenerate(format!("{} is not polynomial", rel.name)));
    }
    Ok(r.num().clone())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Emergence {
    pub c: Rational,
    pub k: u32,
    pub verdict: Verdict,
}

/// Substituting e₃β, e₃γ into the Gauss relation leaves `c·Dᵏ·(μ−γ)·f`.
pub fn check_f_emergence() -> Emergence {
    const NAME: &str = "f-emergence";
    let run = || -> Result<Emergence> {
        let d = d_poly();
        let g1 = poly_of(&constants::G1)?;
        let (n, cleared) = substitute_e3(&g1, &d)?;
        let f = parse_poly(constants::F)?;
        let mu_minus_gamma = parse_poly("mu - gamma")?;
        let target = &mu_minus_gamma * &f;
        let prop = proportionality(&n, &target, std::slice::from_ref(&d));
        let mut failures = Vec::new();
        if !prop.diff.is_zero() {
            failures.push(format!("numerator / (c D^k) - (mu - gamma) f = {}", prop.diff));
        }
        let on_diagonal = n.substitute(Var::Mu, &RationalExpr::from(Var::Gamma));
        if !on_diagonal.is_zero() {
            failures.push(format!("numerator at mu = gamma: {}", on_diagonal.num()));
        }

        // the display g1 is D² times the Gauss relation with κ₁, κ₃ and
        // e₃κ₁ = ∂κ₁/∂β·e₃β + ∂κ₁/∂γ·e₃γ substituted
        let k1 = constants::KAPPA1.rhs_expr()?;
        let k3 = constants::KAPPA3.rhs_expr()?;
        let e3k1 = &(&k1.derivative(Var::Beta) * &RationalExpr::from(Var::E3Beta))
            + &(&k1.derivative(Var::Gamma) * &RationalExpr::from(Var::E3Gamma));
        let gauss = substitute_kappas(&constants::GAUSS_E3_KAPPA1.residual()?, &k1, &k3)?
            .substitute(Var::E3Kappa1, &e3k1)?;
        let scaled = RationalExpr::from_parts(g1.clone(), d.pow(2))?;
        let chain = &scaled - &gauss;
        if !chain.is_zero() {
            failures.push(format!("g1 / D^2 - gauss relation: {}", chain.num()));
        }
        let k = prop.powers[0];
        let verdict = Verdict::new(
            NAME,
            failures,
            json!({
                "c": prop.constant.to_string(),
                "k": k,
                "clearedPower": cleared,
                "numeratorTerms": n.len(),
                "gaussChainRule": chain.is_zero(),
            }),
        );
        Ok(Emergence {
            c: prop.constant,
            k,
            verdict,
        })
    };
    run().unwrap_or_else(|e| Emergence {
        c: Rational::zero(),
        k: 0,
        verdict: Verdict::errored(NAME, e),
    })
}

// -------------------------------------------------------------------- f2

#[derive(Debug, Clone, PartialEq)]
pub struct Derivative {
    pub c: Rational,
    /// Power of β in the proportionality factor.
    pub beta_power: u32,
    /// Power of D in the proportionality factor.
    pub k: u32,
    pub verdict: Verdict,
}

/// `e₃f = f_β·e₃β + f_γ·e₃γ` has cleared numerator `c′·βʲ·D^{k′}·g`.
pub fn check_f2() -> Derivative {
    check_f2_with(constants::G_DEG6)
}

/// [`check_f2`] against a substitute transcription of `g`.
pub fn check_f2_with(g_display: &str) -> Derivative {
    const NAME: &str = "f2";
    let run = || -> Result<Derivative> {
        let d = d_poly();
        let f = parse_poly(constants::F)?;
        let g = parse_poly(g_display)?;
        let e3f = &(&f.derivative(Var::Beta) * &MPoly::var(Var::E3Beta))
            + &(&f.derivative(Var::Gamma) * &MPoly::var(Var::E3Gamma));
        let (n, cleared) = substitute_e3(&e3f, &d)?;
        let prop = proportionality(&n, &g, &[MPoly::var(Var::Beta), d]);
        let failures = if prop.diff.is_zero() {
            Vec::new()
        } else {
            vec![format!("{} differing terms", prop.diff.len())]
        };
        let mut details = json!({
            "c": prop.constant.to_string(),
            "betaPower": prop.powers[0],
            "k": prop.powers[1],
            "clearedPower": cleared,
            "bReadAsBeta": true,
        });
        if !prop.diff.is_zero() {
            details["mismatch"] = diff_report(&prop.diff);
        }
        Ok(Derivative {
            c: prop.constant,
            beta_power: prop.powers[0],
            k: prop.powers[1],
            verdict: Verdict::new(NAME, failures, details),
        })
    };
    run().unwrap_or_else(|e| Derivative {
        c: Rational::zero(),
        beta_power: 0,
        k: 0,
        verdict: Verdict::errored(NAME, e),
    })
}

// ------------------------------------------------------------- resultant

#[derive(Debug, Clone, PartialEq)]
pub struct ResultantCheck {
    pub resultant: MPoly,
    /// `+1` or `−1` if the computed resultant is `±` the display, else 0.
    pub sign: i32,
    pub verdict: Verdict,
}

/// `Res_γ(f, g)` (f-rows first) equals the displayed product up to sign.
pub fn check_resultant() -> ResultantCheck {
    const NAME: &str = "resultant";
    let run = || -> Result<ResultantCheck> {
        let f = parse_poly(constants::F)?;
        let g = parse_poly(constants::G_DEG6)?;
        let expected = parse_poly(constants::RESULTANT)?;
        let res = sylvester_resultant(&f, &g, Var::Gamma)?;
        let sign = if res == expected {
            1
        } else if res == -&expected {
            -1
        } else {
            0
        };
        let failures = if sign == 0 {
            vec![format!("Res - display = {}", &res - &expected)]
        } else {
            Vec::new()
        };
        let details = json!({
            "sign": sign,
            "convention": "Sylvester determinant, f rows first",
            "resultant": res.to_string(),
            "terms": res.len(),
        });
        Ok(ResultantCheck {
            resultant: res,
            sign,
            verdict: Verdict::new(NAME, failures, details),
        })
    };
    run().unwrap_or_else(|e| ResultantCheck {
        resultant: MPoly::zero(),
        sign: 0,
        verdict: Verdict::errored(NAME, e),
    })
}

// ------------------------------------------------------------------- mu1

fn univariate(p: &MPoly, v: Var) -> Result<UPoly> {
    UPoly::from_mpoly(p, v)
}

/// The μ = 1 reductions and the uniqueness of their common zero (0, 1).
pub fn check_mu1() -> Verdict {
    const NAME: &str = "mu1";
    let run = || -> Result<Verdict> {
        let one = rat(1);
        let f1 = parse_poly(constants::F)?.specialize(Var::Mu, &one);
        let g1 = parse_poly(constants::G_DEG6)?.specialize(Var::Mu, &one);
        let rf = parse_poly(constants::MU1_F)?;
        let rg = parse_poly(constants::MU1_G)?;
        let circle = parse_poly("(gamma - 1)^2 + beta^2")?;
        let mut failures = Vec::new();

        let f_quot = f1.div_exact(&rf);
        match &f_quot {
            Some(q) if *q == circle => {}
            Some(q) => failures.push(format!("f|mu=1 / display has cofactor {q}")),
            None => failures.push("f|mu=1 not divisible by its reduced display".into()),
        }
        let g_quot = g1.div_exact(&rg);
        if g_quot.is_none() {
            failures.push("g|mu=1 not divisible by its reduced display".into());
        }

        let at = [(Var::Beta, rat(0)), (Var::Gamma, rat(1))];
        let f_zero = rf.eval(&at).is_zero();
        let g_zero = rg.eval(&at).is_zero();
        if !(f_zero && g_zero) {
            failures.push("(beta, gamma) = (0, 1) is not a common zero".into());
        }

        // positivity certificate: rg = 8β⁴ + q₂(γ)β² + (γ−1)²q₀(γ)
        let by_beta = rg.coefficients_in(Var::Beta);
        let lead_ok = by_beta.len() == 5
            && by_beta[4] == MPoly::int(8)
            && by_beta[1].is_zero()
            && by_beta[3].is_zero();
        if !lead_ok {
            failures.push("display is not 8 beta^4 + q2 beta^2 + q0 in beta".into());
        }
        let q2 = univariate(by_beta.get(2).unwrap_or(&MPoly::zero()), Var::Gamma)?;
        let q0 = by_beta
            .first()
            .and_then(|c| c.div_exact(&parse_poly("(gamma - 1)^2").ok()?))
            .ok_or_else(|| crate::Error::Degenerate("constant term lacks (gamma - 1)^2".into()))?;
        let q0 = univariate(&q0, Var::Gamma)?;
        let disc2 = discriminant_quadratic(&q2);
        let disc0 = discriminant_quadratic(&q0);
        for (label, q, disc) in [("q2", &q2, &disc2), ("q0", &q0, &disc0)] {
            let positive = disc.as_ref().is_some_and(|d| *d < Rational::zero())
                && q.leading().is_some_and(|l| *l > Rational::zero());
            if !positive {
                failures.push(format!("{label} is not positive definite"));
            }
        }
        // with β = 0 the only real zero is γ = 1
        let at_beta0 = univariate(&rg.specialize(Var::Beta, &rat(0)), Var::Gamma)?;
        let roots_beta0 = sturm_count(&at_beta0, &Bound::NegInf, &Bound::PosInf);
        if roots_beta0 != 1 || !at_beta0.eval(&one).is_zero() {
            failures.push(format!("display at beta = 0 has {roots_beta0} real roots"));
        }

        let details = json!({
            "fCofactor": f_quot.map(|q| q.to_string()),
            "gCofactor": g_quot.map(|q| q.to_string()),
            "commonZero": [0, 1],
            "discriminantBeta2Coefficient": disc2.map(|d| d.to_string()),
            "discriminantConstantFactor": disc0.map(|d| d.to_string()),
            "realRootsAtBeta0": roots_beta0,
        });
        Ok(Verdict::new(NAME, failures, details))
    };
    run().unwrap_or_else(|e| Verdict::errored(NAME, e))
}

// ------------------------------------------------------------------- mu0

/// Sample values of β for the Sturm counts of the μ = 0 case.
pub const MU0_BETA_SAMPLES: [(i64, i64); 7] = [(-3, 1), (-1, 2), (0, 1), (1, 3), (1, 1), (7, 5), (10, 1)];

/// f at μ = 0 is `γ(β² + γ² + 1)`, whose only real zero in γ is 0.
pub fn check_mu0() -> Verdict {
    const NAME: &str = "mu0";
    let run = || -> Result<Verdict> {
        let f0 = parse_poly(constants::F)?.specialize(Var::Mu, &Rational::zero());
        let display = parse_poly(constants::MU0_F)?;
        let mut failures = Vec::new();
        if f0 != display {
            failures.push(format!("f|mu=0 - display = {}", &f0 - &display));
        }
        let factor = parse_poly("gamma^2 + beta^2 + 1")?;
        let mut samples = Vec::new();
        for (p, q) in MU0_BETA_SAMPLES {
            let b = Rational::new(p.into(), q.into());
            let fac = univariate(&factor.specialize(Var::Beta, &b), Var::Gamma)?;
            let whole = univariate(&f0.specialize(Var::Beta, &b), Var::Gamma)?;
            let (nf, nw) = (
                sturm_count(&fac, &Bound::NegInf, &Bound::PosInf),
                sturm_count(&whole, &Bound::NegInf, &Bound::PosInf),
            );
            if nf != 0 || nw != 1 || !whole.eval(&Rational::zero()).is_zero() {
                failures.push(format!("beta = {b}: {nf} roots of the factor, {nw} of f"));
            }
            samples.push(json!({ "beta": b.to_string(), "factorRoots": nf, "fRoots": nw }));
        }
        Ok(Verdict::new(NAME, failures, json!({ "samples": samples })))
    };
    run().unwrap_or_else(|e| Verdict::errored(NAME, e))
}

/// Runs one check by name.
pub fn run_check(name: &str) -> Option<Verdict> {
    Some(match name {
        "kappa" => check_kappa(),
        "f-emergence" => check_f_emergence().verdict,
        "f2" => check_f2().verdict,
        "resultant" => check_resultant().verdict,
        "mu1" => check_mu1(),
        "mu0" => check_mu0(),
        _ => return None,
    })
}

/// Runs the named checks (all of them for an empty list), in order.
pub fn run_checks(names: &[&str]) -> std::result::Result<Vec<Verdict>, String> {
    let names: Vec<&str> = if names.is_empty() { CHECK_NAMES.to_vec() } else { names.to_vec() };
    if let Some(bad) = names.iter().find(|n| !CHECK_NAMES.contains(n)) {
        return Err(format!("unknown check '{bad}'; expected one of {}", CHECK_NAMES.join(", ")));
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok(names.par_iter().map(|n| run_check(n).expect("validated")).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(names.iter().map(|n| run_check(n).expect("validated")).collect())
    }
}

pub fn run_all() -> Vec<Verdict> {
    run_checks(&[]).expect("all names are valid")
}
