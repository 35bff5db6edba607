use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Horizontalized chart partials do not span a 3-dimensional space.
    #[error("rank-deficient frame: smallest Gram-Schmidt remainder {remainder:.3e} below {threshold:.1e}")]
    RankDeficient { remainder: f64, threshold: f64 },

    #[error("shape operator asymmetry {asymmetry:.3e} exceeds bound {bound:.1e}")]
    AsymmetryExceeded { asymmetry: f64, bound: f64 },

    /// `ξ` is (numerically) principal, so the non-Hopf basis does not exist.
    #[error("Hopf point: hopf defect {beta:.3e} <= tolerance {tol:.1e}")]
    HopfPoint { beta: f64, tol: f64 },

    #[error("no sign change of {what} on the bracket [{lo}, {hi}]")]
    NoRoot { what: &'static str, lo: f64, hi: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by the zero polynomial")]
    ZeroDenominator,

    #[error("degenerate resultant input: {0}")]
    Degenerate(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
