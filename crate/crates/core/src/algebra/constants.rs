//! Transcribed displays of the elimination, one constant per display.
//!
//! Each display is kept as close to its original form as the expression
//! grammar allows (see [`parse_expr`](super::parse_expr)): implicit products
//! become `*`, braces become parentheses, and `e3beta`, `e3gamma`,
//! `e3kappa1` stand for the derivatives of β, γ, κ₁ along e₃. Nothing here
//! is simplified; the checks decide whether the displays are consistent.

use super::{parse_expr, RationalExpr};
use crate::Result;

/// A displayed equation `lhs = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

impl Relation {
    /// `lhs − rhs`.
    pub fn residual(&self) -> Result<RationalExpr> {
        Ok(&parse_expr(self.lhs)? - &parse_expr(self.rhs)?)
    }

    pub fn rhs_expr(&self) -> Result<RationalExpr> {
        parse_expr(self.rhs)
    }
}

/// Codazzi, X = e₂, Y = ξ, coefficient of e₃.
pub const CODAZZI_KAPPA: Relation = Relation {
    name: "codazzi-kappa",
    lhs: "beta*kappa1 + (mu - gamma)*kappa3",
    rhs: "beta^2 + gamma^2 - 1",
};

/// Codazzi, X = e₃, Y = ξ.
pub const CODAZZI_E3_BETA: Relation = Relation {
    name: "codazzi-e3beta",
    lhs: "e3beta",
    rhs: "mu^2 - 2*mu*gamma - kappa3*(mu - gamma) + beta^2 + 1",
};

/// Codazzi, X = e₃, Y = ξ (the display writes κ₃ as k₃).
pub const CODAZZI_E3_GAMMA: Relation = Relation {
    name: "codazzi-e3gamma",
    lhs: "e3gamma",
    rhs: "2*beta*mu + beta*gamma - beta*kappa3",
};

/// Codazzi, X = e₂, Y = e₃, coefficient of e₂.
pub const CODAZZI_E3_GAMMA_ALT: Relation = Relation {
    name: "codazzi-e3gamma-alt",
    lhs: "e3gamma",
    rhs: "-mu*kappa1 + kappa1*gamma + beta*gamma + 2*beta*mu",
};

/// Elimination of e₃γ between the two Codazzi expressions.
pub const KAPPA_ELIMINATED: Relation = Relation {
    name: "kappa-eliminated",
    lhs: "(mu - gamma)*kappa1 - beta*kappa3",
    rhs: "0",
};

pub const KAPPA1: Relation = Relation {
    name: "kappa1",
    lhs: "kappa1",
    rhs: "beta*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)",
};

pub const KAPPA3: Relation = Relation {
    name: "kappa3",
    lhs: "kappa3",
    rhs: "(mu - gamma)*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)",
};

/// Gauss, X = e₂, Y = Z = e₃, coefficient of e₂.
pub const GAUSS_E3_KAPPA1: Relation = Relation {
    name: "gauss-e3kappa1",
    lhs: "e3kappa1 - 2*mu*gamma - kappa1^2 - (gamma + mu)*kappa3 - 4",
    rhs: "0",
};

pub const E3_BETA: Relation = Relation {
    name: "e3beta",
    lhs: "e3beta",
    rhs: "(mu - 2*gamma)*mu + beta^2 + 1 - (mu - gamma)^2*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)",
};

pub const E3_GAMMA: Relation = Relation {
    name: "e3gamma",
    lhs: "e3gamma",
    rhs: "beta*(gamma + 2*mu) + (gamma - mu)*beta*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)",
};

/// The Gauss relation after κ₁, κ₃ are eliminated, with e₃β and e₃γ still
/// symbolic.
pub const G1: Relation = Relation {
    name: "g1",
    lhs: "((3*beta^2 + gamma^2 - 1)*((mu - gamma)^2 + beta^2) - 2*beta^2*(beta^2 + gamma^2 - 1))*e3beta \
          + (2*beta*gamma*((mu - gamma)^2 + beta^2) + 2*(mu - gamma)*beta*(beta^2 + gamma^2 - 1))*e3gamma \
          - 2*mu*gamma*((mu - gamma)^2 + beta^2)^2 - beta^2*(beta^2 + gamma^2 - 1)^2 \
          + (gamma^2 - mu^2)*(beta^2 + gamma^2 - 1)*((mu - gamma)^2 + beta^2) - 4*((mu - gamma)^2 + beta^2)^2",
    rhs: "0",
};

pub const F: &str = "2*mu*gamma^4 - (4*mu^2 - 1)*gamma^3 + (3*mu^2 + 4*beta^2 - 6)*mu*gamma^2 \
    - (mu^4 + (4*beta^2 - 7)*mu^2 - beta^2 - 1)*gamma \
    + (beta^2 - 2)*mu^3 + (2*beta^4 - 2*beta^2 - 1)*mu";

/// The degree-six polynomial in γ obtained by differentiating `f = 0`
/// along e₃. The `8*beta^2` in the γ³ coefficient resolves an ambiguous
/// symbol in the source; the f2 and resultant checks confirm the reading.
pub const G_DEG6: &str = "8*mu*gamma^6 - (24*mu^2 - 4)*gamma^5 + (30*mu^2 + 24*beta^2 - 15)*mu*gamma^4 \
    - (20*mu^4 + (48*beta^2 + 3)*mu^2 - 8*beta^2 - 3)*gamma^3 \
    + (7*mu^5 + (36*beta^2 + 45)*mu^3 + (24*beta^4 - 10*beta^2 - 2)*mu)*gamma^2 \
    - (mu^6 + (12*beta^2 + 44)*mu^4 + (24*beta^4 + 19*beta^2 + 2)*mu^2 - 4*beta^4 - 3*beta^2 + 1)*gamma \
    + (beta^2 + 13)*mu^5 + (6*beta^4 + 19*beta^2 + 1)*mu^3 + (8*beta^6 + 5*beta^4 - 2*beta^2 + 1)*mu";

/// Res_γ(f, g).
pub const RESULTANT: &str = "202500*(mu^2 - 1)^4*beta^4*mu^6*(4*mu^2*beta^2 + (mu^2 - 1)^2)^2";

/// `f = 0` reduced at μ = 1.
pub const MU1_F: &str = "2*beta^2 + 2*gamma^2 + gamma - 3";

/// The degree-six equation reduced at μ = 1.
pub const MU1_G: &str = "8*beta^4 + (16*gamma^2 - 4*gamma + 3)*beta^2 + (gamma - 1)^2*(8*gamma^2 + 12*gamma + 15)";

/// `f` at μ = 0.
pub const MU0_F: &str = "gamma*(beta^2 + gamma^2 + 1)";

pub const RELATIONS: [Relation; 11] = [
    CODAZZI_KAPPA,
    CODAZZI_E3_BETA,
    CODAZZI_E3_GAMMA,
    CODAZZI_E3_GAMMA_ALT,
    KAPPA_ELIMINATED,
    KAPPA1,
    KAPPA3,
    GAUSS_E3_KAPPA1,
    E3_BETA,
    E3_GAMMA,
    G1,
];
