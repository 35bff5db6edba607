use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{MPoly, Rational, Var};
use crate::{Error, Result};

/// Quotient of polynomials with a nonzero denominator whose leading
/// coefficient is positive.
///
/// Only cheap reductions are applied: constant denominators are folded into
/// the numerator and a denominator dividing the numerator exactly is
/// cancelled. No polynomial gcd is computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalExpr {
    num: MPoly,
    den: MPoly,
}

impl RationalExpr {
    pub fn from_parts(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return RationalExpr::from(MPoly::zero());
        }
        if let Some(c) = den.constant_value() {
            return RationalExpr::from(num.scale(&c.recip()));
        }
        if let Some(q) = num.div_exact(&den) {
            return RationalExpr::from(q);
        }
        let (num, den) = if den.leading_coefficient_sign() < 0 {
            (-num, -den)
        } else {
            (num, den)
        };
        RationalExpr { num, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == MPoly::one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::from_parts(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    /// Quotient rule.
    pub fn derivative(&self, v: Var) -> Self {
        let num = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::normalized(num, self.den.pow(2))
    }

    /// Substitutes `v ↦ expr` in numerator and denominator.
    pub fn substitute(&self, v: Var, expr: &RationalExpr) -> Result<Self> {
        let n = self.num.substitute(v, expr);
        let d = self.den.substitute(v, expr);
        n.checked_div(&d)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// True when `self` and `other` are the same rational function.
    pub fn equivalent(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn constant(c: Rational) -> Self {
        RationalExpr::from(MPoly::constant(c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den || (self.is_polynomial() && self.num.constant_value().is_some_and(|c| c.is_one()))
    }

    pub fn leading_sign(&self) -> i32 {
        self.num.leading_term().map_or(0, |(_, c)| if c.is_negative() { -1 } else { 1 })
    }
}

impl From<MPoly> for RationalExpr {
    fn from(p: MPoly) -> Self {
        RationalExpr {
            num: p,
            den: MPoly::one(),
        }
    }
}

impl From<Var> for RationalExpr {
    fn from(v: Var) -> Self {
        RationalExpr::from(MPoly::var(v))
    }
}

impl<'a> Add<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn add(self, rhs: &RationalExpr) -> RationalExpr {
        if self.den == rhs.den {
            return RationalExpr::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalExpr::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn sub(self, rhs: &RationalExpr) -> RationalExpr {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn mul(self, rhs: &RationalExpr) -> RationalExpr {
        RationalExpr::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalExpr {
    type Output = RationalExpr;

    fn neg(self) -> RationalExpr {
        RationalExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Panics on division by zero; use [`RationalExpr::checked_div`] otherwise.
impl<'a> Div<&'a RationalExpr> for &'a RationalExpr {
    type Output = RationalExpr;

    fn div(self, rhs: &RationalExpr) -> RationalExpr {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Zero for RationalExpr {
    fn zero() -> Self {
        RationalExpr::from(MPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RationalExpr {
    type Output = RationalExpr;

    fn add(self, rhs: RationalExpr) -> RationalExpr {
        &self + &rhs
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> RationalExpr {
        RationalExpr::from(x)
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalExpr::from_parts(MPoly::one(), MPoly::zero()),
            Err(Error::ZeroDenominator)
        );
        assert!(v(Var::Beta).checked_div(&RationalExpr::zero()).is_err());
    }

    #[test]
    fn denominators_are_normalized() {
        let r = RationalExpr::from_parts(MPoly::var(Var::Beta), -MPoly::var(Var::Gamma)).unwrap();
        assert_eq!(r.den(), &MPoly::var(Var::Gamma));
        assert_eq!(r.num(), &-MPoly::var(Var::Beta));
        let two = MPoly::int(2);
        let half_beta = RationalExpr::from_parts(MPoly::var(Var::Beta), two).unwrap();
        assert!(half_beta.is_polynomial());
    }

    #[test]
    fn cancellation_of_exact_denominators() {
        let g = v(Var::Gamma);
        let b = v(Var::Beta);
        let r = &(&(&g * &g) - &(&b * &b)) / &(&g - &b);
        assert!(r.is_polynomial());
        assert_eq!(r, &g + &b);
    }

    #[test]
    fn quotient_rule() {
        // d/dγ (1/γ) = −1/γ²
        let r = RationalExpr::from_parts(MPoly::one(), MPoly::var(Var::Gamma)).unwrap();
        let d = r.derivative(Var::Gamma);
        let expected = RationalExpr::from_parts(-MPoly::one(), MPoly::var(Var::Gamma).pow(2)).unwrap();
        assert!(d.equivalent(&expected));
    }
}
