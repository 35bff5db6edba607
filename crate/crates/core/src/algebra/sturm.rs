//! Dense univariate polynomials over `Q` and Sturm root counting.

use num_traits::{Signed, Zero};

use super::{MPoly, Monomial, Rational, Var};
use crate::{Error, Result};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Views a polynomial in the single variable `v` as univariate.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Result<Self> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(v) as usize + 1];
        for (m, c) in p.terms() {
            if *m != Monomial::var(v, m.exponent(v)) {
                return Err(Error::Domain(format!(
                    "polynomial {p} is not univariate in {}",
                    v.name()
                )));
            }
            coeffs[m.exponent(v) as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        MPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(v, k as u16), c.clone())),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.0.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let l = l.clone();
                UPoly(self.0.iter().map(|c| c / &l).collect())
            }
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_rem(&g).0
        }
    }

    /// Sign of the polynomial at `b` (with limits at the infinities).
    fn sign_at(&self, b: &Bound) -> i32 {
        let Some(d) = self.degree() else { return 0 };
        let lead = self.0[d].signum();
        let lead = if lead.is_positive() { 1 } else { -1 };
        match b {
            Bound::PosInf => lead,
            Bound::NegInf => {
                if d % 2 == 0 {
                    lead
                } else {
                    -lead
                }
            }
            Bound::Finite(x) => {
                let v = self.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// An interval endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn int(n: i64) -> Self {
        Bound::Finite(Rational::from_integer(n.into()))
    }
}

/// `p₀ = p, p₁ = p', pₖ₊₁ = −rem(pₖ₋₁, pₖ)` until the remainder vanishes.
pub fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![p.clone()];
    if p.is_zero() {
        return seq;
    }
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            return seq;
        }
        seq.push(r.neg());
    }
}

fn variations(seq: &[UPoly], at: &Bound) -> usize {
    let signs: Vec<i32> = seq
        .iter()
        .map(|p| p.sign_at(at))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &UPoly, lo: &Bound, hi: &Bound) -> usize {
    if p.is_zero() {
        return 0;
    }
    let sf = p.square_free();
    let seq = sturm_sequence(&sf);
    // V(lo) − V(hi) counts roots in (lo, hi]
    let in_half_open = variations(&seq, lo).saturating_sub(variations(&seq, hi));
    let at_hi = matches!(hi, Bound::Finite(_)) && sf.sign_at(hi) == 0;
    in_half_open.saturating_sub(usize::from(at_hi))
}

/// `b² − 4ac` of a quadratic; `None` for other degrees.
pub fn discriminant_quadratic(p: &UPoly) -> Option<Rational> {
    if p.degree() != Some(2) {
        return None;
    }
    let [c, b, a] = [&p.0[0], &p.0[1], &p.0[2]];
    Some(b * b - Rational::from_integer(4.into()) * a * c)
}

/// True when `p` is a quadratic with positive leading coefficient and
/// negative discriminant, hence positive on all of `R`.
pub fn positive_definite_quadratic(p: &UPoly) -> bool {
    discriminant_quadratic(p).is_some_and(|d| d.is_negative())
        && p.leading().is_some_and(|l| l.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all() -> (Bound, Bound) {
        (Bound::NegInf, Bound::PosInf)
    }

    #[test]
    fn sqrt_two_in_unit_interval() {
        let p = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &Bound::int(0), &Bound::int(2)), 1);
        let (lo, hi) = all();
        assert_eq!(sturm_count(&p, &lo, &hi), 2);
    }

    #[test]
    fn definite_quadratic_has_no_roots() {
        let p = UPoly::from_ints(&[15, 12, 8]);
        let (lo, hi) = all();
        assert_eq!(sturm_count(&p, &lo, &hi), 0);
        assert_eq!(discriminant_quadratic(&p), Some(Rational::from_integer((-336).into())));
        assert!(positive_definite_quadratic(&p));
    }

    #[test]
    fn cubic_with_one_real_root() {
        let p = UPoly::from_ints(&[0, 1, 0, 1]);
        let (lo, hi) = all();
        assert_eq!(sturm_count(&p, &lo, &hi), 1);
    }

    #[test]
    fn repeated_roots_count_once_and_open_endpoints_are_excluded() {
        // (x − 1)²(x + 2)
        let p = UPoly::from_ints(&[-1, 1]).mul(&UPoly::from_ints(&[-1, 1])).mul(&UPoly::from_ints(&[2, 1]));
        let (lo, hi) = all();
        assert_eq!(sturm_count(&p, &lo, &hi), 2);
        assert_eq!(sturm_count(&p, &Bound::int(-2), &Bound::int(1)), 0);
        assert_eq!(sturm_count(&p, &Bound::int(-3), &Bound::int(1)), 1);
        assert_eq!(sturm_count(&p, &Bound::int(-2), &Bound::int(2)), 1);
    }

    #[test]
    fn division_identity() {
        let a = UPoly::from_ints(&[3, -1, 4, 1, -5]);
        let b = UPoly::from_ints(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b);
        let back = q.mul(&b);
        let sum = UPoly::new(
            (0..a.coeffs().len())
                .map(|k| {
                    back.coeffs().get(k).cloned().unwrap_or_default() + r.coeffs().get(k).cloned().unwrap_or_default()
                })
                .collect(),
        );
        assert_eq!(sum, a);
    }

    proptest! {
        #[test]
        fn counts_match_distinct_linear_factors(
            roots in proptest::collection::btree_set(-20i64..20, 1..7),
            den in 1i64..4,
            lo in -25i64..0,
            width in 1i64..40,
        ) {
            let roots: Vec<Rational> = roots.into_iter().map(|r| Rational::new(r.into(), den.into())).collect();
            let p = roots.iter().fold(UPoly::from_ints(&[1]), |acc, r| {
                acc.mul(&UPoly::new(vec![-r.clone(), Rational::from_integer(1.into())]))
            });
            let (a, b) = (Rational::from_integer(lo.into()), Rational::from_integer((lo + width).into()));
            let expected = roots.iter().filter(|r| **r > a && **r < b).count();
            prop_assert_eq!(sturm_count(&p, &Bound::Finite(a), &Bound::Finite(b)), expected);
        }
    }
}
