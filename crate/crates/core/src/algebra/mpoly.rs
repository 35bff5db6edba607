use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{RationalExpr, Rational};

/// Number of algebra variables.
pub const NVARS: usize = 8;

/// Variables of the elimination, in term-order priority.
///
/// `E3Beta`, `E3Gamma`, `E3Kappa1` stand for the derivatives `e₃β`, `e₃γ`,
/// `e₃κ₁` before the derivative rules are substituted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Beta = 0,
    Gamma,
    Mu,
    Kappa1,
    Kappa3,
    E3Beta,
    E3Gamma,
    E3Kappa1,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Beta,
        Var::Gamma,
        Var::Mu,
        Var::Kappa1,
        Var::Kappa3,
        Var::E3Beta,
        Var::E3Gamma,
        Var::E3Kappa1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::Mu => "mu",
            Var::Kappa1 => "kappa1",
            Var::Kappa3 => "kappa3",
            Var::E3Beta => "e3beta",
            Var::E3Gamma => "e3gamma",
            Var::E3Kappa1 => "e3kappa1",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then exponents compared in variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var, exp: u16) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }

    fn with_exponent(&self, v: Var, exp: u16) -> Self {
        let mut e = self.0;
        e[v.index()] = exp;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients. No zero
/// coefficient is ever stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = MPoly::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.is_constant() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.degree_in(v) > 0)
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        MPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| (m.with_exponent(v, e - 1), c * Rational::from_integer(BigInt::from(e))))
        }))
    }

    /// Coefficients of `v⁰, v¹, …, v^deg` as polynomials free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exponent(v) as usize].add_term(m.with_exponent(v, 0), c.clone());
        }
        out
    }

    /// Substitutes a rational constant for `v`.
    pub fn specialize(&self, v: Var, value: &Rational) -> Self {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v) as i32;
            out.add_term(m.with_exponent(v, 0), c * num_traits::pow::Pow::pow(value, e));
        }
        out
    }

    /// Substitutes `v ↦ expr`. The result's denominator is `den^d` with
    /// `d = deg_v(self)`, the cleared power.
    pub fn substitute(&self, v: Var, expr: &RationalExpr) -> RationalExpr {
        let (num, power) = self.substitute_common(&[(v, expr.num().clone())], expr.den());
        RationalExpr::from_parts(num, expr.den().pow(power))
            .expect("denominator power of a nonzero polynomial is nonzero")
    }

    /// Simultaneous substitution `vᵢ ↦ nᵢ / den` over a shared denominator.
    /// Returns the cleared numerator and the power `d` of `den` cleared,
    /// where `d` is the largest combined degree in the substituted variables.
    pub fn substitute_common(&self, subs: &[(Var, MPoly)], den: &MPoly) -> (MPoly, u32) {
        let combined = |m: &Monomial| subs.iter().map(|(v, _)| m.exponent(*v) as u32).sum::<u32>();
        let d = self.terms.keys().map(combined).max().unwrap_or(0);
        let den_powers: Vec<MPoly> = std::iter::successors(Some(MPoly::one()), |p| Some(p * den))
            .take(d as usize + 1)
            .collect();
        let mut num_powers: Vec<Vec<MPoly>> = Vec::with_capacity(subs.len());
        for (v, n) in subs {
            let deg = self.degree_in(*v) as usize;
            num_powers.push(
                std::iter::successors(Some(MPoly::one()), |p| Some(p * n))
                    .take(deg + 1)
                    .collect(),
            );
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = den_powers[(d - combined(m)) as usize].clone();
            for (i, (v, _)) in subs.iter().enumerate() {
                factor = &factor * &num_powers[i][m.exponent(*v) as usize];
                rest = rest.with_exponent(*v, 0);
            }
            out = &out + &factor.mul_term(&rest, c);
        }
        (out, d)
    }

    pub fn eval(&self, values: &[(Var, Rational)]) -> Self {
        values
            .iter()
            .fold(self.clone(), |p, (v, x)| p.specialize(*v, x))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Number of times `factor` divides `self` exactly, and the cofactor.
    pub fn strip_factor(&self, factor: &MPoly) -> (u32, MPoly) {
        let mut k = 0;
        let mut rest = self.clone();
        if factor.is_constant() || rest.is_zero() {
            return (0, rest);
        }
        while let Some(q) = rest.div_exact(factor) {
            rest = q;
            k += 1;
        }
        (k, rest)
    }

    /// Positive gcd of integer numerators over lcm of denominators.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::zero()
        } else {
            Rational::new(num, den)
        }
    }

    pub fn leading_coefficient_sign(&self) -> i32 {
        match self.leading_term() {
            Some((_, c)) if c.is_positive() => 1,
            Some(_) => -1,
            None => 0,
        }
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// Terms in descending order, e.g. `2*mu*gamma^4 - 3*beta^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = Var::ALL
                .iter()
                .filter(|v| m.exponent(**v) > 0)
                .map(|v| match m.exponent(*v) {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn b() -> MPoly {
        MPoly::var(Var::Beta)
    }
    fn g() -> MPoly {
        MPoly::var(Var::Gamma)
    }
    fn m() -> MPoly {
        MPoly::var(Var::Mu)
    }

    pub(crate) fn small_poly() -> impl Strategy<Value = MPoly> {
        proptest::collection::vec((-5i64..=5, 0u16..3, 0u16..3, 0u16..2), 0..5).prop_map(|ts| {
            MPoly::from_terms(ts.into_iter().map(|(c, eb, eg, em)| {
                let mono = Monomial::var(Var::Beta, eb)
                    .mul(&Monomial::var(Var::Gamma, eg))
                    .mul(&Monomial::var(Var::Mu, em));
                (mono, q(c))
            }))
        })
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(g().pow(3).derivative(Var::Gamma), MPoly::int(3) * g().pow(2));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!((b() + g()) * (b() - g()), b().pow(2) - g().pow(2));
    }

    #[test]
    fn substitution_clears_denominator() {
        // μγ − 1 with γ ↦ 1/μ
        let p = m() * g() - MPoly::one();
        let expr = RationalExpr::from_parts(MPoly::one(), m()).unwrap();
        let r = p.substitute(Var::Gamma, &expr);
        assert!(r.num().is_zero());
        let (num, power) = p.substitute_common(&[(Var::Gamma, MPoly::one())], &m());
        assert!(num.is_zero());
        assert_eq!(power, 1);
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = b() + g() - b();
        assert_eq!(p.len(), 1);
        assert_eq!(p, g());
        assert!((b() - b()).is_zero());
    }

    #[test]
    fn graded_lex_order() {
        let p = b() + g().pow(2) + MPoly::one();
        let (lm, _) = p.leading_term().unwrap();
        assert_eq!(*lm, Monomial::var(Var::Gamma, 2));
        assert!(Monomial::var(Var::Beta, 1) > Monomial::var(Var::Gamma, 1));
    }

    #[test]
    fn display() {
        let p = MPoly::int(2) * m() * g().pow(4) - MPoly::int(3) * b().pow(2) + MPoly::one();
        assert_eq!(p.to_string(), "2*gamma^4*mu - 3*beta^2 + 1");
        assert_eq!(MPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division_and_factor_stripping() {
        let d = (m() - g()).pow(2) + b().pow(2);
        let p = d.pow(3) * (b() + MPoly::int(2));
        assert_eq!(p.div_exact(&d.pow(2)), Some(d.clone() * (b() + MPoly::int(2))));
        assert_eq!(p.strip_factor(&d), (3, b() + MPoly::int(2)));
        assert_eq!((b() + MPoly::one()).div_exact(&g()), None);
    }

    #[test]
    fn specialize_and_coefficients() {
        let p = g().pow(2) * b() + g() * MPoly::int(3) + m();
        let c = p.coefficients_in(Var::Gamma);
        assert_eq!(c, vec![m(), MPoly::int(3), b()]);
        assert_eq!(p.specialize(Var::Gamma, &q(2)), MPoly::int(4) * b() + MPoly::int(6) + m());
    }

    #[test]
    fn content_of_integer_polynomial() {
        let p = MPoly::int(6) * b() - MPoly::int(4);
        assert_eq!(p.content(), q(2));
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn product_divides_back(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
