//! Rational functions kept in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

/// `numerator / denominator` with `gcd = 1` and a monic denominator; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if numerator.field() != denominator.field() {
            return Err(Error::FieldMismatch);
        }
        if denominator.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        let field = numerator.field();
        if numerator.is_zero() {
            return Ok(Self::zero(field));
        }
        let g = numerator.gcd(&denominator)?;
        let (mut num, _) = numerator.div_rem(&g)?;
        let (mut den, _) = denominator.div_rem(&g)?;
        let lc = den.leading_coefficient().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { numerator: num, denominator: den })
    }

    pub fn zero(field: Field) -> Self {
        RationalFunction { numerator: Polynomial::zero(field), denominator: Polynomial::one(field) }
    }

    pub fn one(field: Field) -> Self {
        Self::from_polynomial(Polynomial::one(field))
    }

    pub fn x(field: Field) -> Self {
        Self::from_polynomial(Polynomial::x(field))
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let field = p.field();
        RationalFunction { numerator: p, denominator: Polynomial::one(field) }
    }

    /// `x^e` for any integer `e`.
    pub fn power_of_x(field: Field, e: i64) -> Self {
        let mono = Polynomial::monomial(field.one(), e.unsigned_abs() as usize);
        if e >= 0 {
            Self::from_polynomial(mono)
        } else {
            RationalFunction { numerator: Polynomial::one(field), denominator: mono }
        }
    }

    pub fn field(&self) -> Field {
        self.numerator.field()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.numerator)
    }

    pub fn is_constant(&self) -> bool {
        self.is_polynomial() && self.numerator.is_constant()
    }

    pub fn constant_value(&self) -> Option<FieldElement> {
        self.is_constant().then(|| self.numerator.coeff(0))
    }

    /// `max(deg num, deg den)`; constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0).max(self.denominator.degree().unwrap_or(0))
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        RationalFunction::new(&self.numerator * &rhs.denominator, &self.denominator * &rhs.numerator)
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        RationalFunction::one(self.field()).checked_div(self)
    }

    pub fn powi(&self, e: i64) -> Result<RationalFunction> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        RationalFunction::new(base.numerator.pow(k), base.denominator.pow(k))
    }

    /// Evaluates at a field element; `None` at a pole.
    pub fn eval(&self, at: &FieldElement) -> Option<FieldElement> {
        let den = self.denominator.eval(at);
        if den.is_zero() {
            return None;
        }
        Some(&self.numerator.eval(at) / &den)
    }

    /// `f(g(x))`.
    pub fn compose(&self, g: &RationalFunction) -> Result<RationalFunction> {
        if self.field() != g.field() {
            return Err(Error::FieldMismatch);
        }
        if let Some(c) = g.constant_value() {
            return self.eval(&c).map(RationalFunction::constant).ok_or(Error::ConstantPoleCollision);
        }
        // homogenize: N(P/Q)·Q^m / D(P/Q)·Q^m with m = max(deg N, deg D)
        let m = self.degree();
        let field = self.field();
        let mut p_pows = vec![Polynomial::one(field)];
        let mut q_pows = vec![Polynomial::one(field)];
        for i in 1..=m {
            p_pows.push(&p_pows[i - 1] * &g.numerator);
            q_pows.push(&q_pows[i - 1] * &g.denominator);
        }
        let homogenize = |poly: &Polynomial| {
            poly.coefficients()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(Polynomial::zero(field), |acc, (i, c)| {
                    &acc + &(&p_pows[i] * &q_pows[m - i]).scale(c)
                })
        };
        RationalFunction::new(homogenize(&self.numerator), homogenize(&self.denominator))
    }

    /// Order of vanishing at 0: multiplicity of `x` in the numerator minus
    /// that in the denominator.
    pub fn valuation_at_zero(&self) -> Result<i64> {
        let num = self.numerator.valuation().ok_or(Error::ZeroFunction)?;
        let den = self.denominator.valuation().expect("nonzero denominator");
        Ok(num as i64 - den as i64)
    }

    /// `f(αx)`, by scaling coefficients.
    pub fn scale_argument(&self, alpha: &FieldElement) -> Result<RationalFunction> {
        let scale = |p: &Polynomial| {
            let mut pw = alpha.field().one();
            let mut out = Vec::with_capacity(p.coefficients().len());
            for c in p.coefficients() {
                out.push(c * &pw);
                pw = &pw * alpha;
            }
            Polynomial::new(p.field(), out)
        };
        RationalFunction::new(scale(&self.numerator), scale(&self.denominator))
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl<'b> Add<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'b RationalFunction) -> RationalFunction {
        let num = &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator);
        RationalFunction::new(num, &self.denominator * &rhs.denominator).expect("nonzero denominator")
    }
}

impl<'b> Sub<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'b RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'b RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.numerator * &rhs.numerator, &self.denominator * &rhs.denominator)
            .expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }
}

impl RationalFunction {
    /// Canonical text using variable `var` in place of `x`.
    pub fn display_with(&self, var: char) -> String {
        let num = self.numerator.display_with(var).to_string();
        if self.is_polynomial() {
            return num;
        }
        let den = self.denominator.display_with(var).to_string();
        // a lone constant such as `t + 1` needs parentheses as much as a sum does
        let wrap = |p: &Polynomial, text: String| {
            if p.term_count() > 1 || (p.is_constant() && text.contains(' ')) {
                format!("({text})")
            } else {
                text
            }
        };
        format!("{}/{}", wrap(&self.numerator, num), wrap(&self.denominator, den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
