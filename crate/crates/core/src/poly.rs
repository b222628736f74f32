//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// A polynomial with coefficients indexed by degree. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
#[derive(Clone)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients, constant term first.
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field), "coefficient field mismatch");
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The variable `x`.
    pub fn x(field: Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `c·x^d`.
    pub fn monomial(c: FieldElement, d: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); d];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// `a·x + b`.
    pub fn linear(a: FieldElement, b: FieldElement) -> Self {
        Self::new(a.field(), vec![b, a])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coefficients(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn coefficient_vector(&self, len: usize) -> Vec<FieldElement> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Multiplicity of `x` as a factor; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        let mut base = self.clone();
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

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = divisor.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        let quot_len = rem.len().saturating_sub(dd);
        let mut quot = vec![self.field.zero(); quot_len];
        for i in (0..quot_len).rev() {
            let top = &rem[i + dd] * &lc_inv;
            if top.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&top * dc);
            }
            quot[i] = top;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(self.field, quot), Polynomial::new(self.field, rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `f(g(x))`, by Horner's rule.
    pub fn compose(&self, g: &Polynomial) -> Result<Polynomial> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        let mut acc = Polynomial::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Polynomial::constant(c.clone());
        }
        Ok(acc)
    }

    /// `f(αx+β)`, expanded term by term with binomial coefficients.
    pub fn affine_substitute(&self, alpha: &FieldElement, beta: &FieldElement) -> Result<Polynomial> {
        if alpha.field() != self.field || beta.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        Ok(self.affine_substitute_unchecked(alpha, beta))
    }

    pub(crate) fn affine_substitute_unchecked(&self, alpha: &FieldElement, beta: &FieldElement) -> Polynomial {
        let field = self.field;
        let n = self.coeffs.len();
        let mut out = vec![field.zero(); n];
        let alpha_pows: Vec<FieldElement> = powers(alpha, n);
        let beta_pows: Vec<FieldElement> = powers(beta, n);
        // row holds C(i, j) reduced into the field
        let mut row = vec![field.one()];
        for (i, fi) in self.coeffs.iter().enumerate() {
            if i > 0 {
                let mut next = vec![field.one(); i + 1];
                for j in 1..i {
                    next[j] = &row[j - 1] + &row[j];
                }
                row = next;
            }
            if fi.is_zero() {
                continue;
            }
            for j in 0..=i {
                let term = &(&row[j] * &alpha_pows[j]) * &beta_pows[i - j];
                out[j] = &out[j] + &(fi * &term);
            }
        }
        Polynomial::new(field, out)
    }

    /// Canonical text using variable `var`.
    pub fn display_with(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

fn powers(a: &FieldElement, n: usize) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(n);
    let mut cur = a.field().one();
    for _ in 0..n {
        out.push(cur.clone());
        cur = &cur * a;
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'b> Add<&'b Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'b Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'b> Sub<&'b Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'b Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'b> Mul<&'b Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'b Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.field, out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial { (&self).$method(&rhs) }
        }
        impl<'b> $trait<&'b Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'b Polynomial) -> Polynomial { (&self).$method(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// Generators `t^j` of `K[t] ∩ {deg ≤ n}` for `t = x^p − β^{p−1}x`, the
/// polynomials fixed by `x ↦ x + β` in characteristic `p`.
pub fn additive_algebra_basis(beta: &FieldElement, n: usize) -> Result<Vec<Polynomial>> {
    let field = beta.field();
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::CharacteristicZero);
    }
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let p = p as usize;
    let t = &Polynomial::monomial(field.one(), p) - &Polynomial::monomial(beta.pow(p as u64 - 1), 1);
    let mut out = Vec::new();
    let mut power = Polynomial::one(field);
    for _ in 0..=n / p {
        out.push(power.clone());
        power = &power * &t;
    }
    Ok(out)
}

/// Shifted powers `(x − c)^m` for `m ∈ {e, e+s, e+2s, …}`, `m ≤ n`, expanded in
/// the monomial basis. `s = 0` means the single exponent `e`.
pub fn progression_basis(c: &FieldElement, e: usize, s: usize, n: usize) -> Vec<Polynomial> {
    let field = c.field();
    let shifted = Polynomial::linear(field.one(), -c);
    let exponents: Vec<usize> = if s == 0 {
        (e <= n).then_some(e).into_iter().collect()
    } else {
        (e..=n).step_by(s).collect()
    };
    exponents.into_iter().map(|m| shifted.pow(m as u64)).collect()
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: char,
}

/// Writes a coefficient so that it can sit directly in front of a variable.
pub(crate) fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &FieldElement) -> fmt::Result {
    if c.is_integer_literal() {
        write!(f, "{c}")
    } else {
        write!(f, "({c})")
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if d == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write_coefficient(f, &magnitude)?;
            }
            match d {
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{d}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with('x').fmt(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
