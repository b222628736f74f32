//! Semiconjugacy `f ∘ g = h ∘ f` for degree-one `g`, `h` and rational `f`.
//!
//! Conjugating by Möbius maps turns `g` and `h` into `x + 1`, `αx` or the
//! identity. With `F = u ∘ f ∘ v`, `G = v⁻¹ ∘ g ∘ v` and `H = u ∘ h ∘ u⁻¹`
//! the equation becomes `F ∘ G = H ∘ F`, and the nonconstant solutions are
//!
//! * `G = x + 1`, `H = x + δ`: `F = δx + ψ(x^p − x)` (`ψ ∈ K` in characteristic 0);
//! * `G = αx`, `H = γx` with `γ = α^e`: `F = x^e ψ(x^s)`, `s` the order of `α`
//!   (`s = 0` and `ψ` constant when the order is infinite);
//! * a scaling against a translation, in either direction: none.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{multiplicative_order, Field, FieldElement};
use crate::linalg::Matrix;
use crate::mobius::{MobiusMap, Point};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

/// `x`, `x + 1` or `αx` with `α ∉ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalLinear {
    Identity,
    Translation,
    Scaling(FieldElement),
}

impl CanonicalLinear {
    pub fn to_mobius(&self, field: Field) -> MobiusMap {
        match self {
            CanonicalLinear::Identity => MobiusMap::identity(field),
            CanonicalLinear::Translation => MobiusMap::translation(field.one()),
            CanonicalLinear::Scaling(a) => MobiusMap::scaling(a.clone()).expect("nonzero multiplier"),
        }
    }
}

/// `w` with `w⁻¹ ∘ g ∘ w = αx + β`, sending `∞` to the last fixed point of `g`.
fn move_fixed_point_to_infinity(g: &MobiusMap) -> Result<(MobiusMap, FieldElement, FieldElement)> {
    let field = g.field();
    let fixed = g.fixed_points()?;
    let w = match fixed.last() {
        None => return Err(Error::NoFixedPointInField),
        Some(Point::Infinity) => MobiusMap::identity(field),
        // ρ + 1/x
        Some(Point::Finite(rho)) => MobiusMap::new(rho.clone(), field.one(), field.one(), field.zero())?,
    };
    let (alpha, beta) = g.conjugate_by(&w).as_affine().expect("fixes infinity");
    Ok((w, alpha, beta))
}

/// `(v, C)` with `v⁻¹ ∘ g ∘ v = C`.
///
/// The last fixed point of `g` (canonical order, `∞` last) goes to `∞` and,
/// for a scaling, the first goes to `0`; this pins `α` against `α⁻¹`.
pub fn normalize_linear(g: &MobiusMap) -> Result<(MobiusMap, CanonicalLinear)> {
    let field = g.field();
    if g.is_identity() {
        return Ok((MobiusMap::identity(field), CanonicalLinear::Identity));
    }
    let (w, alpha, beta) = move_fixed_point_to_infinity(g)?;
    let (inner, canonical) = if alpha.is_one() {
        (MobiusMap::scaling(beta)?, CanonicalLinear::Translation)
    } else {
        let shift = &beta / &(&field.one() - &alpha);
        (MobiusMap::affine(field.one(), shift)?, CanonicalLinear::Scaling(alpha))
    };
    let v = w.compose(&inner);
    debug_assert_eq!(g.conjugate_by(&v), canonical.to_mobius(field));
    Ok((v, canonical))
}

/// The shape of `h` after conjugation: `x + δ` keeps its step.
#[derive(Clone, Debug)]
enum Target {
    Translation(FieldElement),
    Scaling(FieldElement),
}

/// `(u, H)` with `H = u ∘ h ∘ u⁻¹`. Translations are moved to `x + δ` without
/// rescaling; the identity counts as the translation by 0.
fn normalize_target(h: &MobiusMap) -> Result<(MobiusMap, Target)> {
    let field = h.field();
    if h.is_identity() {
        return Ok((MobiusMap::identity(field), Target::Translation(field.zero())));
    }
    let (v_h, canonical) = normalize_linear(h)?;
    match canonical {
        CanonicalLinear::Scaling(gamma) => Ok((v_h.inverse(), Target::Scaling(gamma))),
        _ => {
            let (w, _, delta) = move_fixed_point_to_infinity(h)?;
            Ok((w.inverse(), Target::Translation(delta)))
        }
    }
}

/// `x^p − x` in characteristic `p`.
fn artin_schreier(field: Field) -> Polynomial {
    let p = field.characteristic() as usize;
    &Polynomial::monomial(field.one(), p) - &Polynomial::x(field)
}

/// `ψ` with `ψ(x^p − x) = f`, for `f` invariant under `x ↦ x + 1`.
///
/// Writes `f = A/B` and solves `A · D(x^p − x) = B · C(x^p − x)` for `C`, `D`
/// with `deg C ≤ deg A / p`, `deg D ≤ deg B / p`.
pub fn rewrite_translation_invariant(f: &RationalFunction) -> Result<RationalFunction> {
    let field = f.field();
    let shift = RationalFunction::from_polynomial(Polynomial::linear(field.one(), field.one()));
    if f.compose(&shift)? != *f {
        return Err(Error::NotInvariant);
    }
    if f.is_constant() {
        return Ok(f.clone());
    }
    let p = field.characteristic() as usize;
    if p == 0 {
        return Err(Error::NotInvariant);
    }
    let t = artin_schreier(field);
    let (a, b) = (f.numerator(), f.denominator());
    let c_len = a.degree().expect("nonzero") / p + 1;
    let d_len = b.degree().expect("nonzero") / p + 1;
    let mut t_pows = vec![Polynomial::one(field)];
    for i in 1..c_len.max(d_len) {
        t_pows.push(&t_pows[i - 1] * &t);
    }
    let rows = (a.degree().unwrap_or(0) + b.degree().unwrap_or(0)) + p * c_len.max(d_len) + 1;
    let mut columns = Vec::new();
    for tp in &t_pows[..c_len] {
        columns.push((-&(b * tp)).coefficient_vector(rows));
    }
    for tp in &t_pows[..d_len] {
        columns.push((a * tp).coefficient_vector(rows));
    }
    let null = Matrix::from_columns(field, rows, &columns).nullspace();
    let vector = null
        .iter()
        .find(|v| v[c_len..].iter().any(|c| !c.is_zero()))
        .ok_or(Error::NotInvariant)?;
    let psi = RationalFunction::new(
        Polynomial::new(field, vector[..c_len].to_vec()),
        Polynomial::new(field, vector[c_len..].to_vec()),
    )?;
    if psi.compose(&t.into())? != *f {
        return Err(Error::NotInvariant);
    }
    Ok(psi)
}

/// `(e, s, ψ)` with `f = x^e ψ(x^s)`, for `f` satisfying `f(αx) = γ f(x)`
/// for some `γ`.
///
/// `e` is the valuation of `f` at 0 and `s` the order of `α` (0 if
/// infinite). `u = f / x^e` is then invariant under `x ↦ αx` with `u(0)`
/// finite and nonzero, so every exponent in its numerator and denominator is
/// a multiple of `s`.
pub fn extract_scaling_form(f: &RationalFunction, alpha: &FieldElement) -> Result<(i64, u64, RationalFunction)> {
    let field = f.field();
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let ratio = f.scale_argument(alpha)?.checked_div(f)?;
    if !ratio.is_constant() {
        return Err(Error::NotScalingRelated);
    }
    let e = f.valuation_at_zero()?;
    let s = multiplicative_order(alpha)?.period();
    let unit = f.checked_div(&RationalFunction::power_of_x(field, e))?;
    let psi = if s == 0 {
        unit.constant_value().map(RationalFunction::constant).ok_or(Error::NotScalingRelated)?
    } else {
        let compress = |p: &Polynomial| -> Result<Polynomial> {
            let mut out = Vec::new();
            for (i, c) in p.coefficients().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !(i as u64).is_multiple_of(s) {
                    return Err(Error::NotScalingRelated);
                }
                let j = (i as u64 / s) as usize;
                out.resize(j + 1, field.zero());
                out[j] = c.clone();
            }
            Ok(Polynomial::new(field, out))
        };
        RationalFunction::new(compress(unit.numerator())?, compress(unit.denominator())?)?
    };
    Ok((e, s, psi))
}

/// Which of the two nonempty cases a witness belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalFormKind {
    /// `core = δx + ψ(x^p − x)`.
    TransTrans { delta: FieldElement },
    /// `core = x^e ψ(x^s)`, `α^s = 1`.
    ScaleScale { alpha: FieldElement, e: i64, s: u64 },
}

/// Witness `f = u⁻¹ ∘ core ∘ v⁻¹`, together with `G = v⁻¹ ∘ g ∘ v` and
/// `H = u ∘ h ∘ u⁻¹` such that `core ∘ G = H ∘ core`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub kind: NormalFormKind,
    pub u: MobiusMap,
    pub v: MobiusMap,
    pub psi: RationalFunction,
    pub g_core: MobiusMap,
    pub h_core: MobiusMap,
}

/// `δx + ψ(x^p − x)`, or `δx + ψ` in characteristic 0.
fn translation_core(delta: &FieldElement, psi: &RationalFunction) -> Result<RationalFunction> {
    let field = delta.field();
    let linear = RationalFunction::from_polynomial(Polynomial::monomial(delta.clone(), 1));
    let part = if field.characteristic() == 0 {
        psi.constant_value().map(RationalFunction::constant).ok_or(Error::NotInvariant)?
    } else {
        psi.compose(&artin_schreier(field).into())?
    };
    Ok(&linear + &part)
}

/// `x^e ψ(x^s)`, where `x^0` is read as 1.
fn scaling_core(e: i64, s: u64, psi: &RationalFunction) -> Result<RationalFunction> {
    let field = psi.field();
    let inner = if s == 0 {
        RationalFunction::one(field)
    } else {
        RationalFunction::power_of_x(field, s as i64)
    };
    Ok(&RationalFunction::power_of_x(field, e) * &psi.compose(&inner)?)
}

/// `outer ∘ f ∘ inner` for Möbius maps `outer`, `inner`.
fn sandwich(outer: &MobiusMap, f: &RationalFunction, inner: &MobiusMap) -> Result<RationalFunction> {
    outer.to_rational_function().compose(&f.compose(&inner.to_rational_function())?)
}

impl NormalForm {
    pub fn core(&self) -> Result<RationalFunction> {
        match &self.kind {
            NormalFormKind::TransTrans { delta } => translation_core(delta, &self.psi),
            NormalFormKind::ScaleScale { e, s, .. } => scaling_core(*e, *s, &self.psi),
        }
    }

    /// `u⁻¹ ∘ core ∘ v⁻¹`.
    pub fn reconstruct(&self) -> Result<RationalFunction> {
        sandwich(&self.u.inverse(), &self.core()?, &self.v.inverse())
    }

    /// `(g, h) = (v ∘ G ∘ v⁻¹, u⁻¹ ∘ H ∘ u)`.
    pub fn reconstruct_maps(&self) -> (MobiusMap, MobiusMap) {
        let g = self.v.compose(&self.g_core).compose(&self.v.inverse());
        let h = self.u.inverse().compose(&self.h_core).compose(&self.u);
        (g, h)
    }
}

fn check_fields(f: Field, maps: &[&MobiusMap]) -> Result<()> {
    if maps.iter().any(|m| m.field() != f) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Verifies `f ∘ g = h ∘ f` and returns the normal-form witness.
pub fn decompose_semiconjugate(f: &RationalFunction, g: &MobiusMap, h: &MobiusMap) -> Result<NormalForm> {
    let field = f.field();
    check_fields(field, &[g, h])?;
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if f.compose(&g.to_rational_function())? != h.to_rational_function().compose(f)? {
        return Err(Error::NotSemiconjugate);
    }
    let (v, g_canon) = normalize_linear(g)?;
    let (u, target) = normalize_target(h)?;
    let big_f = sandwich(&u, f, &v)?;
    let g_core = g_canon.to_mobius(field);
    let g_multiplier = match &g_canon {
        CanonicalLinear::Translation => None,
        CanonicalLinear::Scaling(a) => Some(a.clone()),
        CanonicalLinear::Identity => Some(field.one()),
    };
    match (g_multiplier, target) {
        (None, Target::Translation(delta)) => {
            let rest = &big_f - &RationalFunction::from_polynomial(Polynomial::monomial(delta.clone(), 1));
            let psi = rewrite_translation_invariant(&rest)?;
            Ok(NormalForm {
                kind: NormalFormKind::TransTrans { delta: delta.clone() },
                u,
                v,
                psi,
                g_core,
                h_core: MobiusMap::translation(delta),
            })
        }
        // no nonconstant F has F(x + 1) = γF(x) with γ ≠ 1
        (None, Target::Scaling(_)) => Err(Error::NotSemiconjugate),
        // nor F(αx) = F(x) + δ with δ ≠ 0
        (Some(_), Target::Translation(delta)) if !delta.is_zero() => Err(Error::NotSemiconjugate),
        (Some(alpha), target) => {
            let gamma = match target {
                Target::Scaling(c) => c,
                Target::Translation(_) => field.one(),
            };
            let (e, s, psi) = extract_scaling_form(&big_f, &alpha)?;
            debug_assert_eq!(alpha.powi(e).ok(), Some(gamma.clone()));
            Ok(NormalForm {
                kind: NormalFormKind::ScaleScale { alpha, e, s },
                u,
                v,
                psi,
                g_core,
                h_core: MobiusMap::scaling(gamma)?,
            })
        }
    }
}

/// Free-parameter description of all nonconstant solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Empty { reason: String },
    /// `F = δx + ψ(x^p − x)`.
    Translation { delta: FieldElement },
    /// `F = x^e ψ(x^s)` for each listed `e`.
    Scaling { alpha: FieldElement, gamma: FieldElement, s: u64, exponents: Vec<i64> },
}

/// Every `f` with `f ∘ g = h ∘ f`, as `u⁻¹ ∘ F ∘ v⁻¹` over the free `ψ`
/// of degree at most `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    pub kind: FamilyKind,
    pub g: MobiusMap,
    pub h: MobiusMap,
    pub u: MobiusMap,
    pub v: MobiusMap,
    pub bound: usize,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Empty { reason } => write!(f, "empty ({reason})"),
            FamilyKind::Translation { delta } => {
                let linear = Polynomial::monomial(delta.clone(), 1);
                let linear = if linear.is_zero() { String::new() } else { format!("{linear} + ") };
                if delta.field().characteristic() == 0 {
                    write!(f, "F = {linear}c, c constant")
                } else {
                    write!(f, "F = {linear}ψ(x^{} - x)", delta.field().characteristic())
                }
            }
            FamilyKind::Scaling { s, exponents, .. } => {
                let es: Vec<String> = exponents.iter().map(i64::to_string).collect();
                if *s == 0 {
                    write!(f, "F = c·x^e, c constant, e in {{{}}}", es.join(", "))
                } else {
                    write!(f, "F = x^e ψ(x^{s}), e in {{{}}}", es.join(", "))
                }
            }
        }
    }
}

/// Describes every nonconstant rational `f` with `f ∘ g = h ∘ f`.
pub fn solve_semiconjugacy(g: &MobiusMap, h: &MobiusMap, bound: usize) -> Result<SolutionFamily> {
    let field = g.field();
    check_fields(field, &[h])?;
    let (v, g_canon) = normalize_linear(g)?;
    let (u, target) = normalize_target(h)?;
    let kind = match (&g_canon, &target) {
        (CanonicalLinear::Translation, Target::Translation(delta)) => FamilyKind::Translation { delta: delta.clone() },
        (CanonicalLinear::Translation, Target::Scaling(_)) => FamilyKind::Empty {
            reason: "F(x + 1) = γF(x) forces γ = 1".into(),
        },
        (_, Target::Translation(delta)) if !delta.is_zero() => FamilyKind::Empty {
            reason: "F(αx) = F(x) + δ has no nonconstant solution".into(),
        },
        _ => {
            let alpha = match &g_canon {
                CanonicalLinear::Scaling(a) => a.clone(),
                _ => field.one(),
            };
            let gamma = match &target {
                Target::Scaling(c) => c.clone(),
                Target::Translation(_) => field.one(),
            };
            let s = multiplicative_order(&alpha)?.period();
            let b = bound as i64;
            let mut exponents: Vec<i64> = (-b..=b).chain(0..s as i64).collect();
            exponents.sort();
            exponents.dedup();
            exponents.retain(|&e| alpha.powi(e).is_ok_and(|p| p == gamma));
            if exponents.is_empty() {
                FamilyKind::Empty { reason: format!("no exponent e in [-{bound}, {bound}] with α^e = γ") }
            } else {
                FamilyKind::Scaling { alpha, gamma, s, exponents }
            }
        }
    };
    Ok(SolutionFamily { kind, g: g.clone(), h: h.clone(), u, v, bound })
}

impl SolutionFamily {
    pub fn is_empty(&self) -> bool {
        matches!(self.kind, FamilyKind::Empty { .. })
    }

    /// The member for the given `ψ` (and `e`, defaulting to the first listed
    /// exponent in the scaling case).
    pub fn sample(&self, psi: &RationalFunction, e: Option<i64>) -> Result<RationalFunction> {
        if psi.degree() > self.bound {
            return Err(Error::InvalidParameter(format!("ψ has degree {} > {}", psi.degree(), self.bound)));
        }
        let core = match &self.kind {
            FamilyKind::Empty { reason } => return Err(Error::InvalidParameter(format!("family is empty: {reason}"))),
            FamilyKind::Translation { delta } => {
                if delta.field().characteristic() == 0 && !psi.is_constant() {
                    return Err(Error::InvalidParameter("ψ must be constant in characteristic 0".into()));
                }
                translation_core(delta, psi)?
            }
            FamilyKind::Scaling { alpha, gamma, s, exponents } => {
                let e = e.unwrap_or(exponents[0]);
                if alpha.powi(e)? != *gamma {
                    return Err(Error::InvalidParameter(format!("α^{e} differs from γ")));
                }
                if *s == 0 && !psi.is_constant() {
                    return Err(Error::InvalidParameter("ψ must be constant when α has infinite order".into()));
                }
                scaling_core(e, *s, psi)?
            }
        };
        let f = sandwich(&self.u.inverse(), &core, &self.v.inverse())?;
        if f.is_constant() {
            return Err(Error::ConstantFunction);
        }
        Ok(f)
    }

    /// Whether `f` is a nonconstant member.
    pub fn contains(&self, f: &RationalFunction) -> bool {
        decompose_semiconjugate(f, &self.g, &self.h).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expression;
    use crate::field::make_field;

    fn m(field: Field, e: [i64; 4]) -> MobiusMap {
        MobiusMap::new(field.from_i64(e[0]), field.from_i64(e[1]), field.from_i64(e[2]), field.from_i64(e[3]))
            .unwrap()
    }

    fn rf(text: &str, field: Field) -> RationalFunction {
        parse_expression(text, field).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let q = Field::Rational;
        let (v, c) = normalize_linear(&m(q, [1, 5, 0, 1])).unwrap();
        assert_eq!((v, c), (m(q, [5, 0, 0, 1]), CanonicalLinear::Translation));
        let (v, c) = normalize_linear(&m(q, [3, 2, 0, 1])).unwrap();
        assert_eq!((v, c), (m(q, [1, -1, 0, 1]), CanonicalLinear::Scaling(q.from_i64(3))));
        let (v, c) = normalize_linear(&MobiusMap::identity(q)).unwrap();
        assert!(v.is_identity());
        assert_eq!(c, CanonicalLinear::Identity);
        assert_eq!(normalize_linear(&m(q, [1, -1, 1, 1])), Err(Error::NoFixedPointInField));
    }

    #[test]
    fn normalize_non_affine() {
        let f5 = make_field("F5").unwrap();
        let g = m(f5, [1, -1, 1, 1]);
        let (v, c) = normalize_linear(&g).unwrap();
        assert_eq!(g.conjugate_by(&v), c.to_mobius(f5));
        assert!(matches!(c, CanonicalLinear::Scaling(_)));
        let q = Field::Rational;
        // parabolic: single fixed point at 1
        let g = m(q, [2, -1, 1, 0]);
        let (v, c) = normalize_linear(&g).unwrap();
        assert_eq!(c, CanonicalLinear::Translation);
        assert_eq!(g.conjugate_by(&v), c.to_mobius(q));
    }

    #[test]
    fn rewrite_examples() {
        let f3 = make_field("F3").unwrap();
        assert_eq!(rewrite_translation_invariant(&rf("x^3 - x", f3)).unwrap(), RationalFunction::x(f3));
        let f2 = make_field("F2").unwrap();
        assert_eq!(rewrite_translation_invariant(&rf("1/(x^2 + x)", f2)).unwrap(), rf("1/x", f2));
        let q = Field::Rational;
        assert_eq!(rewrite_translation_invariant(&rf("7", q)).unwrap(), rf("7", q));
        assert_eq!(rewrite_translation_invariant(&rf("x^2", f3)), Err(Error::NotInvariant));
    }

    #[test]
    fn scaling_form_examples() {
        let f5 = make_field("F5").unwrap();
        assert_eq!(
            extract_scaling_form(&rf("x^5", f5), &f5.from_i64(2)).unwrap(),
            (5, 4, RationalFunction::one(f5))
        );
        let q = Field::Rational;
        assert_eq!(extract_scaling_form(&rf("1/x", q), &q.from_i64(2)).unwrap(), (-1, 0, RationalFunction::one(q)));
        assert_eq!(
            extract_scaling_form(&rf("(x^6+1)/x^2", q), &q.from_i64(-1)).unwrap(),
            (-2, 2, rf("x^3 + 1", q))
        );
        assert_eq!(extract_scaling_form(&rf("x + 1", q), &q.from_i64(2)), Err(Error::NotScalingRelated));
    }

    #[test]
    fn decompose_examples() {
        let f3 = make_field("F3").unwrap();
        let nf = decompose_semiconjugate(&rf("x^3", f3), &m(f3, [1, 1, 0, 1]), &m(f3, [1, 1, 0, 1])).unwrap();
        assert_eq!(nf.kind, NormalFormKind::TransTrans { delta: f3.one() });
        assert!(nf.u.is_identity() && nf.v.is_identity());
        assert_eq!(nf.psi, RationalFunction::x(f3));
        assert_eq!(nf.reconstruct().unwrap(), rf("x^3", f3));

        let q = Field::Rational;
        let nf = decompose_semiconjugate(&rf("x^2", q), &m(q, [2, 0, 0, 1]), &m(q, [4, 0, 0, 1])).unwrap();
        assert_eq!(nf.kind, NormalFormKind::ScaleScale { alpha: q.from_i64(2), e: 2, s: 0 });
        assert_eq!(nf.psi, RationalFunction::one(q));

        let nf = decompose_semiconjugate(&rf("1/x", q), &m(q, [2, 0, 0, 1]), &m(q, [1, 0, 0, 2])).unwrap();
        assert_eq!(nf.kind, NormalFormKind::ScaleScale { alpha: q.from_i64(2), e: -1, s: 0 });
        assert_eq!(nf.reconstruct().unwrap(), rf("1/x", q));

        assert_eq!(
            decompose_semiconjugate(&rf("x^2", q), &m(q, [1, 1, 0, 1]), &m(q, [1, 1, 0, 1])),
            Err(Error::NotSemiconjugate)
        );
    }

    #[test]
    fn decompose_with_identity_target() {
        let f3 = make_field("F3").unwrap();
        let f = rf("(x^3 - x)^2", f3);
        let nf = decompose_semiconjugate(&f, &m(f3, [1, 1, 0, 1]), &MobiusMap::identity(f3)).unwrap();
        assert_eq!(nf.kind, NormalFormKind::TransTrans { delta: f3.zero() });
        assert_eq!(nf.reconstruct().unwrap(), f);
        let q = Field::Rational;
        let f = rf("x^2 + 1/x^2", q);
        let nf = decompose_semiconjugate(&f, &m(q, [-1, 0, 0, 1]), &MobiusMap::identity(q)).unwrap();
        assert_eq!(nf.reconstruct().unwrap(), f);
        assert_eq!(nf.reconstruct_maps(), (m(q, [-1, 0, 0, 1]), MobiusMap::identity(q)));
    }

    #[test]
    fn family_examples() {
        let f3 = make_field("F3").unwrap();
        let t = m(f3, [1, 1, 0, 1]);
        let fam = solve_semiconjugacy(&t, &t, 1).unwrap();
        assert_eq!(fam.kind, FamilyKind::Translation { delta: f3.one() });
        let f = fam.sample(&RationalFunction::x(f3), None).unwrap();
        assert_eq!(f, rf("x^3", f3));
        assert!(fam.contains(&f));

        let q = Field::Rational;
        assert!(solve_semiconjugacy(&m(q, [2, 0, 0, 1]), &m(q, [1, 1, 0, 1]), 3).unwrap().is_empty());
        assert!(solve_semiconjugacy(&m(q, [1, 1, 0, 1]), &m(q, [2, 0, 0, 1]), 3).unwrap().is_empty());

        let fam = solve_semiconjugacy(&m(q, [2, 0, 0, 1]), &m(q, [1, 0, 0, 2]), 2).unwrap();
        match &fam.kind {
            FamilyKind::Scaling { s, exponents, .. } => assert_eq!((*s, exponents.as_slice()), (0, &[-1][..])),
            other => panic!("unexpected {other:?}"),
        }
        let f = fam.sample(&RationalFunction::constant(q.from_i64(3)), None).unwrap();
        assert_eq!(f, rf("3/x", q));
        assert!(fam.sample(&RationalFunction::x(q), None).is_err());
    }
}
