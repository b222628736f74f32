//! Polynomial solutions of `f(αx + β) = γ f(x) + δ` up to a degree bound.
//!
//! The solution set is affine: one particular solution plus the span of the
//! homogeneous solutions (`δ = 0`). [`solve_affine`] writes the space down in
//! closed form; [`solve_affine_by_peeling`] rebuilds it from leading-term
//! arguments alone. Both return a [`SolutionSpace`] in the same canonical
//! echelon form, so agreement is plain equality.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{discrete_log, multiplicative_order, Field, FieldElement};
use crate::poly::{additive_algebra_basis, progression_basis, Polynomial};

/// The coefficients `(α, β, γ, δ)` of `f(αx + β) = γ f(x) + δ`, with `α, γ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRelation {
    alpha: FieldElement,
    beta: FieldElement,
    gamma: FieldElement,
    delta: FieldElement,
}

impl AffineRelation {
    pub fn new(alpha: FieldElement, beta: FieldElement, gamma: FieldElement, delta: FieldElement) -> Result<Self> {
        let field = alpha.field();
        if [&beta, &gamma, &delta].iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        if gamma.is_zero() {
            return Err(Error::ZeroGamma);
        }
        Ok(AffineRelation { alpha, beta, gamma, delta })
    }

    pub fn from_i64s(field: Field, [a, b, c, d]: [i64; 4]) -> Result<Self> {
        Self::new(field.from_i64(a), field.from_i64(b), field.from_i64(c), field.from_i64(d))
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    pub fn gamma(&self) -> &FieldElement {
        &self.gamma
    }

    pub fn delta(&self) -> &FieldElement {
        &self.delta
    }

    /// The linear part `f ↦ f(αx + β) − γ f(x)`.
    pub fn linear_part(&self, f: &Polynomial) -> Polynomial {
        &f.affine_substitute_unchecked(&self.alpha, &self.beta) - &f.scale(&self.gamma)
    }
}

/// True iff `f(αx + β) = γ f(x) + δ` holds coefficientwise.
pub fn verify_affine(f: &Polynomial, rel: &AffineRelation) -> bool {
    assert_eq!(f.field(), rel.field(), "field mismatch");
    let lhs = f.affine_substitute_unchecked(&rel.alpha, &rel.beta);
    let rhs = &f.scale(&rel.gamma) + &Polynomial::constant(rel.delta.clone());
    lhs == rhs
}

/// `{particular + Σ c_i basis_i}` within polynomials of degree at most
/// `degree_bound`; empty when there is no particular solution.
///
/// The representation is canonical: basis elements are monic with distinct
/// degrees, sorted ascending, and each basis element (and the particular
/// solution) has zero coefficient at the leading degree of every other basis
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    field: Field,
    degree_bound: usize,
    particular: Option<Polynomial>,
    basis: Vec<Polynomial>,
}

impl SolutionSpace {
    pub fn empty(field: Field, degree_bound: usize) -> Self {
        SolutionSpace { field, degree_bound, particular: None, basis: Vec::new() }
    }

    /// Canonicalizes an arbitrary particular solution and spanning set.
    pub fn from_parts(field: Field, degree_bound: usize, particular: Polynomial, spanning: Vec<Polynomial>) -> Self {
        let width = degree_bound + 1;
        assert!(
            particular.degree().is_none_or(|d| d <= degree_bound),
            "particular solution exceeds the degree bound"
        );
        let mut rows: Vec<Vec<FieldElement>> = spanning.iter().map(|b| b.coefficient_vector(width)).collect();
        let mut reduced: Vec<(usize, Vec<FieldElement>)> = Vec::new();
        for col in (0..width).rev() {
            let Some(idx) = rows.iter().position(|r| !r[col].is_zero()) else {
                continue;
            };
            let mut pivot_row = rows.swap_remove(idx);
            let inv = pivot_row[col].inv();
            for v in pivot_row.iter_mut() {
                *v = &*v * &inv;
            }
            for other in rows.iter_mut().chain(reduced.iter_mut().map(|(_, r)| r)) {
                eliminate(other, &pivot_row, col);
            }
            reduced.push((col, pivot_row));
        }
        let mut part = particular.coefficient_vector(width);
        for (col, row) in &reduced {
            eliminate(&mut part, row, *col);
        }
        reduced.sort_by_key(|(col, _)| *col);
        SolutionSpace {
            field,
            degree_bound,
            particular: Some(Polynomial::new(field, part)),
            basis: reduced.into_iter().map(|(_, r)| Polynomial::new(field, r)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn particular(&self) -> Option<&Polynomial> {
        self.particular.as_ref()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether some member lies outside K.
    pub fn has_nonconstant(&self) -> bool {
        match &self.particular {
            None => false,
            Some(p) => !p.is_constant() || self.basis.iter().any(|b| !b.is_constant()),
        }
    }

    /// `particular + Σ c_i basis_i`.
    pub fn member(&self, coefficients: &[FieldElement]) -> Option<Polynomial> {
        let p = self.particular.as_ref()?;
        assert_eq!(coefficients.len(), self.basis.len(), "one coefficient per basis element");
        Some(
            self.basis
                .iter()
                .zip(coefficients)
                .fold(p.clone(), |acc, (b, c)| &acc + &b.scale(c)),
        )
    }

    /// `q^dim` for nonempty spaces over F_q, 0 when empty, `None` over Q.
    pub fn member_count(&self) -> Option<BigUint> {
        if self.is_empty() {
            return Some(BigUint::from(0u32));
        }
        let q = self.field.cardinality()?;
        Some(BigUint::from(q).pow(self.basis.len() as u32))
    }

    /// Every member, over a finite field.
    pub fn members(&self) -> Result<Vec<Polynomial>> {
        let elements: Vec<FieldElement> = self.field.elements().ok_or(Error::InfiniteField)?.collect();
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let dim = self.basis.len();
        let mut out = Vec::new();
        let mut idx = vec![0usize; dim];
        loop {
            let coeffs: Vec<FieldElement> = idx.iter().map(|&i| elements[i].clone()).collect();
            out.push(self.member(&coeffs).expect("nonempty"));
            let mut pos = 0;
            loop {
                if pos == dim {
                    return Ok(out);
                }
                idx[pos] += 1;
                if idx[pos] < elements.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}

fn eliminate(row: &mut [FieldElement], pivot_row: &[FieldElement], col: usize) {
    let factor = row[col].clone();
    if factor.is_zero() {
        return;
    }
    for (v, p) in row.iter_mut().zip(pivot_row) {
        *v = &*v - &(&factor * p);
    }
}

/// The full solution space of `f(αx + β) = γ f(x) + δ` with `deg f ≤ n`,
/// constants included.
///
/// * `α = 1, β = 0`: every polynomial when `γ = 1, δ = 0`; nothing when
///   `γ = 1, δ ≠ 0`; the constant `δ/(1 − γ)` otherwise.
/// * `α = 1, β ≠ 0`: for `γ ≠ 1` only the constant `δ/(1 − γ)`; for `γ = 1`
///   the set `(δ/β)x + K[x^p − β^{p−1}x]` in characteristic `p`, and
///   `(δ/β)x + K` in characteristic 0.
/// * `α ≠ 1`: with `c = β/(1 − α)`, `f = f_0 + Σ a_m (x − c)^m` over the
///   exponents `m` with `α^m = γ`, where `f_0 (1 − γ) = δ`.
pub fn solve_affine(rel: &AffineRelation, n: usize) -> Result<SolutionSpace> {
    let field = rel.field();
    let (alpha, beta, gamma, delta) = (&rel.alpha, &rel.beta, &rel.gamma, &rel.delta);
    let one = field.one();
    let constant_only = || {
        let f0 = delta / &(&one - gamma);
        SolutionSpace::from_parts(field, n, Polynomial::constant(f0), Vec::new())
    };

    if alpha.is_one() {
        if !gamma.is_one() {
            // leading coefficients differ for nonconstant f
            return Ok(constant_only());
        }
        if beta.is_zero() {
            if !delta.is_zero() {
                return Ok(SolutionSpace::empty(field, n));
            }
            let all = (0..=n).map(|d| Polynomial::monomial(one.clone(), d)).collect();
            return Ok(SolutionSpace::from_parts(field, n, Polynomial::zero(field), all));
        }
        let particular = Polynomial::monomial(delta / beta, 1);
        if particular.degree().is_some_and(|d| d > n) {
            return Ok(SolutionSpace::empty(field, n));
        }
        let basis = if field.characteristic() == 0 {
            vec![Polynomial::one(field)]
        } else {
            additive_algebra_basis(beta, n)?
        };
        return Ok(SolutionSpace::from_parts(field, n, particular, basis));
    }

    let shift = beta / &(&one - alpha);
    let exponents = discrete_log(alpha, gamma, n as u64)?;
    let period = multiplicative_order(alpha)?.period() as usize;
    let basis = match exponents.first() {
        Some(&e0) => progression_basis(&shift, e0 as usize, period, n),
        None => Vec::new(),
    };
    let particular = if !gamma.is_one() {
        Polynomial::constant(delta / &(&one - gamma))
    } else if delta.is_zero() {
        Polynomial::zero(field)
    } else {
        return Ok(SolutionSpace::empty(field, n));
    };
    Ok(SolutionSpace::from_parts(field, n, particular, basis))
}

/// Same space as [`solve_affine`], rebuilt by peeling leading terms.
///
/// Write `L(f) = f(αx + β) − γ f(x)`. For each monomial `x^j` the leading
/// term of `L(x^j)` either sits at degree `j` (when `α^j ≠ γ`), at degree
/// `j − 1` (when `α = γ = 1` and `jβ ≠ 0`), or cancels. Monomials with a
/// surviving leading term are pivots; the others are free leading degrees.
/// For every free degree `m` we start from `x^m` and repeatedly subtract the
/// pivot monomial matching the leading term of the defect until it vanishes;
/// the particular solution is peeled the same way from `0` against target `δ`.
pub fn solve_affine_by_peeling(rel: &AffineRelation, n: usize) -> Result<SolutionSpace> {
    let field = rel.field();
    let one = field.one();
    let translation_like = rel.alpha.is_one() && rel.gamma.is_one();

    // degree of the defect term a pivot cancels -> (monomial degree, L(x^j))
    let mut pivots: HashMap<usize, (usize, Polynomial)> = HashMap::new();
    let mut free = Vec::new();
    for j in 0..=n {
        let image = rel.linear_part(&Polynomial::monomial(one.clone(), j));
        let pivot_degree = if translation_like {
            let jb = &field.from_i64(j as i64) * &rel.beta;
            (j > 0 && !jb.is_zero()).then(|| j - 1)
        } else {
            (rel.alpha.pow(j as u64) != rel.gamma).then_some(j)
        };
        match pivot_degree {
            Some(k) => {
                debug_assert_eq!(image.degree(), Some(k));
                pivots.insert(k, (j, image));
            }
            None => free.push(j),
        }
    }

    let peel = |start: Polynomial, target: &Polynomial| -> Option<Polynomial> {
        let mut f = start;
        let mut defect = &rel.linear_part(&f) - target;
        while let Some(k) = defect.degree() {
            let (j, image) = pivots.get(&k)?;
            let factor = &defect.coeff(k) / &image.coeff(k);
            f = &f - &Polynomial::monomial(factor.clone(), *j);
            defect = &defect - &image.scale(&factor);
        }
        Some(f)
    };

    let target = Polynomial::constant(rel.delta.clone());
    let Some(particular) = peel(Polynomial::zero(field), &target) else {
        return Ok(SolutionSpace::empty(field, n));
    };
    let zero = Polynomial::zero(field);
    let basis = free
        .into_iter()
        .filter_map(|m| peel(Polynomial::monomial(one.clone(), m), &zero))
        .collect();
    Ok(SolutionSpace::from_parts(field, n, particular, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn rel(field: Field, c: [i64; 4]) -> AffineRelation {
        AffineRelation::from_i64s(field, c).unwrap()
    }

    fn p(field: Field, c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(field, c)
    }

    #[test]
    fn case_zero_everything() {
        let q = Field::Rational;
        let s = solve_affine(&rel(q, [1, 0, 1, 0]), 2).unwrap();
        assert_eq!(s.particular(), Some(&Polynomial::zero(q)));
        assert_eq!(s.basis(), &[p(q, &[1]), p(q, &[0, 1]), p(q, &[0, 0, 1])]);
    }

    #[test]
    fn case_one_frobenius() {
        let f3 = make_field("F3").unwrap();
        let s = solve_affine(&rel(f3, [1, 1, 1, 1]), 3).unwrap();
        assert_eq!(s.particular(), Some(&p(f3, &[0, 1])));
        assert_eq!(s.basis(), &[p(f3, &[1]), p(f3, &[0, -1, 0, 1])]);
        assert!(verify_affine(&p(f3, &[0, 0, 0, 1]), &rel(f3, [1, 1, 1, 1])));
    }

    #[test]
    fn case_two_roots_of_unity() {
        let f5 = make_field("F5").unwrap();
        let s = solve_affine(&rel(f5, [2, 0, 2, 0]), 5).unwrap();
        assert_eq!(s.particular(), Some(&Polynomial::zero(f5)));
        assert_eq!(s.basis(), &[p(f5, &[0, 1]), p(f5, &[0, 0, 0, 0, 0, 1])]);
        let q = Field::Rational;
        let s = solve_affine(&rel(q, [2, 1, 4, 0]), 3).unwrap();
        assert_eq!(s.basis(), &[p(q, &[1, 2, 1])]);
    }

    #[test]
    fn impossible_shift() {
        let q = Field::Rational;
        assert!(solve_affine(&rel(q, [1, 0, 1, 5]), 9).unwrap().is_empty());
        assert!(solve_affine_by_peeling(&rel(q, [1, 0, 1, 5]), 9).unwrap().is_empty());
    }

    #[test]
    fn particular_outside_bound_means_empty() {
        let q = Field::Rational;
        assert!(solve_affine(&rel(q, [1, 1, 1, 1]), 0).unwrap().is_empty());
        assert!(solve_affine_by_peeling(&rel(q, [1, 1, 1, 1]), 0).unwrap().is_empty());
        let s = solve_affine(&rel(q, [1, 1, 1, 0]), 0).unwrap();
        assert_eq!(s.basis(), &[p(q, &[1])]);
    }

    #[test]
    fn peeling_examples() {
        let q = Field::Rational;
        let f3 = make_field("F3").unwrap();
        let f5 = make_field("F5").unwrap();
        for (r, n) in [
            (rel(q, [1, 0, 1, 0]), 2),
            (rel(f3, [1, 1, 1, 1]), 3),
            (rel(f5, [2, 0, 2, 0]), 5),
            (rel(q, [2, 1, 4, 0]), 3),
        ] {
            assert_eq!(solve_affine_by_peeling(&r, n).unwrap(), solve_affine(&r, n).unwrap());
        }
        let f2 = make_field("F2").unwrap();
        let s = solve_affine_by_peeling(&rel(f2, [1, 1, 1, 0]), 4).unwrap();
        // x^4 + x^2 reduced against x^2 + x
        assert_eq!(s.basis(), &[p(f2, &[1]), p(f2, &[0, 1, 1]), p(f2, &[0, 1, 0, 0, 1])]);
        let s = solve_affine_by_peeling(&rel(q, [3, 0, 9, 0]), 2).unwrap();
        assert_eq!(s.basis(), &[p(q, &[0, 0, 1])]);
    }

    #[test]
    fn verify_examples() {
        let f3 = make_field("F3").unwrap();
        let q = Field::Rational;
        assert!(verify_affine(&p(f3, &[0, 0, 0, 1]), &rel(f3, [1, 1, 1, 1])));
        assert!(verify_affine(&p(q, &[0, 1]), &rel(q, [1, 1, 1, 1])));
        assert!(!verify_affine(&p(q, &[0, 0, 1]), &rel(q, [1, 1, 1, 1])));
    }

    #[test]
    fn rejects_zero_multipliers() {
        let q = Field::Rational;
        assert_eq!(AffineRelation::from_i64s(q, [0, 1, 1, 0]), Err(Error::ZeroAlpha));
        assert_eq!(AffineRelation::from_i64s(q, [1, 1, 0, 0]), Err(Error::ZeroGamma));
    }

    #[test]
    fn nonconstant_flag() {
        let q = Field::Rational;
        assert!(!solve_affine(&rel(q, [2, 0, 3, 1]), 4).unwrap().has_nonconstant());
        assert!(solve_affine(&rel(q, [2, 0, 8, 0]), 4).unwrap().has_nonconstant());
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let q = Field::Rational;
        let a = SolutionSpace::from_parts(q, 3, p(q, &[0, 1, 1]), vec![p(q, &[1, 1]), p(q, &[0, 2])]);
        let b = SolutionSpace::from_parts(q, 3, p(q, &[5, 0, 1]), vec![p(q, &[1]), p(q, &[3, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[p(q, &[1]), p(q, &[0, 1])]);
        assert_eq!(a.particular(), Some(&p(q, &[0, 0, 1])));
    }
}
