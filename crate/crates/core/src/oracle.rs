//! Ground truth for the solver: exhaustive enumeration over small finite
//! fields, a direct linear system, solution counts, and exhaustive searches
//! for rational functions that ought not to exist.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::solver::{solve_affine, AffineRelation, SolutionSpace};

/// Default cap on the number of candidates an exhaustive search may test.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// How a count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Enumeration,
    DimensionFormula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Count {
    pub value: BigUint,
    pub method: CountMethod,
}

fn finite_elements(field: Field) -> Result<Vec<FieldElement>> {
    Ok(field.elements().ok_or(Error::InfiniteField)?.collect())
}

fn check_budget(needed: BigUint, budget: u64) -> Result<()> {
    if needed > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { needed: needed.to_string(), budget });
    }
    Ok(())
}

/// `(αx + β)^i − γ x^i` for `i = 0..=n`, as coefficient vectors of length `n + 1`,
/// built by repeated multiplication.
fn monomial_images(rel: &AffineRelation, n: usize) -> Vec<Vec<FieldElement>> {
    let field = rel.field();
    let mut power = vec![field.one()];
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut img = vec![field.zero(); n + 1];
        for (j, c) in power.iter().enumerate() {
            img[j] = c.clone();
        }
        img[i] = &img[i] - rel.gamma();
        out.push(img);
        // power *= αx + β
        let mut next = vec![field.zero(); power.len() + 1];
        for (j, c) in power.iter().enumerate() {
            next[j] = &next[j] + &(c * rel.beta());
            next[j + 1] = &next[j + 1] + &(c * rel.alpha());
        }
        power = next;
    }
    out
}

/// Every `f` with `deg f ≤ n` and `f(αx + β) = γ f(x) + δ`, found by testing
/// all `q^(n+1)` coefficient vectors. Sorted.
pub fn enumerate_solutions(rel: &AffineRelation, n: usize, budget: u64) -> Result<Vec<Polynomial>> {
    let field = rel.field();
    let elements = finite_elements(field)?;
    let q = elements.len();
    check_budget(BigUint::from(q).pow(n as u32 + 1), budget)?;
    let images = monomial_images(rel, n);

    // steps[i][k]: change of the defect when digit i moves from element k to k+1 (cyclically)
    let steps: Vec<Vec<Vec<FieldElement>>> = images
        .iter()
        .map(|img| {
            (0..q)
                .map(|k| {
                    let diff = &elements[(k + 1) % q] - &elements[k];
                    img.iter().map(|c| c * &diff).collect()
                })
                .collect()
        })
        .collect();

    let mut found: Vec<Polynomial> = (0..q)
        .into_par_iter()
        .flat_map_iter(|top| {
            // defect = L(f) − δ for f with top digit fixed and lower digits zero
            let mut defect: Vec<FieldElement> = images[n].iter().map(|c| c * &elements[top]).collect();
            defect[0] = &defect[0] - rel.delta();
            let mut digits = vec![0usize; n];
            let mut hits = Vec::new();
            loop {
                if defect.iter().all(FieldElement::is_zero) {
                    let mut coeffs: Vec<FieldElement> = digits.iter().map(|&d| elements[d].clone()).collect();
                    coeffs.push(elements[top].clone());
                    hits.push(Polynomial::new(field, coeffs));
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        return hits.into_iter();
                    }
                    let k = digits[pos];
                    for (d, s) in defect.iter_mut().zip(&steps[pos][k]) {
                        *d = &*d + s;
                    }
                    digits[pos] = (k + 1) % q;
                    if digits[pos] != 0 {
                        break;
                    }
                    pos += 1;
                }
            }
        })
        .collect();
    found.sort();
    Ok(found)
}

/// The solution space from the `(n+1) × (n+1)` linear system for the
/// coefficients of `f`. Works over every field.
pub fn linear_system_solutions(rel: &AffineRelation, n: usize) -> SolutionSpace {
    let field = rel.field();
    let inner = Polynomial::linear(rel.alpha().clone(), rel.beta().clone());
    let columns: Vec<Vec<FieldElement>> = (0..=n)
        .map(|i| {
            let mono = Polynomial::monomial(field.one(), i);
            let img = &mono.compose(&inner).expect("same field") - &mono.scale(rel.gamma());
            img.coefficient_vector(n + 1)
        })
        .collect();
    let matrix = Matrix::from_columns(field, n + 1, &columns);
    let mut rhs = vec![field.zero(); n + 1];
    rhs[0] = rel.delta().clone();
    match matrix.solve(&rhs) {
        None => SolutionSpace::empty(field, n),
        Some((particular, null)) => SolutionSpace::from_parts(
            field,
            n,
            Polynomial::new(field, particular),
            null.into_iter().map(|v| Polynomial::new(field, v)).collect(),
        ),
    }
}

/// Number of `f` with `deg f ≤ n` satisfying the relation: by enumeration
/// when `q^(n+1)` fits the budget, otherwise `q^dim` from the solver.
pub fn count_solutions(rel: &AffineRelation, n: usize, budget: u64) -> Result<Count> {
    match enumerate_solutions(rel, n, budget) {
        Ok(all) => Ok(Count { value: BigUint::from(all.len()), method: CountMethod::Enumeration }),
        Err(Error::BudgetExceeded { .. }) => {
            let space = solve_affine(rel, n)?;
            let value = space.member_count().ok_or(Error::InfiniteField)?;
            Ok(Count { value, method: CountMethod::DimensionFormula })
        }
        Err(e) => Err(e),
    }
}

/// Polynomials of degree `< q` with `f(x + β) = f(x) + β`.
pub fn count_commuting_translation(field: Field, beta: &FieldElement, budget: u64) -> Result<Count> {
    let q = field.cardinality().ok_or(Error::InfiniteField)?;
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let rel = AffineRelation::new(field.one(), beta.clone(), field.one(), beta.clone())?;
    count_solutions(&rel, q as usize - 1, budget)
}

/// Polynomials of degree `< q` with `f(αx + β) = α f(x) + β`, for `α ∉ {0, 1}`.
pub fn count_commuting_scaling(field: Field, alpha: &FieldElement, beta: &FieldElement, budget: u64) -> Result<Count> {
    let q = field.cardinality().ok_or(Error::InfiniteField)?;
    if alpha.is_one() {
        return Err(Error::InvalidParameter("alpha must differ from 1".into()));
    }
    let rel = AffineRelation::new(alpha.clone(), beta.clone(), alpha.clone(), beta.clone())?;
    count_solutions(&rel, q as usize - 1, budget)
}

/// All polynomials over a finite field with degree at most `max_deg`.
fn all_polynomials(elements: &[FieldElement], field: Field, max_deg: usize) -> Vec<Polynomial> {
    let q = elements.len();
    let total = q.pow(max_deg as u32 + 1);
    (0..total)
        .map(|mut idx| {
            let coeffs = (0..=max_deg)
                .map(|_| {
                    let c = elements[idx % q].clone();
                    idx /= q;
                    c
                })
                .collect();
            Polynomial::new(field, coeffs)
        })
        .collect()
}

/// Monic polynomials of degree at most `max_deg`.
fn monic_polynomials(elements: &[FieldElement], field: Field, max_deg: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one(field)];
    for d in 1..=max_deg {
        for lower in all_polynomials(elements, field, d - 1) {
            out.push(&lower + &Polynomial::monomial(field.one(), d));
        }
    }
    out
}

/// `p(αx)`.
fn scaled(p: &Polynomial, alpha: &FieldElement) -> Polynomial {
    let mut pw = alpha.field().one();
    let coeffs = p
        .coefficients()
        .iter()
        .map(|c| {
            let out = c * &pw;
            pw = &pw * alpha;
            out
        })
        .collect();
    Polynomial::new(p.field(), coeffs)
}

/// Reduced `A/B` (B monic) with bounded degrees, paired with each parameter
/// `λ` for which `accept(A, B, λ)` holds.
fn search_rational<F>(
    field: Field,
    max_num_deg: usize,
    max_den_deg: usize,
    params: &[FieldElement],
    budget: u64,
    accept: F,
) -> Result<Vec<(FieldElement, RationalFunction)>>
where
    F: Fn(&Polynomial, &Polynomial, &FieldElement) -> bool + Sync,
{
    let elements = finite_elements(field)?;
    let q = BigUint::from(elements.len());
    let dens: BigUint = (0..=max_den_deg as u32).map(|d| q.pow(d)).sum();
    check_budget(q.pow(max_num_deg as u32 + 1) * dens * BigUint::from(params.len()), budget)?;
    let nums = all_polynomials(&elements, field, max_num_deg);
    let dens = monic_polynomials(&elements, field, max_den_deg);
    let mut hits: Vec<(FieldElement, RationalFunction)> = nums
        .par_iter()
        .filter(|a| !a.is_zero())
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in &dens {
                if !a.gcd(b).expect("same field").is_one() {
                    continue;
                }
                for lambda in params {
                    if accept(a, b, lambda) {
                        let f = RationalFunction::new(a.clone(), b.clone()).expect("nonzero denominator");
                        local.push((lambda.clone(), f));
                    }
                }
            }
            local
        })
        .collect();
    hits.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.to_string().cmp(&y.1.to_string())));
    Ok(hits)
}

/// Reduced `f = A/B` within the degree box and `α ∈ K*` with
/// `f(αx) = f(x) + 1`. Expected to be empty.
pub fn search_mixed_counterexamples(
    field: Field,
    max_num_deg: usize,
    max_den_deg: usize,
    budget: u64,
) -> Result<Vec<(FieldElement, RationalFunction)>> {
    let alphas: Vec<FieldElement> = field.units().ok_or(Error::InfiniteField)?.collect();
    // A(αx)/B(αx) = (A + B)/B  <=>  A(αx)·B = (A + B)·B(αx)
    search_rational(field, max_num_deg, max_den_deg, &alphas, budget, |a, b, alpha| {
        &scaled(a, alpha) * b == &(a + b) * &scaled(b, alpha)
    })
}

/// Reduced `f = A/B` within the degree box and `γ ∈ K*` with
/// `f(x + 1) = γ f(x)`. Only `γ = 1` should appear.
pub fn search_translation_eigenfunctions(
    field: Field,
    max_num_deg: usize,
    max_den_deg: usize,
    budget: u64,
) -> Result<Vec<(FieldElement, RationalFunction)>> {
    let gammas: Vec<FieldElement> = field.units().ok_or(Error::InfiniteField)?.collect();
    let shift = Polynomial::linear(field.one(), field.one());
    search_rational(field, max_num_deg, max_den_deg, &gammas, budget, |a, b, gamma| {
        let a1 = a.compose(&shift).expect("same field");
        let b1 = b.compose(&shift).expect("same field");
        &a1 * b == (a * &b1).scale(gamma)
    })
}
