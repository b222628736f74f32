//! Exact solver, classifier and verifier for the functional equation
//! `f ∘ g = h ∘ f` where `g` and `h` are degree-one maps and `f` is a
//! polynomial or rational function over Q, F_p or F_{p^k}.
//!
//! * [`solver`] computes every polynomial `f` of bounded degree with
//!   `f(αx + β) = γ f(x) + δ`, by a closed-form case analysis and by an
//!   independent leading-term peeling procedure.
//! * [`normalform`] conjugates degree-one maps to `αx` or `x + 1`, solves the
//!   rational semiconjugacy problem and decomposes given triples into a
//!   witness `f = u⁻¹ ∘ core ∘ v⁻¹`.
//! * [`oracle`] holds brute-force and linear-algebra ground truth used to
//!   cross-check both.

pub mod error;
pub mod expr;
pub mod field;
pub mod linalg;
pub mod mobius;
pub mod normalform;
pub mod oracle;
pub mod poly;
pub mod ratfun;
pub mod solver;

pub use error::{Error, Result};
pub use expr::{parse_constant, parse_expression};
pub use field::{discrete_log, make_field, multiplicative_order, Field, FieldElement, Order};
pub use mobius::{MobiusMap, Point};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use solver::{solve_affine, solve_affine_by_peeling, verify_affine, AffineRelation, SolutionSpace};
