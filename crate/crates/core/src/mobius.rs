//! Degree-one rational maps `(ax + b)/(cx + d)` and their action on `K ∪ {∞}`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

/// A point of the projective line. Finite points sort before `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(FieldElement),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(c) => write!(f, "{c}"),
            Point::Infinity => write!(f, "∞"),
        }
    }
}

/// `(ax + b)/(cx + d)` with `ad − bc ≠ 0`, scaled so the first nonzero entry
/// of `(a, b, c, d)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
}

impl MobiusMap {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Self> {
        let field = a.field();
        if [&b, &c, &d].iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return Err(Error::NotDegreeOne);
        }
        let lead = if a.is_zero() { b.inv() } else { a.inv() };
        Ok(MobiusMap { a: &a * &lead, b: &b * &lead, c: &c * &lead, d: &d * &lead })
    }

    pub fn identity(field: Field) -> Self {
        MobiusMap { a: field.one(), b: field.zero(), c: field.zero(), d: field.one() }
    }

    /// `x + b`.
    pub fn translation(b: FieldElement) -> Self {
        let field = b.field();
        MobiusMap { a: field.one(), b, c: field.zero(), d: field.one() }
    }

    /// `a·x`; `a` must be nonzero.
    pub fn scaling(a: FieldElement) -> Result<Self> {
        Self::affine(a.clone(), a.field().zero())
    }

    /// `a·x + b`.
    pub fn affine(a: FieldElement, b: FieldElement) -> Result<Self> {
        let field = a.field();
        Self::new(a, b, field.zero(), field.one())
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// `[a, b, c, d]`.
    pub fn entries(&self) -> [&FieldElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// True when `c = 0`, i.e. the map is `αx + β`.
    pub fn is_affine(&self) -> bool {
        self.c.is_zero()
    }

    /// `(α, β)` with `self = αx + β`, when affine.
    pub fn as_affine(&self) -> Option<(FieldElement, FieldElement)> {
        self.is_affine().then(|| {
            let dinv = self.d.inv();
            (&self.a * &dinv, &self.b * &dinv)
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        MobiusMap::new(
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        )
        .expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("invertible")
    }

    /// `v⁻¹ ∘ self ∘ v`.
    pub fn conjugate_by(&self, v: &MobiusMap) -> MobiusMap {
        v.inverse().compose(self).compose(v)
    }

    pub fn apply(&self, z: &Point) -> Point {
        match z {
            Point::Infinity if self.c.is_zero() => Point::Infinity,
            Point::Infinity => Point::Finite(&self.a / &self.c),
            Point::Finite(z) => {
                let den = &(&self.c * z) + &self.d;
                if den.is_zero() {
                    Point::Infinity
                } else {
                    Point::Finite(&(&(&self.a * z) + &self.b) / &den)
                }
            }
        }
    }

    /// Fixed points in `K ∪ {∞}`, sorted with `∞` last. Empty when both fixed
    /// points lie in a quadratic extension.
    pub fn fixed_points(&self) -> Result<Vec<Point>> {
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        let mut out = Vec::new();
        // c z^2 + (d - a) z - b = 0
        let quad = &self.c;
        let lin = &self.d - &self.a;
        let cst = -&self.b;
        if quad.is_zero() {
            out.push(Point::Infinity);
            if !lin.is_zero() {
                out.push(Point::Finite(&(-&cst) / &lin));
            }
        } else {
            let mut roots = quadratic_roots(quad, &lin, &cst);
            roots.sort();
            roots.dedup();
            out.extend(roots.into_iter().map(Point::Finite));
        }
        out.sort();
        Ok(out)
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::new(
            Polynomial::linear(self.a.clone(), self.b.clone()),
            Polynomial::linear(self.c.clone(), self.d.clone()),
        )
        .expect("nonzero denominator")
    }

    /// Recovers the map from a rational function of degree exactly one.
    pub fn from_rational_function(f: &RationalFunction) -> Result<Self> {
        if f.degree() != 1 {
            return Err(Error::NotDegreeOne);
        }
        let (n, d) = (f.numerator(), f.denominator());
        Self::new(n.coeff(1), n.coeff(0), d.coeff(1), d.coeff(0))
    }
}

/// Roots in K of `a z^2 + b z + c` with `a ≠ 0`.
fn quadratic_roots(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Vec<FieldElement> {
    let field = a.field();
    match field {
        Field::Finite(_) => field
            .elements()
            .expect("finite field")
            .filter(|z| (&(&(&(a * z) + b) * z) + c).is_zero())
            .collect(),
        Field::Rational => {
            let disc = &(b * b) - &(&field.from_i64(4) * &(a * c));
            let Some(root) = rational_sqrt(disc.as_rational().expect("rational")) else {
                return Vec::new();
            };
            let root = Field::Rational.from_rational(&root).expect("rational");
            let two_a = &field.from_i64(2) * a;
            vec![&(&(-b) + &root) / &two_a, &(&(-b) - &root) / &two_a]
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let exact = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(exact(r.numer())?, exact(r.denom())?))
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational_function())
    }
}

impl fmt::Debug for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn m(field: Field, e: [i64; 4]) -> MobiusMap {
        MobiusMap::new(field.from_i64(e[0]), field.from_i64(e[1]), field.from_i64(e[2]), field.from_i64(e[3]))
            .unwrap()
    }

    #[test]
    fn inverses() {
        let q = Field::Rational;
        assert_eq!(m(q, [1, 1, 0, 1]).inverse(), m(q, [1, -1, 0, 1]));
        assert_eq!(m(q, [2, 0, 0, 1]).inverse(), m(q, [1, 0, 0, 2]));
        let g = m(q, [1, -1, 1, 1]);
        assert_eq!(g.inverse(), m(q, [-1, -1, 1, -1]));
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        assert_eq!(MobiusMap::new(q.one(), q.one(), q.one(), q.one()), Err(Error::NotDegreeOne));
    }

    #[test]
    fn fixed_point_examples() {
        let q = Field::Rational;
        let fin = |n: i64| Point::Finite(q.from_i64(n));
        assert_eq!(m(q, [1, 1, 0, 1]).fixed_points().unwrap(), vec![Point::Infinity]);
        assert_eq!(m(q, [2, 0, 0, 1]).fixed_points().unwrap(), vec![fin(0), Point::Infinity]);
        assert_eq!(m(q, [0, 1, 1, 0]).fixed_points().unwrap(), vec![fin(-1), fin(1)]);
        assert!(m(q, [1, -1, 1, 1]).fixed_points().unwrap().is_empty());
        assert_eq!(MobiusMap::identity(q).fixed_points(), Err(Error::IdentityMap));
        let f5 = make_field("F5").unwrap();
        let pts = m(f5, [1, -1, 1, 1]).fixed_points().unwrap();
        assert_eq!(pts, vec![Point::Finite(f5.from_i64(2)), Point::Finite(f5.from_i64(3))]);
    }

    #[test]
    fn action_on_infinity() {
        let q = Field::Rational;
        let g = m(q, [1, -1, 1, 1]);
        assert_eq!(g.apply(&Point::Infinity), Point::Finite(q.one()));
        assert_eq!(g.apply(&Point::Finite(q.from_i64(-1))), Point::Infinity);
    }

    #[test]
    fn round_trip_through_rational_function() {
        let q = Field::Rational;
        let g = m(q, [3, 2, 5, 7]);
        assert_eq!(MobiusMap::from_rational_function(&g.to_rational_function()).unwrap(), g);
        let sq = RationalFunction::from_polynomial(Polynomial::from_i64s(q, &[0, 0, 1]));
        assert_eq!(MobiusMap::from_rational_function(&sq), Err(Error::NotDegreeOne));
    }
}
