use linrel::field::make_field;
use linrel::{discrete_log, multiplicative_order, parse_expression, Field, FieldElement, MobiusMap, Polynomial, RationalFunction};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::Rational,
        make_field("F5").unwrap(),
        make_field("F4 mod t^2+t+1").unwrap(),
        make_field("F9 mod t^2+1").unwrap(),
    ]
}

/// Field element from a small integer pair: `a + b·t` in extensions, `a/(|b|+1)` over Q.
fn element(field: Field, a: i64, b: i64) -> FieldElement {
    match field.generator() {
        Some(t) => &field.from_i64(a) + &(&field.from_i64(b) * &t),
        None if field.is_finite() => field.from_i64(a),
        None => field.from_i64(a) / field.from_i64(b.abs() + 1),
    }
}

fn poly(field: Field, coeffs: &[(i64, i64)]) -> Polynomial {
    Polynomial::new(field, coeffs.iter().map(|&(a, b)| element(field, a, b)).collect())
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..5, -3i64..4), 0..max_len)
}

proptest! {
    #[test]
    fn field_axioms(fi in 0usize..4, a in (-9i64..9, -4i64..4), b in (-9i64..9, -4i64..4), c in (-9i64..9, -4i64..4)) {
        let f = fields()[fi];
        let (x, y, z) = (element(f, a.0, a.1), element(f, b.0, b.1), element(f, c.0, c.1));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn polynomial_composition_is_associative(fi in 0usize..4, a in coeffs(4), b in coeffs(3), c in coeffs(3)) {
        let f = fields()[fi];
        let (p, q, r) = (poly(f, &a), poly(f, &b), poly(f, &c));
        prop_assert_eq!(p.compose(&q).unwrap().compose(&r).unwrap(), p.compose(&q.compose(&r).unwrap()).unwrap());
    }

    #[test]
    fn affine_substitution_matches_composition(fi in 0usize..4, a in coeffs(6), al in (1i64..5, 0i64..3), be in (-4i64..5, -2i64..3)) {
        let f = fields()[fi];
        let p = poly(f, &a);
        let alpha = element(f, al.0, al.1);
        prop_assume!(!alpha.is_zero());
        let beta = element(f, be.0, be.1);
        let by_compose = p.compose(&Polynomial::linear(alpha.clone(), beta.clone())).unwrap();
        prop_assert_eq!(p.affine_substitute(&alpha, &beta).unwrap(), by_compose);
    }

    #[test]
    fn division_with_remainder(fi in 0usize..4, a in coeffs(7), b in coeffs(4)) {
        let f = fields()[fi];
        let (p, d) = (poly(f, &a), poly(f, &b));
        prop_assume!(!d.is_zero());
        let (quot, rem) = p.div_rem(&d).unwrap();
        prop_assert_eq!(&(&quot * &d) + &rem, p);
        prop_assert!(rem.degree() < d.degree() || rem.is_zero());
    }

    #[test]
    fn rational_functions_reduce_canonically(fi in 0usize..4, a in coeffs(4), b in coeffs(4), c in coeffs(3)) {
        let f = fields()[fi];
        let (p, q, r) = (poly(f, &a), poly(f, &b), poly(f, &c));
        prop_assume!(!q.is_zero() && !r.is_zero());
        let plain = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let padded = RationalFunction::new(&p * &r, &q * &r).unwrap();
        prop_assert_eq!(&plain, &padded);
        prop_assert!(plain.denominator().leading_coefficient().unwrap().is_one());
        prop_assert!(plain.numerator().gcd(plain.denominator()).unwrap().is_one() || plain.is_zero());
    }

    #[test]
    fn print_then_parse(fi in 0usize..4, a in coeffs(5), b in coeffs(4)) {
        let f = fields()[fi];
        let (p, q) = (poly(f, &a), poly(f, &b));
        prop_assume!(!q.is_zero());
        let value = RationalFunction::new(p, q).unwrap();
        prop_assert_eq!(parse_expression(&value.to_string(), f).unwrap(), value);
    }

    #[test]
    fn mobius_composition_matches_rational_composition(fi in 0usize..4, e in prop::array::uniform8(-4i64..5)) {
        let f = fields()[fi];
        let g = MobiusMap::new(f.from_i64(e[0]), f.from_i64(e[1]), f.from_i64(e[2]), f.from_i64(e[3]));
        let h = MobiusMap::new(f.from_i64(e[4]), f.from_i64(e[5]), f.from_i64(e[6]), f.from_i64(e[7]));
        let (Ok(g), Ok(h)) = (g, h) else { return Ok(()) };
        let composed = g.to_rational_function().compose(&h.to_rational_function()).unwrap();
        prop_assert_eq!(g.compose(&h).to_rational_function(), composed);
        prop_assert!(g.compose(&g.inverse()).is_identity());
        if !g.is_identity() {
            for pt in g.fixed_points().unwrap() {
                prop_assert_eq!(g.apply(&pt), pt);
            }
        }
    }

    #[test]
    fn discrete_log_matches_scan(fi in 1usize..4, a in (1i64..9, 0i64..3), c in (1i64..9, 0i64..3), bound in 0u64..20) {
        let f = fields()[fi];
        let (alpha, gamma) = (element(f, a.0, a.1), element(f, c.0, c.1));
        prop_assume!(!alpha.is_zero() && !gamma.is_zero());
        let expected: Vec<u64> = (0..=bound).filter(|&e| alpha.pow(e) == gamma).collect();
        prop_assert_eq!(discrete_log(&alpha, &gamma, bound).unwrap(), expected);
        let s = multiplicative_order(&alpha).unwrap().period();
        prop_assert!(alpha.pow(s).is_one());
        prop_assert!((1..s).all(|k| !alpha.pow(k).is_one()));
    }
}

#[test]
fn discrete_log_over_rationals() {
    let q = Field::Rational;
    let half = q.one() / q.from_i64(2);
    assert_eq!(discrete_log(&q.from_i64(2), &q.from_i64(8), 10).unwrap(), vec![3]);
    assert_eq!(discrete_log(&half, &(q.one() / q.from_i64(16)), 10).unwrap(), vec![4]);
    assert_eq!(discrete_log(&q.from_i64(-1), &q.one(), 5).unwrap(), vec![0, 2, 4]);
    assert!(discrete_log(&q.from_i64(2), &q.from_i64(3), 50).unwrap().is_empty());
    assert!(discrete_log(&q.from_i64(-2), &q.from_i64(-4), 50).unwrap().is_empty());
}
