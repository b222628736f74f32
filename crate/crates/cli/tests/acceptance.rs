//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p linrel-cli --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use linrel::field::make_field;
use linrel::normalform::{decompose_semiconjugate, solve_semiconjugacy, NormalFormKind};
use linrel::oracle::{
    count_commuting_scaling, count_commuting_translation, enumerate_solutions, linear_system_solutions,
    search_mixed_counterexamples, search_translation_eigenfunctions, DEFAULT_BUDGET,
};
use linrel::{
    multiplicative_order, parse_expression, solve_affine, solve_affine_by_peeling, verify_affine, AffineRelation,
    Field, FieldElement, MobiusMap, Polynomial, RationalFunction,
};
use linrel_cli::run;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn field(spec: &str) -> Field {
    make_field(spec).expect("valid field")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    let mut cases = 0;
    for spec in ["F2", "F3"] {
        let k = field(spec);
        let all: Vec<FieldElement> = k.elements().unwrap().collect();
        let units: Vec<FieldElement> = k.units().unwrap().collect();
        for a in &units {
            for b in &all {
                for g in &units {
                    for d in &all {
                        let rel = AffineRelation::new(a.clone(), b.clone(), g.clone(), d.clone()).unwrap();
                        for n in 0..=4 {
                            let closed = solve_affine(&rel, n).map_err(|e| e.to_string())?;
                            let peeled = solve_affine_by_peeling(&rel, n).map_err(|e| e.to_string())?;
                            let linear = linear_system_solutions(&rel, n);
                            let listed: BTreeSet<Polynomial> =
                                enumerate_solutions(&rel, n, DEFAULT_BUDGET).unwrap().into_iter().collect();
                            let members: BTreeSet<Polynomial> = closed.members().unwrap().into_iter().collect();
                            let tag = || format!("{spec} ({a}, {b}, {g}, {d}) n={n}");
                            ensure(closed == peeled, || format!("peeling differs at {}", tag()))?;
                            ensure(closed == linear, || format!("linear system differs at {}", tag()))?;
                            ensure(listed == members, || format!("enumeration differs at {}", tag()))?;
                            cases += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{cases} (field, relation, n) cases: closed form = peeling = linear system = enumeration"))
}

fn q_pow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn criterion_2() -> Check {
    let mut seen = Vec::new();
    for spec in ["F2", "F3", "F5", "F4 mod t^2+t+1"] {
        let k = field(spec);
        let (q, p) = (k.cardinality().unwrap(), k.characteristic());
        let expected = q_pow(q, q / p);
        for beta in k.units().unwrap() {
            let c = count_commuting_translation(k, &beta, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(c.value == expected, || format!("{spec} β={beta}: {} ≠ {expected}", c.value))?;
        }
        seen.push(format!("q={q}: {expected}"));
    }
    Ok(format!("counts equal q^(q/p) for every β ≠ 0 ({})", seen.join(", ")))
}

fn criterion_3() -> Check {
    let mut seen = Vec::new();
    for (spec, alphas, orders) in [("F5", [2, 3, 4], [4, 4, 2]), ("F7", [3, 2, 6], [6, 3, 2])] {
        let k = field(spec);
        let q = k.cardinality().unwrap();
        for (a, want_order) in alphas.into_iter().zip(orders) {
            let alpha = k.from_i64(a);
            let s = multiplicative_order(&alpha).unwrap().period();
            ensure(s == want_order, || format!("{spec}: order of {a} is {s}, expected {want_order}"))?;
            let expected = q_pow(q, (q - 1) / s);
            for beta in k.elements().unwrap() {
                let c = count_commuting_scaling(k, &alpha, &beta, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                ensure(c.value == expected, || format!("{spec} α={a} β={beta}: {} ≠ {expected}", c.value))?;
            }
            seen.push(format!("{spec} α={a}: {expected}"));
        }
    }
    Ok(format!("counts equal q^((q-1)/s) for every β ({})", seen.join(", ")))
}

fn criterion_4() -> Check {
    let k = field("F3");
    let rel = AffineRelation::from_i64s(k, [1, 1, 1, 1]).unwrap();
    let space = solve_affine(&rel, 6).map_err(|e| e.to_string())?;
    let t = Polynomial::from_i64s(k, &[0, -1, 0, 1]);
    ensure(space.particular() == Some(&Polynomial::x(k)), || format!("particular {:?}", space.particular()))?;
    let expected = vec![Polynomial::one(k), t.clone(), &t * &t];
    ensure(space.basis() == expected.as_slice(), || format!("basis {:?}", space.basis()))?;
    ensure(space.dimension() == 1 + 6 / 3, || format!("dimension {}", space.dimension()))?;
    let members = space.members().unwrap();
    for f in &members {
        let shifted = f.affine_substitute(&k.one(), &k.one()).unwrap();
        ensure(shifted == f + &Polynomial::one(k), || format!("{f} fails f(x+1) = f(x)+1"))?;
        ensure(verify_affine(f, &rel), || format!("{f} fails verify"))?;
    }
    Ok(format!("particular x, basis {{1, x^3 - x, (x^3 - x)^2}}, all {} members checked", members.len()))
}

fn criterion_5() -> Check {
    let mut parts = Vec::new();
    for (spec, deg) in [("F3", 2), ("F5", 1)] {
        let start = Instant::now();
        let hits = search_mixed_counterexamples(field(spec), deg, deg, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(hits.is_empty(), || format!("{spec}: found {:?}", hits))?;
        ensure(took < Duration::from_secs(60), || format!("{spec} took {took:?}"))?;
        parts.push(format!("{spec} degrees <= {deg}: empty in {:.2}s", took.as_secs_f64()));
    }
    Ok(parts.join("; "))
}

fn small(rng: &mut ChaCha8Rng, k: Field) -> FieldElement {
    k.from_i64(rng.gen_range(-6i64..=6))
}

fn random_mobius(rng: &mut ChaCha8Rng, k: Field) -> MobiusMap {
    loop {
        if let Ok(m) = MobiusMap::new(small(rng, k), small(rng, k), small(rng, k), small(rng, k)) {
            return m;
        }
    }
}

/// Random reduced rational function of degree at most 3.
fn random_psi(rng: &mut ChaCha8Rng, k: Field) -> RationalFunction {
    loop {
        let num: Vec<FieldElement> = (0..=rng.gen_range(0..=3)).map(|_| small(rng, k)).collect();
        let den: Vec<FieldElement> = (0..=rng.gen_range(0..=3)).map(|_| small(rng, k)).collect();
        if let Ok(f) = RationalFunction::new(Polynomial::new(k, num), Polynomial::new(k, den)) {
            if f.degree() <= 3 && !f.is_zero() {
                return f;
            }
        }
    }
}

fn mobius_rf(m: &MobiusMap) -> RationalFunction {
    m.to_rational_function()
}

/// One random `(f, g, h)` built from a normal form of the given kind.
fn construct(rng: &mut ChaCha8Rng, k: Field, scale: bool) -> Option<(RationalFunction, MobiusMap, MobiusMap)> {
    let (u, v) = (random_mobius(rng, k), random_mobius(rng, k));
    let (core, big_g, big_h) = if !scale {
        let delta = small(rng, k);
        let psi = if k.characteristic() == 0 {
            RationalFunction::constant(small(rng, k))
        } else {
            let t = &Polynomial::monomial(k.one(), k.characteristic() as usize) - &Polynomial::x(k);
            random_psi(rng, k).compose(&t.into()).ok()?
        };
        let core = &RationalFunction::from_polynomial(Polynomial::monomial(delta.clone(), 1)) + &psi;
        (core, MobiusMap::translation(k.one()), MobiusMap::translation(delta))
    } else {
        let alpha = if k.characteristic() == 0 {
            [k.from_i64(-1), k.from_i64(2), k.from_i64(-3), k.one() / k.from_i64(2)][rng.gen_range(0..4)].clone()
        } else {
            k.from_i64(rng.gen_range(2..=4))
        };
        let e = rng.gen_range(-3i64..=3);
        let s = multiplicative_order(&alpha).unwrap().period();
        let psi_part = if s == 0 {
            RationalFunction::constant(small(rng, k))
        } else {
            random_psi(rng, k).compose(&RationalFunction::power_of_x(k, s as i64)).ok()?
        };
        let core = &RationalFunction::power_of_x(k, e) * &psi_part;
        let gamma = alpha.powi(e).unwrap();
        (core, MobiusMap::scaling(alpha).unwrap(), MobiusMap::scaling(gamma).unwrap())
    };
    if core.is_constant() {
        return None;
    }
    // f = u⁻¹ ∘ core ∘ v⁻¹, g = v ∘ G ∘ v⁻¹, h = u⁻¹ ∘ H ∘ u
    let f = mobius_rf(&u.inverse()).compose(&core.compose(&mobius_rf(&v.inverse())).ok()?).ok()?;
    let g = v.compose(&big_g).compose(&v.inverse());
    let h = u.inverse().compose(&big_h).compose(&u);
    Some((f, g, h))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut total = 0;
    let mut per = Vec::new();
    for spec in ["Q", "F5"] {
        let k = field(spec);
        for scale in [false, true] {
            let mut built = 0;
            while built < 25 {
                let Some((f, g, h)) = construct(&mut rng, k, scale) else { continue };
                let lhs = f.compose(&mobius_rf(&g)).unwrap();
                let rhs = mobius_rf(&h).compose(&f).unwrap();
                ensure(lhs == rhs, || format!("construction broken: f={f} g={g} h={h}"))?;
                let nf = decompose_semiconjugate(&f, &g, &h).map_err(|e| format!("{spec} f={f} g={g} h={h}: {e}"))?;
                let kind_ok = matches!(nf.kind, NormalFormKind::ScaleScale { .. }) == scale;
                ensure(kind_ok, || format!("{spec} f={f}: wrong kind {:?}", nf.kind))?;
                let rebuilt = nf.reconstruct().map_err(|e| e.to_string())?;
                ensure(rebuilt == f, || format!("{spec}: reconstructed {rebuilt} ≠ {f}"))?;
                ensure(nf.reconstruct_maps() == (g.clone(), h.clone()), || format!("{spec}: maps differ for f={f}"))?;
                built += 1;
            }
            total += built;
            per.push(format!("{spec} {}: {built}", if scale { "ScaleScale" } else { "TransTrans" }));
        }
    }
    Ok(format!("{total} constructions reconstructed exactly ({})", per.join(", ")))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    for spec in ["Q", "F2", "F3", "F5", "F7", "F4 mod t^2+t+1", "F9 mod t^2+1"] {
        let k = field(spec);
        let alphas: Vec<FieldElement> = match k.units() {
            Some(units) => units.filter(|a| !a.is_one()).collect(),
            None => vec![k.from_i64(2), k.from_i64(-1), k.one() / k.from_i64(3)],
        };
        for alpha in alphas {
            for _ in 0..3 {
                let (u, v) = (random_mobius(&mut rng, k), random_mobius(&mut rng, k));
                let scale = MobiusMap::scaling(alpha.clone()).unwrap().conjugate_by(&v);
                let shift = MobiusMap::translation(k.one()).conjugate_by(&u);
                for (g, h) in [(&scale, &shift), (&shift, &scale)] {
                    let fam = solve_semiconjugacy(g, h, 3).map_err(|e| e.to_string())?;
                    ensure(fam.is_empty(), || format!("{spec}: g={g} h={h} gave {}", fam.kind))?;
                    checked += 1;
                }
            }
        }
    }
    for (spec, deg) in [("F3", 2), ("F5", 1)] {
        let k = field(spec);
        let mixed = search_mixed_counterexamples(k, deg, deg, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(mixed.is_empty(), || format!("{spec}: search found f(αx) = f(x)+1"))?;
        let eigen = search_translation_eigenfunctions(k, deg, deg, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(eigen.iter().all(|(g, _)| g.is_one()), || format!("{spec}: f(x+1) = γf(x) with γ ≠ 1"))?;
    }
    Ok(format!("{checked} mixed (g, h) pairs empty over 7 fields; exhaustive searches agree"))
}

fn criterion_8() -> Check {
    let g = "(x-1)/(x+1)";
    let cmd = |field: &str, sub: &[&str]| {
        let mut args = vec!["linrel", sub[0], "--field", field];
        args.extend_from_slice(&sub[1..]);
        run(args).code
    };
    let normalize = ["normalize", "--g", g];
    let decompose = ["decompose", "--f", g, "--g", g, "--h", g];
    let codes = [cmd("Q", &normalize), cmd("Q", &decompose), cmd("F5", &normalize), cmd("F5", &decompose)];
    ensure(codes == [3, 3, 0, 0], || format!("exit codes {codes:?}, expected [3, 3, 0, 0]"))?;
    Ok("over Q normalize/decompose exit 3; over F5 both exit 0".into())
}

fn random_canonical(rng: &mut ChaCha8Rng, k: Field) -> RationalFunction {
    let coeff = |rng: &mut ChaCha8Rng| -> FieldElement {
        let a = k.from_i64(rng.gen_range(-20i64..=20));
        match k.generator() {
            Some(t) => &a + &(&k.from_i64(rng.gen_range(0..3)) * &t),
            None if k.is_finite() => a,
            None => a / k.from_i64(rng.gen_range(1..=9)),
        }
    };
    loop {
        let num: Vec<FieldElement> = (0..=rng.gen_range(0..=5)).map(|_| coeff(rng)).collect();
        let den: Vec<FieldElement> = (0..=rng.gen_range(0..=4)).map(|_| coeff(rng)).collect();
        if let Ok(f) = RationalFunction::new(Polynomial::new(k, num), Polynomial::new(k, den)) {
            return f;
        }
    }
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let specs = ["Q", "F2", "F5", "F4 mod t^2+t+1", "F9 mod t^2+1"];
    for spec in specs {
        let k = field(spec);
        for _ in 0..1000 {
            let f = random_canonical(&mut rng, k);
            let text = f.to_string();
            let back = parse_expression(&text, k).map_err(|e| format!("{spec}: `{text}`: {e}"))?;
            ensure(back == f, || format!("{spec}: `{text}` parsed to `{back}`"))?;
        }
    }
    Ok(format!("1000 random values per field round-trip ({})", specs.join(", ")))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exhaustive differential test over F2, F3, n <= 4", criterion_1),
        ("Wells counts q^(q/p)", criterion_2),
        ("Mullen counts q^((q-1)/s)", criterion_3),
        ("F3 (1,1,1,1) n=6 structure", criterion_4),
        ("no f(αx) = f(x)+1 in exhaustive search", criterion_5),
        ("normal form round trip", criterion_6),
        ("mixed scaling/translation families are empty", criterion_7),
        ("fixed-point obstruction exit codes", criterion_8),
        ("parser round trip", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
