//! Command-line front end. [`run`] takes the full argument list and returns
//! the exit code with everything that would be printed, so tests can drive it
//! in-process.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linrel::field::make_field;
use linrel::normalform::{decompose_semiconjugate, normalize_linear, solve_semiconjugacy, CanonicalLinear};
use linrel::oracle::{
    count_commuting_scaling, count_commuting_translation, count_solutions, enumerate_solutions,
    linear_system_solutions, search_mixed_counterexamples, CountMethod, DEFAULT_BUDGET,
};
use linrel::{
    parse_constant, parse_expression, solve_affine, solve_affine_by_peeling, verify_affine, AffineRelation, Error,
    Field, FieldElement, MobiusMap, RationalFunction,
};
use serde_json::{json, Value};

use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OBSTRUCTION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "linrel", version, about = "Solve and classify f∘g = h∘f for degree-one g and h")]
struct Cli {
    /// Field: Q, F<p>, F<q> or F<p>^<k> (extensions need --mod)
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Irreducible monic modulus in t for extension fields, e.g. "t^2+t+1"
    #[arg(long = "mod", global = true)]
    modulus: Option<String>,
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of candidates for exhaustive searches
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Relation {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, allow_hyphen_values = true)]
    delta: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CountMode {
    /// f(x+β) = f(x)+β, deg f < q
    Wells,
    /// f(αx+β) = αf(x)+β, deg f < q
    Mullen,
    /// the relation given by --alpha/--beta/--gamma/--delta and --degree
    Custom,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All f with deg f <= n and f(αx+β) = γf(x)+δ, in closed form
    Solve {
        #[command(flatten)]
        rel: Relation,
        #[arg(long)]
        degree: usize,
    },
    /// Same space, by peeling leading terms
    SolvePeel {
        #[command(flatten)]
        rel: Relation,
        #[arg(long)]
        degree: usize,
    },
    /// Check f(αx+β) = γf(x)+δ for a given f
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        rel: Relation,
    },
    /// Conjugate a degree-one map to x, x+1 or αx
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Check f∘g = h∘f and write f in normal form
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Describe every f with f∘g = h∘f; optionally build one from ψ (written in x)
    Family {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        /// Degree bound for ψ and largest |e| listed for scaling families
        #[arg(long, default_value_t = 3)]
        bound: usize,
        /// Build a sample member from this ψ
        #[arg(long, allow_hyphen_values = true)]
        psi: Option<String>,
        /// Exponent for the sample; defaults to the first admissible one
        #[arg(long, allow_hyphen_values = true)]
        e: Option<i64>,
    },
    /// Brute-force every f of degree <= n over a finite field
    Enumerate {
        #[command(flatten)]
        rel: Relation,
        #[arg(long)]
        degree: usize,
    },
    /// Count solutions over a finite field
    Count {
        #[arg(long, value_enum)]
        mode: CountMode,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Search for rational f and α with f(αx) = f(x)+1
    SearchMixed {
        /// Maximum numerator degree
        #[arg(long, default_value_t = 2)]
        num_degree: usize,
        /// Maximum denominator degree
        #[arg(long, default_value_t = 2)]
        den_degree: usize,
    },
    /// Run built-in consistency checks
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::SolvePeel { .. } => "solve-peel",
            Command::Verify { .. } => "verify",
            Command::Normalize { .. } => "normalize",
            Command::Decompose { .. } => "decompose",
            Command::Family { .. } => "family",
            Command::Enumerate { .. } => "enumerate",
            Command::Count { .. } => "count",
            Command::SearchMixed { .. } => "search-mixed",
            Command::Selftest => "selftest",
        }
    }
}

/// What a command produced: exit code, text report, JSON `inputs`/`result`.
struct Report {
    code: i32,
    text: String,
    inputs: Value,
    result: Value,
}

impl Report {
    fn status(&self) -> &'static str {
        match self.code {
            EXIT_OK => "ok",
            EXIT_FALSE if self.result["kind"] == "verify" => "false",
            EXIT_FALSE => "empty",
            _ => "error",
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NotSemiconjugate | Error::NotInvariant | Error::NotScalingRelated => EXIT_FALSE,
        Error::NoFixedPointInField | Error::InfiniteField | Error::CharacteristicZero => EXIT_OBSTRUCTION,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let name = cli.command.name();
    let spec = match &cli.modulus {
        Some(m) => format!("{} mod {m}", cli.field),
        None => cli.field.clone(),
    };
    let outcome = make_field(&spec).and_then(|field| execute(&cli, field).map(|r| (field, r)));
    match outcome {
        Ok((field, report)) => {
            let stdout = if cli.json {
                let doc = json!({
                    "command": name,
                    "field": field_json(field),
                    "inputs": report.inputs,
                    "result": report.result,
                    "status": report.status(),
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                report.text
            };
            Outcome { code: report.code, stdout, stderr: String::new() }
        }
        Err(err) => {
            let code = exit_code_for(&err);
            let stdout = if cli.json {
                let status = if code == EXIT_FALSE { "false" } else { "error" };
                let doc = json!({ "command": name, "status": status, "error": err.to_string(), "exit": code });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                String::new()
            };
            Outcome { code, stdout, stderr: format!("error: {err}\n") }
        }
    }
}

fn scalar(text: &str, field: Field) -> Result<FieldElement, Error> {
    parse_constant(text, field)
}

fn relation(rel: &Relation, field: Field) -> Result<AffineRelation, Error> {
    AffineRelation::new(
        scalar(&rel.alpha, field)?,
        scalar(&rel.beta, field)?,
        scalar(&rel.gamma, field)?,
        scalar(&rel.delta, field)?,
    )
}

fn relation_inputs(rel: &AffineRelation) -> Value {
    json!({
        "alpha": element_json(rel.alpha()),
        "beta": element_json(rel.beta()),
        "gamma": element_json(rel.gamma()),
        "delta": element_json(rel.delta()),
    })
}

fn relation_text(rel: &AffineRelation) -> String {
    format!(
        "relation: f(αx + β) = γf(x) + δ with α = {}, β = {}, γ = {}, δ = {}\n",
        rel.alpha(),
        rel.beta(),
        rel.gamma(),
        rel.delta()
    )
}

fn mobius(text: &str, field: Field) -> Result<MobiusMap, Error> {
    MobiusMap::from_rational_function(&parse_expression(text, field)?)
}

fn execute(cli: &Cli, field: Field) -> Result<Report, Error> {
    let head = format!("field: {field}\n");
    match &cli.command {
        Command::Solve { rel, degree } | Command::SolvePeel { rel, degree } => {
            let r = relation(rel, field)?;
            let space = if matches!(cli.command, Command::Solve { .. }) {
                solve_affine(&r, *degree)?
            } else {
                solve_affine_by_peeling(&r, *degree)?
            };
            let mut inputs = relation_inputs(&r);
            inputs["degree"] = json!(degree);
            Ok(Report {
                code: if space.is_empty() { EXIT_FALSE } else { EXIT_OK },
                text: format!("{head}{}degree bound: {degree}\n{}", relation_text(&r), space_text(&space)),
                inputs,
                result: space_json(&space),
            })
        }
        Command::Verify { f, rel } => {
            let r = relation(rel, field)?;
            let func = parse_expression(f, field)?;
            let holds = match func.as_polynomial() {
                Some(p) => verify_affine(p, &r),
                None => {
                    let inner = RationalFunction::from_polynomial(linrel::Polynomial::linear(
                        r.alpha().clone(),
                        r.beta().clone(),
                    ));
                    let lhs = func.compose(&inner)?;
                    let rhs = &(&func * &RationalFunction::constant(r.gamma().clone()))
                        + &RationalFunction::constant(r.delta().clone());
                    lhs == rhs
                }
            };
            let mut inputs = relation_inputs(&r);
            inputs["f"] = ratfun_json(&func);
            Ok(Report {
                code: if holds { EXIT_OK } else { EXIT_FALSE },
                text: format!("{head}f: {func}\n{}{holds}\n", relation_text(&r)),
                inputs,
                result: json!({ "kind": "verify", "holds": holds }),
            })
        }
        Command::Normalize { g } => {
            let map = mobius(g, field)?;
            let (v, canonical) = normalize_linear(&map)?;
            let (kind, form, alpha) = match &canonical {
                CanonicalLinear::Identity => ("identity", "x".to_string(), None),
                CanonicalLinear::Translation => ("translation", "x + 1".to_string(), None),
                CanonicalLinear::Scaling(a) => ("scaling", canonical.to_mobius(field).to_string(), Some(a)),
            };
            let mut result = json!({ "kind": kind, "witness": { "v": mobius_json(&v) } });
            if let Some(a) = alpha {
                result["witness"]["alpha"] = element_json(a);
            }
            Ok(Report {
                code: EXIT_OK,
                text: format!("{head}g: {map}\nv: {v}\ncanonical: {form} ({kind})\n"),
                inputs: json!({ "g": mobius_json(&map) }),
                result,
            })
        }
        Command::Decompose { f, g, h } => {
            let func = parse_expression(f, field)?;
            let (gm, hm) = (mobius(g, field)?, mobius(h, field)?);
            let inputs = json!({ "f": ratfun_json(&func), "g": mobius_json(&gm), "h": mobius_json(&hm) });
            let nf = decompose_semiconjugate(&func, &gm, &hm)?;
            Ok(Report {
                code: EXIT_OK,
                text: format!("{head}f: {func}\ng: {gm}\nh: {hm}\n{}", normal_form_text(&nf)),
                inputs,
                result: normal_form_json(&nf),
            })
        }
        Command::Family { g, h, bound, psi, e } => {
            let (gm, hm) = (mobius(g, field)?, mobius(h, field)?);
            let family = solve_semiconjugacy(&gm, &hm, *bound)?;
            let mut inputs = json!({ "g": mobius_json(&gm), "h": mobius_json(&hm), "bound": bound });
            let mut text = format!("{head}g: {gm}\nh: {hm}\n{}", family_text(&family));
            let mut result = family_json(&family);
            if let Some(psi_text) = psi {
                let psi = parse_expression(psi_text, field)?;
                inputs["psi"] = ratfun_json(&psi);
                if let Some(e) = e {
                    inputs["e"] = json!(e);
                }
                let member = family.sample(&psi, *e)?;
                text.push_str(&format!("sample: {member}\n"));
                result["members"] = json!([ratfun_json(&member)]);
            }
            Ok(Report { code: if family.is_empty() { EXIT_FALSE } else { EXIT_OK }, text, inputs, result })
        }
        Command::Enumerate { rel, degree } => {
            let r = relation(rel, field)?;
            let all = enumerate_solutions(&r, *degree, cli.budget)?;
            let mut inputs = relation_inputs(&r);
            inputs["degree"] = json!(degree);
            let mut text = format!("{head}{}degree bound: {degree}\nsolutions ({}):\n", relation_text(&r), all.len());
            for p in &all {
                text.push_str(&format!("  {p}\n"));
            }
            Ok(Report {
                code: if all.is_empty() { EXIT_FALSE } else { EXIT_OK },
                text,
                inputs,
                result: json!({
                    "kind": "enumeration",
                    "count": all.len(),
                    "members": all.iter().map(poly_json).collect::<Vec<_>>(),
                }),
            })
        }
        Command::Count { mode, alpha, beta, gamma, delta, degree } => {
            let need = |v: &Option<String>, name: &str| -> Result<FieldElement, Error> {
                let text = v.as_deref().ok_or_else(|| Error::InvalidParameter(format!("--{name} is required")))?;
                scalar(text, field)
            };
            let (count, inputs) = match mode {
                CountMode::Wells => {
                    let b = need(beta, "beta")?;
                    (count_commuting_translation(field, &b, cli.budget)?, json!({ "beta": element_json(&b) }))
                }
                CountMode::Mullen => {
                    let a = need(alpha, "alpha")?;
                    let b = need(beta, "beta")?;
                    let inputs = json!({ "alpha": element_json(&a), "beta": element_json(&b) });
                    (count_commuting_scaling(field, &a, &b, cli.budget)?, inputs)
                }
                CountMode::Custom => {
                    let r = AffineRelation::new(
                        need(alpha, "alpha")?,
                        need(beta, "beta")?,
                        need(gamma, "gamma")?,
                        need(delta, "delta")?,
                    )?;
                    let n = degree.ok_or_else(|| Error::InvalidParameter("--degree is required".into()))?;
                    let mut inputs = relation_inputs(&r);
                    inputs["degree"] = json!(n);
                    (count_solutions(&r, n, cli.budget)?, inputs)
                }
            };
            let method = match count.method {
                CountMethod::Enumeration => "enumeration",
                CountMethod::DimensionFormula => "dimension formula",
            };
            let mut inputs = inputs;
            inputs["mode"] = json!(format!("{mode:?}").to_lowercase());
            let count_value = match u64::try_from(&count.value) {
                Ok(n) => json!(n),
                Err(_) => json!(count.value.to_string()),
            };
            Ok(Report {
                code: EXIT_OK,
                text: format!("{head}count: {}\nmethod: {method}\n", count.value),
                inputs,
                result: json!({ "kind": "count", "count": count_value, "method": method }),
            })
        }
        Command::SearchMixed { num_degree, den_degree } => {
            let hits = search_mixed_counterexamples(field, *num_degree, *den_degree, cli.budget)?;
            let mut text = format!(
                "{head}searched f = A/B with deg A <= {num_degree}, deg B <= {den_degree} for f(αx) = f(x) + 1\n"
            );
            if hits.is_empty() {
                text.push_str("no solutions\n");
            }
            for (a, f) in &hits {
                text.push_str(&format!("  α = {a}: {f}\n"));
            }
            Ok(Report {
                code: if hits.is_empty() { EXIT_OK } else { EXIT_FALSE },
                text,
                inputs: json!({ "num_degree": num_degree, "den_degree": den_degree }),
                result: json!({
                    "kind": "search",
                    "count": hits.len(),
                    "members": hits
                        .iter()
                        .map(|(a, f)| json!({ "alpha": element_json(a), "f": ratfun_json(f) }))
                        .collect::<Vec<_>>(),
                }),
            })
        }
        Command::Selftest => selftest(field),
    }
}

fn selftest(field: Field) -> Result<Report, Error> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let small = [0i64, 1, 2, 3, -1, -2];
    let mut elements: Vec<FieldElement> = small.iter().map(|&n| field.from_i64(n)).collect();
    elements.sort();
    elements.dedup();
    let units: Vec<&FieldElement> = elements.iter().filter(|e| !e.is_zero()).collect();
    let mut agree = true;
    let mut sound = true;
    for a in &units {
        for b in &elements {
            for g in &units {
                for d in &elements {
                    let r = AffineRelation::new((*a).clone(), b.clone(), (*g).clone(), d.clone())?;
                    for n in 0..=4 {
                        let closed = solve_affine(&r, n)?;
                        agree &= closed == solve_affine_by_peeling(&r, n)? && closed == linear_system_solutions(&r, n);
                        if let Some(p) = closed.particular() {
                            sound &= verify_affine(p, &r);
                        }
                    }
                }
            }
        }
    }
    checks.push(("closed form, peeling and linear system agree".into(), agree));
    checks.push(("particular solutions satisfy their relation".into(), sound));
    if field.is_finite() {
        let r = AffineRelation::new(field.one(), field.one(), field.one(), field.one())?;
        let listed = enumerate_solutions(&r, 3, DEFAULT_BUDGET)?;
        let members = solve_affine(&r, 3)?.members()?;
        let mut members = members;
        members.sort();
        checks.push(("enumeration matches the solution space".into(), listed == members));
        let mixed = search_mixed_counterexamples(field, 1, 1, DEFAULT_BUDGET)?;
        checks.push(("no f with f(αx) = f(x) + 1 in degrees <= 1".into(), mixed.is_empty()));
    }
    let passed = checks.iter().all(|(_, ok)| *ok);
    let mut text = format!("field: {field}\n");
    for (name, ok) in &checks {
        text.push_str(&format!("[{}] {name}\n", if *ok { "ok" } else { "FAIL" }));
    }
    Ok(Report {
        code: if passed { EXIT_OK } else { EXIT_FALSE },
        text,
        inputs: json!({}),
        result: json!({
            "kind": "selftest",
            "checks": checks.iter().map(|(n, ok)| json!({ "name": n, "passed": ok })).collect::<Vec<_>>(),
        }),
    })
}
