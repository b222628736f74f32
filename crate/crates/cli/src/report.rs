//! Text and JSON rendering of library values.

use linrel::normalform::{FamilyKind, NormalForm, NormalFormKind, SolutionFamily};
use linrel::{Field, FieldElement, MobiusMap, Polynomial, RationalFunction, SolutionSpace};
use serde_json::{json, Value};

pub fn field_json(field: Field) -> Value {
    let mut out = json!({
        "char": field.characteristic(),
        "degree": field.extension_degree(),
    });
    if let Some(m) = field.modulus() {
        out["modulus"] = json!(m);
    }
    out
}

pub fn element_json(e: &FieldElement) -> Value {
    json!(e.to_string())
}

/// Coefficients, constant term first.
pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(p.coefficients().iter().map(element_json).collect())
}

pub fn ratfun_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_json(f.numerator()), "den": poly_json(f.denominator()) })
}

pub fn mobius_json(m: &MobiusMap) -> Value {
    Value::Array(m.entries().iter().map(|e| element_json(e)).collect())
}

pub fn space_text(space: &SolutionSpace) -> String {
    let Some(p) = space.particular() else {
        return format!("no solutions of degree <= {}\n", space.degree_bound());
    };
    let mut out = format!("particular: {p}\nbasis ({}):\n", space.dimension());
    for b in space.basis() {
        out.push_str(&format!("  {b}\n"));
    }
    out
}

pub fn space_json(space: &SolutionSpace) -> Value {
    match space.particular() {
        None => json!({ "kind": "empty", "basis": [] }),
        Some(p) => json!({
            "kind": "affine",
            "particular": poly_json(p),
            "basis": space.basis().iter().map(poly_json).collect::<Vec<_>>(),
            "dimension": space.dimension(),
        }),
    }
}

pub fn normal_form_text(nf: &NormalForm) -> String {
    let mut out = String::new();
    match &nf.kind {
        NormalFormKind::TransTrans { delta } => {
            out.push_str("kind: TransTrans\n");
            out.push_str(&format!("u: {}\nv: {}\n", nf.u, nf.v));
            out.push_str(&format!("delta: {delta}\n"));
        }
        NormalFormKind::ScaleScale { alpha, e, s } => {
            out.push_str("kind: ScaleScale\n");
            out.push_str(&format!("u: {}\nv: {}\n", nf.u, nf.v));
            out.push_str(&format!("alpha: {alpha}\ne: {e}\ns: {s}\n"));
        }
    }
    out.push_str(&format!("psi(x): {}\n", nf.psi));
    out
}

pub fn normal_form_json(nf: &NormalForm) -> Value {
    let mut witness = json!({
        "u": mobius_json(&nf.u),
        "v": mobius_json(&nf.v),
        "psi": ratfun_json(&nf.psi),
    });
    let kind = match &nf.kind {
        NormalFormKind::TransTrans { delta } => {
            witness["delta"] = element_json(delta);
            "TransTrans"
        }
        NormalFormKind::ScaleScale { alpha, e, s } => {
            witness["alpha"] = element_json(alpha);
            witness["e"] = json!(e);
            witness["s"] = json!(s);
            "ScaleScale"
        }
    };
    json!({ "kind": kind, "witness": witness })
}

pub fn family_text(family: &SolutionFamily) -> String {
    let mut out = format!("family: {}\n", family.kind);
    if !family.is_empty() {
        out.push_str(&format!("u: {}\nv: {}\nf = u^-1 ∘ F ∘ v^-1\n", family.u, family.v));
    }
    out
}

pub fn family_json(family: &SolutionFamily) -> Value {
    let mut witness = json!({ "u": mobius_json(&family.u), "v": mobius_json(&family.v) });
    let kind = match &family.kind {
        FamilyKind::Empty { reason } => {
            return json!({ "kind": "empty", "reason": reason });
        }
        FamilyKind::Translation { delta } => {
            witness["delta"] = element_json(delta);
            "translation"
        }
        FamilyKind::Scaling { alpha, s, exponents, .. } => {
            witness["alpha"] = element_json(alpha);
            witness["s"] = json!(s);
            witness["e"] = json!(exponents);
            "scaling"
        }
    };
    json!({ "kind": kind, "witness": witness, "bound": family.bound })
}
