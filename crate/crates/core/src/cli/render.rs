//! Plain text renderings of command results.

use crate::classify::CatalogEntry;
use crate::verifier::{Assessment, Failure, Verdict};
use serde_json::Value;
use std::fmt::Write;

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn catalog_list(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<11} {:<6} {:<20} {:<7} {:<19} description", "family", "class", "domain", "r", "kee");
    for e in entries {
        let class = e.positivity_class.map_or("?".to_string(), |c| c.name().to_string());
        let kee: Vec<String> = e.kee.iter().map(|k| k.status.to_string()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let _ = writeln!(
            out,
            "{:<11} {:<6} {:<20} {:<7} {:<19} {}",
            e.family_id,
            class,
            e.parameter_domain,
            e.components,
            kee.join("/"),
            e.description
        );
    }
    out
}

pub fn catalog_show(v: &Value) -> String {
    let mut out = String::new();
    for key in ["label", "description", "parameter_domain", "positivity_class", "surface"] {
        let _ = writeln!(out, "{key}: {}", text(&v[key]));
    }
    let boundary: Vec<String> = v["boundary"].as_array().into_iter().flatten().map(text).collect();
    let _ = writeln!(out, "boundary: {}", boundary.join(", "));
    if let Some(aut) = v["aut"].as_object() {
        let _ = writeln!(
            out,
            "aut: {}{} (reductive: {})",
            if aut["identity_component"].as_bool() == Some(true) { "identity component " } else { "" },
            text(&aut["group"]),
            text(&aut["reductive"])
        );
    }
    let _ = writeln!(out, "kee: {} ({})", text(&v["kee"]["status"]), text(&v["kee"]["reason"]));
    if !v["alpha_note"].is_null() {
        let _ = writeln!(out, "alpha: {}", text(&v["alpha_note"]));
    }
    out
}

fn failure_lines(out: &mut String, title: &str, f: &Option<Failure>) {
    if let Some(f) = f {
        let _ = write!(out, "{title}: {} ", f.subject);
        if let Some(c) = &f.class {
            let _ = write!(out, "[{c}] ");
        }
        let _ = writeln!(out, "gives {}", f.polynomial.to_text());
        if let Some(w) = &f.witness {
            let _ = writeln!(out, "  witness: {}", w.note);
        }
    }
}

pub fn verdict(label: &str, v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pair: {label}");
    let _ = writeln!(out, "divisor: {}", v.divisor);
    let _ = writeln!(out, "square: {}", v.square.to_text());
    let _ = writeln!(out, "strong: {:?}", v.strong);
    let _ = writeln!(out, "diagonal: {:?}", v.diagonal);
    let _ = writeln!(out, "scope: {:?}", v.certified_scope);
    for d in &v.diagnostics {
        let _ = writeln!(out, "warning: {}", d.message);
    }
    failure_lines(&mut out, "failing", &v.failing_inequality);
    failure_lines(&mut out, "diagonal failing", &v.diagonal_failure);
    let _ = writeln!(out, "checks:");
    for c in &v.checks {
        let _ = writeln!(out, "  {:<28} {:<32} {:?}/{:?}", c.subject, c.polynomial.to_text(), c.strong, c.diagonal);
    }
    out
}

pub fn assessment(label: &str, betas: &[String], a: &Assessment) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pair: {label}");
    let _ = writeln!(out, "beta: {}", betas.join(", "));
    let _ = writeln!(out, "verdict: {:?}", a.verdict);
    failure_lines(&mut out, "failing", &a.failure);
    out
}

pub fn minimal(v: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pair: {}", text(&v["pair"]));
    let _ = writeln!(out, "minimal: {}", text(&v["minimal"]));
    for s in v["steps"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "contract {} ({}), rank {}",
            text(&s["contracted_class"]),
            text(&s["kind"]),
            text(&s["rank_after"])
        );
    }
    let r = &v["result"];
    let boundary: Vec<String> = r["boundary"].as_array().into_iter().flatten().map(text).collect();
    let _ = writeln!(out, "result: {} with {} ({})", text(&r["surface"]), boundary.join(", "), text(&r["family"]));
    out
}

pub fn conic(v: &Value) -> String {
    let cb = &v["conic_bundle"];
    let mut out = String::new();
    let _ = writeln!(out, "pair: {}", text(&v["pair"]));
    let _ = writeln!(out, "components: {}", text(&cb["l"]));
    let _ = writeln!(out, "fiber: {}", text(&cb["fiber_class"]));
    let _ = writeln!(out, "sections: {}", text(&cb["sections"]));
    for f in cb["reducible_fibers"].as_array().into_iter().flatten() {
        let parts: Vec<String> = f.as_array().into_iter().flatten().map(text).collect();
        let _ = writeln!(out, "reducible fiber: {}", parts.join(" + "));
    }
    out
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Object(m) if m.contains_key("text") => text(&m["text"]),
        other => text(other),
    }
}

pub fn alpha(v: &Value) -> String {
    let mut out = String::new();
    if let Some(upper) = v.get("upper") {
        let _ = writeln!(out, "upper: {} = {}", value_text(&upper["value"]), text(&v["upper_at_beta"]));
        let _ = writeln!(out, "lower: {} for beta < {}", text(&v["lower"]), text(&v["delta"]));
        return out;
    }
    if let Some(h) = v.get("holds") {
        let _ = writeln!(out, "{}", text(h));
        return out;
    }
    let _ = writeln!(out, "{}", value_text(&v["value"]));
    out
}

pub fn lct(v: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", value_text(&v["lct"]["value"]));
    if let Some(at) = v.get("value_at_beta") {
        let _ = writeln!(out, "at beta = {}: {}", text(&v["beta"]), text(at));
    }
    out
}
