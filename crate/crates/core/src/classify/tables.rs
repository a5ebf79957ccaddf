//! Regenerated classification and metadata tables.

use super::catalog::families;
use super::sweep::{catalog_entries, CatalogEntry};
use serde_json::{json, Map, Value};
use serde::Serialize;
use std::io;
use std::path::{Path, PathBuf};

/// Positivity class per family, `null` where sampled instances disagree.
pub fn class_table(entries: &[CatalogEntry]) -> Value {
    let map: Map<String, Value> = entries
        .iter()
        .map(|e| (e.family_id.to_string(), json!(e.positivity_class.map(|c| c.name()))))
        .collect();
    Value::Object(map)
}

/// A value shared by all cases, or a map from condition to value.
fn cased<T: PartialEq + Serialize>(cases: Vec<(String, T)>) -> Value {
    match cases.as_slice() {
        [] => Value::Null,
        [(_, first), rest @ ..] if rest.iter().all(|(_, v)| v == first) => json!(first),
        _ => Value::Object(cases.into_iter().map(|(w, v)| (w, json!(v))).collect()),
    }
}

/// KEE status per family.
pub fn kee_table(entries: &[CatalogEntry]) -> Value {
    let map: Map<String, Value> = entries
        .iter()
        .map(|e| {
            let cases = e.kee.iter().map(|c| (c.when.clone(), c.status)).collect();
            (e.family_id.to_string(), cased(cases))
        })
        .collect();
    Value::Object(map)
}

/// Automorphism groups and reductivity per family, where recorded.
pub fn aut_table(entries: &[CatalogEntry]) -> Value {
    let map: Map<String, Value> = entries
        .iter()
        .filter(|e| !e.aut.is_empty())
        .map(|e| {
            let reductive = cased(e.aut.iter().map(|c| (c.when.clone(), c.reductive)).collect());
            let v = json!({"reductive": reductive, "cases": e.aut});
            (e.family_id.to_string(), v)
        })
        .collect();
    Value::Object(map)
}

/// Pretty JSON with keys sorted and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub const TABLE_FILES: [&str; 4] = ["theorem_4cases.json", "kee_status.json", "aut_groups.json", "catalog.json"];

/// All tables as `(file name, contents)`.
pub fn tables(max_m: u32) -> Vec<(&'static str, String)> {
    let entries = catalog_entries(max_m);
    debug_assert_eq!(entries.len(), families().len());
    vec![
        (TABLE_FILES[0], render(&class_table(&entries))),
        (TABLE_FILES[1], render(&kee_table(&entries))),
        (TABLE_FILES[2], render(&aut_table(&entries))),
        (TABLE_FILES[3], render(&serde_json::to_value(&entries).expect("serializable"))),
    ]
}

/// Writes every table into `dir`, returning the paths written.
pub fn regen_tables(dir: &Path, max_m: u32) -> io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    tables(max_m)
        .into_iter()
        .map(|(name, body)| {
            let path = dir.join(name);
            std::fs::write(&path, body)?;
            Ok(path)
        })
        .collect()
}
