use super::catalog::{families, Family, KeeReason, KeeStatus};
use super::positivity::{positivity_class, PositivityClass};
use crate::lattice::SmallBetaVerdict;
use crate::verifier::verify;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

/// Parameter choices for a family: `n` in `0..=n_max` when it takes `n`,
/// `m` from 1 up to `max_m` or its own cap when it takes `m`.
pub fn sample_parameters(family: &Family, n_max: u32, max_m: u32) -> Vec<(Option<u32>, Option<u32>)> {
    let ns: Vec<Option<u32>> = if family.takes_n() {
        (0..=n_max).map(Some).collect()
    } else {
        vec![None]
    };
    let ms: Vec<Option<u32>> = if family.takes_m() {
        let top = family.m_max().map_or(max_m, |c| c.min(max_m));
        (1..=top).map(Some).collect()
    } else {
        vec![None]
    };
    ns.iter().flat_map(|&n| ms.iter().map(move |&m| (n, m))).collect()
}

/// Outcome of verifying and classifying one catalog instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub label: String,
    pub family: &'static str,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub picard_rank: usize,
    pub components: usize,
    pub strong: Option<SmallBetaVerdict>,
    pub diagonal: Option<SmallBetaVerdict>,
    pub class: Option<PositivityClass>,
    pub error: Option<String>,
}

fn run_one(family: &'static Family, n: Option<u32>, m: Option<u32>) -> SweepRecord {
    let mut rec = SweepRecord {
        label: family.id.to_string(),
        family: family.id,
        n,
        m,
        picard_rank: 0,
        components: family.components(),
        strong: None,
        diagonal: None,
        class: None,
        error: None,
    };
    let pair = match family.instantiate(n, m) {
        Ok(p) => p,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    rec.label = pair.provenance().map(|p| p.label()).unwrap_or_default();
    rec.picard_rank = pair.basis().rank();
    match verify(&pair) {
        Ok(v) => {
            rec.strong = Some(v.strong);
            rec.diagonal = Some(v.diagonal);
        }
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    }
    match positivity_class(&pair) {
        Ok(c) => rec.class = Some(c),
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec
}

/// Verifies and classifies every sampled instance of every family, in
/// catalog order, in parallel.
pub fn sweep(n_max: u32, max_m: u32) -> Vec<SweepRecord> {
    let jobs: Vec<(&'static Family, Option<u32>, Option<u32>)> = families()
        .iter()
        .flat_map(|f| sample_parameters(f, n_max, max_m).into_iter().map(move |(n, m)| (f, n, m)))
        .collect();
    jobs.into_par_iter().map(|(f, n, m)| run_one(f, n, m)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct AutCase {
    pub when: String,
    pub group: &'static str,
    pub identity_component: bool,
    pub reductive: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KeeCase {
    pub when: String,
    pub status: KeeStatus,
    pub reason: KeeReason,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoteCase {
    pub when: String,
    pub note: &'static str,
}

/// A family with its computed positivity class and recorded metadata.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub family_id: &'static str,
    pub description: &'static str,
    pub parameter_domain: String,
    pub components: usize,
    /// The class shared by all sampled instances, if they agree.
    pub positivity_class: Option<PositivityClass>,
    pub aut: Vec<AutCase>,
    pub kee: Vec<KeeCase>,
    pub alpha_notes: Vec<NoteCase>,
}

/// Condition text; a catch-all after specific cases reads `otherwise`.
fn when_text(index: usize, when: &super::catalog::Condition) -> String {
    let t = when.to_string();
    if index > 0 && t == "all" {
        "otherwise".into()
    } else {
        t
    }
}

impl CatalogEntry {
    fn from_family(f: &'static Family, records: &[SweepRecord]) -> Self {
        let classes: BTreeSet<Option<PositivityClass>> =
            records.iter().filter(|r| r.family == f.id).map(|r| r.class).collect();
        let positivity_class = match classes.into_iter().collect::<Vec<_>>().as_slice() {
            [Some(c)] => Some(*c),
            _ => None,
        };
        CatalogEntry {
            family_id: f.id,
            description: f.description,
            parameter_domain: f.domain_text(),
            components: f.components(),
            positivity_class,
            aut: f
                .aut
                .iter()
                .enumerate()
                .map(|(i, c)| AutCase {
                    when: when_text(i, &c.when),
                    group: c.value.group,
                    identity_component: c.value.identity_component,
                    reductive: c.value.reductive,
                })
                .collect(),
            kee: f
                .kee
                .iter()
                .enumerate()
                .map(|(i, c)| KeeCase {
                    when: when_text(i, &c.when),
                    status: c.value.status,
                    reason: c.value.reason,
                })
                .collect(),
            alpha_notes: f
                .alpha_notes
                .iter()
                .enumerate()
                .map(|(i, c)| NoteCase {
                    when: when_text(i, &c.when),
                    note: c.value,
                })
                .collect(),
        }
    }
}

/// The catalog with classes computed over `n <= 3` and `m <= max_m`.
pub fn catalog_entries(max_m: u32) -> Vec<CatalogEntry> {
    let records = sweep(3, max_m);
    families().iter().map(|f| CatalogEntry::from_family(f, &records)).collect()
}
