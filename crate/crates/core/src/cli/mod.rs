//! The `aldp` command line tool.

mod args;
mod render;

pub use args::{Cli, Command, Format};

use crate::classify::{self, catalog, conic_bundle, positivity_class, resolve, Family, PositivityClass};
use crate::lattice::SmallBetaVerdict;
use crate::rational::{self, Rational};
use crate::surface::{PairDescription, SurfaceError, SurfacePair};
use crate::thresholds::{self, Branch, LocalConfig, RemarkReading, ThresholdError};
use crate::verifier::{self, minimal_model, VerifyError};
use args::{AlphaArgs, LctArgs, PairArgs, Preset};
use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::io::Read;

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let ok = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return Outcome {
                code: if ok { 0 } else { 1 },
                stdout: if ok { text.clone() } else { String::new() },
                stderr: if ok { String::new() } else { text },
            };
        }
    };
    match execute(&cli.command, stdin) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Table => table(),
    }
}

fn parse_betas(texts: &[String]) -> Result<Vec<Rational>, CliError> {
    texts
        .iter()
        .flat_map(|t| t.split(','))
        .map(|t| rational::parse(t.trim()).map_err(|e| usage(format!("bad --beta value `{t}`: {e}"))))
        .collect()
}

fn one_beta(texts: &[String]) -> Result<Rational, CliError> {
    match parse_betas(texts)?.as_slice() {
        [b] => Ok(*b),
        _ => Err(usage("exactly one --beta value is needed")),
    }
}

fn parse_rational(name: &str, text: &Option<String>) -> Result<Rational, CliError> {
    let t = text.as_ref().ok_or_else(|| usage(format!("--{name} is required")))?;
    rational::parse(t).map_err(|e| usage(format!("bad --{name} value `{t}`: {e}")))
}

/// A family instance, checked against the sampling cap for open-ended `m`.
fn instantiate(args: &PairArgs, id: &str) -> Result<(&'static Family, SurfacePair), CliError> {
    let (fam, n0, m0) = resolve(id)?;
    let pick = |label: Option<u32>, flag: Option<u32>, name: &str| match (label, flag) {
        (Some(a), Some(b)) if a != b => Err(usage(format!("{name} given twice with different values"))),
        (a, b) => Ok(a.or(b)),
    };
    let n = pick(n0, args.n, "n")?;
    let m = pick(m0, args.m, "m")?;
    if let (Some(m), None) = (m, fam.m_max()) {
        if m > args.max_m {
            return Err(usage(format!("m = {m} exceeds --max-m {}", args.max_m)));
        }
    }
    Ok((fam, fam.instantiate(n, m)?))
}

fn read_description(path: &str, stdin: &mut dyn Read) -> Result<PairDescription, CliError> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    let value: Value = serde_json::from_str(&text)?;
    let value = match value {
        Value::Object(mut map) if map.contains_key("pair") => map.remove("pair").expect("checked"),
        other => other,
    };
    Ok(serde_json::from_value(value)?)
}

/// The pair named by the arguments, with its family when known.
fn load_pair(args: &PairArgs, stdin: &mut dyn Read) -> Result<(Option<&'static Family>, SurfacePair), CliError> {
    match (&args.family, &args.pair_json) {
        (Some(id), None) => {
            let (f, p) = instantiate(args, id)?;
            Ok((Some(f), p))
        }
        (None, Some(path)) => {
            if args.n.is_some() || args.m.is_some() {
                return Err(usage("--n and --m go with --family"));
            }
            let desc = read_description(path, stdin)?;
            let pair = desc.build()?;
            let Some(prov) = pair.provenance().cloned() else {
                return Ok((None, pair));
            };
            let fam = catalog::family(&prov.family)?;
            let expected = fam.instantiate(prov.n, prov.m)?;
            if PairDescription::from_pair(&expected) != desc {
                return Err(usage(format!(
                    "pair description does not match the catalog recipe of {}",
                    prov.label()
                )));
            }
            Ok((Some(fam), pair))
        }
        (Some(_), Some(_)) => Err(usage("give either --family or --pair-json, not both")),
        (None, None) => Err(usage("a pair is required: --family or --pair-json")),
    }
}

fn label_of(pair: &SurfacePair) -> String {
    pair.provenance().map(|p| p.label()).unwrap_or_else(|| "custom pair".into())
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<(i32, String), CliError> {
    match cmd {
        Command::CatalogList { format, max_m } => {
            let entries = classify::catalog_entries(*max_m);
            Ok((0, emit(*format, &entries, || render::catalog_list(&entries))))
        }
        Command::CatalogShow { pair, format } => {
            let id = pair.family.as_ref().ok_or_else(|| usage("--family is required"))?;
            let (fam, p) = instantiate(pair, id)?;
            let prov = p.provenance().cloned().expect("catalog pairs carry provenance");
            let class = positivity_class(&p).ok();
            let aut = fam.aut_at(prov.n, prov.m);
            let kee = fam.kee_at(prov.n, prov.m);
            let value = json!({
                "family_id": fam.id,
                "label": prov.label(),
                "description": fam.description,
                "parameter_domain": fam.domain_text(),
                "positivity_class": class.map(PositivityClass::name),
                "aut": aut,
                "kee": kee,
                "alpha_note": fam.alpha_note_at(prov.n, prov.m),
                "surface": p.basis().to_string(),
                "boundary": p.boundary().iter().map(|c| c.to_text()).collect::<Vec<_>>(),
                "pair": PairDescription::from_pair(&p),
            });
            Ok((0, emit(*format, &value, || render::catalog_show(&value))))
        }
        Command::Verify { pair, beta, format } => {
            let (_, p) = load_pair(pair, stdin)?;
            if beta.is_empty() {
                let v = verifier::verify(&p)?;
                let code = if v.strong == SmallBetaVerdict::NotPositive { 2 } else { 0 };
                let label = label_of(&p);
                let value = json!({"pair": label, "verdict": v});
                Ok((code, emit(*format, &value, || render::verdict(&label, &v))))
            } else {
                let betas = parse_betas(beta)?;
                let a = verifier::verify_at(&p, &betas)?;
                let code = if a.verdict == SmallBetaVerdict::NotPositive { 2 } else { 0 };
                let label = label_of(&p);
                let strs: Vec<String> = betas.iter().map(rational::format).collect();
                let value = json!({"pair": label, "beta": strs, "assessment": a});
                Ok((code, emit(*format, &value, || render::assessment(&label, &strs, &a))))
            }
        }
        Command::Classify { pair, format } => {
            let (_, p) = load_pair(pair, stdin)?;
            let c = positivity_class(&p)?;
            let value = json!({"pair": label_of(&p), "class": c.name(), "symbol": c.symbol()});
            Ok((0, emit(*format, &value, || format!("{}\n", c.name()))))
        }
        Command::MinimalModel { pair, format } => {
            let (_, p) = load_pair(pair, stdin)?;
            let report = verifier::is_minimal(&p)?;
            let (base, steps) = minimal_model(&p)?;
            let target = classify::identify_base(&base).map(|prov| prov.label());
            let value = json!({
                "pair": label_of(&p),
                "minimal": report.minimal,
                "offending": report.offending,
                "steps": steps,
                "result": {
                    "surface": base.basis().to_string(),
                    "boundary": base.boundary().iter().map(|c| c.to_text()).collect::<Vec<_>>(),
                    "family": target,
                },
            });
            Ok((0, emit(*format, &value, || render::minimal(&value))))
        }
        Command::ConicBundle { pair, format } => {
            let (_, p) = load_pair(pair, stdin)?;
            let cb = conic_bundle(&p)?;
            let value = json!({"pair": label_of(&p), "conic_bundle": cb});
            Ok((0, emit(*format, &value, || render::conic(&value))))
        }
        Command::Alpha(a) => alpha(a, stdin),
        Command::Lct(l) => lct(l, stdin),
        Command::RegenTables { out, max_m } => {
            let written = classify::tables::regen_tables(std::path::Path::new(out), *max_m)?;
            let text: String = written.iter().map(|p| format!("wrote {}\n", p.display())).collect();
            Ok((0, text))
        }
    }
}

fn big_text(q: &num_rational::BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn alpha(a: &AlphaArgs, stdin: &mut dyn Read) -> Result<(i32, String), CliError> {
    let value: Value = if a.limit {
        let (_, p) = load_pair(&a.pair, stdin)?;
        if p.component_count() != 1 {
            // Reducible boundaries have no unique limit in general.
            return Err(ThresholdError::Unsupported("--limit needs an irreducible boundary".into()).into());
        }
        let c = positivity_class(&p)?;
        json!(thresholds::alpha_limit(c))
    } else if a.beth {
        let (_, p) = load_pair(&a.pair, stdin)?;
        if positivity_class(&p)? != PositivityClass::Beth || p.component_count() != 1 {
            return Err(usage("--beth needs a Beth pair with irreducible boundary"));
        }
        let c2 = *p.boundary()[0].self_intersection().numer();
        let eps = parse_rational("epsilon", &a.epsilon)?;
        let beta_max = parse_rational("beta-max", &a.beta_max)?;
        json!(thresholds::alpha_beth_bounds(c2, one_beta(&a.beta)?, !a.smooth_fiber, eps, beta_max)?)
    } else if let Some(dim) = a.anticanonical {
        json!(thresholds::anticanonical_lower_bound(dim, one_beta(&a.beta)?)?)
    } else if let Some(dim) = a.kee_threshold {
        json!({"value": rational::format(&thresholds::kee_weight_threshold(dim)?), "kind": "Exact"})
    } else if a.big {
        let eps = parse_rational("epsilon", &a.epsilon)?;
        json!(thresholds::alpha_upper_bound_big(eps, one_beta(&a.beta)?)?)
    } else if a.toric {
        let b = parse_betas(&a.beta)?;
        let b: [Rational; 3] = b.try_into().map_err(|_| usage("--toric needs three --beta values"))?;
        json!(thresholds::alpha_toric_three_lines(b)?)
    } else if a.curve {
        let coeffs = parse_betas(&a.coeff)?;
        let d = parse_rational("degree", &a.degree)?;
        json!(thresholds::alpha_on_curve(&coeffs, d, a.rational_curve)?)
    } else if a.lower {
        let gamma = parse_rational("gamma", &a.gamma)?;
        let ax = parse_rational("alpha-x", &a.alpha_x)?;
        let as_ = parse_rational("alpha-s", &a.alpha_s)?;
        json!(thresholds::alpha_lower_bound(one_beta(&a.beta)?, gamma, ax, as_)?)
    } else if a.berman {
        let ax = parse_rational("alpha-x", &a.alpha_x)?;
        let as_ = parse_rational("alpha-s", &a.alpha_s)?;
        json!(thresholds::berman_lower_bound(one_beta(&a.beta)?, ax, as_)?)
    } else if a.remark {
        let dim = a.dim.ok_or_else(|| usage("--dim is required"))?;
        let index = a.index.ok_or_else(|| usage("--index is required"))?;
        let reading = if a.literal { RemarkReading::Literal } else { RemarkReading::Corrected };
        let v = thresholds::remark_bound(dim, index, one_beta(&a.beta)?, reading)?;
        json!({"value": big_text(&v), "kind": "LowerBound", "reading": reading})
    } else if a.adjunction {
        let beta = one_beta(&a.beta)?;
        json!({"beta": rational::format(&beta), "holds": thresholds::adjunction_nef_counterexample(beta)?})
    } else {
        return Err(usage("choose an alpha mode"));
    };
    Ok((0, emit(a.format, &value, || render::alpha(&value))))
}

fn lct(l: &LctArgs, stdin: &mut dyn Read) -> Result<(i32, String), CliError> {
    let cfg = match (&l.preset, &l.config) {
        (Some(Preset::Eckardt), None) => LocalConfig::transverse(vec![
            Branch::scaled("L1", rational::int(1)),
            Branch::scaled("L2", rational::int(1)),
            Branch::boundary("C"),
        ]),
        (Some(Preset::SingularFiber), None) => LocalConfig::transverse(vec![
            Branch::scaled("F1", rational::int(1)),
            Branch::scaled("F2", rational::int(1)),
            Branch::boundary("C"),
        ]),
        (Some(Preset::TangentFiber), None) => {
            LocalConfig::tangent(Branch::scaled("F", rational::int(1)), Branch::boundary("C"), 2)
        }
        (None, Some(path)) => {
            let mut text = String::new();
            if path == "-" {
                stdin.read_to_string(&mut text)?;
            } else {
                text = std::fs::read_to_string(path)?;
            }
            serde_json::from_str(&text)?
        }
        _ => return Err(usage("give exactly one of --preset or --config")),
    };
    let scaled: BTreeSet<usize> = if l.scale.is_empty() {
        (0..cfg.branches.len()).collect()
    } else {
        l.scale.iter().copied().collect()
    };
    let v = thresholds::lct_local(&cfg, &scaled)?;
    let mut value = json!({"shape": cfg.shape()?, "lct": v});
    if !l.beta.is_empty() {
        let b = one_beta(&l.beta)?;
        let at = thresholds::lct_local_at(&cfg, &scaled, b)?;
        value["beta"] = json!(rational::format(&b));
        value["value_at_beta"] = json!(rational::format(&at));
    }
    Ok((0, emit(l.format, &value, || render::lct(&value))))
}
