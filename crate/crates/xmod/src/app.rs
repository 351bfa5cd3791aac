//! Subcommand implementations. Every command returns the text to print.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};
use xmod_core::fusion::{fusion_ring, fusion_table, FusionMethod, FusionRing};
use xmod_core::hopf::{AxiomFamily, AxiomReport, DAlgebra, DEFAULT_BASIS_CAP};
use xmod_core::rep::{SimpleModules, XModCharTable};
use xmod_core::rt::{link_invariant, Color, ColoredBraidLink, RtEvaluator, TangleMap};
use xmod_core::xmod::{CrossedModule, Label};
use xmod_core::Error;

use crate::input::{BraidDesc, TangleDesc, XmodDesc};
use crate::output::{element_json, FloatJson, InvariantJson, ScalarJson};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Axioms {
    Hopf,
    Rmatrix,
    Ribbon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Char,
    Reduced,
    Explicit,
    All,
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub seed: u64,
    pub max_order: usize,
    pub max_dim: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Json,
            seed: 0,
            max_order: 512,
            max_dim: 2500,
        }
    }
}

/// Result of a command: its output and whether it reports a failure.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {}", path.display(), e)))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn load_xmod(path: &Path, cfg: &RunConfig) -> Result<CrossedModule, CliError> {
    let desc: XmodDesc = read_json(path)?;
    let x = desc.build(cfg.max_order)?;
    let size = x.algebra_dim();
    if size > cfg.max_dim {
        return Err(Error::CapExceeded {
            size,
            cap: cfg.max_dim,
        }
        .into());
    }
    Ok(x)
}

fn simples(x: CrossedModule, cfg: &RunConfig) -> Result<SimpleModules, CliError> {
    Ok(SimpleModules::new(Arc::new(x), cfg.seed)?)
}

fn label_json(x: &CrossedModule, l: Label) -> Value {
    json!({"label": [l.0, l.1], "name": x.label_name(l)})
}

fn check_json(pass: bool, witness: Option<String>) -> Value {
    match witness {
        Some(w) => json!({"pass": pass, "witness": w}),
        None => json!({"pass": pass}),
    }
}

fn report_outcome(entries: Vec<(String, bool, Option<String>)>, cfg: &RunConfig) -> Outcome {
    let ok = entries.iter().all(|e| e.1);
    let text = match cfg.format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, pass, w) in entries {
                map.insert(name, check_json(pass, w));
            }
            to_json(&Value::Object(map))
        }
        Format::Text => {
            let mut out = String::new();
            for (name, pass, w) in entries {
                let _ = write!(out, "{:<24} {}", name, if pass { "pass" } else { "FAIL" });
                if let Some(w) = w {
                    let _ = write!(out, "  ({})", w);
                }
                out.push('\n');
            }
            out
        }
    };
    Outcome { text, ok }
}

pub fn validate(path: &Path, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let desc: XmodDesc = read_json(path)?;
    let p = desc.parts(cfg.max_order)?;
    let (g, h) = (&p.g, &p.h);
    let mut equivariance = None;
    'eq: for a in 0..g.order() {
        for x in 0..h.order() {
            if p.gamma.apply(p.mu.apply(a, x)) != g.conj(a, p.gamma.apply(x)) {
                equivariance = Some(format!("g = {}, h = {}", g.name(a), h.name(x)));
                break 'eq;
            }
        }
    }
    let mut peiffer = None;
    'pf: for x in 0..h.order() {
        for n in 0..h.order() {
            if p.mu.apply(p.gamma.apply(x), n) != h.conj(x, n) {
                peiffer = Some(format!("h = {}, n = {}", h.name(x), h.name(n)));
                break 'pf;
            }
        }
    }
    Ok(report_outcome(
        vec![
            ("equivariance".into(), equivariance.is_none(), equivariance),
            ("peiffer".into(), peiffer.is_none(), peiffer),
        ],
        cfg,
    ))
}

pub fn verify(path: &Path, axioms: &[Axioms], cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = load_xmod(path, cfg)?;
    let d = DAlgebra::new(&x);
    let mut families: Vec<AxiomFamily> = axioms
        .iter()
        .map(|a| match a {
            Axioms::Hopf => AxiomFamily::Hopf,
            Axioms::Rmatrix => AxiomFamily::Quasitriangular,
            Axioms::Ribbon => AxiomFamily::Ribbon,
        })
        .collect();
    families.sort();
    families.dedup();
    let report: AxiomReport = d.verify_axioms(&families, DEFAULT_BASIS_CAP.max(cfg.max_dim))?;
    Ok(report_outcome(
        report
            .results
            .into_iter()
            .map(|r| (r.name, r.pass, r.witness))
            .collect(),
        cfg,
    ))
}

pub fn chartable(path: &Path, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sm = simples(load_xmod(path, cfg)?, cfg)?;
    let x = sm.xmod();
    let table = XModCharTable::new(&sm)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Text => table.render_text(x),
        Format::Json => to_json(&json!({
            "rows": table.labels.iter().zip(table.row_names()).map(|(l, n)| json!({"label": [l.0, l.1], "name": n})).collect::<Vec<_>>(),
            "columns": table.columns.iter().zip(table.column_names()).map(|(c, n)| json!({"orbit_rep": c.0, "class_rep": c.1, "name": n})).collect::<Vec<_>>(),
            "blocks": table.blocks(),
            "degrees": table.labels.iter().map(|&l| sm.dim(l)).collect::<Vec<_>>(),
            "entries": table.entries.iter().map(|r| r.iter().map(ScalarJson::new).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
    }))
}

pub fn center(path: &Path, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = load_xmod(path, cfg)?;
    let d = DAlgebra::new(&x);
    let basis = d.center_basis();
    let ids = d.central_idempotents()?;
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&json!({
            "dimension": d.center_dimension(),
            "basis": basis.iter().map(|((z, c), e)| json!({
                "orbit_rep": z,
                "class_rep": c,
                "element": element_json(e),
            })).collect::<Vec<_>>(),
            "idempotents": ids.iter().map(|(l, e)| {
                let mut v = label_json(&x, *l);
                v["element"] = serde_json::to_value(element_json(e)).expect("serializable");
                v
            }).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = format!("center dimension {}\n", d.center_dimension());
            for ((z, c), e) in &basis {
                let _ = writeln!(
                    out,
                    "class sum ({}, {}): {} terms",
                    x.h().name(*z),
                    x.g().name(*c),
                    e.len()
                );
            }
            for (l, e) in &ids {
                let _ = writeln!(out, "idempotent {}: {} terms", x.label_name(*l), e.len());
            }
            out
        }
    }))
}

pub fn simples_cmd(path: &Path, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sm = simples(load_xmod(path, cfg)?, cfg)?;
    let x = sm.xmod().clone();
    let ribbon = x.ribbon_group();
    let d = DAlgebra::new(&x);
    let profile = d.wedderburn_profile()?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "ribbon choices: {}",
        ribbon
            .iter()
            .map(|&c| x.g().name(c))
            .collect::<Vec<_>>()
            .join(", ")
    );
    for &l in sm.labels() {
        let dual = sm.dual_label(l)?;
        let twists = ribbon
            .iter()
            .map(|&c| sm.twist_scalar(l, c))
            .collect::<Result<Vec<_>, _>>()?;
        let _ = writeln!(
            text,
            "{}  dim {}  dual {}  twist {}",
            x.label_name(l),
            sm.dim(l),
            x.label_name(dual),
            twists
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
        let mut v = label_json(&x, l);
        v["dim"] = json!(sm.dim(l));
        v["dual"] = json!([dual.0, dual.1]);
        v["twist"] = json!(ribbon
            .iter()
            .zip(&twists)
            .map(|(&c, t)| json!({"c": c, "c_name": x.g().name(c), "scalar": ScalarJson::new(t)}))
            .collect::<Vec<_>>());
        rows.push(v);
    }
    let _ = writeln!(
        text,
        "wedderburn blocks: {}",
        profile
            .iter()
            .map(|(_, s)| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(Outcome::ok(match cfg.format {
        Format::Text => text,
        Format::Json => to_json(&json!({
            "ribbon_group": ribbon,
            "simples": rows,
            "wedderburn": profile.iter().map(|(l, s)| json!({"label": [l.0, l.1], "size": s})).collect::<Vec<_>>(),
        })),
    }))
}

fn ring_json(x: &CrossedModule, ring: &FusionRing, method: &str) -> Value {
    let mut entries = Vec::new();
    for (a, row) in ring.n.iter().enumerate() {
        for (b, col) in row.iter().enumerate() {
            for (c, &n) in col.iter().enumerate() {
                if n > 0 {
                    entries.push(json!({"a": a, "b": b, "c": c, "n": n}));
                }
            }
        }
    }
    json!({
        "method": method,
        "labels": ring.labels.iter().map(|&l| label_json(x, l)).collect::<Vec<_>>(),
        "entries": entries,
    })
}

pub fn fusion(path: &Path, method: Method, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sm = simples(load_xmod(path, cfg)?, cfg)?;
    let x = sm.xmod().clone();
    let (ring, name) = match method {
        Method::Char => (fusion_table(&sm, FusionMethod::Char)?, "char"),
        Method::Reduced => (fusion_table(&sm, FusionMethod::Reduced)?, "reduced"),
        Method::Explicit => (fusion_table(&sm, FusionMethod::Explicit)?, "explicit"),
        Method::All => {
            let ring = fusion_ring(&sm, cfg.seed)?;
            for m in [FusionMethod::Reduced, FusionMethod::Explicit] {
                if fusion_table(&sm, m)? != ring {
                    return Err(Error::MethodMismatch(format!(
                        "{:?} differs from the character method",
                        m
                    ))
                    .into());
                }
            }
            (ring, "all")
        }
    };
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&ring_json(&x, &ring, name)),
        Format::Text => {
            let mut out = String::new();
            for (a, row) in ring.n.iter().enumerate() {
                for (b, col) in row.iter().enumerate() {
                    let terms: Vec<String> = col
                        .iter()
                        .enumerate()
                        .filter(|(_, &n)| n > 0)
                        .map(|(c, &n)| {
                            let name = x.label_name(ring.labels[c]);
                            if n == 1 {
                                name
                            } else {
                                format!("{} {}", n, name)
                            }
                        })
                        .collect();
                    let _ = writeln!(
                        out,
                        "{} ⊗ {} = {}",
                        x.label_name(ring.labels[a]),
                        x.label_name(ring.labels[b]),
                        terms.join(" + ")
                    );
                }
            }
            out
        }
    }))
}

fn ribbon_element(x: &CrossedModule, k: usize) -> Result<usize, CliError> {
    x.ribbon_group()
        .get(k)
        .copied()
        .ok_or_else(|| Error::InvalidRibbonChoice { element: k }.into())
}

fn float_text(f: &FloatJson) -> String {
    format!(
        "{} {} {}i",
        f.re,
        if f.im < 0.0 { '-' } else { '+' },
        f.im.abs()
    )
}

fn invariant_text(s: &InvariantJson) -> String {
    match &s.exact {
        Some(e) => format!(
            "{} = {}",
            e.to_cyclotomic().map(|c| c.to_string()).unwrap_or_default(),
            float_text(&s.float)
        ),
        None => float_text(&s.float),
    }
}

pub fn invariant_tangle(
    path: &Path,
    tangle: &Path,
    ribbon: usize,
    cfg: &RunConfig,
) -> Result<Outcome, CliError> {
    let sm = simples(load_xmod(path, cfg)?, cfg)?;
    let desc: TangleDesc = read_json(tangle)?;
    let t = desc.build(sm.xmod())?;
    let ev = RtEvaluator::new(&sm, ribbon_element(sm.xmod(), ribbon)?)?;
    let map = ev.evaluate(&t)?;
    if let Some(s) = map.scalar() {
        let s = InvariantJson::new(&s);
        return Ok(Outcome::ok(match cfg.format {
            Format::Json => to_json(&json!({ "scalar": s })),
            Format::Text => invariant_text(&s) + "\n",
        }));
    }
    let m = map.to_float();
    let rows: Vec<Vec<FloatJson>> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|z| FloatJson::new(z.re, z.im))
                .collect()
        })
        .collect();
    let exact = match &map {
        TangleMap::Exact(e) => Some(
            (0..e.rows())
                .map(|r| e.row(r).iter().map(ScalarJson::new).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        ),
        TangleMap::Float(_) => None,
    };
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&json!({ "matrix": rows, "exact": exact })),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{}",
                    r.iter().map(float_text).collect::<Vec<_>>().join("  ")
                );
            }
            out
        }
    }))
}

pub fn invariant_braid(
    path: &Path,
    braid: &Path,
    ribbon: usize,
    cfg: &RunConfig,
) -> Result<Outcome, CliError> {
    let sm = simples(load_xmod(path, cfg)?, cfg)?;
    let x = sm.xmod().clone();
    let desc: BraidDesc = read_json(braid)?;
    let c = ribbon_element(&x, ribbon)?;
    if let Some(colors) = &desc.colors {
        let colors = colors
            .iter()
            .map(|c| c.resolve(&x).map(Color::Simple))
            .collect::<Result<Vec<_>, _>>()?;
        let link = ColoredBraidLink {
            strands: desc.strands,
            colors,
            word: desc.word.clone(),
            framings: desc.framings.clone(),
        };
        let s = InvariantJson::new(&link_invariant(&sm, &link, c)?);
        return Ok(Outcome::ok(match cfg.format {
            Format::Json => to_json(&json!({ "scalar": s })),
            Format::Text => invariant_text(&s) + "\n",
        }));
    }
    // Every coloring of the components.
    let first = *sm
        .labels()
        .first()
        .ok_or_else(|| Error::InvariantViolation("no simple modules".into()))?;
    let probe = ColoredBraidLink {
        strands: desc.strands,
        colors: vec![Color::Simple(first); desc.strands],
        word: desc.word.clone(),
        framings: desc.framings.clone(),
    };
    let components = probe.components()?;
    let labels = sm.labels();
    let k = components.len();
    let total = labels
        .len()
        .checked_pow(k as u32)
        .filter(|&t| t <= 100_000)
        .ok_or(Error::CapExceeded {
            size: usize::MAX,
            cap: 100_000,
        })?;
    let mut table = Vec::with_capacity(total);
    let mut text = String::new();
    for code in 0..total {
        let mut rest = code;
        let mut choice = vec![0; k];
        for slot in choice.iter_mut().rev() {
            *slot = rest % labels.len();
            rest /= labels.len();
        }
        let mut colors = vec![Color::Simple(first); desc.strands];
        for (comp, &ci) in components.iter().zip(&choice) {
            for &s in comp {
                colors[s] = Color::Simple(labels[ci]);
            }
        }
        let link = ColoredBraidLink {
            strands: desc.strands,
            colors,
            word: desc.word.clone(),
            framings: desc.framings.clone(),
        };
        let s = InvariantJson::new(&link_invariant(&sm, &link, c)?);
        let names: Vec<String> = choice.iter().map(|&i| x.label_name(labels[i])).collect();
        let _ = writeln!(text, "{}: {}", names.join(" "), invariant_text(&s));
        table.push(json!({
            "colors": choice.iter().map(|&i| [labels[i].0, labels[i].1]).collect::<Vec<_>>(),
            "scalar": s,
        }));
    }
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&json!({ "components": components, "table": table })),
        Format::Text => text,
    }))
}
