//! Subcommand implementations. Each returns the text to print and an exit
//! code; nothing here writes to the terminal or exits.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use homdef::catalog::{self, Instance};
use homdef::cochain::{cohomology2, derivations, Flavor};
use homdef::deform::{first_order_cocycle_check, order_statuses, verify, DeformationSeries};
use homdef::exactlin::rational::{self, Rational};
use homdef::graded::{scan, FamilyName, GradedFamily};
use homdef::homcore::{
    hom_associativity_report, hom_leibniz_report, hom_lie_report, skew_symmetry_report, BilinearMap, HomAlgebra, Kind,
    LinearMap,
};
use homdef::Error;

use crate::doc::{CheckDoc, ReportDocument, Status, WitnessDoc};
use crate::files::{self, AlgebraFile, DeformationFile, FileError, MAX_ORDER};

/// Widest accepted graded window (`hi − lo`).
pub const MAX_WINDOW: i64 = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    pub fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: 2,
        }
    }

    fn document(doc: ReportDocument, as_json: bool) -> Self {
        let doc = doc.finish();
        let mut out = Outcome::ok(if as_json { doc.to_json() } else { doc.to_text() });
        out.code = doc.exit_code();
        out
    }
}

type CmdResult = Result<Outcome, Outcome>;

fn read(path: &Path) -> Result<Vec<u8>, Outcome> {
    fs::read(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn utf8(path: &Path, bytes: &[u8]) -> Result<String, Outcome> {
    String::from_utf8(bytes.to_vec()).map_err(|_| Outcome::usage(format!("{}: not valid UTF-8", path.display())))
}

fn file_err(path: &Path) -> impl Fn(FileError) -> Outcome + '_ {
    move |e| Outcome::usage(format!("{}: {e}", path.display()))
}

fn engine_err(e: Error) -> Outcome {
    Outcome::usage(e)
}

fn q(x: &Rational) -> String {
    rational::format(x)
}

pub fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
}

pub fn parse_flavor(s: &str) -> Result<Flavor, String> {
    match s {
        "associative" | "hom-associative" => Ok(Flavor::Associative),
        "lie" | "hom-lie" => Ok(Flavor::Lie),
        other => Err(format!("unknown flavor {other:?} (expected associative or lie)")),
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

pub fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("invalid window {s:?} (expected lo..hi)");
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    if hi - lo > MAX_WINDOW {
        return Err(format!("window wider than {MAX_WINDOW}"));
    }
    Ok((lo, hi))
}

/// `c₀ label₀ + c₁ label₁ …` with unit coefficients elided.
pub fn combination(coeffs: &[Rational], labels: &[String]) -> String {
    let mut s = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = rational::is_negative(c);
        let mag = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            s.push_str(&q(&mag));
            s.push(' ');
        }
        s.push_str(l);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn product_lines(b: &BilinearMap, labels: &[String], lie: bool) -> Vec<String> {
    let n = b.dim();
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if (lie && i >= j) || b.pair(i, j).iter().all(Zero::is_zero) {
                continue;
            }
            let lhs = if lie {
                format!("[{},{}]", labels[i], labels[j])
            } else {
                format!("{}·{}", labels[i], labels[j])
            };
            v.push(format!("{lhs} = {}", combination(b.pair(i, j), labels)));
        }
    }
    v
}

fn matrix_rows(m: &LinearMap) -> Vec<String> {
    m.rows()
        .iter()
        .map(|r| format!("({})", r.iter().map(q).collect::<Vec<_>>().join(", ")))
        .collect()
}

fn algebra_facts(doc: &mut ReportDocument, a: &HomAlgebra) {
    doc.fact("kind", a.kind.as_str());
    doc.fact("dim", a.dim());
}

// ---------------------------------------------------------------- check

pub fn check(path: &Path, kind: Option<Kind>, as_json: bool) -> CmdResult {
    let bytes = read(path)?;
    let text = utf8(path, &bytes)?;
    let file = files::parse_algebra_file(&text).map_err(file_err(path))?;
    let kind = match kind {
        Some(k) => k,
        None => file.kind().map_err(file_err(path))?,
    };
    let a = file.to_algebra_as(kind).map_err(file_err(path))?;
    let mut doc = ReportDocument::new("check", &bytes);
    algebra_facts(&mut doc, &a);
    let reports = match kind {
        Kind::HomLie => vec![
            skew_symmetry_report(&a.product),
            hom_lie_report(&a.product, &a.alpha).map_err(engine_err)?,
        ],
        Kind::HomAssociative => vec![hom_associativity_report(&a.product, &a.alpha).map_err(engine_err)?],
        Kind::HomLeibniz => vec![hom_leibniz_report(&a.product, &a.alpha).map_err(engine_err)?],
    };
    for r in &reports {
        doc.push(CheckDoc::from_report(r, &a.labels));
    }
    Ok(Outcome::document(doc, as_json))
}

// ----------------------------------------------------------- cohomology

fn sparse_text(b: &BilinearMap, labels: &[String], lie: bool) -> String {
    let lines = product_lines(b, labels, lie);
    if lines.is_empty() {
        "0".into()
    } else {
        lines.join("; ")
    }
}

pub fn cohomology(path: &Path, flavor: Option<Flavor>, bases: bool, as_json: bool) -> CmdResult {
    let bytes = read(path)?;
    let text = utf8(path, &bytes)?;
    let file = files::parse_algebra_file(&text).map_err(file_err(path))?;
    let a = file.to_algebra().map_err(file_err(path))?;
    let flavor = match flavor {
        Some(f) => f,
        None => Flavor::for_kind(a.kind)
            .ok_or_else(|| Outcome::usage(format!("no cohomology flavor for {}; pass --flavor", a.kind)))?,
    };
    let mut doc = ReportDocument::new("cohomology", &bytes);
    algebra_facts(&mut doc, &a);
    doc.fact("flavor", flavor.as_str());
    let h = match cohomology2(&a, flavor) {
        Ok(h) => h,
        Err(Error::InvalidBase(msg)) => {
            doc.push(CheckDoc {
                name: "base-identity".into(),
                status: Status::Fail,
                witness: None,
                notes: vec![msg],
            });
            return Ok(Outcome::document(doc, as_json));
        }
        Err(e) => return Err(engine_err(e)),
    };
    doc.push(CheckDoc {
        name: "base-identity".into(),
        status: Status::Pass,
        witness: None,
        notes: vec![],
    });
    let der = derivations(&a, flavor).map_err(engine_err)?;
    doc.fact("cochain_dim", h.cochain_dim);
    doc.fact("dim_z2", h.dim_z2);
    doc.fact("dim_b2", h.dim_b2);
    doc.fact("dim_h2", h.dim_h2);
    doc.fact("derivation_dim", der.len());
    if bases {
        let lie = flavor == Flavor::Lie;
        let z2: Vec<Value> = h.basis_z2.iter().map(|c| sparse_text(&c.map, &a.labels, lie).into()).collect();
        let b2: Vec<Value> = h.basis_b2.iter().map(|c| sparse_text(&c.map, &a.labels, lie).into()).collect();
        let d: Vec<Value> = der.iter().map(|m| matrix_rows(m).join(" ").into()).collect();
        doc.fact("z2_basis", z2);
        doc.fact("b2_basis", b2);
        doc.fact("derivation_basis", d);
    }
    Ok(Outcome::document(doc, as_json))
}

// ------------------------------------------------------- deform verify

fn verify_series(doc: &mut ReportDocument, d: &DeformationSeries, labels: &[String]) -> Result<(), Outcome> {
    doc.fact("flavor", d.flavor.as_str());
    doc.fact("dim", d.dim());
    doc.fact("orders", d.order());
    let statuses = order_statuses(d).map_err(engine_err)?;
    let table: Vec<Value> = statuses
        .iter()
        .map(|s| {
            let mut row = json!({ "order": s.order, "status": if s.witness.is_none() { "pass" } else { "fail" } });
            if let Some(w) = &s.witness {
                row["witness"] = serde_json::to_value(WitnessDoc::from_witness(w, labels)).expect("plain data");
            }
            row
        })
        .collect();
    doc.fact("residuals", table);
    doc.push(CheckDoc::from_report(&verify(d).map_err(engine_err)?, labels));
    if d.order() >= 1 {
        let f = first_order_cocycle_check(d).map_err(engine_err)?;
        doc.push(CheckDoc::from_report(&f.report(), labels));
        doc.fact("first_order_hypothesis", if f.hypothesis.passed { "holds" } else { "fails" });
        doc.fact("first_order_delta2", if f.cocycle.passed { "zero" } else { "nonzero" });
    }
    Ok(())
}

pub fn deform_verify(path: &Path, orders: Option<usize>, as_json: bool) -> CmdResult {
    let bytes = read(path)?;
    let text = utf8(path, &bytes)?;
    let file = files::parse_deformation_file(&text).map_err(file_err(path))?;
    let (mut d, labels) = file.to_series().map_err(file_err(path))?;
    if let Some(s) = orders {
        if s > d.order() {
            return Err(Outcome::usage(format!(
                "--orders {s} exceeds the file's truncation order {}",
                d.order()
            )));
        }
        d = d.truncate(s).map_err(engine_err)?;
    }
    let mut doc = ReportDocument::new("deform verify", &bytes);
    verify_series(&mut doc, &d, &labels)?;
    Ok(Outcome::document(doc, as_json))
}

// --------------------------------------------------------------- graded

/// Violations listed per check before truncating.
const SHOWN_VIOLATIONS: usize = 10;

pub fn graded(
    family: &str,
    q: Option<Rational>,
    orders: Option<usize>,
    window: Option<(i64, i64)>,
    as_json: bool,
) -> CmdResult {
    let name: FamilyName = family.parse().map_err(engine_err)?;
    let fam = match name {
        FamilyName::QWitt | FamilyName::Virq => {
            if orders.is_some() {
                return Err(Outcome::usage(format!("--orders does not apply to {family}")));
            }
            let q = q.unwrap_or_else(|| rational::int(2));
            if name == FamilyName::QWitt {
                GradedFamily::QWitt(q)
            } else {
                GradedFamily::Virq(q)
            }
        }
        FamilyName::WittDeformation => {
            if q.is_some() {
                return Err(Outcome::usage("--q does not apply to witt-deformation (q = 1 + t)"));
            }
            let n = orders.unwrap_or(4);
            if n > MAX_ORDER {
                return Err(Outcome::usage(format!("--orders must be at most {MAX_ORDER}")));
            }
            GradedFamily::WittDeformation(n)
        }
    };
    let (lo, hi) = window.unwrap_or(match name {
        FamilyName::WittDeformation => (0, 6),
        _ => (-4, 4),
    });
    let result = scan(&fam, lo, hi).map_err(engine_err)?;
    let key = format!("{}|{:?}|{lo}..{hi}", name.as_str(), fam);
    let mut doc = ReportDocument::new("graded", key.as_bytes());
    doc.fact("family", name.as_str());
    match &fam {
        GradedFamily::QWitt(q) | GradedFamily::Virq(q) => doc.fact("q", rational::format(q)),
        GradedFamily::WittDeformation(n) => doc.fact("orders", *n),
    }
    doc.fact("window", format!("{lo}..{hi}"));
    doc.fact("violations", result.violations());
    if !result.notes.is_empty() {
        doc.fact("notes", result.notes.clone());
    }
    for c in &result.checks {
        let mut notes = vec![format!("{} tuples checked, {} violations", c.tuples, c.violations.len())];
        for v in c.violations.iter().take(SHOWN_VIOLATIONS) {
            let order = v.order.map(|o| format!(" order {o}")).unwrap_or_default();
            notes.push(format!("{:?}{order}: {}", v.indices, v.value));
        }
        doc.push(CheckDoc {
            name: c.name.clone(),
            status: if c.passed() { Status::Pass } else { Status::Fail },
            witness: c.violations.first().map(|v| WitnessDoc {
                order: v.order,
                indices: v.indices.clone(),
                labels: vec![],
                residual: vec![v.value.clone()],
            }),
            notes,
        });
    }
    Ok(Outcome::document(doc, as_json))
}

// -------------------------------------------------------------- catalog

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CatalogArgs {
    pub params: BTreeMap<String, Rational>,
    pub orders: Option<usize>,
    pub out: Option<PathBuf>,
    pub json: bool,
}

fn parse_param(pair: &str, into: &mut BTreeMap<String, Rational>) -> Result<(), String> {
    let (k, v) = pair
        .split_once('=')
        .ok_or_else(|| format!("invalid parameter {pair:?} (expected key=value)"))?;
    let v = parse_rational(v.trim())?;
    into.insert(k.trim().to_string(), v);
    Ok(())
}

/// Parses the arguments after `catalog show|export NAME`: `--params k=v,...`,
/// `--orders N` (alias `--N`), `--out PATH`, `--json`, and `--KEY VALUE` for
/// individual parameters.
pub fn parse_catalog_args(args: &[String]) -> Result<CatalogArgs, String> {
    let mut out = CatalogArgs::default();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let Some(flag) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument {arg:?}"));
        };
        let (flag, inline) = match flag.split_once('=') {
            Some((f, v)) => (f, Some(v.to_string())),
            None => (flag, None),
        };
        if flag == "json" {
            if inline.is_some() {
                return Err("--json takes no value".into());
            }
            out.json = true;
            continue;
        }
        let value = match inline {
            Some(v) => v,
            None => it.next().cloned().ok_or_else(|| format!("--{flag} needs a value"))?,
        };
        match flag {
            "params" => {
                for pair in value.split(',').filter(|p| !p.trim().is_empty()) {
                    parse_param(pair, &mut out.params)?;
                }
            }
            "orders" | "N" => {
                let n: usize = value.parse().map_err(|_| format!("invalid order {value:?}"))?;
                if n > MAX_ORDER {
                    return Err(format!("--orders must be at most {MAX_ORDER}"));
                }
                out.orders = Some(n);
            }
            "out" => out.out = Some(PathBuf::from(value)),
            key => {
                out.params.insert(key.to_string(), parse_rational(&value)?);
            }
        }
    }
    Ok(out)
}

pub fn catalog_list(as_json: bool) -> CmdResult {
    let entries = catalog::entries();
    if as_json {
        let v: Vec<Value> = entries
            .iter()
            .map(|e| {
                let params: serde_json::Map<String, Value> =
                    e.params.iter().map(|(k, d)| (k.to_string(), Value::from(q(d)))).collect();
                json!({
                    "name": e.name,
                    "kind": e.kind.as_str(),
                    "params": params,
                    "default_order": e.default_order,
                    "summary": e.summary,
                })
            })
            .collect();
        return Ok(Outcome::ok(files::to_canonical(&v)));
    }
    let mut s = String::new();
    for e in &entries {
        let mut sig: Vec<String> = e.params.iter().map(|(k, d)| format!("{k}={}", q(d))).collect();
        if let Some(n) = e.default_order {
            sig.push(format!("N={n}"));
        }
        s.push_str(&format!("{:<18} {:<12} ({})\n    {}\n", e.name, e.kind.as_str(), sig.join(", "), e.summary));
    }
    Ok(Outcome::ok(s))
}

fn instance(name: &str, args: &CatalogArgs) -> Result<Instance, Outcome> {
    catalog::get(name, &args.params, args.orders).map_err(engine_err)
}

fn show_algebra(a: &HomAlgebra) -> String {
    let mut s = format!("kind: {}\nbasis: {}\n", a.kind, a.labels.join(", "));
    s.push_str("product:\n");
    for l in product_lines(&a.product, &a.labels, a.kind == Kind::HomLie) {
        s.push_str(&format!("  {l}\n"));
    }
    s.push_str("alpha rows:\n");
    for r in matrix_rows(&a.alpha) {
        s.push_str(&format!("  {r}\n"));
    }
    s
}

fn show_series(d: &DeformationSeries, labels: &[String]) -> String {
    let lie = d.flavor == Flavor::Lie;
    let mut s = format!("flavor: {}\nbasis: {}\norders: {}\n", d.flavor.as_str(), labels.join(", "), d.order());
    for k in 0..=d.order() {
        s.push_str(&format!("order {k}:\n"));
        for l in product_lines(&d.products[k], labels, lie) {
            s.push_str(&format!("  {l}\n"));
        }
        if !d.twists[k].is_zero() {
            s.push_str(&format!("  alpha rows: {}\n", matrix_rows(&d.twists[k]).join(" ")));
        }
    }
    s
}

fn show_graded(f: &GradedFamily) -> String {
    match f {
        GradedFamily::QWitt(q) => format!("family: qwitt\nq: {}\n", rational::format(q)),
        GradedFamily::Virq(q) => format!("family: virq\nq: {}\n", rational::format(q)),
        GradedFamily::WittDeformation(n) => format!("family: witt-deformation\norders: {n}\n"),
    }
}

fn export_text(inst: &Instance) -> Result<String, Outcome> {
    match inst {
        Instance::Algebra(a) => Ok(files::to_canonical(&AlgebraFile::from_algebra(a))),
        Instance::Deformation { series, labels } => Ok(files::to_canonical(
            &DeformationFile::from_series(series, labels).map_err(Outcome::usage)?,
        )),
        Instance::Graded(_) => Err(Outcome::usage("graded families have no file form; use `homdef graded`")),
    }
}

pub fn catalog_show(name: &str, args: &CatalogArgs) -> CmdResult {
    let inst = instance(name, args)?;
    if args.json {
        return match &inst {
            Instance::Graded(f) => Ok(Outcome::ok(files::to_canonical(&match f {
                GradedFamily::QWitt(q) | GradedFamily::Virq(q) => json!({ "family": f.name().as_str(), "q": rational::format(q) }),
                GradedFamily::WittDeformation(n) => json!({ "family": f.name().as_str(), "orders": n }),
            }))),
            other => Ok(Outcome::ok(export_text(other)?)),
        };
    }
    let mut s = format!("{name}\n");
    s.push_str(&match &inst {
        Instance::Algebra(a) => show_algebra(a),
        Instance::Deformation { series, labels } => show_series(series, labels),
        Instance::Graded(f) => show_graded(f),
    });
    Ok(Outcome::ok(s))
}

pub fn catalog_export(name: &str, args: &CatalogArgs) -> CmdResult {
    let inst = instance(name, args)?;
    let text = export_text(&inst)?;
    match &args.out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Outcome::usage(format!("{}: {e}", p.display())))?;
            Ok(Outcome::ok(format!("wrote {}\n", p.display())))
        }
        None => Ok(Outcome::ok(text)),
    }
}

// ---------------------------------------------------------------- probe

pub fn probe(samples: usize, seed: u64, as_json: bool) -> CmdResult {
    let stats = catalog::probe_conjecture(samples, seed).map_err(engine_err)?;
    let key = format!("probe|{samples}|{seed}");
    let mut doc = ReportDocument::new("probe", key.as_bytes());
    doc.fact("samples", samples);
    doc.fact("seed", seed);
    let census: serde_json::Map<String, Value> = stats
        .sources
        .iter()
        .map(|(k, c)| {
            (
                k.clone(),
                json!({
                    "drawn": c.drawn,
                    "side_condition": c.side_condition,
                    "infinitesimal": c.infinitesimal,
                    "exact_hom_lie": c.exact_hom_lie,
                    "lie": c.lie,
                    "counterexamples": c.counterexamples,
                }),
            )
        })
        .collect();
    doc.fact("census", Value::Object(census));
    let mut notes = vec!["experimental: sampling gathers evidence and cannot settle the question".to_string()];
    notes.extend(stats.counterexamples.iter().take(SHOWN_VIOLATIONS).cloned());
    doc.push(CheckDoc {
        name: "lie-probe".into(),
        status: if stats.counterexample_count() == 0 { Status::Pass } else { Status::Fail },
        witness: None,
        notes,
    });
    Ok(Outcome::document(doc, as_json))
}
