//! The four subcommands, each producing an [`Output`] or a table.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use hopfgal_core::bundle::{bundle_tensor, certify_fgp, cotensor_bundle, AssociatedBundle};
use hopfgal_core::comodule::{check_relative_hopf_module, is_hopf_galois, RelativeHopfModule};
use hopfgal_core::hopf::{check_antipode_inverse, check_hopf};
use hopfgal_core::kring::{at_table, KClassVector};
use hopfgal_core::morphism::{
    check_adjunction, check_coinvariant_lemma, induced_algebra_on_pullback, is_cartesian,
};
use hopfgal_core::report::{Report, Status, Verdict};
use hopfgal_core::Error as CoreError;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::document::Document;
use crate::error::{CliError, Result};
use crate::render::{exit_code, Format, NamedMatrix, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Hopf,
    ComoduleAlgebra,
    Galois,
    Cartesian,
    Module,
}

impl CheckKind {
    fn label(self) -> &'static str {
        match self {
            CheckKind::Hopf => "hopf",
            CheckKind::ComoduleAlgebra => "comodule-algebra",
            CheckKind::Galois => "galois",
            CheckKind::Cartesian => "cartesian",
            CheckKind::Module => "module",
        }
    }
}

/// Runs `f`, folding mathematical failures into `report` under `prefix`.
/// Malformed input still aborts.
fn guarded<T>(
    report: &mut Report,
    prefix: &str,
    f: impl FnOnce() -> hopfgal_core::Result<T>,
) -> Result<Option<T>> {
    match f() {
        Ok(v) => Ok(Some(v)),
        Err(CoreError::Input(m)) => Err(CliError::input(format!("{prefix}: {m}"))),
        Err(CoreError::Unsupported(m)) => {
            report.push(Verdict::undecided(prefix, m));
            Ok(None)
        }
        Err(e) => {
            report.push(Verdict::fail(prefix, e.to_string()));
            Ok(None)
        }
    }
}

fn nonempty<T>(map: &BTreeMap<String, T>, section: &str) -> Result<()> {
    if map.is_empty() {
        return Err(CliError::input(format!(
            "sections.{section}: the document defines no {section} objects"
        )));
    }
    Ok(())
}

/// One verdict summarizing `sub`, named `name`.
fn summary(name: String, sub: &Report) -> Verdict {
    match sub.overall() {
        Status::Pass => Verdict::pass(name),
        Status::Undecided => Verdict::undecided(name, "some checks are undecided"),
        Status::Fail => {
            let failed: Vec<&str> = sub.failures().map(|v| v.name.as_str()).collect();
            Verdict::fail(name, format!("failed: {}", failed.join(", ")))
        }
    }
}

pub fn check(doc: &Document, kind: CheckKind) -> Result<Output> {
    let mut report = Report::new();
    match kind {
        CheckKind::Hopf => {
            nonempty(&doc.hopf, "hopf")?;
            for (name, h) in &doc.hopf {
                let prefix = format!("hopf.{name}");
                report.extend(&prefix, check_hopf(h));
                if let Some(si) = h.antipode_inv() {
                    report.extend(&prefix, check_antipode_inverse(h, si));
                }
                report.dim(format!("{prefix}.dim"), h.dim());
            }
        }
        CheckKind::ComoduleAlgebra => {
            nonempty(&doc.comodule_algebras, "comodule_algebra")?;
            for (name, ca) in &doc.comodule_algebras {
                report.extend(&format!("comodule_algebra.{name}"), ca.check());
            }
        }
        CheckKind::Galois => {
            nonempty(&doc.extensions, "extension")?;
            for (name, e) in &doc.extensions {
                let prefix = format!("extension.{name}");
                if let Some(sub) = guarded(&mut report, &prefix, || is_hopf_galois(e))? {
                    let verdict = summary(format!("{prefix}.hopf_galois"), &sub);
                    report.extend(&prefix, sub);
                    report.push(verdict);
                }
            }
        }
        CheckKind::Cartesian => {
            nonempty(&doc.morphisms, "extension_morphism")?;
            for (name, m) in &doc.morphisms {
                let prefix = format!("extension_morphism.{name}");
                if let Some(sub) = guarded(&mut report, &prefix, || is_cartesian(m))? {
                    report.extend(&prefix, sub);
                }
            }
        }
        CheckKind::Module => {
            nonempty(&doc.modules, "module")?;
            for (name, module) in &doc.modules {
                let prefix = format!("module.{name}");
                report.extend(&prefix, check_relative_hopf_module(module));
                for (mname, m) in &doc.morphisms {
                    if m.source().comodule_algebra() == module.base() {
                        let p = format!("{prefix}.adjunction.{mname}");
                        let target = RelativeHopfModule::regular(m.target().comodule_algebra());
                        if let Some(sub) =
                            guarded(&mut report, &p, || check_adjunction(m, module, &target))?
                        {
                            report.extend(&p, sub);
                        }
                    }
                    if m.target().comodule_algebra() == module.base() {
                        let p = format!("{prefix}.coinvariant_lemma.{mname}");
                        if let Some(sub) =
                            guarded(&mut report, &p, || check_coinvariant_lemma(m, module))?
                        {
                            report.extend(&p, sub);
                        }
                    }
                }
            }
        }
    }
    Ok(Output {
        command: format!("check {}", kind.label()),
        report,
        matrices: Vec::new(),
    })
}

/// The distributive law of every morphism, with the identities verified on
/// the induced algebra.
pub fn phi(doc: &Document) -> Result<Output> {
    nonempty(&doc.morphisms, "extension_morphism")?;
    let mut report = Report::new();
    let mut matrices = Vec::new();
    for (name, m) in &doc.morphisms {
        let prefix = format!("extension_morphism.{name}");
        let Some(induced) = guarded(&mut report, &prefix, || induced_algebra_on_pullback(m))?
        else {
            continue;
        };
        let law = &induced.law;
        report.push(Verdict::from_bool(
            format!("{prefix}.kappa_phi_equals_kappa_tilde"),
            law.kappa.matrix.mul(&law.matrix) == law.kappa_tilde.matrix,
            "κ∘φ differs from κ̃",
        ));
        report.extend(&prefix, induced.report.clone());
        let (a, bp) = (
            m.source().algebra().basis_names(),
            m.target().base().basis_names(),
        );
        matrices.push(NamedMatrix {
            name: format!("{prefix}.phi"),
            rows: law.matrix.rows(),
            cols: law.matrix.cols(),
            row_basis: law.kappa.domain.basis_names(bp, a),
            col_basis: law.kappa_tilde.domain.basis_names(a, bp),
            entries: law
                .matrix
                .triples()
                .into_iter()
                .map(|(r, c, v)| (r, c, v.to_wire()))
                .collect(),
        });
    }
    Ok(Output {
        command: "phi".into(),
        report,
        matrices,
    })
}

/// Associated bundles, their module checks and projectivity certificates,
/// and the requested tensor comparisons.
pub fn bundle(doc: &Document) -> Result<Output> {
    nonempty(&doc.bundle_requests, "bundle_request")?;
    let mut report = Report::new();
    for (name, req) in &doc.bundle_requests {
        let e = &doc.extensions[&req.extension];
        let mut bundles: BTreeMap<&str, AssociatedBundle> = BTreeMap::new();
        for v in &req.comodules {
            if bundles.contains_key(v.as_str()) {
                continue;
            }
            let prefix = format!("bundle_request.{name}.{v}");
            let rep = &doc.comodules[v];
            if let Some(b) = guarded(&mut report, &prefix, || cotensor_bundle(e, rep))? {
                report.push(Verdict::pass(format!(
                    "{prefix}.kernel_equals_coinvariants"
                )));
                report.extend(&prefix, b.check());
                report.extend(&format!("{prefix}.fgp"), certify_fgp(&b));
                report.dim(format!("{prefix}.rank"), b.dim());
                bundles.insert(v, b);
            }
        }
        for (v, w) in &req.products {
            let prefix = format!("bundle_request.{name}.{v}*{w}");
            let (Some(b1), Some(b2)) = (bundles.get(v.as_str()), bundles.get(w.as_str())) else {
                report.push(Verdict::fail(prefix, "a factor bundle could not be built"));
                continue;
            };
            if let Some(product) = guarded(&mut report, &prefix, || bundle_tensor(b1, b2))? {
                report.extend(&prefix, product.report);
            }
        }
    }
    Ok(Output {
        command: "bundle".into(),
        report,
        matrices: Vec::new(),
    })
}

/// Which `[Lₖ]` to tabulate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KSelection {
    Single(i64),
    Range(RangeInclusive<i64>),
}

#[derive(Serialize)]
struct JsonClass {
    n: usize,
    k: i64,
    coords: Vec<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    self_check: Option<Box<RawValue>>,
}

#[derive(Serialize)]
struct JsonRow {
    k: i64,
    coords: Vec<Box<RawValue>>,
}

#[derive(Serialize)]
struct JsonTable {
    n: usize,
    rows: Vec<JsonRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    self_check: Option<Box<RawValue>>,
}

fn raw_coords(v: &KClassVector) -> Vec<Box<RawValue>> {
    v.coords()
        .iter()
        .map(|c| RawValue::from_string(c.to_string()).expect("integers are valid JSON"))
        .collect()
}

/// The table of `[Lₖ]` in the shifted basis, followed by the self-check
/// report when requested. Returns the text and the exit code.
pub fn at(n: usize, ks: KSelection, self_check: bool, format: Format) -> (String, u8) {
    let range = match &ks {
        KSelection::Single(k) => *k..=*k,
        KSelection::Range(r) => r.clone(),
    };
    let table = at_table(n, range);
    let check = self_check.then(|| Output {
        command: "at self-check".into(),
        report: table.self_check(),
        matrices: Vec::new(),
    });
    let code = check.as_ref().map_or(0, |c| exit_code(c.report.overall()));
    let check_json = || {
        check
            .as_ref()
            .map(|c| RawValue::from_string(c.compact_json()).expect("report is JSON"))
    };
    let mut out = match (format, &ks) {
        (Format::Text, KSelection::Single(_)) => format!("{}\n", table.rows[0].1),
        (Format::Json, KSelection::Single(k)) => {
            let row = JsonClass {
                n,
                k: *k,
                coords: raw_coords(&table.rows[0].1),
                self_check: check_json(),
            };
            serde_json::to_string(&row).expect("table serializes") + "\n"
        }
        (Format::Text, KSelection::Range(_)) => {
            let width = table
                .rows
                .iter()
                .map(|(k, _)| k.to_string().len())
                .max()
                .unwrap_or(1);
            let mut s = format!("n = {n}\n{:>width$}  class\n", "k");
            for (k, v) in &table.rows {
                s += &format!("{k:>width$}  {v}\n");
            }
            s
        }
        (Format::Json, KSelection::Range(_)) => {
            let doc = JsonTable {
                n,
                rows: table
                    .rows
                    .iter()
                    .map(|(k, v)| JsonRow {
                        k: *k,
                        coords: raw_coords(v),
                    })
                    .collect(),
                self_check: check_json(),
            };
            serde_json::to_string(&doc).expect("table serializes") + "\n"
        }
    };
    if let (Format::Text, Some(c)) = (format, &check) {
        out += &c.render(Format::Text);
    }
    (out, code)
}
