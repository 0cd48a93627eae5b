//! The JSON input document and its resolution into core objects.
//!
//! A document carries `schema_version`, `field` and a `sections` object whose
//! keys are section kinds; every section maps object names to definitions.
//! Objects refer to earlier sections by name. Matrices are sparse triples
//! `[row, col, "num/den"]`.

use std::collections::{BTreeMap, BTreeSet};

use hopfgal_core::bundle::LeftComodule;
use hopfgal_core::comodule::{fields, Coaction, ComoduleAlgebra, Extension, RelativeHopfModule};
use hopfgal_core::hopf::{
    build_dual_group_algebra, build_group_algebra, sweedler_h4, trivial_hopf, AlgebraData,
    FiniteGroup, GradingGroup, HopfData, HopfMap,
};
use hopfgal_core::linear::{Field, Mat, Scalar};
use hopfgal_core::morphism::{ExtensionMorphism, KTopology};
use serde::Deserialize;

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: &str = "1";

pub const DEFAULT_MAX_DIM: usize = 4096;

type Triples = Vec<(usize, usize, String)>;

#[derive(Deserialize)]
struct RawDocument {
    schema_version: String,
    field: String,
    #[serde(default)]
    sections: RawSections,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RawSections {
    hopf: BTreeMap<String, RawHopf>,
    comodule_algebra: BTreeMap<String, RawComoduleAlgebra>,
    extension: BTreeMap<String, RawExtension>,
    extension_morphism: BTreeMap<String, RawMorphism>,
    k_topology: BTreeMap<String, RawTopology>,
    comodule: BTreeMap<String, RawComodule>,
    module: BTreeMap<String, RawModule>,
    bundle_request: BTreeMap<String, RawBundleRequest>,
}

#[derive(Deserialize)]
struct RawAlgebra {
    basis: Vec<String>,
    mult: Triples,
    unit: Triples,
}

#[derive(Deserialize)]
struct RawHopf {
    builtin: Option<String>,
    group: Option<String>,
    basis: Option<Vec<String>>,
    mult: Option<Triples>,
    unit: Option<Triples>,
    comult: Option<Triples>,
    counit: Option<Triples>,
    antipode: Option<Triples>,
    antipode_inverse: Option<Triples>,
}

#[derive(Deserialize)]
struct RawGrading {
    #[serde(default)]
    free_rank: usize,
    #[serde(default)]
    torsion: Vec<u64>,
}

#[derive(Deserialize)]
struct RawComoduleAlgebra {
    builtin: Option<String>,
    hopf: Option<String>,
    basis: Option<Vec<String>>,
    mult: Option<Triples>,
    unit: Option<Triples>,
    coaction: Option<Triples>,
    grading: Option<RawGrading>,
    degrees: Option<Vec<Vec<i64>>>,
}

#[derive(Deserialize)]
struct RawExtension {
    comodule_algebra: String,
    base: Option<String>,
    inclusion: Option<Triples>,
    base_basis: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawMorphism {
    builtin: Option<String>,
    extension: Option<String>,
    source: Option<String>,
    target: Option<String>,
    chi: Option<Triples>,
    alpha: Option<Triples>,
}

#[derive(Deserialize)]
struct RawTopology {
    covers: Vec<String>,
    base: Option<RawAlgebra>,
}

#[derive(Deserialize)]
struct RawComodule {
    builtin: Option<String>,
    hopf: Option<String>,
    basis: Option<Vec<String>>,
    coaction: Option<Triples>,
    grading: Option<RawGrading>,
    degrees: Option<Vec<Vec<i64>>>,
    grouplike: Option<Vec<String>>,
    degree: Option<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawModule {
    comodule_algebra: String,
    builtin: Option<String>,
    basis: Option<Vec<String>>,
    action: Option<Triples>,
    coaction: Option<Triples>,
    degrees: Option<Vec<Vec<i64>>>,
}

#[derive(Deserialize)]
struct RawBundleRequest {
    extension: String,
    comodules: Vec<String>,
    #[serde(default)]
    products: Vec<(String, String)>,
}

/// Associated bundles to compute over one extension.
#[derive(Clone, Debug)]
pub struct BundleRequest {
    pub extension: String,
    pub comodules: Vec<String>,
    pub products: Vec<(String, String)>,
}

/// A fully resolved document. Maps are keyed by object name.
#[derive(Clone, Debug)]
pub struct Document {
    pub field: Field,
    pub hopf: BTreeMap<String, HopfData>,
    pub comodule_algebras: BTreeMap<String, ComoduleAlgebra>,
    pub extensions: BTreeMap<String, Extension>,
    pub morphisms: BTreeMap<String, ExtensionMorphism>,
    pub topologies: BTreeMap<String, KTopology>,
    pub comodules: BTreeMap<String, LeftComodule>,
    pub modules: BTreeMap<String, RelativeHopfModule>,
    pub bundle_requests: BTreeMap<String, BundleRequest>,
    /// Paths of keys that were present but not understood.
    pub warnings: Vec<String>,
}

/// Parses and resolves a document. `max_dim` bounds every tensor space the
/// checks will build.
pub fn parse(text: &str, max_dim: usize) -> Result<Document> {
    let mut ignored = Vec::new();
    let raw: RawDocument = {
        let mut json = serde_json::Deserializer::from_str(text);
        let mut record = |path: serde_ignored::Path| ignored.push(path.to_string());
        let tracked = serde_ignored::Deserializer::new(&mut json, &mut record);
        let raw = serde_path_to_error::deserialize(tracked).map_err(|e| {
            let path = e.path().to_string();
            CliError::input(format!("{path}: {}", e.into_inner()))
        })?;
        json.end()
            .map_err(|e| CliError::input(format!("trailing data: {e}")))?;
        raw
    };
    if raw.schema_version != SCHEMA_VERSION {
        return Err(CliError::input(format!(
            "schema_version: unsupported version {:?}, expected {SCHEMA_VERSION:?}",
            raw.schema_version
        )));
    }
    let field = Field::parse(&raw.field).map_err(|e| CliError::at("field", e))?;
    let mut r = Resolver {
        field,
        max_dim,
        doc: Document {
            field,
            hopf: BTreeMap::new(),
            comodule_algebras: BTreeMap::new(),
            extensions: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            topologies: BTreeMap::new(),
            comodules: BTreeMap::new(),
            modules: BTreeMap::new(),
            bundle_requests: BTreeMap::new(),
            warnings: ignored,
        },
    };
    let s = raw.sections;
    for (name, h) in &s.hopf {
        let path = format!("sections.hopf.{name}");
        let value = r.hopf(&path, h)?;
        r.doc.hopf.insert(name.clone(), value);
    }
    for (name, ca) in &s.comodule_algebra {
        let path = format!("sections.comodule_algebra.{name}");
        let value = r.comodule_algebra(&path, ca)?;
        r.doc.comodule_algebras.insert(name.clone(), value);
    }
    for (name, e) in &s.extension {
        let path = format!("sections.extension.{name}");
        let value = r.extension(&path, e)?;
        r.doc.extensions.insert(name.clone(), value);
    }
    for (name, m) in &s.extension_morphism {
        let path = format!("sections.extension_morphism.{name}");
        let value = r.morphism(&path, m)?;
        r.doc.morphisms.insert(name.clone(), value);
    }
    for (name, t) in &s.k_topology {
        let path = format!("sections.k_topology.{name}");
        let value = r.topology(&path, t)?;
        r.doc.topologies.insert(name.clone(), value);
    }
    for (name, v) in &s.comodule {
        let path = format!("sections.comodule.{name}");
        let value = r.comodule(&path, v)?;
        r.doc.comodules.insert(name.clone(), value);
    }
    for (name, m) in &s.module {
        let path = format!("sections.module.{name}");
        let value = r.module(&path, m)?;
        r.doc.modules.insert(name.clone(), value);
    }
    for (name, b) in &s.bundle_request {
        let path = format!("sections.bundle_request.{name}");
        let value = r.bundle_request(&path, b)?;
        r.doc.bundle_requests.insert(name.clone(), value);
    }
    Ok(r.doc)
}

fn need<'a, T>(path: &str, key: &str, v: &'a Option<T>) -> Result<&'a T> {
    v.as_ref()
        .ok_or_else(|| CliError::input(format!("{path}: missing key `{key}`")))
}

fn lookup<'a, T>(
    map: &'a BTreeMap<String, T>,
    kind: &str,
    path: &str,
    name: &str,
) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| CliError::input(format!("{path}: no {kind} named `{name}`")))
}

fn unique_names(path: &str, names: &[String]) -> Result<Vec<String>> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(CliError::input(format!(
                "{path}: basis name `{n}` repeated"
            )));
        }
    }
    Ok(names.to_vec())
}

/// `"Z/n"`, `"Z/2xZ/2"` or `"S3"`.
fn parse_group(path: &str, spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let bad = || {
        CliError::input(format!(
            "{path}: cannot read group {spec:?}; use \"Z/n\", \"Z/mxZ/n\" or \"Sn\""
        ))
    };
    let group = if let Some(n) = spec.strip_prefix('S') {
        FiniteGroup::symmetric(n.parse().map_err(|_| bad())?)
    } else {
        let orders: Vec<usize> = spec
            .split('x')
            .map(|f| f.trim().strip_prefix("Z/").and_then(|n| n.parse().ok()))
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        match orders.as_slice() {
            [n] => FiniteGroup::cyclic(*n),
            _ => FiniteGroup::abelian(&orders),
        }
    };
    group.map_err(|e| CliError::at(path, e))
}

struct Resolver {
    field: Field,
    max_dim: usize,
    doc: Document,
}

impl Resolver {
    fn matrix(&self, path: &str, rows: usize, cols: usize, triples: &Triples) -> Result<Mat> {
        let mut m = Mat::zeros(self.field, rows, cols);
        let mut seen = BTreeSet::new();
        for (i, (r, c, v)) in triples.iter().enumerate() {
            let at = format!("{path}[{i}]");
            if *r >= rows || *c >= cols {
                return Err(CliError::input(format!(
                    "{at}: entry ({r}, {c}) lies outside the {rows}x{cols} matrix"
                )));
            }
            if !seen.insert((*r, *c)) {
                return Err(CliError::input(format!(
                    "{at}: entry ({r}, {c}) given twice"
                )));
            }
            m.set(
                *r,
                *c,
                self.field
                    .parse_scalar(v)
                    .map_err(|e| CliError::at(&at, e))?,
            );
        }
        Ok(m)
    }

    fn scalars(&self, path: &str, values: &[String]) -> Result<Vec<Scalar>> {
        values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                self.field
                    .parse_scalar(v)
                    .map_err(|e| CliError::at(&format!("{path}[{i}]"), e))
            })
            .collect()
    }

    /// Rejects objects whose tensor spaces exceed the configured cap.
    fn cap(&self, path: &str, legs: &[usize]) -> Result<()> {
        let total = legs.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
        match total {
            Some(t) if t <= self.max_dim => Ok(()),
            _ => Err(CliError::input(format!(
                "{path}: tensor dimension {} exceeds HOPFGAL_MAX_DIM = {}",
                total.map_or("overflow".to_string(), |t| t.to_string()),
                self.max_dim
            ))),
        }
    }

    fn rationals_only(&self, path: &str, builtin: &str) -> Result<()> {
        if self.field != Field::Rational {
            return Err(CliError::input(format!(
                "{path}: builtin `{builtin}` is only defined over Q"
            )));
        }
        Ok(())
    }

    fn algebra(
        &self,
        path: &str,
        basis: &[String],
        mult: &Triples,
        unit: &Triples,
    ) -> Result<AlgebraData> {
        let names = unique_names(&format!("{path}.basis"), basis)?;
        let d = names.len();
        self.cap(path, &[d, d, d])?;
        let mult = self.matrix(&format!("{path}.mult"), d, d * d, mult)?;
        let unit = self.matrix(&format!("{path}.unit"), d, 1, unit)?;
        AlgebraData::new(self.field, names, mult, unit).map_err(|e| CliError::at(path, e))
    }

    fn inline_algebra(
        &self,
        path: &str,
        basis: &Option<Vec<String>>,
        mult: &Option<Triples>,
        unit: &Option<Triples>,
    ) -> Result<AlgebraData> {
        self.algebra(
            path,
            need(path, "basis", basis)?,
            need(path, "mult", mult)?,
            need(path, "unit", unit)?,
        )
    }

    fn grading(&self, path: &str, g: &RawGrading) -> Result<GradingGroup> {
        GradingGroup::new(g.free_rank, g.torsion.clone())
            .map_err(|e| CliError::at(&format!("{path}.grading"), e))
    }

    fn hopf(&self, path: &str, raw: &RawHopf) -> Result<HopfData> {
        let f = self.field;
        let h = match raw.builtin.as_deref() {
            Some("group_algebra") => build_group_algebra(
                f,
                &parse_group(&format!("{path}.group"), need(path, "group", &raw.group)?)?,
            ),
            Some("dual_group_algebra") => build_dual_group_algebra(
                f,
                &parse_group(&format!("{path}.group"), need(path, "group", &raw.group)?)?,
            ),
            Some("sweedler_h4") => sweedler_h4(f).map_err(|e| CliError::at(path, e))?,
            Some("trivial") => trivial_hopf(f),
            Some(other) => {
                return Err(CliError::input(format!(
                    "{path}.builtin: unknown Hopf algebra `{other}`"
                )))
            }
            None => {
                let a = self.inline_algebra(path, &raw.basis, &raw.mult, &raw.unit)?;
                let d = a.dim();
                let comult = self.matrix(
                    &format!("{path}.comult"),
                    d * d,
                    d,
                    need(path, "comult", &raw.comult)?,
                )?;
                let counit = self.matrix(
                    &format!("{path}.counit"),
                    1,
                    d,
                    need(path, "counit", &raw.counit)?,
                )?;
                let antipode = self.matrix(
                    &format!("{path}.antipode"),
                    d,
                    d,
                    need(path, "antipode", &raw.antipode)?,
                )?;
                let inverse = raw
                    .antipode_inverse
                    .as_ref()
                    .map(|t| self.matrix(&format!("{path}.antipode_inverse"), d, d, t))
                    .transpose()?;
                let supplied = inverse.is_some();
                let h = HopfData::new(a, comult, counit, antipode, inverse)
                    .map_err(|e| CliError::at(path, e))?;
                if supplied {
                    h
                } else {
                    h.with_antipode_inverse()
                }
            }
        };
        self.cap(path, &[h.dim(), h.dim(), h.dim()])?;
        Ok(h)
    }

    fn comodule_algebra(&self, path: &str, raw: &RawComoduleAlgebra) -> Result<ComoduleAlgebra> {
        let hopf = |key: &Option<String>| -> Result<&HopfData> {
            lookup(
                &self.doc.hopf,
                "hopf",
                &format!("{path}.hopf"),
                need(path, "hopf", key)?,
            )
        };
        let ca = match raw.builtin.as_deref() {
            Some("regular") => ComoduleAlgebra::regular(hopf(&raw.hopf)?),
            Some("trivial") => {
                let a = self.inline_algebra(path, &raw.basis, &raw.mult, &raw.unit)?;
                ComoduleAlgebra::trivial(a, hopf(&raw.hopf)?)
            }
            Some(name @ ("qsqrt2" | "qi" | "cyclic_cubic" | "qcbrt2_trivial")) => {
                self.rationals_only(path, name)?;
                match name {
                    "qsqrt2" => fields::qsqrt2(),
                    "qi" => fields::qi(),
                    "cyclic_cubic" => fields::cyclic_cubic(),
                    _ => fields::qcbrt2_trivial(),
                }
            }
            Some(other) => {
                return Err(CliError::input(format!(
                    "{path}.builtin: unknown comodule algebra `{other}`"
                )))
            }
            None => {
                let a = self.inline_algebra(path, &raw.basis, &raw.mult, &raw.unit)?;
                let d = a.dim();
                if let Some(g) = &raw.grading {
                    let group = self.grading(path, g)?;
                    let degrees = need(path, "degrees", &raw.degrees)?.clone();
                    ComoduleAlgebra::graded(a, group, degrees).map_err(|e| CliError::at(path, e))?
                } else {
                    let h = hopf(&raw.hopf)?;
                    self.cap(path, &[d, h.dim(), h.dim()])?;
                    let rho = self.matrix(
                        &format!("{path}.coaction"),
                        d * h.dim(),
                        d,
                        need(path, "coaction", &raw.coaction)?,
                    )?;
                    ComoduleAlgebra::finite(a, h.clone(), rho).map_err(|e| CliError::at(path, e))?
                }
            }
        };
        let dh = ca.coaction().hopf().map_or(1, HopfData::dim);
        self.cap(path, &[ca.dim(), ca.dim(), dh])?;
        self.cap(path, &[ca.dim(), dh, dh])?;
        Ok(ca)
    }

    fn extension(&self, path: &str, raw: &RawExtension) -> Result<Extension> {
        let ca = lookup(
            &self.doc.comodule_algebras,
            "comodule_algebra",
            &format!("{path}.comodule_algebra"),
            &raw.comodule_algebra,
        )?
        .clone();
        let e = match (raw.base.as_deref(), &raw.inclusion) {
            (None | Some("explicit"), Some(incl)) => {
                let names = unique_names(
                    &format!("{path}.base_basis"),
                    need(path, "base_basis", &raw.base_basis)?,
                )?;
                let m = self.matrix(&format!("{path}.inclusion"), ca.dim(), names.len(), incl)?;
                Extension::new(ca, m, Some(names))
            }
            (None | Some("coinvariants"), None) => Extension::over_coinvariants(ca),
            (Some("ground"), None) => Extension::over_ground(ca),
            (Some(other), _) => {
                return Err(CliError::input(format!(
                    "{path}.base: expected \"coinvariants\", \"ground\" or an `inclusion`, got {other:?}"
                )))
            }
        };
        e.map_err(|err| CliError::at(path, err))
    }

    fn morphism(&self, path: &str, raw: &RawMorphism) -> Result<ExtensionMorphism> {
        let ext = |key: &str, name: &Option<String>| -> Result<&Extension> {
            lookup(
                &self.doc.extensions,
                "extension",
                &format!("{path}.{key}"),
                need(path, key, name)?,
            )
        };
        let m = match raw.builtin.as_deref() {
            Some("identity") => ExtensionMorphism::identity(ext("extension", &raw.extension)?),
            Some("from_ground") => {
                ExtensionMorphism::from_ground(ext("extension", &raw.extension)?)
            }
            Some("forget_coaction") => {
                ExtensionMorphism::forget_coaction(ext("extension", &raw.extension)?)
            }
            Some("galois_test") => {
                ExtensionMorphism::galois_test(ext("extension", &raw.extension)?)
            }
            Some(other) => {
                return Err(CliError::input(format!(
                    "{path}.builtin: unknown morphism `{other}`"
                )))
            }
            None => {
                let source = ext("source", &raw.source)?;
                let target = ext("target", &raw.target)?;
                let (h, _) = source
                    .comodule_algebra()
                    .finite_parts()
                    .map_err(|e| CliError::at(path, e))?;
                let (hp, _) = target
                    .comodule_algebra()
                    .finite_parts()
                    .map_err(|e| CliError::at(path, e))?;
                let chi = self.matrix(
                    &format!("{path}.chi"),
                    hp.dim(),
                    h.dim(),
                    need(path, "chi", &raw.chi)?,
                )?;
                let chi = HopfMap::new(h, hp, chi)
                    .map_err(|e| CliError::at(&format!("{path}.chi"), e))?;
                let (da, dap) = (source.algebra().dim(), target.algebra().dim());
                let alpha = self.matrix(
                    &format!("{path}.alpha"),
                    dap,
                    da,
                    need(path, "alpha", &raw.alpha)?,
                )?;
                ExtensionMorphism::new(source.clone(), target.clone(), chi, alpha)
            }
        }
        .map_err(|e| CliError::at(path, e))?;
        let dh = m.chi().source().dim();
        self.cap(
            path,
            &[m.target().base().dim(), m.source().algebra().dim(), dh],
        )?;
        self.cap(
            path,
            &[m.target().algebra().dim(), dh, m.chi().target().dim()],
        )?;
        Ok(m)
    }

    fn topology(&self, path: &str, raw: &RawTopology) -> Result<KTopology> {
        let covers = raw
            .covers
            .iter()
            .enumerate()
            .map(|(i, name)| {
                lookup(
                    &self.doc.extensions,
                    "extension",
                    &format!("{path}.covers[{i}]"),
                    name,
                )
                .cloned()
            })
            .collect::<Result<Vec<_>>>()?;
        let base = match (&raw.base, covers.first()) {
            (Some(b), _) => self.algebra(&format!("{path}.base"), &b.basis, &b.mult, &b.unit)?,
            (None, Some(cover)) => cover.base().clone(),
            (None, None) => {
                return Err(CliError::input(format!(
                    "{path}: give a `base` or at least one cover"
                )))
            }
        };
        KTopology::new(base, covers).map_err(|e| CliError::at(path, e))
    }

    fn comodule(&self, path: &str, raw: &RawComodule) -> Result<LeftComodule> {
        let hopf = || -> Result<&HopfData> {
            lookup(
                &self.doc.hopf,
                "hopf",
                &format!("{path}.hopf"),
                need(path, "hopf", &raw.hopf)?,
            )
        };
        let v = match (raw.builtin.as_deref(), &raw.grading) {
            (Some("trivial"), Some(g)) => {
                let group = self.grading(path, g)?;
                LeftComodule::character(&group, &group.zero())
            }
            (Some("trivial"), None) => Ok(LeftComodule::trivial(hopf()?)),
            (Some("regular"), _) => Ok(LeftComodule::regular(hopf()?)),
            (Some("grouplike"), _) => {
                let g = self.scalars(
                    &format!("{path}.grouplike"),
                    need(path, "grouplike", &raw.grouplike)?,
                )?;
                LeftComodule::grouplike(hopf()?, &g)
            }
            (Some("character"), _) => {
                let group = self.grading(path, need(path, "grading", &raw.grading)?)?;
                LeftComodule::character(&group, need(path, "degree", &raw.degree)?)
            }
            (Some(other), _) => {
                return Err(CliError::input(format!(
                    "{path}.builtin: unknown comodule `{other}`"
                )))
            }
            (None, Some(g)) => {
                let group = self.grading(path, g)?;
                let names =
                    unique_names(&format!("{path}.basis"), need(path, "basis", &raw.basis)?)?;
                LeftComodule::graded(&group, names, need(path, "degrees", &raw.degrees)?.clone())
            }
            (None, None) => {
                let h = hopf()?;
                let names =
                    unique_names(&format!("{path}.basis"), need(path, "basis", &raw.basis)?)?;
                self.cap(path, &[h.dim(), h.dim(), names.len()])?;
                let matrix = self.matrix(
                    &format!("{path}.coaction"),
                    h.dim() * names.len(),
                    names.len(),
                    need(path, "coaction", &raw.coaction)?,
                )?;
                LeftComodule::new(
                    names,
                    Coaction::Finite {
                        hopf: h.clone(),
                        matrix,
                    },
                )
            }
        };
        v.map_err(|e| CliError::at(path, e))
    }

    fn module(&self, path: &str, raw: &RawModule) -> Result<RelativeHopfModule> {
        let ca = lookup(
            &self.doc.comodule_algebras,
            "comodule_algebra",
            &format!("{path}.comodule_algebra"),
            &raw.comodule_algebra,
        )?;
        let m = match raw.builtin.as_deref() {
            Some("regular") => Ok(RelativeHopfModule::regular(ca)),
            Some("hopf_tensor") => RelativeHopfModule::hopf_tensor(ca),
            Some(other) => {
                return Err(CliError::input(format!(
                    "{path}.builtin: unknown module `{other}`"
                )))
            }
            None => {
                let names =
                    unique_names(&format!("{path}.basis"), need(path, "basis", &raw.basis)?)?;
                let (n, da) = (names.len(), ca.dim());
                self.cap(path, &[n, da, da])?;
                let action = self.matrix(
                    &format!("{path}.action"),
                    n,
                    n * da,
                    need(path, "action", &raw.action)?,
                )?;
                let coaction = match ca.coaction() {
                    Coaction::Finite { hopf, .. } => {
                        self.cap(path, &[n, hopf.dim(), hopf.dim()])?;
                        let matrix = self.matrix(
                            &format!("{path}.coaction"),
                            n * hopf.dim(),
                            n,
                            need(path, "coaction", &raw.coaction)?,
                        )?;
                        Coaction::Finite {
                            hopf: hopf.clone(),
                            matrix,
                        }
                    }
                    Coaction::Graded { group, .. } => Coaction::Graded {
                        group: group.clone(),
                        degrees: need(path, "degrees", &raw.degrees)?.clone(),
                    },
                };
                RelativeHopfModule::new(ca.clone(), names, action, coaction)
            }
        };
        m.map_err(|e| CliError::at(path, e))
    }

    fn bundle_request(&self, path: &str, raw: &RawBundleRequest) -> Result<BundleRequest> {
        let e = lookup(
            &self.doc.extensions,
            "extension",
            &format!("{path}.extension"),
            &raw.extension,
        )?;
        let dh = e
            .comodule_algebra()
            .coaction()
            .hopf()
            .map_or(1, HopfData::dim);
        let dim_of = |key: String, name: &str| -> Result<usize> {
            Ok(lookup(&self.doc.comodules, "comodule", &key, name)?.dim())
        };
        for (i, v) in raw.comodules.iter().enumerate() {
            let key = format!("{path}.comodules[{i}]");
            if !raw.comodules[..i].contains(v) {
                self.cap(&key, &[e.algebra().dim(), dh, dim_of(key.clone(), v)?])?;
            }
        }
        for (i, (v, w)) in raw.products.iter().enumerate() {
            let key = format!("{path}.products[{i}]");
            for name in [v, w] {
                if !raw.comodules.contains(name) {
                    return Err(CliError::input(format!(
                        "{key}: `{name}` is not among the request's comodules"
                    )));
                }
            }
            let legs = [
                e.algebra().dim(),
                dim_of(key.clone(), v)?,
                dim_of(key.clone(), w)?,
            ];
            self.cap(&key, &legs)?;
        }
        Ok(BundleRequest {
            extension: raw.extension.clone(),
            comodules: raw.comodules.clone(),
            products: raw.products.clone(),
        })
    }
}
