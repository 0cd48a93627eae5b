use crate::comodule::{is_hopf_galois, Extension};
use crate::error::{input, Result};
use crate::hopf::{coflatness, AlgebraData, Coflatness, HopfMap};
use crate::linear::Mat;
use crate::report::Verdict;

use super::kappa::is_cartesian;
use super::ExtensionMorphism;

/// A finite list of Hopf–Galois covers of one base algebra, always
/// containing the identity cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTopology {
    base: AlgebraData,
    covers: Vec<Extension>,
}

impl KTopology {
    /// Every cover must be Hopf–Galois over `base`; the identity cover is
    /// appended when no cover is an isomorphism.
    pub fn new(base: AlgebraData, covers: Vec<Extension>) -> Result<KTopology> {
        for (i, cover) in covers.iter().enumerate() {
            let b = cover.base();
            if b.mult() != base.mult() || b.unit() != base.unit() {
                return input(format!("cover {i} is not an extension of the base algebra"));
            }
            let report = is_hopf_galois(cover)?;
            if let Some(v) = report.failures().next() {
                return input(format!(
                    "cover {i} is not Hopf–Galois: {} ({})",
                    v.name,
                    v.witness.as_deref().unwrap_or("?")
                ));
            };
        }
        let mut covers = covers;
        if !covers.iter().any(Extension::is_isomorphism) {
            covers.push(Extension::trivial(base.clone())?);
        }
        Ok(KTopology { base, covers })
    }

    /// Only the identity cover.
    pub fn minimal(base: AlgebraData) -> Result<KTopology> {
        KTopology::new(base, Vec::new())
    }

    pub fn base(&self) -> &AlgebraData {
        &self.base
    }

    pub fn covers(&self) -> &[Extension] {
        &self.covers
    }
}

/// A cover of the source base matched by a Cartesian lift into a cover of
/// the target base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftWitness {
    pub cover: usize,
    pub target_cover: usize,
    /// Where the lift came from: `catalogue[k]`, `identity` or `isomorphism cover`.
    pub lift: String,
    pub coflatness: Coflatness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KContinuity {
    pub verdict: Verdict,
    /// One witness per cover when the verdict passes, empty otherwise.
    pub witnesses: Vec<LiftWitness>,
}

/// Candidate lifts of `cover` along `f`: supplied ones plus the identity and
/// the lift of an isomorphism cover into the identity cover.
fn candidates(
    f: &Mat,
    cover: &Extension,
    target: &KTopology,
    catalogue: &[ExtensionMorphism],
) -> Result<Vec<(String, ExtensionMorphism)>> {
    let mut out: Vec<(String, ExtensionMorphism)> = catalogue
        .iter()
        .enumerate()
        .filter(|(_, m)| m.source() == cover)
        .map(|(k, m)| (format!("catalogue[{k}]"), m.clone()))
        .collect();
    if f.is_square() && *f == Mat::identity(f.field(), f.rows()) && target.covers.contains(cover) {
        out.push(("identity".into(), ExtensionMorphism::identity(cover)?));
    }
    if cover.is_isomorphism() {
        let inverse = cover.inclusion().inverse().expect("isomorphism cover");
        let alpha = f.mul(&inverse);
        if let Some(identity_cover) = target
            .covers
            .iter()
            .find(|e| e.is_isomorphism() && e.inclusion().is_square())
        {
            let (h, _) = cover.comodule_algebra().finite_parts()?;
            let (hp, _) = identity_cover.comodule_algebra().finite_parts()?;
            let alpha = identity_cover.inclusion().mul(&alpha);
            if let Ok(chi) = HopfMap::new(h, hp, Mat::identity(f.field(), 1)) {
                if let Ok(m) =
                    ExtensionMorphism::new(cover.clone(), identity_cover.clone(), chi, alpha)
                {
                    out.push(("isomorphism cover".into(), m));
                }
            }
        }
    }
    Ok(out)
}

/// `f: B → B′` is k-continuous when every cover of `B` has a Cartesian lift
/// over `f` into some cover of `B′`. Lifts are searched among the supplied
/// catalogue and the canonical ones; no cover is synthesized.
pub fn is_k_continuous(
    f: &Mat,
    source: &KTopology,
    target: &KTopology,
    catalogue: &[ExtensionMorphism],
) -> Result<KContinuity> {
    let check = source.base.check_algebra_map(f, &target.base);
    if let Some(v) = check.failures().next() {
        return input(format!("base map is not a unital algebra map: {}", v.name));
    }
    let mut witnesses = Vec::new();
    for (i, cover) in source.covers.iter().enumerate() {
        let mut found = None;
        for (label, m) in candidates(f, cover, target, catalogue)? {
            let Some(j) = target.covers.iter().position(|e| e == m.target()) else {
                continue;
            };
            if m.beta() != f || !is_cartesian(&m)?.all_pass() {
                continue;
            }
            found = Some(LiftWitness {
                cover: i,
                target_cover: j,
                lift: label,
                coflatness: coflatness(m.chi()),
            });
            break;
        }
        match found {
            Some(w) => witnesses.push(w),
            None => {
                return Ok(KContinuity {
                    verdict: Verdict::fail(
                        "k_continuous",
                        format!("cover {i} has no Cartesian lift"),
                    ),
                    witnesses: Vec::new(),
                })
            }
        }
    }
    Ok(KContinuity {
        verdict: Verdict::pass("k_continuous"),
        witnesses,
    })
}
