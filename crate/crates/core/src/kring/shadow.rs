use num_bigint::BigInt;

use crate::bundle::{cotensor_bundle, LeftComodule};
use crate::comodule::{Coaction, Extension};
use crate::error::{Error, Result};
use crate::hopf::{grouplikes, FiniteGroup, HopfData};
use crate::linear::Scalar;

use super::augmented::{AugmentedRing, IntAlgebra, ModuleElem, ModuleModel, Ring};

fn unsupported<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Unsupported(msg.into()))
}

/// The grouplikes of a Hopf algebra spanned by them, with their group law.
fn grouplike_group(h: &HopfData) -> Result<(FiniteGroup, Vec<Vec<Scalar>>)> {
    let Some(gs) = grouplikes(h)? else {
        return unsupported("grouplike search was inconclusive");
    };
    if gs.len() != h.dim() {
        return unsupported(format!(
            "only {} grouplikes in dimension {}; the comodule ring is not a group ring",
            gs.len(),
            h.dim()
        ));
    }
    let table = gs
        .iter()
        .map(|a| {
            let ab_all: Vec<Vec<Scalar>> = gs.iter().map(|b| h.algebra().product(a, b)).collect();
            ab_all
                .iter()
                .map(|ab| {
                    gs.iter()
                        .position(|g| g == ab)
                        .expect("grouplikes are closed under products")
                })
                .collect()
        })
        .collect();
    let names = (0..gs.len()).map(|i| format!("g{i}")).collect();
    Ok((FiniteGroup::from_table(names, table)?, gs))
}

/// `(ℤ[G], ℤ, 1)` for an extension of the ground field whose comodules are
/// `G`-graded: a group element acts on `ℤ` by the rank of its line bundle
/// `A□𝕜_g`. Other covers are not modelled.
pub fn bundle_shadow(e: &Extension) -> Result<AugmentedRing> {
    if e.base().dim() != 1 {
        return unsupported("K⁰ of the base is only modelled over the ground field");
    }
    let (group, lines): (FiniteGroup, Vec<LeftComodule>) = match e.comodule_algebra().coaction() {
        Coaction::Graded { group, .. } => {
            let Some(g) = group.to_finite_group() else {
                return unsupported("grading group is infinite");
            };
            let lines = (0..g.order())
                .map(|i| {
                    let orders: Vec<usize> = group.torsion().iter().map(|&n| n as usize).collect();
                    let degree: Vec<i64> = crate::linear::tensor::multi_index(&orders, i)
                        .into_iter()
                        .map(|d| d as i64)
                        .collect();
                    LeftComodule::character(group, &degree)
                })
                .collect::<Result<_>>()?;
            (g, lines)
        }
        Coaction::Finite { hopf, .. } => {
            let (g, gs) = grouplike_group(hopf)?;
            let lines = gs
                .iter()
                .map(|x| LeftComodule::grouplike(hopf, x))
                .collect::<Result<_>>()?;
            (g, lines)
        }
    };
    let weights = lines
        .iter()
        .map(|v| Ok(BigInt::from(cotensor_bundle(e, v)?.dim())))
        .collect::<Result<Vec<_>>>()?;
    AugmentedRing::new(
        Ring::Finite(IntAlgebra::group_ring(&group)),
        ModuleModel::Scalar(weights),
        ModuleElem::Scalar(BigInt::from(1)),
    )
}
