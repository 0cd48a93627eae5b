use crate::comodule::{Coaction, RelativeHopfModule};
use crate::error::{input, precondition, Result};
use crate::hopf::antipode_inverse;
use crate::linear::sparse::{kron_mul, mul_kron};
use crate::linear::{tensor, Mat};

use super::comodule::LeftComodule;

pub(crate) fn pair_names(left: &[String], right: &[String]) -> Vec<String> {
    left.iter()
        .flat_map(|x| right.iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

/// `M◁V`: the space `M⊗V` with `(m⊗v)a = ma⊗v` and coaction
/// `m⊗v ↦ m₀⊗v₀⊗S⁻¹(v₋₁)m₁`. For gradings the degree is `deg m - deg v`.
pub fn triangle_action(m: &RelativeHopfModule, v: &LeftComodule) -> Result<RelativeHopfModule> {
    let f = m.base().field();
    let (dm, dv, da) = (m.dim(), v.dim(), m.base().dim());
    let action = tensor::permute_cols(
        &m.action().kron(&Mat::identity(f, dv)),
        &[dm, dv, da],
        &[0, 2, 1],
    );
    let names = pair_names(m.basis_names(), v.basis_names());
    if let (
        Coaction::Graded {
            group,
            degrees: dmod,
        },
        Coaction::Graded {
            group: gv,
            degrees: drep,
        },
    ) = (m.coaction(), v.coaction())
    {
        if group != gv {
            return input("module and comodule are graded by different groups");
        }
        let degrees = dmod
            .iter()
            .flat_map(|x| drep.iter().map(move |y| group.sub(x, y)))
            .collect();
        let coaction = Coaction::Graded {
            group: group.clone(),
            degrees,
        };
        return RelativeHopfModule::new(m.base().clone(), names, action, coaction);
    }
    let m = m.materialized()?;
    let Coaction::Finite { hopf, matrix: rho } = m.coaction() else {
        unreachable!("materialized coaction is finite")
    };
    let (hv, lambda) = v.finite_parts(f)?;
    if &hv != hopf {
        return input("module and comodule use different Hopf algebras");
    }
    let Some(s_inv) = hopf
        .antipode_inv()
        .cloned()
        .or_else(|| antipode_inverse(hopf))
    else {
        return precondition("antipode is not invertible");
    };
    let h = hopf.dim();
    // legs m, m₁, v₋₁, v  →  m, v, v₋₁, m₁
    let split = tensor::permute_rows(&rho.kron(&lambda), &[dm, h, h, dv], &[0, 3, 2, 1]);
    let twisted = mul_kron(hopf.mult(), &s_inv, &hopf.identity());
    let matrix = kron_mul(&Mat::identity(f, dm * dv), &twisted, &split);
    RelativeHopfModule::new(
        m.base().clone(),
        names,
        action,
        Coaction::Finite {
            hopf: hopf.clone(),
            matrix,
        },
    )
}
