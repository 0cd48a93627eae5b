use crate::comodule::{cotensor, BalancedTensor};
use crate::error::{input, Error, Result};
use crate::linear::{coordinates_in, is_bijective, Mat};
use crate::report::{Report, Verdict};

use super::kappa::{
    base_right_action, coords, generalized_canonical_map, left_coaction_via_chi, KappaMap,
};
use super::ExtensionMorphism;
use crate::linear::sparse::mul_kron;

/// `second ∘ first`; the target of `first` must be the source of `second`.
pub fn compose_morphisms(
    second: &ExtensionMorphism,
    first: &ExtensionMorphism,
) -> Result<ExtensionMorphism> {
    if first.target() != second.source() {
        return input(
            "morphisms are not composable: target of the first differs from source of the second",
        );
    }
    let chi = first.chi().then(second.chi())?;
    ExtensionMorphism::new(
        first.source().clone(),
        second.target().clone(),
        chi,
        second.alpha().mul(first.alpha()),
    )
}

/// The generalized canonical map of a composite next to its factorization
/// through the two component maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub composite: KappaMap,
    /// `iso_R ∘ (κ′□H) ∘ iso_B ∘ (B″⊗κ) ∘ iso_L`, in the coordinates of `composite`.
    pub factored: Mat,
    pub report: Report,
}

fn inverse_coords(basis: &Mat, vectors: &Mat, what: &str) -> Result<Mat> {
    coordinates_in(basis, vectors)?
        .ok_or_else(|| Error::InvariantViolation(format!("{what} leaves the expected subspace")))
}

/// Writes `κ″` for `second ∘ first` as
/// `B″⊗_B A ≅ B″⊗_{B′}(B′⊗_B A) → B″⊗_{B′}(A′□^{H′}H) ≅ (B″⊗_{B′}A′)□^{H′}H
///  → (A″□^{H″}H′)□^{H′}H ≅ A″□^{H″}H`
/// and compares the two matrices exactly.
pub fn composition_factorization(
    second: &ExtensionMorphism,
    first: &ExtensionMorphism,
) -> Result<Factorization> {
    let composite_morphism = compose_morphisms(second, first)?;
    let composite = generalized_canonical_map(&composite_morphism)?;
    let kappa = generalized_canonical_map(first)?;
    let kappa2 = generalized_canonical_map(second)?;

    let (h, _) = first.source_parts()?;
    let (hp, rho_ap) = second.source_parts()?;
    let a = first.source().algebra();
    let (ap, app) = (first.target().algebra(), second.target().algebra());
    let (bp, bpp) = (first.target().base(), second.target().base());
    let ih = h.identity();
    let ibpp = bpp.identity();

    let d = &kappa.domain;
    let c = &kappa.codomain;
    let kc = c.basis_matrix();
    let right_bpp = base_right_action(second);

    // B″⊗_{B′}(B′⊗_B A)
    let left_on_d = d
        .projector()
        .mul(&bp.mult().kron(&a.identity()))
        .mul(&bp.identity().kron(d.section()));
    let x = BalancedTensor::new(&right_bpp, &left_on_d)?;
    let lift_l = ibpp.kron(&mul_kron(d.projector(), bp.unit(), &a.identity()));
    let iso_l = composite
        .domain
        .descend(&x.projector().mul(&lift_l), "B″⊗_B A → B″⊗_{B′}(B′⊗_B A)")?;

    // B″⊗_{B′}(A′□^{H′}H)
    let act_on_c = mul_kron(ap.mult(), first.target().inclusion(), &ap.identity()).kron(&ih);
    let left_on_c = coords(
        c,
        &mul_kron(&act_on_c, &bp.identity(), &kc),
        "left B′-action on the cotensor product",
    )?;
    let y = BalancedTensor::new(&right_bpp, &left_on_c)?;
    let lifted_kappa = x.descend(&mul_kron(y.projector(), &ibpp, &kappa.matrix), "B″⊗κ")?;

    // (B″⊗_{B′}A′)□^{H′}H
    let e = &kappa2.domain;
    let rho_e = e.descend(
        &e.projector().kron(&hp.identity()).mul(&ibpp.kron(&rho_ap)),
        "coaction on B″⊗_{B′}A′",
    )?;
    let z = cotensor(&rho_e, &left_coaction_via_chi(first, &h))?;
    let to_z = y.descend(
        &e.projector().kron(&ih).mul(&ibpp.kron(&kc)),
        "B″⊗_{B′}(A′□H) → (B″⊗_{B′}A′)□H",
    )?;
    let iso_b = coords(&z, &to_z, "B″⊗_{B′}(A′□H) → (B″⊗_{B′}A′)□H")?;

    // (A″□^{H″}H′)□^{H′}H
    let cp = &kappa2.codomain;
    let kcp = cp.basis_matrix();
    let rho_cp = inverse_coords(
        &kcp.kron(&hp.identity()),
        &app.identity().kron(hp.comult()).mul(&kcp),
        "coaction on A″□H′",
    )?;
    let w = cotensor(&rho_cp, &left_coaction_via_chi(first, &h))?;
    let kappa2_box = coords(&w, &kappa2.matrix.kron(&ih).mul(&z.basis_matrix()), "κ′□H")?;

    // A″□^{H″}H
    let cancel = app
        .identity()
        .kron(hp.counit())
        .kron(&ih)
        .mul(&kcp.kron(&ih))
        .mul(&w.basis_matrix());
    let iso_r = coords(&composite.codomain, &cancel, "(A″□H′)□H → A″□H")?;

    let factored = iso_r
        .mul(&kappa2_box)
        .mul(&iso_b)
        .mul(&lifted_kappa)
        .mul(&iso_l);
    let mut report = Report::new();
    report.push(Verdict::from_bool(
        "factorization",
        factored == composite.matrix,
        match factored.first_differing_column(&composite.matrix) {
            Some(col) => format!("column {col} of the composite differs"),
            None => "shapes differ".into(),
        },
    ));
    for (name, map) in [
        ("left_cancellation_bijective", &iso_l),
        ("balanced_cotensor_bijective", &iso_b),
        ("right_cancellation_bijective", &iso_r),
    ] {
        report.push(Verdict::from_bool(
            name,
            is_bijective(map),
            format!("{}x{} of rank {}", map.rows(), map.cols(), map.rank()),
        ));
    }
    let (c1, c2, c3) = (
        is_bijective(&kappa.matrix),
        is_bijective(&kappa2.matrix),
        is_bijective(&composite.matrix),
    );
    report.push(Verdict::from_bool(
        "cartesian_composes",
        !(c1 && c2) || c3,
        format!("components cartesian: {c1}, {c2}; composite: {c3}"),
    ));
    report.dim("dim_domain", composite.domain.dim());
    report.dim("dim_codomain", composite.codomain.dim());
    report.dim("dim_middle", x.dim());
    Ok(Factorization {
        composite,
        factored,
        report,
    })
}
