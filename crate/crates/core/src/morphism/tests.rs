use super::*;
use crate::comodule::fields::{cyclic_cubic, qsqrt2, trivial_coaction};
use crate::comodule::{canonical_map, ComoduleAlgebra, Extension, RelativeHopfModule};
use crate::hopf::{build_group_algebra, sweedler_h4, FiniteGroup, HopfData, HopfMap};
use crate::linear::sparse::mul_kron;
use crate::linear::tensor::{flip, permute_rows};
use crate::linear::{Field, Mat};

const Q: Field = Field::Rational;

fn group_algebra(n: usize) -> HopfData {
    build_group_algebra(Q, &FiniteGroup::cyclic(n).unwrap())
}

fn hopf_over_ground(h: &HopfData) -> Extension {
    Extension::over_ground(ComoduleAlgebra::regular(h)).unwrap()
}

fn qsqrt2_extension() -> Extension {
    Extension::over_coinvariants(qsqrt2()).unwrap()
}

fn mod_two(n: usize) -> HopfMap {
    let images: Vec<usize> = (0..n).map(|i| i % 2).collect();
    HopfMap::from_group_homomorphism(
        Q,
        &FiniteGroup::cyclic(n).unwrap(),
        &FiniteGroup::cyclic(2).unwrap(),
        &images,
    )
    .unwrap()
}

fn sign() -> HopfMap {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    // Transpositions are exactly the names of the form "(ij)".
    let parity: Vec<usize> = s3
        .names()
        .iter()
        .map(|n| usize::from(n.len() == 4))
        .collect();
    HopfMap::from_group_homomorphism(Q, &s3, &z2, &parity).unwrap()
}

fn h4_to_z2() -> HopfMap {
    let h4 = sweedler_h4(Q).unwrap();
    let m = Mat::from_i64_rows(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    HopfMap::new(h4, group_algebra(2), m).unwrap()
}

/// `(H, H ← 𝕜) → (𝕜, H ← H)`: the Yetter–Drinfeld instance.
fn yetter_drinfeld(h: &HopfData) -> ExtensionMorphism {
    ExtensionMorphism::forget_coaction(&hopf_over_ground(h)).unwrap()
}

fn commutative_fixtures() -> Vec<ExtensionMorphism> {
    vec![
        ExtensionMorphism::forget_coaction(&qsqrt2_extension()).unwrap(),
        ExtensionMorphism::forget_coaction(&Extension::over_coinvariants(cyclic_cubic()).unwrap())
            .unwrap(),
        yetter_drinfeld(&group_algebra(2)),
        ExtensionMorphism::from_hopf_map(&mod_two(4)).unwrap(),
    ]
}

fn cartesian_fixtures() -> Vec<ExtensionMorphism> {
    let mut out = commutative_fixtures();
    out.push(yetter_drinfeld(&sweedler_h4(Q).unwrap()));
    out.push(yetter_drinfeld(&build_group_algebra(
        Q,
        &FiniteGroup::symmetric(3).unwrap(),
    )));
    out.push(ExtensionMorphism::from_hopf_map(&sign()).unwrap());
    out.push(ExtensionMorphism::from_hopf_map(&h4_to_z2()).unwrap());
    out
}

/// `h⊗h̃ ↦ h₁h̃S(h₂)⊗h₃` on `H⊗H`.
fn yetter_drinfeld_closed_form(h: &HopfData) -> Mat {
    let d = h.dim();
    let id = h.identity();
    let delta3 = h.comult().kron(&id).mul(h.comult());
    let spread = permute_rows(&delta3.kron(&id), &[d, d, d, d], &[0, 3, 1, 2]);
    let times_antipode = mul_kron(h.mult(), &id, h.antipode());
    times_antipode
        .kron(&id)
        .mul(&h.mult().kron(&id).kron(&id))
        .mul(&spread)
}

#[test]
fn kappa_of_identity_is_bijective() {
    for e in [
        qsqrt2_extension(),
        hopf_over_ground(&sweedler_h4(Q).unwrap()),
    ] {
        let report = is_cartesian(&ExtensionMorphism::identity(&e).unwrap()).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }
}

#[test]
fn forgetting_the_coaction_recovers_the_canonical_map() {
    let e = qsqrt2_extension();
    let kappa =
        generalized_canonical_map(&ExtensionMorphism::forget_coaction(&e).unwrap()).unwrap();
    let can = canonical_map(&e).unwrap();
    assert_eq!(kappa.matrix.rank(), can.matrix.rank());
    assert!(
        is_cartesian(&ExtensionMorphism::forget_coaction(&e).unwrap())
            .unwrap()
            .all_pass()
    );
}

#[test]
fn distributive_law_matches_the_yetter_drinfeld_formula() {
    for h in [
        sweedler_h4(Q).unwrap(),
        build_group_algebra(Q, &FiniteGroup::symmetric(3).unwrap()),
    ] {
        let law = distributive_law(&yetter_drinfeld(&h)).unwrap();
        let expected = law.descend(&yetter_drinfeld_closed_form(&h)).unwrap();
        assert_eq!(law.matrix, expected);
        assert_eq!(law.kappa.matrix.mul(&law.matrix), law.kappa_tilde.matrix);
    }
}

#[test]
fn kappa_inverse_matches_its_closed_form() {
    let h = sweedler_h4(Q).unwrap();
    let kappa = generalized_canonical_map(&yetter_drinfeld(&h)).unwrap();
    // x⊗y ↦ xS(y₁)⊗y₂
    let id = h.identity();
    let closed = mul_kron(h.mult(), &id, h.antipode())
        .kron(&id)
        .mul(&id.kron(h.comult()));
    let inverse = kappa
        .domain
        .projector()
        .mul(&closed)
        .mul(&kappa.codomain.basis_matrix());
    assert_eq!(kappa.matrix.inverse().unwrap(), inverse);
}

#[test]
fn distributive_law_is_the_flip_when_commutative() {
    for m in commutative_fixtures() {
        let law = distributive_law(&m).unwrap();
        let (da, dbp) = (m.source().algebra().dim(), m.target().base().dim());
        assert_eq!(law.matrix, law.descend(&flip(Q, da, dbp)).unwrap());
    }
}

#[test]
fn induced_algebra_passes_on_cartesian_fixtures() {
    for m in cartesian_fixtures() {
        let induced = induced_algebra_on_pullback(&m).unwrap();
        assert!(
            induced.report.all_pass(),
            "{:?}",
            induced.report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn induced_algebra_of_yetter_drinfeld_has_the_dimension_of_h_squared() {
    let h = sweedler_h4(Q).unwrap();
    let induced = induced_algebra_on_pullback(&yetter_drinfeld(&h)).unwrap();
    assert_eq!(induced.comodule_algebra.dim(), 16);
}

#[test]
fn distributive_law_needs_a_bijective_kappa() {
    let e = Extension::over_ground(trivial_coaction(qsqrt2().algebra().clone())).unwrap();
    let m = ExtensionMorphism::from_ground(&e).unwrap();
    let err = distributive_law(&m).unwrap_err().to_string();
    assert!(err.contains("kappa not bijective"), "{err}");
}

#[test]
fn ground_morphism_is_cartesian_iff_base_is_coinvariant() {
    let e = qsqrt2_extension();
    assert!(is_cartesian(&ExtensionMorphism::from_ground(&e).unwrap())
        .unwrap()
        .all_pass());
    let loose = Extension::over_ground(trivial_coaction(qsqrt2().algebra().clone())).unwrap();
    assert!(
        !is_cartesian(&ExtensionMorphism::from_ground(&loose).unwrap())
            .unwrap()
            .all_pass()
    );
}

#[test]
fn galois_test_agrees_with_the_galois_verdict() {
    let trivial =
        Extension::over_coinvariants(trivial_coaction(qsqrt2().algebra().clone())).unwrap();
    for (e, expected) in [(qsqrt2_extension(), true), (trivial, false)] {
        let report = is_cartesian(&ExtensionMorphism::galois_test(&e).unwrap()).unwrap();
        assert_eq!(report.all_pass(), expected);
    }
}

#[test]
fn morphism_constructor_rejects_non_colinear_alpha() {
    let e = qsqrt2_extension();
    let (h, _) = e.comodule_algebra().finite_parts().unwrap();
    let swap = Mat::from_i64_rows(Q, &[&[1, 0], &[0, -1]]);
    // σ is an algebra automorphism commuting with the coaction, so it passes;
    // a non-algebra map does not.
    assert!(ExtensionMorphism::new(e.clone(), e.clone(), HopfMap::identity(&h), swap).is_ok());
    let bad = Mat::from_i64_rows(Q, &[&[1, 1], &[0, 1]]);
    assert!(ExtensionMorphism::new(e.clone(), e, HopfMap::identity(&h), bad).is_err());
}

fn sigma_on_qsqrt2() -> ExtensionMorphism {
    let t = Extension::trivial(qsqrt2().algebra().clone()).unwrap();
    let (h, _) = t.comodule_algebra().finite_parts().unwrap();
    let sigma = Mat::from_i64_rows(Q, &[&[1, 0], &[0, -1]]);
    ExtensionMorphism::new(t.clone(), t, HopfMap::identity(&h), sigma).unwrap()
}

fn chains() -> Vec<(ExtensionMorphism, ExtensionMorphism)> {
    let mut out = Vec::new();
    for chi in [mod_two(4), sign(), h4_to_z2()] {
        let first = ExtensionMorphism::from_hopf_map(&chi).unwrap();
        let second = ExtensionMorphism::from_hopf_map(&HopfMap::counit(chi.target())).unwrap();
        out.push((second, first));
    }
    let first = ExtensionMorphism::forget_coaction(&qsqrt2_extension()).unwrap();
    out.push((sigma_on_qsqrt2(), first));
    out
}

#[test]
fn composite_kappa_factors_through_its_components() {
    for (second, first) in chains() {
        let fact = composition_factorization(&second, &first).unwrap();
        assert!(
            fact.report.all_pass(),
            "{:?}",
            fact.report.failures().collect::<Vec<_>>()
        );
        let c1 = is_cartesian(&first).unwrap().all_pass();
        let c2 = is_cartesian(&second).unwrap().all_pass();
        let c = is_cartesian(&compose_morphisms(&second, &first).unwrap())
            .unwrap()
            .all_pass();
        assert_eq!(c, c1 && c2);
    }
}

#[test]
fn composing_with_identity_keeps_kappa() {
    let m = ExtensionMorphism::from_hopf_map(&sign()).unwrap();
    let id = ExtensionMorphism::identity(m.target()).unwrap();
    let composite = compose_morphisms(&id, &m).unwrap();
    assert_eq!(
        generalized_canonical_map(&composite).unwrap().matrix,
        generalized_canonical_map(&m).unwrap().matrix
    );
}

#[test]
fn non_composable_morphisms_are_rejected() {
    let a = ExtensionMorphism::from_hopf_map(&sign()).unwrap();
    let b = ExtensionMorphism::from_hopf_map(&mod_two(4)).unwrap();
    assert!(compose_morphisms(&a, &b).is_err());
}

#[test]
fn adjunction_and_coinvariant_lemma_hold() {
    for m in cartesian_fixtures() {
        let a = m.source().comodule_algebra();
        let ap = m.target().comodule_algebra();
        let modules = [
            (
                RelativeHopfModule::regular(a),
                RelativeHopfModule::regular(ap),
            ),
            (
                RelativeHopfModule::hopf_tensor(a).unwrap(),
                RelativeHopfModule::hopf_tensor(ap).unwrap(),
            ),
        ];
        for (module, target_module) in modules {
            let adj = check_adjunction(&m, &module, &target_module).unwrap();
            assert!(adj.all_pass(), "{:?}", adj.failures().collect::<Vec<_>>());
            let lemma = check_coinvariant_lemma(&m, &target_module).unwrap();
            assert!(
                lemma.all_pass(),
                "{:?}",
                lemma.failures().collect::<Vec<_>>()
            );
        }
    }
}

fn rationals() -> crate::hopf::AlgebraData {
    crate::hopf::AlgebraData::ground(Q)
}

#[test]
fn topology_adds_the_identity_cover() {
    let t = KTopology::new(rationals(), vec![qsqrt2_extension()]).unwrap();
    assert_eq!(t.covers().len(), 2);
    assert!(t.covers()[1].is_isomorphism());
}

#[test]
fn topology_rejects_non_galois_covers() {
    let bad = Extension::over_coinvariants(crate::comodule::fields::qcbrt2_trivial()).unwrap();
    assert!(KTopology::new(rationals(), vec![bad]).is_err());
}

#[test]
fn identity_is_k_continuous_for_equal_topologies() {
    let t = KTopology::new(rationals(), vec![qsqrt2_extension()]).unwrap();
    let id = Mat::identity(Q, 1);
    let result = is_k_continuous(&id, &t, &t, &[]).unwrap();
    assert!(result.verdict.status == crate::report::Status::Pass);
    assert_eq!(result.witnesses.len(), 2);
}

#[test]
fn minimal_source_topology_is_always_continuous() {
    let source = KTopology::minimal(qsqrt2().algebra().clone()).unwrap();
    let target = KTopology::minimal(qsqrt2().algebra().clone()).unwrap();
    let sigma = Mat::from_i64_rows(Q, &[&[1, 0], &[0, -1]]);
    let result = is_k_continuous(&sigma, &source, &target, &[]).unwrap();
    assert!(result.verdict.status == crate::report::Status::Pass);
    assert_eq!(result.witnesses[0].lift, "isomorphism cover");
}

#[test]
fn cover_without_lift_is_not_continuous() {
    let source = KTopology::new(rationals(), vec![qsqrt2_extension()]).unwrap();
    let target = KTopology::minimal(rationals()).unwrap();
    let result = is_k_continuous(&Mat::identity(Q, 1), &source, &target, &[]).unwrap();
    assert_eq!(result.verdict.status, crate::report::Status::Fail);
    assert!(result.witnesses.is_empty());
}

#[test]
fn catalogue_lifts_are_used() {
    let source = KTopology::new(rationals(), vec![qsqrt2_extension()]).unwrap();
    let target = KTopology::new(rationals(), vec![qsqrt2_extension()]).unwrap();
    let m = ExtensionMorphism::identity(&qsqrt2_extension()).unwrap();
    let result = is_k_continuous(&Mat::identity(Q, 1), &source, &target, &[m]).unwrap();
    assert!(result.verdict.status == crate::report::Status::Pass);
    assert_eq!(result.witnesses[0].lift, "catalogue[0]");
}
