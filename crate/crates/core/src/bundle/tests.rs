use super::*;
use crate::comodule::fields::{cyclic_cubic, qsqrt2};
use crate::comodule::{
    check_relative_hopf_module, Coaction, ComoduleAlgebra, Extension, RelativeHopfModule,
};
use crate::error::Error;
use crate::hopf::{
    build_dual_group_algebra, build_group_algebra, sweedler_h4, AlgebraData, FiniteGroup,
    GradingGroup, HopfData,
};
use crate::linear::{Field, Mat, Scalar, Subspace};
use crate::report::Status;

const Q: Field = Field::Rational;

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Q.from_i64(x)).collect()
}

fn sign_hopf() -> HopfData {
    build_dual_group_algebra(Q, &FiniteGroup::cyclic(2).unwrap())
}

/// `δ_e - δ_g`, the sign character of `ℤ/2` as a grouplike of `ℚ^{ℤ/2}`.
fn sign() -> LeftComodule {
    LeftComodule::grouplike(&sign_hopf(), &ints(&[1, -1])).unwrap()
}

fn qsqrt2_extension() -> Extension {
    Extension::over_coinvariants(qsqrt2()).unwrap()
}

/// `ℚ[ℤ/m]` graded by `ℤ/m`, over the ground field.
fn graded_toy(m: usize) -> (Extension, GradingGroup) {
    let group = GradingGroup::cyclic(m as u64).unwrap();
    let algebra = build_group_algebra(Q, &FiniteGroup::cyclic(m).unwrap())
        .algebra()
        .clone();
    let degrees = (0..m as i64).map(|i| vec![i]).collect();
    let ca = ComoduleAlgebra::graded(algebra, group.clone(), degrees).unwrap();
    (Extension::over_ground(ca).unwrap(), group)
}

fn unit_tensor(n: usize, i: usize) -> Subspace {
    let mut v = vec![Q.zero(); n];
    v[i] = Q.one();
    Subspace::span_columns(&Mat::column_vector(Q, v))
}

fn galois_zoo() -> Vec<(Extension, Vec<LeftComodule>)> {
    let c3 = build_dual_group_algebra(Q, &FiniteGroup::cyclic(3).unwrap());
    vec![
        (
            qsqrt2_extension(),
            vec![
                LeftComodule::trivial(&sign_hopf()),
                sign(),
                LeftComodule::regular(&sign_hopf()),
            ],
        ),
        (
            Extension::over_coinvariants(cyclic_cubic()).unwrap(),
            vec![LeftComodule::trivial(&c3), LeftComodule::regular(&c3)],
        ),
    ]
}

#[test]
fn trivial_comodule_gives_the_base() {
    for (e, _) in galois_zoo() {
        let v = LeftComodule::trivial_like(e.comodule_algebra().coaction());
        let b = cotensor_bundle(&e, &v).unwrap();
        assert_eq!(b.space(), &Subspace::span_columns(e.inclusion()));
        assert!(b.check().all_pass());
    }
}

#[test]
fn sign_bundle_over_qsqrt2_is_spanned_by_the_root() {
    let b = cotensor_bundle(&qsqrt2_extension(), &sign()).unwrap();
    assert_eq!(b.space(), &unit_tensor(2, 1));
    assert_eq!(b.basis_names(), vec!["s⊗v"]);
}

#[test]
fn graded_character_gives_a_line() {
    let (e, group) = graded_toy(4);
    for j in 0..4 {
        let b = cotensor_bundle(&e, &LeftComodule::character(&group, &[j]).unwrap()).unwrap();
        assert_eq!(b.space(), &unit_tensor(4, j as usize));
    }
}

#[test]
fn infinite_grading_is_matched_by_degree() {
    let dual_numbers = AlgebraData::monogenic(Q, "x", &[Q.zero(), Q.zero()]);
    let ca = ComoduleAlgebra::graded(
        dual_numbers,
        GradingGroup::integers(),
        vec![vec![0], vec![1]],
    )
    .unwrap();
    let e = Extension::over_ground(ca).unwrap();
    let v = LeftComodule::graded(
        &GradingGroup::integers(),
        vec!["u".into(), "w".into()],
        vec![vec![1], vec![5]],
    )
    .unwrap();
    let b = cotensor_bundle(&e, &v).unwrap();
    assert_eq!(b.space(), &unit_tensor(4, 2));
}

#[test]
fn dimension_is_additive_over_direct_sums() {
    for (e, reps) in galois_zoo() {
        for v in &reps {
            for w in &reps {
                let sum = v.direct_sum(w).unwrap();
                let d = |x: &LeftComodule| cotensor_bundle(&e, x).unwrap().dim();
                assert_eq!(d(&sum), d(v) + d(w));
            }
        }
    }
}

#[test]
fn rank_over_a_field_base_is_the_representation_dimension() {
    for (e, reps) in galois_zoo() {
        for v in &reps {
            let b = cotensor_bundle(&e, v).unwrap();
            assert_eq!(b.dim(), v.dim());
            let r = certify_fgp(&b);
            assert!(r.all_pass());
            assert_eq!(r.dims["rank"], v.dim());
            assert!(b.check().all_pass());
        }
    }
}

#[test]
fn triangle_action_by_the_trivial_comodule_is_the_identity() {
    for ca in [qsqrt2(), ComoduleAlgebra::regular(&sweedler_h4(Q).unwrap())] {
        let m = RelativeHopfModule::regular(&ca);
        let v = LeftComodule::trivial_like(ca.coaction());
        let t = triangle_action(&m, &v).unwrap();
        assert_eq!(t.action(), m.action());
        assert_eq!(t.coaction(), m.coaction());
    }
}

#[test]
fn triangle_action_is_a_relative_hopf_module() {
    let h4 = sweedler_h4(Q).unwrap();
    let s3 = build_group_algebra(Q, &FiniteGroup::symmetric(3).unwrap());
    for h in [h4, s3] {
        let ca = ComoduleAlgebra::regular(&h);
        let reps = [LeftComodule::regular(&h), LeftComodule::trivial(&h)];
        for m in [
            RelativeHopfModule::regular(&ca),
            RelativeHopfModule::hopf_tensor(&ca).unwrap(),
        ] {
            for v in &reps {
                let t = triangle_action(&m, v).unwrap();
                assert_eq!(t.dim(), m.dim() * v.dim());
                let r = check_relative_hopf_module(&t);
                assert!(r.all_pass(), "{r:?}");
            }
        }
    }
}

#[test]
fn triangle_action_twists_by_the_inverse_antipode_of_a_grouplike() {
    let h = sweedler_h4(Q).unwrap();
    let g = ints(&[0, 1, 0, 0]);
    let v = LeftComodule::grouplike(&h, &g).unwrap();
    let t = triangle_action(
        &RelativeHopfModule::regular(&ComoduleAlgebra::regular(&h)),
        &v,
    )
    .unwrap();
    let s_inv_g = h.antipode().inverse().unwrap().apply(&g);
    let expected = h
        .identity()
        .kron(&h.algebra().left_mult(&s_inv_g))
        .mul(h.comult());
    assert_eq!(t.coaction().matrix().unwrap(), &expected);
}

#[test]
fn triangle_action_is_associative() {
    let h = sweedler_h4(Q).unwrap();
    let m = RelativeHopfModule::regular(&ComoduleAlgebra::regular(&h));
    let v = LeftComodule::grouplike(&h, &ints(&[0, 1, 0, 0])).unwrap();
    let w = LeftComodule::regular(&h);
    let nested = triangle_action(&triangle_action(&m, &v).unwrap(), &w).unwrap();
    let flat = triangle_action(&m, &v.tensor(&w).unwrap()).unwrap();
    assert_eq!(nested.coaction(), flat.coaction());
    assert_eq!(nested.action(), flat.action());
}

#[test]
fn missing_antipode_inverse_is_a_precondition_error() {
    let h = sweedler_h4(Q).unwrap();
    let broken = h
        .with_parts(
            h.mult().clone(),
            h.unit().clone(),
            h.comult().clone(),
            h.counit().clone(),
            Mat::zeros(Q, 4, 4),
        )
        .unwrap();
    let m = RelativeHopfModule::regular(&ComoduleAlgebra::regular(&broken));
    let v = LeftComodule::new(
        vec!["1".into()],
        Coaction::Finite {
            hopf: broken.clone(),
            matrix: broken.unit().clone(),
        },
    )
    .unwrap();
    assert!(matches!(
        triangle_action(&m, &v),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn non_comodules_are_rejected() {
    let h = sign_hopf();
    assert!(LeftComodule::grouplike(&h, &ints(&[1, 1])).is_ok());
    assert!(matches!(
        LeftComodule::grouplike(&h, &ints(&[2, 0])),
        Err(Error::Input(_))
    ));
}

#[test]
fn graded_characters_add_under_bundle_tensor() {
    let m = 5;
    let (e, group) = graded_toy(m);
    for i in 0..m as i64 {
        for j in 0..m as i64 {
            let bi = cotensor_bundle(&e, &LeftComodule::character(&group, &[i]).unwrap()).unwrap();
            let bj = cotensor_bundle(&e, &LeftComodule::character(&group, &[j]).unwrap()).unwrap();
            let p = bundle_tensor(&bi, &bj).unwrap();
            assert!(p.report.all_pass());
            let sum =
                cotensor_bundle(&e, &LeftComodule::character(&group, &[i + j]).unwrap()).unwrap();
            assert_eq!(p.bundle.space(), sum.space());
            assert_eq!(p.bundle.rep().coaction(), sum.rep().coaction());
        }
    }
}

#[test]
fn bundle_tensor_is_associative_on_the_graded_toy() {
    let (e, group) = graded_toy(3);
    let b = |d: i64| cotensor_bundle(&e, &LeftComodule::character(&group, &[d]).unwrap()).unwrap();
    let (x, y, z) = (b(1), b(2), b(2));
    let left = bundle_tensor(&bundle_tensor(&x, &y).unwrap().bundle, &z).unwrap();
    let right = bundle_tensor(&x, &bundle_tensor(&y, &z).unwrap().bundle).unwrap();
    assert_eq!(left.bundle, right.bundle);
    assert_eq!(left.comparison, right.comparison);
}

#[test]
fn trivial_factor_is_a_unit_for_bundle_tensor() {
    for (e, reps) in galois_zoo() {
        let unit = cotensor_bundle(
            &e,
            &LeftComodule::trivial_like(e.comodule_algebra().coaction()),
        )
        .unwrap();
        for v in &reps {
            let b = cotensor_bundle(&e, v).unwrap();
            for p in [
                bundle_tensor(&unit, &b).unwrap(),
                bundle_tensor(&b, &unit).unwrap(),
            ] {
                assert!(p.report.all_pass(), "{:?}", p.report);
                assert_eq!(p.bundle.space(), b.space());
                assert_eq!(p.bundle.right_action(), b.right_action());
                assert_eq!(p.bundle.left_action(), b.left_action());
            }
        }
    }
}

#[test]
fn sign_squared_is_trivial_over_qsqrt2() {
    let e = qsqrt2_extension();
    let b = cotensor_bundle(&e, &sign()).unwrap();
    let p = bundle_tensor(&b, &b).unwrap();
    assert!(p.report.all_pass());
    let unit = cotensor_bundle(&e, &LeftComodule::trivial(&sign_hopf())).unwrap();
    assert_eq!(p.bundle.space(), unit.space());
    assert_eq!(p.comparison, Mat::from_i64_rows(Q, &[&[2]]));
}

#[test]
fn bundles_over_different_extensions_do_not_multiply() {
    let (e, group) = graded_toy(2);
    let b1 = cotensor_bundle(&e, &LeftComodule::character(&group, &[1]).unwrap()).unwrap();
    let b2 = cotensor_bundle(&qsqrt2_extension(), &sign()).unwrap();
    assert!(matches!(bundle_tensor(&b1, &b2), Err(Error::Input(_))));
}

/// `ℚ(√2)⊗C` with the Galois action on the first factor, over `C` inside.
fn qsqrt2_times(c: &AlgebraData) -> Extension {
    let a = qsqrt2().algebra().tensor(c);
    let sigma = Mat::from_i64_rows(Q, &[&[1, 0], &[0, -1]]).kron(&c.identity());
    let ca = ComoduleAlgebra::from_group_action(a.clone(), &sign_hopf(), &[a.identity(), sigma])
        .unwrap();
    Extension::over_coinvariants(ca).unwrap()
}

#[test]
fn semisimple_base_reports_multiplicities() {
    let qq =
        AlgebraData::from_products(Q, vec!["e1".into(), "e2".into()], ints(&[1, 1]), |i, j| {
            let mut v = vec![Q.zero(); 2];
            if i == j {
                v[i] = Q.one();
            }
            v
        })
        .unwrap();
    let b = cotensor_bundle(&qsqrt2_times(&qq), &sign()).unwrap();
    assert!(b.check().all_pass());
    let r = certify_fgp(&b);
    assert!(r.all_pass());
    assert_eq!((r.dims["multiplicity_0"], r.dims["multiplicity_1"]), (1, 1));
}

#[test]
fn non_semisimple_base_is_left_undecided() {
    let dual_numbers = AlgebraData::monogenic(Q, "ε", &[Q.zero(), Q.zero()]);
    let b = cotensor_bundle(&qsqrt2_times(&dual_numbers), &sign()).unwrap();
    assert!(b.check().all_pass());
    assert_eq!(certify_fgp(&b).overall(), Status::Undecided);
}
