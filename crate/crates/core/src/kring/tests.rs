use num_bigint::BigInt;

use super::*;
use crate::comodule::fields::{cyclic_cubic, qsqrt2};
use crate::comodule::{ComoduleAlgebra, Extension};
use crate::error::Error;
use crate::hopf::{AlgebraData, FiniteGroup, GradingGroup};
use crate::linear::Field;
use crate::report::Status;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn class(n: usize, v: &[i64]) -> KClassVector {
    KClassVector::new(n, big(v)).unwrap()
}

#[test]
fn laurent_arithmetic() {
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    assert_eq!(&t * &t_inv, LaurentPoly::one());
    let p = &(&t + &LaurentPoly::one()).pow(2) - &LaurentPoly::monomial(3, -2);
    assert_eq!(p.to_string(), "t^2 + 2t + 1 - 3t^-2");
    assert!((&p - &p).is_zero());
}

#[test]
fn truncated_inverse_of_one_plus_x() {
    for n in 0..10 {
        let inv = TruncatedPoly::one_plus_x(n).inverse().unwrap();
        assert_eq!(&inv * &TruncatedPoly::one_plus_x(n), TruncatedPoly::one(n));
        let alternating: Vec<i64> = (0..=n).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
        assert_eq!(inv, TruncatedPoly::from_i64(n, &alternating));
    }
    assert!(TruncatedPoly::from_i64(3, &[2, 1]).inverse().is_none());
    assert_eq!(
        TruncatedPoly::from_i64(2, &[1, -1, 0, 5]).to_string(),
        "1 - x"
    );
}

#[test]
fn base_change_examples() {
    assert_eq!(at_base_change(0), IntMat::identity(1));
    assert_eq!(at_base_change(2).column(2), big(&[1, 2, 1]));
    for n in [0, 1, 5, 17, 64] {
        let m = at_base_change(n);
        assert!(m.mul(&at_base_change_inverse(n)).is_identity());
        assert!(at_base_change_inverse(n).mul(&m).is_identity());
        assert_eq!(m.det(), BigInt::from(1));
    }
}

#[test]
fn basis_line_classes_are_unit_vectors() {
    for n in 0..8 {
        let basis = ShiftedBasis::new(n);
        for k in 0..=n {
            assert_eq!(basis.line_class(k as i64), KClassVector::basis(n, k));
        }
    }
}

#[test]
fn worked_line_classes() {
    assert_eq!(line_class(1, 2), class(1, &[-1, 2]));
    assert_eq!(line_class(1, 2).to_string(), "2 [L1] - 1 [L0]");
    assert_eq!(line_class(2, 3), class(2, &[1, -3, 3]));
    assert_eq!(line_class(2, -1), class(2, &[3, -3, 1]));
    assert_eq!(line_class(2, -1).to_string(), "1 [L2] - 3 [L1] + 3 [L0]");
}

#[test]
fn identities_match_polynomial_arithmetic() {
    for n in 0..=12 {
        assert_eq!(line_class(n, n as i64 + 1), primary_identity(n));
        assert_eq!(line_class(n, -1), secondary_identity(n));
        assert!(inverse_paths_agree(n));
    }
}

#[test]
fn representation_action_examples() {
    let l0 = KClassVector::basis(2, 0);
    let v = class(2, &[4, -1, 7]);
    assert_eq!(representation_action(&LaurentPoly::one(), &v), v);
    assert_eq!(
        representation_action(&LaurentPoly::t(), &l0),
        KClassVector::basis(2, 1)
    );
    assert_eq!(
        representation_action(&LaurentPoly::monomial(1, -1), &l0),
        class(2, &[3, -3, 1])
    );
    let t_t_inv = &LaurentPoly::t() * &LaurentPoly::monomial(1, -1);
    assert_eq!(representation_action(&t_t_inv, &v), v);
}

#[test]
fn augmentation_is_surjective() {
    for n in 0..=6 {
        let a = augmentation_surjective(n, n + 1);
        assert_eq!(a.verdict.status, Status::Pass);
        assert!(a.shifted.is_identity());
        assert_eq!(a.det, Some(BigInt::from(1)));
    }
    let a = augmentation_surjective(3, 4);
    assert_eq!(a.monomial.det().magnitude(), &1u32.into());
    assert_eq!(
        augmentation_surjective(3, 2).verdict.status,
        Status::Undecided
    );
}

#[test]
fn doubled_unit_does_not_span() {
    let v = spans_lattice(&IntMat::from_columns(1, &[big(&[2])]));
    assert_eq!(v.status, Status::Fail);
    assert_eq!(v.witness.as_deref(), Some("sublattice of index 2"));
    let v = spans_lattice(&IntMat::from_columns(3, &[big(&[2, 0, 0])]));
    assert_eq!(v.status, Status::Fail);
    assert_eq!(
        IntMat::from_columns(2, &[big(&[2, 3]), big(&[1, 2])]).lattice_index(),
        Some(BigInt::from(1))
    );
    assert_eq!(
        IntMat::from_columns(2, &[big(&[4, 6]), big(&[2, 4])]).lattice_index(),
        Some(BigInt::from(4))
    );
}

#[test]
fn table_self_check() {
    let table = at_table(5, -3..=8);
    assert_eq!(table.rows.len(), 12);
    let r = table.self_check();
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn embedding_and_coreflector() {
    for ring in [Ring::integers(), Ring::Truncated(2), Ring::Laurent] {
        let a = augment(ring.clone());
        assert!(a.check().all_pass());
        assert_eq!(coreflect(&a), ring);
        assert_eq!(a.forget(), ring.additive_rank());
    }
    assert_eq!(augment(Ring::integers()).forget(), Some(1));
}

#[test]
fn augmented_maps_and_composition() {
    let n = 4;
    let f = AugmentedMorphism::augment(Ring::Laurent, Ring::Truncated(n), laurent_to_truncated(n));
    assert!(f.check().all_pass());
    let g = AugmentedMorphism::augment(Ring::Truncated(n), Ring::Truncated(2), truncate(2));
    assert!(g.check().all_pass());
    let h = AugmentedMorphism::augment(Ring::Truncated(2), Ring::Truncated(1), truncate(1));
    let left = h.after(&g).unwrap().after(&f).unwrap();
    let right = h.after(&g.after(&f).unwrap()).unwrap();
    for r in Ring::Laurent.samples() {
        assert_eq!(left.apply_ring(&r), right.apply_ring(&r));
        let m = ModuleElem::Ring(r);
        assert_eq!(left.apply_module(&m), right.apply_module(&m));
    }
    assert!(left.check().all_pass());
    assert!(f.after(&h).is_err());
}

#[test]
fn counit_of_projective_space_is_the_square() {
    let n = 3;
    let k = projective_space(n);
    assert!(k.check().all_pass());
    let counit = AugmentedMorphism::counit(&k);
    assert!(counit.check().all_pass());
    let basis = ShiftedBasis::new(n);
    for r in Ring::Laurent.samples() {
        let RingElem::Laurent(p) = &r else {
            unreachable!()
        };
        let around = ModuleElem::Class(basis.from_monomial(&ring_map(p, n)));
        assert_eq!(counit.apply_module(&ModuleElem::Ring(r)), around);
    }
    let id = AugmentedMorphism::identity(&k);
    assert!(id.after(&counit).unwrap().check().all_pass());
}

#[test]
fn non_associative_structure_constants_are_rejected() {
    let one = big(&[1, 0]);
    let products = vec![
        vec![big(&[1, 0]), big(&[0, 1])],
        vec![big(&[0, 1]), big(&[1, 1])],
    ];
    assert!(IntAlgebra::new(vec!["1".into(), "y".into()], products, one.clone()).is_ok());
    let skew = vec![
        vec![big(&[1, 0]), big(&[0, 1])],
        vec![big(&[1, 1]), big(&[0, 0])],
    ];
    assert!(IntAlgebra::new(vec!["1".into(), "y".into()], skew, one).is_err());
}

#[test]
fn galois_shadow_has_unit_weights() {
    let a = bundle_shadow(&Extension::over_coinvariants(qsqrt2()).unwrap()).unwrap();
    assert_eq!(a.module(), &ModuleModel::Scalar(big(&[1, 1])));
    assert!(a.check().all_pass());
    let g = FiniteGroup::cyclic(4).unwrap();
    let q = Field::Rational;
    let algebra = crate::hopf::build_group_algebra(q, &g).algebra().clone();
    let ca = ComoduleAlgebra::graded(
        algebra,
        GradingGroup::cyclic(4).unwrap(),
        (0..4).map(|i| vec![i]).collect(),
    )
    .unwrap();
    let a = bundle_shadow(&Extension::over_ground(ca).unwrap()).unwrap();
    assert_eq!(a.module(), &ModuleModel::Scalar(big(&[1, 1, 1, 1])));
    assert!(a.check().all_pass());
}

#[test]
fn non_galois_shadow_is_not_a_module() {
    let q = Field::Rational;
    let dual_numbers = AlgebraData::monogenic(q, "x", &[q.zero(), q.zero()]);
    let ca = ComoduleAlgebra::graded(
        dual_numbers,
        GradingGroup::cyclic(3).unwrap(),
        vec![vec![0], vec![1]],
    )
    .unwrap();
    let a = bundle_shadow(&Extension::over_ground(ca).unwrap()).unwrap();
    assert_eq!(a.module(), &ModuleModel::Scalar(big(&[1, 1, 0])));
    assert_eq!(a.check().overall(), Status::Fail);
}

#[test]
fn shadow_needs_a_group_ring() {
    let e = Extension::over_coinvariants(cyclic_cubic()).unwrap();
    assert!(matches!(bundle_shadow(&e), Err(Error::Unsupported(_))));
}
