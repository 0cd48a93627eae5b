//! Classical Galois-theoretic examples over ℚ.

use crate::hopf::{build_dual_group_algebra, AlgebraData, FiniteGroup};
use crate::linear::{Field, Mat};

use super::algebra::ComoduleAlgebra;

const Q: Field = Field::Rational;

fn powers(m: &Mat, n: usize) -> Vec<Mat> {
    let mut out = vec![Mat::identity(m.field(), m.rows())];
    for k in 1..n {
        out.push(m.mul(&out[k - 1]));
    }
    out
}

fn with_cyclic_action(algebra: AlgebraData, generator: Mat, order: usize) -> ComoduleAlgebra {
    let g = FiniteGroup::cyclic(order).expect("positive order");
    let hopf = build_dual_group_algebra(algebra.field(), &g);
    ComoduleAlgebra::from_group_action(algebra, &hopf, &powers(&generator, order))
        .expect("action matrices have the right shape")
}

/// `ℚ(√2) = ℚ[s]/(s²-2)` over `ℚ^{ℤ/2}`, the generator acting by `s ↦ -s`,
/// so `ρ(s) = s⊗(δ_e - δ_g)`.
pub fn qsqrt2() -> ComoduleAlgebra {
    let a = AlgebraData::monogenic(Q, "s", &[Q.from_i64(-2), Q.zero()]);
    with_cyclic_action(a, Mat::from_i64_rows(Q, &[&[1, 0], &[0, -1]]), 2)
}

/// `ℚ(i)` with complex conjugation.
pub fn qi() -> ComoduleAlgebra {
    let a = AlgebraData::monogenic(Q, "i", &[Q.one(), Q.zero()]);
    with_cyclic_action(a, Mat::from_i64_rows(Q, &[&[1, 0], &[0, -1]]), 2)
}

/// `ℚ(∛2)` with `ℤ/3` acting trivially: not Galois over `ℚ`.
pub fn qcbrt2_trivial() -> ComoduleAlgebra {
    let a = AlgebraData::monogenic(Q, "t", &[Q.from_i64(-2), Q.zero(), Q.zero()]);
    with_cyclic_action(a, Mat::identity(Q, 3), 3)
}

/// The cyclic cubic field `ℚ[θ]/(θ³+θ²-2θ-1)` with `σ(θ) = θ²-2`.
pub fn cyclic_cubic() -> ComoduleAlgebra {
    let a = AlgebraData::monogenic(Q, "θ", &[Q.from_i64(-1), Q.from_i64(-2), Q.one()]);
    // Columns: σ(1) = 1, σ(θ) = θ²-2, σ(θ²) = -θ²-θ+3.
    let sigma = Mat::from_i64_rows(Q, &[&[1, -2, 3], &[0, 0, -1], &[0, 1, -1]]);
    with_cyclic_action(a, sigma, 3)
}

/// `A` with the trivial coaction of `ℚ^{ℤ/2}`.
pub fn trivial_coaction(a: AlgebraData) -> ComoduleAlgebra {
    let hopf = build_dual_group_algebra(a.field(), &FiniteGroup::cyclic(2).expect("order 2"));
    ComoduleAlgebra::trivial(a, &hopf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::extension::{
        canonical_map, has_normal_basis, is_hopf_galois, Extension, DEFAULT_SEARCH_BOUND,
    };
    use crate::report::Status;

    #[test]
    fn zoo_axioms() {
        for ca in [qsqrt2(), qi(), qcbrt2_trivial(), cyclic_cubic()] {
            let r = ca.check();
            assert!(r.all_pass(), "{r:?}");
            let coinv = ca.coinvariants().unwrap();
            assert!(coinv.contains_vector(&ca.algebra().unit_vector()));
        }
    }

    #[test]
    fn galois_verdicts() {
        for ca in [qsqrt2(), qi(), cyclic_cubic()] {
            let e = Extension::over_ground(ca).unwrap();
            assert!(is_hopf_galois(&e).unwrap().all_pass());
            let nb = has_normal_basis(&e, DEFAULT_SEARCH_BOUND).unwrap();
            assert_eq!(nb.status, Status::Pass);
        }
        let e = Extension::over_ground(qcbrt2_trivial()).unwrap();
        let r = is_hopf_galois(&e).unwrap();
        assert!(!r.passed("coinvariants_equal_base"));
    }

    #[test]
    fn sqrt2_canonical_map_is_4x4() {
        let e = Extension::over_ground(qsqrt2()).unwrap();
        let can = canonical_map(&e).unwrap();
        assert_eq!(can.matrix.shape(), (4, 4));
        assert!(can.matrix.inverse().is_some());
        let coinv = qsqrt2().coinvariants().unwrap();
        assert_eq!(coinv.dim(), 1);
    }

    #[test]
    fn trivial_coaction_is_not_galois() {
        let a = AlgebraData::monogenic(Q, "s", &[Q.from_i64(-2), Q.zero()]);
        let e = Extension::over_coinvariants(trivial_coaction(a)).unwrap();
        let r = is_hopf_galois(&e).unwrap();
        assert!(r.passed("coinvariants_equal_base"));
        assert!(!r.passed("canonical_map_bijective"));
        assert_eq!(r.dims["dim_domain"], 2);
        assert_eq!(r.dims["dim_codomain"], 4);
    }
}
