use hopfgal_core::comodule::fields::{cyclic_cubic, qcbrt2_trivial, qsqrt2};
use hopfgal_core::comodule::{is_hopf_galois, ComoduleAlgebra, Extension};
use hopfgal_core::hopf::AlgebraData;
use hopfgal_core::kring::{ring_map, KClassVector, LaurentPoly, ShiftedBasis};
use hopfgal_core::linear::{kernel, Field, Mat, Scalar, Subspace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn to_big(x: &Scalar) -> BigRational {
    let s = x.to_wire();
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(n.parse().unwrap(), d.parse().unwrap()),
        None => BigRational::from_integer(s.parse().unwrap()),
    }
}

fn from_big(x: &BigRational) -> Scalar {
    Q.from_ratio(x.numer(), x.denom()).unwrap()
}

/// Wide enough to push products past `i64`.
fn big_rational() -> impl Strategy<Value = BigRational> {
    (any::<i64>(), 1i64..=i64::MAX, -4i64..=4, 1i64..=5).prop_map(|(n, d, small_n, small_d)| {
        let wide = BigRational::new(n.into(), d.into());
        wide + BigRational::new(small_n.into(), small_d.into())
    })
}

fn int_matrix(
    max_rows: usize,
    max_cols: usize,
    bound: i64,
) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
    })
}

fn to_mat(field: Field, rows: &[Vec<i64>]) -> Mat {
    let slices: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Mat::from_i64_rows(field, &slices)
}

/// Kernel basis by Gauss–Jordan over `BigRational`, one vector per free column.
fn oracle_kernel(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][free].clone();
            }
            v
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant over the integers.
fn bareiss_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.into()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `A` rewritten in the basis given by the columns of `p`.
fn rebase(ca: &ComoduleAlgebra, p: &Mat) -> ComoduleAlgebra {
    let a = ca.algebra();
    let (h, rho) = ca.finite_parts().unwrap();
    let p_inv = p.inverse().unwrap();
    let mult = p_inv.mul(a.mult()).mul(&p.kron(p));
    let unit = p_inv.mul(a.unit());
    let names = (0..a.dim()).map(|i| format!("e{i}")).collect();
    let algebra = AlgebraData::new(a.field(), names, mult, unit).unwrap();
    let rho = p_inv.kron(&h.identity()).mul(&rho).mul(p);
    ComoduleAlgebra::finite(algebra, h, rho).unwrap()
}

fn galois_zoo() -> Vec<(ComoduleAlgebra, bool)> {
    vec![
        (qsqrt2(), true),
        (cyclic_cubic(), true),
        (qcbrt2_trivial(), false),
    ]
}

fn laurent(max_degree: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-max_degree..=max_degree, -5i64..=5), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rational_scalars_match_big_rationals(x in big_rational(), y in big_rational()) {
        let (a, b) = (from_big(&x), from_big(&y));
        prop_assert_eq!(to_big(&(&a + &b)), &x + &y);
        prop_assert_eq!(to_big(&(&a - &b)), &x - &y);
        prop_assert_eq!(to_big(&(&a * &b)), &x * &y);
        prop_assert_eq!(to_big(&-&a), -x.clone());
        if !y.is_zero() {
            prop_assert_eq!(to_big(&b.inv().unwrap()), y.recip());
        }
        prop_assert_eq!(a.is_negative(), x.is_negative());
    }

    #[test]
    fn rank_plus_nullity_is_column_count(rows in int_matrix(6, 6, 3)) {
        let m = to_mat(Q, &rows);
        let ker = kernel(&m).unwrap();
        prop_assert_eq!(m.rank() + ker.dim(), m.cols());
        prop_assert!(m.mul(&ker.basis_matrix()).is_zero());
    }

    #[test]
    fn kernel_matches_gauss_jordan_oracle(rows in int_matrix(5, 7, 4)) {
        let m = to_mat(Q, &rows);
        let oracle = oracle_kernel(&rows);
        let cols: Vec<Vec<Scalar>> = oracle.iter().map(|v| v.iter().map(from_big).collect()).collect();
        let expected = if cols.is_empty() {
            Subspace::zero(Q, m.cols())
        } else {
            Subspace::span_columns(&Mat::from_columns(Q, m.cols(), &cols))
        };
        prop_assert_eq!(kernel(&m).unwrap(), expected);
    }

    #[test]
    fn determinant_matches_bareiss(n in 1usize..=6, seed in prop::collection::vec(-6i64..=6, 36)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        let det = to_mat(Q, &rows).det().unwrap();
        prop_assert_eq!(to_big(&det), BigRational::from_integer(bareiss_det(&rows)));
    }

    #[test]
    fn prime_field_agrees_with_rational_reduction(
        n in 1usize..=5,
        seed in prop::collection::vec(-9i64..=9, 50),
        p in prop::sample::select(vec![2u64, 3, 5, 7, 101]),
    ) {
        let a_rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        let b_rows: Vec<Vec<i64>> = (0..n).map(|i| seed[25 + i * n..25 + (i + 1) * n].to_vec()).collect();
        let fp = Field::prime(p).unwrap();
        let (a, b) = (to_mat(Q, &a_rows), to_mat(Q, &b_rows));
        let (ap, bp) = (to_mat(fp, &a_rows), to_mat(fp, &b_rows));
        prop_assert_eq!(a.mul(&b).reduce_mod(p).unwrap(), ap.mul(&bp));
        prop_assert_eq!(a.det().unwrap().reduce_mod(p).unwrap(), ap.det().unwrap());
        prop_assert!(ap.rank() <= a.rank());
    }

    #[test]
    fn galois_verdict_is_basis_independent(
        which in 0usize..3,
        entries in prop::collection::vec(-3i64..=3, 9),
    ) {
        let (ca, expected) = galois_zoo().swap_remove(which);
        let d = ca.algebra().dim();
        let rows: Vec<Vec<i64>> = (0..d).map(|i| entries[i * d..(i + 1) * d].to_vec()).collect();
        let p = to_mat(Q, &rows);
        prop_assume!(p.inverse().is_some());
        let rebased = rebase(&ca, &p);
        prop_assert!(rebased.check().all_pass());
        let e = Extension::over_coinvariants(rebased).unwrap();
        prop_assert_eq!(is_hopf_galois(&e).unwrap().all_pass(), expected);
    }

    #[test]
    fn laurent_to_truncated_is_multiplicative(p in laurent(32), q in laurent(32), n in 0usize..=12) {
        prop_assert_eq!(ring_map(&(&p * &q), n), &ring_map(&p, n) * &ring_map(&q, n));
        prop_assert_eq!(ring_map(&(&p + &q), n), &ring_map(&p, n) + &ring_map(&q, n));
    }

    #[test]
    fn line_classes_multiply_like_exponents(n in 0usize..=10, k1 in -20i64..=20, k2 in -20i64..=20) {
        let basis = ShiftedBasis::new(n);
        let product = basis.product(&basis.line_class(k1), &basis.line_class(k2));
        prop_assert_eq!(product, basis.line_class(k1 + k2));
        prop_assert_eq!(basis.line_class(0), KClassVector::basis(n, 0));
    }
}
