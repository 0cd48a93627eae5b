//! Ideals, quotients and rational characters of finite-dimensional algebras.

use crate::error::{input, Result};
use crate::linear::{image, kernel, quotient, tensor, Field, Mat, Quotient, Scalar, Subspace};

use super::algebra::AlgebraData;
use super::roots::{self, Poly};
use crate::linear::sparse::mul_kron;

/// The two-sided ideal generated by a subspace.
pub fn ideal_generated(a: &AlgebraData, generators: &Subspace) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let mut ideal = generators.clone();
    loop {
        let basis = ideal.basis_matrix();
        let id = Mat::identity(f, n);
        let left = mul_kron(a.mult(), &id, &basis);
        let right = mul_kron(a.mult(), &basis, &id);
        let grown = ideal.sum(&Subspace::span_columns(&left.hstack(&right)));
        if grown.dim() == ideal.dim() {
            return ideal;
        }
        ideal = grown;
    }
}

/// `A/I` with structure constants in the quotient's basis.
pub fn quotient_algebra(a: &AlgebraData, ideal: &Subspace) -> Result<(AlgebraData, Quotient)> {
    if ideal_generated(a, ideal).dim() != ideal.dim() {
        return input("subspace is not a two-sided ideal");
    }
    let q = quotient(a.dim(), ideal)?;
    let mult = q.projector.mul(a.mult()).mul(&q.section.kron(&q.section));
    let unit = q.projector.mul(a.unit());
    let names = (0..q.dim()).map(|i| format!("q{i}")).collect();
    Ok((AlgebraData::new(a.field(), names, mult, unit)?, q))
}

/// The largest commutative quotient `A/[A,A]`.
pub fn abelianization(a: &AlgebraData) -> (AlgebraData, Quotient) {
    let n = a.dim();
    let comm = a
        .mult()
        .sub(&tensor::permute_cols(a.mult(), &[n, n], &[1, 0]));
    let ideal = ideal_generated(a, &image(&comm));
    quotient_algebra(a, &ideal).expect("generated ideal is an ideal")
}

/// The radical of a commutative algebra as the kernel of the trace form.
/// `None` when the characteristic is positive and at most the dimension.
pub fn trace_radical(a: &AlgebraData) -> Option<Subspace> {
    let n = a.dim();
    let f = a.field();
    if let Field::Prime(p) = f {
        if p as usize <= n {
            return None;
        }
    }
    let mults: Vec<Mat> = (0..n).map(|i| a.left_mult(&unit_vec(f, n, i))).collect();
    let gram = Mat::from_fn(f, n, n, |i, j| trace(&mults[i].mul(&mults[j])));
    Some(kernel(&gram).expect("single field"))
}

fn trace(m: &Mat) -> Scalar {
    (0..m.rows()).fold(m.field().zero(), |acc, i| &acc + m.get(i, i))
}

fn unit_vec(f: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Monic minimal polynomial of `z`, found from the first linear dependency
/// among `1, z, z², ...`.
pub(crate) fn minimal_polynomial(a: &AlgebraData, z: &[Scalar]) -> Poly {
    let f = a.field();
    let lz = a.left_mult(z);
    let mut powers = vec![a.unit_vector()];
    loop {
        let next = lz.apply(powers.last().expect("non-empty"));
        let span = Mat::from_columns(f, a.dim(), &powers);
        if let Some(c) =
            crate::linear::solve(&span, &Mat::column_vector(f, next.clone())).expect("single field")
        {
            let mut poly: Poly = c.column(0).iter().map(|x| -x).collect();
            poly.push(f.one());
            return poly;
        }
        powers.push(next);
    }
}

/// A semisimple commutative algebra's decomposition data over the ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characters {
    /// Each character as its row of values on the basis.
    pub characters: Vec<Vec<Scalar>>,
    /// The idempotent of each character, in the basis of the semisimple quotient.
    pub idempotents: Vec<Vec<Scalar>>,
    pub radical_dim: usize,
    /// True when the semisimple quotient is a product of copies of the field.
    pub split: bool,
}

/// Characters `A → 𝕜` of a commutative algebra, found through a generating
/// element of `A/rad(A)`. `None` when no generating element is found within
/// the search bound or the root search gives up.
pub fn rational_characters(a: &AlgebraData) -> Option<Characters> {
    if !a.is_commutative() {
        return None;
    }
    let f = a.field();
    let rad = trace_radical(a)?;
    let (s, q) = quotient_algebra(a, &rad).ok()?;
    let d = s.dim();
    let candidates = d * d * d + 1;
    let limit = match f {
        Field::Prime(p) => candidates.min(p as usize),
        Field::Rational => candidates,
    };
    for c in 1..=limit {
        let cs = f.from_i64(c as i64);
        let z: Vec<Scalar> = (0..d).map(|i| cs.pow(i as u64)).collect();
        let mp = minimal_polynomial(&s, &z);
        if mp.len() != d + 1 {
            continue;
        }
        let rs = roots::roots(f, &mp)?;
        let lz = s.left_mult(&z);
        let mut characters = Vec::new();
        let mut idempotents = Vec::new();
        for r in &rs {
            let cofactor = roots::deflate(&mp, r);
            let scale = roots::eval(&cofactor, r).inv().expect("simple root");
            let mut e = vec![f.zero(); d];
            let mut power = s.unit_vector();
            for coeff in &cofactor {
                for (ei, pi) in e.iter_mut().zip(&power) {
                    *ei = &*ei + &(coeff * pi);
                }
                power = lz.apply(&power);
            }
            let e: Vec<Scalar> = e.iter().map(|x| x * &scale).collect();
            let pivot = e
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero idempotent");
            let pivot_inv = e[pivot].inv().expect("nonzero");
            let on_quotient: Vec<Scalar> = (0..d)
                .map(|i| &s.product(&unit_vec(f, d, i), &e)[pivot] * &pivot_inv)
                .collect();
            let row = Mat::from_vec(f, 1, d, on_quotient)
                .expect("row")
                .mul(&q.projector);
            characters.push(row.row(0).to_vec());
            idempotents.push(e);
        }
        let split = characters.len() == d;
        return Some(Characters {
            characters,
            idempotents,
            radical_dim: rad.dim(),
            split,
        });
    }
    None
}

/// Orthogonal idempotents summing to 1, one per character, when `a` is
/// commutative, semisimple and split.
pub fn split_idempotents(a: &AlgebraData) -> Option<Vec<Vec<Scalar>>> {
    let ch = rational_characters(a)?;
    (ch.radical_dim == 0 && ch.split).then_some(ch.idempotents)
}
