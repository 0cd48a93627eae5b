use crate::error::{input, invariant, Result};
use crate::linear::sparse::{sparse_columns, SparseVec};
use crate::linear::{kernel, quotient, Mat, Quotient, Subspace};

/// `M ⊗_B N` as the quotient of `M⊗N` by `mb⊗n - m⊗bn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor {
    pub left_dim: usize,
    pub right_dim: usize,
    pub quotient: Quotient,
}

impl BalancedTensor {
    /// `right_action: M⊗B → M` and `left_action: B⊗N → N`.
    pub fn new(right_action: &Mat, left_action: &Mat) -> Result<BalancedTensor> {
        let m = right_action.rows();
        let n = left_action.rows();
        if m == 0 || !right_action.cols().is_multiple_of(m) {
            return input("right action has inconsistent shape");
        }
        let b = right_action.cols() / m;
        if left_action.cols() != b * n {
            return input("left and right actions are over algebras of different dimension");
        }
        let f = right_action.field();
        let (right, left) = (sparse_columns(right_action), sparse_columns(left_action));
        // mb⊗n - m⊗bn for every basis triple
        let relations = (0..m).flat_map(|i| {
            let (right, left) = (&right, &left);
            (0..b).flat_map(move |j| {
                (0..n).map(move |k| {
                    let mut v: SparseVec = right[i * b + j]
                        .iter()
                        .map(|(p, x)| (p * n + k, x.clone()))
                        .collect();
                    v.extend(left[j * n + k].iter().map(|(q, y)| (i * n + q, -y)));
                    v.sort_by_key(|(idx, _)| *idx);
                    merge_duplicates(v)
                })
            })
        });
        let quotient = quotient(m * n, &Subspace::span_sparse(f, m * n, relations))?;
        Ok(BalancedTensor {
            left_dim: m,
            right_dim: n,
            quotient,
        })
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn projector(&self) -> &Mat {
        &self.quotient.projector
    }

    pub fn section(&self) -> &Mat {
        &self.quotient.section
    }

    /// Names of the quotient basis, read off the representative basis tensors.
    pub fn basis_names(&self, left: &[String], right: &[String]) -> Vec<String> {
        (0..self.dim())
            .map(|i| {
                let col = self.section().column(i);
                let k = col
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("section columns are basis tensors");
                format!("{}⊗{}", left[k / self.right_dim], right[k % self.right_dim])
            })
            .collect()
    }

    /// Descends a map defined on `M⊗N` to the quotient, checking that it
    /// vanishes on the balancing relations.
    pub fn descend(&self, map: &Mat, what: &str) -> Result<Mat> {
        let rel = self.quotient.relations.basis_matrix();
        if !map.mul(&rel).is_zero() {
            return invariant(format!("{what} does not respect the balancing relations"));
        }
        Ok(map.mul(self.section()))
    }

    /// As [`BalancedTensor::descend`] for a map given by its action on
    /// columns, so that it is only evaluated on the relations and the section.
    pub fn descend_by(&self, apply: impl Fn(&Mat) -> Mat, what: &str) -> Result<Mat> {
        if !apply(&self.quotient.relations.basis_matrix()).is_zero() {
            return invariant(format!("{what} does not respect the balancing relations"));
        }
        Ok(apply(self.section()))
    }
}

fn merge_duplicates(v: SparseVec) -> SparseVec {
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = &*y + &x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// `M □ N = ker(ρ_M⊗id - id⊗λ_N)` for `ρ_M: M → M⊗C` and `λ_N: N → C⊗N`.
pub fn cotensor(right_coaction: &Mat, left_coaction: &Mat) -> Result<Subspace> {
    let m = right_coaction.cols();
    let n = left_coaction.cols();
    if m == 0 || n == 0 {
        return Ok(Subspace::zero(right_coaction.field(), m * n));
    }
    let c = right_coaction.rows() / m;
    if right_coaction.rows() != m * c || left_coaction.rows() != c * n {
        return input("coactions are over coalgebras of different dimension");
    }
    let f = right_coaction.field();
    let lhs = right_coaction.kron(&Mat::identity(f, n));
    let rhs = Mat::identity(f, m).kron(left_coaction);
    kernel(&lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraData;
    use crate::linear::sparse::mul_kron;
    use crate::linear::Field;

    #[test]
    fn balanced_over_ground_field_is_full_tensor() {
        let q = Field::Rational;
        let a = AlgebraData::monogenic(q, "s", &[q.from_i64(-2), q.zero()]);
        let incl = a.unit().clone();
        let right = mul_kron(a.mult(), &a.identity(), &incl);
        let left = mul_kron(a.mult(), &incl, &a.identity());
        let t = BalancedTensor::new(&right, &left).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.projector().mul(t.section()), Mat::identity(q, 4));
    }

    #[test]
    fn balanced_over_itself_collapses() {
        let q = Field::Rational;
        let a = AlgebraData::monogenic(q, "s", &[q.from_i64(-2), q.zero()]);
        let t = BalancedTensor::new(a.mult(), a.mult()).unwrap();
        assert_eq!(t.dim(), 2);
    }
}
