//! Tensor-leg bookkeeping. Basis order on `V0 ⊗ V1 ⊗ ... ⊗ Vk` is
//! lexicographic with the leftmost factor varying slowest.

use super::mat::Mat;
use super::scalar::Field;

/// Flat index of a multi-index.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// Multi-index of a flat index.
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// Permutation of tensor legs: output leg `j` is input leg `perm[j]`.
pub fn permute_legs(field: Field, dims: &[usize], perm: &[usize]) -> Mat {
    assert_eq!(dims.len(), perm.len(), "permutation arity mismatch");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Mat::zeros(field, total, total);
    for flat in 0..total {
        let idx = multi_index(dims, flat);
        let out_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(flat_index(&out_dims, &out_idx), flat, field.one());
    }
    m
}

fn leg_map(dims: &[usize], perm: &[usize]) -> Vec<usize> {
    assert_eq!(dims.len(), perm.len(), "permutation arity mismatch");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    (0..total)
        .map(|flat| {
            let idx = multi_index(dims, flat);
            let out_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            flat_index(&out_dims, &out_idx)
        })
        .collect()
}

/// `P·m` for `P = permute_legs(dims, perm)`, without forming `P`.
pub fn permute_rows(m: &Mat, dims: &[usize], perm: &[usize]) -> Mat {
    let sigma = leg_map(dims, perm);
    let mut inv = vec![0; sigma.len()];
    for (i, &j) in sigma.iter().enumerate() {
        inv[j] = i;
    }
    m.select_rows(&inv)
}

/// `m·P` for `P = permute_legs(dims, perm)`, without forming `P`.
pub fn permute_cols(m: &Mat, dims: &[usize], perm: &[usize]) -> Mat {
    m.select_columns(&leg_map(dims, perm))
}

/// The flip `V ⊗ W -> W ⊗ V`.
pub fn flip(field: Field, dv: usize, dw: usize) -> Mat {
    permute_legs(field, &[dv, dw], &[1, 0])
}

/// Kronecker product of a list of maps.
pub fn kron_all(maps: &[&Mat]) -> Mat {
    let mut it = maps.iter();
    let first = (*it.next().expect("non-empty tensor product")).clone();
    it.fold(first, |acc, m| acc.kron(m))
}

/// Composition `maps[0] ∘ maps[1] ∘ ...` (rightmost applied first).
pub fn compose(maps: &[&Mat]) -> Mat {
    let mut it = maps.iter().rev();
    let first = (*it.next().expect("non-empty composition")).clone();
    it.fold(first, |acc, m| m.mul(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        let dims = [2, 3, 4];
        for f in 0..24 {
            assert_eq!(flat_index(&dims, &multi_index(&dims, f)), f);
        }
        assert_eq!(flat_index(&dims, &[1, 0, 0]), 12);
    }

    #[test]
    fn flip_is_involution() {
        let f = flip(Field::Rational, 2, 3);
        let g = flip(Field::Rational, 3, 2);
        assert_eq!(g.mul(&f), Mat::identity(Field::Rational, 6));
    }

    #[test]
    fn implicit_permutations_match_matrices() {
        let q = Field::Rational;
        let dims = [2, 3, 2];
        let perm = [2, 0, 1];
        let p = permute_legs(q, &dims, &perm);
        let m = Mat::from_fn(q, 12, 12, |r, c| q.from_i64((r * 12 + c) as i64));
        assert_eq!(permute_rows(&m, &dims, &perm), p.mul(&m));
        assert_eq!(permute_cols(&m, &dims, &perm), m.mul(&p));
    }

    #[test]
    fn cyclic_permutation_cubed_is_identity() {
        let q = Field::Rational;
        let p = permute_legs(q, &[2, 2, 2], &[1, 2, 0]);
        assert_eq!(p.mul(&p).mul(&p), Mat::identity(q, 8));
    }
}
