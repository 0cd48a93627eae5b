//! Sparse helpers: incremental row reduction and Kronecker products applied
//! without being formed.

use super::mat::Mat;
use super::scalar::{Field, Scalar};

/// Sparse vector as `(index, value)` pairs, sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_column(m: &Mat, c: usize) -> SparseVec {
    (0..m.rows())
        .filter_map(|r| {
            let v = m.get(r, c);
            (!v.is_zero()).then(|| (r, v.clone()))
        })
        .collect()
}

pub fn sparse_columns(m: &Mat) -> Vec<SparseVec> {
    let mut out = vec![Vec::new(); m.cols()];
    for r in 0..m.rows() {
        for (c, v) in m.row(r).iter().enumerate() {
            if !v.is_zero() {
                out[c].push((r, v.clone()));
            }
        }
    }
    out
}

/// Dense matrix from sparse columns.
pub fn from_sparse_columns(field: Field, rows: usize, columns: &[SparseVec]) -> Mat {
    let mut out = Mat::zeros(field, rows, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col {
            out.set(*r, c, v.clone());
        }
    }
    out
}

/// `(X⊗Y)·V` without forming `X⊗Y`.
pub fn kron_mul(x: &Mat, y: &Mat, v: &Mat) -> Mat {
    assert_eq!(x.cols() * y.cols(), v.rows(), "kron_mul shape mismatch");
    let field = v.field();
    let (xs, ys) = (sparse_columns(x), sparse_columns(y));
    let rows = x.rows() * y.rows();
    let yc = y.cols();
    let mut acc = vec![field.zero(); rows];
    let mut out = Vec::with_capacity(v.cols());
    for col in sparse_columns(v) {
        let mut touched = Vec::new();
        for (k, coeff) in &col {
            let (i, j) = (k / yc, k % yc);
            for (xr, xv) in &xs[i] {
                let s = coeff * xv;
                for (yr, yv) in &ys[j] {
                    let idx = xr * y.rows() + yr;
                    acc[idx] = &acc[idx] + &(&s * yv);
                    touched.push(idx);
                }
            }
        }
        out.push(drain(&mut acc, &mut touched, field));
    }
    from_sparse_columns(field, rows, &out)
}

/// `A·(X⊗Y)` without forming `X⊗Y`.
pub fn mul_kron(a: &Mat, x: &Mat, y: &Mat) -> Mat {
    assert_eq!(a.cols(), x.rows() * y.rows(), "mul_kron shape mismatch");
    let field = a.field();
    let (xs, ys, acols) = (sparse_columns(x), sparse_columns(y), sparse_columns(a));
    let yr = y.rows();
    let mut acc = vec![field.zero(); a.rows()];
    let mut touched = Vec::new();
    let mut out = Vec::with_capacity(x.cols() * y.cols());
    for xc in &xs {
        for yc in &ys {
            for (p, u) in xc {
                for (q, v) in yc {
                    let s = u * v;
                    for (r, w) in &acols[p * yr + q] {
                        acc[*r] = &acc[*r] + &(&s * w);
                        touched.push(*r);
                    }
                }
            }
            out.push(drain(&mut acc, &mut touched, field));
        }
    }
    from_sparse_columns(field, a.rows(), &out)
}

/// `(μ_A⊗μ_B)·(X⊗Y)` with the legs regrouped, for `X` into `A₁⊗B` and `Y`
/// into `A₂⊗B`: `μ_A: A₁⊗A₂ → A` and `μ_B: B⊗B → B` multiply factorwise.
pub fn mul_in_tensor_algebra(ma: &Mat, mb: &Mat, x: &Mat, y: &Mat) -> Mat {
    let field = ma.field();
    let (da, db) = (ma.rows(), mb.rows());
    assert_eq!(mb.cols(), db * db, "second multiplication is not B⊗B → B");
    assert!(
        x.rows().is_multiple_of(db) && y.rows().is_multiple_of(db),
        "factors do not end in B"
    );
    let (d1, d2) = (x.rows() / db, y.rows() / db);
    assert_eq!(
        ma.cols(),
        d1 * d2,
        "first multiplication does not match the factors"
    );
    let (mas, mbs) = (sparse_columns(ma), sparse_columns(mb));
    let (xs, ys) = (sparse_columns(x), sparse_columns(y));
    let mut acc = vec![field.zero(); da * db];
    let mut touched = Vec::new();
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for xc in &xs {
        for yc in &ys {
            for (p, u) in xc {
                let (a1, b1) = (p / db, p % db);
                for (q, v) in yc {
                    let (a2, b2) = (q / db, q % db);
                    let s = u * v;
                    for (ra, wa) in &mas[a1 * d2 + a2] {
                        let sa = &s * wa;
                        for (rb, wb) in &mbs[b1 * db + b2] {
                            let idx = ra * db + rb;
                            acc[idx] = &acc[idx] + &(&sa * wb);
                            touched.push(idx);
                        }
                    }
                }
            }
            out.push(drain(&mut acc, &mut touched, field));
        }
    }
    from_sparse_columns(field, da * db, &out)
}

/// Collects and clears the touched entries of a dense accumulator.
fn drain(acc: &mut [Scalar], touched: &mut Vec<usize>, field: Field) -> SparseVec {
    touched.sort_unstable();
    touched.dedup();
    let mut out = Vec::new();
    for &i in touched.iter() {
        let v = std::mem::replace(&mut acc[i], field.zero());
        if !v.is_zero() {
            out.push((i, v));
        }
    }
    touched.clear();
    out
}

/// `row -= c·other` on sparse vectors.
fn axpy(row: &SparseVec, c: &Scalar, other: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_row = j == other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_other = i == row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_other {
            out.push((other[j].0, -&(c * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(c * &other[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon basis built one vector at a time.
pub struct SpanBuilder {
    field: Field,
    acc: Vec<Scalar>,
    touched: Vec<usize>,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl SpanBuilder {
    pub fn new(field: Field, ambient: usize) -> SpanBuilder {
        SpanBuilder {
            field,
            acc: vec![field.zero(); ambient],
            touched: Vec::new(),
            rows: Vec::new(),
            pivot_row: vec![None; ambient],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector; returns whether the span grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        for (i, x) in v {
            self.acc[*i] = &self.acc[*i] + x;
            self.touched.push(*i);
        }
        // Rows vanish on every pivot but their own, so one pass over the
        // original support clears all pivot positions.
        for (i, _) in v {
            let Some(r) = self.pivot_row[*i] else {
                continue;
            };
            let c = self.acc[*i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, y) in &self.rows[r] {
                self.acc[*j] = &self.acc[*j] - &(&c * y);
                self.touched.push(*j);
            }
        }
        let w = drain(&mut self.acc, &mut self.touched, self.field);
        let Some((q, lead)) = w.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let w: SparseVec = w.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&q, |(i, _)| *i) {
                let c = row[pos].1.clone();
                *row = axpy(row, &c, &w);
            }
        }
        self.pivot_row[q] = Some(self.rows.len());
        self.rows.push(w);
        true
    }

    /// Echelon rows sorted by pivot, with their pivots.
    pub fn finish(self) -> (Mat, Vec<usize>) {
        let ambient = self.pivot_row.len();
        let mut order: Vec<(usize, usize)> = self
            .pivot_row
            .iter()
            .enumerate()
            .filter_map(|(p, r)| r.map(|r| (p, r)))
            .collect();
        order.sort_unstable();
        let mut out = Mat::zeros(self.field, order.len(), ambient);
        for (k, &(_, r)) in order.iter().enumerate() {
            for (j, v) in &self.rows[r] {
                out.set(k, *j, v.clone());
            }
        }
        (out, order.into_iter().map(|(p, _)| p).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn span_builder_matches_dense_echelon() {
        let m = Mat::from_i64_rows(
            Q,
            &[
                &[0, 2, 4, 1],
                &[1, 1, 0, 0],
                &[1, 2, 2, 0],
                &[2, 3, 2, 0],
                &[0, 0, 0, 3],
            ],
        );
        let mut b = SpanBuilder::new(Q, 4);
        for r in 0..m.rows() {
            let row: SparseVec = (0..4)
                .filter(|&c| !m.get(r, c).is_zero())
                .map(|c| (c, m.get(r, c).clone()))
                .collect();
            b.insert(&row);
        }
        let (rows, pivots) = b.finish();
        let ech = m.echelon();
        assert_eq!(pivots, ech.pivots);
        assert_eq!(
            rows,
            ech.reduced
                .select_rows(&(0..pivots.len()).collect::<Vec<_>>())
        );
    }

    #[test]
    fn kron_mul_matches_kron() {
        let x = Mat::from_i64_rows(Q, &[&[1, 2], &[0, -1], &[3, 0]]);
        let y = Mat::from_i64_rows(Q, &[&[0, 1, 1], &[2, 0, -1]]);
        let v = Mat::from_fn(Q, 6, 4, |r, c| Q.from_i64(((r * 7 + c * 3) % 5) as i64 - 2));
        assert_eq!(kron_mul(&x, &y, &v), x.kron(&y).mul(&v));
        let a = Mat::from_fn(Q, 3, 6, |r, c| Q.from_i64(((r * 5 + c) % 4) as i64 - 1));
        assert_eq!(mul_kron(&a, &x, &y), a.mul(&x.kron(&y)));
    }

    #[test]
    fn factorwise_product_matches_dense_formula() {
        use crate::linear::tensor::permute_rows;
        let (d1, d2, d, b) = (3, 2, 2, 2);
        let ma = Mat::from_fn(Q, d, d1 * d2, |r, c| {
            Q.from_i64(((r * 3 + c * 5) % 7) as i64 - 3)
        });
        let mb = Mat::from_fn(Q, b, b * b, |r, c| Q.from_i64(((r + c * 2) % 3) as i64 - 1));
        let x = Mat::from_fn(Q, d1 * b, 3, |r, c| {
            Q.from_i64(((r * 2 + c) % 5) as i64 - 2)
        });
        let y = Mat::from_fn(Q, d2 * b, 2, |r, c| {
            Q.from_i64(((r + c * 3) % 4) as i64 - 1)
        });
        let dense = ma
            .kron(&mb)
            .mul(&permute_rows(&x.kron(&y), &[d1, b, d2, b], &[0, 2, 1, 3]));
        assert_eq!(mul_in_tensor_algebra(&ma, &mb, &x, &y), dense);
    }
}
