use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        IntMat::from_fn(n, n, |i, j| BigInt::from(u8::from(i == j)))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> IntMat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMat { rows, cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> IntMat {
        assert!(
            columns.iter().all(|c| c.len() == rows),
            "columns of different length"
        );
        IntMat::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn select_columns(&self, cols: &[usize]) -> IntMat {
        IntMat::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "integer matrix shape mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "integer matrix shape mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| *self.get(r, c) == BigInt::from(u8::from(r == c))))
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n * n - 1]
    }

    /// Index of the lattice spanned by the columns inside `ℤ^rows`;
    /// `None` when the columns do not have full rank.
    pub fn lattice_index(&self) -> Option<BigInt> {
        // Rows of `g` are the generators; reduce to echelon form by
        // unimodular row operations.
        let (k, d) = (self.cols, self.rows);
        let mut g: Vec<Vec<BigInt>> = (0..k).map(|c| self.column(c)).collect();
        let mut index = BigInt::one();
        let mut top = 0;
        for col in 0..d {
            loop {
                let pivot = (top..k)
                    .filter(|&r| !g[r][col].is_zero())
                    .min_by(|&x, &y| g[x][col].abs().cmp(&g[y][col].abs()));
                let Some(p) = pivot else { break };
                g.swap(top, p);
                let mut done = true;
                for r in top + 1..k {
                    if g[r][col].is_zero() {
                        continue;
                    }
                    let q = g[r][col].div_floor(&g[top][col]);
                    let pivot_row = g[top].clone();
                    for (x, y) in g[r].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                    if !g[r][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if top >= k || g[top][col].is_zero() {
                return None;
            }
            index *= g[top][col].abs();
            top += 1;
        }
        Some(index)
    }
}
