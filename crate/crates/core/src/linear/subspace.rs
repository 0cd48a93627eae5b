use super::mat::Mat;
use super::scalar::{Field, Scalar};
use super::sparse::{SpanBuilder, SparseVec};
use crate::error::{input, Result};

/// A linear subspace of `field^ambient_dim`, stored canonically as the
/// nonzero rows of a reduced row echelon matrix.
///
/// Two subspaces are equal iff their stored echelon matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            rows: Mat::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            rows: Mat::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the columns of `vectors`.
    pub fn span_columns(vectors: &Mat) -> Subspace {
        Subspace::span_rows(&vectors.transpose())
    }

    /// Span of the rows of `vectors`.
    pub fn span_rows(vectors: &Mat) -> Subspace {
        let rows = (0..vectors.rows()).map(|r| {
            vectors
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect::<SparseVec>()
        });
        Subspace::span_sparse(vectors.field(), vectors.cols(), rows)
    }

    /// Span of sparse vectors.
    pub fn span_sparse(
        field: Field,
        ambient_dim: usize,
        vectors: impl IntoIterator<Item = SparseVec>,
    ) -> Subspace {
        let mut builder = SpanBuilder::new(field, ambient_dim);
        for v in vectors {
            if builder.rank() == ambient_dim {
                break;
            }
            builder.insert(&v);
        }
        let (rows, pivots) = builder.finish();
        Subspace {
            ambient_dim,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.rows.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Echelon basis as rows (`dim x ambient_dim`).
    pub fn echelon_rows(&self) -> &Mat {
        &self.rows
    }

    /// Basis vectors as columns (`ambient_dim x dim`).
    pub fn basis_matrix(&self) -> Mat {
        self.rows.transpose()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.rows.row(i).to_vec()).collect()
    }

    /// Coordinates of the columns of `vectors` in the echelon basis, or
    /// `None` if some column lies outside the subspace.
    pub fn coordinates(&self, vectors: &Mat) -> Option<Mat> {
        assert_eq!(
            vectors.rows(),
            self.ambient_dim,
            "coordinate ambient mismatch"
        );
        let coords = vectors.select_rows(&self.pivots);
        if self.basis_matrix().mul(&coords) == *vectors {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_columns(&self, vectors: &Mat) -> bool {
        self.coordinates(vectors).is_some()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.contains_columns(&Mat::column_vector(self.field(), v.to_vec()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        other.contains_columns(&self.basis_matrix())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span_rows(&self.rows.vstack(&other.rows))
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, map: &Mat) -> Subspace {
        Subspace::span_columns(&map.mul(&self.basis_matrix()))
    }
}

/// Kernel of `m` as a canonical subspace of `field^cols(m)`.
pub fn kernel(m: &Mat) -> Result<Subspace> {
    if let Some(bad) = m.entries().iter().find(|x| x.field() != m.field()) {
        return input(format!("mixed-field entry {bad} in kernel input"));
    }
    let field = m.field();
    let n = m.cols();
    let ech = m.echelon();
    let free: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Mat::zeros(field, free.len(), n);
    for (i, &f) in free.iter().enumerate() {
        basis.set(i, f, field.one());
        for (r, &p) in ech.pivots.iter().enumerate() {
            basis.set(i, p, -ech.reduced.get(r, f));
        }
    }
    Ok(Subspace::span_rows(&basis))
}

/// Image (column space) of `m`.
pub fn image(m: &Mat) -> Subspace {
    Subspace::span_columns(m)
}

/// Some `x` with `m * x = b`, or `None` when `b` is not in the image.
pub fn solve(m: &Mat, b: &Mat) -> Result<Option<Mat>> {
    if m.rows() != b.rows() {
        return input(format!(
            "solve shape mismatch: matrix has {} rows, right-hand side {}",
            m.rows(),
            b.rows()
        ));
    }
    if m.field() != b.field() {
        return input("solve over mixed fields");
    }
    let field = m.field();
    let n = m.cols();
    let aug = m.hstack(b);
    let ech = aug.echelon();
    if ech.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Mat::zeros(field, n, b.cols());
    for (r, &p) in ech.pivots.iter().enumerate() {
        for c in 0..b.cols() {
            x.set(p, c, ech.reduced.get(r, n + c).clone());
        }
    }
    Ok(Some(x))
}

/// Coordinates of the columns of `vectors` with respect to the linearly
/// independent columns of `basis`.
pub fn coordinates_in(basis: &Mat, vectors: &Mat) -> Result<Option<Mat>> {
    solve(basis, vectors)
}

pub fn is_bijective(m: &Mat) -> bool {
    m.is_square() && m.rank() == m.rows()
}

/// A quotient `field^ambient / relations` with a chosen complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub ambient_dim: usize,
    pub relations: Subspace,
    /// `dim x ambient_dim`: class of each ambient vector.
    pub projector: Mat,
    /// `ambient_dim x dim`: representative of each quotient basis vector.
    pub section: Mat,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.projector.rows()
    }
}

/// Quotient by a subspace; the complement is spanned by the non-pivot
/// standard basis vectors of the relations' echelon form.
pub fn quotient(ambient_dim: usize, relations: &Subspace) -> Result<Quotient> {
    if relations.ambient_dim() != ambient_dim {
        return input(format!(
            "relations live in dimension {}, ambient is {ambient_dim}",
            relations.ambient_dim()
        ));
    }
    let field = relations.field();
    let pivots = relations.pivots();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut section = Mat::zeros(field, ambient_dim, q);
    let mut projector = Mat::zeros(field, q, ambient_dim);
    for (i, &f) in free.iter().enumerate() {
        section.set(f, i, field.one());
        projector.set(i, f, field.one());
    }
    let rows = relations.echelon_rows();
    for (r, &p) in pivots.iter().enumerate() {
        for (i, &f) in free.iter().enumerate() {
            projector.set(i, p, -rows.get(r, f));
        }
    }
    Ok(Quotient {
        ambient_dim,
        relations: relations.clone(),
        projector,
        section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = kernel(&Mat::identity(Q, 2)).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(k, Subspace::zero(Q, 2));
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let k = kernel(&Mat::from_i64_rows(Q, &[&[1, 1]])).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&[Q.from_i64(1), Q.from_i64(-1)]));
    }

    #[test]
    fn solve_cases() {
        let id = Mat::identity(Q, 3);
        let b = Mat::from_i64_rows(Q, &[&[1], &[2], &[3]]);
        assert_eq!(solve(&id, &b).unwrap().unwrap(), b);
        let m = Mat::from_i64_rows(Q, &[&[1, 1], &[2, 2]]);
        let b = Mat::from_i64_rows(Q, &[&[1], &[3]]);
        assert!(solve(&m, &b).unwrap().is_none());
        assert!(solve(&m, &Mat::zeros(Q, 3, 1)).is_err());
    }

    #[test]
    fn bijectivity() {
        assert!(is_bijective(&Mat::identity(Q, 4)));
        assert!(!is_bijective(&Mat::zeros(Q, 2, 3)));
        let rep = Mat::from_i64_rows(Q, &[&[1, 2, 3], &[1, 2, 3], &[0, 0, 1]]);
        assert!(!is_bijective(&rep));
    }

    #[test]
    fn quotient_cases() {
        let q = quotient(3, &Subspace::zero(Q, 3)).unwrap();
        assert_eq!(q.projector, Mat::identity(Q, 3));
        let rel = Subspace::span_columns(&Mat::from_i64_rows(Q, &[&[1], &[-1]]));
        let q = quotient(2, &rel).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.projector.column(0), q.projector.column(1));
        assert_eq!(q.projector.mul(&q.section), Mat::identity(Q, 1));
        assert_eq!(kernel(&q.projector).unwrap(), rel);
        assert!(quotient(3, &rel).is_err());
    }
}
