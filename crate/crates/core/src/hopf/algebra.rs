use std::collections::BTreeSet;

use crate::error::{input, Result};
use crate::linear::sparse::mul_kron;
use crate::linear::{kernel, solve, tensor, Field, Mat, Scalar, Subspace};
use crate::report::{compare_maps, Report, Verdict};

/// A finite-dimensional unital associative algebra given by structure constants.
///
/// `mult` is the `dim x dim²` matrix of `m: A ⊗ A -> A` and `unit` the
/// `dim x 1` matrix of `u: k -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    field: Field,
    basis_names: Vec<String>,
    mult: Mat,
    unit: Mat,
}

impl AlgebraData {
    /// Shape-validated constructor. Axioms are checked separately by [`AlgebraData::check`].
    pub fn new(
        field: Field,
        basis_names: Vec<String>,
        mult: Mat,
        unit: Mat,
    ) -> Result<AlgebraData> {
        let n = basis_names.len();
        let unique: BTreeSet<&String> = basis_names.iter().collect();
        if unique.len() != n {
            return input("basis names must be unique");
        }
        if mult.shape() != (n, n * n) {
            return input(format!(
                "multiplication must be {n}x{}, got {}x{}",
                n * n,
                mult.rows(),
                mult.cols()
            ));
        }
        if unit.shape() != (n, 1) {
            return input(format!(
                "unit must be {n}x1, got {}x{}",
                unit.rows(),
                unit.cols()
            ));
        }
        if mult.field() != field || unit.field() != field {
            return input("algebra data over mixed fields");
        }
        Ok(AlgebraData {
            field,
            basis_names,
            mult,
            unit,
        })
    }

    /// Builds an algebra from a product rule on basis elements.
    pub fn from_products(
        field: Field,
        basis_names: Vec<String>,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<AlgebraData> {
        let n = basis_names.len();
        let mut mult = Mat::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return input("product vector has wrong length");
                }
                for (k, x) in v.into_iter().enumerate() {
                    mult.set(k, i * n + j, x);
                }
            }
        }
        AlgebraData::new(field, basis_names, mult, Mat::column_vector(field, unit))
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> AlgebraData {
        AlgebraData {
            field,
            basis_names: vec!["1".into()],
            mult: Mat::identity(field, 1),
            unit: Mat::identity(field, 1),
        }
    }

    /// `k[x]/(f)` for a monic `f` given by its coefficients `c_0..c_{d-1}`
    /// (so `x^d = -Σ c_i x^i`). Basis `1, x, ..., x^{d-1}` named with `var`.
    pub fn monogenic(field: Field, var: &str, lower_coeffs: &[Scalar]) -> AlgebraData {
        let d = lower_coeffs.len();
        let names: Vec<String> = (0..d)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            })
            .collect();
        // Multiplication by x as a companion matrix.
        let mut xmat = Mat::zeros(field, d, d);
        for k in 0..d {
            if k + 1 < d {
                xmat.set(k + 1, k, field.one());
            } else {
                for (i, c) in lower_coeffs.iter().enumerate() {
                    xmat.set(i, k, -c);
                }
            }
        }
        let mut powers = vec![Mat::identity(field, d)];
        for k in 1..d {
            powers.push(xmat.mul(&powers[k - 1]));
        }
        let mut unit = vec![field.zero(); d];
        if d > 0 {
            unit[0] = field.one();
        }
        AlgebraData::from_products(field, names, unit, |i, j| powers[i].column(j))
            .expect("well-formed monogenic algebra")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.field, self.dim())
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy = Mat::column_vector(self.field, x.to_vec())
            .kron(&Mat::column_vector(self.field, y.to_vec()));
        self.mult.mul(&xy).column(0)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        let xc = Mat::column_vector(self.field, x.to_vec());
        mul_kron(&self.mult, &xc, &self.identity())
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        let xc = Mat::column_vector(self.field, x.to_vec());
        mul_kron(&self.mult, &self.identity(), &xc)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        self.mult == tensor::permute_cols(&self.mult, &[n, n], &[1, 0])
    }

    /// Associativity and unit laws.
    pub fn check(&self) -> Report {
        let n = self.dim();
        let id = self.identity();
        let names = self.basis_names.as_slice();
        let mut report = Report::new();
        report.dim("dim", n);
        let left = mul_kron(&self.mult, &self.mult, &id);
        let right = mul_kron(&self.mult, &id, &self.mult);
        report.push(compare_maps(
            "associativity",
            &left,
            &right,
            &[names, names, names],
        ));
        let ul = mul_kron(&self.mult, &self.unit, &id);
        let ur = mul_kron(&self.mult, &id, &self.unit);
        report.push(compare_maps("unit_left", &ul, &id, &[names]));
        report.push(compare_maps("unit_right", &ur, &id, &[names]));
        report
    }

    /// The tensor product algebra `A ⊗ B` with factorwise multiplication.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let (a, b) = (self.dim(), other.dim());
        let f = self.field;
        let mult = tensor::permute_cols(&self.mult.kron(&other.mult), &[a, b, a, b], &[0, 2, 1, 3]);
        let unit = self.unit.kron(&other.unit);
        let mut names = Vec::with_capacity(a * b);
        for x in &self.basis_names {
            for y in &other.basis_names {
                names.push(format!("{x}⊗{y}"));
            }
        }
        AlgebraData {
            field: f,
            basis_names: names,
            mult,
            unit,
        }
    }

    /// The subalgebra carried by `space`, in the subspace's echelon basis,
    /// together with its inclusion matrix.
    pub fn subalgebra(&self, space: &Subspace) -> Result<(AlgebraData, Mat)> {
        if space.ambient_dim() != self.dim() {
            return input("subalgebra subspace has wrong ambient dimension");
        }
        let incl = space.basis_matrix();
        self.subalgebra_from_embedding(&incl, None)
    }

    /// Structure constants on the image of an injective linear map `incl`
    /// whose image must be a unital subalgebra.
    pub fn subalgebra_from_embedding(
        &self,
        incl: &Mat,
        names: Option<Vec<String>>,
    ) -> Result<(AlgebraData, Mat)> {
        let k = incl.cols();
        if incl.rows() != self.dim() {
            return input("embedding has wrong target dimension");
        }
        if incl.rank() != k {
            return input("embedding is not injective");
        }
        let products = mul_kron(&self.mult, incl, incl);
        let Some(mult) = solve(incl, &products)? else {
            return input("subspace is not closed under multiplication");
        };
        let Some(unit) = solve(incl, &self.unit)? else {
            return input("subspace does not contain the unit");
        };
        let names = names.unwrap_or_else(|| (0..k).map(|i| format!("b{i}")).collect());
        let sub = AlgebraData::new(self.field, names, mult, unit)?;
        Ok((sub, incl.clone()))
    }

    /// Checks that `f: self -> target` is a unital algebra map.
    pub fn check_algebra_map(&self, f: &Mat, target: &AlgebraData) -> Report {
        let mut report = Report::new();
        if f.shape() != (target.dim(), self.dim()) {
            report.push(Verdict::fail(
                "shape",
                format!(
                    "expected {}x{}, got {}x{}",
                    target.dim(),
                    self.dim(),
                    f.rows(),
                    f.cols()
                ),
            ));
            return report;
        }
        let names = self.basis_names.as_slice();
        let lhs = f.mul(&self.mult);
        let rhs = mul_kron(&target.mult, f, f);
        report.push(compare_maps("multiplicative", &lhs, &rhs, &[names, names]));
        report.push(Verdict::from_bool(
            "unital",
            f.mul(&self.unit) == target.unit,
            "image of the unit is not the unit",
        ));
        report
    }

    /// The center as a subspace.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let comm = self
            .mult
            .sub(&tensor::permute_cols(&self.mult, &[n, n], &[1, 0]));
        // x central iff m(x⊗y) - m(y⊗x) = 0 for all basis y.
        let mut constraint = Mat::zeros(self.field, 0, n);
        for y in 0..n {
            let mut ey = vec![self.field.zero(); n];
            ey[y] = self.field.one();
            let block =
                comm.mul(&Mat::identity(self.field, n).kron(&Mat::column_vector(self.field, ey)));
            constraint = constraint.vstack(&block);
        }
        kernel(&constraint).expect("single-field constraint")
    }
}
