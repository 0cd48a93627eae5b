use crate::error::{input, invariant, Error, Result};
use crate::hopf::{AlgebraData, GradingGroup, HopfData};
use crate::linear::sparse::mul_in_tensor_algebra;
use crate::linear::{Field, Mat, Scalar, Subspace};
use crate::report::{compare_maps, Report, Verdict};

use super::coaction::{Coaction, Side};
use crate::linear::sparse::mul_kron;

/// An algebra with a right coaction that is an algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    algebra: AlgebraData,
    coaction: Coaction,
}

impl ComoduleAlgebra {
    pub fn new(algebra: AlgebraData, coaction: Coaction) -> Result<ComoduleAlgebra> {
        let coaction = coaction.validated(algebra.dim(), algebra.field())?;
        Ok(ComoduleAlgebra { algebra, coaction })
    }

    pub fn finite(algebra: AlgebraData, hopf: HopfData, rho: Mat) -> Result<ComoduleAlgebra> {
        ComoduleAlgebra::new(algebra, Coaction::Finite { hopf, matrix: rho })
    }

    pub fn graded(
        algebra: AlgebraData,
        group: GradingGroup,
        degrees: Vec<Vec<i64>>,
    ) -> Result<ComoduleAlgebra> {
        ComoduleAlgebra::new(algebra, Coaction::Graded { group, degrees })
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(hopf: &HopfData) -> ComoduleAlgebra {
        ComoduleAlgebra {
            algebra: hopf.algebra().clone(),
            coaction: Coaction::Finite {
                hopf: hopf.clone(),
                matrix: hopf.comult().clone(),
            },
        }
    }

    /// `a ↦ a⊗1`.
    pub fn trivial(algebra: AlgebraData, hopf: &HopfData) -> ComoduleAlgebra {
        let matrix = Coaction::trivial_matrix(hopf, algebra.dim(), Side::Right);
        ComoduleAlgebra {
            algebra,
            coaction: Coaction::Finite {
                hopf: hopf.clone(),
                matrix,
            },
        }
    }

    /// `ρ(a) = Σ_g (g·a)⊗δ_g` for a left action of `G` by algebra maps,
    /// given as one matrix per group element, as a comodule algebra over `𝕜^G`.
    pub fn from_group_action(
        algebra: AlgebraData,
        hopf: &HopfData,
        action: &[Mat],
    ) -> Result<ComoduleAlgebra> {
        let (n, g) = (algebra.dim(), hopf.dim());
        if action.len() != g || action.iter().any(|m| m.shape() != (n, n)) {
            return input(format!("group action needs {g} matrices of size {n}x{n}"));
        }
        let f = algebra.field();
        let mut rho = Mat::zeros(f, n * g, n);
        for (k, m) in action.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    rho.set(r * g + k, c, m.get(r, c).clone());
                }
            }
        }
        ComoduleAlgebra::finite(algebra, hopf.clone(), rho)
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        self.algebra.basis_names()
    }

    /// The Hopf algebra and coaction matrix; graded data is materialized
    /// when the grading group is finite.
    pub fn finite_parts(&self) -> Result<(HopfData, Mat)> {
        match self.coaction.materialize(self.field(), Side::Right)? {
            Coaction::Finite { hopf, matrix } => Ok((hopf, matrix)),
            Coaction::Graded { .. } => unreachable!("materialized coaction is finite"),
        }
    }

    /// The same algebra with a graded coaction replaced by its group-algebra coaction.
    pub fn materialized(&self) -> Result<ComoduleAlgebra> {
        let (hopf, matrix) = self.finite_parts()?;
        ComoduleAlgebra::finite(self.algebra.clone(), hopf, matrix)
    }

    /// Algebra axioms, comodule axioms, and multiplicativity of the coaction.
    pub fn check(&self) -> Report {
        let names = self.basis_names();
        let mut report = self.algebra.check();
        report.extend("", self.coaction.check(names, Side::Right));
        let m = self.algebra.mult();
        match &self.coaction {
            Coaction::Finite { hopf, matrix: rho } => {
                let h = hopf.dim();
                let lhs = rho.mul(m);
                let rhs = mul_in_tensor_algebra(m, hopf.mult(), rho, rho);
                report.push(compare_maps(
                    "coaction_multiplicative",
                    &lhs,
                    &rhs,
                    &[names, names],
                ));
                report.push(Verdict::from_bool(
                    "coaction_unital",
                    rho.mul(self.algebra.unit()) == self.algebra.unit().kron(hopf.unit()),
                    "ρ(1) differs from 1⊗1",
                ));
                report.dim("dim_H", h);
            }
            Coaction::Graded { group, degrees } => {
                let n = self.dim();
                let mut witness = None;
                'outer: for i in 0..n {
                    for j in 0..n {
                        let want = group.add(&degrees[i], &degrees[j]);
                        let prod = m.column(i * n + j);
                        if prod
                            .iter()
                            .enumerate()
                            .any(|(k, x)| !x.is_zero() && degrees[k] != want)
                        {
                            witness = Some(format!("basis ({}, {})", names[i], names[j]));
                            break 'outer;
                        }
                    }
                }
                report.push(match witness {
                    None => Verdict::pass("coaction_multiplicative"),
                    Some(w) => Verdict::fail("coaction_multiplicative", w),
                });
                let unit = self.algebra.unit_vector();
                let zero = group.zero();
                report.push(Verdict::from_bool(
                    "coaction_unital",
                    unit.iter()
                        .zip(degrees)
                        .all(|(x, d)| x.is_zero() || *d == zero),
                    "unit is not of degree zero",
                ));
            }
        }
        report.dim("dim_A", self.dim());
        report
    }

    /// The coinvariant subalgebra; verified to contain 1 and be closed under products.
    pub fn coinvariants(&self) -> Result<Subspace> {
        let space = self
            .coaction
            .invariants(self.dim(), self.field(), Side::Right);
        if !space.contains_vector(&self.algebra.unit_vector()) {
            return invariant("coinvariants do not contain the unit");
        }
        let basis = space.basis_matrix();
        let products = mul_kron(self.algebra.mult(), &basis, &basis);
        if !space.contains_columns(&products) {
            return invariant("coinvariants are not closed under multiplication");
        }
        Ok(space)
    }

    /// Coordinates of `ρ(v)` for a vector `v`.
    pub fn coact(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let (_, rho) = self.finite_parts()?;
        Ok(rho.apply(v))
    }

    /// Change of basis of the algebra by an invertible matrix `p` whose
    /// columns are the new basis vectors in old coordinates.
    pub fn rebased(&self, p: &Mat) -> Result<ComoduleAlgebra> {
        let Some(pinv) = p.inverse() else {
            return input("change of basis is not invertible");
        };
        let m = pinv.mul(self.algebra.mult()).mul(&p.kron(p));
        let u = pinv.mul(self.algebra.unit());
        let algebra = AlgebraData::new(self.field(), self.basis_names().to_vec(), m, u)?;
        match &self.coaction {
            Coaction::Finite { hopf, matrix } => {
                let rho = pinv.kron(&hopf.identity()).mul(matrix).mul(p);
                ComoduleAlgebra::finite(algebra, hopf.clone(), rho)
            }
            Coaction::Graded { .. } => Err(Error::Unsupported(
                "graded data cannot be rebased by a non-homogeneous matrix".into(),
            )),
        }
    }
}
