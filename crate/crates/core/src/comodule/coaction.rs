use crate::error::{input, Error, Result};
use crate::hopf::{build_group_algebra, Degree, GradingGroup, HopfData};
use crate::linear::sparse::kron_mul;
use crate::linear::{kernel, Field, Mat, Subspace};
use crate::report::{compare_maps, Report};

/// A coaction of a Hopf algebra on a finite-dimensional space, either as a
/// matrix or, for group algebras of finitely generated abelian groups, as a
/// grading.
///
/// For right coactions the matrix is `V → V⊗H`; for left coactions `V → H⊗V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coaction {
    Finite {
        hopf: HopfData,
        matrix: Mat,
    },
    Graded {
        group: GradingGroup,
        degrees: Vec<Degree>,
    },
}

/// Which side the Hopf algebra sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Coaction {
    /// Validates shapes (and normalizes degrees) for a space of dimension `dim`.
    pub fn validated(self, dim: usize, field: Field) -> Result<Coaction> {
        match self {
            Coaction::Finite { hopf, matrix } => {
                let h = hopf.dim();
                if matrix.shape() != (dim * h, dim) {
                    return input(format!(
                        "coaction must be {}x{dim}, got {}x{}",
                        dim * h,
                        matrix.rows(),
                        matrix.cols()
                    ));
                }
                if hopf.field() != field || matrix.field() != field {
                    return input("coaction over a different field");
                }
                Ok(Coaction::Finite { hopf, matrix })
            }
            Coaction::Graded { group, degrees } => {
                if degrees.len() != dim {
                    return input(format!("expected {dim} degrees, got {}", degrees.len()));
                }
                let degrees = degrees
                    .iter()
                    .map(|d| group.normalize(d))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Coaction::Graded { group, degrees })
            }
        }
    }

    pub fn hopf(&self) -> Option<&HopfData> {
        match self {
            Coaction::Finite { hopf, .. } => Some(hopf),
            Coaction::Graded { .. } => None,
        }
    }

    pub fn matrix(&self) -> Option<&Mat> {
        match self {
            Coaction::Finite { matrix, .. } => Some(matrix),
            Coaction::Graded { .. } => None,
        }
    }

    pub fn degrees(&self) -> Option<&[Degree]> {
        match self {
            Coaction::Graded { degrees, .. } => Some(degrees),
            Coaction::Finite { .. } => None,
        }
    }

    pub fn grading_group(&self) -> Option<&GradingGroup> {
        match self {
            Coaction::Graded { group, .. } => Some(group),
            Coaction::Finite { .. } => None,
        }
    }

    /// True when both coactions are over the same Hopf algebra or grading group.
    pub fn same_structure(&self, other: &Coaction) -> bool {
        match (self, other) {
            (Coaction::Finite { hopf: a, .. }, Coaction::Finite { hopf: b, .. }) => a == b,
            (Coaction::Graded { group: a, .. }, Coaction::Graded { group: b, .. }) => a == b,
            _ => false,
        }
    }

    /// Converts a grading by a finite group into the coaction of its group algebra.
    pub fn materialize(&self, field: Field, side: Side) -> Result<Coaction> {
        match self {
            Coaction::Finite { .. } => Ok(self.clone()),
            Coaction::Graded { group, degrees } => {
                let Some(g) = group.to_finite_group() else {
                    return Err(Error::Unsupported(
                        "grading group is infinite; its group algebra is not materialized".into(),
                    ));
                };
                let hopf = build_group_algebra(field, &g);
                let (n, h) = (degrees.len(), g.order());
                let mut matrix = Mat::zeros(field, n * h, n);
                for (i, d) in degrees.iter().enumerate() {
                    let e = group.element_index(d).expect("finite group");
                    let row = match side {
                        Side::Right => i * h + e,
                        Side::Left => e * n + i,
                    };
                    matrix.set(row, i, field.one());
                }
                Ok(Coaction::Finite { hopf, matrix })
            }
        }
    }

    /// The identity `V → V` lifted through the unit: `v ↦ v⊗1` or `1⊗v`.
    pub fn trivial_matrix(hopf: &HopfData, dim: usize, side: Side) -> Mat {
        let id = Mat::identity(hopf.field(), dim);
        match side {
            Side::Right => id.kron(hopf.unit()),
            Side::Left => hopf.unit().kron(&id),
        }
    }

    /// Coinvariant vectors: `ρ(v) = v⊗1` (or degree zero).
    pub fn invariants(&self, dim: usize, field: Field, side: Side) -> Subspace {
        match self {
            Coaction::Finite { hopf, matrix } => {
                kernel(&matrix.sub(&Coaction::trivial_matrix(hopf, dim, side)))
                    .expect("single field")
            }
            Coaction::Graded { group, degrees } => {
                let zero = group.zero();
                let cols: Vec<Vec<_>> = degrees
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| **d == zero)
                    .map(|(i, _)| {
                        let mut v = vec![field.zero(); dim];
                        v[i] = field.one();
                        v
                    })
                    .collect();
                Subspace::span_columns(&Mat::from_columns(field, dim, &cols))
            }
        }
    }

    /// Coassociativity and counit laws.
    pub fn check(&self, names: &[String], side: Side) -> Report {
        let mut report = Report::new();
        let Coaction::Finite { hopf, matrix: rho } = self else {
            return report;
        };
        let n = names.len();
        let f = hopf.field();
        let id_v = Mat::identity(f, n);
        let id_h = hopf.identity();
        let (lhs, rhs, counit) = match side {
            Side::Right => (
                kron_mul(rho, &id_h, rho),
                kron_mul(&id_v, hopf.comult(), rho),
                kron_mul(&id_v, hopf.counit(), rho),
            ),
            Side::Left => (
                kron_mul(&id_h, rho, rho),
                kron_mul(hopf.comult(), &id_v, rho),
                kron_mul(hopf.counit(), &id_v, rho),
            ),
        };
        report.push(compare_maps("coaction_coassociative", &lhs, &rhs, &[names]));
        report.push(compare_maps("coaction_counital", &counit, &id_v, &[names]));
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::FiniteGroup;

    #[test]
    fn materialized_grading_is_a_coaction() {
        let q = Field::Rational;
        let c = Coaction::Graded {
            group: GradingGroup::cyclic(3).unwrap(),
            degrees: vec![vec![0], vec![2]],
        };
        let names = vec!["a".to_string(), "b".to_string()];
        for side in [Side::Left, Side::Right] {
            let m = c.materialize(q, side).unwrap();
            assert!(m.check(&names, side).all_pass());
            assert_eq!(m.invariants(2, q, side).dim(), 1);
        }
        let hopf = build_group_algebra(q, &FiniteGroup::cyclic(3).unwrap());
        assert_eq!(c.materialize(q, Side::Right).unwrap().hopf(), Some(&hopf));
    }
}
