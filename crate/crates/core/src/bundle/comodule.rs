use crate::comodule::{Coaction, Side};
use crate::error::{input, Result};
use crate::hopf::{Degree, GradingGroup, HopfData};
use crate::linear::sparse::kron_mul;
use crate::linear::{tensor, Field, Mat, Scalar};

/// A finite-dimensional left comodule `V → H⊗V`, or a graded space for
/// the grading shortcut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    basis_names: Vec<String>,
    coaction: Coaction,
}

impl LeftComodule {
    /// Validates shapes and the coassociativity and counit laws.
    pub fn new(basis_names: Vec<String>, coaction: Coaction) -> Result<LeftComodule> {
        let field = coaction.hopf().map_or(Field::Rational, HopfData::field);
        let coaction = coaction.validated(basis_names.len(), field)?;
        let report = coaction.check(&basis_names, Side::Left);
        if let Some(v) = report.failures().next() {
            return input(format!(
                "not a left comodule: {} ({})",
                v.name,
                v.witness.as_deref().unwrap_or("?")
            ));
        }
        Ok(LeftComodule {
            basis_names,
            coaction,
        })
    }

    /// The one-dimensional comodule `v ↦ 1⊗v`.
    pub fn trivial(hopf: &HopfData) -> LeftComodule {
        LeftComodule {
            basis_names: vec!["1".into()],
            coaction: Coaction::Finite {
                hopf: hopf.clone(),
                matrix: hopf.unit().clone(),
            },
        }
    }

    /// The trivial comodule over the Hopf algebra or grading group of `like`.
    pub fn trivial_like(like: &Coaction) -> LeftComodule {
        match like {
            Coaction::Finite { hopf, .. } => LeftComodule::trivial(hopf),
            Coaction::Graded { group, .. } => LeftComodule {
                basis_names: vec!["1".into()],
                coaction: Coaction::Graded {
                    group: group.clone(),
                    degrees: vec![group.zero()],
                },
            },
        }
    }

    /// The one-dimensional comodule `v ↦ g⊗v` of a grouplike `g`.
    pub fn grouplike(hopf: &HopfData, g: &[Scalar]) -> Result<LeftComodule> {
        if g.len() != hopf.dim() {
            return input(format!(
                "grouplike needs {} coordinates, got {}",
                hopf.dim(),
                g.len()
            ));
        }
        LeftComodule::new(
            vec!["v".into()],
            Coaction::Finite {
                hopf: hopf.clone(),
                matrix: Mat::column_vector(hopf.field(), g.to_vec()),
            },
        )
    }

    /// A graded space with the given degrees.
    pub fn graded(
        group: &GradingGroup,
        basis_names: Vec<String>,
        degrees: Vec<Degree>,
    ) -> Result<LeftComodule> {
        LeftComodule::new(
            basis_names,
            Coaction::Graded {
                group: group.clone(),
                degrees,
            },
        )
    }

    /// The one-dimensional graded space in degree `degree`.
    pub fn character(group: &GradingGroup, degree: &[i64]) -> Result<LeftComodule> {
        LeftComodule::graded(group, vec!["v".into()], vec![degree.to_vec()])
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(hopf: &HopfData) -> LeftComodule {
        LeftComodule {
            basis_names: hopf.basis_names().to_vec(),
            coaction: Coaction::Finite {
                hopf: hopf.clone(),
                matrix: hopf.comult().clone(),
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    /// The Hopf algebra and the `dim_H·dim x dim` coaction matrix, with a
    /// finite grading materialized over `field`.
    pub fn finite_parts(&self, field: Field) -> Result<(HopfData, Mat)> {
        match self.coaction.materialize(field, Side::Left)? {
            Coaction::Finite { hopf, matrix } => Ok((hopf, matrix)),
            Coaction::Graded { .. } => unreachable!("materialized coaction is finite"),
        }
    }

    pub fn materialized(&self, field: Field) -> Result<LeftComodule> {
        let (hopf, matrix) = self.finite_parts(field)?;
        Ok(LeftComodule {
            basis_names: self.basis_names.clone(),
            coaction: Coaction::Finite { hopf, matrix },
        })
    }

    pub fn direct_sum(&self, other: &LeftComodule) -> Result<LeftComodule> {
        let names = self
            .basis_names
            .iter()
            .chain(&other.basis_names)
            .cloned()
            .collect();
        match (&self.coaction, &other.coaction) {
            (
                Coaction::Graded { group, degrees: a },
                Coaction::Graded {
                    group: g2,
                    degrees: b,
                },
            ) if group == g2 => {
                let degrees = a.iter().chain(b).cloned().collect();
                LeftComodule::graded(group, names, degrees)
            }
            (
                Coaction::Finite { hopf, matrix: a },
                Coaction::Finite {
                    hopf: h2,
                    matrix: b,
                },
            ) if hopf == h2 => {
                let (n, m, h) = (self.dim(), other.dim(), hopf.dim());
                let f = hopf.field();
                let mut matrix = Mat::zeros(f, h * (n + m), n + m);
                for (r, c, x) in a.triples() {
                    matrix.set((r / n) * (n + m) + r % n, c, x);
                }
                for (r, c, x) in b.triples() {
                    matrix.set((r / m) * (n + m) + n + r % m, n + c, x);
                }
                LeftComodule::new(
                    names,
                    Coaction::Finite {
                        hopf: hopf.clone(),
                        matrix,
                    },
                )
            }
            _ => input("direct sum of comodules over different Hopf algebras"),
        }
    }

    /// `V⊗W` with `v⊗w ↦ v₋₁w₋₁⊗v₀⊗w₀`.
    pub fn tensor(&self, other: &LeftComodule) -> Result<LeftComodule> {
        let mut names = Vec::with_capacity(self.dim() * other.dim());
        for x in &self.basis_names {
            for y in &other.basis_names {
                names.push(format!("{x}⊗{y}"));
            }
        }
        match (&self.coaction, &other.coaction) {
            (
                Coaction::Graded { group, degrees: a },
                Coaction::Graded {
                    group: g2,
                    degrees: b,
                },
            ) if group == g2 => {
                let degrees = a
                    .iter()
                    .flat_map(|x| b.iter().map(move |y| group.add(x, y)))
                    .collect();
                LeftComodule::graded(group, names, degrees)
            }
            (
                Coaction::Finite { hopf, matrix: a },
                Coaction::Finite {
                    hopf: h2,
                    matrix: b,
                },
            ) if hopf == h2 => {
                let (n, m, h) = (self.dim(), other.dim(), hopf.dim());
                let split = tensor::permute_rows(&a.kron(b), &[h, n, h, m], &[0, 2, 1, 3]);
                let matrix = kron_mul(hopf.mult(), &Mat::identity(hopf.field(), n * m), &split);
                LeftComodule::new(
                    names,
                    Coaction::Finite {
                        hopf: hopf.clone(),
                        matrix,
                    },
                )
            }
            _ => input("tensor product of comodules over different Hopf algebras"),
        }
    }
}
