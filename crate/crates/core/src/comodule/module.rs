use crate::error::{input, Error, Result};
use crate::linear::{tensor, Mat};
use crate::report::{compare_maps, Report, Verdict};

use super::algebra::ComoduleAlgebra;
use super::coaction::{Coaction, Side};
use crate::linear::sparse::{mul_in_tensor_algebra, mul_kron};

/// A right `A`-module with a right `H`-coaction satisfying
/// `(ma)₀⊗(ma)₁ = m₀a₀⊗m₁a₁`.
///
/// `action` is `dim x dim·dim_A`; the coaction is over the same Hopf
/// algebra (or grading group) as the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeHopfModule {
    base: ComoduleAlgebra,
    basis_names: Vec<String>,
    action: Mat,
    coaction: Coaction,
}

impl RelativeHopfModule {
    pub fn new(
        base: ComoduleAlgebra,
        basis_names: Vec<String>,
        action: Mat,
        coaction: Coaction,
    ) -> Result<RelativeHopfModule> {
        let n = basis_names.len();
        if action.shape() != (n, n * base.dim()) {
            return input(format!(
                "module action must be {n}x{}, got {}x{}",
                n * base.dim(),
                action.rows(),
                action.cols()
            ));
        }
        if action.field() != base.field() {
            return input("module action over a different field");
        }
        let coaction = coaction.validated(n, base.field())?;
        if !coaction.same_structure(base.coaction()) {
            return input("module and algebra coactions use different Hopf algebras");
        }
        Ok(RelativeHopfModule {
            base,
            basis_names,
            action,
            coaction,
        })
    }

    /// `A` as a module over itself.
    pub fn regular(base: &ComoduleAlgebra) -> RelativeHopfModule {
        RelativeHopfModule {
            base: base.clone(),
            basis_names: base.basis_names().to_vec(),
            action: base.algebra().mult().clone(),
            coaction: base.coaction().clone(),
        }
    }

    /// `H⊗A` with `(h⊗a)a′ = h⊗aa′` and coaction `h⊗a ↦ h₁⊗a₀⊗h₂a₁`.
    pub fn hopf_tensor(base: &ComoduleAlgebra) -> Result<RelativeHopfModule> {
        let (hopf, rho) = base
            .finite_parts()
            .map_err(|e| Error::Unsupported(format!("H⊗A needs a finite Hopf algebra: {e}")))?;
        let f = base.field();
        let (h, a) = (hopf.dim(), base.dim());
        let action = hopf.identity().kron(base.algebra().mult());
        let split = hopf.comult().kron(&rho);
        let combine = Mat::identity(f, h * a).kron(hopf.mult());
        let coaction = combine.mul(&tensor::permute_rows(&split, &[h, h, a, h], &[0, 2, 1, 3]));
        let mut names = Vec::with_capacity(h * a);
        for x in hopf.basis_names() {
            for y in base.basis_names() {
                names.push(format!("{x}⊗{y}"));
            }
        }
        RelativeHopfModule::new(
            base.materialized()?,
            names,
            action,
            Coaction::Finite {
                hopf,
                matrix: coaction,
            },
        )
    }

    pub fn base(&self) -> &ComoduleAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn action(&self) -> &Mat {
        &self.action
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    /// Replaces the action; used for corrupted variants in tests.
    pub fn with_action(&self, action: Mat) -> Result<RelativeHopfModule> {
        RelativeHopfModule::new(
            self.base.clone(),
            self.basis_names.clone(),
            action,
            self.coaction.clone(),
        )
    }

    /// The same module with graded data replaced by group-algebra coactions.
    pub fn materialized(&self) -> Result<RelativeHopfModule> {
        let f = self.base.field();
        RelativeHopfModule::new(
            self.base.materialized()?,
            self.basis_names.clone(),
            self.action.clone(),
            self.coaction.materialize(f, Side::Right)?,
        )
    }
}

/// Module axioms, comodule axioms, and the compatibility identity, each
/// with a witness.
pub fn check_relative_hopf_module(m: &RelativeHopfModule) -> Report {
    let f = m.base.field();
    let a = m.base.algebra();
    let names = m.basis_names();
    let anames = a.basis_names();
    let (d, da) = (m.dim(), a.dim());
    let id_m = Mat::identity(f, d);
    let act = &m.action;
    let mut report = Report::new();
    report.push(compare_maps(
        "action_associative",
        &mul_kron(act, act, &a.identity()),
        &mul_kron(act, &id_m, a.mult()),
        &[names, anames, anames],
    ));
    report.push(compare_maps(
        "action_unital",
        &mul_kron(act, &id_m, a.unit()),
        &id_m,
        &[names],
    ));
    report.extend("", m.coaction.check(names, Side::Right));
    match (&m.coaction, m.base.coaction()) {
        (Coaction::Finite { hopf, matrix: rm }, Coaction::Finite { matrix: ra, .. }) => {
            let lhs = rm.mul(act);
            let rhs = mul_in_tensor_algebra(act, hopf.mult(), rm, ra);
            report.push(compare_maps("compatibility", &lhs, &rhs, &[names, anames]));
        }
        (Coaction::Graded { group, degrees: dm }, Coaction::Graded { degrees: dalg, .. }) => {
            let mut witness = None;
            'outer: for i in 0..d {
                for j in 0..da {
                    let want = group.add(&dm[i], &dalg[j]);
                    let col = act.column(i * da + j);
                    if col
                        .iter()
                        .enumerate()
                        .any(|(k, x)| !x.is_zero() && dm[k] != want)
                    {
                        witness = Some(format!("basis ({}, {})", names[i], anames[j]));
                        break 'outer;
                    }
                }
            }
            report.push(match witness {
                None => Verdict::pass("compatibility"),
                Some(w) => Verdict::fail("compatibility", w),
            });
        }
        _ => report.push(Verdict::fail(
            "compatibility",
            "module and algebra coactions use different Hopf algebras",
        )),
    }
    report.dim("dim_M", d);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::fields::qsqrt2;
    use crate::hopf::{build_group_algebra, sweedler_h4, FiniteGroup};
    use crate::linear::Field;

    #[test]
    fn regular_and_hopf_tensor_modules() {
        let q = Field::Rational;
        for ca in [
            qsqrt2(),
            ComoduleAlgebra::regular(&sweedler_h4(q).unwrap()),
            ComoduleAlgebra::regular(&build_group_algebra(q, &FiniteGroup::symmetric(3).unwrap())),
        ] {
            assert!(check_relative_hopf_module(&RelativeHopfModule::regular(&ca)).all_pass());
            let m = RelativeHopfModule::hopf_tensor(&ca).unwrap();
            let r = check_relative_hopf_module(&m);
            assert!(r.all_pass(), "{r:?}");
        }
    }

    #[test]
    fn corrupted_action_has_witness() {
        let q = Field::Rational;
        let m = RelativeHopfModule::regular(&qsqrt2());
        let mut act = m.action().clone();
        act.set(1, 3, q.from_i64(5));
        let bad = m.with_action(act).unwrap();
        let r = check_relative_hopf_module(&bad);
        assert!(!r.all_pass());
        assert!(r
            .failures()
            .all(|v| v.witness.as_ref().unwrap().starts_with("basis (")));
    }
}
