use crate::error::{input, Result};
use crate::linear::{tensor, Field, Mat};
use crate::report::{compare_maps, Report, Verdict};

use super::algebra::AlgebraData;
use crate::linear::sparse::mul_kron;

/// A finite-dimensional Hopf algebra by structure constants.
///
/// `comult` is `dim² x dim`, `counit` is `1 x dim`, `antipode` is `dim x dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    algebra: AlgebraData,
    comult: Mat,
    counit: Mat,
    antipode: Mat,
    antipode_inv: Option<Mat>,
}

impl HopfData {
    /// Shape-validated constructor; axioms are verified by [`check_hopf`].
    pub fn new(
        algebra: AlgebraData,
        comult: Mat,
        counit: Mat,
        antipode: Mat,
        antipode_inv: Option<Mat>,
    ) -> Result<HopfData> {
        let n = algebra.dim();
        let f = algebra.field();
        if comult.shape() != (n * n, n) {
            return input(format!(
                "comultiplication must be {}x{n}, got {}x{}",
                n * n,
                comult.rows(),
                comult.cols()
            ));
        }
        if counit.shape() != (1, n) {
            return input(format!(
                "counit must be 1x{n}, got {}x{}",
                counit.rows(),
                counit.cols()
            ));
        }
        if antipode.shape() != (n, n) {
            return input(format!(
                "antipode must be {n}x{n}, got {}x{}",
                antipode.rows(),
                antipode.cols()
            ));
        }
        if let Some(s) = &antipode_inv {
            if s.shape() != (n, n) {
                return input(format!(
                    "antipode inverse must be {n}x{n}, got {}x{}",
                    s.rows(),
                    s.cols()
                ));
            }
        }
        let same_field = [&comult, &counit, &antipode]
            .into_iter()
            .chain(antipode_inv.as_ref())
            .all(|m| m.field() == f);
        if !same_field {
            return input("Hopf data over mixed fields");
        }
        Ok(HopfData {
            algebra,
            comult,
            counit,
            antipode,
            antipode_inv,
        })
    }

    /// Fills in the antipode inverse when the antipode is invertible.
    pub fn with_antipode_inverse(mut self) -> HopfData {
        if self.antipode_inv.is_none() {
            self.antipode_inv = self.antipode.inverse();
        }
        self
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
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

    pub fn mult(&self) -> &Mat {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &Mat {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &Mat {
        &self.comult
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Option<&Mat> {
        self.antipode_inv.as_ref()
    }

    pub fn identity(&self) -> Mat {
        self.algebra.identity()
    }

    /// Equal structure constants, ignoring basis names and the stored `S⁻¹`.
    pub fn same_structure(&self, other: &HopfData) -> bool {
        self.mult() == other.mult()
            && self.unit() == other.unit()
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// `flip ∘ Δ = Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        tensor::permute_rows(&self.comult, &[n, n], &[1, 0]) == self.comult
    }

    /// The dual Hopf algebra on the dual basis.
    pub fn dual(&self) -> HopfData {
        let names = self.basis_names().iter().map(|b| format!("{b}*")).collect();
        let algebra = AlgebraData::new(
            self.field(),
            names,
            self.comult.transpose(),
            self.counit.transpose(),
        )
        .expect("dual shapes are consistent");
        HopfData {
            algebra,
            comult: self.mult().transpose(),
            counit: self.unit().transpose(),
            antipode: self.antipode.transpose(),
            antipode_inv: self.antipode_inv.as_ref().map(Mat::transpose),
        }
    }

    /// Replaces structure constants, keeping names. Used to build corrupted variants.
    pub fn with_parts(
        &self,
        mult: Mat,
        unit: Mat,
        comult: Mat,
        counit: Mat,
        antipode: Mat,
    ) -> Result<HopfData> {
        let algebra = AlgebraData::new(self.field(), self.basis_names().to_vec(), mult, unit)?;
        HopfData::new(algebra, comult, counit, antipode, None)
    }
}

/// Verifies every Hopf algebra axiom. Failures carry the first violating
/// basis tuple as witness.
pub fn check_hopf(h: &HopfData) -> Report {
    let n = h.dim();
    let id = h.identity();
    let names = h.basis_names();
    let (m, u, d, e, s) = (h.mult(), h.unit(), h.comult(), h.counit(), h.antipode());
    let mut report = h.algebra().check();

    report.push(compare_maps(
        "coassociativity",
        &d.kron(&id).mul(d),
        &id.kron(d).mul(d),
        &[names],
    ));
    report.push(compare_maps(
        "counit_left",
        &e.kron(&id).mul(d),
        &id,
        &[names],
    ));
    report.push(compare_maps(
        "counit_right",
        &id.kron(e).mul(d),
        &id,
        &[names],
    ));

    let lhs = d.mul(m);
    let rhs = tensor::permute_cols(&m.kron(m), &[n, n, n, n], &[0, 2, 1, 3]).mul(&d.kron(d));
    report.push(compare_maps(
        "comult_multiplicative",
        &lhs,
        &rhs,
        &[names, names],
    ));
    report.push(Verdict::from_bool(
        "comult_unital",
        d.mul(u) == u.kron(u),
        "Δ(1) differs from 1⊗1",
    ));
    report.push(compare_maps(
        "counit_multiplicative",
        &e.mul(m),
        &e.kron(e),
        &[names, names],
    ));
    report.push(Verdict::from_bool(
        "counit_unital",
        e.mul(u).get(0, 0).is_one(),
        "ε(1) differs from 1",
    ));

    let ue = u.mul(e);
    report.push(compare_maps(
        "antipode_left",
        &mul_kron(m, s, &id).mul(d),
        &ue,
        &[names],
    ));
    report.push(compare_maps(
        "antipode_right",
        &mul_kron(m, &id, s).mul(d),
        &ue,
        &[names],
    ));
    if let Some(si) = h.antipode_inv() {
        report.push(compare_maps("antipode_inverse", &si.mul(s), &id, &[names]));
    }
    report.dim("dim", n);
    report
}

/// `S⁻¹` when the antipode is invertible.
pub fn antipode_inverse(h: &HopfData) -> Option<Mat> {
    h.antipode().inverse()
}

/// The flipped antipode identities `m∘(S⁻¹⊗id)∘flip∘Δ = uε = m∘(id⊗S⁻¹)∘flip∘Δ`.
pub fn check_antipode_inverse(h: &HopfData, si: &Mat) -> Report {
    let n = h.dim();
    let names = h.basis_names();
    let id = h.identity();
    let flip_d = tensor::permute_rows(h.comult(), &[n, n], &[1, 0]);
    let ue = h.unit().mul(h.counit());
    let mut report = Report::new();
    report.push(compare_maps(
        "flipped_antipode_left",
        &mul_kron(h.mult(), si, &id).mul(&flip_d),
        &ue,
        &[names],
    ));
    report.push(compare_maps(
        "flipped_antipode_right",
        &mul_kron(h.mult(), &id, si).mul(&flip_d),
        &ue,
        &[names],
    ));
    report
}
