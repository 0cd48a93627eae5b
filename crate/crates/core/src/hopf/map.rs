use crate::error::{input, Result};
use crate::linear::Mat;
use crate::report::{compare_maps, Report, Verdict};

use super::data::HopfData;
use super::group::FiniteGroup;
use super::zoo::{build_group_algebra, trivial_hopf};

/// A linear map between Hopf algebras, validated by [`check_hopf_map`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMap {
    source: HopfData,
    target: HopfData,
    matrix: Mat,
}

impl HopfMap {
    pub fn new(source: HopfData, target: HopfData, matrix: Mat) -> Result<HopfMap> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return input(format!(
                "Hopf map must be {}x{}, got {}x{}",
                target.dim(),
                source.dim(),
                matrix.rows(),
                matrix.cols()
            ));
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return input("Hopf map over mixed fields");
        }
        Ok(HopfMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(h: &HopfData) -> HopfMap {
        HopfMap {
            source: h.clone(),
            target: h.clone(),
            matrix: h.identity(),
        }
    }

    /// The counit viewed as a Hopf map onto the ground field.
    pub fn counit(h: &HopfData) -> HopfMap {
        HopfMap {
            source: h.clone(),
            target: trivial_hopf(h.field()),
            matrix: h.counit().clone(),
        }
    }

    /// The unit `𝕜 → H` as a Hopf map.
    pub fn unit(h: &HopfData) -> HopfMap {
        HopfMap {
            source: trivial_hopf(h.field()),
            target: h.clone(),
            matrix: h.unit().clone(),
        }
    }

    /// `𝕜G → 𝕜G′` induced by a group homomorphism given by images of elements.
    pub fn from_group_homomorphism(
        field: crate::linear::Field,
        source: &FiniteGroup,
        target: &FiniteGroup,
        images: &[usize],
    ) -> Result<HopfMap> {
        if !source.is_homomorphism(target, images) {
            return input("element images do not define a group homomorphism");
        }
        let matrix = Mat::from_fn(field, target.order(), source.order(), |r, c| {
            if images[c] == r {
                field.one()
            } else {
                field.zero()
            }
        });
        HopfMap::new(
            build_group_algebra(field, source),
            build_group_algebra(field, target),
            matrix,
        )
    }

    pub fn source(&self) -> &HopfData {
        &self.source
    }

    pub fn target(&self) -> &HopfData {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn is_bijective(&self) -> bool {
        crate::linear::is_bijective(&self.matrix)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HopfMap) -> Result<HopfMap> {
        if !self.target.same_structure(&other.source) {
            return input("Hopf maps are not composable");
        }
        HopfMap::new(
            self.source.clone(),
            other.target.clone(),
            other.matrix.mul(&self.matrix),
        )
    }
}

/// Multiplicativity, unitality, comultiplicativity, counitality and
/// compatibility with the antipodes.
pub fn check_hopf_map(f: &HopfMap) -> Report {
    let (h, k, m) = (&f.source, &f.target, &f.matrix);
    let names = h.basis_names();
    let mut report = h.algebra().check_algebra_map(m, k.algebra());
    report.push(compare_maps(
        "comultiplicative",
        &k.comult().mul(m),
        &m.kron(m).mul(h.comult()),
        &[names],
    ));
    report.push(Verdict::from_bool(
        "counital",
        k.counit().mul(m) == *h.counit(),
        "ε′∘f differs from ε",
    ));
    report.push(compare_maps(
        "antipode_compatible",
        &k.antipode().mul(m),
        &m.mul(h.antipode()),
        &[names],
    ));
    report
}
