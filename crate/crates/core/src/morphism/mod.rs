//! Morphisms of extensions: the generalized canonical map and its
//! companions, module functors along a morphism, and k-topologies.

mod compose;
mod functors;
mod kappa;
mod topology;

pub use compose::{compose_morphisms, composition_factorization, Factorization};
pub use functors::{
    adjunction_counit, adjunction_unit, check_adjunction, check_coinvariant_lemma, pullback_module,
    pushforward_module, Pullback, Pushforward,
};
pub use kappa::{
    distributive_law, generalized_canonical_map, induced_algebra_on_pullback, is_cartesian,
    kappa_tilde, DistributiveLaw, InducedAlgebra, KappaMap,
};
pub use topology::{is_k_continuous, KContinuity, KTopology, LiftWitness};

use crate::comodule::{ComoduleAlgebra, Extension};
use crate::error::{input, Result};
use crate::hopf::{check_hopf_map, HopfData, HopfMap};
use crate::linear::{solve, Mat};
use crate::report::{compare_maps, Report, Verdict};

/// A morphism `(H, A ← B) → (H′, A′ ← B′)`: a Hopf map `χ: H → H′` and an
/// algebra map `α: A → A′` with `(α⊗χ)∘ρ_A = ρ_{A′}∘α` and `α(B) ⊆ B′`.
///
/// `beta` is the restriction `B → B′` in the bases of the two base algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMorphism {
    source: Extension,
    target: Extension,
    chi: HopfMap,
    alpha: Mat,
    beta: Mat,
}

impl ExtensionMorphism {
    /// Validated constructor: every condition of [`ExtensionMorphism::check`] must pass.
    pub fn new(
        source: Extension,
        target: Extension,
        chi: HopfMap,
        alpha: Mat,
    ) -> Result<ExtensionMorphism> {
        let m = ExtensionMorphism::unchecked(source, target, chi, alpha)?;
        let report = m.check()?;
        if let Some(v) = report.failures().next() {
            return input(format!(
                "not a morphism of extensions: {} fails at {}",
                v.name,
                v.witness.as_deref().unwrap_or("?")
            ));
        }
        Ok(m)
    }

    /// Checks shapes, the Hopf algebras `χ` connects and `α(B) ⊆ B′`, but
    /// not the algebra and comodule identities.
    pub fn unchecked(
        source: Extension,
        target: Extension,
        chi: HopfMap,
        alpha: Mat,
    ) -> Result<ExtensionMorphism> {
        let (h, _) = source.comodule_algebra().finite_parts()?;
        let (hp, _) = target.comodule_algebra().finite_parts()?;
        if !chi.source().same_structure(&h) || !chi.target().same_structure(&hp) {
            return input("χ does not connect the Hopf algebras of the two extensions");
        }
        let (da, dap) = (source.algebra().dim(), target.algebra().dim());
        if alpha.shape() != (dap, da) {
            return input(format!(
                "α must be {dap}x{da}, got {}x{}",
                alpha.rows(),
                alpha.cols()
            ));
        }
        if alpha.field() != source.algebra().field() || target.algebra().field() != alpha.field() {
            return input("morphism data over mixed fields");
        }
        let Some(beta) = solve(target.inclusion(), &alpha.mul(source.inclusion()))? else {
            return input("α does not map the base B into the base B′");
        };
        Ok(ExtensionMorphism {
            source,
            target,
            chi,
            alpha,
            beta,
        })
    }

    /// The identity morphism of an extension.
    pub fn identity(e: &Extension) -> Result<ExtensionMorphism> {
        let (h, _) = e.comodule_algebra().finite_parts()?;
        ExtensionMorphism::new(
            e.clone(),
            e.clone(),
            HopfMap::identity(&h),
            e.algebra().identity(),
        )
    }

    /// `(H, H ← 𝕜) → (H′, H′ ← 𝕜)` along a Hopf map, with `α = χ`.
    pub fn from_hopf_map(chi: &HopfMap) -> Result<ExtensionMorphism> {
        let source = Extension::over_ground(ComoduleAlgebra::regular(chi.source()))?;
        let target = Extension::over_ground(ComoduleAlgebra::regular(chi.target()))?;
        ExtensionMorphism::new(source, target, chi.clone(), chi.matrix().clone())
    }

    /// `(𝕜, 𝕜 ← 𝕜) → (H, A ← B)` along the units; Cartesian iff `B` is all
    /// of the coinvariants.
    pub fn from_ground(e: &Extension) -> Result<ExtensionMorphism> {
        let (h, _) = e.comodule_algebra().finite_parts()?;
        let f = e.algebra().field();
        let ground = Extension::trivial(crate::hopf::AlgebraData::ground(f))?;
        ExtensionMorphism::new(
            ground,
            e.clone(),
            HopfMap::unit(&h),
            e.algebra().unit().clone(),
        )
    }

    /// `(H, A ← B) → (H, A⊗H ← A)` with `α = ρ_A`, where `H` coacts on the
    /// right factor only; Cartesian iff `B ⊆ A` is Hopf–Galois.
    pub fn galois_test(e: &Extension) -> Result<ExtensionMorphism> {
        let (h, rho) = e.comodule_algebra().finite_parts()?;
        let a = e.algebra();
        let total = a.tensor(h.algebra());
        let coaction = a.identity().kron(h.comult());
        let ca = ComoduleAlgebra::finite(total, h.clone(), coaction)?;
        let incl = a.identity().kron(h.unit());
        let target = Extension::new(ca, incl, Some(a.basis_names().to_vec()))?;
        ExtensionMorphism::new(e.clone(), target, HopfMap::identity(&h), rho)
    }

    /// `(H, A ← B) → (𝕜, A ← A)` with `χ = ε` and `α = id`; its generalized
    /// canonical map is the canonical map of the extension.
    pub fn forget_coaction(e: &Extension) -> Result<ExtensionMorphism> {
        let (h, _) = e.comodule_algebra().finite_parts()?;
        let target = Extension::trivial(e.algebra().clone())?;
        ExtensionMorphism::new(
            e.clone(),
            target,
            HopfMap::counit(&h),
            e.algebra().identity(),
        )
    }

    pub fn source(&self) -> &Extension {
        &self.source
    }

    pub fn target(&self) -> &Extension {
        &self.target
    }

    pub fn chi(&self) -> &HopfMap {
        &self.chi
    }

    pub fn alpha(&self) -> &Mat {
        &self.alpha
    }

    pub fn beta(&self) -> &Mat {
        &self.beta
    }

    /// Source Hopf algebra and coaction matrix.
    pub(crate) fn source_parts(&self) -> Result<(HopfData, Mat)> {
        self.source.comodule_algebra().finite_parts()
    }

    /// Target Hopf algebra and coaction matrix.
    pub(crate) fn target_parts(&self) -> Result<(HopfData, Mat)> {
        self.target.comodule_algebra().finite_parts()
    }

    /// `χ` a Hopf map, `α` an algebra map intertwining the coactions, and
    /// the base square `ι′∘β = α∘ι`.
    pub fn check(&self) -> Result<Report> {
        let mut report = Report::new();
        report.extend("chi", check_hopf_map(&self.chi));
        let a = self.source.algebra();
        report.extend(
            "alpha",
            a.check_algebra_map(&self.alpha, self.target.algebra()),
        );
        let (_, rho) = self.source_parts()?;
        let (_, rho_t) = self.target_parts()?;
        report.push(compare_maps(
            "alpha_colinear",
            &self.alpha.kron(self.chi.matrix()).mul(&rho),
            &rho_t.mul(&self.alpha),
            &[a.basis_names()],
        ));
        report.push(compare_maps(
            "base_square",
            &self.target.inclusion().mul(&self.beta),
            &self.alpha.mul(self.source.inclusion()),
            &[self.source.base().basis_names()],
        ));
        report.dim("dim_A", a.dim());
        report.dim("dim_A′", self.target.algebra().dim());
        report.dim("dim_B", self.source.base().dim());
        report.dim("dim_B′", self.target.base().dim());
        Ok(report)
    }

    /// Verdict that the morphism data satisfies every condition.
    pub fn verdict(&self) -> Result<Verdict> {
        let report = self.check()?;
        let verdict = match report.failures().next() {
            None => Verdict::pass("morphism"),
            Some(v) => Verdict::fail(
                "morphism",
                format!("{}: {}", v.name, v.witness.as_deref().unwrap_or("?")),
            ),
        };
        Ok(verdict)
    }
}

#[cfg(test)]
mod tests;
