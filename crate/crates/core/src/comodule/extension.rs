use crate::error::{input, Result};
use crate::hopf::{trivial_hopf, AlgebraData};
use crate::linear::{find_invertible_in_span, is_bijective, kernel, Mat, SearchOutcome, Subspace};
use crate::report::{Report, Verdict};

use super::algebra::ComoduleAlgebra;
use super::coaction::Coaction;
use super::tensor::BalancedTensor;
use crate::linear::sparse::mul_kron;

/// Default bound on the number of grid points tried by intertwiner searches.
pub const DEFAULT_SEARCH_BOUND: usize = 4096;

/// An `H`-extension `B ⊆ A` with `B` inside the coinvariants.
///
/// `inclusion` is the `dim_A x dim_B` matrix of `B → A`; `base` carries the
/// induced multiplication in the basis given by its columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    comodule_algebra: ComoduleAlgebra,
    base: AlgebraData,
    inclusion: Mat,
}

impl Extension {
    /// `inclusion` must be injective onto a unital subalgebra of coinvariants.
    pub fn new(
        comodule_algebra: ComoduleAlgebra,
        inclusion: Mat,
        base_names: Option<Vec<String>>,
    ) -> Result<Extension> {
        let (base, inclusion) = comodule_algebra
            .algebra()
            .subalgebra_from_embedding(&inclusion, base_names)?;
        let coinv = comodule_algebra.coinvariants()?;
        if !coinv.contains_columns(&inclusion) {
            return input("base algebra is not contained in the coinvariants");
        }
        Ok(Extension {
            comodule_algebra,
            base,
            inclusion,
        })
    }

    /// `B` spanned by a subspace of `A`, in its echelon basis.
    pub fn from_subspace(ca: ComoduleAlgebra, space: &Subspace) -> Result<Extension> {
        Extension::new(ca, space.basis_matrix(), None)
    }

    /// `B = A^{coH}`.
    pub fn over_coinvariants(ca: ComoduleAlgebra) -> Result<Extension> {
        let coinv = ca.coinvariants()?;
        Extension::from_subspace(ca, &coinv)
    }

    /// `B = 𝕜·1`.
    pub fn over_ground(ca: ComoduleAlgebra) -> Result<Extension> {
        let unit = ca.algebra().unit().clone();
        Extension::new(ca, unit, Some(vec!["1".into()]))
    }

    /// `(𝕜, A ← A)`, the identity cover of `A`.
    pub fn trivial(algebra: AlgebraData) -> Result<Extension> {
        let hopf = trivial_hopf(algebra.field());
        let names = algebra.basis_names().to_vec();
        let id = algebra.identity();
        Extension::new(ComoduleAlgebra::trivial(algebra, &hopf), id, Some(names))
    }

    /// True for `(𝕜, A ← B)` with `B → A` bijective.
    pub fn is_isomorphism(&self) -> bool {
        self.comodule_algebra
            .coaction()
            .hopf()
            .is_some_and(|h| h.dim() == 1)
            && self.inclusion.is_square()
            && is_bijective(&self.inclusion)
    }

    pub fn comodule_algebra(&self) -> &ComoduleAlgebra {
        &self.comodule_algebra
    }

    pub fn algebra(&self) -> &AlgebraData {
        self.comodule_algebra.algebra()
    }

    pub fn base(&self) -> &AlgebraData {
        &self.base
    }

    pub fn inclusion(&self) -> &Mat {
        &self.inclusion
    }

    pub fn invariant_subalgebra(&self) -> Subspace {
        Subspace::span_columns(&self.inclusion)
    }

    /// Right action of `B` on `A`: `a⊗b ↦ a·b`.
    pub fn right_base_action(&self) -> Mat {
        let a = self.algebra();
        mul_kron(a.mult(), &a.identity(), &self.inclusion)
    }

    /// Left action of `B` on `A`: `b⊗a ↦ b·a`.
    pub fn left_base_action(&self) -> Mat {
        let a = self.algebra();
        mul_kron(a.mult(), &self.inclusion, &a.identity())
    }

    /// `A⊗_B A`.
    pub fn balanced_square(&self) -> Result<BalancedTensor> {
        BalancedTensor::new(&self.right_base_action(), &self.left_base_action())
    }
}

/// The canonical map on its balanced domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMap {
    pub domain: BalancedTensor,
    /// `dim_A·dim_H x dim(A⊗_B A)`.
    pub matrix: Mat,
}

/// `can: A⊗_B A → A⊗H`, `a⊗a′ ↦ a·a′₀⊗a′₁`.
pub fn canonical_map(e: &Extension) -> Result<CanonicalMap> {
    let (hopf, rho) = e.comodule_algebra.finite_parts()?;
    let a = e.algebra();
    let lifted = a
        .mult()
        .kron(&hopf.identity())
        .mul(&a.identity().kron(&rho));
    let domain = e.balanced_square()?;
    let matrix = domain.descend(&lifted, "canonical map")?;
    Ok(CanonicalMap { domain, matrix })
}

/// True iff the coinvariants equal `B` and the canonical map is bijective.
pub fn is_hopf_galois(e: &Extension) -> Result<Report> {
    let mut report = Report::new();
    let coinv = e.comodule_algebra.coinvariants()?;
    let b = e.invariant_subalgebra();
    report.dim("dim_A", e.algebra().dim());
    report.dim("dim_B", b.dim());
    report.dim("dim_coinvariants", coinv.dim());
    report.push(Verdict::from_bool(
        "coinvariants_equal_base",
        coinv == b,
        format!(
            "coinvariants have dimension {}, base has {}",
            coinv.dim(),
            b.dim()
        ),
    ));
    if let Coaction::Graded { group, .. } = e.comodule_algebra.coaction() {
        if !group.is_finite() {
            report.push(Verdict::fail(
                "canonical_map_bijective",
                "grading group is infinite, so A⊗H is infinite-dimensional while A⊗_B A is finite",
            ));
            return Ok(report);
        }
    }
    let can = canonical_map(e)?;
    report.dim("dim_domain", can.domain.dim());
    report.dim("dim_codomain", can.matrix.rows());
    report.push(Verdict::from_bool(
        "canonical_map_bijective",
        is_bijective(&can.matrix),
        format!(
            "canonical map {}x{} has rank {}",
            can.matrix.rows(),
            can.matrix.cols(),
            can.matrix.rank()
        ),
    ));
    Ok(report)
}

/// Right `H`-comodule maps `H → A`, as a basis of matrices.
pub fn comodule_maps_from_hopf(e: &Extension) -> Result<Vec<Mat>> {
    let (hopf, rho) = e.comodule_algebra.finite_parts()?;
    let f = e.algebra().field();
    let (n, h) = (e.algebra().dim(), hopf.dim());
    // Unknown γ (n x h); constraint ρ∘γ - (γ⊗id)∘Δ = 0, flattened.
    let mut columns = Vec::with_capacity(n * h);
    for r in 0..n {
        for c in 0..h {
            let mut g = Mat::zeros(f, n, h);
            g.set(r, c, f.one());
            let lhs = rho
                .mul(&g)
                .sub(&g.kron(&hopf.identity()).mul(hopf.comult()));
            columns.push(lhs.entries().to_vec());
        }
    }
    let system = Mat::from_columns(f, n * h * h, &columns);
    let sols = kernel(&system)?;
    Ok(sols
        .basis_vectors()
        .into_iter()
        .map(|v| Mat::from_vec(f, n, h, v).expect("reshaped solution"))
        .collect())
}

/// Normal basis property: a comodule isomorphism `B⊗H → A` of the form
/// `b⊗h ↦ b·γ(h)` for a comodule map `γ: H → A`. Searched over the span of
/// all such `γ`; an exhausted bound gives an undecided verdict.
pub fn has_normal_basis(e: &Extension, bound: usize) -> Result<Verdict> {
    const NAME: &str = "normal_basis";
    if let Coaction::Graded { group, .. } = e.comodule_algebra.coaction() {
        if !group.is_finite() {
            return Ok(Verdict::fail(NAME, "grading group is infinite"));
        }
    }
    let (hopf, _) = e.comodule_algebra.finite_parts()?;
    let (da, db, dh) = (e.algebra().dim(), e.base.dim(), hopf.dim());
    if db * dh != da {
        return Ok(Verdict::fail(
            NAME,
            format!("dim B·dim H = {} differs from dim A = {da}", db * dh),
        ));
    }
    let gammas = comodule_maps_from_hopf(e)?;
    let a = e.algebra();
    let candidates: Vec<Mat> = gammas
        .iter()
        .map(|g| mul_kron(a.mult(), &e.inclusion, g))
        .collect();
    Ok(match find_invertible_in_span(&candidates, bound) {
        SearchOutcome::Found(m) => {
            Verdict::pass(NAME).with_note(format!("isomorphism of rank {}", m.rank()))
        }
        SearchOutcome::NoneExists => Verdict::fail(
            NAME,
            format!(
                "no invertible map in the {}-dimensional space of intertwiners",
                candidates.len()
            ),
        ),
        SearchOutcome::Undecided => Verdict::undecided(
            NAME,
            format!(
                "search bound {bound} exhausted over {} intertwiners",
                candidates.len()
            ),
        ),
    })
}
