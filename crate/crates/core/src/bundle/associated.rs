use crate::comodule::{cotensor, BalancedTensor, Coaction, Extension, RelativeHopfModule, Side};
use crate::error::{input, invariant, Result};
use crate::hopf::split_idempotents;
use crate::linear::sparse::{kron_mul, mul_kron};
use crate::linear::{is_bijective, tensor, Mat, Subspace};
use crate::report::{compare_maps, Report, Verdict};

use super::action::{pair_names, triangle_action};
use super::comodule::LeftComodule;

/// The associated bundle `A□V ⊆ A⊗V` with its two `B`-actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedBundle {
    extension: Extension,
    rep: LeftComodule,
    space: Subspace,
    /// `B⊗E → E` in the echelon basis of `space`.
    left_action: Mat,
    /// `E⊗B → E`.
    right_action: Mat,
}

impl AssociatedBundle {
    pub fn extension(&self) -> &Extension {
        &self.extension
    }

    pub fn rep(&self) -> &LeftComodule {
        &self.rep
    }

    /// `A□V` inside `A⊗V`.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn left_action(&self) -> &Mat {
        &self.left_action
    }

    pub fn right_action(&self) -> &Mat {
        &self.right_action
    }

    /// Each basis vector named after its pivot tensor.
    pub fn basis_names(&self) -> Vec<String> {
        let names = pair_names(
            self.extension.algebra().basis_names(),
            self.rep.basis_names(),
        );
        self.space
            .pivots()
            .iter()
            .map(|&p| names[p].clone())
            .collect()
    }

    /// Unit and associativity laws of both actions and their commutation.
    pub fn check(&self) -> Report {
        let base = self.extension.base();
        let f = base.field();
        let names = self.basis_names();
        let bnames = base.basis_names();
        let id_e = Mat::identity(f, self.dim());
        let id_b = base.identity();
        let (l, r) = (&self.left_action, &self.right_action);
        let mut report = Report::new();
        report.push(compare_maps(
            "right_action_associative",
            &mul_kron(r, r, &id_b),
            &mul_kron(r, &id_e, base.mult()),
            &[&names, bnames, bnames],
        ));
        report.push(compare_maps(
            "right_action_unital",
            &mul_kron(r, &id_e, base.unit()),
            &id_e,
            &[&names],
        ));
        report.push(compare_maps(
            "left_action_associative",
            &mul_kron(l, &id_b, l),
            &mul_kron(l, base.mult(), &id_e),
            &[bnames, bnames, &names],
        ));
        report.push(compare_maps(
            "left_action_unital",
            &mul_kron(l, base.unit(), &id_e),
            &id_e,
            &[&names],
        ));
        report.push(compare_maps(
            "bimodule",
            &mul_kron(r, l, &id_b),
            &mul_kron(l, &id_b, r),
            &[bnames, &names, bnames],
        ));
        report.dim("dim_bundle", self.dim());
        report
    }
}

/// `A□V` as the kernel of `ρ⊗id - id⊗λ`; gradings by infinite groups
/// are matched degree by degree.
fn cotensor_kernel(e: &Extension, v: &LeftComodule) -> Result<Subspace> {
    let ca = e.comodule_algebra();
    let f = ca.field();
    match (ca.coaction(), v.coaction()) {
        (
            Coaction::Graded { group, degrees: da },
            Coaction::Graded {
                group: gv,
                degrees: dv,
            },
        ) if !group.is_finite() => {
            if group != gv {
                return input("extension and comodule are graded by different groups");
            }
            let n = dv.len();
            let vectors = da.iter().enumerate().flat_map(|(i, x)| {
                dv.iter()
                    .enumerate()
                    .filter(move |(_, y)| *y == x)
                    .map(move |(j, _)| vec![(i * n + j, f.one())])
            });
            Ok(Subspace::span_sparse(f, da.len() * n, vectors))
        }
        _ => {
            let (hopf, rho) = ca.finite_parts()?;
            let (hv, lambda) = v.finite_parts(f)?;
            if hopf != hv {
                return input("extension and comodule use different Hopf algebras");
            }
            cotensor(&rho, &lambda)
        }
    }
}

/// `A□V`, computed both as a cotensor kernel and as the coinvariants of
/// `A◁V`; the two must agree.
pub fn cotensor_bundle(e: &Extension, v: &LeftComodule) -> Result<AssociatedBundle> {
    let ca = e.comodule_algebra();
    let f = ca.field();
    let (da, dv) = (ca.dim(), v.dim());
    let space = cotensor_kernel(e, v)?;
    let twisted = triangle_action(&RelativeHopfModule::regular(ca), v)?;
    let coinvariants = twisted.coaction().invariants(da * dv, f, Side::Right);
    if coinvariants != space {
        return invariant("cotensor kernel and coinvariants of A◁V differ");
    }
    let db = e.base().dim();
    let basis = space.basis_matrix();
    let id_v = Mat::identity(f, dv);
    let on_right = tensor::permute_cols(
        &e.right_base_action().kron(&id_v),
        &[da, dv, db],
        &[0, 2, 1],
    );
    let Some(right_action) = space.coordinates(&mul_kron(&on_right, &basis, &e.base().identity()))
    else {
        return invariant("A□V is not closed under the right B-action");
    };
    let on_left = e.left_base_action().kron(&id_v);
    let Some(left_action) = space.coordinates(&mul_kron(&on_left, &e.base().identity(), &basis))
    else {
        return invariant("A□V is not closed under the left B-action");
    };
    Ok(AssociatedBundle {
        extension: e.clone(),
        rep: v.clone(),
        space,
        left_action,
        right_action,
    })
}

/// Projectivity of the right `B`-module: free over a field, split into
/// multiplicities over a split semisimple commutative base, otherwise
/// left undecided.
pub fn certify_fgp(b: &AssociatedBundle) -> Report {
    let base = b.extension.base();
    let f = base.field();
    let mut report = Report::new();
    const NAME: &str = "finitely_generated_projective";
    if base.dim() == 1 {
        report.push(
            Verdict::pass(NAME)
                .with_note(format!("free of rank {} over the ground field", b.dim())),
        );
        report.dim("rank", b.dim());
    } else if let Some(idempotents) = split_idempotents(base) {
        let id_e = Mat::identity(f, b.dim());
        let mut mults = Vec::with_capacity(idempotents.len());
        for (i, e) in idempotents.iter().enumerate() {
            let e = Mat::column_vector(f, e.clone());
            let m = mul_kron(&b.right_action, &id_e, &e).rank();
            report.dim(format!("multiplicity_{i}"), m);
            mults.push(m.to_string());
        }
        report.push(Verdict::pass(NAME).with_note(format!(
            "semisimple base; multiplicities [{}]",
            mults.join(", ")
        )));
    } else {
        report.push(Verdict::undecided(
            NAME,
            "assumed from the Hopf–Galois property, not independently certified",
        ));
    }
    report.dim("dim_bundle", b.dim());
    report
}

/// `(A□V)⊗_B(A□W)` next to `A□(V⊗W)` and the multiplication map between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleProduct {
    pub balanced: BalancedTensor,
    pub bundle: AssociatedBundle,
    /// `(a⊗v)⊗(a′⊗w) ↦ aa′⊗v⊗w` in the quotient and echelon bases.
    pub comparison: Mat,
    pub report: Report,
}

pub fn bundle_tensor(b1: &AssociatedBundle, b2: &AssociatedBundle) -> Result<BundleProduct> {
    if b1.extension != b2.extension {
        return input("bundles over different extensions");
    }
    let e = &b1.extension;
    let a = e.algebra();
    let f = a.field();
    let (da, dv, dw) = (a.dim(), b1.rep.dim(), b2.rep.dim());
    let rep = b1.rep.tensor(&b2.rep)?;
    let bundle = cotensor_bundle(e, &rep)?;
    let balanced = BalancedTensor::new(&b1.right_action, &b2.left_action)?;
    let pairs = tensor::permute_rows(
        &b1.space.basis_matrix().kron(&b2.space.basis_matrix()),
        &[da, dv, da, dw],
        &[0, 2, 1, 3],
    );
    let products = kron_mul(a.mult(), &Mat::identity(f, dv * dw), &pairs);
    let Some(coords) = bundle.space.coordinates(&products) else {
        return invariant("products of sections leave A□(V⊗W)");
    };
    let comparison = balanced.descend(&coords, "multiplication of sections")?;
    let mut report = Report::new();
    report.push(Verdict::from_bool(
        "dimensions_agree",
        balanced.dim() == bundle.dim(),
        format!("{} vs {}", balanced.dim(), bundle.dim()),
    ));
    report.push(Verdict::from_bool(
        "comparison_bijective",
        is_bijective(&comparison),
        format!(
            "rank {} of {}x{}",
            comparison.rank(),
            comparison.rows(),
            comparison.cols()
        ),
    ));
    report.dim("dim_balanced", balanced.dim());
    report.dim("dim_bundle", bundle.dim());
    Ok(BundleProduct {
        balanced,
        bundle,
        comparison,
        report,
    })
}
