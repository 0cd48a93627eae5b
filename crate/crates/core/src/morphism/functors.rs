use crate::comodule::{cotensor, BalancedTensor, Coaction, RelativeHopfModule, Side};
use crate::error::{input, Result};
use crate::hopf::AlgebraData;
use crate::linear::sparse::{kron_mul, mul_kron, sparse_columns};
use crate::linear::{tensor, Mat, Subspace};
use crate::report::{compare_maps, Report};

use super::kappa::{coords, left_coaction_via_chi};
use super::ExtensionMorphism;

/// `M′□^{H′}H` as a relative Hopf module over `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushforward {
    /// The cotensor product inside `M′⊗H`.
    pub space: Subspace,
    pub module: RelativeHopfModule,
}

/// `M⊗_A A′` as a relative Hopf module over `A′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub tensor: BalancedTensor,
    pub module: RelativeHopfModule,
}

fn require_base(module: &RelativeHopfModule, algebra: &AlgebraData, side: &str) -> Result<()> {
    let b = module.base().algebra();
    if b.mult() != algebra.mult() || b.unit() != algebra.unit() {
        return input(format!(
            "module is not over the {side} algebra of the morphism"
        ));
    }
    Ok(())
}

fn finite_coaction(module: &RelativeHopfModule) -> Result<Mat> {
    Ok(module
        .materialized()?
        .coaction()
        .matrix()
        .expect("materialized coaction is finite")
        .clone())
}

/// Coordinates in `K⊗W` for a subspace `K` and the full space `W` of
/// dimension `w`, read off one slice of the last leg at a time.
fn coords_with_free_leg(space: &Subspace, vectors: &Mat, w: usize) -> Result<Mat> {
    let n = space.ambient_dim();
    let f = space.field();
    let mut out = Mat::zeros(f, space.dim() * w, vectors.cols());
    for j in 0..w {
        let rows: Vec<usize> = (0..n).map(|i| i * w + j).collect();
        let slice = coords(space, &vectors.select_rows(&rows), "coaction on M′□H")?;
        for r in 0..space.dim() {
            for c in 0..vectors.cols() {
                out.set(r * w + j, c, slice.get(r, c).clone());
            }
        }
    }
    Ok(out)
}

fn indexed_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// `M′ ↦ M′□^{H′}H` with `(m′⊗h)·a = m′α(a₀)⊗h a₁` and the coaction of `H`
/// on the right leg.
pub fn pushforward_module(
    m: &ExtensionMorphism,
    module: &RelativeHopfModule,
) -> Result<Pushforward> {
    require_base(module, m.target().algebra(), "target")?;
    let (h, rho) = m.source_parts()?;
    let f = h.field();
    let (dm, dh, dap) = (module.dim(), h.dim(), m.target().algebra().dim());
    let rho_m = finite_coaction(module)?;
    let space = cotensor(&rho_m, &left_coaction_via_chi(m, &h))?;
    let k = space.basis_matrix();
    let twisted = m.alpha().kron(&h.identity()).mul(&rho);
    let a = m.source().algebra();
    let da = a.dim();
    // (Σ m′⊗h)·a = Σ m′α(a₀) ⊗ h a₁, accumulated column by column.
    let (act, mult) = (sparse_columns(module.action()), sparse_columns(h.mult()));
    let twisted = sparse_columns(&twisted);
    let mut columns = Vec::with_capacity(space.dim() * da);
    for kj in sparse_columns(&k) {
        for tw in &twisted {
            let mut acc = vec![f.zero(); dm * dh];
            for (idx, x) in &kj {
                let (mi, hi) = (idx / dh, idx % dh);
                for (tidx, y) in tw {
                    let (ai, h1) = (tidx / dh, tidx % dh);
                    let xy = x * y;
                    for (r1, u) in &act[mi * dap + ai] {
                        let s = &xy * u;
                        for (r2, w) in &mult[hi * dh + h1] {
                            let pos = r1 * dh + r2;
                            acc[pos] = &acc[pos] + &(&s * w);
                        }
                    }
                }
            }
            columns.push(acc);
        }
    }
    let lifted = Mat::from_columns(f, dm * dh, &columns);
    let action = coords(&space, &lifted, "action on M′□H")?;
    let coaction =
        coords_with_free_leg(&space, &kron_mul(&Mat::identity(f, dm), h.comult(), &k), dh)?;
    let base = m.source().comodule_algebra().materialized()?;
    let module = RelativeHopfModule::new(
        base,
        indexed_names("c", space.dim()),
        action,
        Coaction::Finite {
            hopf: h,
            matrix: coaction,
        },
    )?;
    Ok(Pushforward { space, module })
}

/// `M ↦ M⊗_A A′` with `A′` acting on the right leg and coaction
/// `m⊗a′ ↦ m₀⊗a′₀⊗χ(m₁)a′₁`.
pub fn pullback_module(m: &ExtensionMorphism, module: &RelativeHopfModule) -> Result<Pullback> {
    require_base(module, m.source().algebra(), "source")?;
    let (hp, rho_ap) = m.target_parts()?;
    let (h, _) = m.source_parts()?;
    let ap = m.target().algebra();
    let f = ap.field();
    let (dm, dh, dap, dhp) = (module.dim(), h.dim(), ap.dim(), hp.dim());
    let left = mul_kron(ap.mult(), m.alpha(), &ap.identity());
    let t = BalancedTensor::new(module.action(), &left)?;
    let action = t.projector().mul(&kron_mul(
        &Mat::identity(f, dm),
        ap.mult(),
        &t.section().kron(&ap.identity()),
    ));
    let rho_m = finite_coaction(module)?;
    let mixer = mul_kron(hp.mult(), m.chi().matrix(), &hp.identity());
    let coaction = t.descend_by(
        |v| {
            let spread = tensor::permute_rows(
                &kron_mul(&rho_m, &rho_ap, v),
                &[dm, dh, dap, dhp],
                &[0, 2, 1, 3],
            );
            let combined = kron_mul(&Mat::identity(f, dm * dap), &mixer, &spread);
            kron_mul(t.projector(), &hp.identity(), &combined)
        },
        "coaction on M⊗_A A′",
    )?;
    let names = t.basis_names(module.basis_names(), ap.basis_names());
    let base = m.target().comodule_algebra().materialized()?;
    let module = RelativeHopfModule::new(
        base,
        names,
        action,
        Coaction::Finite {
            hopf: hp,
            matrix: coaction,
        },
    )?;
    Ok(Pullback { tensor: t, module })
}

/// `η_M: M → (M⊗_A A′)□^{H′}H`, `m ↦ (m₀⊗1)⊗m₁`, in the coordinates of the
/// pushforward of the pullback.
pub fn adjunction_unit(m: &ExtensionMorphism, module: &RelativeHopfModule) -> Result<Mat> {
    let pb = pullback_module(m, module)?;
    let pf = pushforward_module(m, &pb.module)?;
    unit_between(m, module, &pb, &pf)
}

fn unit_between(
    m: &ExtensionMorphism,
    module: &RelativeHopfModule,
    pb: &Pullback,
    pf: &Pushforward,
) -> Result<Mat> {
    let (h, _) = m.source_parts()?;
    let f = h.field();
    let ap = m.target().algebra();
    let into_t = pb
        .tensor
        .projector()
        .mul(&Mat::identity(f, module.dim()).kron(ap.unit()));
    let lifted = into_t.kron(&h.identity()).mul(&finite_coaction(module)?);
    coords(&pf.space, &lifted, "adjunction unit")
}

/// `ε_{M′}: (M′□^{H′}H)⊗_A A′ → M′`, `(m′⊗h)⊗a′ ↦ m′ε(h)a′`, on the
/// pullback of the pushforward.
pub fn adjunction_counit(m: &ExtensionMorphism, module: &RelativeHopfModule) -> Result<Mat> {
    let pf = pushforward_module(m, module)?;
    let pb = pullback_module(m, &pf.module)?;
    counit_between(m, module, &pf, &pb)
}

fn counit_between(
    m: &ExtensionMorphism,
    module: &RelativeHopfModule,
    pf: &Pushforward,
    pb: &Pullback,
) -> Result<Mat> {
    let (h, _) = m.source_parts()?;
    let f = h.field();
    let ap = m.target().algebra();
    let collapse = Mat::identity(f, module.dim())
        .kron(h.counit())
        .mul(&pf.space.basis_matrix());
    let lifted = mul_kron(module.action(), &collapse, &ap.identity());
    pb.tensor.descend(&lifted, "adjunction counit")
}

/// Both triangle identities of the pullback–pushforward adjunction, plus
/// linearity and colinearity of the unit and counit, on a module `M` over
/// `A` and a module `M′` over `A′`.
pub fn check_adjunction(
    m: &ExtensionMorphism,
    module: &RelativeHopfModule,
    target_module: &RelativeHopfModule,
) -> Result<Report> {
    let mut report = Report::new();
    let (h, _) = m.source_parts()?;
    let (hp, _) = m.target_parts()?;
    let f = h.field();
    let (a, ap) = (m.source().algebra(), m.target().algebra());

    // ε_{f*M} ∘ f*(η_M) = id
    let pb = pullback_module(m, module)?;
    let pushed = pushforward_module(m, &pb.module)?;
    let eta = unit_between(m, module, &pb, &pushed)?;
    let pulled_again = pullback_module(m, &pushed.module)?;
    let f_eta = pb.tensor.descend(
        &mul_kron(pulled_again.tensor.projector(), &eta, &ap.identity()),
        "pullback of the unit",
    )?;
    let eps = counit_between(m, &pb.module, &pushed, &pulled_again)?;
    let names = pb.module.basis_names();
    report.push(compare_maps(
        "triangle_pullback",
        &eps.mul(&f_eta),
        &Mat::identity(f, pb.module.dim()),
        &[names],
    ));
    report.push(compare_maps(
        "unit_linear",
        &eta.mul(module.action()),
        &mul_kron(pushed.module.action(), &eta, &a.identity()),
        &[module.basis_names(), a.basis_names()],
    ));
    let rho_m = finite_coaction(module)?;
    report.push(compare_maps(
        "unit_colinear",
        &finite_coaction(&pushed.module)?.mul(&eta),
        &eta.kron(&h.identity()).mul(&rho_m),
        &[module.basis_names()],
    ));

    // f_*(ε_{M′}) ∘ η_{f_*M′} = id
    let pf = pushforward_module(m, target_module)?;
    let back = pullback_module(m, &pf.module)?;
    let round = pushforward_module(m, &back.module)?;
    let eta2 = unit_between(m, &pf.module, &back, &round)?;
    let eps2 = counit_between(m, target_module, &pf, &back)?;
    let f_eps = coords(
        &pf.space,
        &eps2.kron(&h.identity()).mul(&round.space.basis_matrix()),
        "pushforward of the counit",
    )?;
    report.push(compare_maps(
        "triangle_pushforward",
        &f_eps.mul(&eta2),
        &Mat::identity(f, pf.module.dim()),
        &[pf.module.basis_names()],
    ));
    report.push(compare_maps(
        "counit_linear",
        &eps2.mul(back.module.action()),
        &mul_kron(target_module.action(), &eps2, &ap.identity()),
        &[back.module.basis_names(), ap.basis_names()],
    ));
    report.push(compare_maps(
        "counit_colinear",
        &finite_coaction(target_module)?.mul(&eps2),
        &eps2
            .kron(&hp.identity())
            .mul(&finite_coaction(&back.module)?),
        &[back.module.basis_names()],
    ));
    report.dim("dim_M", module.dim());
    report.dim("dim_pullback", pb.module.dim());
    report.dim("dim_M′", target_module.dim());
    report.dim("dim_pushforward", pf.module.dim());
    Ok(report)
}

/// `M′^{coH′} ≅ (M′□^{H′}H)^{coH}` via `m′ ↦ m′⊗1` and `Σm′ᵢ⊗hᵢ ↦ Σm′ᵢε(hᵢ)`:
/// both composites are identities and both maps are `B`-linear.
pub fn check_coinvariant_lemma(
    m: &ExtensionMorphism,
    module: &RelativeHopfModule,
) -> Result<Report> {
    let (h, _) = m.source_parts()?;
    let f = h.field();
    let dm = module.dim();
    let inv = module
        .materialized()?
        .coaction()
        .invariants(dm, f, Side::Right);
    let pf = pushforward_module(m, module)?;
    let inv_c = pf
        .module
        .coaction()
        .invariants(pf.module.dim(), f, Side::Right);
    let k = pf.space.basis_matrix();
    let v = inv.basis_matrix();
    let w = inv_c.basis_matrix();

    let up = coords(
        &pf.space,
        &Mat::identity(f, dm).kron(h.unit()).mul(&v),
        "m′ ↦ m′⊗1",
    )?;
    let to = coords(&inv_c, &up, "m′ ↦ m′⊗1")?;
    let down = Mat::identity(f, dm).kron(h.counit()).mul(&k).mul(&w);
    let from = coords(&inv, &down, "Σm′ᵢ⊗hᵢ ↦ Σm′ᵢε(hᵢ)")?;

    let mut report = Report::new();
    let inv_names = indexed_names("v", inv.dim());
    let inv_c_names = indexed_names("w", inv_c.dim());
    report.push(compare_maps(
        "to_then_from_identity",
        &from.mul(&to),
        &Mat::identity(f, inv.dim()),
        &[&inv_names],
    ));
    report.push(compare_maps(
        "from_then_to_identity",
        &to.mul(&from),
        &Mat::identity(f, inv_c.dim()),
        &[&inv_c_names],
    ));

    let src = m.source();
    let b = src.base();
    let via_target = m.target().inclusion().mul(m.beta());
    let act_inv = coords(
        &inv,
        &mul_kron(module.action(), &v, &via_target),
        "B-action on M′^{coH′}",
    )?;
    let act_c = coords(
        &inv_c,
        &mul_kron(pf.module.action(), &w, src.inclusion()),
        "B-action on (M′□H)^{coH}",
    )?;
    let ib = b.identity();
    report.push(compare_maps(
        "to_b_linear",
        &to.mul(&act_inv),
        &mul_kron(&act_c, &to, &ib),
        &[&inv_names, b.basis_names()],
    ));
    report.push(compare_maps(
        "from_b_linear",
        &from.mul(&act_c),
        &mul_kron(&act_inv, &from, &ib),
        &[&inv_c_names, b.basis_names()],
    ));
    report.dim("dim_coinvariants", inv.dim());
    report.dim("dim_pushforward_coinvariants", inv_c.dim());
    Ok(report)
}
