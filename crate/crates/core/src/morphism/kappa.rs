use crate::comodule::{cotensor, BalancedTensor, ComoduleAlgebra};
use crate::error::{precondition, Error, Result};
use crate::hopf::{coflatness, AlgebraData, HopfData};
use crate::linear::{coordinates_in, is_bijective, tensor, Field, Mat, Scalar, Subspace};
use crate::report::{compare_maps, Report, Verdict};

use super::ExtensionMorphism;
use crate::linear::sparse::mul_kron;

/// A map from a balanced tensor product into `A′□^{H′}H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaMap {
    pub domain: BalancedTensor,
    /// The cotensor product inside `A′⊗H`.
    pub codomain: Subspace,
    /// Codomain echelon coordinates by domain quotient coordinates.
    pub matrix: Mat,
}

/// Coordinates of the columns of `vectors` in `space`, or an invariant
/// violation naming `what`.
pub(crate) fn coords(space: &Subspace, vectors: &Mat, what: &str) -> Result<Mat> {
    space
        .coordinates(vectors)
        .ok_or_else(|| Error::InvariantViolation(format!("{what} leaves the expected subspace")))
}

/// `H` as a left `H′`-comodule through `χ`: `(χ⊗id)∘Δ`.
pub(crate) fn left_coaction_via_chi(m: &ExtensionMorphism, h: &HopfData) -> Mat {
    m.chi().matrix().kron(&h.identity()).mul(h.comult())
}

/// `A′□^{H′}H`.
pub(crate) fn cotensor_codomain(m: &ExtensionMorphism) -> Result<Subspace> {
    let (h, _) = m.source_parts()?;
    let (_, rho_t) = m.target_parts()?;
    cotensor(&rho_t, &left_coaction_via_chi(m, &h))
}

/// `a ↦ α(a₀)⊗a₁`, `A → A′⊗H`.
fn twisted_coaction(m: &ExtensionMorphism, h: &HopfData, rho: &Mat) -> Mat {
    m.alpha().kron(&h.identity()).mul(rho)
}

/// Right action of `B` on `B′` through `β`.
pub(crate) fn base_right_action(m: &ExtensionMorphism) -> Mat {
    let bp = m.target().base();
    mul_kron(bp.mult(), &bp.identity(), m.beta())
}

/// Left action of `B` on `B′` through `β`.
fn base_left_action(m: &ExtensionMorphism) -> Mat {
    let bp = m.target().base();
    mul_kron(bp.mult(), m.beta(), &bp.identity())
}

/// `κ: B′⊗_B A → A′□^{H′}H`, `b′⊗a ↦ b′α(a₀)⊗a₁`.
pub fn generalized_canonical_map(m: &ExtensionMorphism) -> Result<KappaMap> {
    let (h, rho) = m.source_parts()?;
    let ap = m.target().algebra();
    let domain = BalancedTensor::new(&base_right_action(m), &m.source().left_base_action())?;
    let lifted = ap
        .mult()
        .kron(&h.identity())
        .mul(&m.target().inclusion().kron(&twisted_coaction(m, &h, &rho)));
    let ambient = domain.descend(&lifted, "generalized canonical map")?;
    let codomain = cotensor_codomain(m)?;
    let matrix = coords(&codomain, &ambient, "generalized canonical map")?;
    Ok(KappaMap {
        domain,
        codomain,
        matrix,
    })
}

/// Cartesian iff the generalized canonical map is bijective. The verdict
/// carries the coflatness status of `χ`.
pub fn is_cartesian(m: &ExtensionMorphism) -> Result<Report> {
    let kappa = generalized_canonical_map(m)?;
    let mut report = Report::new();
    report.dim("dim_domain", kappa.domain.dim());
    report.dim("dim_codomain", kappa.codomain.dim());
    let ok = is_bijective(&kappa.matrix);
    let verdict = Verdict::from_bool(
        "cartesian",
        ok,
        format!(
            "generalized canonical map {}x{} has rank {}",
            kappa.matrix.rows(),
            kappa.matrix.cols(),
            kappa.matrix.rank()
        ),
    );
    report.push(if ok {
        verdict.with_note(format!("coflatness {}", coflatness(m.chi())))
    } else {
        verdict
    });
    Ok(report)
}

/// `κ̃: A⊗_B B′ → A′□^{H′}H`, `a⊗b′ ↦ α(a₀)b′⊗a₁`. Requires an invertible
/// antipode on `H`.
pub fn kappa_tilde(m: &ExtensionMorphism) -> Result<KappaMap> {
    let (h, rho) = m.source_parts()?;
    if h.antipode_inv().is_none() && h.antipode().inverse().is_none() {
        return precondition("antipode of H is not invertible");
    }
    let ap = m.target().algebra();
    let (da, dh, dbp) = (m.source().algebra().dim(), h.dim(), m.target().base().dim());
    let f = ap.field();
    let domain = BalancedTensor::new(&m.source().right_base_action(), &base_left_action(m))?;
    let split = tensor::permute_rows(
        &rho.kron(&Mat::identity(f, dbp)),
        &[da, dh, dbp],
        &[0, 2, 1],
    );
    let lifted = ap
        .mult()
        .kron(&h.identity())
        .mul(&m.alpha().kron(m.target().inclusion()).kron(&h.identity()))
        .mul(&split);
    let ambient = domain.descend(&lifted, "companion canonical map")?;
    let codomain = cotensor_codomain(m)?;
    let matrix = coords(&codomain, &ambient, "companion canonical map")?;
    Ok(KappaMap {
        domain,
        codomain,
        matrix,
    })
}

/// `φ = κ⁻¹∘κ̃: A⊗_B B′ → B′⊗_B A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributiveLaw {
    pub kappa: KappaMap,
    pub kappa_tilde: KappaMap,
    pub matrix: Mat,
}

impl DistributiveLaw {
    /// Expresses a map `A⊗B′ → B′⊗A` between the unbalanced products in the
    /// quotient coordinates used by `matrix`.
    pub fn descend(&self, lifted: &Mat) -> Result<Mat> {
        self.kappa_tilde.domain.descend(
            &self.kappa.domain.projector().mul(lifted),
            "map A⊗B′ → B′⊗A",
        )
    }

    /// `φ` on the unbalanced products: `A⊗B′ → B′⊗A`.
    pub fn lifted(&self) -> Mat {
        self.kappa
            .domain
            .section()
            .mul(&self.matrix)
            .mul(self.kappa_tilde.domain.projector())
    }
}

/// Requires `κ` bijective and `S` invertible.
pub fn distributive_law(m: &ExtensionMorphism) -> Result<DistributiveLaw> {
    let kappa = generalized_canonical_map(m)?;
    let inverse = if kappa.matrix.is_square() {
        kappa.matrix.inverse()
    } else {
        None
    };
    let Some(inverse) = inverse else {
        return precondition(format!(
            "kappa not bijective: {}x{} of rank {}",
            kappa.matrix.rows(),
            kappa.matrix.cols(),
            kappa.matrix.rank()
        ));
    };
    let kappa_tilde = kappa_tilde(m)?;
    let matrix = inverse.mul(&kappa_tilde.matrix);
    if kappa.matrix.mul(&matrix) != kappa_tilde.matrix {
        return Err(Error::InvariantViolation("κ∘φ differs from κ̃".into()));
    }
    Ok(DistributiveLaw {
        kappa,
        kappa_tilde,
        matrix,
    })
}

/// `B′⊗_B A` with the algebra structure transported by the distributive
/// law, together with the report of every identity verified on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedAlgebra {
    pub comodule_algebra: ComoduleAlgebra,
    pub law: DistributiveLaw,
    pub report: Report,
}

fn nonzero(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// `(μ_{B′}⊗μ_A)∘(id⊗φ⊗id)` on `B′⊗_B A`, evaluated on representatives.
fn induced_multiplication(
    f: Field,
    bp: &AlgebraData,
    a: &AlgebraData,
    domain: &BalancedTensor,
    phi_lifted: &Mat,
) -> Mat {
    let (dbp, da, n) = (bp.dim(), a.dim(), domain.dim());
    let reps = domain.section().columns();
    let phi_cols = phi_lifted.columns();
    let mut columns = Vec::with_capacity(n * n);
    for x in &reps {
        for y in &reps {
            let mut out = vec![f.zero(); dbp * da];
            for (xi, xv) in nonzero(x) {
                let (b, a1) = (xi / da, xi % da);
                for (yi, yv) in nonzero(y) {
                    let (b2, a2) = (yi / da, yi % da);
                    let c = xv * yv;
                    for (mi, mv) in nonzero(&phi_cols[a1 * dbp + b2]) {
                        let (b3, a3) = (mi / da, mi % da);
                        let cm = &c * mv;
                        let left = bp.mult().column(b * dbp + b3);
                        let right = a.mult().column(a3 * da + a2);
                        for (p, lv) in nonzero(&left) {
                            let cl = &cm * lv;
                            for (q, rv) in nonzero(&right) {
                                let slot = &mut out[p * da + q];
                                *slot = &*slot + &(&cl * rv);
                            }
                        }
                    }
                }
            }
            columns.push(domain.projector().apply(&out));
        }
    }
    Mat::from_columns(f, n, &columns)
}

/// The algebra on `B′⊗_B A` given by the distributive law; verifies the
/// algebra and comodule axioms, that `κ` is a colinear unital algebra
/// isomorphism onto `A′□^{H′}H`, and that every arrow of the comparison
/// diagram commutes. A failed check is an invariant violation.
pub fn induced_algebra_on_pullback(m: &ExtensionMorphism) -> Result<InducedAlgebra> {
    let law = distributive_law(m)?;
    let (h, rho) = m.source_parts()?;
    let (a, ap) = (m.source().algebra(), m.target().algebra());
    let bp = m.target().base();
    let f = a.field();
    let d = &law.kappa.domain;
    let ih = h.identity();

    let mult = induced_multiplication(f, bp, a, d, &law.lifted());
    let unit = mul_kron(d.projector(), bp.unit(), a.unit());
    let names = d.basis_names(bp.basis_names(), a.basis_names());
    let algebra = AlgebraData::new(f, names.clone(), mult, unit)?;
    let coaction = d.descend(
        &d.projector().kron(&ih).mul(&bp.identity().kron(&rho)),
        "coaction on the pullback",
    )?;
    let ca = ComoduleAlgebra::finite(algebra.clone(), h.clone(), coaction.clone())?;
    let mut report = ca.check();

    let kappa = &law.kappa;
    let c = &kappa.codomain;
    let k = c.basis_matrix();
    let total = ap.tensor(h.algebra());
    let c_mult = coords(
        c,
        &mul_kron(total.mult(), &k, &k),
        "product on the cotensor product",
    )?;
    let c_unit = coords(c, total.unit(), "unit of the cotensor product")?;
    let c_coaction = coordinates_in(&k.kron(&ih), &ap.identity().kron(h.comult()).mul(&k))?
        .ok_or_else(|| Error::InvariantViolation("coaction leaves the cotensor product".into()))?;
    report.push(compare_maps(
        "kappa_multiplicative",
        &kappa.matrix.mul(algebra.mult()),
        &mul_kron(&c_mult, &kappa.matrix, &kappa.matrix),
        &[&names, &names],
    ));
    report.push(Verdict::from_bool(
        "kappa_unital",
        kappa.matrix.mul(algebra.unit()) == c_unit,
        "κ(1⊗1) differs from 1⊗1",
    ));
    report.push(compare_maps(
        "kappa_colinear",
        &c_coaction.mul(&kappa.matrix),
        &kappa.matrix.kron(&ih).mul(&coaction),
        &[&names],
    ));

    let (incl, incl_t) = (m.source().inclusion(), m.target().inclusion());
    let from_total = mul_kron(d.projector(), bp.unit(), &a.identity());
    let from_base = mul_kron(d.projector(), &bp.identity(), a.unit());
    let total_to_c = coords(c, &twisted_coaction(m, &h, &rho), "α(a₀)⊗a₁")?;
    let base_to_c = coords(c, &incl_t.kron(h.unit()), "b′⊗1")?;
    let c_to_total = ap.identity().kron(h.counit()).mul(&k);
    let (an, bn) = (a.basis_names(), bp.basis_names());
    let base_names = m.source().base().basis_names();
    report.push(compare_maps(
        "total_space_triangle",
        &kappa.matrix.mul(&from_total),
        &total_to_c,
        &[an],
    ));
    report.push(compare_maps(
        "base_triangle",
        &kappa.matrix.mul(&from_base),
        &base_to_c,
        &[bn],
    ));
    report.push(compare_maps(
        "total_space_projection",
        &c_to_total.mul(&total_to_c),
        m.alpha(),
        &[an],
    ));
    report.push(compare_maps(
        "base_projection",
        &c_to_total.mul(&base_to_c),
        incl_t,
        &[bn],
    ));
    report.push(compare_maps(
        "base_square",
        &from_total.mul(incl),
        &from_base.mul(m.beta()),
        &[base_names],
    ));
    report.push(compare_maps(
        "outer_square",
        &m.alpha().mul(incl),
        &incl_t.mul(m.beta()),
        &[base_names],
    ));
    report.extend(
        "total_space_inclusion",
        a.check_algebra_map(&from_total, &algebra),
    );
    report.extend("base_inclusion", bp.check_algebra_map(&from_base, &algebra));
    report.push(compare_maps(
        "total_space_inclusion_colinear",
        &coaction.mul(&from_total),
        &from_total.kron(&ih).mul(&rho),
        &[an],
    ));
    report.dim("dim_pullback", d.dim());
    report.dim("dim_H", h.dim());

    if let Some(v) = report.failures().next() {
        return Err(Error::InvariantViolation(format!(
            "induced algebra check {} fails at {}",
            v.name,
            v.witness.as_deref().unwrap_or("?")
        )));
    }
    Ok(InducedAlgebra {
        comodule_algebra: ca,
        law,
        report,
    })
}
