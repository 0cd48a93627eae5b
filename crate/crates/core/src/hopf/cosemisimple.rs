use std::fmt;

use crate::error::{invariant, Result};
use crate::linear::{kernel, Mat, Scalar};

use super::commutative::{abelianization, rational_characters};
use super::data::HopfData;
use super::map::HopfMap;

/// The space of left integrals `Λ ∈ H*`, `(id⊗Λ)∘Δ = u∘Λ`, as row vectors.
pub fn left_integrals(h: &HopfData) -> Vec<Vec<Scalar>> {
    let n = h.dim();
    let f = h.field();
    // Unknown Λ_l; equation for output i and input j:
    // Σ_l Δ[(i,l), j] Λ_l - u_i Λ_j = 0.
    let mut constraints = Mat::zeros(f, n * n, n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for l in 0..n {
                let v = h.comult().get(i * n + l, j).clone();
                constraints.set(row, l, v);
            }
            let cur = constraints.get(row, j).clone();
            constraints.set(row, j, &cur - h.unit().get(i, 0));
        }
    }
    kernel(&constraints).expect("single field").basis_vectors()
}

/// `H` is cosemisimple iff it has a left integral in `H*` with `Λ(1) ≠ 0`.
pub fn is_cosemisimple(h: &HopfData) -> bool {
    let unit = h.algebra().unit_vector();
    left_integrals(h).iter().any(|lam| {
        let v = lam
            .iter()
            .zip(&unit)
            .fold(h.field().zero(), |acc, (a, b)| &acc + &(a * b));
        !v.is_zero()
    })
}

/// Status of left coflatness of a Hopf map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coflatness {
    Certified(String),
    Assumed(String),
}

impl Coflatness {
    pub fn is_certified(&self) -> bool {
        matches!(self, Coflatness::Certified(_))
    }

    pub fn reason(&self) -> &str {
        match self {
            Coflatness::Certified(r) | Coflatness::Assumed(r) => r,
        }
    }
}

impl fmt::Display for Coflatness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coflatness::Certified(r) => write!(f, "certified: {r}"),
            Coflatness::Assumed(r) => write!(f, "assumed: {r}"),
        }
    }
}

/// Coflatness of `χ: H → H′` is certified when `χ` is bijective or `H′` is
/// cosemisimple; otherwise it is recorded as an assumption.
pub fn coflatness(chi: &HopfMap) -> Coflatness {
    if chi.is_bijective() {
        Coflatness::Certified("structure map is bijective".into())
    } else if is_cosemisimple(chi.target()) {
        Coflatness::Certified("target Hopf algebra is cosemisimple".into())
    } else {
        Coflatness::Assumed("coflatness assumed, not verified".into())
    }
}

/// Grouplike elements `Δg = g⊗g`, `ε(g) = 1`, found as the rational
/// characters of the abelianized dual algebra. `None` when the character
/// search is inconclusive.
pub fn grouplikes(h: &HopfData) -> Result<Option<Vec<Vec<Scalar>>>> {
    let dual = h.dual();
    let (ab, q) = abelianization(dual.algebra());
    let Some(ch) = rational_characters(&ab) else {
        return Ok(None);
    };
    let f = h.field();
    let mut out = Vec::new();
    for row in ch.characters {
        let lifted = Mat::from_vec(f, 1, ab.dim(), row)?.mul(&q.projector);
        let g = lifted.row(0).to_vec();
        let gc = Mat::column_vector(f, g.clone());
        if h.comult().mul(&gc) != gc.kron(&gc) || !h.counit().mul(&gc).get(0, 0).is_one() {
            return invariant("character of the dual algebra is not grouplike");
        }
        out.push(g);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group::FiniteGroup;
    use crate::hopf::zoo::{build_dual_group_algebra, build_group_algebra, sweedler_h4};
    use crate::linear::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn cosemisimplicity_zoo() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(is_cosemisimple(&build_group_algebra(Q, &s3)));
        assert!(is_cosemisimple(&build_dual_group_algebra(Q, &s3)));
        assert!(!is_cosemisimple(&sweedler_h4(Q).unwrap()));
        let f2 = Field::prime(2).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(!is_cosemisimple(&build_dual_group_algebra(f2, &z2)));
    }

    #[test]
    fn grouplikes_of_zoo() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let g = grouplikes(&build_group_algebra(Q, &s3)).unwrap().unwrap();
        assert_eq!(g.len(), 6);
        // 𝕜^{S₃}: grouplikes are the two one-dimensional characters.
        let d = grouplikes(&build_dual_group_algebra(Q, &s3))
            .unwrap()
            .unwrap();
        assert_eq!(d.len(), 2);
        let h4 = grouplikes(&sweedler_h4(Q).unwrap()).unwrap().unwrap();
        assert_eq!(h4.len(), 2);
    }
}
