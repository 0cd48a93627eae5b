//! Builders for the standard examples.

use crate::error::{input, Result};
use crate::linear::{is_prime, Field, Mat, Scalar};

use super::algebra::AlgebraData;
use super::data::HopfData;
use super::group::FiniteGroup;
use super::map::HopfMap;

fn basis_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// The group algebra `𝕜G`: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn build_group_algebra(field: Field, g: &FiniteGroup) -> HopfData {
    let n = g.order();
    let algebra = AlgebraData::from_products(
        field,
        g.names().to_vec(),
        basis_vector(field, n, g.identity()),
        |a, b| basis_vector(field, n, g.mul(a, b)),
    )
    .expect("group table has consistent shape");
    let comult = Mat::from_fn(field, n * n, n, |r, c| {
        if r == c * n + c {
            field.one()
        } else {
            field.zero()
        }
    });
    let counit = Mat::from_fn(field, 1, n, |_, _| field.one());
    let antipode = Mat::from_fn(field, n, n, |r, c| {
        if r == g.inverse(c) {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfData::new(algebra, comult, counit, antipode, None)
        .expect("group algebra shapes")
        .with_antipode_inverse()
}

/// The function algebra `𝕜^G` on delta functions:
/// `δ_a δ_b = [a=b] δ_a`, `Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b`, `S(δ_g) = δ_{g⁻¹}`.
pub fn build_dual_group_algebra(field: Field, g: &FiniteGroup) -> HopfData {
    let n = g.order();
    let names = g.names().iter().map(|x| format!("δ_{x}")).collect();
    let algebra = AlgebraData::from_products(field, names, vec![field.one(); n], |a, b| {
        if a == b {
            basis_vector(field, n, a)
        } else {
            vec![field.zero(); n]
        }
    })
    .expect("delta function table has consistent shape");
    let comult = Mat::from_fn(field, n * n, n, |r, c| {
        let (a, b) = (r / n, r % n);
        if g.mul(a, b) == c {
            field.one()
        } else {
            field.zero()
        }
    });
    let counit = Mat::from_fn(field, 1, n, |_, c| {
        if c == g.identity() {
            field.one()
        } else {
            field.zero()
        }
    });
    let antipode = Mat::from_fn(field, n, n, |r, c| {
        if r == g.inverse(c) {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfData::new(algebra, comult, counit, antipode, None)
        .expect("dual group algebra shapes")
        .with_antipode_inverse()
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`, `S(x) = -gx`.
pub fn sweedler_h4(field: Field) -> Result<HopfData> {
    if field == Field::Prime(2) {
        return input("Sweedler's algebra needs characteristic other than 2");
    }
    // Basis element g^a x^b sits at index a + 2b.
    let idx = |a: usize, b: usize| a + 2 * b;
    let names: Vec<String> = ["1", "g", "x", "gx"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let algebra = AlgebraData::from_products(field, names, basis_vector(field, 4, 0), |i, j| {
        let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
        let mut v = vec![field.zero(); 4];
        if b + d < 2 {
            let sign = field.from_i64(if b * c == 1 { -1 } else { 1 });
            v[idx((a + c) % 2, b + d)] = sign;
        }
        v
    })?;
    let one = field.one();
    let mut comult = Mat::zeros(field, 16, 4);
    let pair = |i: usize, j: usize| i * 4 + j;
    comult.set(pair(0, 0), 0, one.clone());
    comult.set(pair(1, 1), 1, one.clone());
    comult.set(pair(2, 0), 2, one.clone());
    comult.set(pair(1, 2), 2, one.clone());
    comult.set(pair(3, 1), 3, one.clone());
    comult.set(pair(0, 3), 3, one.clone());
    let counit = Mat::from_i64_rows(field, &[&[1, 1, 0, 0]]);
    let antipode = Mat::from_i64_rows(
        field,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
    );
    Ok(HopfData::new(algebra, comult, counit, antipode, None)?.with_antipode_inverse())
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn trivial_hopf(field: Field) -> HopfData {
    let id = Mat::identity(field, 1);
    HopfData::new(
        AlgebraData::ground(field),
        id.clone(),
        id.clone(),
        id.clone(),
        Some(id),
    )
    .expect("one-dimensional shapes")
}

/// A primitive `n`-th root of unity in `field`, if one exists.
pub fn primitive_root_of_unity(field: Field, n: u64) -> Option<Scalar> {
    match field {
        Field::Rational => match n {
            1 => Some(field.one()),
            2 => Some(field.from_i64(-1)),
            _ => None,
        },
        Field::Prime(p) => {
            if n == 0 || (p - 1) % n != 0 {
                return None;
            }
            let order = p - 1;
            let factors = prime_factors(order);
            let generator = (2..p.max(3))
                .map(|c| field.from_i64(c as i64))
                .find(|c| factors.iter().all(|q| !c.pow(order / q).is_one()))
                .unwrap_or_else(|| field.one());
            Some(generator.pow(order / n))
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The discrete Fourier isomorphism `𝕜[ℤ/n] → 𝕜^{ℤ/n}`,
/// `g^j ↦ Σ_k ω^{jk} δ_k` for a primitive `n`-th root `ω`.
pub fn fourier_iso(field: Field, n: usize) -> Result<HopfMap> {
    if let Field::Prime(p) = field {
        if !is_prime(p) {
            return input(format!("{p} is not prime"));
        }
    }
    let Some(omega) = primitive_root_of_unity(field, n as u64) else {
        return input(format!(
            "{field} has no primitive root of unity of order {n}"
        ));
    };
    let g = FiniteGroup::cyclic(n)?;
    let source = build_group_algebra(field, &g);
    let target = build_dual_group_algebra(field, &g);
    let matrix = Mat::from_fn(field, n, n, |k, j| omega.pow((j * k) as u64));
    HopfMap::new(source, target, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::data::{antipode_inverse, check_antipode_inverse, check_hopf};
    use crate::hopf::map::check_hopf_map;

    const Q: Field = Field::Rational;

    #[test]
    fn group_algebras_pass() {
        for g in [
            FiniteGroup::cyclic(2).unwrap(),
            FiniteGroup::cyclic(3).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::trivial(),
        ] {
            let h = build_group_algebra(Q, &g);
            assert!(check_hopf(&h).all_pass(), "{:?}", check_hopf(&h));
            assert!(h.is_cocommutative());
            let d = build_dual_group_algebra(Q, &g);
            assert!(check_hopf(&d).all_pass());
            assert!(d.algebra().is_commutative());
        }
        let s3 = build_group_algebra(Q, &FiniteGroup::symmetric(3).unwrap());
        assert!(!s3.algebra().is_commutative());
    }

    #[test]
    fn sweedler_antipode_has_order_four() {
        let h = sweedler_h4(Q).unwrap();
        assert!(check_hopf(&h).all_pass(), "{:?}", check_hopf(&h));
        let s = h.antipode();
        let s2 = s.mul(s);
        assert_ne!(s2, h.identity());
        assert_eq!(s2.mul(&s2), h.identity());
        let si = antipode_inverse(&h).unwrap();
        assert_eq!(si, s2.mul(s));
        assert_ne!(si, *s);
        assert!(check_antipode_inverse(&h, &si).all_pass());
        assert!(!h.is_cocommutative());
    }

    #[test]
    fn dual_coproduct_of_identity_delta() {
        let d = build_dual_group_algebra(Q, &FiniteGroup::cyclic(2).unwrap());
        let col = d.comult().column(0);
        let expect: Vec<Scalar> = [1, 0, 0, 1].iter().map(|&v| Q.from_i64(v)).collect();
        assert_eq!(col, expect);
    }

    #[test]
    fn corrupted_antipode_fails_at_g() {
        let h = build_group_algebra(Q, &FiniteGroup::cyclic(2).unwrap());
        let mut s = h.antipode().clone();
        s.set(1, 1, Q.zero());
        s.set(0, 1, Q.one());
        let bad = h
            .with_parts(
                h.mult().clone(),
                h.unit().clone(),
                h.comult().clone(),
                h.counit().clone(),
                s,
            )
            .unwrap();
        let report = check_hopf(&bad);
        let v = report.get("antipode_left").unwrap();
        assert_eq!(v.witness.as_deref(), Some("basis (g)"));
    }

    #[test]
    fn fourier_over_f7() {
        let f = Field::prime(7).unwrap();
        let iso = fourier_iso(f, 6).unwrap();
        assert!(check_hopf_map(&iso).all_pass());
        assert!(iso.matrix().inverse().is_some());
    }
}
