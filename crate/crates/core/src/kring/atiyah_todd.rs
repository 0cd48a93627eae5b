use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{input, Result};
use crate::report::{Report, Verdict};

use super::intmat::IntMat;
use super::laurent::LaurentPoly;
use super::truncated::TruncatedPoly;

/// A class in `K⁰` of projective `n`-space, in the shifted basis
/// `[L₀], …, [Lₙ]` with `[Lₖ] = (1+x)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KClassVector {
    n: usize,
    coords: Vec<BigInt>,
}

impl KClassVector {
    pub fn new(n: usize, coords: Vec<BigInt>) -> Result<KClassVector> {
        if coords.len() != n + 1 {
            return input(format!(
                "a class for n = {n} needs {} coordinates, got {}",
                n + 1,
                coords.len()
            ));
        }
        Ok(KClassVector { n, coords })
    }

    /// `[Lₖ]` for `0 ≤ k ≤ n`.
    pub fn basis(n: usize, k: usize) -> KClassVector {
        assert!(k <= n, "basis index out of range");
        let mut coords = vec![BigInt::zero(); n + 1];
        coords[k] = BigInt::one();
        KClassVector { n, coords }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Terms from the highest index down, e.g. `2 [L1] - 1 [L0]`.
impl fmt::Display for KClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self
            .coords
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
        {
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write!(f, "{} [L{k}]", c.abs())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The change of basis between the shifted basis and monomials for a fixed
/// `n`, built by expanding `(1+x)^k` in `ℤ[x]/(x^{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedBasis {
    n: usize,
    /// Column `k` holds the monomial coefficients of `(1+x)^k`.
    change: IntMat,
}

impl ShiftedBasis {
    pub fn new(n: usize) -> ShiftedBasis {
        let step = TruncatedPoly::one_plus_x(n);
        let mut columns = Vec::with_capacity(n + 1);
        let mut power = TruncatedPoly::one(n);
        for _ in 0..=n {
            columns.push(power.coeffs().to_vec());
            power = &power * &step;
        }
        ShiftedBasis {
            n,
            change: IntMat::from_columns(n + 1, &columns),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The monomial coefficients of the shifted basis vectors, as columns.
    pub fn change(&self) -> &IntMat {
        &self.change
    }

    pub fn to_monomial(&self, v: &KClassVector) -> TruncatedPoly {
        assert_eq!(v.n, self.n, "class over a different projective space");
        TruncatedPoly::new(self.n, self.change.apply(&v.coords))
    }

    /// Solves the unit upper-triangular system by back substitution.
    pub fn from_monomial(&self, p: &TruncatedPoly) -> KClassVector {
        assert_eq!(p.n(), self.n, "polynomial of a different truncation degree");
        let n = self.n;
        let mut coords = vec![BigInt::zero(); n + 1];
        for j in (0..=n).rev() {
            let tail: BigInt = (j + 1..=n)
                .map(|k| self.change.get(j, k) * &coords[k])
                .sum();
            coords[j] = &p.coeffs()[j] - tail;
        }
        KClassVector { n, coords }
    }

    /// `[Lₖ]` for any integer `k`.
    pub fn line_class(&self, k: i64) -> KClassVector {
        self.from_monomial(&TruncatedPoly::one_plus_x_pow(self.n, k))
    }

    /// The ring product of two classes.
    pub fn product(&self, a: &KClassVector, b: &KClassVector) -> KClassVector {
        self.from_monomial(&(&self.to_monomial(a) * &self.to_monomial(b)))
    }

    /// `p·v` for `p ∈ ℤ[t,t⁻¹]` acting through `t ↦ 1+x`.
    pub fn act(&self, p: &LaurentPoly, v: &KClassVector) -> KClassVector {
        self.from_monomial(&(&ring_map(p, self.n) * &self.to_monomial(v)))
    }
}

/// `ℤ[t,t⁻¹] → ℤ[x]/(x^{n+1})`, `t ↦ 1+x`.
pub fn ring_map(p: &LaurentPoly, n: usize) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(n);
    for (e, c) in p.terms() {
        out =
            &out + &(&TruncatedPoly::constant(n, c.clone()) * &TruncatedPoly::one_plus_x_pow(n, e));
    }
    out
}

/// Columns `(1+x)^k`, `k = 0..=n`, in monomial coordinates.
pub fn at_base_change(n: usize) -> IntMat {
    ShiftedBasis::new(n).change
}

/// The inverse of [`at_base_change`] from its closed form `(-1)^{j+k}·C(k, j)`.
pub fn at_base_change_inverse(n: usize) -> IntMat {
    IntMat::from_fn(n + 1, n + 1, |j, k| {
        if j > k {
            BigInt::zero()
        } else {
            sign(j + k) * binomial(BigInt::from(k), BigInt::from(j))
        }
    })
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn line_class(n: usize, k: i64) -> KClassVector {
    ShiftedBasis::new(n).line_class(k)
}

pub fn representation_action(p: &LaurentPoly, v: &KClassVector) -> KClassVector {
    ShiftedBasis::new(v.n).act(p, v)
}

/// Closed form of `[L_{n+1}]`: coordinate `k` is `(-1)^{n-k}·C(n+1, k)`.
pub fn primary_identity(n: usize) -> KClassVector {
    let coords = (0..=n)
        .map(|k| sign(n - k) * binomial(BigInt::from(n + 1), BigInt::from(k)))
        .collect();
    KClassVector { n, coords }
}

/// Closed form of `[L_{-1}]`: coordinate `k` is `(-1)^k·C(n+1, k+1)`.
pub fn secondary_identity(n: usize) -> KClassVector {
    let coords = (0..=n)
        .map(|k| sign(k) * binomial(BigInt::from(n + 1), BigInt::from(k + 1)))
        .collect();
    KClassVector { n, coords }
}

/// `(1+x)⁻¹` by the coefficient recurrence against the closed form
/// `Σ (-1)^k C(n+1, k+1)(1+x)^k`.
pub fn inverse_paths_agree(n: usize) -> bool {
    let recurrence = TruncatedPoly::one_plus_x(n)
        .inverse()
        .expect("1+x is a unit");
    let basis = ShiftedBasis::new(n);
    basis.to_monomial(&secondary_identity(n)) == recurrence
}

/// Surjectivity of `ℤ[t,t⁻¹] → K⁰`, `p ↦ p·[L₀]`, with the images of
/// `t⁰, …, t^{bound-1}` as certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    pub verdict: Verdict,
    /// The images `t^k·[L₀]` in the shifted basis, as columns.
    pub shifted: IntMat,
    /// The same images in monomial coordinates.
    pub monomial: IntMat,
    /// Determinant of the first `n+1` columns, when there are that many.
    pub det: Option<BigInt>,
}

pub fn augmentation_surjective(n: usize, bound: usize) -> Augmentation {
    let basis = ShiftedBasis::new(n);
    let one = KClassVector::basis(n, 0);
    let images: Vec<KClassVector> = (0..bound as i64)
        .map(|k| basis.act(&LaurentPoly::monomial(1, k), &one))
        .collect();
    let shifted = IntMat::from_columns(
        n + 1,
        &images.iter().map(|v| v.coords.clone()).collect::<Vec<_>>(),
    );
    let monomial = IntMat::from_columns(
        n + 1,
        &images
            .iter()
            .map(|v| basis.to_monomial(v).coeffs().to_vec())
            .collect::<Vec<_>>(),
    );
    let det = (bound > n).then(|| shifted.select_columns(&(0..=n).collect::<Vec<_>>()).det());
    let verdict = match shifted.lattice_index() {
        Some(i) if i.is_one() => Verdict::pass("augmentation_surjective"),
        Some(i) => Verdict::fail("augmentation_surjective", format!("image has index {i}")),
        None if bound <= n => Verdict::undecided(
            "augmentation_surjective",
            format!("{bound} images cannot span a lattice of rank {}", n + 1),
        ),
        None => Verdict::fail("augmentation_surjective", "image has lower rank"),
    };
    Augmentation {
        verdict,
        shifted,
        monomial,
        det,
    }
}

/// Whether the columns of `generators` span all of `ℤ^rows`.
pub fn spans_lattice(generators: &IntMat) -> Verdict {
    match generators.lattice_index() {
        Some(i) if i.is_one() => Verdict::pass("spans_lattice"),
        Some(i) => Verdict::fail("spans_lattice", format!("sublattice of index {i}")),
        None => Verdict::fail("spans_lattice", "sublattice of lower rank"),
    }
}

/// Rows `(k, [Lₖ])` for `k` in a range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtTable {
    pub n: usize,
    pub rows: Vec<(i64, KClassVector)>,
}

pub fn at_table(n: usize, ks: RangeInclusive<i64>) -> AtTable {
    let basis = ShiftedBasis::new(n);
    AtTable {
        n,
        rows: ks.map(|k| (k, basis.line_class(k))).collect(),
    }
}

impl AtTable {
    /// Products of table entries against the table, both identities against
    /// their closed forms, the inverse cross-check and unimodularity.
    pub fn self_check(&self) -> Report {
        let n = self.n;
        let basis = ShiftedBasis::new(n);
        let mut report = Report::new();
        let lookup = |k: i64| self.rows.iter().find(|(j, _)| *j == k).map(|(_, v)| v);
        let mut witness = None;
        'outer: for (k1, a) in &self.rows {
            let monomial_a = basis.to_monomial(a);
            for (k2, b) in &self.rows {
                let Some(expected) = lookup(k1 + k2) else {
                    continue;
                };
                if basis.from_monomial(&(&monomial_a * &basis.to_monomial(b))) != *expected {
                    witness = Some(format!("[L{k1}]·[L{k2}]"));
                    break 'outer;
                }
            }
        }
        report.push(match witness {
            None => Verdict::pass("multiplicative"),
            Some(w) => Verdict::fail("multiplicative", w),
        });
        report.push(Verdict::from_bool(
            "primary_identity",
            basis.line_class(n as i64 + 1) == primary_identity(n),
            format!("[L{}] = {}", n + 1, basis.line_class(n as i64 + 1)),
        ));
        report.push(Verdict::from_bool(
            "secondary_identity",
            basis.line_class(-1) == secondary_identity(n),
            format!("[L-1] = {}", basis.line_class(-1)),
        ));
        report.push(Verdict::from_bool(
            "inverse_paths_agree",
            inverse_paths_agree(n),
            "recurrence and closed form of (1+x)^-1 differ",
        ));
        let product = basis.change().mul(&at_base_change_inverse(n));
        report.push(Verdict::from_bool(
            "base_change_unimodular",
            product.is_identity() && basis.change().det().is_one(),
            "change of basis times its closed-form inverse is not the identity",
        ));
        report.dim("n", n);
        report.dim("rows", self.rows.len());
        report
    }
}
