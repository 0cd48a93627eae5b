use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{input, Result};
use crate::hopf::FiniteGroup;
use crate::report::{Report, Verdict};

use super::atiyah_todd::{ring_map, KClassVector, ShiftedBasis};
use super::laurent::LaurentPoly;
use super::truncated::TruncatedPoly;

/// A ring that is free of finite rank over `ℤ`, by structure constants:
/// `products[i][j]` is `eᵢeⱼ` in the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntAlgebra {
    names: Vec<String>,
    products: Vec<Vec<Vec<BigInt>>>,
    unit: Vec<BigInt>,
}

impl IntAlgebra {
    pub fn new(
        names: Vec<String>,
        products: Vec<Vec<Vec<BigInt>>>,
        unit: Vec<BigInt>,
    ) -> Result<IntAlgebra> {
        let r = names.len();
        let shaped = products.len() == r
            && products
                .iter()
                .all(|row| row.len() == r && row.iter().all(|v| v.len() == r))
            && unit.len() == r;
        if !shaped {
            return input(format!(
                "structure constants of a rank-{r} ring have the wrong shape"
            ));
        }
        let a = IntAlgebra {
            names,
            products,
            unit,
        };
        let basis: Vec<Vec<BigInt>> = (0..r).map(|i| a.basis(i)).collect();
        for x in &basis {
            if a.mul(&a.unit, x) != *x || a.mul(x, &a.unit) != *x {
                return input("the unit is not a two-sided unit");
            }
            for y in &basis {
                for z in &basis {
                    if a.mul(&a.mul(x, y), z) != a.mul(x, &a.mul(y, z)) {
                        return input("multiplication is not associative");
                    }
                }
            }
        }
        Ok(a)
    }

    /// `ℤ` itself.
    pub fn integers() -> IntAlgebra {
        IntAlgebra {
            names: vec!["1".into()],
            products: vec![vec![vec![BigInt::one()]]],
            unit: vec![BigInt::one()],
        }
    }

    /// The group ring `ℤ[G]`.
    pub fn group_ring(g: &FiniteGroup) -> IntAlgebra {
        let n = g.order();
        let products = (0..n)
            .map(|a| (0..n).map(|b| unit_vector(n, g.mul(a, b))).collect())
            .collect();
        IntAlgebra {
            names: g.names().to_vec(),
            products,
            unit: unit_vector(n, g.identity()),
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis(&self, i: usize) -> Vec<BigInt> {
        unit_vector(self.rank(), i)
    }

    pub fn unit(&self) -> &[BigInt] {
        &self.unit
    }

    pub fn mul(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.products[i][j]) {
                    *o += &ab * c;
                }
            }
        }
        out
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// The rings an augmented ring can be built on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    /// `ℤ[t, t⁻¹]`.
    Laurent,
    /// `ℤ[x]/(x^{n+1})`.
    Truncated(usize),
    Finite(IntAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElem {
    Laurent(LaurentPoly),
    Truncated(TruncatedPoly),
    Finite(Vec<BigInt>),
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Laurent(p) => write!(f, "{p}"),
            RingElem::Truncated(p) => write!(f, "{p}"),
            RingElem::Finite(v) => {
                let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

impl Ring {
    pub fn integers() -> Ring {
        Ring::Finite(IntAlgebra::integers())
    }

    pub fn one(&self) -> RingElem {
        match self {
            Ring::Laurent => RingElem::Laurent(LaurentPoly::one()),
            Ring::Truncated(n) => RingElem::Truncated(TruncatedPoly::one(*n)),
            Ring::Finite(a) => RingElem::Finite(a.unit().to_vec()),
        }
    }

    pub fn zero(&self) -> RingElem {
        match self {
            Ring::Laurent => RingElem::Laurent(LaurentPoly::zero()),
            Ring::Truncated(n) => RingElem::Truncated(TruncatedPoly::zero(*n)),
            Ring::Finite(a) => RingElem::Finite(vec![BigInt::zero(); a.rank()]),
        }
    }

    pub fn contains(&self, x: &RingElem) -> bool {
        match (self, x) {
            (Ring::Laurent, RingElem::Laurent(_)) => true,
            (Ring::Truncated(n), RingElem::Truncated(p)) => p.n() == *n,
            (Ring::Finite(a), RingElem::Finite(v)) => v.len() == a.rank(),
            _ => false,
        }
    }

    pub fn add(&self, x: &RingElem, y: &RingElem) -> RingElem {
        match (x, y) {
            (RingElem::Laurent(a), RingElem::Laurent(b)) => RingElem::Laurent(a + b),
            (RingElem::Truncated(a), RingElem::Truncated(b)) => RingElem::Truncated(a + b),
            (RingElem::Finite(a), RingElem::Finite(b)) => {
                RingElem::Finite(a.iter().zip(b).map(|(p, q)| p + q).collect())
            }
            _ => panic!("adding elements of different rings"),
        }
    }

    pub fn mul(&self, x: &RingElem, y: &RingElem) -> RingElem {
        match (self, x, y) {
            (Ring::Laurent, RingElem::Laurent(a), RingElem::Laurent(b)) => RingElem::Laurent(a * b),
            (Ring::Truncated(_), RingElem::Truncated(a), RingElem::Truncated(b)) => {
                RingElem::Truncated(a * b)
            }
            (Ring::Finite(r), RingElem::Finite(a), RingElem::Finite(b)) => {
                RingElem::Finite(r.mul(a, b))
            }
            _ => panic!("multiplying elements outside the ring"),
        }
    }

    /// Rank of the additive group, `None` when it is not finitely generated.
    pub fn additive_rank(&self) -> Option<usize> {
        match self {
            Ring::Laurent => None,
            Ring::Truncated(n) => Some(n + 1),
            Ring::Finite(a) => Some(a.rank()),
        }
    }

    /// A fixed list of elements used to test identities pointwise.
    pub fn samples(&self) -> Vec<RingElem> {
        match self {
            Ring::Laurent => [
                LaurentPoly::one(),
                LaurentPoly::t(),
                LaurentPoly::monomial(1, -1),
                &LaurentPoly::monomial(2, 0) - &LaurentPoly::monomial(1, 2),
                &LaurentPoly::monomial(3, 3) + &LaurentPoly::monomial(-1, -2),
            ]
            .into_iter()
            .map(RingElem::Laurent)
            .collect(),
            Ring::Truncated(n) => [
                TruncatedPoly::one(*n),
                TruncatedPoly::x(*n),
                TruncatedPoly::one_plus_x(*n),
                TruncatedPoly::from_i64(*n, &[3, 0, -1]),
                TruncatedPoly::from_i64(*n, &[-2, 5, 1, 4]),
            ]
            .into_iter()
            .map(RingElem::Truncated)
            .collect(),
            Ring::Finite(a) => {
                let mut out: Vec<RingElem> = (0..a.rank())
                    .map(|i| RingElem::Finite(a.basis(i)))
                    .collect();
                out.push(RingElem::Finite(
                    (0..a.rank())
                        .map(|i| BigInt::from(i as i64 * 2 - 1))
                        .collect(),
                ));
                out
            }
        }
    }
}

/// The module of an augmented ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleModel {
    /// The ring acting on itself.
    Regular,
    /// `K⁰` of projective `n`-space in the shifted basis, with `ℤ[t,t⁻¹]`
    /// acting through `t ↦ 1+x`.
    ShiftedK(usize),
    /// `ℤ` with a finite ring acting through the ring map given by the
    /// images of the basis.
    Scalar(Vec<BigInt>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleElem {
    Ring(RingElem),
    Class(KClassVector),
    Scalar(BigInt),
}

impl fmt::Display for ModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleElem::Ring(r) => write!(f, "{r}"),
            ModuleElem::Class(v) => write!(f, "{v}"),
            ModuleElem::Scalar(s) => write!(f, "{s}"),
        }
    }
}

/// A ring, a module over it and a distinguished element of the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedRing {
    ring: Ring,
    module: ModuleModel,
    one: ModuleElem,
}

impl AugmentedRing {
    pub fn new(ring: Ring, module: ModuleModel, one: ModuleElem) -> Result<AugmentedRing> {
        let fits = match (&ring, &module, &one) {
            (r, ModuleModel::Regular, ModuleElem::Ring(x)) => r.contains(x),
            (Ring::Laurent, ModuleModel::ShiftedK(n), ModuleElem::Class(v)) => v.n() == *n,
            (Ring::Finite(a), ModuleModel::Scalar(w), ModuleElem::Scalar(_)) => w.len() == a.rank(),
            _ => false,
        };
        if !fits {
            return input("ring, module and distinguished element do not match");
        }
        Ok(AugmentedRing { ring, module, one })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn module(&self) -> &ModuleModel {
        &self.module
    }

    pub fn one(&self) -> &ModuleElem {
        &self.one
    }

    pub fn act(&self, r: &RingElem, m: &ModuleElem) -> ModuleElem {
        match (&self.module, r, m) {
            (ModuleModel::Regular, _, ModuleElem::Ring(x)) => ModuleElem::Ring(self.ring.mul(r, x)),
            (ModuleModel::ShiftedK(n), RingElem::Laurent(p), ModuleElem::Class(v)) => {
                ModuleElem::Class(ShiftedBasis::new(*n).act(p, v))
            }
            (ModuleModel::Scalar(w), RingElem::Finite(x), ModuleElem::Scalar(s)) => {
                let image: BigInt = x.iter().zip(w).map(|(a, b)| a * b).sum();
                ModuleElem::Scalar(image * s)
            }
            _ => panic!("acting with an element outside the ring or module"),
        }
    }

    /// Images `r·𝟙` of the ring samples, a generating set of module samples.
    pub fn module_samples(&self) -> Vec<ModuleElem> {
        self.ring
            .samples()
            .iter()
            .map(|r| self.act(r, &self.one))
            .collect()
    }

    /// Unit and associativity of the action on samples.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let rs = self.ring.samples();
        let ms = self.module_samples();
        let one = self.ring.one();
        let unital = ms.iter().find(|m| self.act(&one, m) != **m);
        report.push(Verdict::from_bool(
            "action_unital",
            unital.is_none(),
            unital.map(ToString::to_string).unwrap_or_default(),
        ));
        let mut witness = None;
        'outer: for a in &rs {
            for b in &rs {
                for m in &ms {
                    if self.act(&self.ring.mul(a, b), m) != self.act(a, &self.act(b, m)) {
                        witness = Some(format!("({a})·({b}) on {m}"));
                        break 'outer;
                    }
                }
            }
        }
        report.push(match witness {
            None => Verdict::pass("action_associative"),
            Some(w) => Verdict::fail("action_associative", w),
        });
        report
    }

    /// Rank of the underlying abelian group of the module.
    pub fn forget(&self) -> Option<usize> {
        match &self.module {
            ModuleModel::Regular => self.ring.additive_rank(),
            ModuleModel::ShiftedK(n) => Some(n + 1),
            ModuleModel::Scalar(_) => Some(1),
        }
    }
}

/// The embedding of rings: `R ↦ (R, R, 1)`.
pub fn augment(ring: Ring) -> AugmentedRing {
    let one = ModuleElem::Ring(ring.one());
    AugmentedRing {
        ring,
        module: ModuleModel::Regular,
        one,
    }
}

/// The coreflector: an augmented ring's ring.
pub fn coreflect(a: &AugmentedRing) -> Ring {
    a.ring.clone()
}

/// `(ℤ[t,t⁻¹], K⁰(ℂPⁿ), [L₀])`.
pub fn projective_space(n: usize) -> AugmentedRing {
    AugmentedRing {
        ring: Ring::Laurent,
        module: ModuleModel::ShiftedK(n),
        one: ModuleElem::Class(KClassVector::basis(n, 0)),
    }
}

type RingFn = Arc<dyn Fn(&RingElem) -> RingElem + Send + Sync>;
type ModuleFn = Arc<dyn Fn(&ModuleElem) -> ModuleElem + Send + Sync>;

/// A ring map together with a module map over it.
#[derive(Clone)]
pub struct AugmentedMorphism {
    pub source: AugmentedRing,
    pub target: AugmentedRing,
    ring_map: RingFn,
    module_map: ModuleFn,
}

impl fmt::Debug for AugmentedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AugmentedMorphism")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl AugmentedMorphism {
    pub fn new(
        source: AugmentedRing,
        target: AugmentedRing,
        ring_map: impl Fn(&RingElem) -> RingElem + Send + Sync + 'static,
        module_map: impl Fn(&ModuleElem) -> ModuleElem + Send + Sync + 'static,
    ) -> AugmentedMorphism {
        AugmentedMorphism {
            source,
            target,
            ring_map: Arc::new(ring_map),
            module_map: Arc::new(module_map),
        }
    }

    pub fn identity(a: &AugmentedRing) -> AugmentedMorphism {
        AugmentedMorphism::new(a.clone(), a.clone(), RingElem::clone, ModuleElem::clone)
    }

    /// `ℒ(f)` for a ring map `f`.
    pub fn augment(
        source: Ring,
        target: Ring,
        f: impl Fn(&RingElem) -> RingElem + Send + Sync + 'static,
    ) -> AugmentedMorphism {
        let f: RingFn = Arc::new(f);
        let g = f.clone();
        AugmentedMorphism {
            source: augment(source),
            target: augment(target),
            ring_map: f,
            module_map: Arc::new(move |m| match m {
                ModuleElem::Ring(r) => ModuleElem::Ring(g(r)),
                _ => panic!("module element outside the ring"),
            }),
        }
    }

    /// The counit `ℒℛ(X) → X`: identity on the ring, `r ↦ r·𝟙` on modules.
    pub fn counit(a: &AugmentedRing) -> AugmentedMorphism {
        let target = a.clone();
        let acting = a.clone();
        AugmentedMorphism::new(
            augment(a.ring.clone()),
            target,
            RingElem::clone,
            move |m| match m {
                ModuleElem::Ring(r) => acting.act(r, &acting.one),
                _ => panic!("module element outside the ring"),
            },
        )
    }

    pub fn apply_ring(&self, r: &RingElem) -> RingElem {
        (self.ring_map)(r)
    }

    pub fn apply_module(&self, m: &ModuleElem) -> ModuleElem {
        (self.module_map)(m)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AugmentedMorphism) -> Result<AugmentedMorphism> {
        if first.target != self.source {
            return input("augmented-ring morphisms are not composable");
        }
        let (f1, f2) = (first.ring_map.clone(), self.ring_map.clone());
        let (g1, g2) = (first.module_map.clone(), self.module_map.clone());
        Ok(AugmentedMorphism::new(
            first.source.clone(),
            self.target.clone(),
            move |r| f2(&f1(r)),
            move |m| g2(&g1(m)),
        ))
    }

    /// Ring-map laws, semilinearity of the module map and `𝟙 ↦ 𝟙`, on samples.
    pub fn check(&self) -> Report {
        let (s, t) = (&self.source, &self.target);
        let rs = s.ring.samples();
        let ms = s.module_samples();
        let mut report = Report::new();
        report.push(Verdict::from_bool(
            "ring_map_unital",
            self.apply_ring(&s.ring.one()) == t.ring.one(),
            format!("1 ↦ {}", self.apply_ring(&s.ring.one())),
        ));
        let mut ring_witness = None;
        'ring: for a in &rs {
            for b in &rs {
                let mul = self.apply_ring(&s.ring.mul(a, b))
                    == t.ring.mul(&self.apply_ring(a), &self.apply_ring(b));
                let add = self.apply_ring(&s.ring.add(a, b))
                    == t.ring.add(&self.apply_ring(a), &self.apply_ring(b));
                if !(mul && add) {
                    ring_witness = Some(format!("({a}, {b})"));
                    break 'ring;
                }
            }
        }
        report.push(match ring_witness {
            None => Verdict::pass("ring_map_homomorphic"),
            Some(w) => Verdict::fail("ring_map_homomorphic", w),
        });
        let mut module_witness = None;
        'module: for r in &rs {
            for m in &ms {
                if self.apply_module(&s.act(r, m))
                    != t.act(&self.apply_ring(r), &self.apply_module(m))
                {
                    module_witness = Some(format!("({r})·{m}"));
                    break 'module;
                }
            }
        }
        report.push(match module_witness {
            None => Verdict::pass("module_map_semilinear"),
            Some(w) => Verdict::fail("module_map_semilinear", w),
        });
        report.push(Verdict::from_bool(
            "preserves_one",
            self.apply_module(&s.one) == t.one,
            format!("𝟙 ↦ {}", self.apply_module(&s.one)),
        ));
        report
    }
}

/// `ℤ[t,t⁻¹] → ℤ[x]/(x^{n+1})`, `t ↦ 1+x`, as a map of rings.
pub fn laurent_to_truncated(n: usize) -> impl Fn(&RingElem) -> RingElem + Send + Sync + 'static {
    move |r| match r {
        RingElem::Laurent(p) => RingElem::Truncated(ring_map(p, n)),
        _ => panic!("expected a Laurent polynomial"),
    }
}

/// `ℤ[x]/(x^{n+1}) → ℤ[x]/(x^{m+1})` for `m ≤ n`.
pub fn truncate(m: usize) -> impl Fn(&RingElem) -> RingElem + Send + Sync + 'static {
    move |r| match r {
        RingElem::Truncated(p) => {
            RingElem::Truncated(TruncatedPoly::new(m, p.coeffs()[..=m.min(p.n())].to_vec()))
        }
        _ => panic!("expected a truncated polynomial"),
    }
}
