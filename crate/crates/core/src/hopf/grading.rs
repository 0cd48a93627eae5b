use crate::error::{input, Result};

use super::group::FiniteGroup;

/// A finitely generated abelian group `ℤ^r × ℤ/n₁ × ... × ℤ/n_s`, standing in
/// for its group algebra: comodules over it are exactly graded vector spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// A degree: `r` integers followed by one residue per torsion factor.
pub type Degree = Vec<i64>;

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<GradingGroup> {
        if torsion.contains(&0) {
            return input("torsion orders must be positive");
        }
        Ok(GradingGroup { free_rank, torsion })
    }

    /// `ℤ`, the grading group of circle actions.
    pub fn integers() -> GradingGroup {
        GradingGroup {
            free_rank: 1,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Result<GradingGroup> {
        GradingGroup::new(0, vec![n])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn arity(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Reduces torsion components into `0..n`; rejects wrong arity.
    pub fn normalize(&self, d: &[i64]) -> Result<Degree> {
        if d.len() != self.arity() {
            return input(format!(
                "degree {d:?} has {} components, expected {}",
                d.len(),
                self.arity()
            ));
        }
        Ok(d.iter()
            .enumerate()
            .map(|(i, &x)| match i.checked_sub(self.free_rank) {
                Some(t) => x.rem_euclid(self.torsion[t] as i64),
                None => x,
            })
            .collect())
    }

    pub fn zero(&self) -> Degree {
        vec![0; self.arity()]
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Degree {
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.normalize(&sum).expect("same arity")
    }

    pub fn neg(&self, a: &[i64]) -> Degree {
        let n: Vec<i64> = a.iter().map(|x| -x).collect();
        self.normalize(&n).expect("same arity")
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Degree {
        self.add(a, &self.neg(b))
    }

    /// The finite group this grading group equals, when it is finite.
    pub fn to_finite_group(&self) -> Option<FiniteGroup> {
        if !self.is_finite() {
            return None;
        }
        match self.torsion.as_slice() {
            [n] => FiniteGroup::cyclic(*n as usize).ok(),
            _ => {
                let orders: Vec<usize> = self.torsion.iter().map(|&n| n as usize).collect();
                FiniteGroup::abelian(&orders).ok()
            }
        }
    }

    /// Index of a degree among the elements of [`GradingGroup::to_finite_group`].
    pub fn element_index(&self, d: &[i64]) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        let orders: Vec<usize> = self.torsion.iter().map(|&n| n as usize).collect();
        let idx: Vec<usize> = self
            .normalize(d)
            .ok()?
            .iter()
            .map(|&x| x as usize)
            .collect();
        Some(crate::linear::tensor::flat_index(&orders, &idx))
    }
}
