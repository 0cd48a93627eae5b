use crate::error::{input, Result};

/// Largest group order accepted by the builders; the group algebra's
/// multiplication matrix has `order³` entries.
pub const MAX_GROUP_ORDER: usize = 64;

/// A finite group as a validated Cayley table. Element 0 is not assumed to
/// be the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = names.len();
        if n == 0 {
            return input("group must be non-empty");
        }
        if n > MAX_GROUP_ORDER {
            return input(format!(
                "group order {n} exceeds the bound {MAX_GROUP_ORDER}"
            ));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return input("group element names must be unique");
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return input(format!("Cayley table must be {n}x{n}"));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return input("Cayley table entry out of range");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return input(format!(
                            "group law not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        ));
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        else {
            return input("group has no identity element");
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return input(format!("element {} has no inverse", names[a])),
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).expect("trivial group")
    }

    /// `ℤ/n` with elements `e, g, g^2, ...`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return input("cyclic group order must be positive");
        }
        let names = (0..n).map(|k| power_name("g", k)).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(names, table)
    }

    /// `ℤ/n₁ × ... × ℤ/n_r`, elements ordered lexicographically and named by exponent tuples.
    pub fn abelian(orders: &[usize]) -> Result<FiniteGroup> {
        if orders.contains(&0) {
            return input("cyclic factor orders must be positive");
        }
        let total: usize = orders.iter().product();
        if total > MAX_GROUP_ORDER {
            return input(format!(
                "group order {total} exceeds the bound {MAX_GROUP_ORDER}"
            ));
        }
        let elems: Vec<Vec<usize>> = (0..total)
            .map(|f| crate::linear::tensor::multi_index(orders, f))
            .collect();
        let names = elems
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let sum: Vec<usize> = a
                            .iter()
                            .zip(b)
                            .zip(orders)
                            .map(|((x, y), n)| (x + y) % n)
                            .collect();
                        crate::linear::tensor::flat_index(orders, &sum)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(names, table)
    }

    /// The symmetric group on `n` letters, elements in lexicographic order of
    /// their one-line notation and named in cycle notation. `(σ·τ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            perms.push(current.clone());
            if perms.len() > MAX_GROUP_ORDER {
                return input(format!(
                    "S_{n} exceeds the group order bound {MAX_GROUP_ORDER}"
                ));
            }
            if !next_permutation(&mut current) {
                break;
            }
        }
        let index = |p: &[usize]| {
            perms
                .iter()
                .position(|q| q == p)
                .expect("closed under composition")
        };
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        index(&st)
                    })
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        FiniteGroup::from_table(names, table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// True when `images[i]` defines a group homomorphism into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroup, images: &[usize]) -> bool {
        let n = self.order();
        images.len() == n
            && images.iter().all(|&x| x < target.order())
            && (0..n)
                .all(|a| (0..n).all(|b| images[self.mul(a, b)] == target.mul(images[a], images[b])))
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "e".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three() {
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.names()[g.identity()], "e");
        assert!(g.names().contains(&"(123)".to_string()));
    }

    #[test]
    fn rejects_non_associative_table() {
        let names = vec!["a".to_string(), "b".to_string()];
        let table = vec![vec![1, 0], vec![0, 0]];
        assert!(FiniteGroup::from_table(names, table).is_err());
    }

    #[test]
    fn quotient_homomorphism() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(z4.is_homomorphism(&z2, &[0, 1, 0, 1]));
        assert!(!z4.is_homomorphism(&z2, &[0, 1, 1, 1]));
    }

    #[test]
    fn abelian_product() {
        let g = FiniteGroup::abelian(&[2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.inverse(1), 2);
    }
}
