use super::mat::Mat;
use super::scalar::{Field, Scalar};

/// Outcome of a bounded existence search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// An explicit witness.
    Found(Mat),
    /// Certified: no witness exists.
    NoneExists,
    /// The bound was exhausted before a decision.
    Undecided,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Searches the linear span of `candidates` for an invertible matrix.
///
/// `det(Σ cᵢ Mᵢ)` is a polynomial of degree at most `n` in each `cᵢ`, so it
/// vanishes identically iff it vanishes on the grid `{0..n}^k` of distinct
/// field elements. The grid is enumerated exhaustively when it has at most
/// `bound` points; otherwise only `bound` points are tried and a miss is
/// reported as undecided.
pub fn find_invertible_in_span(candidates: &[Mat], bound: usize) -> SearchOutcome {
    let Some(first) = candidates.first() else {
        return SearchOutcome::NoneExists;
    };
    if !first.is_square() {
        return SearchOutcome::NoneExists;
    }
    let field = first.field();
    let n = first.rows();
    let k = candidates.len();
    if n == 0 {
        return SearchOutcome::Found(Mat::identity(field, 0));
    }

    // Single candidates first: these give the most readable witnesses.
    for c in candidates {
        if c.det().map(|d| !d.is_zero()).unwrap_or(false) {
            return SearchOutcome::Found(c.clone());
        }
    }

    let values: Vec<Scalar> = match field {
        Field::Prime(p) if p < (n as u64) + 1 => field.elements(p).expect("small prime field"),
        _ => (0..=n as i64).map(|v| field.from_i64(v)).collect(),
    };
    let base = values.len();
    let grid_size = (base as u128).checked_pow(k as u32);
    let exhaustive = matches!(grid_size, Some(g) if g <= bound as u128);
    let budget = if exhaustive {
        grid_size.unwrap() as usize
    } else {
        bound
    };

    let combine = |digits: &[usize]| {
        let mut acc = Mat::zeros(field, n, n);
        for (d, m) in digits.iter().zip(candidates) {
            if *d != 0 {
                acc = acc.add(&m.scale(&values[*d]));
            }
        }
        acc
    };

    let mut digits = vec![0usize; k];
    for _ in 0..budget {
        let m = combine(&digits);
        if m.det().map(|d| !d.is_zero()).unwrap_or(false) {
            return SearchOutcome::Found(m);
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < base {
                break;
            }
            *d = 0;
        }
    }
    if exhaustive {
        SearchOutcome::NoneExists
    } else {
        SearchOutcome::Undecided
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn finds_combination_when_no_single_candidate_is_invertible() {
        let a = Mat::from_i64_rows(Q, &[&[1, 0], &[0, 0]]);
        let b = Mat::from_i64_rows(Q, &[&[0, 0], &[0, 1]]);
        match find_invertible_in_span(&[a, b], 100) {
            SearchOutcome::Found(m) => assert!(!m.det().unwrap().is_zero()),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn certifies_absence() {
        let a = Mat::from_i64_rows(Q, &[&[1, 0], &[0, 0]]);
        let b = Mat::from_i64_rows(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(
            find_invertible_in_span(&[a, b], 100),
            SearchOutcome::NoneExists
        );
    }

    #[test]
    fn small_bound_is_undecided() {
        let a = Mat::from_i64_rows(Q, &[&[1, 0], &[0, 0]]);
        let b = Mat::from_i64_rows(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(
            find_invertible_in_span(&[a, b], 2),
            SearchOutcome::Undecided
        );
    }
}
