use hopfgal_core::kring::{
    at_base_change, at_base_change_inverse, line_class, primary_identity, secondary_identity,
    IntMat,
};
use num_bigint::BigInt;

/// Rows `0..=n` of Pascal's triangle by repeated addition.
fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::from(1); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

fn signed(k: usize, c: &BigInt) -> BigInt {
    if k.is_multiple_of(2) {
        c.clone()
    } else {
        -c
    }
}

#[test]
fn identities_match_pascal_oracle_up_to_64() {
    let binom = pascal(65);
    for n in 0..=64usize {
        let primary: Vec<BigInt> = (0..=n).map(|k| signed(n - k, &binom[n + 1][k])).collect();
        let secondary: Vec<BigInt> = (0..=n).map(|k| signed(k, &binom[n + 1][k + 1])).collect();
        assert_eq!(
            line_class(n, n as i64 + 1).coords(),
            primary.as_slice(),
            "n = {n}"
        );
        assert_eq!(primary_identity(n).coords(), primary.as_slice(), "n = {n}");
        assert_eq!(line_class(n, -1).coords(), secondary.as_slice(), "n = {n}");
        assert_eq!(
            secondary_identity(n).coords(),
            secondary.as_slice(),
            "n = {n}"
        );
    }
}

#[test]
fn base_change_columns_are_binomial_rows() {
    let binom = pascal(64);
    for n in [0usize, 1, 7, 32, 64] {
        let expected = IntMat::from_fn(n + 1, n + 1, |j, k| {
            if j <= k {
                binom[k][j].clone()
            } else {
                BigInt::from(0)
            }
        });
        assert_eq!(at_base_change(n), expected);
        assert!(expected.mul(&at_base_change_inverse(n)).is_identity());
    }
}
