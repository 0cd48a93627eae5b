//! Univariate polynomials over the scalar field, stored low degree first,
//! and their roots in the field.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linear::{Field, Scalar};

pub(crate) type Poly = Vec<Scalar>;

/// Brute-force root search is used for prime fields up to this size.
const SMALL_PRIME: u64 = 5000;
/// Rational root search gives up above this absolute coefficient size.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;
const CANDIDATE_LIMIT: usize = 200_000;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    p.iter().rev().fold(field.zero(), |acc, c| &(&acc * x) + c)
}

fn divrem(a: &[Scalar], b: &[Scalar], field: Field) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let lead_inv = b
        .last()
        .expect("nonzero divisor")
        .inv()
        .expect("nonzero lead");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![field.zero(); r.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = &r[r.len() - 1] * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bc);
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn mul(a: &[Scalar], b: &[Scalar], field: Field) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn monic(p: Poly) -> Poly {
    let p = trim(p);
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero lead");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

fn gcd(a: &[Scalar], b: &[Scalar], field: Field) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b, field);
        a = b;
        b = r;
    }
    monic(a)
}

fn pow_mod(base: &[Scalar], mut e: u64, m: &[Scalar], field: Field) -> Poly {
    let mut acc = vec![field.one()];
    let mut b = divrem(base, m, field).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(&mul(&acc, &b, field), m, field).1;
        }
        b = divrem(&mul(&b, &b, field), m, field).1;
        e >>= 1;
    }
    acc
}

/// `p / (x - r)` for a root `r`.
pub(crate) fn deflate(p: &[Scalar], r: &Scalar) -> Poly {
    let field = r.field();
    let (q, rem) = divrem(p, &[-r, field.one()], field);
    debug_assert!(rem.is_empty(), "deflating by a non-root");
    q
}

pub(crate) fn compare(a: &Scalar, b: &Scalar) -> Ordering {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
        (Scalar::Modular { value: x, .. }, Scalar::Modular { value: y, .. }) => x.cmp(y),
        _ => panic!("mixed-field comparison"),
    }
}

/// The distinct roots of `p` lying in `field`, sorted. `None` when the search
/// cannot be completed within its size limits.
pub(crate) fn roots(field: Field, p: &[Scalar]) -> Option<Vec<Scalar>> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Some(Vec::new());
    }
    let mut out = match field {
        Field::Rational => rational_roots(&p)?,
        Field::Prime(q) if q <= SMALL_PRIME => field
            .elements(q)
            .expect("small field")
            .into_iter()
            .filter(|x| eval(&p, x).is_zero())
            .collect(),
        Field::Prime(q) => large_prime_roots(field, q, &p)?,
    };
    out.sort_by(compare);
    out.dedup();
    Some(out)
}

fn rational_roots(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut ratios = Vec::with_capacity(p.len());
    for c in p {
        match c {
            Scalar::Rational(r) => ratios.push(r.to_big()),
            Scalar::Modular { .. } => return None,
        }
    }
    let lcm = ratios
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = ratios
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let field = Field::Rational;
    let mut out = Vec::new();
    let low = ints
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if low > 0 {
        out.push(field.zero());
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        return Some(out);
    }
    let a0 = ints[0].abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let an = ints[ints.len() - 1]
        .abs()
        .to_u64()
        .filter(|&v| v <= DIVISOR_LIMIT)?;
    let nums = divisors(a0);
    let dens = divisors(an);
    if nums.len() * dens.len() * 2 > CANDIDATE_LIMIT {
        return None;
    }
    for n in &nums {
        for d in &dens {
            if n.gcd(d) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let num = BigInt::from(*n) * sign;
                let x = field
                    .from_ratio(&num, &BigInt::from(*d))
                    .expect("nonzero denominator");
                if eval(p, &x).is_zero() {
                    out.push(x);
                }
            }
        }
    }
    Some(out)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Roots over a large prime field: isolate the split part with
/// `gcd(f, x^q - x)`, then split it by `gcd(g, (x+a)^((q-1)/2) - 1)` for
/// successive shifts `a`.
fn large_prime_roots(field: Field, q: u64, p: &[Scalar]) -> Option<Vec<Scalar>> {
    let x = vec![field.zero(), field.one()];
    let xq = pow_mod(&x, q, p, field);
    let mut diff = xq;
    diff.resize(diff.len().max(2), field.zero());
    diff[1] = &diff[1] - &field.one();
    let split = gcd(p, &diff, field);
    let mut pending = vec![split];
    let mut out = Vec::new();
    let mut shift = 0i64;
    while let Some(g) = pending.pop() {
        match g.len() {
            0 | 1 => {}
            2 => out.push(-&(&g[0] * &g[1].inv().expect("monic"))),
            _ => {
                let mut done = false;
                for _ in 0..64 {
                    shift += 1;
                    let base = vec![field.from_i64(shift), field.one()];
                    let mut h = pow_mod(&base, (q - 1) / 2, &g, field);
                    if h.is_empty() {
                        h.push(field.zero());
                    }
                    h[0] = &h[0] - &field.one();
                    let d = gcd(&g, &h, field);
                    if d.len() > 1 && d.len() < g.len() {
                        let (other, _) = divrem(&g, &d, field);
                        pending.push(d);
                        pending.push(monic(other));
                        done = true;
                        break;
                    }
                }
                if !done {
                    return None;
                }
            }
        }
    }
    Some(out)
}
