use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `ℤ[x]/(x^{n+1})` in the monomial basis `1, x, …, xⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    coeffs: Vec<BigInt>,
}

impl TruncatedPoly {
    /// Reduces `coeffs` modulo `x^{n+1}`, padding with zeros.
    pub fn new(n: usize, mut coeffs: Vec<BigInt>) -> TruncatedPoly {
        coeffs.resize(n + 1, BigInt::zero());
        TruncatedPoly { coeffs }
    }

    pub fn from_i64(n: usize, coeffs: &[i64]) -> TruncatedPoly {
        TruncatedPoly::new(n, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> TruncatedPoly {
        TruncatedPoly::new(n, Vec::new())
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> TruncatedPoly {
        TruncatedPoly::new(n, vec![c.into()])
    }

    pub fn one(n: usize) -> TruncatedPoly {
        TruncatedPoly::constant(n, 1)
    }

    pub fn x(n: usize) -> TruncatedPoly {
        TruncatedPoly::from_i64(n, &[0, 1])
    }

    pub fn one_plus_x(n: usize) -> TruncatedPoly {
        TruncatedPoly::from_i64(n, &[1, 1])
    }

    /// `(1+x)^k` for any integer `k`.
    pub fn one_plus_x_pow(n: usize, k: i64) -> TruncatedPoly {
        let base = if k >= 0 {
            TruncatedPoly::one_plus_x(n)
        } else {
            TruncatedPoly::one_plus_x(n)
                .inverse()
                .expect("1+x is a unit")
        };
        base.pow(k.unsigned_abs())
    }

    /// The truncation degree `n`.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, mut k: u64) -> TruncatedPoly {
        let mut out = TruncatedPoly::one(self.n());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    /// The inverse, when the constant term is `±1`, by solving
    /// `a·b = 1` one coefficient at a time.
    pub fn inverse(&self) -> Option<TruncatedPoly> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return None;
        }
        // a0 = ±1 is its own inverse.
        let mut b: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        b.push(a0.clone());
        for k in 1..self.coeffs.len() {
            let s: BigInt = (1..=k).map(|i| &self.coeffs[i] * &b[k - i]).sum();
            b.push(-(a0 * s));
        }
        Some(TruncatedPoly { coeffs: b })
    }

    fn check_same(&self, other: &TruncatedPoly) {
        assert_eq!(
            self.n(),
            other.n(),
            "truncated polynomials of different degree"
        );
    }
}

impl Add for &TruncatedPoly {
    type Output = TruncatedPoly;

    fn add(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        self.check_same(rhs);
        TruncatedPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Neg for &TruncatedPoly {
    type Output = TruncatedPoly;

    fn neg(self) -> TruncatedPoly {
        TruncatedPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Sub for &TruncatedPoly {
    type Output = TruncatedPoly;

    fn sub(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedPoly {
    type Output = TruncatedPoly;

    fn mul(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        self.check_same(rhs);
        let len = self.coeffs.len();
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..len - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedPoly { coeffs: out }
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            first = false;
            let c = c.abs();
            match (e, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{c}x^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
