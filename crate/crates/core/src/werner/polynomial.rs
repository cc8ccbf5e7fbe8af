use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json::{int_from_json, int_to_json};

/// Univariate polynomial in `q` with integer coefficients, stored in
/// ascending powers with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The linear factor `q − root`.
    pub fn linear(root: i64) -> Self {
        IntPolynomial::from_i64(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// `p(−q)`.
    pub fn negate_argument(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// All integer roots. Non-zero roots divide the lowest non-zero
    /// coefficient; zero is a root when the constant term vanishes.
    pub fn integer_roots(&self) -> Vec<i64> {
        let Some(low) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(0);
        }
        let a = self.coeffs[low].abs();
        // any integer root r satisfies |r| ≤ 1 + max|a_i / a_top|
        let top = self.coeffs.last().unwrap().abs();
        let cauchy = self.coeffs.iter().map(|c| c.abs() / &top).max().unwrap_or_default() + 1u32;
        let limit = a.clone().min(cauchy);
        let mut r = BigInt::one();
        while r <= limit {
            if (&a % &r).is_zero() {
                for cand in [r.clone(), -r.clone()] {
                    if self.eval(&cand).is_zero() {
                        roots.push(i64::try_from(&cand).expect("root fits in i64"));
                    }
                }
            }
            r += 1u32;
        }
        roots.sort_unstable();
        roots
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(int_to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial must be a coefficient array".into()))?;
        Ok(IntPolynomial::new(arr.iter().map(int_from_json).collect::<Result<_>>()?))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, e.g. `16q^5-40q^4+20q^3-20q^2+24q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}
