//! Schur polynomials evaluated at a spectrum, and shifted Schur functions
//! evaluated at a partition.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};
use crate::linalg::{det, int_rat, Rational};
use crate::partition::Partition;

/// Non-negative rational eigenvalues, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<Rational>,
}

impl Spectrum {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.iter().any(|v| v.is_negative()) {
            return Err(invalid!("spectrum has a negative entry"));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid!("spectrum is not weakly decreasing"));
        }
        Ok(Spectrum { values })
    }

    /// `λ̄ = (λ_1/n, …, λ_d/n)`, padded with zeros to length `d`.
    pub fn normalized(lambda: &Partition, d: usize) -> Result<Self> {
        if lambda.rows() > d || lambda.is_empty() {
            return Err(invalid!("cannot normalize {lambda} to a spectrum of length {d}"));
        }
        let n = BigInt::from(lambda.size());
        let values = (0..d).map(|i| Rational::new(BigInt::from(lambda[i]), n.clone())).collect();
        Ok(Spectrum { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    fn distinct(&self) -> bool {
        self.values.windows(2).all(|w| w[0] != w[1])
    }
}

/// `s_μ(r)`. Uses the bialternant formula when the entries of `r` are
/// distinct and the tableau sum otherwise. Zero when μ has more rows than `r`.
pub fn schur_eval(mu: &Partition, r: &Spectrum) -> Rational {
    if mu.rows() > r.len() {
        return Rational::zero();
    }
    if r.distinct() {
        schur_bialternant(mu, r.values())
    } else {
        schur_tableaux(mu, r.values())
    }
}

/// `det[r_i^{μ_j + d − j}] / det[r_i^{d − j}]`. Requires distinct entries.
pub fn schur_bialternant(mu: &Partition, r: &[Rational]) -> Rational {
    let d = r.len();
    let power = |x: &Rational, e: usize| -> Rational {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc *= x;
        }
        acc
    };
    let num = (0..d).map(|i| (0..d).map(|j| power(&r[i], mu[j] + d - 1 - j)).collect()).collect();
    let den = (0..d).map(|i| (0..d).map(|j| power(&r[i], d - 1 - j)).collect()).collect();
    det(num) / det(den)
}

/// Sum over semistandard tableaux of shape μ with entries in `1..=d` of
/// `∏ r_entry`, organised by peeling off the horizontal strip holding the
/// largest entry.
pub fn schur_tableaux(mu: &Partition, r: &[Rational]) -> Rational {
    fn strips(shape: &[usize], row: usize, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        if row == shape.len() {
            let removed = shape.iter().zip(cur.iter()).map(|(a, b)| a - b).sum();
            out.push((cur.clone(), removed));
            return;
        }
        // the inner row may drop to the next outer row but no further
        let lo = shape.get(row + 1).copied().unwrap_or(0);
        for len in lo..=shape[row] {
            cur.push(len);
            strips(shape, row + 1, cur, out);
            cur.pop();
        }
    }
    fn go(shape: &[usize], r: &[Rational]) -> Rational {
        let rows = shape.iter().take_while(|&&x| x > 0).count();
        let shape = &shape[..rows];
        if shape.is_empty() {
            return Rational::one();
        }
        let Some((last, rest)) = r.split_last() else {
            return Rational::zero();
        };
        if rows > r.len() {
            return Rational::zero();
        }
        let mut out = Vec::new();
        strips(shape, 0, &mut Vec::new(), &mut out);
        let mut total = Rational::zero();
        for (inner, removed) in out {
            let mut weight = Rational::one();
            for _ in 0..removed {
                weight *= last;
            }
            if weight.is_zero() {
                continue;
            }
            total += weight * go(&inner, rest);
        }
        total
    }
    go(mu.parts(), r)
}

/// `n↓k = n(n−1)…(n−k+1)`; one for `k = 0`.
pub fn falling_factorial(n: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * (n - i))
}

/// Shifted Schur function `s*_μ(λ)` in `d` variables, as the ratio
/// `det[(λ_i + d − i)↓(μ_j + d − j)] / det[(λ_i + d − i)↓(d − j)]`.
/// Satisfies `f_λ s*_μ(λ) / (n↓k) = Σ_ν c^λ_{μν} f_ν`.
pub fn shifted_schur_eval(mu: &Partition, lambda: &Partition, d: usize) -> Result<Rational> {
    if mu.rows() > d || lambda.rows() > d {
        return Err(invalid!("shifted Schur s*_{mu}({lambda}) needs at least {} variables, got {d}", mu.rows().max(lambda.rows())));
    }
    let shifted: Vec<i64> = (0..d).map(|i| (lambda[i] + d - 1 - i) as i64).collect();
    let num = (0..d)
        .map(|i| (0..d).map(|j| int_rat(falling_factorial(shifted[i], mu[j] + d - 1 - j))).collect())
        .collect();
    let den = (0..d)
        .map(|i| (0..d).map(|j| int_rat(falling_factorial(shifted[i], d - 1 - j))).collect())
        .collect();
    Ok(det(num) / det(den))
}
