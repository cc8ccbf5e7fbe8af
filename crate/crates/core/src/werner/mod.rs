//! Symmetric Werner states on `(C^d)^{⊗n}` as weight vectors in the basis of
//! normalized Schur–Weyl projectors `ρ_μ = P_μ / (e^d_μ f_μ)`.
//!
//! Because the `ρ_μ` have mutually orthogonal supports, every map in this
//! module is a map between weight vectors, and the trace distance between two
//! such states is the `ℓ¹` distance of their weights.

mod bounds;
mod charpoly;
mod polynomial;

pub use bounds::{
    definetti_bound_dual, definetti_bound_dual_leading, definetti_bound_sym, distinct_weight_fraction,
    unitary_ratio_lower_bound,
};
pub use charpoly::{
    character_polynomial, marginal_feasible, render_table_csv, render_table_plain, root_range, table5,
    table_from_json, table_to_json, RootRange, TableRow,
};
pub use polynomial::IntPolynomial;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::characters::{dim_sym, dim_unitary, mn_character};
use crate::error::{invalid, Error, Result};
use crate::json::{int_from_json, int_to_json, rational_string};
use crate::linalg::{int_rat, Rational};
use crate::partition::{class_size, factorial, partitions_of, Partition};
use crate::symfunc::{falling_factorial, schur_eval, shifted_schur_eval, Spectrum};

/// Coefficients `a_μ` of `Σ_μ a_μ ρ_μ` over `μ ∈ Par(n, d)`, stored in the
/// canonical partition order. Operators such as the symmetrised cycle
/// operators may carry negative weights; they are not states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WernerWeights {
    n: usize,
    d: usize,
    weights: Vec<(Partition, Rational)>,
}

impl WernerWeights {
    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(&Partition) -> Result<Rational>) -> Result<Self> {
        let weights = partitions_of(n, d)
            .into_iter()
            .map(|mu| {
                let w = f(&mu)?;
                Ok((mu, w))
            })
            .collect::<Result<_>>()?;
        Ok(WernerWeights { n, d, weights })
    }

    /// Unit weight on `lambda`.
    pub fn point_mass(lambda: &Partition, d: usize) -> Result<Self> {
        if lambda.rows() > d {
            return Err(invalid!("{lambda} has more than {d} rows"));
        }
        WernerWeights::from_fn(lambda.size(), d, |mu| Ok(int_rat(BigInt::from((mu == lambda) as u8))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weights(&self) -> &[(Partition, Rational)] {
        &self.weights
    }

    pub fn get(&self, mu: &Partition) -> Rational {
        self.weights
            .iter()
            .find(|(p, _)| p == mu)
            .map(|(_, w)| w.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// `Σ_μ a_μ`, the trace of the represented operator.
    pub fn total(&self) -> Rational {
        self.weights.iter().map(|(_, w)| w).sum()
    }

    /// Non-negative weights summing to one.
    pub fn is_state(&self) -> bool {
        self.total() == Rational::from_integer(1.into()) && self.weights.iter().all(|(_, w)| !w.is_negative())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "d": self.d,
            "weights": self.weights.iter().map(|(p, w)| json!({
                "partition": p,
                "num": int_to_json(w.numer()),
                "den": int_to_json(w.denom()),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("Werner weights JSON: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let d = v["d"].as_u64().ok_or_else(|| bad("missing d"))? as usize;
        let entries = v["weights"].as_array().ok_or_else(|| bad("missing weights"))?;
        let mut parsed = Vec::with_capacity(entries.len());
        for e in entries {
            let p: Partition = serde_json::from_value(e["partition"].clone()).map_err(|e| bad(&e.to_string()))?;
            let den = int_from_json(&e["den"])?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            parsed.push((p, Rational::new(int_from_json(&e["num"])?, den)));
        }
        let w = WernerWeights::from_fn(n, d, |mu| {
            Ok(parsed.iter().find(|(p, _)| p == mu).map(|(_, w)| w.clone()).unwrap_or_default())
        })?;
        if parsed.iter().any(|(p, _)| p.size() != n || p.rows() > d) {
            return Err(bad("partition outside Par(n, d)"));
        }
        Ok(w)
    }
}

impl fmt::Display for WernerWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|(p, w)| format!("{p}: {}", rational_string(w))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `Σ_μ |a_μ − b_μ|`: the trace norm of the difference, unhalved, so
/// orthogonal states sit at distance 2.
pub fn trace_distance(a: &WernerWeights, b: &WernerWeights) -> Result<Rational> {
    if (a.n, a.d) != (b.n, b.d) {
        return Err(invalid!("trace distance between (n,d) = ({},{}) and ({},{})", a.n, a.d, b.n, b.d));
    }
    Ok(a.weights
        .iter()
        .zip(&b.weights)
        .map(|((_, x), (_, y))| (x - y).abs())
        .sum())
}

/// `I/d^n = Σ_μ (e^d_μ f_μ / d^n) ρ_μ`.
pub fn fully_mixed(n: usize, d: usize) -> Result<WernerWeights> {
    let total = BigInt::from(d).pow(n as u32);
    WernerWeights::from_fn(n, d, |mu| Ok(Rational::new(dim_unitary(mu, d) * dim_sym(mu), total.clone())))
}

/// Reduced state of `ρ_λ` on the first `k` of `n` subsystems:
/// `a_μ = f_μ Σ_ν c^λ_{μν} f_ν / f_λ = f_μ s*_μ(λ) / (n↓k)`.
pub fn trace_out_sym(lambda: &Partition, k: usize, d: usize) -> Result<WernerWeights> {
    let n = lambda.size();
    if lambda.rows() > d {
        return Err(invalid!("{lambda} has more than {d} rows"));
    }
    if k == 0 || k > n {
        return Err(invalid!("must keep between 1 and {n} subsystems, got {k}"));
    }
    let scale = int_rat(falling_factorial(n as i64, k));
    WernerWeights::from_fn(k, d, |mu| {
        Ok(int_rat(dim_sym(mu)) * shifted_schur_eval(mu, lambda, d)? / &scale)
    })
}

/// Reduced state of `ρ_λ` on `(C^p)^{⊗n}` after tracing `C^q` out of every
/// factor of `(C^p ⊗ C^q)^{⊗n}`: `a_μ = e^p_μ χ^{λμ}(q) / (n! e^{pq}_λ)`.
pub fn dual_trace(lambda: &Partition, p: usize, q: usize) -> Result<WernerWeights> {
    let n = lambda.size();
    if p == 0 || q == 0 {
        return Err(invalid!("local dimensions must be positive"));
    }
    if lambda.rows() > p * q {
        return Err(invalid!("{lambda} has more than pq = {} rows", p * q));
    }
    let denom = factorial(n) * dim_unitary(lambda, p * q);
    WernerWeights::from_fn(n, p, |mu| {
        let chi = character_polynomial(lambda, mu)?.eval_i64(q as i64);
        Ok(Rational::new(dim_unitary(mu, p) * chi, denom.clone()))
    })
}

/// Twirled power state `𝕋(σ^{⊗k})` for σ with spectrum `r`:
/// `a_μ = f_μ s_μ(r)` over `μ ∈ Par(k, len r)`.
pub fn twirl_power(r: &Spectrum, k: usize) -> Result<WernerWeights> {
    if r.total() != Rational::from_integer(1.into()) {
        return Err(invalid!("spectrum does not sum to one"));
    }
    WernerWeights::from_fn(k, r.len(), |mu| Ok(int_rat(dim_sym(mu)) * schur_eval(mu, r)))
}

/// Symmetrised cycle operator `σ(α) = 𝕊(τ_π / d^n)` for π of cycle type α:
/// `a_μ = e^d_μ χ^μ(α) / d^n`. Weights sum to `d^{c(α)−n}`.
pub fn dual_twirl_cycle(alpha: &Partition, d: usize) -> Result<WernerWeights> {
    let n = alpha.size();
    if d == 0 {
        return Err(invalid!("local dimension must be positive"));
    }
    let total = BigInt::from(d).pow(n as u32);
    WernerWeights::from_fn(n, d, |mu| Ok(Rational::new(dim_unitary(mu, d) * mn_character(mu, alpha)?, total.clone())))
}

/// Coefficients of `tr_{C^q} ρ_λ = Σ_α c_α σ(α)` in the symmetrised cycle
/// operators on `(C^p)^{⊗n}`, with `c_α = h_α p^n q^{c(α)} χ^λ(α) / (n! e^{pq}_λ)`,
/// listed for every cycle type α of `S_n`.
pub fn cycle_sum_expansion(lambda: &Partition, p: usize, q: usize) -> Result<Vec<(Partition, Rational)>> {
    let n = lambda.size();
    if lambda.rows() > p * q {
        return Err(invalid!("{lambda} has more than pq = {} rows", p * q));
    }
    let denom = factorial(n) * dim_unitary(lambda, p * q);
    let pn = BigInt::from(p).pow(n as u32);
    partitions_of(n, n)
        .into_iter()
        .map(|alpha| {
            let num = class_size(&alpha) * &pn * BigInt::from(q).pow(alpha.rows() as u32) * mn_character(lambda, &alpha)?;
            Ok((alpha, Rational::new(num, denom.clone())))
        })
        .collect()
}

/// `Σ_α c_α σ(α)` on `(C^p)^{⊗n}` as Werner weights.
pub fn recombine_cycle_sum(expansion: &[(Partition, Rational)], p: usize) -> Result<WernerWeights> {
    let n = expansion.first().map_or(0, |(a, _)| a.size());
    let mut acc = vec![Rational::zero(); partitions_of(n, p).len()];
    for (alpha, c) in expansion {
        for (slot, (_, w)) in acc.iter_mut().zip(dual_twirl_cycle(alpha, p)?.weights) {
            *slot += c * w;
        }
    }
    let mut it = acc.into_iter();
    WernerWeights::from_fn(n, p, |_| Ok(it.next().expect("same partition list")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateKind {
    Werner,
    Symmetric,
}

/// Real dimension of the Werner (`Σ f_λ² − 1`) or symmetric (`Σ (e^d_λ)² − 1`)
/// state sets on `(C^d)^{⊗n}`.
pub fn degrees_of_freedom(n: usize, d: usize, kind: StateKind) -> BigInt {
    let sum: BigInt = partitions_of(n, d)
        .iter()
        .map(|l| {
            let v = match kind {
                StateKind::Werner => dim_sym(l),
                StateKind::Symmetric => dim_unitary(l, d),
            };
            &v * &v
        })
        .sum();
    sum - 1
}

/// Diagonal Hermitian matrices with `A + B = C`, `spec A = μ`, `spec C = λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

/// The diagonal witness `A = diag(μ)`, `B = diag(λ − μ)`, `C = diag(λ)`,
/// padded to `n = |λ|` entries; exists exactly when `μ ⊆ λ`, which is also
/// exactly when `s*_μ(λ) > 0`.
pub fn horn_witness(lambda: &Partition, mu: &Partition) -> Result<Option<HornWitness>> {
    if mu.size() > lambda.size() {
        return Err(invalid!("{mu} has more boxes than {lambda}"));
    }
    let d = lambda.rows().max(mu.rows()).max(1);
    let positive = shifted_schur_eval(mu, lambda, d)?.is_positive();
    if positive != mu.is_contained_in(lambda) {
        return Err(Error::Invariant(format!("s*_{mu}({lambda}) sign disagrees with containment")));
    }
    if !positive {
        return Ok(None);
    }
    let n = lambda.size();
    let a: Vec<usize> = (0..n).map(|i| mu[i]).collect();
    let c: Vec<usize> = (0..n).map(|i| lambda[i]).collect();
    let b: Vec<usize> = (0..n).map(|i| c[i] - a[i]).collect();
    debug_assert!(a.iter().zip(&b).zip(&c).all(|((x, y), z)| x + y == *z));
    Ok(Some(HornWitness { a, b, c }))
}
