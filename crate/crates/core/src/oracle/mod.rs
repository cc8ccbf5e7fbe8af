//! Brute-force operators on `(C^d)^{⊗n}` and `(C^p ⊗ C^q)^{⊗n}`.
//!
//! Everything here is built entry by entry in exact rationals from the
//! definitions: permutation operators, the isotypic projectors
//! `P_λ = (f_λ/n!) Σ_π χ^λ(π) τ_π`, orthogonal projectors onto the image of
//! a Young symmetrizer, partial traces and the symmetric average. It serves
//! as an independent check on the closed formulas in [`crate::werner`].

mod operator;
mod perm;
mod tableau;

pub use operator::{Factor, TensorOperator, TensorShape};
pub use perm::{all_permutations, inverse, permute_tuple, sign, stabilizer};
pub use tableau::{standard_tableaux, TableauLabel};

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::characters::{dim_sym, dim_unitary, mn_character};
use crate::error::{invalid, Error, Result};
use crate::json::rational_string;
use crate::linalg::{int_rat, to_f64, Rational};
use crate::partition::{factorial, Partition};
use crate::symfunc::{falling_factorial, Spectrum};
use crate::werner::{definetti_bound_dual, distinct_weight_fraction, WernerWeights};
use operator::check_cap;

pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Eigenvalues smaller than this in magnitude count as zero.
pub const EIGEN_TOL: f64 = 1e-9;

/// Slack allowed when a floating-point quantity is compared to an exact bound.
pub const INEQUALITY_SLACK: f64 = 1e-7;

/// Operator factory with a cap on the tensor-space dimension. Requests above
/// the cap fail with [`Error::SizeCap`] before anything is allocated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    size_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { size_cap: DEFAULT_SIZE_CAP }
    }
}

/// `table[k][x]` is the basis index of `π_k · x`.
struct Action {
    perms: Vec<Vec<usize>>,
    position: HashMap<Vec<usize>, usize>,
    table: Vec<Vec<usize>>,
}

impl Action {
    fn new(shape: TensorShape, dim: usize) -> Self {
        let perms = all_permutations(shape.n);
        let tuples: Vec<Vec<usize>> = (0..dim).map(|x| shape.digits(x)).collect();
        let table = perms
            .iter()
            .map(|p| tuples.iter().map(|t| shape.index(&permute_tuple(p, t))).collect())
            .collect();
        let position = perms.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        Action { perms, position, table }
    }

    fn apply(&self, perm: &[usize], x: usize) -> usize {
        self.table[self.position[perm]][x]
    }
}

fn check_perm(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(invalid!("{perm:?} is not a permutation of 0..{}", perm.len()));
        }
        seen[p] = true;
    }
    Ok(())
}

impl Oracle {
    pub fn new(size_cap: usize) -> Self {
        Oracle { size_cap }
    }

    pub fn size_cap(&self) -> usize {
        self.size_cap
    }

    /// `τ_π` on `(C^d)^{⊗n}` with `n = perm.len()`.
    pub fn permutation_operator(&self, perm: &[usize], d: usize) -> Result<TensorOperator> {
        self.permutation_operator_on(perm, TensorShape::plain(perm.len(), d))
    }

    pub fn permutation_operator_on(&self, perm: &[usize], shape: TensorShape) -> Result<TensorOperator> {
        check_perm(perm)?;
        if perm.len() != shape.n {
            return Err(invalid!("permutation of {} points on {} factors", perm.len(), shape.n));
        }
        let dim = check_cap(shape, self.size_cap)?;
        let mut m = TensorOperator::zero_unchecked(shape, dim);
        for x in 0..dim {
            let y = shape.index(&permute_tuple(perm, &shape.digits(x)));
            m.add_entry(y, x, Rational::one());
        }
        Ok(m)
    }

    /// `Σ_π coeff(π) τ_π`.
    fn group_algebra(&self, shape: TensorShape, mut coeff: impl FnMut(&[usize]) -> Result<Rational>) -> Result<TensorOperator> {
        let dim = check_cap(shape, self.size_cap)?;
        let action = Action::new(shape, dim);
        let mut m = TensorOperator::zero_unchecked(shape, dim);
        for (k, perm) in action.perms.iter().enumerate() {
            let c = coeff(perm)?;
            if c.is_zero() {
                continue;
            }
            for x in 0..dim {
                m.add_entry(action.table[k][x], x, c.clone());
            }
        }
        Ok(m)
    }

    /// `P_λ` on `(C^d)^{⊗n}`; the zero operator when λ has more than `d` rows.
    pub fn schur_weyl_projector(&self, lambda: &Partition, d: usize) -> Result<TensorOperator> {
        self.schur_weyl_projector_on(lambda, TensorShape::plain(lambda.size(), d))
    }

    pub fn schur_weyl_projector_on(&self, lambda: &Partition, shape: TensorShape) -> Result<TensorOperator> {
        if lambda.size() != shape.n {
            return Err(invalid!("{lambda} does not have {} boxes", shape.n));
        }
        let dim = check_cap(shape, self.size_cap)?;
        if lambda.rows() > shape.local_dim() {
            return Ok(TensorOperator::zero_unchecked(shape, dim));
        }
        let scale = Rational::new(dim_sym(lambda), factorial(shape.n));
        let mut by_class: HashMap<Partition, Rational> = HashMap::new();
        self.group_algebra(shape, |perm| {
            let alpha = Partition::cycle_type(perm);
            if let Some(c) = by_class.get(&alpha) {
                return Ok(c.clone());
            }
            let c = &scale * int_rat(mn_character(lambda, &alpha)?);
            by_class.insert(alpha, c.clone());
            Ok(c)
        })
    }

    /// `ρ_λ = P_λ / (e_λ f_λ)` on the given shape.
    pub fn werner_state_on(&self, lambda: &Partition, shape: TensorShape) -> Result<TensorOperator> {
        let e = dim_unitary(lambda, shape.local_dim());
        if e.is_zero() {
            return Err(invalid!("{lambda} has more than {} rows", shape.local_dim()));
        }
        let p = self.schur_weyl_projector_on(lambda, shape)?;
        Ok(p.scale(&Rational::new(BigInt::one(), e * dim_sym(lambda))))
    }

    /// `Σ_μ a_μ ρ_μ` on `(C^d)^{⊗n}`.
    pub fn werner_operator(&self, w: &WernerWeights) -> Result<TensorOperator> {
        let shape = TensorShape::plain(w.n(), w.d());
        let dim = check_cap(shape, self.size_cap)?;
        let mut out = TensorOperator::zero_unchecked(shape, dim);
        for (mu, a) in w.weights() {
            if !a.is_zero() {
                out = out.add(&self.werner_state_on(mu, shape)?.scale(a))?;
            }
        }
        Ok(out)
    }

    /// Orthogonal projector onto the image of the Young symmetrizer
    /// `b_T a_T` (row symmetrizer first, then column antisymmetrizer) on
    /// `(C^d)^{⊗n}`.
    pub fn young_projector(&self, t: &TableauLabel, d: usize) -> Result<TensorOperator> {
        self.young_projector_on(t, TensorShape::plain(t.shape().size(), d))
    }

    pub fn young_projector_on(&self, t: &TableauLabel, shape: TensorShape) -> Result<TensorOperator> {
        let n = t.shape().size();
        if n != shape.n {
            return Err(invalid!("tableau with {n} boxes on {} factors", shape.n));
        }
        let dim = check_cap(shape, self.size_cap)?;
        let action = Action::new(shape, dim);
        let rows = stabilizer(n, &t.row_blocks());
        let cols: Vec<(Vec<usize>, i64)> = stabilizer(n, &t.column_blocks())
            .into_iter()
            .map(|c| {
                let s = sign(&c);
                (c, s)
            })
            .collect();

        // The symmetrizer commutes with relabelling factors' values, so it
        // preserves each orbit of basis tuples; work one orbit at a time.
        let mut orbits: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for x in 0..dim {
            let mut key = shape.digits(x);
            key.sort_unstable();
            orbits.entry(key).or_default().push(x);
        }

        let mut out = TensorOperator::zero_unchecked(shape, dim);
        for members in orbits.values() {
            let local: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let mut basis: Vec<(Vec<Rational>, Rational)> = Vec::new();
            for &x in members {
                let mut v = vec![Rational::zero(); members.len()];
                for r in &rows {
                    let y = action.apply(r, x);
                    for (c, s) in &cols {
                        v[local[&action.apply(c, y)]] += int_rat(BigInt::from(*s));
                    }
                }
                for (u, norm) in &basis {
                    let overlap: Rational = v.iter().zip(u).map(|(a, b)| a * b).sum();
                    if !overlap.is_zero() {
                        let f = overlap / norm;
                        for (a, b) in v.iter_mut().zip(u) {
                            *a -= &f * b;
                        }
                    }
                }
                let norm: Rational = v.iter().map(|a| a * a).sum();
                if !norm.is_zero() {
                    basis.push((v, norm));
                }
            }
            for (u, norm) in &basis {
                for (i, a) in u.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in u.iter().enumerate() {
                        if !b.is_zero() {
                            out.add_entry(members[i], members[j], a * b / norm);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `𝕊(M) = (1/n!) Σ_π τ_π M τ_π^{-1}`.
    pub fn symmetric_average(&self, m: &TensorOperator) -> Result<TensorOperator> {
        let shape = m.shape();
        let dim = check_cap(shape, self.size_cap)?;
        let action = Action::new(shape, dim);
        let scale = Rational::new(BigInt::one(), factorial(shape.n));
        let mut out = TensorOperator::zero_unchecked(shape, dim);
        for (r, c, v) in m.entries() {
            let v = v * &scale;
            for row in &action.table {
                out.add_entry(row[r], row[c], v.clone());
            }
        }
        Ok(out)
    }

    /// `a_μ = tr(P_μ M)` for every `μ ∈ Par(n, local_dim)`: the weights of the
    /// symmetric Werner state `Σ a_μ ρ_μ` obtained by projecting `M` onto the
    /// span of the isotypic projectors.
    pub fn schur_weyl_coefficients(&self, m: &TensorOperator) -> Result<WernerWeights> {
        let shape = m.shape();
        let dim = check_cap(shape, self.size_cap)?;
        let action = Action::new(shape, dim);
        // tr(τ_π M) = Σ_x M[π⁻¹·x, x], collected per conjugacy class
        let mut class_traces: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (k, perm) in action.perms.iter().enumerate() {
            let t: Rational = m.entries().filter(|&(r, c, _)| action.table[k][r] == c).map(|(_, _, v)| v).sum();
            *class_traces.entry(Partition::cycle_type(perm)).or_default() += t;
        }
        let n_fact = factorial(shape.n);
        WernerWeights::from_fn(shape.n, shape.local_dim(), |mu| {
            let mut sum = Rational::zero();
            for (alpha, t) in &class_traces {
                sum += int_rat(mn_character(mu, alpha)?) * t;
            }
            Ok(sum * Rational::new(dim_sym(mu), n_fact.clone()))
        })
    }

    /// `σ^{⊗n}` for the diagonal `σ = diag(r)`.
    pub fn power_state(&self, r: &Spectrum, n: usize) -> Result<TensorOperator> {
        let shape = TensorShape::plain(n, r.len());
        let dim = check_cap(shape, self.size_cap)?;
        let mut m = TensorOperator::zero_unchecked(shape, dim);
        for x in 0..dim {
            let v: Rational = shape.digits(x).iter().map(|&i| r.values()[i].clone()).product();
            m.add_entry(x, x, v);
        }
        Ok(m)
    }

    /// `‖tr_{C^q} ρ_λ − I/p^n‖₁` measured on the full operator.
    pub fn measured_dual_distance(&self, lambda: &Partition, p: usize, q: usize) -> Result<f64> {
        let rho = self.werner_state_on(lambda, TensorShape::bipartite(lambda.size(), p, q))?;
        let reduced = partial_trace_inner(&rho, p, q)?;
        let mixed = TensorOperator::identity(reduced.shape(), reduced.dim())
            .scale(&Rational::new(BigInt::one(), BigInt::from(reduced.dim())));
        trace_norm(&reduced.sub(&mixed)?)
    }

    /// Builds `ρ = P_T / e^{pq}_λ` on `(C^p ⊗ C^q)^{⊗n}` for the Young
    /// projector `P_T` and checks the general dual de Finetti statement
    /// together with the positive-remainder decomposition behind it.
    pub fn verify_general_dual(&self, t: &TableauLabel, p: usize, q: usize) -> Result<GeneralDualReport> {
        let lambda = t.shape().clone();
        let n = lambda.size();
        if p == 0 || q == 0 {
            return Err(invalid!("local dimensions must be positive"));
        }
        if q < n {
            return Err(Error::OutOfDomain(format!("need q >= n, got q = {q} < n = {n}")));
        }
        if lambda.rows() > p * q {
            return Err(invalid!("{lambda} has more than pq = {} rows", p * q));
        }
        let shape = TensorShape::bipartite(n, p, q);
        check_cap(shape, self.size_cap)?;

        let projector = self.young_projector_on(t, shape)?;
        let e = dim_unitary(&lambda, p * q);
        let rho = projector.scale(&Rational::new(BigInt::one(), e.clone()));
        let reduced = partial_trace_inner(&rho, p, q)?;
        let small = reduced.shape();
        let p_n = BigInt::from(p).pow(n as u32);
        let mixed = TensorOperator::identity(small, reduced.dim()).scale(&Rational::new(BigInt::one(), p_n));
        let distance = trace_norm(&reduced.sub(&mixed)?)?;
        let bound = definetti_bound_dual(n, q)?;
        let beta = distinct_weight_fraction(&lambda, p, q)?;
        let remainder = reduced.sub(&mixed.scale(&beta))?;
        let remainder_min_eigenvalue = remainder.symmetric_eigenvalues()?.first().copied().unwrap_or(0.0);

        // Restricting P_T to tuples whose C^q labels are pairwise distinct
        // and tracing out C^q leaves f_λ·C(q,n)·I.
        let distinct = |x: usize| {
            let mut js: Vec<usize> = shape.digits(x).iter().map(|v| v % q).collect();
            js.sort_unstable();
            js.windows(2).all(|w| w[0] != w[1])
        };
        let reduced_distinct = partial_trace_inner(&projector.restrict(distinct), p, q)?;
        let multiple = int_rat(dim_sym(&lambda) * falling_factorial(q as i64, n) / factorial(n));
        let distinct_block_exact = reduced_distinct == TensorOperator::identity(small, reduced.dim()).scale(&multiple);

        let passed = distance <= to_f64(&bound) + INEQUALITY_SLACK
            && remainder_min_eigenvalue >= -INEQUALITY_SLACK
            && distinct_block_exact
            && projector.trace() == int_rat(e);
        Ok(GeneralDualReport {
            tableau: t.clone(),
            p,
            q,
            distance,
            bound,
            beta,
            remainder_min_eigenvalue,
            distinct_block_exact,
            passed,
        })
    }
}

/// Outcome of [`Oracle::verify_general_dual`].
#[derive(Clone, Debug)]
pub struct GeneralDualReport {
    pub tableau: TableauLabel,
    pub p: usize,
    pub q: usize,
    /// `‖tr_{C^q} ρ − I/p^n‖₁`, measured.
    pub distance: f64,
    /// `2 − 2((q−n+1)/q)^n`.
    pub bound: Rational,
    /// Weight of `I/p^n` split off in the positive decomposition.
    pub beta: Rational,
    /// Smallest eigenvalue of `tr_{C^q} ρ − β I/p^n`.
    pub remainder_min_eigenvalue: f64,
    pub distinct_block_exact: bool,
    pub passed: bool,
}

impl GeneralDualReport {
    pub fn to_json(&self) -> Value {
        json!({
            "tableau": self.tableau.rows(),
            "p": self.p,
            "q": self.q,
            "distance": self.distance,
            "bound": rational_string(&self.bound),
            "beta": rational_string(&self.beta),
            "remainder_min_eigenvalue": self.remainder_min_eigenvalue,
            "distinct_block_exact": self.distinct_block_exact,
            "pass": self.passed,
        })
    }
}

/// Traces out all but the first `keep` factors.
pub fn partial_trace_subsystems(m: &TensorOperator, keep: usize) -> Result<TensorOperator> {
    let shape = m.shape();
    if keep > shape.n {
        return Err(invalid!("cannot keep {keep} of {} factors", shape.n));
    }
    let out_shape = TensorShape { n: keep, factor: shape.factor };
    let tail = shape.local_dim().pow((shape.n - keep) as u32);
    let mut out = TensorOperator::zero_unchecked(out_shape, m.dim() / tail);
    for (r, c, v) in m.entries() {
        if r % tail == c % tail {
            out.add_entry(r / tail, c / tail, v.clone());
        }
    }
    Ok(out)
}

/// Traces out `C^q` from every factor `C^p ⊗ C^q`, where a factor's basis
/// index is `x = i·q + j` with `i` the kept `C^p` label.
pub fn partial_trace_inner(m: &TensorOperator, p: usize, q: usize) -> Result<TensorOperator> {
    let shape = m.shape();
    if shape.local_dim() != p * q {
        return Err(invalid!("factor dimension {} is not p·q = {}", shape.local_dim(), p * q));
    }
    let out_shape = TensorShape::plain(shape.n, p);
    let dim = p.pow(shape.n as u32);
    let mut out = TensorOperator::zero_unchecked(out_shape, dim);
    for (r, c, v) in m.entries() {
        let (rd, cd) = (shape.digits(r), shape.digits(c));
        if rd.iter().zip(&cd).all(|(a, b)| a % q == b % q) {
            let ri: Vec<usize> = rd.iter().map(|a| a / q).collect();
            let ci: Vec<usize> = cd.iter().map(|a| a / q).collect();
            out.add_entry(out_shape.index(&ri), out_shape.index(&ci), v.clone());
        }
    }
    Ok(out)
}

/// `Σ |eigenvalue|` of a symmetric operator, in double precision.
pub fn trace_norm(m: &TensorOperator) -> Result<f64> {
    Ok(m.symmetric_eigenvalues()?
        .into_iter()
        .filter(|v| v.abs() > EIGEN_TOL)
        .map(f64::abs)
        .sum())
}

/// Exact trace norm `Σ_μ |a_μ|` of an operator on `(C^d)^{⊗n}` that is a
/// combination of the `ρ_μ`. Returns `None` when `m` is not of that form.
pub fn trace_norm_exact(oracle: &Oracle, m: &TensorOperator) -> Result<Option<Rational>> {
    let w = oracle.schur_weyl_coefficients(m)?;
    if oracle.werner_operator(&w)? != *m {
        return Ok(None);
    }
    Ok(Some(w.weights().iter().map(|(_, a)| a.abs()).sum()))
}

#[cfg(test)]
mod tests;
