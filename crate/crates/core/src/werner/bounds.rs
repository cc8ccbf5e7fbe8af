use num_bigint::BigInt;
use num_traits::One;

use crate::characters::{dim_sym, dim_unitary};
use crate::error::{invalid, Error, Result};
use crate::linalg::{int_rat, Rational};
use crate::partition::{factorial, Partition};
use crate::symfunc::falling_factorial;

/// Leading term `(3/4)·k(k−1)/λ_ℓ` of the de Finetti bound for symmetric
/// Werner states, where `λ_ℓ` is the smallest non-zero row. The
/// `O(k⁴/λ_ℓ²)` correction is not included.
pub fn definetti_bound_sym(k: usize, smallest_row: usize) -> Result<Rational> {
    if smallest_row == 0 {
        return Err(invalid!("smallest non-zero row must be positive"));
    }
    Ok(Rational::new(BigInt::from(3 * k * k.saturating_sub(1)), BigInt::from(4 * smallest_row)))
}

/// `2 − 2((q−n+1)/q)^n`, valid for any Werner state once `q ≥ n`.
pub fn definetti_bound_dual(n: usize, q: usize) -> Result<Rational> {
    if n == 0 {
        return Err(invalid!("need at least one subsystem"));
    }
    if q < n {
        return Err(Error::OutOfDomain(format!("dual de Finetti bound needs q >= n, got q = {q} < n = {n}")));
    }
    let ratio = Rational::new(BigInt::from(q - n + 1), BigInt::from(q));
    let mut power = Rational::one();
    for _ in 0..n {
        power *= &ratio;
    }
    Ok(int_rat(2.into()) * (Rational::one() - power))
}

/// First-order expansion `2n(n−1)/q` of [`definetti_bound_dual`].
pub fn definetti_bound_dual_leading(n: usize, q: usize) -> Rational {
    Rational::new(BigInt::from(2 * n * n.saturating_sub(1)), BigInt::from(q))
}

/// `β = f_λ C(q,n) p^n / e^{pq}_λ`: the weight of `I/p^n` contributed by the
/// weight spaces of `U_λ` whose `C^q` labels are pairwise distinct.
pub fn distinct_weight_fraction(lambda: &Partition, p: usize, q: usize) -> Result<Rational> {
    let n = lambda.size();
    let e = dim_unitary(lambda, p * q);
    if e == BigInt::from(0) {
        return Err(invalid!("{lambda} has more than pq = {} rows", p * q));
    }
    let binom = falling_factorial(q as i64, n) / factorial(n);
    Ok(Rational::new(dim_sym(lambda) * binom * BigInt::from(p).pow(n as u32), e))
}

/// `n!(d−1)!/(d+n−1)!`: the minimum of `f_λ / e^d_λ` over λ with `n` boxes,
/// attained at the one-row diagram.
pub fn unitary_ratio_lower_bound(n: usize, d: usize) -> Rational {
    Rational::new(factorial(n), falling_factorial((d + n - 1) as i64, n))
}
