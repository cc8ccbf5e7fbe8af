//! Littlewood–Richardson and Kronecker coefficients.
//!
//! `c^λ_{μν}` is computed by counting LR tableaux directly, with an
//! independent route through restriction of characters to `S_k × S_{n−k}`.
//! `g_{λμν}` is the class-weighted triple character sum.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::characters::{dim_sym, dim_unitary, mn_character};
use crate::error::{invalid, Result};
use crate::partition::{class_size, factorial, partitions_of, Partition};

/// `c^λ_{μν}` by counting fillings of λ/μ with content ν that are
/// semistandard and whose right-to-left, top-to-bottom reading word is a
/// lattice word.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if mu.size() + nu.size() != lambda.size() || !mu.is_contained_in(lambda) || !nu.is_contained_in(lambda) {
        return BigInt::zero();
    }
    let rows = lambda.rows();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu[i]..lambda[i]).rev().map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lambda[i]]).collect();
    let mut used = vec![0usize; nu.rows() + 1];

    fn fill(
        pos: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<usize>],
        used: &mut [usize],
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(pos) else {
            return 1;
        };
        let hi = if j + 1 < lambda[i] { grid[i][j + 1] } else { nu.rows() };
        let lo = if i > 0 && j >= mu[i - 1] { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if used[v] >= nu[v - 1] || (v > 1 && used[v] >= used[v - 1]) {
                continue;
            }
            grid[i][j] = v;
            used[v] += 1;
            total += fill(pos + 1, cells, grid, used, lambda, mu, nu);
            used[v] -= 1;
        }
        grid[i][j] = 0;
        total
    }

    BigInt::from(fill(0, &cells, &mut grid, &mut used, lambda, mu, nu))
}

/// `c^λ_{μν} = ⟨Res χ^λ, χ^μ × χ^ν⟩` over the Young subgroup `S_k × S_{n−k}`.
pub fn littlewood_richardson_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let (n, k) = (lambda.size(), mu.size());
    if k + nu.size() != n {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for alpha in partitions_of(k, k) {
        let chi_mu = mn_character(mu, &alpha).expect("sizes match");
        if chi_mu.is_zero() {
            continue;
        }
        let h_alpha = class_size(&alpha);
        for beta in partitions_of(n - k, n - k) {
            let joined = Partition::from_unsorted(alpha.parts().iter().chain(beta.parts()).copied().collect());
            let term = &h_alpha
                * class_size(&beta)
                * mn_character(lambda, &joined).expect("sizes match")
                * &chi_mu
                * mn_character(nu, &beta).expect("sizes match");
            sum += term;
        }
    }
    let (q, r) = sum.div_rem(&(factorial(k) * factorial(n - k)));
    debug_assert!(r.is_zero());
    q
}

/// `g_{λμν} = (1/n!) Σ_α h_α χ^λ(α) χ^μ(α) χ^ν(α)`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(invalid!("Kronecker coefficient of {lambda}, {mu}, {nu}: box counts differ"));
    }
    let sum: BigInt = partitions_of(n, n)
        .iter()
        .map(|alpha| {
            class_size(alpha)
                * mn_character(lambda, alpha).unwrap()
                * mn_character(mu, alpha).unwrap()
                * mn_character(nu, alpha).unwrap()
        })
        .sum();
    let (q, r) = sum.div_rem(&factorial(n));
    if !r.is_zero() {
        return Err(crate::Error::Invariant(format!("Kronecker sum for {lambda},{mu},{nu} not divisible by n!")));
    }
    Ok(q)
}

/// `Σ_ν c^λ_{μν} f_ν` over ν with at most `d` rows.
pub fn branching_sum_lr(lambda: &Partition, mu: &Partition, d: usize) -> BigInt {
    if mu.size() > lambda.size() || !mu.is_contained_in(lambda) {
        return BigInt::zero();
    }
    partitions_of(lambda.size() - mu.size(), d)
        .iter()
        .map(|nu| {
            let c = littlewood_richardson(lambda, mu, nu);
            if c.is_zero() {
                c
            } else {
                c * dim_sym(nu)
            }
        })
        .sum()
}

/// `Σ_ν g_{λμν} e^q_ν` over ν with at most `q` rows.
pub fn branching_sum_kron(lambda: &Partition, mu: &Partition, q: usize) -> Result<BigInt> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(invalid!("{lambda} and {mu} have different box counts"));
    }
    let mut sum = BigInt::zero();
    for nu in partitions_of(n, q) {
        let g = kronecker(lambda, mu, &nu)?;
        if !g.is_zero() {
            sum += g * dim_unitary(&nu, q);
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lr_examples() {
        assert_eq!(littlewood_richardson(&p(&[2]), &p(&[1]), &p(&[1])), int(1));
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[2])), int(1));
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[1])), int(0));
        // s_(2,1)^2 contains s_(4,2,...) etc: the classic c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(littlewood_richardson(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), int(2));
        assert_eq!(littlewood_richardson(&p(&[2, 2]), &p(&[2]), &Partition::empty()), int(0));
        assert_eq!(littlewood_richardson(&p(&[2, 2]), &p(&[2, 2]), &Partition::empty()), int(1));
    }

    #[test]
    fn lr_routes_agree() {
        for n in 0..=6 {
            for lambda in partitions_of(n, n) {
                for k in 0..=n {
                    for mu in partitions_of(k, k) {
                        for nu in partitions_of(n - k, n - k) {
                            assert_eq!(
                                littlewood_richardson(&lambda, &mu, &nu),
                                littlewood_richardson_by_characters(&lambda, &mu, &nu),
                                "c^{lambda}_{{{mu},{nu}}}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        let t = p(&[2, 1]);
        assert_eq!(kronecker(&t, &t, &t).unwrap(), int(1));
        for n in 1..=5 {
            let ps = partitions_of(n, n);
            for l in &ps {
                for m in &ps {
                    let expect = int((l == m) as i64);
                    assert_eq!(kronecker(l, m, &Partition::row(n)).unwrap(), expect);
                }
            }
            let col = Partition::column(n);
            assert_eq!(kronecker(&col, &col, &Partition::row(n)).unwrap(), int(1));
        }
        assert!(kronecker(&t, &p(&[2]), &t).is_err());
    }

    #[test]
    fn kronecker_symmetric_in_arguments() {
        for n in 1..=6 {
            let ps = partitions_of(n, n);
            for a in &ps {
                for b in &ps {
                    for c in &ps {
                        let g = kronecker(a, b, c).unwrap();
                        assert!(g >= BigInt::zero());
                        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                            assert_eq!(kronecker(x, y, z).unwrap(), g);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn berele_imbo_positivity() {
        for n in 1..=6 {
            let ps = partitions_of(n, n);
            for l in &ps {
                for m in &ps {
                    let bound = l.rows().max(m.rows());
                    let found = partitions_of(n, bound).iter().any(|nu| kronecker(l, m, nu).unwrap() > BigInt::zero());
                    assert!(found, "{l} {m}");
                }
            }
        }
    }

    #[test]
    fn branching_sums() {
        assert_eq!(branching_sum_lr(&p(&[2, 1]), &p(&[1]), 2), int(2));
        assert_eq!(branching_sum_lr(&p(&[3, 2]), &p(&[3, 2]), 2), int(1));
        assert_eq!(branching_sum_lr(&p(&[2, 1]), &p(&[3]), 2), int(0));
        for q in 1..=6usize {
            // only ν=(n) contributes: e^q_(n) = binom(q+n-1, n)
            let n = 3;
            let expect = int(((q..q + n).product::<usize>() / 6) as i64);
            assert_eq!(branching_sum_kron(&Partition::row(n), &Partition::row(n), q).unwrap(), expect);
        }
        for n in 2..=5 {
            assert_eq!(
                branching_sum_kron(&Partition::column(n), &Partition::row(n), n - 1).unwrap(),
                int(0)
            );
        }
        let t = p(&[2, 1]);
        assert_eq!(branching_sum_kron(&t, &t, 1).unwrap(), int(1));
    }
}
