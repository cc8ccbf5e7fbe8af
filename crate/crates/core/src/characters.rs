//! Irreducible characters of the symmetric group and the dimensions `f_λ`
//! and `e^d_λ` of the paired irreps under Schur–Weyl duality.
//!
//! Characters are evaluated with the Murnaghan–Nakayama rule on β-sets: a
//! border strip of length `k` corresponds to moving one bead from position
//! `b` to the free position `b - k`, with sign `(-1)^(beads jumped over)`.
//! Results are memoized in a process-wide cache keyed by `(λ, α)`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::partition::{centralizer_order, class_size, factorial, partitions_of, Partition};

type Key = (Partition, Partition);

fn cache() -> &'static RwLock<HashMap<Key, BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(α)`: the irreducible character of `S_n` labelled by λ on the class of
/// cycle type α.
pub fn mn_character(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    if lambda.size() != alpha.size() {
        return Err(invalid!(
            "character {lambda} on class {alpha}: box counts {} and {} differ",
            lambda.size(),
            alpha.size()
        ));
    }
    Ok(character_memo(lambda, alpha))
}

fn character_memo(lambda: &Partition, alpha: &Partition) -> BigInt {
    if alpha.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), alpha.clone());
    if let Some(v) = cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = character_uncached(lambda, alpha);
    cache().write().unwrap().insert(key, v.clone());
    v
}

fn character_uncached(lambda: &Partition, alpha: &Partition) -> BigInt {
    // strip the largest cycle first
    let k = alpha[0];
    let rest = Partition::new(alpha.parts()[1..].to_vec()).expect("suffix of a partition");
    let r = lambda.rows();
    let beta: Vec<usize> = (0..r).map(|i| lambda[i] + r - 1 - i).collect();

    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &c)| c - (r - 1 - i)).collect();
        let smaller = Partition::new(parts).expect("bead move keeps a partition");
        let chi = character_memo(&smaller, &rest);
        if jumped % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    total
}

/// `f_λ = dim V_λ` by the hook length formula.
pub fn dim_sym(lambda: &Partition) -> BigInt {
    let hooks = lambda
        .boxes()
        .fold(BigInt::one(), |acc, (i, j)| acc * lambda.hook(i, j));
    factorial(lambda.size()) / hooks
}

/// `e^d_λ = dim U_λ` for `U(d)` by the hook-content formula
/// `∏ (d + j − i) / hook(i, j)`. Zero when λ has more than `d` rows.
pub fn dim_unitary(lambda: &Partition, d: usize) -> BigInt {
    if lambda.rows() > d {
        return BigInt::zero();
    }
    let (num, den) = lambda.boxes().fold((BigInt::one(), BigInt::one()), |(num, den), (i, j)| {
        (num * (d + j - i), den * lambda.hook(i, j))
    });
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `e^d_λ = (1/n!) Σ_α h_α d^{c(α)} χ^λ(α)`: the dimension as the trace of
/// the Schur–Weyl projector, written through characters.
pub fn dim_unitary_by_characters(lambda: &Partition, d: usize) -> BigInt {
    let n = lambda.size();
    let sum: BigInt = partitions_of(n, n)
        .iter()
        .map(|alpha| class_size(alpha) * BigInt::from(d).pow(alpha.rows() as u32) * character_memo(lambda, alpha))
        .sum();
    sum / factorial(n)
}

/// Full character table of `S_n`: rows are irreps λ, columns are classes α,
/// both in lexicographically decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let labels = partitions_of(n, n);
        let values = labels
            .iter()
            .map(|l| labels.iter().map(|a| character_memo(l, a)).collect())
            .collect();
        CharacterTable { n, labels, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    fn index(&self, p: &Partition) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == p)
            .ok_or_else(|| invalid!("{p} is not a partition of {}", self.n))
    }

    pub fn get(&self, lambda: &Partition, alpha: &Partition) -> Result<&BigInt> {
        Ok(&self.values[self.index(lambda)?][self.index(alpha)?])
    }

    /// Overwrites a single entry. Used to check that the verification
    /// suites notice a corrupted table.
    pub fn set(&mut self, lambda: &Partition, alpha: &Partition, value: BigInt) -> Result<()> {
        let (i, j) = (self.index(lambda)?, self.index(alpha)?);
        self.values[i][j] = value;
        Ok(())
    }

    /// `Σ_α h_α χ^λ(α) χ^μ(α)`, which is `n!·δ_{λμ}` for a correct table.
    pub fn row_inner(&self, i: usize, j: usize) -> BigInt {
        self.labels
            .iter()
            .enumerate()
            .map(|(c, a)| class_size(a) * &self.values[i][c] * &self.values[j][c])
            .sum()
    }

    /// `Σ_λ χ^λ(α) χ^λ(β)`, which is `z_α·δ_{αβ}` for a correct table.
    pub fn column_inner(&self, a: usize, b: usize) -> BigInt {
        self.values.iter().map(|row| &row[a] * &row[b]).sum()
    }

    /// First pair violating row or column orthogonality, if any.
    pub fn orthogonality_defect(&self) -> Option<String> {
        let m = self.labels.len();
        let nf = factorial(self.n);
        for i in 0..m {
            for j in i..m {
                let expect = if i == j { nf.clone() } else { BigInt::zero() };
                let got = self.row_inner(i, j);
                if got != expect {
                    return Some(format!(
                        "row orthogonality at ({}, {}): {got} != {expect}",
                        self.labels[i], self.labels[j]
                    ));
                }
                let expect = if i == j { centralizer_order(&self.labels[i]) } else { BigInt::zero() };
                let got = self.column_inner(i, j);
                if got != expect {
                    return Some(format!(
                        "column orthogonality at ({}, {}): {got} != {expect}",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        None
    }

    /// CSV with a header row of class labels and one row per irrep.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda\\alpha");
        for a in &self.labels {
            write!(out, ",\"{a}\"").unwrap();
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.values) {
            write!(out, "\"{l}\"").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}
