//! Integer partitions as Young diagrams, cycle types and highest weights.
//!
//! A [`Partition`] is stored trimmed: weakly decreasing positive parts with no
//! trailing zeros. Row access past the last part reads as zero, so shapes of
//! different lengths compare row-wise without explicit padding.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other ordering violation is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err(invalid!("zero part in the interior of {parts:?}"));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive integers into a partition (e.g. the cycle
    /// lengths of a permutation).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition (n).
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The single-column partition (1^n).
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero rows. As a cycle type this is the number of cycles.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Smallest non-zero part, if any.
    pub fn smallest_part(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition { parts }
    }

    /// Row-wise containment of diagrams: `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.rows() <= other.rows() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Hook length of the box in row `i`, column `j` (both 0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        debug_assert!(j < self[i]);
        let arm = self[i] - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&r| r > j).count();
        arm + leg + 1
    }

    /// Iterator over box coordinates (row, column), row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    /// Multiplicity of each part size: `m[i]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Cycle type of a permutation given as an image vector over `0..n`.
    pub fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut lengths = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Multiplies every part by `m`.
    pub fn scaled(&self, m: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * m).collect())
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the JSON array syntax `[3,2,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = serde_json::from_str(s.trim())
            .map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(invalid!("{inner} is not contained in {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// All partitions of `n` with at most `max_rows` rows, lexicographically
/// decreasing. `n = 0` yields the empty partition alone.
pub fn partitions_of(n: usize, max_rows: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            // the remaining rows must be able to absorb what is left
            if part * rows_left < remaining {
                break;
            }
            cur.push(part);
            go(remaining - part, part, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_rows, &mut Vec::new(), &mut out);
    out
}

/// `μ ⊆ λ` as diagrams.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.is_contained_in(lambda)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Size `h_α = n! / z_α` of the conjugacy class of cycle type α.
pub fn class_size(alpha: &Partition) -> BigInt {
    factorial(alpha.size()) / centralizer_order(alpha)
}

/// `z_α = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of cycle type α.
pub fn centralizer_order(alpha: &Partition) -> BigInt {
    alpha
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::one(), |acc, (i, &m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
}

/// Number of standard fillings of the skew diagram λ/μ, counted by walking
/// every chain of single-box additions from μ up to λ. Exponential; meant
/// as a brute-force reference for small shapes (n ≤ 10).
pub fn skew_standard_count(shape: &SkewShape) -> BigInt {
    fn walk(cur: &mut Vec<usize>, outer: &Partition) -> u64 {
        let mut total = 0;
        let mut done = true;
        for i in 0..cur.len() {
            if cur[i] < outer[i] && (i == 0 || cur[i - 1] > cur[i]) {
                done = false;
                cur[i] += 1;
                total += walk(cur, outer);
                cur[i] -= 1;
            }
        }
        if done {
            1
        } else {
            total
        }
    }
    let rows = shape.outer.rows();
    let mut cur: Vec<usize> = (0..rows).map(|i| shape.inner[i]).collect();
    BigInt::from(walk(&mut cur, &shape.outer))
}
