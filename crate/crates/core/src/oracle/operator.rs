use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::json::rational_string;
use crate::linalg::{to_f64, Rational};

/// Local dimension of each tensor factor. A bipartite factor `C^p ⊗ C^q`
/// has basis index `x = i·q + j` with `i` the `C^p` label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Plain(usize),
    Bipartite { p: usize, q: usize },
}

impl Factor {
    pub fn dim(self) -> usize {
        match self {
            Factor::Plain(d) => d,
            Factor::Bipartite { p, q } => p * q,
        }
    }
}

/// `n` tensor factors of a common local dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorShape {
    pub n: usize,
    pub factor: Factor,
}

impl TensorShape {
    pub fn plain(n: usize, d: usize) -> Self {
        TensorShape { n, factor: Factor::Plain(d) }
    }

    pub fn bipartite(n: usize, p: usize, q: usize) -> Self {
        TensorShape { n, factor: Factor::Bipartite { p, q } }
    }

    pub fn local_dim(&self) -> usize {
        self.factor.dim()
    }

    /// `local_dim^n`, or `None` on overflow.
    pub fn dim(&self) -> Option<usize> {
        self.local_dim().checked_pow(self.n as u32)
    }

    /// Factor labels of a basis index, first factor most significant.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let d = self.local_dim();
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        let d = self.local_dim();
        digits.iter().fold(0, |acc, &x| acc * d + x)
    }
}

/// Square operator on a tensor space with exact rational entries in the
/// computational product basis. Rows keep only their non-zero entries:
/// everything the oracle builds is a short sum of permutation matrices or a
/// block-diagonal projector, so rows stay short even when the dimension is
/// in the thousands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    shape: TensorShape,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl TensorOperator {
    pub(crate) fn zero_unchecked(shape: TensorShape, dim: usize) -> Self {
        TensorOperator { shape, rows: vec![BTreeMap::new(); dim] }
    }

    pub(crate) fn add_entry(&mut self, row: usize, col: usize, value: Rational) {
        if value.is_zero() {
            return;
        }
        let slot = self.rows[row].entry(col).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.rows[row].remove(&col);
        }
    }

    pub fn shape(&self) -> TensorShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.rows[row].get(&col).cloned().unwrap_or_default()
    }

    /// Iterator over non-zero entries `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn identity(shape: TensorShape, dim: usize) -> Self {
        let mut m = TensorOperator::zero_unchecked(shape, dim);
        for i in 0..dim {
            m.add_entry(i, i, Rational::one());
        }
        m
    }

    pub fn trace(&self) -> Rational {
        self.rows.iter().enumerate().filter_map(|(i, r)| r.get(&i)).sum()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = TensorOperator::zero_unchecked(self.shape, self.dim());
        for (r, c, v) in self.entries() {
            out.add_entry(r, c, v * factor);
        }
        out
    }

    fn check_same(&self, other: &TensorOperator) -> Result<()> {
        if self.dim() != other.dim() || self.shape.n != other.shape.n || self.shape.local_dim() != other.shape.local_dim() {
            return Err(invalid!("operator shapes {:?} and {:?} differ", self.shape, other.shape));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorOperator) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorOperator) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn matmul(&self, other: &TensorOperator) -> Result<Self> {
        self.check_same(other)?;
        let mut out = TensorOperator::zero_unchecked(self.shape, self.dim());
        for (i, row) in self.rows.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &other.rows[k] {
                    out.add_entry(i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries().all(|(r, c, v)| self.rows[c].get(&r) == Some(v))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// Keeps only entries whose row and column both satisfy `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        let mut out = TensorOperator::zero_unchecked(self.shape, self.dim());
        for (r, c, v) in self.entries() {
            if keep(r) && keep(c) {
                out.add_entry(r, c, v.clone());
            }
        }
        out
    }

    pub fn to_dense_f64(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (r, c, v) in self.entries() {
            m[(r, c)] = to_f64(v);
        }
        m
    }

    /// Eigenvalues of a symmetric operator in ascending order.
    pub fn symmetric_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_symmetric() {
            return Err(invalid!("operator is not symmetric"));
        }
        let mut ev: Vec<f64> = self.to_dense_f64().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        Ok(ev)
    }

    /// Dense row-major dump as `"num/den"` strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = (0..self.dim())
            .map(|r| (0..self.dim()).map(|c| rational_string(&self.entry(r, c))).collect())
            .collect();
        json!({
            "n": self.shape.n,
            "local_dim": self.shape.local_dim(),
            "dim": self.dim(),
            "entries": rows,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim() {
            let line: Vec<String> = (0..self.dim()).map(|c| rational_string(&self.entry(r, c))).collect();
            writeln!(out, "{}", line.join(",")).unwrap();
        }
        out
    }
}

pub(crate) fn check_cap(shape: TensorShape, cap: usize) -> Result<usize> {
    match shape.dim() {
        Some(dim) if dim <= cap => Ok(dim),
        Some(dim) => Err(Error::SizeCap { dim, cap }),
        None => Err(Error::SizeCap { dim: usize::MAX, cap }),
    }
}
