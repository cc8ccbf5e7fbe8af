use std::fmt;

use crate::error::{invalid, Result};
use crate::partition::Partition;

/// Standard Young tableau: the numbers `1..=n` placed in a diagram so that
/// rows increase to the right and columns increase downwards. Entry `k`
/// labels tensor factor `k − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauLabel {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl TableauLabel {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(invalid!("tableau entries must be 1..={n} without repeats"));
            }
            seen[v] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid!("row {i} of the tableau is not increasing"));
            }
            if i > 0 && row.iter().enumerate().any(|(j, &v)| rows[i - 1][j] >= v) {
                return Err(invalid!("column entries below row {} do not increase", i - 1));
            }
        }
        Ok(TableauLabel { shape, rows })
    }

    /// `1..=n` filled row by row.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        TableauLabel { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Rows as 0-based factor positions.
    pub fn row_blocks(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.iter().map(|v| v - 1).collect()).collect()
    }

    /// Columns as 0-based factor positions.
    pub fn column_blocks(&self) -> Vec<Vec<usize>> {
        let width = self.shape[0];
        (0..width)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j] - 1).collect())
            .collect()
    }
}

impl fmt::Display for TableauLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows).unwrap())
    }
}

/// Every standard tableau of the given shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<TableauLabel> {
    fn place(
        shape: &Partition,
        next: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<TableauLabel>,
    ) {
        if next > n {
            out.push(TableauLabel { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..shape.rows() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                place(shape, next + 1, n, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.rows()];
    place(shape, 1, shape.size(), &mut rows, &mut out);
    out
}
