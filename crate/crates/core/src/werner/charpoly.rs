//! Character polynomials `χ^{λμ}(q) = Σ_α h_α q^{c(α)} χ^λ(α) χ^μ(α)`.
//!
//! `χ^{λμ}(q)` is `n!` times the multiplicity-weighted sum `Σ_ν g_{λμν} e^q_ν`,
//! so its value at a positive integer `q` is non-negative and vanishes on a
//! block of consecutive integers around zero.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::polynomial::IntPolynomial;
use crate::characters::mn_character;
use crate::error::{invalid, Error, Result};
use crate::partition::{class_size, partitions_of, Partition};

pub fn character_polynomial(lambda: &Partition, mu: &Partition) -> Result<IntPolynomial> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(invalid!("character polynomial of {lambda} and {mu}: box counts differ"));
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for alpha in partitions_of(n, n) {
        coeffs[alpha.rows()] += class_size(&alpha) * mn_character(lambda, &alpha)? * mn_character(mu, &alpha)?;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Integer zero set of a character polynomial: every integer strictly
/// between `q_minus` and `q_plus` is a root and nothing else is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRange {
    pub q_minus: i64,
    pub q_plus: i64,
    pub roots: Vec<i64>,
}

/// Least positive `q` with `χ^{λμ}(q) ≠ 0`, scanning `1..=n`.
fn first_nonzero(poly: &IntPolynomial, n: usize) -> Option<i64> {
    (1..=n as i64).find(|&q| !poly.eval_i64(q).is_zero())
}

pub fn root_range(lambda: &Partition, mu: &Partition) -> Result<RootRange> {
    let n = lambda.size();
    if n == 0 {
        return Err(invalid!("root range needs at least one box"));
    }
    let poly = character_polynomial(lambda, mu)?;
    // χ^{λμ}(−q) = (−1)^n χ^{λ'μ}(q), so the negative side is the positive side of the conjugate pair
    let conj = character_polynomial(&lambda.conjugate(), mu)?;
    let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    if poly.negate_argument() != conj.scale(&sign) {
        return Err(Error::Invariant(format!("conjugation identity fails for {lambda}, {mu}")));
    }

    let q_plus = first_nonzero(&poly, n)
        .ok_or_else(|| Error::Invariant(format!("χ^({lambda},{mu}) vanishes on 1..={n}")))?;
    let q_minus = -first_nonzero(&conj, n)
        .ok_or_else(|| Error::Invariant(format!("χ^({},{mu}) vanishes on 1..={n}", lambda.conjugate())))?;

    let bound = lambda.rows().max(mu.rows()) as i64;
    if q_plus > bound {
        return Err(Error::Invariant(format!("q+ = {q_plus} exceeds max rows {bound} for {lambda}, {mu}")));
    }
    if (q_plus..=n as i64 + 1).any(|q| !poly.eval_i64(q).is_positive()) {
        return Err(Error::Invariant(format!("χ^({lambda},{mu}) not positive beyond q+ = {q_plus}")));
    }
    let roots = poly.integer_roots();
    let expected: Vec<i64> = (q_minus + 1..q_plus).collect();
    if roots != expected {
        return Err(Error::Invariant(format!(
            "integer roots {roots:?} of χ^({lambda},{mu}) are not the block {expected:?}"
        )));
    }
    Ok(RootRange { q_minus, q_plus, roots })
}

/// Sufficient condition for `(λ̄, μ̄)` to be a feasible (global, marginal)
/// spectrum pair on `C^p ⊗ C^q`: `χ^{λμ}(q) > 0`. A `false` result does not
/// certify infeasibility; the converse is not known to hold.
pub fn marginal_feasible(lambda: &Partition, mu: &Partition, q: usize) -> Result<bool> {
    Ok(character_polynomial(lambda, mu)?.eval_i64(q as i64).is_positive())
}

/// One row of the `n = 5` reference table: pairs sharing a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub pairs: Vec<(Partition, Partition)>,
    pub polynomial: IntPolynomial,
    pub roots: Vec<i64>,
}

const TABLE5_PAIRS: &[&[(&[usize], &[usize])]] = &[
    &[(&[5], &[5]), (&[1, 1, 1, 1, 1], &[1, 1, 1, 1, 1])],
    &[(&[5], &[4, 1]), (&[1, 1, 1, 1, 1], &[2, 1, 1, 1])],
    &[(&[4, 1], &[4, 1]), (&[2, 1, 1, 1], &[2, 1, 1, 1])],
    &[(&[4, 1], &[2, 1, 1, 1])],
    &[(&[5], &[2, 1, 1, 1]), (&[1, 1, 1, 1, 1], &[4, 1])],
    &[(&[5], &[1, 1, 1, 1, 1])],
];

/// Character polynomials for six representative pairs with five boxes.
pub fn table5() -> Result<Vec<TableRow>> {
    let part = |s: &[usize]| Partition::new(s.to_vec()).expect("static partition");
    TABLE5_PAIRS
        .iter()
        .map(|row| {
            let pairs: Vec<_> = row.iter().map(|(l, m)| (part(l), part(m))).collect();
            let polynomial = character_polynomial(&pairs[0].0, &pairs[0].1)?;
            for (l, m) in &pairs[1..] {
                if character_polynomial(l, m)? != polynomial {
                    return Err(Error::Invariant(format!("{l},{m} does not share the polynomial of its row")));
                }
            }
            let roots = root_range(&pairs[0].0, &pairs[0].1)?.roots;
            Ok(TableRow { pairs, polynomial, roots })
        })
        .collect()
}

fn join_roots(roots: &[i64]) -> String {
    roots.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Tab-separated rendering with a header line.
pub fn render_table_plain(rows: &[TableRow]) -> String {
    let mut out = String::from("lambda,mu\tchi(q)\tintegral roots\n");
    for row in rows {
        let pairs: Vec<String> = row.pairs.iter().map(|(l, m)| format!("{l},{m}")).collect();
        writeln!(out, "{}\t{}\t{}", pairs.join("; "), row.polynomial, join_roots(&row.roots)).unwrap();
    }
    out
}

pub fn render_table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("pairs,polynomial,roots\n");
    for row in rows {
        let pairs: Vec<String> = row.pairs.iter().map(|(l, m)| format!("{l},{m}")).collect();
        writeln!(out, "\"{}\",{},\"{}\"", pairs.join("; "), row.polynomial, join_roots(&row.roots)).unwrap();
    }
    out
}

pub fn table_to_json(rows: &[TableRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "pairs": r.pairs.iter().map(|(l, m)| json!([l, m])).collect::<Vec<_>>(),
                    "polynomial": r.polynomial.to_json(),
                    "display": r.polynomial.to_string(),
                    "roots": r.roots,
                })
            })
            .collect(),
    )
}

pub fn table_from_json(v: &Value) -> Result<Vec<TableRow>> {
    let bad = |what: &str| Error::Parse(format!("table JSON: {what}"));
    v.as_array()
        .ok_or_else(|| bad("expected an array"))?
        .iter()
        .map(|row| {
            let pairs = row["pairs"]
                .as_array()
                .ok_or_else(|| bad("missing pairs"))?
                .iter()
                .map(|pair| {
                    let l = serde_json::from_value(pair[0].clone()).map_err(|e| bad(&e.to_string()))?;
                    let m = serde_json::from_value(pair[1].clone()).map_err(|e| bad(&e.to_string()))?;
                    Ok((l, m))
                })
                .collect::<Result<_>>()?;
            let polynomial = IntPolynomial::from_json(&row["polynomial"])?;
            let roots = serde_json::from_value(row["roots"].clone()).map_err(|e| bad(&e.to_string()))?;
            Ok(TableRow { pairs, polynomial, roots })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reference_polynomials() {
        assert_eq!(
            character_polynomial(&p(&[5]), &p(&[5])).unwrap().to_string(),
            "q^5+10q^4+35q^3+50q^2+24q"
        );
        assert_eq!(
            character_polynomial(&p(&[4, 1]), &p(&[2, 1, 1, 1])).unwrap().to_string(),
            "16q^5-40q^4+20q^3-20q^2+24q"
        );
        assert_eq!(character_polynomial(&p(&[2]), &p(&[1, 1])).unwrap().to_string(), "q^2-q");
        assert!(character_polynomial(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn sign_against_trivial_is_falling_factorial() {
        for n in 1..=7usize {
            let expect = (0..n as i64).fold(IntPolynomial::from_i64(&[1]), |acc, r| &acc * &IntPolynomial::linear(r));
            let got = character_polynomial(&Partition::column(n), &Partition::row(n)).unwrap();
            assert_eq!(got, expect, "n = {n}");
        }
    }

    #[test]
    fn root_ranges() {
        let r = root_range(&p(&[5]), &p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!((r.q_minus, r.q_plus, r.roots.clone()), (-1, 5, vec![0, 1, 2, 3, 4]));
        let r = root_range(&p(&[4, 1]), &p(&[2, 1, 1, 1])).unwrap();
        assert_eq!((r.q_minus, r.q_plus, r.roots), (-1, 3, vec![0, 1, 2]));
        let r = root_range(&p(&[5]), &p(&[5])).unwrap();
        assert_eq!((r.q_minus, r.q_plus, r.roots), (-5, 1, vec![-4, -3, -2, -1, 0]));
        for n in 1..=5 {
            for l in partitions_of(n, n) {
                assert_eq!(root_range(&l, &l).unwrap().q_plus, 1);
            }
        }
        assert!(root_range(&Partition::empty(), &Partition::empty()).is_err());
    }

    #[test]
    fn feasibility() {
        for n in 1..=5 {
            for l in partitions_of(n, n) {
                assert!(marginal_feasible(&l, &l, 1).unwrap());
            }
            let (col, row) = (Partition::column(n), Partition::row(n));
            assert!(marginal_feasible(&col, &row, n).unwrap());
            if n > 1 {
                assert!(!marginal_feasible(&col, &row, n - 1).unwrap());
            }
        }
        assert!(!marginal_feasible(&p(&[4, 1]), &p(&[2, 1, 1, 1]), 2).unwrap());
        assert!(marginal_feasible(&p(&[4, 1]), &p(&[2, 1, 1, 1]), 3).unwrap());
    }

    #[test]
    fn table_json_round_trip() {
        let rows = table5().unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(table_from_json(&table_to_json(&rows)).unwrap(), rows);
    }
}
