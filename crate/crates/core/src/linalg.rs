//! Small exact linear algebra over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int_rat(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Determinant by Gaussian elimination with exact pivoting.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut result = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            result = -result;
        }
        let p = m[col][col].clone();
        result *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    result
}

/// `f64` rendering that survives huge numerators and denominators.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // shift both to a manageable size before dividing
    let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(900);
    let n = (x.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::MAX);
    let v = n / d;
    if x.is_negative() {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let m = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        assert_eq!(det(m), rat(5, 1));
        let m = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(det(m), rat(-1, 1));
        let m = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 1), rat(2, 3)]];
        assert_eq!(det(m), rat(0, 1));
        assert_eq!(det(Vec::new()), rat(1, 1));
    }

    #[test]
    fn float_rendering_of_large_values() {
        let big = Rational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399) * 4);
        assert!((to_f64(&big) - 2.5).abs() < 1e-12);
        assert_eq!(to_f64(&rat(-3, 4)), -0.75);
    }
}
