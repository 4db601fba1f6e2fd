//! One-column Kostka polynomials of types C and D.

use crate::exactalg::{RationalExpr, Var};
use crate::qseries::{qbinom_or_zero, qint};

use super::coeffs::Family;
use super::matrix::{max_size, Orientation, TriMatrix};
use super::TransError;

fn t() -> RationalExpr {
    RationalExpr::var(Var::T)
}

/// `K_{(1^r),(1^{r-2j})}` in the ratio form.
pub fn kostka_ratio(family: Family, n: i64, r: i64, j: i64) -> Result<RationalExpr, TransError> {
    let m = n - r;
    let t = t();
    let t2 = &t * &t;
    Ok(match family {
        Family::C => t2
            .pow(j as u32)
            .mul(&qint(m + 1, &t2)?)
            .try_div(&qint(m + j + 1, &t2)?)?
            .mul(&qbinom_or_zero(m + 2 * j, j, &t2)?),
        Family::D => t
            .pow(j as u32)
            .mul(&t.pow(m as u32).add(&RationalExpr::one()))
            .try_div(&t.pow((m + 2 * j) as u32).add(&RationalExpr::one()))?
            .mul(&qbinom_or_zero(m + 2 * j, j, &t2)?),
    })
}

/// `K_{(1^r),(1^{r-2j})}` in the difference (type C) or split (type D) form.
pub fn kostka_split(family: Family, n: i64, r: i64, j: i64) -> Result<RationalExpr, TransError> {
    let m = n - r;
    let t = t();
    let t2 = &t * &t;
    if j == 0 {
        return Ok(RationalExpr::one());
    }
    Ok(match family {
        Family::C => qbinom_or_zero(m + 2 * j, j, &t2)?.sub(&qbinom_or_zero(m + 2 * j, j - 1, &t2)?),
        Family::D => t
            .pow((m + j) as u32)
            .mul(&qbinom_or_zero(m + 2 * j - 1, j - 1, &t2)?)
            .add(&t.pow(j as u32).mul(&qbinom_or_zero(m + 2 * j - 1, j, &t2)?)),
    })
}

/// The Kostka polynomial, checked to agree in both closed forms and to have
/// nonnegative integer coefficients.
pub fn kostka(family: Family, n: i64, r: i64, j: i64) -> Result<RationalExpr, TransError> {
    if !(0 <= r && r <= n && 0 <= j && 2 * j <= r) {
        return Err(TransError::OutOfRange(format!("kostka needs 0 <= r <= n and 0 <= 2j <= r, got n={n}, r={r}, j={j}")));
    }
    let a = kostka_ratio(family, n, r, j)?;
    let b = kostka_split(family, n, r, j)?;
    if a != b {
        return Err(TransError::Mismatch(format!("kostka closed forms differ at n={n}, r={r}, j={j}: {a} vs {b}")));
    }
    if !a.is_nonneg_integral_poly() {
        return Err(TransError::Mismatch(format!("kostka polynomial {a} has a negative or non-integral coefficient")));
    }
    Ok(a)
}

/// The Kostka matrix with `K_{(1^r),(1^{r-2j})}` at `(n-r, n-r+2j)`.
pub fn kostka_matrix(family: Family, rows: usize, cols: usize) -> Result<TriMatrix, TransError> {
    if rows.max(cols) > 2 * max_size() + 2 {
        return Err(TransError::OutOfRange(format!("kostka table {rows}x{cols} exceeds the size bound {}", max_size())));
    }
    let name = match family {
        Family::C => "kostka-c",
        Family::D => "kostka-d",
    };
    let mut m = TriMatrix::new(rows, cols, Orientation::UpperEven, name);
    for i in 0..rows {
        for j in (i..cols).step_by(2) {
            let k = ((j - i) / 2) as i64;
            m.set(i, j, kostka(family, i as i64 + 2 * k, 2 * k, k)?);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let k = |f, m, j| kostka(f, m + 2 * j, 2 * j, j).unwrap().to_string();
        assert_eq!(k(Family::C, 0, 1), "t^2");
        assert_eq!(k(Family::C, 0, 2), "t^4 + t^8");
        assert_eq!(k(Family::C, 1, 2), "t^4 + t^6 + t^8 + t^10 + t^12");
        assert_eq!(k(Family::D, 0, 1), "2*t");
        assert_eq!(k(Family::D, 1, 1), "t + t^2 + t^3");
    }
}
