use rustc_hash::FxHashMap;

use super::LaurentPoly;
use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials.
pub type Matrix<C> = Vec<Vec<LaurentPoly<C>>>;

pub fn identity_matrix<C: Coeff>(n: usize, dim: usize) -> Matrix<C> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { LaurentPoly::one(n) } else { LaurentPoly::zero(n) })
                .collect()
        })
        .collect()
}

pub fn mat_mul<C: Coeff>(n: usize, a: &Matrix<C>, b: &Matrix<C>) -> Result<Matrix<C>> {
    let inner = b.len();
    if a.iter().any(|row| row.len() != inner) {
        return Err(Error::NotSquare { rows: a.len(), cols: inner });
    }
    let cols = b.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        let mut out_row = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut acc = LaurentPoly::zero(n);
            for (x, b_row) in row.iter().zip(b) {
                if !x.is_zero() && !b_row[j].is_zero() {
                    acc.add_assign_ref(&x.checked_mul(&b_row[j])?);
                }
            }
            out_row.push(acc);
        }
        out.push(out_row);
    }
    Ok(out)
}

/// Division-free determinant by cofactor expansion along the first row.
///
/// Minors are memoized on the set of columns still in use, so the cost is
/// `O(2^d d)` polynomial products instead of `d!`.
pub fn determinant<C: Coeff>(n: usize, m: &Matrix<C>) -> Result<LaurentPoly<C>> {
    let d = m.len();
    if let Some(row) = m.iter().find(|row| row.len() != d) {
        return Err(Error::NotSquare { rows: d, cols: row.len() });
    }
    if d == 0 {
        return Ok(LaurentPoly::one(n));
    }
    assert!(d < 31, "determinant dimension too large");
    if let Some(p) = m.iter().flatten().find(|p| p.nvars() != n) {
        return Err(Error::RingMismatch { left: n, right: p.nvars() });
    }
    let mut memo: FxHashMap<u32, LaurentPoly<C>> = FxHashMap::default();
    Ok(minor(m, 0, (1u32 << d) - 1, n, &mut memo))
}

fn minor<C: Coeff>(
    m: &Matrix<C>,
    row: usize,
    cols: u32,
    n: usize,
    memo: &mut FxHashMap<u32, LaurentPoly<C>>,
) -> LaurentPoly<C> {
    if cols == 0 {
        return LaurentPoly::one(n);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = LaurentPoly::zero(n);
    let mut sign = 1;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << j), n, memo);
            if !sub.is_zero() {
                let term = entry * &sub;
                if sign > 0 {
                    acc.add_assign_ref(&term);
                } else {
                    acc.add_assign_ref(&-term);
                }
            }
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn one_by_one() {
        let p = P::u(1) + P::x(1, 1);
        assert_eq!(determinant(1, &vec![vec![p.clone()]]).unwrap(), p);
    }

    #[test]
    fn vandermonde_two() {
        let n = 2;
        let (x1, x2) = (P::x(n, 1), P::x(n, 2));
        let m = vec![vec![x1.clone(), x2.clone()], vec![x1.pow(2), x2.pow(2)]];
        let want = &x1 * &x2.pow(2) - &x2 * &x1.pow(2);
        assert_eq!(determinant(n, &m).unwrap(), want);
    }

    #[test]
    fn three_by_three_integer() {
        let c = |k: i64| P::from_int(0, k);
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(1), c(1), c(1)],
        ];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(determinant(0, &m).unwrap().is_zero());
    }

    #[test]
    fn rejects_ragged() {
        let m = vec![vec![P::one(0), P::one(0)], vec![P::one(0)]];
        assert!(matches!(determinant(0, &m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn identity_is_neutral() {
        let n = 1;
        let a = vec![vec![P::u(n), P::v(n)], vec![P::w(n), P::x(n, 1)]];
        assert_eq!(mat_mul(n, &a, &identity_matrix(n, 2)).unwrap(), a);
    }
}
