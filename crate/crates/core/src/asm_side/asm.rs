use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::triangle::MonotoneTriangle;
use crate::error::{Error, Result};

/// Square matrix over `{-1, 0, 1}` whose nonzero entries alternate in sign
/// and sum to `1` along every row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Asm {
    rows: Vec<Vec<i8>>,
}

fn alternates(line: impl Iterator<Item = i8>) -> bool {
    let mut expect = 1;
    let mut sum = 0;
    for x in line {
        match x {
            0 => {}
            1 | -1 if x == expect => {
                sum += x as i32;
                expect = -expect;
            }
            _ => return false,
        }
    }
    sum == 1
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: rows.first().map_or(0, Vec::len) });
        }
        for r in &rows {
            if !alternates(r.iter().copied()) {
                return Err(Error::Domain(format!("row {r:?} does not alternate")));
            }
        }
        for j in 0..n {
            if !alternates(rows.iter().map(|r| r[j])) {
                return Err(Error::Domain(format!("column {} does not alternate", j + 1)));
            }
        }
        Ok(Asm { rows })
    }

    pub fn identity(n: usize) -> Self {
        Asm { rows: (0..n).map(|i| (0..n).map(|j| i8::from(i == j)).collect()).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Number of `-1` entries.
    pub fn negatives(&self) -> usize {
        self.rows.iter().flatten().filter(|&&x| x < 0).count()
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Row `i` of the triangle lists the columns holding a `1` in the sum of the
/// first `i` rows of the matrix.
pub fn asm_to_mt(a: &Asm) -> MonotoneTriangle {
    let n = a.order();
    let mut partial = vec![0i32; n];
    let mut rows = Vec::with_capacity(n);
    for r in &a.rows {
        for (p, &x) in partial.iter_mut().zip(r) {
            *p += x as i32;
        }
        rows.push((0..n).filter(|&j| partial[j] == 1).map(|j| j as i64 + 1).collect());
    }
    MonotoneTriangle::new(rows).expect("partial column sums of an ASM form a monotone triangle")
}

pub fn mt_to_asm(m: &MonotoneTriangle) -> Result<Asm> {
    let n = m.order();
    let expected: Vec<i64> = (1..=n as i64).collect();
    if m.bottom() != expected.as_slice() {
        return Err(Error::Domain(format!("bottom row {:?} is not 1..{n}", m.bottom())));
    }
    let mut prev = vec![0i8; n];
    let mut rows = Vec::with_capacity(n);
    for row in m.rows() {
        let mut cur = vec![0i8; n];
        for &e in row {
            cur[(e - 1) as usize] = 1;
        }
        rows.push(cur.iter().zip(&prev).map(|(a, b)| a - b).collect());
        prev = cur;
    }
    Asm::new(rows)
}

/// All `n x n` ASMs: rows are built as alternating vectors, keeping every
/// column partial sum in `{0, 1}`.
pub fn enumerate_asm(n: usize) -> Vec<Asm> {
    fn row_options(n: usize, partial: &[i8]) -> Vec<Vec<i8>> {
        // a row r is admissible iff partial + r is a 0/1 vector and r alternates
        let mut out = Vec::new();
        let mut cur = vec![0i8; n];
        fn go(j: usize, expect: i8, n: usize, partial: &[i8], cur: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
            if j == n {
                if expect == -1 {
                    out.push(cur.clone());
                }
                return;
            }
            cur[j] = 0;
            go(j + 1, expect, n, partial, cur, out);
            let next = partial[j] + expect;
            if next == 0 || next == 1 {
                cur[j] = expect;
                go(j + 1, -expect, n, partial, cur, out);
                cur[j] = 0;
            }
        }
        go(0, 1, n, partial, &mut cur, &mut out);
        out
    }

    fn build(n: usize, partial: &mut Vec<i8>, rows: &mut Vec<Vec<i8>>, out: &mut Vec<Asm>) {
        if rows.len() == n {
            if partial.iter().all(|&p| p == 1) {
                out.push(Asm { rows: rows.clone() });
            }
            return;
        }
        for r in row_options(n, partial) {
            for (p, x) in partial.iter_mut().zip(&r) {
                *p += x;
            }
            rows.push(r);
            build(n, partial, rows, out);
            let r = rows.pop().unwrap();
            for (p, x) in partial.iter_mut().zip(&r) {
                *p -= x;
            }
        }
    }

    let mut out = Vec::new();
    build(n, &mut vec![0; n], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `∏_{i=0}^{n-1} (3i+1)! / (n+i)!`.
pub fn asm_count(n: usize) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, i| acc * i);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= fact(3 * i + 1);
        den *= fact(n + i);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let want = [1, 1, 2, 7, 42, 429, 7436];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(asm_count(n), BigInt::from(c));
        }
    }

    #[test]
    fn enumeration_matches_product_formula() {
        for n in 1..=5 {
            assert_eq!(BigInt::from(enumerate_asm(n).len()), asm_count(n));
        }
    }

    #[test]
    fn identity_triangle() {
        let t = asm_to_mt(&Asm::identity(4));
        let want: Vec<Vec<i64>> = (1..=4).map(|i| (1..=i).collect()).collect();
        assert_eq!(t.rows(), want.as_slice());
    }

    #[test]
    fn five_by_five_example() {
        let a = Asm::new(vec![
            vec![0, 1, 0, 0, 0],
            vec![1, -1, 0, 1, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap();
        let t = asm_to_mt(&a);
        let want = vec![vec![2], vec![1, 4], vec![1, 2, 5], vec![1, 2, 3, 5], vec![1, 2, 3, 4, 5]];
        assert_eq!(t.rows(), want.as_slice());
        assert_eq!(mt_to_asm(&t).unwrap(), a);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(Asm::new(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(Asm::new(vec![vec![-1]]).is_err());
        let t = MonotoneTriangle::new(vec![vec![2], vec![2, 3]]).unwrap();
        assert!(mt_to_asm(&t).is_err());
    }
}
