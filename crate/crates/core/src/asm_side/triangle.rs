use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};

/// Triangular array with strictly increasing rows and weakly increasing
/// diagonals: `m[i+1][j] <= m[i][j] <= m[i+1][j+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<i64>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != i + 1 {
                return Err(Error::Domain(format!("row {} has {} entries", i + 1, r.len())));
            }
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Domain(format!("row {} is not strictly increasing", i + 1)));
            }
            if i > 0 {
                let below = r;
                let above = &rows[i - 1];
                for (j, &a) in above.iter().enumerate() {
                    if !(below[j] <= a && a <= below[j + 1]) {
                        return Err(Error::Domain(format!("entry ({i}, {}) breaks interlacing", j + 1)));
                    }
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub(crate) fn new_unchecked(rows: Vec<Vec<i64>>) -> Self {
        MonotoneTriangle { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn bottom(&self) -> &[i64] {
        self.rows.last().map_or(&[], Vec::as_slice)
    }

    /// Entry in row `i`, position `j` (both 1-based).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.rows[i - 1].iter().sum()
        }
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        render_centered(f, &cells)
    }
}

pub(crate) fn render_centered(f: &mut fmt::Formatter<'_>, cells: &[Vec<String>]) -> fmt::Result {
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let n = cells.len();
    for (i, row) in cells.iter().enumerate() {
        let pad = " ".repeat((n - i - 1) * (width + 1) / 2 + (n - i - 1) / 2);
        let line: Vec<String> = row.iter().map(|c| format!("{c:^width$}")).collect();
        writeln!(f, "{pad}{}", line.join(" ".repeat(width / 2 + 2).as_str()).trim_end())?;
    }
    Ok(())
}

/// All monotone triangles with the given strictly increasing bottom row,
/// in lexicographic order of their rows from the top.
pub fn enumerate_mt(bottom: &[i64]) -> Vec<MonotoneTriangle> {
    assert!(bottom.windows(2).all(|w| w[0] < w[1]), "bottom row must be strictly increasing");
    let mut out = Vec::new();
    let mut stack = vec![bottom.to_vec()];
    grow(&mut stack, &mut out);
    out.sort();
    out
}

fn grow(stack: &mut Vec<Vec<i64>>, out: &mut Vec<MonotoneTriangle>) {
    let below = stack.last().unwrap().clone();
    if below.len() <= 1 {
        let rows: Vec<Vec<i64>> = stack.iter().rev().cloned().collect();
        out.push(MonotoneTriangle::new_unchecked(rows));
        return;
    }
    let m = below.len() - 1;
    let mut row = vec![0i64; m];
    fill(0, &below, &mut row, stack, out);
}

fn fill(j: usize, below: &[i64], row: &mut Vec<i64>, stack: &mut Vec<Vec<i64>>, out: &mut Vec<MonotoneTriangle>) {
    if j == row.len() {
        stack.push(row.clone());
        grow(stack, out);
        stack.pop();
        return;
    }
    let lo = if j == 0 { below[0] } else { below[j].max(row[j - 1] + 1) };
    for x in lo..=below[j + 1] {
        row[j] = x;
        fill(j + 1, below, row, stack, out);
    }
}

/// Per-row counts of special, left-leaning and right-leaning entries (rows
/// `1..n-1`) and the exponents `d_1..d_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtStatistics {
    pub s: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub d: Vec<i64>,
}

impl MtStatistics {
    pub fn special(&self) -> usize {
        self.s.iter().sum()
    }

    pub fn left(&self) -> usize {
        self.l.iter().sum()
    }

    pub fn right(&self) -> usize {
        self.r.iter().sum()
    }
}

pub fn mt_statistics(m: &MonotoneTriangle) -> MtStatistics {
    let n = m.order();
    let rows = n.saturating_sub(1);
    let (mut s, mut l, mut r) = (vec![0; rows], vec![0; rows], vec![0; rows]);
    for i in 1..n {
        for j in 1..=i {
            let e = m.get(i, j);
            if e == m.get(i + 1, j) {
                l[i - 1] += 1;
            } else if e == m.get(i + 1, j + 1) {
                r[i - 1] += 1;
            } else {
                s[i - 1] += 1;
            }
        }
    }
    let d = (1..=n)
        .map(|i| {
            let (ri, li) = if i >= 2 { (r[i - 2] as i64, l[i - 2] as i64) } else { (0, 0) };
            m.row_sum(i) - m.row_sum(i - 1) + ri - li
        })
        .collect();
    MtStatistics { s, l, r, d }
}

/// `u^r v^l ∏ X_i^{d_i} (w + u X_i + v X_i^{-1})^{s_{i-1}}`.
pub fn mt_weight_w0<C: Coeff>(m: &MonotoneTriangle) -> LaurentPoly<C> {
    let n = m.order();
    let st = mt_statistics(m);
    let mut mono = Monomial::one(n);
    mono.set_exp(Var::U, st.right() as i32);
    mono.set_exp(Var::V, st.left() as i32);
    for (i, &d) in st.d.iter().enumerate() {
        mono.set_exp(Var::X(i + 1), d as i32);
    }
    let mut out = LaurentPoly::monomial(mono);
    for i in 2..=n {
        let k = st.s[i - 2];
        if k > 0 {
            out = &out * &special_factor(n, i).pow(k as u32);
        }
    }
    out
}

/// `w + u X_i + v X_i^{-1}`.
pub(crate) fn special_factor<C: Coeff>(n: usize, i: usize) -> LaurentPoly<C> {
    let x = LaurentPoly::x(n, i);
    let xinv = LaurentPoly::monomial(Monomial::var_pow(n, Var::X(i), -1));
    LaurentPoly::w(n) + LaurentPoly::u(n) * x + LaurentPoly::v(n) * xinv
}
