use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Column strict shifted plane partition. Row `i` (0-based) starts in column
/// `i`; rows weakly decrease and columns strictly decrease.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedCsspp {
    rows: Vec<Vec<u32>>,
}

impl ShiftedCsspp {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::Domain(format!("row {} is empty", i + 1)));
            }
            if row.contains(&0) {
                return Err(Error::Domain("entries must be positive".into()));
            }
            if row.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::Domain(format!("row {} is not weakly decreasing", i + 1)));
            }
            if i > 0 {
                let prev = &rows[i - 1];
                if row.len() >= prev.len() {
                    return Err(Error::Domain("row lengths must strictly decrease".into()));
                }
                if row.iter().enumerate().any(|(c, &e)| e >= prev[c + 1]) {
                    return Err(Error::Domain(format!("column strictness fails in row {}", i + 1)));
                }
            }
        }
        Ok(ShiftedCsspp { rows })
    }

    pub fn empty() -> Self {
        ShiftedCsspp { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_part(&self) -> u32 {
        self.rows.first().map_or(0, |r| r[0])
    }

    /// First part of every row exceeds its length by exactly `k`.
    pub fn is_class(&self, k: i64) -> bool {
        self.rows.iter().all(|r| r[0] as i64 == r.len() as i64 + k)
    }

    /// First part of each row exceeds the row length and is at most the
    /// length of the previous row.
    pub fn is_dpp(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            let first = r[0] as usize;
            first > r.len() && (i == 0 || first <= self.rows[i - 1].len())
        })
    }

    /// Indented rows, one per line.
    pub fn render(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)".into();
        }
        let width = self.max_part().to_string().len();
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&" ".repeat(i * (width + 1)));
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ShiftedCsspp {
    /// Rows separated by `/`, e.g. `7 6 6 5 5 / 5 5 4 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Descending plane partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dpp(ShiftedCsspp);

impl Dpp {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let p = ShiftedCsspp::new(rows)?;
        if !p.is_dpp() {
            return Err(Error::Domain(format!("{p} is not descending")));
        }
        Ok(Dpp(p))
    }

    pub fn empty() -> Self {
        Dpp(ShiftedCsspp::empty())
    }

    pub fn as_csspp(&self) -> &ShiftedCsspp {
        &self.0
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        self.0.rows()
    }
}

impl fmt::Display for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All weakly decreasing rows of length `len` with parts in `1..=max` that sit
/// strictly below `above` (the previous row, shifted one cell to the left).
pub(crate) fn shifted_rows(above: Option<&[u32]>, len: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(above: Option<&[u32]>, len: usize, cap: u32, row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let c = row.len();
        if c == len {
            out.push(row.clone());
            return;
        }
        let mut hi = cap;
        if let Some(a) = above {
            hi = hi.min(a[c + 1].saturating_sub(1));
        }
        for e in (1..=hi).rev() {
            row.push(e);
            go(above, len, e, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    go(above, len, max, &mut Vec::with_capacity(len), &mut out);
    out
}

/// DPPs with parts at most `n`, including the empty one.
pub fn enumerate_dpp(n: usize) -> Vec<Dpp> {
    fn go(n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Dpp>) {
        out.push(Dpp(ShiftedCsspp { rows: rows.clone() }));
        let (prev_len, above) = match rows.last() {
            Some(r) => (r.len(), Some(r.clone())),
            None => (n as usize + 1, None),
        };
        for len in 1..prev_len {
            for row in shifted_rows(above.as_deref(), len, n) {
                let first = row[0] as usize;
                if first > len && (rows.is_empty() || first <= prev_len) {
                    rows.push(row);
                    go(n, rows, out);
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(n as u32, &mut Vec::new(), &mut out);
    out
}

/// Adds 1 to every part and pads each row with 1's up to length
/// `first part - 1` of the original row.
pub fn dpp_to_class2(d: &Dpp) -> ShiftedCsspp {
    let rows = d
        .rows()
        .iter()
        .map(|r| {
            let target = r[0] as usize - 1;
            let mut row: Vec<u32> = r.iter().map(|e| e + 1).collect();
            row.resize(target, 1);
            row
        })
        .collect();
    ShiftedCsspp::new(rows).expect("class-2 image of a DPP is column strict")
}

pub fn class2_to_dpp(p: &ShiftedCsspp) -> Result<Dpp> {
    if !p.is_class(2) {
        return Err(Error::Domain(format!("{p} is not of class 2")));
    }
    let rows = p
        .rows()
        .iter()
        .map(|r| r.iter().filter(|&&e| e > 1).map(|e| e - 1).collect())
        .collect();
    Dpp::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dpp(rows: &[&[u32]]) -> Dpp {
        Dpp::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn running_example_to_class2() {
        let d = dpp(&[&[7, 6, 6, 5, 5], &[5, 5, 4, 4], &[3, 3], &[2]]);
        let c = dpp_to_class2(&d);
        let want = ShiftedCsspp::new(vec![vec![8, 7, 7, 6, 6, 1], vec![6, 6, 5, 5], vec![4, 4], vec![3]]).unwrap();
        assert_eq!(c, want);
        assert_eq!(class2_to_dpp(&c).unwrap(), d);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(ShiftedCsspp::new(vec![vec![3, 3], vec![3]]).is_err());
        assert!(ShiftedCsspp::new(vec![vec![3], vec![2]]).is_err());
        assert!(Dpp::new(vec![vec![1]]).is_err());
        assert!(class2_to_dpp(&ShiftedCsspp::new(vec![vec![2]]).unwrap()).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_dpp(0).len(), 1);
        assert_eq!(enumerate_dpp(1).len(), 1);
        assert_eq!(enumerate_dpp(2).len(), 2);
    }

    #[test]
    fn render_is_indented() {
        let d = dpp(&[&[3, 3], &[2]]);
        assert_eq!(d.as_csspp().render(), "3 3\n  2\n");
        assert_eq!(d.to_string(), "3 3 / 2");
    }
}
