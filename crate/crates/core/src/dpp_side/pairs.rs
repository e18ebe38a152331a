use std::fmt;

use serde::{Deserialize, Serialize};

use super::sbcspp::{binom2, bit, set_elements, set_max, set_min, Sbcspp};
use super::shifted::shifted_rows;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

/// A set-valued row strict shifted plane partition `L` together with a
/// column strict shifted plane partition `R`. Row `i` of `R` may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DppPair {
    order: usize,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
}

impl DppPair {
    /// `left` holds bitmasks (bit `e - 1` for element `e`), `right` plain
    /// entries; both have one row per diagonal cell.
    pub fn new(order: usize, left: Vec<Vec<u32>>, right: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Domain(msg));
        if order > 31 {
            return bad(format!("order {order} exceeds 31"));
        }
        if left.len() != right.len() {
            return bad("L and R need the same number of rows".into());
        }
        let limit = if order == 0 { 0 } else { u32::MAX >> (32 - order) };
        for i in 0..left.len() {
            let (l, r) = (&left[i], &right[i]);
            if l.is_empty() {
                return bad(format!("row {} of L is empty", i + 1));
            }
            if l.len() != r.len() && l.len() != r.len() + 1 {
                return bad(format!("row {} lengths violate the pairing", i + 1));
            }
            if l.iter().any(|&m| m == 0 || m & !limit != 0) || r.iter().any(|&e| e == 0 || e as usize > order) {
                return bad(format!("row {} has entries outside 1..{order}", i + 1));
            }
            if l.windows(2).any(|p| set_min(p[0]) <= set_max(p[1])) {
                return bad(format!("row {} of L is not strictly decreasing", i + 1));
            }
            if r.windows(2).any(|p| p[0] < p[1]) {
                return bad(format!("row {} of R is not weakly decreasing", i + 1));
            }
            if let Some(&r0) = r.first() {
                if set_max(l[0]) < r0 {
                    return bad(format!("row {}: max of L below max of R", i + 1));
                }
            }
            if i > 0 {
                let (pl, pr) = (&left[i - 1], &right[i - 1]);
                if l.len() >= pl.len() {
                    return bad("rows of L must strictly shrink".into());
                }
                if l.iter().enumerate().any(|(c, &m)| set_max(m) > set_max(pl[c + 1])) {
                    return bad(format!("columns of L increase in row {}", i + 1));
                }
                if !r.is_empty() {
                    if r.len() >= pr.len() {
                        return bad("rows of R must strictly shrink".into());
                    }
                    if r.iter().enumerate().any(|(c, &e)| e >= pr[c + 1]) {
                        return bad(format!("columns of R do not strictly decrease in row {}", i + 1));
                    }
                }
                if pr.first().is_none_or(|&p| p <= set_max(l[0])) {
                    return bad(format!("max of R in row {i} does not exceed max of L in row {}", i + 1));
                }
            }
        }
        Ok(DppPair { order, left, right })
    }

    pub fn empty(order: usize) -> Self {
        DppPair { order, left: Vec::new(), right: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn left(&self) -> &[Vec<u32>] {
        &self.left
    }

    pub fn right(&self) -> &[Vec<u32>] {
        &self.right
    }

    pub fn left_sets(&self) -> Vec<Vec<Vec<u32>>> {
        self.left.iter().map(|r| r.iter().map(|&m| set_elements(m)).collect()).collect()
    }

    pub fn monomial(&self) -> Monomial {
        let n = self.order;
        let mut x = vec![0i32; n];
        let (mut u, mut v, mut w) = (0i32, binom2(n), 0i32);
        for (l, r) in self.left.iter().zip(&self.right) {
            let entries: i32 = l.iter().map(|m| m.count_ones() as i32).sum();
            w += entries - l.len() as i32;
            v -= entries;
            for e in l.iter().flat_map(|&m| set_elements(m)) {
                x[e as usize - 1] += 1;
            }
            if r.len() + 1 == l.len() {
                w += 1;
            }
            u += r.len() as i32;
            for &e in r {
                x[e as usize - 1] += 1;
            }
        }
        Monomial::new(u, v, w, &x)
    }

    pub fn weight<C: Coeff>(&self) -> LaurentPoly<C> {
        LaurentPoly::monomial(self.monomial())
    }
}

impl fmt::Display for DppPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self
            .left_sets()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let r: Vec<String> =
            self.right.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "L = [{}], R = [{}]", l.join(" / "), r.join(" / "))
    }
}

/// Set-valued rows of length `len` that strictly decrease setwise and whose
/// maxima sit weakly below `above` (shifted one cell left).
fn set_rows(above: Option<&[u32]>, len: usize, n: u32) -> Vec<Vec<u32>> {
    fn go(above: Option<&[u32]>, len: usize, cap: u32, row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let c = row.len();
        if c == len {
            out.push(row.clone());
            return;
        }
        let mut hi = cap;
        if let Some(a) = above {
            hi = hi.min(set_max(a[c + 1]));
        }
        let need = (len - c - 1) as u32;
        for m in (need + 1..=hi).rev() {
            for extra in 0u32..(1u32 << (m - 1)) {
                let mask = bit(m) | extra;
                row.push(mask);
                go(above, len, set_min(mask) - 1, row, out);
                row.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(above, len, n, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Calls `visit` on every DPP pair of order `n`, built row by row directly
/// from the pair conditions.
pub fn for_each_dpp_pair(n: usize, mut visit: impl FnMut(&DppPair)) {
    fn go(n: u32, left: &mut Vec<Vec<u32>>, right: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&DppPair)) {
        visit(&DppPair { order: n as usize, left: left.clone(), right: right.clone() });
        let max_l = left.last().map_or(n as usize, |r| r.len() - 1);
        if let Some(r) = right.last() {
            if r.is_empty() {
                return;
            }
        }
        let cap = right.last().map_or(n, |r| r[0] - 1);
        for ll in 1..=max_l {
            let prev_l = left.last().cloned();
            for lrow in set_rows(prev_l.as_deref(), ll, cap) {
                let lmax = set_max(lrow[0]);
                for rl in [ll, ll - 1] {
                    let prev_r = right.last().cloned();
                    if let Some(p) = &prev_r {
                        if rl > 0 && rl >= p.len() {
                            continue;
                        }
                    }
                    let rows = if rl == 0 { vec![Vec::new()] } else { shifted_rows(prev_r.as_deref(), rl, lmax) };
                    for rrow in rows {
                        left.push(lrow.clone());
                        right.push(rrow);
                        go(n, left, right, visit);
                        left.pop();
                        right.pop();
                    }
                }
            }
        }
    }
    go(n as u32, &mut Vec::new(), &mut Vec::new(), &mut visit);
}

pub fn enumerate_dpp_pairs(n: usize) -> Vec<DppPair> {
    let mut out = Vec::new();
    for_each_dpp_pair(n, |p| out.push(p.clone()));
    out
}

pub fn pair_weight<C: Coeff>(p: &DppPair) -> LaurentPoly<C> {
    p.weight()
}

pub fn gf_dpp_pairs<C: Coeff>(n: usize) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(n);
    for_each_dpp_pair(n, |p| out.add_term(p.monomial(), C::one()));
    out
}

/// Reflects `L` in the main diagonal and places `R` strictly above it.
pub fn sbcspp_from_pair(p: &DppPair) -> Result<Sbcspp> {
    let l = p.left.len();
    let depth = p.left.iter().enumerate().map(|(j, r)| j + r.len()).max().unwrap_or(0);
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); depth];
    for (j, row) in p.left.iter().enumerate() {
        for (k, &m) in row.iter().enumerate().skip(1) {
            if cells[j + k].len() != j {
                return Err(Error::Domain("reflected L is not a partition shape".into()));
            }
            cells[j + k].push(m);
        }
    }
    for (i, cell) in cells.iter_mut().enumerate().take(l) {
        if cell.len() != i {
            return Err(Error::Domain("reflected L is not a partition shape".into()));
        }
        cell.push(p.left[i][0]);
        cell.extend(p.right[i].iter().map(|&e| bit(e)));
    }
    Sbcspp::new(p.order, cells)
}

/// Splits an SBCSPP along its diagonal.
pub fn pair_from_sbcspp(d: &Sbcspp) -> Result<DppPair> {
    let cells = d.cells();
    let cols = d.shape().column_lengths();
    let l = d.shape().durfee();
    let left = (0..l).map(|j| (j..cols[j]).map(|i| cells[i][j]).collect()).collect();
    let right = (0..l).map(|i| cells[i][i + 1..].iter().map(|&m| set_max(m)).collect()).collect();
    DppPair::new(d.order(), left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn empty_pair_weight() {
        assert_eq!(DppPair::empty(3).weight::<BigInt>(), P::v(3).pow(6));
    }

    #[test]
    fn order_one_pairs() {
        assert_eq!(enumerate_dpp_pairs(1).len(), 3);
    }

    #[test]
    fn rejects_crossing_rows() {
        // R row 1 must exceed the top of L row 2.
        let left = vec![vec![bit(3), bit(2)], vec![bit(2)]];
        assert!(DppPair::new(3, left.clone(), vec![vec![2], vec![]]).is_err());
        assert!(DppPair::new(3, left, vec![vec![3], vec![]]).is_ok());
    }
}
