use std::fmt;

use serde::{Deserialize, Serialize};

use super::sbcspp::{binom2, bit, for_each_filling, set_max, Sbcspp};
use super::shape::{enumerate_near_balanced, NearBalancedShape};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};

/// Column strict plane partition of near-balanced shape with parts in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bcspp {
    order: usize,
    shape: NearBalancedShape,
    rows: Vec<Vec<u32>>,
}

impl Bcspp {
    pub fn new(order: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().flatten().any(|&e| e == 0 || e as usize > order) {
            return Err(Error::Domain(format!("entries must lie in 1..{order}")));
        }
        let cells = rows.iter().map(|r| r.iter().map(|&e| bit(e)).collect()).collect();
        let d = Sbcspp::new(order, cells)?;
        Ok(Bcspp { order, shape: d.shape().clone(), rows })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn shape(&self) -> &NearBalancedShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The integers of `1..d_jj` missing from column `j` below the diagonal.
    pub fn missing(&self, j: usize) -> Vec<u32> {
        let cols = self.shape.column_lengths();
        let below: Vec<u32> = (j + 1..cols[j]).map(|i| self.rows[i][j]).collect();
        (1..self.rows[j][j]).rev().filter(|e| !below.contains(e)).collect()
    }

    pub fn weight<C: Coeff>(&self) -> LaurentPoly<C> {
        let n = self.order;
        let mut x = vec![0i32; n];
        let (mut above, mut below) = (0i32, 0i32);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                x[e as usize - 1] += 1;
                if j > i {
                    above += 1;
                } else {
                    below += 1;
                }
            }
        }
        let base = Monomial::new(above, binom2(n) - below, self.shape.balanced_hooks() as i32, &x);
        let mut out = LaurentPoly::monomial(base);
        for j in 0..self.shape.durfee() {
            for e in self.missing(j) {
                let mut m = Monomial::one(n);
                m.set_exp(Var::X(e as usize), 1);
                m.set_exp(Var::V, -1);
                m.set_exp(Var::W, 1);
                out = &out * &(LaurentPoly::monomial(m) + LaurentPoly::one(n));
            }
        }
        out
    }

    /// The SBCSPPs whose principal part is this BCSPP: every subset of each
    /// column's missing integers, each integer joining the unique cell on or
    /// below the diagonal whose maximum is the next larger one.
    pub fn expand(&self) -> Vec<Sbcspp> {
        let cols = self.shape.column_lengths();
        let base: Vec<Vec<u32>> = self.rows.iter().map(|r| r.iter().map(|&e| bit(e)).collect()).collect();
        let mut out = vec![base];
        for j in 0..self.shape.durfee() {
            let missing = self.missing(j);
            let mut next = Vec::with_capacity(out.len() << missing.len());
            for cells in &out {
                for choice in 0u32..(1u32 << missing.len()) {
                    let mut c = cells.clone();
                    for (k, &e) in missing.iter().enumerate() {
                        if choice >> k & 1 == 1 {
                            let i = (j..cols[j]).rev().find(|&i| self.rows[i][j] > e).expect("diagonal exceeds e");
                            c[i][j] |= bit(e);
                        }
                    }
                    next.push(c);
                }
            }
            out = next;
        }
        out.into_iter().map(|c| Sbcspp::new(self.order, c).expect("expansion stays column strict")).collect()
    }

    /// Maxima of each cell.
    pub fn from_sbcspp(d: &Sbcspp) -> Self {
        let rows = d.cells().iter().map(|r| r.iter().map(|&m| set_max(m)).collect()).collect();
        Bcspp { order: d.order(), shape: d.shape().clone(), rows }
    }
}

impl fmt::Display for Bcspp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

pub fn for_each_bcspp(n: usize, mut visit: impl FnMut(&Bcspp)) {
    for shape in enumerate_near_balanced(n) {
        for_each_filling(n, &shape, false, &mut |grid| {
            let rows = grid.iter().map(|r| r.iter().map(|&m| set_max(m)).collect()).collect();
            visit(&Bcspp { order: n, shape: shape.clone(), rows });
        });
    }
}

pub fn enumerate_bcspp(n: usize) -> Vec<Bcspp> {
    let mut out = Vec::new();
    for_each_bcspp(n, |d| out.push(d.clone()));
    out
}

pub fn bcspp_weight<C: Coeff>(d: &Bcspp) -> LaurentPoly<C> {
    d.weight()
}

pub fn gf_bcspp<C: Coeff>(n: usize) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(n);
    for_each_bcspp(n, |d| out.add_assign_ref(&d.weight()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn empty_and_single_cell() {
        let all = enumerate_bcspp(1);
        assert_eq!(all.len(), 3);
        let n = 1;
        assert_eq!(all[0].weight::<BigInt>(), P::v(n));
        assert_eq!(all[1].weight::<BigInt>(), P::w(n) * P::x(n, 1));
        assert_eq!(Bcspp::new(2, vec![]).unwrap().weight::<BigInt>(), P::v(2).pow(3));
    }

    #[test]
    fn missing_excludes_the_diagonal() {
        let d = Bcspp::new(3, vec![vec![3, 3], vec![1]]).unwrap();
        assert_eq!(d.missing(0), vec![2]);
        assert!(Bcspp::new(3, vec![vec![3, 3], vec![3]]).is_err());
    }
}
