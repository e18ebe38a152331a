use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Partition in Frobenius notation `(a_1,...,a_l | b_1,...,b_l)` with
/// `a_i = b_i` or `a_i = b_i + 1` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NearBalancedShape {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

fn strictly_decreasing(v: &[usize]) -> bool {
    v.windows(2).all(|p| p[0] > p[1])
}

impl NearBalancedShape {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::Domain("arms and legs differ in length".into()));
        }
        if !strictly_decreasing(&arms) || !strictly_decreasing(&legs) {
            return Err(Error::Domain("arms and legs must strictly decrease".into()));
        }
        if arms.iter().zip(&legs).any(|(&a, &b)| a != b && a != b + 1) {
            return Err(Error::Domain(format!("({arms:?} | {legs:?}) is not near-balanced")));
        }
        Ok(NearBalancedShape { arms, legs })
    }

    pub fn empty() -> Self {
        NearBalancedShape { arms: Vec::new(), legs: Vec::new() }
    }

    /// Frobenius coordinates of an ordinary partition, checked for near-balance.
    pub fn from_partition(lambda: &[usize]) -> Result<Self> {
        if lambda.windows(2).any(|p| p[0] < p[1]) || lambda.contains(&0) {
            return Err(Error::Domain(format!("{lambda:?} is not a partition")));
        }
        let conj = conjugate(lambda);
        let l = lambda.iter().enumerate().take_while(|&(i, &p)| p > i).count();
        let arms = (0..l).map(|i| lambda[i] - i - 1).collect();
        let legs = (0..l).map(|i| conj[i] - i - 1).collect();
        Self::new(arms, legs)
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.arms.len()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        let l = self.durfee();
        let mut rows: Vec<usize> = (0..l).map(|i| self.arms[i] + i + 1).collect();
        let depth = self.legs.first().map_or(0, |b| b + 1);
        for r in l..depth {
            rows.push(self.legs.iter().enumerate().filter(|&(j, &b)| b + j >= r).count());
        }
        rows
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        conjugate(&self.row_lengths())
    }

    /// Number of diagonal cells with a balanced hook (`a_i = b_i`).
    pub fn balanced_hooks(&self) -> usize {
        self.arms.iter().zip(&self.legs).filter(|(a, b)| a == b).count()
    }

    pub fn cells(&self) -> usize {
        self.row_lengths().iter().sum()
    }

    pub fn cells_above_diagonal(&self) -> usize {
        self.arms.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.arms.is_empty()
    }
}

impl fmt::Display for NearBalancedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", j(&self.arms), j(&self.legs))
    }
}

pub(crate) fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let len = lambda.first().copied().unwrap_or(0);
    (0..len).map(|j| lambda.iter().filter(|&&p| p > j).count()).collect()
}

/// Near-balanced shapes whose first column has at most `n` cells, ordered by
/// Durfee length, then arms, then legs.
pub fn enumerate_near_balanced(n: usize) -> Vec<NearBalancedShape> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let legs: Vec<usize> = (0..n).rev().filter(|&b| mask >> b & 1 == 1).collect();
        let l = legs.len();
        for choice in 0u64..(1u64 << l) {
            let arms: Vec<usize> = (0..l).map(|i| legs[i] + (choice >> i & 1) as usize).collect();
            if strictly_decreasing(&arms) {
                out.push(NearBalancedShape { arms, legs: legs.clone() });
            }
        }
    }
    out.sort_by(|x, y| (x.durfee(), &x.arms, &x.legs).cmp(&(y.durfee(), &y.arms, &y.legs)));
    out
}
