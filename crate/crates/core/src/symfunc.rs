//! Complete homogeneous and elementary symmetric polynomials, extended to
//! negative degree, and Schur polynomials indexed by arbitrary integer vectors.

use std::ops::RangeInclusive;

use rustc_hash::FxHashMap;

use crate::coeff::Coeff;
use crate::laurent::{determinant, LaurentPoly, Matrix, Monomial, Var};

fn range_vars(vars: RangeInclusive<usize>) -> Vec<usize> {
    vars.collect()
}

/// `h_k(X_a, .., X_b)` in a ring with `n` X-variables; `a > b` is the empty set.
///
/// For `k < 0` with `m` variables this is
/// `(-1)^{m+1} sum X^e` over exponent vectors with all `e_i < 0` summing to `k`,
/// which vanishes for `-m < k < 0`.
pub fn h_ext<C: Coeff>(n: usize, k: i64, vars: RangeInclusive<usize>) -> LaurentPoly<C> {
    h_subset(n, k, &range_vars(vars))
}

/// [`h_ext`] over an arbitrary set of (1-based, distinct) variables.
pub fn h_subset<C: Coeff>(n: usize, k: i64, vars: &[usize]) -> LaurentPoly<C> {
    let m = vars.len() as i64;
    if k >= 0 {
        return h_plain(n, k as usize, vars);
    }
    if m == 0 || k > -m {
        return LaurentPoly::zero(n);
    }
    // reciprocity: h_k(X) = (-1)^{m+1} prod X^{-1} h_{-k-m}(X^{-1})
    let inner = h_plain::<C>(n, (-k - m) as usize, vars).invert_x(vars);
    let mut shift = Monomial::one(n);
    for &i in vars {
        shift.set_exp(Var::X(i), -1);
    }
    let p = inner.mul_monomial(&shift);
    if m % 2 == 0 {
        -p
    } else {
        p
    }
}

fn h_plain<C: Coeff>(n: usize, k: usize, vars: &[usize]) -> LaurentPoly<C> {
    // table[d] = h_d of the variables seen so far
    let mut table: Vec<LaurentPoly<C>> = (0..=k)
        .map(|d| if d == 0 { LaurentPoly::one(n) } else { LaurentPoly::zero(n) })
        .collect();
    for &i in vars {
        let x = LaurentPoly::x(n, i);
        for d in 1..=k {
            let shifted = &x * &table[d - 1];
            table[d].add_assign_ref(&shifted);
        }
    }
    table.pop().unwrap()
}

/// Elementary symmetric polynomial `e_k(X_a, .., X_b)`.
pub fn e_sym<C: Coeff>(n: usize, k: i64, vars: RangeInclusive<usize>) -> LaurentPoly<C> {
    e_subset(n, k, &range_vars(vars))
}

pub fn e_subset<C: Coeff>(n: usize, k: i64, vars: &[usize]) -> LaurentPoly<C> {
    if k < 0 || k as usize > vars.len() {
        return LaurentPoly::zero(n);
    }
    let k = k as usize;
    let mut table: Vec<LaurentPoly<C>> = (0..=k)
        .map(|d| if d == 0 { LaurentPoly::one(n) } else { LaurentPoly::zero(n) })
        .collect();
    for &i in vars {
        let x = LaurentPoly::x(n, i);
        for d in (1..=k).rev() {
            let shifted = &x * &table[d - 1];
            table[d].add_assign_ref(&shifted);
        }
    }
    table.pop().unwrap()
}

/// Result of rewriting `s_λ` for an arbitrary integer vector `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    /// `+1`, `-1`, or `0` when the polynomial vanishes.
    pub sign: i8,
    /// A partition (weakly decreasing, nonnegative).
    pub mu: Vec<i64>,
    /// `s_λ = sign * s_μ * prod X_i^{-p}`.
    pub p: i64,
}

/// Normalizes the weight vector `k = (k_1..k_n)`, read as `λ = (k_n, .., k_1)`.
pub fn normalize_weight(k: &[i64]) -> Normalized {
    let lambda: Vec<i64> = k.iter().rev().copied().collect();
    normalize_lambda(&lambda)
}

/// Same as [`normalize_weight`] but on `λ` directly.
pub fn normalize_lambda(lambda: &[i64]) -> Normalized {
    let n = lambda.len();
    let shifted: Vec<i64> = lambda.iter().enumerate().map(|(i, &l)| l - i as i64).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| shifted[b].cmp(&shifted[a]));
    if order.windows(2).any(|w| shifted[w[0]] == shifted[w[1]]) {
        return Normalized { sign: 0, mu: Vec::new(), p: 0 };
    }
    let sign = permutation_sign(&order);
    let raw: Vec<i64> = order.iter().enumerate().map(|(i, &s)| shifted[s] + i as i64).collect();
    let p = raw.last().map_or(0, |&last| (-last).max(0));
    Normalized { sign, mu: raw.iter().map(|x| x + p).collect(), p }
}

pub(crate) fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Memo table for Schur polynomials of partitions, keyed by
/// (number of variables, partition).
pub struct SchurCache<C> {
    n: usize,
    memo: FxHashMap<(usize, Vec<i64>), LaurentPoly<C>>,
}

impl<C: Coeff> SchurCache<C> {
    /// Cache for polynomials living in a ring with `n` X-variables.
    pub fn new(n: usize) -> Self {
        SchurCache { n, memo: FxHashMap::default() }
    }

    /// `s_μ(X_1..X_m)` for a partition `μ` with at most `m` parts (padded).
    pub fn partition(&mut self, mu: &[i64], m: usize) -> LaurentPoly<C> {
        let mut key: Vec<i64> = mu.iter().copied().filter(|&x| x > 0).collect();
        if key.len() > m {
            return LaurentPoly::zero(self.n);
        }
        if m == 0 || key.is_empty() {
            return LaurentPoly::one(self.n);
        }
        if let Some(p) = self.memo.get(&(m, key.clone())) {
            return p.clone();
        }
        key.resize(m, 0);
        // branching: s_μ(X_1..X_m) = sum over ν interlacing μ of X_m^{|μ|-|ν|} s_ν(X_1..X_{m-1})
        let total: i64 = key.iter().sum();
        let mut out = LaurentPoly::zero(self.n);
        let mut nu = vec![0i64; m - 1];
        self.branch(&key, &mut nu, 0, m, total, &mut out);
        key.retain(|&x| x > 0);
        self.memo.insert((m, key), out.clone());
        out
    }

    fn branch(&mut self, mu: &[i64], nu: &mut Vec<i64>, idx: usize, m: usize, total: i64, out: &mut LaurentPoly<C>) {
        if idx == nu.len() {
            let sub = self.partition(nu, m - 1);
            let e = total - nu.iter().sum::<i64>();
            let mono = Monomial::var_pow(self.n, Var::X(m), e as i32);
            out.add_assign_ref(&sub.mul_monomial(&mono));
            return;
        }
        for x in mu[idx + 1]..=mu[idx] {
            nu[idx] = x;
            self.branch(mu, nu, idx + 1, m, total, out);
        }
    }

    /// `s_{(k_n..k_1)}(X_1..X_m)` with `m = k.len()`.
    pub fn schur_ext(&mut self, k: &[i64]) -> LaurentPoly<C> {
        let norm = normalize_weight(k);
        self.from_normalized(&norm, k.len())
    }

    pub fn from_normalized(&mut self, norm: &Normalized, m: usize) -> LaurentPoly<C> {
        if norm.sign == 0 {
            return LaurentPoly::zero(self.n);
        }
        let s = self.partition(&norm.mu, m);
        let mut shift = Monomial::one(self.n);
        for i in 1..=m {
            shift.set_exp(Var::X(i), -norm.p as i32);
        }
        let s = s.mul_monomial(&shift);
        if norm.sign < 0 {
            -s
        } else {
            s
        }
    }
}

/// Extended Schur polynomial `s_{(k_n, .., k_1)}(X_1..X_m)`, `m = k.len()`,
/// in a ring with `n >= m` X-variables.
pub fn schur_ext<C: Coeff>(n: usize, k: &[i64]) -> LaurentPoly<C> {
    SchurCache::new(n).schur_ext(k)
}

/// `det(h_{k_i+i-j}(X_1..X_m))`.
pub fn jacobi_trudi_matrix<C: Coeff>(n: usize, k: &[i64]) -> Matrix<C> {
    let m = k.len();
    (0..m)
        .map(|i| (0..m).map(|j| h_ext(n, k[i] + i as i64 - j as i64, 1..=m)).collect())
        .collect()
}

pub fn schur_jacobi_trudi<C: Coeff>(n: usize, k: &[i64]) -> LaurentPoly<C> {
    determinant(n, &jacobi_trudi_matrix(n, k)).expect("square by construction")
}

/// `det(h_{k_i+i-j}(X_{m-j+1}..X_m))`, the staircase variant.
pub fn staircase_matrix<C: Coeff>(n: usize, k: &[i64]) -> Matrix<C> {
    let m = k.len();
    (0..m)
        .map(|i| (0..m).map(|j| h_ext(n, k[i] + i as i64 - j as i64, (m - j)..=m)).collect())
        .collect()
}

pub fn schur_staircase<C: Coeff>(n: usize, k: &[i64]) -> LaurentPoly<C> {
    determinant(n, &staircase_matrix(n, k)).expect("square by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn xm(n: usize, exps: &[i32]) -> P {
        P::monomial(Monomial::new(0, 0, 0, exps))
            .widen(n)
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn small_h_values() {
        assert_eq!(h_ext::<BigInt>(1, 2, 1..=1), P::x(1, 1).pow(2));
        assert!(h_ext::<BigInt>(2, -1, 1..=2).is_zero());
        assert_eq!(h_ext::<BigInt>(2, -3, 1..=2), -(xm(2, &[-1, -2]) + xm(2, &[-2, -1])));
        assert_eq!(h_ext::<BigInt>(2, 0, 1..=0), P::one(2));
        assert!(h_ext::<BigInt>(2, 1, 1..=0).is_zero());
    }

    #[test]
    fn small_e_values() {
        assert_eq!(e_sym::<BigInt>(3, 0, 1..=3), P::one(3));
        assert_eq!(e_sym::<BigInt>(2, 2, 1..=2), P::x(2, 1) * P::x(2, 2));
        assert!(e_sym::<BigInt>(3, 4, 1..=3).is_zero());
    }

    #[test]
    fn normalization() {
        let id = normalize_weight(&[0, 1, 2]);
        assert_eq!(id, Normalized { sign: 1, mu: vec![2, 1, 0], p: 0 });
        assert_eq!(normalize_weight(&[2, 1]).sign, 0);
        let swapped = normalize_weight(&[2, 0]);
        // λ = (0, 2): s_{(0,2)} = -s_{(1,1)}
        assert_eq!(swapped, Normalized { sign: -1, mu: vec![1, 1], p: 0 });
        let neg = normalize_weight(&[-3, -1]);
        assert_eq!(neg, Normalized { sign: 1, mu: vec![2, 0], p: 3 });
    }

    #[test]
    fn schur_two_one() {
        let n = 2;
        let want = P::x(n, 1).pow(2) * P::x(n, 2) + P::x(n, 1) * P::x(n, 2).pow(2);
        assert_eq!(schur_ext::<BigInt>(n, &[1, 2]), want);
        assert_eq!(schur_jacobi_trudi::<BigInt>(n, &[1, 2]), want);
        assert_eq!(schur_staircase::<BigInt>(n, &[1, 2]), want);
    }

    #[test]
    fn schur_single_and_collision() {
        assert_eq!(schur_ext::<BigInt>(1, &[-4]), xm(1, &[-4]));
        assert!(schur_ext::<BigInt>(3, &[0, 2, 1]).is_zero());
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
