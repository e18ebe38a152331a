use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::{determinant, LaurentPoly, Matrix, Monomial, Var};
use crate::symfunc::{e_sym, h_ext};

use super::lattice::{single_paths, PathFamily, PathKind};

pub(crate) fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < b || a < 0 {
        return 0;
    }
    (0..b).fold(1i64, |acc, t| acc * (a - t) / (t + 1))
}

fn uvw<C: Coeff>(n: usize, u: i32, v: i32, w: i32) -> LaurentPoly<C> {
    let mut m = Monomial::one(n);
    m.set_exp(Var::U, u);
    m.set_exp(Var::V, v);
    m.set_exp(Var::W, w);
    LaurentPoly::monomial(m)
}

/// Generating function of single extended paths from `(-i, i-2)` to `(j, -2)`
/// in closed form: a sum over the height `n - l - 1` at which the path meets
/// the axis of a right part in complete and a left part in elementary
/// symmetric functions.
pub fn single_path_gf<C: Coeff>(i: usize, j: usize, n: usize) -> LaurentPoly<C> {
    assert!((1..=n).contains(&i) && (1..=n).contains(&j), "indices outside 1..={n}");
    let (i, j) = (i as i64, j as i64);
    let mut out = LaurentPoly::zero(n);
    for l in 1..=n {
        let top = n - l + 1;
        let right = &(&uvw(n, j as i32, 0, 0) * &h_ext(n, j, 1..=top))
            + &(&uvw(n, j as i32 - 1, 0, 1) * &h_ext(n, j - 1, 1..=top));
        let mut left = LaurentPoly::zero(n);
        for k in (i - 1).max(1)..=n as i64 {
            let c = binomial(k - 1, i - 1);
            if c == 0 {
                continue;
            }
            let term = &uvw::<C>(n, 0, -(k as i32), (k - i) as i32) * &e_sym(n, k - 1, 1..=top - 1);
            left.add_assign_ref(&term.scale(&C::from_int(c)));
        }
        let left = &left * &LaurentPoly::x(n, top);
        out.add_assign_ref(&(&right * &left));
    }
    out
}

/// The same generating function by summing over every path.
pub fn single_path_sum<C: Coeff>(i: usize, j: usize, n: usize) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(n);
    for p in single_paths(PathKind::Extended, n, i, j) {
        // a lone path is trivially nonintersecting; weigh it as if i = j
        let f = PathFamily::single_unchecked(n, p);
        out.add_assign_ref(&f.collapsed_weight().expect("extended"));
    }
    out.mul_monomial(&Monomial::var_pow(n, Var::V, -binom2(n + 1)))
}

fn binom2(n: usize) -> i32 {
    (n * n.saturating_sub(1) / 2) as i32
}

/// `W[i][j] = single_path_gf(i + 1, j + 1, n)`.
pub fn w_matrix<C: Coeff>(n: usize) -> Matrix<C> {
    (1..=n).map(|i| (1..=n).map(|j| single_path_gf(i, j, n)).collect()).collect()
}

pub fn w_matrix_enum<C: Coeff>(n: usize) -> Matrix<C> {
    (1..=n).map(|i| (1..=n).map(|j| single_path_sum(i, j, n)).collect()).collect()
}

/// `v^{C(n+1,2)} det(I + W)`.
pub fn gf_lgv<C: Coeff>(n: usize) -> Result<LaurentPoly<C>> {
    if n > 6 {
        return Err(Error::Domain(format!("order {n} is beyond the supported range")));
    }
    let mut m = w_matrix::<C>(n);
    for (k, row) in m.iter_mut().enumerate() {
        row[k].add_assign_ref(&LaurentPoly::one(n));
    }
    Ok(determinant(n, &m)?.mul_monomial(&Monomial::var_pow(n, Var::V, binom2(n + 1))))
}

/// `v^{C(n+1,2)}` times the principal minor of `W` on the sources in the
/// bitmask `subset`.
pub fn lgv_subset<C: Coeff>(w: &Matrix<C>, n: usize, subset: u32) -> Result<LaurentPoly<C>> {
    let idx: Vec<usize> = (0..n).filter(|k| subset >> k & 1 == 1).collect();
    let minor: Matrix<C> = idx.iter().map(|&a| idx.iter().map(|&b| w[a][b].clone()).collect()).collect();
    Ok(determinant(n, &minor)?.mul_monomial(&Monomial::var_pow(n, Var::V, binom2(n + 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn order_one() {
        let x = P::x(1, 1);
        let want = &(&P::u(1) * &x) * &x + &P::w(1) * &x + P::v(1);
        assert_eq!(gf_lgv::<BigInt>(1).unwrap(), want);
    }

    #[test]
    fn formula_matches_paths_for_order_two() {
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(single_path_gf::<BigInt>(i, j, 2), single_path_sum(i, j, 2), "({i},{j})");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 0), 0);
    }
}
