//! Signed recursion for extended arrowed monotone triangles with arbitrary
//! integer bottom rows.
//!
//! Deleting the bottom row of an extended triangle leaves a smaller one; each
//! entry of the new bottom row ranges over a signed interval determined by its
//! two lower neighbours and their decorations. Summing over those choices with
//! signs gives the generating function without materializing signed objects.

use rustc_hash::FxHashMap;

use crate::coeff::Coeff;
use crate::laurent::{LaurentPoly, Monomial, Var};
use crate::opformula::{DecorWeights, GeneralWeightTable};

/// `⟦a, b⟧` as `(lo, hi, sign)`: `[a, b]` positively if `a <= b`,
/// `[b+1, a-1]` negatively if `b+1 <= a-1`, and `None` when `b + 1 = a`.
pub fn signed_interval(a: i64, b: i64) -> Option<(i64, i64, i8)> {
    if a <= b {
        Some((a, b, 1))
    } else if b + 1 < a {
        Some((b + 1, a - 1, -1))
    } else {
        None
    }
}

/// Generating function of extended arrowed monotone triangles with bottom
/// row `k` and decoration weights `dw`.
pub fn gf_extended_recursion<C: Coeff>(k: &[i64], dw: &DecorWeights<C>) -> LaurentPoly<C> {
    gf_generalized_recursion(k, &dw.to_table())
}

/// Same for generalized decorations `(s, t)`: an entry above neighbours `b`
/// (decorated `(s_b, t_b)`) and `c` (decorated `(s_c, t_c)`) lies in
/// `⟦b + t_b, c - s_c⟧`, and a decoration adds `t - s` to its row exponent.
pub fn gf_generalized_recursion<C: Coeff>(k: &[i64], wt: &GeneralWeightTable<C>) -> LaurentPoly<C> {
    assert!(wt.nvars() >= k.len(), "weight ring has fewer X-variables than the bottom row");
    let mut memo = FxHashMap::default();
    let decs: Vec<(i64, i64, LaurentPoly<C>)> = wt.entries().map(|((s, t), w)| (s, t, w.clone())).collect();
    alpha(k, &decs, wt.nvars(), &mut memo)
}

fn alpha<C: Coeff>(
    k: &[i64],
    decs: &[(i64, i64, LaurentPoly<C>)],
    ring: usize,
    memo: &mut FxHashMap<Vec<i64>, LaurentPoly<C>>,
) -> LaurentPoly<C> {
    let m = k.len();
    if m == 0 {
        return LaurentPoly::one(ring);
    }
    if decs.is_empty() {
        return LaurentPoly::zero(ring);
    }
    if let Some(p) = memo.get(k) {
        return p.clone();
    }
    let xm = |e: i64| Monomial::var_pow(ring, Var::X(m), e as i32);
    let out = if m == 1 {
        let mut acc = LaurentPoly::zero(ring);
        for (s, t, w) in decs {
            acc.add_assign_ref(&w.mul_monomial(&xm(k[0] + t - s)));
        }
        acc
    } else {
        // coefficient of each admissible penultimate row
        let mut coeffs: FxHashMap<Vec<i64>, LaurentPoly<C>> = FxHashMap::default();
        let mut choice = vec![0usize; m];
        'outer: loop {
            let mut weight = LaurentPoly::one(ring);
            let mut tilt = 0;
            for &c in &choice {
                let (s, t, w) = &decs[c];
                weight = &weight * w;
                tilt += t - s;
            }
            let mut ranges = Vec::with_capacity(m - 1);
            let mut sign = 1i8;
            let mut empty = false;
            for j in 0..m - 1 {
                let (_, t_b, _) = decs[choice[j]];
                let (s_c, _, _) = decs[choice[j + 1]];
                match signed_interval(k[j] + t_b, k[j + 1] - s_c) {
                    Some((lo, hi, sg)) => {
                        ranges.push((lo, hi));
                        sign *= sg;
                    }
                    None => {
                        empty = true;
                        break;
                    }
                }
            }
            if !empty {
                let weight = weight.mul_monomial(&xm(tilt));
                let weight = if sign < 0 { -weight } else { weight };
                let mut l: Vec<i64> = ranges.iter().map(|r| r.0).collect();
                loop {
                    coeffs
                        .entry(l.clone())
                        .and_modify(|acc| acc.add_assign_ref(&weight))
                        .or_insert_with(|| weight.clone());
                    let mut pos = 0;
                    loop {
                        if pos == l.len() {
                            break;
                        }
                        if l[pos] < ranges[pos].1 {
                            l[pos] += 1;
                            break;
                        }
                        l[pos] = ranges[pos].0;
                        pos += 1;
                    }
                    if pos == l.len() {
                        break;
                    }
                }
            }
            let mut pos = 0;
            loop {
                if pos == m {
                    break 'outer;
                }
                choice[pos] += 1;
                if choice[pos] < decs.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
        let total: i64 = k.iter().sum();
        let mut keys: Vec<_> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0));
        let mut acc = LaurentPoly::zero(ring);
        for (l, c) in keys {
            let sub = alpha(&l, decs, ring, memo);
            if sub.is_zero() {
                continue;
            }
            let c = c.mul_monomial(&xm(total - l.iter().sum::<i64>()));
            acc.add_assign_ref(&(&c * &sub));
        }
        acc
    };
    memo.insert(k.to_vec(), out.clone());
    out
}
