//! Shift-operator products applied to extended Schur polynomials.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};
use crate::symfunc::{normalize_weight, SchurCache};

/// Largest order expanded unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 5;

/// Weights of the four decorations `↗`, `↖`, `↖↗` and the empty one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecorWeights<C> {
    pub ne: LaurentPoly<C>,
    pub nw: LaurentPoly<C>,
    pub both: LaurentPoly<C>,
    pub empty: LaurentPoly<C>,
}

impl<C: Coeff> DecorWeights<C> {
    /// `(u, v, w, 0)` in a ring with `n` X-variables.
    pub fn standard(n: usize) -> Self {
        Self::with_empty(n, LaurentPoly::zero(n))
    }

    /// `(u, v, w, empty)`.
    pub fn with_empty(n: usize, empty: LaurentPoly<C>) -> Self {
        assert_eq!(empty.nvars(), n, "ring descriptor mismatch");
        DecorWeights { ne: LaurentPoly::u(n), nw: LaurentPoly::v(n), both: LaurentPoly::w(n), empty }
    }

    pub fn nvars(&self) -> usize {
        self.ne.nvars()
    }

    /// `↗ = (0,1)`, `↖ = (1,0)`, `↖↗ = (1,1)`, empty `= (0,0)`.
    pub fn to_table(&self) -> GeneralWeightTable<C> {
        let mut t = GeneralWeightTable::new(self.nvars());
        t.set(0, 1, self.ne.clone());
        t.set(1, 0, self.nw.clone());
        t.set(1, 1, self.both.clone());
        t.set(0, 0, self.empty.clone());
        t
    }
}

/// Finitely supported weights `ω(s, t)` of generalized decorations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralWeightTable<C> {
    n: usize,
    entries: BTreeMap<(i64, i64), LaurentPoly<C>>,
}

impl<C: Coeff> GeneralWeightTable<C> {
    pub fn new(n: usize) -> Self {
        GeneralWeightTable { n, entries: BTreeMap::new() }
    }

    /// Sets `ω(s, t)`; a zero weight removes the entry.
    pub fn set(&mut self, s: i64, t: i64, weight: LaurentPoly<C>) {
        assert_eq!(weight.nvars(), self.n, "ring descriptor mismatch");
        if weight.is_zero() {
            self.entries.remove(&(s, t));
        } else {
            self.entries.insert((s, t), weight);
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Nonzero entries in `(s, t)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), &LaurentPoly<C>)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ ω(s,t) X_i^{t-s}`.
    pub fn row_factor(&self, i: usize) -> LaurentPoly<C> {
        let mut acc = LaurentPoly::zero(self.n);
        for ((s, t), w) in self.entries() {
            let m = Monomial::var_pow(self.n, Var::X(i), (t - s) as i32);
            acc.add_assign_ref(&w.mul_monomial(&m));
        }
        acc
    }
}

/// `Σ coeff · E^δ`, acting on functions of `(k_1..k_n)` by `f ↦ Σ coeff · f(k+δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOperatorSum<C> {
    order: usize,
    ring: usize,
    terms: FxHashMap<Vec<i64>, LaurentPoly<C>>,
}

impl<C: Coeff> ShiftOperatorSum<C> {
    pub fn identity(order: usize, ring: usize) -> Self {
        let mut terms = FxHashMap::default();
        terms.insert(vec![0; order], LaurentPoly::one(ring));
        ShiftOperatorSum { order, ring, terms }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, shift: &[i64]) -> Option<&LaurentPoly<C>> {
        self.terms.get(shift)
    }

    /// Terms sorted by shift vector.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i64>, &LaurentPoly<C>)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> LaurentPoly<C> {
        crate::laurent::sum(self.ring, self.terms.values())
    }

    /// Multiplies by the factor `Σ c · E_{k_p}^{a} E_{k_q}^{b}` given as `(a, b, c)` triples.
    fn mul_pair_factor(&self, p: usize, q: usize, factor: &[(i64, i64, &LaurentPoly<C>)]) -> Self {
        let mut out: FxHashMap<Vec<i64>, LaurentPoly<C>> = FxHashMap::default();
        for (shift, c) in &self.terms {
            for &(a, b, w) in factor {
                let mut s = shift.clone();
                s[p] += a;
                s[q] += b;
                let prod = c * w;
                match out.get_mut(&s) {
                    Some(acc) => {
                        acc.add_assign_ref(&prod);
                        if acc.is_zero() {
                            out.remove(&s);
                        }
                    }
                    None => {
                        out.insert(s, prod);
                    }
                }
            }
        }
        ShiftOperatorSum { order: self.order, ring: self.ring, terms: out }
    }
}

/// Expands `∏_{p<q} Σ ω(s,t) E_{k_p}^t E_{k_q}^{-s}` for the given order.
pub fn expand_general<C: Coeff>(order: usize, wt: &GeneralWeightTable<C>, cap: usize) -> Result<ShiftOperatorSum<C>> {
    if order > cap {
        return Err(Error::Capacity { order, cap });
    }
    let factor: Vec<(i64, i64, &LaurentPoly<C>)> =
        wt.entries().map(|((s, t), w)| (t, -s, w)).collect();
    let mut op = ShiftOperatorSum::identity(order, wt.nvars());
    for p in 0..order {
        for q in p + 1..order {
            op = op.mul_pair_factor(p, q, &factor);
        }
    }
    Ok(op)
}

/// Expands `∏_{p<q}(ω↗ E_{k_p} + ω↖ E_{k_q}^{-1} + ω↖↗ E_{k_p}E_{k_q}^{-1} + ω∅ id)`.
pub fn expand_operator<C: Coeff>(order: usize, dw: &DecorWeights<C>) -> Result<ShiftOperatorSum<C>> {
    expand_operator_with_cap(order, dw, DEFAULT_CAP)
}

pub fn expand_operator_with_cap<C: Coeff>(
    order: usize,
    dw: &DecorWeights<C>,
    cap: usize,
) -> Result<ShiftOperatorSum<C>> {
    expand_general(order, &dw.to_table(), cap)
}

/// `Σ coeff · s_{k+δ}`, where `s_k` means `s_{(k_n..k_1)}(X_1..X_n)`.
///
/// Shifted vectors that normalize to the same partition are combined before
/// any Schur polynomial is multiplied out.
pub fn apply_to_schur<C: Coeff>(ops: &ShiftOperatorSum<C>, k: &[i64]) -> LaurentPoly<C> {
    assert_eq!(ops.order, k.len(), "shift vectors and weight vector differ in length");
    let ring = ops.ring;
    let mut grouped: BTreeMap<(Vec<i64>, i64), LaurentPoly<C>> = BTreeMap::new();
    for (shift, c) in ops.sorted_terms() {
        let kk: Vec<i64> = k.iter().zip(shift).map(|(a, b)| a + b).collect();
        let norm = normalize_weight(&kk);
        if norm.sign == 0 {
            continue;
        }
        let entry = grouped.entry((norm.mu, norm.p)).or_insert_with(|| LaurentPoly::zero(ring));
        if norm.sign > 0 {
            entry.add_assign_ref(c);
        } else {
            entry.add_assign_ref(&-c);
        }
    }
    let mut cache = SchurCache::new(ring);
    let mut out = LaurentPoly::zero(ring);
    for ((mu, p), c) in grouped {
        if c.is_zero() {
            continue;
        }
        let s = cache.partition(&mu, k.len());
        let mut shift = Monomial::one(ring);
        for i in 1..=k.len() {
            shift.set_exp(Var::X(i), -p as i32);
        }
        out.add_assign_ref(&(&c * &s.mul_monomial(&shift)));
    }
    out
}

/// Closed form of the generating function of (extended) arrowed monotone
/// triangles with bottom row `k`.
pub fn gf_amt_closed<C: Coeff>(k: &[i64], dw: &DecorWeights<C>) -> Result<LaurentPoly<C>> {
    gf_amt_closed_with_cap(k, dw, DEFAULT_CAP)
}

pub fn gf_amt_closed_with_cap<C: Coeff>(k: &[i64], dw: &DecorWeights<C>, cap: usize) -> Result<LaurentPoly<C>> {
    gf_generalized_closed_with_cap(k, &dw.to_table(), cap)
}

/// Closed form for monotone triangles under the non-monomial weight: the
/// standard operator without the row prefactor.
pub fn gf_mt_closed<C: Coeff>(k: &[i64]) -> Result<LaurentPoly<C>> {
    if k.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!("bottom row {k:?} is not strictly increasing")));
    }
    let ops = expand_operator(k.len(), &DecorWeights::standard(k.len()))?;
    Ok(apply_to_schur(&ops, k))
}

/// Closed form for generalized decorations with finite support.
pub fn gf_generalized_closed<C: Coeff>(k: &[i64], wt: &GeneralWeightTable<C>) -> Result<LaurentPoly<C>> {
    gf_generalized_closed_with_cap(k, wt, DEFAULT_CAP)
}

pub fn gf_generalized_closed_with_cap<C: Coeff>(
    k: &[i64],
    wt: &GeneralWeightTable<C>,
    cap: usize,
) -> Result<LaurentPoly<C>> {
    let n = k.len();
    if wt.nvars() < n {
        return Err(Error::RingMismatch { left: n, right: wt.nvars() });
    }
    let ops = expand_general(n, wt, cap)?;
    let mut out = apply_to_schur(&ops, k);
    for i in 1..=n {
        out = &out * &wt.row_factor(i);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::schur_ext;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn order_one_is_identity() {
        let op = expand_operator(1, &DecorWeights::<BigInt>::standard(1)).unwrap();
        assert_eq!(op.len(), 1);
        assert_eq!(op.coeff(&[0]), Some(&P::one(1)));
    }

    #[test]
    fn order_two_has_three_terms() {
        let n = 2;
        let op = expand_operator(n, &DecorWeights::<BigInt>::standard(n)).unwrap();
        assert_eq!(op.len(), 3);
        assert_eq!(op.coeff(&[1, 0]), Some(&P::u(n)));
        assert_eq!(op.coeff(&[0, -1]), Some(&P::v(n)));
        assert_eq!(op.coeff(&[1, -1]), Some(&P::w(n)));
    }

    #[test]
    fn all_ones_mass() {
        let n = 3;
        let one = P::one(n);
        let dw = DecorWeights { ne: one.clone(), nw: one.clone(), both: one.clone(), empty: one };
        let op = expand_operator(n, &dw).unwrap();
        assert_eq!(op.total(), P::from_int(n, 64));
    }

    #[test]
    fn cap_is_enforced() {
        let dw = DecorWeights::<BigInt>::standard(6);
        assert_eq!(expand_operator(6, &dw), Err(Error::Capacity { order: 6, cap: 5 }));
    }

    #[test]
    fn applied_operator_order_two() {
        let n = 2;
        let op = expand_operator(n, &DecorWeights::<BigInt>::standard(n)).unwrap();
        let got = apply_to_schur(&op, &[1, 2]);
        let want = P::u(n) * schur_ext(n, &[2, 2]) + P::v(n) * schur_ext(n, &[1, 1]) + P::w(n) * schur_ext(n, &[2, 1]);
        assert_eq!(got, want);
        assert_eq!(gf_mt_closed::<BigInt>(&[1, 2]).unwrap(), want);
        let id = ShiftOperatorSum::<BigInt>::identity(2, 2);
        assert_eq!(apply_to_schur(&id, &[1, 2]), schur_ext(2, &[1, 2]));
    }

    #[test]
    fn single_entry_closed_form() {
        let n = 1;
        let got = gf_amt_closed(&[1], &DecorWeights::<BigInt>::standard(n)).unwrap();
        let x = P::x(n, 1);
        assert_eq!(got, P::u(n) * x.pow(2) + P::w(n) * x + P::v(n));
        assert_eq!(gf_mt_closed::<BigInt>(&[1]).unwrap(), P::x(n, 1));
    }

    #[test]
    fn rejects_non_increasing() {
        assert!(matches!(gf_mt_closed::<BigInt>(&[2, 2]), Err(Error::Domain(_))));
    }
}
