//! Sparse Laurent polynomials in `u, v, w, X1..Xn` over an exact coefficient ring.

mod division;
mod matrix;
mod serial;
mod specialize;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::coeff::Coeff;
use crate::error::{Error, Result};

pub use matrix::{determinant, identity_matrix, mat_mul, Matrix};
pub use serial::{Format, JsonPoly, JsonTerm};
pub use specialize::{Assignment, Value};

/// Number of fixed leading variables (`u`, `v`, `w`).
const FIXED: usize = 3;

/// A variable of the ring; `X(i)` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    V,
    W,
    X(usize),
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::U => 0,
            Var::V => 1,
            Var::W => 2,
            Var::X(i) => {
                assert!(i >= 1, "X variables are 1-based");
                FIXED + i - 1
            }
        }
    }

    fn from_slot(slot: usize) -> Var {
        match slot {
            0 => Var::U,
            1 => Var::V,
            2 => Var::W,
            s => Var::X(s - FIXED + 1),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::U => f.write_str("u"),
            Var::V => f.write_str("v"),
            Var::W => f.write_str("w"),
            Var::X(i) => write!(f, "X{i}"),
        }
    }
}

/// Exponent vector `(u, v, w, X1, .., Xn)`; exponents may be negative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[i32; 12]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, FIXED + n) }
    }

    pub fn new(u: i32, v: i32, w: i32, x: &[i32]) -> Self {
        let mut exps = SmallVec::with_capacity(FIXED + x.len());
        exps.extend_from_slice(&[u, v, w]);
        exps.extend_from_slice(x);
        Monomial { exps }
    }

    pub fn var(n: usize, var: Var) -> Self {
        Self::var_pow(n, var, 1)
    }

    pub fn var_pow(n: usize, var: Var, e: i32) -> Self {
        let mut m = Self::one(n);
        m.exps[var.slot()] = e;
        m
    }

    /// Number of X-variables of the ambient ring.
    pub fn nvars(&self) -> usize {
        self.exps.len() - FIXED
    }

    pub fn u_exp(&self) -> i32 {
        self.exps[0]
    }

    pub fn v_exp(&self) -> i32 {
        self.exps[1]
    }

    pub fn w_exp(&self) -> i32 {
        self.exps[2]
    }

    pub fn x_exps(&self) -> &[i32] {
        &self.exps[FIXED..]
    }

    pub fn exp(&self, var: Var) -> i32 {
        self.exps[var.slot()]
    }

    pub fn set_exp(&mut self, var: Var, e: i32) {
        self.exps[var.slot()] = e;
    }

    /// All exponents in slot order `(u, v, w, X1..Xn)`.
    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Whether every exponent is at least the corresponding one of `other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a >= b)
    }

    /// Canonical order: larger total degree first, then lexicographically larger
    /// exponent vector first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }

    fn widened(&self, n: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(FIXED + n, 0);
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", Var::from_slot(slot))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial; no stored coefficient is zero.
#[derive(Clone, Debug)]
pub struct LaurentPoly<C> {
    n: usize,
    terms: FxHashMap<Monomial, C>,
}

impl<C: PartialEq> PartialEq for LaurentPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl<C: Eq> Eq for LaurentPoly<C> {}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: FxHashMap::default() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn from_int(n: usize, c: i64) -> Self {
        Self::constant(n, C::from_int(c))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(n: usize, var: Var) -> Self {
        Self::monomial(Monomial::var(n, var))
    }

    pub fn u(n: usize) -> Self {
        Self::var(n, Var::U)
    }

    pub fn v(n: usize) -> Self {
        Self::var(n, Var::V)
    }

    pub fn w(n: usize) -> Self {
        Self::var(n, Var::W)
    }

    pub fn x(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "X{i} outside ring of order {n}");
        Self::var(n, Var::X(i))
    }

    /// Number of X-variables (the ring descriptor).
    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in canonical order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0));
        v
    }

    /// `Some((m, c))` when the polynomial is a single term.
    pub fn as_term(&self) -> Option<(&Monomial, &C)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn is_monomial(&self) -> bool {
        self.as_term().is_some_and(|(_, c)| c.is_one())
    }

    /// The value of a constant polynomial (`0` for the zero polynomial).
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Sum of all coefficients, i.e. the value at all variables equal to 1.
    pub fn coefficient_sum(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.n);
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.n, right: other.n })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut out = Self::zero(self.n);
        out.terms.reserve(large.terms.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// In-place addition; panics on a ring mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "ring descriptor mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Self) {
        let prod = factor * other;
        self.add_assign_ref(&prod);
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        assert_eq!(mono.nvars(), self.n, "ring descriptor mismatch");
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites every monomial with `f`; colliding images are merged.
    pub fn map_monomials(&self, n: usize, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Substitutes `X_i -> X_{perm[i-1]}` (1-based targets).
    pub fn permute_x(&self, perm: &[usize]) -> Self {
        assert!(perm.len() <= self.n);
        self.map_monomials(self.n, |m| {
            let mut out = m.clone();
            let xs = m.x_exps();
            for e in &mut out.exps[FIXED..FIXED + perm.len()] {
                *e = 0;
            }
            for (i, &target) in perm.iter().enumerate() {
                out.exps[FIXED + target - 1] += xs[i];
            }
            out
        })
    }

    /// Substitutes `X_i -> X_i^{-1}` for every `i` in `vars` (1-based).
    pub fn invert_x(&self, vars: &[usize]) -> Self {
        self.map_monomials(self.n, |m| {
            let mut out = m.clone();
            for &i in vars {
                out.exps[FIXED + i - 1] = -out.exps[FIXED + i - 1];
            }
            out
        })
    }

    /// Embeds into the ring with `n >= self.nvars()` X-variables.
    pub fn widen(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot narrow a ring by widening");
        self.map_monomials(n, |m| m.widened(n))
    }

    /// Componentwise minimum of all exponent vectors (the monomial "content").
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, m| {
            for (a, b) in acc.exps.iter_mut().zip(&m.exps) {
                *a = (*a).min(*b);
            }
            acc
        }))
    }

    /// Maximum exponent of `var` over all terms.
    pub fn max_exp(&self, var: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    pub fn min_exp(&self, var: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(var)).min()
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<C: Coeff> $tr<&LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            /// Panics on a ring descriptor mismatch; use the `checked_` variant to handle it.
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coeff> $tr<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

/// Sum of polynomials in a ring of order `n`.
pub fn sum<'a, C: Coeff>(n: usize, items: impl IntoIterator<Item = &'a LaurentPoly<C>>) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::zero(n);
    for p in items {
        acc.add_assign_ref(p);
    }
    acc
}

/// Product of polynomials in a ring of order `n`.
pub fn product<'a, C: Coeff>(n: usize, items: impl IntoIterator<Item = &'a LaurentPoly<C>>) -> LaurentPoly<C> {
    items.into_iter().fold(LaurentPoly::one(n), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn x(n: usize, i: usize) -> P {
        P::x(n, i)
    }

    #[test]
    fn exponent_cancellation() {
        let n = 1;
        let a = P::u(n) * x(n, 1);
        let b = P::v(n) * P::monomial(Monomial::var_pow(n, Var::X(1), -1));
        assert_eq!(a * b, P::u(n) * P::v(n));
    }

    #[test]
    fn additive_identity() {
        let p = P::u(2) + x(2, 2);
        assert_eq!(&p + &P::zero(2), p);
    }

    #[test]
    fn hand_expansion() {
        let n = 2;
        let x2 = x(n, 2);
        let x2inv = P::monomial(Monomial::var_pow(n, Var::X(2), -1));
        let f = P::u(n) * x2.clone() + P::v(n) * x2inv + P::w(n);
        let got = f * x2.pow(3);
        let want = P::u(n) * x2.pow(4) + P::w(n) * x2.pow(3) + P::v(n) * x2.pow(2);
        assert_eq!(got, want);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let err = P::u(1).checked_add(&P::u(2)).unwrap_err();
        assert_eq!(err, Error::RingMismatch { left: 1, right: 2 });
        assert!(P::u(1).checked_mul(&P::u(3)).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = P::u(1) - P::u(1);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn permute_and_invert() {
        let n = 3;
        let p = x(n, 1).pow(2) * x(n, 3);
        let q = p.permute_x(&[2, 3, 1]);
        assert_eq!(q, x(n, 2).pow(2) * x(n, 1));
        let r = p.invert_x(&[1, 2, 3]);
        assert_eq!(&r * &p, P::one(n));
    }

    #[test]
    fn widen_keeps_terms() {
        let p = P::u(1) * x(1, 1);
        assert_eq!(p.widen(3), P::u(3) * x(3, 1));
    }
}
