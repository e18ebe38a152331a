use rustc_hash::FxHashMap;

use super::{LaurentPoly, Monomial, Var};
use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// What a variable is replaced by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value<C> {
    Int(C),
    /// Any polynomial of the same ring; it must be a unit monomial term if the
    /// variable occurs with a negative exponent.
    Poly(LaurentPoly<C>),
}

/// A partial substitution; unassigned variables are left alone.
#[derive(Clone, Debug, Default)]
pub struct Assignment<C> {
    values: FxHashMap<Var, Value<C>>,
}

impl<C: Coeff> Assignment<C> {
    pub fn new() -> Self {
        Assignment { values: FxHashMap::default() }
    }

    /// `u = v = 1`, `w = -1`, `X_i = 1` for all `i <= n`.
    pub fn sign(n: usize) -> Self {
        let mut a = Self::new().int(Var::U, 1).int(Var::V, 1).int(Var::W, -1);
        for i in 1..=n {
            a = a.int(Var::X(i), 1);
        }
        a
    }

    pub fn int(mut self, var: Var, c: i64) -> Self {
        self.values.insert(var, Value::Int(C::from_int(c)));
        self
    }

    pub fn set(mut self, var: Var, value: Value<C>) -> Self {
        self.values.insert(var, value);
        self
    }

    pub fn get(&self, var: Var) -> Option<&Value<C>> {
        self.values.get(&var)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn int_power<C: Coeff>(var: Var, c: &C, e: i32) -> Result<C> {
    if e >= 0 {
        return Ok(num_traits::pow(c.clone(), e as usize));
    }
    if c.is_zero() {
        return Err(Error::Pole(var.to_string()));
    }
    let inv = c
        .try_inverse()
        .ok_or_else(|| Error::NonInvertible(format!("{var} = {c} with exponent {e}")))?;
    Ok(num_traits::pow(inv, (-e) as usize))
}

fn poly_power<C: Coeff>(var: Var, p: &LaurentPoly<C>, e: i32) -> Result<LaurentPoly<C>> {
    if e >= 0 {
        return Ok(p.pow(e as u32));
    }
    if p.is_zero() {
        return Err(Error::Pole(var.to_string()));
    }
    let (m, c) = p
        .as_term()
        .ok_or_else(|| Error::NonInvertible(format!("{var} = {p} with exponent {e}")))?;
    let c = int_power(var, c, e)?;
    Ok(LaurentPoly::term(m.pow(e), c))
}

impl<C: Coeff> LaurentPoly<C> {
    /// Substitutes the assigned variables; the result stays in the same ring.
    pub fn specialize(&self, a: &Assignment<C>) -> Result<Self> {
        let n = self.nvars();
        for v in a.values.values() {
            if let Value::Poly(p) = v {
                if p.nvars() != n {
                    return Err(Error::RingMismatch { left: n, right: p.nvars() });
                }
            }
        }
        let slots: Vec<(usize, Var, &Value<C>)> = (0..super::FIXED + n)
            .filter_map(|s| {
                let var = Var::from_slot(s);
                a.get(var).map(|val| (s, var, val))
            })
            .collect();
        let mut int_cache: FxHashMap<(usize, i32), C> = FxHashMap::default();
        let mut poly_cache: FxHashMap<(usize, i32), LaurentPoly<C>> = FxHashMap::default();
        let mut out = Self::zero(n);
        for (m, c) in self.terms() {
            let mut coeff = c.clone();
            let mut rest: Monomial = m.clone();
            let mut factor: Option<LaurentPoly<C>> = None;
            for &(slot, var, val) in &slots {
                let e = m.exps[slot];
                if e == 0 {
                    continue;
                }
                rest.exps[slot] = 0;
                match val {
                    Value::Int(x) => {
                        let pw = match int_cache.get(&(slot, e)) {
                            Some(pw) => pw.clone(),
                            None => {
                                let pw = int_power(var, x, e)?;
                                int_cache.insert((slot, e), pw.clone());
                                pw
                            }
                        };
                        coeff = coeff * pw;
                    }
                    Value::Poly(p) => {
                        let pw = match poly_cache.get(&(slot, e)) {
                            Some(pw) => pw.clone(),
                            None => {
                                let pw = poly_power(var, p, e)?;
                                poly_cache.insert((slot, e), pw.clone());
                                pw
                            }
                        };
                        factor = Some(match factor {
                            Some(f) => &f * &pw,
                            None => pw,
                        });
                    }
                }
            }
            match factor {
                None => out.add_term(rest, coeff),
                Some(f) => {
                    let t = Self::term(rest, coeff);
                    out.add_assign_ref(&(&t * &f));
                }
            }
        }
        Ok(out)
    }

    /// Specializes and insists on a constant result.
    pub fn specialize_to_int(&self, a: &Assignment<C>) -> Result<C> {
        let p = self.specialize(a)?;
        p.constant_value()
            .ok_or_else(|| Error::Domain(format!("specialization is not constant: {p}")))
    }

    /// Value under `u = v = 1, w = -1, X = 1`.
    pub fn sign_value(&self) -> Result<C> {
        self.specialize_to_int(&Assignment::sign(self.nvars()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn sign_specialization() {
        let n = 1;
        let p = P::u(n) * P::x(n, 1).pow(2) + P::w(n) * P::x(n, 1) + P::v(n);
        assert_eq!(p.sign_value().unwrap(), BigInt::from(1));
        assert_eq!(P::v(2).pow(3).sign_value().unwrap(), BigInt::from(1));
    }

    #[test]
    fn pole_is_rejected() {
        let n = 1;
        let p = P::monomial(Monomial::var_pow(n, Var::X(1), -1));
        let a = Assignment::new().int(Var::X(1), 0);
        assert!(matches!(p.specialize(&a), Err(Error::Pole(_))));
        let a = Assignment::new().int(Var::X(1), 2);
        assert!(matches!(p.specialize(&a), Err(Error::NonInvertible(_))));
        let a = Assignment::new().int(Var::X(1), -1);
        assert_eq!(p.specialize(&a).unwrap(), P::from_int(n, -1));
    }

    #[test]
    fn monomial_substitution() {
        let n = 2;
        let p = P::x(n, 1).pow(2) * P::monomial(Monomial::var_pow(n, Var::X(2), -1));
        let a = Assignment::new().set(Var::X(2), Value::Poly(P::u(n) * P::x(n, 1)));
        let want = P::x(n, 1) * P::monomial(Monomial::var_pow(n, Var::U, -1));
        assert_eq!(p.specialize(&a).unwrap(), want);
    }

    #[test]
    fn polynomial_substitution() {
        let n = 1;
        let p = P::x(n, 1).pow(2);
        let a = Assignment::new().set(Var::X(1), Value::Poly(P::u(n) + P::w(n)));
        assert_eq!(p.specialize(&a).unwrap(), (P::u(n) + P::w(n)).pow(2));
    }
}
