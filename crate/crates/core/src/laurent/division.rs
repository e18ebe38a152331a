use super::{LaurentPoly, Monomial};
use crate::coeff::Coeff;
use crate::error::{Error, Result};

impl<C: Coeff> LaurentPoly<C> {
    /// Exact quotient `self / q` in the Laurent ring.
    ///
    /// Both operands are first cleared of their monomial content, which turns
    /// them into honest polynomials; then ordinary leading-term division in
    /// lexicographic order is run and must leave no remainder.
    pub fn divide_exact(&self, q: &Self) -> Result<Self> {
        if self.nvars() != q.nvars() {
            return Err(Error::RingMismatch { left: self.nvars(), right: q.nvars() });
        }
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars()));
        }
        let p_content = self.min_exponents().unwrap();
        let q_content = q.min_exponents().unwrap();
        let p = self.mul_monomial(&p_content.inverse());
        let q = q.mul_monomial(&q_content.inverse());

        let (lead_m, lead_c) = leading_term(&q);
        let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
        let mut rem = p;
        let mut quot = Self::zero(self.nvars());
        while !rem.is_zero() {
            let (rm, rc) = leading_term(&rem);
            if !rm.dominates(&lead_m) {
                return Err(Error::Indivisible);
            }
            let c = rc.exact_div(&lead_c).ok_or(Error::Indivisible)?;
            let m = rm.div(&lead_m);
            let step = Self::term(m, c);
            rem = &rem - &(&step * &q);
            quot.add_assign_ref(&step);
        }
        Ok(quot.mul_monomial(&p_content.div(&q_content)))
    }
}

fn leading_term<C: Coeff>(p: &LaurentPoly<C>) -> (&Monomial, &C) {
    p.terms().max_by(|a, b| a.0.exponents().cmp(b.0.exponents())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn difference_of_squares() {
        let n = 2;
        let (x1, x2) = (P::x(n, 1), P::x(n, 2));
        let p = x2.pow(2) - x1.pow(2);
        assert_eq!(p.divide_exact(&(&x2 - &x1)).unwrap(), x2 + x1);
    }

    #[test]
    fn by_one() {
        let p = P::u(1) * P::x(1, 1) + P::from_int(1, 3);
        assert_eq!(p.divide_exact(&P::one(1)).unwrap(), p);
    }

    #[test]
    fn laurent_operands() {
        let n = 1;
        let xinv = P::monomial(Monomial::var_pow(n, super::super::Var::X(1), -1));
        let q = P::u(n) + &xinv;
        let r = P::w(n) * P::x(n, 1).pow(3) - P::v(n);
        let p = &q * &r;
        assert_eq!(p.divide_exact(&q).unwrap(), r);
    }

    #[test]
    fn indivisible_and_zero() {
        let n = 2;
        let p = P::x(n, 1) + P::from_int(n, 1);
        assert_eq!(p.divide_exact(&P::x(n, 2).checked_add(&P::one(n)).unwrap()), Err(Error::Indivisible));
        assert_eq!(p.divide_exact(&P::zero(n)), Err(Error::DivisionByZero));
        assert_eq!(P::from_int(n, 3).divide_exact(&P::from_int(n, 2)), Err(Error::Indivisible));
    }
}
