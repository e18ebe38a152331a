use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Monomial, Var};
use crate::coeff::Coeff;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub c: String,
    pub u: i32,
    pub v: i32,
    pub w: i32,
    pub x: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub n: usize,
    pub terms: Vec<JsonTerm>,
}

impl<C: Coeff> LaurentPoly<C> {
    /// Human-readable form, e.g. `2 u v w X1^2 X2 + -v^3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if m.is_one() {
                write!(out, "{c}").unwrap();
            } else if c.is_one() {
                write!(out, "{m}").unwrap();
            } else if (-c.clone()).is_one() {
                write!(out, "-{m}").unwrap();
            } else {
                write!(out, "{c} {m}").unwrap();
            }
        }
        out
    }

    pub fn to_json_value(&self) -> JsonPoly {
        JsonPoly {
            n: self.nvars(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| JsonTerm {
                    c: c.to_string(),
                    u: m.u_exp(),
                    v: m.v_exp(),
                    w: m.w_exp(),
                    x: m.x_exps().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial JSON is always serializable")
    }

    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    pub fn from_json_value(j: &JsonPoly) -> Result<Self> {
        let mut p = Self::zero(j.n);
        for t in &j.terms {
            if t.x.len() != j.n {
                return Err(Error::Parse(format!("term has {} X-exponents, ring has {}", t.x.len(), j.n)));
            }
            let c: C = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient stored".into()));
            }
            p.add_term(Monomial::new(t.u, t.v, t.w, &t.x), c);
        }
        Ok(p)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: JsonPoly = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&j)
    }

    /// Parses the text form in a ring with `n` X-variables.
    pub fn parse_text(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut p = Self::zero(n);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let (m, c) = parse_term::<C>(term.trim(), n)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

fn parse_term<C: Coeff>(term: &str, n: usize) -> Result<(Monomial, C)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = C::one();
    let mut mono = Monomial::one(n);
    for (i, tok) in term.split_whitespace().enumerate() {
        if i == 0 {
            if let Ok(c) = tok.parse::<C>() {
                coeff = c;
                continue;
            }
            if let Some(rest) = tok.strip_prefix('-') {
                coeff = -C::one();
                apply_factor(&mut mono, rest, n)?;
                continue;
            }
        }
        apply_factor(&mut mono, tok, n)?;
    }
    Ok((mono, coeff))
}

fn apply_factor(mono: &mut Monomial, tok: &str, n: usize) -> Result<()> {
    let bad = || Error::Parse(format!("bad factor {tok:?}"));
    let (name, exp) = match tok.split_once('^') {
        Some((name, e)) => (name, e.parse::<i32>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let var = match name {
        "u" => Var::U,
        "v" => Var::V,
        "w" => Var::W,
        _ => {
            let i: usize = name.strip_prefix('X').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if i == 0 || i > n {
                return Err(Error::Parse(format!("{name} outside ring of order {n}")));
            }
            Var::X(i)
        }
    };
    let cur = mono.exp(var);
    mono.set_exp(var, cur + exp);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn zero_forms() {
        let z = P::zero(2);
        assert_eq!(z.to_text(), "0");
        assert_eq!(z.to_json(), r#"{"n":2,"terms":[]}"#);
    }

    #[test]
    fn v_cubed() {
        assert_eq!(P::v(2).pow(3).to_text(), "v^3");
    }

    #[test]
    fn single_json_term() {
        let n = 2;
        let p = P::u(n).pow(2) * P::w(n) * P::x(n, 1).pow(3) * P::x(n, 2).pow(2);
        assert_eq!(p.to_json(), r#"{"n":2,"terms":[{"c":"1","u":2,"v":0,"w":1,"x":[3,2]}]}"#);
    }

    #[test]
    fn text_round_trip_with_negatives() {
        let n = 2;
        let p = P::from_int(n, -3) * P::u(n) * P::monomial(Monomial::var_pow(n, Var::X(2), -2))
            - P::v(n)
            + P::from_int(n, 7)
            + P::x(n, 1) * P::from_int(n, 2);
        let s = p.to_text();
        assert_eq!(P::parse_text(&s, n).unwrap(), p);
        assert_eq!(P::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn canonical_order_is_graded() {
        let n = 1;
        let p = P::v(n) + P::u(n) * P::x(n, 1).pow(2) + P::w(n) * P::x(n, 1);
        assert_eq!(p.to_text(), "u X1^2 + w X1 + v");
    }

    #[test]
    fn parse_errors() {
        assert!(P::parse_text("X3", 2).is_err());
        assert!(P::parse_text("u + ", 2).is_err());
        assert!(P::from_json(r#"{"n":1,"terms":[{"c":"1","u":0,"v":0,"w":0,"x":[]}]}"#).is_err());
    }
}
