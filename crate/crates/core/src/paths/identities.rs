//! Exact checks of the symmetric function and matrix identities that turn the
//! closed formula for the bottom row `(1,..,n)` into the path determinant.
//! Every identity is posed without division.

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::Error;
use crate::laurent::{determinant, identity_matrix, mat_mul, Monomial, Var};
use crate::opformula::{gf_amt_closed, DecorWeights};
use crate::symfunc::{e_subset, h_ext, h_subset, permutation_sign, schur_ext, schur_jacobi_trudi, schur_staircase};
use crate::{Poly, PolyMatrix};

use super::lgv::{binomial, w_matrix, w_matrix_enum};

pub const IDENTITY_NAMES: &[&str] = &[
    "hrec",
    "reciprocity",
    "hdecomp",
    "jt_forms",
    "hinverse",
    "h_matrix_product",
    "lemma_general",
    "bialternant",
    "column_ops",
    "dettodet",
    "bn_det",
    "bn_inverse",
    "asym",
    "pathlast",
];

/// Largest order accepted by [`verify_identity`].
pub const MAX_IDENTITY_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityFailure {
    #[error("unknown identity `{0}`")]
    UnknownName(String),
    #[error("order {0} is outside 1..={MAX_IDENTITY_ORDER}")]
    Order(usize),
    #[error("{name} fails at n = {n} ({at}); difference: {difference}")]
    Mismatch { name: &'static str, n: usize, at: String, difference: Poly },
    #[error(transparent)]
    Engine(#[from] Error),
}

type Check = Result<(), IdentityFailure>;

/// Verifies the named identity at order `n`; on failure the error carries
/// the difference of the two sides.
pub fn verify_identity(name: &str, n: usize) -> Check {
    let Some(&name) = IDENTITY_NAMES.iter().find(|&&k| k == name) else {
        return Err(IdentityFailure::UnknownName(name.to_string()));
    };
    if n == 0 || n > MAX_IDENTITY_ORDER {
        return Err(IdentityFailure::Order(n));
    }
    let c = Checker { name, n };
    match name {
        "hrec" => c.hrec(),
        "reciprocity" => c.reciprocity(),
        "hdecomp" => c.hdecomp(),
        "jt_forms" => c.jt_forms(),
        "hinverse" => c.hinverse(),
        "h_matrix_product" => c.h_matrix_product(),
        "lemma_general" => c.lemma_general(),
        "bialternant" => c.bialternant(),
        "column_ops" => c.column_ops(),
        "dettodet" => c.dettodet(),
        "bn_det" => c.bn_det(),
        "bn_inverse" => c.bn_inverse(),
        "asym" => c.asym(),
        "pathlast" => c.pathlast(),
        _ => unreachable!(),
    }
}

struct Checker {
    name: &'static str,
    n: usize,
}

fn x(n: usize, i: usize) -> Poly {
    Poly::x(n, i)
}

fn x_inv(n: usize, i: usize) -> Poly {
    Poly::monomial(Monomial::var_pow(n, Var::X(i), -1))
}

fn mono(n: usize, u: i32, v: i32, w: i32) -> Poly {
    let mut m = Monomial::one(n);
    m.set_exp(Var::U, u);
    m.set_exp(Var::V, v);
    m.set_exp(Var::W, w);
    Poly::monomial(m)
}

fn signed(p: Poly, negative: bool) -> Poly {
    if negative {
        -p
    } else {
        p
    }
}

fn build(n: usize, f: impl Fn(usize, usize) -> Poly) -> PolyMatrix {
    (1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let e = rest.remove(k);
            cur.push(e);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, e);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `∏_{i<j} (X_j - X_i)` over the first `m` variables of a ring with `n`.
fn vandermonde(n: usize, m: usize) -> Poly {
    let mut out = Poly::one(n);
    for i in 1..=m {
        for j in i + 1..=m {
            out = &out * &(x(n, j) - x(n, i));
        }
    }
    out
}

/// `Σ_σ sgn σ f(X_σ(1),..,X_σ(m))`, permuting the first `m` variables; with
/// `paired`, `X_{m+i}` moves along with `X_i`.
fn antisymmetrize(n: usize, m: usize, f: &Poly, paired: bool) -> Poly {
    let mut out = Poly::zero(n);
    for sigma in permutations(m) {
        let mut perm = sigma.clone();
        if paired {
            perm.extend(sigma.iter().map(|s| s + m));
        }
        let image = f.permute_x(&perm);
        let zero_based: Vec<usize> = sigma.iter().map(|s| s - 1).collect();
        out = if permutation_sign(&zero_based) > 0 { out + image } else { out - image };
    }
    out
}

/// `∏_{p≤q} (u X_q + v X_p^{-1} + w)`.
fn asym_kernel(n: usize) -> Poly {
    let mut out = Poly::one(n);
    for p in 1..=n {
        for q in p..=n {
            let f = &(&Poly::u(n) * &x(n, q)) + &(&Poly::v(n) * &x_inv(n, p)) + Poly::w(n);
            out = &out * &f;
        }
    }
    out
}

/// `((u X_i + w)^j - (-v X_i^{-1})^j)`.
fn bialternant_matrix(n: usize) -> PolyMatrix {
    build(n, |i, j| {
        let a = (&(&Poly::u(n) * &x(n, i)) + &Poly::w(n)).pow(j as u32);
        let b = (-(&Poly::v(n) * &x_inv(n, i))).pow(j as u32);
        a - b
    })
}

/// `f_j(X) = (uX)^{j-1}(uX + w) + (-vX^{-1} - w)^{j-1} v X^{-1}` at `X = X_i`.
fn f_entry(n: usize, i: usize, j: usize) -> Poly {
    let ux = &Poly::u(n) * &x(n, i);
    let vx = &Poly::v(n) * &x_inv(n, i);
    let left = &ux.pow(j as u32 - 1) * &(&ux + &Poly::w(n));
    let right = &(-(&vx + &Poly::w(n))).pow(j as u32 - 1) * &vx;
    left + right
}

fn a_matrix(n: usize) -> PolyMatrix {
    build(n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        &mono(n, j as i32, 0, 0) * &h_ext(n, j - i + 1, 1..=i as usize)
            + &mono(n, j as i32 - 1, 0, 1) * &h_ext(n, j - i, 1..=i as usize)
    })
}

fn b_matrix(n: usize) -> PolyMatrix {
    build(n, |i, j| {
        let mut out = Poly::zero(n);
        for l in 1..=j as i64 {
            let c = binomial(j as i64 - 1, l - 1);
            let term = &mono(n, 0, l as i32, j as i32 - l as i32) * &h_ext(n, -l - i as i64 + 1, 1..=i);
            out = out + signed(term.scale(&BigInt::from(c)), j % 2 == 0);
        }
        out
    })
}

/// `(h_{1-i-j}(X_1..X_i))`.
fn h_first(n: usize) -> PolyMatrix {
    build(n, |i, j| h_ext(n, 1 - i as i64 - j as i64, 1..=i))
}

/// `(h_{1-i-j}(X_1..X_n))`.
fn h_full(n: usize) -> PolyMatrix {
    build(n, |i, j| h_ext(n, 1 - i as i64 - j as i64, 1..=n))
}

/// `(h_{j-i}(X_j..X_n))`.
fn h_tail(n: usize) -> PolyMatrix {
    build(n, |i, j| h_ext(n, j as i64 - i as i64, j..=n))
}

/// `((-1)^{i+j} e_{i+j-1}(X_1..X_n))`.
fn e_full(n: usize) -> PolyMatrix {
    let all: Vec<usize> = (1..=n).collect();
    build(n, |i, j| signed(e_subset(n, (i + j) as i64 - 1, &all), (i + j) % 2 == 1))
}

/// `(C(j-1,i-1) (-1)^{j-1} v^i w^{j-i})`.
fn binomial_factor(n: usize) -> PolyMatrix {
    build(n, |i, j| {
        let c = binomial(j as i64 - 1, i as i64 - 1);
        if c == 0 {
            return Poly::zero(n);
        }
        signed(mono(n, 0, i as i32, j as i32 - i as i32).scale(&BigInt::from(c)), j % 2 == 0)
    })
}

fn binomial_factor_inverse(n: usize) -> PolyMatrix {
    build(n, |i, j| {
        let c = binomial(j as i64 - 1, i as i64 - 1);
        if c == 0 {
            return Poly::zero(n);
        }
        signed(mono(n, 0, -(j as i32), j as i32 - i as i32).scale(&BigInt::from(c)), j % 2 == 0)
    })
}

fn a_full(n: usize) -> PolyMatrix {
    build(n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        &mono(n, j as i32, 0, 0) * &h_ext(n, j - i + 1, 1..=n) + &mono(n, j as i32 - 1, 0, 1) * &h_ext(n, j - i, 1..=n)
    })
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// `h_k` straight from the definition: nonnegative exponent vectors for
/// `k >= 0`, strictly negative ones with sign `(-1)^{m+1}` for `k < 0`.
fn h_direct(n: usize, k: i64, vars: &[usize]) -> Poly {
    fn go(n: usize, vars: &[usize], left: i64, lo: i64, acc: &mut Monomial, out: &mut Poly) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    *out = std::mem::replace(out, Poly::zero(n)) + Poly::monomial(acc.clone());
                }
            }
            Some((&v, rest)) => {
                let (a, b) = if lo >= 0 { (0, left) } else { (left + lo * rest.len() as i64, lo) };
                for e in a..=b {
                    acc.set_exp(Var::X(v), e as i32);
                    go(n, rest, left - e, lo, acc, out);
                }
                acc.set_exp(Var::X(v), 0);
            }
        }
    }
    let m = vars.len();
    if k < 0 && (m == 0 || k > -(m as i64)) {
        return Poly::zero(n);
    }
    let mut out = Poly::zero(n);
    let lo = if k >= 0 { 0 } else { -1 };
    go(n, vars, k, lo, &mut Monomial::one(n), &mut out);
    signed(out, k < 0 && m.is_multiple_of(2))
}

impl Checker {
    fn eq(&self, at: impl FnOnce() -> String, lhs: &Poly, rhs: &Poly) -> Check {
        if lhs == rhs {
            return Ok(());
        }
        Err(IdentityFailure::Mismatch { name: self.name, n: self.n, at: at(), difference: lhs - rhs })
    }

    fn mat_eq(&self, what: &str, lhs: &PolyMatrix, rhs: &PolyMatrix) -> Check {
        for (i, (a, b)) in lhs.iter().zip(rhs).enumerate() {
            for (j, (p, q)) in a.iter().zip(b).enumerate() {
                self.eq(|| format!("{what}, entry ({},{})", i + 1, j + 1), p, q)?;
            }
        }
        Ok(())
    }

    fn ks(&self) -> std::ops::RangeInclusive<i64> {
        let r = 3 * self.n as i64 + 1;
        -r..=r
    }

    /// Needs a variable left after the removal; with one variable the
    /// statement degenerates to `h_k(X_1) = X_1^k`, which is checked instead.
    fn hrec(&self) -> Check {
        let n = self.n;
        for k in self.ks() {
            let lhs = h_ext(n, k, 1..=n);
            if n == 1 {
                self.eq(|| format!("k = {k}"), &lhs, &Poly::monomial(Monomial::var_pow(1, Var::X(1), k as i32)))?;
                continue;
            }
            for i in 1..=n {
                let rest: Vec<usize> = (1..=n).filter(|&t| t != i).collect();
                let rhs = h_subset(n, k, &rest) + &x(n, i) * &h_ext(n, k - 1, 1..=n);
                self.eq(|| format!("k = {k}, i = {i}"), &lhs, &rhs)?;
            }
        }
        Ok(())
    }

    fn reciprocity(&self) -> Check {
        let n = self.n;
        for m in 1..=n {
            let vars = range(1, m);
            let mut shift = Monomial::one(n);
            for &i in &vars {
                shift.set_exp(Var::X(i), -1);
            }
            for k in self.ks() {
                let direct = h_direct(n, k, &vars);
                self.eq(|| format!("library h_{k} on {m} variables"), &h_subset(n, k, &vars), &direct)?;
                let mirrored = h_direct(n, -k - m as i64, &vars).invert_x(&vars).mul_monomial(&shift);
                self.eq(|| format!("k = {k}, {m} variables"), &direct, &signed(mirrored, m % 2 == 0))?;
            }
        }
        Ok(())
    }

    fn hdecomp(&self) -> Check {
        let n = self.n;
        for a in self.ks() {
            let lhs = h_ext(n, a, 1..=n);
            for b in 1..=n {
                let mut rhs = Poly::zero(n);
                for l in 0..b {
                    rhs = rhs + &h_ext(n, a - l as i64, b - l..=n) * &h_ext(n, l as i64, 1..=b - l);
                }
                self.eq(|| format!("a = {a}, b = {b}"), &lhs, &rhs)?;
            }
        }
        Ok(())
    }

    fn jt_forms(&self) -> Check {
        let n = self.n;
        let mut k = vec![-2i64; n];
        loop {
            let full = schur_jacobi_trudi::<BigInt>(n, &k);
            self.eq(|| format!("staircase, k = {k:?}"), &full, &schur_staircase(n, &k))?;
            self.eq(|| format!("definition, k = {k:?}"), &full, &schur_ext(n, &k))?;
            let Some(pos) = k.iter().position(|&e| e < 2) else { break };
            k[pos] += 1;
            for e in &mut k[..pos] {
                *e = -2;
            }
        }
        Ok(())
    }

    fn hinverse(&self) -> Check {
        let n = self.n;
        let id = identity_matrix(n, n);
        let (h, e) = (h_full(n), e_full(n));
        self.mat_eq("H E", &mat_mul(n, &h, &e)?, &id)?;
        self.mat_eq("E H", &mat_mul(n, &e, &h)?, &id)?;
        let left = build(n, |i, j| {
            let p = &e_subset(n, i as i64 - 1, &range(1, n - j)) * &x(n, n - j + 1);
            signed(p, i % 2 == 1)
        });
        let right = build(n, |i, j| signed(e_subset(n, j as i64 - 1, &range(n + 2 - i, n)), j % 2 == 1));
        self.mat_eq("factorization of the inverse", &mat_mul(n, &left, &right)?, &e)
    }

    fn h_matrix_product(&self) -> Check {
        let n = self.n;
        let tail = h_tail(n);
        self.mat_eq("h products", &mat_mul(n, &tail, &h_first(n))?, &h_full(n))?;
        let full = a_full(n);
        self.mat_eq("A products", &mat_mul(n, &tail, &a_matrix(n))?, &full)?;
        let signs = build(n, |i, j| signed(e_subset(n, j as i64 - 1, &range(n + 2 - i, n)), j % 2 == 0));
        let reduced = build(n, |i, j| {
            let top = n + 1 - i;
            &mono(n, j as i32, 0, 0) * &h_ext(n, j as i64, 1..=top)
                + &mono(n, j as i32 - 1, 0, 1) * &h_ext(n, j as i64 - 1, 1..=top)
        });
        self.mat_eq("elementary reduction", &mat_mul(n, &signs, &full)?, &reduced)
    }

    fn lemma_general(&self) -> Check {
        let n = self.n;
        let ring = 2 * n;
        let lhs = build(n, |i, j| x(ring, i).pow(j as u32) - x(ring, n + i).pow(j as u32));
        let mut kernel = Poly::one(ring);
        for i in 1..=n {
            for j in i..=n {
                kernel = &kernel * &(x(ring, j) - x(ring, n + i));
            }
        }
        let rhs = antisymmetrize(ring, n, &kernel, true);
        self.eq(|| "determinant against the antisymmetrizer".into(), &determinant(ring, &lhs)?, &rhs)
    }

    fn bialternant(&self) -> Check {
        let n = self.n;
        let lhs = antisymmetrize(n, n, &asym_kernel(n), false);
        self.eq(|| "antisymmetrizer against the bialternant".into(), &lhs, &determinant(n, &bialternant_matrix(n))?)
    }

    fn column_ops(&self) -> Check {
        let n = self.n;
        let ring = n + 1;
        let t = x(ring, ring);
        let with_t = build(n, |i, j| {
            let a = &(&Poly::u(ring) * &x(ring, i)) + &Poly::w(ring);
            let b = &Poly::v(ring) * &x_inv(ring, i);
            let e = j as u32 - 1;
            &(&a + &t).pow(e) * &a + &(&t - &b).pow(e) * &b
        });
        let base = determinant(n, &bialternant_matrix(n))?;
        self.eq(|| "symbolic t".into(), &base.widen(ring), &determinant(ring, &with_t)?)?;
        let at_w = build(n, |i, j| f_entry(n, i, j));
        self.eq(|| "t = -w".into(), &base, &determinant(n, &at_w)?)
    }

    fn dettodet(&self) -> Check {
        let n = self.n;
        let vdm = vandermonde(n, n);
        // exponents in [-r, r], wide enough to cross the vanishing gap
        let r = (n as i64 + 1).min(3);
        let mut m = vec![-r; n];
        loop {
            let lhs = build(n, |i, j| Poly::monomial(Monomial::var_pow(n, Var::X(i), m[j - 1] as i32)));
            let rhs = build(n, |i, j| h_ext(n, m[j - 1] - i as i64 + 1, 1..=i));
            let (l, r2) = (determinant(n, &lhs)?, &vdm * &determinant(n, &rhs)?);
            self.eq(|| format!("monomials {m:?}"), &l, &r2)?;
            let Some(pos) = m.iter().position(|&e| e < r) else { break };
            m[pos] += 1;
            for e in &mut m[..pos] {
                *e = -r;
            }
        }
        // the coefficients of f_j produce A + B
        let f = build(n, |i, j| f_entry(n, i, j));
        let ab = build(n, |i, j| {
            let mut out = Poly::zero(n);
            for (mono_, c) in f_entry(n, 1, j).terms() {
                let l = mono_.exp(Var::X(1)) as i64;
                let mut rest = mono_.clone();
                rest.set_exp(Var::X(1), 0);
                let term = Poly::term(rest, c.clone());
                out = out + &term * &h_ext(n, l - i as i64 + 1, 1..=i);
            }
            out
        });
        let sum: PolyMatrix = a_matrix(n)
            .into_iter()
            .zip(b_matrix(n))
            .map(|(a, b)| a.into_iter().zip(b).map(|(p, q)| p + q).collect())
            .collect();
        self.mat_eq("coefficient extraction", &ab, &sum)?;
        self.eq(|| "det f_j(X_i)".into(), &determinant(n, &f)?, &(&vdm * &determinant(n, &sum)?))
    }

    fn bn_det(&self) -> Check {
        let n = self.n;
        let b = b_matrix(n);
        self.mat_eq("factorization", &mat_mul(n, &h_first(n), &binomial_factor(n))?, &b)?;
        let mut want = Monomial::var_pow(n, Var::V, (n * (n + 1) / 2) as i32);
        for i in 1..=n {
            want.set_exp(Var::X(i), -(n as i32));
        }
        self.eq(|| "det B".into(), &determinant(n, &b)?, &Poly::monomial(want))
    }

    fn bn_inverse(&self) -> Check {
        let n = self.n;
        let id = identity_matrix(n, n);
        let (bin, bin_inv) = (binomial_factor(n), binomial_factor_inverse(n));
        self.mat_eq("binomial factor", &mat_mul(n, &bin, &bin_inv)?, &id)?;
        let tail = h_tail(n);
        let inv = mat_mul(n, &mat_mul(n, &bin_inv, &e_full(n))?, &tail)?;
        self.mat_eq("B B^{-1}", &mat_mul(n, &b_matrix(n), &inv)?, &id)?;
        let unsigned = build(n, |i, j| {
            let c = binomial(j as i64 - 1, i as i64 - 1);
            mono(n, 0, -(j as i32), j as i32 - i as i32).scale(&BigInt::from(c))
        });
        let e_lower = build(n, |i, j| &e_subset(n, i as i64 - 1, &range(1, n - j)) * &x(n, n - j + 1));
        let e_upper = build(n, |i, j| signed(e_subset(n, j as i64 - 1, &range(n + 2 - i, n)), j % 2 == 0));
        let four = mat_mul(n, &mat_mul(n, &mat_mul(n, &unsigned, &e_lower)?, &e_upper)?, &tail)?;
        self.mat_eq("four factors", &four, &inv)
    }

    fn asym(&self) -> Check {
        let n = self.n;
        let anti = antisymmetrize(n, n, &asym_kernel(n), false);
        let mut shift = Monomial::one(n);
        for i in 1..=n {
            shift.set_exp(Var::X(i), n as i32);
        }
        let lhs = anti.mul_monomial(&shift);
        let bottom: Vec<i64> = (1..=n as i64).collect();
        let gf = gf_amt_closed::<BigInt>(&bottom, &DecorWeights::standard(n))?;
        let vdm = vandermonde(n, n);
        self.eq(|| "multiplied by the Vandermonde".into(), &lhs, &(&gf * &vdm))?;
        self.eq(|| "divided form".into(), &lhs.divide_exact(&vdm)?, &gf)
    }

    fn pathlast(&self) -> Check {
        let n = self.n;
        let w = w_matrix::<BigInt>(n);
        self.mat_eq("B W = A", &mat_mul(n, &b_matrix(n), &w)?, &a_matrix(n))?;
        self.mat_eq("formula against paths", &w, &w_matrix_enum(n))?;
        let mut shift = Monomial::one(n);
        for i in 1..=n {
            shift.set_exp(Var::X(i), n as i32);
        }
        let sum: PolyMatrix = a_matrix(n)
            .into_iter()
            .zip(b_matrix(n))
            .map(|(a, b)| a.into_iter().zip(b).map(|(p, q)| p + q).collect())
            .collect();
        let bottom: Vec<i64> = (1..=n as i64).collect();
        let gf = gf_amt_closed::<BigInt>(&bottom, &DecorWeights::standard(n))?;
        self.eq(|| "det(A + B)".into(), &determinant(n, &sum)?.mul_monomial(&shift), &gf)?;
        self.eq(|| "LGV determinant".into(), &super::lgv::gf_lgv(n)?, &gf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_h_vanishes_in_the_gap() {
        assert!(h_direct(3, -2, &[1, 2, 3]).is_zero());
        assert_eq!(h_direct(2, -2, &[1, 2]), -Poly::monomial(Monomial::new(0, 0, 0, &[-1, -1])));
        assert_eq!(h_direct(2, 3, &[1, 2]).len(), 4);
    }

    #[test]
    fn mismatches_carry_the_difference() {
        let c = Checker { name: "hrec", n: 1 };
        let err = c.eq(|| "probe".into(), &Poly::x(1, 1), &Poly::one(1)).unwrap_err();
        match err {
            IdentityFailure::Mismatch { difference, .. } => assert_eq!(difference, Poly::x(1, 1) - Poly::one(1)),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn unknown_names_and_orders() {
        assert_eq!(verify_identity("nope", 2), Err(IdentityFailure::UnknownName("nope".into())));
        assert_eq!(verify_identity("hrec", 0), Err(IdentityFailure::Order(0)));
    }

    #[test]
    fn small_orders() {
        for name in IDENTITY_NAMES {
            for n in 1..=2 {
                if let Err(e) = verify_identity(name, n) {
                    panic!("{e}");
                }
            }
        }
    }
}
