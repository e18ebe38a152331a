//! The verification harness behind `verify all`.

use std::collections::BTreeSet;
use std::time::Instant;

use asmdpp::asm_side::{
    amt_weight, arrowings, asm_count, enumerate_mt, gf_amt_enum, gf_damt_enum, gf_extended_recursion,
    gf_generalized_recursion, mt_weight_w0,
};
use asmdpp::dpp_side::{
    dpp_sbcspp_to_dpp, enumerate_dpp, enumerate_sbcspp, for_each_sbcspp, gf_bcspp, gf_dpp_pairs, gf_sbcspp,
    involution_a, involution_b, is_dpp_sbcspp, Dpp,
};
use asmdpp::opformula::{gf_amt_closed, gf_generalized_closed, gf_mt_closed, DecorWeights, GeneralWeightTable};
use asmdpp::paths::{gf_lgv, gf_paths_enum, gf_paths_with_sources, lgv_subset, verify_identity, w_matrix, IDENTITY_NAMES};
use asmdpp::{Assignment, Monomial, Poly, Var};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Largest `--max-n` accepted by [`verify_all`].
pub const MAX_REPORT_ORDER: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub criterion: usize,
    pub name: &'static str,
    pub passed: bool,
    pub millis: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

type Check = fn(usize) -> Result<(), String>;

const CHECKS: [(&str, Check); 10] = [
    ("sign specialization counts", sign_counts),
    ("main2 equalities", main2_equalities),
    ("n = 2 table", golden_table),
    ("arrowed closed form", arrowed_closed_form),
    ("undecorated closed form and down arrows", undecorated_closed_form),
    ("generalized decorations", generalized),
    ("sign-reversing involutions", involutions),
    ("symbolic identities", identities),
    ("LGV per source set", lgv_per_subset),
    ("Durfee facts", durfee),
];

/// Runs every check with orders capped at `max_n`, clamped to `1..=MAX_REPORT_ORDER`.
/// Checks run in parallel; the report lists them in order.
pub fn verify_all(max_n: usize) -> Report {
    let max_n = max_n.clamp(1, MAX_REPORT_ORDER);
    let checks: Vec<CheckResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|&(name, check)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let outcome = check(max_n);
                    (name, outcome, start.elapsed().as_secs_f64() * 1e3)
                })
            })
            .collect();
        handles
            .into_iter()
            .enumerate()
            .map(|(i, h)| {
                let (name, outcome, millis) = h.join().unwrap_or_else(|_| (CHECKS[i].0, Err("panicked".into()), 0.0));
                CheckResult { criterion: i + 1, name, passed: outcome.is_ok(), millis, detail: outcome.err() }
            })
            .collect()
    });
    Report { max_n, passed: checks.iter().all(|c| c.passed), checks }
}

fn same(a: &Poly, b: &Poly, what: impl FnOnce() -> String) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{}: difference {}", what(), a - b))
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn id_bottom(n: usize) -> Vec<i64> {
    (1..=n as i64).collect()
}

fn increasing(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    (lo..=hi)
        .flat_map(|first| {
            increasing(n - 1, first + 1, hi).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn sign_of(p: &Poly) -> Result<BigInt, String> {
    p.specialize_to_int(&Assignment::sign(p.nvars())).map_err(|e| e.to_string())
}

/// The n = 2 polynomial as tabulated, one monomial `(u, v, w, X1, X2)` per object.
pub fn golden_n2() -> Poly {
    const ROWS: [(i32, i32, i32, i32, i32); 18] = [
        (0, 3, 0, 0, 0),
        (0, 2, 1, 1, 0),
        (1, 2, 0, 2, 0),
        (0, 2, 1, 0, 1),
        (1, 2, 0, 1, 1),
        (0, 1, 2, 1, 1),
        (1, 2, 0, 0, 2),
        (1, 1, 1, 2, 1),
        (1, 1, 1, 2, 1),
        (1, 1, 1, 1, 2),
        (1, 1, 1, 1, 2),
        (2, 1, 0, 3, 1),
        (1, 0, 2, 2, 2),
        (2, 1, 0, 2, 2),
        (2, 0, 1, 3, 2),
        (2, 1, 0, 1, 3),
        (2, 0, 1, 2, 3),
        (3, 0, 0, 3, 3),
    ];
    ROWS.iter().fold(Poly::zero(2), |acc, &(u, v, w, a, b)| acc + Poly::monomial(Monomial::new(u, v, w, &[a, b])))
}

/// `None` when both sides at n = 2 equal `expected`, otherwise the first
/// nonzero `computed - expected`.
pub fn main2_difference(expected: &Poly) -> Option<Poly> {
    let asm_side: Poly = gf_amt_enum(&[1, 2]);
    let dpp_side: Poly = gf_sbcspp(2);
    [asm_side, dpp_side].into_iter().map(|p| &p - expected).find(|d| !d.is_zero())
}

fn sign_counts(max_n: usize) -> Result<(), String> {
    for (n, want) in [(1usize, 1u32), (2, 2), (3, 7), (4, 42)].into_iter().filter(|&(n, _)| n <= max_n) {
        let want = BigInt::from(want);
        ensure(sign_of(&gf_amt_enum(&id_bottom(n)))? == want, || format!("arrowed triangles, n = {n}"))?;
        ensure(sign_of(&gf_sbcspp(n))? == want, || format!("SBCSPPs, n = {n}"))?;
        ensure(asm_count(n) == want, || format!("ASM count, n = {n}"))?;
        ensure(BigInt::from(enumerate_dpp(n).len()) == want, || format!("DPP count, n = {n}"))?;
    }
    let closed = gf_amt_closed::<BigInt>(&id_bottom(5), &DecorWeights::standard(5)).map_err(|e| e.to_string())?;
    ensure(sign_of(&closed)? == BigInt::from(429), || "closed form at n = 5".into())
}

fn main2_equalities(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n.min(4) {
        let amt: Poly = gf_amt_enum(&id_bottom(n));
        same(&amt, &gf_sbcspp(n), || format!("SBCSPPs, n = {n}"))?;
        same(&amt, &gf_lgv(n).map_err(|e| e.to_string())?, || format!("LGV, n = {n}"))?;
        if n <= 3 {
            same(&amt, &gf_dpp_pairs(n), || format!("DPP pairs, n = {n}"))?;
            same(&amt, &gf_bcspp(n), || format!("BCSPPs, n = {n}"))?;
            same(&amt, &gf_paths_enum(n), || format!("path families, n = {n}"))?;
        }
    }
    Ok(())
}

fn golden_table(_: usize) -> Result<(), String> {
    match main2_difference(&golden_n2()) {
        None => Ok(()),
        Some(d) => Err(format!("n = 2 table: difference {d}")),
    }
}

fn arrowed_closed_form(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n.min(3) {
        for k in increasing(n, -2, 4) {
            let closed = gf_amt_closed::<BigInt>(&k, &DecorWeights::standard(n)).map_err(|e| e.to_string())?;
            same(&closed, &gf_amt_enum(&k), || format!("k = {k:?}"))?;
        }
    }
    let n = max_n.min(3);
    let dw = DecorWeights::with_empty(n, &Poly::x(n, 1) - &Poly::from_int(n, 3));
    let mut k = vec![-2i64; n];
    loop {
        let closed = gf_amt_closed::<BigInt>(&k, &dw).map_err(|e| e.to_string())?;
        same(&closed, &gf_extended_recursion(&k, &dw), || format!("with empty weight, k = {k:?}"))?;
        // odometer over [-2, 2]^n
        let Some(pos) = k.iter().position(|&x| x < 2) else { break };
        k[pos] += 1;
        k[..pos].iter_mut().for_each(|x| *x = -2);
    }
    Ok(())
}

fn undecorated_closed_form(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n.min(4) {
        let mut factor = Poly::one(n);
        for i in 1..=n {
            let row = &Poly::u(n) * &Poly::x(n, i)
                + Poly::v(n).mul_monomial(&Monomial::var_pow(n, Var::X(i), -1))
                + Poly::w(n);
            factor = &factor * &row;
        }
        for k in increasing(n, 0, 5) {
            let triangles = enumerate_mt(&k);
            let direct = triangles.iter().fold(Poly::zero(n), |acc, m| acc + mt_weight_w0(m));
            same(&gf_mt_closed(&k).map_err(|e| e.to_string())?, &direct, || format!("closed, k = {k:?}"))?;
            same(&gf_damt_enum(&k), &direct, || format!("down arrows, k = {k:?}"))?;
            for m in &triangles {
                let arrowed = arrowings(m).iter().fold(Poly::zero(n), |acc, a| acc + amt_weight(a));
                same(&arrowed, &(&mt_weight_w0::<BigInt>(m) * &factor), || format!("arrowings of {:?}", m.rows()))?;
            }
        }
    }
    Ok(())
}

fn random_table(rng: &mut ChaCha8Rng, n: usize) -> GeneralWeightTable<BigInt> {
    let mut t = GeneralWeightTable::new(n);
    for _ in 0..rng.gen_range(1..=4) {
        let w = match rng.gen_range(0..4) {
            0 => Poly::u(n),
            1 => Poly::v(n),
            2 => Poly::w(n),
            _ => Poly::from_int(n, rng.gen_range(-3..=3)),
        };
        t.set(rng.gen_range(0..=2), rng.gen_range(0..=2), w);
    }
    t
}

fn generalized(_: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..10 {
        for n in 2..=3 {
            let wt = random_table(&mut rng, n);
            let k: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=2)).collect();
            let closed = gf_generalized_closed(&k, &wt).map_err(|e| e.to_string())?;
            same(&closed, &gf_generalized_recursion(&k, &wt), || format!("table {round}, k = {k:?}"))?;
        }
    }
    Ok(())
}

fn involutions(max_n: usize) -> Result<(), String> {
    for n in 0..=max_n.min(4) {
        let mut survivors = BTreeSet::new();
        let mut bad: Option<String> = None;
        for_each_sbcspp(n, |d| {
            if bad.is_some() {
                return;
            }
            let sign = d.weight::<BigInt>().sign_value().expect("integral at the sign point");
            match involution_a(d).or_else(|_| involution_b(d)) {
                Ok(e) => {
                    let back = involution_a(&e).or_else(|_| involution_b(&e));
                    let flips = e.weight::<BigInt>().sign_value().ok() == Some(-sign);
                    if back.as_ref() != Ok(d) || &e == d || !flips || is_dpp_sbcspp(d) {
                        bad = Some(format!("involution misbehaves on {d}"));
                    }
                }
                Err(_) => match dpp_sbcspp_to_dpp(d) {
                    Ok(p) if is_dpp_sbcspp(d) && survivors.insert(p.clone()) => {}
                    _ => bad = Some(format!("unexpected fixed point {d}")),
                },
            }
        });
        if let Some(b) = bad {
            return Err(b);
        }
        let dpps: BTreeSet<Dpp> = enumerate_dpp(n).into_iter().collect();
        ensure(survivors == dpps, || format!("survivors are not the DPPs at n = {n}"))?;
    }
    Ok(())
}

fn identities(max_n: usize) -> Result<(), String> {
    for name in IDENTITY_NAMES {
        for n in 1..=max_n.min(3) {
            verify_identity(name, n).map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn lgv_per_subset(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n.min(3) {
        let w = w_matrix::<BigInt>(n);
        for subset in 0u32..(1 << n) {
            let det = lgv_subset(&w, n, subset).map_err(|e| e.to_string())?;
            same(&det, &gf_paths_with_sources(n, subset), || format!("n = {n}, sources {subset:b}"))?;
        }
    }
    Ok(())
}

fn durfee(max_n: usize) -> Result<(), String> {
    for n in 3..=max_n.clamp(3, 4) {
        let survivors: Vec<_> = enumerate_sbcspp(n).into_iter().filter(is_dpp_sbcspp).collect();
        let full = survivors.iter().filter(|d| d.shape().durfee() == n - 1).count();
        ensure(full == 1, || format!("{full} survivors of Durfee length {} at n = {n}", n - 1))?;
        for d in &survivors {
            ensure(d.monomial().exp(Var::X(1)) == d.shape().durfee() as i32, || format!("X1 exponent of {d}"))?;
        }
        let top = enumerate_mt(&id_bottom(n)).iter().filter(|m| m.get(1, 1) == n as i64).count();
        ensure(top == enumerate_mt(&id_bottom(n - 1)).len(), || format!("top entry {n}"))?;
    }
    Ok(())
}
