//! Command-line surface over the `asmdpp` engine.
//!
//! [`run`] parses arguments, dispatches, and returns the process exit code:
//! `0` on success, `1` when a verification fails, `2` on a usage error.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use asmdpp::asm_side::{
    asm_count, asm_to_mt, enumerate_amt, enumerate_asm, enumerate_damt, enumerate_mt, gf_amt_enum, gf_damt_enum,
    gf_extended_recursion, gf_generalized_recursion, mt_to_asm, mt_weight_w0,
};
use asmdpp::dpp_side::{
    dpp_sbcspp_to_dpp, dpp_to_dpp_sbcspp, enumerate_bcspp, enumerate_dpp, enumerate_dpp_pairs, enumerate_sbcspp,
    for_each_bcspp, for_each_dpp_pair, for_each_sbcspp, gf_bcspp, gf_dpp_pairs, gf_sbcspp, is_dpp_sbcspp,
    pair_from_sbcspp, sbcspp_from_pair,
};
use asmdpp::opformula::{gf_amt_closed, gf_generalized_closed, DecorWeights, GeneralWeightTable};
use asmdpp::paths::{
    dpp_pair_to_family, dpp_to_paths, enumerate_extended_families, family_to_dpp_pair, for_each_extended_family,
    gf_lgv, gf_paths_enum, paths_to_dpp, verify_identity, IdentityFailure, IDENTITY_NAMES,
};
use asmdpp::{Assignment, Poly, Var};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::json;
use thiserror::Error;

pub use report::{golden_n2, main2_difference, verify_all, CheckResult, Report, MAX_REPORT_ORDER};

#[derive(Debug, Parser)]
#[command(name = "asmdpp", version, about = "Exact enumeration and generating functions for ASM and DPP families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of objects of the given kind.
    Count(Target),
    /// List every object of the given kind.
    Enumerate(Target),
    /// Generating function of the given kind.
    Gf(GfArgs),
    /// Run `main2`, `all`, or one of the named identities.
    Verify(VerifyArgs),
    /// Apply a bijection to every object and check it round-trips.
    Biject(Target),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Selector {
    Asm,
    Mt,
    Amt,
    Damt,
    Dpp,
    Sbcspp,
    Pairs,
    Bcspp,
    Paths,
    Lgv,
    Closed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Specialization {
    /// `u = v = 1`, `w = -1`, every `X_i = 1`.
    Sign,
}

#[derive(Debug, Args)]
pub struct Order {
    #[arg(long)]
    pub n: Option<usize>,
    /// Bottom row, e.g. `1,2,3` or `-2,0,4`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub bottom: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
pub struct Target {
    #[arg(value_enum)]
    pub selector: Selector,
    #[command(flatten)]
    pub order: Order,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub target: Target,
    /// JSON file `[{"s": 0, "t": 1, "coeff": "u"}, ...]`.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Weight of the empty decoration, as a polynomial in text form.
    #[arg(long, allow_hyphen_values = true)]
    pub empty_weight: Option<String>,
    #[arg(long, value_enum)]
    pub specialize: Option<Specialization>,
    /// Integer assignments such as `u=2,X1=-1`; applied after `--specialize`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub assign: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `main2`, `all`, or an identity name.
    pub name: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest order exercised by `verify all`.
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] asmdpp::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// How a successfully executed command ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(status) => status.code(),
        // a closed pipe (`| head`) is not worth reporting
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<Status, CliError> {
    match cmd {
        Command::Count(t) => count(t, out),
        Command::Enumerate(t) => enumerate(t, out),
        Command::Gf(g) => gf(g, out),
        Command::Verify(v) => verify(v, out),
        Command::Biject(t) => biject(t, out),
    }
}

fn order_of(t: &Target) -> Result<usize, CliError> {
    if t.order.bottom.is_some() {
        return usage(format!("{:?} takes --n, not --bottom", t.selector).to_lowercase());
    }
    t.order.n.map_or_else(|| usage("missing --n"), Ok)
}

fn bottom_of(t: &Target) -> Result<Vec<i64>, CliError> {
    match (&t.order.bottom, t.order.n) {
        (Some(_), Some(_)) => usage("give either --n or --bottom, not both"),
        (Some(b), None) => Ok(b.clone()),
        (None, Some(n)) => Ok((1..=n as i64).collect()),
        (None, None) => usage("missing --n or --bottom"),
    }
}

fn strictly_increasing(k: &[i64]) -> Result<(), CliError> {
    if k.windows(2).any(|w| w[0] >= w[1]) {
        return usage("bottom row must be strictly increasing");
    }
    Ok(())
}

fn count(t: &Target, out: &mut dyn Write) -> Result<Status, CliError> {
    let c: BigInt = match t.selector {
        Selector::Asm => asm_count(order_of(t)?),
        Selector::Dpp => enumerate_dpp(order_of(t)?).len().into(),
        Selector::Mt | Selector::Amt | Selector::Damt => {
            let k = bottom_of(t)?;
            strictly_increasing(&k)?;
            match t.selector {
                Selector::Mt => enumerate_mt(&k).len(),
                Selector::Amt => enumerate_amt(&k).len(),
                _ => enumerate_damt(&k).len(),
            }
            .into()
        }
        Selector::Sbcspp => {
            let n = order_of(t)?;
            tally(|f| for_each_sbcspp(n, f))
        }
        Selector::Pairs => {
            let n = order_of(t)?;
            tally(|f| for_each_dpp_pair(n, f))
        }
        Selector::Bcspp => {
            let n = order_of(t)?;
            tally(|f| for_each_bcspp(n, f))
        }
        Selector::Paths => {
            let n = order_of(t)?;
            tally(|f| for_each_extended_family(n, f))
        }
        Selector::Lgv | Selector::Closed => return usage("count does not apply to lgv or closed"),
    };
    match t.format {
        OutputFormat::Text => writeln!(out, "{c}")?,
        OutputFormat::Json => writeln!(out, "{}", json!({ "count": c.to_string() }))?,
    }
    Ok(Status::Ok)
}

/// Counts by walking instead of collecting.
fn tally<T>(walk: impl FnOnce(&mut dyn FnMut(&T))) -> BigInt {
    let mut c = 0u64;
    walk(&mut |_| c += 1);
    c.into()
}

fn emit<T: std::fmt::Display + serde::Serialize>(
    items: &[T],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{x}")?;
            }
        }
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(items)?)?,
    }
    Ok(())
}

fn enumerate(t: &Target, out: &mut dyn Write) -> Result<Status, CliError> {
    match t.selector {
        Selector::Asm => emit(&enumerate_asm(order_of(t)?), t.format, out)?,
        Selector::Dpp => emit(&enumerate_dpp(order_of(t)?), t.format, out)?,
        Selector::Mt | Selector::Amt | Selector::Damt => {
            let k = bottom_of(t)?;
            strictly_increasing(&k)?;
            match t.selector {
                Selector::Mt => emit(&enumerate_mt(&k), t.format, out)?,
                Selector::Amt => emit(&enumerate_amt(&k), t.format, out)?,
                _ => {
                    // no text layout of its own: one JSON object per line
                    let all = enumerate_damt(&k);
                    match t.format {
                        OutputFormat::Text => {
                            for d in &all {
                                writeln!(out, "{}", serde_json::to_string(d)?)?;
                            }
                        }
                        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&all)?)?,
                    }
                }
            }
        }
        Selector::Sbcspp => emit(&enumerate_sbcspp(order_of(t)?), t.format, out)?,
        Selector::Pairs => emit(&enumerate_dpp_pairs(order_of(t)?), t.format, out)?,
        Selector::Bcspp => emit(&enumerate_bcspp(order_of(t)?), t.format, out)?,
        Selector::Paths => {
            let all = enumerate_extended_families(order_of(t)?);
            match t.format {
                OutputFormat::Text => {
                    for (i, f) in all.iter().enumerate() {
                        if i > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{f}")?;
                        write!(out, "{}", f.render())?;
                    }
                }
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&all)?)?,
            }
        }
        Selector::Lgv | Selector::Closed => return usage("enumerate does not apply to lgv or closed"),
    }
    Ok(Status::Ok)
}

#[derive(Deserialize)]
struct WeightEntry {
    s: i64,
    t: i64,
    coeff: String,
}

fn weight_coeff(c: &str, n: usize) -> Result<Poly, CliError> {
    Ok(match c.trim() {
        "u" => Poly::u(n),
        "v" => Poly::v(n),
        "w" => Poly::w(n),
        other => match other.parse::<i64>() {
            Ok(k) => Poly::from_int(n, k),
            Err(_) => return usage(format!("weight coefficient `{other}` is not u, v, w or an integer")),
        },
    })
}

/// Reads a generalized weight table; repeated `(s, t)` entries add up.
pub fn parse_weight_table(text: &str, n: usize) -> Result<GeneralWeightTable<BigInt>, CliError> {
    let entries: Vec<WeightEntry> = serde_json::from_str(text)?;
    let mut acc: std::collections::BTreeMap<(i64, i64), Poly> = Default::default();
    for e in entries {
        let w = weight_coeff(&e.coeff, n)?;
        let slot = acc.entry((e.s, e.t)).or_insert_with(|| Poly::zero(n));
        *slot = &*slot + &w;
    }
    let mut table = GeneralWeightTable::new(n);
    for ((s, t), w) in acc {
        table.set(s, t, w);
    }
    Ok(table)
}

fn parse_var(s: &str) -> Result<Var, CliError> {
    match s {
        "u" => Ok(Var::U),
        "v" => Ok(Var::V),
        "w" => Ok(Var::W),
        _ => match s.strip_prefix(['X', 'x']).and_then(|i| i.parse::<usize>().ok()) {
            Some(i) if i >= 1 => Ok(Var::X(i)),
            _ => usage(format!("unknown variable `{s}`")),
        },
    }
}

/// Builds the substitution requested by `--specialize` and `--assign`.
pub fn build_assignment(
    special: Option<Specialization>,
    assign: &[String],
    n: usize,
) -> Result<Option<Assignment<BigInt>>, CliError> {
    if special.is_none() && assign.is_empty() {
        return Ok(None);
    }
    let mut a = match special {
        Some(Specialization::Sign) => Assignment::sign(n),
        None => Assignment::new(),
    };
    for item in assign {
        let Some((var, val)) = item.split_once('=') else {
            return usage(format!("expected var=value, got `{item}`"));
        };
        let var = parse_var(var.trim())?;
        if let Var::X(i) = var {
            if i > n {
                return usage(format!("X{i} is outside the ring X1..X{n}"));
            }
        }
        let val: i64 = val.trim().parse().map_err(|_| CliError::Usage(format!("`{val}` is not an integer")))?;
        a = a.int(var, val);
    }
    Ok(Some(a))
}

/// Generating function selected by `g`, before any specialization.
pub fn generating_function(g: &GfArgs) -> Result<Poly, CliError> {
    let t = &g.target;
    let custom = g.weights.is_some() || g.empty_weight.is_some();
    if custom && !matches!(t.selector, Selector::Amt | Selector::Closed) {
        return usage("--weights and --empty-weight apply to amt and closed only");
    }
    if g.weights.is_some() && g.empty_weight.is_some() {
        return usage("--weights already fixes the empty decoration; drop --empty-weight");
    }
    let poly = match t.selector {
        Selector::Asm | Selector::Dpp => {
            return usage("plain ASMs and DPPs carry no weight; use amt or sbcspp")
        }
        Selector::Sbcspp => gf_sbcspp(order_of(t)?),
        Selector::Pairs => gf_dpp_pairs(order_of(t)?),
        Selector::Bcspp => gf_bcspp(order_of(t)?),
        Selector::Paths => gf_paths_enum(order_of(t)?),
        Selector::Lgv => gf_lgv(order_of(t)?)?,
        Selector::Mt | Selector::Damt => {
            let k = bottom_of(t)?;
            strictly_increasing(&k)?;
            if t.selector == Selector::Mt {
                enumerate_mt(&k).iter().fold(Poly::zero(k.len()), |acc, m| acc + mt_weight_w0(m))
            } else {
                gf_damt_enum(&k)
            }
        }
        Selector::Amt | Selector::Closed => {
            let k = bottom_of(t)?;
            let n = k.len();
            let closed = t.selector == Selector::Closed;
            if let Some(path) = &g.weights {
                let table = parse_weight_table(&std::fs::read_to_string(path)?, n)?;
                if closed {
                    gf_generalized_closed(&k, &table)?
                } else {
                    gf_generalized_recursion(&k, &table)
                }
            } else {
                let empty = match &g.empty_weight {
                    Some(s) => Poly::parse_text(s, n)?,
                    None => Poly::zero(n),
                };
                let dw = DecorWeights::with_empty(n, empty);
                if closed {
                    gf_amt_closed(&k, &dw)?
                } else if dw.empty.is_zero() && k.windows(2).all(|w| w[0] < w[1]) {
                    gf_amt_enum(&k)
                } else {
                    // extended triangles are only reachable through the signed recursion
                    gf_extended_recursion(&k, &dw)
                }
            }
        }
    };
    Ok(poly)
}

fn gf(g: &GfArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let mut p = generating_function(g)?;
    if let Some(a) = build_assignment(g.specialize, &g.assign, p.nvars())? {
        p = p.specialize(&a)?;
    }
    match g.target.format {
        OutputFormat::Text => writeln!(out, "{p}")?,
        OutputFormat::Json => writeln!(out, "{}", p.to_json())?,
    }
    Ok(Status::Ok)
}

fn verify(v: &VerifyArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    match v.name.as_str() {
        "all" => {
            if v.max_n > MAX_REPORT_ORDER {
                return usage(format!("--max-n is at most {MAX_REPORT_ORDER}"));
            }
            let report = verify_all(v.max_n);
            match v.format {
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                OutputFormat::Text => {
                    for c in &report.checks {
                        let mark = if c.passed { "pass" } else { "FAIL" };
                        writeln!(out, "{mark} {:>2} {} ({:.1} ms)", c.criterion, c.name, c.millis)?;
                        if let Some(d) = &c.detail {
                            writeln!(out, "    {d}")?;
                        }
                    }
                }
            }
            Ok(if report.passed { Status::Ok } else { Status::VerificationFailed })
        }
        "main2" => {
            let n = v.n.map_or_else(|| usage("missing --n"), Ok)?;
            if n == 0 || n > 4 {
                return usage("main2 is checked for 1 <= n <= 4");
            }
            let bottom: Vec<i64> = (1..=n as i64).collect();
            let asm_side: Poly = gf_amt_enum(&bottom);
            let dpp_side: Poly = gf_sbcspp(n);
            let same = asm_side == dpp_side && (n != 2 || main2_difference(&golden_n2()).is_none());
            match v.format {
                OutputFormat::Text => {
                    writeln!(out, "{asm_side}")?;
                    writeln!(out, "{dpp_side}")?;
                    if same {
                        let objects = asm_side.coefficient_sum();
                        writeln!(out, "identical: {} monomials, {objects} objects", asm_side.len())?;
                    } else {
                        writeln!(out, "difference: {}", &asm_side - &dpp_side)?;
                    }
                }
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "asm_side": asm_side.to_json_value(),
                        "dpp_side": dpp_side.to_json_value(),
                        "identical": same,
                    })
                )?,
            }
            Ok(if same { Status::Ok } else { Status::VerificationFailed })
        }
        name if IDENTITY_NAMES.contains(&name) => {
            let n = v.n.map_or_else(|| usage("missing --n"), Ok)?;
            match verify_identity(name, n) {
                Ok(()) => {
                    writeln!(out, "{name} holds at n = {n}")?;
                    Ok(Status::Ok)
                }
                Err(IdentityFailure::Order(_)) => usage(format!("{name} is checked for 1 <= n <= 4")),
                Err(e @ IdentityFailure::Mismatch { .. }) => {
                    writeln!(out, "{e}")?;
                    Ok(Status::VerificationFailed)
                }
                Err(e) => usage(e.to_string()),
            }
        }
        other => usage(format!("unknown check `{other}`; try main2, all, or one of {}", IDENTITY_NAMES.join(", "))),
    }
}

fn biject(t: &Target, out: &mut dyn Write) -> Result<Status, CliError> {
    let mut lines: Vec<(String, String)> = Vec::new();
    let mut broken = 0usize;
    let mut check = |ok: bool| {
        if !ok {
            broken += 1;
        }
    };
    match t.selector {
        Selector::Asm => {
            for a in enumerate_asm(order_of(t)?) {
                let m = asm_to_mt(&a);
                check(mt_to_asm(&m).as_ref() == Ok(&a));
                lines.push((a.to_string(), m.to_string()));
            }
        }
        Selector::Mt => {
            let k = bottom_of(t)?;
            if k.iter().enumerate().any(|(i, &x)| x != i as i64 + 1) {
                return usage("triangles correspond to ASMs only for the bottom row 1..n");
            }
            for m in enumerate_mt(&k) {
                let a = mt_to_asm(&m)?;
                check(asm_to_mt(&a) == m);
                lines.push((m.to_string(), a.to_string()));
            }
        }
        Selector::Dpp => {
            let n = order_of(t)?;
            for d in enumerate_dpp(n) {
                let f = dpp_to_paths(&d, n)?;
                check(paths_to_dpp(&f).as_ref() == Ok(&d));
                lines.push((d.to_string(), format!("{f}\n{}", f.render().trim_end())));
            }
        }
        Selector::Pairs => {
            for p in enumerate_dpp_pairs(order_of(t)?) {
                let s = sbcspp_from_pair(&p)?;
                check(pair_from_sbcspp(&s).as_ref() == Ok(&p));
                lines.push((p.to_string(), s.to_string()));
            }
        }
        Selector::Paths => {
            for f in enumerate_extended_families(order_of(t)?) {
                let p = family_to_dpp_pair(&f)?;
                check(dpp_pair_to_family(&p).as_ref() == Ok(&f));
                lines.push((f.to_string(), p.to_string()));
            }
        }
        Selector::Sbcspp => {
            let n = order_of(t)?;
            for s in enumerate_sbcspp(n).into_iter().filter(is_dpp_sbcspp) {
                let d = dpp_sbcspp_to_dpp(&s)?;
                check(dpp_to_dpp_sbcspp(&d, n).as_ref() == Ok(&s));
                lines.push((s.to_string(), d.to_string()));
            }
        }
        _ => return usage("biject applies to asm, mt, dpp, pairs, paths and sbcspp"),
    }
    match t.format {
        OutputFormat::Text => {
            for (i, (a, b)) in lines.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{a}\n=>\n{b}")?;
            }
            if broken > 0 {
                writeln!(out, "{broken} objects fail to round-trip")?;
            }
        }
        OutputFormat::Json => {
            let pairs: Vec<_> = lines.iter().map(|(a, b)| json!({ "from": a, "to": b })).collect();
            writeln!(out, "{}", json!({ "pairs": pairs, "round_trip_failures": broken }))?;
        }
    }
    Ok(if broken == 0 { Status::Ok } else { Status::VerificationFailed })
}
