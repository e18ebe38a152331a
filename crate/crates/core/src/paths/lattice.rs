use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::dpp_side::{class2_to_dpp, dpp_to_class2, Dpp, DppPair, ShiftedCsspp};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};

/// Unit steps. `U` and `Uw` are the two copies of an up-step left of the
/// axis (weights `1` and `X_m v^{-1} w`); `G` is the diagonal `(1,-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    R,
    U,
    Uw,
    D,
    G,
}

impl Step {
    fn delta(self) -> (i32, i32) {
        match self {
            Step::R => (1, 0),
            Step::U | Step::Uw => (0, 1),
            Step::D => (0, -1),
            Step::G => (1, -1),
        }
    }

    fn is_up(self) -> bool {
        matches!(self, Step::U | Step::Uw)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    /// `(0, i-2) -> (i, 0)` with right and down steps.
    Classical,
    /// `(-i, i-2) -> (i, -2)` with the region dependent step sets.
    Extended,
}

impl PathKind {
    pub fn start(self, i: usize) -> (i32, i32) {
        let i = i as i32;
        match self {
            PathKind::Classical => (0, i - 2),
            PathKind::Extended => (-i, i - 2),
        }
    }

    pub fn end(self, j: usize) -> (i32, i32) {
        let j = j as i32;
        match self {
            PathKind::Classical => (j, 0),
            PathKind::Extended => (j, -2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub i: usize,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn vertices(&self, kind: PathKind) -> Vec<(i32, i32)> {
        let mut p = kind.start(self.i);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }
}

/// Checks the step rules for a single path from the source of `i` to the sink
/// of `j`.
fn check_steps(kind: PathKind, n: usize, i: usize, j: usize, steps: &[Step]) -> Result<()> {
    let bad = |msg: String| Err(Error::Domain(msg));
    let top = n as i32 - 2;
    let (mut x, mut y) = kind.start(i);
    for (t, &s) in steps.iter().enumerate() {
        let last = t + 1 == steps.len();
        let ok = match (kind, s) {
            (PathKind::Classical, Step::R) => true,
            (PathKind::Classical, Step::D) => y > 0,
            (PathKind::Classical, _) => false,
            (PathKind::Extended, Step::U | Step::Uw) => x < 0 && y < top,
            (PathKind::Extended, Step::R) => x < 0 || y >= -1,
            (PathKind::Extended, Step::D) => x >= 0 && (y >= 0 || (y == -1 && last)),
            (PathKind::Extended, Step::G) => x >= 0 && y == -1 && last,
        };
        if !ok {
            return bad(format!("path {i}: step {s:?} not allowed at ({x},{y})"));
        }
        let (dx, dy) = s.delta();
        x += dx;
        y += dy;
    }
    if (x, y) != kind.end(j) {
        return bad(format!("path {i} ends at ({x},{y}) instead of {:?}", kind.end(j)));
    }
    Ok(())
}

/// A family of nonintersecting paths of order `n`, one per source in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathFamily {
    order: usize,
    kind: PathKind,
    paths: Vec<LatticePath>,
}

impl PathFamily {
    /// Validates the step rules and vertex disjointness; paths are stored by
    /// increasing source index.
    pub fn new(order: usize, kind: PathKind, mut paths: Vec<LatticePath>) -> Result<Self> {
        paths.sort_by_key(|p| p.i);
        let lowest = if kind == PathKind::Classical { 2 } else { 1 };
        let mut seen = HashSet::new();
        for (k, p) in paths.iter().enumerate() {
            if p.i < lowest || p.i > order {
                return Err(Error::Domain(format!("source {} outside {lowest}..{order}", p.i)));
            }
            if k > 0 && paths[k - 1].i == p.i {
                return Err(Error::Domain(format!("source {} used twice", p.i)));
            }
            check_steps(kind, order, p.i, p.i, &p.steps)?;
            for v in p.vertices(kind) {
                if !seen.insert(v) {
                    return Err(Error::Domain(format!("paths meet at {v:?}")));
                }
            }
        }
        Ok(PathFamily { order, kind, paths })
    }

    /// A single extended path whose sink may differ from its source.
    pub(crate) fn single_unchecked(order: usize, path: LatticePath) -> Self {
        PathFamily { order, kind: PathKind::Extended, paths: vec![path] }
    }

    pub fn empty(order: usize, kind: PathKind) -> Self {
        PathFamily { order, kind, paths: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn sources(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.i).collect()
    }

    /// Monomial weight with up-steps expanded (`U` weighs 1).
    pub fn monomial(&self) -> Result<Monomial> {
        if self.kind != PathKind::Extended {
            return Err(Error::Domain("weights are defined for extended families".into()));
        }
        let n = self.order;
        let mut m = Monomial::var_pow(n, Var::V, binom2(n + 1));
        for p in &self.paths {
            let (mut x, mut y) = self.kind.start(p.i);
            for &s in &p.steps {
                let left = x < 0;
                let (dx, dy) = s.delta();
                x += dx;
                y += dy;
                let k = (x + y + 2) as usize;
                match s {
                    Step::R if left => {
                        bump(&mut m, Var::X(k), 1);
                        bump(&mut m, Var::V, -1);
                    }
                    Step::R => {
                        bump(&mut m, Var::U, 1);
                        bump(&mut m, Var::X((y + 2) as usize), 1);
                    }
                    Step::Uw => {
                        bump(&mut m, Var::X(k), 1);
                        bump(&mut m, Var::V, -1);
                        bump(&mut m, Var::W, 1);
                    }
                    Step::G => bump(&mut m, Var::W, 1),
                    Step::U | Step::D => {}
                }
            }
        }
        Ok(m)
    }

    pub fn weight<C: Coeff>(&self) -> Result<LaurentPoly<C>> {
        Ok(LaurentPoly::monomial(self.monomial()?))
    }

    /// Weight with every up-step left of the axis carrying `X_m v^{-1} w + 1`,
    /// whichever copy is recorded.
    pub fn collapsed_weight<C: Coeff>(&self) -> Result<LaurentPoly<C>> {
        let n = self.order;
        let plain = self.collapse();
        let mut out = plain.weight::<C>()?;
        for p in &plain.paths {
            let (mut x, mut y) = self.kind.start(p.i);
            for &s in &p.steps {
                let (dx, dy) = s.delta();
                x += dx;
                y += dy;
                if s.is_up() {
                    let mut m = Monomial::var(n, Var::X((x + y + 2) as usize));
                    m.set_exp(Var::V, -1);
                    m.set_exp(Var::W, 1);
                    out = &out * &(LaurentPoly::monomial(m) + LaurentPoly::one(n));
                }
            }
        }
        Ok(out)
    }

    /// Replaces every `Uw` by `U`.
    pub fn collapse(&self) -> PathFamily {
        let paths = self
            .paths
            .iter()
            .map(|p| LatticePath {
                i: p.i,
                steps: p.steps.iter().map(|&s| if s == Step::Uw { Step::U } else { s }).collect(),
            })
            .collect();
        PathFamily { order: self.order, kind: self.kind, paths }
    }

    /// All `2^{#up-steps}` choices of copies for the up-steps.
    pub fn expand(&self) -> Vec<PathFamily> {
        let base = self.collapse();
        let slots: Vec<(usize, usize)> = base
            .paths
            .iter()
            .enumerate()
            .flat_map(|(a, p)| p.steps.iter().enumerate().filter(|(_, s)| s.is_up()).map(move |(b, _)| (a, b)))
            .collect();
        (0u64..(1u64 << slots.len()))
            .map(|choice| {
                let mut f = base.clone();
                for (k, &(a, b)) in slots.iter().enumerate() {
                    if choice >> k & 1 == 1 {
                        f.paths[a].steps[b] = Step::Uw;
                    }
                }
                f
            })
            .collect()
    }

    /// Lattice points row by row from the top; each visited point shows the
    /// last digit of its path's source index.
    pub fn render(&self) -> String {
        let pts: Vec<((i32, i32), usize)> =
            self.paths.iter().flat_map(|p| p.vertices(self.kind).into_iter().map(move |v| (v, p.i))).collect();
        let n = self.order as i32;
        let (x0, x1, y0, y1) = match self.kind {
            PathKind::Classical => (0, n, -1, (n - 2).max(0)),
            PathKind::Extended => (-n, n, -2, (n - 2).max(0)),
        };
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            for x in x0..=x1 {
                let c = match pts.iter().find(|(v, _)| *v == (x, y)) {
                    Some((_, i)) => char::from_digit((*i % 10) as u32, 10).unwrap(),
                    None if x == 0 => '|',
                    None if y == 0 => '-',
                    None => '.',
                };
                out.push(c);
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.paths.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self
            .paths
            .iter()
            .map(|p| {
                let s: String = p
                    .steps
                    .iter()
                    .map(|s| match s {
                        Step::R => "R",
                        Step::U => "U",
                        Step::Uw => "W",
                        Step::D => "D",
                        Step::G => "G",
                    })
                    .collect();
                format!("{}:{s}", p.i)
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn bump(m: &mut Monomial, var: Var, by: i32) {
    let e = m.exp(var);
    m.set_exp(var, e + by);
}

fn binom2(n: usize) -> i32 {
    (n * n.saturating_sub(1) / 2) as i32
}

/// Every collapsed path (no `Uw`) from the source of `i` to the sink of `j`.
pub fn single_paths(kind: PathKind, n: usize, i: usize, j: usize) -> Vec<LatticePath> {
    fn go(kind: PathKind, top: i32, j: i32, pos: (i32, i32), steps: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        let (x, y) = pos;
        let mut next = Vec::new();
        match kind {
            PathKind::Classical => {
                if (x, y) == (j, 0) {
                    out.push(steps.clone());
                    return;
                }
                if x < j {
                    next.push(Step::R);
                }
                if y > 0 {
                    next.push(Step::D);
                }
            }
            PathKind::Extended => {
                if (x, y) == (j, -2) {
                    out.push(steps.clone());
                    return;
                }
                if x < 0 {
                    if y < top {
                        next.push(Step::U);
                    }
                    next.push(Step::R);
                } else {
                    if x < j && y >= -1 {
                        next.push(Step::R);
                    }
                    if y >= 0 || (y == -1 && x == j) {
                        next.push(Step::D);
                    }
                    if y == -1 && x + 1 == j {
                        next.push(Step::G);
                    }
                }
            }
        }
        for s in next {
            let (dx, dy) = s.delta();
            steps.push(s);
            go(kind, top, j, (x + dx, y + dy), steps, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    let top = n as i32 - 2;
    if kind == PathKind::Extended && i as i32 - 2 > top {
        return Vec::new();
    }
    go(kind, top, j as i32, kind.start(i), &mut Vec::new(), &mut out);
    out.into_iter().map(|steps| LatticePath { i, steps }).collect()
}

/// A path together with its vertex list.
type Candidate = (LatticePath, Vec<(i32, i32)>);

/// Calls `visit` on every collapsed nonintersecting family whose source set
/// is the bitmask `subset` (bit `i - 1` for source `i`).
pub fn for_each_family_with_sources(
    kind: PathKind,
    n: usize,
    subset: u32,
    visit: &mut dyn FnMut(&PathFamily),
) {
    let sources: Vec<usize> = (1..=n).filter(|i| subset >> (i - 1) & 1 == 1).collect();
    let candidates: Vec<Vec<Candidate>> = sources
        .iter()
        .map(|&i| {
            single_paths(kind, n, i, i)
                .into_iter()
                .map(|p| {
                    let v = p.vertices(kind);
                    (p, v)
                })
                .collect()
        })
        .collect();
    fn go(
        order: usize,
        kind: PathKind,
        candidates: &[Vec<Candidate>],
        used: &mut HashSet<(i32, i32)>,
        chosen: &mut Vec<LatticePath>,
        visit: &mut dyn FnMut(&PathFamily),
    ) {
        let k = chosen.len();
        if k == candidates.len() {
            visit(&PathFamily { order, kind, paths: chosen.clone() });
            return;
        }
        for (p, verts) in &candidates[k] {
            if verts.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(verts.iter().copied());
            chosen.push(p.clone());
            go(order, kind, candidates, used, chosen, visit);
            chosen.pop();
            for v in verts {
                used.remove(v);
            }
        }
    }
    go(n, kind, &candidates, &mut HashSet::new(), &mut Vec::new(), visit);
}

/// Collapsed families over every source set, ordered by source bitmask.
pub fn enumerate_collapsed_families(kind: PathKind, n: usize) -> Vec<PathFamily> {
    let lowest = if kind == PathKind::Classical { 1 } else { 0 };
    let mut out = Vec::new();
    for subset in 0u32..(1u32 << n) {
        if subset & lowest != 0 {
            continue;
        }
        for_each_family_with_sources(kind, n, subset, &mut |f| out.push(f.clone()));
    }
    out
}

/// Extended families of order `n` with up-steps expanded, so that every
/// family carries a monomial weight.
pub fn for_each_extended_family(n: usize, mut visit: impl FnMut(&PathFamily)) {
    for subset in 0u32..(1u32 << n) {
        for_each_family_with_sources(PathKind::Extended, n, subset, &mut |f| {
            for e in f.expand() {
                visit(&e);
            }
        });
    }
}

pub fn enumerate_extended_families(n: usize) -> Vec<PathFamily> {
    let mut out = Vec::new();
    for_each_extended_family(n, |f| out.push(f.clone()));
    out
}

pub fn family_weight<C: Coeff>(f: &PathFamily) -> Result<LaurentPoly<C>> {
    f.weight()
}

/// Sum of the expanded family weights.
pub fn gf_paths_enum<C: Coeff>(n: usize) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(n);
    for_each_extended_family(n, |f| out.add_term(f.monomial().expect("extended"), C::one()));
    out
}

/// Sum of the expanded family weights over families with source bitmask `subset`.
pub fn gf_paths_with_sources<C: Coeff>(n: usize, subset: u32) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(n);
    for_each_family_with_sources(PathKind::Extended, n, subset, &mut |f| {
        out.add_assign_ref(&f.collapsed_weight().expect("extended"));
    });
    out
}

/// Classical family of a DPP: path `i` carries the row of the class 2 CSSPP
/// whose first part is `i + 1`; an entry `e` is a down-step at `x = e - 1`,
/// the first part being the appended step below the sink.
pub fn dpp_to_paths(d: &Dpp, n: usize) -> Result<PathFamily> {
    let c = dpp_to_class2(d);
    let mut paths = Vec::new();
    for row in c.rows() {
        let i = row[0] as usize - 1;
        let mut steps = Vec::new();
        let mut x = 0u32;
        for &e in row[1..].iter().rev() {
            while x + 1 < e {
                steps.push(Step::R);
                x += 1;
            }
            steps.push(Step::D);
        }
        while (x as usize) < i {
            steps.push(Step::R);
            x += 1;
        }
        paths.push(LatticePath { i, steps });
    }
    PathFamily::new(n, PathKind::Classical, paths)
}

pub fn paths_to_dpp(f: &PathFamily) -> Result<Dpp> {
    if f.kind != PathKind::Classical {
        return Err(Error::Domain("expected a classical family".into()));
    }
    let rows = f
        .paths
        .iter()
        .rev()
        .map(|p| {
            let mut x = 0u32;
            let mut row = vec![p.i as u32 + 1];
            let mut downs = Vec::new();
            for s in &p.steps {
                match s {
                    Step::R => x += 1,
                    _ => downs.push(x + 1),
                }
            }
            row.extend(downs.into_iter().rev());
            row
        })
        .collect();
    class2_to_dpp(&ShiftedCsspp::new(rows)?)
}

/// Reads `L` off the steps left of the axis and `R` off the steps right of it.
pub fn family_to_dpp_pair(f: &PathFamily) -> Result<DppPair> {
    if f.kind != PathKind::Extended {
        return Err(Error::Domain("expected an extended family".into()));
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for p in f.paths.iter().rev() {
        let (mut x, mut y) = f.kind.start(p.i);
        let (mut cells, mut r, mut pending) = (Vec::new(), Vec::new(), 0u32);
        for &s in &p.steps {
            let was_left = x < 0;
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            let k = (x + y + 2) as u32;
            match s {
                Step::Uw => pending |= 1 << (k - 1),
                Step::R if was_left => {
                    cells.push(pending | 1 << (k - 1));
                    pending = 0;
                }
                Step::R => r.push((y + 2) as u32),
                _ => {}
            }
        }
        cells.reverse();
        left.push(cells);
        right.push(r);
    }
    DppPair::new(f.order, left, right)
}

pub fn dpp_pair_to_family(p: &DppPair) -> Result<PathFamily> {
    let mut paths = Vec::new();
    for (cells, r) in p.left().iter().zip(p.right()) {
        let i = cells.len();
        let mut steps = Vec::new();
        let mut k = 0u32;
        for &cell in cells.iter().rev() {
            let top = 32 - cell.leading_zeros();
            for e in k + 1..top {
                steps.push(if cell >> (e - 1) & 1 == 1 { Step::Uw } else { Step::U });
            }
            steps.push(Step::R);
            k = top;
        }
        let mut y = k as i32 - 2;
        for &e in r {
            while y > e as i32 - 2 {
                steps.push(Step::D);
                y -= 1;
            }
            steps.push(Step::R);
        }
        while y > -1 {
            steps.push(Step::D);
            y -= 1;
        }
        steps.push(if r.len() == i { Step::D } else { Step::G });
        paths.push(LatticePath { i, steps });
    }
    PathFamily::new(p.order(), PathKind::Extended, paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn no_classical_path_from_the_first_source() {
        assert!(single_paths(PathKind::Classical, 3, 1, 1).is_empty());
        assert_eq!(single_paths(PathKind::Classical, 3, 2, 2).len(), 1);
    }

    #[test]
    fn order_one_paths() {
        let ps = single_paths(PathKind::Extended, 1, 1, 1);
        assert_eq!(ps.len(), 2);
        let total: P = ps
            .iter()
            .map(|p| PathFamily::new(1, PathKind::Extended, vec![p.clone()]).unwrap().weight::<BigInt>().unwrap())
            .fold(P::zero(1), |a, b| a + b);
        let x = P::x(1, 1);
        assert_eq!(total, &(&P::u(1) * &x) * &x + &P::w(1) * &x);
    }

    #[test]
    fn rejects_touching_paths() {
        let b = LatticePath { i: 1, steps: vec![Step::R, Step::R, Step::D] };
        let far = LatticePath { i: 2, steps: vec![Step::R, Step::R, Step::R, Step::R, Step::D, Step::D] };
        assert!(PathFamily::new(2, PathKind::Extended, vec![far, b.clone()]).is_ok());
        let near = LatticePath { i: 2, steps: vec![Step::R, Step::R, Step::D, Step::R, Step::R, Step::D] };
        assert!(PathFamily::new(2, PathKind::Extended, vec![near.clone()]).is_ok());
        assert!(PathFamily::new(2, PathKind::Extended, vec![near, b]).is_err());
    }
}
