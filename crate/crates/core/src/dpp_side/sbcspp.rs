use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::{enumerate_near_balanced, NearBalancedShape};
use super::shifted::{class2_to_dpp, dpp_to_class2, Dpp, ShiftedCsspp};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

pub(crate) fn set_max(mask: u32) -> u32 {
    32 - mask.leading_zeros()
}

pub(crate) fn set_min(mask: u32) -> u32 {
    mask.trailing_zeros() + 1
}

pub(crate) fn bit(e: u32) -> u32 {
    1 << (e - 1)
}

pub(crate) fn set_elements(mask: u32) -> Vec<u32> {
    (1..=32).rev().filter(|&e| mask >> (e - 1) & 1 == 1).collect()
}

pub(crate) fn binom2(n: usize) -> i32 {
    (n * (n + 1) / 2) as i32
}

/// Set-valued near-balanced column strict plane partition of order `n`.
/// Each cell holds a nonempty subset of `{1..n}` stored as a bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SbcsppRepr", into = "SbcsppRepr")]
pub struct Sbcspp {
    order: usize,
    shape: NearBalancedShape,
    cells: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct SbcsppRepr {
    order: usize,
    shape: NearBalancedShape,
    cells: Vec<Vec<Vec<u32>>>,
}

impl From<Sbcspp> for SbcsppRepr {
    fn from(d: Sbcspp) -> Self {
        SbcsppRepr { order: d.order, cells: d.cell_sets(), shape: d.shape }
    }
}

impl TryFrom<SbcsppRepr> for Sbcspp {
    type Error = Error;

    fn try_from(r: SbcsppRepr) -> Result<Self> {
        let d = Sbcspp::from_sets(r.order, &r.cells)?;
        if d.shape != r.shape {
            return Err(Error::Domain("shape does not match the filling".into()));
        }
        Ok(d)
    }
}

impl Sbcspp {
    pub fn new(order: usize, cells: Vec<Vec<u32>>) -> Result<Self> {
        if order > 31 {
            return Err(Error::Domain(format!("order {order} exceeds 31")));
        }
        let lambda: Vec<usize> = cells.iter().map(Vec::len).collect();
        let shape = NearBalancedShape::from_partition(&lambda)?;
        let limit = if order == 0 { 0 } else { u32::MAX >> (32 - order) };
        for (i, row) in cells.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m == 0 || m & !limit != 0 {
                    return Err(Error::Domain(format!("cell ({},{}) is not a nonempty subset of 1..{order}", i + 1, j + 1)));
                }
                if j > i && m.count_ones() != 1 {
                    return Err(Error::Domain(format!("cell ({},{}) above the diagonal is not a singleton", i + 1, j + 1)));
                }
                if j > 0 && set_max(row[j - 1]) < set_max(m) {
                    return Err(Error::Domain(format!("row {} maxima increase", i + 1)));
                }
                if i > 0 && set_min(cells[i - 1][j]) <= set_max(m) {
                    return Err(Error::Domain(format!("column {} is not strictly decreasing", j + 1)));
                }
            }
        }
        Ok(Sbcspp { order, shape, cells })
    }

    /// Builds from explicit sets, e.g. `[[[2,1],[1]]]`.
    pub fn from_sets(order: usize, rows: &[Vec<Vec<u32>>]) -> Result<Self> {
        let mut cells = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for set in row {
                let mut m = 0u32;
                for &e in set {
                    if e == 0 || e as usize > order {
                        return Err(Error::Domain(format!("entry {e} outside 1..{order}")));
                    }
                    m |= bit(e);
                }
                r.push(m);
            }
            cells.push(r);
        }
        Self::new(order, cells)
    }

    pub fn empty(order: usize) -> Self {
        Sbcspp { order, shape: NearBalancedShape::empty(), cells: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn shape(&self) -> &NearBalancedShape {
        &self.shape
    }

    /// Raw bitmasks, row-major; bit `e - 1` marks element `e`.
    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    /// Row-major cells as descending element lists.
    pub fn cell_sets(&self) -> Vec<Vec<Vec<u32>>> {
        self.cells.iter().map(|r| r.iter().map(|&m| set_elements(m)).collect()).collect()
    }

    pub fn is_principal(&self) -> bool {
        self.cells.iter().flatten().all(|m| m.count_ones() == 1)
    }

    pub fn weight<C: Coeff>(&self) -> LaurentPoly<C> {
        LaurentPoly::monomial(self.monomial())
    }

    pub fn monomial(&self) -> Monomial {
        let n = self.order;
        let mut x = vec![0i32; n];
        let (mut above, mut below_entries, mut entries, mut cells) = (0i32, 0i32, 0i32, 0i32);
        for (i, row) in self.cells.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                let k = m.count_ones() as i32;
                cells += 1;
                entries += k;
                if j > i {
                    above += 1;
                } else {
                    below_entries += k;
                }
                for e in set_elements(m) {
                    x[e as usize - 1] += 1;
                }
            }
        }
        let w = self.shape.balanced_hooks() as i32 + entries - cells;
        Monomial::new(above, binom2(n) - below_entries, w, &x)
    }

    pub fn render(&self) -> String {
        let sets = self.cell_sets();
        let text: Vec<Vec<String>> = sets
            .iter()
            .map(|r| r.iter().map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect())
            .collect();
        let width = text.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in &text {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&cells.join(" | "));
            out.push('\n');
        }
        if out.is_empty() {
            out.push_str("(empty)\n");
        }
        out
    }
}

impl fmt::Display for Sbcspp {
    /// Rows separated by `/`, cells by spaces, set elements by commas.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "()");
        }
        let rows: Vec<String> = self
            .cell_sets()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Calls `visit` on every filling of `shape`. Cells are filled column by
/// column, top to bottom. With `sets == false` every cell is a singleton.
pub(crate) fn for_each_filling(n: usize, shape: &NearBalancedShape, sets: bool, visit: &mut dyn FnMut(&[Vec<u32>])) {
    let rows = shape.row_lengths();
    let cols = shape.column_lengths();
    let order: Vec<(usize, usize)> = (0..cols.len()).flat_map(|j| (0..cols[j]).map(move |i| (i, j))).collect();
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&r| vec![0; r]).collect();

    fn go(
        k: usize,
        n: u32,
        sets: bool,
        order: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if k == order.len() {
            visit(grid);
            return;
        }
        let (i, j) = order[k];
        let mut hi = n;
        if i > 0 {
            hi = hi.min(set_min(grid[i - 1][j]) - 1);
        }
        if j > 0 {
            hi = hi.min(set_max(grid[i][j - 1]));
        }
        // Cells left in this column each need a distinct smaller value.
        let below_in_col = order[k + 1..].iter().take_while(|&&(_, c)| c == j).count() as u32;
        for m in (below_in_col + 1..=hi).rev() {
            let extra_bits = if sets && i >= j { m - 1 } else { 0 };
            for extra in 0u32..(1u32 << extra_bits) {
                grid[i][j] = bit(m) | extra;
                go(k + 1, n, sets, order, grid, visit);
            }
        }
        grid[i][j] = 0;
    }
    go(0, n as u32, sets, &order, &mut grid, visit);
}

/// Calls `visit` on every SBCSPP of order `n`.
pub fn for_each_sbcspp(n: usize, mut visit: impl FnMut(&Sbcspp)) {
    for shape in enumerate_near_balanced(n) {
        for_each_filling(n, &shape, true, &mut |grid| {
            visit(&Sbcspp { order: n, shape: shape.clone(), cells: grid.to_vec() });
        });
    }
}

pub fn enumerate_sbcspp(n: usize) -> Vec<Sbcspp> {
    let mut out = Vec::new();
    for_each_sbcspp(n, |d| out.push(d.clone()));
    out
}

pub fn sbcspp_weight<C: Coeff>(d: &Sbcspp) -> LaurentPoly<C> {
    d.weight()
}

pub fn gf_sbcspp<C: Coeff>(n: usize) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(n);
    for_each_sbcspp(n, |d| out.add_term(d.monomial(), C::one()));
    out
}

/// Keeps only the maximum of each cell.
pub fn principal(d: &Sbcspp) -> Sbcspp {
    let cells = d.cells.iter().map(|r| r.iter().map(|&m| bit(set_max(m))).collect()).collect();
    Sbcspp { order: d.order, shape: d.shape.clone(), cells }
}

/// The cell of the first sign-reversing involution together with the
/// integer it toggles: leftmost column, then bottommost cell on or below the
/// diagonal whose maximum leaves room above the maximum of the cell below.
fn toggle_site(d: &Sbcspp) -> Option<(usize, usize, u32)> {
    let cols = d.shape.column_lengths();
    for (j, &len) in cols.iter().enumerate() {
        for i in (j..len).rev() {
            let m = set_max(d.cells[i][j]);
            let below = if i + 1 < len { set_max(d.cells[i + 1][j]) } else { 0 };
            if m >= below + 2 {
                return Some((i, j, below + 1));
            }
        }
    }
    None
}

/// Toggles the least admissible integer of the first eligible cell. Defined
/// when the principal part has more than one SBCSPP attached.
pub fn involution_a(d: &Sbcspp) -> Result<Sbcspp> {
    let (i, j, e) =
        toggle_site(d).ok_or_else(|| Error::Domain(format!("{d} is the only SBCSPP with its principal part")))?;
    let mut cells = d.cells.clone();
    cells[i][j] ^= bit(e);
    Ok(Sbcspp { order: d.order, shape: d.shape.clone(), cells })
}

/// Principal, and each Durfee column reads `d, d-1, ..., 1` from the diagonal
/// down.
fn has_unique_preimage(d: &Sbcspp) -> bool {
    d.is_principal() && toggle_site(d).is_none()
}

fn ones_above_diagonal(d: &Sbcspp) -> impl Iterator<Item = usize> + '_ {
    d.cells
        .iter()
        .enumerate()
        .filter(move |(i, r)| r.iter().skip(i + 1).any(|&m| m == 1))
        .map(|(i, _)| i)
}

fn in_domain_b(d: &Sbcspp) -> bool {
    has_unique_preimage(d)
        && (ones_above_diagonal(d).next().is_some()
            || d.shape.arms().iter().zip(d.shape.legs()).any(|(&a, &b)| a != b + 1))
}

/// The second sign-reversing involution: removes the trailing 1 of the
/// topmost row containing a 1, or appends a 1 to the first row whose hook is
/// balanced.
pub fn involution_b(d: &Sbcspp) -> Result<Sbcspp> {
    if !in_domain_b(d) {
        return Err(Error::Domain(format!("{d} is outside the domain of the second involution")));
    }
    let remove_top = |d: &Sbcspp| -> Result<Sbcspp> {
        let i = d
            .cells
            .iter()
            .position(|r| r.contains(&1))
            .ok_or_else(|| Error::Domain("no row contains a 1".into()))?;
        let mut cells = d.cells.clone();
        let last = cells[i].len() - 1;
        if cells[i][last] != 1 || last <= i {
            return Err(Error::Domain(format!("row {} does not end in a 1 above the diagonal", i + 1)));
        }
        cells[i].pop();
        Sbcspp::new(d.order, cells)
    };
    let arms = d.shape.arms();
    let legs = d.shape.legs();
    match (0..arms.len()).find(|&i| arms[i] != legs[i] + 1) {
        None => remove_top(d),
        Some(i) => {
            if d.cells[..i].iter().flatten().any(|&m| m == 1) {
                remove_top(d)
            } else {
                let mut cells = d.cells.clone();
                cells[i].push(1);
                Sbcspp::new(d.order, cells)
            }
        }
    }
}

/// Survivors of both involutions: principal, every hook `a_i = b_i + 1`,
/// Durfee columns end in `..., 2, 1`, and no 1 strictly above the diagonal.
pub fn is_dpp_sbcspp(d: &Sbcspp) -> bool {
    has_unique_preimage(d)
        && ones_above_diagonal(d).next().is_none()
        && d.shape.arms().iter().zip(d.shape.legs()).all(|(&a, &b)| a == b + 1)
}

fn conjugate_row(row: &[u32]) -> Vec<u32> {
    let first = row.first().copied().unwrap_or(0);
    (1..=first).map(|k| row.iter().filter(|&&e| e >= k).count() as u32).collect()
}

/// Drops the cells below the diagonal, subtracts 1, conjugates every row and
/// reads the resulting class-2 CSSPP as a DPP.
pub fn dpp_sbcspp_to_dpp(d: &Sbcspp) -> Result<Dpp> {
    if !is_dpp_sbcspp(d) {
        return Err(Error::Domain(format!("{d} is not a DPP-SBCSPP")));
    }
    let shifted: Vec<Vec<u32>> =
        d.cells.iter().enumerate().take(d.shape.durfee()).map(|(i, r)| r[i..].iter().map(|&m| set_max(m) - 1).collect()).collect();
    let conj: Vec<Vec<u32>> = shifted.iter().map(|r| conjugate_row(r)).collect();
    let class2 = ShiftedCsspp::new(conj)?;
    class2_to_dpp(&class2)
}

/// Inverse of [`dpp_sbcspp_to_dpp`].
pub fn dpp_to_dpp_sbcspp(p: &Dpp, n: usize) -> Result<Sbcspp> {
    if p.as_csspp().max_part() as usize > n {
        return Err(Error::Domain(format!("{p} has parts above {n}")));
    }
    let class2 = dpp_to_class2(p);
    let tops: Vec<Vec<u32>> = class2.rows().iter().map(|r| conjugate_row(r).iter().map(|e| e + 1).collect()).collect();
    let depth = tops.iter().enumerate().map(|(j, r)| j + r[0] as usize).max().unwrap_or(0);
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); depth];
    for (j, top) in tops.iter().enumerate() {
        for k in 1..top[0] as usize {
            cells[j + k].push(bit(top[0] - k as u32));
        }
    }
    for (i, top) in tops.iter().enumerate() {
        cells[i].extend(top.iter().map(|&e| bit(e)));
    }
    let d = Sbcspp::new(n, cells)?;
    debug_assert!(is_dpp_sbcspp(&d));
    Ok(d)
}
