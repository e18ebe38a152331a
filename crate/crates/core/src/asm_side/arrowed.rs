use std::fmt;

use serde::{Deserialize, Serialize};

use super::triangle::{enumerate_mt, mt_statistics, render_centered, MonotoneTriangle};
use crate::coeff::Coeff;
use crate::laurent::{LaurentPoly, Monomial, Var};

/// Decoration of an entry: `↗`, `↖`, `↖↗`, or none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoration {
    Ne,
    Nw,
    Both,
    Empty,
}

impl Decoration {
    pub const ARROWS: [Decoration; 3] = [Decoration::Ne, Decoration::Nw, Decoration::Both];

    pub fn name(self) -> &'static str {
        match self {
            Decoration::Ne => "ne",
            Decoration::Nw => "nw",
            Decoration::Both => "both",
            Decoration::Empty => "empty",
        }
    }

    /// Exponent contribution to the row variable.
    fn tilt(self) -> i32 {
        match self {
            Decoration::Ne => 1,
            Decoration::Nw => -1,
            _ => 0,
        }
    }
}

/// Monotone triangle with a decoration on every entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArrowedMt {
    pub triangle: MonotoneTriangle,
    pub decorations: Vec<Vec<Decoration>>,
}

impl ArrowedMt {
    /// Checks the forcing rules: an entry equal to its northwest neighbour
    /// carries `↗`, one equal to its northeast neighbour carries `↖`.
    pub fn is_valid(&self) -> bool {
        let m = &self.triangle;
        if self.decorations.len() != m.order() {
            return false;
        }
        for i in 1..=m.order() {
            if self.decorations[i - 1].len() != i {
                return false;
            }
            for j in 1..=i {
                let d = self.decorations[i - 1][j - 1];
                if d == Decoration::Empty {
                    return false;
                }
                if let Some(forced) = forced(m, i, j) {
                    if d != forced {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for ArrowedMt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .triangle
            .rows()
            .iter()
            .zip(&self.decorations)
            .map(|(r, ds)| {
                r.iter()
                    .zip(ds)
                    .map(|(x, d)| match d {
                        Decoration::Ne => format!(" {x}^"),
                        Decoration::Nw => format!("^{x} "),
                        Decoration::Both => format!("^{x}^"),
                        Decoration::Empty => format!(" {x} "),
                    })
                    .collect()
            })
            .collect();
        render_centered(f, &cells)
    }
}

/// Forced decoration of entry `(i, j)`, or `None` if the entry is free.
fn forced(m: &MonotoneTriangle, i: usize, j: usize) -> Option<Decoration> {
    if i == 1 {
        return None;
    }
    let e = m.get(i, j);
    if j >= 2 && m.get(i - 1, j - 1) == e {
        return Some(Decoration::Ne);
    }
    if j < i && m.get(i - 1, j) == e {
        return Some(Decoration::Nw);
    }
    None
}

/// All arrowed monotone triangles with underlying triangle `m`.
pub fn arrowings(m: &MonotoneTriangle) -> Vec<ArrowedMt> {
    let n = m.order();
    let slots: Vec<Vec<Decoration>> = (1..=n)
        .flat_map(|i| (1..=i).map(move |j| (i, j)))
        .map(|(i, j)| match forced(m, i, j) {
            Some(d) => vec![d],
            None => Decoration::ARROWS.to_vec(),
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    loop {
        let flat: Vec<Decoration> = choice.iter().zip(&slots).map(|(&c, s)| s[c]).collect();
        let mut decorations = Vec::with_capacity(n);
        let mut it = flat.into_iter();
        for i in 1..=n {
            decorations.push(it.by_ref().take(i).collect());
        }
        out.push(ArrowedMt { triangle: m.clone(), decorations });
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == slots.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < slots[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

pub fn enumerate_amt(bottom: &[i64]) -> Vec<ArrowedMt> {
    enumerate_mt(bottom).iter().flat_map(arrowings).collect()
}

/// `u^{#↗} v^{#↖} w^{#↖↗} ∏ X_i^{rowsum_i - rowsum_{i-1} + #↗_i - #↖_i}`.
pub fn amt_weight<C: Coeff>(a: &ArrowedMt) -> LaurentPoly<C> {
    LaurentPoly::monomial(amt_monomial(a))
}

fn amt_monomial(a: &ArrowedMt) -> Monomial {
    let m = &a.triangle;
    let n = m.order();
    let mut mono = Monomial::one(n);
    let mut count = [0i32; 3];
    for i in 1..=n {
        let mut e = (m.row_sum(i) - m.row_sum(i - 1)) as i32;
        for d in &a.decorations[i - 1] {
            e += d.tilt();
            match d {
                Decoration::Ne => count[0] += 1,
                Decoration::Nw => count[1] += 1,
                Decoration::Both => count[2] += 1,
                Decoration::Empty => {}
            }
        }
        mono.set_exp(Var::X(i), e);
    }
    mono.set_exp(Var::U, count[0]);
    mono.set_exp(Var::V, count[1]);
    mono.set_exp(Var::W, count[2]);
    mono
}

/// Generating function of arrowed monotone triangles with the given bottom
/// row. Decorations are chosen independently per entry, so each underlying
/// triangle contributes a product of per-entry sums.
pub fn gf_amt_enum<C: Coeff>(bottom: &[i64]) -> LaurentPoly<C> {
    let n = bottom.len();
    let x = |i: usize, e: i32| LaurentPoly::<C>::monomial(Monomial::var_pow(n, Var::X(i), e));
    let ne: Vec<LaurentPoly<C>> = (1..=n).map(|i| LaurentPoly::u(n) * x(i, 1)).collect();
    let nw: Vec<LaurentPoly<C>> = (1..=n).map(|i| LaurentPoly::v(n) * x(i, -1)).collect();
    let free: Vec<LaurentPoly<C>> = (0..n).map(|i| &(&ne[i] + &nw[i]) + &LaurentPoly::w(n)).collect();
    let mut out = LaurentPoly::zero(n);
    for m in enumerate_mt(bottom) {
        let mut mono = Monomial::one(n);
        for i in 1..=n {
            mono.set_exp(Var::X(i), (m.row_sum(i) - m.row_sum(i - 1)) as i32);
        }
        let (mut forced_ne, mut forced_nw) = (0i32, 0i32);
        let mut term = LaurentPoly::<C>::one(n);
        for i in 1..=n {
            for j in 1..=i {
                match forced(&m, i, j) {
                    Some(Decoration::Ne) => {
                        forced_ne += 1;
                        mono.set_exp(Var::X(i), mono.exp(Var::X(i)) + 1);
                    }
                    Some(_) => {
                        forced_nw += 1;
                        mono.set_exp(Var::X(i), mono.exp(Var::X(i)) - 1);
                    }
                    None => term = &term * &free[i - 1],
                }
            }
        }
        mono.set_exp(Var::U, forced_ne);
        mono.set_exp(Var::V, forced_nw);
        out.add_assign_ref(&term.mul_monomial(&mono));
    }
    out
}

/// Choice made by a special entry of a down-arrowed monotone triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DownArrow {
    /// `↙`: counted as left-leaning.
    Left,
    /// `↘`: counted as right-leaning.
    Right,
    /// `↓`: central.
    Down,
}

/// Monotone triangle whose special entries each carry a [`DownArrow`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DownArrowedMt {
    pub triangle: MonotoneTriangle,
    /// `(row, position, arrow)` for every special entry, row-major.
    pub arrows: Vec<(usize, usize, DownArrow)>,
}

impl DownArrowedMt {
    pub fn weight<C: Coeff>(&self) -> LaurentPoly<C> {
        let m = &self.triangle;
        let n = m.order();
        let st = mt_statistics(m);
        let mut mono = Monomial::one(n);
        let (mut r, mut l, mut c) = (st.right() as i32, st.left() as i32, 0);
        let mut d: Vec<i32> = st.d.iter().map(|&x| x as i32).collect();
        for &(i, _, arrow) in &self.arrows {
            match arrow {
                DownArrow::Left => {
                    l += 1;
                    d[i] -= 1;
                }
                DownArrow::Right => {
                    r += 1;
                    d[i] += 1;
                }
                DownArrow::Down => c += 1,
            }
        }
        mono.set_exp(Var::U, r);
        mono.set_exp(Var::V, l);
        mono.set_exp(Var::W, c);
        for (i, e) in d.into_iter().enumerate() {
            mono.set_exp(Var::X(i + 1), e);
        }
        LaurentPoly::monomial(mono)
    }
}

fn special_positions(m: &MonotoneTriangle) -> Vec<(usize, usize)> {
    let n = m.order();
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..=i {
            let e = m.get(i, j);
            if m.get(i + 1, j) < e && e < m.get(i + 1, j + 1) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn enumerate_damt(bottom: &[i64]) -> Vec<DownArrowedMt> {
    const ALL: [DownArrow; 3] = [DownArrow::Left, DownArrow::Right, DownArrow::Down];
    let mut out = Vec::new();
    for m in enumerate_mt(bottom) {
        let spots = special_positions(&m);
        let total = 3usize.pow(spots.len() as u32);
        for code in 0..total {
            let mut c = code;
            let arrows = spots
                .iter()
                .map(|&(i, j)| {
                    let a = ALL[c % 3];
                    c /= 3;
                    (i, j, a)
                })
                .collect();
            out.push(DownArrowedMt { triangle: m.clone(), arrows });
        }
    }
    out
}

pub fn gf_damt_enum<C: Coeff>(bottom: &[i64]) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(bottom.len());
    for d in enumerate_damt(bottom) {
        out.add_assign_ref(&d.weight());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm_side::triangle::mt_weight_w0;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn running_example() -> MonotoneTriangle {
        MonotoneTriangle::new(vec![
            vec![4],
            vec![2, 5],
            vec![2, 3, 5],
            vec![1, 3, 4, 6],
            vec![1, 2, 3, 5, 6],
            vec![1, 2, 3, 4, 5, 6],
        ])
        .unwrap()
    }

    #[test]
    fn decorated_example_weight() {
        use Decoration::*;
        let a = ArrowedMt {
            triangle: running_example(),
            decorations: vec![
                vec![Ne],
                vec![Both, Nw],
                vec![Nw, Ne, Ne],
                vec![Ne, Nw, Both, Ne],
                vec![Nw, Ne, Ne, Nw, Ne],
                vec![Nw, Nw, Nw, Both, Ne, Ne],
            ],
        };
        assert!(a.is_valid());
        let got: P = amt_weight(&a);
        assert_eq!(got, P::monomial(Monomial::new(10, 8, 3, &[5, 2, 4, 5, 4, 3])));
    }

    #[test]
    fn down_arrowed_example_weight() {
        let d = DownArrowedMt {
            triangle: running_example(),
            arrows: vec![
                (1, 1, DownArrow::Left),
                (3, 1, DownArrow::Down),
                (3, 3, DownArrow::Right),
                (4, 3, DownArrow::Left),
            ],
        };
        assert_eq!(special_positions(&d.triangle), vec![(1, 1), (3, 1), (3, 3), (4, 3)]);
        let got: P = d.weight();
        assert_eq!(got, P::monomial(Monomial::new(6, 8, 1, &[4, 2, 3, 4, 3, 3])));
    }

    #[test]
    fn single_entry() {
        let all = enumerate_amt(&[3]);
        assert_eq!(all.len(), 3);
        let got: P = gf_amt_enum(&[3]);
        let want = P::monomial(Monomial::new(1, 0, 0, &[4]))
            + P::monomial(Monomial::new(0, 1, 0, &[2]))
            + P::monomial(Monomial::new(0, 0, 1, &[3]));
        assert_eq!(got, want);
    }

    #[test]
    fn order_two_weights() {
        let all = enumerate_amt(&[1, 2]);
        assert_eq!(all.len(), 18);
        let sum = all.iter().fold(P::zero(2), |acc, a| acc + amt_weight(a));
        assert_eq!(sum, gf_amt_enum(&[1, 2]));
        assert_eq!(sum.coeff(&Monomial::new(1, 1, 1, &[2, 1])), BigInt::from(2));
        assert_eq!(sum.coeff(&Monomial::new(1, 1, 1, &[1, 2])), BigInt::from(2));
        assert!(all.iter().all(ArrowedMt::is_valid));
    }

    #[test]
    fn free_entries_and_downup() {
        for m in enumerate_mt(&[0, 1, 3]) {
            let free = (1..=3).flat_map(|i| (1..=i).map(move |j| (i, j))).filter(|&(i, j)| forced(&m, i, j).is_none());
            let arrowed = arrowings(&m);
            assert_eq!(arrowed.len(), 3usize.pow(free.count() as u32));
            let sum = arrowed.iter().fold(P::zero(3), |acc, a| acc + amt_weight(a));
            let mut want: P = mt_weight_w0(&m);
            for i in 1..=3 {
                want = want * crate::asm_side::triangle::special_factor(3, i);
            }
            assert_eq!(sum, want);
        }
    }

    #[test]
    fn staircase_arrowing_is_forced_above_bottom() {
        let rows: Vec<Vec<i64>> = (1..=3).map(|i| (1..=i).collect()).collect();
        let m = MonotoneTriangle::new(rows).unwrap();
        for i in 2..=3 {
            for j in 1..i {
                assert_eq!(forced(&m, i, j), Some(Decoration::Nw));
            }
            assert_eq!(forced(&m, i, i), None);
        }
    }

    #[test]
    fn damt_matches_w0_sum() {
        let bottom = [-1, 1, 4];
        let want = enumerate_mt(&bottom).iter().fold(P::zero(3), |acc, m| acc + mt_weight_w0(m));
        assert_eq!(gf_damt_enum::<BigInt>(&bottom), want);
        assert_eq!(gf_damt_enum::<BigInt>(&[1, 2]).sign_value().unwrap(), BigInt::from(2));
    }
}
