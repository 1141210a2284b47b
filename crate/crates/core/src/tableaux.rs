//! Semistandard tableaux with rows `alpha <= i` and columns `1..=k`, the box
//! monomials, and the Kirillov-Reshetikhin q-characters they sum to.
//!
//! A tableau is stored by its deviations `d = T_{alpha,beta} - alpha` from
//! the default filling. Column strictness is `d_{alpha} <= d_{alpha+1}` and
//! row weakness is `d_{beta} <= d_{beta+1}`, so each column, read upwards
//! from row `i`, is a partition, and column `beta` is contained in column
//! `beta + 1`. Rows far up are default and never stored.

use std::fmt;

use crate::cartan::{CartanDatum, Node};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, QCharacter};

/// The KR module `W^{(i)}_{k, a}` with `a = q^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KrDescriptor {
    pub node: Node,
    pub k: u32,
    pub base_shift: i64,
}

impl KrDescriptor {
    pub fn new(node: Node, k: u32) -> Self {
        KrDescriptor { node, k, base_shift: 0 }
    }

    pub fn with_shift(node: Node, k: u32, base_shift: i64) -> Self {
        KrDescriptor { node, k, base_shift }
    }

    /// `prod_{beta=1..k} Y_{i, c + 2(beta-1)}`.
    pub fn highest_monomial(&self) -> Monomial {
        Monomial::from_factors((0..self.k as i64).map(|b| (self.node, self.base_shift + 2 * b, 1)))
    }

    /// Spectral shift attached to cell `(alpha, beta)`.
    fn cell_shift(&self, alpha: Node, beta: i64) -> i64 {
        self.base_shift + self.node - 1 + 2 * (beta - alpha)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KrMode {
    /// The truncation to the window `[i-n, i+n]`.
    Window(i64),
    /// All tableaux of depth at most `D`, over the infinite line.
    Depth(i64),
}

/// `box(r)_{a q^s} = Y_{r-1, s+r}^{-1} Y_{r, s+r-1}`.
pub fn box_monomial(r: i64, s: i64) -> Monomial {
    Monomial::from_factors([(r - 1, s + r, -1), (r, s + r - 1, 1)])
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    desc: KrDescriptor,
    /// `columns[beta-1][r]` is the deviation at row `i - r`; trailing zeros trimmed.
    columns: Vec<Vec<i64>>,
    /// Rows `i-n..=i` only, entries in `[i-n, i+n+1]`.
    window: Option<i64>,
}

impl Tableau {
    /// The default filling `T_{alpha,beta} = alpha`.
    pub fn ground(desc: KrDescriptor) -> Self {
        Tableau { desc, columns: vec![Vec::new(); desc.k as usize], window: None }
    }

    /// Builds a tableau from deviation columns, checking semistandardness.
    pub fn from_deviations(desc: KrDescriptor, columns: Vec<Vec<i64>>, window: Option<i64>) -> Result<Self> {
        if columns.len() != desc.k as usize {
            return Err(Error::Parse(format!("expected {} columns, got {}", desc.k, columns.len())));
        }
        let mut columns = columns;
        for col in &mut columns {
            while col.last() == Some(&0) {
                col.pop();
            }
        }
        let t = Tableau { desc, columns, window };
        if !t.is_semistandard() {
            return Err(Error::Parse("deviations do not form a semistandard tableau".into()));
        }
        Ok(t)
    }

    fn is_semistandard(&self) -> bool {
        let dev = |b: usize, r: usize| self.columns[b].get(r).copied().unwrap_or(0);
        let rows = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        for b in 0..self.columns.len() {
            for r in 0..rows {
                if dev(b, r) < 0 || dev(b, r + 1) > dev(b, r) {
                    return false;
                }
                if b + 1 < self.columns.len() && dev(b, r) > dev(b + 1, r) {
                    return false;
                }
            }
        }
        if let Some(n) = self.window {
            let n = n as usize;
            return self.columns.iter().all(|c| c.len() <= n + 1 && c.iter().all(|&d| d <= n as i64 + 1));
        }
        true
    }

    pub fn descriptor(&self) -> KrDescriptor {
        self.desc
    }

    pub fn deviations(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// `T_{alpha, beta}`.
    pub fn entry(&self, alpha: Node, beta: u32) -> i64 {
        let r = (self.desc.node - alpha) as usize;
        alpha + self.columns[beta as usize - 1].get(r).copied().unwrap_or(0)
    }

    /// `sum over cells of (T_{alpha,beta} - alpha)`.
    pub fn depth(&self) -> i64 {
        self.columns.iter().flatten().sum()
    }

    /// `m_T`, the product of box monomials over all cells.
    ///
    /// Over the infinite line the default rows above the last deviation
    /// telescope: `prod_{alpha < alpha0} box(alpha)` at the cell shifts of
    /// column `beta` equals `Y_{alpha0-1, c+i-1+2beta-alpha0}`. In window
    /// mode the rows are finite and factors on nodes `i-n-1`, `i+n+1` are set to 1.
    pub fn monomial(&self) -> Monomial {
        let i = self.desc.node;
        let mut factors = Vec::new();
        for (b, col) in self.columns.iter().enumerate() {
            let beta = b as i64 + 1;
            let rows = match self.window {
                Some(n) => n + 1,
                None => col.len() as i64,
            };
            if self.window.is_none() {
                let alpha0 = i - rows + 1;
                factors.push((alpha0 - 1, self.desc.cell_shift(alpha0, beta) + alpha0, 1));
            }
            for r in 0..rows {
                let alpha = i - r;
                let t = alpha + col.get(r as usize).copied().unwrap_or(0);
                factors.extend(box_monomial(t, self.desc.cell_shift(alpha, beta)).factors().iter().copied());
            }
        }
        let m = Monomial::from_factors(factors);
        match self.window {
            Some(n) => m.restrict(i - n, i + n),
            None => m,
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = match self.window {
            Some(n) => n as usize + 1,
            None => self.columns.iter().map(Vec::len).max().unwrap_or(0).max(1),
        };
        for r in (0..rows).rev() {
            let alpha = self.desc.node - r as i64;
            let row: Vec<String> = (1..=self.desc.k).map(|b| self.entry(alpha, b).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// All partitions `lambda` contained in `outer` (part-wise, padded with
/// zeros to `rows`) with parts at most `max_part` and `|lambda| <= budget`.
fn sub_partitions(outer: Option<&[i64]>, rows: usize, max_part: i64, budget: i64) -> Vec<Vec<i64>> {
    fn go(
        r: usize,
        prev: i64,
        budget: i64,
        outer: Option<&[i64]>,
        rows: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        out.push(cur.clone());
        if r == rows {
            return;
        }
        let cap = outer.map_or(prev, |o| prev.min(o.get(r).copied().unwrap_or(0)));
        for part in 1..=cap.min(budget) {
            cur.push(part);
            go(r + 1, part, budget - part, outer, rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, max_part, budget, outer, rows, &mut Vec::new(), &mut out);
    out
}

/// Chains `col_1 ⊆ col_2 ⊆ ... ⊆ col_k` of deviation columns.
fn column_chains(k: usize, rows: usize, max_part: i64, budget: i64) -> Vec<Vec<Vec<i64>>> {
    // Build from the last column, which contains all others.
    fn go(
        remaining: usize,
        outer: Option<&[i64]>,
        rows: usize,
        max_part: i64,
        budget: i64,
        acc: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if remaining == 0 {
            let mut cols = acc.clone();
            cols.reverse();
            out.push(cols);
            return;
        }
        for col in sub_partitions(outer, rows, max_part, budget) {
            let used: i64 = col.iter().sum();
            acc.push(col.clone());
            go(remaining - 1, Some(&col), rows, max_part, budget - used, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, None, rows, max_part, budget, &mut Vec::new(), &mut out);
    out
}

fn sort_canonical(tableaux: &mut [Tableau]) {
    tableaux.sort_by(|a, b| (a.depth(), &a.columns).cmp(&(b.depth(), &b.columns)));
}

/// The window tableaux: rows `i-n..=i`, entries in `[i-n, i+n+1]`.
pub fn enumerate_window(desc: KrDescriptor, n: i64) -> Vec<Tableau> {
    let rows = (n + 1) as usize;
    let budget = (n + 1) * (n + 1) * desc.k as i64;
    let mut out: Vec<Tableau> = column_chains(desc.k as usize, rows, n + 1, budget)
        .into_iter()
        .map(|columns| Tableau { desc, columns, window: Some(n) })
        .collect();
    sort_canonical(&mut out);
    out
}

/// The tableaux of depth at most `max_depth` over the infinite line.
pub fn enumerate_by_depth(desc: KrDescriptor, max_depth: i64) -> Vec<Tableau> {
    let bound = max_depth.max(0);
    let mut out: Vec<Tableau> = column_chains(desc.k as usize, bound as usize, bound, bound)
        .into_iter()
        .map(|columns| Tableau { desc, columns, window: None })
        .collect();
    sort_canonical(&mut out);
    out
}

pub fn tableau_monomial(t: &Tableau) -> Monomial {
    t.monomial()
}

/// The KR q-character as a sum of tableau monomials.
///
/// `Window(n)` gives the complete character over `WindowA(i-n, i+n)`;
/// `Depth(D)` gives its truncation to depth `D` over the infinite line.
pub fn kr_qcharacter(desc: KrDescriptor, mode: KrMode) -> Result<QCharacter> {
    if desc.k == 0 {
        return Err(Error::Parse("KR modules need k >= 1".into()));
    }
    let (cartan, tableaux, bound) = match mode {
        KrMode::Window(n) if n >= 0 => {
            (CartanDatum::window(desc.node - n, desc.node + n)?, enumerate_window(desc, n), None)
        }
        KrMode::Depth(d) if d >= 0 => (CartanDatum::Infinite, enumerate_by_depth(desc, d), Some(d)),
        _ => return Err(Error::Parse(format!("negative truncation parameter in {mode:?}"))),
    };
    let mut chi = QCharacter::with_highest(cartan, desc.highest_monomial(), bound);
    for t in &tableaux {
        chi.add_term(t.monomial(), 1)?;
    }
    Ok(chi)
}
