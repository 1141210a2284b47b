//! Laurent monomials in the variables `Y_{i, a q^s}` and q-characters built
//! from them.
//!
//! A [`Monomial`] keeps its factors sorted by `(node, shift)` with zero
//! exponents pruned, so structural equality is equality of monomials and the
//! derived `Ord` is the canonical lexicographic order on `(node, s, exponent)`
//! triples.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cartan::{CartanDatum, Node};
use crate::error::{Error, Result};

/// One factor `Y_{node, a q^shift}^exp`.
pub type Factor = (Node, i64, i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<Factor>,
}

fn checked_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("monomial exponent overflow")
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `Y_{i, a q^s}`.
    pub fn y(i: Node, s: i64) -> Self {
        Monomial { factors: vec![(i, s, 1)] }
    }

    /// Builds a monomial from arbitrary factors; repeated variables are merged.
    pub fn from_factors<I: IntoIterator<Item = Factor>>(factors: I) -> Self {
        let mut raw: Vec<Factor> = factors.into_iter().collect();
        raw.sort_unstable_by_key(|&(i, s, _)| (i, s));
        let mut out: Vec<Factor> = Vec::with_capacity(raw.len());
        for (i, s, e) in raw {
            match out.last_mut() {
                Some(last) if (last.0, last.1) == (i, s) => last.2 = checked_exp(last.2, e),
                _ => out.push((i, s, e)),
            }
        }
        out.retain(|f| f.2 != 0);
        Monomial { factors: out }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, i: Node, s: i64) -> i64 {
        self.factors
            .binary_search_by(|&(n, t, _)| (n, t).cmp(&(i, s)))
            .map(|k| self.factors[k].2)
            .unwrap_or(0)
    }

    /// `self * other^e`, merged in one pass over both sorted factor lists.
    pub fn combine(&self, other: &Monomial, e: i64) -> Monomial {
        if e == 0 || other.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (a, b) = (&self.factors, &other.factors);
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            let take_a = y == b.len() || (x < a.len() && (a[x].0, a[x].1) < (b[y].0, b[y].1));
            let take_b = x == a.len() || (y < b.len() && (b[y].0, b[y].1) < (a[x].0, a[x].1));
            if take_a {
                out.push(a[x]);
                x += 1;
            } else {
                let scaled = b[y].2.checked_mul(e).expect("monomial exponent overflow");
                if take_b {
                    out.push((b[y].0, b[y].1, scaled));
                } else {
                    let sum = checked_exp(a[x].2, scaled);
                    if sum != 0 {
                        out.push((a[x].0, a[x].1, sum));
                    }
                    x += 1;
                }
                y += 1;
            }
        }
        Monomial { factors: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> Monomial {
        Monomial::one().combine(self, -1)
    }

    pub fn pow(&self, e: i64) -> Monomial {
        Monomial::one().combine(self, e)
    }

    /// Only positive powers. The empty monomial is dominant.
    pub fn is_dominant(&self) -> bool {
        self.factors.iter().all(|&(_, _, e)| e > 0)
    }

    /// No negative power of any `Y_{i, .}`.
    pub fn is_dominant_at(&self, i: Node) -> bool {
        self.factors.iter().all(|&(n, _, e)| n != i || e > 0)
    }

    /// Exponents of the `Y_{i, .}` factors, keyed by spectral shift.
    pub fn part_at(&self, i: Node) -> BTreeMap<i64, i64> {
        self.factors
            .iter()
            .filter(|&&(n, _, _)| n == i)
            .map(|&(_, s, e)| (s, e))
            .collect()
    }

    pub fn nodes(&self) -> BTreeSet<Node> {
        self.factors.iter().map(|&(n, _, _)| n).collect()
    }

    /// Translates every spectral shift by `t`.
    pub fn shift(&self, t: i64) -> Monomial {
        Monomial { factors: self.factors.iter().map(|&(n, s, e)| (n, s + t, e)).collect() }
    }

    /// Applies `f` to every node index and re-canonicalizes.
    pub fn map_nodes(&self, f: impl Fn(Node) -> Node) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|&(n, s, e)| (f(n), s, e)))
    }

    /// Drops every factor whose node is outside `lo..=hi`.
    pub fn restrict(&self, lo: Node, hi: Node) -> Monomial {
        Monomial {
            factors: self
                .factors
                .iter()
                .copied()
                .filter(|&(n, _, _)| (lo..=hi).contains(&n))
                .collect(),
        }
    }

    /// `Y_{i,s} -> Y_{[i],s}` with `[i] = i mod (n+1)`.
    pub fn fold(&self, n: i64) -> Monomial {
        self.map_nodes(|i| i.rem_euclid(n + 1))
    }

    /// Sum of exponents over spectral shifts, per node.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for &(n, _, e) in &self.factors {
            w.add(n, e);
        }
        w
    }

    /// Sum of all exponents. Every A-monomial has degree 0 except on `CyclicA(1)`
    /// and at window boundaries.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|f| f.2).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, &(n, s, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "Y[{n},{s}]")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A weight in the basis of fundamental weights `Lambda_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coeffs: BTreeMap<Node, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn fundamental(i: Node) -> Self {
        let mut w = Weight::zero();
        w.add(i, 1);
        w
    }

    pub fn from_coeffs<I: IntoIterator<Item = (Node, i64)>>(coeffs: I) -> Self {
        let mut w = Weight::zero();
        for (i, c) in coeffs {
            w.add(i, c);
        }
        w
    }

    pub fn add(&mut self, i: Node, c: i64) {
        let slot = self.coeffs.entry(i).or_insert(0);
        *slot = slot.checked_add(c).expect("weight overflow");
        if *slot == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: Node) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<Node, i64> {
        &self.coeffs
    }

    pub fn plus(&self, other: &Weight, scale: i64) -> Weight {
        let mut w = self.clone();
        for (&i, &c) in &other.coeffs {
            w.add(i, c * scale);
        }
        w
    }

    /// `Lambda_i -> Lambda_{[i]}`.
    pub fn fold(&self, n: i64) -> Weight {
        Weight::from_coeffs(self.coeffs.iter().map(|(&i, &c)| (i.rem_euclid(n + 1), c)))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, &c)) in self.coeffs.iter().enumerate() {
            match (k, c) {
                (0, 1) => write!(f, "L{i}")?,
                (0, -1) => write!(f, "-L{i}")?,
                (0, c) => write!(f, "{c}L{i}")?,
                (_, 1) => write!(f, " + L{i}")?,
                (_, -1) => write!(f, " - L{i}")?,
                (_, c) if c < 0 => write!(f, " - {}L{i}", -c)?,
                (_, c) => write!(f, " + {c}L{i}")?,
            }
        }
        Ok(())
    }
}

/// Multiplicities of the `A_{j, .}^{-1}` factors separating a monomial from a
/// highest monomial, keyed by node. Identifies the weight
/// `wt(m_+) - sum_j c_j alpha_j` without losing the null root on cyclic data.
pub type RootContent = BTreeMap<Node, i64>;

/// Exponents `c_{j,s}` with `m_plus / m = prod A_{j,s}^{c_{j,s}}`, all
/// positive, or `None` when no such factorization exists.
///
/// The system is unitriangular in spectral order: the lowest-shift variable
/// `Y_{j,t}` of the quotient can only come from `A_{j,t+1}`, so peeling
/// lowest shifts first solves it exactly.
pub fn a_factorization(m: &Monomial, m_plus: &Monomial, d: &CartanDatum) -> Option<BTreeMap<(Node, i64), i64>> {
    let mut rest = m_plus.div(m);
    let ceiling = rest.factors().iter().map(|f| f.1).max().unwrap_or(0);
    let mut out = BTreeMap::new();
    while !rest.is_one() {
        let t = rest.factors().iter().map(|f| f.1).min().expect("nonempty");
        if t > ceiling {
            return None;
        }
        let lowest: Vec<Factor> = rest.factors().iter().copied().filter(|f| f.1 == t).collect();
        for (j, _, e) in lowest {
            if e <= 0 || !d.contains(j) || d.canonical(j) != j {
                return None;
            }
            let a = d.a_monomial(j, t + 1).ok()?;
            rest = rest.combine(&a, -e);
            out.insert((j, t + 1), e);
        }
    }
    Some(out)
}

/// Number of A-factors separating `m` from `m_plus`.
pub fn depth_of(m: &Monomial, m_plus: &Monomial, d: &CartanDatum) -> Option<i64> {
    a_factorization(m, m_plus, d).map(|f| f.values().sum())
}

pub fn root_content_of(m: &Monomial, m_plus: &Monomial, d: &CartanDatum) -> Option<RootContent> {
    a_factorization(m, m_plus, d).map(|f| {
        let mut rc = RootContent::new();
        for ((j, _), c) in f {
            *rc.entry(j).or_insert(0) += c;
        }
        rc
    })
}

pub fn is_dominant(m: &Monomial) -> bool {
    m.is_dominant()
}

pub fn weight_of(m: &Monomial) -> Weight {
    m.weight()
}

pub fn combine(m1: &Monomial, m2: &Monomial, e: i64) -> Monomial {
    m1.combine(m2, e)
}

/// A finite sum of monomials with integer multiplicities.
///
/// `highest` fixes the reference monomial for depths; `depth_bound`, when
/// set, marks the character as the truncation of a larger one to depth at
/// most `D` (exact up to that depth, absent beyond it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCharacter {
    cartan: CartanDatum,
    terms: BTreeMap<Monomial, i64>,
    depth_bound: Option<i64>,
    highest: Option<Monomial>,
}

impl QCharacter {
    pub fn new(cartan: CartanDatum) -> Self {
        QCharacter { cartan, terms: BTreeMap::new(), depth_bound: None, highest: None }
    }

    pub fn with_highest(cartan: CartanDatum, highest: Monomial, depth_bound: Option<i64>) -> Self {
        QCharacter { cartan, terms: BTreeMap::new(), depth_bound, highest: Some(highest) }
    }

    pub fn cartan(&self) -> CartanDatum {
        self.cartan
    }

    pub fn highest(&self) -> Option<&Monomial> {
        self.highest.as_ref()
    }

    pub fn depth_bound(&self) -> Option<i64> {
        self.depth_bound
    }

    pub fn set_highest(&mut self, highest: Option<Monomial>) {
        self.highest = highest;
    }

    pub fn set_depth_bound(&mut self, bound: Option<i64>) {
        self.depth_bound = bound;
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let v = o.get().checked_add(c).ok_or(Error::Overflow("character multiplicity"))?;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
        Ok(())
    }

    /// `self + scale * other`, keeping the metadata of `self`.
    pub fn add_scaled(&mut self, other: &QCharacter, scale: i64) -> Result<()> {
        for (m, &c) in &other.terms {
            let c = c.checked_mul(scale).ok_or(Error::Overflow("character multiplicity"))?;
            let slot = self.terms.entry(m.clone()).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow("character multiplicity"))?;
        }
        self.terms.retain(|_, c| *c != 0);
        Ok(())
    }

    /// Sum of all multiplicities.
    pub fn total_mass(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Depth of `m` relative to the highest monomial.
    pub fn depth(&self, m: &Monomial) -> Result<i64> {
        let h = self.highest.as_ref().ok_or(Error::MissingHighest)?;
        depth_of(m, h, &self.cartan).ok_or_else(|| Error::NoDepth { monomial: m.clone() })
    }

    /// Terms in the canonical order: by depth when a highest monomial is
    /// set, then lexicographically.
    pub fn sorted_terms(&self) -> Result<Vec<(Monomial, i64, Option<i64>)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, &c) in &self.terms {
            let d = match self.highest {
                Some(_) => Some(self.depth(m)?),
                None => None,
            };
            out.push((m.clone(), c, d));
        }
        out.sort_by(|a, b| (a.2, &a.0).cmp(&(b.2, &b.0)));
        Ok(out)
    }

    /// Keeps only the terms of depth at most `bound`.
    pub fn truncate(&self, bound: i64) -> Result<QCharacter> {
        let mut out = self.clone();
        out.terms.clear();
        for (m, &c) in &self.terms {
            if self.depth(m)? <= bound {
                out.terms.insert(m.clone(), c);
            }
        }
        out.depth_bound = Some(self.depth_bound.map_or(bound, |b| b.min(bound)));
        Ok(out)
    }

    /// Nodes carrying a factor in some term or in the highest monomial.
    pub fn support_nodes(&self) -> BTreeSet<Node> {
        let mut nodes: BTreeSet<Node> = self.terms.keys().flat_map(|m| m.nodes()).collect();
        if let Some(h) = &self.highest {
            nodes.extend(h.nodes());
        }
        nodes
    }

    /// Nodes to be checked for this character: all nodes of a finite datum,
    /// the support on the infinite line.
    pub fn relevant_nodes(&self) -> Vec<Node> {
        self.cartan.nodes().unwrap_or_else(|| self.support_nodes().into_iter().collect())
    }

    pub fn dominant_monomials(&self) -> BTreeMap<Monomial, i64> {
        self.terms.iter().filter(|(m, _)| m.is_dominant()).map(|(m, &c)| (m.clone(), c)).collect()
    }

    /// Multiplicities grouped by weight in the `Lambda` basis.
    pub fn classical_character(&self) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for (m, &c) in &self.terms {
            *out.entry(m.weight()).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Multiplicities grouped by root content relative to the highest
    /// monomial, i.e. by weight `wt(m_+) - sum_j c_j alpha_j`.
    pub fn weight_multiplicities(&self) -> Result<BTreeMap<RootContent, i64>> {
        let h = self.highest.as_ref().ok_or(Error::MissingHighest)?;
        let mut out = BTreeMap::new();
        for (m, &c) in &self.terms {
            let rc = root_content_of(m, h, &self.cartan).ok_or_else(|| Error::NoDepth { monomial: m.clone() })?;
            *out.entry(rc).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }
}

/// The folding `Y_{i,s} -> Y_{i mod (n+1), s}` from the infinite line to `CyclicA(n)`.
/// Colliding monomials have their multiplicities summed.
pub fn fold_qcharacter(chi: &QCharacter, n: i64) -> Result<QCharacter> {
    if chi.cartan != CartanDatum::Infinite {
        return Err(Error::WrongCartan { expected: "InfiniteA".into(), found: chi.cartan });
    }
    let cartan = CartanDatum::cyclic(n)?;
    let mut out = QCharacter {
        cartan,
        terms: BTreeMap::new(),
        depth_bound: chi.depth_bound,
        highest: chi.highest.as_ref().map(|h| h.fold(n)),
    };
    for (m, &c) in &chi.terms {
        out.add_term(m.fold(n), c)?;
    }
    Ok(out)
}
