//! Rank-one building blocks: q-strings, their expansions, and the
//! i-expansion `E_i(m)` of an i-dominant monomial.
//!
//! The simple rank-one module attached to a string `{s, s+2, ..., s+2(l-1)}`
//! has the `l + 1` monomials obtained from `Y_s Y_{s+2} ... Y_{s+2(l-1)}` by
//! successively multiplying with `A_{s+2l-1}^{-1}, A_{s+2l-3}^{-1}, ...`.
//! A general i-part is split into strings in general position and the
//! expansions multiply.

use std::collections::BTreeMap;

use crate::cartan::{CartanDatum, Node};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, QCharacter};

/// The shifts `start, start+2, ..., start+2(length-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QString {
    pub start: i64,
    pub length: i64,
}

impl QString {
    pub fn new(start: i64, length: i64) -> Self {
        assert!(length >= 1, "q-string length must be positive");
        QString { start, length }
    }

    pub fn end(&self) -> i64 {
        self.start + 2 * (self.length - 1)
    }

    pub fn shifts(&self) -> impl Iterator<Item = i64> {
        let (s, l) = (self.start, self.length);
        (0..l).map(move |t| s + 2 * t)
    }

    fn contains(&self, other: &QString) -> bool {
        (self.start - other.start).rem_euclid(2) == 0 && self.start <= other.start && other.end() <= self.end()
    }

    /// Different parity, nested, or with a union that is not one string.
    pub fn in_general_position(&self, other: &QString) -> bool {
        if (self.start - other.start).rem_euclid(2) != 0 {
            return true;
        }
        if self.contains(other) || other.contains(self) {
            return true;
        }
        other.start > self.end() + 2 || self.start > other.end() + 2
    }
}

/// Splits a multiset of shifts into q-strings pairwise in general position,
/// repeatedly taking the longest string that starts at the current minimum.
pub fn string_decompose(part: &BTreeMap<i64, i64>) -> Vec<QString> {
    assert!(part.values().all(|&c| c >= 0), "string decomposition needs nonnegative multiplicities");
    let mut rest: BTreeMap<i64, i64> = part.iter().filter(|(_, &c)| c > 0).map(|(&s, &c)| (s, c)).collect();
    let mut out = Vec::new();
    while let Some((&start, _)) = rest.iter().next() {
        let mut length = 0;
        while rest.get(&(start + 2 * length)).is_some_and(|&c| c > 0) {
            length += 1;
        }
        for t in 0..length {
            let key = start + 2 * t;
            let c = rest.get_mut(&key).expect("present");
            *c -= 1;
            if *c == 0 {
                rest.remove(&key);
            }
        }
        out.push(QString::new(start, length));
    }
    for (a, x) in out.iter().enumerate() {
        for y in &out[a + 1..] {
            assert!(x.in_general_position(y), "strings {x:?} and {y:?} are not in general position");
        }
    }
    out
}

/// The `l + 1` normalized terms `m_j / m_0` of a string expansion with
/// their depths `j`.
fn normalized_expansion(d: &CartanDatum, i: Node, q: QString) -> Result<Vec<(Monomial, i64)>> {
    let mut out = Vec::with_capacity(q.length as usize + 1);
    let mut cur = Monomial::one();
    out.push((cur.clone(), 0));
    for j in 1..=q.length {
        cur = cur.div(&d.a_monomial(i, q.start + 2 * (q.length - j) + 1)?);
        out.push((cur.clone(), j));
    }
    Ok(out)
}

/// The character of the rank-one simple module on the string `q` at node `i`.
pub fn string_expansion(d: &CartanDatum, i: Node, q: QString) -> Result<QCharacter> {
    let top = Monomial::from_factors(q.shifts().map(|s| (i, s, 1)));
    let mut chi = QCharacter::with_highest(*d, top.clone(), None);
    for (rel, _) in normalized_expansion(d, i, q)? {
        chi.add_term(top.mul(&rel), 1)?;
    }
    Ok(chi)
}

/// Terms of `E_i(m)` as `(monomial, depth below m, multiplicity)`, the top
/// term `(m, 0, 1)` first.
pub fn i_expansion_terms(d: &CartanDatum, i: Node, m: &Monomial) -> Result<Vec<(Monomial, i64, i64)>> {
    if !m.is_dominant_at(i) {
        return Err(Error::NotIDominant { node: i, monomial: m.clone() });
    }
    let mut acc: BTreeMap<(i64, Monomial), i64> = BTreeMap::from([((0, Monomial::one()), 1)]);
    for q in string_decompose(&m.part_at(i)) {
        let factor = normalized_expansion(d, i, q)?;
        let mut next = BTreeMap::new();
        for ((depth, rel), c) in &acc {
            for (f, j) in &factor {
                *next.entry((depth + j, rel.mul(f))).or_insert(0) += c;
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|((depth, rel), c)| (m.mul(&rel), depth, c)).collect())
}

/// `E_i(m)` as a character with highest monomial `m`.
pub fn i_expansion(d: &CartanDatum, i: Node, m: &Monomial) -> Result<QCharacter> {
    let mut chi = QCharacter::with_highest(*d, m.clone(), None);
    for (mono, _, c) in i_expansion_terms(d, i, m)? {
        chi.add_term(mono, c)?;
    }
    Ok(chi)
}
