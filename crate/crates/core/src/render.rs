//! Canonical JSON documents for characters, and plain-text / LaTeX
//! renderings in `Y[i,s]` notation.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::monomial::{Factor, Monomial, QCharacter, RootContent};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: i64,
    pub factors: Vec<Factor>,
}

/// On-disk form of a [`QCharacter`]. Factors are sorted by `(node, s)`;
/// terms by depth below `highest` when it is set, otherwise
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterDoc {
    pub cartan: CartanDatum,
    pub highest: Option<Vec<Factor>>,
    pub depth_bound: Option<i64>,
    pub terms: Vec<TermDoc>,
}

impl CharacterDoc {
    pub fn from_character(chi: &QCharacter) -> Result<Self> {
        let terms = chi
            .sorted_terms()?
            .into_iter()
            .map(|(m, coeff, _)| TermDoc { coeff, factors: m.factors().to_vec() })
            .collect();
        Ok(CharacterDoc {
            cartan: chi.cartan(),
            highest: chi.highest().map(|h| h.factors().to_vec()),
            depth_bound: chi.depth_bound(),
            terms,
        })
    }

    /// Validates the document and builds the character. Rejects invalid
    /// nodes, zero exponents or coefficients, repeated factors or terms, and
    /// terms that are not reachable from `highest` within `depth_bound`.
    pub fn into_character(self) -> Result<QCharacter> {
        let d = self.cartan;
        d.validate()?;
        if let Some(b) = self.depth_bound {
            if b < 0 {
                return Err(Error::Parse(format!("negative depth bound {b}")));
            }
        }
        let highest = self.highest.map(|f| monomial_from(&d, &f)).transpose()?;
        let mut chi = QCharacter::new(d);
        chi.set_highest(highest);
        chi.set_depth_bound(self.depth_bound);
        let mut seen = BTreeSet::new();
        for t in self.terms {
            if t.coeff == 0 {
                return Err(Error::Parse("zero coefficient".into()));
            }
            let m = monomial_from(&d, &t.factors)?;
            if chi.highest().is_some() {
                let depth = chi.depth(&m)?;
                if self.depth_bound.is_some_and(|b| depth > b) {
                    return Err(Error::Parse(format!("term {m} has depth {depth} beyond the bound")));
                }
            }
            if !seen.insert(m.clone()) {
                return Err(Error::Parse(format!("repeated term {m}")));
            }
            chi.add_term(m, t.coeff)?;
        }
        Ok(chi)
    }
}

fn monomial_from(d: &CartanDatum, factors: &[Factor]) -> Result<Monomial> {
    let mut keys = BTreeSet::new();
    for &(node, s, e) in factors {
        if !d.contains(node) || d.canonical(node) != node {
            return Err(Error::InvalidNode { node, cartan: *d });
        }
        if e == 0 {
            return Err(Error::Parse(format!("zero exponent at Y[{node},{s}]")));
        }
        if !keys.insert((node, s)) {
            return Err(Error::Parse(format!("repeated factor Y[{node},{s}]")));
        }
    }
    Ok(Monomial::from_factors(factors.iter().copied()))
}

pub fn to_json(chi: &QCharacter) -> Result<String> {
    let doc = CharacterDoc::from_character(chi)?;
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<QCharacter> {
    let doc: CharacterDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_character()
}

/// Parses the text form of a single monomial, e.g. `Y[0,0] Y[2,4]^-1`
/// or `1`. Factors may be separated by spaces or `*`.
pub fn parse_monomial(s: &str) -> Result<Monomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one());
    }
    let mut factors = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let bad = || Error::Parse(format!("bad factor {tok:?}"));
        let rest = tok.strip_prefix("Y[").ok_or_else(bad)?;
        let (inside, tail) = rest.split_once(']').ok_or_else(bad)?;
        let (i, sh) = inside.split_once(',').ok_or_else(bad)?;
        let i: i64 = i.trim().parse().map_err(|_| bad())?;
        let sh: i64 = sh.trim().parse().map_err(|_| bad())?;
        let e: i64 = match tail {
            "" => 1,
            t => t.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
        };
        factors.push((i, sh, e));
    }
    if factors.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    Ok(Monomial::from_factors(factors))
}

fn sum_text<T>(items: impl IntoIterator<Item = (T, i64)>, show: impl Fn(&T) -> String, times: &str) -> String {
    let mut out = String::new();
    for (k, (m, c)) in items.into_iter().enumerate() {
        let body = show(&m);
        let (neg, a) = (c < 0, c.unsigned_abs());
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if a != 1 {
            let _ = write!(out, "{a}{times}");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `Y[0,0] + Y[0,2]^-1`, multiplicities as `2 × m`, in canonical term order.
pub fn render_text(chi: &QCharacter) -> Result<String> {
    let terms = chi.sorted_terms()?.into_iter().map(|(m, c, _)| (m, c));
    Ok(sum_text(terms, |m| m.to_string(), " × "))
}

pub fn monomial_latex(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut out = String::new();
    for &(i, s, e) in m.factors() {
        let param = match s {
            0 => "1".to_string(),
            1 => "q".to_string(),
            s => format!("q^{{{s}}}"),
        };
        let _ = write!(out, "Y_{{{i},{param}}}");
        if e != 1 {
            let _ = write!(out, "^{{{e}}}");
        }
    }
    out
}

pub fn render_latex(chi: &QCharacter) -> Result<String> {
    let terms = chi.sorted_terms()?.into_iter().map(|(m, c, _)| (m, c));
    Ok(sum_text(terms, monomial_latex, " \\times "))
}

/// `L0 - a0 - 2 a1` style label for `wt(m_+) - sum c_j alpha_j`.
pub fn root_content_text(highest: &Monomial, rc: &RootContent) -> String {
    let mut out = highest.weight().to_string();
    for (&j, &c) in rc {
        match c {
            1 => {
                let _ = write!(out, " - a{j}");
            }
            c => {
                let _ = write!(out, " - {c} a{j}");
            }
        }
    }
    out
}
