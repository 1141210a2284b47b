//! Membership in the rings `K_i`, the unique-dominant-monomial
//! characterization, and a generator for characters that satisfy it.
//!
//! All three walk monomials in the canonical order (depth, then
//! lexicographic). Subtracting `c * E_i(m)` for the shallowest remainder
//! term only introduces strictly deeper terms, so each walk is a single
//! pass and terminates on finite input.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::cartan::{CartanDatum, Node};
use crate::error::{Error, Result};
use crate::monomial::{depth_of, Monomial, QCharacter};
use crate::sl2::i_expansion_terms;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Everything up to the frontier checks out; `residual` holds the
    /// unjudged terms, all deeper than the frontier.
    PassWithFrontier { residual: QCharacter },
    /// `witness` is the shallowest offending monomial. `node` is the node
    /// whose ring membership failed, or `None` for a dominance failure.
    Fail { node: Option<Node>, witness: Monomial },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::PassWithFrontier { .. } => "pass_with_frontier",
            Verdict::Fail { .. } => "fail",
        }
    }
}

type Remainder = BTreeMap<(i64, Monomial), i64>;

fn bump(rem: &mut Remainder, key: (i64, Monomial), c: i64) -> Result<()> {
    let slot = rem.entry(key.clone()).or_insert(0);
    *slot = slot.checked_add(c).ok_or(Error::Overflow("remainder coefficient"))?;
    if *slot == 0 {
        rem.remove(&key);
    }
    Ok(())
}

/// Depth up to which a character can be judged: the caller's frontier,
/// capped by the truncation depth of the character.
fn effective_frontier(chi: &QCharacter, frontier: Option<i64>) -> Option<i64> {
    match (frontier, chi.depth_bound()) {
        (Some(f), Some(b)) => Some(f.min(b)),
        (f, b) => f.or(b),
    }
}

fn remainder_of(chi: &QCharacter) -> Result<Remainder> {
    let mut rem = Remainder::new();
    for (m, &c) in chi.terms() {
        rem.insert((chi.depth(m)?, m.clone()), c);
    }
    Ok(rem)
}

fn residual_character(chi: &QCharacter, rem: &Remainder) -> Result<QCharacter> {
    let mut out = QCharacter::with_highest(chi.cartan(), chi.highest().cloned().unwrap_or_default(), chi.depth_bound());
    for ((_, m), &c) in rem {
        out.add_term(m.clone(), c)?;
    }
    Ok(out)
}

/// Greedy `E_i`-subtraction. Passes when the character is a sum of
/// elements of `K_i` up to the frontier.
pub fn verify_ki(chi: &QCharacter, i: Node, frontier: Option<i64>) -> Result<Verdict> {
    if chi.highest().is_none() {
        return Err(Error::MissingHighest);
    }
    let d = chi.cartan();
    let frontier = effective_frontier(chi, frontier);
    let mut rem = remainder_of(chi)?;
    while let Some(((depth, m), c)) = rem.pop_first() {
        if frontier.is_some_and(|f| depth > f) {
            rem.insert((depth, m), c);
            return Ok(Verdict::PassWithFrontier { residual: residual_character(chi, &rem)? });
        }
        if !m.is_dominant_at(i) {
            return Ok(Verdict::Fail { node: Some(i), witness: m });
        }
        for (mono, dj, e) in i_expansion_terms(&d, i, &m)?.into_iter().skip(1) {
            let scaled = e.checked_mul(c).ok_or(Error::Overflow("remainder coefficient"))?;
            bump(&mut rem, (depth + dj, mono), -scaled)?;
        }
    }
    Ok(Verdict::Pass)
}

pub fn dominant_monomials(chi: &QCharacter) -> BTreeMap<Monomial, i64> {
    chi.dominant_monomials()
}

/// Membership in every `K_i` plus a unique dominant monomial `m_plus` with
/// multiplicity one, both checked up to the frontier.
pub fn verify_characterization(chi: &QCharacter, m_plus: &Monomial, frontier: Option<i64>) -> Result<Verdict> {
    for i in chi.relevant_nodes() {
        if let v @ Verdict::Fail { .. } = verify_ki(chi, i, frontier)? {
            return Ok(v);
        }
    }
    let frontier = effective_frontier(chi, frontier);
    let mut unjudged = QCharacter::with_highest(chi.cartan(), m_plus.clone(), chi.depth_bound());
    let mut seen_highest = false;
    for (m, &c) in chi.terms() {
        let depth = chi.depth(m)?;
        if frontier.is_some_and(|f| depth > f) {
            unjudged.add_term(m.clone(), c)?;
            continue;
        }
        if m.is_dominant() {
            if m != m_plus || c != 1 {
                return Ok(Verdict::Fail { node: None, witness: m.clone() });
            }
            seen_highest = true;
        }
    }
    if !seen_highest {
        return Ok(Verdict::Fail { node: None, witness: m_plus.clone() });
    }
    Ok(if unjudged.is_empty() { Verdict::Pass } else { Verdict::PassWithFrontier { residual: unjudged } })
}

/// Builds the character with highest monomial `m_plus` that lies in every
/// `K_i` and has no other dominant monomial, up to depth `max_depth`.
///
/// Monomials are visited once, in canonical order. When `m` is reached,
/// every contribution to it from shallower terms is known: for each node
/// `i`, `acc_i(m)` is the multiplicity that `E_i` of shallower terms
/// forces on `m`. If `m` is not i-dominant that forced value must be its
/// multiplicity, so all such nodes have to agree; a dominant `m` other than
/// `m_plus` gets multiplicity 0. Then for every node where `m` is
/// i-dominant, the excess `chi(m) - acc_i(m)` spawns a new `E_i` term.
///
/// Disagreement between nodes, or a negative forced multiplicity at a non
/// i-dominant monomial, means no such character exists at this depth and is
/// reported as a generation failure.
pub fn fm_generate(d: &CartanDatum, m_plus: &Monomial, max_depth: i64) -> Result<QCharacter> {
    d.validate()?;
    if !m_plus.is_dominant() {
        return Err(Error::NotDominant(m_plus.clone()));
    }
    for &(node, _, _) in m_plus.factors() {
        if !d.contains(node) || d.canonical(node) != node {
            return Err(Error::InvalidNode { node, cartan: *d });
        }
    }
    let mut chi = QCharacter::with_highest(*d, m_plus.clone(), Some(max_depth));
    let mut pending: BTreeSet<(i64, Monomial)> = BTreeSet::from([(0, m_plus.clone())]);
    let mut acc: HashMap<Monomial, BTreeMap<Node, i64>> = HashMap::new();

    while let Some((depth, m)) = pending.pop_first() {
        let forced = acc.remove(&m).unwrap_or_default();
        let mut nodes: BTreeSet<Node> = m.nodes();
        nodes.extend(forced.keys().copied());

        let mult = if &m == m_plus {
            if !forced.is_empty() {
                return Err(Error::Generation(format!("highest monomial {m} is reached from below")));
            }
            1
        } else {
            let demands: Vec<(Node, i64)> = nodes
                .iter()
                .filter(|&&i| !m.is_dominant_at(i))
                .map(|&i| (i, forced.get(&i).copied().unwrap_or(0)))
                .collect();
            match demands.first() {
                None => 0,
                Some(&(_, first)) => {
                    if first < 0 || demands.iter().any(|&(_, v)| v != first) {
                        return Err(Error::Generation(format!(
                            "monomial {m} at depth {depth}: inconsistent forced multiplicities {demands:?}"
                        )));
                    }
                    first
                }
            }
        };
        chi.add_term(m.clone(), mult)?;

        for &i in &nodes {
            if !m.is_dominant_at(i) {
                continue;
            }
            let excess = mult - forced.get(&i).copied().unwrap_or(0);
            if excess == 0 {
                continue;
            }
            for (mono, dj, e) in i_expansion_terms(d, i, &m)?.into_iter().skip(1) {
                if depth + dj > max_depth {
                    continue;
                }
                let slot = acc.entry(mono.clone()).or_default().entry(i).or_insert(0);
                *slot = e
                    .checked_mul(excess)
                    .and_then(|v| slot.checked_add(v))
                    .ok_or(Error::Overflow("forced multiplicity"))?;
                pending.insert((depth + dj, mono));
            }
        }
    }
    Ok(chi)
}

/// One simple constituent found by [`decompose_into_simples`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<(Monomial, i64)>,
    /// What is left deeper than the judged depth.
    pub residual: QCharacter,
}

/// Peels off generated characters headed by the shallowest remaining
/// dominant monomial, up to depth `max_depth` below the highest monomial of
/// `chi`.
pub fn decompose_into_simples(chi: &QCharacter, max_depth: i64) -> Result<Decomposition> {
    let top = chi.highest().ok_or(Error::MissingHighest)?.clone();
    let d = chi.cartan();
    let max_depth = effective_frontier(chi, Some(max_depth)).expect("set");
    let mut rem = remainder_of(chi)?;
    let mut components = Vec::new();
    while let Some((&(depth, ref m), &c)) = rem.iter().next() {
        if depth > max_depth {
            break;
        }
        let m = m.clone();
        if !m.is_dominant() {
            return Err(Error::Decomposition(format!(
                "shallowest remaining monomial {m} (depth {depth}, coefficient {c}) is not dominant"
            )));
        }
        components.push((m.clone(), c));
        let part = fm_generate(&d, &m, max_depth - depth)?;
        for (mono, &e) in part.terms() {
            let abs = depth_of(mono, &top, &d).ok_or_else(|| Error::NoDepth { monomial: mono.clone() })?;
            let scaled = e.checked_mul(c).ok_or(Error::Overflow("decomposition"))?;
            bump(&mut rem, (abs, mono.clone()), -scaled)?;
        }
    }
    Ok(Decomposition { components, residual: residual_character(chi, &rem)? })
}
