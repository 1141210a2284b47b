//! Type-A index lattices: the doubly infinite line, finite windows of it,
//! and the cyclic quotients `Z/(n+1)`.
//!
//! Spectral parameters live in a single lattice `a q^Z`; a monomial factor
//! `Y_{i, a q^s}` is addressed by the pair `(i, s)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Weight};

pub type Node = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CartanDatum {
    /// Nodes are all of `Z`.
    Infinite,
    /// Nodes `lo..=hi`; factors on nodes outside the window are set to 1.
    Window { lo: Node, hi: Node },
    /// Nodes are residues mod `n + 1`, stored as `0..=n`.
    Cyclic { n: i64 },
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanDatum::Infinite => write!(f, "InfiniteA"),
            CartanDatum::Window { lo, hi } => write!(f, "WindowA({lo},{hi})"),
            CartanDatum::Cyclic { n } => write!(f, "CyclicA({n})"),
        }
    }
}

impl CartanDatum {
    pub fn window(lo: Node, hi: Node) -> Result<Self> {
        let d = CartanDatum::Window { lo, hi };
        d.validate()?;
        Ok(d)
    }

    pub fn cyclic(n: i64) -> Result<Self> {
        let d = CartanDatum::Cyclic { n };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            CartanDatum::Window { lo, hi } if lo > hi => {
                Err(Error::InvalidCartan(format!("window requires lo <= hi, got ({lo},{hi})")))
            }
            CartanDatum::Cyclic { n } if n < 1 => {
                Err(Error::InvalidCartan(format!("cyclic datum requires n >= 1, got {n}")))
            }
            _ => Ok(()),
        }
    }

    /// Reduces a node to its canonical representative; cyclic nodes go to `0..=n`.
    pub fn canonical(&self, i: Node) -> Node {
        match *self {
            CartanDatum::Cyclic { n } => i.rem_euclid(n + 1),
            _ => i,
        }
    }

    pub fn contains(&self, i: Node) -> bool {
        match *self {
            CartanDatum::Window { lo, hi } => (lo..=hi).contains(&i),
            _ => true,
        }
    }

    fn check(&self, i: Node) -> Result<Node> {
        if self.contains(i) {
            Ok(self.canonical(i))
        } else {
            Err(Error::InvalidNode { node: i, cartan: *self })
        }
    }

    /// Finite node list, or `None` for the infinite line.
    pub fn nodes(&self) -> Option<Vec<Node>> {
        match *self {
            CartanDatum::Infinite => None,
            CartanDatum::Window { lo, hi } => Some((lo..=hi).collect()),
            CartanDatum::Cyclic { n } => Some((0..=n).collect()),
        }
    }

    pub fn cartan_entry(&self, i: Node, j: Node) -> Result<i64> {
        let (i, j) = (self.check(i)?, self.check(j)?);
        if i == j {
            return Ok(2);
        }
        let adjacent = match *self {
            CartanDatum::Cyclic { n: 1 } => return Ok(-2),
            CartanDatum::Cyclic { n } => {
                let diff = (i - j).rem_euclid(n + 1);
                diff == 1 || diff == n
            }
            _ => (i - j).abs() == 1,
        };
        Ok(if adjacent { -1 } else { 0 })
    }

    /// `A_{i, a q^s}`.
    pub fn a_monomial(&self, i: Node, s: i64) -> Result<Monomial> {
        let i = self.check(i)?;
        let m = match *self {
            CartanDatum::Infinite => Monomial::from_factors([
                (i, s - 1, 1),
                (i, s + 1, 1),
                (i + 1, s, -1),
                (i - 1, s, -1),
            ]),
            CartanDatum::Window { lo, hi } => Monomial::from_factors(
                [(i, s - 1, 1), (i, s + 1, 1), (i + 1, s, -1), (i - 1, s, -1)]
                    .into_iter()
                    .filter(|&(node, _, _)| (lo..=hi).contains(&node)),
            ),
            // n = 1: both neighbours of r are the same node.
            CartanDatum::Cyclic { n: 1 } => {
                Monomial::from_factors([(i, s - 1, 1), (i, s + 1, 1), ((i + 1) % 2, s, -2)])
            }
            CartanDatum::Cyclic { n } => Monomial::from_factors([
                (i, s - 1, 1),
                (i, s + 1, 1),
                ((i + 1).rem_euclid(n + 1), s, -1),
                ((i - 1).rem_euclid(n + 1), s, -1),
            ]),
        };
        Ok(m)
    }

    /// The simple root `alpha_i` in the basis of fundamental weights.
    pub fn simple_root(&self, i: Node) -> Result<Weight> {
        let i = self.check(i)?;
        let mut w = Weight::zero();
        match *self {
            // Both neighbours of i are the same node.
            CartanDatum::Cyclic { n: 1 } => {
                w.add(i, 2);
                w.add((i + 1) % 2, -2);
            }
            CartanDatum::Infinite | CartanDatum::Cyclic { .. } => {
                for j in [i - 1, i, i + 1] {
                    let j = self.canonical(j);
                    w.add(j, self.cartan_entry(j, i)?);
                }
            }
            CartanDatum::Window { lo, hi } => {
                for j in (i - 1).max(lo)..=(i + 1).min(hi) {
                    w.add(j, self.cartan_entry(j, i)?);
                }
            }
        }
        Ok(w)
    }

    /// Translates a node index of the infinite line into this datum.
    pub fn fold_node(&self, i: Node) -> Node {
        self.canonical(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: Node, s: i64, e: i64) -> (Node, i64, i64) {
        (i, s, e)
    }

    #[test]
    fn entries() {
        assert_eq!(CartanDatum::Infinite.cartan_entry(5, 6).unwrap(), -1);
        assert_eq!(CartanDatum::Infinite.cartan_entry(6, 5).unwrap(), -1);
        assert_eq!(CartanDatum::Infinite.cartan_entry(5, 5).unwrap(), 2);
        assert_eq!(CartanDatum::Infinite.cartan_entry(5, 8).unwrap(), 0);
        let c3 = CartanDatum::cyclic(3).unwrap();
        assert_eq!(c3.cartan_entry(0, 3).unwrap(), -1);
        assert_eq!(c3.cartan_entry(0, 2).unwrap(), 0);
        assert_eq!(c3.cartan_entry(4, 0).unwrap(), 2);
        let c1 = CartanDatum::cyclic(1).unwrap();
        assert_eq!(c1.cartan_entry(0, 1).unwrap(), -2);
        assert_eq!(c1.cartan_entry(1, 0).unwrap(), -2);
        let c2 = CartanDatum::cyclic(2).unwrap();
        assert_eq!(c2.cartan_entry(0, 2).unwrap(), -1);
        assert_eq!(c2.cartan_entry(0, 1).unwrap(), -1);
    }

    #[test]
    fn window_rejects_outside_nodes() {
        let w = CartanDatum::window(0, 2).unwrap();
        assert!(matches!(w.cartan_entry(0, 3), Err(Error::InvalidNode { node: 3, .. })));
        assert!(w.a_monomial(-1, 0).is_err());
        assert!(CartanDatum::window(3, 2).is_err());
        assert!(CartanDatum::cyclic(0).is_err());
    }

    #[test]
    fn a_monomials() {
        assert_eq!(
            CartanDatum::Infinite.a_monomial(0, 0).unwrap(),
            Monomial::from_factors([y(0, -1, 1), y(0, 1, 1), y(1, 0, -1), y(-1, 0, -1)])
        );
        assert_eq!(
            CartanDatum::cyclic(1).unwrap().a_monomial(0, 0).unwrap(),
            Monomial::from_factors([y(0, -1, 1), y(0, 1, 1), y(1, 0, -2)])
        );
        assert_eq!(
            CartanDatum::window(0, 2).unwrap().a_monomial(0, 0).unwrap(),
            Monomial::from_factors([y(0, -1, 1), y(0, 1, 1), y(1, 0, -1)])
        );
        assert_eq!(
            CartanDatum::cyclic(3).unwrap().a_monomial(0, 2).unwrap(),
            Monomial::from_factors([y(0, 1, 1), y(0, 3, 1), y(1, 2, -1), y(3, 2, -1)])
        );
    }

    #[test]
    fn a_monomial_weight_is_cartan_column() {
        let data = [
            CartanDatum::Infinite,
            CartanDatum::cyclic(1).unwrap(),
            CartanDatum::cyclic(2).unwrap(),
            CartanDatum::cyclic(3).unwrap(),
            CartanDatum::window(-2, 2).unwrap(),
        ];
        for d in data {
            let nodes = d.nodes().unwrap_or_else(|| (-3..=3).collect());
            for &i in &nodes {
                let w = d.a_monomial(i, 7).unwrap().weight();
                for &j in &nodes {
                    assert_eq!(w.coeff(j), d.cartan_entry(j, i).unwrap(), "{d} i={i} j={j}");
                }
                assert_eq!(w, d.simple_root(i).unwrap());
            }
        }
    }

    #[test]
    fn cyclic_periodicity_and_translation() {
        for n in 1..=4 {
            let d = CartanDatum::cyclic(n).unwrap();
            for i in 0..=n {
                for s in -3..3 {
                    assert_eq!(d.a_monomial(i + n + 1, s).unwrap(), d.a_monomial(i, s).unwrap());
                    assert_eq!(d.a_monomial(i, s).unwrap().shift(5), d.a_monomial(i, s + 5).unwrap());
                }
            }
        }
    }

    #[test]
    fn serde_shape() {
        let j = serde_json::to_string(&CartanDatum::Window { lo: -1, hi: 3 }).unwrap();
        assert_eq!(j, r#"{"kind":"window","lo":-1,"hi":3}"#);
        assert_eq!(serde_json::to_string(&CartanDatum::Infinite).unwrap(), r#"{"kind":"infinite"}"#);
        let c: CartanDatum = serde_json::from_str(r#"{"kind":"cyclic","n":3}"#).unwrap();
        assert_eq!(c, CartanDatum::Cyclic { n: 3 });
    }
}
