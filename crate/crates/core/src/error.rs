use thiserror::Error;

use crate::cartan::{CartanDatum, Node};
use crate::monomial::Monomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} is not a node of {cartan}")]
    InvalidNode { node: Node, cartan: CartanDatum },

    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("monomial {monomial} has a negative exponent at node {node}")]
    NotIDominant { node: Node, monomial: Monomial },

    #[error("monomial {0} is not dominant")]
    NotDominant(Monomial),

    #[error("character has no highest monomial, depth is undefined")]
    MissingHighest,

    #[error("monomial {monomial} is not the highest monomial times A-inverses")]
    NoDepth { monomial: Monomial },

    #[error("expected a character over {expected}, found {found}")]
    WrongCartan { expected: String, found: CartanDatum },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("malformed document: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidNode { .. } => "invalid_node",
            Error::InvalidCartan(_) => "invalid_cartan",
            Error::Overflow(_) => "overflow",
            Error::NotIDominant { .. } => "not_i_dominant",
            Error::NotDominant(_) => "not_dominant",
            Error::MissingHighest => "missing_highest",
            Error::NoDepth { .. } => "no_depth",
            Error::WrongCartan { .. } => "wrong_cartan",
            Error::Generation(_) => "generation",
            Error::Decomposition(_) => "decomposition",
            Error::Parse(_) => "parse",
        }
    }
}
