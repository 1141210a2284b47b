//! q-characters of Kirillov-Reshetikhin modules over the doubly infinite
//! type-A diagram, their folding onto cyclic (toroidal) type A, and a
//! checker for the characterization that pins such characters down.
//!
//! The main entry points:
//!
//! - [`tableaux::kr_qcharacter`] sums tableau monomials, either over a
//!   finite window or up to a depth over the infinite line;
//! - [`monomial::fold_qcharacter`] relabels nodes modulo `n + 1`;
//! - [`fm::verify_characterization`] checks ring membership at every node
//!   and uniqueness of the dominant monomial;
//! - [`fm::fm_generate`] builds the character of a given dominant highest
//!   monomial directly from that characterization.

pub mod cartan;
pub mod cli;
pub mod error;
pub mod fm;
pub mod monomial;
pub mod render;
pub mod sl2;
pub mod tableaux;

pub use cartan::{CartanDatum, Node};
pub use error::{Error, Result};
pub use fm::{decompose_into_simples, fm_generate, verify_characterization, verify_ki, Decomposition, Verdict};
pub use monomial::{depth_of, fold_qcharacter, Monomial, QCharacter, RootContent, Weight};
pub use sl2::{i_expansion, string_decompose, string_expansion, QString};
pub use tableaux::{enumerate_by_depth, enumerate_window, kr_qcharacter, KrDescriptor, KrMode, Tableau};
