//! Exact algebra: finite groups and their regular representations,
//! abelian characters, integer polynomials, cyclotomic quotient rings and a
//! division-free characteristic polynomial.

mod berkowitz;
mod cyclo;
mod group;
mod poly;

pub use berkowitz::{berkowitz_charpoly, Ring};
pub use cyclo::{cyclotomic_poly, CycloElem, CycloRing};
pub use group::{characters, perm_matrix, Character, GroupElement, GroupSpec};
pub use poly::IntPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("element {element} is not in group {group}")]
    ElementNotInGroup { element: String, group: String },
    #[error("cyclotomic moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("cannot parse {what} `{text}`: {reason}")]
    Parse { what: &'static str, text: String, reason: String },
}
