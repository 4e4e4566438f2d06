//! Exact-arithmetic workbench for action-type algebraic geometry over
//! finite group representations.
//!
//! The layers, bottom up:
//! - [`word`], [`ring`], [`module`]: free-group words, the group ring
//!   KF(Y) and the free module XKF(Y), all in canonical form;
//! - [`fox`]: augmentation, Fox derivatives, Taylor expansion and
//!   truncation modulo powers of the augmentation ideal;
//! - [`fpmat`], [`rep`]: exact F_p linear algebra and finite
//!   representations (V,G) with their group-algebra constructions;
//! - [`geometry`]: algebraic sets, closures, quasi-identities and the
//!   bounded equivalence refuter;
//! - [`operators`]: products, filtered products, subrepresentations and
//!   the acting-group quotient/inflation operators;
//! - [`parse`], [`repfile`]: text syntax and representation files.

pub mod error;
pub mod fox;
pub mod fpmat;
pub mod geometry;
pub mod module;
pub mod operators;
pub mod parse;
pub mod rep;
pub mod repfile;
pub mod ring;
pub mod scalar;
pub mod word;

pub use error::{Error, Result};
pub mod cli;
