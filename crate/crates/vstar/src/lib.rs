//! Computational tools for unitary subgroups of modular group algebras.
//!
//! `vstar` builds group algebras FG of finite 2-groups over fields GF(2^k)
//! of characteristic two, enumerates the unitary subgroup of their
//! normalized units (those u with u* = u^-1 under the classical involution),
//! and computes its order by brute force, by closed-form formulas, or by a
//! recursive reduction through central quotients. It also separates
//! non-isomorphic groups through invariants of the unitary subgroup.
//!
//! Start with the runnable examples (`cargo run --example order16_table`) or
//! the `vstar` binary (`vstar order --group SD16 --field 1`).

pub mod algebra;
pub mod error;
pub mod gf2k;
pub mod group;
pub mod linalg;

pub use error::{Error, Result};
