//! Exact margin-based voting theory.
//!
//! Profiles and margins ([`profile`], [`margin`], [`omg`]), tournament methods
//! ([`methods`]), enumeration of linearly edge-ordered tournaments ([`enumerate`]),
//! realization of margin targets and synthesis of voter-addition transitions
//! ([`realize`]), and axiom checkers with a mechanical impossibility check ([`axioms`]).

#![allow(clippy::needless_range_loop)]

pub mod audit;
pub mod axioms;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod margin;
pub mod methods;
pub mod omg;
pub mod profile;
pub mod rational;
pub mod realize;

pub use error::{Error, Result};
pub use margin::{margin, margin_lines, support, MarginLine, MarginMatrix};
pub use methods::{evaluate, Input, MethodId, WinnerSet};
pub use omg::{omg_equal, OrdinalMarginGraph};
pub use profile::{Alternative, Ballot, Profile};
