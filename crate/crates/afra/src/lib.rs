//! Abstract argumentation with recursive attacks.
//!
//! This crate models frameworks in which attacks are first-class,
//! named elements that can themselves be attacked, and answers
//! acceptability questions about them:
//!
//! * [`framework`] — the core model: arguments, named attacks, and
//!   validated construction.
//! * [`defeat`] — the direct/indirect defeat relation derived from the
//!   attack structure.
//! * [`semantics`] — conflict-freeness, acceptability, and the grounded,
//!   complete, preferred, stable, semi-stable, and ideal extensions over
//!   mixed sets of arguments and attacks.
//! * [`dung`] — classical argument-only frameworks, the flattening of a
//!   framework into its defeat graph, and the lift correspondence for
//!   frameworks without nested attacks.
//! * [`interop`] — translations to and from two neighbouring models:
//!   extended frameworks that attack unnamed attack pairs, and
//!   higher-order frameworks that reify attacks through companion
//!   arguments.
//! * [`oracle`] — a deliberately naive reference solver for
//!   cross-checking the optimised path.
//! * [`io`] — statement-based document parsing and canonical text, JSON,
//!   and dot output.

pub mod defeat;
pub mod dung;
mod error;
pub mod framework;
pub mod interop;
pub mod io;
pub mod oracle;
pub mod semantics;

pub use error::{BuildError, SolveError};
pub use framework::{Attack, ElementId, ElementKind, ElementRef, ElementSet, Framework};
pub use semantics::{ExtensionSet, Semantics, SolveConfig};
