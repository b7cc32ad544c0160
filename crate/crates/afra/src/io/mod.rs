//! Reading and writing the statement-based document formats.
//!
//! Documents are lists of `keyword(name, ...).` statements; `%` starts a
//! comment that runs to the end of the line, and whitespace is free-form.
//! Three dialects share the syntax:
//!
//! * frameworks: `arg(a).` and `att(id, source, target).`
//! * extended frameworks: `earg(a).`, `eatt(a, b).`, `edatt(c, a, b).`
//! * higher-order frameworks: `carg(a).`, `hatt(h).`, `hpair(u, v).`
//!
//! Parsers report one [`ParseError`] with a 1-based line and column; the
//! renderers in [`render`] write canonical documents that parse back to
//! the same value.

mod parse;
pub mod render;

use std::fmt;

pub use parse::{parse_afra, parse_eaf, parse_hoaf};

/// A syntax or structure error, located in the input text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line of the offending statement or token.
    pub line: usize,
    /// 1-based column of the offending statement or token.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}
