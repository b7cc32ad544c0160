//! Hand-rolled scanner and the three dialect parsers.

use crate::error::BuildError;
use crate::framework::Framework;
use crate::interop::{Eaf, Hoaf};
use crate::io::ParseError;

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => return,
            }
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Ok(name)
            }
            Some(c) => Err(self.error(format!("expected an identifier, found `{c}`"))),
            None => Err(self.error("expected an identifier, found end of input")),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }
}

struct Statement {
    keyword: String,
    args: Vec<String>,
    line: usize,
    column: usize,
}

impl Statement {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn arity(&self, want: usize) -> Result<(), ParseError> {
        if self.args.len() == want {
            Ok(())
        } else {
            Err(self.error(format!(
                "`{}` takes {want} name{}, found {}",
                self.keyword,
                if want == 1 { "" } else { "s" },
                self.args.len()
            )))
        }
    }
}

fn scan_statements(text: &str) -> Result<Vec<Statement>, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut out = Vec::new();
    loop {
        scanner.skip_trivia();
        if scanner.peek().is_none() {
            return Ok(out);
        }
        let (line, column) = (scanner.line, scanner.column);
        let keyword = scanner.ident()?;
        scanner.skip_trivia();
        scanner.expect('(')?;
        let mut args = Vec::new();
        loop {
            scanner.skip_trivia();
            args.push(scanner.ident()?);
            scanner.skip_trivia();
            match scanner.peek() {
                Some(',') => {
                    scanner.bump();
                }
                Some(')') => {
                    scanner.bump();
                    break;
                }
                Some(c) => return Err(scanner.error(format!("expected `,` or `)`, found `{c}`"))),
                None => return Err(scanner.error("expected `,` or `)`, found end of input")),
            }
        }
        scanner.skip_trivia();
        scanner.expect('.')?;
        out.push(Statement {
            keyword,
            args,
            line,
            column,
        });
    }
}

/// The statement (if any) to blame for a structural error raised after
/// scanning: the second declaration of a duplicated name, or the attack
/// statement introducing the offending attack.
fn locate(statements: &[Statement], error: &BuildError) -> (usize, usize) {
    let fallback = (1, 1);
    let position = |pred: &dyn Fn(&Statement) -> bool| {
        statements
            .iter()
            .find(|st| pred(st))
            .map(|st| (st.line, st.column))
            .unwrap_or(fallback)
    };
    match error {
        BuildError::DuplicateId(id) => {
            let mut seen = false;
            for st in statements {
                if st.args.first().map(String::as_str) == Some(id.as_str()) {
                    if seen {
                        return (st.line, st.column);
                    }
                    seen = true;
                }
            }
            fallback
        }
        BuildError::DanglingSource { attack, .. } | BuildError::DanglingTarget { attack, .. } => {
            position(&|st| {
                st.keyword == "att" && st.args.first().map(String::as_str) == Some(attack.as_str())
            })
        }
        BuildError::CyclicTargetChain(id) => position(&|st| {
            st.keyword == "att" && st.args.first().map(String::as_str) == Some(id.as_str())
        }),
        BuildError::InvalidId(_) => fallback,
    }
}

/// Parses a framework document (`arg/1` and `att/3` statements).
pub fn parse_afra(text: &str) -> Result<Framework, ParseError> {
    let statements = scan_statements(text)?;
    let mut arguments = Vec::new();
    let mut attacks = Vec::new();
    for st in &statements {
        match st.keyword.as_str() {
            "arg" => {
                st.arity(1)?;
                arguments.push(st.args[0].clone());
            }
            "att" => {
                st.arity(3)?;
                attacks.push((st.args[0].clone(), st.args[1].clone(), st.args[2].clone()));
            }
            other => {
                return Err(st.error(format!(
                    "unknown statement `{other}` (expected `arg` or `att`)"
                )))
            }
        }
    }
    Framework::new(arguments, attacks).map_err(|e| {
        let (line, column) = locate(&statements, &e);
        ParseError {
            line,
            column,
            message: e.to_string(),
        }
    })
}

/// Location of the last statement, for whole-document structure errors.
fn last_position(statements: &[Statement]) -> (usize, usize) {
    statements
        .last()
        .map(|st| (st.line, st.column))
        .unwrap_or((1, 1))
}

/// Parses an extended-framework document (`earg/1`, `eatt/2`, `edatt/3`).
pub fn parse_eaf(text: &str) -> Result<Eaf, ParseError> {
    let statements = scan_statements(text)?;
    let mut arguments = Vec::new();
    let mut attacks = Vec::new();
    let mut attack_attacks = Vec::new();
    for st in &statements {
        match st.keyword.as_str() {
            "earg" => {
                st.arity(1)?;
                arguments.push(st.args[0].clone());
            }
            "eatt" => {
                st.arity(2)?;
                attacks.push((st.args[0].clone(), st.args[1].clone()));
            }
            "edatt" => {
                st.arity(3)?;
                attack_attacks
                    .push((st.args[0].clone(), (st.args[1].clone(), st.args[2].clone())));
            }
            other => {
                return Err(st.error(format!(
                    "unknown statement `{other}` (expected `earg`, `eatt`, or `edatt`)"
                )))
            }
        }
    }
    Eaf::new(arguments, attacks, attack_attacks).map_err(|e| {
        let (line, column) = last_position(&statements);
        ParseError {
            line,
            column,
            message: e.to_string(),
        }
    })
}

/// Parses a higher-order document (`carg/1`, `hatt/1`, `hpair/2`).
/// Companions are derived from the core arguments, so `hpair` statements
/// refer to them by their `not_` names without declaring them.
pub fn parse_hoaf(text: &str) -> Result<Hoaf, ParseError> {
    let statements = scan_statements(text)?;
    let mut core = Vec::new();
    let mut attack_elems = Vec::new();
    let mut links = Vec::new();
    for st in &statements {
        match st.keyword.as_str() {
            "carg" => {
                st.arity(1)?;
                core.push(st.args[0].clone());
            }
            "hatt" => {
                st.arity(1)?;
                attack_elems.push(st.args[0].clone());
            }
            "hpair" => {
                st.arity(2)?;
                links.push((st.args[0].clone(), st.args[1].clone()));
            }
            other => {
                return Err(st.error(format!(
                    "unknown statement `{other}` (expected `carg`, `hatt`, or `hpair`)"
                )))
            }
        }
    }
    Hoaf::new(core, attack_elems, links).map_err(|e| {
        let (line, column) = last_position(&statements);
        ParseError {
            line,
            column,
            message: e.to_string(),
        }
    })
}
