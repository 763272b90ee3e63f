//! Propositional formulas shared by the three semantics.
//!
//! Grammar (EBNF), with `->` right-associative and `!`/`~` binding tightest:
//!
//! ```text
//! formula := impl
//! impl    := or ("->" impl)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := ("~" | "!") unary | "(" formula ")" | "top" | "bot" | NAME
//! ```
//!
//! The same formula can mean three different things — that is the point.
//! Which connectives are allowed, and what they do, is decided at evaluation
//! time by the selected semantics (see [`crate::context`]).

use std::fmt;

/// Abstract syntax tree of a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Atom(String),
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `~`, the pseudo-negation (quantum orthocomplement / weak negation).
    WeakNeg(Box<Formula>),
    /// `!`, the classical set complement.
    ClassicalNeg(Box<Formula>),
    /// `->`, the weak-Heyting implication (material in classical semantics).
    Implies(Box<Formula>, Box<Formula>),
}

/// Syntax error with its byte offset in the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Top,
    Bot,
    And,
    Or,
    Tilde,
    Bang,
    Arrow,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '&' => {
                out.push((pos, Token::And));
                pos += 1;
            }
            '|' => {
                out.push((pos, Token::Or));
                pos += 1;
            }
            '~' => {
                out.push((pos, Token::Tilde));
                pos += 1;
            }
            '!' => {
                out.push((pos, Token::Bang));
                pos += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                pos += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                pos += 1;
            }
            '-' => {
                if bytes.get(pos + 1) == Some(&b'>') {
                    out.push((pos, Token::Arrow));
                    pos += 2;
                } else {
                    return Err(ParseError {
                        offset: pos,
                        message: "expected `->`".to_string(),
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = pos;
                while pos < bytes.len() {
                    let c = bytes[pos] as char;
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        pos += 1;
                    } else {
                        break;
                    }
                }
                let word = &text[start..pos];
                let token = match word {
                    "top" => Token::Top,
                    "bot" => Token::Bot,
                    _ => Token::Name(word.to_string()),
                };
                out.push((start, token));
            }
            other => {
                return Err(ParseError {
                    offset: pos,
                    message: format!("unknown token `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(o, _)| *o)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        t
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Token::Arrow) {
            self.bump();
            let rhs = self.implication()?; // right-associative
            Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            let rhs = self.conjunction()?;
            acc = Formula::Or(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            let rhs = self.unary()?;
            acc = Formula::And(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Tilde) => {
                self.bump();
                Ok(Formula::WeakNeg(Box::new(self.unary()?)))
            }
            Some(Token::Bang) => {
                self.bump();
                Ok(Formula::ClassicalNeg(Box::new(self.unary()?)))
            }
            Some(Token::LParen) => {
                self.bump();
                let inner = self.implication()?;
                if self.peek() == Some(&Token::RParen) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.error("expected `)`"))
                }
            }
            Some(Token::Top) => {
                self.bump();
                Ok(Formula::Top)
            }
            Some(Token::Bot) => {
                self.bump();
                Ok(Formula::Bot)
            }
            Some(Token::Name(_)) => {
                let Some(Token::Name(name)) = self.bump() else { unreachable!() };
                Ok(Formula::Atom(name))
            }
            _ => Err(self.error("expected a formula")),
        }
    }
}

/// Parse a formula; errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, cursor: 0, end: text.len() };
    let formula = parser.implication()?;
    if parser.peek().is_some() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(formula)
}

impl Formula {
    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 0,
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::WeakNeg(..) | Formula::ClassicalNeg(..) => 3,
            Formula::Atom(_) | Formula::Top | Formula::Bot => 4,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let mine = self.precedence();
        let needs_parens = mine < parent;
        if needs_parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Atom(name) => write!(f, "{name}")?,
            Formula::Top => write!(f, "top")?,
            Formula::Bot => write!(f, "bot")?,
            Formula::And(a, b) => {
                a.write(f, mine)?;
                write!(f, " & ")?;
                b.write(f, mine + 1)?;
            }
            Formula::Or(a, b) => {
                a.write(f, mine)?;
                write!(f, " | ")?;
                b.write(f, mine + 1)?;
            }
            Formula::Implies(a, b) => {
                // Right-associative: the left child needs strictly higher
                // binding, the right child may be another implication.
                a.write(f, mine + 1)?;
                write!(f, " -> ")?;
                b.write(f, mine)?;
            }
            Formula::WeakNeg(a) => {
                write!(f, "~")?;
                a.write(f, mine)?;
            }
            Formula::ClassicalNeg(a) => {
                write!(f, "!")?;
                a.write(f, mine)?;
            }
        }
        if needs_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The canonical printer; `parse(format!("{f}")) == f` for every AST.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}
