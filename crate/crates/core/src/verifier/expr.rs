//! Boolean predicate expressions: names combined with `!`, `&`, `|` and parentheses.
//!
//! `!` binds tighter than `&`, which binds tighter than `|`. Names are the
//! [`Property`] names plus `poset`, which always holds. Lattice-only names
//! evaluate to false on posets that are not lattices.

use std::collections::HashMap;
use std::fmt;

use crate::error::{OrderError, Result};
use crate::lattice::{as_lattice, FiniteLattice};
use crate::poset::FinitePoset;
use crate::properties::Property;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Poset,
    Prop(Property),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '!' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Token::Name(name)));
                continue;
            }
            other => {
                return Err(OrderError::Parse {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(OrderError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.at += 1;
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.at += 1;
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Token::Not) => {
                self.at += 1;
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            Some(Token::Open) => {
                self.at += 1;
                let inner = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return self.error("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(Token::Name(name)) => {
                let e = if name == "poset" {
                    Expr::Poset
                } else if let Some(p) = Property::from_name(&name) {
                    Expr::Prop(p)
                } else {
                    return self.error(format!("unknown predicate `{name}`"));
                };
                self.at += 1;
                Ok(e)
            }
            Some(t) => self.error(format!("unexpected token {t:?}")),
            None => self.error("unexpected end of expression"),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut parser = Parser {
            tokens: tokenize(src)?,
            at: 0,
            end: src.len(),
        };
        let e = parser.or()?;
        if parser.at != parser.tokens.len() {
            return parser.error("trailing input");
        }
        Ok(e)
    }

    /// Evaluates on `p`, computing each predicate at most once.
    pub fn eval(&self, p: &FinitePoset) -> Result<bool> {
        let lattice = as_lattice(p).ok();
        let mut cache = HashMap::new();
        self.eval_with(p, lattice.as_ref(), &mut cache)
    }

    fn eval_with(
        &self,
        p: &FinitePoset,
        lattice: Option<&FiniteLattice>,
        cache: &mut HashMap<Property, bool>,
    ) -> Result<bool> {
        Ok(match self {
            Expr::Poset => true,
            Expr::Prop(prop) => {
                if let Some(&v) = cache.get(prop) {
                    v
                } else {
                    let v = prop.evaluate(p, lattice)?.is_some_and(|v| v.holds);
                    cache.insert(*prop, v);
                    v
                }
            }
            Expr::Not(e) => !e.eval_with(p, lattice, cache)?,
            Expr::And(a, b) => a.eval_with(p, lattice, cache)? && b.eval_with(p, lattice, cache)?,
            Expr::Or(a, b) => a.eval_with(p, lattice, cache)? || b.eval_with(p, lattice, cache)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Poset => f.write_str("poset"),
            Expr::Prop(p) => f.write_str(p.name()),
            Expr::Not(e) => write!(f, "!{e}"),
            Expr::And(a, b) => write!(f, "({a} & {b})"),
            Expr::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}
