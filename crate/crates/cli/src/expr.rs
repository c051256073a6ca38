//! Infix expressions over quote literals.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | atom
//! atom   := literal | '(' expr ')'
//! ```
//!
//! A literal containing `'` is quote notation; a bare `19` or `2.5` is
//! shorthand for `0'19` or `0'2.5`.

use adic_core::{Base, Error, QuoteNumber, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Lit(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if "+-*/()".contains(c) {
            out.push((i, Tok::Op(c)));
            chars.next();
        } else if c.is_ascii_alphanumeric() || c == '\'' || c == '.' {
            let mut lit = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '\'' || c == '.' {
                    lit.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((i, Tok::Lit(lit)));
        } else {
            return Err(Error::Syntax { offset: i, message: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    base: Base,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn expect_close(&mut self) -> Result<()> {
        if self.peek() == Some(&Tok::Op(')')) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Syntax { offset: self.offset(), message: "expected ')'".into() })
        }
    }

    fn expr(&mut self) -> Result<QuoteNumber> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QuoteNumber> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(op @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QuoteNumber> {
        if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<QuoteNumber> {
        let at = self.offset();
        match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect_close()?;
                Ok(v)
            }
            Some(Tok::Lit(s)) => {
                self.pos += 1;
                literal(&s, self.base).map_err(|e| match e {
                    Error::Syntax { offset, message } => Error::Syntax { offset: at + offset, message },
                    other => other,
                })
            }
            Some(Tok::Op(c)) => Err(Error::Syntax { offset: at, message: format!("unexpected {c:?}") }),
            None => Err(Error::Syntax { offset: at, message: "unexpected end of input".into() }),
        }
    }
}

/// A quote literal, or a plain number read as `0'N`.
pub fn literal(s: &str, base: Base) -> Result<QuoteNumber> {
    if s.contains('\'') {
        QuoteNumber::parse(s, base)
    } else {
        QuoteNumber::parse(&format!("0'{s}"), base).map_err(|e| match e {
            Error::Syntax { offset, message } => Error::Syntax { offset: offset.saturating_sub(2), message },
            other => other,
        })
    }
}

pub fn evaluate(src: &str, base: Base) -> Result<QuoteNumber> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), base };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::Syntax { offset: p.offset(), message: "trailing input".into() });
    }
    Ok(v)
}
