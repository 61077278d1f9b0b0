use std::fmt;

use super::ast::{Expr, ExprKind, Sign, Span};
use super::lexer::{tokenize, Tok, Token};
use crate::C64;

/// Syntax error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn locate(src: &str, at: usize) -> (usize, usize) {
    let before = &src[..at.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src).map_err(|e| {
        let (line, col) = locate(src, e.at);
        ParseError { line, col, message: e.message }
    })?;
    let mut p = Parser { src, tokens, pos: 0 };
    let e = p.expr()?;
    match p.peek().tok {
        Tok::Eof => Ok(e),
        _ => Err(p.error_here("unexpected trailing input")),
    }
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Token {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: usize, message: impl Into<String>) -> ParseError {
        let (line, col) = locate(self.src, at);
        ParseError { line, col, message: message.into() }
    }

    fn error_here(&self, message: &str) -> ParseError {
        let t = self.peek();
        let found = match &t.tok {
            Tok::Eof => "end of input".to_string(),
            _ => format!("'{}'", &self.src[t.span.start..t.span.end]),
        };
        self.error_at(t.span.start, format!("{message}, found {found}"))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump().span)
        } else {
            Err(self.error_here(&format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let first = self.term()?;
        let mut span = first.span;
        let mut terms = vec![(Sign::Plus, first)];
        loop {
            let sign = match self.peek().tok {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
            let t = self.term()?;
            span = span.join(t.span);
            terms.push((sign, t));
        }
        if terms.len() == 1 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::new(ExprKind::Sum(terms), span))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let first = self.factor()?;
        let mut span = first.span;
        let mut factors = vec![first];
        while self.peek().tok == Tok::Star {
            self.bump();
            let f = self.factor()?;
            span = span.join(f.span);
            factors.push(f);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(Expr::new(ExprKind::Product(factors), span))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Minus => match self.peek_at(1).tok {
                Tok::Real(_) | Tok::Imag(_) => {
                    self.bump();
                    self.scalar(true, t.span.start)
                }
                _ => Err(self.error_at(
                    t.span.start,
                    "'-' in factor position must precede a numeric literal",
                )),
            },
            Tok::Real(_) | Tok::Imag(_) => self.scalar(false, t.span.start),
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::new(ExprKind::Ident(name), t.span))
            }
            Tok::Unit => {
                self.bump();
                Ok(Expr::new(ExprKind::Unit, t.span))
            }
            Tok::Adj => {
                self.bump();
                self.expect(Tok::LParen, "'(' after adj")?;
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "')'")?;
                Ok(Expr::new(
                    ExprKind::Adjoint(Box::new(inner)),
                    Span::new(t.span.start, close.end),
                ))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error_here("expected an operand")),
        }
    }

    /// A real or imaginary literal, optionally followed without whitespace
    /// by a signed imaginary part.
    fn scalar(&mut self, negate: bool, start: usize) -> Result<Expr, ParseError> {
        let lit = self.bump();
        let sign = if negate { -1.0 } else { 1.0 };
        let mut value = match lit.tok {
            Tok::Real(x) => C64::new(sign * x, 0.0),
            Tok::Imag(y) => C64::new(0.0, sign * y),
            _ => unreachable!("caller checked for a literal"),
        };
        let mut end = lit.span.end;
        if matches!(lit.tok, Tok::Real(_)) {
            let op = self.peek().clone();
            let im = self.peek_at(1).clone();
            let adjacent = op.span.start == end && im.span.start == op.span.end;
            if let (true, Tok::Plus | Tok::Minus, Tok::Imag(y)) = (adjacent, &op.tok, &im.tok) {
                self.bump();
                self.bump();
                value.im = if op.tok == Tok::Minus { -y } else { *y };
                end = im.span.end;
            }
        }
        Ok(Expr::new(ExprKind::Scalar(value), Span::new(start, end)))
    }
}
