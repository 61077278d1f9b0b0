use std::fmt;

use crate::C64;

/// Byte range in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Scalar(C64),
    Ident(String),
    Unit,
    /// Two or more factors, left to right.
    Product(Vec<Expr>),
    /// Two or more terms; the first is always `Sign::Plus`.
    Sum(Vec<(Sign, Expr)>),
    Adjoint(Box<Expr>),
}

/// A parsed expression. Equality ignores source spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Scalar(a), Scalar(b)) => a == b,
            (Ident(a), Ident(b)) => a == b,
            (Unit, Unit) => true,
            (Product(a), Product(b)) => a == b,
            (Sum(a), Sum(b)) => a == b,
            (Adjoint(a), Adjoint(b)) => a == b,
            _ => false,
        }
    }
}

fn write_real(f: &mut fmt::Formatter<'_>, x: f64) -> fmt::Result {
    // `{}` on f64 prints the shortest string that parses back to `x`.
    write!(f, "{x}")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Scalar(c) => {
                write!(f, "(")?;
                write_real(f, c.re)?;
                write!(f, "{}", if c.im.is_sign_negative() { "-" } else { "+" })?;
                write_real(f, c.im.abs())?;
                write!(f, "i)")
            }
            ExprKind::Ident(name) => write!(f, "{name}"),
            ExprKind::Unit => write!(f, "I"),
            ExprKind::Product(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    match x.kind {
                        ExprKind::Product(_) | ExprKind::Sum(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            ExprKind::Sum(terms) => {
                for (i, (sign, x)) in terms.iter().enumerate() {
                    match (i, sign) {
                        (0, _) => {}
                        (_, Sign::Plus) => write!(f, " + ")?,
                        (_, Sign::Minus) => write!(f, " - ")?,
                    }
                    match x.kind {
                        ExprKind::Sum(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            ExprKind::Adjoint(x) => write!(f, "adj({x})"),
        }
    }
}
