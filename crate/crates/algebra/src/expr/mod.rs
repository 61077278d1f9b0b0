//! A small expression language for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := scalar | ident | 'I' | 'adj' '(' expr ')' | '(' expr ')'
//! scalar := '-'? real (('+' | '-') imag)? | '-'? imag
//! real   := digits ('.' digits?)? (('e' | 'E') ('+' | '-')? digits)?
//! imag   := real? 'i'
//! ident  := [A-Za-z_][A-Za-z0-9_]*   (except 'I', 'i', 'adj')
//! ```
//!
//! A complex literal such as `0.5+2i` must be written without whitespace
//! around the inner sign; `0.5 + 2i` is a sum of two scalars. Products are
//! left-associative and bind tighter than sums. There is no implicit
//! multiplication.

mod ast;
mod eval;
mod lexer;
mod parser;

pub use ast::{Expr, ExprKind, Sign, Span};
pub use eval::{eval_expr, EvalError};
pub use parser::{parse, ParseError};
