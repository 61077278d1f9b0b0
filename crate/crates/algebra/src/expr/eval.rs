use std::collections::BTreeMap;

use thiserror::Error;

use super::ast::{Expr, ExprKind, Sign, Span};
use crate::{AlgebraError, FreeAlgebra, FreeElement, C64};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound symbol {name}")]
    Unbound { name: String, span: Span },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Evaluates `ast` in `alg`, resolving identifiers through `symbols`.
pub fn eval_expr(
    alg: &FreeAlgebra,
    ast: &Expr,
    symbols: &BTreeMap<String, FreeElement>,
) -> Result<FreeElement, EvalError> {
    match &ast.kind {
        ExprKind::Scalar(c) => Ok(FreeElement::unit().scale(*c)),
        ExprKind::Unit => Ok(alg.unit()),
        ExprKind::Ident(name) => symbols.get(name).cloned().ok_or_else(|| EvalError::Unbound {
            name: name.clone(),
            span: ast.span,
        }),
        ExprKind::Product(factors) => {
            let mut acc = alg.unit();
            for f in factors {
                acc = alg.multiply(&acc, &eval_expr(alg, f, symbols)?)?;
            }
            Ok(acc)
        }
        ExprKind::Sum(terms) => {
            let mut acc = FreeElement::zero();
            for (sign, t) in terms {
                let v = eval_expr(alg, t, symbols)?;
                acc = match sign {
                    Sign::Plus => alg.add(&acc, &v),
                    Sign::Minus => alg.add(&acc, &alg.scale(C64::new(-1.0, 0.0), &v)),
                };
            }
            Ok(acc)
        }
        ExprKind::Adjoint(inner) => Ok(alg.star(&eval_expr(alg, inner, symbols)?)),
    }
}
