use std::collections::BTreeMap;

use causal_algebra::expr::{eval_expr, parse, Expr, ExprKind, Sign, Span};
use causal_algebra::{gell_mann_basis, FreeAlgebra, FreeElement, C64, EQ_TOL};
use proptest::prelude::*;

const CORPUS: &[&str] = &[
    "I",
    "x",
    "x1",
    "y2",
    "_tmp",
    "adj(x)",
    "adj(x*y)",
    "adj(adj(x))",
    "(0.5+0.5i)*x1*y2 + I",
    "x + y",
    "x - y",
    "x - y - z",
    "x - (y - z)",
    "(x - y) - z",
    "x*y*z",
    "x*(y*z)",
    "(x*y)*z",
    "a + b*c",
    "(a + b)*c",
    "a*(b + c)",
    "a*b + c*d",
    "2",
    "-2",
    "i",
    "-i",
    "1i",
    "2.5e-3+0i",
    "1e3",
    "1E+3-2i",
    "0.125-0.25i",
    "-1-1i",
    "3.",
    "2*x",
    "-2*x",
    "i*x*y",
    "(1+2i)*adj(x)",
    "adj((1+2i)*x)",
    "adj(x + y)*z",
    "adj(I)",
    "I*I + I",
    "x*adj(x)",
    "adj(x)*x - I",
    "(((x)))",
    "((x + y))*((z))",
    "x + (y + z)",
    "(x + y) + z",
    "x*y*z*w + x*y - z*w",
    "2 + 3",
    "2+3i + 4",
    "2 +3i",
    "adj(adj(x*y) + y*x)",
    "x\n  + y\n  * z",
    "x_1*X_2 - adj(y_3)",
    "0.5*(x + adj(x))",
    "-0.5i*(x - adj(x))",
];

#[test]
fn corpus_round_trips_through_pretty_printing() {
    assert!(CORPUS.len() >= 50);
    for src in CORPUS {
        let ast = parse(src).unwrap_or_else(|e| panic!("{src:?}: {e}"));
        let printed = ast.to_string();
        let again = parse(&printed).unwrap_or_else(|e| panic!("{src:?} -> {printed:?}: {e}"));
        assert_eq!(again, ast, "{src:?} printed as {printed:?}");
        assert_eq!(again.to_string(), printed, "printing is not a fixpoint for {src:?}");
    }
}

fn ident(n: &str) -> Expr {
    Expr::new(ExprKind::Ident(n.into()), Span::default())
}

fn product(f: Vec<Expr>) -> Expr {
    Expr::new(ExprKind::Product(f), Span::default())
}

fn sum(t: Vec<(Sign, Expr)>) -> Expr {
    Expr::new(ExprKind::Sum(t), Span::default())
}

#[test]
fn products_bind_tighter_than_sums() {
    assert_eq!(
        parse("a+b*c").unwrap(),
        sum(vec![(Sign::Plus, ident("a")), (Sign::Plus, product(vec![ident("b"), ident("c")]))])
    );
    assert_eq!(
        parse("a*b-c").unwrap(),
        sum(vec![(Sign::Plus, product(vec![ident("a"), ident("b")])), (Sign::Minus, ident("c"))])
    );
    assert_eq!(
        parse("(a+b)*c").unwrap(),
        product(vec![sum(vec![(Sign::Plus, ident("a")), (Sign::Plus, ident("b"))]), ident("c")])
    );
}

#[test]
fn whitespace_separates_scalars_from_sums() {
    let lit = parse("2+3i").unwrap();
    assert!(matches!(lit.kind, ExprKind::Scalar(c) if c == C64::new(2.0, 3.0)));
    let s = parse("2 + 3i").unwrap();
    assert!(matches!(s.kind, ExprKind::Sum(ref t) if t.len() == 2));
}

fn arb_scalar() -> impl Strategy<Value = C64> {
    let part = prop_oneof![
        Just(0.0),
        Just(1.0),
        -1e3f64..1e3,
        (-20i32..20).prop_map(|k| 2f64.powi(k)),
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
    ];
    (part.clone(), part).prop_map(|(re, im)| C64::new(re, im))
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        arb_scalar().prop_map(|c| Expr::new(ExprKind::Scalar(c), Span::default())),
        prop::sample::select(vec!["x", "y", "z1", "u_v", "adjx", "In"]).prop_map(ident),
        Just(Expr::new(ExprKind::Unit, Span::default())),
    ];
    leaf.prop_recursive(4, 32, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(product),
            (inner.clone(), prop::collection::vec((any::<bool>(), inner.clone()), 1..3)).prop_map(
                |(first, rest)| {
                    let mut t = vec![(Sign::Plus, first)];
                    t.extend(
                        rest.into_iter()
                            .map(|(m, e)| (if m { Sign::Minus } else { Sign::Plus }, e)),
                    );
                    sum(t)
                }
            ),
            inner.prop_map(|e| Expr::new(ExprKind::Adjoint(Box::new(e)), Span::default())),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn generated_asts_round_trip(ast in arb_expr()) {
        let printed = ast.to_string();
        let back = parse(&printed).map_err(|e| TestCaseError::fail(format!("{printed:?}: {e}")))?;
        prop_assert_eq!(back, ast);
    }
}

fn setup() -> (FreeAlgebra, BTreeMap<String, FreeElement>) {
    let alg = FreeAlgebra::gell_mann(&[(1, 2), (2, 3)]).unwrap();
    let p = gell_mann_basis(2);
    let q = gell_mann_basis(3);
    let mut s = BTreeMap::new();
    s.insert("x".into(), alg.embed(1, &p[0]).unwrap());
    s.insert("y".into(), alg.embed(1, &(&p[1] + &p[2])).unwrap());
    s.insert("z1".into(), alg.embed(2, &q[4]).unwrap());
    s.insert("u_v".into(), alg.embed(2, &(&q[0] * C64::new(0.0, 1.0))).unwrap());
    s.insert("adjx".into(), alg.embed(1, &p[2]).unwrap().add(&alg.embed(2, &q[7]).unwrap()));
    s.insert("In".into(), alg.unit().scale(C64::new(0.5, -0.5)));
    (alg, s)
}

fn bounded(ast: &Expr) -> bool {
    fn len(e: &Expr) -> usize {
        match &e.kind {
            ExprKind::Product(f) => f.iter().map(len).sum(),
            ExprKind::Sum(t) => t.iter().map(|(_, e)| len(e)).max().unwrap_or(0),
            ExprKind::Adjoint(e) => len(e),
            ExprKind::Ident(_) => 1,
            _ => 0,
        }
    }
    len(ast) <= 6
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Each constructor maps to the matching algebra operation.
    #[test]
    fn eval_commutes_with_constructors(ast in arb_expr().prop_filter("within cap", bounded)) {
        let (alg, s) = setup();
        let got = eval_expr(&alg, &ast, &s).unwrap();
        let expect = match &ast.kind {
            ExprKind::Scalar(c) => alg.unit().scale(*c),
            ExprKind::Unit => alg.unit(),
            ExprKind::Ident(n) => s[n].clone(),
            ExprKind::Product(f) => f.iter().fold(alg.unit(), |acc, e| {
                alg.multiply(&acc, &eval_expr(&alg, e, &s).unwrap()).unwrap()
            }),
            ExprKind::Sum(t) => t.iter().fold(FreeElement::zero(), |acc, (sign, e)| {
                let v = eval_expr(&alg, e, &s).unwrap();
                match sign {
                    Sign::Plus => acc.add(&v),
                    Sign::Minus => acc.sub(&v),
                }
            }),
            ExprKind::Adjoint(e) => eval_expr(&alg, e, &s).unwrap().star(),
        };
        let scale = 1.0 + expect.terms().map(|(_, c)| c.norm()).fold(0.0, f64::max);
        prop_assert!(got.max_abs_diff(&expect) <= EQ_TOL * scale);

        // printing does not change the value
        let again = eval_expr(&alg, &parse(&ast.to_string()).unwrap(), &s).unwrap();
        prop_assert!(again.max_abs_diff(&got) <= EQ_TOL * scale);
    }
}
