//! Rule-based reduction of unreduced words to canonical form.
//!
//! Three rules act on a single term `c · x_1 ⋯ x_n`:
//!
//! * **merge**: two adjacent letters of the same factor are replaced by
//!   their matrix product;
//! * **split**: a raw letter `m` becomes `(tr m / d) · e + (m - tr m / d)`,
//!   i.e. one term with the letter deleted and one with a traceless letter;
//! * **expand**: a traceless letter is expanded in its factor basis.
//!
//! A term with no redex consists of basis letters only, with no two
//! neighbours in the same factor. Which term and which redex is rewritten
//! next is delegated to a [`RewriteOrder`], so the confluence of the system
//! can be checked by running it under different orders.

use std::collections::BTreeMap;

use crate::{AlgebraError, BasisLetter, CMatrix, FreeAlgebra, FreeElement, Letter, Result, Word, C64};

/// Chooses among `n > 0` alternatives.
pub trait RewriteOrder {
    fn pick(&mut self, n: usize) -> usize;
}

/// Always rewrites the first pending term at its leftmost redex.
#[derive(Debug, Default, Clone, Copy)]
pub struct Leftmost;

impl RewriteOrder for Leftmost {
    fn pick(&mut self, _n: usize) -> usize {
        0
    }
}

#[derive(Debug, Clone)]
enum State {
    Raw(CMatrix),
    Traceless(CMatrix),
    Basis(u16),
}

#[derive(Debug, Clone)]
struct Mixed {
    factor: u32,
    state: State,
}

#[derive(Debug, Clone, Copy)]
enum Redex {
    Merge(usize),
    Split(usize),
    Expand(usize),
}

fn redexes(letters: &[Mixed]) -> Vec<Redex> {
    let mut out = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        match l.state {
            State::Raw(_) => out.push(Redex::Split(i)),
            State::Traceless(_) => out.push(Redex::Expand(i)),
            State::Basis(_) => {}
        }
        if i + 1 < letters.len() && letters[i + 1].factor == l.factor {
            out.push(Redex::Merge(i));
        }
    }
    out
}

fn matrix_of<'a>(alg: &'a FreeAlgebra, l: &'a Mixed) -> Result<std::borrow::Cow<'a, CMatrix>> {
    Ok(match &l.state {
        State::Raw(m) | State::Traceless(m) => std::borrow::Cow::Borrowed(m),
        State::Basis(k) => std::borrow::Cow::Borrowed(
            alg.letter_matrix(BasisLetter::new(l.factor, *k))?,
        ),
    })
}

pub(crate) fn reduce(
    alg: &FreeAlgebra,
    word: &[Letter],
    c: C64,
    order: &mut dyn RewriteOrder,
) -> Result<FreeElement> {
    let start: Vec<Mixed> = word
        .iter()
        .map(|l| Mixed {
            factor: l.factor,
            state: State::Raw(l.matrix.clone()),
        })
        .collect();
    let mut pending: Vec<(Vec<Mixed>, C64)> = vec![(start, c)];
    let mut done: BTreeMap<Word, C64> = BTreeMap::new();

    while !pending.is_empty() {
        let t = order.pick(pending.len()) % pending.len();
        let (mut letters, coeff) = pending.swap_remove(t);
        let rs = redexes(&letters);
        if rs.is_empty() {
            let w: Vec<BasisLetter> = letters
                .iter()
                .map(|l| match l.state {
                    State::Basis(k) => BasisLetter::new(l.factor, k),
                    _ => unreachable!("term without redex holds only basis letters"),
                })
                .collect();
            *done.entry(Word::new(w)).or_default() += coeff;
            continue;
        }
        match rs[order.pick(rs.len()) % rs.len()] {
            Redex::Merge(i) => {
                let p = matrix_of(alg, &letters[i])?.as_ref() * matrix_of(alg, &letters[i + 1])?.as_ref();
                let factor = letters[i].factor;
                letters.splice(i..i + 2, [Mixed { factor, state: State::Raw(p) }]);
                pending.push((letters, coeff));
            }
            Redex::Split(i) => {
                let spec = alg.factor(letters[i].factor)?;
                let m = match &letters[i].state {
                    State::Raw(m) => m.clone(),
                    _ => unreachable!(),
                };
                let d = spec.dim();
                let scalar = m.trace() / C64::from(d as f64);
                let mut traceless = m;
                for k in 0..d {
                    traceless[(k, k)] -= scalar;
                }
                if crate::max_abs(&traceless) > crate::STRUCTURE_TOL * 1e-3 {
                    let mut kept = letters.clone();
                    kept[i].state = State::Traceless(traceless);
                    pending.push((kept, coeff));
                }
                if scalar != C64::new(0.0, 0.0) {
                    letters.remove(i);
                    pending.push((letters, coeff * scalar));
                }
            }
            Redex::Expand(i) => {
                let spec = alg.factor(letters[i].factor)?;
                let t = match &letters[i].state {
                    State::Traceless(t) => t,
                    _ => unreachable!(),
                };
                for (k, ck) in spec.expand_traceless(t) {
                    let mut next = letters.clone();
                    next[i].state = State::Basis(k);
                    pending.push((next, coeff * ck));
                }
            }
        }
    }

    let out = FreeElement::from_map(done);
    if out.terms().any(|(w, _)| !w.is_reduced()) {
        return Err(AlgebraError::Malformed("reduction left an unreduced word".into()));
    }
    Ok(out)
}
