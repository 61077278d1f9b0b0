use std::collections::BTreeMap;
use std::fmt;

use crate::{Word, C64, PRUNE_TOL};

/// Element of the free product algebra in canonical form: a map from
/// reduced basis words to nonzero complex coefficients.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FreeElement {
    terms: BTreeMap<Word, C64>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    /// The unit `e`: the empty word with coefficient 1.
    pub fn unit() -> Self {
        Self::term(Word::empty(), C64::new(1.0, 0.0))
    }

    pub fn term(word: Word, coeff: C64) -> Self {
        let mut e = FreeElement::zero();
        e.accumulate(word, coeff);
        e.prune();
        e
    }

    pub(crate) fn from_map(terms: BTreeMap<Word, C64>) -> Self {
        let mut e = FreeElement { terms };
        e.prune();
        e
    }

    pub(crate) fn accumulate(&mut self, word: Word, coeff: C64) {
        *self.terms.entry(word).or_insert(C64::new(0.0, 0.0)) += coeff;
    }

    pub(crate) fn prune(&mut self) {
        self.terms.retain(|_, c| c.norm() >= PRUNE_TOL);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> C64 {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), *c);
        }
        out.prune();
        out
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: C64) -> FreeElement {
        let mut out = FreeElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        };
        out.prune();
        out
    }

    /// The involution: reverses every word and conjugates coefficients.
    /// Basis letters are hermitian, so no letter changes.
    pub fn star(&self) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.conj()))
                .collect(),
        }
    }

    /// Entrywise comparison of the term maps.
    pub fn approx_eq(&self, other: &FreeElement, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn max_abs_diff(&self, other: &FreeElement) -> f64 {
        let mut worst: f64 = 0.0;
        for (w, c) in &self.terms {
            worst = worst.max((c - other.coefficient(w)).norm());
        }
        for (w, c) in &other.terms {
            if !self.terms.contains_key(w) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i){}", c.re, c.im, w)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn vector_space_laws() {
        let a = FreeElement::term(Word::letter(1, 0), c(1.0, 2.0))
            .add(&FreeElement::term(Word::letter(2, 1), c(-0.5, 0.0)));
        assert!(a.add(&a.scale(c(-1.0, 0.0))).is_zero());
        assert!(a.scale(c(0.0, 0.0)).is_zero());
        assert_eq!(
            FreeElement::unit().add(&FreeElement::unit()),
            FreeElement::term(Word::empty(), c(2.0, 0.0))
        );
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn pruning_drops_tiny_coefficients() {
        let a = FreeElement::term(Word::letter(1, 0), c(1e-14, 0.0));
        assert!(a.is_zero());
    }

    #[test]
    fn star_reverses_and_conjugates() {
        let w = Word::new(vec![crate::BasisLetter::new(1, 0), crate::BasisLetter::new(2, 1)]);
        let a = FreeElement::term(w.clone(), c(0.0, 1.0));
        let s = a.star();
        assert_eq!(s.coefficient(&w.reversed()), c(0.0, -1.0));
        assert_eq!(s.star(), a);
        assert_eq!(FreeElement::unit().star(), FreeElement::unit());
    }

    #[test]
    fn approx_eq_accounts_for_missing_terms() {
        let a = FreeElement::term(Word::letter(1, 0), c(1.0, 0.0));
        let b = a.add(&FreeElement::term(Word::letter(1, 1), c(1e-11, 0.0)));
        assert!(a.approx_eq(&b, 1e-10));
        assert!(!a.approx_eq(&FreeElement::zero(), 1e-10));
    }
}
