use std::collections::HashMap;

use causal_algebra::{BasisLetter, FreeAlgebra, FreeElement, Word};

use crate::StateResult;

/// All canonical words of length at most `max_len`, in canonical word
/// order, starting with the empty word.
///
/// Because the order is by length first, the words of length at most `k`
/// are a prefix of the list.
#[derive(Debug, Clone)]
pub struct WordBasis {
    max_len: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    prefix: Vec<usize>,
}

impl WordBasis {
    pub fn new(alg: &FreeAlgebra, max_len: usize) -> Self {
        let gens = alg.generators();
        let mut words = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        let mut prefix = vec![1];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in &gens {
                    if w.letters().last().is_none_or(|l| l.factor != g.factor) {
                        next.push(w.concat(&Word::new(vec![*g])));
                    }
                }
            }
            next.sort();
            words.extend(next.iter().cloned());
            prefix.push(words.len());
            layer = next;
        }
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        WordBasis { max_len, words, index, prefix }
    }

    /// An explicit list of reduced words, deduplicated and sorted. The
    /// truncation level is the longest word's length.
    pub fn from_words(mut words: Vec<Word>) -> Self {
        words.push(Word::empty());
        words.sort();
        words.dedup();
        let max_len = words.last().map_or(0, |w| w.len());
        let prefix = (0..=max_len)
            .map(|k| words.iter().filter(|w| w.len() <= k).count())
            .collect();
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        WordBasis { max_len, words, index, prefix }
    }

    /// `1 + Σ_{admissible factor sequences} Π (d_i² − 1)`.
    pub fn expected_len(alg: &FreeAlgebra, max_len: usize) -> usize {
        let sizes: Vec<(u32, usize)> = alg.factors().map(|f| (f.index(), f.basis_len())).collect();
        // ending[k] = number of reduced words of the current length ending in factor k
        let mut ending: Vec<usize> = sizes.iter().map(|&(_, n)| n).collect();
        let mut total = 1;
        for len in 1..=max_len {
            if len > 1 {
                let sum: usize = ending.iter().sum();
                ending = ending
                    .iter()
                    .zip(&sizes)
                    .map(|(&e, &(_, n))| (sum - e) * n)
                    .collect();
            }
            total += ending.iter().sum::<usize>();
        }
        total
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Number of words of length at most `k`.
    pub fn count_up_to(&self, k: usize) -> usize {
        self.prefix[k.min(self.max_len)]
    }

    /// Coordinates of `a` in this basis, as sparse `(index, coefficient)`
    /// pairs; `None` if `a` has a word outside the basis.
    pub fn coordinates(&self, a: &FreeElement) -> Option<Vec<(usize, causal_algebra::C64)>> {
        a.terms().map(|(w, c)| self.index_of(w).map(|k| (k, *c))).collect()
    }

    /// `letter · w` for every word of length at most `max_len − 1`.
    pub(crate) fn left_products(
        &self,
        alg: &FreeAlgebra,
        letter: BasisLetter,
    ) -> StateResult<Vec<FreeElement>> {
        let b = FreeElement::term(Word::new(vec![letter]), causal_algebra::C64::new(1.0, 0.0));
        let n = self.count_up_to(self.max_len.saturating_sub(1));
        self.words[..n]
            .iter()
            .map(|w| Ok(alg.multiply(&b, &FreeElement::term(w.clone(), causal_algebra::C64::new(1.0, 0.0)))?))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_formula() {
        for dims in [&[(1, 2), (2, 2)][..], &[(1, 2), (2, 3), (3, 1)], &[(1, 3)]] {
            let alg = FreeAlgebra::gell_mann(dims).unwrap();
            for l in 0..=3 {
                let b = WordBasis::new(&alg, l);
                assert_eq!(b.len(), WordBasis::expected_len(&alg, l), "{dims:?} L={l}");
                assert_eq!(b.words()[0], Word::empty());
                assert!(b.words().windows(2).all(|w| w[0] < w[1]));
                assert!(b.words().iter().all(|w| w.is_reduced()));
            }
        }
        let alg = FreeAlgebra::gell_mann(&[(1, 2), (2, 2)]).unwrap();
        let b = WordBasis::new(&alg, 2);
        assert_eq!((b.len(), b.count_up_to(0), b.count_up_to(1)), (25, 1, 7));
    }
}
