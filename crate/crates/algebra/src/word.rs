use std::cmp::Ordering;
use std::fmt;

use crate::CMatrix;

/// A basis letter: the `index`-th traceless basis matrix of factor `factor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLetter {
    pub factor: u32,
    pub index: u16,
}

impl BasisLetter {
    pub fn new(factor: u32, index: u16) -> Self {
        BasisLetter { factor, index }
    }
}

impl fmt::Display for BasisLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.factor, self.index)
    }
}

/// A word of basis letters. The empty word is the unit.
///
/// Words are ordered by length, then by their factor sequence, then by
/// their basis index sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<BasisLetter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<BasisLetter>) -> Self {
        Word(letters)
    }

    pub fn letter(factor: u32, index: u16) -> Self {
        Word(vec![BasisLetter::new(factor, index)])
    }

    pub fn letters(&self) -> &[BasisLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No two adjacent letters share a factor.
    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0].factor != w[1].factor)
    }

    /// Letter order reversed. Basis letters are hermitian, so this is the
    /// adjoint of the word.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn into_letters(self) -> Vec<BasisLetter> {
        self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| {
                self.0
                    .iter()
                    .map(|l| l.factor)
                    .cmp(other.0.iter().map(|l| l.factor))
            })
            .then_with(|| {
                self.0
                    .iter()
                    .map(|l| l.index)
                    .cmp(other.0.iter().map(|l| l.index))
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<BasisLetter>> for Word {
    fn from(v: Vec<BasisLetter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An arbitrary element `x_k` of factor `factor`, before reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct Letter {
    pub factor: u32,
    pub matrix: CMatrix,
}

impl Letter {
    pub fn new(factor: u32, matrix: CMatrix) -> Self {
        Letter { factor, matrix }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(spec: &[(u32, u16)]) -> Word {
        Word::new(spec.iter().map(|&(f, i)| BasisLetter::new(f, i)).collect())
    }

    #[test]
    fn ordering_is_length_then_factors_then_indices() {
        let mut words = vec![
            w(&[(2, 0), (1, 0)]),
            w(&[(1, 2)]),
            w(&[]),
            w(&[(1, 2), (2, 0)]),
            w(&[(2, 0)]),
            w(&[(1, 0), (2, 1)]),
            w(&[(1, 0)]),
        ];
        words.sort();
        assert_eq!(
            words,
            vec![
                w(&[]),
                w(&[(1, 0)]),
                w(&[(1, 2)]),
                w(&[(2, 0)]),
                w(&[(1, 0), (2, 1)]),
                w(&[(1, 2), (2, 0)]),
                w(&[(2, 0), (1, 0)]),
            ]
        );
    }

    #[test]
    fn reduced_and_reverse() {
        assert!(w(&[(1, 0), (2, 0), (1, 1)]).is_reduced());
        assert!(!w(&[(1, 0), (1, 1)]).is_reduced());
        assert_eq!(w(&[(1, 0), (2, 1)]).reversed(), w(&[(2, 1), (1, 0)]));
        assert_eq!(w(&[]).to_string(), "e");
        assert_eq!(w(&[(1, 0), (2, 1)]).to_string(), "(1,0)(2,1)");
    }
}
