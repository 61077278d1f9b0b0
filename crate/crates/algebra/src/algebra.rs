use std::collections::BTreeMap;
use std::sync::Arc;

use crate::rewrite::{self, Leftmost, RewriteOrder};
use crate::{
    AlgebraError, BasisLetter, CMatrix, FactorSpec, FreeElement, Letter, Result, Word, C64,
};

pub const DEFAULT_MAX_WORD_LEN: usize = 6;

/// A registered family of factor algebras together with the operations of
/// their free product.
///
/// Cloning is cheap; the factor data is shared.
#[derive(Debug, Clone)]
pub struct FreeAlgebra {
    factors: Arc<BTreeMap<u32, FactorSpec>>,
    max_word_len: usize,
}

impl FreeAlgebra {
    pub fn new(factors: Vec<FactorSpec>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for f in factors {
            let idx = f.index();
            if map.insert(idx, f).is_some() {
                return Err(AlgebraError::DuplicateFactor(idx));
            }
        }
        Ok(FreeAlgebra {
            factors: Arc::new(map),
            max_word_len: DEFAULT_MAX_WORD_LEN,
        })
    }

    /// Gell-Mann factors for `(index, dim)` pairs.
    pub fn gell_mann(dims: &[(u32, usize)]) -> Result<Self> {
        let factors = dims
            .iter()
            .map(|&(i, d)| FactorSpec::gell_mann(i, d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.max_word_len = cap;
        self
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    pub fn factor(&self, index: u32) -> Result<&FactorSpec> {
        self.factors.get(&index).ok_or(AlgebraError::UnknownFactor(index))
    }

    pub fn factors(&self) -> impl Iterator<Item = &FactorSpec> {
        self.factors.values()
    }

    /// Matrix of a basis letter.
    pub fn letter_matrix(&self, letter: BasisLetter) -> Result<&CMatrix> {
        self.factor(letter.factor)?
            .basis_matrix(letter.index)
            .ok_or(AlgebraError::BasisIndex {
                factor: letter.factor,
                index: letter.index,
            })
    }

    /// Every basis letter of every factor, in factor then index order.
    pub fn generators(&self) -> Vec<BasisLetter> {
        self.factors
            .values()
            .flat_map(|f| (0..f.basis_len()).map(move |k| BasisLetter::new(f.index(), k as u16)))
            .collect()
    }

    pub fn unit(&self) -> FreeElement {
        FreeElement::unit()
    }

    /// The embedding `ψ_i : A_i → A` applied to `m`.
    pub fn embed(&self, factor: u32, m: &CMatrix) -> Result<FreeElement> {
        let spec = self.factor(factor)?;
        spec.check_dims(m)?;
        let (scalar, traceless) = spec.split(m);
        let mut out = FreeElement::term(Word::empty(), scalar);
        for (k, c) in traceless {
            out.accumulate(Word::letter(factor, k), c);
        }
        out.prune();
        Ok(out)
    }

    /// Reduces `c · x_1 x_2 ⋯ x_n` to canonical form.
    pub fn normalize(&self, word: &[Letter], c: C64) -> Result<FreeElement> {
        self.normalize_with(word, c, &mut Leftmost)
    }

    /// Like [`normalize`](Self::normalize) with the rewrite order chosen by
    /// `order`. The result does not depend on the order.
    pub fn normalize_with(
        &self,
        word: &[Letter],
        c: C64,
        order: &mut dyn RewriteOrder,
    ) -> Result<FreeElement> {
        for l in word {
            self.factor(l.factor)?.check_dims(&l.matrix)?;
        }
        let out = rewrite::reduce(self, word, c, order)?;
        self.check_len(&out)?;
        Ok(out)
    }

    /// Checks that every letter is a valid basis letter, every word is
    /// reduced, and no word exceeds the length cap.
    pub fn validate(&self, a: &FreeElement) -> Result<()> {
        for (w, _) in a.terms() {
            for l in w.letters() {
                self.letter_matrix(*l)?;
            }
            if !w.is_reduced() {
                return Err(AlgebraError::Malformed(format!("word {w} is not reduced")));
            }
        }
        self.check_len(a)
    }

    fn check_len(&self, a: &FreeElement) -> Result<()> {
        let len = a.max_word_len();
        if len > self.max_word_len {
            return Err(AlgebraError::WordTooLong {
                len,
                cap: self.max_word_len,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, a: &FreeElement, b: &FreeElement) -> Result<FreeElement> {
        let mut acc = BTreeMap::new();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                self.mul_words_into(wa.letters(), wb.letters(), ca * cb, &mut acc)?;
            }
        }
        let out = FreeElement::from_map(acc);
        self.check_len(&out)?;
        Ok(out)
    }

    /// Product of a canonical word with a canonical element, on the left.
    pub fn left_multiply_word(&self, w: &Word, a: &FreeElement) -> Result<FreeElement> {
        self.multiply(&FreeElement::term(w.clone(), C64::new(1.0, 0.0)), a)
    }

    /// Concatenates two reduced words, resolving the junction with the
    /// factor's structure constants until no two adjacent letters share a
    /// factor.
    fn mul_words_into(
        &self,
        left: &[BasisLetter],
        right: &[BasisLetter],
        c: C64,
        acc: &mut BTreeMap<Word, C64>,
    ) -> Result<()> {
        match (left.last(), right.first()) {
            (Some(a), Some(b)) if a.factor == b.factor => {
                let spec = self.factor(a.factor)?;
                let p = spec.product(a.index, b.index);
                let l = &left[..left.len() - 1];
                let r = &right[1..];
                if p.scalar != C64::new(0.0, 0.0) {
                    self.mul_words_into(l, r, c * p.scalar, acc)?;
                }
                for &(k, f) in &p.traceless {
                    let mut v = Vec::with_capacity(l.len() + r.len() + 1);
                    v.extend_from_slice(l);
                    v.push(BasisLetter::new(a.factor, k));
                    v.extend_from_slice(r);
                    *acc.entry(Word::new(v)).or_default() += c * f;
                }
            }
            _ => {
                let mut v = Vec::with_capacity(left.len() + right.len());
                v.extend_from_slice(left);
                v.extend_from_slice(right);
                *acc.entry(Word::new(v)).or_default() += c;
            }
        }
        Ok(())
    }

    pub fn star(&self, a: &FreeElement) -> FreeElement {
        a.star()
    }

    pub fn add(&self, a: &FreeElement, b: &FreeElement) -> FreeElement {
        a.add(b)
    }

    pub fn scale(&self, c: C64, a: &FreeElement) -> FreeElement {
        a.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gell_mann_basis;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn qubits() -> FreeAlgebra {
        FreeAlgebra::gell_mann(&[(1, 2), (2, 2)]).unwrap()
    }

    fn pauli() -> Vec<CMatrix> {
        gell_mann_basis(2)
    }

    fn lw(spec: &[(u32, u16)]) -> Word {
        Word::new(spec.iter().map(|&(f, i)| BasisLetter::new(f, i)).collect())
    }

    #[test]
    fn embed_examples() {
        let alg = qubits();
        let p = pauli();
        assert_eq!(alg.embed(1, &CMatrix::identity(2, 2)).unwrap(), FreeElement::unit());
        assert_eq!(
            alg.embed(1, &p[0]).unwrap(),
            FreeElement::term(Word::letter(1, 0), c(1.0, 0.0))
        );
        let e = alg.embed(1, &(CMatrix::identity(2, 2) + &p[2])).unwrap();
        assert_eq!(e, FreeElement::unit().add(&FreeElement::term(Word::letter(1, 2), c(1.0, 0.0))));
    }

    #[test]
    fn embed_errors() {
        let alg = qubits();
        assert_eq!(
            alg.embed(9, &CMatrix::identity(2, 2)),
            Err(AlgebraError::UnknownFactor(9))
        );
        assert!(matches!(
            alg.embed(1, &CMatrix::identity(3, 3)),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        let alg = qubits();
        let p = pauli();
        let one = c(1.0, 0.0);

        let r = alg
            .normalize(&[Letter::new(1, p[0].clone()), Letter::new(1, p[0].clone())], one)
            .unwrap();
        assert_eq!(r, FreeElement::unit());

        let r = alg
            .normalize(
                &[
                    Letter::new(1, p[0].clone()),
                    Letter::new(2, p[1].clone()),
                    Letter::new(2, p[1].clone()),
                ],
                one,
            )
            .unwrap();
        assert_eq!(r, FreeElement::term(Word::letter(1, 0), one));

        let r = alg
            .normalize(
                &[
                    Letter::new(1, &p[0] + CMatrix::identity(2, 2)),
                    Letter::new(2, p[2].clone()),
                ],
                one,
            )
            .unwrap();
        let expect = FreeElement::term(lw(&[(1, 0), (2, 2)]), one)
            .add(&FreeElement::term(lw(&[(2, 2)]), one));
        assert!(r.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn multiply_examples() {
        let alg = qubits();
        let p = pauli();
        let x = alg.embed(1, &p[0]).unwrap();
        assert_eq!(alg.multiply(&x, &alg.unit()).unwrap(), x);
        assert_eq!(alg.multiply(&alg.unit(), &x).unwrap(), x);

        let xy = alg.multiply(&x, &alg.embed(1, &p[1]).unwrap()).unwrap();
        assert!(xy.approx_eq(&FreeElement::term(Word::letter(1, 2), c(0.0, 1.0)), 1e-14));

        let x2 = alg.embed(2, &p[0]).unwrap();
        assert_eq!(
            alg.multiply(&x, &x2).unwrap(),
            FreeElement::term(lw(&[(1, 0), (2, 0)]), c(1.0, 0.0))
        );
    }

    #[test]
    fn junction_cascades_through_unit_absorption() {
        let alg = qubits();
        // (σx^1 σz^2) · (σz^2 σx^1) = σx^1 σx^1 = e
        let a = FreeElement::term(lw(&[(1, 0), (2, 2)]), c(1.0, 0.0));
        let b = FreeElement::term(lw(&[(2, 2), (1, 0)]), c(1.0, 0.0));
        assert_eq!(alg.multiply(&a, &b).unwrap(), FreeElement::unit());
    }

    #[test]
    fn star_examples() {
        let alg = qubits();
        let p = pauli();
        let x = alg.embed(1, &p[0]).unwrap();
        assert_eq!(alg.star(&x), x);
        let a = FreeElement::term(lw(&[(1, 0), (2, 1)]), c(0.0, 1.0));
        assert_eq!(alg.star(&a), FreeElement::term(lw(&[(2, 1), (1, 0)]), c(0.0, -1.0)));
    }

    #[test]
    fn length_cap_is_enforced() {
        let alg = qubits().with_max_word_len(2);
        let a = FreeElement::term(lw(&[(1, 0), (2, 0)]), c(1.0, 0.0));
        assert_eq!(
            alg.multiply(&a, &a),
            Err(AlgebraError::WordTooLong { len: 4, cap: 2 })
        );
        let bad = FreeElement::term(lw(&[(1, 0), (1, 1)]), c(1.0, 0.0));
        assert!(alg.validate(&bad).is_err());
    }

    #[test]
    fn generators_enumerate_all_letters() {
        let alg = FreeAlgebra::gell_mann(&[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(alg.generators().len(), 3 + 8);
    }
}
