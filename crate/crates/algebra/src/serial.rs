//! JSON form of canonical elements:
//! `[{"coeff": [re, im], "word": [[factor, basisIndex], ...]}, ...]`,
//! sorted in canonical word order.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{AlgebraError, BasisLetter, FreeElement, Word, C64};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    coeff: [f64; 2],
    word: Vec<(u32, u16)>,
}

impl Serialize for FreeElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .terms()
            .map(|(w, c)| Term {
                coeff: [c.re, c.im],
                word: w.letters().iter().map(|l| (l.factor, l.index)).collect(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for t in terms {
            let w = Word::new(
                t.word
                    .into_iter()
                    .map(|(f, i)| BasisLetter::new(f, i))
                    .collect(),
            );
            if !w.is_reduced() {
                return Err(serde::de::Error::custom(format!("word {w} is not reduced")));
            }
            if map.insert(w.clone(), C64::new(t.coeff[0], t.coeff[1])).is_some() {
                return Err(serde::de::Error::custom(format!("duplicate word {w}")));
            }
        }
        Ok(FreeElement::from_map(map))
    }
}

impl FreeElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(s).map_err(|e| AlgebraError::Malformed(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_is_sorted_term_list() {
        let a = FreeElement::term(
            Word::new(vec![BasisLetter::new(2, 1), BasisLetter::new(1, 0)]),
            C64::new(0.5, -1.0),
        )
        .add(&FreeElement::unit());
        assert_eq!(
            a.to_json(),
            r#"[{"coeff":[1.0,0.0],"word":[]},{"coeff":[0.5,-1.0],"word":[[2,1],[1,0]]}]"#
        );
    }

    #[test]
    fn rejects_unreduced_and_duplicate_words() {
        assert!(FreeElement::from_json(r#"[{"coeff":[1,0],"word":[[1,0],[1,1]]}]"#).is_err());
        assert!(FreeElement::from_json(
            r#"[{"coeff":[1,0],"word":[[1,0]]},{"coeff":[2,0],"word":[[1,0]]}]"#
        )
        .is_err());
        assert!(FreeElement::from_json(r#"[{"coeff":[1,0],"word":[],"x":1}]"#).is_err());
    }
}
