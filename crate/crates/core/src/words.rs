//! The free monoid on a carrier set: words, concatenation, powers, and the
//! extension of inversion to words.
//!
//! Words are value types with structural equality. Every word remembers the
//! carrier it was formed over, so concatenating words over different carriers
//! is a checked error instead of silent nonsense.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

/// Index of an element within one carrier set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u16);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Stable identifier of a carrier set. Fresh per construction; clones of a
/// partial group keep the id and therefore stay word-compatible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CarrierId(pub u32);

static NEXT_CARRIER: AtomicU32 = AtomicU32::new(0);

impl CarrierId {
    pub fn fresh() -> CarrierId {
        CarrierId(NEXT_CARRIER.fetch_add(1, Ordering::Relaxed))
    }
}

/// A finite sequence of element ids over one carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    carrier: CarrierId,
    letters: Vec<ElementId>,
}

impl Word {
    pub fn new(carrier: CarrierId, letters: Vec<ElementId>) -> Word {
        Word { carrier, letters }
    }

    pub fn empty(carrier: CarrierId) -> Word {
        Word {
            carrier,
            letters: Vec::new(),
        }
    }

    pub fn carrier(&self) -> CarrierId {
        self.carrier
    }

    pub fn letters(&self) -> &[ElementId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `u ∘ v`. Errors when the carriers differ.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch {
                expected: self.carrier.0,
                found: other.carrier.0,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            carrier: self.carrier,
            letters,
        })
    }

    /// `k` copies of the word concatenated; `power(u, 0)` is the empty word.
    pub fn power(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            carrier: self.carrier,
            letters,
        }
    }

    /// Letters reversed and individually inverted: `(g_1,…,g_k)` goes to
    /// `(g_k⁻¹,…,g_1⁻¹)`. `inv` must cover every letter.
    pub fn inverse_with(&self, inv: &[ElementId]) -> Result<Word> {
        let mut letters = Vec::with_capacity(self.letters.len());
        for &g in self.letters.iter().rev() {
            let i = g.index();
            if i >= inv.len() {
                return Err(Error::UnknownElement {
                    index: i,
                    carrier_len: inv.len(),
                });
            }
            letters.push(inv[i]);
        }
        Ok(Word {
            carrier: self.carrier,
            letters,
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "#{}", l.0)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(carrier: CarrierId, letters: &[u16]) -> Word {
        Word::new(carrier, letters.iter().map(|&i| ElementId(i)).collect())
    }

    #[test]
    fn concat_examples() {
        let c = CarrierId::fresh();
        assert_eq!(w(c, &[0]).concat(&w(c, &[1])).unwrap(), w(c, &[0, 1]));
        assert_eq!(w(c, &[0, 1]).concat(&Word::empty(c)).unwrap(), w(c, &[0, 1]));
        assert_eq!(
            Word::empty(c).concat(&Word::empty(c)).unwrap(),
            Word::empty(c)
        );
    }

    #[test]
    fn concat_rejects_mixed_carriers() {
        let c = CarrierId::fresh();
        let d = CarrierId::fresh();
        assert!(matches!(
            w(c, &[0]).concat(&w(d, &[0])),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn power_examples() {
        let c = CarrierId::fresh();
        assert_eq!(w(c, &[0]).power(3), w(c, &[0, 0, 0]));
        assert_eq!(w(c, &[0, 1]).power(0), Word::empty(c));
        assert_eq!(Word::empty(c).power(5), Word::empty(c));
    }

    #[test]
    fn inverse_examples() {
        let c = CarrierId::fresh();
        // inversion swapping 0 <-> 1 and fixing 2
        let inv = vec![ElementId(1), ElementId(0), ElementId(2)];
        assert_eq!(w(c, &[0, 2]).inverse_with(&inv).unwrap(), w(c, &[2, 1]));
        assert_eq!(Word::empty(c).inverse_with(&inv).unwrap(), Word::empty(c));
        assert!(matches!(
            w(c, &[7]).inverse_with(&inv),
            Err(Error::UnknownElement { .. })
        ));
    }

    proptest! {
        #[test]
        fn inversion_is_involutory(letters in proptest::collection::vec(0u16..5, 0..8)) {
            let c = CarrierId::fresh();
            // an involutory table on 5 elements: 0<->1, 2<->3, 4 fixed
            let inv = vec![ElementId(1), ElementId(0), ElementId(3), ElementId(2), ElementId(4)];
            let word = w(c, &letters);
            let twice = word.inverse_with(&inv).unwrap().inverse_with(&inv).unwrap();
            prop_assert_eq!(twice, word);
        }

        #[test]
        fn inversion_reverses_concat(
            us in proptest::collection::vec(0u16..5, 0..6),
            vs in proptest::collection::vec(0u16..5, 0..6),
        ) {
            let c = CarrierId::fresh();
            let inv = vec![ElementId(1), ElementId(0), ElementId(3), ElementId(2), ElementId(4)];
            let u = w(c, &us);
            let v = w(c, &vs);
            let lhs = u.concat(&v).unwrap().inverse_with(&inv).unwrap();
            let rhs = v
                .inverse_with(&inv)
                .unwrap()
                .concat(&u.inverse_with(&inv).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn power_length(letters in proptest::collection::vec(0u16..5, 0..5), k in 0usize..6) {
            let c = CarrierId::fresh();
            let word = w(c, &letters);
            prop_assert_eq!(word.power(k).len(), k * word.len());
        }
    }
}
