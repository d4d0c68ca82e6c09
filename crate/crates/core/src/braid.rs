//! Braid words on an even number of strands and their induced permutations.
//!
//! A letter `+i` is the Artin generator `σ_i`: the strand entering at
//! position `i` crosses over the strand at `i + 1`. A letter `-i` is `σ_i⁻¹`.
//! Words are read top to bottom.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count {0} must be even and at least 2")]
    BadStrandCount(usize),
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandCountMismatch { left: usize, right: usize },
}

/// A braid word on `strand_count = 2n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strand_count < 2 || !strand_count.is_multiple_of(2) {
            return Err(BraidError::BadStrandCount(strand_count));
        }
        for &letter in &letters {
            let g = letter.unsigned_abs() as usize;
            if g == 0 || g >= strand_count {
                return Err(BraidError::LetterOutOfRange {
                    letter,
                    strands: strand_count,
                });
            }
        }
        Ok(Self {
            strand_count,
            letters,
        })
    }

    /// The empty word on `strand_count` strands.
    pub fn identity(strand_count: usize) -> Result<Self, BraidError> {
        Self::new(strand_count, Vec::new())
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Bottom position of the strand starting at each top position.
    pub fn induced_permutation(&self) -> Permutation {
        // strand_at[p] = top index of the strand currently at position p
        let mut strand_at: Vec<usize> = (0..=self.strand_count).collect();
        for &letter in &self.letters {
            let i = letter.unsigned_abs() as usize;
            strand_at.swap(i, i + 1);
        }
        let mut images = vec![0; self.strand_count];
        for (pos, &strand) in strand_at.iter().enumerate().skip(1) {
            images[strand - 1] = pos;
        }
        Permutation { images }
    }

    /// Concatenation `self · other`, with `self` on top.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strand_count != other.strand_count {
            return Err(BraidError::StrandCountMismatch {
                left: self.strand_count,
                right: other.strand_count,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strand_count: self.strand_count,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|&e| -e).collect(),
        }
    }

    pub(crate) fn prepend(&self, block: &[i32]) -> BraidWord {
        let mut letters = block.to_vec();
        letters.extend_from_slice(&self.letters);
        BraidWord {
            strand_count: self.strand_count,
            letters,
        }
    }

    pub(crate) fn append(&self, block: &[i32]) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(block);
        BraidWord {
            strand_count: self.strand_count,
            letters,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// A bijection of `{1, …, m}`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images; `None` if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &img in &images {
            if img == 0 || img > m || seen[img - 1] {
                return None;
            }
            seen[img - 1] = true;
        }
        Some(Self { images })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            images: (1..=m).collect(),
        }
    }

    /// The `p`-cycle `(1 2 ⋯ p)` raised to `power`.
    pub fn cycle_power(p: usize, power: i64) -> Self {
        let shift = power.rem_euclid(p as i64) as usize;
        Self {
            images: (0..p).map(|k| (k + shift) % p + 1).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        assert_eq!(self.degree(), first.degree(), "permutation degree mismatch");
        Permutation {
            images: first.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &img) in self.images.iter().enumerate() {
            images[img - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &img)| img == k + 1)
    }

    /// Disjoint cycles, each starting at its smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 1..=self.degree() {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !visited[k - 1] {
                visited[k - 1] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Whether odd points go to odd points (and so even to even).
    pub fn preserves_parity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &img)| (k + 1) % 2 == img % 2)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            f.write_str("(")?;
            for (idx, k) in cycle.iter().enumerate() {
                if idx > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{k}")?;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn rejects_invalid_words() {
        assert_eq!(
            BraidWord::new(3, vec![]),
            Err(BraidError::BadStrandCount(3))
        );
        assert_eq!(
            BraidWord::new(0, vec![]),
            Err(BraidError::BadStrandCount(0))
        );
        assert!(matches!(
            BraidWord::new(4, vec![4]),
            Err(BraidError::LetterOutOfRange { letter: 4, .. })
        ));
        assert!(matches!(
            BraidWord::new(4, vec![0]),
            Err(BraidError::LetterOutOfRange { letter: 0, .. })
        ));
        assert!(BraidWord::new(4, vec![-3, 3]).is_ok());
    }

    #[test]
    fn induced_permutation_examples() {
        assert!(word(2, &[]).induced_permutation().is_identity());
        assert!(word(4, &[2, 2]).induced_permutation().is_identity());
        assert_eq!(
            word(4, &[1, 2, 3]).induced_permutation().images(),
            &[4, 1, 2, 3]
        );
    }

    #[test]
    fn compose_examples() {
        let w = word(4, &[1, -3, 2]);
        assert_eq!(word(4, &[]).compose(&w).unwrap(), w);
        let c = word(4, &[1]).compose(&word(4, &[-1])).unwrap();
        assert_eq!(c.letters(), &[1, -1]);
        assert!(c.induced_permutation().is_identity());
        let c = word(4, &[2]).compose(&word(4, &[2])).unwrap();
        assert_eq!(c.letters(), &[2, 2]);
        assert!(c.induced_permutation().is_identity());
        assert_eq!(
            word(4, &[]).compose(&word(6, &[])),
            Err(BraidError::StrandCountMismatch { left: 4, right: 6 })
        );
    }

    #[test]
    fn invert_examples() {
        assert!(word(2, &[]).inverse().is_empty());
        assert_eq!(word(4, &[1, 2]).inverse().letters(), &[-2, -1]);
    }

    #[test]
    fn cycle_power_and_display() {
        let c = Permutation::cycle_power(3, 1);
        assert_eq!(c.images(), &[2, 3, 1]);
        assert_eq!(c.to_string(), "(1 2 3)");
        let sq = Permutation::cycle_power(4, 2);
        assert_eq!(sq.to_string(), "(1 3)(2 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_images(vec![1, 1]).is_none());
        assert!(Permutation::from_images(vec![2, 3]).is_none());
    }

    fn arb_word() -> impl Strategy<Value = BraidWord> {
        (1usize..=4).prop_flat_map(|n| {
            let m = 2 * n;
            let letter = (1..m as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
            proptest::collection::vec(letter, 0..16)
                .prop_map(move |letters| BraidWord::new(m, letters).unwrap())
        })
    }

    fn arb_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
        (1usize..=4).prop_flat_map(|n| {
            let m = 2 * n;
            let letter = || (1..m as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
            (
                proptest::collection::vec(letter(), 0..12),
                proptest::collection::vec(letter(), 0..12),
            )
                .prop_map(move |(a, b)| {
                    (BraidWord::new(m, a).unwrap(), BraidWord::new(m, b).unwrap())
                })
        })
    }

    proptest! {
        #[test]
        fn composition_follows_positions((w1, w2) in arb_pair()) {
            let composed = w1.compose(&w2).unwrap().induced_permutation();
            let expected = w2.induced_permutation().after(&w1.induced_permutation());
            prop_assert_eq!(composed, expected);
        }

        #[test]
        fn inverse_word_inverts_permutation(w in arb_word()) {
            let p = w.induced_permutation();
            prop_assert_eq!(w.inverse().induced_permutation(), p.inverse());
            prop_assert!(w.inverse().compose(&w).unwrap().induced_permutation().is_identity());
        }

        #[test]
        fn cancelling_pair_is_invisible(w in arb_word(), at in 0usize..16, g in 1i32..8) {
            let m = w.strand_count();
            let g = (g - 1) % (m as i32 - 1) + 1;
            let at = at.min(w.len());
            let mut letters = w.letters().to_vec();
            letters.splice(at..at, [g, -g]);
            let longer = BraidWord::new(m, letters).unwrap();
            prop_assert_eq!(longer.induced_permutation(), w.induced_permutation());
        }
    }
}
