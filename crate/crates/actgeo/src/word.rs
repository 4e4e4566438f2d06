//! Freely reduced words of the free group F(Y).

use std::cmp::Ordering;
use std::fmt;

/// A single letter `y_i` or `y_i^-1`, with 1-based generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Letter {
        assert!(gen >= 1, "generator indices are 1-based");
        Letter { gen, inverse }
    }

    pub fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word; the empty word is the group identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    /// Reduces an arbitrary letter sequence with a cancellation stack.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|t| t.cancels(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    /// `y_i^e` for nonzero e.
    pub fn generator_power(gen: usize, e: i64) -> Word {
        let letter = Letter::new(gen, e < 0);
        Word(vec![letter; e.unsigned_abs() as usize])
    }

    pub fn generator(gen: usize) -> Word {
        Word::generator_power(gen, 1)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn power(&self, e: i64) -> Word {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }
}

// Shortlex: length first, then letters compared by generator index with
// the positive letter before the inverse.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(other.0.iter()) {
                    let o = a.gen.cmp(&b.gen).then(a.inverse.cmp(&b.inverse));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        // run-length collapse into y<i>^e factors
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let e = if l.inverse { -(run as i64) } else { run as i64 };
            if e == 1 {
                write!(f, "y{}", l.gen)?;
            } else {
                write!(f, "y{}^{}", l.gen, e)?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(pairs: &[(usize, bool)]) -> Word {
        Word::from_letters(pairs.iter().map(|&(g, i)| Letter::new(g, i)))
    }

    #[test]
    fn full_cancellation() {
        let a = w(&[(1, false), (1, true)]);
        assert_eq!(a.multiply(&Word::identity()), Word::identity());
    }

    #[test]
    fn forced_single_cancellation() {
        // (y1 y2) * (y2^-1 y1) = y1 y1
        let a = w(&[(1, false), (2, false)]);
        let b = w(&[(2, true), (1, false)]);
        assert_eq!(a.multiply(&b), w(&[(1, false), (1, false)]));
    }

    #[test]
    fn invert_reverses_and_flips() {
        assert_eq!(Word::identity().invert(), Word::identity());
        let a = w(&[(1, false), (2, true)]);
        assert_eq!(a.invert(), w(&[(2, false), (1, true)]));
    }

    #[test]
    fn shortlex_ordering() {
        let e = Word::identity();
        let y1 = Word::generator(1);
        let y1inv = Word::generator_power(1, -1);
        let y2 = Word::generator(2);
        let y1y1 = Word::generator_power(1, 2);
        assert!(e < y1);
        assert!(y1 < y1inv);
        assert!(y1inv < y2);
        assert!(y2 < y1y1);
    }

    /// Naive reducer: rescan from the start until no adjacent pair cancels.
    fn naive_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < letters.len() {
                if letters[i].cancels(letters[i + 1]) {
                    letters.drain(i..i + 2);
                    changed = true;
                } else {
                    i += 1;
                }
            }
            if !changed {
                return letters;
            }
        }
    }

    fn arb_letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec(
            ((1usize..=3), any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)),
            0..=max_len,
        )
    }

    proptest! {
        #[test]
        fn reduction_confluent(letters in arb_letters(12)) {
            let stack = Word::from_letters(letters.clone());
            let naive = naive_reduce(letters);
            prop_assert_eq!(stack.letters(), naive.as_slice());
        }

        #[test]
        fn multiplication_associative(
            a in arb_letters(10), b in arb_letters(10), c in arb_letters(10)
        ) {
            let (a, b, c) = (
                Word::from_letters(a),
                Word::from_letters(b),
                Word::from_letters(c),
            );
            prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        }

        #[test]
        fn inverse_law(a in arb_letters(10)) {
            let a = Word::from_letters(a);
            prop_assert_eq!(a.multiply(&a.invert()), Word::identity());
        }
    }
}
