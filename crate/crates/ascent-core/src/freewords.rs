//! Reduced words in a free group of small rank.
//!
//! A letter is a nonzero `i32`: `l > 0` is the generator with index
//! `l - 1`, `-l` its inverse. Words are kept freely reduced.

use alloc::vec::Vec;

pub type Letter = i32;

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: usize) -> Self {
        FreeWord {
            letters: alloc::vec![index as Letter + 1],
        }
    }

    /// Reduce an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Append one letter with free cancellation.
    pub fn push(&mut self, l: Letter) {
        debug_assert!(l != 0);
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Apply the endomorphism sending generator `i` to `images[i]`.
    pub fn apply_endomorphism(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::empty();
        for &l in &self.letters {
            let img = &images[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                for &x in &img.letters {
                    out.push(x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    out.push(-x);
                }
            }
        }
        out
    }

    /// Iterated endomorphism application.
    pub fn apply_endomorphism_power(&self, images: &[FreeWord], n: u32) -> FreeWord {
        let mut w = self.clone();
        for _ in 0..n {
            w = w.apply_endomorphism(images);
        }
        w
    }

    pub fn push_key(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.letters.len() as u32).to_le_bytes());
        for &l in &self.letters {
            out.extend_from_slice(&l.to_le_bytes());
        }
    }
}

/// All reduced words of the given rank in length order, lexicographic
/// within a length. Letter order: a1 < a2 < ... < A1 < A2 < ...
pub fn words_in_length_order(rank: usize, max_len: usize) -> Vec<FreeWord> {
    let alphabet: Vec<Letter> = (1..=rank as Letter)
        .chain((1..=rank as Letter).map(|l| -l))
        .collect();
    let mut out = alloc::vec![FreeWord::empty()];
    let mut layer: Vec<FreeWord> = alloc::vec![FreeWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                if w.letters.last() == Some(&-l) {
                    continue;
                }
                let mut v = w.clone();
                v.letters.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
