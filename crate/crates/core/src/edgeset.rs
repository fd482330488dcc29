//! Dense subsets of edge indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of edge indices stored as a bitmask.
///
/// Sets over at most 64 edges live inline in a single word; larger ground
/// sets spill to extra words. Trailing zero words are always trimmed, so two
/// sets with the same members compare and hash equal regardless of how they
/// were built.
///
/// Ordering is lexicographic on the ascending list of members, so `{0, 5}`
/// sorts before `{1}` and `{0}` sorts before `{0, 1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: SmallVec<[u64; 1]>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., m - 1}`.
    pub fn full(m: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = SmallVec::from_elem(u64::MAX, m / WORD);
        if !m.is_multiple_of(WORD) {
            words.push((1u64 << (m % WORD)) - 1);
        }
        Self { words }
    }

    pub fn from_bits(bits: u64) -> Self {
        let mut s = Self {
            words: SmallVec::from_elem(bits, 1),
        };
        s.trim();
        s
    }

    /// Low 64 bits of the mask. Only meaningful when every member is < 64.
    pub fn low_bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = Self::new();
        s.insert(e);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.words
            .get(e / WORD)
            .is_some_and(|w| w & (1u64 << (e % WORD)) != 0)
    }

    pub fn insert(&mut self, e: usize) -> bool {
        let (w, b) = (e / WORD, e % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1u64 << b) == 0;
        self.words[w] |= 1u64 << b;
        fresh
    }

    pub fn remove(&mut self, e: usize) -> bool {
        let (w, b) = (e / WORD, e % WORD);
        let Some(word) = self.words.get_mut(w) else {
            return false;
        };
        let present = *word & (1u64 << b) != 0;
        *word &= !(1u64 << b);
        self.trim();
        present
    }

    pub fn with(&self, e: usize) -> Self {
        let mut s = self.clone();
        s.insert(e);
        s
    }

    pub fn without(&self, e: usize) -> Self {
        let mut s = self.clone();
        s.remove(e);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (w, o) in s.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of the underlying mask.
    /// Only usable for sets with fewer than 64 members.
    pub fn subsets(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        let members = self.to_vec();
        assert!(
            members.len() < 64,
            "subset iteration over {} elements",
            members.len()
        );
        (0u64..(1u64 << members.len())).map(move |mask| {
            let mut s = EdgeSet::new();
            let mut bits = mask;
            while bits != 0 {
                s.insert(members[bits.trailing_zeros() as usize]);
                bits &= bits - 1;
            }
            s
        })
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for EdgeSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(deserializer)?
            .into_iter()
            .collect())
    }
}
