//! Fixed-capacity set of colors backed by 64-bit words.

use std::cmp::Ordering;
use std::fmt;

use crate::cc::Color;

/// A set of basis colors of one configuration.
///
/// Ordering is by cardinality first, then by the ascending color list. The
/// decomposition algorithms rely on this for their canonical scan order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColorSet {
    words: Vec<u64>,
    capacity: usize,
}

impl ColorSet {
    pub fn empty(capacity: usize) -> Self {
        ColorSet { words: vec![0; capacity.div_ceil(64)], capacity }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::empty(capacity);
        for c in 0..capacity {
            set.insert(Color(c as u32));
        }
        set
    }

    pub fn from_colors(capacity: usize, colors: impl IntoIterator<Item = Color>) -> Self {
        let mut set = Self::empty(capacity);
        for c in colors {
            set.insert(c);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, c: Color) -> bool {
        let i = c.index();
        assert!(i < self.capacity, "color {i} out of range {}", self.capacity);
        let (w, b) = (i / 64, i % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, c: Color) {
        let i = c.index();
        if i < self.capacity {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, c: Color) -> bool {
        let i = c.index();
        i < self.capacity && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ColorSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &ColorSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn union(&self, other: &ColorSet) -> ColorSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(Color((wi * 64 + b) as u32))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().map(Color::index).collect()
    }

    /// The single member, if the set has exactly one.
    pub fn single(&self) -> Option<Color> {
        let mut it = self.iter();
        match (it.next(), it.next()) {
            (Some(c), None) => Some(c),
            _ => None,
        }
    }
}

impl Ord for ColorSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.capacity.cmp(&other.capacity))
    }
}

impl PartialOrd for ColorSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}
