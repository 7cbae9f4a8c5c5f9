//! Bit-mask subsets over small carriers and a growable bit matrix.
//!
//! Every subset of a quasiorder carrier, frame carrier, or approximation
//! universe is a fixed-width bit vector indexed by carrier position, so set
//! operations are single word operations. Lattice order tables, whose
//! carriers can exceed one word, use [`BitMatrix`] rows instead.

use std::cmp::Ordering;
use std::fmt;

/// Largest carrier a [`Subset`] can index.
pub const MAX_POINTS: usize = 64;

fn low_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_POINTS);
    if n == MAX_POINTS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of a carrier of at most [`MAX_POINTS`] elements.
///
/// The carrier size travels with the value so complements are well defined
/// and mismatched universes are caught in debug builds.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    universe: u32,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "carrier exceeds {MAX_POINTS} points");
        Subset { bits: 0, universe: universe as u32 }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "carrier exceeds {MAX_POINTS} points");
        Subset { bits: low_mask(universe), universe: universe as u32 }
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(i);
        s
    }

    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe <= MAX_POINTS);
        debug_assert_eq!(bits & !low_mask(universe), 0, "bits outside universe");
        Subset { bits, universe: universe as u32 }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn universe(self) -> usize {
        self.universe as usize
    }

    pub fn contains(self, i: usize) -> bool {
        debug_assert!(i < self.universe());
        self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe(), "index {i} outside carrier of {}", self.universe);
        self.bits |= 1 << i;
    }

    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset { bits: self.bits | other.bits, ..self }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset { bits: self.bits & other.bits, ..self }
    }

    pub fn difference(self, other: Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset { bits: self.bits & !other.bits, ..self }
    }

    pub fn complement(self) -> Subset {
        Subset { bits: !self.bits & low_mask(self.universe()), ..self }
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == low_mask(self.universe())
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits & !other.bits == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits & other.bits != 0
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let universe = self.universe();
        (0..universe).filter(move |&i| self.bits >> i & 1 == 1)
    }

    /// Canonical ordering: cardinality first, then the bit pattern.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len().cmp(&other.len()).then(self.bits.cmp(&other.bits))
    }

    /// Braced listing of member names, e.g. `{a,c}`.
    pub fn render(self, names: &[String]) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for i in self.iter() {
            if !first {
                out.push(',');
            }
            out.push_str(&names[i]);
            first = false;
        }
        out.push('}');
        out
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A dense square boolean matrix with word-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix { n, words_per_row, words: vec![0; n * words_per_row] }
    }

    pub fn from_subset_rows(rows: &[Subset]) -> Self {
        let n = rows.len();
        let mut m = BitMatrix::new(n);
        for (i, r) in rows.iter().enumerate() {
            debug_assert_eq!(r.universe(), n);
            if m.words_per_row > 0 {
                m.words[i * m.words_per_row] = r.bits();
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.words[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n && j < self.n);
        let w = &mut self.words[i * self.words_per_row + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// `row(i) ⊆ row(j)`, word-parallel.
    pub fn row_is_subset(&self, i: usize, j: usize) -> bool {
        words_is_subset(self.row(i), self.row(j))
    }

    pub fn and_rows(&self, i: usize, j: usize) -> Vec<u64> {
        self.row(i).iter().zip(self.row(j)).map(|(a, b)| a & b).collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn words_is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub fn words_contains(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

pub fn iter_word_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_word_ops() {
        let a = Subset::from_indices(5, [0, 2, 4]);
        let b = Subset::from_indices(5, [2, 3]);
        assert_eq!(a.union(b), Subset::from_indices(5, [0, 2, 3, 4]));
        assert_eq!(a.intersection(b), Subset::singleton(5, 2));
        assert_eq!(a.difference(b), Subset::from_indices(5, [0, 4]));
        assert_eq!(b.complement(), Subset::from_indices(5, [0, 1, 4]));
        assert!(Subset::empty(5).is_subset_of(a));
        assert!(a.is_subset_of(Subset::full(5)));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn full_universe_of_64_points() {
        let s = Subset::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
    }

    #[test]
    fn canonical_order_is_cardinality_then_pattern() {
        let mut sets = vec![
            Subset::full(3),
            Subset::singleton(3, 2),
            Subset::empty(3),
            Subset::singleton(3, 0),
        ];
        sets.sort_by(Subset::canonical_cmp);
        assert_eq!(
            sets,
            vec![
                Subset::empty(3),
                Subset::singleton(3, 0),
                Subset::singleton(3, 2),
                Subset::full(3),
            ]
        );
    }

    #[test]
    fn render_uses_carrier_names() {
        let names: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Subset::from_indices(3, [0, 2]).render(&names), "{p,r}");
        assert_eq!(Subset::empty(3).render(&names), "{}");
    }

    #[test]
    fn bitmatrix_rows_over_word_boundary() {
        let mut m = BitMatrix::new(70);
        m.set(3, 69, true);
        m.set(3, 1, true);
        m.set(5, 1, true);
        assert!(m.get(3, 69));
        assert!(!m.get(4, 69));
        assert!(m.row_is_subset(5, 3));
        assert!(!m.row_is_subset(3, 5));
        assert_eq!(iter_word_bits(m.row(3)).collect::<Vec<_>>(), vec![1, 69]);
    }
}
