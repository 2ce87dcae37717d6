//! Dense bit sets over the points `0..n` of a finite domain, and binary relations stored as rows.

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    words: Vec<u64>,
    len: usize,
}

impl PointSet {
    pub fn empty(len: usize) -> Self {
        PointSet { words: vec![0; len.div_ceil(WORD)], len }
    }

    pub fn full(len: usize) -> Self {
        let mut s = PointSet::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = PointSet::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Size of the ambient domain.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "point {i} outside domain of size {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn complement(&self) -> PointSet {
        let mut out = PointSet { words: self.words.iter().map(|w| !w).collect(), len: self.len };
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |i| self.contains(*i))
    }

    fn zip(&self, other: &PointSet, op: impl Fn(u64, u64) -> u64) -> PointSet {
        debug_assert_eq!(self.len, other.len);
        PointSet { words: self.words.iter().zip(&other.words).map(|(a, b)| op(*a, *b)).collect(), len: self.len }
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// A binary relation on `0..n`, one successor set per point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<PointSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { rows: vec![PointSet::empty(n); n] }
    }

    pub fn full(n: usize) -> Self {
        Relation { rows: vec![PointSet::full(n); n] }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn universe(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.rows.len() && self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    /// Successors of `x`.
    pub fn row(&self, x: usize) -> &PointSet {
        &self.rows[x]
    }

    pub fn union(&self, other: &Relation) -> Relation {
        Relation { rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.union(b)).collect() }
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        Relation { rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.intersection(b)).collect() }
    }

    pub fn complement(&self) -> Relation {
        Relation { rows: self.rows.iter().map(PointSet::complement).collect() }
    }

    pub fn converse(&self) -> Relation {
        let n = self.rows.len();
        let mut out = Relation::empty(n);
        for (x, y) in self.pairs() {
            out.insert(y, x);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(PointSet::is_empty)
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn count(&self) -> usize {
        self.rows.iter().map(PointSet::count).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_stays_inside_domain() {
        for n in [0, 1, 5, 63, 64, 65, 130] {
            let s = PointSet::from_indices(n, (0..n).step_by(3));
            let c = s.complement();
            assert_eq!(s.count() + c.count(), n);
            assert!(!s.intersects(&c));
            assert_eq!(s.union(&c), PointSet::full(n));
        }
    }

    #[test]
    fn converse_is_an_involution() {
        let r = Relation::from_pairs(70, [(0, 1), (5, 69), (69, 69), (3, 0)]);
        assert_eq!(r.converse().converse(), r);
        assert!(r.converse().contains(69, 5));
        assert_eq!(r.pairs().collect::<Vec<_>>(), [(0, 1), (3, 0), (5, 69), (69, 69)]);
    }
}
