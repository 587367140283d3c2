use std::fmt;

/// Fixed-capacity bitset over vertex ids `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    cap: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(cap: usize) -> Self {
        VertexSet {
            cap,
            words: vec![0; cap.div_ceil(64)],
        }
    }

    pub fn full(cap: usize) -> Self {
        let mut s = Self::new(cap);
        for v in 0..cap {
            s.insert(v);
        }
        s
    }

    /// Panics if a member is `>= cap`.
    pub fn from_slice(cap: usize, members: &[usize]) -> Self {
        let mut s = Self::new(cap);
        for &v in members {
            s.insert(v);
        }
        s
    }

    pub fn from_mask(cap: usize, mask: u64) -> Self {
        assert!(cap <= 64);
        let mut s = Self::new(cap);
        if cap > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// Low 64 members as a mask. Only meaningful when `cap <= 64`.
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn capacity(&self) -> usize {
        self.cap
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.cap, "vertex {v} outside set capacity {}", self.cap);
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.cap {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.cap && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_cap(&self, other: &VertexSet) {
        assert_eq!(self.cap, other.cap, "vertex sets of different capacity");
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_cap(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_cap(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_cap(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.cap).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_cap(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_cap(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
