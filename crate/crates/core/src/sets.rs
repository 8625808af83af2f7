//! Small fixed-capacity identifier sets.
//!
//! Edge and vertex identifiers are small integers below [`MAX_IDS`]; every set
//! of them is a single `u64` bitmask. All graphs handled by this crate are
//! desk-scale (a few dozen edges at most), so this keeps the hot loops of the
//! exhaustive searches allocation-free.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

pub type EdgeId = usize;
pub type Vertex = usize;

/// Exclusive upper bound on edge and vertex identifiers.
pub const MAX_IDS: usize = 64;

macro_rules! id_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(u64);

        impl $name {
            pub const EMPTY: $name = $name(0);

            pub const fn from_bits(bits: u64) -> Self {
                $name(bits)
            }

            pub const fn bits(self) -> u64 {
                self.0
            }

            pub fn singleton(id: usize) -> Self {
                debug_assert!(id < MAX_IDS);
                $name(1 << id)
            }

            /// All identifiers `0..n`.
            pub fn range(n: usize) -> Self {
                assert!(n <= MAX_IDS);
                if n == MAX_IDS {
                    $name(u64::MAX)
                } else {
                    $name((1u64 << n) - 1)
                }
            }

            pub fn contains(self, id: usize) -> bool {
                id < MAX_IDS && self.0 >> id & 1 == 1
            }

            pub fn insert(&mut self, id: usize) {
                debug_assert!(id < MAX_IDS);
                self.0 |= 1 << id;
            }

            pub fn remove(&mut self, id: usize) {
                if id < MAX_IDS {
                    self.0 &= !(1 << id);
                }
            }

            pub fn with(self, id: usize) -> Self {
                let mut s = self;
                s.insert(id);
                s
            }

            pub fn without(self, id: usize) -> Self {
                let mut s = self;
                s.remove(id);
                s
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            pub fn intersects(self, other: Self) -> bool {
                self.0 & other.0 != 0
            }

            pub fn min(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn max(self) -> Option<usize> {
                (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
            }

            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(i)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// Subsets of `self` with exactly `k` members, in increasing order of
            /// their positional encoding.
            pub fn combinations(self, k: usize) -> impl Iterator<Item = Self> {
                let members = self.to_vec();
                Combinations::new(members.len(), k).map(move |idx| {
                    $name(idx.iter().fold(0u64, |acc, &i| acc | 1 << members[i]))
                })
            }

            /// Every subset of `self`, including the empty set and `self`.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let full = self.0;
                let mut next = Some(0u64);
                std::iter::from_fn(move || {
                    let cur = next?;
                    next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
                    Some($name(cur))
                })
            }
        }

        impl BitOr for $name {
            type Output = Self;
            fn bitor(self, rhs: Self) -> Self {
                $name(self.0 | rhs.0)
            }
        }

        impl BitAnd for $name {
            type Output = Self;
            fn bitand(self, rhs: Self) -> Self {
                $name(self.0 & rhs.0)
            }
        }

        impl BitXor for $name {
            type Output = Self;
            fn bitxor(self, rhs: Self) -> Self {
                $name(self.0 ^ rhs.0)
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                $name(self.0 & !rhs.0)
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = $name(0);
                for i in iter {
                    s.insert(i);
                }
                s
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (n, i) in self.iter().enumerate() {
                    if n > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "]")
            }
        }
    };
}

id_set!(
    /// A set of edge identifiers.
    EdgeSet
);
id_set!(
    /// A set of vertex identifiers.
    VertexSet
);

/// Lexicographic k-combinations of `0..n` as index vectors.
pub struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { idx: (0..k).collect(), n, done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Union-find over identifiers below [`MAX_IDS`].
#[derive(Clone)]
pub(crate) struct DisjointSets {
    parent: [u8; MAX_IDS],
}

impl DisjointSets {
    pub fn new() -> Self {
        let mut parent = [0u8; MAX_IDS];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        DisjointSets { parent }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb) as u8;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count() {
        let s = EdgeSet::range(7);
        assert_eq!(s.combinations(3).count(), 35);
        assert!(s.combinations(3).all(|c| c.len() == 3 && c.is_subset(s)));
        assert_eq!(EdgeSet::range(3).combinations(4).count(), 0);
        assert_eq!(EdgeSet::range(3).combinations(0).count(), 1);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = EdgeSet::from_iter([1, 4, 9]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(EdgeSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn display_and_ops() {
        let a = EdgeSet::from_iter([0, 2, 5]);
        let b = EdgeSet::from_iter([2, 3]);
        assert_eq!((a | b).to_string(), "[0,2,3,5]");
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!((a & b).min(), Some(2));
        assert_eq!(a.max(), Some(5));
    }
}
