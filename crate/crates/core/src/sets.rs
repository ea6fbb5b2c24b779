//! Small subsets of a carrier `0..n`, packed into a `u64`.
//!
//! Everything in this crate lives on carriers of at most 64 points (forest
//! nodes or algebra elements), so one machine word per subset keeps the
//! exhaustive searches cheap. Bits above the carrier size are never set.

use std::fmt;

/// A subset of `{0, .., n-1}` for some carrier size `n <= 64`.
///
/// The carrier size is contextual: operations that need it (`complement_in`,
/// `full`) take it explicitly.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Mask(u64);

/// Subset of forest nodes.
pub type NodeSet = Mask;
/// Subset of algebra elements.
pub type ElemSet = Mask;

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(n: usize) -> Mask {
        debug_assert!(n <= 64);
        if n == 64 {
            Mask(!0)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Mask {
        debug_assert!(i < 64);
        Mask(1 << i)
    }

    pub fn from_bits(bits: u64) -> Mask {
        Mask(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Mask {
        debug_assert!(i < 64);
        Mask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Mask {
        Mask(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn inter(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> Mask {
        Mask::full(n).minus(self)
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing order.
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

    pub fn from_slice(items: &[usize]) -> Mask {
        let mut m = Mask::EMPTY;
        for &i in items {
            m = m.with(i);
        }
        m
    }

    /// Canonical ordering key for subset lists: cardinality first, then the
    /// sorted member list lexicographically.
    pub fn canonical_key(self) -> (usize, Vec<usize>) {
        (self.card(), self.to_vec())
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
