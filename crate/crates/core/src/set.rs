//! Small sets of ground-set elements, stored as 64-bit masks.
//!
//! Every structure in this crate lives on a dense 0-based ground set
//! `{0, 1, ..., n-1}` with `n <= 64`, so a subset fits in one machine word.

use std::fmt;

/// Number of ground-set elements a single [`ElementSet`] can hold.
pub const MAX_GROUND: usize = 64;

/// A subset of a ground set `{0, ..., n-1}`, `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_GROUND);
        ElementSet(1 << e)
    }

    /// The full set `{0, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 & (1 << e) != 0
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | (1 << e))
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `2^|self|` subsets of this set, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let mask = self.0;
        let mut sub: u64 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = ElementSet(sub);
            if sub == mask {
                done = true;
            } else {
                sub = (sub.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }

    /// Compares as sorted element sequences: shorter prefix first, then by
    /// first differing element. Used wherever set lists must print in a
    /// reproducible order.
    pub fn cmp_lex(self, other: Self) -> std::cmp::Ordering {
        let mut a = self.0;
        let mut b = other.0;
        loop {
            match (a == 0, b == 0) {
                (true, true) => return std::cmp::Ordering::Equal,
                (true, false) => return std::cmp::Ordering::Less,
                (false, true) => return std::cmp::Ordering::Greater,
                (false, false) => {
                    let ea = a.trailing_zeros();
                    let eb = b.trailing_zeros();
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    a &= a - 1;
                    b &= b - 1;
                }
            }
        }
    }

    /// Graded order: by size first, then [`ElementSet::cmp_lex`].
    pub fn cmp_graded(self, other: Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then(self.cmp_lex(other))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s = s.with(e);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Sorts a list of sets in graded lexicographic order (size, then elements).
pub fn sort_graded(sets: &mut [ElementSet]) {
    sets.sort_by(|a, b| a.cmp_graded(*b));
}

/// All `k`-element subsets of `{0, ..., n-1}` in ascending mask order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    debug_assert!(n <= MAX_GROUND);
    let outside = !ElementSet::full(n).bits();
    let mut cur: u64 = if k > n { 0 } else { ElementSet::full(k).bits() };
    let mut exhausted = k > n;
    std::iter::from_fn(move || {
        if exhausted {
            return None;
        }
        let out = ElementSet(cur);
        if k == 0 {
            exhausted = true;
        } else {
            // Gosper's hack: next integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 || r & outside != 0 {
                exhausted = true;
            } else {
                cur = (((cur ^ r) >> 2) / c) | r;
            }
        }
        Some(out)
    })
}
