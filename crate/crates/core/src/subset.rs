//! Subsets of {1, …, n} with a fixed ambient n.
//!
//! Used both as index sets J for staircases/ideals and as fermionic words
//! θ_J (always stored sorted; signs from reordering are handled by the
//! superspace layer, not here).  The Gale order compares two equal-size
//! subsets entrywise after sorting.

use std::fmt;

/// A subset of {1, …, n}, stored strictly increasing, 1-based.
///
/// The ambient `n` is part of the value: `{1,3} ⊆ [3]` and `{1,3} ⊆ [4]`
/// differ (their complements differ, and mixing ambients is a bug).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: u32,
    elems: Vec<u32>,
}

impl Subset {
    /// Build a subset of {1..n}. Elements may come in any order; duplicates
    /// and out-of-range entries are rejected.
    pub fn new(n: u32, elems: impl IntoIterator<Item = u32>) -> Self {
        let mut elems: Vec<u32> = elems.into_iter().collect();
        elems.sort_unstable();
        for w in elems.windows(2) {
            assert!(w[0] != w[1], "duplicate element {} in subset", w[0]);
        }
        if let (Some(&lo), Some(&hi)) = (elems.first(), elems.last()) {
            assert!(lo >= 1 && hi <= n, "subset element out of range 1..={n}");
        }
        Subset { n, elems }
    }

    pub fn empty(n: u32) -> Self {
        Subset { n, elems: Vec::new() }
    }

    pub fn full(n: u32) -> Self {
        Subset { n, elems: (1..=n).collect() }
    }

    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    /// Elements in increasing order.
    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.elems.iter().copied()
    }

    pub fn complement(&self) -> Subset {
        let elems = (1..=self.n).filter(|i| !self.contains(*i)).collect();
        Subset { n: self.n, elems }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n, "ambient mismatch in union");
        let mut elems = self.elems.clone();
        elems.extend(other.iter().filter(|i| !self.contains(*i)));
        elems.sort_unstable();
        Subset { n: self.n, elems }
    }

    /// `self ∪ {i..n}` — the tail unions used by the colon-ideal generators.
    pub fn union_tail(&self, i: u32) -> Subset {
        self.union(&Subset::new(self.n, i..=self.n))
    }

    pub fn with(&self, i: u32) -> Subset {
        assert!(!self.contains(i), "element {i} already present");
        self.union(&Subset::new(self.n, [i]))
    }

    pub fn without(&self, i: u32) -> Subset {
        assert!(self.contains(i), "element {i} not present");
        let elems = self.elems.iter().copied().filter(|&j| j != i).collect();
        Subset { n: self.n, elems }
    }

    /// The reversal K* = { n+1−k : k ∈ K }.
    pub fn reversal(&self) -> Subset {
        let elems = self.elems.iter().rev().map(|&k| self.n + 1 - k).collect();
        Subset { n: self.n, elems }
    }

    /// Image under an element-wise map, e.g. I ↦ 2I−1; the result lives in
    /// ambient `m`.
    pub fn map_into(&self, m: u32, f: impl Fn(u32) -> u32) -> Subset {
        Subset::new(m, self.elems.iter().map(|&i| f(i)))
    }

    /// Gale order on equal-size subsets: sorted entries compare entrywise.
    /// Size or ambient mismatch is a caller bug.
    pub fn gale_leq(&self, other: &Subset) -> bool {
        assert_eq!(self.n, other.n, "ambient mismatch in Gale comparison");
        assert_eq!(self.len(), other.len(), "Gale order needs equal sizes");
        self.elems.iter().zip(&other.elems).all(|(a, b)| a <= b)
    }

    /// Σ_{i ∈ J} i, the sign exponent in minor expansions.
    pub fn sum(&self) -> u32 {
        self.elems.iter().sum()
    }

    /// All k-subsets of {1..n} in lexicographic order of element vectors.
    pub fn all_of_size(n: u32, k: usize) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(n: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Subset>) {
            if cur.len() == k {
                out.push(Subset { n, elems: cur.clone() });
                return;
            }
            let remaining = k - cur.len();
            for i in start..=(n + 1 - remaining as u32) {
                cur.push(i);
                rec(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        if k <= n as usize {
            rec(n, k, 1, &mut cur, &mut out);
        }
        out
    }

    /// All 2^n subsets, ordered by size then lexicographically.
    pub fn all(n: u32) -> Vec<Subset> {
        (0..=n as usize).flat_map(|k| Subset::all_of_size(n, k)).collect()
    }
}

/// Deterministic order: by size, then lexicographically on elements. This is
/// the enumeration order of [`Subset::all`] and of fermionic words within a
/// graded piece.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elems.len(), &self.elems, self.n).cmp(&(other.elems.len(), &other.elems, other.n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (t, i) in self.elems.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_validates() {
        let j = Subset::new(4, [4, 2]);
        assert_eq!(j.elems(), &[2, 4]);
        assert_eq!(j.complement().elems(), &[1, 3]);
        assert!(j.contains(2) && !j.contains(3));
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicates_rejected() {
        Subset::new(3, [1, 1]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn out_of_range_rejected() {
        Subset::new(3, [4]);
    }

    #[test]
    fn reversal_and_tail_union() {
        let k = Subset::new(5, [1, 4]);
        assert_eq!(k.reversal().elems(), &[2, 5]);
        assert_eq!(k.union_tail(3).elems(), &[1, 3, 4, 5]);
        assert_eq!(Subset::empty(3).union_tail(1).elems(), &[1, 2, 3]);
    }

    #[test]
    fn gale_examples() {
        let j = Subset::new(3, [1, 3]);
        assert!(Subset::new(3, [1, 2]).gale_leq(&j));
        assert!(!Subset::new(3, [2, 3]).gale_leq(&j));
        assert!(j.gale_leq(&j));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Subset::all_of_size(5, 2).len(), 10);
        assert_eq!(Subset::all(6).len(), 64);
        assert_eq!(Subset::all_of_size(3, 0), vec![Subset::empty(3)]);
        // lex order within a size class
        let two = Subset::all_of_size(3, 2);
        let elems: Vec<_> = two.iter().map(|s| s.elems().to_vec()).collect();
        assert_eq!(elems, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
