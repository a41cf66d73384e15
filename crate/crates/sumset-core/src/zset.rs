use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::SetError;

/// Declared working range for elements of a [`ZSet`].
pub const Z_RANGE: i64 = 1 << 31;

/// A finite set of integers, stored as a strictly increasing sequence.
///
/// Construction normalizes (sorts and deduplicates); operations never
/// mutate their inputs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZSet {
    elements: Vec<i64>,
}

impl ZSet {
    /// Builds a set from arbitrary integers, sorting and deduplicating.
    /// Elements must lie within the declared working range `±2^31`.
    pub fn new(elements: impl IntoIterator<Item = i64>) -> Result<Self, SetError> {
        let mut elements: Vec<i64> = elements.into_iter().collect();
        for &e in &elements {
            if e.abs() > Z_RANGE {
                return Err(SetError::ElementRange(e));
            }
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(ZSet { elements })
    }

    /// Interval `{lo, lo+1, ..., hi}`.
    pub fn interval(lo: i64, hi: i64) -> Result<Self, SetError> {
        if lo > hi {
            return Err(SetError::invalid("interval with lo > hi"));
        }
        ZSet::new(lo..=hi)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn contains(&self, e: i64) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn min(&self) -> Option<i64> {
        self.elements.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elements.last().copied()
    }

    /// The translate `{a + t : a ∈ A}`.
    pub fn translate(&self, t: i64) -> ZSet {
        ZSet {
            elements: self.elements.iter().map(|a| a + t).collect(),
        }
    }

    /// Set union.
    pub fn union(&self, other: &ZSet) -> ZSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            let (a, b) = (self.elements[i], other.elements[j]);
            match a.cmp(&b) {
                core::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push(a);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.elements[i..]);
        out.extend_from_slice(&other.elements[j..]);
        ZSet { elements: out }
    }

    /// Set intersection.
    pub fn intersect(&self, other: &ZSet) -> ZSet {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|e| other.contains(*e))
            .collect();
        ZSet { elements }
    }

    /// Removes the listed elements.
    pub fn without(&self, excluded: &[i64]) -> ZSet {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|e| !excluded.contains(e))
            .collect();
        ZSet { elements }
    }

    /// The sumset `{a + b : a ∈ A, b ∈ B}`.
    pub fn sumset(&self, other: &ZSet) -> Result<ZSet, SetError> {
        if self.is_empty() || other.is_empty() {
            return Err(SetError::EmptyOperand("sumset"));
        }
        Ok(self.union_of_translates(&other.elements))
    }

    /// `∪_{t∈T} (A + t)`; equals `sumset(A, T)`.
    pub fn translate_union(&self, translates: &[i64]) -> Result<ZSet, SetError> {
        if self.is_empty() || translates.is_empty() {
            return Err(SetError::EmptyOperand("translate_union"));
        }
        Ok(self.union_of_translates(translates))
    }

    fn union_of_translates(&self, translates: &[i64]) -> ZSet {
        let mut out: Vec<i64> = Vec::with_capacity(self.len() * translates.len());
        for &t in translates {
            out.extend(self.elements.iter().map(|a| a + t));
        }
        out.sort_unstable();
        out.dedup();
        ZSet { elements: out }
    }

    /// The difference set `{a − b : a ∈ A, b ∈ B}`.
    pub fn difference_set(&self, other: &ZSet) -> Result<ZSet, SetError> {
        if self.is_empty() || other.is_empty() {
            return Err(SetError::EmptyOperand("difference_set"));
        }
        let mut out: Vec<i64> = Vec::with_capacity(self.len() * other.len());
        for &b in &other.elements {
            out.extend(self.elements.iter().map(|a| a - b));
        }
        out.sort_unstable();
        out.dedup();
        Ok(ZSet { elements: out })
    }

    /// The shift gain `f_A(s) = |(A + s) \ A| = |A| − |A ∩ (A + s)|`.
    pub fn shift_gain(&self, s: i64) -> usize {
        let overlap = self
            .elements
            .iter()
            .filter(|&&a| self.contains(a + s))
            .count();
        self.len() - overlap
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn zs(e: &[i64]) -> ZSet {
        ZSet::new(e.iter().copied()).unwrap()
    }

    #[test]
    fn construction_normalizes() {
        let s = zs(&[3, 1, 3, -2]);
        assert_eq!(s.elements(), &[-2, 1, 3]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn range_enforced() {
        assert!(matches!(
            ZSet::new([Z_RANGE + 1]),
            Err(SetError::ElementRange(_))
        ));
    }

    #[test]
    fn sumset_identity_translate() {
        let s = zs(&[4, 7, 9]);
        let zero = zs(&[0]);
        assert_eq!(zero.sumset(&s).unwrap(), s);
    }

    #[test]
    fn sumset_direct() {
        // {0,1,3} + {0,2} enumerates to {0,1,2,3,5}
        let a = zs(&[0, 1, 3]);
        let b = zs(&[0, 2]);
        assert_eq!(a.sumset(&b).unwrap(), zs(&[0, 1, 2, 3, 5]));
    }

    #[test]
    fn sumset_empty_rejected() {
        let a = zs(&[0]);
        let empty = ZSet::new(vec![]).unwrap();
        assert!(matches!(
            a.sumset(&empty),
            Err(SetError::EmptyOperand(_))
        ));
    }

    #[test]
    fn sumset_superadditive() {
        let a = zs(&[1, 2, 3, 4]);
        let b = zs(&[0, 3]);
        let s = a.sumset(&b).unwrap();
        assert!(s.len() >= a.len() + b.len() - 1);
    }

    #[test]
    fn translate_union_matches_sumset() {
        let a = zs(&[1, 2, 3, 4]);
        let u = a.translate_union(&[0, 3]).unwrap();
        assert_eq!(u, zs(&[1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(u.len(), 7);
        assert_eq!(a.translate_union(&[0]).unwrap(), a);
    }

    #[test]
    fn difference_set_symmetric_around_zero() {
        let b = zs(&[0, 1]);
        assert_eq!(b.difference_set(&b).unwrap(), zs(&[-1, 0, 1]));
        let a = zs(&[0, 5]);
        assert_eq!(a.difference_set(&zs(&[1])).unwrap(), zs(&[-1, 4]));
    }

    #[test]
    fn shift_gain_values() {
        assert_eq!(zs(&[0, 1, 2]).shift_gain(1), 1);
        assert_eq!(zs(&[0, 1, 2]).shift_gain(0), 0);
        assert_eq!(zs(&[0, 2, 4]).shift_gain(1), 3);
        // f_A(s) = f_A(-s)
        let a = zs(&[0, 2, 3, 7]);
        for s in -9..=9 {
            assert_eq!(a.shift_gain(s), a.shift_gain(-s));
        }
    }

    #[test]
    fn union_and_without() {
        let a = zs(&[1, 3, 5]);
        let b = zs(&[2, 3]);
        assert_eq!(a.union(&b), zs(&[1, 2, 3, 5]));
        assert_eq!(a.without(&[3]), zs(&[1, 5]));
        assert_eq!(a.intersect(&b), zs(&[3]));
    }
}
