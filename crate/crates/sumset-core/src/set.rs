use alloc::vec::Vec;

use crate::ap::ApSpec;
use crate::error::SetError;
use crate::zpset::ZpSet;
use crate::zset::ZSet;

/// Common interface of [`ZSet`] and [`ZpSet`] used by the selection
/// algorithms and checkers, which are written once for both ambients.
///
/// Elements are `i64` in both cases; a `Z_p` set exposes its residues in
/// `[0, p)`. Binary operations fail with
/// [`SetError::MismatchedModuli`](crate::SetError::MismatchedModuli) when
/// the moduli differ.
pub trait AdditiveSet: Clone + PartialEq + core::fmt::Debug {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Elements in ascending canonical order (residues `0..p` in `Z_p`).
    fn elements(&self) -> Vec<i64>;

    fn contains(&self, e: i64) -> bool;

    /// `Some(p)` for subsets of `Z_p`, `None` in `Z`.
    fn modulus(&self) -> Option<u32>;

    /// An empty set in the same ambient.
    fn empty_like(&self) -> Self;

    /// A set in the same ambient with the given elements.
    fn with_elements(&self, elements: &[i64]) -> Self;

    fn translate(&self, t: i64) -> Self;

    fn union(&self, other: &Self) -> Result<Self, SetError>;

    fn without(&self, excluded: &[i64]) -> Self;

    fn sumset(&self, other: &Self) -> Result<Self, SetError>;

    fn translate_union(&self, translates: &[i64]) -> Result<Self, SetError>;

    fn difference_set(&self, other: &Self) -> Result<Self, SetError>;

    fn shift_gain(&self, s: i64) -> usize;

    /// A minimum-length arithmetic progression containing the set.
    fn min_ap_cover(&self) -> Result<ApSpec, SetError>;

    /// The minimal AP cover with a prescribed difference, when one exists.
    fn cover_with_diff(&self, diff: i64) -> Option<ApSpec>;

    /// The nonzero shifts scanned by pair selection: positive elements of
    /// `B − B` in `Z` (by symmetry of the shift gain), all nonzero elements
    /// in `Z_p`.
    fn pair_shift_candidates(&self) -> Result<Vec<i64>, SetError> {
        let diffs = self.difference_set(self)?;
        let keep_negative = self.modulus().is_some();
        Ok(diffs
            .elements()
            .into_iter()
            .filter(|&s| if keep_negative { s != 0 } else { s > 0 })
            .collect())
    }
}

impl AdditiveSet for ZSet {
    fn len(&self) -> usize {
        ZSet::len(self)
    }

    fn elements(&self) -> Vec<i64> {
        ZSet::elements(self).to_vec()
    }

    fn contains(&self, e: i64) -> bool {
        ZSet::contains(self, e)
    }

    fn modulus(&self) -> Option<u32> {
        None
    }

    fn empty_like(&self) -> Self {
        ZSet::new([]).expect("empty set")
    }

    fn with_elements(&self, elements: &[i64]) -> Self {
        ZSet::new(elements.iter().copied()).expect("elements in range")
    }

    fn translate(&self, t: i64) -> Self {
        ZSet::translate(self, t)
    }

    fn union(&self, other: &Self) -> Result<Self, SetError> {
        Ok(ZSet::union(self, other))
    }

    fn without(&self, excluded: &[i64]) -> Self {
        ZSet::without(self, excluded)
    }

    fn sumset(&self, other: &Self) -> Result<Self, SetError> {
        ZSet::sumset(self, other)
    }

    fn translate_union(&self, translates: &[i64]) -> Result<Self, SetError> {
        ZSet::translate_union(self, translates)
    }

    fn difference_set(&self, other: &Self) -> Result<Self, SetError> {
        ZSet::difference_set(self, other)
    }

    fn shift_gain(&self, s: i64) -> usize {
        ZSet::shift_gain(self, s)
    }

    fn min_ap_cover(&self) -> Result<ApSpec, SetError> {
        ApSpec::min_cover_z(self)
    }

    fn cover_with_diff(&self, diff: i64) -> Option<ApSpec> {
        ApSpec::cover_z_with_diff(self, diff)
    }
}

impl AdditiveSet for ZpSet {
    fn len(&self) -> usize {
        ZpSet::len(self)
    }

    fn elements(&self) -> Vec<i64> {
        ZpSet::elements(self)
    }

    fn contains(&self, e: i64) -> bool {
        ZpSet::contains(self, e)
    }

    fn modulus(&self) -> Option<u32> {
        Some(self.modulus())
    }

    fn empty_like(&self) -> Self {
        ZpSet::new(self.modulus(), []).expect("same modulus")
    }

    fn with_elements(&self, elements: &[i64]) -> Self {
        ZpSet::new(self.modulus(), elements.iter().copied()).expect("same modulus")
    }

    fn translate(&self, t: i64) -> Self {
        ZpSet::translate(self, t)
    }

    fn union(&self, other: &Self) -> Result<Self, SetError> {
        ZpSet::union(self, other)
    }

    fn without(&self, excluded: &[i64]) -> Self {
        ZpSet::without(self, excluded)
    }

    fn sumset(&self, other: &Self) -> Result<Self, SetError> {
        ZpSet::sumset(self, other)
    }

    fn translate_union(&self, translates: &[i64]) -> Result<Self, SetError> {
        ZpSet::translate_union(self, translates)
    }

    fn difference_set(&self, other: &Self) -> Result<Self, SetError> {
        ZpSet::difference_set(self, other)
    }

    fn shift_gain(&self, s: i64) -> usize {
        ZpSet::shift_gain(self, s)
    }

    fn min_ap_cover(&self) -> Result<ApSpec, SetError> {
        ApSpec::min_cover_zp(self)
    }

    fn cover_with_diff(&self, diff: i64) -> Option<ApSpec> {
        Some(ApSpec::cover_zp_with_diff(self, diff))
    }
}
