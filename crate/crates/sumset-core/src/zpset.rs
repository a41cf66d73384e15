use alloc::vec;
use alloc::vec::Vec;

use crate::error::SetError;

/// Largest supported modulus; keeps bitsets at most 16 Ki words.
pub const MAX_MODULUS: u32 = 1 << 20;

/// Deterministic trial-division primality test for the supported range.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A subset of `Z_p` (`p` prime), stored as a `p`-bit membership bitset.
///
/// Sumsets and translate unions are computed by OR-ing rotated copies of
/// the bitset, one rotation per translate, at cost `O(p/64)` words each.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZpSet {
    p: u32,
    words: Vec<u64>,
    len: usize,
}

fn word_count(p: u32) -> usize {
    ((p as usize) + 63) / 64
}

impl ZpSet {
    /// Builds a subset of `Z_p`. `p` must be prime and at most `2^20`;
    /// elements are reduced mod `p`.
    pub fn new(p: u32, elements: impl IntoIterator<Item = i64>) -> Result<Self, SetError> {
        if p < 2 || p > MAX_MODULUS {
            return Err(SetError::ModulusRange(p));
        }
        if !is_prime(p) {
            return Err(SetError::NotPrime(p));
        }
        let mut set = ZpSet {
            p,
            words: vec![0; word_count(p)],
            len: 0,
        };
        for e in elements {
            let r = e.rem_euclid(p as i64) as usize;
            if set.words[r / 64] & (1 << (r % 64)) == 0 {
                set.words[r / 64] |= 1 << (r % 64);
                set.len += 1;
            }
        }
        Ok(set)
    }

    /// The whole group `Z_p`.
    pub fn full(p: u32) -> Result<Self, SetError> {
        ZpSet::new(p, 0..p as i64)
    }

    fn from_words(p: u32, mut words: Vec<u64>) -> Self {
        mask_top(&mut words, p);
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ZpSet { p, words, len }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, e: i64) -> bool {
        let r = e.rem_euclid(self.p as i64) as usize;
        self.words[r / 64] & (1 << (r % 64)) != 0
    }

    /// Residues in ascending order `0 ≤ r < p`.
    pub fn elements(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len);
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push((i * 64 + b) as i64);
                w &= w - 1;
            }
        }
        out
    }

    fn check_same_modulus(&self, other: &ZpSet) -> Result<(), SetError> {
        if self.p != other.p {
            return Err(SetError::MismatchedModuli(self.p, other.p));
        }
        Ok(())
    }

    /// The translate `A + t` (a cyclic rotation of the bitset).
    pub fn translate(&self, t: i64) -> ZpSet {
        let t = t.rem_euclid(self.p as i64) as u32;
        ZpSet {
            p: self.p,
            words: rotate_left(&self.words, self.p, t),
            len: self.len,
        }
    }

    pub fn union(&self, other: &ZpSet) -> Result<ZpSet, SetError> {
        self.check_same_modulus(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Ok(ZpSet::from_words(self.p, words))
    }

    pub fn intersect(&self, other: &ZpSet) -> Result<ZpSet, SetError> {
        self.check_same_modulus(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(ZpSet::from_words(self.p, words))
    }

    /// Complement within `Z_p`.
    pub fn complement(&self) -> ZpSet {
        let words = self.words.iter().map(|w| !w).collect();
        ZpSet::from_words(self.p, words)
    }

    /// The reflection `−A = {p − a : a ∈ A}`.
    pub fn negate(&self) -> ZpSet {
        ZpSet::new(self.p, self.elements().iter().map(|&a| -a)).expect("same modulus")
    }

    /// The dilation `λA` (λ not divisible by p keeps the size).
    pub fn dilate(&self, lambda: i64) -> ZpSet {
        ZpSet::new(self.p, self.elements().iter().map(|&a| a * lambda)).expect("same modulus")
    }

    pub fn without(&self, excluded: &[i64]) -> ZpSet {
        let mut words = self.words.clone();
        for &e in excluded {
            let r = e.rem_euclid(self.p as i64) as usize;
            words[r / 64] &= !(1u64 << (r % 64));
        }
        ZpSet::from_words(self.p, words)
    }

    /// The sumset `{a + b mod p}`, by OR of shifted bitsets.
    pub fn sumset(&self, other: &ZpSet) -> Result<ZpSet, SetError> {
        self.check_same_modulus(other)?;
        if self.is_empty() || other.is_empty() {
            return Err(SetError::EmptyOperand("sumset"));
        }
        Ok(self.union_of_rotations(&other.elements()))
    }

    /// `∪_{t∈T} (A + t)` with each translate reduced mod p.
    pub fn translate_union(&self, translates: &[i64]) -> Result<ZpSet, SetError> {
        if self.is_empty() || translates.is_empty() {
            return Err(SetError::EmptyOperand("translate_union"));
        }
        Ok(self.union_of_rotations(translates))
    }

    fn union_of_rotations(&self, translates: &[i64]) -> ZpSet {
        let mut acc = vec![0u64; self.words.len()];
        for &t in translates {
            let t = t.rem_euclid(self.p as i64) as u32;
            or_rotated(&mut acc, &self.words, self.p, t);
        }
        ZpSet::from_words(self.p, acc)
    }

    /// The difference set `{a − b mod p}`.
    pub fn difference_set(&self, other: &ZpSet) -> Result<ZpSet, SetError> {
        self.check_same_modulus(other)?;
        if self.is_empty() || other.is_empty() {
            return Err(SetError::EmptyOperand("difference_set"));
        }
        let minus: Vec<i64> = other.elements().iter().map(|&b| -b).collect();
        Ok(self.union_of_rotations(&minus))
    }

    /// The shift gain `f_A(s) = |A| − |A ∩ (A + s)|`.
    pub fn shift_gain(&self, s: i64) -> usize {
        let t = s.rem_euclid(self.p as i64) as u32;
        let rotated = rotate_left(&self.words, self.p, t);
        let overlap: usize = self
            .words
            .iter()
            .zip(&rotated)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum();
        self.len - overlap
    }
}

fn mask_top(words: &mut [u64], p: u32) {
    let used = p as usize % 64;
    if used != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << used) - 1;
        }
    }
}

/// `dst |= rotl(src, t)` where `rotl` rotates the low `p` bits left by `t`.
fn or_rotated(dst: &mut [u64], src: &[u64], p: u32, t: u32) {
    debug_assert!(t < p);
    if p <= 64 {
        let m = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
        let w = src[0];
        let r = if t == 0 {
            w
        } else {
            ((w << t) | (w >> (p - t))) & m
        };
        dst[0] |= r;
        return;
    }
    let rotated = rotate_left(src, p, t);
    for (d, s) in dst.iter_mut().zip(&rotated) {
        *d |= s;
    }
}

/// Rotates the low `p` bits of `src` left by `t` (bit `i` moves to
/// `(i + t) mod p`).
fn rotate_left(src: &[u64], p: u32, t: u32) -> Vec<u64> {
    debug_assert!(t < p);
    let n = src.len();
    if t == 0 {
        return src.to_vec();
    }
    if p <= 64 {
        let m = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
        let w = src[0];
        return vec![((w << t) | (w >> (p - t))) & m];
    }
    // Shift left by t into a double-width buffer, then fold bits >= p back
    // onto the low part.
    let mut buf = vec![0u64; 2 * n + 1];
    let (ws, bs) = ((t / 64) as usize, t % 64);
    for i in 0..n {
        buf[i + ws] |= src[i] << bs;
        if bs > 0 {
            buf[i + ws + 1] |= src[i] >> (64 - bs);
        }
    }
    let mut out = buf[..n].to_vec();
    let (pw, pb) = ((p / 64) as usize, p % 64);
    for i in 0..n {
        let mut hi = buf[pw + i] >> pb;
        if pb > 0 && pw + i + 1 < buf.len() {
            hi |= buf[pw + i + 1] << (64 - pb);
        }
        out[i] |= hi;
    }
    mask_top(&mut out, p);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(p: u32, e: &[i64]) -> ZpSet {
        ZpSet::new(p, e.iter().copied()).unwrap()
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1009));
        assert!(!is_prime(1));
        assert!(!is_prime(8));
        assert!(!is_prime(1007)); // 19 * 53
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(ZpSet::new(8, [0]), Err(SetError::NotPrime(8))));
        assert!(matches!(
            ZpSet::new(MAX_MODULUS + 1, [0]),
            Err(SetError::ModulusRange(_))
        ));
    }

    #[test]
    fn construction_reduces_and_dedups() {
        let s = zp(7, &[-1, 6, 13, 3]);
        assert_eq!(s.elements(), &[3, 6]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn sumset_mod_p() {
        // Z_7: {0,3,6} + {0,3} = {0,1,2,3,5,6}
        let a = zp(7, &[0, 3, 6]);
        let b = zp(7, &[0, 3]);
        assert_eq!(a.sumset(&b).unwrap().elements(), &[0, 1, 2, 3, 5, 6]);
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = zp(7, &[0]);
        let b = zp(11, &[0]);
        assert!(matches!(
            a.sumset(&b),
            Err(SetError::MismatchedModuli(7, 11))
        ));
    }

    #[test]
    fn full_orbit() {
        // Z_5: {0,1} + {0,1,2,3,4} covers everything
        let a = zp(5, &[0, 1]);
        let u = a.translate_union(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(u.len(), 5);
    }

    #[test]
    fn difference_set_covers() {
        // Z_7: {0,2,3} - {0,2,3} = Z_7
        let b = zp(7, &[0, 2, 3]);
        assert_eq!(b.difference_set(&b).unwrap().len(), 7);
    }

    #[test]
    fn shift_gain_symmetry() {
        let a = zp(11, &[0, 1, 4, 9]);
        assert_eq!(a.shift_gain(0), 0);
        for s in 1..11 {
            assert_eq!(a.shift_gain(s), a.shift_gain(-s));
        }
    }

    #[test]
    fn rotation_wide_modulus() {
        // Cross-check the multi-word kernel against element arithmetic on a
        // modulus needing three words.
        let p = 131u32;
        let a = ZpSet::new(p, [0i64, 1, 63, 64, 65, 100, 130]).unwrap();
        for t in [0i64, 1, 63, 64, 65, 66, 127, 128, 129, 130] {
            let rotated = a.translate(t);
            let expected =
                ZpSet::new(p, a.elements().iter().map(|&e| e + t)).unwrap();
            assert_eq!(rotated, expected, "t={t}");
        }
    }

    #[test]
    fn complement_negate_dilate() {
        let a = zp(7, &[1, 2, 4]);
        assert_eq!(a.complement().elements(), &[0, 3, 5, 6]);
        assert_eq!(a.negate().elements(), &[3, 5, 6]);
        assert_eq!(a.dilate(2).elements(), &[1, 2, 4]); // quadratic residues are 2-invariant
        assert_eq!(a.dilate(3).elements(), &[3, 5, 6]);
    }
}
