use alloc::vec::Vec;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::SetError;
use crate::zpset::ZpSet;
use crate::zset::ZSet;

/// An arithmetic progression `{start + i·diff : 0 ≤ i < length}`, in `Z`
/// (`modulus: None`) or in `Z_p` taken modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApSpec {
    pub start: i64,
    pub diff: i64,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<u32>,
}

impl ApSpec {
    /// The enumerated elements, reduced mod `p` when modular. By the type's
    /// invariants (`diff ≠ 0`, and `length ≤ p` in `Z_p`) they are distinct.
    pub fn elements(&self) -> Vec<i64> {
        (0..self.length as i64)
            .map(|i| {
                let e = self.start + i * self.diff;
                match self.modulus {
                    Some(p) => e.rem_euclid(p as i64),
                    None => e,
                }
            })
            .collect()
    }

    pub fn contains(&self, e: i64) -> bool {
        match self.modulus {
            None => {
                let d = e - self.start;
                d % self.diff == 0 && {
                    let i = d / self.diff;
                    (0..self.length as i64).contains(&i)
                }
            }
            Some(p) => {
                let p = p as i64;
                let inv = mod_inverse(self.diff.rem_euclid(p), p);
                let i = ((e - self.start).rem_euclid(p) * inv).rem_euclid(p);
                i < self.length as i64
            }
        }
    }

    /// `length − |covered set|`, the number of spare progression slots.
    pub fn slack(&self, set_len: usize) -> usize {
        self.length - set_len
    }

    /// Whether every element of `s` lies on the progression.
    pub fn covers(&self, elements: &[i64]) -> bool {
        elements.iter().all(|&e| self.contains(e))
    }

    /// The shortest AP containing a set of integers: difference the gcd of
    /// consecutive gaps (1 for singletons), start `min S`. Unique in `Z`.
    pub fn min_cover_z(s: &ZSet) -> Result<ApSpec, SetError> {
        let el = s.elements();
        if el.is_empty() {
            return Err(SetError::EmptyOperand("min_ap_cover"));
        }
        if el.len() == 1 {
            return Ok(ApSpec {
                start: el[0],
                diff: 1,
                length: 1,
                modulus: None,
            });
        }
        let mut g: i64 = 0;
        for w in el.windows(2) {
            g = g.gcd(&(w[1] - w[0]));
        }
        let span = el[el.len() - 1] - el[0];
        Ok(ApSpec {
            start: el[0],
            diff: g,
            length: (span / g) as usize + 1,
            modulus: None,
        })
    }

    /// The minimal AP with a prescribed positive difference containing a
    /// set of integers, when the difference divides every gap.
    pub fn cover_z_with_diff(s: &ZSet, diff: i64) -> Option<ApSpec> {
        let el = s.elements();
        if el.is_empty() || diff <= 0 {
            return None;
        }
        if el.iter().any(|&e| (e - el[0]).rem_euclid(diff) != 0) {
            return None;
        }
        let span = el[el.len() - 1] - el[0];
        Some(ApSpec {
            start: el[0],
            diff,
            length: (span / diff) as usize + 1,
            modulus: None,
        })
    }

    /// A minimum-length AP in `Z_p` containing `s`, found by dilating by
    /// each `diff^{-1}` and taking the shortest covering cyclic interval.
    /// Minima are not unique in `Z_p`, so ties are broken by the
    /// lexicographically smallest `(diff, start)`.
    pub fn min_cover_zp(s: &ZpSet) -> Result<ApSpec, SetError> {
        let p = s.modulus();
        if s.is_empty() {
            return Err(SetError::EmptyOperand("min_ap_cover"));
        }
        if s.len() == p as usize {
            return Ok(ApSpec {
                start: 0,
                diff: 1,
                length: p as usize,
                modulus: Some(p),
            });
        }
        let mut best: Option<ApSpec> = None;
        for diff in 1..p as i64 {
            let cand = ApSpec::cover_zp_with_diff(s, diff);
            let better = match &best {
                None => true,
                Some(b) => {
                    (cand.length, cand.diff, cand.start) < (b.length, b.diff, b.start)
                }
            };
            if better {
                best = Some(cand);
            }
        }
        Ok(best.expect("nonzero diff exists for p >= 2"))
    }

    /// The minimal AP with a prescribed difference containing a subset of
    /// `Z_p`; one always exists since every nonzero difference generates
    /// the group. Ties on start are broken by the smallest start value.
    pub fn cover_zp_with_diff(s: &ZpSet, diff: i64) -> ApSpec {
        let p = s.modulus() as i64;
        let diff = diff.rem_euclid(p);
        debug_assert!(diff != 0, "diff must be nonzero mod p");
        let inv = mod_inverse(diff, p);
        let mut dilated: Vec<i64> = s.elements().iter().map(|&e| (e * inv).rem_euclid(p)).collect();
        dilated.sort_unstable();
        let k = dilated.len();
        if k == p as usize {
            return ApSpec {
                start: 0,
                diff: 1,
                length: p as usize,
                modulus: Some(s.modulus()),
            };
        }
        // The minimal covering cyclic interval leaves out a largest gap.
        let mut max_gap = 0i64;
        for i in 0..k {
            let next = if i + 1 < k { dilated[i + 1] } else { dilated[0] + p };
            max_gap = max_gap.max(next - dilated[i]);
        }
        let length = (p - max_gap) as usize + 1;
        let mut start = i64::MAX;
        for i in 0..k {
            let next = if i + 1 < k { dilated[i + 1] } else { dilated[0] + p };
            if next - dilated[i] == max_gap {
                let first = if i + 1 < k { dilated[i + 1] } else { dilated[0] };
                start = start.min((first * diff).rem_euclid(p));
            }
        }
        ApSpec {
            start,
            diff,
            length,
            modulus: Some(s.modulus()),
        }
    }
}

/// Inverse of `a` mod `p` (`p` prime, `a` not divisible by `p`), by the
/// extended Euclidean algorithm.
pub(crate) fn mod_inverse(a: i64, p: i64) -> i64 {
    let (mut r0, mut r1) = (p, a.rem_euclid(p));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zs(e: &[i64]) -> ZSet {
        ZSet::new(e.iter().copied()).unwrap()
    }

    fn zp(p: u32, e: &[i64]) -> ZpSet {
        ZpSet::new(p, e.iter().copied()).unwrap()
    }

    #[test]
    fn inverse() {
        for p in [2i64, 3, 5, 7, 11, 13, 101] {
            for a in 1..p {
                assert_eq!((a * mod_inverse(a, p)).rem_euclid(p), 1);
            }
        }
    }

    #[test]
    fn min_cover_z_examples() {
        let c = ApSpec::min_cover_z(&zs(&[1, 5, 9])).unwrap();
        assert_eq!((c.start, c.diff, c.length), (1, 4, 3));
        assert_eq!(c.slack(3), 0);

        let c = ApSpec::min_cover_z(&zs(&[0, 4, 6])).unwrap();
        assert_eq!((c.start, c.diff, c.length), (0, 2, 4));
        assert_eq!(c.slack(3), 1);

        let c = ApSpec::min_cover_z(&zs(&[7])).unwrap();
        assert_eq!((c.start, c.diff, c.length), (7, 1, 1));
    }

    #[test]
    fn min_cover_zp_examples() {
        let c = ApSpec::min_cover_zp(&zp(7, &[5, 6, 0])).unwrap();
        assert_eq!((c.start, c.diff, c.length), (5, 1, 3));

        // {0,1,4} mod 7 is the progression 1, 4, 0 with difference 3.
        let c = ApSpec::min_cover_zp(&zp(7, &[0, 1, 4])).unwrap();
        assert_eq!(c.length, 3);
        assert_eq!(c.diff, 3);
        assert_eq!(c.start, 1);
        assert!(c.covers(&[0, 1, 4]));

        let c = ApSpec::min_cover_zp(&ZpSet::full(5).unwrap()).unwrap();
        assert_eq!((c.start, c.diff, c.length), (0, 1, 5));
    }

    #[test]
    fn cover_with_diff() {
        assert!(ApSpec::cover_z_with_diff(&zs(&[0, 3, 9]), 3).is_some());
        assert!(ApSpec::cover_z_with_diff(&zs(&[0, 3, 9]), 2).is_none());

        let c = ApSpec::cover_zp_with_diff(&zp(11, &[0, 2, 4]), 2);
        assert_eq!((c.start, c.length), (0, 3));
    }

    #[test]
    fn contains_mod_p() {
        let ap = ApSpec {
            start: 1,
            diff: 3,
            length: 3,
            modulus: Some(7),
        };
        assert_eq!(ap.elements(), &[1, 4, 0]);
        assert!(ap.contains(0));
        assert!(!ap.contains(5));
    }
}
