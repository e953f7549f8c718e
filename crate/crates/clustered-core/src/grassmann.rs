//! Grassmannian contexts and box-bounded partitions.
//!
//! A [`GrassContext`] fixes G(k, n), the Grassmannian of projective k-planes
//! in projective n-space, of dimension (k+1)(n-k). Schubert classes on it are
//! indexed by partitions fitting in a (k+1) x (n-k) box. Partitions are kept
//! at full length (`num_parts` entries, trailing zeros included) so that the
//! positional formulas for duals and shifts are total on admissible input.
//!
//! Two shape conventions are common for the same geometry: k+1 parts bounded
//! by n-k, or k parts bounded by n-k+1 when working with (k-1)-planes in P^n.
//! Both are instances of one context type here: the latter is simply
//! `GrassContext::new(k-1, n)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

/// Errors from context/partition construction and the partition operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrassmannError {
    /// Contexts require 0 <= planeDim < ambientDim.
    InvalidContext { plane_dim: u32, ambient_dim: u32 },
    /// Partition parts must be weakly decreasing.
    NotWeaklyDecreasing,
    /// The partition does not fit the context: wrong part count, or a part
    /// exceeding the box.
    NotAdmissible { num_parts: usize, max_part: u32 },
    /// The h-shift adds 1 to every part; it needs headroom (first part below
    /// the box maximum).
    HShiftUndefined,
    /// The p-shift prepends a maximal part and drops a trailing zero, which
    /// must be present.
    PShiftUndefined,
}

impl fmt::Display for GrassmannError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrassmannError::InvalidContext {
                plane_dim,
                ambient_dim,
            } => write!(
                f,
                "invalid context: planeDim {plane_dim} must be < ambientDim {ambient_dim} (both nonnegative)"
            ),
            GrassmannError::NotWeaklyDecreasing => {
                write!(f, "partition parts must be weakly decreasing")
            }
            GrassmannError::NotAdmissible { num_parts, max_part } => write!(
                f,
                "partition not admissible: need exactly {num_parts} parts, each at most {max_part}"
            ),
            GrassmannError::HShiftUndefined => {
                write!(f, "h-shift undefined: first part already equals the box maximum")
            }
            GrassmannError::PShiftUndefined => {
                write!(f, "p-shift undefined: last part is nonzero")
            }
        }
    }
}

impl core::error::Error for GrassmannError {}

/// The Grassmannian G(k, n) of projective k-planes in P^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassContext {
    plane_dim: u32,
    ambient_dim: u32,
}

impl GrassContext {
    /// Build G(planeDim, ambientDim); requires 0 <= planeDim < ambientDim.
    pub fn new(plane_dim: u32, ambient_dim: u32) -> Result<Self, GrassmannError> {
        if plane_dim >= ambient_dim {
            return Err(GrassmannError::InvalidContext {
                plane_dim,
                ambient_dim,
            });
        }
        Ok(GrassContext {
            plane_dim,
            ambient_dim,
        })
    }

    pub fn plane_dim(&self) -> u32 {
        self.plane_dim
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    /// Number of parts of an admissible partition: k+1.
    pub fn num_parts(&self) -> usize {
        self.plane_dim as usize + 1
    }

    /// Largest admissible part: n-k.
    pub fn max_part(&self) -> u32 {
        self.ambient_dim - self.plane_dim
    }

    /// dim G(k, n) = (k+1)(n-k).
    pub fn dimension(&self) -> u32 {
        (self.plane_dim + 1) * (self.ambient_dim - self.plane_dim)
    }

    /// The all-zeros partition (fundamental class index).
    pub fn zero_partition(&self) -> Partition {
        Partition {
            parts: alloc::vec![0; self.num_parts()],
        }
    }

    /// The full-box partition (point class index).
    pub fn top_partition(&self) -> Partition {
        Partition {
            parts: alloc::vec![self.max_part(); self.num_parts()],
        }
    }

    pub fn is_admissible(&self, p: &Partition) -> bool {
        p.len() == self.num_parts() && p.first_part() <= self.max_part()
    }

    pub fn check_admissible(&self, p: &Partition) -> Result<(), GrassmannError> {
        if self.is_admissible(p) {
            Ok(())
        } else {
            Err(GrassmannError::NotAdmissible {
                num_parts: self.num_parts(),
                max_part: self.max_part(),
            })
        }
    }

    /// Number of admissible partitions: binomial(n+1, k+1).
    pub fn partition_count(&self) -> BigInt {
        let n = self.ambient_dim as u64 + 1;
        let k = self.plane_dim as u64 + 1;
        let mut acc = BigInt::from(1u32);
        for j in 0..k.min(n - k) {
            acc = acc * (n - j) / (j + 1);
        }
        acc
    }

    /// Every admissible partition exactly once, sorted by size and then
    /// lexicographically within each size, so downstream reports are
    /// deterministic. The count equals [`Self::partition_count`].
    pub fn partitions(&self) -> Vec<Partition> {
        fn rec(out: &mut Vec<Partition>, cur: &mut Vec<u32>, bound: u32, remaining: usize) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let mut v = bound + 1;
            while v > 0 {
                v -= 1;
                cur.push(v);
                rec(out, cur, v, remaining - 1);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.num_parts());
        rec(&mut out, &mut cur, self.max_part(), self.num_parts());
        out.sort_unstable_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| a.parts.cmp(&b.parts))
        });
        out
    }

    /// The complementary partition: reverse the parts and subtract each from
    /// the box maximum. An involution, with |p| + |p*| = dim G(k, n).
    pub fn dual(&self, p: &Partition) -> Result<Partition, GrassmannError> {
        self.check_admissible(p)?;
        let m = self.max_part();
        let parts: Vec<u32> = p.parts.iter().rev().map(|&x| m - x).collect();
        Ok(Partition { parts })
    }

    /// The two shift operators. `H` adds 1 to every part (size grows by
    /// `num_parts`); `P` prepends a maximal part and drops the trailing zero
    /// (size grows by `max_part`).
    pub fn shift(&self, p: &Partition, mode: ShiftMode) -> Result<Partition, GrassmannError> {
        self.check_admissible(p)?;
        match mode {
            ShiftMode::H => {
                if p.first_part() == self.max_part() {
                    return Err(GrassmannError::HShiftUndefined);
                }
                let parts: Vec<u32> = p.parts.iter().map(|&x| x + 1).collect();
                Ok(Partition { parts })
            }
            ShiftMode::P => {
                if p.parts.last().copied().unwrap_or(0) != 0 {
                    return Err(GrassmannError::PShiftUndefined);
                }
                let mut parts = Vec::with_capacity(p.len());
                parts.push(self.max_part());
                parts.extend_from_slice(&p.parts[..p.len() - 1]);
                Ok(Partition { parts })
            }
        }
    }
}

impl fmt::Display for GrassContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({}, {})", self.plane_dim, self.ambient_dim)
    }
}

/// Which shift operator to apply; see [`GrassContext::shift`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMode {
    /// Add 1 to every part.
    H,
    /// Prepend a maximal part, drop the trailing zero.
    P,
}

/// A weakly decreasing tuple of nonnegative integers. Trailing zeros are
/// significant: a partition is admissible in a context only at full length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, GrassmannError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(GrassmannError::NotWeaklyDecreasing);
        }
        Ok(Partition { parts })
    }

    /// Convenience constructor from a slice.
    pub fn of(parts: &[u32]) -> Result<Self, GrassmannError> {
        Self::new(parts.to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |p|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn num_nonzero(&self) -> usize {
        self.parts.iter().filter(|&&x| x > 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts).unwrap()
    }

    #[test]
    fn context_derived_quantities() {
        let ctx = GrassContext::new(1, 3).unwrap();
        assert_eq!(ctx.num_parts(), 2);
        assert_eq!(ctx.max_part(), 2);
        assert_eq!(ctx.dimension(), 4);

        let ctx = GrassContext::new(2, 4).unwrap();
        assert_eq!(ctx.num_parts(), 3);
        assert_eq!(ctx.max_part(), 2);
        assert_eq!(ctx.dimension(), 6);
    }

    #[test]
    fn context_rejects_degenerate_inputs() {
        assert_eq!(
            GrassContext::new(3, 3),
            Err(GrassmannError::InvalidContext {
                plane_dim: 3,
                ambient_dim: 3
            })
        );
        assert!(GrassContext::new(5, 2).is_err());
    }

    #[test]
    fn partition_rejects_increasing_parts() {
        assert_eq!(
            Partition::of(&[1, 2]),
            Err(GrassmannError::NotWeaklyDecreasing)
        );
        assert!(Partition::of(&[3, 3, 1, 0, 0]).is_ok());
    }

    #[test]
    fn enumeration_in_g13_is_the_known_sextuple() {
        let ctx = GrassContext::new(1, 3).unwrap();
        let all = ctx.partitions();
        let expect: Vec<Partition> = [
            &[0, 0][..],
            &[1, 0],
            &[1, 1],
            &[2, 0],
            &[2, 1],
            &[2, 2],
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        assert_eq!(all, expect);
    }

    #[test]
    fn enumeration_in_p1_is_trivial() {
        let ctx = GrassContext::new(0, 1).unwrap();
        assert_eq!(ctx.partitions(), alloc::vec![p(&[0]), p(&[1])]);
    }

    #[test]
    fn enumeration_counts_match_binomials() {
        for n in 1..=6u32 {
            for k in 0..n {
                let ctx = GrassContext::new(k, n).unwrap();
                let all = ctx.partitions();
                assert_eq!(BigInt::from(all.len()), ctx.partition_count());
                // no duplicates, all admissible, all weakly decreasing
                for w in all.windows(2) {
                    assert_ne!(w[0], w[1]);
                }
                for q in &all {
                    assert!(ctx.is_admissible(q));
                    assert!(Partition::of(q.parts()).is_ok());
                }
            }
        }
        let ctx = GrassContext::new(2, 4).unwrap();
        assert_eq!(ctx.partitions().len(), 10);
    }

    #[test]
    fn dual_matches_hand_computations() {
        let ctx = GrassContext::new(2, 4).unwrap();
        assert_eq!(ctx.dual(&p(&[2, 1, 0])).unwrap(), p(&[2, 1, 0]));
        assert_eq!(ctx.dual(&p(&[0, 0, 0])).unwrap(), p(&[2, 2, 2]));
        let ctx = GrassContext::new(1, 3).unwrap();
        assert_eq!(ctx.dual(&p(&[2, 0])).unwrap(), p(&[2, 0]));
        assert_eq!(ctx.dual(&p(&[1, 0])).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn dual_is_a_size_complementing_involution() {
        for n in 1..=6u32 {
            for k in 0..n {
                let ctx = GrassContext::new(k, n).unwrap();
                for q in ctx.partitions() {
                    let d = ctx.dual(&q).unwrap();
                    assert!(ctx.is_admissible(&d));
                    assert_eq!(q.size() + d.size(), ctx.dimension());
                    assert_eq!(ctx.dual(&d).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn dual_rejects_inadmissible_input() {
        let ctx = GrassContext::new(1, 3).unwrap();
        assert!(ctx.dual(&p(&[3, 0])).is_err());
        assert!(ctx.dual(&p(&[1, 1, 0])).is_err());
    }

    #[test]
    fn shifts_match_the_notation_examples() {
        let ctx = GrassContext::new(1, 3).unwrap();
        assert_eq!(ctx.shift(&p(&[1, 0]), ShiftMode::H).unwrap(), p(&[2, 1]));
        assert_eq!(ctx.shift(&p(&[1, 0]), ShiftMode::P).unwrap(), p(&[2, 1]));
        assert_eq!(
            ctx.shift(&p(&[2, 1]), ShiftMode::H),
            Err(GrassmannError::HShiftUndefined)
        );
        assert_eq!(
            ctx.shift(&p(&[2, 1]), ShiftMode::P),
            Err(GrassmannError::PShiftUndefined)
        );
    }

    #[test]
    fn shifts_raise_size_by_the_right_amount() {
        for n in 1..=6u32 {
            for k in 0..n {
                let ctx = GrassContext::new(k, n).unwrap();
                for q in ctx.partitions() {
                    if q.first_part() != ctx.max_part() {
                        let h = ctx.shift(&q, ShiftMode::H).unwrap();
                        assert!(ctx.is_admissible(&h));
                        assert_eq!(h.size(), q.size() + ctx.num_parts() as u32);
                    } else {
                        assert!(ctx.shift(&q, ShiftMode::H).is_err());
                    }
                    if q.parts().last() == Some(&0) {
                        let s = ctx.shift(&q, ShiftMode::P).unwrap();
                        assert!(ctx.is_admissible(&s));
                        assert_eq!(s.size(), q.size() + ctx.max_part());
                    } else {
                        assert!(ctx.shift(&q, ShiftMode::P).is_err());
                    }
                }
            }
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(alloc::format!("{}", p(&[3, 2, 1])), "(3, 2, 1)");
        let ctx = GrassContext::new(2, 5).unwrap();
        assert_eq!(alloc::format!("{ctx}"), "G(2, 5)");
    }
}
