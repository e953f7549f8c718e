//! Kernel splitting types of graded maps O(1)^(n+1) -> O(d) on P¹.
//!
//! The twists of the saturated kernel sheaf are recovered from exact section
//! counts: h(t) = dim ker(H⁰(O(1+t))^(n+1) -> H⁰(O(d+t))) equals
//! Σ max(a_i+1+t, 0), so successive differences h(t) - h(t-1) count the
//! twists a_i >= -t. No floating point is involved at any stage.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::form::BinaryForm;
use super::linalg::integer_rank;
use super::P1Error;

/// A map O(1)^(n+1) -> O(d) recorded by its row of degree-(d-1) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    target_degree: u32,
    entries: Vec<BinaryForm>,
}

impl GradedMap {
    /// Entries must all have degree `target_degree - 1`, with at least one
    /// nonzero.
    pub fn new(target_degree: u32, entries: Vec<BinaryForm>) -> Result<Self, P1Error> {
        if target_degree == 0 {
            return Err(P1Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        for e in &entries {
            if e.degree() != target_degree - 1 {
                return Err(P1Error::DegreeMismatch {
                    expected: target_degree - 1,
                    found: e.degree(),
                });
            }
        }
        if entries.iter().all(BinaryForm::is_zero) {
            return Err(P1Error::ZeroMap);
        }
        Ok(GradedMap {
            target_degree,
            entries,
        })
    }

    pub fn source_rank(&self) -> usize {
        self.entries.len()
    }

    pub fn target_degree(&self) -> u32 {
        self.target_degree
    }

    pub fn entries(&self) -> &[BinaryForm] {
        &self.entries
    }

    /// Gcd of the nonzero entries; degree 0 exactly when the map is
    /// surjective as a map of sheaves.
    pub fn entry_gcd(&self) -> BinaryForm {
        let mut acc = BinaryForm::zero(0);
        for e in &self.entries {
            acc = acc.gcd(e);
        }
        acc
    }
}

/// The map (∂_s p, ∂_t p, f_2, …, f_n) attached to a marked binary form p and
/// a list of companion forms of degree deg(p) - 1.
pub fn build_osculating_map(p: &BinaryForm, fs: &[BinaryForm]) -> Result<GradedMap, P1Error> {
    if p.is_zero() {
        return Err(P1Error::ZeroForm);
    }
    let distinct = p.num_distinct_roots()?;
    if distinct < 2 {
        return Err(P1Error::NotEnoughDistinctRoots { distinct });
    }
    let d = p.degree();
    let mut entries = Vec::with_capacity(fs.len() + 2);
    entries.push(p.derivative_s());
    entries.push(p.derivative_t());
    for f in fs {
        if f.degree() != d - 1 {
            return Err(P1Error::DegreeMismatch {
                expected: d - 1,
                found: f.degree(),
            });
        }
        entries.push(f.clone());
    }
    GradedMap::new(d, entries)
}

/// Clears denominators: the coefficient vector of an entry, rescaled by the
/// lcm of its denominators. Column scaling leaves matrix ranks unchanged.
fn integer_coefficients(entry: &BinaryForm) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in entry.coefficients() {
        if !c.is_zero() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let scale = num_rational::BigRational::from_integer(lcm);
    entry
        .coefficients()
        .iter()
        .map(|c| (c * &scale).to_integer())
        .collect()
}

/// dim ker of the induced map H⁰(O(1+t))^(n+1) -> H⁰(O(d+t)) of rational
/// vector spaces, computed by exact integer rank.
pub fn section_kernel_dimension(map: &GradedMap, t: i64) -> usize {
    if t < -1 {
        return 0;
    }
    let d = map.target_degree() as i64;
    let shifts = (t + 2) as usize; // dim H⁰(O(1+t))
    let target_dim = (d + t + 1) as usize;
    let cols = map.source_rank() * shifts;
    // one matrix row per (entry, shift monomial); ranks are insensitive to
    // the transpose
    let mut rows = Vec::with_capacity(cols);
    for entry in map.entries() {
        let coeffs = integer_coefficients(entry);
        for j in 0..shifts {
            let mut row = alloc::vec![BigInt::zero(); target_dim];
            for (i, c) in coeffs.iter().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    cols - integer_rank(rows)
}

/// The twists a_1 >= … >= a_r of a direct sum of line bundles O(a_i) on P¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittingType {
    twists: Vec<i64>,
}

impl SplittingType {
    /// Normalizes to weakly decreasing order.
    pub fn new(mut twists: Vec<i64>) -> Self {
        twists.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { twists }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.twists.iter().sum()
    }

    /// |a_i - a_j| <= 1 for all pairs. Undefined for rank 0.
    pub fn is_balanced(&self) -> Result<bool, P1Error> {
        let max = self.twists.first().ok_or(P1Error::EmptyType)?;
        let min = self.twists.last().expect("nonempty");
        Ok(max - min <= 1)
    }

    /// h⁰ of the twist by t: Σ max(a_i + 1 + t, 0).
    pub fn section_profile(&self, t: i64) -> usize {
        self.twists
            .iter()
            .map(|&a| (a + 1 + t).max(0) as usize)
            .sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Splitting type of the saturated kernel sheaf of the map, of rank
/// `source_rank - 1`. The recovered twists always satisfy a_i <= 1 and sum
/// to `source_rank - target_degree + deg(entry gcd)`.
pub fn kernel_splitting_type(map: &GradedMap) -> SplittingType {
    let rank = map.source_rank() - 1;
    if rank == 0 {
        return SplittingType::new(Vec::new());
    }
    let mut twists = Vec::with_capacity(rank);
    let mut h_prev = 0usize; // h(-2) = 0
    let mut count_prev = 0usize;
    let mut t = -1i64;
    loop {
        let h = section_kernel_dimension(map, t);
        let count = h - h_prev; // #{i : a_i >= -t}
        debug_assert!(count >= count_prev);
        for _ in count_prev..count {
            twists.push(-t);
        }
        if count == rank {
            break;
        }
        h_prev = h;
        count_prev = count;
        t += 1;
        assert!(
            t <= map.target_degree() as i64 + rank as i64 + 2,
            "section profile failed to stabilize"
        );
    }
    let result = SplittingType::new(twists);
    let expected_degree = map.source_rank() as i64 - map.target_degree() as i64
        + map.entry_gcd().degree() as i64;
    assert_eq!(result.degree(), expected_degree);
    assert!(result.twists().iter().all(|&a| a <= 1));
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(coeffs: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(coeffs)
    }

    #[test]
    fn graded_map_validation() {
        assert!(GradedMap::new(2, vec![f(&[0, 1]), f(&[1, 0])]).is_ok());
        assert_eq!(
            GradedMap::new(2, vec![f(&[0, 1, 0])]),
            Err(P1Error::DegreeMismatch {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            GradedMap::new(3, vec![BinaryForm::zero(2), BinaryForm::zero(2)]),
            Err(P1Error::ZeroMap)
        );
        assert_eq!(GradedMap::new(3, vec![]), Err(P1Error::ZeroMap));
    }

    #[test]
    fn osculating_map_from_st() {
        // p = st, one companion s+t
        let p = f(&[0, 1, 0]);
        let m = build_osculating_map(&p, &[f(&[1, 1])]).unwrap();
        assert_eq!(m.source_rank(), 3);
        assert_eq!(m.target_degree(), 2);
        assert_eq!(m.entries()[0], f(&[0, 1])); // t
        assert_eq!(m.entries()[1], f(&[1, 0])); // s
        assert_eq!(m.entries()[2], f(&[1, 1]));
    }

    #[test]
    fn osculating_map_rejects_single_root() {
        let p = f(&[1, 0, 0, 0]); // s^3
        assert_eq!(
            build_osculating_map(&p, &[]),
            Err(P1Error::NotEnoughDistinctRoots { distinct: 1 })
        );
        assert_eq!(
            build_osculating_map(&BinaryForm::zero(3), &[]),
            Err(P1Error::ZeroForm)
        );
        // degree-1 forms have a single root; degree-0 none
        assert_eq!(
            build_osculating_map(&f(&[1, 2]), &[]),
            Err(P1Error::NotEnoughDistinctRoots { distinct: 1 })
        );
        assert_eq!(
            build_osculating_map(&f(&[7]), &[]),
            Err(P1Error::NotEnoughDistinctRoots { distinct: 0 })
        );
    }

    #[test]
    fn osculating_map_no_companions() {
        // p = s^2 - t^2 -> entries (2s, -2t)
        let m = build_osculating_map(&f(&[1, 0, -1]), &[]).unwrap();
        assert_eq!(m.source_rank(), 2);
        assert_eq!(m.entries()[0], f(&[2, 0]));
        assert_eq!(m.entries()[1], f(&[0, -2]));
    }

    #[test]
    fn osculating_map_checks_companion_degrees() {
        let p = f(&[0, 1, 0]);
        assert_eq!(
            build_osculating_map(&p, &[f(&[1, 1, 1])]),
            Err(P1Error::DegreeMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn splitting_of_rank_two_kernel() {
        let m = GradedMap::new(2, vec![f(&[0, 1]), f(&[1, 0]), f(&[1, 1])]).unwrap();
        assert_eq!(kernel_splitting_type(&m).twists(), &[1, 0]);
    }

    #[test]
    fn splitting_of_line_kernel() {
        // (2s, -2t): the syzygy (t, s) spans a kernel of degree 0
        let m = GradedMap::new(2, vec![f(&[2, 0]), f(&[0, -2])]).unwrap();
        assert_eq!(kernel_splitting_type(&m).twists(), &[0]);
    }

    #[test]
    fn splitting_balanced_four_entries() {
        let m = GradedMap::new(
            2,
            vec![f(&[0, 1]), f(&[1, 0]), f(&[1, 2]), f(&[3, -1])],
        )
        .unwrap();
        assert_eq!(kernel_splitting_type(&m).twists(), &[1, 1, 0]);
    }

    #[test]
    fn splitting_of_injective_map_is_empty() {
        let m = GradedMap::new(4, vec![f(&[1, 0, 2, -1])]).unwrap();
        let ty = kernel_splitting_type(&m);
        assert!(ty.is_empty());
        assert_eq!(ty.is_balanced(), Err(P1Error::EmptyType));
    }

    #[test]
    fn splitting_accounts_for_common_factor() {
        // (t(s+t), s(s+t)): gcd degree 1, kernel O(0) inside O(1)^2
        let m = GradedMap::new(3, vec![f(&[0, 1, 1]), f(&[1, 1, 0])]).unwrap();
        assert_eq!(m.entry_gcd().degree(), 1);
        assert_eq!(kernel_splitting_type(&m).twists(), &[0]);
    }

    #[test]
    fn splitting_with_zero_entry() {
        // a zero entry contributes a full O(1) summand to the kernel
        let m = GradedMap::new(2, vec![f(&[0, 1]), BinaryForm::zero(1), f(&[1, 0])]).unwrap();
        assert_eq!(kernel_splitting_type(&m).twists(), &[1, 0]);
    }

    #[test]
    fn balancedness_examples() {
        assert_eq!(SplittingType::new(vec![1, 0]).is_balanced(), Ok(true));
        assert_eq!(SplittingType::new(vec![1, 1, 0]).is_balanced(), Ok(true));
        assert_eq!(SplittingType::new(vec![1, 0, -1]).is_balanced(), Ok(false));
        // construction sorts
        assert_eq!(SplittingType::new(vec![0, 1, 1]).twists(), &[1, 1, 0]);
    }

    fn random_form(rng: &mut ChaCha8Rng, degree: u32) -> BinaryForm {
        loop {
            let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-10..=10)).collect();
            if coeffs.iter().any(|&c| c != 0) {
                return BinaryForm::from_ints(&coeffs);
            }
        }
    }

    fn random_marked_form(rng: &mut ChaCha8Rng, degree: u32) -> BinaryForm {
        loop {
            let p = random_form(rng, degree);
            if p.num_distinct_roots().map(|r| r >= 2).unwrap_or(false) {
                return p;
            }
        }
    }

    #[test]
    fn balanced_for_general_companions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x105C);
        for n in 3..=5u32 {
            for d in [n - 1, n - 2] {
                if d < 2 {
                    continue;
                }
                for _ in 0..20 {
                    let p = random_marked_form(&mut rng, d);
                    // companions f_2, …, f_n
                    let fs: Vec<BinaryForm> =
                        (0..n - 1).map(|_| random_form(&mut rng, d - 1)).collect();
                    let m = build_osculating_map(&p, &fs).unwrap();
                    let ty = kernel_splitting_type(&m);
                    assert_eq!(ty.rank(), n as usize);
                    assert_eq!(ty.is_balanced(), Ok(true), "p={p}, type {ty}");
                }
            }
        }
    }

    #[test]
    fn degree_accounting_random_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xACC7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=5u32);
            let d = rng.gen_range(1..=5u32);
            let entries: Vec<BinaryForm> =
                (0..=n).map(|_| random_form(&mut rng, d - 1)).collect();
            let m = GradedMap::new(d, entries).unwrap();
            let ty = kernel_splitting_type(&m);
            assert_eq!(ty.rank(), n as usize);
            assert_eq!(
                ty.degree(),
                (n + 1) as i64 - d as i64 + m.entry_gcd().degree() as i64
            );
            assert!(ty.twists().iter().all(|&a| a <= 1));
        }
    }

    #[test]
    fn section_profile_matches_direct_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9807);
        for _ in 0..25 {
            let n = rng.gen_range(1..=4u32);
            let d = rng.gen_range(1..=4u32);
            let entries: Vec<BinaryForm> =
                (0..=n).map(|_| random_form(&mut rng, d - 1)).collect();
            let m = GradedMap::new(d, entries).unwrap();
            let ty = kernel_splitting_type(&m);
            for t in -2..=(d as i64 + 2) {
                assert_eq!(
                    ty.section_profile(t),
                    section_kernel_dimension(&m, t),
                    "t={t}, map degree {d}"
                );
            }
        }
    }

    #[test]
    fn rational_entries_are_handled_exactly() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let e1 = BinaryForm::new(1, vec![BigRational::from_integer(0.into()), half]).unwrap();
        let e2 = BinaryForm::new(1, vec![third, BigRational::from_integer(0.into())]).unwrap();
        let m = GradedMap::new(2, vec![e1, e2, f(&[1, 1])]).unwrap();
        assert_eq!(kernel_splitting_type(&m).twists(), &[1, 0]);
    }
}
