//! The integer cohomology ring of G(k, n) in the Schubert basis.
//!
//! Products expand through Littlewood-Richardson coefficients, computed by
//! direct enumeration of Littlewood-Richardson skew tableaux (semistandard
//! rows, strictly increasing columns, lattice reading word). Expansion terms
//! whose partition leaves the context's box are discarded: this is the ring
//! of a fixed Grassmannian, not the full ring of symmetric functions.
//!
//! There is no global memo table. [`LrCache`] is an explicit value; callers
//! that want sharing across threads can put one behind a lock (identical keys
//! always produce identical values, so last-write-wins refills are harmless).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::grassmann::{GrassContext, GrassmannError, Partition};

/// Errors from ring construction and multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingError {
    /// The two classes live on different Grassmannians.
    ContextMismatch,
    Grassmann(GrassmannError),
}

impl From<GrassmannError> for RingError {
    fn from(e: GrassmannError) -> Self {
        RingError::Grassmann(e)
    }
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::ContextMismatch => write!(f, "classes live in different contexts"),
            RingError::Grassmann(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RingError {}

fn trim(parts: &[u32]) -> &[u32] {
    let mut end = parts.len();
    while end > 0 && parts[end - 1] == 0 {
        end -= 1;
    }
    &parts[..end]
}

/// The Littlewood-Richardson coefficient: the number of LR skew tableaux of
/// shape `nu/lambda` and content `mu`. Inputs are abstract partitions
/// (trailing zeros allowed, weakly decreasing). Returns 0 for incompatible
/// shapes — `nu` not containing `lambda`, or size mismatch.
///
/// The counter is plain `u64`: tableaux are enumerated one at a time, so a
/// run that terminates can never overflow it. Coefficients are widened to
/// arbitrary precision at the ring layer.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let lambda = trim(lambda);
    let mu = trim(mu);
    let nu = trim(nu);
    debug_assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
    debug_assert!(mu.windows(2).all(|w| w[0] >= w[1]));
    debug_assert!(nu.windows(2).all(|w| w[0] >= w[1]));

    let size =
        |p: &[u32]| -> u64 { p.iter().map(|&x| x as u64).sum() };
    if size(lambda) + size(mu) != size(nu) {
        return 0;
    }
    if lambda.len() > nu.len() {
        return 0;
    }
    // inner shape padded to the outer length
    let inner: Vec<u32> = (0..nu.len())
        .map(|r| lambda.get(r).copied().unwrap_or(0))
        .collect();
    if inner.iter().zip(nu).any(|(&l, &v)| l > v) {
        return 0;
    }
    if mu.is_empty() {
        // empty content: exactly the empty filling of an empty skew shape
        return 1;
    }

    // Cells in "reverse reading word" order: rows top to bottom, each row
    // right to left. Filling in this order lets the lattice condition be
    // enforced prefix by prefix.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, (&hi, &lo)) in nu.iter().zip(&inner).enumerate() {
        for c in (lo..hi).rev() {
            cells.push((r, c as usize));
        }
    }

    let grid: Vec<Vec<u8>> = nu.iter().map(|&w| alloc::vec![0u8; w as usize]).collect();
    let mut search = Filling {
        cells: &cells,
        mu,
        inner: &inner,
        nu,
        grid,
        counts: alloc::vec![0u32; mu.len() + 1],
        found: 0,
    };
    search.fill(0);
    search.found
}

/// Backtracking state for one skew-tableau enumeration; entries run 1..=len(mu).
struct Filling<'a> {
    cells: &'a [(usize, usize)],
    mu: &'a [u32],
    inner: &'a [u32],
    nu: &'a [u32],
    grid: Vec<Vec<u8>>,
    counts: Vec<u32>,
    found: u64,
}

impl Filling<'_> {
    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.found += 1;
            return;
        }
        let (r, c) = self.cells[idx];
        // weak increase along the row: bounded above by the right neighbor
        let hi = if c + 1 < self.nu[r] as usize {
            self.grid[r][c + 1] as usize
        } else {
            self.mu.len()
        };
        // strict increase down the column, but only within the skew shape
        let lo = if r > 0 && c < self.nu[r - 1] as usize && c >= self.inner[r - 1] as usize {
            self.grid[r - 1][c] as usize + 1
        } else {
            1
        };
        for e in lo..=hi {
            if self.counts[e] >= self.mu[e - 1] {
                continue; // content bound
            }
            if e > 1 && self.counts[e] + 1 > self.counts[e - 1] {
                continue; // lattice word condition on the prefix
            }
            self.counts[e] += 1;
            self.grid[r][c] = e as u8;
            self.fill(idx + 1);
            self.grid[r][c] = 0;
            self.counts[e] -= 1;
        }
    }
}

type LrKey = (Vec<u32>, Vec<u32>, Vec<u32>);

/// Memo table for [`lr_coefficient`], keyed on trimmed `(lambda, mu, nu)`
/// with the symmetric pair canonically ordered.
#[derive(Debug, Default, Clone)]
pub struct LrCache {
    memo: BTreeMap<LrKey, u64>,
}

impl LrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn coefficient(&mut self, lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
        let a = trim(lambda);
        let b = trim(mu);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let key = (a.to_vec(), b.to_vec(), trim(nu).to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = lr_coefficient(&key.0, &key.1, &key.2);
        self.memo.insert(key, v);
        v
    }

    /// Number of memoized triples.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// A finitely supported integer combination of Schubert classes in a fixed
/// context. Only nonzero coefficients are stored; keys are admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    ctx: GrassContext,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchubertClass {
    pub fn zero(ctx: GrassContext) -> Self {
        SchubertClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The basis class indexed by `p`.
    pub fn basis(ctx: GrassContext, p: Partition) -> Result<Self, RingError> {
        Self::from_terms(ctx, [(p, BigInt::from(1))])
    }

    /// A scalar multiple of a basis class.
    pub fn multiple(ctx: GrassContext, p: Partition, coeff: BigInt) -> Result<Self, RingError> {
        Self::from_terms(ctx, [(p, coeff)])
    }

    pub fn from_terms<I>(ctx: GrassContext, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut map: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (p, c) in terms {
            ctx.check_admissible(&p)?;
            let entry = map.entry(p).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SchubertClass { ctx, terms: map })
    }

    pub fn ctx(&self) -> GrassContext {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no coefficient is negative (classes of actual subvarieties
    /// are nonnegative combinations; signed combinations are representable
    /// but flagged by this predicate).
    pub fn is_effective(&self) -> bool {
        !self.terms.values().any(|c| c.is_negative())
    }

    /// The common size of the supported partitions, if there is one.
    /// `None` for the zero class and for inhomogeneous combinations.
    pub fn codimension(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = it.next()?.size();
        if it.all(|p| p.size() == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::ContextMismatch);
        }
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let entry = terms.entry(p.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SchubertClass {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        SchubertClass {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    /// Product in the cohomology ring, with a caller-provided memo table.
    pub fn multiply_with(&self, other: &Self, cache: &mut LrCache) -> Result<Self, RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::ContextMismatch);
        }
        let dim = self.ctx.dimension() as usize;
        // bucket the admissible target partitions by size once per product
        let mut by_size: Vec<Vec<Partition>> = alloc::vec![Vec::new(); dim + 1];
        for p in self.ctx.partitions() {
            by_size[p.size() as usize].push(p);
        }
        let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (la, a) in &self.terms {
            for (mu, b) in &other.terms {
                let target = (la.size() + mu.size()) as usize;
                if target > dim {
                    continue; // every expansion term leaves the box
                }
                let ab = a * b;
                for nu in &by_size[target] {
                    let c = cache.coefficient(la.parts(), mu.parts(), nu.parts());
                    if c != 0 {
                        let entry = acc.entry(nu.clone()).or_insert_with(BigInt::zero);
                        *entry += &ab * c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(SchubertClass {
            ctx: self.ctx,
            terms: acc,
        })
    }

    /// Product in the cohomology ring (transient memo table).
    pub fn multiply(&self, other: &Self) -> Result<Self, RingError> {
        self.multiply_with(other, &mut LrCache::new())
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == BigInt::from(1) {
                write!(f, "s{p}")?;
            } else {
                write!(f, "{c}*s{p}")?;
            }
        }
        Ok(())
    }
}

/// The closed-form nonvanishing criterion for a product of two basis classes:
/// `sigma_lambda * sigma_mu != 0` iff `mu[i] <= max_part - lambda[num_parts + 1 - i]`
/// (1-based) for every i. Must agree with [`SchubertClass::multiply`] being
/// nonzero; the verification suites check that equivalence exhaustively.
pub fn product_nonzero(
    ctx: GrassContext,
    lambda: &Partition,
    mu: &Partition,
) -> Result<bool, RingError> {
    ctx.check_admissible(lambda)?;
    ctx.check_admissible(mu)?;
    let np = ctx.num_parts();
    let m = ctx.max_part();
    Ok((0..np).all(|i| mu.parts()[i] <= m - lambda.parts()[np - 1 - i]))
}

/// True iff the partition is a full-width rectangle `(max_part^j, 0, ...)`
/// for some j. These index the multi-rigid classes: every effective
/// representative of any multiple is a union of Schubert varieties.
pub fn is_rectangle_rigid(ctx: GrassContext, p: &Partition) -> Result<bool, RingError> {
    ctx.check_admissible(p)?;
    let m = ctx.max_part();
    Ok(p.parts().iter().all(|&x| x == 0 || x == m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::ShiftMode;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts).unwrap()
    }

    fn sigma(ctx: GrassContext, parts: &[u32]) -> SchubertClass {
        SchubertClass::basis(ctx, p(parts)).unwrap()
    }

    #[test]
    fn lr_known_small_values() {
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[2, 2]), 0); // size mismatch
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 3]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[2, 2, 1, 1]), 1);
        // nu must contain lambda
        assert_eq!(lr_coefficient(&[3], &[1], &[2, 2]), 0);
        // trailing zeros are immaterial
        assert_eq!(lr_coefficient(&[2, 1, 0, 0], &[2, 1, 0], &[3, 2, 1]), 2);
        // empty content
        assert_eq!(lr_coefficient(&[2, 1], &[], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[], &[], &[]), 1);
    }

    #[test]
    fn lr_pieri_rows_are_multiplicity_free() {
        // multiplying by a single row gives 0/1 coefficients (horizontal strips)
        for nu in [&[3, 1][..], &[2, 2], &[2, 1, 1], &[4]] {
            let c = lr_coefficient(&[2], &[2], nu);
            assert!(c <= 1, "nu={nu:?} got {c}");
        }
        assert_eq!(lr_coefficient(&[2], &[2], &[4]), 1);
        assert_eq!(lr_coefficient(&[2], &[2], &[3, 1]), 1);
        assert_eq!(lr_coefficient(&[2], &[2], &[2, 2]), 1);
        assert_eq!(lr_coefficient(&[2], &[2], &[2, 1, 1]), 0);
    }

    #[test]
    fn cache_agrees_with_direct_enumeration() {
        let mut cache = LrCache::new();
        assert_eq!(cache.coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(cache.coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        // symmetric canonicalization shares one slot
        assert_eq!(cache.coefficient(&[1], &[2, 1], &[2, 2]), 1);
        assert_eq!(cache.coefficient(&[2, 1], &[1], &[2, 2]), 1);
        assert_eq!(cache.len(), 2);
    }

    #[test]
    fn product_in_g13_splits_into_two_classes() {
        let ctx = GrassContext::new(1, 3).unwrap();
        let prod = sigma(ctx, &[1, 0]).multiply(&sigma(ctx, &[1, 0])).unwrap();
        let expect = SchubertClass::from_terms(
            ctx,
            [
                (p(&[2, 0]), BigInt::from(1)),
                (p(&[1, 1]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn product_matching_the_h_shift() {
        let ctx = GrassContext::new(2, 4).unwrap();
        let prod = sigma(ctx, &[1, 0, 0])
            .multiply(&sigma(ctx, &[1, 1, 1]))
            .unwrap();
        assert_eq!(prod, sigma(ctx, &[2, 1, 1]));
    }

    #[test]
    fn product_truncates_to_zero_past_the_box() {
        let ctx = GrassContext::new(1, 3).unwrap();
        let prod = sigma(ctx, &[2, 2]).multiply(&sigma(ctx, &[1, 0])).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn product_rejects_context_mixing() {
        let a = sigma(GrassContext::new(1, 3).unwrap(), &[1, 0]);
        let b = sigma(GrassContext::new(1, 4).unwrap(), &[1, 0]);
        assert_eq!(a.multiply(&b), Err(RingError::ContextMismatch));
    }

    #[test]
    fn nonvanishing_criterion_examples() {
        let ctx = GrassContext::new(1, 3).unwrap();
        assert!(product_nonzero(ctx, &p(&[1, 0]), &p(&[1, 0])).unwrap());
        assert!(!product_nonzero(ctx, &p(&[2, 2]), &p(&[1, 0])).unwrap());
        // the identity class never kills anything
        for q in ctx.partitions() {
            assert!(product_nonzero(ctx, &q, &p(&[0, 0])).unwrap());
        }
    }

    #[test]
    fn nonvanishing_matches_products_in_small_contexts() {
        for n in 1..=5u32 {
            for k in 0..n {
                let ctx = GrassContext::new(k, n).unwrap();
                let all = ctx.partitions();
                let mut cache = LrCache::new();
                for a in &all {
                    for b in &all {
                        let pred = product_nonzero(ctx, a, b).unwrap();
                        let prod = SchubertClass::basis(ctx, a.clone())
                            .unwrap()
                            .multiply_with(&SchubertClass::basis(ctx, b.clone()).unwrap(), &mut cache)
                            .unwrap();
                        assert_eq!(pred, !prod.is_zero(), "ctx={ctx} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn special_products_realize_both_shifts() {
        for n in 1..=5u32 {
            for k in 0..n {
                let ctx = GrassContext::new(k, n).unwrap();
                let ones = p(&alloc::vec![1; ctx.num_parts()]);
                let mut row = alloc::vec![0; ctx.num_parts()];
                row[0] = ctx.max_part();
                let row = Partition::new(row).unwrap();
                let mut cache = LrCache::new();
                for q in ctx.partitions() {
                    let base = SchubertClass::basis(ctx, q.clone()).unwrap();
                    if q.first_part() != ctx.max_part() {
                        let shifted = ctx.shift(&q, ShiftMode::H).unwrap();
                        let prod = base
                            .multiply_with(&SchubertClass::basis(ctx, ones.clone()).unwrap(), &mut cache)
                            .unwrap();
                        assert_eq!(prod, SchubertClass::basis(ctx, shifted).unwrap());
                    }
                    if q.parts().last() == Some(&0) {
                        let shifted = ctx.shift(&q, ShiftMode::P).unwrap();
                        let prod = base
                            .multiply_with(&SchubertClass::basis(ctx, row.clone()).unwrap(), &mut cache)
                            .unwrap();
                        assert_eq!(prod, SchubertClass::basis(ctx, shifted).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn poincare_pairing_is_diagonal_in_g24() {
        let ctx = GrassContext::new(2, 4).unwrap();
        let top = ctx.top_partition();
        let mut cache = LrCache::new();
        for a in ctx.partitions() {
            for b in ctx.partitions() {
                if a.size() + b.size() != ctx.dimension() {
                    continue;
                }
                let prod = SchubertClass::basis(ctx, a.clone())
                    .unwrap()
                    .multiply_with(&SchubertClass::basis(ctx, b.clone()).unwrap(), &mut cache)
                    .unwrap();
                let expected = if ctx.dual(&a).unwrap() == b {
                    BigInt::from(1)
                } else {
                    BigInt::zero()
                };
                assert_eq!(prod.coeff(&top), expected, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn rectangle_detection() {
        let ctx = GrassContext::new(2, 5).unwrap();
        assert!(is_rectangle_rigid(ctx, &p(&[3, 3, 0])).unwrap());
        assert!(!is_rectangle_rigid(ctx, &p(&[3, 2, 0])).unwrap());
        assert!(is_rectangle_rigid(ctx, &p(&[0, 0, 0])).unwrap());
        assert!(is_rectangle_rigid(ctx, &p(&[3, 3, 3])).unwrap());
    }

    #[test]
    fn class_bookkeeping() {
        let ctx = GrassContext::new(1, 3).unwrap();
        let cls = SchubertClass::from_terms(
            ctx,
            [
                (p(&[1, 0]), BigInt::from(2)),
                (p(&[1, 0]), BigInt::from(-2)),
                (p(&[2, 0]), BigInt::from(3)),
            ],
        )
        .unwrap();
        assert_eq!(cls.num_terms(), 1); // the (1,0) terms cancel
        assert_eq!(cls.codimension(), Some(2));
        assert!(cls.is_effective());
        let signed = SchubertClass::from_terms(ctx, [(p(&[1, 1]), BigInt::from(-1))]).unwrap();
        assert!(!signed.is_effective());
        let mixed = cls.add(&sigma(ctx, &[1, 0])).unwrap();
        assert_eq!(mixed.codimension(), None);
        assert_eq!(SchubertClass::zero(ctx).codimension(), None);
    }

    #[test]
    fn scaling_by_zero_clears_the_class() {
        let ctx = GrassContext::new(1, 3).unwrap();
        assert!(sigma(ctx, &[1, 0]).scale(&BigInt::zero()).is_zero());
    }
}
