//! An independent route to Schubert-class products.
//!
//! The core ring multiplies classes through tableau counting. This module
//! recomputes the same products a completely different way: expand actual
//! Schur polynomials in `planeDim + 1` variables (built by enumerating
//! semistandard tableaux), multiply them as sparse polynomials, and read the
//! structure constants back off by repeatedly subtracting the Schur
//! polynomial of the leading monomial. Working in `planeDim + 1` variables
//! kills every partition with too many rows on its own; the box truncation in
//! the column direction is a final filter on the first part.
//!
//! The two implementations share no code, so agreement on random and
//! exhaustive samples is strong evidence for both.

use std::collections::{BTreeMap, HashMap};

use clustered_core::{GrassContext, Partition};
use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse polynomial in a fixed number of variables, keyed by exponent
/// vectors (BTreeMap order on `Vec<u32>` is lexicographic, which is what the
/// leading-term extraction needs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPoly {
    pub fn zero(num_vars: usize) -> Self {
        SymPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: Vec<u32>, coeff: BigInt) {
        use std::collections::btree_map::Entry;
        debug_assert_eq!(exp.len(), self.num_vars);
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                if !coeff.is_zero() {
                    slot.insert(coeff);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lexicographically largest monomial.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = SymPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// `self -= scale * other`.
    pub fn sub_scaled(&mut self, other: &SymPoly, scale: &BigInt) {
        assert_eq!(self.num_vars, other.num_vars);
        for (exp, c) in &other.terms {
            self.add_term(exp.clone(), -(c * scale));
        }
    }
}

/// The Schur polynomial of `lambda` in `num_vars` variables, by direct
/// enumeration of semistandard tableaux (rows weakly increase, columns
/// strictly increase, entries in 1..=num_vars). Zero when the partition has
/// more nonzero rows than there are variables.
pub fn schur_polynomial(lambda: &[u32], num_vars: usize) -> SymPoly {
    let shape: Vec<u32> = lambda
        .iter()
        .copied()
        .take_while(|&p| p > 0)
        .collect();
    let mut poly = SymPoly::zero(num_vars);
    if shape.len() > num_vars {
        return poly;
    }
    if shape.is_empty() {
        poly.add_term(vec![0; num_vars], BigInt::from(1));
        return poly;
    }

    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut counts = vec![0u32; num_vars];

    fn fill(
        cells: &[(usize, usize)],
        idx: usize,
        num_vars: usize,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        poly: &mut SymPoly,
    ) {
        if idx == cells.len() {
            poly.add_term(counts.clone(), BigInt::from(1));
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]); // weakly increasing along the row
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1); // strictly increasing down the column
        }
        for entry in lo..=num_vars as u32 {
            grid[r][c] = entry;
            counts[entry as usize - 1] += 1;
            fill(cells, idx + 1, num_vars, grid, counts, poly);
            counts[entry as usize - 1] -= 1;
        }
        grid[r][c] = 0;
    }

    fill(&cells, 0, num_vars, &mut grid, &mut counts, &mut poly);
    poly
}

/// Memo for Schur polynomials keyed by (trimmed shape, variable count).
#[derive(Default)]
pub struct SchurCache {
    memo: HashMap<(Vec<u32>, usize), SymPoly>,
}

impl SchurCache {
    pub fn new() -> Self {
        SchurCache::default()
    }

    pub fn get(&mut self, lambda: &[u32], num_vars: usize) -> SymPoly {
        let key: Vec<u32> = lambda.iter().copied().take_while(|&p| p > 0).collect();
        self.memo
            .entry((key, num_vars))
            .or_insert_with(|| schur_polynomial(lambda, num_vars))
            .clone()
    }
}

/// Expand a symmetric polynomial in the Schur basis by peeling leading
/// terms. The leading exponent of a nonzero symmetric polynomial is always
/// weakly decreasing, so each step strictly shrinks the support.
pub fn schur_expand(mut poly: SymPoly, cache: &mut SchurCache) -> BTreeMap<Vec<u32>, BigInt> {
    let num_vars = poly.num_vars();
    let mut out = BTreeMap::new();
    while let Some((exp, coeff)) = poly.leading() {
        let shape = exp.clone();
        let coeff = coeff.clone();
        assert!(
            shape.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial of a symmetric polynomial must be a partition"
        );
        let schur = cache.get(&shape, num_vars);
        poly.sub_scaled(&schur, &coeff);
        out.insert(shape, coeff);
    }
    out
}

/// The product of two basis classes, computed entirely on the oracle side:
/// multiply genuine Schur polynomials in `planeDim + 1` variables, expand in
/// the Schur basis, and keep the partitions that fit the box. Keys are
/// full-length part vectors for direct comparison with ring output.
pub fn truncated_product(
    ctx: GrassContext,
    lambda: &Partition,
    mu: &Partition,
    cache: &mut SchurCache,
) -> BTreeMap<Vec<u32>, BigInt> {
    let num_vars = ctx.num_parts();
    let product = cache
        .get(lambda.parts(), num_vars)
        .mul(&cache.get(mu.parts(), num_vars));
    schur_expand(product, cache)
        .into_iter()
        .filter(|(shape, _)| shape.first().copied().unwrap_or(0) <= ctx.max_part())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(poly: &SymPoly) -> Vec<(Vec<u32>, i64)> {
        let mut v: Vec<(Vec<u32>, i64)> = poly
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), i64::try_from(c).unwrap()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_schur_polynomials_match_hand_expansion() {
        // s_(1) = x + y
        assert_eq!(
            coeffs(&schur_polynomial(&[1], 2)),
            vec![(vec![0, 1], 1), (vec![1, 0], 1)]
        );
        // s_(1,1) = xy
        assert_eq!(coeffs(&schur_polynomial(&[1, 1], 2)), vec![(vec![1, 1], 1)]);
        // s_(2) = x^2 + xy + y^2
        assert_eq!(
            coeffs(&schur_polynomial(&[2], 2)),
            vec![(vec![0, 2], 1), (vec![1, 1], 1), (vec![2, 0], 1)]
        );
        // s_(2,1) in 3 variables has 8 tableaux
        let s21 = schur_polynomial(&[2, 1], 3);
        let total: BigInt = s21.terms.values().sum();
        assert_eq!(total, BigInt::from(8));
        // too many rows for the variable count
        assert!(schur_polynomial(&[1, 1, 1], 2).is_zero());
    }

    #[test]
    fn pieri_in_two_variables() {
        let mut cache = SchurCache::new();
        let product = schur_polynomial(&[1], 2).mul(&schur_polynomial(&[1], 2));
        let expansion = schur_expand(product, &mut cache);
        assert_eq!(expansion.len(), 2);
        assert_eq!(expansion[&vec![1, 1]], BigInt::from(1));
        assert_eq!(expansion[&vec![2, 0]], BigInt::from(1));
    }

    #[test]
    fn expansion_reassembles_the_product() {
        let mut cache = SchurCache::new();
        let product = schur_polynomial(&[2, 1], 3).mul(&schur_polynomial(&[1, 1], 3));
        let expansion = schur_expand(product.clone(), &mut cache);
        let mut rebuilt = SymPoly::zero(3);
        for (shape, coeff) in &expansion {
            rebuilt.sub_scaled(&cache.get(shape, 3), &(-coeff.clone()));
        }
        assert_eq!(rebuilt, product);
    }

    #[test]
    fn truncation_drops_wide_partitions() {
        let ctx = GrassContext::new(1, 3).unwrap();
        let lambda = Partition::new(vec![2, 0]).unwrap();
        let mut cache = SchurCache::new();
        // sigma_(2)^2 has only sigma_(2,2) in the box; the (3,1) and (4,0)
        // pieces are too wide for G(1,3).
        let result = truncated_product(ctx, &lambda, &lambda, &mut cache);
        assert_eq!(result.len(), 1);
        assert_eq!(result[&vec![2, 2]], BigInt::from(1));
    }
}
