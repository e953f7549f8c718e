//! The labeled verification suite behind `clustered verify`.
//!
//! Every check compares a calculator against a route that does not share its
//! code: ring products against genuine Schur-polynomial arithmetic, partition
//! operators against the products they are supposed to describe, closed-form
//! dimension formulas against independently written restatements, splitting
//! types against direct section counts, and gluings against externally
//! recomputed pullbacks.
//!
//! The comparison loops are parameterized over the formula under test (a
//! plain closure), so a caller can feed a deliberately broken formula through
//! the identical code path and confirm the suite notices. The failure counts
//! returned by those harnesses are what the report is built from.

use std::fmt;

use clustered_core::osculation::{
    alg_hyp_outside_zl, alpha_injective, beta_injective, canonical_multidegree, chow_k_family,
    chow_z2, codim_chain, ggl_conditional, incidence_dimension, lines_only, z1_alg_hyp,
    z2_alg_hyp, zi_empty, zi_proper, Threshold, ThresholdReport,
};
use clustered_core::p1::{
    build_osculating_map, glue_along_line, kernel_splitting_type, section_kernel_dimension,
    BinaryForm, CoordinateMap, GradedMap, MultiPolynomial,
};
use clustered_core::{
    cluster, schubert, GrassContext, LrCache, Partition, SchubertClass, ShiftMode,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed used when none is supplied on the command line or environment.
pub const DEFAULT_SEED: u64 = 271_828_182_845;

/// How much ground the suite covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Ambient dimension up to 5, 20 randomized trials per check.
    Fast,
    /// Ambient dimension up to 6, 100 randomized trials per check.
    Full,
}

impl Scope {
    pub fn max_ambient(self) -> u32 {
        match self {
            Scope::Fast => 5,
            Scope::Full => 6,
        }
    }

    pub fn trials(self) -> usize {
        match self {
            Scope::Fast => 20,
            Scope::Full => 100,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Scope::Fast => "fast",
            Scope::Full => "full",
        }
    }
}

/// Result of one labeled check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub label: &'static str,
    pub passed: bool,
    pub details: String,
}

/// The whole suite's outcome.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub scope: Scope,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify scope={} seed={}",
            self.scope.label(),
            self.seed
        )?;
        for check in &self.checks {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {tag}  {:<24}  {}", check.label, check.details)?;
        }
        write!(
            f,
            "{} checks: {} passed, {} failed",
            self.checks.len(),
            self.passed(),
            self.failed()
        )
    }
}

/// Every Grassmannian context with ambient dimension at most `max_ambient`.
pub fn contexts_up_to(max_ambient: u32) -> Vec<GrassContext> {
    let mut out = Vec::new();
    for n in 1..=max_ambient {
        for k in 0..n {
            out.push(GrassContext::new(k, n).expect("k < n"));
        }
    }
    out
}

fn single_row(ctx: GrassContext, first: u32) -> SchubertClass {
    let mut parts = vec![0u32; ctx.num_parts()];
    parts[0] = first;
    SchubertClass::basis(ctx, Partition::new(parts).expect("single row")).expect("admissible")
}

fn all_ones(ctx: GrassContext) -> SchubertClass {
    SchubertClass::basis(ctx, Partition::new(vec![1; ctx.num_parts()]).expect("column"))
        .expect("admissible")
}

// ---- closure-parameterized harnesses ----
//
// Each takes the formula under test as a closure and returns
// (failures, cases). The suite passes the production formula; a caller
// checking the suite's own sensitivity passes a broken one.

/// The claimed dual must be admissible, complement the size, be an
/// involution, and pair to the top class in the ring.
pub fn dual_failures(
    max_ambient: u32,
    dual_parts: &dyn Fn(&GrassContext, &Partition) -> Vec<u32>,
) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let mut cache = LrCache::new();
    for ctx in contexts_up_to(max_ambient) {
        let top = ctx.top_partition();
        for lambda in ctx.partitions() {
            cases += 1;
            let claimed = dual_parts(&ctx, &lambda);
            let Ok(mu) = Partition::new(claimed) else {
                failures += 1;
                continue;
            };
            if !ctx.is_admissible(&mu)
                || lambda.size() + mu.size() != ctx.dimension()
                || dual_parts(&ctx, &mu) != lambda.parts()
            {
                failures += 1;
                continue;
            }
            let product = SchubertClass::basis(ctx, lambda.clone())
                .unwrap()
                .multiply_with(&SchubertClass::basis(ctx, mu).unwrap(), &mut cache)
                .unwrap();
            if product.coeff(&top) != BigInt::one() {
                failures += 1;
            }
        }
    }
    (failures, cases)
}

/// The h-shift formula against the actual product with the full-column
/// class: a defined shift must equal that product's single term, an
/// undefined one must mean the product vanishes.
pub fn shift_h_failures(
    max_ambient: u32,
    shifted: &dyn Fn(&GrassContext, &Partition) -> Option<Vec<u32>>,
) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let mut cache = LrCache::new();
    for ctx in contexts_up_to(max_ambient) {
        let column = all_ones(ctx);
        for lambda in ctx.partitions() {
            cases += 1;
            let product = SchubertClass::basis(ctx, lambda.clone())
                .unwrap()
                .multiply_with(&column, &mut cache)
                .unwrap();
            let ok = match shifted(&ctx, &lambda) {
                Some(parts) => match Partition::new(parts) {
                    Ok(p) => {
                        ctx.is_admissible(&p)
                            && product.num_terms() == 1
                            && product.coeff(&p) == BigInt::one()
                    }
                    Err(_) => false,
                },
                None => product.is_zero(),
            };
            if !ok {
                failures += 1;
            }
        }
    }
    (failures, cases)
}

/// Same contract for the p-shift against the single-row class of maximal
/// codimension entry.
pub fn shift_p_failures(
    max_ambient: u32,
    shifted: &dyn Fn(&GrassContext, &Partition) -> Option<Vec<u32>>,
) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let mut cache = LrCache::new();
    for ctx in contexts_up_to(max_ambient) {
        let row = single_row(ctx, ctx.max_part());
        for lambda in ctx.partitions() {
            cases += 1;
            let product = SchubertClass::basis(ctx, lambda.clone())
                .unwrap()
                .multiply_with(&row, &mut cache)
                .unwrap();
            let ok = match shifted(&ctx, &lambda) {
                Some(parts) => match Partition::new(parts) {
                    Ok(p) => {
                        ctx.is_admissible(&p)
                            && product.num_terms() == 1
                            && product.coeff(&p) == BigInt::one()
                    }
                    Err(_) => false,
                },
                None => product.is_zero(),
            };
            if !ok {
                failures += 1;
            }
        }
    }
    (failures, cases)
}

/// The index-based nonvanishing criterion against the product itself,
/// exhaustively over all pairs.
pub fn nonvanishing_failures(
    max_ambient: u32,
    predicate: &dyn Fn(&GrassContext, &Partition, &Partition) -> bool,
) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let mut cache = LrCache::new();
    for ctx in contexts_up_to(max_ambient) {
        let partitions = ctx.partitions();
        for lambda in &partitions {
            let class_l = SchubertClass::basis(ctx, lambda.clone()).unwrap();
            for mu in &partitions {
                cases += 1;
                let product = class_l
                    .multiply_with(&SchubertClass::basis(ctx, mu.clone()).unwrap(), &mut cache)
                    .unwrap();
                if predicate(&ctx, lambda, mu) != !product.is_zero() {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

/// The codimension identity of the mu-construction, with the dual-tail sum
/// supplied by the caller: |lambda| must equal l*(n-k+1) minus the sum of
/// the last l parts of the dual.
pub fn mu_identity_failures(
    max_ambient: u32,
    tail_sum: &dyn Fn(&[u32], u32, u32) -> u32,
) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 2..=max_ambient {
        for k in 1..n {
            let ctx = GrassContext::new(k - 1, n).expect("k-1 < n");
            for lambda in ctx.partitions() {
                if lambda.is_zero() {
                    continue;
                }
                cases += 1;
                let out = cluster::mu_construction(ctx, &lambda).expect("valid input");
                let tail = tail_sum(out.dual.parts(), k, out.ell);
                let identity = (out.ell * (n - k + 1)).checked_sub(tail) == Some(lambda.size());
                let bound_ok =
                    out.kleiman_bound == out.target_ctx.dimension() - out.mu.size();
                if !identity || !bound_ok || !out.target_ctx.is_admissible(&out.mu) {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

/// One-point canonical multidegrees from the supplied formula against the
/// calculator, plus the fiber-dimension, genus-coefficient, and
/// general-type bookkeeping the report carries.
pub fn multidegree_failures(one_point: &dyn Fn(u32, u32, u32) -> [i64; 2]) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 2..=8u32 {
        for d in 1..=12u32 {
            for r in 1..=d {
                cases += 1;
                let report = canonical_multidegree(n, d, r, None).expect("valid input");
                let expected = one_point(n, d, r);
                let ok = report.multidegree == expected
                    && report.fiber_dim == 2 * n as i64 - 1 - r as i64
                    && report.genus_coefficient == d as i64 - 2
                    && report.general_type == expected.iter().all(|&m| m > 0)
                    && (r != d || report.multidegree[1] == d as i64 - 2);
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

/// The headline degree threshold's minimal degree against the supplied
/// closed form, over a range of ambient dimensions.
pub fn threshold_failures(min_degree: &dyn Fn(u32) -> i64) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 3..=60u32 {
        cases += 1;
        if alg_hyp_outside_zl(n).min_degree() != min_degree(n) {
            failures += 1;
        }
    }
    (failures, cases)
}

// ---- individual checks without a closure parameter ----

fn enumeration_failures(max_ambient: u32) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for ctx in contexts_up_to(max_ambient) {
        cases += 1;
        let list = ctx.partitions();
        let count_ok = BigInt::from(list.len()) == ctx.partition_count();
        let all_ok = list.iter().all(|p| ctx.is_admissible(p));
        let mut sorted = list.clone();
        sorted.sort_by(|a, b| a.size().cmp(&b.size()).then(a.parts().cmp(b.parts())));
        sorted.dedup();
        if !count_ok || !all_ok || sorted != list {
            failures += 1;
        }
    }
    (failures, cases)
}

fn lr_oracle_failures(
    max_ambient: u32,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let mut ring_cache = LrCache::new();
    let mut schur_cache = crate::oracle::SchurCache::new();
    for ctx in contexts_up_to(max_ambient) {
        let partitions = ctx.partitions();
        let pairs: Vec<(usize, usize)> = if partitions.len() <= 12 {
            (0..partitions.len())
                .flat_map(|i| (0..partitions.len()).map(move |j| (i, j)))
                .collect()
        } else {
            (0..trials)
                .map(|_| {
                    (
                        rng.gen_range(0..partitions.len()),
                        rng.gen_range(0..partitions.len()),
                    )
                })
                .collect()
        };
        for (i, j) in pairs {
            cases += 1;
            let (lambda, mu) = (&partitions[i], &partitions[j]);
            let ring = SchubertClass::basis(ctx, lambda.clone())
                .unwrap()
                .multiply_with(&SchubertClass::basis(ctx, mu.clone()).unwrap(), &mut ring_cache)
                .unwrap();
            let oracle = crate::oracle::truncated_product(ctx, lambda, mu, &mut schur_cache);
            let ring_map: std::collections::BTreeMap<Vec<u32>, BigInt> = ring
                .terms()
                .map(|(p, c)| (p.parts().to_vec(), c.clone()))
                .collect();
            if ring_map != oracle {
                failures += 1;
            }
        }
    }
    (failures, cases)
}

fn pairing_failures(max_ambient: u32, trials: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let mut cache = LrCache::new();
    for ctx in contexts_up_to(max_ambient) {
        let partitions = ctx.partitions();
        let top = SchubertClass::basis(ctx, ctx.top_partition()).unwrap();
        for _ in 0..trials.min(partitions.len()) {
            cases += 1;
            let lambda = &partitions[rng.gen_range(0..partitions.len())];
            let dual = ctx.dual(lambda).expect("admissible");
            let product = SchubertClass::basis(ctx, lambda.clone())
                .unwrap()
                .multiply_with(&SchubertClass::basis(ctx, dual.clone()).unwrap(), &mut cache)
                .unwrap();
            if product != top {
                failures += 1;
                continue;
            }
            // any other partition of complementary size must pair to zero
            if let Some(other) = partitions
                .iter()
                .find(|p| p.size() == dual.size() && **p != dual)
            {
                let product = SchubertClass::basis(ctx, lambda.clone())
                    .unwrap()
                    .multiply_with(&SchubertClass::basis(ctx, other.clone()).unwrap(), &mut cache)
                    .unwrap();
                if !product.coeff(&ctx.top_partition()).is_zero() {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

fn meets_z_failures(max_ambient: u32) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 2..=max_ambient {
        for k in 1..n {
            for m in 0..=(n - k) {
                for e in [1u64, 2, 5] {
                    cases += 1;
                    let model = cluster::meets_z_model(n, k, m, e).expect("valid input");
                    let eps = n - k + 1 - m;
                    let b_codim = model.class_b.codimension();
                    let c_codim = model.class_c.codimension();
                    let ok = model.epsilon == eps
                        && b_codim == Some(eps)
                        && c_codim == Some(eps - 1)
                        && cluster::cluster_floor(&model.class_b) == Ok(1)
                        && cluster::check_necessary(&model.class_b, 1)
                            .map(|r| r.satisfies_necessary)
                            .unwrap_or(false)
                        && model
                            .class_b
                            .terms()
                            .all(|(_, c)| *c == BigInt::from(e));
                    if !ok {
                        failures += 1;
                    }
                }
            }
        }
    }
    (failures, cases)
}

fn extremal_failures(max_ambient: u32) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for ctx in contexts_up_to(max_ambient) {
        for ell in 1..=ctx.num_parts() as u32 {
            cases += 1;
            let mut parts = vec![0u32; ctx.num_parts()];
            for slot in parts.iter_mut().take(ell as usize) {
                *slot = ctx.max_part();
            }
            let rect = Partition::new(parts).expect("rectangle");
            let cls = SchubertClass::basis(ctx, rect.clone()).unwrap();
            let hit = cluster::extremal_classify(&cls, ell).expect("valid input");
            let scaled_hit =
                cluster::extremal_classify(&cls.scale(&BigInt::from(3)), ell).expect("valid");
            let rigid = schubert::is_rectangle_rigid(ctx, &rect).unwrap();
            let ok = matches!(
                hit,
                Some(ref d) if d.fixed_plane_dim == ell - 1 && d.multiplicity == BigInt::one()
            ) && matches!(
                scaled_hit,
                Some(ref d) if d.multiplicity == BigInt::from(3)
            ) && rigid;
            if !ok {
                failures += 1;
            }
            // a non-rectangle of the same codimension must not classify
            if let Some(other) = ctx
                .partitions()
                .into_iter()
                .find(|p| p.size() == ell * ctx.max_part() && *p != rect)
            {
                cases += 1;
                let cls = SchubertClass::basis(ctx, other).unwrap();
                if cluster::extremal_classify(&cls, ell)
                    .expect("valid input")
                    .is_some()
                {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

/// Binomial coefficients by Pascal's rule alone: additions only, sharing
/// nothing with the multiplicative route in the calculators.
fn pascal_binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for _ in 0..a {
        let mut next = vec![BigInt::one()];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row[b as usize].clone()
}

fn incidence_failures() -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 2..=8u32 {
        for d in 1..=8u32 {
            for i in 1..=d {
                cases += 1;
                let out = incidence_dimension(n, d, i).expect("valid input");
                let expected = BigInt::from(2 * n as i64 - 3 + i as i64 - d as i64)
                    + pascal_binomial((n + d) as u64, d as u64);
                let ok = out.dim == expected
                    && out.zi_empty_when == (d > 2 * n - 2 + i)
                    && out.zi_proper_when == (d > n - 1 + i);
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

fn two_point_failures() -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 2..=6u32 {
        for d in 2..=8u32 {
            for r in 1..d {
                for s in 1..=(d - r) {
                    cases += 1;
                    let report =
                        canonical_multidegree(n, d, r, Some(s)).expect("valid input");
                    let md = [
                        (r as i64 * (r as i64 - 1)) / 2 + (s as i64 * (s as i64 - 1)) / 2
                            - n as i64,
                        r as i64 * (d as i64 - r as i64 + 1) - 2,
                        s as i64 * (d as i64 - s as i64 + 1) - 2,
                    ];
                    let ok = report.multidegree == md
                        && report.fiber_dim == 2 * n as i64 - r as i64 - s as i64
                        && report.general_type
                            == (md[0] >= 0 && md[1] > 0 && md[2] > 0);
                    if !ok {
                        failures += 1;
                    }
                }
            }
        }
    }
    (failures, cases)
}

fn threshold_table_failures() -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in 3..=40u32 {
        let mut families: Vec<Threshold> = vec![
            lines_only(n),
            alg_hyp_outside_zl(n),
            chow_z2(n),
            z1_alg_hyp(n),
            z2_alg_hyp(n),
            alpha_injective(n),
            beta_injective(n),
            ggl_conditional(n),
        ];
        for k in 1..=3 {
            families.push(chow_k_family(n, k));
        }
        for i in 1..=3 {
            families.push(zi_empty(n, i));
            families.push(zi_proper(n, i));
        }
        for t in &families {
            cases += 1;
            let brute = (0..=500u32).find(|&d| t.holds_at(d));
            if brute.map(i64::from) != Some(t.min_degree()) {
                failures += 1;
            }
        }
        // the chain of implications orders the minimal degrees
        cases += 1;
        let ordered = z1_alg_hyp(n).min_degree() <= lines_only(n).min_degree()
            && lines_only(n).min_degree() <= z2_alg_hyp(n).min_degree()
            && z2_alg_hyp(n).min_degree() <= alg_hyp_outside_zl(n).min_degree()
            && alg_hyp_outside_zl(n).min_degree() <= chow_z2(n).min_degree()
            && zi_proper(n, 1).min_degree() <= zi_empty(n, 1).min_degree();
        if !ordered {
            failures += 1;
        }
    }
    (failures, cases)
}

fn threshold_report_failures() -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for n in [3u32, 4, 7, 10, 12] {
        for d in [1u32, 5, 14, 16, 25] {
            cases += 1;
            let report = ThresholdReport::new(n, d).expect("valid input");
            let labels_ok = report.entries.len() == 17
                && report.entry("algHypOutsideZL").is_some()
                && report.entry("chowKFamily(k=2)").is_some()
                && report.entry("ziEmpty(i=3)").is_some();
            let holds_ok = report
                .entries
                .iter()
                .all(|e| e.holds == e.threshold.holds_at(d) && e.min_degree == e.threshold.min_degree());
            let conditional_ok = report
                .entries
                .iter()
                .all(|e| e.conditional == (e.label == "gglConditional"));
            let chain_ok = report.codim_chain.len() == 6
                && report
                    .codim_chain
                    .iter()
                    .enumerate()
                    .all(|(idx, &(m, c))| {
                        m == n + idx as u32 && c == codim_chain(n, m) && c == 2 * (m as i64 - n as i64) + 1
                    });
            if !(labels_ok && holds_ok && conditional_ok && chain_ok) {
                failures += 1;
            }
        }
    }
    // spot values for lines in P^10
    cases += 1;
    let report = ThresholdReport::new(10, 16).expect("valid input");
    let spots = report.entry("linesOnly").map(|e| e.min_degree) == Some(15)
        && report.entry("algHypOutsideZL").map(|e| e.min_degree) == Some(16)
        && report.entry("chowZ2").map(|e| e.min_degree) == Some(17)
        && report.entry("algHypOutsideZL").map(|e| e.holds) == Some(true)
        && report.entry("chowZ2").map(|e| e.holds) == Some(false);
    if !spots {
        failures += 1;
    }
    (failures, cases)
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

fn splitting_failures(trials: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for _ in 0..trials.max(10) {
        let d = rng.gen_range(1..=5u32);
        let rank = rng.gen_range(1..=5usize);
        let entries: Vec<BinaryForm> = (0..=rank).map(|_| random_form(rng, d - 1)).collect();
        let map = GradedMap::new(d, entries).expect("has a nonzero entry");
        cases += 1;
        let kernel = kernel_splitting_type(&map);
        let gcd_degree = map.entry_gcd().degree() as i64;
        let accounting = kernel.degree()
            == map.source_rank() as i64 - map.target_degree() as i64 + gcd_degree;
        let rank_ok = kernel.rank() == map.source_rank() - 1;
        let capped = kernel.twists().iter().all(|&a| a <= 1);
        let profile = (-2..=d as i64 + 2)
            .all(|t| kernel.section_profile(t) == section_kernel_dimension(&map, t));
        if !(accounting && rank_ok && capped && profile) {
            failures += 1;
        }
    }
    (failures, cases)
}

fn balanced_failures(scope: Scope, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    let max_n: u32 = match scope {
        Scope::Fast => 4,
        Scope::Full => 5,
    };
    let per_shape = scope.trials().clamp(10, 25);
    for n in 3..=max_n {
        for d in [n - 1, n.saturating_sub(2)] {
            if d < 2 {
                continue;
            }
            for _ in 0..per_shape {
                cases += 1;
                let p = random_marked_form(rng, d);
                let fs: Vec<BinaryForm> =
                    (0..n - 1).map(|_| random_form(rng, d - 1)).collect();
                let map = build_osculating_map(&p, &fs).expect("marked form accepted");
                let kernel = kernel_splitting_type(&map);
                if kernel.is_balanced() != Ok(true) {
                    failures += 1;
                }
            }
        }
    }
    (failures, cases)
}

fn lift_line_form(
    coeffs: &[i64],
    num_vars: usize,
    degree: u32,
) -> MultiPolynomial {
    let terms: Vec<(Vec<u32>, BigRational)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| {
            let mut exp = vec![0u32; num_vars];
            exp[0] = degree - j as u32;
            exp[1] = j as u32;
            (exp, BigRational::from_integer(BigInt::from(c)))
        })
        .collect();
    MultiPolynomial::new(num_vars, degree, terms).expect("homogeneous by construction")
}

fn random_off_line_tail(
    rng: &mut ChaCha8Rng,
    num_vars: usize,
    degree: u32,
) -> MultiPolynomial {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let v = rng.gen_range(2..num_vars);
        let e = rng.gen_range(1..=degree);
        let mut exp = vec![0u32; num_vars];
        exp[v] = e;
        exp[0] = degree - e;
        let c = rng.gen_range(-5..=5i64);
        terms.push((exp, BigRational::from_integer(BigInt::from(c))));
    }
    MultiPolynomial::new(num_vars, degree, terms).expect("homogeneous by construction")
}

fn glue_failures(trials: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut failures = 0;
    let mut cases = 0;
    for _ in 0..trials.max(10) {
        let d = rng.gen_range(2..=4u32);
        let v1 = rng.gen_range(3..=4usize);
        let v2 = rng.gen_range(3..=4usize);
        let line_coeffs: Vec<i64> = loop {
            let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-4..=4)).collect();
            if c.iter().any(|&x| x != 0) {
                break c;
            }
        };
        let scale_num = *[-3i64, -1, 1, 2, 4].get(rng.gen_range(0..5)).unwrap();
        let scale = BigRational::from_integer(BigInt::from(scale_num));
        let f1 = lift_line_form(&line_coeffs, v1, d)
            .add(&random_off_line_tail(rng, v1, d))
            .unwrap();
        let f2 = lift_line_form(&line_coeffs, v2, d)
            .scale(&scale)
            .add(&random_off_line_tail(rng, v2, d))
            .unwrap();
        cases += 1;
        let glued = match glue_along_line(&f1, &f2) {
            Ok(g) => g,
            Err(_) => {
                failures += 1;
                continue;
            }
        };
        let total = v1 + v2 - 2;
        let shape_ok = glued.f.num_vars() == total && glued.f.degree() == d;
        // recompute every identity externally
        let back1 = glued.lambda1_map.pullback(&glued.f).unwrap();
        let back2 = glued.lambda2_map.pullback(&glued.f).unwrap();
        let on_line = glued.line_map.pullback(&glued.f).unwrap();
        let restrict1 = CoordinateMap::new(2, v1, vec![0, 1])
            .unwrap()
            .pullback(&f1)
            .unwrap();
        let identities = back1 == f1
            && back2 == f2.scale(&scale.recip())
            && on_line == restrict1;
        if !(shape_ok && identities) {
            failures += 1;
        }
    }
    (failures, cases)
}

// ---- assembling the report ----

pub fn run(scope: Scope, seed: u64) -> VerifyReport {
    let cap = scope.max_ambient();
    let trials = scope.trials();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut record = |label: &'static str, (failures, cases): (usize, usize)| {
        checks.push(CheckOutcome {
            label,
            passed: failures == 0,
            details: format!("{failures} failures in {cases} cases"),
        });
    };

    record("partition-enumeration", enumeration_failures(cap));
    record(
        "dual-involution",
        dual_failures(cap, &|ctx, p| ctx.dual(p).expect("admissible").parts().to_vec()),
    );
    record(
        "h-shift-product",
        shift_h_failures(cap, &|ctx, p| {
            ctx.shift(p, ShiftMode::H).ok().map(|q| q.parts().to_vec())
        }),
    );
    record(
        "p-shift-product",
        shift_p_failures(cap, &|ctx, p| {
            ctx.shift(p, ShiftMode::P).ok().map(|q| q.parts().to_vec())
        }),
    );
    record(
        "nonvanishing-criterion",
        nonvanishing_failures(cap, &|ctx, a, b| {
            schubert::product_nonzero(*ctx, a, b).expect("admissible")
        }),
    );
    record(
        "lr-oracle-agreement",
        lr_oracle_failures(cap, trials, &mut rng),
    );
    record("poincare-pairing", pairing_failures(cap, trials, &mut rng));
    record(
        "mu-codimension-identity",
        mu_identity_failures(cap, &|dual, k, ell| {
            dual[(k - ell) as usize..k as usize].iter().sum()
        }),
    );
    record("meets-z-invariants", meets_z_failures(cap));
    record("extremal-rectangles", extremal_failures(cap));
    record("incidence-dimension", incidence_failures());
    record(
        "multidegree-genus",
        multidegree_failures(&|n, d, r| {
            [
                (r as i64 * (r as i64 - 1)) / 2 - n as i64,
                r as i64 * d as i64 - r as i64 * (r as i64 - 1) - 2,
            ]
        }),
    );
    record("two-point-multidegree", two_point_failures());
    record(
        "threshold-arithmetic",
        threshold_failures(&|n| (3 * n as i64 + 3).div_euclid(2)),
    );
    record("threshold-table", threshold_table_failures());
    record("threshold-report", threshold_report_failures());
    record("splitting-accounting", splitting_failures(trials, &mut rng));
    record("balanced-kernel", balanced_failures(scope, &mut rng));
    record("glue-pullbacks", glue_failures(trials, &mut rng));

    VerifyReport {
        scope,
        seed,
        checks,
    }
}
