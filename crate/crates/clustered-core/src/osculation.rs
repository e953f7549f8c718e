//! Dimension counts and canonical multidegrees for osculating-line families,
//! and the degree-threshold report for the Lang-type consequences.
//!
//! All quantities are closed-form integer/rational expressions evaluated
//! exactly; the square-root sufficiency bounds are decided by integer
//! comparisons like (d-1)^2 >= 2n, never by floating point.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OsculationError {
    /// The ambient dimension is below the smallest meaningful value for the
    /// requested calculator.
    AmbientTooSmall { n: u32, min: u32 },
    /// Degrees start at 1.
    DegreeOutOfRange,
    /// The number of residual points i must satisfy 1 <= i <= d.
    ContactCountOutOfRange { i: u32, d: u32 },
    /// Contact orders must satisfy 1 <= r <= d, and with a second point
    /// 1 <= s with r+s <= d.
    ContactOrderOutOfRange,
}

impl fmt::Display for OsculationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OsculationError::AmbientTooSmall { n, min } => {
                write!(f, "ambient dimension {n} too small; need n >= {min}")
            }
            OsculationError::DegreeOutOfRange => write!(f, "degree must be >= 1"),
            OsculationError::ContactCountOutOfRange { i, d } => {
                write!(f, "need 1 <= i <= d, got i={i}, d={d}")
            }
            OsculationError::ContactOrderOutOfRange => {
                write!(f, "need 1 <= r <= d (and 1 <= s, r+s <= d for two points)")
            }
        }
    }
}

impl core::error::Error for OsculationError {}

/// binomial(a, b) with arbitrary precision; the form-space dimensions blow up
/// quickly.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::from(0u32);
    }
    let b = b.min(a - b);
    let mut acc = BigInt::from(1u32);
    for j in 0..b {
        acc = acc * (a - j) / (j + 1);
    }
    acc
}

/// Dimension record for the incidence correspondence of lines meeting a
/// hypersurface of degree d in exactly i points (with multiplicities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceDimension {
    pub n: u32,
    pub d: u32,
    pub i: u32,
    /// 2n-3+i + binomial(n+d, d) - d.
    pub dim: BigInt,
    /// d > 2n-2+i: the locus swept by such lines is empty on a general
    /// hypersurface.
    pub zi_empty_when: bool,
    /// d > n-1+i: the locus is a proper subvariety of a general hypersurface.
    pub zi_proper_when: bool,
}

pub fn incidence_dimension(n: u32, d: u32, i: u32) -> Result<IncidenceDimension, OsculationError> {
    if n < 2 {
        return Err(OsculationError::AmbientTooSmall { n, min: 2 });
    }
    if d < 1 {
        return Err(OsculationError::DegreeOutOfRange);
    }
    if i < 1 || i > d {
        return Err(OsculationError::ContactCountOutOfRange { i, d });
    }
    let dim = BigInt::from(2 * (n as i64) - 3 + i as i64 - d as i64)
        + binomial((n + d) as u64, d as u64);
    Ok(IncidenceDimension {
        n,
        d,
        i,
        dim,
        zi_empty_when: d as i64 > 2 * (n as i64) - 2 + i as i64,
        zi_proper_when: d as i64 > (n as i64) - 1 + i as i64,
    })
}

/// Canonical-bundle multidegree report for an osculation variety: the locus
/// of lines with contact order at least r at a marked point of a degree-d
/// hypersurface in P^n (one point), or orders (r, s) at two marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OsculationReport {
    pub n: u32,
    pub d: u32,
    pub r: u32,
    pub s: Option<u32>,
    /// Dimension of the total space over the space of forms.
    pub total_dim: BigInt,
    /// Dimension of the fiber over a fixed general hypersurface:
    /// 2n-1-r for one point, 2n-r-s for two.
    pub fiber_dim: i64,
    /// Twists of the canonical bundle along the ambient product factors,
    /// ordered (Grassmannian factor, first point factor[, second point
    /// factor]).
    pub multidegree: Vec<i64>,
    pub general_type: bool,
    /// The genus-bound coefficient d-2: curves sweeping the family satisfy
    /// 2g-2 >= (d-2) C.H.
    pub genus_coefficient: i64,
}

pub fn canonical_multidegree(
    n: u32,
    d: u32,
    r: u32,
    s: Option<u32>,
) -> Result<OsculationReport, OsculationError> {
    if n < 2 {
        return Err(OsculationError::AmbientTooSmall { n, min: 2 });
    }
    if d < 1 {
        return Err(OsculationError::DegreeOutOfRange);
    }
    let (ni, di, ri) = (n as i64, d as i64, r as i64);
    if r < 1 || r > d {
        return Err(OsculationError::ContactOrderOutOfRange);
    }
    let (multidegree, fiber_dim, general_type) = match s {
        None => {
            let md = alloc::vec![ri * (ri - 1) / 2 - ni, ri * di - ri * (ri - 1) - 2];
            let general = md.iter().all(|&x| x > 0);
            (md, 2 * ni - 1 - ri, general)
        }
        Some(s) => {
            if s < 1 || r + s > d {
                return Err(OsculationError::ContactOrderOutOfRange);
            }
            let si = s as i64;
            let md = alloc::vec![
                ri * (ri - 1) / 2 + si * (si - 1) / 2 - ni,
                ri * (di - ri + 1) - 2,
                si * (di - si + 1) - 2,
            ];
            // The first factor records the choice of the point pair; its
            // coefficient may legitimately vanish, because the two contact
            // points already determine the line. Bigness then only needs
            // strict positivity on the point factors.
            let general = md[0] >= 0 && md[1] > 0 && md[2] > 0;
            (md, 2 * ni - ri - si, general)
        }
    };
    let total_dim = BigInt::from(fiber_dim) + binomial((n + d) as u64, d as u64);
    Ok(OsculationReport {
        n,
        d,
        r,
        s,
        total_dim,
        fiber_dim,
        multidegree,
        general_type,
        genus_coefficient: di - 2,
    })
}

/// Smallest degrees at which the osculation families reach general type,
/// found by upward scan of the multidegree formulas, together with the
/// closed-form sufficient bounds they must not exceed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralTypeThresholds {
    pub n: u32,
    /// Least d with the one-point family at full contact (r = d) of general
    /// type.
    pub delta_d: u32,
    /// Least d with every two-point family (r, d-r), 1 <= r <= d-1, of
    /// general type.
    pub delta_rs: u32,
    /// Least integer d with d >= sqrt(2n)+1, i.e. (d-1)^2 >= 2n; sufficient
    /// for `delta_d`.
    pub delta_d_sufficient: u32,
    /// Least integer d with d >= 2 sqrt(n)+1, i.e. (d-1)^2 >= 4n; sufficient
    /// for `delta_rs`.
    pub delta_rs_sufficient: u32,
}

/// Smallest a >= 0 with a^2 >= x.
fn ceil_sqrt(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let mut a = x.isqrt();
    if a * a < x {
        a += 1;
    }
    a
}

pub fn general_type_thresholds(n: u32) -> Result<GeneralTypeThresholds, OsculationError> {
    if n < 2 {
        return Err(OsculationError::AmbientTooSmall { n, min: 2 });
    }
    let delta_d_sufficient = ceil_sqrt(2 * n as u64) as u32 + 1;
    let delta_rs_sufficient = ceil_sqrt(4 * n as u64) as u32 + 1;

    let mut delta_d = None;
    for d in 1..=delta_d_sufficient + 2 {
        if canonical_multidegree(n, d, d, None)?.general_type {
            delta_d = Some(d);
            break;
        }
    }
    let mut delta_rs = None;
    // d = 1 has no two-point split, so the scan starts where pairs exist
    for d in 2..=delta_rs_sufficient + 2 {
        if (1..d).all(|r| {
            canonical_multidegree(n, d, r, Some(d - r))
                .map(|rep| rep.general_type)
                .unwrap_or(false)
        }) {
            delta_rs = Some(d);
            break;
        }
    }
    Ok(GeneralTypeThresholds {
        n,
        delta_d: delta_d.expect("scan reaches the sufficient bound"),
        delta_rs: delta_rs.expect("scan reaches the sufficient bound"),
        delta_d_sufficient,
        delta_rs_sufficient,
    })
}

/// A degree inequality `d >= num/den` (or `d > num/den` when strict),
/// evaluated by exact cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    num: i64,
    den: i64,
    strict: bool,
}

impl Threshold {
    /// d >= num/den.
    pub fn at_least(num: i64, den: i64) -> Self {
        debug_assert!(den > 0);
        Threshold {
            num,
            den,
            strict: false,
        }
    }

    /// d > bound (integer bound).
    pub fn greater_than(bound: i64) -> Self {
        Threshold {
            num: bound,
            den: 1,
            strict: true,
        }
    }

    pub fn holds_at(&self, d: u32) -> bool {
        let lhs = d as i64 * self.den;
        if self.strict {
            lhs > self.num
        } else {
            lhs >= self.num
        }
    }

    /// The least integer degree satisfying the inequality.
    pub fn min_degree(&self) -> i64 {
        if self.strict {
            self.num.div_euclid(self.den) + 1
        } else {
            // ceiling division for positive denominators
            self.num.div_euclid(self.den)
                + i64::from(self.num.rem_euclid(self.den) != 0)
        }
    }
}

/// d >= (3n+2)/2: algebraic hyperbolicity away from the lines locus.
pub fn alg_hyp_outside_zl(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 + 2, 2)
}

/// d >= 3n/2: lines are the only rational curves.
pub fn lines_only(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64, 2)
}

/// d >= (3n+3)/2: points Chow-equivalent to other points lie in Z_2.
pub fn chow_z2(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 + 3, 2)
}

/// d >= (3n+1-k)/2: points equivalent to a k-dimensional family of points
/// lie in Z_1.
pub fn chow_k_family(n: u32, k: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 + 1 - k as i64, 2)
}

/// d >= (3n-1)/2: Z_1 is algebraically hyperbolic outside Z_L.
pub fn z1_alg_hyp(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 - 1, 2)
}

/// d >= (3n+1)/2: Z_2 is algebraically hyperbolic outside Z_L.
pub fn z2_alg_hyp(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 + 1, 2)
}

/// d >= (3n-1)/2: the one-point residuation map is injective away from Z_L.
pub fn alpha_injective(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 - 1, 2)
}

/// d >= (3n+1)/2: the two-point residuation maps are injective away from Z_L.
pub fn beta_injective(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 + 1, 2)
}

/// d >= (3n+2)/2: conditional on a relative Green-Griffiths-Lang statement,
/// the exceptional locus lies in Z_2. Reported as a labeled conditional.
pub fn ggl_conditional(n: u32) -> Threshold {
    Threshold::at_least(3 * n as i64 + 2, 2)
}

/// d > 2n-2+i: the locus of lines meeting X in at most i points is empty for
/// general X.
pub fn zi_empty(n: u32, i: u32) -> Threshold {
    Threshold::greater_than(2 * n as i64 - 2 + i as i64)
}

/// d > n-1+i: that locus is a proper subvariety for general X.
pub fn zi_proper(n: u32, i: u32) -> Threshold {
    Threshold::greater_than(n as i64 - 1 + i as i64)
}

/// The codimension-chain value 2(m-n)+1 for the induction through ambient
/// dimensions m >= n.
pub fn codim_chain(n: u32, m: u32) -> i64 {
    2 * (m as i64 - n as i64) + 1
}

/// One labeled row of a [`ThresholdReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdEntry {
    pub label: String,
    pub threshold: Threshold,
    pub min_degree: i64,
    pub holds: bool,
    /// True for statements contingent on an unproven conjecture.
    pub conditional: bool,
}

/// The full report of Lang-type degree thresholds at a given (n, d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub n: u32,
    pub d: u32,
    pub entries: Vec<ThresholdEntry>,
    /// (m, 2(m-n)+1) for m = n..n+5; the chain continues linearly.
    pub codim_chain: Vec<(u32, i64)>,
}

/// How many instances of the parameterized families (k for the Chow-family
/// bound, i for the Z_i bounds) a report tabulates.
const FAMILY_PARAMS: core::ops::RangeInclusive<u32> = 1..=3;
const CODIM_CHAIN_STEPS: u32 = 5;

impl ThresholdReport {
    pub fn new(n: u32, d: u32) -> Result<Self, OsculationError> {
        if n < 3 {
            return Err(OsculationError::AmbientTooSmall { n, min: 3 });
        }
        if d < 1 {
            return Err(OsculationError::DegreeOutOfRange);
        }
        let mut entries = Vec::new();
        let mut push = |label: String, t: Threshold, conditional: bool| {
            entries.push(ThresholdEntry {
                label,
                threshold: t,
                min_degree: t.min_degree(),
                holds: t.holds_at(d),
                conditional,
            });
        };
        push(String::from("linesOnly"), lines_only(n), false);
        push(String::from("algHypOutsideZL"), alg_hyp_outside_zl(n), false);
        push(String::from("chowZ2"), chow_z2(n), false);
        for k in FAMILY_PARAMS {
            push(alloc::format!("chowKFamily(k={k})"), chow_k_family(n, k), false);
        }
        push(String::from("z1AlgHyp"), z1_alg_hyp(n), false);
        push(String::from("z2AlgHyp"), z2_alg_hyp(n), false);
        push(String::from("alphaInjective"), alpha_injective(n), false);
        push(String::from("betaInjective"), beta_injective(n), false);
        push(String::from("gglConditional"), ggl_conditional(n), true);
        for i in FAMILY_PARAMS {
            push(alloc::format!("ziEmpty(i={i})"), zi_empty(n, i), false);
        }
        for i in FAMILY_PARAMS {
            push(alloc::format!("ziProper(i={i})"), zi_proper(n, i), false);
        }
        let codim_chain = (n..=n + CODIM_CHAIN_STEPS)
            .map(|m| (m, codim_chain(n, m)))
            .collect();
        Ok(ThresholdReport {
            n,
            d,
            entries,
            codim_chain,
        })
    }

    pub fn entry(&self, label: &str) -> Option<&ThresholdEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}
