//! Class-level criteria and constructions for clustered families of linear
//! spaces.
//!
//! A family B of (k-1)-planes in P^n is l-clustered when the codimension of
//! its containing family C (the k-planes containing some member of B) drops
//! by exactly l. The class [B] alone does not determine l, but it certifies
//! bounds: the support forces a floor on l, the codimension is capped by
//! l(n-k+1), and at the extremal codimension the class must be a multiple of
//! the rectangle class of planes containing a fixed P^(l-1). This module
//! computes those certificates, the mu-construction giving a dimension bound
//! for C, and the class-level model of the family of planes meeting a fixed
//! subvariety Z.

use core::fmt;

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::grassmann::{GrassContext, GrassmannError, Partition};
use crate::schubert::{RingError, SchubertClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterError {
    /// The zero class certifies nothing.
    ZeroClass,
    /// Criteria apply to effective classes (no negative coefficients).
    NotEffective,
    /// Criteria need one well-defined codimension.
    NotHomogeneous,
    /// The cluster parameter l must be at least 1.
    EllOutOfRange,
    /// The partition handed to the mu-construction must be nonzero.
    ZeroPartition,
    /// meets-Z: need 1 <= k <= n-1 so both Grassmannians exist.
    PlaneOutOfRange { k: u32, n: u32 },
    /// meets-Z: Z of dimension > n-k meets every (k-1)-plane, so B would be
    /// dense (m = n-k+1 gives codimension 0) or the input is out of range.
    ZDimensionTooLarge { z_dim: u32, max: u32 },
    /// meets-Z: the degree of Z must be at least 1.
    DegreeOutOfRange,
    Grassmann(GrassmannError),
    Ring(RingError),
}

impl From<GrassmannError> for ClusterError {
    fn from(e: GrassmannError) -> Self {
        ClusterError::Grassmann(e)
    }
}

impl From<RingError> for ClusterError {
    fn from(e: RingError) -> Self {
        ClusterError::Ring(e)
    }
}

impl fmt::Display for ClusterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterError::ZeroClass => write!(f, "the zero class is not allowed here"),
            ClusterError::NotEffective => {
                write!(f, "class has a negative coefficient; criteria apply to effective classes")
            }
            ClusterError::NotHomogeneous => {
                write!(f, "class is not homogeneous: no single codimension")
            }
            ClusterError::EllOutOfRange => write!(f, "the cluster parameter must be >= 1"),
            ClusterError::ZeroPartition => {
                write!(f, "the mu-construction needs a nonzero partition")
            }
            ClusterError::PlaneOutOfRange { k, n } => {
                write!(f, "need 1 <= k <= n-1, got k={k}, n={n}")
            }
            ClusterError::ZDimensionTooLarge { z_dim, max } => write!(
                f,
                "Z of dimension {z_dim} exceeds {max}: every (k-1)-plane would meet Z, making B dense"
            ),
            ClusterError::DegreeOutOfRange => write!(f, "the degree of Z must be >= 1"),
            ClusterError::Grassmann(e) => write!(f, "{e}"),
            ClusterError::Ring(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ClusterError {}

/// What the class of an extremal-codimension clustered family must look like:
/// a multiple of the rectangle class of planes containing a fixed P^(l-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalDescription {
    /// Projective dimension of the fixed subspace: l-1.
    pub fixed_plane_dim: u32,
    /// Coefficient of the rectangle class; 1 for an irreducible family.
    pub multiplicity: BigInt,
}

impl fmt::Display for ExtremalDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Schubert variety of planes containing a fixed P^{}",
            self.fixed_plane_dim
        )?;
        if self.fixed_plane_dim == 0 {
            write!(f, " (a point)")?;
        }
        if self.multiplicity != BigInt::from(1) {
            write!(f, ", multiplicity {}", self.multiplicity)?;
        }
        Ok(())
    }
}

/// Certificates extracted from a class for a candidate cluster parameter l.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterReport {
    /// Codimension of the class.
    pub epsilon: u32,
    /// The l under test.
    pub ell: u32,
    /// Least l compatible with the support (max nonzero-part count).
    pub ell_floor: u32,
    /// Upper bound for the codimension of an l-clustered family: l(n-k+1).
    pub codim_bound: u32,
    /// Whether both necessary conditions hold for this l.
    pub satisfies_necessary: bool,
    /// Filled when the class sits at the extremal codimension with rectangle
    /// support.
    pub extremal: Option<ExtremalDescription>,
}

fn require_effective_nonzero(cls: &SchubertClass) -> Result<(), ClusterError> {
    if cls.is_zero() {
        return Err(ClusterError::ZeroClass);
    }
    if !cls.is_effective() {
        return Err(ClusterError::NotEffective);
    }
    Ok(())
}

/// The least l any clustered structure on a family with this class can have:
/// the maximum number of nonzero parts over the support.
pub fn cluster_floor(cls: &SchubertClass) -> Result<u32, ClusterError> {
    require_effective_nonzero(cls)?;
    Ok(cls
        .support()
        .map(|p| p.num_nonzero() as u32)
        .max()
        .unwrap_or(0))
}

/// Evaluate the necessary conditions for the class to be that of an
/// l-clustered family: the support floor must not exceed l, and the
/// codimension is at most l(n-k+1) (the context's `max_part`).
pub fn check_necessary(cls: &SchubertClass, ell: u32) -> Result<ClusterReport, ClusterError> {
    if ell < 1 {
        return Err(ClusterError::EllOutOfRange);
    }
    require_effective_nonzero(cls)?;
    let epsilon = cls.codimension().ok_or(ClusterError::NotHomogeneous)?;
    let ell_floor = cluster_floor(cls)?;
    let codim_bound = ell * cls.ctx().max_part();
    let satisfies_necessary = ell_floor <= ell && epsilon <= codim_bound;
    let extremal = extremal_classify(cls, ell)?;
    Ok(ClusterReport {
        epsilon,
        ell,
        ell_floor,
        codim_bound,
        satisfies_necessary,
        extremal,
    })
}

/// At the extremal codimension l(n-k+1), the class of an l-clustered family
/// must be a multiple of the rectangle class (max_part^l, 0, ...): the
/// Schubert class of planes containing a fixed P^(l-1). Returns the
/// description exactly when the class has that shape; `None` otherwise.
pub fn extremal_classify(
    cls: &SchubertClass,
    ell: u32,
) -> Result<Option<ExtremalDescription>, ClusterError> {
    if ell < 1 {
        return Err(ClusterError::EllOutOfRange);
    }
    if cls.is_zero() {
        return Err(ClusterError::ZeroClass);
    }
    let epsilon = cls.codimension().ok_or(ClusterError::NotHomogeneous)?;
    let ctx = cls.ctx();
    let target = ell.checked_mul(ctx.max_part()).expect("small products");
    if epsilon != target || ell as usize > ctx.num_parts() {
        return Ok(None);
    }
    let mut rect = alloc::vec![0u32; ctx.num_parts()];
    for slot in rect.iter_mut().take(ell as usize) {
        *slot = ctx.max_part();
    }
    let rect = Partition::new(rect).expect("rectangles are weakly decreasing");
    if cls.num_terms() == 1 && cls.support().next() == Some(&rect) {
        Ok(Some(ExtremalDescription {
            fixed_plane_dim: ell - 1,
            multiplicity: cls.coeff(&rect),
        }))
    } else {
        Ok(None)
    }
}

/// Output of [`mu_construction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuConstruction {
    /// The context of the input family of (k-1)-planes: G(k-1, n).
    pub source_ctx: GrassContext,
    pub lambda: Partition,
    /// Number of nonzero parts of lambda.
    pub ell: u32,
    /// Dual of lambda in the source context.
    pub dual: Partition,
    /// The context of the containing k-planes: G(k, n).
    pub target_ctx: GrassContext,
    /// The partition pairing nontrivially with the containing family.
    pub mu: Partition,
    /// dim G(k, n) - |mu|: an upper bound for the codimension of the
    /// containing family.
    pub kleiman_bound: u32,
}

/// From the class index lambda of a Schubert variety of (k-1)-planes, build
/// the partition mu in G(k, n) whose Schubert variety still meets every
/// translate of the containing family: n-k repeated k-l+1 times, followed by
/// the last l parts of the dual of lambda.
///
/// The construction comes with an exact identity, asserted on every call:
/// |lambda| = l(n-k+1) - sum of those last l dual parts.
pub fn mu_construction(
    ctx: GrassContext,
    lambda: &Partition,
) -> Result<MuConstruction, ClusterError> {
    ctx.check_admissible(lambda)?;
    if lambda.is_zero() {
        return Err(ClusterError::ZeroPartition);
    }
    let k = ctx.plane_dim() + 1;
    let n = ctx.ambient_dim();
    // the containing family lives in G(k, n), which must itself be a
    // Grassmannian (k < n)
    let target_ctx = GrassContext::new(k, n)?;
    let ell = lambda.num_nonzero() as u32;
    let dual = ctx.dual(lambda)?;

    let head = (k - ell + 1) as usize;
    let mut parts: Vec<u32> = alloc::vec![n - k; head];
    parts.extend_from_slice(&dual.parts()[(k - ell) as usize..k as usize]);
    let mu = Partition::new(parts).expect("mu is weakly decreasing by construction");
    target_ctx
        .check_admissible(&mu)
        .expect("mu fits the target box by construction");

    let tail_sum: u32 = dual.parts()[(k - ell) as usize..k as usize].iter().sum();
    assert_eq!(
        lambda.size(),
        ell * (n - k + 1) - tail_sum,
        "codimension identity violated"
    );

    let kleiman_bound = target_ctx.dimension() - mu.size();
    Ok(MuConstruction {
        source_ctx: ctx,
        lambda: lambda.clone(),
        ell,
        dual,
        target_ctx,
        mu,
        kleiman_bound,
    })
}

/// The class-level model of planes meeting a fixed subvariety Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetsZModel {
    pub n: u32,
    pub k: u32,
    /// dim Z.
    pub z_dim: u32,
    /// deg Z.
    pub z_degree: u64,
    /// Codimension of B: n-k+1-m.
    pub epsilon: u32,
    /// Class of the (k-1)-planes meeting Z, in G(k-1, n).
    pub class_b: SchubertClass,
    /// Class of the containing k-planes, in G(k, n): codimension drops by
    /// exactly 1 (the family is 1-clustered).
    pub class_c: SchubertClass,
}

/// Build the meets-Z model: for Z of dimension m and degree e in P^n, the
/// family B of (k-1)-planes meeting Z has class e*sigma_(eps, 0, ...) with
/// eps = n-k+1-m, and its containing family C of k-planes has class
/// e*sigma_(eps-1, 0, ...).
pub fn meets_z_model(n: u32, k: u32, m: u32, e: u64) -> Result<MeetsZModel, ClusterError> {
    if k < 1 || k > n.saturating_sub(1) {
        return Err(ClusterError::PlaneOutOfRange { k, n });
    }
    if e < 1 {
        return Err(ClusterError::DegreeOutOfRange);
    }
    if m > n - k {
        return Err(ClusterError::ZDimensionTooLarge { z_dim: m, max: n - k });
    }
    let epsilon = n - k + 1 - m;
    let ctx_b = GrassContext::new(k - 1, n)?;
    let ctx_c = GrassContext::new(k, n)?;

    let single_row = |ctx: GrassContext, first: u32| -> Result<SchubertClass, ClusterError> {
        let mut parts = alloc::vec![0u32; ctx.num_parts()];
        parts[0] = first;
        let p = Partition::new(parts).expect("single rows are weakly decreasing");
        Ok(SchubertClass::multiple(ctx, p, BigInt::from(e))?)
    };

    Ok(MeetsZModel {
        n,
        k,
        z_dim: m,
        z_degree: e,
        epsilon,
        class_b: single_row(ctx_b, epsilon)?,
        class_c: single_row(ctx_c, epsilon - 1)?,
    })
}
