//! Exact calculators for linear spaces on hypersurfaces: Schubert-class
//! arithmetic in a fixed Grassmannian, criteria for clustered families of
//! linear spaces, dimension and canonical-multidegree formulas for osculating
//! line families, degree-threshold reports, and splitting types of kernel
//! bundles on P^1.
//!
//! Everything is computed over exact integers/rationals; there is no floating
//! point anywhere in this crate. All values are immutable after construction
//! and every operation is a pure function, so the whole API is safe to use
//! from concurrent contexts without coordination.
//!
//! The crate is `no_std`-compatible (it needs `alloc`); the companion CLI
//! crate carries all IO, serialization, and randomized verification drivers.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cluster;
pub mod grassmann;
pub mod osculation;
pub mod p1;
pub mod schubert;

pub use cluster::{ClusterError, ClusterReport, MeetsZModel, MuConstruction};
pub use grassmann::{GrassContext, GrassmannError, Partition, ShiftMode};
pub use osculation::{OsculationError, OsculationReport, Threshold, ThresholdReport};
pub use p1::{BinaryForm, GradedMap, MultiPolynomial, P1Error, SplittingType};
pub use schubert::{LrCache, RingError, SchubertClass};
