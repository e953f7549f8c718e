//! Library half of the `clustered` binary: JSON wire formats, the
//! Schur-polynomial oracle used to cross-check ring arithmetic by an
//! independent route, and the labeled verification suite.

pub mod app;
pub mod oracle;
pub mod verify;
pub mod wire;
