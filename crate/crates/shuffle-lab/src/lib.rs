//! Exact q,t-combinatorics workbench.
//!
//! The crate is organized around three layers:
//!
//! * [`qtring`] — exact arithmetic in Q(q,t) with canonical forms;
//! * [`symfunc`], [`macdonald`], [`ehall`] — symmetric functions of bounded
//!   degree, the modified Macdonald eigenoperators, and the elliptic-Hall
//!   `Q_{m,n}` operator family;
//! * [`paths`], [`verify`] — decorated rectangular lattice paths with their
//!   q,t-statistics, and executable cross-checks of the identities relating
//!   the two sides.

pub mod error;
pub mod linalg;
pub mod ehall;
pub mod macdonald;
pub mod qtring;
pub mod symfunc;

pub use error::{Error, Result};
pub use qtring::{Coeff, QtPoly, QtRat};
pub use symfunc::{Basis, Composition, Partition, SymCtx, SymF};
