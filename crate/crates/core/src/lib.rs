//! Sparse symmetric shifted ideals, monomial star configurations and their
//! symbolic powers.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`]: monomial ideals over `K[z_1..z_s]` and the grid ring
//!   `K[z_{i,j}]`, with decomposition, duality and polarization kernels.
//! * [`sss`]: sparse symmetric shifted ideals, their generator order and
//!   linear quotients.
//! * [`betti`]: graded Betti numbers by closed formula, by linear quotients
//!   and by simplicial homology.
//! * [`star_config`]: uniform a-fold product ideals, their symbolic powers and
//!   sequential Cohen–Macaulay certificates.
//! * [`containment`]: α-invariants, Waldschmidt brackets and
//!   Harbourne–Huneke type containments.

pub mod betti;
pub mod containment;
pub mod error;
pub mod monomial;
pub mod sss;
pub mod star_config;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal, RingDescriptor, RingKind, Var};
pub use sss::{Partition, QuotientCertificate, SparseMonomial, SssIdeal};
pub use star_config::FoldParams;
