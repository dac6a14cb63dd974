//! Exact monomial and monomial-ideal arithmetic over the plain ring
//! `K[z_1..z_s]` and the grid ring `K[z_{i,j}]`.

mod decompose;
mod duality;
mod ideal;
mod json;
mod mono;
mod ring;

pub use decompose::{
    associated_primes, big_height, height, irreducible_decomposition, IrreducibleComponent,
};
pub use duality::{alexander_dual, depolarize, polarize, polarize_with_levels};
pub use ideal::{minimalize, MonomialIdeal};
pub use json::{IdealJson, RingJson, TermJson};
pub use mono::Monomial;
pub use ring::{RingDescriptor, RingKind, Var};
