//! Exact computations with finite association schemes and hypergroups:
//! closed-subset lattices, double-coset quotients, solvable chains and
//! Hall π-subsets of solvable π-valenced schemes.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory, e.g.
//!
//! ```bash
//! cargo run --example hall_subsets
//! ```

pub mod bits;
pub mod cli;
pub mod group;
pub mod hall;
pub mod io;
pub mod homomorphism;
pub mod hypergroup;
pub mod primes;
pub mod quotient;
pub mod scheme;
pub mod solvable;

pub use bits::Bits;
pub use group::GroupTable;
pub use hall::{find_hall, HallCertificate, HallError};
pub use homomorphism::{find_isomorphism, HypergroupHomomorphism};
pub use hypergroup::{ClosedSubset, ElementSubset, Hypergroup, HypergroupError};
pub use primes::PrimeSet;
pub use quotient::QuotientHypergroup;
pub use scheme::{AssociationScheme, QuotientScheme, SchemeClosedSubset, SchemeError};
pub use solvable::SolvableChain;
