//! Counting Hopf-Galois structures `e(G, N)` on Galois extensions whose
//! group `G` is almost simple with socle of prime index.
//!
//! Four independent routes are provided: closed-form formulas on element
//! census data, the holomorph translation (regular subgroups of `Hol(N)`
//! parametrized by bijective crossed homomorphisms), the inner-holomorph
//! fixed-point-free pair count, and a brute-force search for regular
//! subgroups of `Perm(G)` at small orders.

pub mod catalog;
pub mod count;
pub mod error;
pub mod field;
pub mod group;
pub mod holomorph;
pub mod morphisms;
pub mod perm;
pub mod report;
pub mod screen;
mod search;
pub mod verify;

pub use error::{HgsError, Result};
pub use group::{are_isomorphic, FiniteGroup, Limits, Region, Subgroup};
pub use morphisms::{automorphism_group, enumerate_homomorphisms, fixed_points, AutomorphismGroup, Homomorphism};
pub use perm::Perm;
