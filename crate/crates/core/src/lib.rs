//! Exact computation with finite commutative rings: idempotents, von Neumann
//! regularity, prime spectra, the von Neumann regular hull, residue-field
//! sheaves on the constructible spectrum, and finite Stone duality.
pub mod boolean_idempotents;
pub mod checks;
pub mod error;
pub mod lattice;
pub mod ring;
pub mod spectral_sheaf;
pub mod spectrum;
pub mod stone_duality;
pub mod vn_hull;
pub mod vn_regular;
pub use error::{Error, Result};
pub use ring::{build_ring, FiniteRing, Ideal, RingHom};
