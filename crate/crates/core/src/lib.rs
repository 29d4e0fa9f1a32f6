//! Exact computation with finite p-groups given by power-commutator
//! presentations: collection, subgroup arithmetic, linear characters,
//! monomial induction with certified Mackey decompositions, and the
//! verification harness behind the `pchar` CLI.
//!
//! Everything is exact integer arithmetic; there are no floating-point
//! code paths. Structural brute-force operations carry explicit size
//! guards (see [`Limits`]) so that every answer stays desk-scale.

pub mod characters;
pub mod error;
pub mod families;
pub mod induction;
pub mod limits;
pub mod oracle;
pub mod pcgroup;
pub mod snf;
pub mod verify;

pub use error::{CertFailure, Error, Result};
pub use limits::Limits;
pub use pcgroup::{Element, PcGroup, PcPresentation, Subgroup};
