//! Linear characters of subgroups, the conjugation action on them,
//! extension fibers, orbits and stabilizers, and an exact naive
//! inner-product oracle over small groups.

mod cyclotomic;
mod fiber;
mod lin_all;
mod linear;
mod naive;
mod orbit;

pub use cyclotomic::Cyclotomic;
pub use fiber::extension_fiber;
pub use lin_all::lin_all;
pub use linear::LinearCharacter;
pub use naive::naive_induced_inner_product;
pub use orbit::{orbit_stabilizer, CharacterOrbit};
