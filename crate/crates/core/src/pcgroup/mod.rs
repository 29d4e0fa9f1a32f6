//! Polycyclic presentation core: element normal forms via collection from
//! the left, and the subgroup-level structure algorithms (sifting, coset
//! canonicalization, intersections, centers, subnormal chains, subgroup
//! enumeration).

mod cosets;
mod enumerate;
mod group;
mod presentation;
mod structure;
mod subgroup;
pub mod textfmt;


pub use cosets::{double_coset_reps, intersection, left_transversal_in, right_cosets, RightCosets};
pub use enumerate::{enumerate_subgroups, subgroup_lattice};
pub use group::{Element, PcGroup};
pub use presentation::{PcPresentation, Word};
pub use structure::{
    center, centralizer, conjugate_subgroup, derived_subgroup, is_normal, is_normal_in,
    normal_core, subnormal_chain,
};
pub use subgroup::{Subgroup, SubgroupElements};
