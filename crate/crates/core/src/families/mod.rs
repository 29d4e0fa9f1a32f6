//! Constructors for the explicit group families with structural metadata:
//! distinguished subgroups, the base character, predicted decompositions,
//! and subnormal chains, plus the cubic-residue combinatorics used by the
//! second family.

mod cubic;
mod family_a;
mod family_b;
mod wreath;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use cubic::{cubic_solution_count, cubic_value_set};
pub use family_a::family_a;
pub use family_b::family_b;
pub use wreath::wreath_lift;

use crate::characters::LinearCharacter;
use crate::error::Result;
use crate::induction::{MonomialDescriptor, StrategyHint};
use crate::pcgroup::{Element, PcGroup, Subgroup};

/// Which construction produced an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// C_p acting on an elementary abelian p^3 base; |G : H| = p^2.
    A,
    /// Truncated polynomial construction of order p^6; |G : H| = p^3.
    B { r: u64 },
    /// Wreath lift G_0 wr C_p of another instance.
    Wreath,
}

/// A constructed group together with the distinguished subgroup, the base
/// linear character, and everything the verification checks need:
/// named subgroups, acting elements, the predicted constituent list, and
/// a subnormal chain from H to G.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub kind: FamilyKind,
    pub group: Arc<PcGroup>,
    pub h: Subgroup,
    pub lambda: LinearCharacter,
    /// Named subgroups ("A", "M", "Z", "U", ...).
    pub named: BTreeMap<&'static str, Subgroup>,
    /// Named elements ("c", "a", "u1", ...).
    pub acting: BTreeMap<&'static str, Element>,
    pub predicted_eta: u64,
    /// Predicted constituents with multiplicities; metadata only, always
    /// re-certified by the decomposition engine.
    pub predicted: Vec<(MonomialDescriptor, u64)>,
    /// H = K_0 normal in K_1 normal in ... normal in K_m = G, index p steps.
    pub chain: Vec<Subgroup>,
    /// Strategy the eta dispatcher should use for this instance.
    pub hint: StrategyHint,
    /// Base instance for wreath lifts.
    pub base: Option<Box<FamilyInstance>>,
}

impl FamilyInstance {
    /// log_p |G : H|.
    pub fn index_exponent(&self) -> usize {
        self.group.ngens() - self.h.order_exponent()
    }

    pub fn full(&self) -> Subgroup {
        Subgroup::full(&self.group)
    }

    pub fn lambda_descriptor(&self) -> Result<MonomialDescriptor> {
        MonomialDescriptor::new(self.full(), self.lambda.clone())
    }
}
