use std::fmt;

use crate::characters::LinearCharacter;
use crate::error::{Error, Result};
use crate::pcgroup::Subgroup;

/// A monomially induced character: the pair (B, mu) standing for mu^S,
/// where mu is a linear character of B <= S and S is the ambient
/// subgroup (the full group in most uses). The degree of the represented
/// character is |S : B|.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialDescriptor {
    ambient: Subgroup,
    character: LinearCharacter,
}

impl fmt::Debug for MonomialDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Induced({:?} from {:?})",
            self.character,
            self.character.domain()
        )
    }
}

impl MonomialDescriptor {
    pub fn new(ambient: Subgroup, character: LinearCharacter) -> Result<Self> {
        if !character
            .domain()
            .igs()
            .iter()
            .all(|w| ambient.contains(w))
        {
            return Err(Error::Mismatch(
                "inducing subgroup is not contained in the ambient subgroup".into(),
            ));
        }
        Ok(MonomialDescriptor { ambient, character })
    }

    pub fn ambient(&self) -> &Subgroup {
        &self.ambient
    }

    pub fn inducing_subgroup(&self) -> &Subgroup {
        self.character.domain()
    }

    pub fn character(&self) -> &LinearCharacter {
        &self.character
    }

    pub fn degree_exponent(&self) -> usize {
        self.ambient.order_exponent() - self.inducing_subgroup().order_exponent()
    }

    pub fn degree(&self) -> Result<u128> {
        let p = self.ambient.group().prime() as u128;
        p.checked_pow(self.degree_exponent() as u32)
            .ok_or(Error::SizeGuard {
                op: "degree",
                bound: u128::MAX,
                actual: u128::MAX,
            })
    }

    /// Deterministic ordering key: (degree, inducing-subgroup IGS,
    /// character exponents).
    pub fn sort_key(&self) -> (usize, Vec<Vec<u16>>, Vec<u64>) {
        (
            self.degree_exponent(),
            self.inducing_subgroup()
                .igs()
                .iter()
                .map(|w| w.exps().to_vec())
                .collect(),
            self.character.exps().to_vec(),
        )
    }
}
