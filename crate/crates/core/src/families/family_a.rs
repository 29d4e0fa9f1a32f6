use std::collections::BTreeMap;

use crate::characters::LinearCharacter;
use crate::error::{Error, Result};
use crate::families::{FamilyInstance, FamilyKind};
use crate::induction::{MonomialDescriptor, StrategyHint};
use crate::pcgroup::{PcGroup, PcPresentation, Subgroup};

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The order-p^4 group C_p ⋉ (C_p)^3 on generators (c, a, b, z) with
/// a^c = ab, b^c = bz and z central, together with H = <a, z> of index
/// p^2, the character lambda: a -> 0, z -> 1, and the predicted
/// decomposition of lambda^G: one extension representative per pairing
/// class {r, 1-r} of the fiber over A = <a, b, z>, with multiplicity 2
/// for the genuine pairs and 1 for the fixed class 2r = 1.
pub fn family_a(p: u64) -> Result<FamilyInstance> {
    if !is_odd_prime(p) {
        return Err(Error::Hypothesis(format!("p = {p} must be an odd prime")));
    }
    let pres = PcPresentation::new(
        p as u16,
        4,
        vec![],
        vec![(0, 1, vec![(1, 1), (2, 1)]), (0, 2, vec![(2, 1), (3, 1)])],
    )?;
    let group = PcGroup::new(pres)?;

    let c = group.generator(0);
    let a = group.generator(1);
    let b = group.generator(2);
    let z = group.generator(3);

    let h = Subgroup::from_generators(&group, &[a.clone(), z.clone()]);
    let a_sub = Subgroup::from_generators(&group, &[a.clone(), b.clone(), z.clone()]);
    let z_sub = Subgroup::from_generators(&group, std::slice::from_ref(&z));
    let full = Subgroup::full(&group);

    let lambda = LinearCharacter::make_linear(&h, vec![0, 1], p)?;

    // Extensions Lambda_r: a -> 0, b -> r, z -> 1. The classes {r, 1-r}
    // collapse under conjugation; the class of the residue with 2r = 1 is
    // the singleton.
    let lambda_ext = |r: u64| LinearCharacter::make_linear(&a_sub, vec![0, r % p, 1], p);
    let mut predicted: Vec<(MonomialDescriptor, u64)> = Vec::new();
    let mut seen = vec![false; p as usize];
    for r in 0..p {
        if seen[r as usize] {
            continue;
        }
        let partner = (1 + p - r % p) % p;
        seen[r as usize] = true;
        let mult = if partner == r {
            1
        } else {
            seen[partner as usize] = true;
            2
        };
        predicted.push((
            MonomialDescriptor::new(full.clone(), lambda_ext(r.min(partner))?)?,
            mult,
        ));
    }

    let mut named = BTreeMap::new();
    named.insert("A", a_sub.clone());
    named.insert("Z", z_sub);
    let mut acting = BTreeMap::new();
    acting.insert("c", c);
    acting.insert("a", a);
    acting.insert("b", b);
    acting.insert("z", z);

    Ok(FamilyInstance {
        kind: FamilyKind::A,
        chain: vec![h.clone(), a_sub.clone(), full],
        group,
        h,
        lambda,
        named,
        acting,
        predicted_eta: p.div_ceil(2),
        predicted,
        hint: StrategyHint::AbelianOvergroup(a_sub),
        base: None,
    })
}
