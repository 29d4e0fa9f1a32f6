use std::collections::BTreeMap;

use crate::characters::LinearCharacter;
use crate::error::{Error, Result};
use crate::families::{FamilyInstance, FamilyKind};
use crate::induction::{MonomialDescriptor, StrategyHint, WreathStructure};
use crate::pcgroup::{Element, PcGroup, PcPresentation, Subgroup, Word};

/// The wreath product G_0 wr C_p of a family instance: p copies of the
/// base group permuted cyclically by a new generator t, with
/// H = H_0 x G_0 x ... x G_0 and lambda = lambda_0 x 1 x ... x 1.
///
/// Generator order: t first, then copies 0..p-1 each in base order, so
/// conjugation by t maps copy k to copy k+1 and every conjugate relation
/// points to higher indices than the conjugator.
///
/// Requires [lambda_0^{G_0}, 1_{G_0}] = 0, i.e. lambda_0 nonprincipal;
/// the predicted decomposition is the base decomposition embedded in
/// copy 0 with unchanged multiplicities (eta is preserved). Predictions
/// are candidates only; the eta dispatcher re-certifies them with Mackey
/// inner products in the wreath group.
pub fn wreath_lift(base: &FamilyInstance) -> Result<FamilyInstance> {
    if base.lambda.is_principal() {
        return Err(Error::Hypothesis(
            "wreath lift requires a nonprincipal base character ([lambda^G, 1] = 0)".into(),
        ));
    }
    let g0 = &base.group;
    let p = g0.prime();
    let n0 = g0.ngens();
    let n = 1 + (p as usize) * n0;
    let offset = |copy: usize, i: usize| 1 + copy * n0 + i;

    let mut powers: Vec<(usize, Word)> = Vec::new();
    let mut conjugates: Vec<(usize, usize, Word)> = Vec::new();
    for copy in 0..p as usize {
        let shift = |w: &Word| -> Word { w.iter().map(|&(g, e)| (offset(copy, g), e)).collect() };
        for (i, w) in g0.presentation().nontrivial_powers() {
            powers.push((offset(copy, i), shift(w)));
        }
        for (i, j, w) in g0.presentation().nontrivial_conjugates() {
            conjugates.push((offset(copy, i), offset(copy, j), shift(w)));
        }
        // t^-1 (copy k) t = copy k+1.
        let next = (copy + 1) % p as usize;
        for i in 0..n0 {
            conjugates.push((0, offset(copy, i), vec![(offset(next, i), 1)]));
        }
    }
    let pres = PcPresentation::new(p, n, powers, conjugates)?;
    let group = PcGroup::new(pres)?;

    let embed = |x: &Element, copy: usize| -> Element {
        let mut exps = vec![0u16; n];
        for (i, &e) in x.exps().iter().enumerate() {
            exps[offset(copy, i)] = e;
        }
        group.element_from_exps(&exps).expect("embedding in range")
    };

    // H = H_0 (copy 0) x full copies 1..p-1.
    let mut h_gens: Vec<Element> = base.h.igs().iter().map(|w| embed(w, 0)).collect();
    let mut tail_gens: Vec<Element> = Vec::new();
    for copy in 1..p as usize {
        for i in 0..n0 {
            tail_gens.push(embed(&g0.generator(i), copy));
        }
    }
    h_gens.extend(tail_gens.iter().cloned());
    let h = Subgroup::from_generators(&group, &h_gens);

    let mut lam_exps: Vec<u64> = Vec::with_capacity(h.igs().len());
    for w in h.igs() {
        let d = w.depth().expect("nontrivial IGS member");
        let copy = (d - 1) / n0;
        if copy == 0 {
            let base_exps: Vec<u16> = w.exps()[1..1 + n0].to_vec();
            let back = g0.element_from_exps(&base_exps)?;
            lam_exps.push(base.lambda.eval(&back).expect("copy-0 member is in H_0"));
        } else {
            lam_exps.push(0);
        }
    }
    let lambda = LinearCharacter::make_linear(&h, lam_exps, base.lambda.value_order())?;

    let full = Subgroup::full(&group);
    // Predicted constituents: the base predictions lifted into copy 0.
    let mut predicted: Vec<(MonomialDescriptor, u64)> = Vec::new();
    for (desc, mult) in &base.predicted {
        let mut gens: Vec<Element> = desc
            .inducing_subgroup()
            .igs()
            .iter()
            .map(|w| embed(w, 0))
            .collect();
        gens.extend(tail_gens.iter().cloned());
        let sub = Subgroup::from_generators(&group, &gens);
        let mut exps = Vec::with_capacity(sub.igs().len());
        for w in sub.igs() {
            let d = w.depth().expect("nontrivial IGS member");
            let copy = (d - 1) / n0;
            if copy == 0 {
                let base_exps: Vec<u16> = w.exps()[1..1 + n0].to_vec();
                let back = g0.element_from_exps(&base_exps)?;
                exps.push(desc.character().eval(&back).expect("member is in the base subgroup"));
            } else {
                exps.push(0);
            }
        }
        let chi = LinearCharacter::make_linear(&sub, exps, desc.character().value_order())?;
        predicted.push((MonomialDescriptor::new(full.clone(), chi)?, *mult));
    }

    // Chain: the base chain crossed with the full later copies, then G.
    let mut chain: Vec<Subgroup> = Vec::new();
    for step in &base.chain {
        let mut gens: Vec<Element> = step.igs().iter().map(|w| embed(w, 0)).collect();
        gens.extend(tail_gens.iter().cloned());
        chain.push(Subgroup::from_generators(&group, &gens));
    }
    chain.push(full);

    let hint = StrategyHint::Wreath(WreathStructure {
        group: group.clone(),
        base_group: g0.clone(),
        base_hint: Box::new(base.hint.clone()),
    });

    let mut acting = BTreeMap::new();
    acting.insert("t", group.generator(0));

    Ok(FamilyInstance {
        kind: FamilyKind::Wreath,
        group,
        h,
        lambda,
        named: BTreeMap::new(),
        acting,
        predicted_eta: base.predicted_eta,
        predicted,
        chain,
        hint,
        base: Some(Box::new(base.clone())),
    })
}
