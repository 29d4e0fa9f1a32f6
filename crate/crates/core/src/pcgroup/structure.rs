use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pcgroup::cosets::intersection;
use crate::pcgroup::group::{Element, PcGroup};
use crate::pcgroup::subgroup::Subgroup;

fn brute_guard(op: &'static str, order: u128, limits: &Limits) -> Result<()> {
    if order > limits.brute_force_bound {
        return Err(Error::SizeGuard {
            op,
            bound: limits.brute_force_bound,
            actual: order,
        });
    }
    Ok(())
}

/// Z(G), by scanning all elements against the generators.
pub fn center(group: &Arc<PcGroup>, limits: &Limits) -> Result<Subgroup> {
    brute_guard("center", group.order()?, limits)?;
    let gens: Vec<Element> = (0..group.ngens()).map(|i| group.generator(i)).collect();
    collect_commuting(&Subgroup::full(group), &gens)
}

/// C_G(S) = elements of G commuting with every IGS member of S.
pub fn centralizer(group: &Arc<PcGroup>, s: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    brute_guard("centralizer", group.order()?, limits)?;
    collect_commuting(&Subgroup::full(group), s.igs())
}

/// Elements of `ambient` commuting with all of `targets`, gathered into a
/// subgroup. Skips elements already captured, so the subgroup test acts
/// as the early exit.
fn collect_commuting(ambient: &Subgroup, targets: &[Element]) -> Result<Subgroup> {
    let g = ambient.group();
    let mut found = Subgroup::trivial(g);
    let mut count: u128 = 0;
    for x in ambient.elements() {
        if found.contains(&x) {
            count += 1;
            continue;
        }
        let commutes = targets
            .iter()
            .all(|t| g.multiply(&x, t) == g.multiply(t, &x));
        if commutes {
            count += 1;
            let mut gens: Vec<Element> = found.igs().to_vec();
            gens.push(x);
            found = Subgroup::from_generators(g, &gens);
        }
    }
    debug_assert_eq!(count, found.order().unwrap_or(u128::MAX));
    Ok(found)
}

/// Whether B is normal in `ambient` (checked on generators).
pub fn is_normal_in(b: &Subgroup, ambient: &Subgroup) -> bool {
    let g = b.group();
    ambient
        .igs()
        .iter()
        .all(|x| b.igs().iter().all(|w| b.contains(&g.conjugate(w, x))))
}

/// Whether B is normal in the full group.
pub fn is_normal(b: &Subgroup) -> bool {
    let g = b.group();
    (0..g.ngens()).all(|i| {
        let x = g.generator(i);
        b.igs().iter().all(|w| b.contains(&g.conjugate(w, &x)))
    })
}

/// B^g = g^{-1} B g.
pub fn conjugate_subgroup(b: &Subgroup, g_elem: &Element) -> Subgroup {
    let g = b.group();
    let gens: Vec<Element> = b.igs().iter().map(|w| g.conjugate(w, g_elem)).collect();
    Subgroup::from_generators(g, &gens)
}

/// The derived subgroup B' = [B, B]: normal closure in B of the pairwise
/// IGS commutators.
pub fn derived_subgroup(b: &Subgroup) -> Subgroup {
    let g = b.group();
    let mut gens: Vec<Element> = Vec::new();
    for (i, u) in b.igs().iter().enumerate() {
        for v in &b.igs()[i + 1..] {
            let c = g.commutator(u, v);
            if !c.is_identity() {
                gens.push(c);
            }
        }
    }
    let mut sub = Subgroup::from_generators(g, &gens);
    loop {
        let mut new_gens: Vec<Element> = Vec::new();
        for s in sub.igs() {
            for w in b.igs() {
                let c = g.conjugate(s, w);
                if !sub.contains(&c) {
                    new_gens.push(c);
                }
            }
        }
        if new_gens.is_empty() {
            return sub;
        }
        new_gens.extend(sub.igs().iter().cloned());
        sub = Subgroup::from_generators(g, &new_gens);
    }
}

/// core_G(B): the largest normal subgroup of G contained in B, by
/// iterated intersection with generator conjugates.
pub fn normal_core(b: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    let g = b.group();
    brute_guard("normal_core", g.order()?, limits)?;
    let mut core = b.clone();
    loop {
        let mut changed = false;
        for i in 0..g.ngens() {
            let x = g.generator(i);
            let conj = conjugate_subgroup(&core, &x);
            if conj != core {
                core = intersection(&core, &conj);
                changed = true;
            }
        }
        if !changed {
            return Ok(core);
        }
    }
}

/// N_ambient(B), by scanning ambient elements.
pub(crate) fn normalizer_in(ambient: &Subgroup, b: &Subgroup) -> Subgroup {
    let g = ambient.group();
    let mut found = b.clone();
    for x in ambient.elements() {
        if found.contains(&x) {
            continue;
        }
        let normalizes = b.igs().iter().all(|w| b.contains(&g.conjugate(w, &x)));
        if normalizes {
            let mut gens: Vec<Element> = found.igs().to_vec();
            gens.push(x);
            found = Subgroup::from_generators(g, &gens);
        }
    }
    found
}

/// A subnormal chain H = K_0 < K_1 < ... < K_m = G with every step normal
/// of index p, by normalizer climbing. Every maximal subgroup of a p-group
/// is normal, so each index-p step found this way is automatically normal.
pub fn subnormal_chain(group: &Arc<PcGroup>, h: &Subgroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    brute_guard("subnormal_chain", group.order()?, limits)?;
    let p = group.prime();
    let full = Subgroup::full(group);
    let mut chain = vec![h.clone()];
    let mut cur = h.clone();
    while !cur.is_full() {
        let norm = normalizer_in(&full, &cur);
        // cur is proper, so its normalizer strictly contains it.
        let x = norm
            .elements()
            .find(|x| !cur.contains(x))
            .expect("normalizer of a proper subgroup must exceed it");
        // Replace x by the power of x whose p-th power falls into cur,
        // so the extension has index exactly p.
        let mut y = x;
        loop {
            let yp = group.power(&y, p as u64);
            if cur.contains(&yp) {
                break;
            }
            y = yp;
        }
        let mut gens: Vec<Element> = cur.igs().to_vec();
        gens.push(y);
        let next = Subgroup::from_generators(group, &gens);
        debug_assert_eq!(next.order_exponent(), cur.order_exponent() + 1);
        debug_assert!(is_normal_in(&cur, &next));
        chain.push(next.clone());
        cur = next;
    }
    Ok(chain)
}
