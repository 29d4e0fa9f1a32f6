use std::collections::{HashMap, VecDeque};

use crate::characters::linear::LinearCharacter;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pcgroup::{is_normal_in, Element, Subgroup};

/// A conjugation orbit of a linear character whose domain is normal in
/// the acting ambient subgroup, together with its stabilizer.
#[derive(Clone, Debug)]
pub struct CharacterOrbit {
    pub representative: LinearCharacter,
    pub members: Vec<LinearCharacter>,
    pub stabilizer: Subgroup,
}

/// Orbit and stabilizer of `chi` under conjugation by `ambient`.
///
/// The domain must be normal in `ambient` so the orbit stays on one
/// domain; the orbit-stabilizer identity |orbit| * |stab| = |ambient| is
/// verified before returning.
pub fn orbit_stabilizer(
    chi: &LinearCharacter,
    ambient: &Subgroup,
    limits: &Limits,
) -> Result<CharacterOrbit> {
    if !is_normal_in(chi.domain(), ambient) {
        return Err(Error::Mismatch(
            "orbit_stabilizer requires the domain to be normal in the acting group".into(),
        ));
    }
    let g = ambient.group();
    // BFS over exponent vectors; transversal maps orbit point -> element t
    // with chi^t = point.
    let mut transversal: HashMap<Vec<u64>, Element> = HashMap::new();
    let mut members = vec![chi.clone()];
    let mut queue: VecDeque<LinearCharacter> = VecDeque::new();
    transversal.insert(chi.exps().to_vec(), g.identity());
    queue.push_back(chi.clone());
    let mut schreier: Vec<Element> = Vec::new();
    while let Some(mu) = queue.pop_front() {
        let t_mu = transversal[mu.exps()].clone();
        for w in ambient.igs() {
            let nu = mu.conjugate_on_normal_domain(w);
            debug_assert_eq!(nu.domain(), chi.domain());
            let key = nu.exps().to_vec();
            match transversal.get(&key) {
                None => {
                    if members.len() as u128 >= limits.orbit_bound {
                        return Err(Error::OrbitBound {
                            bound: limits.orbit_bound,
                        });
                    }
                    // Right action: chi^{t_mu * w} = (chi^{t_mu})^w = nu.
                    transversal.insert(key, g.multiply(&t_mu, w));
                    members.push(nu.clone());
                    queue.push_back(nu);
                }
                Some(t_nu) => {
                    let s = g.multiply(&g.multiply(&t_mu, w), &g.inverse(t_nu));
                    if !s.is_identity() {
                        schreier.push(s);
                    }
                }
            }
        }
    }
    let stabilizer = Subgroup::from_generators(g, &schreier);
    let orbit_exp = ambient.order_exponent() - stabilizer.order_exponent();
    let p = g.prime() as u128;
    if members.len() as u128 != p.pow(orbit_exp as u32) {
        return Err(Error::Mismatch(format!(
            "orbit-stabilizer identity violated: |orbit| = {} but |ambient : stab| = p^{}",
            members.len(),
            orbit_exp
        )));
    }
    members.sort_by(|a, b| a.exps().cmp(b.exps()));
    Ok(CharacterOrbit {
        representative: chi.clone(),
        members,
        stabilizer,
    })
}
