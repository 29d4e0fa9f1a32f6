use std::sync::Arc;

use crate::characters::{extension_fiber, orbit_stabilizer, LinearCharacter};
use crate::error::{Error, Result};
use crate::induction::certify::{certify_decomposition, DecompositionCertificate};
use crate::induction::descriptor::MonomialDescriptor;
use crate::induction::mackey::mackey_inner_product;
use crate::limits::Limits;
use crate::oracle::{decompose_against_irr, irr_exhaustive_cached};
use crate::pcgroup::{derived_subgroup, is_normal_in, subgroup_lattice, PcGroup, Subgroup};

/// Structural data for groups built as wreath products G0 wr C_p: the
/// cycle generator is g1 and copy k of the base occupies generator
/// indices 1 + k*n0 .. 1 + (k+1)*n0 (0-based), conjugation by g1 mapping
/// copy k to copy k+1.
#[derive(Clone, Debug)]
pub struct WreathStructure {
    pub group: Arc<PcGroup>,
    pub base_group: Arc<PcGroup>,
    pub base_hint: Box<StrategyHint>,
}

impl WreathStructure {
    pub fn base_ngens(&self) -> usize {
        self.base_group.ngens()
    }

    /// Embeds a base-group element into copy k.
    pub fn embed(&self, x: &crate::pcgroup::Element, copy: usize) -> crate::pcgroup::Element {
        let n0 = self.base_ngens();
        let mut exps = vec![0u16; self.group.ngens()];
        for (i, &e) in x.exps().iter().enumerate() {
            exps[1 + copy * n0 + i] = e;
        }
        self.group.element_from_exps(&exps).expect("embedding stays in range")
    }

    /// Projects a wreath element supported in copy k back to the base.
    pub fn project(&self, x: &crate::pcgroup::Element, copy: usize) -> Option<crate::pcgroup::Element> {
        let n0 = self.base_ngens();
        let lo = 1 + copy * n0;
        let hi = lo + n0;
        for (i, &e) in x.exps().iter().enumerate() {
            if e != 0 && !(lo..hi).contains(&i) {
                return None;
            }
        }
        let base_exps: Vec<u16> = x.exps()[lo..hi].to_vec();
        Some(self.base_group.element_from_exps(&base_exps).unwrap())
    }

    /// The full base copies 1..p-1 embedded, as IGS generators.
    pub fn tail_copy_generators(&self) -> Vec<crate::pcgroup::Element> {
        let p = self.group.prime() as usize;
        let n0 = self.base_ngens();
        let mut out = Vec::new();
        for copy in 1..p {
            for i in 0..n0 {
                out.push(self.embed(&self.base_group.generator(i), copy));
            }
        }
        out
    }
}

/// Which decomposition strategy `eta` should attempt. `Auto` tries the
/// tiers in order: abelian overgroup (searched under the enumeration
/// guard), then the exhaustive oracle.
#[derive(Clone, Debug, Default)]
pub enum StrategyHint {
    #[default]
    Auto,
    AbelianOvergroup(Subgroup),
    Wreath(WreathStructure),
    OracleOnly,
}

#[derive(Clone, Debug)]
pub struct EtaResult {
    pub eta: u64,
    pub certificate: DecompositionCertificate,
}

/// Number of distinct irreducible constituents of theta^ambient, with a
/// Mackey-verified decomposition certificate. No strategy's answer is
/// trusted without certification.
pub fn eta(
    theta: &LinearCharacter,
    ambient: &Subgroup,
    hint: &StrategyHint,
    limits: &Limits,
) -> Result<EtaResult> {
    let h = theta.domain();
    if !h.igs().iter().all(|w| ambient.contains(w)) {
        return Err(Error::Mismatch(
            "character domain is not contained in the ambient subgroup".into(),
        ));
    }
    // theta on the whole ambient: theta^ambient = theta itself.
    if h.order_exponent() == ambient.order_exponent() {
        let target = MonomialDescriptor::new(ambient.clone(), theta.clone())?;
        let cert = certify_decomposition(target.clone(), vec![(target, 1)], limits)?;
        return Ok(EtaResult {
            eta: 1,
            certificate: cert,
        });
    }
    let mut last_err: Option<Error> = None;
    match hint {
        StrategyHint::AbelianOvergroup(a) => {
            match tier_abelian_overgroup(theta, ambient, a, limits) {
                Ok(r) => return Ok(r),
                Err(e) => last_err = Some(e),
            }
        }
        StrategyHint::Wreath(ws) => match tier_wreath(theta, ambient, ws, limits) {
            Ok(r) => return Ok(r),
            Err(e) => last_err = Some(e),
        },
        StrategyHint::Auto => {
            if let Some(r) = tier_abelian_search(theta, ambient, limits) {
                return Ok(r);
            }
        }
        StrategyHint::OracleOnly => {}
    }
    match tier_oracle(theta, ambient, limits) {
        Ok(r) => Ok(r),
        Err(oracle_err) => {
            let detail = match last_err {
                Some(e) => format!("{e}; oracle: {oracle_err}"),
                None => oracle_err.to_string(),
            };
            Err(Error::NoStrategyApplies(detail))
        }
    }
}

/// Tier 1: decompose through an abelian normal overgroup A of the domain.
/// theta^A is the sum of its extension fiber; grouping the fiber into
/// conjugation orbits and inducing one representative per orbit gives the
/// candidate constituents, with multiplicities resolved directly by
/// [theta^S, rep^S].
fn tier_abelian_overgroup(
    theta: &LinearCharacter,
    ambient: &Subgroup,
    a: &Subgroup,
    limits: &Limits,
) -> Result<EtaResult> {
    if !derived_subgroup(a).is_trivial() {
        return Err(Error::NoStrategyApplies("overgroup is not abelian".into()));
    }
    if !is_normal_in(a, ambient) {
        return Err(Error::NoStrategyApplies(
            "overgroup is not normal in the ambient subgroup".into(),
        ));
    }
    let fiber = extension_fiber(theta, a, limits)?;
    let target = MonomialDescriptor::new(ambient.clone(), theta.clone())?;
    let mut seen: Vec<Vec<u64>> = Vec::new();
    let mut candidates: Vec<(MonomialDescriptor, u64)> = Vec::new();
    for lam in &fiber {
        if seen.contains(&lam.exps().to_vec()) {
            continue;
        }
        let orbit = orbit_stabilizer(lam, ambient, limits)?;
        // Representative: the lexicographically least fiber member in the orbit.
        let mut in_fiber: Vec<&LinearCharacter> = fiber
            .iter()
            .filter(|f| orbit.members.iter().any(|m| m.exps() == f.exps()))
            .collect();
        in_fiber.sort_by(|x, y| x.exps().cmp(y.exps()));
        for f in &in_fiber {
            seen.push(f.exps().to_vec());
        }
        let rep = (*in_fiber[0]).clone();
        let cand = MonomialDescriptor::new(ambient.clone(), rep)?;
        let mult = mackey_inner_product(&target, &cand, limits)?;
        candidates.push((cand, mult));
    }
    let cert = certify_decomposition(target, candidates, limits)?;
    Ok(EtaResult {
        eta: cert.eta(),
        certificate: cert,
    })
}

/// Auto-search for tier 1: all abelian normal overgroups of the domain,
/// largest first, within the subgroup-enumeration guard.
fn tier_abelian_search(
    theta: &LinearCharacter,
    ambient: &Subgroup,
    limits: &Limits,
) -> Option<EtaResult> {
    if ambient.order_exponent() > limits.enumerate_max_exponent {
        return None;
    }
    let lattice = subgroup_lattice(ambient, limits).ok()?;
    let h = theta.domain();
    for k in (h.order_exponent() + 1..=ambient.order_exponent()).rev() {
        for a in &lattice[k] {
            if !h.igs().iter().all(|w| a.contains(w)) {
                continue;
            }
            if !derived_subgroup(a).is_trivial() || !is_normal_in(a, ambient) {
                continue;
            }
            if let Ok(r) = tier_abelian_overgroup(theta, ambient, a, limits) {
                return Some(r);
            }
        }
    }
    None
}

/// Tier 2: wreath-structural lifting. For theta = theta_0 x 1 x ... x 1
/// on H = S_0 x G_0 x ... x G_0 inside G = G_0 wr C_p, the certified base
/// decomposition of theta_0^{G_0} lifts constituent-by-constituent:
/// a nonprincipal constituent (B, mu) becomes (B x G_0^{p-1}, mu x 1),
/// and a principal constituent expands into the p linear characters of
/// G/(G_0^p). The lift only generates candidates; Mackey certification
/// in the wreath group is what validates them.
fn tier_wreath(
    theta: &LinearCharacter,
    ambient: &Subgroup,
    ws: &WreathStructure,
    limits: &Limits,
) -> Result<EtaResult> {
    if !ambient.is_full() || !Arc::ptr_eq(ambient.group(), &ws.group) {
        return Err(Error::NoStrategyApplies(
            "wreath strategy requires the full wreath group as ambient".into(),
        ));
    }
    let g = &ws.group;
    let p = g.prime() as usize;
    let n0 = ws.base_ngens();
    let h = theta.domain();

    // The domain must factor as S_0 x G_0 x ... x G_0 with theta trivial
    // outside copy 0.
    let mut base_gens = Vec::new();
    let mut base_exps = Vec::new();
    let mut tail_count = vec![0usize; p];
    for (w, &e) in h.igs().iter().zip(theta.exps()) {
        let d = w.depth().expect("IGS members are nontrivial");
        if d == 0 {
            return Err(Error::NoStrategyApplies(
                "domain contains the wreath cycle generator".into(),
            ));
        }
        let copy = (d - 1) / n0;
        match ws.project(w, copy) {
            None => {
                return Err(Error::NoStrategyApplies(
                    "domain IGS member crosses copy boundaries".into(),
                ))
            }
            Some(base_elem) => {
                if copy == 0 {
                    base_gens.push(base_elem);
                    base_exps.push(e);
                } else {
                    tail_count[copy] += 1;
                    if e != 0 {
                        return Err(Error::NoStrategyApplies(
                            "character is nontrivial outside copy 0".into(),
                        ));
                    }
                }
            }
        }
    }
    if tail_count[1..].iter().any(|&c| c != n0) {
        return Err(Error::NoStrategyApplies(
            "domain does not contain the full later copies".into(),
        ));
    }

    let s0 = Subgroup::from_generators(&ws.base_group, &base_gens);
    let theta0 = LinearCharacter::make_linear(&s0, base_exps, theta.value_order())?;
    let base_full = Subgroup::full(&ws.base_group);
    let base = eta(&theta0, &base_full, &ws.base_hint, limits)?;

    let tail = ws.tail_copy_generators();
    let mut candidates: Vec<(MonomialDescriptor, u64)> = Vec::new();
    for (desc, mult) in &base.certificate.constituents {
        let is_principal_constituent =
            desc.degree_exponent() == 0 && desc.character().is_principal();
        if is_principal_constituent {
            // (1_N)^G is the sum of the p linear characters of G/N.
            let full = ambient.clone();
            for j in 0..p as u64 {
                let mut exps = vec![0u64; full.igs().len()];
                for (idx, w) in full.igs().iter().enumerate() {
                    if w.depth() == Some(0) {
                        exps[idx] = j * w.exps()[0] as u64 % g.prime() as u64;
                    }
                }
                let chi = LinearCharacter::make_linear(&full, exps, g.prime() as u64)?;
                candidates.push((MonomialDescriptor::new(ambient.clone(), chi)?, *mult));
            }
        } else {
            let mut gens: Vec<crate::pcgroup::Element> = desc
                .inducing_subgroup()
                .igs()
                .iter()
                .map(|w| ws.embed(w, 0))
                .collect();
            gens.extend(tail.iter().cloned());
            let lifted_sub = Subgroup::from_generators(g, &gens);
            let mut exps = Vec::with_capacity(lifted_sub.igs().len());
            for w in lifted_sub.igs() {
                let d = w.depth().expect("nontrivial IGS member");
                let copy = (d - 1) / n0;
                let val = if copy == 0 {
                    let back = ws
                        .project(w, 0)
                        .expect("copy-0 member projects to the base");
                    desc.character()
                        .eval(&back)
                        .expect("lifted member evaluates in the base character")
                } else {
                    0
                };
                exps.push(val);
            }
            let chi =
                LinearCharacter::make_linear(&lifted_sub, exps, desc.character().value_order())?;
            candidates.push((MonomialDescriptor::new(ambient.clone(), chi)?, *mult));
        }
    }
    let target = MonomialDescriptor::new(ambient.clone(), theta.clone())?;
    let cert = certify_decomposition(target, candidates, limits)?;
    Ok(EtaResult {
        eta: cert.eta(),
        certificate: cert,
    })
}

/// Tier 3: decompose against the exhaustive oracle table.
fn tier_oracle(
    theta: &LinearCharacter,
    ambient: &Subgroup,
    limits: &Limits,
) -> Result<EtaResult> {
    let table = irr_exhaustive_cached(ambient, limits)?;
    let target = MonomialDescriptor::new(ambient.clone(), theta.clone())?;
    let candidates = decompose_against_irr(&target, &table, limits)?;
    let cert = certify_decomposition(target, candidates, limits)?;
    Ok(EtaResult {
        eta: cert.eta(),
        certificate: cert,
    })
}

/// The split of Lemma-style central extensions: for Z1 central with
/// |H Z1 : H| = p, theta extends to H Z1 in exactly p ways and
/// eta(theta^S) is the sum of eta(nu^S) over the extensions.
#[derive(Debug)]
pub struct CentralSplit {
    pub extensions: Vec<(LinearCharacter, EtaResult)>,
    pub total: EtaResult,
}

pub fn central_extension_split(
    theta: &LinearCharacter,
    z1: &Subgroup,
    ambient: &Subgroup,
    limits: &Limits,
) -> Result<CentralSplit> {
    let g = ambient.group();
    // Z1 must be central in the ambient group.
    for z in z1.igs() {
        for i in 0..g.ngens() {
            let x = g.generator(i);
            if g.multiply(z, &x) != g.multiply(&x, z) {
                return Err(Error::Hypothesis("Z1 is not central".into()));
            }
        }
    }
    let h = theta.domain();
    let mut gens: Vec<crate::pcgroup::Element> = h.igs().to_vec();
    gens.extend(z1.igs().iter().cloned());
    let hz1 = Subgroup::from_generators(g, &gens);
    if hz1.order_exponent() != h.order_exponent() + 1 {
        return Err(Error::Hypothesis(format!(
            "|H Z1 : H| = p^{}, expected p",
            hz1.order_exponent() - h.order_exponent()
        )));
    }
    let fiber = extension_fiber(theta, &hz1, limits)?;
    let mut extensions = Vec::new();
    let mut sum = 0u64;
    for nu in fiber {
        let r = eta(&nu, ambient, &StrategyHint::Auto, limits)?;
        sum += r.eta;
        extensions.push((nu, r));
    }
    let total = eta(theta, ambient, &StrategyHint::Auto, limits)?;
    if total.eta != sum {
        return Err(Error::Mismatch(format!(
            "additivity violated: eta(theta^G) = {} but extensions sum to {sum}",
            total.eta
        )));
    }
    Ok(CentralSplit { extensions, total })
}
