use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::characters::{lin_all, naive_induced_inner_product, LinearCharacter};
use crate::error::{CertFailure, Error};
use crate::limits::Limits;
use crate::pcgroup::tests::semidirect_cube;
use crate::pcgroup::{subgroup_lattice, Subgroup};

fn elem(g: &std::sync::Arc<crate::pcgroup::PcGroup>, exps: &[u16]) -> crate::pcgroup::Element {
    g.element_from_exps(exps).unwrap()
}

fn lambda_desc(g: &std::sync::Arc<crate::pcgroup::PcGroup>) -> MonomialDescriptor {
    let h = Subgroup::from_generators(g, &[elem(g, &[0, 1, 0, 0]), elem(g, &[0, 0, 0, 1])]);
    let lambda = LinearCharacter::make_linear(&h, vec![0, 1], g.prime() as u64).unwrap();
    MonomialDescriptor::new(Subgroup::full(g), lambda).unwrap()
}

fn ext_desc(g: &std::sync::Arc<crate::pcgroup::PcGroup>, r: u64) -> MonomialDescriptor {
    let a = Subgroup::from_generators(
        g,
        &[elem(g, &[0, 1, 0, 0]), elem(g, &[0, 0, 1, 0]), elem(g, &[0, 0, 0, 1])],
    );
    let lam = LinearCharacter::make_linear(&a, vec![0, r, 1], g.prime() as u64).unwrap();
    MonomialDescriptor::new(Subgroup::full(g), lam).unwrap()
}

#[test]
fn mackey_examples_in_the_order_81_group() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);

    let one_g = MonomialDescriptor::new(full.clone(), LinearCharacter::principal(&full)).unwrap();
    assert_eq!(mackey_inner_product(&one_g, &one_g, &limits).unwrap(), 1);

    // (Lambda_2)^G is irreducible; Lambda_0^G and Lambda_2^G are distinct.
    let d0 = ext_desc(&g, 0);
    let d2 = ext_desc(&g, 2);
    assert_eq!(mackey_inner_product(&d2, &d2, &limits).unwrap(), 1);
    assert_eq!(mackey_inner_product(&d0, &d2, &limits).unwrap(), 0);

    // [lambda^G, lambda^G] = 5, [lambda^G, Lambda_0^G] = 2.
    let dl = lambda_desc(&g);
    assert_eq!(mackey_inner_product(&dl, &dl, &limits).unwrap(), 5);
    assert_eq!(mackey_inner_product(&dl, &d0, &limits).unwrap(), 2);
    assert_eq!(mackey_inner_product(&dl, &d2, &limits).unwrap(), 1);
}

#[test]
fn mackey_is_symmetric_and_matches_the_naive_oracle() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let lattice = subgroup_lattice(&full, &limits).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let all_subs: Vec<&Subgroup> = lattice.iter().flatten().collect();
    let mut checked = 0;
    while checked < 50 {
        let b1 = all_subs[rng.gen_range(0..all_subs.len())];
        let b2 = all_subs[rng.gen_range(0..all_subs.len())];
        let c1 = lin_all(b1, &limits).unwrap();
        let c2 = lin_all(b2, &limits).unwrap();
        let mu1 = c1[rng.gen_range(0..c1.len())].clone();
        let mu2 = c2[rng.gen_range(0..c2.len())].clone();
        let d1 = MonomialDescriptor::new(full.clone(), mu1).unwrap();
        let d2 = MonomialDescriptor::new(full.clone(), mu2).unwrap();
        let m12 = mackey_inner_product(&d1, &d2, &limits).unwrap();
        let m21 = mackey_inner_product(&d2, &d1, &limits).unwrap();
        assert_eq!(m12, m21);
        let naive = naive_induced_inner_product(&d1, &d2, &limits).unwrap();
        assert_eq!(naive, num_rational::Ratio::from_integer(m12 as i128));
        checked += 1;
    }
}

#[test]
fn certify_the_lambda_decomposition() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let target = lambda_desc(&g);
    let cert = certify_decomposition(
        target,
        vec![(ext_desc(&g, 0), 2), (ext_desc(&g, 2), 1)],
        &limits,
    )
    .unwrap();
    assert_eq!(cert.eta(), 2);
    assert_eq!(cert.evidence[0][0], 5);
    // Deterministic constituent order: by (degree, subgroup, exponents).
    assert_eq!(cert.constituents[0].1, 2);
    assert_eq!(cert.constituents[1].1, 1);
    cert.validate(&limits).unwrap();
}

#[test]
fn certify_trivial_decomposition() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let one = MonomialDescriptor::new(full.clone(), LinearCharacter::principal(&full)).unwrap();
    let cert = certify_decomposition(one.clone(), vec![(one, 1)], &limits).unwrap();
    assert_eq!(cert.eta(), 1);
}

#[test]
fn certify_reports_all_violated_checks() {
    // Lambda_0, Lambda_1, Lambda_2 each with multiplicity 1: Lambda_0 and
    // Lambda_1 are conjugate so their inductions coincide, and the claimed
    // multiplicity 1 contradicts [lambda^G, Lambda_0^G] = 2.
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let target = lambda_desc(&g);
    let err = certify_decomposition(
        target,
        vec![(ext_desc(&g, 0), 1), (ext_desc(&g, 1), 1), (ext_desc(&g, 2), 1)],
        &limits,
    )
    .unwrap_err();
    match err {
        Error::Certification(failures) => {
            assert!(failures
                .iter()
                .any(|f| matches!(f, CertFailure::NotDistinct { .. })));
            assert!(failures
                .iter()
                .any(|f| matches!(f, CertFailure::WrongMultiplicity { .. })));
        }
        other => panic!("expected certification failure, got {other:?}"),
    }
}

#[test]
fn certificate_round_trips_through_json() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let target = lambda_desc(&g);
    let cert = certify_decomposition(
        target,
        vec![(ext_desc(&g, 0), 2), (ext_desc(&g, 2), 1)],
        &limits,
    )
    .unwrap();
    let doc = cert.to_doc();
    let json = serde_json::to_string_pretty(&doc).unwrap();
    let parsed: CertificateDoc = serde_json::from_str(&json).unwrap();
    let reloaded = DecompositionCertificate::from_doc(&parsed, &g, &limits).unwrap();
    assert_eq!(reloaded.eta(), 2);
    assert_eq!(reloaded.evidence, cert.evidence);
}

#[test]
fn eta_tier1_matches_the_family_a_prediction() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let dl = lambda_desc(&g);
    let a = ext_desc(&g, 0).inducing_subgroup().clone();
    let result = eta(
        dl.character(),
        &full,
        &StrategyHint::AbelianOvergroup(a),
        &limits,
    )
    .unwrap();
    assert_eq!(result.eta, 2);
    assert_eq!(result.certificate.multiplicities(), vec![2, 1]);
}

#[test]
fn eta_on_the_whole_group_is_one() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let chars = lin_all(&full, &limits).unwrap();
    let r = eta(&chars[3], &full, &StrategyHint::Auto, &limits).unwrap();
    assert_eq!(r.eta, 1);
}

#[test]
fn eta_auto_uses_the_oracle_when_no_overgroup_works() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    // H = <c, z> is not inside any abelian normal subgroup of G.
    let h = Subgroup::from_generators(&g, &[elem(&g, &[1, 0, 0, 0]), elem(&g, &[0, 0, 0, 1])]);
    let theta = LinearCharacter::make_linear(&h, vec![0, 1], 3).unwrap();
    let r = eta(&theta, &full, &StrategyHint::Auto, &limits).unwrap();
    // Certified either way; the count is what the oracle decomposition gives.
    assert_eq!(r.eta, r.certificate.constituents.len() as u64);
    r.certificate.validate(&limits).unwrap();
}

#[test]
fn eta_fails_cleanly_beyond_all_strategies() {
    // Oracle bound of 1 disables tier 3; no hint disables tiers 1-2 for a
    // domain with no abelian normal overgroup.
    let limits = Limits {
        oracle_max_order: 1,
        ..Limits::default()
    };
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let h = Subgroup::from_generators(&g, &[elem(&g, &[1, 0, 0, 0]), elem(&g, &[0, 0, 0, 1])]);
    let theta = LinearCharacter::make_linear(&h, vec![0, 1], 3).unwrap();
    assert!(matches!(
        eta(&theta, &full, &StrategyHint::OracleOnly, &limits),
        Err(Error::NoStrategyApplies(_))
    ));
}

#[test]
fn eta_reduces_to_the_stabilizer_for_normal_domains() {
    // For theta linear on a normal subgroup N, eta(theta^G) equals
    // eta(theta^{G_theta}) computed inside the stabilizer of theta.
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let a_sub = ext_desc(&g, 0).inducing_subgroup().clone();
    for theta in lin_all(&a_sub, &limits).unwrap() {
        let orbit = crate::characters::orbit_stabilizer(&theta, &full, &limits).unwrap();
        let in_g = eta(&theta, &full, &StrategyHint::OracleOnly, &limits).unwrap();
        let in_stab = eta(&theta, &orbit.stabilizer, &StrategyHint::OracleOnly, &limits).unwrap();
        assert_eq!(in_g.eta, in_stab.eta, "theta = {theta:?}");
    }
}

#[test]
fn central_split_additivity_for_a_small_configuration() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let z1 = Subgroup::from_generators(&g, &[elem(&g, &[0, 0, 0, 1])]);
    // H' = <a>, theta a nontrivial character of it.
    let h = Subgroup::from_generators(&g, &[elem(&g, &[0, 1, 0, 0])]);
    let theta = LinearCharacter::make_linear(&h, vec![1], 3).unwrap();
    let split = central_extension_split(&theta, &z1, &full, &limits).unwrap();
    assert_eq!(split.extensions.len(), 3);
    let sum: u64 = split.extensions.iter().map(|(_, r)| r.eta).sum();
    assert_eq!(split.total.eta, sum);
    // The paper-style consequence: eta(theta^G) >= eta(nu^G) + (p-1).
    for (_, r) in &split.extensions {
        assert!(split.total.eta >= r.eta + 2);
    }
}

#[test]
fn central_split_rejects_noncentral_z1() {
    let limits = Limits::default();
    let g = semidirect_cube(3);
    let full = Subgroup::full(&g);
    let z1 = Subgroup::from_generators(&g, &[elem(&g, &[0, 0, 1, 0])]);
    let h = Subgroup::from_generators(&g, &[elem(&g, &[0, 1, 0, 0])]);
    let theta = LinearCharacter::make_linear(&h, vec![1], 3).unwrap();
    assert!(matches!(
        central_extension_split(&theta, &z1, &full, &limits),
        Err(Error::Hypothesis(_))
    ));
}
