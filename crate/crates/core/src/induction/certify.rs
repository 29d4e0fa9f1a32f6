use serde::{Deserialize, Serialize};

use crate::characters::LinearCharacter;
use crate::error::{CertFailure, Error, Result};
use crate::induction::descriptor::MonomialDescriptor;
use crate::induction::mackey::mackey_inner_product;
use crate::limits::Limits;
use crate::pcgroup::{textfmt, Element, PcGroup, Subgroup};

/// A machine-checked decomposition of an induced character: constituents
/// with multiplicities plus the full matrix of Mackey inner products that
/// witnesses irreducibility, distinctness, multiplicities and the degree
/// audit.
#[derive(Clone, Debug)]
pub struct DecompositionCertificate {
    pub target: MonomialDescriptor,
    /// Sorted by (degree, inducing-subgroup IGS, character exponents).
    pub constituents: Vec<(MonomialDescriptor, u64)>,
    /// evidence[i][j] = Mackey inner product of row i and row j of the
    /// list [target, constituent_1, ..., constituent_k].
    pub evidence: Vec<Vec<u64>>,
}

impl DecompositionCertificate {
    /// Number of distinct irreducible constituents.
    pub fn eta(&self) -> u64 {
        self.constituents.len() as u64
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.constituents.iter().map(|(_, m)| *m).collect()
    }

    /// Re-runs every certification check from scratch.
    pub fn validate(&self, limits: &Limits) -> Result<()> {
        let re = certify_decomposition(self.target.clone(), self.constituents.clone(), limits)?;
        if re.evidence != self.evidence {
            return Err(Error::Mismatch(
                "certificate evidence matrix does not re-validate".into(),
            ));
        }
        Ok(())
    }
}

/// Certifies that `target` decomposes exactly as the candidate list
/// claims. All four checks are run and every violation is reported:
/// self inner products 1, cross inner products 0, multiplicities equal to
/// [target, chi_i], and the degree audit sum m_i deg(chi_i) = deg(target)
/// (which together force exactness). [target, target] = sum m_i^2 is
/// recorded in the evidence as the Frobenius cross-check.
pub fn certify_decomposition(
    target: MonomialDescriptor,
    candidates: Vec<(MonomialDescriptor, u64)>,
    limits: &Limits,
) -> Result<DecompositionCertificate> {
    if candidates.is_empty() {
        return Err(Error::Certification(vec![CertFailure::DegreeAudit {
            sum: 0,
            target: target.degree()?,
        }]));
    }
    let mut candidates = candidates;
    candidates.sort_by_key(|(d, _)| d.sort_key());

    let k = candidates.len();
    let mut rows: Vec<&MonomialDescriptor> = Vec::with_capacity(k + 1);
    rows.push(&target);
    for (d, _) in &candidates {
        rows.push(d);
    }
    let mut evidence = vec![vec![0u64; k + 1]; k + 1];
    for i in 0..=k {
        for j in i..=k {
            let ip = mackey_inner_product(rows[i], rows[j], limits)?;
            evidence[i][j] = ip;
            evidence[j][i] = ip;
        }
    }

    let mut failures = Vec::new();
    for (i, (_, _)) in candidates.iter().enumerate() {
        if evidence[i + 1][i + 1] != 1 {
            failures.push(CertFailure::NotIrreducible {
                index: i,
                self_ip: evidence[i + 1][i + 1],
            });
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if evidence[i + 1][j + 1] != 0 {
                failures.push(CertFailure::NotDistinct {
                    i,
                    j,
                    ip: evidence[i + 1][j + 1],
                });
            }
        }
    }
    for (i, (_, m)) in candidates.iter().enumerate() {
        if evidence[0][i + 1] != *m {
            failures.push(CertFailure::WrongMultiplicity {
                index: i,
                claimed: *m,
                actual: evidence[0][i + 1],
            });
        }
    }
    let degree_sum: u128 = candidates
        .iter()
        .map(|(d, m)| d.degree().map(|deg| deg * *m as u128))
        .collect::<Result<Vec<u128>>>()?
        .iter()
        .sum();
    let target_degree = target.degree()?;
    if degree_sum != target_degree {
        failures.push(CertFailure::DegreeAudit {
            sum: degree_sum,
            target: target_degree,
        });
    }
    let sum_sq: u64 = candidates.iter().map(|(_, m)| m * m).sum();
    if evidence[0][0] != sum_sq {
        failures.push(CertFailure::Frobenius {
            self_ip: evidence[0][0],
            sum_sq,
        });
    }
    if !failures.is_empty() {
        return Err(Error::Certification(failures));
    }
    Ok(DecompositionCertificate {
        target,
        constituents: candidates,
        evidence,
    })
}

// Serialization: descriptors are written as generator words relative to
// the presentation, so a certificate can be reloaded against the group
// and re-validated.

#[derive(Serialize, Deserialize)]
pub struct DescriptorDoc {
    pub ambient: Vec<String>,
    pub subgroup: Vec<String>,
    pub char_exponents: Vec<u64>,
    pub value_order: u64,
}

#[derive(Serialize, Deserialize)]
pub struct CertificateDoc {
    pub target: DescriptorDoc,
    pub constituents: Vec<ConstituentDoc>,
    pub evidence: Vec<Vec<u64>>,
    pub eta: u64,
    pub checks_passed: bool,
}

#[derive(Serialize, Deserialize)]
pub struct ConstituentDoc {
    pub subgroup: Vec<String>,
    pub char_exponents: Vec<u64>,
    pub value_order: u64,
    pub multiplicity: u64,
}

fn words(s: &Subgroup) -> Vec<String> {
    s.igs().iter().map(|w| w.to_word_string()).collect()
}

impl DecompositionCertificate {
    pub fn to_doc(&self) -> CertificateDoc {
        CertificateDoc {
            target: DescriptorDoc {
                ambient: words(self.target.ambient()),
                subgroup: words(self.target.inducing_subgroup()),
                char_exponents: self.target.character().exps().to_vec(),
                value_order: self.target.character().value_order(),
            },
            constituents: self
                .constituents
                .iter()
                .map(|(d, m)| ConstituentDoc {
                    subgroup: words(d.inducing_subgroup()),
                    char_exponents: d.character().exps().to_vec(),
                    value_order: d.character().value_order(),
                    multiplicity: *m,
                })
                .collect(),
            evidence: self.evidence.clone(),
            eta: self.eta(),
            checks_passed: true,
        }
    }

    /// Rebuilds a certificate against `group` and re-certifies it.
    pub fn from_doc(
        doc: &CertificateDoc,
        group: &std::sync::Arc<PcGroup>,
        limits: &Limits,
    ) -> Result<DecompositionCertificate> {
        let ambient = parse_subgroup(group, &doc.target.ambient)?;
        let target_sub = parse_subgroup(group, &doc.target.subgroup)?;
        let target_chi = LinearCharacter::make_linear(
            &target_sub,
            doc.target.char_exponents.clone(),
            doc.target.value_order,
        )?;
        let target = MonomialDescriptor::new(ambient.clone(), target_chi)?;
        let mut candidates = Vec::new();
        for c in &doc.constituents {
            let sub = parse_subgroup(group, &c.subgroup)?;
            let chi = LinearCharacter::make_linear(&sub, c.char_exponents.clone(), c.value_order)?;
            candidates.push((MonomialDescriptor::new(ambient.clone(), chi)?, c.multiplicity));
        }
        let cert = certify_decomposition(target, candidates, limits)?;
        if cert.evidence != doc.evidence {
            return Err(Error::Mismatch(
                "reloaded certificate evidence differs from the document".into(),
            ));
        }
        Ok(cert)
    }
}

pub fn parse_element(group: &std::sync::Arc<PcGroup>, word: &str) -> Result<Element> {
    if word.trim() == "id" {
        return Ok(group.identity());
    }
    let tokens: Vec<&str> = word.split_whitespace().collect();
    let w = textfmt::parse_word(&tokens, 0)?;
    let mut exps = vec![0u16; group.ngens()];
    for (g, e) in w {
        if g >= group.ngens() {
            return Err(Error::Parse {
                line: 1,
                msg: format!("generator g{} beyond ngens", g + 1),
            });
        }
        exps[g] = e % group.prime();
    }
    group.element_from_exps(&exps)
}

pub fn parse_subgroup(group: &std::sync::Arc<PcGroup>, word_list: &[String]) -> Result<Subgroup> {
    let gens = word_list
        .iter()
        .map(|w| parse_element(group, w))
        .collect::<Result<Vec<Element>>>()?;
    Ok(Subgroup::from_generators(group, &gens))
}
