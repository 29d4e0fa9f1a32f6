//! Brute-force ground truth for tiny groups: exhaustive irreducible
//! enumeration via monomial induction, independent of the tiered
//! decomposition strategies.
//!
//! Every irreducible character of a p-group is induced from a linear
//! character of some subgroup, so enumerating all subgroups and all of
//! their linear characters, inducing, and deduplicating by Mackey inner
//! products yields the complete character table (as descriptors). The
//! enumeration stops as soon as the degree-square sum reaches |G|, which
//! certifies completeness; the class count is cross-checked afterwards.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::characters::lin_all;
use crate::error::{Error, Result};
use crate::induction::{mackey_inner_product, MonomialDescriptor};
use crate::limits::Limits;
use crate::pcgroup::{subgroup_lattice, Element, Subgroup};

/// The complete list of irreducible characters of an ambient subgroup,
/// as monomial descriptors, pairwise Mackey-orthogonal with self inner
/// product 1, sorted deterministically.
#[derive(Clone, Debug)]
pub struct IrrTable {
    pub ambient: Subgroup,
    pub irreducibles: Vec<MonomialDescriptor>,
}

impl IrrTable {
    pub fn degrees(&self) -> Result<Vec<u128>> {
        self.irreducibles.iter().map(|d| d.degree()).collect()
    }

    pub fn to_doc(&self) -> Result<IrrTableDoc> {
        Ok(IrrTableDoc {
            order: self.ambient.order()? as u64,
            count: self.irreducibles.len(),
            degrees: self.degrees()?.iter().map(|d| *d as u64).collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|d| crate::induction::DescriptorDoc {
                    ambient: d.ambient().igs().iter().map(|w| w.to_word_string()).collect(),
                    subgroup: d
                        .inducing_subgroup()
                        .igs()
                        .iter()
                        .map(|w| w.to_word_string())
                        .collect(),
                    char_exponents: d.character().exps().to_vec(),
                    value_order: d.character().value_order(),
                })
                .collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
pub struct IrrTableDoc {
    pub order: u64,
    pub count: usize,
    pub degrees: Vec<u64>,
    pub irreducibles: Vec<crate::induction::DescriptorDoc>,
}

/// Exhaustive irreducible enumeration for |ambient| within the oracle
/// bound. Completeness is certified by the degree-square sum and the
/// conjugacy-class count.
pub fn irr_exhaustive(ambient: &Subgroup, limits: &Limits) -> Result<IrrTable> {
    let order = ambient.order()?;
    if order > limits.oracle_max_order {
        return Err(Error::SizeGuard {
            op: "irr_exhaustive",
            bound: limits.oracle_max_order,
            actual: order,
        });
    }
    let lattice = subgroup_lattice(ambient, limits)?;
    let m = ambient.order_exponent();
    let p = ambient.group().prime() as u128;
    let mut found: Vec<MonomialDescriptor> = Vec::new();
    let mut sum_sq: u128 = 0;
    'outer: for k in (0..=m).rev() {
        let degree = p.pow((m - k) as u32);
        for b in &lattice[k] {
            if sum_sq == order {
                break 'outer;
            }
            for mu in lin_all(b, limits)? {
                if sum_sq == order {
                    break 'outer;
                }
                let cand = MonomialDescriptor::new(ambient.clone(), mu)?;
                if mackey_inner_product(&cand, &cand, limits)? != 1 {
                    continue;
                }
                let duplicate = found
                    .iter()
                    .filter(|d| d.degree_exponent() == cand.degree_exponent())
                    .any(|d| {
                        mackey_inner_product(&cand, d, limits)
                            .map(|v| v == 1)
                            .unwrap_or(false)
                    });
                if duplicate {
                    continue;
                }
                sum_sq += degree * degree;
                found.push(cand);
            }
        }
    }
    if sum_sq != order {
        return Err(Error::Mismatch(format!(
            "irreducible enumeration incomplete: degree-square sum {sum_sq} != |G| = {order}"
        )));
    }
    let classes = conjugacy_class_count(ambient);
    if classes != found.len() {
        return Err(Error::Mismatch(format!(
            "irreducible count {} != conjugacy class count {classes}",
            found.len()
        )));
    }
    found.sort_by_key(|d| d.sort_key());
    Ok(IrrTable {
        ambient: ambient.clone(),
        irreducibles: found,
    })
}

type TableKey = (usize, u16, usize, Vec<Vec<u16>>, u128);

fn table_cache() -> &'static Mutex<HashMap<TableKey, IrrTable>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, IrrTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized [`irr_exhaustive`]: scans and repeated eta computations over
/// the same ambient subgroup reuse one table. Keyed by the group pointer
/// plus its shape, the ambient IGS, and the oracle bound.
pub fn irr_exhaustive_cached(ambient: &Subgroup, limits: &Limits) -> Result<IrrTable> {
    let g = ambient.group();
    let key: TableKey = (
        std::sync::Arc::as_ptr(g) as usize,
        g.prime(),
        g.ngens(),
        ambient.igs().iter().map(|w| w.exps().to_vec()).collect(),
        limits.oracle_max_order,
    );
    if let Some(hit) = table_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let table = irr_exhaustive(ambient, limits)?;
    table_cache()
        .lock()
        .unwrap()
        .insert(key, table.clone());
    Ok(table)
}

fn conjugacy_class_count(ambient: &Subgroup) -> usize {
    let g = ambient.group();
    let mut visited: HashSet<Element> = HashSet::new();
    let mut classes = 0;
    for x in ambient.elements() {
        if visited.contains(&x) {
            continue;
        }
        classes += 1;
        let mut stack = vec![x.clone()];
        visited.insert(x);
        while let Some(y) = stack.pop() {
            for w in ambient.igs() {
                let c = g.conjugate(&y, w);
                if visited.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
    }
    classes
}

/// Multiplicity list of `target` against a complete table: entry i is
/// [target, chi_i]; zero entries are dropped. The degree audit
/// sum m_i deg(chi_i) = deg(target) is verified.
pub fn decompose_against_irr(
    target: &MonomialDescriptor,
    table: &IrrTable,
    limits: &Limits,
) -> Result<Vec<(MonomialDescriptor, u64)>> {
    if target.ambient() != &table.ambient {
        return Err(Error::Mismatch(
            "decomposition target and table have different ambients".into(),
        ));
    }
    let mut out = Vec::new();
    let mut degree_sum: u128 = 0;
    for chi in &table.irreducibles {
        let mult = mackey_inner_product(target, chi, limits)?;
        if mult > 0 {
            degree_sum += mult as u128 * chi.degree()?;
            out.push((chi.clone(), mult));
        }
    }
    if degree_sum != target.degree()? {
        return Err(Error::Mismatch(format!(
            "decomposition degree sum {degree_sum} != target degree {}",
            target.degree()?
        )));
    }
    Ok(out)
}
