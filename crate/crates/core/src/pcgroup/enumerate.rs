use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pcgroup::structure::normalizer_in;
use crate::pcgroup::subgroup::Subgroup;

fn igs_key(s: &Subgroup) -> Vec<Vec<u16>> {
    s.igs().iter().map(|w| w.exps().to_vec()).collect()
}

type LatticeKey = (usize, u16, usize, Vec<Vec<u16>>);

fn lattice_cache() -> &'static Mutex<HashMap<LatticeKey, Vec<Vec<Subgroup>>>> {
    static CACHE: OnceLock<Mutex<HashMap<LatticeKey, Vec<Vec<Subgroup>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All subgroups of `ambient`, listed by order exponent: result[k] holds
/// the subgroups of order p^k, each sorted by canonical IGS.
///
/// Bottom-up cyclic extension: every subgroup of order p^{k+1} is
/// generated by a subgroup T of order p^k (normal in it) together with a
/// normalizer element whose p-th power falls into T.
pub fn subgroup_lattice(ambient: &Subgroup, limits: &Limits) -> Result<Vec<Vec<Subgroup>>> {
    let m = ambient.order_exponent();
    if m > limits.enumerate_max_exponent {
        return Err(Error::SizeGuard {
            op: "subgroup_lattice",
            bound: (ambient.group().prime() as u128).pow(limits.enumerate_max_exponent as u32),
            actual: ambient.order()?,
        });
    }
    let g = ambient.group();
    let cache_key: LatticeKey = (
        std::sync::Arc::as_ptr(g) as usize,
        g.prime(),
        g.ngens(),
        igs_key(ambient),
    );
    if let Some(hit) = lattice_cache().lock().unwrap().get(&cache_key) {
        return Ok(hit.clone());
    }
    let p = g.prime();
    let mut lattice: Vec<Vec<Subgroup>> = Vec::with_capacity(m + 1);
    lattice.push(vec![Subgroup::trivial(g)]);
    for k in 0..m {
        let mut seen: BTreeSet<Vec<Vec<u16>>> = BTreeSet::new();
        let mut next: Vec<Subgroup> = Vec::new();
        for t in &lattice[k] {
            let norm = if t.is_trivial() {
                ambient.clone()
            } else {
                normalizer_in(ambient, t)
            };
            for x in norm.elements() {
                if t.contains(&x) {
                    continue;
                }
                if !t.contains(&g.power(&x, p as u64)) {
                    continue;
                }
                let mut gens: Vec<_> = t.igs().to_vec();
                gens.push(x);
                let s = Subgroup::from_generators(g, &gens);
                debug_assert_eq!(s.order_exponent(), k + 1);
                if seen.insert(igs_key(&s)) {
                    next.push(s);
                }
            }
        }
        next.sort_by_key(igs_key);
        lattice.push(next);
    }
    lattice_cache()
        .lock()
        .unwrap()
        .insert(cache_key, lattice.clone());
    Ok(lattice)
}

/// The complete, duplicate-free list of subgroups of `ambient` of order
/// p^k, sorted by canonical IGS.
pub fn enumerate_subgroups(ambient: &Subgroup, k: usize, limits: &Limits) -> Result<Vec<Subgroup>> {
    if k > ambient.order_exponent() {
        return Ok(Vec::new());
    }
    let lattice = subgroup_lattice(ambient, limits)?;
    Ok(lattice[k].clone())
}
