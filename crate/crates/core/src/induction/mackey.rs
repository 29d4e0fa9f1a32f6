use crate::error::{Error, Result};
use crate::induction::descriptor::MonomialDescriptor;
use crate::limits::Limits;
use crate::pcgroup::{conjugate_subgroup, double_coset_reps, intersection};

/// Exact inner product [mu1^S, mu2^S] of two monomially induced
/// characters by the Mackey formula:
///
///   sum over (B1, B2)-double cosets B1 t B2 of [mu1^t |_D, mu2 |_D],
///   D = B1^t ∩ B2,
///
/// where each summand is 1 precisely when the two linear characters agree
/// on an IGS of D, and 0 otherwise.
pub fn mackey_inner_product(
    d1: &MonomialDescriptor,
    d2: &MonomialDescriptor,
    limits: &Limits,
) -> Result<u64> {
    if d1.ambient() != d2.ambient() {
        return Err(Error::Mismatch(
            "Mackey inner product requires a common ambient subgroup".into(),
        ));
    }
    let ambient = d1.ambient();
    let g = ambient.group();
    let b1 = d1.inducing_subgroup();
    let b2 = d2.inducing_subgroup();
    let mu1 = d1.character();
    let mu2 = d2.character();
    let reps = double_coset_reps(ambient, b1, b2, limits)?;
    let mut total = 0u64;
    for t in &reps {
        let b1t = conjugate_subgroup(b1, t);
        let d = intersection(&b1t, b2);
        let t_inv = g.inverse(t);
        let agree = d.igs().iter().all(|w| {
            // mu1^t(w) = mu1(t w t^-1).
            let back = g.multiply(&g.multiply(t, w), &t_inv);
            let v1 = mu1.eval(&back).expect("t w t^-1 lies in B1");
            let v2 = mu2.eval(w).expect("w lies in B2");
            scale_eq(v1, mu1.value_order(), v2, mu2.value_order())
        });
        if agree {
            total += 1;
        }
    }
    Ok(total)
}

fn scale_eq(a: u64, oa: u64, b: u64, ob: u64) -> bool {
    let l = num_integer::lcm(oa, ob);
    a * (l / oa) == b * (l / ob)
}
