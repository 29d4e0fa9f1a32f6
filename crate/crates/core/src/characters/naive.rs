use num_rational::Ratio;

use crate::characters::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::induction::MonomialDescriptor;
use crate::limits::Limits;
use crate::pcgroup::left_transversal_in;

/// Independent brute-force oracle for induced-character inner products:
/// evaluates both induced characters at every element of the ambient
/// subgroup via the classical formula
///
///   mu^S(x) = sum over transversal elements t with t^-1 x t in B
///             of mu(t^-1 x t)
///
/// and forms the inner product with exact cyclotomic arithmetic. Shares
/// no code path with the Mackey/double-coset machinery.
pub fn naive_induced_inner_product(
    d1: &MonomialDescriptor,
    d2: &MonomialDescriptor,
    limits: &Limits,
) -> Result<Ratio<i128>> {
    if d1.ambient() != d2.ambient() {
        return Err(Error::Mismatch(
            "inner product requires a common ambient subgroup".into(),
        ));
    }
    let ambient = d1.ambient();
    let size = ambient.order()?;
    if size > limits.naive_bound {
        return Err(Error::SizeGuard {
            op: "naive_induced_inner_product",
            bound: limits.naive_bound,
            actual: size,
        });
    }
    let t1 = left_transversal_in(ambient, d1.inducing_subgroup(), limits)?;
    let t2 = left_transversal_in(ambient, d2.inducing_subgroup(), limits)?;
    let order = num_integer::lcm(d1.character().value_order(), d2.character().value_order());
    let mut sum = Cyclotomic::zero(order);
    for x in ambient.elements() {
        let v1 = induced_value(d1, &t1, &x, order);
        if v1.is_zero() {
            continue;
        }
        let v2 = induced_value(d2, &t2, &x, order);
        if v2.is_zero() {
            continue;
        }
        sum.add_assign(&v1.mul(&v2.conjugate()));
    }
    let int = sum.as_integer().ok_or_else(|| {
        Error::Mismatch("character inner product summed to a non-rational value".into())
    })?;
    Ok(Ratio::new(int, size as i128))
}

fn induced_value(
    d: &MonomialDescriptor,
    transversal: &[crate::pcgroup::Element],
    x: &crate::pcgroup::Element,
    order: u64,
) -> Cyclotomic {
    let g = d.ambient().group();
    let mu = d.character();
    let mut acc = Cyclotomic::zero(order);
    for t in transversal {
        let conj = g.conjugate(x, t);
        if let Some(v) = mu.eval_cyclotomic(&conj, order) {
            acc.add_assign(&v);
        }
    }
    acc
}
