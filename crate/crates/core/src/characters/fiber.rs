use crate::characters::lin_all::lin_all;
use crate::characters::linear::LinearCharacter;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pcgroup::{center, derived_subgroup, intersection, Subgroup};

/// All extensions of `chi` to the overgroup A of its domain.
///
/// Supported cases: A abelian, or A = H*Z1 for a central Z1 with
/// |A : H| = p. In both, `chi` extends and the fiber has exactly |A : H|
/// members, each restricting to `chi`.
pub fn extension_fiber(
    chi: &LinearCharacter,
    a: &Subgroup,
    limits: &Limits,
) -> Result<Vec<LinearCharacter>> {
    let h = chi.domain();
    if !h.igs().iter().all(|w| a.contains(w)) {
        return Err(Error::UnsupportedOvergroup(
            "the character's domain is not contained in the overgroup".into(),
        ));
    }
    if a == h {
        return Ok(vec![chi.clone()]);
    }
    let abelian = derived_subgroup(a).is_trivial();
    if !abelian {
        // Central extension case: A = H * Z1 with Z1 <= Z(G), |A:H| = p.
        let index_p = a.order_exponent() == h.order_exponent() + 1;
        let central_case = index_p && {
            let z = center(a.group(), limits)?;
            let za = intersection(a, &z);
            let mut gens: Vec<_> = h.igs().to_vec();
            gens.extend(za.igs().iter().cloned());
            Subgroup::from_generators(a.group(), &gens) == *a
        };
        if !central_case {
            return Err(Error::UnsupportedOvergroup(
                "overgroup is neither abelian nor a central index-p extension".into(),
            ));
        }
    }
    // Restriction test without materializing restricted characters: the
    // candidate must take chi's value on every IGS generator of H.
    let h_igs = h.igs();
    let fiber: Vec<LinearCharacter> = lin_all(a, limits)?
        .into_iter()
        .filter(|nu| {
            h_igs.iter().all(|w| match (nu.eval(w), chi.eval(w)) {
                (Some(x), Some(y)) => {
                    let l = num_integer::lcm(nu.value_order(), chi.value_order());
                    x * (l / nu.value_order()) == y * (l / chi.value_order())
                }
                _ => false,
            })
        })
        .collect();
    let expected = a.order()? / h.order()?;
    if fiber.len() as u128 != expected {
        return Err(Error::UnsupportedOvergroup(format!(
            "found {} extensions, expected {}",
            fiber.len(),
            expected
        )));
    }
    Ok(fiber)
}
