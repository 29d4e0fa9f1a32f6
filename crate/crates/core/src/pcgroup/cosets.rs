use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pcgroup::group::Element;
use crate::pcgroup::subgroup::Subgroup;

/// The right coset space B\G with a transversal and a canonical
/// representative function.
///
/// canonical(x) is computed by sifting alone; it does not consult the
/// transversal and its cost is independent of |G|.
pub struct RightCosets {
    subgroup: Subgroup,
    transversal: Vec<Element>,
}

impl RightCosets {
    pub fn transversal(&self) -> &[Element] {
        &self.transversal
    }

    /// canonical(x) == canonical(y) iff Bx == By.
    pub fn canonical(&self, x: &Element) -> Element {
        right_coset_canonical(&self.subgroup, x)
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }
}

fn right_coset_canonical(b: &Subgroup, x: &Element) -> Element {
    // Bx = By iff x^-1 B = y^-1 B; canonicalize the inverse's left coset.
    let g = b.group();
    g.inverse(&b.left_coset_canonical(&g.inverse(x)))
}

/// Transversal + canonical map for the right coset space B\G.
pub fn right_cosets(b: &Subgroup, limits: &Limits) -> Result<RightCosets> {
    let index = b.index()?;
    if index > limits.coset_bound {
        return Err(Error::CosetBound {
            index,
            bound: limits.coset_bound,
        });
    }
    let g = b.group();
    let transversal = b
        .left_transversal_full()
        .into_iter()
        .map(|t| g.inverse(&t))
        .collect();
    Ok(RightCosets {
        subgroup: b.clone(),
        transversal,
    })
}

/// Representatives of the left cosets x*B with x ranging over `ambient`.
///
/// For the full group this is the lexicographic transversal; inside a
/// proper ambient subgroup it is a breadth-first orbit of the trivial
/// coset under left multiplication by the ambient IGS.
pub fn left_transversal_in(ambient: &Subgroup, b: &Subgroup, limits: &Limits) -> Result<Vec<Element>> {
    let index_exp = ambient.order_exponent() - b.order_exponent();
    let index = crate::pcgroup::group::checked_p_pow(ambient.group().prime(), index_exp as u32)?;
    if index > limits.coset_bound {
        return Err(Error::CosetBound {
            index,
            bound: limits.coset_bound,
        });
    }
    if ambient.is_full() {
        return Ok(b.left_transversal_full());
    }
    let g = ambient.group();
    let seed = b.left_coset_canonical(&g.identity());
    let mut seen: HashMap<Element, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(seed.clone(), ());
    queue.push_back(seed.clone());
    out.push(seed);
    while let Some(rep) = queue.pop_front() {
        for w in ambient.igs() {
            let next = b.left_coset_canonical(&g.multiply(w, &rep));
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                queue.push_back(next.clone());
                out.push(next);
            }
        }
    }
    debug_assert_eq!(out.len() as u128, index);
    Ok(out)
}

/// Representatives of the (B1, B2) double cosets B1 g B2 inside `ambient`,
/// as orbits of B1 acting by left multiplication on the left cosets of B2.
pub fn double_coset_reps(
    ambient: &Subgroup,
    b1: &Subgroup,
    b2: &Subgroup,
    limits: &Limits,
) -> Result<Vec<Element>> {
    let g = ambient.group();
    let transversal = left_transversal_in(ambient, b2, limits)?;
    let mut visited: HashMap<Element, ()> = HashMap::new();
    let mut reps = Vec::new();
    for t in &transversal {
        if visited.contains_key(t) {
            continue;
        }
        reps.push(t.clone());
        let mut queue = VecDeque::new();
        visited.insert(t.clone(), ());
        queue.push_back(t.clone());
        while let Some(rep) = queue.pop_front() {
            for w in b1.igs() {
                let next = b2.left_coset_canonical(&g.multiply(w, &rep));
                if !visited.contains_key(&next) {
                    visited.insert(next.clone(), ());
                    queue.push_back(next.clone());
                }
            }
        }
    }
    Ok(reps)
}

/// B1 ∩ B2, as the stabilizer of the trivial coset of B2 under left
/// multiplication by B1, with Schreier generators sifted into an IGS.
///
/// Exact and table-free: only canonical coset representatives of the
/// larger subgroup are enumerated, so the cost is bounded by the smaller
/// of |B1 : B1 ∩ B2| and |B2 : B1 ∩ B2|.
pub fn intersection(b1: &Subgroup, b2: &Subgroup) -> Subgroup {
    assert!(
        std::sync::Arc::ptr_eq(b1.group(), b2.group()),
        "intersection requires a common ambient group"
    );
    // Act with the smaller subgroup on the cosets of the larger one.
    let (actor, base) = if b1.order_exponent() <= b2.order_exponent() {
        (b1, b2)
    } else {
        (b2, b1)
    };
    let g = actor.group();
    let seed = base.left_coset_canonical(&g.identity());
    let mut transversal: HashMap<Element, Element> = HashMap::new();
    transversal.insert(seed.clone(), g.identity());
    let mut queue = VecDeque::new();
    queue.push_back(seed);
    let mut schreier: Vec<Element> = Vec::new();
    while let Some(pt) = queue.pop_front() {
        let t_pt = transversal[&pt].clone();
        for w in actor.igs() {
            let moved = g.multiply(w, &t_pt);
            let next = base.left_coset_canonical(&moved);
            match transversal.get(&next) {
                None => {
                    transversal.insert(next.clone(), moved);
                    queue.push_back(next);
                }
                Some(t_next) => {
                    // t_next^-1 * w * t_pt stabilizes the trivial coset.
                    let s = g.multiply(&g.inverse(t_next), &moved);
                    if !s.is_identity() {
                        schreier.push(s);
                    }
                }
            }
        }
    }
    Subgroup::from_generators(g, &schreier)
}
