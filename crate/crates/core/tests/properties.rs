//! Property-based invariants of the group engine and the character
//! action, over the order-81 test group.

use proptest::prelude::*;

use pchar_core::characters::{lin_all, LinearCharacter};
use pchar_core::families::family_a;
use pchar_core::pcgroup::{conjugate_subgroup, intersection, Element, Subgroup};
use pchar_core::Limits;

fn exps_strategy() -> impl Strategy<Value = Vec<u16>> {
    proptest::collection::vec(0u16..3, 4)
}

fn elem(exps: &[u16]) -> (std::sync::Arc<pchar_core::PcGroup>, Element) {
    let inst = family_a(3).unwrap();
    let e = inst.group.element_from_exps(exps).unwrap();
    (inst.group, e)
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in exps_strategy(), b in exps_strategy(), c in exps_strategy()) {
        let (g, x) = elem(&a);
        let y = g.element_from_exps(&b).unwrap();
        let z = g.element_from_exps(&c).unwrap();
        prop_assert_eq!(
            g.multiply(&g.multiply(&x, &y), &z),
            g.multiply(&x, &g.multiply(&y, &z))
        );
    }

    #[test]
    fn inverses_cancel(a in exps_strategy()) {
        let (g, x) = elem(&a);
        prop_assert!(g.multiply(&x, &g.inverse(&x)).is_identity());
        prop_assert!(g.multiply(&g.inverse(&x), &x).is_identity());
    }

    #[test]
    fn element_orders_divide_group_order(a in exps_strategy()) {
        let (g, x) = elem(&a);
        let j = g.element_order_exponent(&x);
        prop_assert!(j <= 4);
        prop_assert!(g.power(&x, 3u64.pow(j)).is_identity());
    }

    #[test]
    fn conjugation_is_an_anti_distributed_action(a in exps_strategy(), b in exps_strategy(), c in exps_strategy()) {
        // (x^g)^h = x^{gh} for elements.
        let (g, x) = elem(&a);
        let u = g.element_from_exps(&b).unwrap();
        let v = g.element_from_exps(&c).unwrap();
        prop_assert_eq!(
            g.conjugate(&g.conjugate(&x, &u), &v),
            g.conjugate(&x, &g.multiply(&u, &v))
        );
    }

    #[test]
    fn coset_canonicalization_is_constant_on_cosets(a in exps_strategy(), b in exps_strategy(), h in exps_strategy()) {
        let (g, x) = elem(&a);
        let y = g.element_from_exps(&b).unwrap();
        let w = g.element_from_exps(&h).unwrap();
        let s = Subgroup::from_generators(&g, &[w]);
        // x and x*s are in the same left coset for any s in S.
        for member in s.elements() {
            let moved = g.multiply(&x, &member);
            prop_assert_eq!(s.left_coset_canonical(&moved), s.left_coset_canonical(&x));
        }
        // Distinct canonical forms imply distinct cosets.
        if s.left_coset_canonical(&x) != s.left_coset_canonical(&y) {
            let diff = g.multiply(&g.inverse(&x), &y);
            prop_assert!(!s.contains(&diff));
        }
    }

    #[test]
    fn subgroup_conjugation_respects_intersection(a in exps_strategy(), b in exps_strategy(), c in exps_strategy()) {
        let (g, x) = elem(&a);
        let y = g.element_from_exps(&b).unwrap();
        let t = g.element_from_exps(&c).unwrap();
        let s1 = Subgroup::from_generators(&g, &[x]);
        let s2 = Subgroup::from_generators(&g, &[y]);
        // (S1 ∩ S2)^t = S1^t ∩ S2^t.
        let lhs = conjugate_subgroup(&intersection(&s1, &s2), &t);
        let rhs = intersection(&conjugate_subgroup(&s1, &t), &conjugate_subgroup(&s2, &t));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn character_action_composes(r in 0u64..3, a in exps_strategy(), b in exps_strategy()) {
        let inst = family_a(3).unwrap();
        let g = inst.group.clone();
        let a_sub = inst.named.get("A").unwrap();
        let chi = LinearCharacter::make_linear(a_sub, vec![0, r, 1], 3).unwrap();
        let u = g.element_from_exps(&a).unwrap();
        let v = g.element_from_exps(&b).unwrap();
        prop_assert_eq!(
            chi.conjugate(&u).conjugate(&v),
            chi.conjugate(&g.multiply(&u, &v))
        );
    }

    #[test]
    fn characters_multiply_values(idx in 0usize..27, a in exps_strategy(), b in exps_strategy()) {
        let limits = Limits::default();
        let inst = family_a(3).unwrap();
        let g = inst.group.clone();
        let a_sub = inst.named.get("A").unwrap();
        let chars = lin_all(a_sub, &limits).unwrap();
        let chi = &chars[idx % chars.len()];
        let mut ax = a.clone();
        ax[0] = 0; // stay inside A
        let mut bx = b.clone();
        bx[0] = 0;
        let x = g.element_from_exps(&ax).unwrap();
        let y = g.element_from_exps(&bx).unwrap();
        let lhs = chi.eval(&g.multiply(&x, &y)).unwrap();
        let rhs = (chi.eval(&x).unwrap() + chi.eval(&y).unwrap()) % chi.value_order();
        prop_assert_eq!(lhs, rhs);
    }
}
