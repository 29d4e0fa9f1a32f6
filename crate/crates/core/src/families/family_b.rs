use std::collections::BTreeMap;

use crate::characters::LinearCharacter;
use crate::error::{Error, Result};
use crate::families::cubic::cubic_value_set;
use crate::families::{FamilyInstance, FamilyKind};
use crate::induction::{MonomialDescriptor, StrategyHint};
use crate::pcgroup::{PcGroup, PcPresentation, Subgroup, Word};

/// Polynomials of degree < 4 over F_p, multiplied modulo x^4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Poly4 {
    pub c: [u64; 4],
}

impl Poly4 {
    pub fn new(c: [u64; 4], p: u64) -> Self {
        Poly4 {
            c: [c[0] % p, c[1] % p, c[2] % p, c[3] % p],
        }
    }

    pub fn mul(&self, other: &Poly4, p: u64) -> Poly4 {
        let mut out = [0u64; 4];
        for i in 0..4 {
            for j in 0..4 - i {
                out[i + j] = (out[i + j] + self.c[i] * other.c[j]) % p;
            }
        }
        Poly4 { c: out }
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn pow(&self, mut e: u64, p: u64) -> Poly4 {
        let mut result = Poly4::new([1, 0, 0, 0], p);
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, p);
            }
            base = base.mul(&base, p);
            e >>= 1;
        }
        result
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The order-p^6 group M ⋊ U built from the truncated polynomial algebra
/// F_p[x]/(x^4): M is elementary abelian on m(1), m(x), m(x^2), m(x^3),
/// U = <1+x, 1+x^2> is elementary abelian of order p^2 acting by
/// m(y)^u = m(yu). Requires p > 5 with 3 | p - 1.
///
/// Generators: g1 = 1+x, g2 = 1+x^2, g3..g6 = m(1), m(x), m(x^2), m(x^3).
/// H = <m(1), m(x), m(x^3)> has index p^3 and carries
/// lambda(m(a0 + a1 x + a3 x^3)) = omega^{r a0 + r a1 + a3} for the
/// residue r with 3r = -1 mod p. The predicted constituents are the
/// mu_{e,0,0}-orbit representatives taken inside the fiber over M:
/// multiplicity 1 for the class of e = r and 3 for each class
/// e = r(1 - i^3), i nonzero.
pub fn family_b(p: u64) -> Result<FamilyInstance> {
    if !is_prime(p) || p <= 5 || !(p - 1).is_multiple_of(3) {
        return Err(Error::Hypothesis(format!(
            "p = {p} must be a prime > 5 with 3 | p - 1"
        )));
    }
    // Conjugation relations m_k^{u} = m(x^k * u) computed in the algebra.
    let u_polys = [
        Poly4::new([1, 1, 0, 0], p), // 1 + x
        Poly4::new([1, 0, 1, 0], p), // 1 + x^2
    ];
    let mut conjugates: Vec<(usize, usize, Word)> = Vec::new();
    for (ui, u) in u_polys.iter().enumerate() {
        for k in 0..4usize {
            let mut xk = [0u64; 4];
            xk[k] = 1;
            let image = Poly4::new(xk, p).mul(u, p);
            let word: Word = image
                .c
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| (2 + j, e as u16))
                .collect();
            conjugates.push((ui, 2 + k, word));
        }
    }
    let pres = PcPresentation::new(p as u16, 6, vec![], conjugates)?;
    let group = PcGroup::new(pres)?;

    let m_gens: Vec<_> = (2..6).map(|i| group.generator(i)).collect();
    let m_sub = Subgroup::from_generators(&group, &m_gens);
    let u_sub = Subgroup::from_generators(&group, &[group.generator(0), group.generator(1)]);
    let z_sub = Subgroup::from_generators(&group, &[group.generator(5)]);
    let h = Subgroup::from_generators(
        &group,
        &[group.generator(2), group.generator(3), group.generator(5)],
    );
    let full = Subgroup::full(&group);

    let r = (1..p)
        .find(|&r| (3 * r) % p == p - 1)
        .expect("3 is invertible mod p");
    let lambda = LinearCharacter::make_linear(&h, vec![r, r, 1], p)?;

    // mu_{f0, f1, f2} on M: exponents (f0, f1, f2, 1).
    let mu = |f0: u64, f1: u64, f2: u64| {
        LinearCharacter::make_linear(&m_sub, vec![f0 % p, f1 % p, f2 % p, 1], p)
    };
    // Predicted constituents: representatives of the fiber classes
    // {mu_{r,r,i} : r(1 - i^3) = e} for e in the cubic value set, taken as
    // the lexicographically least member (smallest i in the class).
    let e_set = cubic_value_set(r, p)?;
    let mut predicted: Vec<(MonomialDescriptor, u64)> = Vec::new();
    for &e in &e_set {
        if e == r {
            // i = 0: the extension mu_{r,r,0} itself.
            predicted.push((MonomialDescriptor::new(full.clone(), mu(r, r, 0)?)?, 1));
        } else {
            let i_min = (1..p)
                .find(|&i| {
                    let cube = i * i % p * i % p;
                    r * ((p + 1 - cube) % p) % p == e
                })
                .expect("e lies in the cubic value set");
            predicted.push((MonomialDescriptor::new(full.clone(), mu(r, r, i_min)?)?, 3));
        }
    }

    // Chain: H < M < M<u1> < G, each step has index p and is normal in
    // the next (M is normal in G; index-p subgroups of p-groups are
    // maximal, hence normal).
    let mut mu1_gens = m_gens.clone();
    mu1_gens.push(group.generator(0));
    let m_u1 = Subgroup::from_generators(&group, &mu1_gens);

    let mut named = BTreeMap::new();
    named.insert("M", m_sub.clone());
    named.insert("U", u_sub);
    named.insert("Z", z_sub);
    let mut acting = BTreeMap::new();
    acting.insert("u1", group.generator(0));
    acting.insert("u2", group.generator(1));
    acting.insert("m0", group.generator(2));
    acting.insert("m1", group.generator(3));
    acting.insert("m2", group.generator(4));
    acting.insert("m3", group.generator(5));

    Ok(FamilyInstance {
        kind: FamilyKind::B { r },
        chain: vec![h.clone(), m_sub.clone(), m_u1, full],
        group,
        h,
        lambda,
        named,
        acting,
        predicted_eta: p.div_ceil(3),
        predicted,
        hint: StrategyHint::AbelianOvergroup(m_sub),
        base: None,
    })
}
