use std::fmt;
use std::sync::Arc;

use crate::characters::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::pcgroup::{conjugate_subgroup, Element, PcGroup, Subgroup};

/// A degree-1 character of a subgroup, stored as exponents of a fixed
/// primitive root of unity zeta of order `value_order` on the IGS
/// generators of the domain. Values at arbitrary members are obtained by
/// sifting into IGS coordinates first.
#[derive(Clone)]
pub struct LinearCharacter {
    domain: Subgroup,
    value_order: u64,
    exps: Vec<u64>,
}

impl PartialEq for LinearCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.value_order == other.value_order
            && self.exps == other.exps
    }
}

impl Eq for LinearCharacter {}

impl fmt::Debug for LinearCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Char(zeta_{}; ", self.value_order)?;
        for (i, (w, e)) in self.domain.igs().iter().zip(&self.exps).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w} -> {e}")?;
        }
        write!(f, ")")
    }
}

fn is_p_power(mut m: u64, p: u64) -> bool {
    if m == 0 {
        return false;
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

impl LinearCharacter {
    /// Validated construction: `exps[i]` is the zeta-exponent assigned to
    /// the i-th IGS generator of `domain`. Fails with the violated
    /// relation when the assignment is not a homomorphism.
    pub fn make_linear(domain: &Subgroup, exps: Vec<u64>, value_order: u64) -> Result<Self> {
        let p = domain.group().prime() as u64;
        if !is_p_power(value_order, p) {
            return Err(Error::NotAHomomorphism(format!(
                "value order {value_order} is not a power of p = {p}"
            )));
        }
        if exps.len() != domain.igs().len() {
            return Err(Error::NotAHomomorphism(format!(
                "{} assignments for an IGS of length {}",
                exps.len(),
                domain.igs().len()
            )));
        }
        let chi = LinearCharacter {
            domain: domain.clone(),
            value_order,
            exps: exps.into_iter().map(|e| e % value_order).collect(),
        };
        chi.validate()?;
        Ok(chi)
    }

    /// Checks the defining relations of the domain's polycyclic sequence:
    /// every p-th power and every conjugate of IGS members must map to the
    /// value its sifted coordinates dictate.
    fn validate(&self) -> Result<()> {
        let g = self.domain.group();
        let p = g.prime() as u64;
        let igs = self.domain.igs();
        for (i, w) in igs.iter().enumerate() {
            let wp = g.power(w, p);
            let val = self.eval(&wp).ok_or_else(|| {
                Error::NotAHomomorphism(format!("power {w}^{p} failed to sift"))
            })?;
            if (self.exps[i] * p) % self.value_order != val {
                return Err(Error::NotAHomomorphism(format!(
                    "power relation violated at IGS member {} ({}): p*{} != value {} of {}^p",
                    i + 1,
                    w,
                    self.exps[i],
                    val,
                    w
                )));
            }
            for (j, u) in igs.iter().enumerate() {
                if i == j {
                    continue;
                }
                let conj = g.conjugate(u, w);
                let val = self.eval(&conj).ok_or_else(|| {
                    Error::NotAHomomorphism(format!("conjugate {u}^{w} failed to sift"))
                })?;
                if val != self.exps[j] {
                    return Err(Error::NotAHomomorphism(format!(
                        "conjugate relation violated: value {} of {}^{} != value {} of {}",
                        val,
                        u,
                        w,
                        self.exps[j],
                        u
                    )));
                }
            }
        }
        Ok(())
    }

    /// Construction for callers that have already established the
    /// homomorphism property against the domain's relation lattice
    /// (the enumeration in `lin_all` checks every relation row).
    pub(crate) fn from_verified_parts(
        domain: &Subgroup,
        exps: Vec<u64>,
        value_order: u64,
    ) -> Self {
        LinearCharacter {
            domain: domain.clone(),
            value_order,
            exps,
        }
    }

    /// The principal character 1_B.
    pub fn principal(domain: &Subgroup) -> Self {
        let p = domain.group().prime() as u64;
        LinearCharacter {
            value_order: p,
            exps: vec![0; domain.igs().len()],
            domain: domain.clone(),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn value_order(&self) -> u64 {
        self.value_order
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn group(&self) -> &Arc<PcGroup> {
        self.domain.group()
    }

    /// zeta-exponent of the value at x, or None when x is outside the domain.
    pub fn eval(&self, x: &Element) -> Option<u64> {
        let coords = self.domain.sift_coords(x)?;
        let mut acc: u64 = 0;
        for (c, e) in coords.iter().zip(&self.exps) {
            acc = (acc + (*c as u64) * e) % self.value_order;
        }
        Some(acc)
    }

    pub fn eval_cyclotomic(&self, x: &Element, order: u64) -> Option<Cyclotomic> {
        let e = self.eval(x)?;
        debug_assert_eq!(order % self.value_order, 0);
        Some(Cyclotomic::root_power(order, e * (order / self.value_order)))
    }

    /// The conjugate character x -> chi(g x g^{-1}), whose domain is
    /// g^{-1} (domain) g. Conjugation is a right action:
    /// (chi^g)^h = chi^{gh}.
    pub fn conjugate(&self, g_elem: &Element) -> LinearCharacter {
        let g = self.domain.group();
        let new_domain = conjugate_subgroup(&self.domain, g_elem);
        let g_inv = g.inverse(g_elem);
        let exps = new_domain
            .igs()
            .iter()
            .map(|w| {
                let back = g.multiply(&g.multiply(g_elem, w), &g_inv);
                self.eval(&back)
                    .expect("conjugated IGS member must map back into the domain")
            })
            .collect();
        LinearCharacter {
            domain: new_domain,
            value_order: self.value_order,
            exps,
        }
    }

    /// Conjugation fast path for a domain known to be normalized by
    /// `g_elem`: the domain object is reused instead of being rebuilt.
    pub(crate) fn conjugate_on_normal_domain(&self, g_elem: &Element) -> LinearCharacter {
        let g = self.domain.group();
        let g_inv = g.inverse(g_elem);
        let exps = self
            .domain
            .igs()
            .iter()
            .map(|w| {
                let moved = g.multiply(&g.multiply(g_elem, w), &g_inv);
                self.eval(&moved)
                    .expect("conjugation must preserve a normalized domain")
            })
            .collect();
        LinearCharacter {
            domain: self.domain.clone(),
            value_order: self.value_order,
            exps,
        }
    }

    /// Restriction to a subgroup D of the domain.
    pub fn restrict(&self, d: &Subgroup) -> Result<LinearCharacter> {
        let exps = d
            .igs()
            .iter()
            .map(|w| self.eval(w).ok_or(Error::NotAMember))
            .collect::<Result<Vec<u64>>>()?;
        Ok(LinearCharacter {
            domain: d.clone(),
            value_order: self.value_order,
            exps,
        })
    }

    /// Value-equality with another character on the same domain, allowing
    /// different value orders (exponents are compared after rescaling to
    /// the common order).
    pub fn same_values(&self, other: &LinearCharacter) -> bool {
        if self.domain != other.domain {
            return false;
        }
        let l = lcm(self.value_order, other.value_order);
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a * (l / self.value_order) == b * (l / other.value_order))
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}
