use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::pcgroup::group::{checked_p_pow, mod_inverse, Element, PcGroup};

/// A subgroup given by an induced generating sequence (IGS): elements of
/// strictly increasing leading depth, leading exponent 1, fully reduced
/// (zero exponents at the other members' leading depths). The reduced
/// IGS is canonical: equal subgroups have equal IGS vectors.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<PcGroup>,
    igs: Vec<Element>,
    depths: Vec<usize>,
    /// powers[i][k] = igs[i]^k for k in [0, p); powers_inv[i][k] = igs[i]^-k.
    /// Shared so clones stay cheap.
    powers: Arc<Vec<Vec<Element>>>,
    powers_inv: Arc<Vec<Vec<Element>>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup[")?;
        for (i, w) in self.igs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.igs == other.igs
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup generated by `gens`, as a canonical IGS.
    ///
    /// Sifts the generators into echelon form, closes under p-th powers
    /// and commutators, then reduces. Idempotent: running it on an IGS
    /// returns the same IGS.
    pub fn from_generators(group: &Arc<PcGroup>, gens: &[Element]) -> Subgroup {
        let n = group.ngens();
        let p = group.prime();
        let mut slots: Vec<Option<(Element, Element)>> = vec![None; n]; // (w, w^-1)
        let mut queue: VecDeque<Element> = gens.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            let mut cur = x;
            loop {
                let d = match cur.depth() {
                    None => break,
                    Some(d) => d,
                };
                match &slots[d] {
                    Some((_, w_inv)) => {
                        let e = cur.exps()[d];
                        cur = group.multiply(&group.power(w_inv, e as u64), &cur);
                        debug_assert!(cur.depth().is_none_or(|nd| nd > d));
                    }
                    None => {
                        let e = cur.exps()[d];
                        let v = group.power(&cur, mod_inverse(e, p) as u64);
                        debug_assert_eq!(v.exps()[d], 1);
                        queue.push_back(group.power(&v, p as u64));
                        for s in slots.iter().flatten() {
                            queue.push_back(group.commutator(&v, &s.0));
                        }
                        let v_inv = group.inverse(&v);
                        slots[d] = Some((v, v_inv));
                        break;
                    }
                }
            }
        }
        let mut igs: Vec<Element> = slots.into_iter().flatten().map(|(w, _)| w).collect();
        let depths: Vec<usize> = igs.iter().map(|w| w.depth().unwrap()).collect();
        // Reduction pass: zero each member's exponents at deeper leading depths.
        let m = igs.len();
        for i in 0..m {
            for j in i + 1..m {
                let e = igs[i].exps()[depths[j]];
                if e != 0 {
                    let wj_inv = group.inverse(&igs[j]);
                    igs[i] = group.multiply(&igs[i], &group.power(&wj_inv, e as u64));
                }
                debug_assert_eq!(igs[i].exps()[depths[j]], 0);
            }
        }
        Subgroup::from_canonical_igs(group, igs)
    }

    fn from_canonical_igs(group: &Arc<PcGroup>, igs: Vec<Element>) -> Subgroup {
        let p = group.prime();
        let depths = igs.iter().map(|w| w.depth().unwrap()).collect();
        let mut powers = Vec::with_capacity(igs.len());
        let mut powers_inv = Vec::with_capacity(igs.len());
        for w in &igs {
            let mut pw = Vec::with_capacity(p as usize);
            let mut pwi = Vec::with_capacity(p as usize);
            let w_inv = group.inverse(w);
            let mut acc = group.identity();
            let mut acci = group.identity();
            for _ in 0..p {
                pw.push(acc.clone());
                pwi.push(acci.clone());
                acc = group.multiply(&acc, w);
                acci = group.multiply(&acci, &w_inv);
            }
            powers.push(pw);
            powers_inv.push(pwi);
        }
        Subgroup {
            group: group.clone(),
            igs,
            depths,
            powers: Arc::new(powers),
            powers_inv: Arc::new(powers_inv),
        }
    }

    /// The whole group as a subgroup.
    pub fn full(group: &Arc<PcGroup>) -> Subgroup {
        let gens: Vec<Element> = (0..group.ngens()).map(|i| group.generator(i)).collect();
        Subgroup::from_generators(group, &gens)
    }

    pub fn trivial(group: &Arc<PcGroup>) -> Subgroup {
        Subgroup::from_canonical_igs(group, Vec::new())
    }

    pub fn group(&self) -> &Arc<PcGroup> {
        &self.group
    }

    pub fn igs(&self) -> &[Element] {
        &self.igs
    }

    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    /// log_p |B|.
    pub fn order_exponent(&self) -> usize {
        self.igs.len()
    }

    pub fn order(&self) -> Result<u128> {
        checked_p_pow(self.group.prime(), self.igs.len() as u32)
    }

    /// log_p |G : B|.
    pub fn index_exponent(&self) -> usize {
        self.group.ngens() - self.igs.len()
    }

    pub fn index(&self) -> Result<u128> {
        checked_p_pow(self.group.prime(), self.index_exponent() as u32)
    }

    pub fn is_full(&self) -> bool {
        self.igs.len() == self.group.ngens()
    }

    pub fn is_trivial(&self) -> bool {
        self.igs.is_empty()
    }

    /// Canonical representative of the left coset x*B: the unique member
    /// with zero exponents at all IGS leading depths.
    pub fn left_coset_canonical(&self, x: &Element) -> Element {
        let p = self.group.prime();
        let mut cur = x.clone();
        for (i, &d) in self.depths.iter().enumerate() {
            let e = cur.exps()[d];
            if e != 0 {
                cur = self.group.multiply(&cur, &self.powers[i][(p - e) as usize]);
            }
            debug_assert_eq!(cur.exps()[d], 0);
        }
        cur
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.left_coset_canonical(x).is_identity()
    }

    /// Coefficients (a_1..a_m) with x = w_1^{a_1} ... w_m^{a_m}, or None
    /// when x is not a member.
    pub fn sift_coords(&self, x: &Element) -> Option<Vec<u16>> {
        let mut cur = x.clone();
        let mut coords = Vec::with_capacity(self.igs.len());
        for (i, &d) in self.depths.iter().enumerate() {
            let e = cur.exps()[d];
            coords.push(e);
            if e != 0 {
                cur = self.group.multiply(&self.powers_inv[i][e as usize], &cur);
            }
        }
        if cur.is_identity() {
            Some(coords)
        } else {
            None
        }
    }

    /// Iterates all |B| elements in lexicographic coefficient order.
    /// The caller is responsible for keeping |B| desk-scale.
    pub fn elements(&self) -> SubgroupElements<'_> {
        SubgroupElements {
            sub: self,
            odometer: vec![0; self.igs.len()],
            prefixes: vec![self.group.identity(); self.igs.len() + 1],
            dirty: 0,
            done: false,
        }
    }

    /// All left-coset canonical representatives (the transversal of the
    /// left coset space G/B), in lexicographic order of free exponents.
    pub(crate) fn left_transversal_full(&self) -> Vec<Element> {
        let n = self.group.ngens();
        let p = self.group.prime();
        let free: Vec<usize> = (0..n).filter(|d| !self.depths.contains(d)).collect();
        let mut out = Vec::new();
        let mut exps = vec![0u16; n];
        loop {
            out.push(Element::from_exps(exps.clone()));
            // Increment the mixed-radix counter over free positions.
            let mut i = free.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                let d = free[i];
                exps[d] += 1;
                if exps[d] < p {
                    break;
                }
                exps[d] = 0;
            }
        }
    }
}

pub struct SubgroupElements<'a> {
    sub: &'a Subgroup,
    odometer: Vec<u16>,
    /// prefixes[i] = product of igs[0..i] raised to the current odometer;
    /// entries at index > dirty are stale.
    prefixes: Vec<Element>,
    dirty: usize,
    done: bool,
}

impl<'a> Iterator for SubgroupElements<'a> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.done {
            return None;
        }
        let m = self.sub.igs.len();
        for i in self.dirty..m {
            self.prefixes[i + 1] = self.sub.group.multiply(
                &self.prefixes[i],
                &self.sub.powers[i][self.odometer[i] as usize],
            );
        }
        let result = self.prefixes[m].clone();
        // Advance the mixed-radix counter; remember the lowest changed slot.
        let p = self.sub.group.prime();
        let mut i = m;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.odometer[i] += 1;
            if self.odometer[i] < p {
                self.dirty = i;
                break;
            }
            self.odometer[i] = 0;
        }
        Some(result)
    }
}
