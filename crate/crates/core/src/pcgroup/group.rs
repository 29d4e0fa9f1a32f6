use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pcgroup::presentation::{PcPresentation, Word};

/// A group element in normal form: the exponent vector of
/// g1^{e1} ... gn^{en} with entries in [0, p).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    exps: Vec<u16>,
}

impl Element {
    pub(crate) fn from_exps(exps: Vec<u16>) -> Self {
        Element { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index (0-based) of the first nonzero exponent, or None for the identity.
    pub fn depth(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e != 0)
    }

    /// Word syntax: `g1^2 g3` etc.; `id` for the identity.
    pub fn to_word_string(&self) -> String {
        if self.is_identity() {
            return "id".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 1 {
                parts.push(format!("g{}", i + 1));
            } else if e > 1 {
                parts.push(format!("g{}^{}", i + 1, e));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word_string())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word_string())
    }
}

/// A finite p-group defined by a consistent pc presentation.
///
/// Construction runs the full consistency test; an inconsistent
/// presentation is rejected, never repaired.
pub struct PcGroup {
    pres: PcPresentation,
}

impl fmt::Debug for PcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PcGroup(p={}, ngens={})",
            self.pres.prime(),
            self.pres.ngens()
        )
    }
}

impl PcGroup {
    /// Validates consistency and wraps the presentation. The returned group
    /// is reference-counted so subgroups can share it.
    pub fn new(pres: PcPresentation) -> Result<Arc<PcGroup>> {
        let g = PcGroup { pres };
        g.consistency_check()?;
        Ok(Arc::new(g))
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn prime(&self) -> u16 {
        self.pres.prime()
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens()
    }

    /// |G| = p^n as a u128. Errors when the order overflows.
    pub fn order(&self) -> Result<u128> {
        checked_p_pow(self.prime(), self.ngens() as u32)
    }

    pub fn identity(&self) -> Element {
        Element::from_exps(vec![0; self.ngens()])
    }

    pub fn generator(&self, i: usize) -> Element {
        assert!(i < self.ngens());
        let mut exps = vec![0; self.ngens()];
        exps[i] = 1;
        Element::from_exps(exps)
    }

    /// Element with a single generator raised to e (reduced mod p).
    pub fn generator_power(&self, i: usize, e: u16) -> Element {
        let mut exps = vec![0; self.ngens()];
        exps[i] = e % self.prime();
        Element::from_exps(exps)
    }

    pub fn element_from_exps(&self, exps: &[u16]) -> Result<Element> {
        if exps.len() != self.ngens() {
            return Err(Error::Mismatch(format!(
                "exponent vector length {} != ngens {}",
                exps.len(),
                self.ngens()
            )));
        }
        let p = self.prime();
        Ok(Element::from_exps(exps.iter().map(|&e| e % p).collect()))
    }

    /// The unique normal form of x*y, by collection from the left.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        debug_assert_eq!(x.exps.len(), self.ngens());
        debug_assert_eq!(y.exps.len(), self.ngens());
        let mut acc = x.exps.clone();
        let mut stack: Vec<(u16, u16)> = Vec::with_capacity(16);
        for i in (0..y.exps.len()).rev() {
            if y.exps[i] != 0 {
                stack.push((i as u16, y.exps[i]));
            }
        }
        self.collect(&mut acc, &mut stack);
        Element::from_exps(acc)
    }

    /// Collection from the left with a work stack. The stack holds the
    /// uncollected right part as single letters (generator, exponent),
    /// top of stack = leftmost letter.
    fn collect(&self, acc: &mut [u16], stack: &mut Vec<(u16, u16)>) {
        let p = self.prime();
        let n = self.ngens();
        let mut tail: Vec<(usize, u16)> = Vec::with_capacity(8);
        while let Some((g, e)) = stack.pop() {
            let gi = g as usize;
            debug_assert!(e >= 1 && e < p);
            if acc[gi + 1..].iter().all(|&v| v == 0) {
                // Direct merge into the collected prefix.
                let t = acc[gi] + e;
                acc[gi] = t % p;
                if t >= p {
                    push_word_reversed(stack, self.pres.power_word(gi));
                }
            } else {
                // Move a single g past the deeper tail of the prefix:
                //   acc * g^e = pre . g^{a_g+1} . tail^g . g^{e-1}
                if e > 1 {
                    stack.push((g, e - 1));
                }
                tail.clear();
                for h in gi + 1..n {
                    if acc[h] != 0 {
                        tail.push((h, acc[h]));
                        acc[h] = 0;
                    }
                }
                let t = acc[gi] + 1;
                acc[gi] = t % p;
                let carry = t >= p;
                // Push tail^g in reverse so it pops left-to-right.
                for &(h, f) in tail.iter().rev() {
                    match self.pres.conjugate_word(gi, h) {
                        None => stack.push((h as u16, f)),
                        Some(w) => {
                            // (g_h^f)^g = (g_h^g)^f: the conjugate word repeated f times.
                            for _ in 0..f {
                                push_word_reversed(stack, w);
                            }
                        }
                    }
                }
                if carry {
                    push_word_reversed(stack, self.pres.power_word(gi));
                }
            }
        }
    }

    /// x^{-1}, by peeling leading exponents.
    pub fn inverse(&self, x: &Element) -> Element {
        let p = self.prime();
        let mut cur = x.clone();
        let mut inv = self.identity();
        for d in 0..self.ngens() {
            let c = cur.exps[d];
            if c != 0 {
                let f = self.generator_power(d, p - c);
                cur = self.multiply(&cur, &f);
                inv = self.multiply(&inv, &f);
            }
            debug_assert_eq!(cur.exps[d], 0);
        }
        debug_assert!(cur.is_identity());
        inv
    }

    /// x^k for k >= 0, by binary exponentiation.
    pub fn power(&self, x: &Element, k: u64) -> Element {
        let mut result = self.identity();
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.multiply(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(&base, &base);
            }
        }
        result
    }

    /// x^k for any integer k.
    pub fn power_signed(&self, x: &Element, k: i64) -> Element {
        if k >= 0 {
            self.power(x, k as u64)
        } else {
            self.power(&self.inverse(x), (-k) as u64)
        }
    }

    /// x^g = g^{-1} x g.
    pub fn conjugate(&self, x: &Element, g: &Element) -> Element {
        let gi = self.inverse(g);
        self.multiply(&self.multiply(&gi, x), g)
    }

    /// [x, y] = x^{-1} y^{-1} x y.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        let xi = self.inverse(x);
        let yi = self.inverse(y);
        self.multiply(&self.multiply(&xi, &yi), &self.multiply(x, y))
    }

    /// Order of x as (exponent j such that |x| = p^j).
    pub fn element_order_exponent(&self, x: &Element) -> u32 {
        let mut cur = x.clone();
        let mut j = 0;
        while !cur.is_identity() {
            cur = self.power(&cur, self.prime() as u64);
            j += 1;
        }
        j
    }

    fn word_element(&self, w: &Word) -> Element {
        let mut exps = vec![0; self.ngens()];
        for &(g, e) in w {
            exps[g] = e;
        }
        Element::from_exps(exps)
    }

    /// Runs the standard consistency test words and reports the first
    /// failing overlap. Success certifies |G| = p^n.
    pub fn consistency_check(&self) -> Result<()> {
        let n = self.ngens();
        let p = self.prime();
        // Associativity overlaps g_k (g_j g_i) = (g_k g_j) g_i for k > j > i.
        for i in 0..n {
            let gi = self.generator(i);
            for j in i + 1..n {
                let gj = self.generator(j);
                for k in j + 1..n {
                    let gk = self.generator(k);
                    let lhs = self.multiply(&gk, &self.multiply(&gj, &gi));
                    let rhs = self.multiply(&self.multiply(&gk, &gj), &gi);
                    if lhs != rhs {
                        return Err(Error::Inconsistent {
                            overlap: format!("g{}*(g{}*g{}) vs (g{}*g{})*g{}",
                                k + 1, j + 1, i + 1, k + 1, j + 1, i + 1),
                            lhs: lhs.to_word_string(),
                            rhs: rhs.to_word_string(),
                        });
                    }
                }
            }
        }
        // Power overlaps.
        for i in 0..n {
            let gi = self.generator(i);
            let pi = self.word_element(self.pres.power_word(i));
            // g_i (g_i^p) = (g_i^p) g_i
            let lhs = self.multiply(&gi, &pi);
            let rhs = self.multiply(&pi, &gi);
            if lhs != rhs {
                return Err(Error::Inconsistent {
                    overlap: format!("g{}*(g{}^p) vs (g{}^p)*g{}", i + 1, i + 1, i + 1, i + 1),
                    lhs: lhs.to_word_string(),
                    rhs: rhs.to_word_string(),
                });
            }
            for j in i + 1..n {
                let gj = self.generator(j);
                let pj = self.word_element(self.pres.power_word(j));
                // (g_j^p) g_i = g_j^{p-1} (g_j g_i)
                let lhs = self.multiply(&pj, &gi);
                let rhs = self.multiply(
                    &self.generator_power(j, p - 1),
                    &self.multiply(&gj, &gi),
                );
                if lhs != rhs {
                    return Err(Error::Inconsistent {
                        overlap: format!("(g{}^p)*g{} vs g{}^(p-1)*(g{}*g{})",
                            j + 1, i + 1, j + 1, j + 1, i + 1),
                        lhs: lhs.to_word_string(),
                        rhs: rhs.to_word_string(),
                    });
                }
                // g_j (g_i^p) = (g_j g_i) g_i^{p-1}
                let lhs = self.multiply(&gj, &pi);
                let rhs = self.multiply(
                    &self.multiply(&gj, &gi),
                    &self.generator_power(i, p - 1),
                );
                if lhs != rhs {
                    return Err(Error::Inconsistent {
                        overlap: format!("g{}*(g{}^p) vs (g{}*g{})*g{}^(p-1)",
                            j + 1, i + 1, j + 1, i + 1, i + 1),
                        lhs: lhs.to_word_string(),
                        rhs: rhs.to_word_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn push_word_reversed(stack: &mut Vec<(u16, u16)>, w: &Word) {
    for &(g, e) in w.iter().rev() {
        stack.push((g as u16, e));
    }
}

pub(crate) fn checked_p_pow(p: u16, k: u32) -> Result<u128> {
    (p as u128).checked_pow(k).ok_or(Error::SizeGuard {
        op: "order",
        bound: u128::MAX,
        actual: u128::MAX,
    })
}

/// Multiplicative inverse of e mod p for prime p, e in [1, p).
pub(crate) fn mod_inverse(e: u16, p: u16) -> u16 {
    // Fermat: e^(p-2) mod p.
    let mut result = 1u32;
    let mut base = e as u32;
    let mut k = p as u32 - 2;
    let m = p as u32;
    while k > 0 {
        if k & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        k >>= 1;
    }
    result as u16
}
