use std::fmt;

/// An element of Z[zeta_m] for m = p^e, in the canonical integral power
/// basis 1, zeta, ..., zeta^{phi(m)-1} after reduction modulo the m-th
/// cyclotomic polynomial. Equality of coefficient vectors is equality of
/// values, and the rational-integer predicate reads off the basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u64,
    /// phi(m) = m - m/p coefficients.
    coeffs: Vec<i128>,
}

fn phi_of_prime_power(m: u64) -> usize {
    // Smallest prime factor of m (m is a prime power).
    let mut p = 2;
    while !m.is_multiple_of(p) {
        p += 1;
    }
    (m - m / p) as usize
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![0; phi_of_prime_power(order)],
        }
    }

    pub fn one(order: u64) -> Self {
        Cyclotomic::from_integer(order, 1)
    }

    pub fn from_integer(order: u64, n: i128) -> Self {
        let mut c = Cyclotomic::zero(order);
        c.coeffs[0] = n;
        c
    }

    /// zeta^k.
    pub fn root_power(order: u64, k: u64) -> Self {
        let mut dense = vec![0i128; order as usize];
        dense[(k % order) as usize] = 1;
        Cyclotomic::reduce(order, dense)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Reduces a dense coefficient vector over exponents [0, m) modulo the
    /// cyclotomic polynomial Phi_m(x) = sum_{t<p} x^{t*m/p}.
    fn reduce(order: u64, mut dense: Vec<i128>) -> Self {
        let phi = phi_of_prime_power(order);
        let q = order as usize - phi; // m/p
        let m = order as usize;
        debug_assert_eq!(dense.len(), m);
        // x^deg -> -(sum_{t<p-1} x^{deg-phi+t*q}) for deg >= phi.
        for deg in (phi..m).rev() {
            let c = dense[deg];
            if c == 0 {
                continue;
            }
            dense[deg] = 0;
            let base = deg - phi;
            let mut pos = base;
            while pos < deg {
                dense[pos] -= c;
                pos += q;
            }
        }
        dense.truncate(phi);
        Cyclotomic {
            order,
            coeffs: dense,
        }
    }

    pub fn add_assign(&mut self, other: &Cyclotomic) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.order, other.order);
        let m = self.order as usize;
        let mut dense = vec![0i128; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                dense[(i + j) % m] += a * b;
            }
        }
        Cyclotomic::reduce(self.order, dense)
    }

    /// Complex conjugation: zeta -> zeta^{-1}.
    pub fn conjugate(&self) -> Cyclotomic {
        let m = self.order as usize;
        let mut dense = vec![0i128; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            dense[(m - i) % m] += a;
        }
        Cyclotomic::reduce(self.order, dense)
    }

    /// Some(n) when the value is the rational integer n.
    pub fn as_integer(&self) -> Option<i128> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc{}{:?}", self.order, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_all_pth_roots_vanishes() {
        for p in [3u64, 5, 7] {
            let mut acc = Cyclotomic::zero(p);
            for k in 0..p {
                acc.add_assign(&Cyclotomic::root_power(p, k));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn root_powers_multiply_additively() {
        let m = 9;
        for i in 0..m {
            for j in 0..m {
                let prod = Cyclotomic::root_power(m, i).mul(&Cyclotomic::root_power(m, j));
                assert_eq!(prod, Cyclotomic::root_power(m, (i + j) % m));
            }
        }
    }

    #[test]
    fn conjugation_inverts_roots() {
        for k in 0..9 {
            let z = Cyclotomic::root_power(9, k);
            assert_eq!(z.conjugate(), Cyclotomic::root_power(9, (9 - k) % 9));
            // z * conj(z) = 1.
            assert_eq!(z.mul(&z.conjugate()), Cyclotomic::one(9));
        }
    }

    #[test]
    fn integer_predicate() {
        assert_eq!(Cyclotomic::from_integer(7, 5).as_integer(), Some(5));
        assert_eq!(Cyclotomic::root_power(7, 3).as_integer(), None);
        // zeta^0 + zeta^1 + ... + zeta^6 = 0, an integer.
        let mut acc = Cyclotomic::zero(7);
        for k in 0..7 {
            acc.add_assign(&Cyclotomic::root_power(7, k));
        }
        assert_eq!(acc.as_integer(), Some(0));
    }
}
