use std::collections::BTreeSet;

use crate::error::{Error, Result};

fn check_hypotheses(r: u64, p: u64) -> Result<()> {
    if p < 3 || !(p - 1).is_multiple_of(3) {
        return Err(Error::Hypothesis(format!(
            "p = {p} must be a prime with 3 | p - 1"
        )));
    }
    if r == 0 || r >= p {
        return Err(Error::Hypothesis(format!(
            "r = {r} must be a nonzero residue mod {p}"
        )));
    }
    Ok(())
}

/// The value set {r(1 - i^3) mod p : i = 0..p-1}, of size (p+2)/3 when
/// 3 divides p - 1.
pub fn cubic_value_set(r: u64, p: u64) -> Result<BTreeSet<u64>> {
    check_hypotheses(r, p)?;
    let mut out = BTreeSet::new();
    for i in 0..p {
        let cube = i * i % p * i % p;
        out.insert(r * ((p + 1 - cube) % p) % p);
    }
    debug_assert_eq!(out.len() as u64, p.div_ceil(3));
    Ok(out)
}

/// Number of solutions x in {1..p-1} of e = r(1 - x^3) mod p; exactly 3
/// for every e attained with i >= 1.
pub fn cubic_solution_count(e: u64, r: u64, p: u64) -> Result<u64> {
    check_hypotheses(r, p)?;
    let mut count = 0;
    for x in 1..p {
        let cube = x * x % p * x % p;
        if r * ((p + 1 - cube) % p) % p == e % p {
            count += 1;
        }
    }
    Ok(count)
}
