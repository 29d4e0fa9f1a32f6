use num_traits::ToPrimitive;

use crate::characters::linear::LinearCharacter;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pcgroup::{derived_subgroup, Subgroup};
use crate::snf;

/// All |B : B'| linear characters of B, sorted by exponent vector.
///
/// The abelianization is presented on the IGS by the power relations
/// p*x_i = coords(w_i^p) and the commutator relations coords([w_i, w_j]) = 0,
/// then diagonalized by Smith normal form; characters are enumerated from
/// the diagonal. All characters share value_order = exponent of B/B'.
pub fn lin_all(b: &Subgroup, limits: &Limits) -> Result<Vec<LinearCharacter>> {
    let g = b.group();
    let p = g.prime() as i64;
    let m = b.igs().len();
    if m == 0 {
        return Ok(vec![LinearCharacter::principal(b)]);
    }
    let derived = derived_subgroup(b);
    let ab_order = b.order()? / derived.order()?;
    if ab_order > limits.lin_bound {
        return Err(Error::SizeGuard {
            op: "lin_all",
            bound: limits.lin_bound,
            actual: ab_order,
        });
    }

    // Abelianized defining relations of B's polycyclic presentation on
    // the IGS: p*x_i = coords(w_i^p) and x_j = coords(w_j^{w_i}) for
    // i < j. Sift coordinates are word exponents of an explicit
    // factorization, so each row is a genuine relation of B/B'.
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, w) in b.igs().iter().enumerate() {
        let wp = g.power(w, p as u64);
        let coords = b.sift_coords(&wp).expect("w^p stays in B");
        let mut row: Vec<i64> = coords.iter().map(|&c| -(c as i64)).collect();
        row[i] += p;
        rows.push(row);
    }
    for (i, u) in b.igs().iter().enumerate() {
        for (dj, v) in b.igs()[i + 1..].iter().enumerate() {
            let j = i + 1 + dj;
            let conj = g.conjugate(v, u);
            let coords = b.sift_coords(&conj).expect("w_j^{w_i} stays in B");
            let mut row: Vec<i64> = coords.iter().map(|&c| -(c as i64)).collect();
            row[j] += 1;
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }

    let (diag, v) = snf::smith_normal_form(&rows, m);
    let diag: Vec<u64> = diag
        .iter()
        .map(|d| {
            d.to_u64()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::NotAHomomorphism("abelianization is not finite".into()))
        })
        .collect::<Result<Vec<u64>>>()?;
    let value_order = diag.iter().copied().max().unwrap_or(1).max(1);
    debug_assert_eq!(diag.iter().product::<u64>() as u128, ab_order);

    // v[j][i] mod value_order, as u64.
    let vo = value_order as i128;
    let vmod: Vec<Vec<u64>> = (0..m)
        .map(|j| {
            (0..m)
                .map(|i| {
                    let raw = &v[j][i] % vo;
                    let raw = raw.to_i128().unwrap();
                    (raw.rem_euclid(vo)) as u64
                })
                .collect()
        })
        .collect();

    // Enumerate characters: c_i in [0, diag[i]); exponent on generator j is
    // sum_i c_i * (value_order / diag[i]) * v[j][i].
    let scales: Vec<u64> = diag.iter().map(|&d| value_order / d).collect();
    let mut counters = vec![0u64; m];
    let mut out = Vec::with_capacity(ab_order as usize);
    loop {
        let exps: Vec<u64> = (0..m)
            .map(|j| {
                let mut acc: u128 = 0;
                for i in 0..m {
                    acc += counters[i] as u128 * scales[i] as u128 * vmod[j][i] as u128;
                }
                (acc % value_order as u128) as u64
            })
            .collect();
        // Exactness check against the relation lattice, in plain modular
        // arithmetic: every relation row must annihilate the exponents.
        for row in &rows {
            let mut acc: i128 = 0;
            for (r, e) in row.iter().zip(&exps) {
                acc += *r as i128 * *e as i128;
            }
            if acc.rem_euclid(value_order as i128) != 0 {
                return Err(Error::NotAHomomorphism(
                    "enumerated character violates a relation row".into(),
                ));
            }
        }
        out.push(exps);
        // Advance the mixed-radix counter over [0, diag[i]).
        let mut i = m;
        loop {
            if i == 0 {
                let mut chars: Vec<LinearCharacter> = out
                    .into_iter()
                    .map(|exps| LinearCharacter::from_verified_parts(b, exps, value_order))
                    .collect();
                chars.sort_by(|a, b| a.exps().cmp(b.exps()));
                chars.dedup_by(|a, b| a.exps() == b.exps());
                debug_assert_eq!(chars.len() as u128, ab_order);
                return Ok(chars);
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < diag[i] {
                break;
            }
            counters[i] = 0;
        }
    }
}
