//! Betti numbers through the Taylor complex, as an independent oracle.
//!
//! The Taylor complex on `m` generators has one free summand per subset,
//! placed in the multidegree of the subset's lcm. Tensoring with the
//! residue field splits it into strands, one per multidegree, whose
//! boundary entries are the signs of subset inclusions that preserve the
//! lcm. Strand homology gives the Betti numbers of the quotient; this
//! routine shifts them down to the ideal so its tables are directly
//! comparable with [`crate::betti_numbers`].
//!
//! Ranks here are computed by plain Gaussian elimination over arbitrary-
//! precision rationals, deliberately sharing no code with the fraction-
//! free integer elimination used by the main engines.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::homology::BettiTable;
use crate::{Error, Monomial, MonomialIdeal, Result};

const MAX_TAYLOR_GENERATORS: usize = 18;

fn gaussian_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (c, entry) in pivot.iter().enumerate().skip(col) {
                let delta = &f * entry;
                row[c] -= delta;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Multigraded Betti numbers of the ideal computed from Taylor strand
/// homology. Exact but exponential in the number of generators, so the
/// generator count is capped; meant for cross-checking, not production.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let n = ideal.ring_dim();
    if ideal.is_zero() {
        return Ok(BettiTable::from_entries(n, BTreeMap::new()));
    }
    if ideal.is_unit() {
        let mut entries = BTreeMap::new();
        entries.insert((0, Monomial::one(n)), 1);
        return Ok(BettiTable::from_entries(n, entries));
    }
    let m = ideal.num_gens();
    if m > MAX_TAYLOR_GENERATORS {
        return Err(Error::BudgetExceeded(format!(
            "Taylor complex on {m} generators exceeds the limit {MAX_TAYLOR_GENERATORS}"
        )));
    }
    let gens = ideal.gens();

    // lcm of every generator subset, built up one lowest bit at a time.
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << m);
    lcms.push(Monomial::one(n));
    for mask in 1u64..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = (mask & (mask - 1)) as usize;
        lcms.push(lcms[rest].lcm(&gens[low]));
    }

    let mut strands: HashMap<&Monomial, Vec<u64>> = HashMap::new();
    for mask in 0..(1u64 << m) {
        strands.entry(&lcms[mask as usize]).or_default().push(mask);
    }

    let mut entries = BTreeMap::new();
    for (degree, masks) in strands {
        let top = masks.iter().map(|s| s.count_ones() as usize).max().unwrap();
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for &s in &masks {
            levels[s.count_ones() as usize].push(s);
        }
        let index_of: Vec<HashMap<u64, usize>> = levels
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, &s)| (s, i)).collect())
            .collect();
        let mut ranks = vec![0usize; top + 2];
        for k in 1..=top {
            if levels[k].is_empty() || levels[k - 1].is_empty() {
                continue;
            }
            let mut mat = vec![vec![BigRational::zero(); levels[k].len()]; levels[k - 1].len()];
            for (c, &subset) in levels[k].iter().enumerate() {
                let mut sign = 1i32;
                let mut bits = subset;
                while bits != 0 {
                    let g = bits.trailing_zeros();
                    bits &= bits - 1;
                    let smaller = subset & !(1u64 << g);
                    if &lcms[smaller as usize] == degree {
                        if let Some(&r) = index_of[k - 1].get(&smaller) {
                            mat[r][c] = BigRational::from(BigInt::from(sign));
                        }
                    }
                    sign = -sign;
                }
            }
            ranks[k] = gaussian_rank(mat);
        }
        // Strand homology at level k is a Betti number of the quotient in
        // position k; the ideal's table sits one position lower.
        for k in 1..=top {
            let h = levels[k].len() - ranks[k] - ranks[k + 1];
            if h > 0 {
                entries.insert((k - 1, degree.clone()), h);
            }
        }
    }
    Ok(BettiTable::from_entries(n, entries))
}
