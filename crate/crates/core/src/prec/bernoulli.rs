//! Exact Bernoulli numbers via the defining recurrence
//! Σ_{j=0}^{m} C(m+1, j) B_j = 0 (m ≥ 1), with B₁ = −1/2.
//!
//! The table grows on demand and is shared process-wide; entries are written
//! once and never mutated afterwards.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial};

static TABLE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());
static OVER_FACT: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

fn extend_table(table: &mut Vec<BigRational>, upto: usize) {
    if table.is_empty() {
        table.push(BigRational::one()); // B_0
        table.push(BigRational::new(BigInt::from(-1), BigInt::from(2))); // B_1
    }
    while table.len() <= upto {
        let m = table.len(); // computing B_m
        if m % 2 == 1 {
            table.push(BigRational::zero());
            continue;
        }
        let mut sum = BigRational::zero();
        for (j, bj) in table.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            sum += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        let bm = -sum / BigRational::from_integer(BigInt::from(m as u64 + 1));
        table.push(bm);
    }
}

/// Exact Bernoulli number B_k.
///
/// Accepts k = 0, k = 1 (−1/2) and even k; odd k ≥ 3 vanish and are rejected
/// so a caller asking for them is surfaced as a bug.
pub fn bernoulli(k: usize) -> Result<BigRational> {
    if k % 2 == 1 && k > 1 {
        return Err(Error::Domain(format!(
            "B_{k} is zero; odd indices above 1 are not served"
        )));
    }
    let mut table = TABLE.lock().expect("bernoulli table lock");
    extend_table(&mut table, k);
    Ok(table[k].clone())
}

/// B_k / k! for even k, the combination the Euler–Maclaurin corrections use.
pub fn bernoulli_over_factorial(k: usize) -> Result<BigRational> {
    if k % 2 != 0 {
        return Err(Error::Domain(format!("B_{k}/{k}! requested with odd k")));
    }
    {
        let cache = OVER_FACT.lock().expect("bernoulli/k! cache lock");
        if let Some(v) = cache.get(k / 2) {
            return Ok(v.clone());
        }
    }
    let value = bernoulli(k)? / BigRational::from_integer(factorial(k as u32));
    let mut cache = OVER_FACT.lock().expect("bernoulli/k! cache lock");
    while cache.len() <= k / 2 {
        let j = 2 * cache.len();
        let v = bernoulli(j).expect("even index") / BigRational::from_integer(factorial(j as u32));
        cache.push(v);
    }
    debug_assert_eq!(cache[k / 2], value);
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(8).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(10).unwrap(), rat(5, 66));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
    }

    #[test]
    fn rejects_odd_above_one() {
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(17).is_err());
    }

    #[test]
    fn recurrence_rederived_from_scratch() {
        // Re-derive the table independently at test time and compare.
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=40usize {
            // B_m from Σ_{j=0}^{m} C(m+1,j) B_j = 0
            let mut sum = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                sum += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
            }
            b.push(-sum / BigRational::from_integer(BigInt::from(m as u64 + 1)));
        }
        for k in (0..=40).step_by(2) {
            assert_eq!(bernoulli(k).unwrap(), b[k], "B_{k} mismatch");
        }
    }

    #[test]
    fn over_factorial_consistency() {
        for k in (0..=24).step_by(2) {
            let direct = bernoulli(k).unwrap() / BigRational::from_integer(factorial(k as u32));
            assert_eq!(bernoulli_over_factorial(k).unwrap(), direct);
        }
    }
}
