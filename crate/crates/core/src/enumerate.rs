//! Burnside and Pólya counts for `U_n` acting on `Z_n` and on subsets of `Z_n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::cycle_poly::CycleIndexPoly;
use crate::error::{Error, Result};
use crate::unit_action;

/// Largest `n` accepted by [`brute_force_subset_classes`].
pub const BRUTE_FORCE_LIMIT: u64 = 24;

/// Number of orbits of `U_n` on the `k`-subsets of `Z_n`, for each `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetClassCount {
    pub n: u64,
    /// Indexed by subset size `k = 0..=n`.
    pub by_k: Vec<BigUint>,
    pub total: BigUint,
}

impl SubsetClassCount {
    fn from_by_k(n: u64, by_k: Vec<BigUint>) -> Self {
        let total = by_k.iter().sum();
        SubsetClassCount { n, by_k, total }
    }
}

/// Points of `Z_n` fixed by `x -> a x`: the solutions of `(a - 1) x = 0`,
/// of which there are `gcd(a - 1, n)` (with `gcd(0, n) = n`).
pub fn fixed_points(n: u64, a: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if !arith::is_unit(a, n) {
        return Err(Error::NotAUnit { a, n });
    }
    let shifted = (a % n + n - 1) % n;
    Ok(shifted.gcd(&n))
}

/// Orbits of `U_n` on `Z_n` by Burnside: the mean number of fixed points.
pub fn count_element_orbits(n: u64) -> Result<u64> {
    let units = arith::units(n)?;
    let total: u64 = units.iter().map(|a| fixed_points(n, a)).sum::<Result<u64>>()?;
    Ok(total / units.len() as u64)
}

/// `index` evaluated at `x_i := 2` for all `i`.
pub fn polya_total(index: &CycleIndexPoly) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    index
        .evaluate_with(|_| Some(two.clone()))
        .expect("constant assignment covers every variable")
}

/// Coefficients of `t^0..=t^n` after substituting `x_i := 1 + t^i` into `index`.
pub fn polya_by_size(index: &CycleIndexPoly, n: u64) -> Vec<BigRational> {
    let len = n as usize + 1;
    let mut acc = vec![BigRational::zero(); len];
    for (ct, c) in index.terms() {
        let mut prod = vec![BigInt::zero(); len];
        prod[0] = BigInt::one();
        for (cycle_len, count) in ct.iter() {
            let step = cycle_len as usize;
            for _ in 0..count {
                // multiply by (1 + t^step), high degrees first
                for deg in (step..len).rev() {
                    let lower = prod[deg - step].clone();
                    prod[deg] += lower;
                }
            }
        }
        for (slot, k) in acc.iter_mut().zip(prod) {
            *slot += c * BigRational::from_integer(k);
        }
    }
    acc
}

fn to_count(q: BigRational) -> BigUint {
    assert!(q.is_integer() && !q.is_negative(), "orbit count {q} is not a non-negative integer");
    q.to_integer().to_biguint().expect("non-negative")
}

/// Orbits of `U_n` on the power set of `Z_n`.
pub fn count_subset_classes_total(n: u64) -> Result<BigUint> {
    Ok(to_count(polya_total(&unit_action::cycle_index_formula(n)?)))
}

/// Orbits of `U_n` on the `k`-subsets of `Z_n`, `k = 0..=n`.
pub fn count_subset_classes_by_size(n: u64) -> Result<SubsetClassCount> {
    let index = unit_action::cycle_index_formula(n)?;
    let by_k = polya_by_size(&index, n).into_iter().map(to_count).collect();
    Ok(SubsetClassCount::from_by_k(n, by_k))
}

/// Subset orbit counts by exhaustive search over all `2^n` subsets.
///
/// A subset (as a bitmask) is the representative of its orbit when no unit
/// maps it to a numerically smaller mask, so the orbit count is the number of
/// such least images.
pub fn brute_force_subset_classes(n: u64) -> Result<SubsetClassCount> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { what: "n", value: n, limit: BRUTE_FORCE_LIMIT });
    }
    let units = arith::units(n)?;
    let perms: Vec<Vec<u32>> = units
        .iter()
        .filter(|&a| a % n != 1 % n)
        .map(|a| (0..n).map(|x| arith::mul_mod(a, x, n) as u32).collect())
        .collect();
    let mut by_k = vec![0u64; n as usize + 1];
    for mask in 0u32..(1u32 << n) {
        let is_least = perms.iter().all(|perm| {
            let mut image = 0u32;
            let mut rest = mask;
            while rest != 0 {
                let x = rest.trailing_zeros();
                image |= 1 << perm[x as usize];
                rest &= rest - 1;
            }
            image >= mask
        });
        if is_least {
            by_k[mask.count_ones() as usize] += 1;
        }
    }
    Ok(SubsetClassCount::from_by_k(n, by_k.into_iter().map(BigUint::from).collect()))
}
