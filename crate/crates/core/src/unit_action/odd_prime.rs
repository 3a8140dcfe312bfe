//! Closed form of the cycle index for `n = p^m`, `p` an odd prime.
//!
//! `U_{p^m}` is cyclic with a generator `β`, and `β` has order `phi(p^i)`
//! modulo every `p^i`. So `β^k` permutes the elements of order `p^i` in
//! `v = gcd(phi(p^i), k)` cycles of length `phi(p^i) / v`.

use num_integer::Integer;

use crate::arith;
use crate::cycle_poly::{CycleIndexPoly, CycleType};
use crate::error::{Error, Result};

fn check_odd_prime_power(p: u64, m: u32) -> Result<Vec<u64>> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::NotAnOddPrime { p });
    }
    if m == 0 {
        return Err(Error::ExponentTooSmall { m, min: 1 });
    }
    let pm = p
        .checked_pow(m)
        .ok_or(Error::TooLarge { what: "prime power", value: u64::MAX, limit: u64::MAX })?;
    // phi(p^i) for i = 0..=m
    let mut phis = vec![1u64];
    let mut pi = 1u64;
    for _ in 1..=m {
        phis.push(pi * (p - 1));
        pi *= p;
    }
    debug_assert_eq!(pi, pm);
    Ok(phis)
}

/// Cycle type of `β^k` on `Z_{p^m}` for any generator `β` of `U_{p^m}`:
/// `∏_{i=0..=m} x_{u(i,k)}^{v(i,k)}` with `v = gcd(phi(p^i), k)` and `u = phi(p^i) / v`.
pub fn odd_prime_power_term(p: u64, m: u32, k: u64) -> Result<CycleType> {
    let phis = check_odd_prime_power(p, m)?;
    Ok(term(&phis, k))
}

fn term(phis: &[u64], k: u64) -> CycleType {
    phis.iter()
        .map(|&phi| {
            let v = phi.gcd(&k);
            (phi / v, v)
        })
        .collect()
}

/// `(1/phi(p^m)) Σ_{k=1..=phi(p^m)} ∏_{i=0..=m} x_{u(i,k)}^{v(i,k)}`.
///
/// The summand depends on `k` only through `g = gcd(k, phi(p^m))`, and
/// exactly `phi(phi(p^m) / g)` values of `k` share each `g`, so the sum runs
/// over divisors of `phi(p^m)` rather than all `k`.
pub fn cycle_index_odd_prime_power(p: u64, m: u32) -> Result<CycleIndexPoly> {
    let phis = check_odd_prime_power(p, m)?;
    let order = *phis.last().expect("m >= 1");
    let classes = arith::divisors(order)?
        .into_iter()
        .map(|g| Ok((term(&phis, g), arith::euler_phi(order / g)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleIndexPoly::from_counts(classes, order))
}
