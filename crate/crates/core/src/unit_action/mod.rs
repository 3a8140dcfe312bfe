//! The action `(x, a) -> a x mod n` of the unit group `U_n` on `Z_n`.
//!
//! Three independent routes to the cycle index are provided:
//!
//! * [`cycle_index_formula`]: for each unit `a`, the orbit of additive order
//!   `d` is permuted in `phi(d) / r_a(d)` cycles of length `r_a(d)`, the
//!   multiplicative order of `a` mod `d`. Summing over units gives the index.
//! * [`cycle_index_blocks`]: closed forms for `n = 2^m` ([`pow2`]) and
//!   `n = p^m` ([`odd_prime`]) combined with the ⊛ product over the prime
//!   power factorization of `n`.
//! * [`cycle_index_oracle`]: build every permutation explicitly and walk
//!   its cycles. Quadratic-ish; meant for `n` up to about `10^4`.

pub mod odd_prime;
pub mod pow2;

use std::collections::{BTreeMap, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::One;

use crate::arith::{self, Factorization, OrderFinder};
use crate::cycle_poly::{CycleIndexPoly, CycleType};
use crate::error::{Error, Result};

pub use odd_prime::{cycle_index_odd_prime_power, odd_prime_power_term};
pub use pow2::{
    cycle_index_pow2, gamma1_elements, gamma2_elements, order_table_pow2_minus,
    order_table_pow2_plus, partial_index_gamma1, partial_index_gamma2, Pow2UnitForm, Sign,
};

/// Recommended upper bound on `n` for [`cycle_index_oracle`].
pub const ORACLE_LIMIT: u64 = 10_000;

/// Recommended upper bound on `phi(n)` for the formula and block routes.
pub const PHI_LIMIT: u64 = 1_000_000;

/// `U_n` acting on `Z_n`, with the per-divisor data the formula needs.
#[derive(Debug, Clone)]
pub struct GroupActionSpec {
    n: u64,
    phi_n: u64,
    lambda_n: u64,
    divisors: Vec<u64>,
    factorization: Factorization,
    // parallel to `divisors`
    finders: Vec<OrderFinder>,
    phis: Vec<u64>,
}

impl GroupActionSpec {
    pub fn new(n: u64) -> Result<Self> {
        let factorization = arith::factorize(n)?;
        let divisors = factorization.divisors();
        let finders = divisors
            .iter()
            .map(|&d| OrderFinder::new(d))
            .collect::<Result<Vec<_>>>()?;
        let phis = divisors
            .iter()
            .map(|&d| arith::euler_phi(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupActionSpec {
            n,
            phi_n: factorization.phi(),
            lambda_n: factorization.lambda(),
            divisors,
            factorization,
            finders,
            phis,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn phi_n(&self) -> u64 {
        self.phi_n
    }

    pub fn lambda_n(&self) -> u64 {
        self.lambda_n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    fn check_unit(&self, a: u64) -> Result<()> {
        if arith::is_unit(a, self.n) {
            Ok(())
        } else {
            Err(Error::NotAUnit { a, n: self.n })
        }
    }

    /// Units of `Z_n` in `1..=n`, ascending.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        let n = self.n;
        (1..=n).filter(move |&a| arith::is_unit(a, n))
    }

    /// Cycle type of `x -> a x` restricted to the elements of additive order `d`.
    pub fn ctype_on_orbit(&self, a: u64, d: u64) -> Result<CycleType> {
        self.check_unit(a)?;
        let idx = self
            .divisors
            .binary_search(&d)
            .map_err(|_| Error::NotADivisor { d, n: self.n })?;
        Ok(self.orbit_ctype(a, idx))
    }

    fn orbit_ctype(&self, a: u64, idx: usize) -> CycleType {
        let k = self.finders[idx].order_of_unit(a);
        CycleType::single(k, self.phis[idx] / k)
    }

    /// Cycle type of `x -> a x` on all of `Z_n`: the product of the per-orbit types.
    pub fn ctype_of_unit(&self, a: u64) -> Result<CycleType> {
        self.check_unit(a)?;
        Ok(self.unit_ctype(a))
    }

    fn unit_ctype(&self, a: u64) -> CycleType {
        let mut ct = CycleType::one();
        for idx in 0..self.divisors.len() {
            ct.merge(&self.orbit_ctype(a, idx));
        }
        ct
    }

    pub fn cycle_index_formula(&self) -> CycleIndexPoly {
        let mut tally: HashMap<CycleType, u64> = HashMap::new();
        for a in self.units() {
            *tally.entry(self.unit_ctype(a)).or_insert(0) += 1;
        }
        CycleIndexPoly::from_counts(tally, self.phi_n)
    }

    /// Same normalization as the full index (`1/phi(n)`) but summed over `subset` only.
    pub fn partial_cycle_index(&self, subset: &[u64]) -> Result<CycleIndexPoly> {
        let mut seen = HashSet::new();
        let mut tally: HashMap<CycleType, u64> = HashMap::new();
        for &a in subset {
            self.check_unit(a)?;
            let canon = canonical_residue(a, self.n);
            if !seen.insert(canon) {
                return Err(Error::DuplicateElement { a });
            }
            *tally.entry(self.unit_ctype(canon)).or_insert(0) += 1;
        }
        Ok(CycleIndexPoly::from_counts(tally, self.phi_n))
    }
}

/// Representative of `a mod n` in `1..=n`.
fn canonical_residue(a: u64, n: u64) -> u64 {
    match a % n {
        0 => n,
        r => r,
    }
}

/// Elements of `Z_n` of additive order `d`, i.e. `(n/d) * U_d`, ascending.
pub fn orbit_of_order(n: u64, d: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if d == 0 || n % d != 0 {
        return Err(Error::NotADivisor { d, n });
    }
    let step = n / d;
    let mut orbit: Vec<u64> = arith::units(d)?.iter().map(|t| (step * t) % n).collect();
    orbit.sort_unstable();
    Ok(orbit)
}

/// The orbits of `U_n` on `Z_n`, one per divisor `d` of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    n: u64,
    orbits: BTreeMap<u64, Vec<u64>>,
}

impl OrbitTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Divisor `d` -> sorted elements of order `d`.
    pub fn orbits(&self) -> &BTreeMap<u64, Vec<u64>> {
        &self.orbits
    }

    pub fn get(&self, d: u64) -> Option<&[u64]> {
        self.orbits.get(&d).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

pub fn orbits(n: u64) -> Result<OrbitTable> {
    let orbits = arith::divisors(n)?
        .into_iter()
        .map(|d| Ok((d, orbit_of_order(n, d)?)))
        .collect::<Result<_>>()?;
    Ok(OrbitTable { n, orbits })
}

pub fn ctype_on_orbit(n: u64, a: u64, d: u64) -> Result<CycleType> {
    GroupActionSpec::new(n)?.ctype_on_orbit(a, d)
}

pub fn ctype_of_unit(n: u64, a: u64) -> Result<CycleType> {
    GroupActionSpec::new(n)?.ctype_of_unit(a)
}

/// Cycle type of `x -> a x mod n` found by materializing the permutation and
/// walking each cycle once.
pub fn ctype_of_permutation_oracle(n: u64, a: u64) -> Result<CycleType> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if !arith::is_unit(a, n) {
        return Err(Error::NotAUnit { a, n });
    }
    let size = usize::try_from(n).map_err(|_| Error::TooLarge { what: "n", value: n, limit: usize::MAX as u64 })?;
    let image: Vec<u64> = (0..n).map(|x| arith::mul_mod(a, x, n)).collect();
    let mut visited = vec![false; size];
    let mut ct = CycleType::one();
    for start in 0..size {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !visited[x] {
            visited[x] = true;
            x = image[x] as usize;
            len += 1;
        }
        ct.add_cycles(len, 1);
    }
    Ok(ct)
}

pub fn cycle_index_formula(n: u64) -> Result<CycleIndexPoly> {
    Ok(GroupActionSpec::new(n)?.cycle_index_formula())
}

/// Cycle index by explicit permutations; the ground truth for the other routes.
pub fn cycle_index_oracle(n: u64) -> Result<CycleIndexPoly> {
    let units = arith::units(n)?;
    let mut tally: HashMap<CycleType, u64> = HashMap::new();
    for a in units.iter() {
        *tally.entry(ctype_of_permutation_oracle(n, a)?).or_insert(0) += 1;
    }
    Ok(CycleIndexPoly::from_counts(tally, units.len() as u64))
}

/// ⊛-product of the prime-power blocks of `n`. `n = 1` gives `x1`.
pub fn cycle_index_blocks(n: u64) -> Result<CycleIndexPoly> {
    let factorization = arith::factorize(n)?;
    let mut acc = CycleIndexPoly::monomial(CycleType::single(1, 1), BigRational::one());
    for &(p, e) in factorization.factors() {
        let block = if p == 2 {
            cycle_index_pow2(e)?
        } else {
            cycle_index_odd_prime_power(p, e)?
        };
        acc = acc.star_product(&block);
    }
    Ok(acc)
}

pub fn partial_cycle_index(n: u64, subset: &[u64]) -> Result<CycleIndexPoly> {
    GroupActionSpec::new(n)?.partial_cycle_index(subset)
}
