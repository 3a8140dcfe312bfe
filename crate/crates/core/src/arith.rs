//! Integer number theory on `u64`: factorization, divisors, Euler's totient,
//! the Carmichael function and multiplicative orders.
//!
//! Moduli are assumed to be CLI-scale (up to roughly `10^12`), so everything
//! here is exact trial division. Modular products go through `u128`.

use num_integer::Integer;

use crate::error::{Error, Result};

/// `a * b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`. Returns 0 when `m == 1`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `n` together with its prime factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// Builds a factorization from `(prime, exponent)` pairs in any order.
    /// Repeated primes are merged; zero exponents are dropped.
    pub fn from_prime_powers(pairs: &[(u64, u32)]) -> Result<Self> {
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut sorted = pairs.to_vec();
        sorted.sort_unstable();
        let mut n: u64 = 1;
        for (p, e) in sorted {
            if e == 0 {
                continue;
            }
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            let pe = p
                .checked_pow(e)
                .and_then(|pe| n.checked_mul(pe))
                .ok_or(Error::TooLarge { what: "modulus", value: u64::MAX, limit: u64::MAX })?;
            n = pe;
            match factors.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => factors.push((p, e)),
            }
        }
        Ok(Factorization { n, factors })
    }

    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn lambda(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| prime_power_lambda(p, e))
            .fold(1, |acc, l| acc.lcm(&l))
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }
}

fn prime_power_lambda(p: u64, e: u32) -> u64 {
    if p == 2 && e > 2 {
        1 << (e - 2)
    } else {
        (p - 1) * p.pow(e - 1)
    }
}

const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// Trial division with a mod-30 wheel.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut factors = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    let mut p = 7u64;
    let mut w = 0;
    while p.saturating_mul(p) <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += WHEEL[w];
        w = (w + 1) % WHEEL.len();
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.phi())
}

pub fn carmichael_lambda(n: u64) -> Result<u64> {
    Ok(factorize(n)?.lambda())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// The residues `a` in `1..=n` coprime to `n`, ascending.
///
/// For `n = 1` this is `[1]`: the lone residue class is its own unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSet {
    n: u64,
    elements: Vec<u64>,
}

impl UnitSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }
}

pub fn units(n: u64) -> Result<UnitSet> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n == 1 {
        return Ok(UnitSet { n, elements: vec![1] });
    }
    let elements = (1..n).filter(|a| a.gcd(&n) == 1).collect();
    Ok(UnitSet { n, elements })
}

/// `true` when `a` is invertible modulo `n` (every `a` is, for `n = 1`).
pub fn is_unit(a: u64, n: u64) -> bool {
    n != 0 && (n == 1 || (a % n).gcd(&n) == 1)
}

/// Multiplicative orders modulo a fixed `d`.
///
/// Keeps `lambda(d)` and its prime divisors so repeated queries cost a
/// handful of modular exponentiations each: start from `lambda(d)` and strip
/// prime factors while the power still lands on 1.
#[derive(Debug, Clone)]
pub struct OrderFinder {
    modulus: u64,
    lambda: u64,
    lambda_primes: Vec<u64>,
}

impl OrderFinder {
    pub fn new(modulus: u64) -> Result<Self> {
        let lambda = carmichael_lambda(modulus)?;
        let lambda_primes = factorize(lambda)?.primes().collect();
        Ok(OrderFinder { modulus, lambda, lambda_primes })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// Order of `a`; the caller guarantees `gcd(a, modulus) = 1`.
    pub fn order_of_unit(&self, a: u64) -> u64 {
        if self.modulus <= 2 {
            return 1;
        }
        let a = a % self.modulus;
        let mut order = self.lambda;
        for &q in &self.lambda_primes {
            while order % q == 0 && pow_mod(a, order / q, self.modulus) == 1 {
                order /= q;
            }
        }
        order
    }

    pub fn order_of(&self, a: u64) -> Result<u64> {
        if !is_unit(a, self.modulus) {
            return Err(Error::NotAUnit { a, n: self.modulus });
        }
        Ok(self.order_of_unit(a))
    }
}

/// Least `k >= 1` with `a^k = 1 (mod d)`.
pub fn multiplicative_order(a: u64, d: u64) -> Result<u64> {
    OrderFinder::new(d)?.order_of(a)
}

/// Same as [`multiplicative_order`] but by repeated multiplication.
/// Linear in the order; kept as a cross-check for small moduli.
pub fn multiplicative_order_naive(a: u64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    if !is_unit(a, d) {
        return Err(Error::NotAUnit { a, n: d });
    }
    if d == 1 {
        return Ok(1);
    }
    let a = a % d;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, d);
        k += 1;
    }
    Ok(k)
}

/// Smallest primitive root modulo an odd prime `p`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotAnOddPrime { p });
    }
    let qs: Vec<u64> = factorize(p - 1)?.primes().collect();
    let g = (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every odd prime has a primitive root");
    Ok(g)
}

/// A generator of the cyclic group of units modulo `p^m`, `p` an odd prime.
///
/// Takes the smallest primitive root `g` mod `p`; if `g^(p-1) = 1 (mod p^2)`
/// then `g + p` generates instead. Either choice then lifts to every `m`.
pub fn primitive_root_prime_power(p: u64, m: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::ExponentTooSmall { m, min: 1 });
    }
    let g = primitive_root(p)?;
    if m == 1 {
        return Ok(g);
    }
    let p2 = p * p;
    if pow_mod(g, p - 1, p2) == 1 {
        Ok(g + p)
    } else {
        Ok(g)
    }
}
