//! Closed form of the cycle index for `n = 2^m`.
//!
//! For `m >= 3` every unit mod `2^m` is uniquely `±3^b` with
//! `0 <= b < 2^(m-2)`. Writing `b = 2^s r` with `r` odd (or `b = 0`), the
//! order of `±3^b` modulo each `2^l` depends only on the sign, `l` and `s`.
//! That splits `U_{2^m}` into `Γ1 = {3^b}` and `Γ2 = {-3^b}`, each with a
//! closed-form partial cycle index.

use num_rational::BigRational;
use num_traits::One;

use crate::arith::{mul_mod, pow_mod};
use crate::cycle_poly::{CycleIndexPoly, CycleType};
use crate::error::{Error, Result};

/// Largest exponent the closed forms accept; `2^m` must fit in a `u64`.
pub const MAX_EXPONENT: u32 = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A unit mod `2^m`, `m >= 3`, written as `sign * 3^(2^s r)`.
///
/// `r = 0` stands for `b = 0` (the units `1` and `-1`); then `s` is 0.
/// Otherwise `r` is odd, `s <= m - 3` and `2^s r < 2^(m-2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pow2UnitForm {
    sign: Sign,
    s: u32,
    r: u64,
    m: u32,
}

impl Pow2UnitForm {
    pub fn new(sign: Sign, s: u32, r: u64, m: u32) -> Result<Self> {
        check_exponent(m)?;
        let valid = if r == 0 {
            s == 0
        } else {
            r % 2 == 1 && s + 2 < m && r < (1u64 << (m - 2)) && (r << s) < (1u64 << (m - 2))
        };
        if !valid {
            return Err(Error::Parse(format!("({s}, {r}) is not a valid exponent split mod 2^{m}")));
        }
        Ok(Pow2UnitForm { sign, s, r, m })
    }

    /// Finds the form of the unit `w` modulo `2^m`.
    pub fn decompose(w: u64, m: u32) -> Result<Self> {
        check_exponent(m)?;
        let modulus = 1u64 << m;
        let w = w % modulus;
        if w % 2 == 0 {
            return Err(Error::NotAUnit { a: w, n: modulus });
        }
        let mut x = 1u64;
        for b in 0..(1u64 << (m - 2)) {
            let sign = if x == w {
                Some(Sign::Plus)
            } else if x == modulus - w {
                Some(Sign::Minus)
            } else {
                None
            };
            if let Some(sign) = sign {
                let (s, r) = if b == 0 { (0, 0) } else { (b.trailing_zeros(), b >> b.trailing_zeros()) };
                return Ok(Pow2UnitForm { sign, s, r, m });
            }
            x = mul_mod(x, 3, modulus);
        }
        unreachable!("±3^b covers every unit mod 2^m")
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The exponent `b = 2^s r`.
    pub fn b(&self) -> u64 {
        self.r << self.s
    }

    /// The residue in `1..2^m` this form stands for.
    pub fn value(&self) -> u64 {
        let modulus = 1u64 << self.m;
        let x = pow_mod(3, self.b(), modulus);
        match self.sign {
            Sign::Plus => x,
            Sign::Minus => modulus - x,
        }
    }

    /// Multiplicative order modulo `2^l`, read off the order tables.
    pub fn order_mod_pow2(&self, l: u32) -> u64 {
        match (self.sign, self.r) {
            (Sign::Plus, r) => order_table_pow2_plus(l, self.s, r != 0),
            // -1 behaves like s -> infinity
            (Sign::Minus, 0) => order_table_pow2_minus(l, u32::MAX),
            (Sign::Minus, _) => order_table_pow2_minus(l, self.s),
        }
    }

    /// Cycle type on `Z_{2^m}`, assembled orbit by orbit from the order tables.
    pub fn ctype(&self) -> CycleType {
        let mut ct = CycleType::one();
        for l in 0..=self.m {
            let orbit_size = if l == 0 { 1 } else { 1u64 << (l - 1) };
            let k = self.order_mod_pow2(l);
            ct.add_cycles(k, orbit_size / k);
        }
        ct
    }
}

fn check_exponent(m: u32) -> Result<()> {
    if m < 3 {
        return Err(Error::ExponentTooSmall { m, min: 3 });
    }
    if m > MAX_EXPONENT {
        return Err(Error::TooLarge { what: "exponent", value: m as u64, limit: MAX_EXPONENT as u64 });
    }
    Ok(())
}

/// Order of `3^(2^s r)` modulo `2^l`. With `has_nontrivial_r = false` the
/// element is 1 and the order is 1.
pub fn order_table_pow2_plus(l: u32, s: u32, has_nontrivial_r: bool) -> u64 {
    if !has_nontrivial_r {
        return 1;
    }
    match l {
        0 | 1 => 1,
        2 if s == 0 => 2,
        2 => 1,
        _ if s < l - 2 => 1 << (l - 2 - s),
        _ => 1,
    }
}

/// Order of `-3^(2^s r)` modulo `2^l`, `r` odd. Any `s >= l - 2` (for
/// instance `u32::MAX`) also gives the order of `-1`.
pub fn order_table_pow2_minus(l: u32, s: u32) -> u64 {
    match l {
        0 | 1 => 1,
        2 if s == 0 => 1,
        2 => 2,
        _ if s < l - 2 => 1 << (l - 2 - s),
        _ => 2,
    }
}

/// `{3^b : 0 <= b < 2^(m-2)}` as residues mod `2^m`, in order of `b`.
pub fn gamma1_elements(m: u32) -> Result<Vec<u64>> {
    check_exponent(m)?;
    let modulus = 1u64 << m;
    let mut out = Vec::with_capacity(1 << (m - 2));
    let mut x = 1u64;
    for _ in 0..(1u64 << (m - 2)) {
        out.push(x);
        x = mul_mod(x, 3, modulus);
    }
    Ok(out)
}

/// `{-3^b : 0 <= b < 2^(m-2)}` as residues mod `2^m`, in order of `b`.
pub fn gamma2_elements(m: u32) -> Result<Vec<u64>> {
    let modulus = 1u64 << m;
    Ok(gamma1_elements(m)?.into_iter().map(|x| modulus - x).collect())
}

/// Partial cycle index of `Γ1 = {3^b}` in `U_{2^m}`, normalized by `2^(m-1)`:
///
/// `x1^(2^m)` (the identity), `2^(m-3)` copies of `x1^2 x2 ∏_{l=3..m} x_{2^(l-2)}^2`
/// (odd `b`), and for `t = 0..=m-4`, `2^t` copies of
/// `x1^(2^(m-1-t)) ∏_{i=0..=t} x_{2^(i+1)}^(2^(m-2-t))`.
pub fn partial_index_gamma1(m: u32) -> Result<CycleIndexPoly> {
    check_exponent(m)?;
    let mut terms: Vec<(CycleType, u64)> = Vec::new();

    terms.push((CycleType::single(1, 1 << m), 1));

    let mut odd = CycleType::single(1, 2);
    odd.add_cycles(2, 1);
    for l in 3..=m {
        odd.add_cycles(1 << (l - 2), 2);
    }
    terms.push((odd, 1 << (m - 3)));

    for t in 0..=(m as i64 - 4) {
        let t = t as u32;
        let mut ct = CycleType::single(1, 1 << (m - 1 - t));
        for i in 0..=t {
            ct.add_cycles(1 << (i + 1), 1 << (m - 2 - t));
        }
        terms.push((ct, 1 << t));
    }

    Ok(CycleIndexPoly::from_counts(terms, 1 << (m - 1)))
}

/// Partial cycle index of `Γ2 = {-3^b}` in `U_{2^m}`, normalized by `2^(m-1)`:
///
/// `x1^2 x2^(2^(m-1)-1)` (the unit `-1`), `2^(m-3)` copies of
/// `x1^4 ∏_{l=3..m} x_{2^(l-2)}^2` (odd `b`), and for `t = 0..=m-4`, `2^t`
/// copies of `x1^2 x2^(2^(m-t-1)-1) ∏_{i=1..=t} x_{2^(i+1)}^(2^(m-t-2))`.
pub fn partial_index_gamma2(m: u32) -> Result<CycleIndexPoly> {
    check_exponent(m)?;
    let mut terms: Vec<(CycleType, u64)> = Vec::new();

    // -1 fixes 0 and 2^(m-1) and swaps the remaining 2^m - 2 points in pairs
    let mut minus_one = CycleType::single(1, 2);
    minus_one.add_cycles(2, (1 << (m - 1)) - 1);
    terms.push((minus_one, 1));

    let mut odd = CycleType::single(1, 4);
    for l in 3..=m {
        odd.add_cycles(1 << (l - 2), 2);
    }
    terms.push((odd, 1 << (m - 3)));

    for t in 0..=(m as i64 - 4) {
        let t = t as u32;
        let mut ct = CycleType::single(1, 2);
        ct.add_cycles(2, (1 << (m - t - 1)) - 1);
        for i in 1..=t {
            ct.add_cycles(1 << (i + 1), 1 << (m - t - 2));
        }
        terms.push((ct, 1 << t));
    }

    Ok(CycleIndexPoly::from_counts(terms, 1 << (m - 1)))
}

/// Cycle index of `U_{2^m}` on `Z_{2^m}`, `m >= 1`.
pub fn cycle_index_pow2(m: u32) -> Result<CycleIndexPoly> {
    match m {
        0 => Err(Error::ExponentTooSmall { m, min: 1 }),
        1 => Ok(CycleIndexPoly::monomial(CycleType::single(1, 2), BigRational::one())),
        2 => Ok(CycleIndexPoly::from_counts(
            [(CycleType::single(1, 4), 1), ([(1, 2), (2, 1)].into_iter().collect(), 1)],
            2,
        )),
        _ => Ok(partial_index_gamma1(m)?.add(&partial_index_gamma2(m)?)),
    }
}
