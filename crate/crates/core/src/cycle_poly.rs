//! Sparse cycle-index polynomials with exact rational coefficients.
//!
//! A [`CycleType`] is a monomial `x_1^{k_1} x_2^{k_2} ...` stored as the map
//! `cycle length -> multiplicity`. A [`CycleIndexPoly`] is a finite rational
//! combination of cycle types kept in canonical form: no zero coefficients,
//! no zero multiplicities, and terms ordered by [`CycleType`]'s `Ord`. Two
//! polynomials are mathematically equal exactly when they are `==`.
//!
//! Term order: compare exponent vectors variable by variable, lowest index
//! first, and put the larger exponent first. So `x1^4` precedes `x1^2 x2`,
//! which precedes `x1 x4`.

use std::cmp::Ordering;
use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cycle structure of a permutation, as a monomial in `x_1, x_2, ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycleType {
    exps: BTreeMap<u64, u64>,
}

impl CycleType {
    /// The empty monomial `1` (the permutation of zero points).
    pub fn one() -> Self {
        Self::default()
    }

    /// `x_len^count`; `count == 0` gives the empty monomial.
    pub fn single(len: u64, count: u64) -> Self {
        let mut ct = Self::default();
        ct.add_cycles(len, count);
        ct
    }

    /// Records `count` more cycles of length `len`.
    pub fn add_cycles(&mut self, len: u64, count: u64) {
        assert!(len > 0, "cycle length must be positive");
        if count > 0 {
            *self.exps.entry(len).or_insert(0) += count;
        }
    }

    /// Multiplicity of `x_len` (zero if absent).
    pub fn exponent(&self, len: u64) -> u64 {
        self.exps.get(&len).copied().unwrap_or(0)
    }

    /// Number of points permuted: `sum(len * count)`.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|(&len, &count)| len * count).sum()
    }

    /// Total number of cycles.
    pub fn cycle_count(&self) -> u64 {
        self.exps.values().sum()
    }

    pub fn max_index(&self) -> Option<u64> {
        self.exps.keys().next_back().copied()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `(len, count)` pairs, ascending in `len`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.exps.iter().map(|(&l, &c)| (l, c))
    }

    /// Cycle type of the direct product of two permutations acting on the
    /// Cartesian product of their point sets.
    pub fn star(&self, other: &CycleType) -> CycleType {
        let mut out = CycleType::one();
        for (l, i) in self.iter() {
            for (m, j) in other.iter() {
                out.merge(&star_monomial(l, i, m, j));
            }
        }
        out
    }

    /// In-place monomial product (exponents add).
    pub fn merge(&mut self, other: &CycleType) {
        for (len, count) in other.iter() {
            self.add_cycles(len, count);
        }
    }

    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (len, count) in self.iter() {
            s.push_str(&format!("x_{{{len}}}"));
            if count != 1 {
                s.push_str(&format!("^{{{count}}}"));
            }
        }
        s
    }
}

impl FromIterator<(u64, u64)> for CycleType {
    fn from_iter<T: IntoIterator<Item = (u64, u64)>>(iter: T) -> Self {
        let mut ct = CycleType::one();
        for (len, count) in iter {
            ct.add_cycles(len, count);
        }
        ct
    }
}

impl Mul for &CycleType {
    type Output = CycleType;

    fn mul(self, rhs: &CycleType) -> CycleType {
        let mut out = self.clone();
        out.merge(rhs);
        out
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                // the side with a variable the other lacks has the larger exponent there
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some((ka, ea)), Some((kb, eb))) => match ka.cmp(kb) {
                    Ordering::Equal => match eb.cmp(ea) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (len, count) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if count == 1 {
                write!(f, "x{len}")?;
            } else {
                write!(f, "x{len}^{count}")?;
            }
        }
        Ok(())
    }
}

/// `x_l^i ⊛ x_m^j = x_{lcm(l,m)}^{i j gcd(l,m)}`.
pub fn star_monomial(l: u64, i: u64, m: u64, j: u64) -> CycleType {
    let g = l.gcd(&m);
    CycleType::single(l / g * m, i * j * g)
}

/// Output flavour for [`CycleIndexPoly::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format '{other}'"))),
        }
    }
}

/// Exact rational combination of cycle types, in canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycleIndexPoly {
    terms: BTreeMap<CycleType, BigRational>,
}

impl CycleIndexPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(ct: CycleType, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(ct, c);
        p
    }

    /// Builds `(1/denominator) * sum(count * ct)` from integer tallies.
    pub fn from_counts<I>(counts: I, denominator: u64) -> Self
    where
        I: IntoIterator<Item = (CycleType, u64)>,
    {
        assert!(denominator > 0);
        let den = BigInt::from(denominator);
        let mut p = Self::zero();
        for (ct, count) in counts {
            p.add_term(ct, BigRational::new(BigInt::from(count), den.clone()));
        }
        p
    }

    /// Adds `c * ct` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, ct: CycleType, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ct) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, ct: &CycleType) -> Option<&BigRational> {
        self.terms.get(ct)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> btree_map::Iter<'_, CycleType, BigRational> {
        self.terms.iter()
    }

    pub fn add(&self, other: &CycleIndexPoly) -> CycleIndexPoly {
        let mut out = self.clone();
        for (ct, c) in other.terms() {
            out.add_term(ct.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> CycleIndexPoly {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(ct, k)| (ct.clone(), k * c)).collect();
        CycleIndexPoly { terms }
    }

    /// The ⊛ product: bilinear in its arguments, combining each pair of terms
    /// with [`CycleType::star`].
    pub fn star_product(&self, other: &CycleIndexPoly) -> CycleIndexPoly {
        let mut out = Self::zero();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                out.add_term(p.star(q), a * b);
            }
        }
        out
    }

    /// Set of term degrees. A cycle index on `n` points gives `{n}`.
    pub fn degrees(&self) -> std::collections::BTreeSet<u64> {
        self.terms.keys().map(CycleType::degree).collect()
    }

    /// Largest variable index appearing anywhere.
    pub fn max_index(&self) -> Option<u64> {
        self.terms.keys().filter_map(CycleType::max_index).max()
    }

    /// All variable indices that appear, ascending.
    pub fn variables(&self) -> std::collections::BTreeSet<u64> {
        self.terms.keys().flat_map(|ct| ct.iter().map(|(l, _)| l)).collect()
    }

    /// Substitutes `x_i := assignment[i]` and evaluates exactly.
    pub fn evaluate(&self, assignment: &BTreeMap<u64, BigRational>) -> Result<BigRational> {
        self.evaluate_with(|i| assignment.get(&i).cloned())
    }

    /// Like [`evaluate`](Self::evaluate) with the assignment given as a function.
    pub fn evaluate_with<F>(&self, mut value: F) -> Result<BigRational>
    where
        F: FnMut(u64) -> Option<BigRational>,
    {
        let mut cache: BTreeMap<u64, BigRational> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (ct, c) in self.terms() {
            let mut term = c.clone();
            for (len, count) in ct.iter() {
                let x = match cache.get(&len) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(len).ok_or(Error::MissingVariable { index: len })?;
                        cache.insert(len, x.clone());
                        x
                    }
                };
                term *= rational_pow(&x, count);
            }
            total += term;
        }
        Ok(total)
    }

    /// First term (in canonical order) where `self` and `other` differ,
    /// with the two coefficients (`None` meaning absent).
    pub fn first_difference<'a>(
        &'a self,
        other: &'a CycleIndexPoly,
    ) -> Option<(&'a CycleType, Option<&'a BigRational>, Option<&'a BigRational>)> {
        let mut keys: Vec<&CycleType> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|ct| {
            let a = self.terms.get(ct);
            let b = other.terms.get(ct);
            (a != b).then_some((ct, a, b))
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.to_string(),
            Format::Latex => self.to_latex(),
            Format::Json => self.to_json(),
        }
    }

    /// LaTeX with the lcm of the denominators pulled out in front:
    /// `\frac{1}{L}\left(c_1 m_1+c_2 m_2+\dots\right)`, the wrapper
    /// omitted when `L = 1`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut body = String::new();
        for (i, (ct, c)) in self.terms().enumerate() {
            let k = (c * BigRational::from_integer(lcm.clone())).to_integer();
            if k.is_negative() {
                body.push('-');
            } else if i > 0 {
                body.push('+');
            }
            let k = k.abs();
            if ct.is_one() {
                body.push_str(&k.to_string());
            } else {
                if !k.is_one() {
                    body.push_str(&k.to_string());
                }
                body.push_str(&ct.to_latex());
            }
        }
        if lcm.is_one() {
            body
        } else {
            format!("\\frac{{1}}{{{lcm}}}\\left({body}\\right)")
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial JSON is always serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        CycleIndexPoly::try_from(raw)
    }
}

fn rational_pow(x: &BigRational, e: u64) -> BigRational {
    BigRational::new_raw(Pow::pow(x.numer(), e), Pow::pow(x.denom(), e))
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for CycleIndexPoly {
    /// `1/2 x1^4 + 1/2 x1^2 x2`; unit coefficients are omitted in front of
    /// a monomial and the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (ct, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = c.abs();
            if ct.is_one() {
                f.write_str(&fmt_rational(&c))?;
            } else if c.is_one() {
                write!(f, "{ct}")?;
            } else {
                write!(f, "{} {ct}", fmt_rational(&c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for CycleIndexPoly {
    type Err = Error;

    /// Parses the plain grammar written by `Display`. Whitespace between
    /// tokens is required; a term's coefficient defaults to 1.
    fn from_str(s: &str) -> Result<Self> {
        let mut poly = CycleIndexPoly::zero();
        let mut sign = BigRational::one();
        let mut coeff: Option<BigRational> = None;
        let mut mono: Option<CycleType> = None;
        let mut seen_any = false;

        for (pos, mut tok) in s.split_whitespace().enumerate() {
            // only the first term may carry its sign glued on: "-x2^2"
            if tok.starts_with("-x") {
                if pos > 0 {
                    return Err(Error::Parse(format!("unexpected '{tok}'")));
                }
                sign = -sign;
                tok = &tok[1..];
            }
            match tok {
                "+" | "-" => {
                    if !seen_any {
                        return Err(Error::Parse(format!("unexpected '{tok}'")));
                    }
                    flush_term(&sign, &mut coeff, &mut mono, &mut poly)?;
                    sign = if tok == "-" { -BigRational::one() } else { BigRational::one() };
                    seen_any = false;
                }
                t if t.starts_with('x') => {
                    let (idx, exp) = match t[1..].split_once('^') {
                        Some((i, e)) => (i, e),
                        None => (&t[1..], "1"),
                    };
                    let bad = || Error::Parse(format!("bad variable '{t}'"));
                    let idx: u64 = idx.parse().map_err(|_| bad())?;
                    let exp: u64 = exp.parse().map_err(|_| bad())?;
                    if idx == 0 || exp == 0 {
                        return Err(bad());
                    }
                    mono.get_or_insert_with(CycleType::one).add_cycles(idx, exp);
                    seen_any = true;
                }
                t => {
                    if coeff.is_some() || mono.is_some() {
                        return Err(Error::Parse(format!("misplaced coefficient '{t}'")));
                    }
                    coeff = Some(parse_rational(t)?);
                    seen_any = true;
                }
            }
        }
        if !seen_any {
            return Err(Error::Parse("unexpected end of input".into()));
        }
        flush_term(&sign, &mut coeff, &mut mono, &mut poly)?;
        Ok(poly)
    }
}

fn flush_term(
    sign: &BigRational,
    coeff: &mut Option<BigRational>,
    mono: &mut Option<CycleType>,
    poly: &mut CycleIndexPoly,
) -> Result<()> {
    if coeff.is_none() && mono.is_none() {
        return Err(Error::Parse("empty term".into()));
    }
    let c = coeff.take().unwrap_or_else(BigRational::one);
    poly.add_term(mono.take().unwrap_or_default(), sign * c);
    Ok(())
}

impl Add for &CycleIndexPoly {
    type Output = CycleIndexPoly;

    fn add(self, rhs: &CycleIndexPoly) -> CycleIndexPoly {
        CycleIndexPoly::add(self, rhs)
    }
}

impl Neg for &CycleIndexPoly {
    type Output = CycleIndexPoly;

    fn neg(self) -> CycleIndexPoly {
        self.scale(&-BigRational::one())
    }
}

/// Wire form: `{"denominator_free": bool, "terms": [{"coeff": "num/den",
/// "monomial": {"1": 4}}, ...]}`. Coefficients are always written as
/// `num/den`; `denominator_free` is true when every denominator is 1.
#[derive(Debug, Serialize, Deserialize)]
struct PolyJson {
    denominator_free: bool,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    monomial: BTreeMap<u64, u64>,
}

impl From<&CycleIndexPoly> for PolyJson {
    fn from(p: &CycleIndexPoly) -> Self {
        let terms = p
            .terms()
            .map(|(ct, c)| TermJson {
                coeff: format!("{}/{}", c.numer(), c.denom()),
                monomial: ct.exps.clone(),
            })
            .collect();
        PolyJson {
            denominator_free: p.terms.values().all(|c| c.is_integer()),
            terms,
        }
    }
}

impl TryFrom<PolyJson> for CycleIndexPoly {
    type Error = Error;

    fn try_from(raw: PolyJson) -> Result<Self> {
        let mut p = CycleIndexPoly::zero();
        for t in raw.terms {
            if t.monomial.keys().any(|&k| k == 0) {
                return Err(Error::Parse("variable index 0".into()));
            }
            p.add_term(t.monomial.into_iter().collect(), parse_rational(&t.coeff)?);
        }
        let integral = p.terms.values().all(|c| c.is_integer());
        if raw.denominator_free && !integral {
            return Err(Error::Parse("denominator_free set but a coefficient has a denominator".into()));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ct(pairs: &[(u64, u64)]) -> CycleType {
        pairs.iter().copied().collect()
    }

    fn z4() -> CycleIndexPoly {
        &CycleIndexPoly::monomial(ct(&[(1, 4)]), q(1, 2))
            + &CycleIndexPoly::monomial(ct(&[(1, 2), (2, 1)]), q(1, 2))
    }

    #[test]
    fn monomial_basics() {
        let p = CycleIndexPoly::monomial(ct(&[(1, 4)]), q(1, 2));
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "1/2 x1^4");
        assert_eq!(CycleIndexPoly::monomial(CycleType::one(), q(1, 1)).to_string(), "1");
        assert!(CycleIndexPoly::monomial(ct(&[(2, 3)]), q(0, 1)).is_zero());
    }

    #[test]
    fn add_and_scale() {
        let p = z4();
        assert_eq!(&p + &CycleIndexPoly::zero(), p);
        assert!((&p + &(-&p)).is_zero());
        assert_eq!(p.scale(&q(1, 1)), p);
        assert!(p.scale(&q(0, 1)).is_zero());
        let raw = &CycleIndexPoly::monomial(ct(&[(1, 4)]), q(1, 1))
            + &CycleIndexPoly::monomial(ct(&[(1, 2), (2, 1)]), q(1, 1));
        assert_eq!(raw.scale(&q(1, 2)), p);
    }

    #[test]
    fn star_monomial_rule() {
        assert_eq!(star_monomial(2, 3, 4, 5), ct(&[(4, 30)]));
        assert_eq!(star_monomial(1, 3, 1, 7), ct(&[(1, 21)]));
        assert_eq!(star_monomial(2, 1, 3, 1), ct(&[(6, 1)]));
    }

    #[test]
    fn star_product_z12() {
        let z3: CycleIndexPoly = "1/2 x1^3 + 1/2 x1 x2".parse().unwrap();
        let z12: CycleIndexPoly = "1/4 x1^12 + 1/4 x1^4 x2^4 + 1/4 x1^2 x2^5 + 1/4 x1^6 x2^3"
            .parse()
            .unwrap();
        assert_eq!(z4().star_product(&z3), z12);
        let id = CycleIndexPoly::monomial(ct(&[(1, 1)]), q(1, 1));
        assert_eq!(z12.star_product(&id), z12);
        assert_eq!(id.star_product(&z12), z12);
    }

    #[test]
    fn evaluate_examples() {
        let all = |v: i64| move |_| Some(q(v, 1));
        assert_eq!(z4().evaluate_with(all(1)).unwrap(), q(1, 1));
        assert_eq!(z4().evaluate_with(all(2)).unwrap(), q(12, 1));
        assert_eq!(CycleIndexPoly::zero().evaluate(&BTreeMap::new()).unwrap(), q(0, 1));
        let mut partial = BTreeMap::new();
        partial.insert(1, q(2, 1));
        assert_eq!(z4().evaluate(&partial), Err(Error::MissingVariable { index: 2 }));
    }

    #[test]
    fn render_formats() {
        assert_eq!(z4().render(Format::Plain), "1/2 x1^4 + 1/2 x1^2 x2");
        assert_eq!(CycleIndexPoly::zero().render(Format::Plain), "0");
        let z3: CycleIndexPoly = "1/2 x1^3 + 1/2 x1 x2".parse().unwrap();
        assert_eq!(z3.render(Format::Latex), r"\frac{1}{2}\left(x_{1}^{3}+x_{1}x_{2}\right)");
        let x1 = CycleIndexPoly::monomial(ct(&[(1, 1)]), q(1, 1));
        assert_eq!(x1.render(Format::Plain), "x1");
        assert_eq!(x1.render(Format::Latex), "x_{1}");
        let mixed: CycleIndexPoly = "2 - 1/3 x2 + 1/6 x1^2".parse().unwrap();
        assert_eq!(mixed.to_string(), "1/6 x1^2 - 1/3 x2 + 2");
        assert_eq!(mixed.to_latex(), r"\frac{1}{6}\left(x_{1}^{2}-2x_{2}+12\right)");
        assert_eq!(
            z4().render(Format::Json),
            r#"{"denominator_free":false,"terms":[{"coeff":"1/2","monomial":{"1":4}},{"coeff":"1/2","monomial":{"1":2,"2":1}}]}"#
        );
    }

    #[test]
    fn term_order() {
        // larger x1 exponent first, then absent-vs-present on the next variable
        let mut v = vec![ct(&[(1, 1), (4, 1)]), ct(&[(1, 2), (2, 1)]), ct(&[(1, 4)]), ct(&[(1, 1), (2, 2)])];
        v.sort();
        assert_eq!(v, vec![ct(&[(1, 4)]), ct(&[(1, 2), (2, 1)]), ct(&[(1, 1), (2, 2)]), ct(&[(1, 1), (4, 1)])]);
    }

    #[test]
    fn json_rejects_garbage() {
        assert!(CycleIndexPoly::from_json("{}").is_err());
        assert!(CycleIndexPoly::from_json(r#"{"denominator_free":false,"terms":[{"coeff":"1/0","monomial":{}}]}"#).is_err());
        assert!(CycleIndexPoly::from_json(r#"{"denominator_free":true,"terms":[{"coeff":"1/2","monomial":{"1":1}}]}"#).is_err());
        assert!(CycleIndexPoly::from_json(r#"{"denominator_free":false,"terms":[{"coeff":"1","monomial":{"0":1}}]}"#).is_err());
        let p = CycleIndexPoly::from_json(r#"{"denominator_free":true,"terms":[{"coeff":"3","monomial":{"2":1}}]}"#).unwrap();
        assert_eq!(p.to_string(), "3 x2");
    }

    #[test]
    fn plain_parse_errors() {
        for bad in ["", "+ x1", "x1 +", "x0", "x1^0", "x1 2", "1/0 x1", "x1 + + x2", "x1 - -x2", "-"] {
            assert!(bad.parse::<CycleIndexPoly>().is_err(), "{bad:?} parsed");
        }
        assert!("0".parse::<CycleIndexPoly>().unwrap().is_zero());
        assert_eq!("-x2^2 + x1".parse::<CycleIndexPoly>().unwrap().to_string(), "x1 - x2^2");
    }

    #[test]
    fn first_difference_reports_term() {
        let a: CycleIndexPoly = "1/2 x1^4 + 1/2 x1^2 x2".parse().unwrap();
        let b: CycleIndexPoly = "1/2 x1^4 + 1/3 x1^2 x2".parse().unwrap();
        let (ct0, l, r) = a.first_difference(&b).unwrap();
        assert_eq!(ct0, &ct(&[(1, 2), (2, 1)]));
        assert_eq!(l, Some(&q(1, 2)));
        assert_eq!(r, Some(&q(1, 3)));
        assert!(a.first_difference(&a).is_none());
    }
}
