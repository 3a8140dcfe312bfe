//! Request handling for the `zn-cycle-index` command line tool.
//!
//! [`run`] turns a validated [`CliRequest`] into an [`Outcome`] holding the
//! exit code and the exact bytes for stdout and stderr, so the whole contract
//! can be tested without spawning a process.
//!
//! Exit codes: 0 success, 1 the computation routes disagree, 2 invalid input.

use std::fmt::Write as _;

use serde_json::{json, Value};
use zn_cycle_index::arith::{self, Factorization};
use zn_cycle_index::enumerate;
use zn_cycle_index::unit_action::{ORACLE_LIMIT, PHI_LIMIT};
use zn_cycle_index::{
    ctype_of_permutation_oracle, cycle_index_blocks, cycle_index_formula, cycle_index_oracle,
    CycleIndexPoly, CycleType, Error, Format, GroupActionSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Below or at this `n`, an unspecified method means "run all routes".
pub const DEFAULT_ALL_LIMIT: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Index,
    Orbits,
    Ctype,
    CountSubsets,
    CountOrbits,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Blocks,
    Oracle,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Blocks => "blocks",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliRequest {
    pub command: Command,
    pub n: u64,
    /// `None` picks [`Method::All`] for small `n` and [`Method::Formula`] otherwise.
    pub method: Option<Method>,
    pub a: Option<u64>,
    pub k: Option<u64>,
    /// For `count-subsets` without `k`: print every `k` instead of the total.
    pub by_size: bool,
    pub format: Format,
}

impl CliRequest {
    pub fn new(command: Command, n: u64) -> Self {
        CliRequest { command, n, method: None, a: None, k: None, by_size: false, format: Format::Plain }
    }

    pub fn effective_method(&self) -> Method {
        self.method.unwrap_or(if self.n <= DEFAULT_ALL_LIMIT { Method::All } else { Method::Formula })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `n` as a decimal integer or a product of prime powers such as
/// `2^3*5` or `2^2 * 3 * 5`. Zero, composite bases and overflow are rejected.
pub fn parse_modulus(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty modulus".into());
    }
    let n = if s.contains(['*', '^']) {
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (factor, "1"),
            };
            let base: u64 = base.parse().map_err(|_| format!("bad factor '{factor}'"))?;
            let exp: u32 = exp.parse().map_err(|_| format!("bad exponent in '{factor}'"))?;
            if !arith::is_prime(base) {
                return Err(format!("{base} is not prime"));
            }
            pairs.push((base, exp));
        }
        Factorization::from_prime_powers(&pairs).map_err(|e| e.to_string())?.n()
    } else {
        s.parse::<u64>().map_err(|_| format!("'{s}' is not a positive integer"))?
    };
    if n == 0 {
        return Err("n must be positive".into());
    }
    Ok(n)
}

pub fn run(req: &CliRequest) -> Outcome {
    match try_run(req) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::invalid(e),
    }
}

fn try_run(req: &CliRequest) -> Result<Outcome, Error> {
    if req.n == 0 {
        return Err(Error::ZeroModulus);
    }
    match req.command {
        Command::Index => index(req),
        Command::Verify => verify(req),
        Command::Orbits => orbits(req),
        Command::Ctype => ctype(req),
        Command::CountSubsets => count_subsets(req),
        Command::CountOrbits => count_orbits(req),
    }
}

fn check_phi(n: u64) -> Result<(), Error> {
    let phi = arith::euler_phi(n)?;
    if phi > PHI_LIMIT {
        return Err(Error::TooLarge { what: "phi(n)", value: phi, limit: PHI_LIMIT });
    }
    Ok(())
}

fn compute(method: Method, n: u64) -> Result<CycleIndexPoly, Error> {
    match method {
        Method::Formula => {
            check_phi(n)?;
            cycle_index_formula(n)
        }
        Method::Blocks => {
            check_phi(n)?;
            cycle_index_blocks(n)
        }
        Method::Oracle => {
            if n > ORACLE_LIMIT {
                return Err(Error::TooLarge { what: "n for the oracle", value: n, limit: ORACLE_LIMIT });
            }
            cycle_index_oracle(n)
        }
        Method::All => unreachable!("expanded by the caller"),
    }
}

/// Every route that applies to `n`, in a fixed order.
fn applicable(n: u64) -> Vec<Method> {
    let mut v = vec![Method::Formula, Method::Blocks];
    if n <= ORACLE_LIMIT {
        v.push(Method::Oracle);
    }
    v
}

struct Agreement {
    results: Vec<(Method, CycleIndexPoly)>,
    mismatch: Option<String>,
}

fn compare_all(n: u64) -> Result<Agreement, Error> {
    let results = applicable(n)
        .into_iter()
        .map(|m| Ok((m, compute(m, n)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let (first_method, first) = &results[0];
    let mismatch = results[1..].iter().find_map(|(m, p)| {
        first.first_difference(p).map(|(ct, a, b)| {
            let show = |c: Option<&_>| c.map_or("0".to_string(), ToString::to_string);
            format!(
                "mismatch: {} != {} at {ct}: {} vs {}",
                first_method.name(),
                m.name(),
                show(a),
                show(b)
            )
        })
    });
    Ok(Agreement { results, mismatch })
}

fn agreement_line(results: &[(Method, CycleIndexPoly)]) -> String {
    results.iter().map(|(m, _)| m.name()).collect::<Vec<_>>().join(" = ")
}

fn skipped_note(n: u64) -> String {
    if n > ORACLE_LIMIT {
        format!("note: oracle skipped for n > {ORACLE_LIMIT}\n")
    } else {
        String::new()
    }
}

fn index(req: &CliRequest) -> Result<Outcome, Error> {
    let method = req.effective_method();
    if method != Method::All {
        let p = compute(method, req.n)?;
        return Ok(Outcome::ok(format!("{}\n", p.render(req.format))));
    }
    let agreement = compare_all(req.n)?;
    let mut stderr = skipped_note(req.n);
    match agreement.mismatch {
        Some(msg) => {
            stderr.push_str(&msg);
            stderr.push('\n');
            Ok(Outcome { code: EXIT_MISMATCH, stdout: String::new(), stderr })
        }
        None => {
            let _ = writeln!(stderr, "{}", agreement_line(&agreement.results));
            let stdout = format!("{}\n", agreement.results[0].1.render(req.format));
            Ok(Outcome { code: EXIT_OK, stdout, stderr })
        }
    }
}

fn verify(req: &CliRequest) -> Result<Outcome, Error> {
    let agreement = compare_all(req.n)?;
    let paths: Vec<&str> = agreement.results.iter().map(|(m, _)| m.name()).collect();
    let code = if agreement.mismatch.is_some() { EXIT_MISMATCH } else { EXIT_OK };
    let stdout = match req.format {
        Format::Json => {
            let v = json!({
                "n": req.n,
                "agree": agreement.mismatch.is_none(),
                "paths": paths,
                "mismatch": agreement.mismatch,
            });
            format!("{v}\n")
        }
        Format::Plain | Format::Latex => match &agreement.mismatch {
            Some(msg) => format!("{msg}\n"),
            None => format!("{}\n", agreement_line(&agreement.results)),
        },
    };
    Ok(Outcome { code, stdout, stderr: skipped_note(req.n) })
}

fn orbits(req: &CliRequest) -> Result<Outcome, Error> {
    let table = zn_cycle_index::orbits(req.n)?;
    let mut out = String::new();
    match req.format {
        Format::Plain => {
            for (d, elems) in table.orbits() {
                let list: Vec<String> = elems.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "d={d}: {}", list.join(" "));
            }
        }
        Format::Latex => {
            for (d, elems) in table.orbits() {
                let list: Vec<String> = elems.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "\\Omega_{{{}}}^{{{d}}}=\\{{{}\\}}", req.n, list.join(","));
            }
        }
        Format::Json => {
            let orbits: serde_json::Map<String, Value> =
                table.orbits().iter().map(|(d, e)| (d.to_string(), json!(e))).collect();
            let _ = writeln!(out, "{}", json!({ "n": req.n, "orbits": orbits }));
        }
    }
    Ok(Outcome::ok(out))
}

fn ctype_json(ct: &CycleType) -> Value {
    let m: serde_json::Map<String, Value> = ct.iter().map(|(l, c)| (l.to_string(), json!(c))).collect();
    Value::Object(m)
}

fn ctype(req: &CliRequest) -> Result<Outcome, Error> {
    let a = req.a.ok_or_else(|| Error::Parse("ctype needs a unit a".into()))?;
    let spec = GroupActionSpec::new(req.n)?;
    let ct = spec.ctype_of_unit(a)?;
    let oracle = if req.n <= ORACLE_LIMIT { Some(ctype_of_permutation_oracle(req.n, a)?) } else { None };
    let agree = oracle.as_ref().map(|o| *o == ct);
    let code = if agree == Some(false) { EXIT_MISMATCH } else { EXIT_OK };
    let stdout = match req.format {
        Format::Plain => {
            let tail = match (&oracle, agree) {
                (Some(_), Some(true)) => "oracle: agree".to_string(),
                (Some(o), _) => format!("oracle: {o}, disagree"),
                (None, _) => "oracle: skipped".to_string(),
            };
            format!("{ct} ({tail})\n")
        }
        Format::Latex => format!("{}\n", ct.to_latex()),
        Format::Json => {
            let v = json!({
                "n": req.n,
                "a": a,
                "ctype": ctype_json(&ct),
                "oracle": oracle.as_ref().map(ctype_json),
                "agree": agree,
            });
            format!("{v}\n")
        }
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn count_subsets(req: &CliRequest) -> Result<Outcome, Error> {
    check_phi(req.n)?;
    if let Some(k) = req.k {
        if k > req.n {
            return Err(Error::SubsetSizeTooLarge { k, n: req.n });
        }
    }
    let out = match (req.k, req.by_size) {
        (None, false) => {
            let total = enumerate::count_subset_classes_total(req.n)?;
            match req.format {
                Format::Json => format!("{}\n", json!({ "n": req.n, "total": total.to_string() })),
                _ => format!("{total}\n"),
            }
        }
        (k, _) => {
            let counts = enumerate::count_subset_classes_by_size(req.n)?;
            match (k, req.format) {
                (Some(k), Format::Json) => format!(
                    "{}\n",
                    json!({ "n": req.n, "k": k, "count": counts.by_k[k as usize].to_string() })
                ),
                (Some(k), _) => format!("{}\n", counts.by_k[k as usize]),
                (None, Format::Json) => {
                    let by_k: Vec<String> = counts.by_k.iter().map(|c| c.to_string()).collect();
                    format!("{}\n", json!({ "n": req.n, "total": counts.total.to_string(), "by_k": by_k }))
                }
                (None, _) => {
                    let mut s = String::new();
                    for (k, c) in counts.by_k.iter().enumerate() {
                        let _ = writeln!(s, "k={k}: {c}");
                    }
                    let _ = writeln!(s, "total: {}", counts.total);
                    s
                }
            }
        }
    };
    Ok(Outcome::ok(out))
}

fn count_orbits(req: &CliRequest) -> Result<Outcome, Error> {
    let count = enumerate::count_element_orbits(req.n)?;
    let out = match req.format {
        Format::Json => format!("{}\n", json!({ "n": req.n, "orbits": count })),
        _ => format!("{count}\n"),
    };
    Ok(Outcome::ok(out))
}
