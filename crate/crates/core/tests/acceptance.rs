//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails or overruns its time budget.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use zn_cycle_index::arith::{self, multiplicative_order_naive, pow_mod};
use zn_cycle_index::enumerate::{
    brute_force_subset_classes, count_subset_classes_by_size, count_subset_classes_total,
};
use zn_cycle_index::unit_action::{
    cycle_index_odd_prime_power, cycle_index_pow2, gamma1_elements, gamma2_elements,
    order_table_pow2_minus, order_table_pow2_plus, partial_index_gamma1, partial_index_gamma2,
};
use zn_cycle_index::{
    ctype_of_permutation_oracle, cycle_index_blocks, cycle_index_formula, cycle_index_oracle,
    orbit_of_order, CycleIndexPoly, CycleType,
};

type Check = std::result::Result<(), String>;

const Z60: &str = "1/16 x1^60 + 2/16 x1^4 x2^4 x4^12 + 1/16 x1^4 x2^28 + 2/16 x1^2 x2^5 x4^12 \
    + 1/16 x1^2 x2^29 + 2/16 x1^6 x2^3 x4^12 + 1/16 x1^6 x2^27 + 2/16 x1^12 x4^12 \
    + 1/16 x1^12 x2^24 + 1/16 x1^10 x2^25 + 1/16 x1^20 x2^20 + 1/16 x1^30 x2^15";
const Z12: &str = "1/4 x1^12 + 1/4 x1^4 x2^4 + 1/4 x1^2 x2^5 + 1/4 x1^6 x2^3";
const Z4: &str = "1/2 x1^4 + 1/2 x1^2 x2";
const Z3: &str = "1/2 x1^3 + 1/2 x1 x2";
const Z5: &str = "1/4 x1^5 + 2/4 x1 x4 + 1/4 x1 x2^2";

fn golden(s: &str) -> CycleIndexPoly {
    s.parse().expect("golden polynomial parses")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(label: &str, got: &CycleIndexPoly, want: &CycleIndexPoly) -> Check {
    match got.first_difference(want) {
        None => Ok(()),
        Some((ct, a, b)) => Err(format!("{label}: differs at {ct}: got {a:?}, want {b:?}")),
    }
}

/// `(1/|U_n|) Σ_{a ∈ subset} ctype(a)` with cycle types from explicit permutations.
fn oracle_partial_sum(n: u64, subset: &[u64]) -> CycleIndexPoly {
    let phi = arith::euler_phi(n).unwrap();
    let mut tally: HashMap<CycleType, u64> = HashMap::new();
    for &a in subset {
        *tally.entry(ctype_of_permutation_oracle(n, a).unwrap()).or_insert(0) += 1;
    }
    CycleIndexPoly::from_counts(tally, phi)
}

fn ac1_golden_z60() -> Check {
    let want = golden(Z60);
    ensure(want.len() == 12, || format!("golden has {} terms", want.len()))?;
    same("formula", &cycle_index_formula(60).unwrap(), &want)?;
    same("blocks", &cycle_index_blocks(60).unwrap(), &want)?;
    same("oracle", &cycle_index_oracle(60).unwrap(), &want)
}

fn ac2_golden_small() -> Check {
    for (n, s) in [(12u64, Z12), (4, Z4), (3, Z3), (5, Z5)] {
        let want = golden(s);
        same(&format!("formula({n})"), &cycle_index_formula(n).unwrap(), &want)?;
        same(&format!("blocks({n})"), &cycle_index_blocks(n).unwrap(), &want)?;
        same(&format!("oracle({n})"), &cycle_index_oracle(n).unwrap(), &want)?;
    }
    // the block intermediates of the worked example
    let z4 = cycle_index_pow2(2).unwrap();
    let z3 = cycle_index_odd_prime_power(3, 1).unwrap();
    let z5 = cycle_index_odd_prime_power(5, 1).unwrap();
    same("Z4", &z4, &golden(Z4))?;
    same("Z3", &z3, &golden(Z3))?;
    same("Z5", &z5, &golden(Z5))?;
    same("Z4*Z3", &z4.star_product(&z3), &golden(Z12))?;
    same("Z12*Z5", &golden(Z12).star_product(&z5), &golden(Z60))
}

fn ac3_cross_path_sweep() -> Check {
    for n in 1..=500u64 {
        let f = cycle_index_formula(n).unwrap();
        same(&format!("blocks({n})"), &cycle_index_blocks(n).unwrap(), &f)?;
        same(&format!("oracle({n})"), &cycle_index_oracle(n).unwrap(), &f)?;
    }
    Ok(())
}

fn ac4_pow2_closed_forms() -> Check {
    for m in 1..=12u32 {
        same(&format!("pow2({m})"), &cycle_index_pow2(m).unwrap(), &cycle_index_oracle(1 << m).unwrap())?;
    }
    for m in 3..=12u32 {
        let n = 1u64 << m;
        let g1 = gamma1_elements(m).unwrap();
        let g2 = gamma2_elements(m).unwrap();
        same(&format!("gamma1({m})"), &partial_index_gamma1(m).unwrap(), &oracle_partial_sum(n, &g1))?;
        same(&format!("gamma2({m})"), &partial_index_gamma2(m).unwrap(), &oracle_partial_sum(n, &g2))?;
    }
    Ok(())
}

fn ac5_odd_prime_powers() -> Check {
    let mut covered = 0;
    for p in [3u64, 5, 7, 11, 13] {
        let mut m = 1u32;
        while p.pow(m) <= 3000 {
            same(
                &format!("{p}^{m}"),
                &cycle_index_odd_prime_power(p, m).unwrap(),
                &cycle_index_oracle(p.pow(m)).unwrap(),
            )?;
            covered += 1;
            m += 1;
        }
    }
    // 3^1..3^7, 5^1..5^4, 7^1..7^4, 11^1..11^3, 13^1..13^3
    ensure(covered == 21, || format!("covered {covered} prime powers"))
}

/// Orbits of the action found by flood fill over all units.
fn brute_orbits(n: u64) -> Vec<BTreeSet<u64>> {
    let units = arith::units(n).unwrap();
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        let orbit: BTreeSet<u64> = units.iter().map(|a| arith::mul_mod(a, x, n)).collect();
        for &y in &orbit {
            seen[y as usize] = true;
        }
        out.push(orbit);
    }
    out
}

fn ac6_orbit_structure() -> Check {
    for n in 1..=200u64 {
        let brute: BTreeSet<BTreeSet<u64>> = brute_orbits(n).into_iter().collect();
        let divisors = arith::divisors(n).unwrap();
        let mut predicted = BTreeSet::new();
        for &d in &divisors {
            let orbit = orbit_of_order(n, d).unwrap();
            let phi = arith::euler_phi(d).unwrap();
            ensure(orbit.len() as u64 == phi, || format!("|orbit({n},{d})| = {} != phi = {phi}", orbit.len()))?;
            predicted.insert(orbit.into_iter().collect::<BTreeSet<u64>>());
        }
        ensure(brute == predicted, || format!("n={n}: orbit sets differ"))?;
        ensure(brute.len() == divisors.len(), || format!("n={n}: {} orbits vs {} divisors", brute.len(), divisors.len()))?;
    }
    Ok(())
}

fn ac7_per_orbit_cycle_law() -> Check {
    for n in 1..=200u64 {
        for d in arith::divisors(n).unwrap() {
            let orbit = orbit_of_order(n, d).unwrap();
            let phi = arith::euler_phi(d).unwrap();
            for a in arith::units(n).unwrap().iter() {
                let r = multiplicative_order_naive(a, d).unwrap();
                let mut visited = BTreeSet::new();
                let mut cycles = 0;
                for &start in &orbit {
                    if visited.contains(&start) {
                        continue;
                    }
                    let mut len = 0;
                    let mut x = start;
                    loop {
                        ensure(orbit.binary_search(&x).is_ok(), || format!("n={n} a={a}: left orbit {d}"))?;
                        visited.insert(x);
                        x = arith::mul_mod(a, x, n);
                        len += 1;
                        if x == start {
                            break;
                        }
                    }
                    ensure(len == r, || format!("n={n} a={a} d={d}: cycle length {len} != r = {r}"))?;
                    cycles += 1;
                }
                ensure(cycles == phi / r, || format!("n={n} a={a} d={d}: {cycles} cycles"))?;
            }
        }
    }
    Ok(())
}

fn ac8_variable_bound() -> Check {
    for n in 1..=500u64 {
        let lambda = arith::carmichael_lambda(n).unwrap();
        let z = cycle_index_formula(n).unwrap();
        ensure(z.max_index() == Some(lambda), || format!("n={n}: max index {:?} != lambda {lambda}", z.max_index()))?;
        for i in z.variables() {
            ensure(lambda % i == 0, || format!("n={n}: x{i} does not divide lambda {lambda}"))?;
        }
    }
    Ok(())
}

fn ac9_order_tables() -> Check {
    let mut checked = 0u64;
    for m in 3..=12u32 {
        let modulus = 1u64 << m;
        let half_range = 1u64 << (m - 2);
        // (s, r, has_nontrivial_r); r = 0 is b = 0
        let mut splits = vec![(0u32, 0u64)];
        for s in 0..=(m - 3) {
            let mut r = 1u64;
            while (r << s) < half_range {
                splits.push((s, r));
                r += 2;
            }
        }
        for (s, r) in splits {
            let plus = pow_mod(3, r << s, modulus);
            let minus = modulus - plus;
            for l in 1..=m {
                let dl = 1u64 << l;
                let want_plus = multiplicative_order_naive(plus % dl, dl).unwrap();
                let got_plus = order_table_pow2_plus(l, s, r != 0);
                ensure(got_plus == want_plus, || format!("+3^({s},{r}) mod 2^{l} (m={m}): {got_plus} != {want_plus}"))?;
                let want_minus = multiplicative_order_naive(minus % dl, dl).unwrap();
                let got_minus = if r == 0 { order_table_pow2_minus(l, u32::MAX) } else { order_table_pow2_minus(l, s) };
                ensure(got_minus == want_minus, || format!("-3^({s},{r}) mod 2^{l} (m={m}): {got_minus} != {want_minus}"))?;
                checked += 2;
            }
        }
    }
    ensure(checked > 0, || "nothing checked".into())
}

fn ac10_polya() -> Check {
    for n in 1..=18u64 {
        let brute = brute_force_subset_classes(n).unwrap();
        let total = count_subset_classes_total(n).unwrap();
        ensure(total == brute.total, || format!("n={n}: total {total} != brute {}", brute.total))?;
        let by_size = count_subset_classes_by_size(n).unwrap();
        ensure(by_size.by_k == brute.by_k, || format!("n={n}: by_k {:?} != brute {:?}", by_size.by_k, brute.by_k))?;
    }
    Ok(())
}

fn ac11_normalization() -> Check {
    let one = BigRational::one();
    for n in 1..=500u64 {
        for (label, z) in [
            ("formula", cycle_index_formula(n).unwrap()),
            ("blocks", cycle_index_blocks(n).unwrap()),
            ("oracle", cycle_index_oracle(n).unwrap()),
        ] {
            let at_one = z.evaluate_with(|_| Some(one.clone())).unwrap();
            ensure(at_one == one, || format!("{label}({n}) at all-ones = {at_one}"))?;
            let degrees = z.degrees();
            ensure(degrees.len() == 1 && degrees.contains(&n), || format!("{label}({n}) degrees {degrees:?}"))?;
            ensure(z.terms().all(|(_, c)| !c.is_zero() && *c > BigRational::from_integer(BigInt::zero())), || {
                format!("{label}({n}) has a non-positive coefficient")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Duration, fn() -> Check); 11] = [
        ("AC1", "golden Z(U_60) on all three paths", Duration::from_secs(1), ac1_golden_z60),
        ("AC2", "golden Z(U_12), Z(U_4), Z(U_3), Z(U_5)", Duration::from_secs(1), ac2_golden_small),
        ("AC3", "cross-path equality for n = 1..500", Duration::from_secs(60), ac3_cross_path_sweep),
        ("AC4", "2^m closed forms and Γ1/Γ2 partial sums, m <= 12", Duration::from_secs(30), ac4_pow2_closed_forms),
        ("AC5", "odd prime power closed forms, p^m <= 3000", Duration::from_secs(30), ac5_odd_prime_powers),
        ("AC6", "orbits are the order classes, n <= 200", Duration::MAX, ac6_orbit_structure),
        ("AC7", "per-orbit cycle lengths equal r_a(d), n <= 200", Duration::MAX, ac7_per_orbit_cycle_law),
        ("AC8", "max variable index is lambda(n), n <= 500", Duration::MAX, ac8_variable_bound),
        ("AC9", "±3^b order tables, m <= 12", Duration::MAX, ac9_order_tables),
        ("AC10", "Pólya counts match brute force, n <= 18", Duration::from_secs(60), ac10_polya),
        ("AC11", "all-ones evaluation and degree n, n <= 500", Duration::MAX, ac11_normalization),
    ];

    let mut failed = 0;
    for (id, what, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > budget => Err(format!("took {elapsed:.2?}, budget {budget:.0?}")),
            other => other,
        };
        match outcome {
            Ok(()) => println!("[PASS] {id:<5} {what} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id:<5} {what} ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
