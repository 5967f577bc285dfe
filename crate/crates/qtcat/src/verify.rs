//! Named verification suites behind the CLI `verify` subcommand, plus
//! the worked chain-system fixtures they re-run.
//!
//! Each suite re-derives a family of published identities from scratch
//! and reports one pass/fail line per check; suites are independent so a
//! CI job can shard them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chains::ChainSystem;
use crate::dyck::{enumerate_words, genfun};
use crate::garsia_haiman::{ac_genfun, sigma_form, sigma_form_reference, SigmaFormCase};
use crate::mchains::{chain_system, closed_coeff_c4, is_unimodal};
use crate::poly::QtPoly;
use crate::ratslope::{
    closed_coeff_rs, enumerate_paths, gm_construct, path_stats, rs_chain_system,
    rs_endpoint_sets, rs_genfun, RsCase, RsCoeffCase,
};
use crate::{Error, Result};

/// Outcome of one verification check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "suite {}: {verdict} ({} checks)\n",
            self.suite,
            self.checks.len()
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "pass": self.passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name, "pass": c.pass, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name: name.into(), pass, detail: detail.into() }
}

pub const SUITES: &[&str] =
    &["symmetry", "gh", "coeffs", "n5", "ratslope", "gm", "involution", "all"];

/// Run one named suite; `m_max` bounds the slope-parameter sweeps.
pub fn run_suite(name: &str, m_max: u32) -> Result<SuiteReport> {
    let checks = match name {
        "symmetry" => symmetry_checks(m_max),
        "gh" => gh_checks(m_max),
        "coeffs" => coeffs_checks(m_max),
        "n5" => n5_checks(m_max),
        "ratslope" => ratslope_checks(m_max),
        "gm" => gm_checks(40),
        "involution" => involution_checks(m_max, 1000),
        "all" => {
            let mut all = Vec::new();
            for s in SUITES.iter().filter(|s| **s != "all") {
                all.extend(run_suite(s, m_max)?.checks);
            }
            all
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown suite {other:?}; available: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport { suite: name.into(), checks })
}

/// The n = 3, m = 1 polynomial t^3 + qt + qt^2 + q^2 t + q^3.
pub fn c3_m1_golden() -> QtPoly {
    QtPoly::t_pow(3)
        + QtPoly::monomial(1, 1, 1)
        + QtPoly::monomial(1, 2, 1)
        + QtPoly::monomial(2, 1, 1)
        + QtPoly::q_pow(3)
}

/// C_I of the n = 4, m = 2 decomposition as published (note the repeated
/// q^4 t^4 monomial).
pub fn example_49_ci() -> QtPoly {
    let mut p = QtPoly::zero();
    for (j, k) in
        [(12, 0), (10, 1), (7, 2), (6, 3), (8, 2), (9, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (4, 4)]
    {
        p = p + QtPoly::monomial(j, k, 1);
    }
    p
}

fn symmetry_checks(m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(check(
        "c3-m1-golden",
        genfun(3, 1) == c3_m1_golden(),
        "C of n=3, m=1 equals t^3 + qt + qt^2 + q^2 t + q^3",
    ));
    let c2_ok = (1..=m_max.max(10)).all(|m| {
        let want: QtPoly =
            (0..=m).fold(QtPoly::zero(), |acc, i| acc + QtPoly::monomial(i, m - i, 1));
        genfun(2, m) == want
    });
    out.push(check("c2-closed-form", c2_ok, format!("n=2 staircase form for m <= {}", m_max.max(10))));

    let mut direct = true;
    let mut certified = true;
    for n in 1..=4usize {
        for m in 1..=m_max {
            let p = genfun(n, m);
            direct &= p.is_symmetric();
            if n >= 2 {
                match chain_system(n, m) {
                    Ok(sys) => {
                        certified &= sys.verify_symmetry();
                        let (_, _, cw) = sys.genfuns();
                        certified &= cw == p;
                    }
                    Err(_) => certified = false,
                }
            }
        }
    }
    out.push(check("direct-swap", direct, format!("C(q,t) = C(t,q) for n <= 4, m <= {m_max}")));
    out.push(check(
        "chain-certificate",
        certified,
        format!("endpoint certificate and fraction identity for n in 2..4, m <= {m_max}"),
    ));

    // the worked n = 4, m = 2 decomposition
    let words = enumerate_words(4, 2);
    let mut ex = words.len() == 55;
    if let Ok(sys) = chain_system(4, 2) {
        let (ci, ct, _) = sys.genfuns();
        ex &= ci == example_49_ci();
        ex &= ct == example_49_ci().swap_qt();
        ex &= ct == ci.swap_qt();
        if let Ok(dec) = sys.decompose() {
            let mut lengths = dec.lengths();
            lengths.sort_unstable();
            ex &= lengths == vec![0, 0, 0, 0, 0, 0, 3, 5, 7, 7, 9, 12];
        } else {
            ex = false;
        }
    } else {
        ex = false;
    }
    out.push(check("worked-n4-m2", ex, "55 words, chain lengths, C_I and C_T reproduced"));
    out
}

fn gh_checks(m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let ac1 = (1..=m_max).all(|m| ac_genfun(1, m).map(|p| p == QtPoly::one()).unwrap_or(false));
    out.push(check("ac1-is-one", ac1, format!("AC of n=1 equals 1 for m <= {m_max}")));

    let ac2 = (1..=m_max).all(|m| {
        let num = QtPoly::q_pow(m + 1) - QtPoly::t_pow(m + 1);
        let want = num.div_exact(&(QtPoly::var_q() - QtPoly::var_t())).unwrap();
        ac_genfun(2, m).map(|p| p == want).unwrap_or(false)
    });
    out.push(check("ac2-closed-form", ac2, format!("two-row staircase quotient for m <= {m_max}")));

    let m_eq = m_max.min(5);
    let mut equal = true;
    for n in 1..=4u32 {
        for m in 1..=m_eq {
            equal &= ac_genfun(n, m).map(|p| p == genfun(n as usize, m)).unwrap_or(false);
        }
    }
    out.push(check(
        "gh-equals-combinatorial",
        equal,
        format!("AC = C for n <= 4, m <= {m_eq}"),
    ));

    let m_sigma = m_max.min(5);
    let mut sigma_ok = true;
    for m in 1..=m_sigma {
        for case in [SigmaFormCase::C3, SigmaFormCase::Ac4] {
            sigma_ok &=
                sigma_form(case, m).map(|p| p == sigma_form_reference(case, m)).unwrap_or(false);
        }
    }
    out.push(check(
        "sigma-forms",
        sigma_ok,
        format!("closed sigma expressions for n=3 and n=4, m <= {m_sigma}"),
    ));

    // conjectural beyond n = 4: reported, never fatal
    for n in [5u32, 6] {
        for m in 1..=2u32 {
            let status = match ac_genfun(n, m) {
                Ok(ac) => {
                    if ac == genfun(n as usize, m) {
                        "equality holds".to_string()
                    } else {
                        "EQUALITY FAILS".to_string()
                    }
                }
                Err(e) => format!("evaluation error: {e}"),
            };
            out.push(check(
                format!("conjecture-n{n}-m{m}"),
                true,
                format!("AC vs C at n={n}, m={m} (non-fatal): {status}"),
            ));
        }
    }
    out
}

fn coeffs_checks(m_max: u32) -> Vec<CheckResult> {
    let mut formula = true;
    let mut unimodal = true;
    for m in 1..=m_max {
        let p = genfun(4, m);
        let dmax = 6 * m;
        for j in 0..=dmax + 1 {
            for k in 0..=dmax + 1 {
                formula &= BigInt::from(closed_coeff_c4(m, j, k)) == p.coeff(j, k);
            }
        }
        for d in 0..=dmax + 1 {
            unimodal &= is_unimodal(&p.antidiagonal(d));
        }
    }
    vec![
        check("closed-coefficients-n4", formula, format!("formula = brute force, m <= {m_max}")),
        check("antidiagonal-unimodality", unimodal, format!("every diagonal, m <= {m_max}")),
    ]
}

fn n5_checks(m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let result = chain_system(5, m).map(|sys| {
            let words = enumerate_words(5, m).len();
            (sys.verify_symmetry(), words)
        });
        match result {
            Ok((sym, count)) => {
                out.push(check(
                    format!("n5-m{m}"),
                    sym,
                    format!("injective shift map on {count} words, C_T(q,t) = C_I(t,q)"),
                ));
            }
            Err(e) => out.push(check(format!("n5-m{m}"), false, format!("{e}"))),
        }
    }
    out
}

fn ratslope_checks(m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let m_lemma = m_max.min(5);
    let mut lemmas = true;
    for m in 1..=m_lemma {
        for p in enumerate_paths(4 * m + 2, 4) {
            lemmas &= path_stats(&p, m, 1).h_plus == path_stats(&p, 4 * m + 2, 4).h_minus;
        }
        for p in enumerate_paths(4 * m - 1, 4) {
            lemmas &= path_stats(&p, m, 1).h_minus == path_stats(&p, 4 * m - 1, 4).h_plus;
        }
    }
    out.push(check(
        "slope-transfer-lemmas",
        lemmas,
        format!("h at integer slope matches h at rational slope pointwise, m <= {m_lemma}"),
    ));

    let cases = [RsCase::FourMPlus2, RsCase::FourMMinus1, RsCase::ThreeMMinus1];
    let mut direct = true;
    let mut certified = true;
    for m in 1..=m_max {
        for case in cases {
            let (r, s) = case.dims(m);
            direct &= rs_genfun(r, s).is_symmetric();
            certified &= rs_chain_system(case, m).map(|sys| sys.verify_symmetry()).unwrap_or(false);
        }
    }
    out.push(check(
        "rs-direct-swap",
        direct,
        format!("rational genfun symmetric for all three families, m <= {m_max}"),
    ));
    out.push(check(
        "rs-chain-certificates",
        certified,
        format!("endpoint certificates for all three families, m <= {m_max}"),
    ));

    // the worked (4m-1) x 4, m = 2 decomposition
    let mut worked = enumerate_paths(7, 4).len() == 30;
    match rs_chain_system(RsCase::FourMMinus1, 2) {
        Ok(sys) => {
            if let Ok(dec) = sys.decompose() {
                let mut lengths = dec.lengths();
                lengths.sort_unstable();
                worked &= lengths == vec![0, 0, 0, 4, 4, 6, 9];
            } else {
                worked = false;
            }
            let sets = rs_endpoint_sets(RsCase::FourMMinus1, 2);
            let gf = |ws: &[crate::ratslope::RsWord]| {
                let mut p = QtPoly::zero();
                for w in ws {
                    let (a, h) = w.stats();
                    p = p + QtPoly::monomial(a, h, 1);
                }
                p
            };
            let want_ci = QtPoly::q_pow(9)
                + QtPoly::monomial(7, 1, 1)
                + QtPoly::monomial(5, 2, 1)
                + QtPoly::monomial(6, 1, 1)
                + QtPoly::monomial(4, 2, 1)
                + QtPoly::monomial(2, 4, 1)
                + QtPoly::monomial(3, 3, 1);
            worked &= gf(&sets.initial) == want_ci;
            worked &= gf(&sets.terminal) == want_ci.swap_qt();
        }
        Err(_) => worked = false,
    }
    out.push(check("worked-7x4", worked, "30 objects, chain lengths, C_I and C_T reproduced"));

    let mut coeffs = true;
    let mut unimodal = true;
    for m in 1..=m_max {
        let p22 = rs_genfun(4 * m + 2, 4);
        let p41 = rs_genfun(4 * m - 1, 4);
        let dmax = 6 * m + 3;
        for j in 0..=dmax {
            for k in 0..=dmax {
                coeffs &=
                    BigInt::from(closed_coeff_rs(RsCoeffCase::C2m122, m, j, k)) == p22.coeff(j, k);
                coeffs &=
                    BigInt::from(closed_coeff_rs(RsCoeffCase::C4m141, m, j, k)) == p41.coeff(j, k);
            }
        }
        for d in 0..=dmax {
            unimodal &= is_unimodal(&p22.antidiagonal(d)) && is_unimodal(&p41.antidiagonal(d));
        }
    }
    out.push(check("rs-closed-coefficients", coeffs, format!("both formulas, m <= {m_max}")));
    out.push(check("rs-unimodality", unimodal, format!("every diagonal, m <= {m_max}")));

    let mut parts = true;
    for m in 1..=m_max {
        for case in cases {
            let sets = rs_endpoint_sets(case, m);
            for (label, part) in &sets.named_parts {
                for w in part {
                    parts &= crate::ratslope::rs_part_stats(*label, w)
                        .map(|st| st == w.stats())
                        .unwrap_or(false);
                }
            }
        }
    }
    out.push(check("rs-part-stats", parts, format!("closed per-part statistics, m <= {m_max}")));

    let m_sigma = m_max.min(5);
    let mut sigma_ok = true;
    for m in 1..=m_sigma {
        for case in [SigmaFormCase::C2m122, SigmaFormCase::C4m141] {
            sigma_ok &=
                sigma_form(case, m).map(|p| p == sigma_form_reference(case, m)).unwrap_or(false);
        }
    }
    out.push(check("rs-sigma-forms", sigma_ok, format!("closed sigma expressions, m <= {m_sigma}")));

    let m_inv = m_max.min(5);
    let mut multiset = true;
    for m in 1..=m_inv {
        // the slope-r/s statistics are equidistributed on every family
        // triangle; on (4m-1) x 4 the same holds at integer slope m
        for (r, s, num, den) in [
            (4 * m - 1, 4, 4 * m - 1, 4),
            (4 * m + 2, 4, 4 * m + 2, 4),
            (3 * m - 1, 3, 3 * m - 1, 3),
            (4 * m - 1, 4, m, 1),
        ] {
            let mut plus: Vec<(u32, u32)> = Vec::new();
            let mut minus: Vec<(u32, u32)> = Vec::new();
            for p in enumerate_paths(r, s) {
                let st = path_stats(&p, num, den);
                plus.push((st.area, st.h_plus));
                minus.push((st.area, st.h_minus));
            }
            plus.sort_unstable();
            minus.sort_unstable();
            multiset &= plus == minus;
        }
    }
    out.push(check(
        "h-plus-minus-equidistribution",
        multiset,
        format!("(area, h+) and (area, h-) multisets agree, m <= {m_inv}"),
    ));
    out
}

fn gm_checks(r_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut ok = true;
    let mut detail = String::new();
    for r in 4..=r_max {
        if r % 3 == 0 {
            continue;
        }
        match gm_construct(r) {
            Ok(gm) => {
                let brute = rs_genfun(r, 3);
                if gm.genfun() != brute || !brute.is_symmetric() {
                    ok = false;
                    detail = format!("mismatch at r = {r}");
                    break;
                }
            }
            Err(e) => {
                ok = false;
                detail = format!("construction failed at r = {r}: {e}");
                break;
            }
        }
    }
    if detail.is_empty() {
        detail = format!(
            "two-row bijection, weight-swapping involution, path polynomial match for r <= {r_max}"
        );
    }
    out.push(check("gorsky-mazin-height-3", ok, detail));
    out
}

/// The 15-element worked chain system with its published h.
pub fn worked_example_fifteen() -> (ChainSystem<u32>, BTreeMap<u32, u32>) {
    let a = [7, 6, 5, 6, 5, 4, 3, 2, 1, 3, 2, 7, 6, 2, 1];
    let d = [1, 2, 3, 2, 3, 4, 5, 6, 7, 5, 6, 1, 2, 6, 7];
    let stats: BTreeMap<u32, (u32, u32)> =
        (0..15).map(|i| (i as u32 + 1, (a[i], d[i]))).collect();
    let terminal: BTreeSet<u32> = [3, 9, 11, 13, 15].into_iter().collect();
    let next: BTreeMap<u32, u32> = [
        (1, 2),
        (2, 3),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (10, 11),
        (12, 13),
        (14, 15),
    ]
    .into_iter()
    .collect();
    let sys = ChainSystem::new(stats, terminal, next).expect("fixture is valid");
    let h = [(3, 10), (9, 1), (11, 4), (13, 14), (15, 12)].into_iter().collect();
    (sys, h)
}

/// The published pairing of the 15-element example.
pub fn worked_example_fifteen_pairing() -> BTreeMap<u32, u32> {
    [(1, 9), (2, 11), (3, 10), (4, 8), (5, 7), (6, 6), (12, 15), (13, 14)]
        .into_iter()
        .flat_map(|(x, y)| [(x, y), (y, x)])
        .collect()
}

/// The 18-element worked chain system. Only a - d is pinned by the text
/// (all odd); absolute statistics use a + d = 5, which reproduces the
/// published h under bidegree matching.
pub fn worked_example_eighteen() -> (ChainSystem<u32>, BTreeMap<u32, u32>) {
    let diffs: [i64; 18] =
        [5, 3, 1, -1, 3, 1, -1, -3, -5, 5, 3, 1, -1, -3, 1, -1, -3, -5];
    let stats: BTreeMap<u32, (u32, u32)> = diffs
        .iter()
        .enumerate()
        .map(|(i, &diff)| (i as u32 + 1, (((5 + diff) / 2) as u32, ((5 - diff) / 2) as u32)))
        .collect();
    let terminal: BTreeSet<u32> = [4, 9, 14, 18].into_iter().collect();
    let next: BTreeMap<u32, u32> = [
        (1, 2),
        (2, 3),
        (3, 4),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (10, 11),
        (11, 12),
        (12, 13),
        (13, 14),
        (15, 16),
        (16, 17),
        (17, 18),
    ]
    .into_iter()
    .collect();
    let sys = ChainSystem::new(stats, terminal, next).expect("fixture is valid");
    let h = [(4, 15), (9, 1), (14, 5), (18, 10)].into_iter().collect();
    (sys, h)
}

/// The pairing obtained by running the drawing procedure by hand on the
/// 18-element example (base-point independent).
pub fn worked_example_eighteen_pairing() -> BTreeMap<u32, u32> {
    [(1, 18), (2, 17), (3, 4), (5, 8), (6, 7), (9, 10), (11, 14), (12, 13), (15, 16)]
        .into_iter()
        .flat_map(|(x, y)| [(x, y), (y, x)])
        .collect()
}

/// A random chain system whose endpoints transpose: mirrored chain pairs,
/// self-mirrored chains, and fixed points.
pub fn random_symmetric_system(rng: &mut impl Rng) -> ChainSystem<u32> {
    let mut stats: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
    let mut terminal: BTreeSet<u32> = BTreeSet::new();
    let mut next: BTreeMap<u32, u32> = BTreeMap::new();
    let mut id = 0u32;
    let push_chain = |start: (u32, u32),
                          len: u32,
                          stats: &mut BTreeMap<u32, (u32, u32)>,
                          terminal: &mut BTreeSet<u32>,
                          next: &mut BTreeMap<u32, u32>,
                          id: &mut u32| {
        let first = *id + 1;
        for step in 0..=len {
            *id += 1;
            stats.insert(*id, (start.0 - step, start.1 + step));
            if step < len {
                next.insert(*id, *id + 1);
            }
        }
        terminal.insert(*id);
        first
    };
    for _ in 0..rng.gen_range(0..4) {
        // a chain and its mirror image
        let len = rng.gen_range(0..5u32);
        let d0 = rng.gen_range(0..4u32);
        let a0 = len + rng.gen_range(0..4u32);
        push_chain((a0, d0), len, &mut stats, &mut terminal, &mut next, &mut id);
        push_chain((d0 + len, a0 - len), len, &mut stats, &mut terminal, &mut next, &mut id);
    }
    for _ in 0..rng.gen_range(0..3) {
        // a self-mirrored chain crossing the midline
        let d0 = rng.gen_range(0..4u32);
        let half = rng.gen_range(0..4u32);
        push_chain((d0 + half, d0), half, &mut stats, &mut terminal, &mut next, &mut id);
    }
    for _ in 0..rng.gen_range(0..3) {
        let x = rng.gen_range(0..5u32);
        id += 1;
        stats.insert(id, (x, x));
        terminal.insert(id);
    }
    ChainSystem::new(stats, terminal, next).expect("generated system is valid")
}

fn involution_checks(m_max: u32, random_count: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let (sys15, h15) = worked_example_fifteen();
    let golden15 = sys15.canonical_h().map(|h| h == h15).unwrap_or(false)
        && sys15.involution_j(&h15) == worked_example_fifteen_pairing();
    out.push(check("worked-pairing-15", golden15, "published 15-element pairing reproduced"));

    let (sys18, h18) = worked_example_eighteen();
    let golden18 = sys18.canonical_h().map(|h| h == h18).unwrap_or(false)
        && sys18.involution_j(&h18) == worked_example_eighteen_pairing();
    let reattach18 = sys18
        .reattach(&h18)
        .map(|(chains, _)| {
            chains.contains(&vec![1, 2, 3, 7, 8, 9]) && chains.contains(&vec![15, 4])
        })
        .unwrap_or(false);
    out.push(check(
        "worked-pairing-18",
        golden18 && reattach18,
        "18-element pairing and reattached chains reproduced",
    ));

    let m_sweep = m_max.min(5);
    let mut sweep = true;
    for n in 2..=4usize {
        for m in 1..=m_sweep {
            sweep &= chain_system(n, m)
                .and_then(|sys| {
                    let h = sys.canonical_h()?;
                    Ok(involution_properties_hold(&sys, &h))
                })
                .unwrap_or(false);
        }
    }
    out.push(check(
        "involution-on-word-systems",
        sweep,
        format!("J^2 = id and stat swap on all n <= 4, m <= {m_sweep} systems"),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(0x9d2c_5681);
    let mut random_ok = true;
    for i in 0..random_count {
        let sys = random_symmetric_system(&mut rng);
        let ok = sys
            .canonical_h()
            .map(|h| involution_properties_hold(&sys, &h))
            .unwrap_or(false);
        if !ok {
            random_ok = false;
            out.push(check("randomized-systems", false, format!("failure at instance {i}")));
            break;
        }
    }
    if random_ok {
        out.push(check(
            "randomized-systems",
            true,
            format!("{random_count} randomized transposing systems"),
        ));
    }
    out
}

/// J^2 = id and the statistic swap, on every element.
pub fn involution_properties_hold<Id: crate::chains::ChainId>(
    sys: &ChainSystem<Id>,
    h: &BTreeMap<Id, Id>,
) -> bool {
    let j = sys.involution_j(h);
    sys.elements().all(|w| {
        let jw = &j[w];
        let (a, d) = sys.stat(w);
        j[jw] == *w && sys.stat(jw) == (d, a)
    })
}
