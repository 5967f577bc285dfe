//! Acceptance suite: one test per advertised guarantee, each printing a
//! PASS line (visible under --nocapture) with its measured runtime.
//! Every comparison is bit-exact integer arithmetic.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qtcat::dyck::{enumerate_words, genfun};
use qtcat::garsia_haiman::{ac_genfun, sigma_form, sigma_form_reference, SigmaFormCase};
use qtcat::mchains::{chain_system, closed_coeff_c4, is_unimodal};
use qtcat::poly::QtPoly;
use qtcat::ratslope::{
    closed_coeff_rs, enumerate_paths, gm_construct, path_stats, rs_chain_system,
    rs_endpoint_sets, rs_genfun, RsCase, RsCoeffCase,
};
use qtcat::verify::{
    c3_m1_golden, example_49_ci, involution_properties_hold, random_symmetric_system,
    worked_example_eighteen, worked_example_eighteen_pairing, worked_example_fifteen,
    worked_example_fifteen_pairing,
};

fn report(criterion: u32, start: Instant, what: &str) {
    println!("ACCEPTANCE {criterion}: PASS ({:.2?}) - {what}", start.elapsed());
}

#[test]
fn criterion_01_small_closed_forms() {
    let start = Instant::now();
    assert_eq!(genfun(3, 1), c3_m1_golden());
    for m in 1..=10u32 {
        let want =
            (0..=m).fold(QtPoly::zero(), |acc, i| acc + QtPoly::monomial(i, m - i, 1));
        assert_eq!(genfun(2, m), want, "m={m}");
    }
    report(1, start, "C(3,1) golden and the n=2 staircase for m <= 10, bit-exact");
}

#[test]
fn criterion_02_worked_n4_m2_decomposition() {
    let start = Instant::now();
    assert_eq!(enumerate_words(4, 2).len(), 55);
    let sys = chain_system(4, 2).unwrap();
    let mut lengths = sys.decompose().unwrap().lengths();
    lengths.sort_unstable();
    assert_eq!(lengths, vec![0, 0, 0, 0, 0, 0, 3, 5, 7, 7, 9, 12]);
    let (ci, ct, _) = sys.genfuns();
    assert_eq!(ci, example_49_ci());
    assert_eq!(ct, example_49_ci().swap_qt());
    assert_eq!(ct, ci.swap_qt());
    report(2, start, "55 words, chain lengths {12,9,7,7,5,3,0^6}, C_I and C_T exact");
}

#[test]
fn criterion_03_joint_symmetry_two_routes() {
    let start = Instant::now();
    for n in 1..=4usize {
        for m in 1..=10u32 {
            let p = genfun(n, m);
            assert!(p.is_symmetric(), "direct swap failed at n={n} m={m}");
            if n >= 2 {
                // construction validates the Thm-2.1 hypotheses; the call
                // checks C_T = C_I(t,q) and cross-multiplies the fraction
                // identity internally
                let sys = chain_system(n, m).unwrap();
                assert!(sys.verify_symmetry(), "certificate failed at n={n} m={m}");
                let (_, _, cw) = sys.genfuns();
                assert_eq!(cw, p, "system polynomial mismatch at n={n} m={m}");
            }
        }
    }
    report(3, start, "direct swap and chain certificate agree for n <= 4, m <= 10");
}

#[test]
fn criterion_04_garsia_haiman_equality() {
    let start = Instant::now();
    for n in 1..=4u32 {
        for m in 1..=5u32 {
            assert_eq!(ac_genfun(n, m).unwrap(), genfun(n as usize, m), "n={n} m={m}");
        }
    }
    for m in 1..=10u32 {
        assert_eq!(ac_genfun(1, m).unwrap(), QtPoly::one(), "AC(1,{m})");
        let num = QtPoly::q_pow(m + 1) - QtPoly::t_pow(m + 1);
        let staircase = num.div_exact(&(QtPoly::var_q() - QtPoly::var_t())).unwrap();
        assert_eq!(ac_genfun(2, m).unwrap(), staircase, "AC(2,{m})");
    }
    // beyond n = 4 the equality is conjectural: report, never fail
    for n in [5u32, 6] {
        for m in 1..=2u32 {
            let ac = ac_genfun(n, m).expect("sum must still be a polynomial");
            assert!(ac.is_symmetric(), "AC symmetry is a theorem, n={n} m={m}");
            let status = if ac == genfun(n as usize, m) { "holds" } else { "FAILS" };
            println!("ACCEPTANCE 4 (report): AC = C at n={n}, m={m}: {status} (conjectural, non-fatal)");
        }
    }
    report(4, start, "AC = C for n <= 4, m <= 5; AC(1)=1 and the AC(2) quotient for m <= 10");
}

#[test]
fn criterion_05_n4_coefficient_formula() {
    let start = Instant::now();
    for m in 1..=10u32 {
        let p = genfun(4, m);
        let dmax = 6 * m + 1;
        for j in 0..=dmax {
            for k in 0..=dmax {
                assert_eq!(
                    BigInt::from(closed_coeff_c4(m, j, k)),
                    p.coeff(j, k),
                    "m={m} ({j},{k})"
                );
            }
        }
        for d in 1..=dmax {
            assert!(is_unimodal(&p.antidiagonal(d)), "m={m} d={d}");
        }
    }
    report(5, start, "closed n=4 coefficients match brute force for m <= 10, all diagonals unimodal");
}

#[test]
fn criterion_06_n5_conjectural_map() {
    let start = Instant::now();
    for m in 1..=10u32 {
        // construction proves the map is injective on W minus T, lands in
        // W, and shifts (area, dinv) by (-1, +1)
        let sys = chain_system(5, m).unwrap();
        assert!(sys.verify_symmetry(), "C_T(q,t) = C_I(t,q) failed at m={m}");
        assert_eq!(sys.len(), enumerate_words(5, m).len());
    }
    report(6, start, "n=5 map injective with (-1,+1) shift and C_T = C_I(t,q) for m <= 10");
}

#[test]
fn criterion_07_involution() {
    let start = Instant::now();
    let (sys15, h15) = worked_example_fifteen();
    assert_eq!(sys15.canonical_h().unwrap(), h15);
    assert_eq!(sys15.involution_j(&h15), worked_example_fifteen_pairing());

    let (sys18, h18) = worked_example_eighteen();
    assert_eq!(sys18.canonical_h().unwrap(), h18);
    assert_eq!(sys18.involution_j(&h18), worked_example_eighteen_pairing());

    for n in 2..=4usize {
        for m in 1..=5u32 {
            let sys = chain_system(n, m).unwrap();
            let h = sys.canonical_h().unwrap();
            assert!(involution_properties_hold(&sys, &h), "n={n} m={m}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for i in 0..1000 {
        let sys = random_symmetric_system(&mut rng);
        let h = sys.canonical_h().unwrap();
        assert!(involution_properties_hold(&sys, &h), "random instance {i}");
    }
    report(7, start, "worked pairings reproduced; J^2 = id and stat swap on word systems and 1000 random systems");
}

#[test]
fn criterion_08_rational_slope() {
    let start = Instant::now();
    // pointwise slope-transfer lemmas, m <= 5
    for m in 1..=5u32 {
        for p in enumerate_paths(4 * m + 2, 4) {
            assert_eq!(
                path_stats(&p, m, 1).h_plus,
                path_stats(&p, 4 * m + 2, 4).h_minus,
                "m={m} {p}"
            );
        }
        for p in enumerate_paths(4 * m - 1, 4) {
            assert_eq!(
                path_stats(&p, m, 1).h_minus,
                path_stats(&p, 4 * m - 1, 4).h_plus,
                "m={m} {p}"
            );
        }
    }
    // joint symmetry of all three families, both routes, m <= 10
    for m in 1..=10u32 {
        for case in [RsCase::FourMPlus2, RsCase::FourMMinus1, RsCase::ThreeMMinus1] {
            let (r, s) = case.dims(m);
            assert!(rs_genfun(r, s).is_symmetric(), "{case} m={m} direct");
            let sys = rs_chain_system(case, m).unwrap();
            assert!(sys.verify_symmetry(), "{case} m={m} certificate");
        }
    }
    // the worked (4m-1) x 4, m = 2 decomposition
    assert_eq!(enumerate_paths(7, 4).len(), 30);
    let sys = rs_chain_system(RsCase::FourMMinus1, 2).unwrap();
    let mut lengths = sys.decompose().unwrap().lengths();
    lengths.sort_unstable();
    assert_eq!(lengths, vec![0, 0, 0, 4, 4, 6, 9]);
    let sets = rs_endpoint_sets(RsCase::FourMMinus1, 2);
    let gf = |ws: &[qtcat::ratslope::RsWord]| {
        ws.iter().fold(QtPoly::zero(), |acc, w| {
            let (a, h) = w.stats();
            acc + QtPoly::monomial(a, h, 1)
        })
    };
    let want_ci = QtPoly::q_pow(9)
        + QtPoly::monomial(7, 1, 1)
        + QtPoly::monomial(5, 2, 1)
        + QtPoly::monomial(6, 1, 1)
        + QtPoly::monomial(4, 2, 1)
        + QtPoly::monomial(2, 4, 1)
        + QtPoly::monomial(3, 3, 1);
    assert_eq!(gf(&sets.initial), want_ci);
    assert_eq!(gf(&sets.terminal), want_ci.swap_qt());
    // both coefficient formulas against brute force, m <= 10
    for m in 1..=10u32 {
        let p22 = rs_genfun(4 * m + 2, 4);
        let p41 = rs_genfun(4 * m - 1, 4);
        let dmax = 6 * m + 3;
        for j in 0..=dmax {
            for k in 0..=dmax {
                assert_eq!(
                    BigInt::from(closed_coeff_rs(RsCoeffCase::C2m122, m, j, k)),
                    p22.coeff(j, k),
                    "2m122 m={m} ({j},{k})"
                );
                assert_eq!(
                    BigInt::from(closed_coeff_rs(RsCoeffCase::C4m141, m, j, k)),
                    p41.coeff(j, k),
                    "4m141 m={m} ({j},{k})"
                );
            }
        }
        for d in 1..=dmax {
            assert!(is_unimodal(&p22.antidiagonal(d)), "2m122 m={m} d={d}");
            assert!(is_unimodal(&p41.antidiagonal(d)), "4m141 m={m} d={d}");
        }
    }
    report(8, start, "slope lemmas, three symmetric families with certificates, worked 7x4 data, coefficient formulas for m <= 10");
}

#[test]
fn criterion_09_height_three_construction() {
    let start = Instant::now();
    let mut tested = 0;
    for r in 4..=40u32 {
        if r % 3 == 0 {
            continue;
        }
        // construction asserts f: X -> Y bijective, the reflection
        // involution, and that g swaps area with h+
        let gm = gm_construct(r).unwrap();
        let brute = rs_genfun(r, 3);
        assert_eq!(gm.genfun(), brute, "r={r}");
        assert!(brute.is_symmetric(), "r={r}");
        tested += 1;
    }
    assert_eq!(tested, 25);
    report(9, start, "two-row construction valid and matching brute force for every r <= 40 coprime to 3");
}

#[test]
fn criterion_10_sigma_forms() {
    let start = Instant::now();
    for m in 1..=5u32 {
        for case in [
            SigmaFormCase::C3,
            SigmaFormCase::Ac4,
            SigmaFormCase::C2m122,
            SigmaFormCase::C4m141,
        ] {
            assert_eq!(
                sigma_form(case, m).unwrap(),
                sigma_form_reference(case, m),
                "{case:?} m={m}"
            );
        }
    }
    report(10, start, "all four closed sigma expressions normalize to their brute-force polynomials, m <= 5");
}

#[test]
fn bonus_n4_dispatch_agrees_with_piecewise_form() {
    let start = Instant::now();
    use qtcat::mchains::{chain_map, chain_map_n4_piecewise};
    for m in 1..=10u32 {
        for w in enumerate_words(4, m) {
            assert_eq!(chain_map(&w).ok(), chain_map_n4_piecewise(&w).ok(), "m={m} {w:?}");
        }
    }
    report(0, start, "n=4 chain map equals its four-branch piecewise form for m <= 10");
}

#[test]
fn bonus_n5_endpoint_sets_are_complement_defined() {
    // the n = 5 initial set is only available as the image complement;
    // make sure it matches the chain system's derived initial set
    let start = Instant::now();
    for m in 1..=3u32 {
        let sets = qtcat::mchains::endpoint_sets(5, m).unwrap();
        let sys = chain_system(5, m).unwrap();
        let derived: BTreeSet<_> = sys.initial().iter().cloned().collect();
        let closed: BTreeSet<_> = sets.initial.into_iter().collect();
        assert_eq!(closed, derived, "m={m}");
    }
    report(0, start, "n=5 endpoint sets consistent between module routes");
}
