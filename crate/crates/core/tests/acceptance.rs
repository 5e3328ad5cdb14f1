//! Acceptance suite: every identity the crate implements, run end to end at
//! its stated bound, one pass/fail line per criterion.
//!
//! Run with `cargo test -p valleyhop --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::collections::BTreeSet;

use valleyhop::{
    cheb_u, check_identity, enumerate, foata_o, foata_o_inv, foata_o_prime, foata_o_prime_inv,
    phi_set, theta_set, tiling_sum, CheckParams, EgfSeries, MPoly, PermSet, Var,
};

fn poly(text: &str) -> MPoly {
    text.parse().unwrap()
}

fn report(criterion: u32, name: &str, ok: bool) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("acceptance {criterion:02} {name}: {status}");
    assert!(ok, "acceptance criterion {criterion} ({name}) failed");
}

/// Run a list of named checks with optional max_n overrides; panics with
/// the first witness on failure.
fn run_checks(criterion: u32, name: &str, checks: &[(&str, Option<usize>)]) {
    for (id, max_n) in checks {
        let params = CheckParams {
            max_n: *max_n,
            order: None,
        };
        let r = check_identity(id, &params).expect("valid check id and parameters");
        if !r.passed() {
            println!("acceptance {criterion:02} {name}: FAIL");
            panic!("{id}: {}", r.witness.unwrap_or_default());
        }
    }
    report(criterion, name, true);
}

#[test]
fn criterion_01_chebyshev_table() {
    let expected = [
        "1",
        "2*t",
        "4*t^2 - s",
        "8*t^3 - 4*s*t",
        "16*t^4 - 12*s*t^2 + s^2",
        "32*t^5 - 32*s*t^3 + 6*s^2*t",
        "64*t^6 - 80*s*t^4 + 24*s^2*t^2 - s^3",
        "128*t^7 - 192*s*t^5 + 80*s^2*t^3 - 8*s^3*t",
    ];
    let s = MPoly::var(Var::S);
    let t = MPoly::var(Var::T);
    let ok = expected.iter().enumerate().all(|(n, text)| {
        let u = cheb_u(n as i64, &s, &t).unwrap();
        u == poly(text) && u.to_string() == *text
    });
    report(1, "chebyshev-table", ok);
}

#[test]
fn criterion_02_tiling_oracle() {
    let s = MPoly::var(Var::S);
    let t = MPoly::var(Var::T);
    let ok = (0..=12).all(|n| tiling_sum(n, &s, &t) == cheb_u(n as i64, &s, &t).unwrap());
    report(2, "tiling-oracle", ok);
}

#[test]
fn criterion_03_geometric_specialization() {
    run_checks(3, "geometric-specialization", &[("eq11", Some(30))]);
}

#[test]
fn criterion_04_peak_double_identity() {
    run_checks(4, "peak-double-identity", &[("t3", Some(9))]);
}

#[test]
fn criterion_05_four_statistics_and_specializations() {
    run_checks(
        5,
        "four-statistics-and-specializations",
        &[
            ("t4", Some(8)),
            ("c5a", Some(9)),
            ("c5b", Some(9)),
            ("c5c", Some(9)),
        ],
    );
}

#[test]
fn criterion_06_eulerian_log_derivative() {
    run_checks(
        6,
        "eulerian-log-derivative",
        &[("t1a", Some(9)), ("eq1", Some(9))],
    );
}

#[test]
fn criterion_07_peak_log_derivative_table() {
    run_checks(7, "peak-log-derivative-table", &[("t1b", Some(10))]);
}

#[test]
fn criterion_08_derangement_identities() {
    run_checks(
        8,
        "derangement-identities",
        &[("t7", Some(9)), ("t8", Some(8)), ("eq9-10", Some(7))],
    );
}

#[test]
fn criterion_09_involution_proof_objects() {
    run_checks(
        9,
        "involution-proof-objects",
        &[("eq5", Some(6)), ("eq7", Some(6))],
    );
}

#[test]
fn criterion_10_bijections() {
    // Phi and its cyclic analogue: exhaustive round trips with statistic
    // preservation up to n = 7.
    let r = check_identity(
        "lemma2",
        &CheckParams {
            max_n: Some(7),
            order: None,
        },
    )
    .unwrap();
    if !r.passed() {
        report(10, "bijections", false);
    }

    // Foata round trips up to n = 7.
    for n in 0..=7 {
        for p in enumerate(n, PermSet::All) {
            assert_eq!(foata_o_inv(&foata_o(&p)), p);
            assert_eq!(foata_o_prime_inv(&foata_o_prime(&p)), p);
        }
    }

    // phi_S: involution and commutation over all subset pairs, n <= 5.
    for n in 1..=5u32 {
        let subsets: Vec<BTreeSet<u32>> = (0u32..(1 << n))
            .map(|mask| (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect())
            .collect();
        for p in enumerate(n as usize, PermSet::All) {
            for s in &subsets {
                assert_eq!(phi_set(&phi_set(&p, s).unwrap(), s).unwrap(), p);
            }
            for s in &subsets {
                for t in &subsets {
                    let st = phi_set(&phi_set(&p, s).unwrap(), t).unwrap();
                    let ts = phi_set(&phi_set(&p, t).unwrap(), s).unwrap();
                    assert_eq!(st, ts);
                }
            }
        }
        for d in enumerate(n as usize, PermSet::Derangements) {
            for s in &subsets {
                assert_eq!(theta_set(&theta_set(&d, s).unwrap(), s).unwrap(), d);
            }
            for s in &subsets {
                for t in &subsets {
                    let st = theta_set(&theta_set(&d, s).unwrap(), t).unwrap();
                    let ts = theta_set(&theta_set(&d, t).unwrap(), s).unwrap();
                    assert_eq!(st, ts);
                }
            }
        }
    }
    report(10, "bijections", true);
}

#[test]
fn criterion_11_excedance_and_roselle() {
    run_checks(
        11,
        "excedance-and-roselle",
        &[("c9", Some(9)), ("c10+roselle", Some(10))],
    );
}

#[test]
fn criterion_12_cyclic_peak_and_double_descent_tables() {
    run_checks(
        12,
        "cyclic-peak-and-double-descent-tables",
        &[
            ("c11", Some(9)),
            ("c13", Some(10)),
            ("c14", Some(9)),
            ("prop12", Some(10)),
            ("tables", None),
        ],
    );
}

#[test]
fn criterion_13_minus_one_evaluations() {
    run_checks(
        13,
        "minus-one-evaluations",
        &[("t6", Some(10)), ("t16", Some(10))],
    );
}

#[test]
fn criterion_14_short_runs() {
    run_checks(14, "short-runs", &[("prop15", Some(8))]);
}

#[test]
fn criterion_15_numeric_closed_forms() {
    run_checks(
        15,
        "numeric-closed-forms",
        &[
            ("eq4", None),
            ("t3-closed", None),
            ("carlitz", None),
            ("eq8", None),
            ("zeng", None),
            ("c9-closed", None),
            ("c11-closed", None),
            ("c14-closed", None),
        ],
    );
}

#[test]
fn criterion_16_series_engine_properties() {
    // Deterministic symbolic sweeps at order <= 10.
    let palette: [&str; 8] = ["s", "t", "u", "s*t", "t^2 - s", "1/2*t", "2", "-s + 1"];
    let sample = |seed: u64, order: usize, c0: &MPoly| -> EgfSeries {
        let mut state = seed;
        EgfSeries::with_order(order, |n| {
            if n == 0 {
                return c0.clone();
            }
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            poly(palette[(state >> 33) as usize % palette.len()])
        })
    };

    let one = MPoly::one();
    let zero = MPoly::zero();
    let two = MPoly::from_int(2);
    for seed in 0..6u64 {
        let a = sample(seed, 10, &two);
        let b = sample(seed + 100, 10, &poly("3"));
        let c = sample(seed + 200, 10, &one);

        // reciprocal
        let inv = a.reciprocal().unwrap();
        assert_eq!(&a * &inv, EgfSeries::one(10), "reciprocal, seed {seed}");

        // exp/log inverse pair
        let d = sample(seed + 300, 9, &zero);
        assert_eq!(d.exp().unwrap().log().unwrap(), d, "log.exp, seed {seed}");
        assert_eq!(
            c.log().unwrap().truncate(10).exp().unwrap(),
            c,
            "exp.log, seed {seed}"
        );

        // Leibniz
        let prod = &a * &b;
        let lhs = prod.derivative().unwrap();
        let rhs = &(&a.derivative().unwrap() * &b) + &(&a * &b.derivative().unwrap());
        assert_eq!(lhs, rhs, "Leibniz, seed {seed}");

        // pow additivity with symbolic exponents, and pow by 1
        let e1 = MPoly::var(Var::W);
        let e2 = poly("y - 2*w");
        let sum = c.pow(&(&e1 + &e2)).unwrap();
        let split = &c.pow(&e1).unwrap() * &c.pow(&e2).unwrap();
        assert_eq!(sum, split, "pow additivity, seed {seed}");
        assert_eq!(c.pow(&one).unwrap(), c, "pow by one, seed {seed}");

        // commutativity and associativity up to truncation
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
    report(16, "series-engine-properties", true);
}
