//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use nakajima_fock::fock::{
    closed_form_constant, commutator_check, exp_vector_pairing, phi_identity_check, solve_constants,
    HeisenbergModel,
};
use nakajima_fock::numerology::{
    cycle_dims, degree_shift_check, moduli_dim, quot_fiber_dim, quot_fiber_dim_collected, CycleMode, ModuliParams,
};
use nakajima_fock::partition::{enumerate_partitions, partitions_up_to};
use nakajima_fock::rational::{binomial, int, sign, Rational};
use nakajima_fock::schubert::{
    self, euler_characteristic, excess_check, intersection_number, pairing_gf_check, unsigned_subdivision_sum,
    GrassRing,
};
use nakajima_fock::verify::{self, RankRange};
use nakajima_fock::Result;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn pieri() -> Result<Outcome> {
    let rep = verify::pieri(8, 6)?;
    let s = rep.summary();
    outcome(rep.all_pass() && s.skipped == 0, format!("{}/{} products match the oracle", s.passed, s.total))
}

fn genfun() -> Result<Outcome> {
    let rep = verify::genfun(10, 12)?;
    let s = rep.summary();
    outcome(rep.all_pass() && s.skipped == 0, format!("{}/{} identities exact", s.passed, s.total))
}

fn commutators() -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in 1..=3u32 {
        for q in [1i64, 2] {
            let model = HeisenbergModel::new(r, q);
            for i in 1..=5i64 {
                for j in 1..=5i64 {
                    for (a, b) in [(i, -j), (-i, j), (i, j), (-i, -j)] {
                        let want = if a + b == 0 {
                            let s = int(sign(r as i64 * i - 1) * r as i64 * i * q);
                            // [B_{-i}, B_i] = -[B_i, B_{-i}]
                            if a > 0 { s } else { -s }
                        } else {
                            Rational::zero()
                        };
                        let rep = commutator_check(a, b, &model, 8)?;
                        checked += rep.vectors_checked;
                        let per_degree =
                            rep.scalars.len() == 9 && rep.scalars.iter().all(|(_, s)| s.as_ref() == Some(&want));
                        if !(rep.pass && rep.expected == want && per_degree) {
                            bad.push(format!("r={r} q={q} [B{a},B{b}]"));
                        }
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} vector checks, failures {bad:?}"))
}

fn constants() -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=4u32 {
        let want: Vec<Rational> = (1..=10).map(|n| int(sign(r as i64 * n - 1) * r as i64 * n)).collect();
        if want != (1..=10).map(|n| closed_form_constant(r, n)).collect::<Vec<_>>() {
            bad.push(format!("closed form r={r}"));
        }
        for q in [1i64, 3] {
            if solve_constants(r, q, 10)? != want {
                bad.push(format!("r={r} q={q}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("failures {bad:?}"))
}

fn vertex() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut vectors = 0;
    for r in 1..=3u32 {
        for q in [1i64, 2] {
            let rep = phi_identity_check(&HeisenbergModel::new(r, q), 8)?;
            vectors += rep.vectors_checked;
            if !rep.pass || rep.vectors_checked != partitions_up_to(4).len() {
                bad.push(format!("r={r} q={q} on {:?}", rep.failures));
            }
        }
    }
    outcome(bad.is_empty(), format!("{vectors} vector checks, failures {bad:?}"))
}

fn schubert_suite() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut rings = 0;
    for r in 0..=6u32 {
        for n in 0..=r {
            rings += 1;
            let want = BigInt::from(sign((r as i64 - 1) * n as i64)) * binomial(r as u64, n as u64);
            if BigInt::from(intersection_number(r, n)?) != want {
                bad.push(format!("intersection r={r} n={n}"));
            }
            let ring = GrassRing::new(r, n)?;
            if BigInt::from(euler_characteristic(ring)?) != binomial(r as u64, n as u64) {
                bad.push(format!("euler r={r} n={n}"));
            }
            if r <= 5 && !excess_check(ring)?.pass {
                bad.push(format!("excess r={r} n={n}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{rings} grassmannians, failures {bad:?}"))
}

fn pairing_gf() -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=4u32 {
        for q in 1..=4u32 {
            if !pairing_gf_check(r, q, 10)?.pass {
                bad.push(format!("subdivision r={r} q={q}"));
            }
            for n in 0..=10 {
                if unsigned_subdivision_sum(r, q, n) != binomial((r * q) as u64, n as u64) {
                    bad.push(format!("vandermonde r={r} q={q} n={n}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("failures {bad:?}"))
}

fn cross_module() -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=3u32 {
        for q in 1..=2u32 {
            for order in [2usize, 4, 6, 8] {
                let fock = exp_vector_pairing(&HeisenbergModel::new(r, q as i64), order)?;
                if fock != schubert::pairing_target(r, q, order)? {
                    bad.push(format!("r={r} q={q} order={order}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("failures {bad:?}"))
}

fn numerology() -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=4u32 {
        let ri = r as i64;
        for c2 in -3..=3 {
            for n in 0..=6 {
                let p = ModuliParams::new(r, c2, n)?;
                if moduli_dim(&p) != 2 * ri * n - (ri - 1) * c2 {
                    bad.push(format!("dim r={r} c2={c2} n={n}"));
                }
                for i in 1..=4 {
                    if moduli_dim(&p.with_n(n + i)) - moduli_dim(&p) != 2 * ri * i {
                        bad.push(format!("step r={r} c2={c2} n={n} i={i}"));
                    }
                }
            }
        }
        for d in 1..=7 {
            for mu in enumerate_partitions(d) {
                if quot_fiber_dim(r, mu.parts())? != quot_fiber_dim_collected(r, mu.parts())? {
                    bad.push(format!("fiber r={r} {mu}"));
                }
            }
        }
        for s in 0..=5 {
            for k in 0..=5 {
                let diff = cycle_dims(r, s, k, CycleMode::Family) - cycle_dims(r, s, k, CycleMode::Fixed);
                if diff != 2 * ri * s as i64 {
                    bad.push(format!("cycle r={r} s={s} k={k}"));
                }
            }
        }
        for i in [-3i64, -2, -1, 1, 2, 3] {
            // curve classes keep the middle degree, other even classes move it
            for deg in [0u32, 2, 4, 6] {
                let rep = degree_shift_check(r, i, deg)?;
                if rep.preserved != (deg == 2) || rep.image.eval(0) - rep.source_middle.eval(0) != rep.shift {
                    bad.push(format!("middle r={r} i={i} deg={deg}"));
                }
            }
        }
    }
    if !verify::numerology(RankRange::new(1, 4))?.all_pass() {
        bad.push("numerology suite".into());
    }
    outcome(bad.is_empty(), format!("failures {bad:?}"))
}

type Criterion = (&'static str, Duration, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let criteria: [Criterion; 9] = [
        ("pieri rule vs brute force, |mu| <= 8, i <= 6", s(10), pieri),
        ("generating-function identities to order 10", s(5), genfun),
        ("heisenberg commutators, r <= 3, |i|,|j| <= 5, q in {1,2}, degree <= 8", s(30), commutators),
        ("solved constants for r <= 4, n <= 10, q in {1,3}", s(1), constants),
        ("vertex identity to order 8 on vectors of degree <= 4", s(30), vertex),
        ("grassmannian intersections r <= 6, excess r <= 5, euler characteristic", s(60), schubert_suite),
        ("pairing generating function and vandermonde, r,q <= 4, n <= 10", s(5), pairing_gf),
        ("fock pairing of exp-vectors against the binomial series, r <= 3, q <= 2", s(30), cross_module),
        ("dimension and degree bookkeeping", s(1), numerology),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        let over = if elapsed > *budget { ", over budget" } else { "" };
        println!(
            "[{}] {}. {name}: {detail} ({:.2}s{over})",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
