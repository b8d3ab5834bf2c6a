//! The acceptance criteria, one line each. A criterion passes when every check of its
//! suites passes. Two criteria fail on exact counterexamples; the run exits nonzero only
//! if the set of failing checks differs from those.

use qsk::verify::{self, Config, Report};
use std::process::ExitCode;
use std::time::Instant;

struct Criterion {
    id: u32,
    title: &'static str,
    run: fn() -> qsk::Result<Report>,
    /// Name prefixes of the checks known to fail.
    known_failures: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "merge = (−1)^r Δ(E·f) on A1, A2, Jordan, |c|≤4, deg≤6",
        run: || verify::merge_demazure(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 2,
        title: "relations R1-R4 on A1, |c|≤5, deg≤5",
        run: || verify::relations_a1(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 3,
        title: "relations R1, R2, R3', R4 on Jordan, |c|≤5, deg≤5",
        run: || verify::relations_jordan(&Config::default()),
        known_failures: &["R4 Jordan"],
    },
    Criterion {
        id: 4,
        title: "transitivity of merges and splits along chains, |c|≤4",
        run: || verify::transitivity(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 5,
        title: "CoHA associativity, A1 antisymmetry and m(1,1) = 0",
        run: || verify::coha_assoc(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 6,
        title: "θ-suite: staircase, ▲ factorization, θΔ consistency, θR1/θR2",
        run: || verify::theta_suite(&Config::default()),
        known_failures: &["−θΔ_c(x_1 x_2^3 ⋯ x_n^(2n−1)) = (−2)^n n=3", "−θΔ_c(x_1 x_2^3 ⋯ x_n^(2n−1)) = (−2)^n n=4"],
    },
    Criterion {
        id: 7,
        title: "CoHM module axiom under all four duality structures",
        run: || verify::cohm_module(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 8,
        title: "refinement: ũ = w, ℓ(ũ) = Σℓ(w_l), C∘P = id, stabilizers",
        run: || verify::refinement(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 9,
        title: "double coset representatives against brute force, |W_c| ≤ 10^4",
        run: || verify::cosets(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 10,
        title: "Bott–Samelson columns have full rank for A1 and Jordan, c ≤ 3",
        run: || verify::basis_rank(&Config::default()),
        known_failures: &[],
    },
    Criterion {
        id: 11,
        title: "multi_mul/multi_com = apply_merge/apply_split on 100 samples",
        run: || verify::hall_schur(&Config::default()),
        known_failures: &[],
    },
];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let report = match (c.run)() {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {:>2} {}: error: {}", c.id, c.title, e);
                unexpected.push(c.id);
                continue;
            }
        };
        let failing: Vec<_> = report.checks.iter().filter(|k| !k.passed()).collect();
        let cases: usize = report.checks.iter().map(|k| k.cases).sum();
        let secs = start.elapsed().as_secs_f64();
        if failing.is_empty() {
            passed += 1;
            println!("PASS {:>2} {} ({} checks, {} cases, {:.1}s)", c.id, c.title, report.checks.len(), cases, secs);
        } else {
            let detail: Vec<String> = failing.iter().map(|k| k.to_text()).collect();
            println!("FAIL {:>2} {} ({} of {} checks failing, {:.1}s): {}", c.id, c.title, failing.len(), report.checks.len(), secs, detail.join("; "));
        }
        let known = |name: &str| c.known_failures.iter().any(|p| name.starts_with(p));
        let all_known = failing.iter().all(|k| known(&k.name));
        let all_seen = c.known_failures.iter().all(|p| failing.iter().any(|k| k.name.starts_with(p)));
        if !all_known || !all_seen {
            unexpected.push(c.id);
        }
    }
    println!("{} of {} criteria pass", passed, CRITERIA.len());
    if unexpected.is_empty() {
        println!("failing checks match the documented counterexamples");
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome in criteria {:?}", unexpected);
        ExitCode::FAILURE
    }
}
