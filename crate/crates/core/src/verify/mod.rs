//! Verification suites: exhaustive or seeded sweeps that check the algebraic identities
//! of the engine exactly and report the first counterexample of every failing check.

mod combinatorics;
mod hall;
mod schur;
mod theta;

pub use combinatorics::{cosets, refinement};
pub use hall::{coha_assoc, cohm_module, hall_schur};
pub use schur::{basis_rank, merge_demazure, relations_a1, relations_jordan, transitivity};
pub use theta::{
    theta_demazure_consistency, theta_relations, theta_staircase, theta_suite, theta_triangle, StaircaseValue,
};

use crate::error::{bail, Result};
use crate::quiver::{DimVector, Quiver};
use crate::schur::{Counterexample, Key};
use serde_json::{json, Value};

/// The suites accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "relations-a1",
    "relations-jordan",
    "merge-demazure",
    "transitivity",
    "coha-assoc",
    "theta-suite",
    "cohm-module",
    "refinement",
    "cosets",
    "basis-rank",
    "hall-schur",
];

/// Suite parameters; `None` selects the suite default.
#[derive(Clone, Debug, Default)]
pub struct Config {
    /// Bound on the total dimension (or rank, for the coset suite).
    pub dim: Option<u32>,
    /// Degree bound for basis inputs.
    pub degree: Option<u32>,
    pub seed: u64,
    /// Replaces the default quivers of suites that range over several quivers.
    pub quiver: Option<(String, Quiver)>,
}

impl Config {
    pub fn dim_or(&self, default: u32) -> u32 {
        self.dim.unwrap_or(default)
    }

    pub fn degree_or(&self, default: u32) -> u32 {
        self.degree.unwrap_or(default)
    }

    fn quivers_or(&self, default: Vec<(String, Quiver)>) -> Vec<(String, Quiver)> {
        match &self.quiver {
            Some(q) => vec![q.clone()],
            None => default,
        }
    }

    fn reject_quiver(&self, suite: &str) -> Result<()> {
        if self.quiver.is_some() {
            bail!(Argument, "suite {} runs on fixed quivers and takes no --quiver", suite);
        }
        Ok(())
    }
}

/// Outcome of one named check over many cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// The first failing case.
    pub example: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_text(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{} {} ({} cases", status, self.name, self.cases);
        if self.failures > 0 {
            s.push_str(&format!(", {} failing", self.failures));
        }
        s.push(')');
        if let Some(e) = &self.example {
            s.push_str(": ");
            s.push_str(e);
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed(),
            "cases": self.cases,
            "failures": self.failures,
            "example": self.example,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report { suite: suite.to_string(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        for c in &self.checks {
            s.push_str(&c.to_text());
            s.push('\n');
        }
        s.push_str(if self.passed() { "result: PASS\n" } else { "result: FAIL\n" });
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Accumulates the cases of one check.
#[derive(Clone, Debug)]
pub struct Tally {
    check: Check,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Tally {
        Tally { check: Check { name: name.into(), cases: 0, failures: 0, example: None } }
    }

    pub fn pass(&mut self) {
        self.check.cases += 1;
    }

    pub fn fail(&mut self, detail: String) {
        self.check.cases += 1;
        self.check.failures += 1;
        if self.check.example.is_none() {
            self.check.example = Some(detail);
        }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(detail())
        }
    }

    /// `Ok(None)` passes, `Ok(Some(detail))` fails, an error fails with its message.
    pub fn record(&mut self, outcome: Result<Option<String>>) {
        match outcome {
            Ok(None) => self.pass(),
            Ok(Some(d)) => self.fail(d),
            Err(e) => self.fail(format!("error: {}", e)),
        }
    }

    pub fn finish(self) -> Check {
        self.check
    }
}

/// Runs a suite by name; unknown names are argument errors.
pub fn run_suite(name: &str, config: &Config) -> Result<Report> {
    match name {
        "relations-a1" => {
            config.reject_quiver(name)?;
            relations_a1(config)
        }
        "relations-jordan" => {
            config.reject_quiver(name)?;
            relations_jordan(config)
        }
        "merge-demazure" => merge_demazure(config),
        "transitivity" => transitivity(config),
        "coha-assoc" => coha_assoc(config),
        "theta-suite" => {
            config.reject_quiver(name)?;
            theta_suite(config)
        }
        "cohm-module" => cohm_module(config),
        "refinement" => {
            config.reject_quiver(name)?;
            refinement(config)
        }
        "cosets" => {
            config.reject_quiver(name)?;
            cosets(config)
        }
        "basis-rank" => basis_rank(config),
        "hall-schur" => hall_schur(config),
        _ => bail!(Argument, "unknown suite {:?}; expected one of {}", name, SUITES.join(", ")),
    }
}

/// The quivers the ordinary suites range over by default.
pub fn standard_quivers() -> Vec<(String, Quiver)> {
    vec![("A1".into(), Quiver::a1()), ("A2".into(), Quiver::linear(2)), ("Jordan".into(), Quiver::jordan())]
}

/// The Jordan quiver with `θ = id` under the duality structure `(σ, ς)`.
pub fn jordan_theta(sigma: i8, varsigma: i8) -> Quiver {
    Quiver::jordan().with_involution(&[], &[], &[("1", sigma)], &[("a1", varsigma)]).expect("valid duality structure")
}

/// The four duality structures on the Jordan quiver with `θ = id`.
pub fn jordan_structures() -> Vec<(String, Quiver)> {
    [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        .into_iter()
        .map(|(s, v)| (format!("Jordan(σ={},ς={})", s, v), jordan_theta(s, v)))
        .collect()
}

/// Two vertices `1 → 2` swapped by `θ`.
pub fn swapped_pair() -> Quiver {
    Quiver::new(vec!["1".into(), "2".into()], vec![("a".into(), "1".into(), "2".into())])
        .and_then(|q| q.with_involution(&[("1", "2"), ("2", "1")], &[], &[], &[]))
        .expect("valid involution")
}

/// Nonzero dimension vectors on `n` vertices with `|c| ≤ max`, by total then entries.
pub fn dims_up_to(n: usize, max: u32) -> Vec<DimVector> {
    let mut out = Vec::new();
    for total in 1..=max {
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<DimVector>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(DimVector(cur.clone()));
                return;
            }
            for a in (0..=left).rev() {
                cur[i] = a;
                rec(i + 1, left - a, cur, out);
            }
        }
        if n > 0 {
            rec(0, total, &mut cur, &mut out);
        }
    }
    out
}

fn describe<K: Key>(c: &Counterexample<K>, names: &[String]) -> String {
    format!(
        "on {} at {}: {} vs {}",
        c.input.to_text(names),
        c.source,
        c.left.to_text(names),
        c.right.to_text(names)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_keeps_the_first_failure() {
        let mut t = Tally::new("x");
        t.pass();
        t.fail("first".into());
        t.fail("second".into());
        t.record(Err(crate::Error::Argument("boom".into())));
        let c = t.finish();
        assert_eq!((c.cases, c.failures), (4, 3));
        assert_eq!(c.to_text(), "FAIL x (4 cases, 3 failing): first");
    }

    #[test]
    fn dims_are_enumerated_by_total() {
        let d = dims_up_to(2, 2);
        let txt: Vec<String> = d.iter().map(|v| v.to_text()).collect();
        assert_eq!(txt, ["[1,0]", "[0,1]", "[2,0]", "[1,1]", "[0,2]"]);
        assert_eq!(dims_up_to(1, 3).len(), 3);
    }

    #[test]
    fn unknown_suite_is_an_argument_error() {
        assert!(matches!(run_suite("nope", &Config::default()), Err(crate::Error::Argument(_))));
        let c = Config { quiver: Some(("A1".into(), Quiver::a1())), ..Config::default() };
        assert!(run_suite("relations-a1", &c).is_err());
    }
}
