//! The isotropic suite: the staircase Demazure value, the factorization of `▲_c`, the
//! Demazure form of the isotropic symmetrizer and the isotropic relations.

use super::schur::{associativity, chain_transitivity};
use super::{swapped_pair, Config, Report, Tally};
use crate::error::Result;
use crate::poly::classes::{theta_r, theta_s};
use crate::poly::invariants::invariant_basis;
use crate::poly::{demazure_section, rat, DemazureSum, Frame, Polynomial, Symmetrizer, Var};
use crate::quiver::{DimVector, IsoComp, Quiver};
use crate::schur::MixedSchurAlgebra;
use crate::weyl::theta_parabolic;
use rayon::prelude::*;

/// `−θΔ_c(x_1 x_2³ ⋯ x_n^{2n−1})` in the short-root frame of rank `n`, next to `(−2)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseValue {
    pub n: usize,
    pub value: Polynomial,
    pub expected: Polynomial,
}

impl StaircaseValue {
    pub fn holds(&self) -> bool {
        self.value == self.expected
    }
}

/// The A_1 quiver with one θ-fixed vertex of sign `σ`.
pub fn fixed_vertex(sigma: i8) -> Quiver {
    Quiver::a1().with_involution(&[], &[], &[("1", sigma)], &[]).expect("valid duality structure")
}

pub fn theta_staircase(max_n: usize) -> Result<Vec<StaircaseValue>> {
    let q = fixed_vertex(1);
    (1..=max_n)
        .map(|n| {
            let frame = Frame::theta(&q, &DimVector(vec![2 * n as u32 + 1]))?;
            let mut f = Polynomial::one();
            for k in 1..=n {
                f = &f * &Polynomial::var(Var::new(0, k)).pow(2 * k as u32 - 1);
            }
            let value = -DemazureSum::new(&frame, &frame.whole()).apply(&f)?;
            Ok(StaircaseValue { n, value, expected: Polynomial::int((-2i64).pow(n as u32)) })
        })
        .collect()
}

/// Quivers with one θ-fixed vertex (both signs) and totals of rank `≤ max_rank`, plus the
/// swapped pair with totals `(n, n)`, `n ≤ max_rank`.
fn theta_cases(max_rank: u32) -> Vec<(String, Quiver, DimVector)> {
    let mut out = Vec::new();
    for sigma in [1, -1] {
        for c in 1..=2 * max_rank + 1 {
            out.push((format!("σ={}", sigma), fixed_vertex(sigma), DimVector(vec![c])));
        }
    }
    for n in 1..=max_rank {
        out.push(("swapped pair".to_string(), swapped_pair(), DimVector(vec![n, n])));
    }
    out
}

/// The isotropic compositions `(a | b)` of `c` with at most one finite part.
fn two_block(q: &Quiver, c: &DimVector) -> Result<Vec<IsoComp>> {
    Ok(q.all_iso(c)?.into_iter().filter(|d| d.len() <= 1).collect())
}

/// `▲_c = (−1)^{θr_d} ▲_d θS_d` for every two-block isotropic composition `d = (a | b)`.
pub fn theta_triangle(max_rank: u32) -> Result<Report> {
    let mut t = Tally::new(format!("▲_c = (−1)^θr ▲_d θS_d rank≤{}", max_rank));
    for (label, q, c) in theta_cases(max_rank) {
        let frame = Frame::theta(&q, &c)?;
        let big = frame.triangle(&frame.whole()).to_polynomial();
        for d in two_block(&q, &c)? {
            let small = frame.triangle(&theta_parabolic(&q, &d)?).to_polynomial();
            let ts = theta_s(&q, &d)?;
            let sign = if ts.degree() % 2 == 0 { 1 } else { -1 };
            let rhs = (&small * &ts.to_polynomial()).scale(&rat(sign));
            t.check(big == rhs, || format!("{} c={} d={}", label, c, d));
        }
    }
    let mut report = Report::new("theta-triangle");
    report.push(t.finish());
    Ok(report)
}

/// `θΔ_c(f·h) = (−1)^{θr_d} θ⋔(f/θS_d)` for `θW_d`-invariant `f`, with `h` found by the
/// bounded search and checked to satisfy `θΔ_d(h) = 1`.
pub fn theta_demazure_consistency(max_rank: u32, deg: u32) -> Result<Report> {
    let mut sections = Tally::new(format!("θΔ_d(h) = 1 rank≤{}", max_rank));
    let mut t = Tally::new(format!("θΔ_c(f·h) = (−1)^θr θ⋔(f/θS_d) rank≤{} deg≤{}", max_rank, deg));
    for (label, q, c) in theta_cases(max_rank) {
        let frame = Frame::theta(&q, &c)?;
        let whole = frame.whole();
        let full = DemazureSum::new(&frame, &whole);
        for d in two_block(&q, &c)? {
            let p = theta_parabolic(&q, &d)?;
            let h = match demazure_section(&frame, &p) {
                Ok(h) => h,
                Err(e) => {
                    sections.fail(format!("{} c={} d={}: {}", label, c, d, e));
                    continue;
                }
            };
            let dh = DemazureSum::new(&frame, &p).apply(&h)?;
            sections.check(dh == Polynomial::one(), || format!("{} c={} d={}: θΔ_d(h) = {}", label, c, d, dh.to_text(&q.vertices)));
            let sym = Symmetrizer::new(whole.min_left_coset_reps(&p), &Polynomial::one(), &theta_s(&q, &d)?)?;
            let sign = rat(if theta_r(&q, &d)? % 2 == 0 { 1 } else { -1 });
            let outcomes: Vec<Result<Option<String>>> = invariant_basis(&frame, &p, deg)
                .par_iter()
                .map(|f| {
                    let lhs = full.apply(&(f * &h))?;
                    let rhs = sym.apply(f)?.scale(&sign);
                    Ok((lhs != rhs).then(|| {
                        let n = &q.vertices;
                        format!("{} c={} d={} f={}: {} vs {}", label, c, d, f.to_text(n), lhs.to_text(n), rhs.to_text(n))
                    }))
                })
                .collect();
            outcomes.into_iter().for_each(|o| t.record(o));
        }
    }
    let mut report = Report::new("theta-demazure");
    report.push(sections.finish());
    report.push(t.finish());
    Ok(report)
}

/// R1/θR1, R2/θR2 and transitivity of isotropic merges and splits on the one-vertex
/// quivers with a θ-fixed vertex, for totals of rank `≤ max_rank`: A_1 with both signs
/// and the Jordan quiver under all four duality structures.
pub fn theta_relations(max_rank: u32, bound: u32) -> Result<Report> {
    let mut quivers = vec![("A1(σ=1)".to_string(), fixed_vertex(1)), ("A1(σ=-1)".to_string(), fixed_vertex(-1))];
    quivers.extend(super::jordan_structures());
    let mut report = Report::new("theta-relations");
    for (name, q) in quivers {
        let scope = format!("{} rank≤{} deg≤{}", name, max_rank, bound);
        let mut r1 = Tally::new(format!("R1/θR1 {}", scope));
        let mut r2 = Tally::new(format!("R2/θR2 {}", scope));
        let mut tm = Tally::new(format!("θ merge chains {}", scope));
        let mut ts = Tally::new(format!("θ split chains {}", scope));
        for c in 1..=2 * max_rank + 1 {
            let z = MixedSchurAlgebra::new(&q, &DimVector(vec![c]))?;
            associativity(&z, &mut r1, &mut r2, bound);
            chain_transitivity(&z, &mut tm, &mut ts, bound);
        }
        for t in [r1, r2, tm, ts] {
            report.push(t.finish());
        }
    }
    Ok(report)
}

/// The whole isotropic suite with its default ranges.
pub fn theta_suite(config: &Config) -> Result<Report> {
    let mut report = Report::new("theta-suite");
    for s in theta_staircase(4)? {
        let mut t = Tally::new(format!("−θΔ_c(x_1 x_2^3 ⋯ x_n^(2n−1)) = (−2)^n n={}", s.n));
        t.check(s.holds(), || format!("value {}, expected {}", s.value.to_text(&[]), s.expected.to_text(&[])));
        report.push(t.finish());
    }
    report.extend(theta_triangle(3)?);
    let rank = config.dim_or(3);
    report.extend(theta_demazure_consistency(rank.min(2), config.degree_or(5))?);
    report.extend(theta_relations(rank, config.degree_or(4))?);
    Ok(report)
}
