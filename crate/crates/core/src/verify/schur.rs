//! Suites on the ordinary Schur algebra: merges through Demazure operators, the defining
//! relations, transitivity and the rank of the Bott–Samelson operators.

use super::{describe, dims_up_to, standard_quivers, Config, Report, Tally};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::quiver::{Comp, DimVector, Quiver};
use crate::schur::realization::{cup, merge, split};
use crate::schur::{basis_independence_check, Realization, SchurAlgebra, SchurWord};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

fn binomial(n: u32, k: u32) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// `|D^{∧_k d}_d| = ∏_i binom(d_k(i) + d_{k+1}(i), d_k(i))`, counted independently of the
/// coset enumeration.
fn merge_coset_count(d: &Comp, k: usize) -> u64 {
    let (a, b) = (d.part(k - 1), d.part(k));
    (0..a.len()).map(|i| binomial(a.get(i) + b.get(i), a.get(i))).product()
}

/// Compares two words on every basis input up to `bound`.
pub(crate) fn compare<R: Realization>(
    r: &R,
    t: &mut Tally,
    w1: &SchurWord<R::Key>,
    w2: &SchurWord<R::Key>,
    bound: u32,
) {
    let names = r.names();
    t.record(r.operator_difference(w1, w2, bound).map(|diff| {
        diff.map(|c| format!("{} vs {} {}", w1.to_text(names), w2.to_text(names), describe(&c, names)))
    }));
}

/// R1 and R2 at every position of every composition of the total, plus the isotropic
/// variants where the second coarsening absorbs the last finite part.
pub(crate) fn associativity<R: Realization>(r: &R, r1: &mut Tally, r2: &mut Tally, bound: u32) {
    for d in r.keys() {
        for k in 1.. {
            let (Ok(a), Ok(b)) = (r.wedge_at(&d, k), r.wedge_at(&d, k + 1)) else { break };
            let (t1, t2) = match (r.wedge_at(&a, k), r.wedge_at(&b, k)) {
                (Ok(t1), Ok(t2)) => (t1, t2),
                (x, y) => {
                    r1.fail(format!("coarsenings of {} at {} fail: {:?} {:?}", d, k, x.err(), y.err()));
                    continue;
                }
            };
            if t1 != t2 {
                r1.fail(format!("{} coarsens to {} and {} at {}", d, t1, t2, k));
                continue;
            }
            compare(r, r1, &merge(&a, &t1).star(&merge(&d, &a)), &merge(&b, &t1).star(&merge(&d, &b)), bound);
            compare(r, r2, &split(&a, &d).star(&split(&t1, &a)), &split(&b, &d).star(&split(&t1, &b)), bound);
        }
    }
}

/// Every chain `d = d^0 ≻ d^1 ≻ ⋯ ≻ e` of elementary coarsenings.
pub(crate) fn chains<R: Realization>(r: &R, d: &R::Key, e: &R::Key) -> Vec<Vec<R::Key>> {
    if d == e {
        return vec![vec![e.clone()]];
    }
    let mut out = Vec::new();
    for k in 1.. {
        let Ok(n) = r.wedge_at(d, k) else { break };
        if r.refines(&n, e).is_some() {
            for mut tail in chains(r, &n, e) {
                tail.insert(0, d.clone());
                out.push(tail);
            }
        }
    }
    out
}

/// Composed elementary merges (and splits) along every chain of length at least two
/// against the direct merge (split).
pub(crate) fn chain_transitivity<R: Realization>(r: &R, merges: &mut Tally, splits: &mut Tally, bound: u32) {
    let keys = r.keys();
    for d in &keys {
        for e in &keys {
            if d == e || r.refines(d, e).is_none() {
                continue;
            }
            for chain in chains(r, d, e) {
                if chain.len() <= 2 {
                    continue;
                }
                let mut wm = merge(&chain[0], &chain[1]);
                let mut ws = split(&chain[1], &chain[0]);
                for p in chain.windows(2).skip(1) {
                    wm = merge(&p[0], &p[1]).star(&wm);
                    ws = ws.star(&split(&p[1], &p[0]));
                }
                compare(r, merges, &wm, &merge(d, e), bound);
                compare(r, splits, &ws, &split(e, d), bound);
            }
        }
    }
}

/// Merges as symmetrizers against the Demazure route, on every elementary merge.
pub fn merge_demazure(config: &Config) -> Result<Report> {
    let (max, deg) = (config.dim_or(4), config.degree_or(6));
    let mut report = Report::new("merge-demazure");
    for (name, q) in config.quivers_or(standard_quivers()) {
        let mut t = Tally::new(format!("merge = (−1)^r Δ(E·f) {} |c|≤{} deg≤{}", name, max, deg));
        for c in dims_up_to(q.n_vertices(), max) {
            let z = SchurAlgebra::new(&q, &c)?;
            for d in z.keys() {
                for k in 1..d.len() {
                    let e = d.wedge_at(k)?;
                    let basis = z.basis(&d, deg)?;
                    let outcomes: Vec<Result<Option<String>>> = basis
                        .par_iter()
                        .map(|f| {
                            let (a, b) = (z.merge_component(&d, &e, f)?, z.merge_via_demazure(&d, &e, f)?);
                            Ok((a != b).then(|| {
                                format!("{} → {} on {}: {} vs {}", d, e, f.to_text(&q.vertices), a.to_text(&q.vertices), b.to_text(&q.vertices))
                            }))
                        })
                        .collect();
                    outcomes.into_iter().for_each(|o| t.record(o));
                }
            }
        }
        report.push(t.finish());
    }
    Ok(report)
}

/// R1, R2, R3 (hole removal, or R3' with constant `|D|` when `jordan`) and R4 for the
/// one-vertex quiver `q`.
fn relations(suite: &str, label: &str, q: &Quiver, jordan: bool, config: &Config) -> Result<Report> {
    let (max, bound) = (config.dim_or(5), config.degree_or(5));
    let scope = format!("{} |c|≤{} deg≤{}", label, max, bound);
    let mut r1 = Tally::new(format!("R1 {}", scope));
    let mut r2 = Tally::new(format!("R2 {}", scope));
    let mut r3 = Tally::new(format!("{} {}", if jordan { "R3'" } else { "R3" }, scope));
    let mut r4 = Tally::new(format!("R4 {}", scope));
    for n in 1..=max {
        let z = SchurAlgebra::new(q, &DimVector(vec![n]))?;
        associativity(&z, &mut r1, &mut r2, bound);
        for d in z.keys() {
            for k in 1..d.len() {
                let e = d.wedge_at(k)?;
                let constant = if jordan { merge_coset_count(&d, k) } else { 0 };
                let rhs = cup(&e, Polynomial::constant(BigRational::from_integer(BigInt::from(constant))));
                compare(&z, &mut r3, &merge(&d, &e).star(&split(&e, &d)), &rhs, bound);
            }
            for k in 1..=d.len().saturating_sub(3) {
                let (lhs, rhs) = ladder(&d, k)?;
                compare(&z, &mut r4, &lhs, &rhs, bound);
            }
        }
    }
    let mut report = Report::new(suite);
    for t in [r1, r2, r3, r4] {
        report.push(t.finish());
    }
    Ok(report)
}

/// Both sides of the ladder relation for the parts `a, b, c, d = d_k, …, d_{k+3}`, from
/// `(…, a+b, c+d, …)` to `(…, a+c, b+d, …)`.
pub fn ladder(d: &Comp, k: usize) -> Result<(SchurWord<Comp>, SchurWord<Comp>)> {
    let parts = d.parts();
    let (pre, suf) = (&parts[..k - 1], &parts[k + 3..]);
    let [a, b, c, e] = [&parts[k - 1], &parts[k], &parts[k + 1], &parts[k + 2]];
    let mk = |mid: Vec<DimVector>| -> Result<Comp> { Comp::new(pre.iter().cloned().chain(mid).chain(suf.iter().cloned()).collect()) };
    let source = mk(vec![a + b, c + e])?;
    let target = mk(vec![a + c, b + e])?;
    let l1 = mk(vec![a + b, c.clone(), e.clone()])?;
    let l2 = mk(vec![&(a + b) + c, e.clone()])?;
    let l3 = mk(vec![a + c, b.clone(), e.clone()])?;
    let m1 = mk(vec![a.clone(), b.clone(), c + e])?;
    let m2 = mk(vec![a.clone(), &(b + c) + e])?;
    let m3 = mk(vec![a.clone(), c.clone(), b + e])?;
    let lhs = merge(&l3, &target).star(&split(&l2, &l3)).star(&merge(&l1, &l2)).star(&split(&source, &l1));
    let rhs = merge(&m3, &target).star(&split(&m2, &m3)).star(&merge(&m1, &m2)).star(&split(&source, &m1));
    Ok((lhs, rhs))
}

pub fn relations_a1(config: &Config) -> Result<Report> {
    relations("relations-a1", "A1", &Quiver::a1(), false, config)
}

pub fn relations_jordan(config: &Config) -> Result<Report> {
    relations("relations-jordan", "Jordan", &Quiver::jordan(), true, config)
}

/// Composed elementary merges and splits along every refinement chain.
pub fn transitivity(config: &Config) -> Result<Report> {
    let (max, bound) = (config.dim_or(4), config.degree_or(4));
    let mut report = Report::new("transitivity");
    for (name, q) in config.quivers_or(standard_quivers()) {
        let mut merges = Tally::new(format!("merge chains {} |c|≤{} deg≤{}", name, max, bound));
        let mut splits = Tally::new(format!("split chains {} |c|≤{} deg≤{}", name, max, bound));
        for c in dims_up_to(q.n_vertices(), max) {
            chain_transitivity(&SchurAlgebra::new(&q, &c)?, &mut merges, &mut splits, bound);
        }
        report.push(merges.finish());
        report.push(splits.finish());
    }
    Ok(report)
}

/// Full column rank of the Bott–Samelson operators for every one-vertex total up to `dim`.
pub fn basis_rank(config: &Config) -> Result<Report> {
    let (max, bound) = (config.dim_or(3), config.degree_or(4));
    let default = vec![("A1".to_string(), Quiver::a1()), ("Jordan".to_string(), Quiver::jordan())];
    let mut report = Report::new("basis-rank");
    for (name, q) in config.quivers_or(default) {
        for c in dims_up_to(q.n_vertices(), max) {
            let mut t = Tally::new(format!("full rank {} c={} deg≤{}", name, c, bound));
            let mut note = None;
            match basis_independence_check(&SchurAlgebra::new(&q, &c)?, bound) {
                Ok(r) => {
                    t.check(r.is_full_rank(), || format!("rank {} of {} columns", r.rank(), r.columns()));
                    note = Some(format!("rank {} of {} columns", r.rank(), r.columns()));
                }
                Err(e) => t.fail(format!("error: {}", e)),
            }
            let mut check = t.finish();
            check.example = check.example.or(note);
            report.push(check);
        }
    }
    Ok(report)
}
