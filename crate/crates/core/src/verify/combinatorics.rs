//! Suites on the Weyl group combinatorics: refinement data and double cosets.

use super::theta::fixed_vertex;
use super::{dims_up_to, swapped_pair, Config, Report, Tally};
use crate::error::Result;
use crate::quiver::{sub_vectors, Comp, DimVector, Quiver};
use crate::weyl::{
    kinds, min_double_coset_reps, parabolic, theta_kinds, theta_parabolic, GroupTable, OrbitDatum, Parabolic,
    Partitioning, ThetaOrbitDatum, WeylElement,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Largest group order the coset suite partitions by brute force.
pub const MAX_GROUP_ORDER: u128 = 10_000;

fn check_orbit_datum(t: &mut Tally, od: &OrbitDatum) {
    let cd = od.refinement_datum().crossing_datum();
    let (ut, len) = cd.utilde();
    t.check(ut == od.w && len == ut.length(), || {
        format!("e={} d={} w={}: ũ={} with Σℓ(w_l)={}", od.e, od.d, od.w, ut, len)
    });
}

fn check_partitioning(cp: &mut Tally, stab: &mut Tally, d: &Comp, ws: &[WeylElement]) {
    let p = Partitioning::of_comp(d);
    cp.check(p.to_comp() == *d, || format!("C(P({})) = {}", d, p.to_comp()));
    let wd = parabolic(d);
    for w in ws {
        let fixes = p.act(w) == p;
        stab.check(fixes == wd.contains(w), || format!("d={} w={}: fixes P(d) = {}, in W_d = {}", d, w, fixes, !fixes));
    }
}

/// A random composition of `c`, built by peeling off random nonzero sub-vectors.
fn random_comp(c: &DimVector, rng: &mut ChaCha8Rng) -> Result<Comp> {
    let mut parts = Vec::new();
    let mut rest = c.clone();
    while !rest.is_zero() {
        let options: Vec<DimVector> = sub_vectors(&rest).into_iter().filter(|v| !v.is_zero()).collect();
        let p = options.choose(rng).expect("a nonzero remainder has nonzero sub-vectors").clone();
        rest = rest.checked_sub(&p).expect("sub-vector");
        parts.push(p);
    }
    Comp::new(parts)
}

/// `ũ = w` with `ℓ(ũ) = Σ ℓ(w_l)`, `C∘P = id` and `Stab(P(d)) = W_d`: exhaustively on one
/// vertex, sampled on `A_3`, and `ũ = w` for isotropic data on one θ-fixed vertex.
pub fn refinement(config: &Config) -> Result<Report> {
    let max = config.dim_or(5);
    let samples = 200;
    let mut report = Report::new("refinement");
    let scope = format!("one vertex |c|≤{}", max);
    let mut ut = Tally::new(format!("ũ = w and ℓ(ũ) = Σℓ(w_l) {}", scope));
    let mut cp = Tally::new(format!("C∘P = id {}", scope));
    let mut stab = Tally::new(format!("Stab(P(d)) = W_d {}", scope));
    for n in 1..=max {
        let c = DimVector(vec![n]);
        for od in OrbitDatum::all(&c) {
            check_orbit_datum(&mut ut, &od);
        }
        let all = Parabolic::whole(&kinds(&c)).elements();
        for d in Comp::all_of(&c) {
            check_partitioning(&mut cp, &mut stab, &d, &all);
        }
    }
    for t in [ut, cp, stab] {
        report.push(t.finish());
    }

    let q = Quiver::linear(3);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let scope = format!("A3 |c|≤6 seed={} samples={}", config.seed, samples);
    let mut ut = Tally::new(format!("ũ = w and ℓ(ũ) = Σℓ(w_l) {}", scope));
    let mut cp = Tally::new(format!("C∘P = id {}", scope));
    let mut stab = Tally::new(format!("Stab(P(d)) = W_d {}", scope));
    let totals = dims_up_to(q.n_vertices(), 6);
    for _ in 0..samples {
        let c = totals.choose(&mut rng).expect("nonempty");
        let (e, d) = (random_comp(c, &mut rng)?, random_comp(c, &mut rng)?);
        let whole = Parabolic::whole(&kinds(c));
        let reps = min_double_coset_reps(&whole, &parabolic(&e), &parabolic(&d));
        let w = reps.choose(&mut rng).expect("the identity is a representative").clone();
        check_orbit_datum(&mut ut, &OrbitDatum::new(e.clone(), d.clone(), w)?);
        let all = whole.elements();
        let ws: Vec<WeylElement> = all.choose_multiple(&mut rng, 20).cloned().collect();
        check_partitioning(&mut cp, &mut stab, &d, &ws);
        check_partitioning(&mut cp, &mut stab, &e, &ws);
    }
    for t in [ut, cp, stab] {
        report.push(t.finish());
    }

    let q = fixed_vertex(1);
    let mut ut = Tally::new("θ: ũ = w and ℓ(ũ) = Σℓ(w_l) one θ-fixed vertex c≤7");
    for n in 1..=7 {
        for od in ThetaOrbitDatum::all(&q, &DimVector(vec![n]))? {
            let outcome = od.refinement_datum(&q).and_then(|rd| rd.crossing_datum(&q)).and_then(|cd| cd.utilde(&q));
            match outcome {
                Ok((u, len)) => ut.check(u == od.w && len == u.length(), || format!("e={} d={} w={}: ũ={} with Σℓ(w_l)={}", od.e, od.d, od.w, u, len)),
                Err(e) => ut.fail(format!("e={} d={} w={}: {}", od.e, od.d, od.w, e)),
            }
        }
    }
    report.push(ut.finish());
    Ok(report)
}

/// Descent-based double coset representatives against brute-force partitioning, for every
/// pair of parabolics in one setting.
fn compare_cosets(t: &mut Tally, label: &str, whole: &Parabolic, parabolics: &[(String, Parabolic)]) {
    let table = GroupTable::new(whole);
    let outcomes: Vec<Option<String>> = parabolics
        .par_iter()
        .flat_map_iter(|(en, pe)| {
            let table = &table;
            parabolics.iter().map(move |(dn, pd)| {
                let fast = min_double_coset_reps(whole, pe, pd);
                let slow = table.double_coset_reps(pe, pd);
                (fast != slow).then(|| format!("{} e={} d={}: {} representatives vs {} by brute force", label, en, dn, fast.len(), slow.len()))
            })
        })
        .collect();
    for o in outcomes {
        t.check(o.is_none(), || o.unwrap());
    }
}

fn order(whole: &Parabolic) -> u128 {
    whole.kinds.iter().map(|k| k.order()).product()
}

/// `min_double_coset_reps` against brute force for every pair of compositions in each
/// setting whose group has order at most [`MAX_GROUP_ORDER`]: one vertex with `n ≤ dim`,
/// two vertices with `|c| ≤ min(dim, 5)`, one θ-fixed vertex of rank `≤ dim` and the
/// swapped pair with `n ≤ min(dim, 4)`.
pub fn cosets(config: &Config) -> Result<Report> {
    let max = config.dim_or(7);
    let mut report = Report::new("cosets");

    let mut t = Tally::new(format!("ordinary one vertex n≤{}", max));
    for n in 1..=max {
        let c = DimVector(vec![n]);
        let whole = Parabolic::whole(&kinds(&c));
        if order(&whole) > MAX_GROUP_ORDER {
            continue;
        }
        let ps: Vec<(String, Parabolic)> = Comp::all_of(&c).iter().map(|d| (d.to_text(), parabolic(d))).collect();
        compare_cosets(&mut t, &format!("c={}", c), &whole, &ps);
    }
    report.push(t.finish());

    let two = max.min(5);
    let mut t = Tally::new(format!("ordinary two vertices |c|≤{}", two));
    for c in dims_up_to(2, two) {
        let whole = Parabolic::whole(&kinds(&c));
        let ps: Vec<(String, Parabolic)> = Comp::all_of(&c).iter().map(|d| (d.to_text(), parabolic(d))).collect();
        compare_cosets(&mut t, &format!("c={}", c), &whole, &ps);
    }
    report.push(t.finish());

    for sigma in [1, -1] {
        let q = fixed_vertex(sigma);
        let mut t = Tally::new(format!("θ one fixed vertex σ={} rank≤{}", sigma, max));
        for n in 1..=2 * max + 1 {
            let c = DimVector(vec![n]);
            let whole = Parabolic::whole(&theta_kinds(&q, &c)?);
            if order(&whole) > MAX_GROUP_ORDER {
                continue;
            }
            let ps = q.all_iso(&c)?.iter().map(|d| Ok((d.to_text(), theta_parabolic(&q, d)?))).collect::<Result<Vec<_>>>()?;
            compare_cosets(&mut t, &format!("c={}", c), &whole, &ps);
        }
        report.push(t.finish());
    }

    let q = swapped_pair();
    let pair = max.min(4);
    let mut t = Tally::new(format!("θ swapped pair n≤{}", pair));
    for n in 1..=pair {
        let c = DimVector(vec![n, n]);
        let whole = Parabolic::whole(&theta_kinds(&q, &c)?);
        let ps = q.all_iso(&c)?.iter().map(|d| Ok((d.to_text(), theta_parabolic(&q, d)?))).collect::<Result<Vec<_>>>()?;
        compare_cosets(&mut t, &format!("c={}", c), &whole, &ps);
    }
    report.push(t.finish());
    Ok(report)
}
