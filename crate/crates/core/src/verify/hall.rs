//! Suites on the Hall structures: associativity of the CoHA, the module axiom of the
//! CoHM and the agreement of the Hall and Schur sides on random elements.

use super::{dims_up_to, jordan_structures, standard_quivers, Config, Report, Tally};
use crate::error::Result;
use crate::hall::{Coha, CohaElement, Cohm};
use crate::poly::{Polynomial, Rat};
use crate::quiver::{Comp, DimVector, Quiver};
use crate::schur::{Realization, SchurAlgebra};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashMap;

/// Orbit-sum basis of `H_a` in degrees `≤ deg`, memoized per dimension vector.
struct Bases<'a> {
    coha: &'a Coha,
    deg: u32,
    cache: HashMap<DimVector, Vec<Polynomial>>,
}

impl<'a> Bases<'a> {
    fn new(coha: &'a Coha, deg: u32) -> Bases<'a> {
        Bases { coha, deg, cache: HashMap::new() }
    }

    fn of(&mut self, a: &DimVector) -> Result<Vec<Polynomial>> {
        if let Some(b) = self.cache.get(a) {
            return Ok(b.clone());
        }
        let b = self.coha.algebra(a)?.basis(&Comp::new(vec![a.clone()])?, self.deg)?;
        self.cache.insert(a.clone(), b.clone());
        Ok(b)
    }
}

fn text(q: &Quiver, f: &Polynomial) -> String {
    f.to_text(&q.vertices)
}

/// Associativity on all triples of basis elements, agreement of the two multiplication
/// routes and, for `A_1`, antisymmetry on `H_1 × H_1`.
pub fn coha_assoc(config: &Config) -> Result<Report> {
    let (max, deg) = (config.dim_or(4), config.degree_or(4));
    let mut report = Report::new("coha-assoc");
    for (name, q) in config.quivers_or(standard_quivers()) {
        let h = Coha::new(&q);
        let mut bases = Bases::new(&h, deg);
        let dims = dims_up_to(q.n_vertices(), max);
        let mut assoc = Tally::new(format!("m(m(f,g),h) = m(f,m(g,h)) {} |c|≤{} deg≤{}", name, max, deg));
        let mut routes = Tally::new(format!("Demazure route = shuffle route {} |c|≤{} deg≤{}", name, max, deg));
        for a in &dims {
            for b in &dims {
                if (a + b).total() > max {
                    continue;
                }
                let (fa, fb) = (bases.of(a)?, bases.of(b)?);
                let pairs: Vec<(&Polynomial, &Polynomial)> = fa.iter().flat_map(|f| fb.iter().map(move |g| (f, g))).collect();
                let outcomes: Vec<Result<Option<String>>> = pairs
                    .par_iter()
                    .map(|(f, g)| {
                        let (x, y) = (h.mul(a, f, b, g)?, h.mul_shuffle(a, f, b, g)?);
                        Ok((x != y).then(|| format!("{}·{} in H_{}·H_{}: {} vs {}", text(&q, f), text(&q, g), a, b, text(&q, &x), text(&q, &y))))
                    })
                    .collect();
                outcomes.into_iter().for_each(|o| routes.record(o));
                for c in &dims {
                    if (&(a + b) + c).total() > max {
                        continue;
                    }
                    let fc = bases.of(c)?;
                    let triples: Vec<(&Polynomial, &Polynomial, &Polynomial)> =
                        pairs.iter().flat_map(|&(f, g)| fc.iter().map(move |k| (f, g, k))).collect();
                    let outcomes: Vec<Result<Option<String>>> = triples
                        .par_iter()
                        .map(|&(f, g, k)| {
                            let lhs = h.mul(&(a + b), &h.mul(a, f, b, g)?, c, k)?;
                            let rhs = h.mul(a, f, &(b + c), &h.mul(b, g, c, k)?)?;
                            Ok((lhs != rhs).then(|| {
                                format!("({}, {}, {}) in H_{}, H_{}, H_{}: {} vs {}", text(&q, f), text(&q, g), text(&q, k), a, b, c, text(&q, &lhs), text(&q, &rhs))
                            }))
                        })
                        .collect();
                    outcomes.into_iter().for_each(|o| assoc.record(o));
                }
            }
        }
        report.push(assoc.finish());
        report.push(routes.finish());
    }
    if config.quiver.is_none() {
        let q = Quiver::a1();
        let h = Coha::new(&q);
        let one = DimVector(vec![1]);
        let basis = Bases::new(&h, 6).of(&one)?;
        let mut anti = Tally::new("m(f,g) = −m(g,f) A1 H_1×H_1 deg≤6");
        for f in &basis {
            for g in &basis {
                let (x, y) = (h.mul(&one, f, &one, g)?, h.mul(&one, g, &one, f)?);
                anti.check(x == -y.clone(), || format!("f={} g={}: {} vs {}", text(&q, f), text(&q, g), text(&q, &x), text(&q, &y)));
            }
        }
        report.push(anti.finish());
        let mut unit = Tally::new("m(1,1) = 0 A1 H_1·H_1");
        let m11 = h.mul(&one, &Polynomial::one(), &one, &Polynomial::one())?;
        unit.check(m11.is_zero(), || format!("m(1,1) = {}", text(&q, &m11)));
        report.push(unit.finish());
    }
    Ok(report)
}

/// `act(m(f,g), v) = act(f, act(g, v))` and agreement of the two action routes.
pub fn cohm_module(config: &Config) -> Result<Report> {
    let (max, deg) = (config.dim_or(7), config.degree_or(4));
    let mut report = Report::new("cohm-module");
    for (name, q) in config.quivers_or(jordan_structures()) {
        let m = Cohm::new(&q)?;
        let vm = q.inv()?.vertex_map.clone();
        let fits = |v: &DimVector| v.0.iter().all(|&x| x <= max);
        let dims: Vec<DimVector> = dims_up_to(q.n_vertices(), q.n_vertices() as u32 * max).into_iter().filter(|a| fits(a)).collect();
        let mut fixed = vec![DimVector::zero(q.n_vertices())];
        fixed.extend(dims.iter().filter(|b| b.is_theta_fixed(&vm) && q.iso(Vec::new(), (*b).clone()).is_ok()).cloned());
        let mut bases = Bases::new(m.coha(), deg);
        let module_basis = |b: &DimVector| -> Result<Vec<Polynomial>> {
            if b.is_zero() {
                return Ok(vec![Polynomial::one()]);
            }
            m.algebra(b)?.basis(&q.iso(Vec::new(), b.clone())?, deg)
        };
        let scope = format!("{} D(a)+D(a')+b≤{} deg≤{}", name, max, deg);
        let mut axiom = Tally::new(format!("act(m(f,g),v) = act(f,act(g,v)) {}", scope));
        let mut routes = Tally::new(format!("θ⋔ route = θΔ route {}", scope));
        for b in &fixed {
            let vb = module_basis(b)?;
            for a in &dims {
                let ab = &a.double(&vm) + b;
                if !fits(&ab) || q.iso(vec![a.clone()], b.clone()).is_err() {
                    continue;
                }
                let fa = bases.of(a)?;
                let pairs: Vec<(&Polynomial, &Polynomial)> = fa.iter().flat_map(|f| vb.iter().map(move |v| (f, v))).collect();
                let outcomes: Vec<Result<Option<String>>> = pairs
                    .par_iter()
                    .map(|&(f, v)| {
                        let (x, y) = (m.act(a, f, b, v)?, m.act_demazure(a, f, b, v)?);
                        Ok((x != y).then(|| format!("f={} in H_{}, v={} in θM_{}: {} vs {}", text(&q, f), a, text(&q, v), b, text(&q, &x), text(&q, &y))))
                    })
                    .collect();
                outcomes.into_iter().for_each(|o| routes.record(o));
                for a2 in &dims {
                    if !fits(&(&a2.double(&vm) + &ab)) || q.iso(vec![a.clone(), a2.clone()], b.clone()).is_err() {
                        continue;
                    }
                    let fa2 = bases.of(a2)?;
                    let triples: Vec<(&Polynomial, &Polynomial, &Polynomial)> =
                        pairs.iter().flat_map(|&(f, v)| fa2.iter().map(move |g| (f, g, v))).collect();
                    let outcomes: Vec<Result<Option<String>>> = triples
                        .par_iter()
                        .map(|&(f, g, v)| {
                            let lhs = m.act(&(a + a2), &m.coha().mul(a, f, a2, g)?, b, v)?;
                            let rhs = m.act(a, f, &(&a2.double(&vm) + b), &m.act(a2, g, b, v)?)?;
                            Ok((lhs != rhs).then(|| {
                                format!("f={} g={} v={} ({}, {}, {}): {} vs {}", text(&q, f), text(&q, g), text(&q, v), a, a2, b, text(&q, &lhs), text(&q, &rhs))
                            }))
                        })
                        .collect();
                    outcomes.into_iter().for_each(|o| axiom.record(o));
                }
            }
        }
        report.push(axiom.finish());
        report.push(routes.finish());
    }
    Ok(report)
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let p = loop {
        let p: i64 = rng.gen_range(-5..=5);
        if p != 0 {
            break p;
        }
    };
    Rat::new(BigInt::from(p), BigInt::from(rng.gen_range(1..=3i64)))
}

/// A random element supported on `keys` with random rational combinations of basis
/// elements of degree `≤ deg`.
pub fn random_element(z: &SchurAlgebra, keys: &[Comp], deg: u32, rng: &mut ChaCha8Rng) -> Result<CohaElement> {
    let mut x = CohaElement::zero();
    for k in keys {
        let basis = z.basis(k, deg)?;
        let mut f = Polynomial::zero();
        for _ in 0..rng.gen_range(1..=3) {
            f.add_scaled(basis.choose(rng).expect("constants are in every basis"), &random_rat(rng));
        }
        x.add(k.clone(), &f);
    }
    Ok(x)
}

/// `multi_mul`/`multi_com` against `apply_merge`/`apply_split` on seeded random elements.
pub fn hall_schur(config: &Config) -> Result<Report> {
    let (max, deg, samples) = (config.dim_or(4), config.degree_or(4), 100);
    let mut report = Report::new("hall-schur");
    for (name, q) in config.quivers_or(standard_quivers()) {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let h = Coha::new(&q);
        let dims = dims_up_to(q.n_vertices(), max);
        let scope = format!("{} |c|≤{} deg≤{} seed={} samples={}", name, max, deg, config.seed, samples);
        let mut muls = Tally::new(format!("multi_mul = apply_merge {}", scope));
        let mut coms = Tally::new(format!("multi_com = apply_split {}", scope));
        for _ in 0..samples {
            let c = dims.choose(&mut rng).expect("at least one total");
            let z = h.algebra(c)?;
            let keys = z.keys();
            let d = keys.choose(&mut rng).expect("at least one composition").clone();
            let coarser: Vec<Comp> = keys.iter().filter(|e| d.refines(e).is_some()).cloned().collect();
            let e = coarser.choose(&mut rng).expect("d refines itself").clone();
            let mut support: Vec<Comp> = Vec::new();
            for k in [&d, &e] {
                if rng.gen_bool(0.75) && !support.contains(k) {
                    support.push(k.clone());
                }
            }
            for _ in 0..rng.gen_range(0..=2) {
                let k = keys.choose(&mut rng).expect("nonempty").clone();
                if !support.contains(&k) {
                    support.push(k);
                }
            }
            let x = random_element(&z, &support, deg, &mut rng)?;
            let names = &q.vertices;
            let hm = h.multi_mul(&d, &e, &x)?;
            let sm = z.apply_merge(&d, &e, &x)?;
            muls.check(hm == sm, || format!("{} → {} on {}: {} vs {}", d, e, x.to_text(names), hm.to_text(names), sm.to_text(names)));
            let hc = h.multi_com(&e, &d, &x)?;
            let sc = z.apply_split(&e, &d, &x)?;
            coms.check(hc == sc, || format!("{} → {} on {}: {} vs {}", e, d, x.to_text(names), hc.to_text(names), sc.to_text(names)));
        }
        report.push(muls.finish());
        report.push(coms.finish());
    }
    Ok(report)
}
