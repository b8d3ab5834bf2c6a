//! Bott–Samelson elements, operator matrices over invariant bases and the rank test for
//! their linear independence.

use super::graded::{Graded, Key};
use super::ordinary::SchurAlgebra;
use super::realization::Realization;
use super::word::{Generator, SchurWord};
use crate::error::{bail, Result};
use crate::poly::{Monomial, Polynomial, Rat};
use crate::quiver::Comp;
use crate::weyl::{CrossingDatum, OrbitDatum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// `⋏_{ê}^{e} ⋆ cross^{j_1}_{e^2} ⋆ ⋯ ⋆ cross^{j_k}_{e^{2k}} ⋆ c ⋆ ⋎_{d}^{d̂}`.
///
/// Merges and splits between equal compositions and the cup with `1` are identities and
/// are left out; if nothing remains the word is the idempotent `e_d`.
pub fn bott_samelson_element(
    z: &SchurAlgebra,
    datum: &OrbitDatum,
    crossing: &CrossingDatum,
    c: &Polynomial,
) -> Result<SchurWord<Comp>> {
    let e_hat = crossing.e(0);
    let d_hat = crossing.e(2 * crossing.k());
    if e_hat.refines(&datum.e).is_none() || d_hat.refines(&datum.d).is_none() {
        bail!(Argument, "crossing datum does not belong to the orbit datum ({}, {}, {})", datum.e, datum.d, datum.w);
    }
    z.check_invariant(d_hat, c)?;
    let mut gens = Vec::new();
    if e_hat != &datum.e {
        gens.push(Generator::Merge { from: e_hat.clone(), to: datum.e.clone() });
    }
    for l in 1..=crossing.k() {
        gens.push(Generator::Cross { at: crossing.e(2 * l).clone(), k: crossing.j(l) });
    }
    if c != &Polynomial::one() {
        gens.push(Generator::Cup { at: d_hat.clone(), poly: c.clone() });
    }
    if d_hat != &datum.d {
        gens.push(Generator::Split { from: datum.d.clone(), to: d_hat.clone() });
    }
    if gens.is_empty() {
        gens.push(Generator::Idempotent(datum.d.clone()));
    }
    Ok(SchurWord::new(gens))
}

/// Every Bott–Samelson element of `Z_c` whose cup polynomial is an orbit-sum basis element
/// of degree `≤ max_deg`, using the canonical reduced word of each refinement datum.
pub fn bott_samelson_basis(z: &SchurAlgebra, max_deg: u32) -> Result<Vec<SchurWord<Comp>>> {
    let mut out = Vec::new();
    for od in OrbitDatum::all(z.total()) {
        let cd = od.refinement_datum().crossing_datum();
        for c in z.basis(cd.e(2 * cd.k()), max_deg)? {
            out.push(bott_samelson_element(z, &od, &cd, &c)?);
        }
    }
    Ok(out)
}

/// The degree of a homogeneous word: merge and crossing shifts plus cup degrees.
pub fn word_degree<R: Realization>(r: &R, w: &SchurWord<R::Key>) -> Result<i64> {
    let mut deg = 0;
    for g in &w.gens {
        deg += match g {
            Generator::Merge { from, to } => r.merge_degree_shift(from, to)?,
            Generator::Cross { at, k } => r.merge_degree_shift(at, &r.wedge_at(at, *k)?)?,
            Generator::Cup { poly, .. } => poly.degree().unwrap_or(0) as i64,
            _ => 0,
        };
    }
    Ok(deg)
}

/// An operator `⊕ Λ_source → Λ_target` restricted to the invariant basis of the source
/// in degrees `≤ bound`, one column per operator. Rows are indexed by an input basis
/// element and a monomial of the output.
#[derive(Clone, Debug)]
pub struct OperatorMatrix<K: Key> {
    pub source: K,
    pub target: K,
    pub bound: u32,
    pub inputs: Vec<Polynomial>,
    pub rows: Vec<(usize, Monomial)>,
    pub columns: Vec<Vec<Rat>>,
}

impl<K: Key> OperatorMatrix<K> {
    /// Realizes words sharing the signature `source → target`.
    pub fn build<R: Realization<Key = K>>(r: &R, words: &[SchurWord<K>], bound: u32) -> Result<OperatorMatrix<K>> {
        let Some(first) = words.first() else { bail!(Argument, "no operators to realize") };
        let (source, target) = r.signature(first)?;
        for w in words {
            if r.signature(w)? != (source.clone(), target.clone()) {
                bail!(Argument, "word {} does not map {} to {}", w.to_text(r.names()), source, target);
            }
        }
        let inputs = r.basis(&source, bound)?;
        let images: Vec<Vec<Polynomial>> = words
            .par_iter()
            .map(|w| {
                inputs
                    .iter()
                    .map(|f| Ok(r.apply_word(w, &Graded::single(source.clone(), f.clone()))?.component(&target)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut keys: BTreeSet<(usize, Monomial)> = BTreeSet::new();
        for col in &images {
            for (i, g) in col.iter().enumerate() {
                keys.extend(g.terms().map(|(m, _)| (i, m.clone())));
            }
        }
        let rows: Vec<(usize, Monomial)> = keys.into_iter().collect();
        let index: BTreeMap<&(usize, Monomial), usize> = rows.iter().enumerate().map(|(k, r)| (r, k)).collect();
        let columns = images
            .iter()
            .map(|col| {
                let mut v = vec![Rat::zero(); rows.len()];
                for (i, g) in col.iter().enumerate() {
                    for (m, c) in g.terms() {
                        v[index[&(i, m.clone())]] = c.clone();
                    }
                }
                v
            })
            .collect();
        Ok(OperatorMatrix { source, target, bound, inputs, rows, columns })
    }

    pub fn rank(&self) -> usize {
        rank_of_columns(&self.columns)
    }
}

/// Column rank by fraction-free (Bareiss) elimination after clearing denominators.
pub fn rank_of_columns(columns: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = columns
        .iter()
        .map(|col| {
            let l = col.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            col.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    bareiss_rank(&mut m)
}

/// Rank of a matrix given as a list of rows; the rows are overwritten.
pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n_cols {
        let Some(p) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..n_rows {
            let factor = m[r][col].clone();
            for k in col..n_cols {
                let v = (&pivot * &m[r][k] - &factor * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    rank
}

/// Rank of one block of Bott–Samelson columns with a common signature and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBlock {
    pub source: Comp,
    pub target: Comp,
    pub degree: i64,
    pub columns: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub blocks: Vec<RankBlock>,
}

impl BasisReport {
    pub fn columns(&self) -> usize {
        self.blocks.iter().map(|b| b.columns).sum()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    pub fn is_full_rank(&self) -> bool {
        self.blocks.iter().all(|b| b.rank == b.columns)
    }
}

/// Realizes every Bott–Samelson element with cup degree `≤ bound` on inputs of degree
/// `≤ bound` and computes the column rank. Operators with different signatures or
/// degrees have disjoint row supports, so the rank is computed block by block.
pub fn basis_independence_check(z: &SchurAlgebra, bound: u32) -> Result<BasisReport> {
    let mut groups: BTreeMap<(Comp, Comp, i64), Vec<SchurWord<Comp>>> = BTreeMap::new();
    for w in bott_samelson_basis(z, bound)? {
        let (s, t) = z.signature(&w)?;
        let deg = word_degree(z, &w)?;
        groups.entry((s, t, deg)).or_default().push(w);
    }
    let blocks = groups
        .into_par_iter()
        .map(|((source, target, degree), words)| {
            let m = OperatorMatrix::build(z, &words, bound)?;
            Ok(RankBlock { source, target, degree, columns: words.len(), rank: m.rank() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisReport { blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::quiver::{DimVector, Quiver};
    use crate::weyl::{FactorKind, WeylElement};

    #[test]
    fn bareiss_on_small_matrices() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<Rat>> { rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect() };
        assert_eq!(rank_of_columns(&m(&[&[1, 2, 3], &[2, 4, 6]])), 1);
        assert_eq!(rank_of_columns(&m(&[&[1, 0, 0], &[0, 0, 1], &[1, 0, 1]])), 2);
        assert_eq!(rank_of_columns(&m(&[&[0, 1], &[1, 0], &[2, 3]])), 2);
        let half = vec![vec![Rat::new(1.into(), 2.into()), rat(1)], vec![rat(1), rat(2)]];
        assert_eq!(rank_of_columns(&half), 1);
    }

    #[test]
    fn identity_datum_gives_the_idempotent() {
        let z = SchurAlgebra::new(&Quiver::a1(), &DimVector(vec![2])).unwrap();
        let d = Comp::ints(&[1, 1]).unwrap();
        let od = OrbitDatum::new(d.clone(), d.clone(), WeylElement::identity(&[FactorKind::Sym(2)])).unwrap();
        let cd = od.refinement_datum().crossing_datum();
        let w = bott_samelson_element(&z, &od, &cd, &Polynomial::one()).unwrap();
        assert_eq!(w, SchurWord::single(Generator::Idempotent(d.clone())));
        let x1 = Polynomial::var(crate::poly::Var::new(0, 1));
        let e = Comp::ints(&[2]).unwrap();
        let od = OrbitDatum::new(e.clone(), e.clone(), WeylElement::identity(&[FactorKind::Sym(2)])).unwrap();
        let cd = od.refinement_datum().crossing_datum();
        assert!(matches!(bott_samelson_element(&z, &od, &cd, &x1), Err(crate::Error::Invariant(_))));
    }

    #[test]
    fn running_example_has_two_crossings() {
        let z = SchurAlgebra::new(&Quiver::a1(), &DimVector(vec![8])).unwrap();
        let w = WeylElement::from_words(&[FactorKind::Sym(8)], &[vec![3, 4, 5, 6]]);
        let od = OrbitDatum::new(Comp::ints(&[3, 2, 3]).unwrap(), Comp::ints(&[4, 2, 2]).unwrap(), w).unwrap();
        let cd = od.refinement_datum().crossing_datum();
        let word = bott_samelson_element(&z, &od, &cd, &Polynomial::one()).unwrap();
        let crossings = word.gens.iter().filter(|g| matches!(g, Generator::Cross { .. })).count();
        assert_eq!(crossings, 2);
        assert_eq!(
            word.to_text(&[]),
            "merge[(2,1,2,2,1)->(3,2,3)] * cross[(2,2,1,2,1); 2] * cross[(2,2,2,1,1); 3] * split[(4,2,2)->(2,2,2,1,1)]"
        );
        assert_eq!(z.signature(&word).unwrap(), (Comp::ints(&[4, 2, 2]).unwrap(), Comp::ints(&[3, 2, 3]).unwrap()));
    }

    #[test]
    fn single_composition_has_one_element() {
        let z = SchurAlgebra::new(&Quiver::a1(), &DimVector(vec![1])).unwrap();
        let report = basis_independence_check(&z, 0).unwrap();
        assert_eq!((report.columns(), report.rank()), (1, 1));
    }

    #[test]
    fn small_bases_have_full_rank() {
        for q in [Quiver::a1(), Quiver::jordan()] {
            let z = SchurAlgebra::new(&q, &DimVector(vec![2])).unwrap();
            let report = basis_independence_check(&z, 3).unwrap();
            assert!(report.is_full_rank(), "{:?}", report);
        }
    }
}
