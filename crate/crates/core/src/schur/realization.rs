//! Operators of a (mixed) quiver Schur algebra on its polynomial representation, written
//! once for both index sets.

use super::graded::{Graded, Key};
use super::word::{Generator, SchurWord};
use crate::error::{bail, Result};
use crate::poly::invariants::{invariant_basis, is_invariant};
use crate::poly::{Frame, Polynomial};
use crate::quiver::Quiver;
use crate::weyl::Parabolic;
use rayon::prelude::*;

/// A basis input on which two operators disagree.
#[derive(Clone, Debug)]
pub struct Counterexample<K: Key> {
    pub source: K,
    pub input: Polynomial,
    pub left: Graded<K>,
    pub right: Graded<K>,
}

/// The data a polynomial representation needs; the generic operators are provided.
pub trait Realization: Sync {
    type Key: Key;

    fn quiver(&self) -> &Quiver;
    /// The ambient frame (`W_c` or `θW_c` with its root data).
    fn frame(&self) -> &Frame;
    /// Every composition of the total, in canonical order.
    fn keys(&self) -> Vec<Self::Key>;
    fn parse_key(&self, s: &str) -> Result<Self::Key>;
    /// The parabolic subgroup whose invariants form the component at `d`.
    fn parabolic(&self, d: &Self::Key) -> Result<Parabolic>;
    /// The `β` with `e = ∧_β(d)`, if any.
    fn refines(&self, d: &Self::Key, e: &Self::Key) -> Option<Vec<usize>>;
    /// The merge `d → e` on the component at `d`.
    fn merge_component(&self, d: &Self::Key, e: &Self::Key, f: &Polynomial) -> Result<Polynomial>;
    /// Degree change of the merge `d → e`.
    fn merge_degree_shift(&self, d: &Self::Key, e: &Self::Key) -> Result<i64>;
    /// The elementary coarsening at position `k`.
    fn wedge_at(&self, d: &Self::Key, k: usize) -> Result<Self::Key>;
    /// The composition reached by the crossing at position `k`.
    fn cross_target(&self, d: &Self::Key, k: usize) -> Result<Self::Key>;

    fn names(&self) -> &[String] {
        &self.quiver().vertices
    }

    fn check_refines(&self, d: &Self::Key, e: &Self::Key) -> Result<()> {
        if self.refines(d, e).is_none() {
            bail!(Argument, "{} does not refine {}", d, e);
        }
        Ok(())
    }

    /// Orbit-sum basis of the component at `d` in degrees `≤ max_deg`.
    fn basis(&self, d: &Self::Key, max_deg: u32) -> Result<Vec<Polynomial>> {
        Ok(invariant_basis(self.frame(), &self.parabolic(d)?, max_deg))
    }

    fn check_invariant(&self, d: &Self::Key, f: &Polynomial) -> Result<()> {
        if !is_invariant(f, &self.parabolic(d)?) {
            bail!(Invariant, "{} is not invariant for the component {}", f.to_text(self.names()), d);
        }
        Ok(())
    }

    fn apply_merge(&self, d: &Self::Key, e: &Self::Key, x: &Graded<Self::Key>) -> Result<Graded<Self::Key>> {
        self.check_refines(d, e)?;
        match x.get(d) {
            Some(f) => Ok(Graded::single(e.clone(), self.merge_component(d, e, f)?)),
            None => Ok(Graded::zero()),
        }
    }

    /// The inclusion of the component at `e` into the finer slot `d`.
    fn apply_split(&self, e: &Self::Key, d: &Self::Key, x: &Graded<Self::Key>) -> Result<Graded<Self::Key>> {
        self.check_refines(d, e)?;
        match x.get(e) {
            Some(f) => Ok(Graded::single(d.clone(), f.clone())),
            None => Ok(Graded::zero()),
        }
    }

    fn apply_poly(&self, d: &Self::Key, g: &Polynomial, x: &Graded<Self::Key>) -> Result<Graded<Self::Key>> {
        self.check_invariant(d, g)?;
        match x.get(d) {
            Some(f) => Ok(Graded::single(d.clone(), f * g)),
            None => Ok(Graded::zero()),
        }
    }

    fn apply_idempotent(&self, d: &Self::Key, x: &Graded<Self::Key>) -> Graded<Self::Key> {
        x.project(d)
    }

    /// Merge to `∧_k(d)` followed by the split to the crossed composition.
    fn apply_crossing(&self, d: &Self::Key, k: usize, x: &Graded<Self::Key>) -> Result<Graded<Self::Key>> {
        let mid = self.wedge_at(d, k)?;
        let t = self.cross_target(d, k)?;
        let y = self.apply_merge(d, &mid, x)?;
        self.apply_split(&mid, &t, &y)
    }

    fn apply_generator(&self, g: &Generator<Self::Key>, x: &Graded<Self::Key>) -> Result<Graded<Self::Key>> {
        match g {
            Generator::Idempotent(d) => Ok(self.apply_idempotent(d, x)),
            Generator::Merge { from, to } => self.apply_merge(from, to, x),
            Generator::Split { from, to } => self.apply_split(from, to, x),
            Generator::Cup { at, poly } => self.apply_poly(at, poly, x),
            Generator::Cross { at, k } => self.apply_crossing(at, *k, x),
        }
    }

    /// The composition a generator writes to.
    fn target(&self, g: &Generator<Self::Key>) -> Result<Self::Key> {
        Ok(match g {
            Generator::Idempotent(d) | Generator::Cup { at: d, .. } => d.clone(),
            Generator::Merge { to, .. } | Generator::Split { to, .. } => to.clone(),
            Generator::Cross { at, k } => self.cross_target(at, *k)?,
        })
    }

    /// Source and target of a word, checking that adjacent generators compose.
    fn signature(&self, w: &SchurWord<Self::Key>) -> Result<(Self::Key, Self::Key)> {
        let Some(first) = w.gens.last() else { bail!(Argument, "empty word") };
        let mut cur = self.target(first)?;
        for g in w.gens.iter().rev().skip(1) {
            if *g.source() != cur {
                bail!(Argument, "{} cannot follow a generator ending at {}", g.to_text(self.names()), cur);
            }
            cur = self.target(g)?;
        }
        Ok((first.source().clone(), cur))
    }

    fn apply_word(&self, w: &SchurWord<Self::Key>, x: &Graded<Self::Key>) -> Result<Graded<Self::Key>> {
        self.signature(w)?;
        let mut y = x.clone();
        for g in w.gens.iter().rev() {
            y = self.apply_generator(g, &y)?;
        }
        Ok(y)
    }

    /// First basis element (in degrees `≤ bound`) of the common source on which the two
    /// words differ; `None` means equal up to the bound.
    fn operator_difference(
        &self,
        w1: &SchurWord<Self::Key>,
        w2: &SchurWord<Self::Key>,
        bound: u32,
    ) -> Result<Option<Counterexample<Self::Key>>> {
        let (s1, t1) = self.signature(w1)?;
        let (s2, t2) = self.signature(w2)?;
        if s1 != s2 || t1 != t2 {
            bail!(Argument, "words have different signatures {}→{} and {}→{}", s1, t1, s2, t2);
        }
        let basis = self.basis(&s1, bound)?;
        let results: Vec<Result<Option<Counterexample<Self::Key>>>> = basis
            .par_iter()
            .map(|f| {
                let x = Graded::single(s1.clone(), f.clone());
                let (a, b) = (self.apply_word(w1, &x)?, self.apply_word(w2, &x)?);
                Ok((a != b).then(|| Counterexample { source: s1.clone(), input: f.clone(), left: a, right: b }))
            })
            .collect();
        for r in results {
            if let Some(c) = r? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn operator_equal(&self, w1: &SchurWord<Self::Key>, w2: &SchurWord<Self::Key>, bound: u32) -> Result<bool> {
        Ok(self.operator_difference(w1, w2, bound)?.is_none())
    }
}

/// `merge[d->e]`.
pub fn merge<K: Key>(d: &K, e: &K) -> SchurWord<K> {
    SchurWord::single(Generator::Merge { from: d.clone(), to: e.clone() })
}

/// `split[e->d]`.
pub fn split<K: Key>(e: &K, d: &K) -> SchurWord<K> {
    SchurWord::single(Generator::Split { from: e.clone(), to: d.clone() })
}

pub fn cup<K: Key>(d: &K, g: Polynomial) -> SchurWord<K> {
    SchurWord::single(Generator::Cup { at: d.clone(), poly: g })
}

pub fn idem<K: Key>(d: &K) -> SchurWord<K> {
    SchurWord::single(Generator::Idempotent(d.clone()))
}

pub fn cross<K: Key>(d: &K, k: usize) -> SchurWord<K> {
    SchurWord::single(Generator::Cross { at: d.clone(), k })
}
