//! The quiver Schur algebra `Z_c` acting on `Λ_c = ⊕_d Λ_d`.

use super::realization::Realization;
use crate::error::{bail, Result};
use crate::poly::classes::{relative_e, relative_s};
use crate::poly::{demazure_word, Frame, Polynomial, Symmetrizer};
use crate::quiver::{Comp, DimVector, Quiver};
use crate::weyl::{parabolic, Parabolic, WeylElement};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct SchurAlgebra {
    quiver: Quiver,
    total: DimVector,
    frame: Frame,
    cache: Mutex<HashMap<(Comp, Comp), Arc<Symmetrizer>>>,
}

impl SchurAlgebra {
    pub fn new(quiver: &Quiver, total: &DimVector) -> Result<SchurAlgebra> {
        if total.len() != quiver.n_vertices() {
            bail!(Structure, "dimension vector {} does not match the quiver", total);
        }
        if total.is_zero() {
            bail!(Argument, "the total dimension vector must be nonzero");
        }
        Ok(SchurAlgebra {
            quiver: quiver.clone(),
            total: total.clone(),
            frame: Frame::ordinary(total),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn total(&self) -> &DimVector {
        &self.total
    }

    fn check_total(&self, d: &Comp) -> Result<()> {
        if d.total() != self.total {
            bail!(Argument, "{} is not a composition of {}", d, self.total);
        }
        Ok(())
    }

    /// `f ↦ ⋔(E^e_d f / S^e_d)`, summed over the minimal left coset representatives of
    /// `W_e / W_d`.
    pub fn symmetrizer(&self, d: &Comp, e: &Comp) -> Result<Arc<Symmetrizer>> {
        self.check_total(d)?;
        self.check_total(e)?;
        self.check_refines(d, e)?;
        let key = (d.clone(), e.clone());
        if let Some(s) = self.cache.lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let reps = parabolic(e).min_left_coset_reps(&parabolic(d));
        let numerator = relative_e(&self.quiver, d, e)?.to_polynomial();
        let s = Arc::new(Symmetrizer::new(reps, &numerator, &relative_s(d, e)?)?);
        self.cache.lock().unwrap().insert(key, s.clone());
        Ok(s)
    }

    /// `w^e_d`, the longest minimal left coset representative of `W_e / W_d`.
    pub fn longest_coset_rep(&self, d: &Comp, e: &Comp) -> WeylElement {
        let reps = parabolic(e).min_left_coset_reps(&parabolic(d));
        reps.into_iter().max_by_key(|w| w.length()).expect("the identity is a representative")
    }

    /// `r^e_d`, the number of factors of `S^e_d`.
    pub fn r(&self, d: &Comp, e: &Comp) -> Result<usize> {
        Ok(relative_s(d, e)?.degree())
    }

    /// The merge through Demazure operators: `(−1)^{r^e_d} Δ_{w^e_d}(E^e_d f)`.
    pub fn merge_via_demazure(&self, d: &Comp, e: &Comp, f: &Polynomial) -> Result<Polynomial> {
        self.check_refines(d, e)?;
        let ef = f * &relative_e(&self.quiver, d, e)?.to_polynomial();
        let g = demazure_word(&self.frame, &self.longest_coset_rep(d, e), &ef)?;
        Ok(if self.r(d, e)? % 2 == 1 { -g } else { g })
    }
}

impl Realization for SchurAlgebra {
    type Key = Comp;

    fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn frame(&self) -> &Frame {
        &self.frame
    }

    fn keys(&self) -> Vec<Comp> {
        Comp::all_of(&self.total)
    }

    fn parse_key(&self, s: &str) -> Result<Comp> {
        let d = self.quiver.parse_comp(s)?;
        self.check_total(&d)?;
        Ok(d)
    }

    fn parabolic(&self, d: &Comp) -> Result<Parabolic> {
        self.check_total(d)?;
        Ok(parabolic(d))
    }

    fn refines(&self, d: &Comp, e: &Comp) -> Option<Vec<usize>> {
        d.refines(e)
    }

    fn merge_component(&self, d: &Comp, e: &Comp, f: &Polynomial) -> Result<Polynomial> {
        self.symmetrizer(d, e)?.apply(f)
    }

    fn merge_degree_shift(&self, d: &Comp, e: &Comp) -> Result<i64> {
        Ok(relative_e(&self.quiver, d, e)?.degree() as i64 - relative_s(d, e)?.degree() as i64)
    }

    fn wedge_at(&self, d: &Comp, k: usize) -> Result<Comp> {
        d.wedge_at(k)
    }

    fn cross_target(&self, d: &Comp, k: usize) -> Result<Comp> {
        if k == 0 || k >= d.len() {
            bail!(Argument, "no crossing at position {} of {}", k, d);
        }
        Ok(d.swap(k))
    }
}
