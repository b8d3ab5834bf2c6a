//! The cohomological Hall module `θM = ⊕_b θM_b` with `θM_b = θΛ_{(|b)}`, the action of the
//! CoHA on it and the inclusion coaction.

use super::coha::Coha;
use crate::error::{bail, Result};
use crate::poly::classes::{theta_e, theta_s};
use crate::poly::invariants::{hilbert_series, is_invariant};
use crate::poly::{demazure_section, DemazureSum, Frame, Polynomial};
use crate::quiver::{DimVector, IsoComp, Quiver};
use crate::schur::{MixedSchurAlgebra, Realization, ThetaElement};
use crate::weyl::theta_parabolic;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// An element of `T(θM)`; the representation is shared with the mixed Schur algebra side.
pub type CohmElement = ThetaElement;

/// `dim (θΛ_d)_k` for `k = 0..=max_deg`.
pub fn hilbert_series_iso(q: &Quiver, d: &IsoComp, max_deg: u32) -> Result<Vec<u64>> {
    let c = d.total(&q.inv()?.vertex_map);
    Ok(hilbert_series(&Frame::theta(q, &c)?, &theta_parabolic(q, d)?, max_deg))
}

pub struct Cohm {
    quiver: Quiver,
    coha: Coha,
    algebras: Mutex<HashMap<DimVector, Arc<MixedSchurAlgebra>>>,
}

impl Cohm {
    pub fn new(quiver: &Quiver) -> Result<Cohm> {
        quiver.inv()?;
        Ok(Cohm { quiver: quiver.clone(), coha: Coha::new(quiver), algebras: Mutex::new(HashMap::new()) })
    }

    pub fn coha(&self) -> &Coha {
        &self.coha
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The mixed Schur algebra `θZ_c`, built once per total.
    pub fn algebra(&self, c: &DimVector) -> Result<Arc<MixedSchurAlgebra>> {
        if let Some(z) = self.algebras.lock().unwrap().get(c) {
            return Ok(z.clone());
        }
        let z = Arc::new(MixedSchurAlgebra::new(&self.quiver, c)?);
        self.algebras.lock().unwrap().insert(c.clone(), z.clone());
        Ok(z)
    }

    /// `D(a) = a + θ(a)`.
    pub fn double(&self, a: &DimVector) -> Result<DimVector> {
        Ok(a.double(&self.quiver.inv()?.vertex_map))
    }

    /// Checks `v ∈ θM_b`; for `b = 0` this means a constant.
    pub fn check_element(&self, b: &DimVector, v: &Polynomial) -> Result<()> {
        let inv = self.quiver.inv()?;
        if b.len() != self.quiver.n_vertices() || !b.is_theta_fixed(&inv.vertex_map) {
            bail!(Argument, "{} is not a θ-fixed dimension vector", b);
        }
        self.quiver.check_iso(&IsoComp::new(Vec::new(), b.clone(), &inv.vertex_map)?)?;
        if b.is_zero() {
            if !v.is_constant() {
                bail!(Invariant, "elements of θM_0 are constants, got {}", v.to_text(&self.quiver.vertices));
            }
            return Ok(());
        }
        let frame = Frame::theta(&self.quiver, b)?;
        if v.variables().iter().any(|&x| !frame.contains_var(x)) || !is_invariant(v, &frame.whole()) {
            bail!(Invariant, "{} is not an element of θM_{}", v.to_text(&self.quiver.vertices), b);
        }
        Ok(())
    }

    /// `(a | b)` inside `θZ_{D(a)+b}`.
    fn two_block(&self, a: &DimVector, b: &DimVector) -> Result<(Arc<MixedSchurAlgebra>, IsoComp)> {
        let z = self.algebra(&(&self.double(a)? + b))?;
        let d = self.quiver.iso(vec![a.clone()], b.clone())?;
        Ok((z, d))
    }

    /// `act(f, v) = θ⋔(θE_d/θS_d · f·v)` for `d = (a | b)`.
    pub fn act(&self, a: &DimVector, f: &Polynomial, b: &DimVector, v: &Polynomial) -> Result<Polynomial> {
        self.coha.check_element(a, f)?;
        self.check_element(b, v)?;
        if a.is_zero() {
            return Ok(f * v);
        }
        let (z, d) = self.two_block(a, b)?;
        z.absorb(&d, &z.place(a, f, v)?)
    }

    /// `θr_d` for `d = (a | b)`.
    pub fn theta_r(&self, a: &DimVector, b: &DimVector) -> Result<usize> {
        let (_, d) = self.two_block(a, b)?;
        Ok(theta_s(&self.quiver, &d)?.degree())
    }

    /// A polynomial `h` with `θΔ_d(h) = 1` for `d = (a | b)`.
    pub fn demazure_section(&self, a: &DimVector, b: &DimVector) -> Result<Polynomial> {
        let (z, d) = self.two_block(a, b)?;
        demazure_section(z.frame(), &theta_parabolic(&self.quiver, &d)?)
    }

    /// `act(f, v) = (−1)^{θr_d} θΔ_c(f·v·θE_d·h)` with `θΔ_d(h) = 1`, through the
    /// Demazure sum over all of `θW_c`.
    pub fn act_demazure(&self, a: &DimVector, f: &Polynomial, b: &DimVector, v: &Polynomial) -> Result<Polynomial> {
        self.coha.check_element(a, f)?;
        self.check_element(b, v)?;
        if a.is_zero() {
            return Ok(f * v);
        }
        let (z, d) = self.two_block(a, b)?;
        let h = self.demazure_section(a, b)?;
        let e = theta_e(&self.quiver, &d)?.to_polynomial();
        let big = &(&z.place(a, f, v)? * &e) * &h;
        let g = DemazureSum::new(z.frame(), &z.frame().whole()).apply(&big)?;
        Ok(if self.theta_r(a, b)? % 2 == 1 { -g } else { g })
    }

    /// The coaction component `θM_e → θM_d` on `T(θM)`: the inclusion on the
    /// `e`-component.
    pub fn coact(&self, e: &IsoComp, d: &IsoComp, x: &CohmElement) -> Result<CohmElement> {
        let c = e.total(&self.quiver.inv()?.vertex_map);
        let z = self.algebra(&c)?;
        z.check_refines(d, e)?;
        match x.get(e) {
            Some(v) => {
                z.check_invariant(e, v)?;
                Ok(CohmElement::single(d.clone(), v.clone()))
            }
            None => Ok(CohmElement::zero()),
        }
    }
}
