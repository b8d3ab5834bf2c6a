//! The cohomological Hall algebra `H = ⊕_c H_c` with `H_c = Λ_{(c)}`, its multiplication,
//! the inclusion comultiplication and their multifactor versions on `T_c(H) = ⊕_d H_d`.

use crate::error::{bail, Result};
use crate::poly::classes::relative_s;
use crate::poly::invariants::{hilbert_series, is_invariant};
use crate::poly::{Frame, Polynomial, Var};
use crate::quiver::{Comp, DimVector, Quiver};
use crate::schur::{GradedElement, Realization, SchurAlgebra};
use crate::weyl::parabolic;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// An element of `T_c(H)`; the representation is shared with the Schur algebra side.
pub type CohaElement = GradedElement;

/// Renames `x_p(i)` to `x_{p+a(i)}(i)`.
pub fn shift_vars(g: &Polynomial, a: &DimVector) -> Polynomial {
    g.rename(|v| Var::new(v.vertex as usize, v.index as usize + a.get(v.vertex as usize) as usize))
}

/// `dim (H_d)_k = dim (Λ_d)_k` for `k = 0..=max_deg`.
pub fn hilbert_series_comp(d: &Comp, max_deg: u32) -> Vec<u64> {
    hilbert_series(&Frame::ordinary(&d.total()), &parabolic(d), max_deg)
}

pub struct Coha {
    quiver: Quiver,
    algebras: Mutex<HashMap<DimVector, Arc<SchurAlgebra>>>,
}

impl Coha {
    pub fn new(quiver: &Quiver) -> Coha {
        Coha { quiver: quiver.clone(), algebras: Mutex::new(HashMap::new()) }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The Schur algebra `Z_c`, built once per total.
    pub fn algebra(&self, c: &DimVector) -> Result<Arc<SchurAlgebra>> {
        if let Some(z) = self.algebras.lock().unwrap().get(c) {
            return Ok(z.clone());
        }
        let z = Arc::new(SchurAlgebra::new(&self.quiver, c)?);
        self.algebras.lock().unwrap().insert(c.clone(), z.clone());
        Ok(z)
    }

    /// Checks `f ∈ H_a`; for `a = 0` this means a constant.
    pub fn check_element(&self, a: &DimVector, f: &Polynomial) -> Result<()> {
        if a.len() != self.quiver.n_vertices() {
            bail!(Structure, "dimension vector {} does not match the quiver", a);
        }
        if a.is_zero() {
            if !f.is_constant() {
                bail!(Invariant, "elements of H_0 are constants, got {}", f.to_text(&self.quiver.vertices));
            }
            return Ok(());
        }
        let frame = Frame::ordinary(a);
        if f.variables().iter().any(|&v| !frame.contains_var(v)) || !is_invariant(f, &frame.whole()) {
            bail!(Invariant, "{} is not an element of H_{}", f.to_text(&self.quiver.vertices), a);
        }
        Ok(())
    }

    fn two_block(&self, a: &DimVector, b: &DimVector) -> Result<(Comp, Comp)> {
        let c = a + b;
        Ok((Comp::new(vec![a.clone(), b.clone()])?, Comp::new(vec![c])?))
    }

    /// `m(f, g) = (−1)^{r_d} Δ_{w_d}(f·g·E_d)` for `d = (a, b)`.
    pub fn mul(&self, a: &DimVector, f: &Polynomial, b: &DimVector, g: &Polynomial) -> Result<Polynomial> {
        self.check_element(a, f)?;
        self.check_element(b, g)?;
        if a.is_zero() || b.is_zero() {
            return Ok(f * g);
        }
        let (d, e) = self.two_block(a, b)?;
        self.algebra(&(a + b))?.merge_via_demazure(&d, &e, &(f * &shift_vars(g, a)))
    }

    /// `m(f, g) = ⋔(E_d/S_d · f·g)`, the shuffle route.
    pub fn mul_shuffle(&self, a: &DimVector, f: &Polynomial, b: &DimVector, g: &Polynomial) -> Result<Polynomial> {
        self.check_element(a, f)?;
        self.check_element(b, g)?;
        if a.is_zero() || b.is_zero() {
            return Ok(f * g);
        }
        let (d, e) = self.two_block(a, b)?;
        self.algebra(&(a + b))?.merge_component(&d, &e, &(f * &shift_vars(g, a)))
    }

    /// `r_d`, the sign exponent of the Demazure route.
    pub fn r(&self, a: &DimVector, b: &DimVector) -> Result<usize> {
        let (d, e) = self.two_block(a, b)?;
        Ok(relative_s(&d, &e)?.degree())
    }

    /// The `d`-component of `Δ(f)` for `f ∈ H_c`, as an element of `H_d ≅ Λ_d`.
    pub fn comul_component(&self, d: &Comp, f: &Polynomial) -> Result<Polynomial> {
        self.check_element(&d.total(), f)?;
        Ok(f.clone())
    }

    /// `m_d^e` on `T_c(H)`, through Demazure operators.
    pub fn multi_mul(&self, d: &Comp, e: &Comp, x: &CohaElement) -> Result<CohaElement> {
        let z = self.algebra(&d.total())?;
        z.check_refines(d, e)?;
        match x.get(d) {
            Some(f) => {
                z.check_invariant(d, f)?;
                Ok(CohaElement::single(e.clone(), z.merge_via_demazure(d, e, f)?))
            }
            None => Ok(CohaElement::zero()),
        }
    }

    /// `com_e^d` on `T_c(H)`: the inclusion `H_e ⊂ H_d` on the `e`-component.
    pub fn multi_com(&self, e: &Comp, d: &Comp, x: &CohaElement) -> Result<CohaElement> {
        if d.refines(e).is_none() {
            bail!(Argument, "{} does not refine {}", d, e);
        }
        let z = self.algebra(&d.total())?;
        match x.get(e) {
            Some(f) => {
                z.check_invariant(e, f)?;
                Ok(CohaElement::single(d.clone(), f.clone()))
            }
            None => Ok(CohaElement::zero()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn x(k: usize) -> Polynomial {
        Polynomial::var(Var::new(0, k))
    }

    fn one(n: u32) -> DimVector {
        DimVector(vec![n])
    }

    #[test]
    fn a1_products() {
        let h = Coha::new(&Quiver::a1());
        assert!(h.mul(&one(1), &Polynomial::one(), &one(1), &Polynomial::one()).unwrap().is_zero());
        assert_eq!(h.mul(&one(1), &x(1), &one(1), &Polynomial::one()).unwrap(), Polynomial::int(-1));
        for i in 0..4 {
            for j in 0..4 {
                let (f, g) = (x(1).pow(i), x(1).pow(j));
                let fg = h.mul(&one(1), &f, &one(1), &g).unwrap();
                assert_eq!(fg, -h.mul(&one(1), &g, &one(1), &f).unwrap());
                assert_eq!(fg, h.mul_shuffle(&one(1), &f, &one(1), &g).unwrap());
            }
        }
    }

    #[test]
    fn jordan_products() {
        let h = Coha::new(&Quiver::jordan());
        assert_eq!(h.mul(&one(1), &Polynomial::one(), &one(1), &Polynomial::one()).unwrap(), Polynomial::int(2));
        let s = &x(1) + &x(2);
        assert_eq!(h.mul(&one(2), &s, &one(0), &Polynomial::constant(rat(3))).unwrap(), s.scale(&rat(3)));
        assert!(matches!(h.mul(&one(2), &x(1), &one(1), &Polynomial::one()), Err(crate::Error::Invariant(_))));
    }

    #[test]
    fn comultiplication_then_multiplication() {
        let z = SchurAlgebra::new(&Quiver::jordan(), &one(3)).unwrap();
        let h = Coha::new(&Quiver::jordan());
        let (d, e) = (Comp::ints(&[1, 2]).unwrap(), Comp::ints(&[3]).unwrap());
        let f = &(&x(1) + &x(2)) + &x(3);
        let x0 = CohaElement::single(e.clone(), f.clone());
        let back = h.multi_mul(&d, &e, &h.multi_com(&e, &d, &x0).unwrap()).unwrap();
        assert_eq!(back, x0.scale(&rat(3)));
        assert_eq!(h.comul_component(&e, &f).unwrap(), f);
        assert_eq!(back, z.apply_merge(&d, &e, &z.apply_split(&e, &d, &x0).unwrap()).unwrap());
    }

    #[test]
    fn hilbert_series_examples() {
        assert_eq!(hilbert_series_comp(&Comp::ints(&[2]).unwrap(), 5), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(hilbert_series_comp(&Comp::ints(&[1]).unwrap(), 3), vec![1, 1, 1, 1]);
    }
}
