//! The mixed quiver Schur algebra `θZ_c` acting on `θΛ_c = ⊕_d θΛ_d`.
//!
//! A merge `d → e` with `e = ∧^θ_β(d)` runs as at most two symmetrizers in the ambient
//! frame: first the ordinary merge of the finite parts that stay finite (embedded into
//! `θW_c` through the slot forms of `D(c)`), then the two-block merge that absorbs the
//! remaining finite parts into `d_∞`, placed on the middle slots.

use super::realization::Realization;
use crate::error::{bail, Result};
use crate::poly::classes::{relative_e, relative_s, slot_form, theta_e, theta_s};
use crate::poly::{Frame, LinearForm, Polynomial, Symmetrizer, Var};
use crate::quiver::{DimVector, IsoComp, Quiver, Side};
use crate::weyl::{parabolic, theta_kinds, theta_parabolic, Factor, Parabolic, Perm, SignedPerm, WeylElement};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// One symmetrizer of a θ-merge and its degree change.
#[derive(Clone, Debug)]
struct Step {
    sym: Symmetrizer,
    shift: i64,
}

pub struct MixedSchurAlgebra {
    quiver: Quiver,
    total: DimVector,
    frame: Frame,
    cache: Mutex<HashMap<(IsoComp, IsoComp), Arc<Vec<Step>>>>,
}

impl MixedSchurAlgebra {
    pub fn new(quiver: &Quiver, total: &DimVector) -> Result<MixedSchurAlgebra> {
        let inv = quiver.inv()?;
        if total.len() != quiver.n_vertices() {
            bail!(Structure, "dimension vector {} does not match the quiver", total);
        }
        if !total.is_theta_fixed(&inv.vertex_map) {
            bail!(Argument, "{} is not θ-fixed", total);
        }
        if total.is_zero() {
            bail!(Argument, "the total dimension vector must be nonzero");
        }
        Ok(MixedSchurAlgebra {
            quiver: quiver.clone(),
            total: total.clone(),
            frame: Frame::theta(quiver, total)?,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn total(&self) -> &DimVector {
        &self.total
    }

    fn vertex_map(&self) -> &[usize] {
        &self.quiver.inv().expect("checked in new").vertex_map
    }

    fn side(&self, v: usize) -> Side {
        self.quiver.inv().expect("checked in new").vertex_side[v]
    }

    fn check_total(&self, d: &IsoComp) -> Result<()> {
        if d.total(self.vertex_map()) != self.total {
            bail!(Argument, "{} is not an isotropic composition of {}", d, self.total);
        }
        self.quiver.check_iso(d)
    }

    /// The image in `θW_c` of an element of `W_a` acting on the leading slots
    /// `1..a(i)` of every vertex.
    fn embed_leading(&self, a: &DimVector, w: &WeylElement) -> WeylElement {
        let vm = self.vertex_map();
        let mut out = Vec::with_capacity(w.0.len());
        for (v, kind) in self.frame.kinds.iter().enumerate() {
            let perm = |u: usize| match &w.0[u] {
                Factor::Sym(p) => p.clone(),
                Factor::Hyp(_) => unreachable!("ordinary Weyl groups have no signed factors"),
            };
            let n = kind.rank();
            out.push(match self.side(v) {
                Side::Plus => {
                    let mut img: Vec<u16> = (1..=n as u16).collect();
                    let p = perm(v);
                    for k in 1..=a.get(v) as usize {
                        img[k - 1] = p.apply(k) as u16;
                    }
                    let p = perm(vm[v]);
                    for k in 1..=a.get(vm[v]) as usize {
                        img[n - k] = (n + 1 - p.apply(k)) as u16;
                    }
                    Factor::Sym(Perm(img))
                }
                Side::Fixed => {
                    let mut img: Vec<i16> = (1..=n as i16).collect();
                    let p = perm(v);
                    for k in 1..=a.get(v) as usize {
                        img[k - 1] = p.apply(k) as i16;
                    }
                    Factor::Hyp(SignedPerm(img))
                }
                Side::Minus => Factor::Sym(Perm::identity(0)),
            });
        }
        WeylElement(out)
    }

    /// The image in `θW_c` of an element of `θW_b` acting on the middle slots, offset by
    /// `a'(i)` at every vertex.
    fn embed_middle(&self, offset: &DimVector, w: &WeylElement) -> WeylElement {
        let mut out = Vec::with_capacity(w.0.len());
        for (v, kind) in self.frame.kinds.iter().enumerate() {
            let n = kind.rank();
            let o = offset.get(v) as usize;
            out.push(match (&w.0[v], self.side(v)) {
                (Factor::Sym(p), Side::Plus) => {
                    let mut img: Vec<u16> = (1..=n as u16).collect();
                    for k in 1..=p.n() {
                        img[o + k - 1] = (o + p.apply(k)) as u16;
                    }
                    Factor::Sym(Perm(img))
                }
                (Factor::Hyp(p), Side::Fixed) => {
                    let mut img: Vec<i16> = (1..=n as i16).collect();
                    for k in 1..=p.n() {
                        let m = p.apply(k);
                        img[o + k - 1] = m.signum() * (o as i16 + m.abs());
                    }
                    Factor::Hyp(SignedPerm(img))
                }
                _ => Factor::Sym(Perm::identity(0)),
            });
        }
        WeylElement(out)
    }

    /// Merge of the finite parts `d^f → e^f` (`e_∞ = d_∞`), extended by the identity.
    fn finite_step(&self, d: &IsoComp, e: &IsoComp) -> Result<Step> {
        let (Some(df), Some(ef)) = (d.finite_comp(), e.finite_comp()) else {
            bail!(Argument, "{} → {} is not a merge of finite parts", d, e)
        };
        let a = df.total();
        let c = &self.total;
        let to_slot = |v: Var| slot_form(&self.quiver, c, (v.vertex as usize, v.index as usize)).expect("slot inside N_c");
        let reps: Vec<WeylElement> = parabolic(&ef)
            .min_left_coset_reps(&parabolic(&df))
            .iter()
            .map(|w| self.embed_leading(&a, w))
            .collect();
        let num = relative_e(&self.quiver, &df, &ef)?;
        let den = relative_s(&df, &ef)?;
        let shift = num.degree() as i64 - den.degree() as i64;
        let sym = Symmetrizer::new(reps, &num.substitute(to_slot).to_polynomial(), &den.substitute(to_slot))?;
        Ok(Step { sym, shift })
    }

    /// The two-block merge `(e_1,…,e_m, g | d_∞) → (e_1,…,e_m | D(g) + d_∞)`.
    fn infinity_step(&self, mid: &IsoComp, e: &IsoComp) -> Result<Step> {
        let m = e.len();
        if mid.len() != m + 1 || mid.finite()[..m] != *e.finite() {
            bail!(Argument, "{} → {} does not absorb exactly the last finite part", mid, e);
        }
        let vm = self.vertex_map();
        let g = mid.part(m).clone();
        let two = IsoComp::new(vec![g], mid.inf().clone(), vm)?;
        let b = e.inf().clone();
        let mut offset = DimVector::zero(self.quiver.n_vertices());
        for p in e.finite() {
            offset = &offset + p;
        }
        let kinds = theta_kinds(&self.quiver, &b)?;
        let reps: Vec<WeylElement> = Parabolic::whole(&kinds)
            .min_left_coset_reps(&theta_parabolic(&self.quiver, &two)?)
            .iter()
            .map(|w| self.embed_middle(&offset, w))
            .collect();
        let shifted = |v: Var| LinearForm::var(Var::new(v.vertex as usize, v.index as usize + offset.get(v.vertex as usize) as usize));
        let num = theta_e(&self.quiver, &two)?;
        let den = theta_s(&self.quiver, &two)?;
        let shift = num.degree() as i64 - den.degree() as i64;
        let sym = Symmetrizer::new(reps, &num.substitute(shifted).to_polynomial(), &den.substitute(shifted))?;
        Ok(Step { sym, shift })
    }

    fn steps(&self, d: &IsoComp, e: &IsoComp) -> Result<Arc<Vec<Step>>> {
        self.check_total(d)?;
        self.check_total(e)?;
        let Some(beta) = d.refines(e, self.vertex_map()) else { bail!(Argument, "{} does not refine {}", d, e) };
        let key = (d.clone(), e.clone());
        if let Some(s) = self.cache.lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let last = *beta.last().expect("β is nonempty");
        let mut steps = Vec::new();
        if last == 1 {
            if beta.iter().any(|&b| b > 1) {
                steps.push(self.finite_step(d, e)?);
            }
        } else {
            let mut fb = beta[..beta.len() - 1].to_vec();
            fb.push(last - 1);
            fb.push(1);
            let mid = d.theta_wedge(&fb, self.vertex_map())?;
            if fb.iter().any(|&b| b > 1) {
                steps.push(self.finite_step(d, &mid)?);
            }
            steps.push(self.infinity_step(&mid, e)?);
        }
        let steps = Arc::new(steps);
        self.cache.lock().unwrap().insert(key, steps.clone());
        Ok(steps)
    }

    /// The ring homomorphism `Λ_a ⊗ θΛ_b → θΛ_{D(a)+b}` placing the first factor on the
    /// leading slots (through the slot forms) and the second on the middle slots.
    pub fn place(&self, a: &DimVector, f: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
        let c = &self.total;
        let ff = f.substitute_linear(|x| slot_form(&self.quiver, c, (x.vertex as usize, x.index as usize)).expect("slot inside N_c"));
        let mut offset = a.clone();
        for i in 0..offset.len() {
            if self.side(i) == Side::Minus {
                offset.0[i] = 0;
            }
        }
        let vv = v.rename(|x| Var::new(x.vertex as usize, x.index as usize + offset.get(x.vertex as usize) as usize));
        Ok(&ff * &vv)
    }

    /// The two-block merge `(a | b) → (| D(a)+b)` applied to a polynomial.
    pub fn absorb(&self, d: &IsoComp, f: &Polynomial) -> Result<Polynomial> {
        if d.len() != 1 {
            bail!(Argument, "{} is not a two-block isotropic composition", d);
        }
        let e = self.quiver.iso(Vec::new(), self.total.clone())?;
        self.merge_component(d, &e, f)
    }
}

impl Realization for MixedSchurAlgebra {
    type Key = IsoComp;

    fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn frame(&self) -> &Frame {
        &self.frame
    }

    fn keys(&self) -> Vec<IsoComp> {
        self.quiver.all_iso(&self.total).expect("quiver has an involution")
    }

    fn parse_key(&self, s: &str) -> Result<IsoComp> {
        let d = self.quiver.parse_iso(s)?;
        self.check_total(&d)?;
        Ok(d)
    }

    fn parabolic(&self, d: &IsoComp) -> Result<Parabolic> {
        self.check_total(d)?;
        theta_parabolic(&self.quiver, d)
    }

    fn refines(&self, d: &IsoComp, e: &IsoComp) -> Option<Vec<usize>> {
        d.refines(e, self.vertex_map())
    }

    fn merge_component(&self, d: &IsoComp, e: &IsoComp, f: &Polynomial) -> Result<Polynomial> {
        let mut g = f.clone();
        for s in self.steps(d, e)?.iter() {
            g = s.sym.apply(&g)?;
        }
        Ok(g)
    }

    fn merge_degree_shift(&self, d: &IsoComp, e: &IsoComp) -> Result<i64> {
        Ok(self.steps(d, e)?.iter().map(|s| s.shift).sum())
    }

    fn wedge_at(&self, d: &IsoComp, k: usize) -> Result<IsoComp> {
        d.theta_wedge_at(k, self.vertex_map())
    }

    /// `s_k d`: for `k < ℓ` the parts `k, k+1` swap, for `k = ℓ` the last part becomes
    /// `θ(d_ℓ)`.
    fn cross_target(&self, d: &IsoComp, k: usize) -> Result<IsoComp> {
        if k == 0 || k > d.len() {
            bail!(Argument, "no crossing at position {} of {}", k, d);
        }
        let t = d.reflect(k, self.vertex_map());
        self.quiver.check_iso(&t)?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::graded::ThetaElement;
    use crate::schur::SchurAlgebra;

    fn x(k: usize) -> Polynomial {
        Polynomial::var(Var::new(0, k))
    }

    /// Jordan quiver with `θ = id`, `σ = 1`, `ς = −1`.
    fn jordan_theta(sigma: i8, varsigma: i8) -> Quiver {
        Quiver::jordan().with_involution(&[], &[], &[("1", sigma)], &[("a1", varsigma)]).unwrap()
    }

    #[test]
    fn absorbing_a_single_part() {
        let q = jordan_theta(1, -1);
        let z = MixedSchurAlgebra::new(&q, &DimVector(vec![2])).unwrap();
        let d = z.parse_key("(1|0)").unwrap();
        let e = z.parse_key("(|2)").unwrap();
        assert!(z.merge_component(&d, &e, &x(1)).unwrap().is_zero());
        assert_eq!(z.merge_component(&d, &e, &x(1).pow(2)).unwrap(), x(1).pow(2).scale(&crate::poly::rat(2)));
        let v = ThetaElement::single(e.clone(), x(1).pow(2));
        assert_eq!(z.apply_split(&e, &d, &v).unwrap(), ThetaElement::single(d.clone(), x(1).pow(2)));
    }

    #[test]
    fn finite_merges_match_the_ordinary_algebra() {
        let q = jordan_theta(1, -1);
        let z = MixedSchurAlgebra::new(&q, &DimVector(vec![4])).unwrap();
        let ord = SchurAlgebra::new(&Quiver::jordan(), &DimVector(vec![2])).unwrap();
        let (d, e) = (z.parse_key("(1,1|0)").unwrap(), z.parse_key("(2|0)").unwrap());
        let (df, ef) = (d.finite_comp().unwrap(), e.finite_comp().unwrap());
        for f in ord.basis(&df, 4).unwrap() {
            assert_eq!(z.merge_component(&d, &e, &f).unwrap(), ord.merge_component(&df, &ef, &f).unwrap());
        }
    }

    #[test]
    fn outputs_are_invariant() {
        for (s, vs) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let q = jordan_theta(s, vs);
            for n in 2..=4u32 {
                let z = MixedSchurAlgebra::new(&q, &DimVector(vec![n])).unwrap();
                for d in z.keys() {
                    for e in z.keys() {
                        if z.refines(&d, &e).is_none() {
                            continue;
                        }
                        for f in z.basis(&d, 3).unwrap() {
                            let g = z.merge_component(&d, &e, &f).unwrap();
                            z.check_invariant(&e, &g).unwrap();
                            if !g.is_zero() {
                                let shift = z.merge_degree_shift(&d, &e).unwrap();
                                assert!(g.is_homogeneous());
                                assert_eq!(g.degree().unwrap() as i64, f.degree().unwrap() as i64 + shift);
                            }
                        }
                    }
                }
            }
        }
    }

    fn swapped_pair() -> Quiver {
        Quiver::new(vec!["1".into(), "2".into()], vec![("a".into(), "1".into(), "2".into())])
            .unwrap()
            .with_involution(&[("1", "2"), ("2", "1")], &[], &[], &[])
            .unwrap()
    }

    fn check_all_merges(z: &MixedSchurAlgebra, deg: u32) {
        let keys = z.keys();
        for d in &keys {
            for e in &keys {
                if z.refines(d, e).is_none() {
                    continue;
                }
                for f in z.basis(d, deg).unwrap() {
                    let g = z.merge_component(d, e, &f).unwrap();
                    z.check_invariant(e, &g).unwrap();
                    for m in &keys {
                        if m != d && m != e && z.refines(d, m).is_some() && z.refines(m, e).is_some() {
                            let two = z.merge_component(m, e, &z.merge_component(d, m, &f).unwrap()).unwrap();
                            assert_eq!(two, g, "{} → {} → {} on {}", d, m, e, f);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn swapped_pair_merges_are_transitive() {
        let q = swapped_pair();
        for n in 1..=2u32 {
            check_all_merges(&MixedSchurAlgebra::new(&q, &DimVector(vec![n, n])).unwrap(), 3);
        }
    }

    #[test]
    fn fixed_vertex_merges_are_transitive() {
        for (s, vs) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let q = jordan_theta(s, vs);
            check_all_merges(&MixedSchurAlgebra::new(&q, &DimVector(vec![5])).unwrap(), 3);
        }
    }
}
