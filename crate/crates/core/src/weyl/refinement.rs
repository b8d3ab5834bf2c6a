//! Orbit data `(e, d, w)`, their refinement data `(ê, d̂, u)` and crossing data.

use super::cosets::min_double_coset_reps;
use super::group::{Parabolic, WeylElement};
use super::parabolics::{kinds, parabolic, theta_kinds, theta_parabolic};
use super::partition::Partitioning;
use super::perm::{Perm, SignedPerm};
use crate::error::{bail, Result};
use crate::quiver::{Comp, DimVector, IsoComp, Quiver};

fn check_minimal(w: &WeylElement, whole: &Parabolic, left: &Parabolic, right: &Parabolic) -> Result<()> {
    if w.kinds() != whole.kinds {
        bail!(Argument, "group element {} does not lie in the expected Weyl group", w);
    }
    let ok = w.0.iter().enumerate().all(|(i, f)| {
        left.gens[i].iter().all(|&j| !f.has_left_descent(j)) && right.gens[i].iter().all(|&j| !f.has_right_descent(j))
    });
    if !ok {
        bail!(Argument, "{} is not a minimal double coset representative", w);
    }
    Ok(())
}

/// The permutation `u` with `u·(λ⨅μ) = μ⨅λ`, from the label pairs of both intersections.
fn swap_permutation(lam: &Partitioning, mu: &Partitioning) -> Result<Perm> {
    let fwd = lam.intersection_pairs(mu)?;
    let bwd = mu.intersection_pairs(lam)?;
    let images = fwd
        .iter()
        .map(|&(k, l)| bwd.binary_search(&(l, k)).expect("pairs are symmetric") as u16 + 1)
        .collect();
    Ok(Perm::from_one_line(images).expect("a bijection between the pair lists"))
}

/// `(e, d, w)` with `w` a minimal double coset representative in `W_e \ W_c / W_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDatum {
    pub e: Comp,
    pub d: Comp,
    pub w: WeylElement,
}

impl OrbitDatum {
    pub fn new(e: Comp, d: Comp, w: WeylElement) -> Result<OrbitDatum> {
        let c = e.total();
        if d.total() != c {
            bail!(Argument, "compositions {} and {} have different totals", e, d);
        }
        check_minimal(&w, &Parabolic::whole(&kinds(&c)), &parabolic(&e), &parabolic(&d))?;
        Ok(OrbitDatum { e, d, w })
    }

    /// Every orbit datum over `c`.
    pub fn all(c: &DimVector) -> Vec<OrbitDatum> {
        let comps = Comp::all_of(c);
        let whole = Parabolic::whole(&kinds(c));
        let mut out = Vec::new();
        for e in &comps {
            let pe = parabolic(e);
            for d in &comps {
                for w in min_double_coset_reps(&whole, &pe, &parabolic(d)) {
                    out.push(OrbitDatum { e: e.clone(), d: d.clone(), w });
                }
            }
        }
        out
    }

    /// `λ = P(e)` and `μ = w·P(d)`.
    pub fn partitionings(&self) -> (Partitioning, Partitioning) {
        (Partitioning::of_comp(&self.e), Partitioning::of_comp(&self.d).act(&self.w))
    }

    pub fn refinement_datum(&self) -> RefinementDatum {
        let (lam, mu) = self.partitionings();
        let lm = lam.ordered_intersection(&mu).expect("same slot set");
        let ml = mu.ordered_intersection(&lam).expect("same slot set");
        RefinementDatum {
            e_hat: lm.to_comp(),
            d_hat: ml.to_comp(),
            u: swap_permutation(&lam, &mu).expect("same slot set"),
        }
    }
}

/// `(ê, d̂, u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementDatum {
    pub e_hat: Comp,
    pub d_hat: Comp,
    pub u: Perm,
}

impl RefinementDatum {
    /// The crossing datum for the canonical reduced word of `u`.
    pub fn crossing_datum(&self) -> CrossingDatum {
        self.crossing_datum_with_word(&self.u.reduced_word()).expect("canonical word is reduced")
    }

    /// The crossing datum for a reduced word `u = s_{word[0]} ⋯ s_{word[k−1]}`.
    pub fn crossing_datum_with_word(&self, word: &[usize]) -> Result<CrossingDatum> {
        let n = self.u.n();
        if word.iter().any(|&j| j == 0 || j >= n) || Perm::from_word(n, word) != self.u || word.len() != self.u.length() {
            bail!(Argument, "{:?} is not a reduced word for {}", word, self.u);
        }
        let mut steps = vec![self.e_hat.clone()];
        for &j in word.iter().rev() {
            let prev = steps.last().unwrap().clone();
            steps.push(prev.wedge_at(j)?);
            steps.push(prev.swap(j));
        }
        debug_assert_eq!(steps.last(), Some(&self.d_hat));
        Ok(CrossingDatum { word: word.to_vec(), steps })
    }
}

/// `(e^0, …, e^{2k})` for a reduced word `u = s_{j_k} ⋯ s_{j_1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingDatum {
    /// The reduced word in product order, so `word[0] = j_k`.
    pub word: Vec<usize>,
    pub steps: Vec<Comp>,
}

impl CrossingDatum {
    pub fn k(&self) -> usize {
        self.word.len()
    }

    /// `j_l` for `l = 1..k`.
    pub fn j(&self, l: usize) -> usize {
        self.word[self.word.len() - l]
    }

    pub fn e(&self, m: usize) -> &Comp {
        &self.steps[m]
    }

    /// `w_l`, the longest minimal representative of `W_{e^{2l−1}} / W_{e^{2l}}`.
    pub fn step_element(&self, l: usize) -> WeylElement {
        let big = parabolic(self.e(2 * l - 1));
        let small = parabolic(self.e(2 * l));
        big.min_left_coset_reps(&small).into_iter().max_by_key(|w| w.length()).unwrap()
    }

    /// `ũ = w_1 ⋯ w_k` together with `ℓ(w_1) + … + ℓ(w_k)`.
    pub fn utilde(&self) -> (WeylElement, usize) {
        let c = self.steps[0].total();
        let mut acc = WeylElement::identity(&kinds(&c));
        let mut total = 0;
        for l in 1..=self.k() {
            let wl = self.step_element(l);
            total += wl.length();
            acc = acc.compose(&wl);
        }
        (acc, total)
    }
}

/// Isotropic orbit datum `(e, d, w)` with `w` minimal in `θW_e \ θW_c / θW_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaOrbitDatum {
    pub e: IsoComp,
    pub d: IsoComp,
    pub w: WeylElement,
}

impl ThetaOrbitDatum {
    pub fn new(q: &Quiver, e: IsoComp, d: IsoComp, w: WeylElement) -> Result<ThetaOrbitDatum> {
        let vm = &q.inv()?.vertex_map;
        let c = e.total(vm);
        if d.total(vm) != c {
            bail!(Argument, "isotropic compositions {} and {} have different totals", e, d);
        }
        q.check_iso(&e)?;
        q.check_iso(&d)?;
        let whole = Parabolic::whole(&theta_kinds(q, &c)?);
        check_minimal(&w, &whole, &theta_parabolic(q, &e)?, &theta_parabolic(q, &d)?)?;
        Ok(ThetaOrbitDatum { e, d, w })
    }

    pub fn all(q: &Quiver, c: &DimVector) -> Result<Vec<ThetaOrbitDatum>> {
        let comps = q.all_iso(c)?;
        let whole = Parabolic::whole(&theta_kinds(q, c)?);
        let mut out = Vec::new();
        for e in &comps {
            let pe = theta_parabolic(q, e)?;
            for d in &comps {
                for w in min_double_coset_reps(&whole, &pe, &theta_parabolic(q, d)?) {
                    out.push(ThetaOrbitDatum { e: e.clone(), d: d.clone(), w });
                }
            }
        }
        Ok(out)
    }

    /// `λ = θP(e)` and `μ = w·θP(d)`.
    pub fn partitionings(&self, q: &Quiver) -> Result<(Partitioning, Partitioning)> {
        let lam = Partitioning::of_iso(q, &self.e)?;
        let mu = Partitioning::of_iso(q, &self.d)?.act_theta(q, &self.w)?;
        Ok((lam, mu))
    }

    pub fn refinement_datum(&self, q: &Quiver) -> Result<ThetaRefinementDatum> {
        let (lam, mu) = self.partitionings(q)?;
        let lm = lam.ordered_intersection(&mu)?;
        let ml = mu.ordered_intersection(&lam)?;
        let n = lm.len();
        let half = n / 2;
        let full = swap_permutation(&lam, &mu)?;
        let images = (1..=half)
            .map(|p| {
                let t = full.apply(p);
                if t <= half {
                    t as i16
                } else {
                    debug_assert!(t > n - half);
                    -((n + 1 - t) as i16)
                }
            })
            .collect();
        let u = SignedPerm::from_one_line(images)
            .ok_or_else(|| crate::Error::Invariant("ordered intersections are not isotropic".into()))?;
        Ok(ThetaRefinementDatum { e_hat: lm.to_iso(q)?, d_hat: ml.to_iso(q)?, u })
    }
}

/// `(ê, d̂, u)` with `u ∈ Z_2 ≀ Sym_ℓ̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaRefinementDatum {
    pub e_hat: IsoComp,
    pub d_hat: IsoComp,
    pub u: SignedPerm,
}

impl ThetaRefinementDatum {
    pub fn crossing_datum(&self, q: &Quiver) -> Result<ThetaCrossingDatum> {
        self.crossing_datum_with_word(q, &self.u.reduced_word())
    }

    pub fn crossing_datum_with_word(&self, q: &Quiver, word: &[usize]) -> Result<ThetaCrossingDatum> {
        let vm = &q.inv()?.vertex_map;
        let n = self.u.n();
        if word.iter().any(|&j| j == 0 || j > n) || SignedPerm::from_word(n, word) != self.u || word.len() != self.u.length()
        {
            bail!(Argument, "{:?} is not a reduced word for {}", word, self.u);
        }
        let mut steps = vec![self.e_hat.clone()];
        for &j in word.iter().rev() {
            let prev = steps.last().unwrap().clone();
            steps.push(prev.theta_wedge_at(j, vm)?);
            steps.push(prev.reflect(j, vm));
        }
        debug_assert_eq!(steps.last(), Some(&self.d_hat));
        Ok(ThetaCrossingDatum { word: word.to_vec(), steps })
    }
}

/// Isotropic crossing datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCrossingDatum {
    pub word: Vec<usize>,
    pub steps: Vec<IsoComp>,
}

impl ThetaCrossingDatum {
    pub fn k(&self) -> usize {
        self.word.len()
    }

    pub fn j(&self, l: usize) -> usize {
        self.word[self.word.len() - l]
    }

    pub fn e(&self, m: usize) -> &IsoComp {
        &self.steps[m]
    }

    pub fn step_element(&self, q: &Quiver, l: usize) -> Result<WeylElement> {
        let big = theta_parabolic(q, self.e(2 * l - 1))?;
        let small = theta_parabolic(q, self.e(2 * l))?;
        Ok(big.min_left_coset_reps(&small).into_iter().max_by_key(|w| w.length()).unwrap())
    }

    pub fn utilde(&self, q: &Quiver) -> Result<(WeylElement, usize)> {
        let c = self.steps[0].total(&q.inv()?.vertex_map);
        let mut acc = WeylElement::identity(&theta_kinds(q, &c)?);
        let mut total = 0;
        for l in 1..=self.k() {
            let wl = self.step_element(q, l)?;
            total += wl.length();
            acc = acc.compose(&wl);
        }
        Ok((acc, total))
    }
}

/// Applies a signed permutation to the finite parts: `(u·e)_{|u(p)|} = e_p`, twisted by `θ`
/// when `u(p) < 0`.
pub fn act_signed_iso(u: &SignedPerm, e: &IsoComp, vertex_map: &[usize]) -> Result<IsoComp> {
    if u.n() != e.len() {
        bail!(Argument, "signed permutation of rank {} on {} finite parts", u.n(), e.len());
    }
    let mut finite = e.finite().to_vec();
    for (p, part) in e.finite().iter().enumerate() {
        let t = u.apply(p + 1);
        finite[t.unsigned_abs() as usize - 1] = if t < 0 { part.theta(vertex_map) } else { part.clone() };
    }
    IsoComp::new(finite, e.inf().clone(), vertex_map)
}

/// `(u·e)_{u(p)} = e_p`.
pub fn act_perm_comp(u: &Perm, e: &Comp) -> Result<Comp> {
    if u.n() != e.len() {
        bail!(Argument, "permutation of {} letters on {} parts", u.n(), e.len());
    }
    let mut parts = e.parts().to_vec();
    for (p, part) in e.parts().iter().enumerate() {
        parts[u.apply(p + 1) - 1] = part.clone();
    }
    Comp::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::group::FactorKind;

    fn sym_word(n: usize, word: &[usize]) -> WeylElement {
        WeylElement::from_words(&[FactorKind::Sym(n)], &[word.to_vec()])
    }

    #[test]
    fn c8_example() {
        let e = Comp::ints(&[3, 2, 3]).unwrap();
        let d = Comp::ints(&[4, 2, 2]).unwrap();
        let od = OrbitDatum::new(e, d, sym_word(8, &[3, 4, 5, 6])).unwrap();
        let q = Quiver::a1();
        let (lam, mu) = od.partitionings();
        assert_eq!(lam.to_text(&q), "[1,2,3][4,5][6,7,8]");
        assert_eq!(mu.to_text(&q), "[1,2,4,5][6,7][3,8]");
        let rd = od.refinement_datum();
        assert_eq!(rd.e_hat, Comp::ints(&[2, 1, 2, 2, 1]).unwrap());
        assert_eq!(rd.d_hat, Comp::ints(&[2, 2, 2, 1, 1]).unwrap());
        assert_eq!(rd.u, Perm::from_word(5, &[3, 2]));
        assert_eq!(act_perm_comp(&rd.u, &rd.e_hat).unwrap(), rd.d_hat);
        let cd = rd.crossing_datum();
        assert_eq!(cd.word, vec![3, 2]);
        assert_eq!(cd.e(1), &Comp::ints(&[2, 3, 2, 1]).unwrap());
        assert_eq!(cd.e(2), &Comp::ints(&[2, 2, 1, 2, 1]).unwrap());
        assert_eq!(cd.e(3), &Comp::ints(&[2, 2, 3, 1]).unwrap());
        assert_eq!(cd.e(4), &rd.d_hat);
        let (ut, len) = cd.utilde();
        assert_eq!(ut, od.w);
        assert_eq!(len, 4);
    }

    #[test]
    fn rejects_non_minimal() {
        let e = Comp::ints(&[1, 1]).unwrap();
        let d = Comp::ints(&[2]).unwrap();
        assert!(OrbitDatum::new(e, d, sym_word(2, &[1])).is_err());
    }

    #[test]
    fn identity_datum() {
        let e = Comp::ints(&[2, 1]).unwrap();
        let od = OrbitDatum::new(e.clone(), e.clone(), sym_word(3, &[])).unwrap();
        let rd = od.refinement_datum();
        assert_eq!((rd.e_hat.clone(), rd.d_hat.clone()), (e.clone(), e));
        assert!(rd.u.is_identity());
        let cd = rd.crossing_datum();
        assert_eq!(cd.k(), 0);
        assert!(cd.utilde().0.is_identity());
    }

    fn a3() -> Quiver {
        let v = |s: &str| s.to_string();
        Quiver::new(
            vec![v("i1"), v("i2"), v("i3")],
            vec![(v("a"), v("i1"), v("i2")), (v("b"), v("i2"), v("i3"))],
        )
        .unwrap()
    }

    #[test]
    fn a3_example() {
        let q = a3();
        let e = q.parse_comp("(3i1+2i3, 2i2+i3, 2i1+2i2)").unwrap();
        let d = q.parse_comp("(2i1+3i2+i3, 3i1+i2+2i3)").unwrap();
        let c = e.total();
        let w = WeylElement::from_words(&kinds(&c), &[vec![3, 2], vec![2, 3], vec![2, 1]]);
        let od = OrbitDatum::new(e, d, w).unwrap();
        let (lam, mu) = od.partitionings();
        assert_eq!(lam.to_text(&q), "[1@i1,2@i1,3@i1,1@i3,2@i3][1@i2,2@i2,3@i3][4@i1,5@i1,3@i2,4@i2]");
        assert_eq!(mu.to_text(&q), "[1@i1,4@i1,1@i2,3@i2,4@i2,3@i3][2@i1,3@i1,5@i1,2@i2,1@i3,2@i3]");
        let rd = od.refinement_datum();
        assert_eq!(rd.e_hat, q.parse_comp("(i1, 2i1+2i3, i2+i3, i2, i1+2i2, i1)").unwrap());
        assert_eq!(rd.d_hat, q.parse_comp("(i1, i2+i3, i1+2i2, 2i1+2i3, i2, i1)").unwrap());
        assert_eq!(rd.u, Perm::from_word(6, &[3, 2, 4]));
        let cd = rd.crossing_datum_with_word(&[3, 2, 4]).unwrap();
        let expect = [
            "(i1, 2i1+2i3, i2+i3, i1+3i2, i1)",
            "(i1, 2i1+2i3, i2+i3, i1+2i2, i2, i1)",
            "(i1, 2i1+i2+3i3, i1+2i2, i2, i1)",
            "(i1, i2+i3, 2i1+2i3, i1+2i2, i2, i1)",
            "(i1, i2+i3, 3i1+2i2+2i3, i2, i1)",
        ];
        for (m, s) in expect.iter().enumerate() {
            assert_eq!(cd.e(m + 1), &q.parse_comp(s).unwrap(), "e^{}", m + 1);
        }
        assert_eq!(cd.e(6), &rd.d_hat);
        assert_eq!(cd.utilde().0, od.w);
        assert!(rd.crossing_datum_with_word(&[3, 2]).is_err());
        assert_eq!(rd.crossing_datum().utilde().0, od.w);
    }

    #[test]
    fn isotropic_c14_example() {
        let q = Quiver::one_vertex(0).with_involution(&[], &[], &[], &[]).unwrap();
        let e = q.parse_iso("(3,2|4)").unwrap();
        let d = q.parse_iso("(4,2|2)").unwrap();
        let c = e.total(&[0]);
        let w = WeylElement::from_words(&theta_kinds(&q, &c).unwrap(), &[vec![5, 6, 7, 6, 5, 3, 4, 5, 6]]);
        let od = ThetaOrbitDatum::new(&q, e, d, w).unwrap();
        let rd = od.refinement_datum(&q).unwrap();
        assert_eq!(rd.e_hat, q.parse_iso("(2,1,1,1,2|0)").unwrap());
        assert_eq!(rd.d_hat, q.parse_iso("(2,1,1,2,1|0)").unwrap());
        assert_eq!(rd.u, SignedPerm::from_word(5, &[4, 3, 2, 4, 5, 4]));
        assert_eq!(act_signed_iso(&rd.u, &rd.e_hat, &[0]).unwrap(), rd.d_hat);
        let cd = rd.crossing_datum(&q).unwrap();
        assert_eq!(cd.steps.last(), Some(&rd.d_hat));
        let (ut, len) = cd.utilde(&q).unwrap();
        assert_eq!(ut, od.w);
        assert_eq!(len, od.w.length());
    }

    #[test]
    fn utilde_exhaustive_small() {
        for n in 1..=5u32 {
            for od in OrbitDatum::all(&DimVector(vec![n])) {
                let cd = od.refinement_datum().crossing_datum();
                let (ut, len) = cd.utilde();
                assert_eq!(ut, od.w, "{:?}", od);
                assert_eq!(len, ut.length());
            }
        }
    }
}
