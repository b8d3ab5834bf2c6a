//! The product classes `S_d`, `E_d`, their relative versions, and the isotropic
//! classes `θS_d`, `θE_d` for two-block data `d = (a | b)`.

use super::monomial::Var;
use super::roots::{LinearForm, RootProduct};
use crate::error::{bail, Result};
use crate::quiver::{Comp, DimVector, IsoComp, Quiver, Side};
use crate::weyl::Slot;

/// 1-based block index of position `p` at vertex `i`.
fn block_of(bounds: &[u32], p: usize) -> usize {
    bounds.iter().position(|&b| p as u32 <= b).expect("position within the total") + 1
}

/// Partial sums `d_1(i), d_1(i)+d_2(i), …` at every vertex.
fn bounds(d: &Comp) -> Vec<Vec<u32>> {
    (0..d.n_vertices()).map(|i| d.partial_sums(i)[1..].to_vec()).collect()
}

/// For `d` refining `e`, the `e`-block of every `d`-block.
fn coarse_map(d: &Comp, e: &Comp) -> Result<Vec<usize>> {
    if d.total() != e.total() {
        bail!(Division, "{} and {} have different totals", d, e);
    }
    let Some(beta) = d.refines(e) else { bail!(Division, "{} does not refine {}", d, e) };
    Ok(beta.iter().enumerate().flat_map(|(b, &n)| std::iter::repeat(b + 1).take(n)).collect())
}

/// `S^e_d = S_d / S_e`: factors `x_l(i) − x_k(i)` over pairs `k, l` at one vertex lying
/// in `d`-blocks `β < β'` inside a common `e`-block.
pub fn relative_s(d: &Comp, e: &Comp) -> Result<RootProduct> {
    let map = coarse_map(d, e)?;
    let bd = bounds(d);
    let c = d.total();
    let mut forms = Vec::new();
    for i in 0..c.len() {
        let n = c.get(i) as usize;
        for k in 1..=n {
            for l in k + 1..=n {
                let (bk, bl) = (block_of(&bd[i], k), block_of(&bd[i], l));
                if bk < bl && map[bk - 1] == map[bl - 1] {
                    forms.push(LinearForm::diff(Var::new(i, l), Var::new(i, k)));
                }
            }
        }
    }
    Ok(RootProduct::from_forms(forms))
}

/// `E^e_d = E_d / E_e`: for every arrow `i → j`, factors `x_l(j) − x_k(i)` over `k` at
/// `i` and `l` at `j` whose `d`-blocks satisfy `β(k) < β(l)` inside a common `e`-block.
pub fn relative_e(q: &Quiver, d: &Comp, e: &Comp) -> Result<RootProduct> {
    let map = coarse_map(d, e)?;
    if d.n_vertices() != q.n_vertices() {
        bail!(Structure, "composition {} does not match the quiver", d);
    }
    let bd = bounds(d);
    let c = d.total();
    let mut forms = Vec::new();
    for a in &q.arrows {
        let (i, j) = (a.src, a.tgt);
        for k in 1..=c.get(i) as usize {
            for l in 1..=c.get(j) as usize {
                let (bk, bl) = (block_of(&bd[i], k), block_of(&bd[j], l));
                if bk < bl && map[bk - 1] == map[bl - 1] {
                    forms.push(LinearForm::diff(Var::new(j, l), Var::new(i, k)));
                }
            }
        }
    }
    Ok(RootProduct::from_forms(forms))
}

/// `S_d`.
pub fn class_s(d: &Comp) -> RootProduct {
    relative_s(d, &Comp::new(vec![d.total()]).expect("nonzero total")).expect("every composition refines (c)")
}

/// `E_d`.
pub fn class_e(q: &Quiver, d: &Comp) -> Result<RootProduct> {
    relative_e(q, d, &Comp::new(vec![d.total()])?)
}

/// The variable attached to a slot of `N_c` in the isotropic frame: `x_p(i)` at `+`
/// vertices, `−x_{c−p+1}(θ i)` at `−` vertices, and at θ-fixed vertices `x_p` for
/// `p ≤ ⌊c/2⌋`, zero at the middle slot, `−x_{c−p+1}` beyond it.
pub fn slot_form(q: &Quiver, c: &DimVector, slot: Slot) -> Result<LinearForm> {
    let inv = q.inv()?;
    let (v, p) = slot;
    let n = c.get(v) as usize;
    if p == 0 || p > n {
        bail!(Argument, "slot ({},{}) is outside N_c", p, v + 1);
    }
    Ok(match inv.vertex_side[v] {
        Side::Plus => LinearForm::var(Var::new(v, p)),
        Side::Minus => LinearForm::var(Var::new(inv.vertex_map[v], n + 1 - p)).scale(-1),
        Side::Fixed => {
            let h = n / 2;
            if p <= h {
                LinearForm::var(Var::new(v, p))
            } else if p > n - h {
                LinearForm::var(Var::new(v, n + 1 - p)).scale(-1)
            } else {
                LinearForm::zero()
            }
        }
    })
}

/// Sizes `(a(i), b(i), a(θ i))` of the three slot blocks of `D(a | b)` at every vertex.
fn three_blocks(q: &Quiver, d: &IsoComp) -> Result<Vec<[usize; 3]>> {
    let inv = q.inv()?;
    if d.len() > 1 {
        bail!(Argument, "θ-classes are defined for two-block data (a | b); got {}", d);
    }
    let zero = DimVector::zero(q.n_vertices());
    let a = d.finite().first().unwrap_or(&zero);
    let b = d.inf();
    Ok((0..q.n_vertices())
        .map(|i| [a.get(i) as usize, b.get(i) as usize, a.get(inv.vertex_map[i]) as usize])
        .collect())
}

fn slot_block(sizes: &[usize; 3], p: usize) -> usize {
    if p <= sizes[0] {
        1
    } else if p <= sizes[0] + sizes[1] {
        2
    } else {
        3
    }
}

/// `θS_d` for `d = (a | b)`.
pub fn theta_s(q: &Quiver, d: &IsoComp) -> Result<RootProduct> {
    let inv = q.inv()?;
    let blocks = three_blocks(q, d)?;
    let c = d.total(&inv.vertex_map);
    let mut out = RootProduct::one();
    for i in 0..q.n_vertices() {
        let x = |k: usize| Var::new(i, k);
        let [a, _, _] = blocks[i];
        match inv.vertex_side[i] {
            Side::Plus => {
                let n = c.get(i) as usize;
                for k in 1..=n {
                    for l in k + 1..=n {
                        if slot_block(&blocks[i], k) < slot_block(&blocks[i], l) {
                            out.push(&LinearForm::diff(x(l), x(k)));
                        }
                    }
                }
            }
            Side::Fixed => {
                let n = c.get(i) as usize / 2;
                let g = if inv.sigma[i] == -1 {
                    -2
                } else if c.get(i) % 2 == 1 {
                    -1
                } else {
                    0
                };
                if g != 0 {
                    for k in 1..=a {
                        out.push(&LinearForm::var(x(k)).scale(g));
                    }
                }
                for k in 1..=a {
                    for l in k + 1..=a {
                        out.push(&LinearForm::new([(x(k), -1), (x(l), -1)]));
                    }
                    for l in a + 1..=n {
                        out.push(&LinearForm::diff(x(k), x(l)));
                        out.push(&LinearForm::new([(x(k), 1), (x(l), 1)]));
                    }
                }
            }
            Side::Minus => {}
        }
    }
    Ok(out)
}

/// `θE_d` for `d = (a | b)`. Every arrow `a: i → j` with `θ(a) ≠ a` on the `+` side
/// contributes `var(t) − var(s)` for source slots `s` and target slots `t` whose blocks
/// in `D(d)` increase. An arrow `θ(i) → i` fixed by `θ` contributes every pair from
/// block 1 to block 2, and from the pairs between block 1 and block 3 the factors
/// `−var(l) − var(k)` with `k ≤ l` if `σ(i)ς(a) = 1` and `k < l` otherwise.
pub fn theta_e(q: &Quiver, d: &IsoComp) -> Result<RootProduct> {
    let inv = q.inv()?;
    let blocks = three_blocks(q, d)?;
    let c = d.total(&inv.vertex_map);
    let mut out = RootProduct::one();
    for (ai, arrow) in q.arrows.iter().enumerate() {
        let (s, t) = (arrow.src, arrow.tgt);
        let slots = |v: usize, b: usize| -> Vec<usize> {
            (1..=c.get(v) as usize).filter(|&p| slot_block(&blocks[v], p) == b).collect()
        };
        match inv.arrow_side[ai] {
            Side::Plus => {
                for k in 1..=c.get(s) as usize {
                    for l in 1..=c.get(t) as usize {
                        if slot_block(&blocks[s], k) < slot_block(&blocks[t], l) {
                            out.push(&slot_form(q, &c, (t, l))?.sub(&slot_form(q, &c, (s, k))?));
                        }
                    }
                }
            }
            Side::Fixed => {
                for &k in &slots(s, 1) {
                    for &l in &slots(t, 2) {
                        out.push(&slot_form(q, &c, (t, l))?.sub(&slot_form(q, &c, (s, k))?));
                    }
                }
                let strict = inv.sigma[t] * inv.varsigma[ai] == -1;
                let first = slots(s, 1);
                for (x, &k) in first.iter().enumerate() {
                    for &l in &first[x..] {
                        if strict && k == l {
                            continue;
                        }
                        let f = slot_form(q, &c, (s, k))?.add(&slot_form(q, &c, (s, l))?).scale(-1);
                        out.push(&f);
                    }
                }
            }
            Side::Minus => {}
        }
    }
    Ok(out)
}

/// `θr_d = |θR^+_c − θR^+_d|`, the number of factors of `θS_d`.
pub fn theta_r(q: &Quiver, d: &IsoComp) -> Result<usize> {
    Ok(theta_s(q, d)?.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn x(k: usize) -> Polynomial {
        Polynomial::var(Var::new(0, k))
    }

    #[test]
    fn a1_and_jordan_classes() {
        let d = Comp::ints(&[1, 1]).unwrap();
        assert_eq!(class_s(&d).to_polynomial(), &x(2) - &x(1));
        assert_eq!(class_e(&Quiver::a1(), &d).unwrap().to_polynomial(), Polynomial::one());
        assert_eq!(class_e(&Quiver::jordan(), &d).unwrap().to_polynomial(), &x(2) - &x(1));
        let whole = Comp::ints(&[3]).unwrap();
        assert_eq!(class_s(&whole).to_polynomial(), Polynomial::one());
        assert_eq!(class_e(&Quiver::jordan(), &whole).unwrap().to_polynomial(), Polynomial::one());
    }

    #[test]
    fn relative_classes_divide() {
        let q = Quiver::jordan();
        let d = Comp::ints(&[1, 2, 1, 1]).unwrap();
        let e = Comp::ints(&[3, 2]).unwrap();
        let s = relative_s(&d, &e).unwrap().to_polynomial();
        assert_eq!(s, class_s(&d).to_polynomial().exact_div(&class_s(&e).to_polynomial()).unwrap());
        let ee = relative_e(&q, &d, &e).unwrap().to_polynomial();
        let oracle = class_e(&q, &d).unwrap().to_polynomial().exact_div(&class_e(&q, &e).unwrap().to_polynomial());
        assert_eq!(ee, oracle.unwrap());
        assert!(matches!(relative_s(&e, &d), Err(crate::Error::Division(_))));
    }

    fn jordan_theta(sigma: i8, varsigma: i8) -> Quiver {
        Quiver::jordan().with_involution(&[], &[], &[("1", sigma)], &[("a1", varsigma)]).unwrap()
    }

    #[test]
    fn theta_classes_on_jordan() {
        let q = jordan_theta(1, -1);
        let d = q.parse_iso("(1|0)").unwrap();
        assert_eq!(theta_s(&q, &d).unwrap().to_polynomial(), Polynomial::one());
        assert_eq!(theta_e(&q, &d).unwrap().to_polynomial(), Polynomial::one());
        let q = jordan_theta(-1, 1);
        let d = q.parse_iso("(1|0)").unwrap();
        assert_eq!(theta_s(&q, &d).unwrap().to_polynomial(), x(1).scale(&crate::poly::rat(-2)));
    }

    fn triangle_identity(q: &Quiver, c: &DimVector) {
        use crate::poly::Frame;
        use crate::weyl::theta_parabolic;
        let fr = Frame::theta(q, c).unwrap();
        let big = fr.triangle(&fr.whole()).to_polynomial();
        for d in q.all_iso(c).unwrap().into_iter().filter(|d| d.len() <= 1) {
            let small = fr.triangle(&theta_parabolic(q, &d).unwrap()).to_polynomial();
            let ts = theta_s(q, &d).unwrap();
            let sign = if ts.degree() % 2 == 0 { 1 } else { -1 };
            let rhs = (&small * &ts.to_polynomial()).scale(&crate::poly::rat(sign));
            assert_eq!(big, rhs, "d = {}", d);
        }
    }

    #[test]
    fn triangle_factorization_fixed_vertex() {
        for sigma in [1, -1] {
            let q = Quiver::a1().with_involution(&[], &[], &[("1", sigma)], &[]).unwrap();
            for n in 1..=7 {
                triangle_identity(&q, &DimVector(vec![n]));
            }
        }
    }

    #[test]
    fn triangle_factorization_swapped_pair() {
        let q = Quiver::new(vec!["1".into(), "2".into()], vec![("a".into(), "1".into(), "2".into())])
            .unwrap()
            .with_involution(&[("1", "2"), ("2", "1")], &[], &[], &[])
            .unwrap();
        for n in 1..=4 {
            triangle_identity(&q, &DimVector(vec![n, n]));
        }
    }
}
