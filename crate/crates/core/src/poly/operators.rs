//! Demazure operators and symmetrizers `Σ_w w(N·f/D)` with exact clearing of denominators.

use super::monomial::{Monomial, Var};
use super::polynomial::{Polynomial, Rat};
use super::roots::{Frame, LinearForm, RootProduct};
use crate::error::{bail, Result};
use crate::weyl::{Parabolic, WeylElement};
use num_traits::One;
use std::collections::BTreeMap;

fn divide_out(mut acc: Polynomial, forms: &[LinearForm], what: &str) -> Result<Polynomial> {
    for l in forms {
        acc = acc
            .exact_div(&l.to_polynomial())
            .map_err(|_| crate::Error::Invariant(format!("{}: the denominator {} does not clear", what, l)))?;
    }
    Ok(acc)
}

/// `Δ_j(i) f = (f − s_j(i) f) / α_j(i)`.
pub fn demazure_simple(frame: &Frame, vertex: usize, j: usize, f: &Polynomial) -> Result<Polynomial> {
    let Some(alpha) = frame.simple_root(vertex, j) else {
        bail!(Argument, "s_{} at vertex {} has no simple root in this root system", j, vertex + 1)
    };
    let s = WeylElement::simple(&frame.kinds, vertex, j);
    let num = f - &s.act(f);
    num.exact_div(&alpha.to_polynomial())
}

/// `Δ_w = Δ_{j_1} ⋯ Δ_{j_k}` for the canonical reduced word of `w` at every vertex.
pub fn demazure_word(frame: &Frame, w: &WeylElement, f: &Polynomial) -> Result<Polynomial> {
    let mut acc = f.clone();
    for (i, factor) in w.0.iter().enumerate() {
        for &j in factor.reduced_word().iter().rev() {
            acc = demazure_simple(frame, i, j, &acc)?;
        }
    }
    Ok(acc)
}

/// `Δ_P f = Σ_{w ∈ P} w(f / ▲_P)`, computed as `(Σ_w ε_w w(f)) / ▲_P` where
/// `w(▲_P) = ε_w ▲_P`.
#[derive(Clone, Debug)]
pub struct DemazureSum {
    terms: Vec<(WeylElement, bool)>,
    triangle: RootProduct,
}

impl DemazureSum {
    pub fn new(frame: &Frame, p: &Parabolic) -> DemazureSum {
        let triangle = frame.triangle(p);
        let terms = p
            .elements()
            .into_iter()
            .map(|w| {
                let moved = triangle.act(&w);
                debug_assert_eq!(moved.factors, triangle.factors);
                let neg = moved.scalar != triangle.scalar;
                (w, neg)
            })
            .collect();
        DemazureSum { terms, triangle }
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        for (w, neg) in &self.terms {
            let g = w.act(f);
            if *neg {
                acc = &acc - &g;
            } else {
                acc.add_assign_ref(&g);
            }
        }
        let acc = divide_out(acc, &self.triangle.factors, "Demazure sum")?;
        Ok(acc.scale(&(Rat::one() / &self.triangle.scalar)))
    }

    pub fn triangle(&self) -> &RootProduct {
        &self.triangle
    }
}

/// Monomials of degree `deg` in `vars`, in lexicographic order of exponent vectors.
pub fn monomials_of_degree(vars: &[Var], deg: u32) -> Vec<Monomial> {
    fn rec(vars: &[Var], deg: u32, cur: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if deg == 0 {
                    out.push(Monomial::from_pairs(cur.iter().copied()));
                }
            }
            Some((&v, rest)) => {
                for e in (0..=deg).rev() {
                    cur.push((v, e));
                    rec(rest, deg - e, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, deg, &mut Vec::new(), &mut out);
    out
}

/// A polynomial `h` with `Δ_P(h) = 1`, searched among scaled monomials of degree `|R^+_P|`
/// in the variables moved by `P`.
pub fn demazure_section(frame: &Frame, p: &Parabolic) -> Result<Polynomial> {
    let n_roots = frame.positive_roots(p).len() as u32;
    let moved: Vec<Var> = frame
        .blocks(p)
        .iter()
        .filter(|bl| bl.len() > 1 || bl.signed)
        .flat_map(|bl| (bl.start..=bl.end).map(move |k| Var::new(bl.vertex, k)))
        .collect();
    let sum = DemazureSum::new(frame, p);
    for m in monomials_of_degree(&moved, n_roots) {
        let r = sum.apply(&Polynomial::monomial(m.clone()))?;
        if !r.is_zero() && r.is_constant() {
            return Ok(Polynomial::term(Rat::one() / r.constant_term(), m));
        }
    }
    bail!(Invariant, "no monomial of degree {} has a constant Demazure image", n_roots)
}

/// `f ↦ Σ_{w ∈ reps} w(N·f / D)` for a polynomial `N` and a product of linear forms `D`.
///
/// With `L` the least common multiple of the `w(D)` (as multisets of normalized forms),
/// the sum is `(Σ_w w(f)·w(N)·L/w(D)) / L`; the final division must be exact.
#[derive(Clone, Debug)]
pub struct Symmetrizer {
    terms: Vec<(WeylElement, Polynomial)>,
    lcm: Vec<LinearForm>,
}

impl Symmetrizer {
    pub fn new(reps: Vec<WeylElement>, numerator: &Polynomial, denominator: &RootProduct) -> Result<Symmetrizer> {
        if denominator.is_zero() {
            bail!(Division, "symmetrizer with a zero denominator");
        }
        let moved: Vec<RootProduct> = reps.iter().map(|w| denominator.act(w)).collect();
        let mut lcm: BTreeMap<LinearForm, usize> = BTreeMap::new();
        for m in &moved {
            for (f, k) in m.counts() {
                let e = lcm.entry(f).or_insert(0);
                *e = (*e).max(k);
            }
        }
        let lcm_list: Vec<LinearForm> = lcm.iter().flat_map(|(f, &k)| std::iter::repeat(f.clone()).take(k)).collect();
        let mut terms = Vec::with_capacity(reps.len());
        for (w, m) in reps.into_iter().zip(moved) {
            let mut cof = lcm.clone();
            for f in &m.factors {
                *cof.get_mut(f).unwrap() -= 1;
            }
            let cofactor = RootProduct::from_forms(cof.iter().flat_map(|(f, &k)| std::iter::repeat(f.clone()).take(k)))
                .scale(&(Rat::one() / &m.scalar));
            let p = &w.act(numerator) * &cofactor.to_polynomial();
            terms.push((w, p));
        }
        Ok(Symmetrizer { terms, lcm: lcm_list })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn reps(&self) -> impl Iterator<Item = &WeylElement> {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut acc = Polynomial::zero();
        for (w, p) in &self.terms {
            acc.add_assign_ref(&(&w.act(f) * p));
        }
        divide_out(acc, &self.lcm, "symmetrizer")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Var};
    use crate::quiver::DimVector;
    use crate::weyl::{FactorKind, Parabolic};
    use crate::poly::roots::RootType;

    fn x(k: usize) -> Polynomial {
        Polynomial::var(Var::new(0, k))
    }

    fn a(n: u32) -> Frame {
        Frame::ordinary(&DimVector(vec![n]))
    }

    #[test]
    fn simple_demazure_examples() {
        let fr = a(2);
        assert_eq!(demazure_simple(&fr, 0, 1, &x(1)).unwrap(), Polynomial::one());
        assert!(demazure_simple(&fr, 0, 1, &(&x(1) * &x(2))).unwrap().is_zero());
        assert_eq!(demazure_simple(&fr, 0, 1, &x(1).pow(2)).unwrap(), &x(1) + &x(2));
    }

    #[test]
    fn sum_matches_simple_in_rank_one() {
        let fr = a(2);
        let ds = DemazureSum::new(&fr, &fr.whole());
        for f in [x(1), x(1).pow(3), &x(1) * &x(2).pow(2)] {
            assert_eq!(ds.apply(&f).unwrap(), demazure_simple(&fr, 0, 1, &f).unwrap());
        }
    }

    #[test]
    fn hyperoctahedral_rank_one() {
        let fr = Frame { kinds: vec![FactorKind::Hyp(1)], types: vec![RootType::B] };
        let ds = DemazureSum::new(&fr, &fr.whole());
        assert_eq!(ds.apply(&x(1)).unwrap(), Polynomial::int(2));
        assert_eq!(demazure_simple(&fr, 0, 1, &x(1)).unwrap(), Polynomial::int(2));
    }

    #[test]
    fn symmetrizer_examples() {
        let fr = a(2);
        let reps = fr.whole().min_left_coset_reps(&Parabolic::from_blocks(&fr.kinds, &[vec![1, 1]], &[0]));
        let den = RootProduct::from_forms([LinearForm::diff(Var::new(0, 2), Var::new(0, 1))]);
        let s = Symmetrizer::new(reps.clone(), &Polynomial::one(), &den).unwrap();
        assert_eq!(s.apply(&x(1)).unwrap(), Polynomial::int(-1));
        assert!(s.apply(&Polynomial::one()).unwrap().is_zero());
        let plain = Symmetrizer::new(reps, &Polynomial::one(), &RootProduct::one()).unwrap();
        assert_eq!(plain.apply(&x(1)).unwrap(), &x(1) + &x(2));
        assert_eq!(plain.apply(&Polynomial::int(3)).unwrap(), Polynomial::constant(rat(6)));
    }

    #[test]
    fn residual_denominator_is_reported() {
        let fr = a(2);
        let den = RootProduct::from_forms([LinearForm::var(Var::new(0, 1))]);
        let s = Symmetrizer::new(vec![fr.identity()], &Polynomial::one(), &den).unwrap();
        assert!(matches!(s.apply(&x(2)), Err(crate::Error::Invariant(_))));
    }

    fn staircase(n: usize) -> Polynomial {
        let mut m = Polynomial::one();
        for k in 1..=n {
            m = &m * &x(k).pow(2 * k as u32 - 1);
        }
        m
    }

    /// Antisymmetrizing `x_1^{2n−1} x_2^{2n−3} ⋯ x_n` over the signed permutations gives
    /// `2^n ▲`; the staircase with increasing exponents differs by the longest element of
    /// `Sym_n`, of sign `(−1)^{n(n−1)/2}`.
    #[test]
    fn staircase_closed_form_type_b() {
        for n in 1..=4usize {
            let fr = Frame { kinds: vec![FactorKind::Hyp(n)], types: vec![RootType::B] };
            let v = DemazureSum::new(&fr, &fr.whole()).apply(&staircase(n)).unwrap();
            let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(v, Polynomial::constant(rat(sign << n)), "n = {}", n);
        }
    }
}
