//! Integer linear forms, products of them, and the root data of Weyl group frames.

use super::monomial::Var;
use super::polynomial::{rat, Polynomial, Rat};
use crate::quiver::{DimVector, Quiver, Side};
use crate::weyl::{kinds, theta_kinds, FactorKind, Parabolic, WeylElement};
use crate::error::Result;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse integer linear form `Σ a_v v`, sorted by variable, without zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LinearForm(Vec<(Var, i64)>);

impl LinearForm {
    pub fn new(terms: impl IntoIterator<Item = (Var, i64)>) -> LinearForm {
        let mut acc: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, a) in terms {
            *acc.entry(v).or_insert(0) += a;
        }
        LinearForm(acc.into_iter().filter(|p| p.1 != 0).collect())
    }

    pub fn var(v: Var) -> LinearForm {
        LinearForm(vec![(v, 1)])
    }

    /// `a − b`.
    pub fn diff(a: Var, b: Var) -> LinearForm {
        LinearForm::new([(a, 1), (b, -1)])
    }

    pub fn zero() -> LinearForm {
        LinearForm(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &[(Var, i64)] {
        &self.0
    }

    pub fn scale(&self, s: i64) -> LinearForm {
        LinearForm::new(self.0.iter().map(|&(v, a)| (v, a * s)))
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        self.add(&other.scale(-1))
    }

    /// Replaces every variable by a linear form.
    pub fn substitute(&self, map: impl Fn(Var) -> LinearForm) -> LinearForm {
        LinearForm::new(self.0.iter().flat_map(|&(v, a)| map(v).0.into_iter().map(move |(w, b)| (w, a * b))))
    }

    pub fn act(&self, w: &WeylElement) -> LinearForm {
        LinearForm::new(self.0.iter().map(|&(v, a)| {
            let (img, neg) = w.image(v);
            (img, if neg { -a } else { a })
        }))
    }

    /// Splits off an integer scalar: `self = s · n` with `n` primitive and its first
    /// coefficient positive.
    pub fn normalize(&self) -> (i64, LinearForm) {
        if self.0.is_empty() {
            return (0, LinearForm::zero());
        }
        let mut g = self.0.iter().fold(0i64, |g, p| g.gcd(&p.1));
        if self.0[0].1 < 0 {
            g = -g;
        }
        (g, LinearForm(self.0.iter().map(|&(v, a)| (v, a / g)).collect()))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.0)
    }
}

impl Polynomial {
    /// Replaces every variable by a linear form.
    pub fn substitute_linear(&self, map: impl Fn(Var) -> LinearForm) -> Polynomial {
        let mut images: BTreeMap<Var, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.pairs() {
                let img = images.entry(v).or_insert_with(|| map(v).to_polynomial());
                t = &t * &img.pow(e);
            }
            out.add_assign_ref(&t);
        }
        out
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// `scalar · ∏ factors` with every factor normalized; the factors are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootProduct {
    pub scalar: Rat,
    pub factors: Vec<LinearForm>,
}

impl RootProduct {
    pub fn one() -> RootProduct {
        RootProduct { scalar: Rat::one(), factors: Vec::new() }
    }

    pub fn constant(c: Rat) -> RootProduct {
        RootProduct { scalar: c, factors: Vec::new() }
    }

    /// Product of the given forms; a zero form makes the whole product zero.
    pub fn from_forms(forms: impl IntoIterator<Item = LinearForm>) -> RootProduct {
        let mut out = RootProduct::one();
        for f in forms {
            out.push(&f);
        }
        out
    }

    pub fn push(&mut self, f: &LinearForm) {
        let (s, n) = f.normalize();
        self.scalar *= rat(s);
        if s != 0 {
            let pos = self.factors.binary_search(&n).unwrap_or_else(|e| e);
            self.factors.insert(pos, n);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar == Rat::from_integer(0.into())
    }

    pub fn mul(&self, other: &RootProduct) -> RootProduct {
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for f in &other.factors {
            let pos = out.factors.binary_search(f).unwrap_or_else(|e| e);
            out.factors.insert(pos, f.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> RootProduct {
        RootProduct { scalar: &self.scalar * s, factors: self.factors.clone() }
    }

    /// Number of linear factors (the degree, unless the product is zero).
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn act(&self, w: &WeylElement) -> RootProduct {
        let mut out = RootProduct::constant(self.scalar.clone());
        for f in &self.factors {
            out.push(&f.act(w));
        }
        out
    }

    pub fn substitute(&self, map: impl Fn(Var) -> LinearForm) -> RootProduct {
        let mut out = RootProduct::constant(self.scalar.clone());
        for f in &self.factors {
            out.push(&f.substitute(&map));
        }
        out
    }

    pub fn to_polynomial(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut p = Polynomial::constant(self.scalar.clone());
        for f in &self.factors {
            p = &p * &f.to_polynomial();
        }
        p
    }

    /// Factored form `scalar*(form)^k*…`, with vertex names as in [`Polynomial::to_text`].
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() || self.factors.is_empty() {
            return Polynomial::constant(self.scalar.clone()).to_text(names);
        }
        // Each factor is printed with a positive leading term; the signs go to the scalar.
        let mut scalar = self.scalar.clone();
        let counts: Vec<(Polynomial, usize)> = self
            .counts()
            .into_iter()
            .map(|(f, k)| {
                let p = f.to_polynomial();
                match p.leading_term() {
                    Some((_, c)) if *c < Rat::zero() => {
                        if k % 2 == 1 {
                            scalar = -scalar.clone();
                        }
                        (p.scale(&-Rat::one()), k)
                    }
                    _ => (p, k),
                }
            })
            .collect();
        let alone = counts.len() == 1 && scalar == Rat::one();
        let factors: Vec<String> = counts
            .iter()
            .map(|(p, k)| {
                let k = *k;
                let t = p.to_text(names);
                let t = if p.len() > 1 && !(alone && k == 1) { format!("({})", t) } else { t };
                if k > 1 { format!("{}^{}", t, k) } else { t }
            })
            .collect();
        let body = factors.join("*");
        if scalar == Rat::one() {
            body
        } else if scalar == -Rat::one() {
            format!("-{}", body)
        } else {
            format!("{}*{}", Polynomial::constant(scalar).to_text(names), body)
        }
    }

    /// Multiset of factors as counts.
    pub fn counts(&self) -> BTreeMap<LinearForm, usize> {
        let mut m = BTreeMap::new();
        for f in &self.factors {
            *m.entry(f.clone()).or_insert(0) += 1;
        }
        m
    }
}

/// Consecutive variables `x_start(vertex), …, x_end(vertex)` permuted by a parabolic
/// subgroup, with sign changes if `signed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertex: usize,
    pub start: usize,
    pub end: usize,
    pub signed: bool,
}

impl Block {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }
}

/// The root system attached to one vertex of a frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    /// Type A: roots `x_k − x_l`.
    A,
    /// Roots `x_k ± x_l` and the short roots `x_k`.
    B,
    /// Roots `x_k ± x_l` and the long roots `2x_k`.
    C,
    /// Roots `x_k ± x_l` only.
    D,
}

/// A product of per-vertex Weyl groups together with root data: the ambient group of
/// an ordinary (`W_c`) or isotropic (`θW_c`) polynomial representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub kinds: Vec<FactorKind>,
    pub types: Vec<RootType>,
}

impl Frame {
    /// `W_c` acting on `x_1(i), …, x_{c(i)}(i)`.
    pub fn ordinary(c: &DimVector) -> Frame {
        Frame { kinds: kinds(c), types: vec![RootType::A; c.len()] }
    }

    /// `θW_c` acting on `x_1(i), …, x_{c(i)}(i)` at `+` vertices and on
    /// `x_1(i), …, x_{⌊c(i)/2⌋}(i)` at θ-fixed vertices.
    pub fn theta(q: &Quiver, c: &DimVector) -> Result<Frame> {
        let inv = q.inv()?;
        let kinds = theta_kinds(q, c)?;
        let types = (0..q.n_vertices())
            .map(|i| match inv.vertex_side[i] {
                Side::Fixed if inv.sigma[i] == -1 => RootType::C,
                Side::Fixed if c.get(i) % 2 == 1 => RootType::B,
                Side::Fixed => RootType::D,
                _ => RootType::A,
            })
            .collect();
        Ok(Frame { kinds, types })
    }

    pub fn whole(&self) -> Parabolic {
        Parabolic::whole(&self.kinds)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(&self.kinds)
    }

    /// All variables, in canonical order.
    pub fn vars(&self) -> Vec<Var> {
        let mut out = Vec::new();
        for (i, k) in self.kinds.iter().enumerate() {
            for j in 1..=k.rank() {
                out.push(Var::new(i, j));
            }
        }
        out
    }

    pub fn contains_var(&self, v: Var) -> bool {
        let i = v.vertex as usize;
        i < self.kinds.len() && v.index >= 1 && (v.index as usize) <= self.kinds[i].rank()
    }

    /// The orbit blocks of a parabolic subgroup, covering every variable: a run of type-A
    /// generators `j..m` is a block on positions `j..m+1`; at hyperoctahedral factors a run
    /// ending at the rank is a signed tail. Positions outside every run are singletons.
    pub fn blocks(&self, p: &Parabolic) -> Vec<Block> {
        let mut out = Vec::new();
        for (i, kind) in self.kinds.iter().enumerate() {
            let mut gens = p.gens[i].clone();
            gens.sort_unstable();
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for &j in &gens {
                match runs.last_mut() {
                    Some(r) if r.1 + 1 == j => r.1 = j,
                    _ => runs.push((j, j)),
                }
            }
            let n = kind.rank();
            let mut next = 1;
            for (a, b) in runs {
                for k in next..a {
                    out.push(Block { vertex: i, start: k, end: k, signed: false });
                }
                let signed = matches!(kind, FactorKind::Hyp(m) if b == *m);
                let end = if signed { b } else { b + 1 };
                out.push(Block { vertex: i, start: a, end, signed });
                next = end + 1;
            }
            for k in next..=n {
                out.push(Block { vertex: i, start: k, end: k, signed: false });
            }
        }
        out
    }

    /// The positive roots of a parabolic subgroup.
    pub fn positive_roots(&self, p: &Parabolic) -> Vec<LinearForm> {
        let mut out = Vec::new();
        for bl in self.blocks(p) {
            let x = |k: usize| Var::new(bl.vertex, k);
            for k in bl.start..=bl.end {
                for l in k + 1..=bl.end {
                    out.push(LinearForm::diff(x(k), x(l)));
                    if bl.signed {
                        out.push(LinearForm::new([(x(k), 1), (x(l), 1)]));
                    }
                }
                if bl.signed {
                    match self.types[bl.vertex] {
                        RootType::B => out.push(LinearForm::var(x(k))),
                        RootType::C => out.push(LinearForm::var(x(k)).scale(2)),
                        _ => {}
                    }
                }
            }
        }
        out
    }

    /// `▲ = ∏` of the positive roots of `p`.
    pub fn triangle(&self, p: &Parabolic) -> RootProduct {
        RootProduct::from_forms(self.positive_roots(p))
    }

    /// The simple root of `s_j` at vertex `i`, if it has one.
    pub fn simple_root(&self, i: usize, j: usize) -> Option<LinearForm> {
        let x = |k: usize| Var::new(i, k);
        match self.kinds[i] {
            FactorKind::Sym(_) => Some(LinearForm::diff(x(j), x(j + 1))),
            FactorKind::Hyp(n) if j < n => Some(LinearForm::diff(x(j), x(j + 1))),
            FactorKind::Hyp(_) => match self.types[i] {
                RootType::B => Some(LinearForm::var(x(j))),
                RootType::C => Some(LinearForm::var(x(j)).scale(2)),
                _ => None,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> Var {
        Var::new(0, k)
    }

    #[test]
    fn normalization_tracks_scalar() {
        let f = LinearForm::new([(x(2), 2), (x(1), -4)]);
        let (s, n) = f.normalize();
        assert_eq!(s, -2);
        assert_eq!(n, LinearForm::new([(x(1), 2), (x(2), -1)]));
        let p = RootProduct::from_forms([f.clone(), LinearForm::var(x(1))]);
        assert_eq!(p.to_polynomial(), &f.to_polynomial() * &Polynomial::var(x(1)));
    }

    #[test]
    fn factored_text() {
        let names = vec!["1".to_string()];
        let d = LinearForm::diff(x(2), x(1));
        assert_eq!(RootProduct::from_forms([d.clone()]).to_text(&names), "x[1,2] - x[1,1]");
        let p = RootProduct::from_forms([d.clone(), d, LinearForm::var(x(1)).scale(-2)]);
        assert_eq!(p.to_text(&names), "-2*x[1,1]*(x[1,2] - x[1,1])^2");
        assert_eq!(RootProduct::constant(rat(3)).to_text(&names), "3");
    }

    #[test]
    fn roots_of_small_frames() {
        let a = Frame::ordinary(&DimVector(vec![2]));
        assert_eq!(a.triangle(&a.whole()).to_polynomial(), LinearForm::diff(x(1), x(2)).to_polynomial());
        let b = Frame { kinds: vec![FactorKind::Hyp(1)], types: vec![RootType::B] };
        assert_eq!(b.triangle(&b.whole()).to_polynomial(), Polynomial::var(x(1)));
        let c = Frame { kinds: vec![FactorKind::Hyp(1)], types: vec![RootType::C] };
        assert_eq!(c.triangle(&c.whole()).to_polynomial(), Polynomial::var(x(1)).scale(&rat(2)));
        let d = Frame { kinds: vec![FactorKind::Hyp(2)], types: vec![RootType::D] };
        assert_eq!(d.positive_roots(&d.whole()).len(), 2);
        let b3 = Frame { kinds: vec![FactorKind::Hyp(3)], types: vec![RootType::B] };
        assert_eq!(b3.positive_roots(&b3.whole()).len(), 9);
    }
}
