use super::monomial::{Monomial, Var};
use crate::error::{bail, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact sparse polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Polynomial {
        Polynomial::constant(rat(n))
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::term(Rat::one(), Monomial::var(v))
    }

    pub fn term(c: Rat, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Polynomial::term(Rat::one(), m)
    }

    /// Linear form `Σ c_v v`.
    pub fn linear(coeffs: &[(Var, i64)]) -> Polynomial {
        let mut p = Polynomial::zero();
        for &(v, c) in coeffs {
            p.add_term(Monomial::var(v), rat(c));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Polynomial) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, s: &Rat) {
        if s.is_zero() {
            return;
        }
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Rat) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, s: &Rat) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c * s)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        let mut acc = Polynomial::one();
        for f in factors {
            acc = &acc * f;
        }
        acc
    }

    /// Exact quotient `self / g`; fails unless `g` divides `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        let (lm, lc) = match g.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => bail!(Division, "division by the zero polynomial"),
        };
        if g.terms.len() == 1 {
            let mut q = Polynomial::zero();
            for (m, c) in self.terms.iter() {
                match m.div(&lm) {
                    Some(n) => q.terms.insert(n, c / &lc),
                    None => bail!(Division, "{} is not divisible by {}", self, g),
                };
            }
            return Ok(q);
        }
        let mut r = self.clone();
        let mut q = Polynomial::zero();
        while let Some((m, c)) = r.leading_term() {
            let t = match m.div(&lm) {
                Some(t) => t,
                None => bail!(Division, "{} is not divisible by {}", self, g),
            };
            let s = c / &lc;
            r.add_scaled(&g.mul_monomial(&t, &Rat::one()), &-s.clone());
            q.add_term(t, s);
        }
        Ok(q)
    }

    /// Signed variable substitution `v ↦ ±map(v)` (the flag is true for `-`).
    pub fn substitute(&self, map: impl Fn(Var) -> (Var, bool)) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.iter() {
            let (n, neg) = m.substitute(&map);
            out.add_term(n, if neg { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Renames variables; `map` must be injective on the variables present.
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> Polynomial {
        self.substitute(|v| (map(v), false))
    }

    /// Evaluates every variable in `vars` at zero.
    pub fn set_zero(&self, vars: &[Var]) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.pairs().iter().all(|p| !vars.contains(&p.0)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Multiplies by the smallest positive rational making all coefficients coprime integers
    /// with positive leading coefficient; returns the factor used.
    pub fn primitive_scale(&self) -> Rat {
        use num_integer::Integer;
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        if num.is_zero() {
            return Rat::one();
        }
        let mut s = Rat::new(den, num);
        if self.leading_term().map_or(false, |(_, c)| c.is_negative()) {
            s = -s;
        }
        s
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (m, c) in self.terms.iter() {
            for (n, d) in rhs.terms.iter() {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        (&self).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(Var::new(0, i))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) - &x(2)) * &(&x(1) + &x(2));
        assert_eq!(p, &x(1).pow(2) - &x(2).pow(2));
        assert_eq!(p.exact_div(&(&x(1) - &x(2))).unwrap(), &x(1) + &x(2));
    }

    #[test]
    fn non_divisible_is_an_error() {
        assert!(x(1).exact_div(&x(2)).is_err());
        assert!((&x(1).pow(2) + &x(2)).exact_div(&(&x(1) - &x(2))).is_err());
        assert!(x(1).exact_div(&Polynomial::zero()).is_err());
    }

    #[test]
    fn signed_substitution() {
        let p = &x(1).pow(3) * &x(2);
        let q = p.substitute(|v| if v.index == 1 { (v, true) } else { (v, false) });
        assert_eq!(q, -p);
    }
}
